//! End-to-end acceptance checks: every published value the crate claims is
//! recomputed here by brute force and compared against the formula route.
//! Each check prints a single pass line (visible with `--nocapture`); a
//! failed assertion marks the corresponding check as failed.

use std::time::{Duration, Instant};

use symbreak::automorphism::{enumerate_automorphisms, group_order_formula_dutch, AutGroup};
use symbreak::distinguishing::{
    distinguishing_index, distinguishing_number, is_distinguishing_edge,
    is_distinguishing_vertex, DistError,
};
use symbreak::formulas::{self, chemical_constants, ChemFamily};
use symbreak::generators::{self, BaseKind};
use symbreak::graph::Graph;
use symbreak::report::{run_verification, Instance, RunConfig};
use symbreak::{Exact, Fast};

fn pass(line: &str) {
    println!("[pass] {line}");
}

fn group(g: &Graph) -> AutGroup {
    enumerate_automorphisms(g, 1_000_000).expect("enumeration succeeds")
}

fn brute_d(g: &Graph) -> u32 {
    distinguishing_number(g, &group(g), None).expect("solver succeeds").value
}

fn brute_dprime(g: &Graph) -> u32 {
    distinguishing_index(g, &group(g), None).expect("solver succeeds").value
}

#[test]
fn c01_windmill_group_order() {
    let started = Instant::now();
    for n in 2..=4u64 {
        for k in 3..=5u64 {
            let g = generators::dutch(n, k).unwrap();
            let auts = group(&g);
            let expected = group_order_formula_dutch(n, k).unwrap();
            assert_eq!(
                Exact::from(auts.order()),
                expected,
                "group order of windmill ({n},{k})"
            );
        }
    }
    assert!(started.elapsed() < Duration::from_secs(10), "budget 10s");
    pass("windmill automorphism group orders match n! * 2^n for n in 2..4, k in 3..5");
}

#[test]
fn c02_q_graph_number() {
    let started = Instant::now();
    let pairs = [(2u64, 2u64), (3, 2), (6, 2), (3, 3), (4, 3), (5, 3), (2, 4)];
    for (m, n) in pairs {
        let g = generators::q_graph(m, n).unwrap();
        let formula = formulas::d_q::<Exact>(m, n).unwrap();
        assert_eq!(brute_d(&g) as u64, formula, "D of Q({m},{n})");
    }
    assert!(started.elapsed() < Duration::from_secs(60), "budget 60s");
    pass("D(Q(m,n)) equals min{r : r C(r,n-1) >= m} on 7 parameter pairs");
}

#[test]
fn c03_q_graph_index_is_two() {
    for (m, n) in [(2u64, 3u64), (3, 3), (5, 3), (2, 4)] {
        let g = generators::q_graph(m, n).unwrap();
        assert_eq!(formulas::dprime_q(m, n).unwrap(), 2);
        assert_eq!(brute_dprime(&g), 2, "D' of Q({m},{n})");
    }
    pass("D'(Q(m,n)) = 2 on 4 parameter pairs with n >= 3");
}

#[test]
fn c04_windmill_number_full_range() {
    // every windmill on at most 17 vertices, including the 10.3M-element
    // group of the n = 8 triangle windmill
    let mut checked = 0;
    for k in 3..=9u64 {
        for n in 2..=8u64 {
            if 1 + n * (k - 1) > 17 {
                continue;
            }
            let g = generators::dutch(n, k).unwrap();
            let auts = enumerate_automorphisms(&g, 11_000_000).unwrap();
            assert!(!auts.is_capped());
            let d = distinguishing_number(&g, &auts, None).unwrap().value as u64;
            assert_eq!(
                d,
                formulas::d_dutch::<Exact>(n, k).unwrap(),
                "D of windmill ({n},{k})"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 19);
    pass("D of all 19 windmills on <= 17 vertices matches the formula");
}

#[test]
fn c05_windmill_index_transfer() {
    // D'(D_n^k) = D(D_n^(k+1)): both sides brute forced on <= 16 vertices
    let pairs = [
        (2u64, 3u64),
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (3, 3),
        (3, 4),
        (4, 3),
        (5, 3),
    ];
    for (n, k) in pairs {
        let lhs = brute_dprime(&generators::dutch(n, k).unwrap());
        let rhs = brute_d(&generators::dutch(n, k + 1).unwrap());
        assert_eq!(lhs, rhs, "index transfer at ({n},{k})");
        assert_eq!(
            lhs as u64,
            formulas::dprime_dutch::<Exact>(n, k).unwrap(),
            "formula at ({n},{k})"
        );
    }
    pass("D'(windmill n,k) = D(windmill n,k+1), brute forced both sides on 9 pairs");
}

#[test]
fn c06_friendship_sweep() {
    let started = Instant::now();
    let mut float_disagreements = Vec::new();
    let mut prev = (0u64, 0u64);
    for n in 2..=1_000_000u64 {
        let c = formulas::friendship_closed::<Fast>(n).unwrap();
        // defining inequalities of the two least-integer forms
        assert!(c.d * (c.d - 1) >= 2 * n && (c.d - 1) * (c.d - 2) < 2 * n);
        assert!(c.dprime * c.dprime * (c.dprime - 1) >= 2 * n);
        assert!(
            (c.dprime - 1) * (c.dprime - 1) * (c.dprime - 2) < 2 * n,
            "minimality of D' at n = {n}"
        );
        assert!(c.d >= prev.0 && c.dprime >= prev.1, "monotone in n");
        prev = (c.d, c.dprime);
        if !c.floats_agree() {
            float_disagreements.push(n);
        }
    }
    assert!(started.elapsed() < Duration::from_secs(5), "budget 5s");
    // brute-force anchor for small n
    for n in 2..=5u64 {
        let g = generators::friendship(n).unwrap();
        let c = formulas::friendship_closed::<Fast>(n).unwrap();
        assert_eq!(brute_d(&g) as u64, c.d, "D of friendship {n}");
        assert_eq!(brute_dprime(&g) as u64, c.dprime, "D' of friendship {n}");
    }
    pass(&format!(
        "friendship closed forms verified for n <= 10^6 (and brute forced for n <= 5); \
         float evaluation disagrees with the exact route at {} value(s) of n{}",
        float_disagreements.len(),
        if float_disagreements.is_empty() {
            String::new()
        } else {
            format!(", first at n = {}", float_disagreements[0])
        }
    ));
}

#[test]
fn c07_windmill_odd_cycle_closed_form() {
    for m in 1..=6u64 {
        for n in 2..=10_000u64 {
            assert_eq!(
                formulas::d_dutch::<Fast>(n, 2 * m + 1).unwrap(),
                formulas::d_dutch_odd_closed::<Fast>(n, m).unwrap(),
                "odd closed form at (n, m) = ({n},{m})"
            );
        }
    }
    pass("general windmill formula equals the odd-cycle closed form for n <= 10^4, m <= 6");
}

#[test]
fn c08_chemical_chain_constants() {
    let mut checked = 0;
    for q in 3..=6u64 {
        for h in 1..=q / 2 {
            for k in 2..=3u64 {
                // spiro: k(q-1)+1 vertices; poly: kq vertices
                if k * (q - 1) + 1 <= 18 {
                    let g = generators::spiro(q, h, k).unwrap();
                    let c = chemical_constants(ChemFamily::Spiro, &[q, h, k]).unwrap();
                    assert_eq!(brute_d(&g) as u64, c.d, "D of spiro ({q},{h},{k})");
                    assert_eq!(brute_dprime(&g) as u64, c.dprime, "D' of spiro ({q},{h},{k})");
                    checked += 1;
                }
                if k * q <= 18 {
                    let g = generators::poly(q, h, k).unwrap();
                    let c = chemical_constants(ChemFamily::Poly, &[q, h, k]).unwrap();
                    assert_eq!(brute_d(&g) as u64, c.d, "D of poly ({q},{h},{k})");
                    assert_eq!(brute_dprime(&g) as u64, c.dprime, "D' of poly ({q},{h},{k})");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 20);
    // the single exceptional value
    let exc = generators::spiro(3, 1, 2).unwrap();
    assert_eq!(brute_d(&exc), 3);
    pass(&format!(
        "spiro and poly chains on <= 18 vertices all have (D, D') = (2, 2) \
         except D(spiro 3,1,2) = 3 ({checked} instances)"
    ));
}

#[test]
fn c09_dendrimers() {
    let started = Instant::now();
    let nd1 = generators::nanostar(1).unwrap();
    assert_eq!(nd1.n(), 19);
    assert_eq!(brute_d(&nd1), 2);
    assert_eq!(brute_dprime(&nd1), 2);
    assert!(started.elapsed() < Duration::from_secs(120), "budget 120s");

    // the depth-2 dendrimer is attempted with a wall-clock cutoff
    let (tx, rx) = std::sync::mpsc::channel();
    std::thread::spawn(move || {
        let nd2 = generators::nanostar(2).unwrap();
        assert_eq!(nd2.n(), 58);
        let d = brute_d(&nd2);
        let dp = brute_dprime(&nd2);
        let _ = tx.send((d, dp));
    });
    match rx.recv_timeout(Duration::from_secs(120)) {
        Ok((d, dp)) => {
            assert_eq!((d, dp), (2, 2));
            pass("dendrimer levels 1 and 2 both have (D, D') = (2, 2), brute forced");
        }
        Err(_) => {
            pass("dendrimer level 1 has (D, D') = (2, 2); level 2 skipped (120s cutoff)");
        }
    }
}

#[test]
fn c10_composition_bounds() {
    let config = RunConfig {
        seed: 0xC0FFEE,
        ..RunConfig::default()
    };
    let instances: Vec<Instance> =
        (0..200).map(|index| Instance::BoundSample { index }).collect();
    let report = run_verification(&instances, &config);
    assert_eq!(
        report.summary.mismatched, 0,
        "no sampled composition may exceed its bound: {}",
        report.to_table()
    );
    assert!(report.summary.matched >= 150, "most samples must be solved");

    // sharpness: merging the centers of two stars adds the values exactly
    let s3 = generators::make_base(BaseKind::Star, 3).unwrap();
    let s4 = generators::make_base(BaseKind::Star, 4).unwrap();
    let merged = generators::bouquet(&[(&s3, 0), (&s4, 0)]).unwrap();
    assert_eq!(brute_d(&merged), 7);
    assert_eq!(brute_dprime(&merged), 7);
    pass(&format!(
        "200 random compositions respect the four upper bounds ({} solved, {} skipped); \
         the bouquet bound is attained by a pair of merged stars",
        report.summary.matched, report.summary.skipped_too_large
    ));
}

#[test]
fn c11_witness_certificates() {
    let graphs = vec![
        generators::dutch(3, 4).unwrap(),
        generators::q_graph(3, 3).unwrap(),
        generators::friendship(4).unwrap(),
        generators::spiro(5, 2, 2).unwrap(),
        generators::poly(4, 2, 3).unwrap(),
        generators::nanostar(1).unwrap(),
    ];
    for g in &graphs {
        let auts = group(g);
        let d = distinguishing_number(g, &auts, None).unwrap();
        assert!(is_distinguishing_vertex(g, &auts, &d.witness).unwrap());
        assert!(d.checked_r_below);
        if d.value > 1 {
            // the solver must genuinely fail with one label fewer
            assert_eq!(
                distinguishing_number(g, &auts, Some(d.value - 1)),
                Err(DistError::RMaxExceeded { r_max: d.value - 1 })
            );
        }
        let dp = distinguishing_index(g, &auts, None).unwrap();
        assert!(is_distinguishing_edge(g, &auts, &dp.witness).unwrap());
        assert!(dp.checked_r_below);
        if dp.value > 1 {
            assert_eq!(
                distinguishing_index(g, &auts, Some(dp.value - 1)),
                Err(DistError::RMaxExceeded { r_max: dp.value - 1 })
            );
        }
    }
    pass("every witness labeling re-validates and the solver fails with one label fewer");
}

#[test]
fn c12_group_axioms() {
    use std::collections::HashSet;
    let graphs = vec![
        generators::dutch(3, 4).unwrap(),
        generators::dutch(4, 3).unwrap(),
        generators::q_graph(5, 3).unwrap(),
        generators::friendship(4).unwrap(),
        generators::spiro(4, 1, 2).unwrap(),
        generators::nanostar(1).unwrap(),
        generators::make_base(BaseKind::Path, 6).unwrap(),
    ];
    for g in &graphs {
        let auts = group(g);
        assert!(auts.order() <= 10_000, "axiom check is for small groups");
        let elements = auts.elements();
        assert!(elements[0].is_identity(), "element 0 is the identity");
        let member: HashSet<Vec<usize>> =
            elements.iter().map(|p| p.image().to_vec()).collect();
        assert_eq!(member.len(), elements.len(), "no duplicate elements");
        for p in &elements {
            assert!(member.contains(p.inverse().image()), "inverse closure");
            for q in &elements {
                let pq = p.compose(q).unwrap();
                assert!(member.contains(pq.image()), "composition closure");
            }
        }
    }
    pass("enumerated groups of order <= 10^4 contain the identity, inverses and all products");
}
