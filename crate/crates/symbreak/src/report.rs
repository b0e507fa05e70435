//! Theorem-verification sweeps: build instances, run formulas and the
//! brute-force solvers side by side, and assemble machine-readable reports.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::automorphism::{enumerate_automorphisms, group_order_formula_dutch, AutGroup};
use crate::distinguishing::{distinguishing_index, distinguishing_number, DistError};

fn solver_outcome<L>(
    res: Result<crate::DistResult<L>, DistError>,
) -> Result<Result<u32, String>, String> {
    match res {
        Ok(r) => Ok(Ok(r.value)),
        Err(DistError::RMaxExceeded { r_max }) => {
            Ok(Err(format!("no labeling within max_labels {r_max}")))
        }
        Err(e) => Err(format!("solver: {e}")),
    }
}
use crate::formulas::{
    self, chemical_constants, composition_bound, BoundInput, ChemFamily, PartValues,
};
use crate::generators::{self, BaseKind};
use crate::graph::Graph;
use crate::Exact;

/// Knobs for oracle sweeps. Large instances are skipped, never silently
/// dropped: the edge solver additionally requires either few edges or a
/// small group, since edge search cost is driven by both.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub aut_cap: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_labels: Option<u32>,
    pub jobs: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            aut_cap: 1_000_000,
            max_vertices: 20,
            max_edges: 16,
            max_labels: None,
            jobs: 1,
            seed: 0,
        }
    }
}

/// Group-order threshold above which the edge-count skip applies.
const HIGH_SYMMETRY: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "reason")]
pub enum RecordStatus {
    Matched,
    Mismatched(String),
    Skipped(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceRecord {
    pub family: String,
    pub params: Vec<u64>,
    pub n_vertices: usize,
    pub formula_d: Option<u64>,
    pub formula_dprime: Option<u64>,
    pub oracle_d: Option<u64>,
    pub oracle_dprime: Option<u64>,
    pub aut_order: Option<String>,
    #[serde(flatten)]
    pub status: RecordStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped_too_large: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    fn from_records(mut records: Vec<InstanceRecord>) -> Self {
        records.sort_by(|a, b| (&a.family, &a.params).cmp(&(&b.family, &b.params)));
        let matched = records
            .iter()
            .filter(|r| r.status == RecordStatus::Matched)
            .count();
        let mismatched = records
            .iter()
            .filter(|r| matches!(r.status, RecordStatus::Mismatched(_)))
            .count();
        let skipped = records.len() - matched - mismatched;
        let summary = Summary {
            total: records.len(),
            matched,
            mismatched,
            skipped_too_large: skipped,
        };
        VerificationReport { records, summary }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Fixed column order: family, params, n_vertices, formula_d,
    /// formula_dprime, oracle_d, oracle_dprime, aut_order, status, reason,
    /// elapsed_ms.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "family,params,n_vertices,formula_d,formula_dprime,oracle_d,oracle_dprime,aut_order,status,reason,elapsed_ms\n",
        );
        let opt = |v: &Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.records {
            let (status, reason) = match &r.status {
                RecordStatus::Matched => ("matched", String::new()),
                RecordStatus::Mismatched(why) => ("mismatched", why.clone()),
                RecordStatus::Skipped(why) => ("skipped", why.clone()),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{:?},{}\n",
                r.family,
                r.params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                r.n_vertices,
                opt(&r.formula_d),
                opt(&r.formula_dprime),
                opt(&r.oracle_d),
                opt(&r.oracle_dprime),
                r.aut_order.clone().unwrap_or_default(),
                status,
                reason,
                r.elapsed_ms
            ));
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<12} {:<12} {:>4} {:>5} {:>6} {:>5} {:>6} {:<10} status\n",
            "family", "params", "n", "f_D", "f_D'", "o_D", "o_D'", "aut"
        );
        let opt = |v: &Option<u64>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        for r in &self.records {
            let status = match &r.status {
                RecordStatus::Matched => "matched".to_string(),
                RecordStatus::Mismatched(why) => format!("MISMATCH: {why}"),
                RecordStatus::Skipped(why) => format!("skipped: {why}"),
            };
            out.push_str(&format!(
                "{:<12} {:<12} {:>4} {:>5} {:>6} {:>5} {:>6} {:<10} {}\n",
                r.family,
                r.params
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                r.n_vertices,
                opt(&r.formula_d),
                opt(&r.formula_dprime),
                opt(&r.oracle_d),
                opt(&r.oracle_dprime),
                r.aut_order.clone().unwrap_or_else(|| "-".into()),
                status
            ));
        }
        out.push_str(&format!(
            "total {} matched {} mismatched {} skipped {}\n",
            self.summary.total,
            self.summary.matched,
            self.summary.mismatched,
            self.summary.skipped_too_large
        ));
        out
    }
}

/// One unit of verification work.
#[derive(Debug, Clone)]
pub enum Instance {
    Dutch { n: u64, k: u64 },
    Q { m: u64, n: u64 },
    Friendship { n: u64 },
    Spiro { q: u64, h: u64, k: u64 },
    Poly { q: u64, h: u64, k: u64 },
    Nanostar { k: u64 },
    BoundSample { index: u64 },
}

struct OracleOutcome {
    auts: AutGroup,
    d: Option<u64>,
    dprime: Option<u64>,
    skipped: Option<String>,
}

fn run_oracle(g: &Graph, config: &RunConfig, want_edge: bool) -> Result<OracleOutcome, String> {
    let auts =
        enumerate_automorphisms(g, config.aut_cap).map_err(|e| format!("enumeration: {e}"))?;
    if auts.is_capped() {
        return Ok(OracleOutcome {
            auts,
            d: None,
            dprime: None,
            skipped: Some(format!("automorphism cap {} exceeded", config.aut_cap)),
        });
    }
    if g.n() > config.max_vertices {
        return Ok(OracleOutcome {
            auts,
            d: None,
            dprime: None,
            skipped: Some(format!(
                "order {} exceeds max_vertices {}",
                g.n(),
                config.max_vertices
            )),
        });
    }
    let d = match solver_outcome(distinguishing_number(g, &auts, config.max_labels))? {
        Ok(v) => v as u64,
        Err(why) => {
            return Ok(OracleOutcome {
                auts,
                d: None,
                dprime: None,
                skipped: Some(why),
            })
        }
    };
    let dprime = if !want_edge || g.edge_count() == 0 {
        None
    } else if g.edge_count() > config.max_edges && auts.order() > HIGH_SYMMETRY {
        let why = format!(
            "edge solve skipped: {} edges with group order {}",
            g.edge_count(),
            auts.order()
        );
        return Ok(OracleOutcome {
            auts,
            d: Some(d),
            dprime: None,
            skipped: Some(why),
        });
    } else {
        match solver_outcome(distinguishing_index(g, &auts, config.max_labels))? {
            Ok(v) => Some(v as u64),
            Err(why) => {
                return Ok(OracleOutcome {
                    auts,
                    d: Some(d),
                    dprime: None,
                    skipped: Some(why),
                })
            }
        }
    };
    Ok(OracleOutcome {
        auts,
        d: Some(d),
        dprime,
        skipped: None,
    })
}

fn compare(
    family: &str,
    params: Vec<u64>,
    g: &Graph,
    formula_d: Option<u64>,
    formula_dprime: Option<u64>,
    expected_aut: Option<BigUint>,
    notes: Option<String>,
    config: &RunConfig,
    started: Instant,
) -> InstanceRecord {
    let outcome = match run_oracle(g, config, formula_dprime.is_some()) {
        Ok(o) => o,
        Err(why) => {
            return InstanceRecord {
                family: family.into(),
                params,
                n_vertices: g.n(),
                formula_d,
                formula_dprime,
                oracle_d: None,
                oracle_dprime: None,
                aut_order: None,
                status: RecordStatus::Mismatched(why),
                notes,
                elapsed_ms: started.elapsed().as_millis(),
            }
        }
    };
    let aut_order = BigUint::from(outcome.auts.order());
    let mut problems = Vec::new();
    if !outcome.auts.is_capped() {
        if let Some(expected) = &expected_aut {
            if *expected != aut_order {
                problems.push(format!(
                    "aut order {aut_order} differs from formula {expected}"
                ));
            }
        }
    }
    if let (Some(f), Some(o)) = (formula_d, outcome.d) {
        if f != o {
            problems.push(format!("D: formula {f} vs oracle {o}"));
        }
    }
    if let (Some(f), Some(o)) = (formula_dprime, outcome.dprime) {
        if f != o {
            problems.push(format!("D': formula {f} vs oracle {o}"));
        }
    }
    let status = if !problems.is_empty() {
        RecordStatus::Mismatched(problems.join("; "))
    } else if let Some(why) = outcome.skipped {
        RecordStatus::Skipped(why)
    } else {
        RecordStatus::Matched
    };
    InstanceRecord {
        family: family.into(),
        params,
        n_vertices: g.n(),
        formula_d,
        formula_dprime,
        oracle_d: outcome.d,
        oracle_dprime: outcome.dprime,
        aut_order: Some(aut_order.to_string()),
        status,
        notes,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

fn error_record(family: &str, params: Vec<u64>, why: String, started: Instant) -> InstanceRecord {
    InstanceRecord {
        family: family.into(),
        params,
        n_vertices: 0,
        formula_d: None,
        formula_dprime: None,
        oracle_d: None,
        oracle_dprime: None,
        aut_order: None,
        status: RecordStatus::Mismatched(why),
        notes: None,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

pub fn verify_instance(instance: &Instance, config: &RunConfig) -> InstanceRecord {
    let started = Instant::now();
    match instance {
        Instance::Dutch { n, k } => {
            let params = vec![*n, *k];
            let g = match generators::dutch(*n, *k) {
                Ok(g) => g,
                Err(e) => return error_record("dutch", params, e.to_string(), started),
            };
            let fd = formulas::d_dutch::<Exact>(*n, *k).ok();
            let fdp = formulas::dprime_dutch::<Exact>(*n, *k).ok();
            let aut = group_order_formula_dutch(*n, *k).ok();
            compare("dutch", params, &g, fd, fdp, aut, None, config, started)
        }
        Instance::Q { m, n } => {
            let params = vec![*m, *n];
            let g = match generators::q_graph(*m, *n) {
                Ok(g) => g,
                Err(e) => return error_record("q", params, e.to_string(), started),
            };
            let fd = formulas::d_q::<Exact>(*m, *n).ok();
            let fdp = formulas::dprime_q(*m, *n).ok();
            compare("q", params, &g, fd, fdp, None, None, config, started)
        }
        Instance::Friendship { n } => {
            let params = vec![*n];
            let g = match generators::friendship(*n) {
                Ok(g) => g,
                Err(e) => return error_record("friendship", params, e.to_string(), started),
            };
            let closed = match formulas::friendship_closed::<Exact>(*n) {
                Ok(c) => c,
                Err(e) => return error_record("friendship", params, e.to_string(), started),
            };
            let notes = (!closed.floats_agree()).then(|| {
                format!(
                    "float radical forms disagree with exact route: \
                     D {} vs {}, D' {} vs {} (exact route arbitrates)",
                    closed.d_float, closed.d, closed.dprime_float, closed.dprime
                )
            });
            let aut = group_order_formula_dutch(*n, 3).ok();
            compare(
                "friendship",
                params,
                &g,
                Some(closed.d),
                Some(closed.dprime),
                aut,
                notes,
                config,
                started,
            )
        }
        Instance::Spiro { q, h, k } => {
            let params = vec![*q, *h, *k];
            let g = match generators::spiro(*q, *h, *k) {
                Ok(g) => g,
                Err(e) => return error_record("spiro", params, e.to_string(), started),
            };
            match chemical_constants(ChemFamily::Spiro, &params) {
                Ok(c) => compare(
                    "spiro",
                    params,
                    &g,
                    Some(c.d),
                    Some(c.dprime),
                    None,
                    None,
                    config,
                    started,
                ),
                Err(e) => error_record("spiro", params, e.to_string(), started),
            }
        }
        Instance::Poly { q, h, k } => {
            let params = vec![*q, *h, *k];
            let g = match generators::poly(*q, *h, *k) {
                Ok(g) => g,
                Err(e) => return error_record("poly", params, e.to_string(), started),
            };
            match chemical_constants(ChemFamily::Poly, &params) {
                Ok(c) => compare(
                    "poly",
                    params,
                    &g,
                    Some(c.d),
                    Some(c.dprime),
                    None,
                    None,
                    config,
                    started,
                ),
                Err(e) => error_record("poly", params, e.to_string(), started),
            }
        }
        Instance::Nanostar { k } => {
            let params = vec![*k];
            let g = match generators::nanostar(*k) {
                Ok(g) => g,
                Err(e) => return error_record("nanostar", params, e.to_string(), started),
            };
            match chemical_constants(ChemFamily::Nanostar, &params) {
                Ok(c) => compare(
                    "nanostar",
                    params,
                    &g,
                    Some(c.d),
                    Some(c.dprime),
                    None,
                    None,
                    config,
                    started,
                ),
                Err(e) => error_record("nanostar", params, e.to_string(), started),
            }
        }
        Instance::BoundSample { index } => verify_bound_sample(*index, config, started),
    }
}

/// A random small composition for bound testing, drawn deterministically
/// from (seed, index).
pub struct SampledComposition {
    pub graph: Graph,
    pub bound: formulas::FormulaResult,
    pub description: String,
}

pub fn sample_composition(seed: u64, index: u64) -> Result<SampledComposition, String> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    // Parts keep >= 3 vertices so every part has honest D >= 2 and D' >= 2;
    // the stated bounds presuppose that (a linked pair of K2's already
    // violates the edge bound).
    for _attempt in 0..64 {
        let comp = rng.gen_range(0..4u8);
        let part_count = match comp {
            1 => 3, // circuit needs at least 3 parts
            _ => rng.gen_range(2..=3usize),
        };
        let mut parts = Vec::new();
        let mut total = 0usize;
        for _ in 0..part_count {
            let (kind, param) = match rng.gen_range(0..4u8) {
                0 => (BaseKind::Complete, rng.gen_range(3..=5u64)),
                1 => (BaseKind::Cycle, rng.gen_range(3..=6u64)),
                2 => (BaseKind::Path, rng.gen_range(3..=6u64)),
                _ => (BaseKind::Star, rng.gen_range(3..=5u64)),
            };
            let g = generators::make_base(kind, param).map_err(|e| e.to_string())?;
            total += g.n();
            parts.push((kind, param, g));
        }
        let order = match comp {
            0 => total - (part_count - 1), // bouquet
            1 => total,                    // circuit
            2.. => {
                if comp == 2 {
                    total - (part_count - 1) // chain
                } else {
                    total // link
                }
            }
        };
        if order > 14 {
            continue;
        }
        let mut values = Vec::new();
        let mut solver_ok = true;
        for (_, _, g) in &parts {
            let auts = enumerate_automorphisms(g, 100_000).map_err(|e| e.to_string())?;
            if auts.is_capped() {
                solver_ok = false;
                break;
            }
            let d = distinguishing_number(g, &auts, None).map_err(|e| e.to_string())?;
            let dp = distinguishing_index(g, &auts, None).map_err(|e| e.to_string())?;
            values.push(PartValues {
                d: d.value as u64,
                dprime: dp.value as u64,
            });
        }
        if !solver_ok {
            continue;
        }
        let contacts: Vec<(usize, usize)> = parts
            .iter()
            .map(|(_, _, g)| {
                let x = rng.gen_range(0..g.n());
                let mut y = rng.gen_range(0..g.n());
                while y == x {
                    y = rng.gen_range(0..g.n());
                }
                (x, y)
            })
            .collect();

        let description = parts
            .iter()
            .map(|(kind, p, _)| format!("{kind:?}({p})"))
            .collect::<Vec<_>>()
            .join("+");
        let (graph, bound) = match comp {
            0 => {
                let refs: Vec<(&Graph, usize)> = parts
                    .iter()
                    .zip(&contacts)
                    .map(|((_, _, g), &(x, _))| (g, x))
                    .collect();
                let g = generators::bouquet(&refs).map_err(|e| e.to_string())?;
                let b = composition_bound(&BoundInput::Bouquet { parts: &values })
                    .map_err(|e| e.to_string())?;
                (g, b)
            }
            1 => {
                let refs: Vec<(&Graph, usize)> = parts
                    .iter()
                    .zip(&contacts)
                    .map(|((_, _, g), &(x, _))| (g, x))
                    .collect();
                let g = generators::circuit(&refs).map_err(|e| e.to_string())?;
                let cycle = generators::make_base(BaseKind::Cycle, part_count as u64)
                    .map_err(|e| e.to_string())?;
                let cauts = enumerate_automorphisms(&cycle, 100_000).map_err(|e| e.to_string())?;
                let cd = distinguishing_number(&cycle, &cauts, None).map_err(|e| e.to_string())?;
                let cdp = distinguishing_index(&cycle, &cauts, None).map_err(|e| e.to_string())?;
                let b = composition_bound(&BoundInput::Circuit {
                    parts: &values,
                    cycle: PartValues {
                        d: cd.value as u64,
                        dprime: cdp.value as u64,
                    },
                })
                .map_err(|e| e.to_string())?;
                (g, b)
            }
            2 => {
                let refs: Vec<(&Graph, usize, usize)> = parts
                    .iter()
                    .zip(&contacts)
                    .map(|((_, _, g), &(x, y))| (g, x, y))
                    .collect();
                let g = generators::chain(&refs).map_err(|e| e.to_string())?;
                // degrees, in the composed graph, of the identified contacts
                let contact_degrees: Vec<u64> = (0..part_count - 1)
                    .map(|i| {
                        let v = g
                            .role(&format!("contact:{}:x", i + 1))
                            .expect("chain records contact roles");
                        g.degree(v) as u64
                    })
                    .collect();
                let b = composition_bound(&BoundInput::Chain {
                    parts: &values,
                    contact_degrees: &contact_degrees,
                })
                .map_err(|e| e.to_string())?;
                (g, b)
            }
            _ => {
                let refs: Vec<(&Graph, usize, usize)> = parts
                    .iter()
                    .zip(&contacts)
                    .map(|((_, _, g), &(x, y))| (g, x, y))
                    .collect();
                let g = generators::link(&refs).map_err(|e| e.to_string())?;
                let b = composition_bound(&BoundInput::Link { parts: &values })
                    .map_err(|e| e.to_string())?;
                (g, b)
            }
        };
        let kind_name = ["bouquet", "circuit", "chain", "link"][comp as usize];
        return Ok(SampledComposition {
            graph,
            bound,
            description: format!("{kind_name} of {description}"),
        });
    }
    Err("could not sample a composition within limits".into())
}

fn verify_bound_sample(index: u64, config: &RunConfig, started: Instant) -> InstanceRecord {
    let params = vec![index];
    let sample = match sample_composition(config.seed, index) {
        Ok(s) => s,
        Err(why) => return error_record("bounds", params, why, started),
    };
    let g = &sample.graph;
    let outcome = match run_oracle(g, config, true) {
        Ok(o) => o,
        Err(why) => return error_record("bounds", params, why, started),
    };
    let status = match (&outcome.skipped, outcome.d, outcome.dprime) {
        (Some(why), _, _) => RecordStatus::Skipped(why.clone()),
        (None, Some(d), dprime) => {
            let mut problems = Vec::new();
            if d > sample.bound.d {
                problems.push(format!("D {d} exceeds bound {}", sample.bound.d));
            }
            if let Some(dp) = dprime {
                if dp > sample.bound.dprime {
                    problems.push(format!("D' {dp} exceeds bound {}", sample.bound.dprime));
                }
            }
            if problems.is_empty() {
                RecordStatus::Matched
            } else {
                RecordStatus::Mismatched(problems.join("; "))
            }
        }
        _ => RecordStatus::Skipped("oracle incomplete".into()),
    };
    InstanceRecord {
        family: "bounds".into(),
        params,
        n_vertices: g.n(),
        formula_d: Some(sample.bound.d),
        formula_dprime: Some(sample.bound.dprime),
        oracle_d: outcome.d,
        oracle_dprime: outcome.dprime,
        aut_order: Some(outcome.auts.order().to_string()),
        status,
        notes: Some(sample.description),
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// Runs all instances (optionally across worker threads) and assembles the
/// sorted report; record order is independent of completion order.
pub fn run_verification(instances: &[Instance], config: &RunConfig) -> VerificationReport {
    let jobs = config.jobs.max(1);
    if jobs == 1 || instances.len() <= 1 {
        let records = instances
            .iter()
            .map(|i| verify_instance(i, config))
            .collect();
        return VerificationReport::from_records(records);
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<InstanceRecord>> = Mutex::new(Vec::with_capacity(instances.len()));
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(instances.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= instances.len() {
                    break;
                }
                let record = verify_instance(&instances[i], config);
                results.lock().expect("no poisoned lock").push(record);
            });
        }
    });
    VerificationReport::from_records(results.into_inner().expect("no poisoned lock"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dutch_small_sweep_matches() {
        let config = RunConfig::default();
        let instances: Vec<Instance> = [(2u64, 3u64), (2, 4), (3, 3)]
            .iter()
            .map(|&(n, k)| Instance::Dutch { n, k })
            .collect();
        let report = run_verification(&instances, &config);
        assert_eq!(report.summary.mismatched, 0);
        assert_eq!(report.summary.matched, 3);
    }

    #[test]
    fn spiro_exception_row() {
        let config = RunConfig::default();
        let report = run_verification(
            &[Instance::Spiro { q: 3, h: 1, k: 2 }],
            &config,
        );
        assert_eq!(report.summary.mismatched, 0);
        let r = &report.records[0];
        assert_eq!(r.formula_d, Some(3));
        assert_eq!(r.oracle_d, Some(3));
    }

    #[test]
    fn bound_sample_is_deterministic() {
        let a = sample_composition(7, 3).unwrap();
        let b = sample_composition(7, 3).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.bound, b.bound);
    }

    #[test]
    fn report_sorted_and_counts_consistent() {
        let config = RunConfig::default();
        let instances = vec![
            Instance::Q { m: 2, n: 2 },
            Instance::Dutch { n: 2, k: 3 },
        ];
        let report = run_verification(&instances, &config);
        assert!(report.records[0].family <= report.records[1].family);
        assert_eq!(
            report.summary.total,
            report.summary.matched + report.summary.mismatched + report.summary.skipped_too_large
        );
        let csv = report.to_csv();
        assert!(csv.lines().count() == report.records.len() + 1);
    }

    #[test]
    fn parallel_report_equals_serial() {
        let mut serial_cfg = RunConfig::default();
        serial_cfg.seed = 11;
        let mut par_cfg = serial_cfg.clone();
        par_cfg.jobs = 3;
        let instances: Vec<Instance> =
            (0..6).map(|index| Instance::BoundSample { index }).collect();
        let a = run_verification(&instances, &serial_cfg);
        let b = run_verification(&instances, &par_cfg);
        let strip = |r: &VerificationReport| {
            r.records
                .iter()
                .map(|x| {
                    (
                        x.family.clone(),
                        x.params.clone(),
                        x.formula_d,
                        x.oracle_d,
                        x.status.clone(),
                    )
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
    }
}
