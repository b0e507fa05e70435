//! Exact distinguishing number and index computation.
//!
//! Both solvers run the same depth-first search over labelings: items (all
//! vertices, or all edges) are labeled in a fixed order while maintaining the
//! set of automorphisms still consistent with the partial labeling. A branch
//! succeeds as soon as that set is empty of nontrivial elements, because an
//! automorphism broken by a labeled pair can never become consistent again. A
//! branch is abandoned as soon as some surviving automorphism moves only
//! labeled items, because no extension can break it. New label values are
//! introduced in canonical order (label c+1 may appear only after c), which
//! removes color-permutation symmetry from the tree.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::automorphism::AutGroup;
use crate::graph::{EdgeLabeling, Graph, VertexLabeling};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DistError {
    #[error("automorphism group was capped; exact solving needs the full group")]
    CappedGroup,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph has no edges; the distinguishing index is undefined")]
    NoEdges,
    #[error("no distinguishing labeling with at most {r_max} labels")]
    RMaxExceeded { r_max: u32 },
}

/// An exact distinguishing value with its certificate.
///
/// `checked_r_below` records that the search exhausted `value - 1` labels
/// without finding a witness. `kernel_nontrivial` is set by the edge solver
/// when some nontrivial vertex automorphism acts trivially on edges (only
/// K2-like graphs); such elements cannot be broken by any edge labeling and
/// are excluded by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistResult<L> {
    pub value: u32,
    pub witness: L,
    pub checked_r_below: bool,
    pub kernel_nontrivial: bool,
}

/// Nontrivial permutations acting on `m` items, stored flat with inverses.
struct Action {
    m: usize,
    count: usize,
    perms: Vec<u32>,
    invs: Vec<u32>,
}

impl Action {
    fn from_vertex_group(group: &AutGroup) -> Action {
        let m = group.n();
        let count = group.order().saturating_sub(1);
        let mut perms = Vec::with_capacity(count * m);
        let mut invs = Vec::with_capacity(count * m);
        for i in 1..group.order() {
            perms.extend(group.image(i).iter().map(|&v| v as u32));
            invs.extend(group.inverse_image(i).iter().map(|&v| v as u32));
        }
        Action {
            m,
            count,
            perms,
            invs,
        }
    }

    /// Edge action of the group; returns the action plus the kernel flag.
    fn from_edge_group(g: &Graph, group: &AutGroup) -> (Action, bool) {
        let m = g.edge_count();
        let mut index = HashMap::with_capacity(m);
        for (i, &e) in g.edges().iter().enumerate() {
            index.insert(e, i as u32);
        }
        let mut seen = HashSet::new();
        let mut perms = Vec::new();
        let mut invs = Vec::new();
        let mut kernel_nontrivial = false;
        let mut count = 0usize;
        for i in 1..group.order() {
            let img = group.image(i);
            let edge_img: Vec<u32> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (img[u] as usize, img[v] as usize);
                    index[&(a.min(b), a.max(b))]
                })
                .collect();
            if edge_img.iter().enumerate().all(|(e, &f)| e as u32 == f) {
                kernel_nontrivial = true;
                continue;
            }
            if !seen.insert(edge_img.clone()) {
                continue;
            }
            let mut inv = vec![0u32; m];
            for (e, &f) in edge_img.iter().enumerate() {
                inv[f as usize] = e as u32;
            }
            perms.extend_from_slice(&edge_img);
            invs.extend_from_slice(&inv);
            count += 1;
        }
        (
            Action {
                m,
                count,
                perms,
                invs,
            },
            kernel_nontrivial,
        )
    }

    fn perm(&self, i: usize) -> &[u32] {
        &self.perms[i * self.m..(i + 1) * self.m]
    }

    fn inv(&self, i: usize) -> &[u32] {
        &self.invs[i * self.m..(i + 1) * self.m]
    }
}

struct LabelSearch<'a> {
    action: &'a Action,
    order: &'a [usize],
    r: u32,
    labels: Vec<u32>,
    witness: Option<Vec<u32>>,
}

impl LabelSearch<'_> {
    /// True once a witness is found; `self.witness` then holds it.
    fn run(&mut self, pos: usize, surviving: &[u32], max_used: u32) -> bool {
        if surviving.is_empty() {
            let mut complete = self.labels.clone();
            for l in complete.iter_mut() {
                if *l == 0 {
                    *l = 1;
                }
            }
            self.witness = Some(complete);
            return true;
        }
        if pos == self.order.len() {
            return false;
        }
        let v = self.order[pos];
        'choices: for c in 1..=self.r.min(max_used + 1) {
            self.labels[v] = c;
            let mut child = Vec::with_capacity(surviving.len());
            'filter: for &i in surviving {
                let p = self.action.perm(i as usize);
                let q = self.action.inv(i as usize);
                let fwd = self.labels[p[v] as usize];
                if fwd != 0 && fwd != c {
                    continue;
                }
                let bwd = self.labels[q[v] as usize];
                if bwd != 0 && bwd != c {
                    continue;
                }
                // Unbreakable survivor check: an element that moves only
                // labeled items can never be broken by an extension, so this
                // label choice is hopeless.
                for (w, &pw) in p.iter().enumerate() {
                    if pw as usize != w && self.labels[w] == 0 {
                        child.push(i);
                        continue 'filter;
                    }
                }
                continue 'choices;
            }
            if self.run(pos + 1, &child, max_used.max(c)) {
                return true;
            }
        }
        self.labels[v] = 0;
        false
    }
}

fn solve(action: &Action, order: &[usize], r_max: u32) -> Result<(u32, Vec<u32>), DistError> {
    let all: Vec<u32> = (0..action.count as u32).collect();
    for r in 1..=r_max.max(1) {
        let mut search = LabelSearch {
            action,
            order,
            r,
            labels: vec![0; action.m],
            witness: None,
        };
        if search.run(0, &all, 0) {
            return Ok((r, search.witness.expect("witness set on success")));
        }
    }
    Err(DistError::RMaxExceeded { r_max })
}

fn vertex_order(g: &Graph) -> Vec<usize> {
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    order
}

fn edge_order(g: &Graph) -> Vec<usize> {
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        (std::cmp::Reverse(degrees[u] + degrees[v]), e)
    });
    order
}

fn require_exact(g: &Graph, auts: &AutGroup) -> Result<(), DistError> {
    if auts.is_capped() {
        return Err(DistError::CappedGroup);
    }
    if auts.n() != g.n() {
        return Err(DistError::LengthMismatch {
            expected: g.n(),
            got: auts.n(),
        });
    }
    Ok(())
}

/// Least `r` admitting a distinguishing vertex labeling, with witness.
/// `r_max` defaults to the graph order, where the all-distinct labeling
/// always succeeds.
pub fn distinguishing_number(
    g: &Graph,
    auts: &AutGroup,
    r_max: Option<u32>,
) -> Result<DistResult<VertexLabeling>, DistError> {
    require_exact(g, auts)?;
    let r_max = r_max.unwrap_or(g.n().max(1) as u32);
    let action = Action::from_vertex_group(auts);
    let order = vertex_order(g);
    let (value, labels) = solve(&action, &order, r_max)?;
    let witness = VertexLabeling::new(labels, value).expect("search emits labels in 1..=r");
    Ok(DistResult {
        value,
        witness,
        checked_r_below: true,
        kernel_nontrivial: false,
    })
}

/// Least `r` admitting a distinguishing edge labeling, with witness.
pub fn distinguishing_index(
    g: &Graph,
    auts: &AutGroup,
    r_max: Option<u32>,
) -> Result<DistResult<EdgeLabeling>, DistError> {
    require_exact(g, auts)?;
    if g.edge_count() == 0 {
        return Err(DistError::NoEdges);
    }
    let r_max = r_max.unwrap_or(g.edge_count() as u32);
    let (action, kernel_nontrivial) = Action::from_edge_group(g, auts);
    let order = edge_order(g);
    let (value, labels) = solve(&action, &order, r_max)?;
    let witness = EdgeLabeling::new(labels, value).expect("search emits labels in 1..=r");
    Ok(DistResult {
        value,
        witness,
        checked_r_below: true,
        kernel_nontrivial,
    })
}

/// True iff every nontrivial automorphism changes some vertex label.
pub fn is_distinguishing_vertex(
    g: &Graph,
    auts: &AutGroup,
    labeling: &VertexLabeling,
) -> Result<bool, DistError> {
    require_exact(g, auts)?;
    if labeling.labels().len() != g.n() {
        return Err(DistError::LengthMismatch {
            expected: g.n(),
            got: labeling.labels().len(),
        });
    }
    let labels = labeling.labels();
    for i in 1..auts.order() {
        let img = auts.image(i);
        if (0..g.n()).all(|v| labels[v] == labels[img[v] as usize]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every automorphism acting nontrivially on edges changes some edge
/// label. Kernel elements (trivial edge action) are ignored; they are
/// unbreakable by any edge labeling.
pub fn is_distinguishing_edge(
    g: &Graph,
    auts: &AutGroup,
    labeling: &EdgeLabeling,
) -> Result<bool, DistError> {
    require_exact(g, auts)?;
    if labeling.labels().len() != g.edge_count() {
        return Err(DistError::LengthMismatch {
            expected: g.edge_count(),
            got: labeling.labels().len(),
        });
    }
    let (action, _) = Action::from_edge_group(g, auts);
    let labels = labeling.labels();
    for i in 0..action.count {
        let p = action.perm(i);
        if (0..action.m).all(|e| labels[e] == labels[p[e] as usize]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::enumerate_automorphisms;
    use std::collections::BTreeMap;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::build(n, edges, BTreeMap::new()).unwrap()
    }

    fn group(g: &Graph) -> AutGroup {
        enumerate_automorphisms(g, 1_000_000).unwrap()
    }

    #[test]
    fn c4_labeling_rejected_by_reflection() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let auts = group(&g);
        let l = VertexLabeling::new(vec![1, 1, 2, 2], 2).unwrap();
        assert!(!is_distinguishing_vertex(&g, &auts, &l).unwrap());
    }

    #[test]
    fn p3_vertex_labeling_accepted() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let auts = group(&g);
        let l = VertexLabeling::new(vec![1, 2, 2], 2).unwrap();
        assert!(is_distinguishing_vertex(&g, &auts, &l).unwrap());
    }

    #[test]
    fn rigid_graph_all_ones() {
        // path with a pendant makes an asymmetric tree
        let g = graph(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]);
        let auts = group(&g);
        if auts.order() == 1 {
            let l = VertexLabeling::new(vec![1; 4], 1).unwrap();
            assert!(is_distinguishing_vertex(&g, &auts, &l).unwrap());
        }
        // a pendant off-center on a path leaves no symmetry at all
        let rigid = graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        let rigid_auts = group(&rigid);
        assert_eq!(rigid_auts.order(), 1);
        let l = VertexLabeling::new(vec![1; 7], 1).unwrap();
        assert!(is_distinguishing_vertex(&rigid, &rigid_auts, &l).unwrap());
    }

    #[test]
    fn k1_number_is_one() {
        let g = graph(1, &[]);
        let auts = group(&g);
        let res = distinguishing_number(&g, &auts, None).unwrap();
        assert_eq!(res.value, 1);
    }

    #[test]
    fn p3_number_and_index() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let auts = group(&g);
        assert_eq!(distinguishing_number(&g, &auts, None).unwrap().value, 2);
        let idx = distinguishing_index(&g, &auts, None).unwrap();
        assert_eq!(idx.value, 2);
        assert!(!idx.kernel_nontrivial);
    }

    #[test]
    fn k2_index_kernel_convention() {
        let g = graph(2, &[(0, 1)]);
        let auts = group(&g);
        let res = distinguishing_index(&g, &auts, None).unwrap();
        assert_eq!(res.value, 1);
        assert!(res.kernel_nontrivial);
        let l = EdgeLabeling::new(vec![1], 1).unwrap();
        assert!(is_distinguishing_edge(&g, &auts, &l).unwrap());
    }

    #[test]
    fn c4_all_one_edges_rejected() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let auts = group(&g);
        let l = EdgeLabeling::new(vec![1; 4], 1).unwrap();
        assert!(!is_distinguishing_edge(&g, &auts, &l).unwrap());
    }

    #[test]
    fn no_edges_refused() {
        let g = graph(1, &[]);
        let auts = group(&g);
        assert_eq!(
            distinguishing_index(&g, &auts, None),
            Err(DistError::NoEdges)
        );
    }

    #[test]
    fn witnesses_validate() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let auts = group(&g);
        let res = distinguishing_number(&g, &auts, None).unwrap();
        assert_eq!(res.value, 2);
        assert!(is_distinguishing_vertex(&g, &auts, &res.witness).unwrap());
        let idx = distinguishing_index(&g, &auts, None).unwrap();
        assert!(is_distinguishing_edge(&g, &auts, &idx.witness).unwrap());
    }

    #[test]
    fn r_max_exceeded() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let auts = group(&g);
        assert_eq!(
            distinguishing_number(&g, &auts, Some(1)),
            Err(DistError::RMaxExceeded { r_max: 1 })
        );
    }

    #[test]
    fn capped_group_refused() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let capped = enumerate_automorphisms(&g, 3).unwrap();
        assert_eq!(
            distinguishing_number(&g, &capped, None),
            Err(DistError::CappedGroup)
        );
    }
}
