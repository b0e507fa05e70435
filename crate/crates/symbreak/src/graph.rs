//! Simple undirected graphs with canonical edge ordering, permutations on
//! vertex indices, and vertex/edge labelings.
//!
//! Everything here is immutable after construction. The canonical edge order
//! (lexicographic on `(min, max)` endpoint pairs) is part of the public
//! contract: all edge labelings and edge permutations index into it.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {vertex} out of range for graph of order {n}")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("role {name:?} points at vertex {vertex}, but graph has order {n}")]
    BadRole {
        name: String,
        vertex: usize,
        n: usize,
    },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("permutation image is not a bijection")]
    NotBijection,
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("label {label} at position {position} exceeds declared label count {r}")]
    LabelOutOfRange {
        label: u32,
        position: usize,
        r: u32,
    },
    #[error("label at position {0} is zero; labels are 1-based")]
    ZeroLabel(usize),
}

/// Immutable simple undirected graph.
///
/// Vertices are `0..n`. Edges are stored sorted lexicographically with
/// `u < v`, so two equal graphs always serialize identically. `roles` maps
/// names like `"center"` or `"hub:3"` to vertex indices; generators use them
/// to expose attachment points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    roles: BTreeMap<String, usize>,
}

impl Graph {
    /// Validates, deduplicates and canonically orders an edge list.
    pub fn build(
        n: usize,
        edges: &[(usize, usize)],
        roles: BTreeMap<String, usize>,
    ) -> Result<Self, GraphError> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { vertex: w, n });
                }
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        for (name, &vertex) in &roles {
            if vertex >= n {
                return Err(GraphError::BadRole {
                    name: name.clone(),
                    vertex,
                    n,
                });
            }
        }
        Ok(Graph {
            n,
            edges: canon,
            roles,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn roles(&self) -> &BTreeMap<String, usize> {
        &self.roles
    }

    pub fn role(&self, name: &str) -> Option<usize> {
        self.roles.get(name).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of `{u,v}` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    /// Row-major `n*n` adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<bool> {
        let mut adj = vec![false; self.n * self.n];
        for &(u, v) in &self.edges {
            adj[u * self.n + v] = true;
            adj[v * self.n + u] = true;
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A bijection on `{0..n-1}`; `image[v]` is where `v` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, GraphError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(GraphError::NotBijection);
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Function composition: `(p.compose(q))(v) = p(q(v))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GraphError> {
        if self.len() != other.len() {
            return Err(GraphError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }
}

/// True iff `p` maps edges to edges (a bijection that does so also maps
/// non-edges to non-edges, so checking edges suffices).
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, GraphError> {
    if p.len() != g.n() {
        return Err(GraphError::LengthMismatch {
            expected: g.n(),
            got: p.len(),
        });
    }
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

/// The permutation of canonical edge positions induced by a vertex
/// automorphism. Composition-compatible: the edge permutation of a composite
/// is the composite of the edge permutations.
pub fn induced_edge_perm(g: &Graph, p: &Permutation) -> Result<Permutation, GraphError> {
    if !is_automorphism(g, p)? {
        return Err(GraphError::NotAutomorphism);
    }
    let image = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            g.edge_index(p.apply(u), p.apply(v))
                .expect("automorphism maps edges to edges")
        })
        .collect();
    Ok(Permutation { image })
}

/// Vertex labeling with labels in `{1..r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    labels: Vec<u32>,
    r: u32,
}

/// Edge labeling aligned with the graph's canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<u32>,
    r: u32,
}

fn check_labels(labels: &[u32], r: u32) -> Result<(), GraphError> {
    for (position, &label) in labels.iter().enumerate() {
        if label == 0 {
            return Err(GraphError::ZeroLabel(position));
        }
        if label > r {
            return Err(GraphError::LabelOutOfRange { label, position, r });
        }
    }
    Ok(())
}

impl VertexLabeling {
    pub fn new(labels: Vec<u32>, r: u32) -> Result<Self, GraphError> {
        check_labels(&labels, r)?;
        Ok(VertexLabeling { labels, r })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Same labeling declared with a larger label budget.
    pub fn widen(&self, r: u32) -> Result<Self, GraphError> {
        Self::new(self.labels.clone(), r.max(self.r))
    }
}

impl EdgeLabeling {
    pub fn new(labels: Vec<u32>, r: u32) -> Result<Self, GraphError> {
        check_labels(&labels, r)?;
        Ok(EdgeLabeling { labels, r })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn widen(&self, r: u32) -> Result<Self, GraphError> {
        Self::new(self.labels.clone(), r.max(self.r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::build(3, &[(0, 1), (1, 2)], BTreeMap::new()).unwrap()
    }

    fn c4() -> Graph {
        Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], BTreeMap::new()).unwrap()
    }

    #[test]
    fn build_p3() {
        let g = p3();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn build_k1() {
        let g = Graph::build(1, &[], BTreeMap::new()).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_dedups() {
        let g = Graph::build(4, &[(0, 1), (1, 0), (2, 3)], BTreeMap::new()).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn build_rejects_loop_and_range() {
        assert_eq!(
            Graph::build(3, &[(1, 1)], BTreeMap::new()),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::build(3, &[(0, 3)], BTreeMap::new()),
            Err(GraphError::IndexOutOfRange { vertex: 3, n: 3 })
        ));
        let mut roles = BTreeMap::new();
        roles.insert("root".to_string(), 5);
        assert!(matches!(
            Graph::build(3, &[], roles),
            Err(GraphError::BadRole { .. })
        ));
    }

    #[test]
    fn automorphism_checks() {
        let g = p3();
        let refl = Permutation::new(vec![2, 1, 0]).unwrap();
        assert!(is_automorphism(&g, &refl).unwrap());
        let bad = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(!is_automorphism(&g, &bad).unwrap());

        let c = c4();
        let swap = Permutation::new(vec![1, 0, 3, 2]).unwrap();
        assert!(is_automorphism(&c, &swap).unwrap());
    }

    #[test]
    fn automorphism_length_mismatch() {
        let g = p3();
        let p = Permutation::identity(4);
        assert!(matches!(
            is_automorphism(&g, &p),
            Err(GraphError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn edge_perm_k2_and_p3() {
        let k2 = Graph::build(2, &[(0, 1)], BTreeMap::new()).unwrap();
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert!(induced_edge_perm(&k2, &swap).unwrap().is_identity());

        let g = p3();
        let refl = Permutation::new(vec![2, 1, 0]).unwrap();
        let ep = induced_edge_perm(&g, &refl).unwrap();
        assert_eq!(ep.image(), &[1, 0]);
    }

    #[test]
    fn edge_perm_c4_rotation() {
        let c = c4();
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        let ep = induced_edge_perm(&c, &rot).unwrap();
        // edges in canonical order: (0,1) (0,3) (1,2) (2,3)
        // rot: (0,1)->(1,2), (0,3)->(0,1), (1,2)->(2,3), (2,3)->(0,3)
        assert_eq!(ep.image(), &[2, 0, 3, 1]);
        // a single 4-cycle on the edges
        let mut seen = 1;
        let mut e = ep.apply(0);
        while e != 0 {
            e = ep.apply(e);
            seen += 1;
        }
        assert_eq!(seen, 4);
    }

    #[test]
    fn edge_perm_rejects_non_automorphism() {
        let g = p3();
        let bad = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(induced_edge_perm(&g, &bad), Err(GraphError::NotAutomorphism));
    }

    #[test]
    fn compose_and_inverse() {
        let rot1 = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&rot1).unwrap(), rot1);
        assert!(rot1.compose(&rot1.inverse()).unwrap().is_identity());
        let rot2 = rot1.compose(&rot1).unwrap();
        assert_eq!(rot2.image(), &[2, 3, 0, 1]);
    }

    #[test]
    fn labeling_validation() {
        assert!(VertexLabeling::new(vec![1, 2, 2], 2).is_ok());
        assert!(matches!(
            VertexLabeling::new(vec![1, 3], 2),
            Err(GraphError::LabelOutOfRange { .. })
        ));
        assert!(matches!(
            VertexLabeling::new(vec![0, 1], 2),
            Err(GraphError::ZeroLabel(0))
        ));
    }
}
