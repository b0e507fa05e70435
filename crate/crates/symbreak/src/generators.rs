//! Base graphs, the four point-attaching compositions, and the named graph
//! families.
//!
//! Vertex numbering is part of the contract so that witnesses stay stable:
//!
//! * base graphs: cycle vertex `i` is adjacent to `(i+1) mod k`; star center
//!   is 0; path runs `0..n`.
//! * `Q(m,n)`: hubs `0..m` form the `K_m`; the extra vertices of hub `i`'s
//!   blade are `m + i(n-1) .. m + (i+1)(n-1)`.
//! * dutch windmill: center 0; blade `i` occupies `1 + i(k-1)` onward, in
//!   path order around the cycle.
//! * compositions: vertices of the parts in part order, skipping slots
//!   merged into an earlier part; identified vertices keep the earliest
//!   index.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("vertex index {vertex} out of range for part of order {n}")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("bad contact vertices: {0}")]
    BadContacts(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("selector {0:?} does not resolve in its part")]
    BadSelector(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    Complete,
    Cycle,
    Path,
    Star,
}

/// `K_n`, `C_k`, `P_n` or `K_{1,n}` with conventional indexing.
pub fn make_base(kind: BaseKind, param: u64) -> Result<Graph, GenError> {
    let p = param as usize;
    let edges: Vec<(usize, usize)> = match kind {
        BaseKind::Complete => {
            if p < 1 {
                return Err(GenError::BadParams("complete graph needs n >= 1".into()));
            }
            (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect()
        }
        BaseKind::Cycle => {
            if p < 3 {
                return Err(GenError::BadParams("cycle needs k >= 3".into()));
            }
            (0..p).map(|i| (i, (i + 1) % p)).collect()
        }
        BaseKind::Path => {
            if p < 1 {
                return Err(GenError::BadParams("path needs n >= 1".into()));
            }
            (0..p.saturating_sub(1)).map(|i| (i, i + 1)).collect()
        }
        BaseKind::Star => {
            if p < 1 {
                return Err(GenError::BadParams("star needs n >= 1 leaves".into()));
            }
            return Ok(Graph::build(
                p + 1,
                &(1..=p).map(|i| (0, i)).collect::<Vec<_>>(),
                BTreeMap::new(),
            )?);
        }
    };
    let n = match kind {
        BaseKind::Complete | BaseKind::Path => p,
        BaseKind::Cycle => p,
        BaseKind::Star => unreachable!(),
    };
    Ok(Graph::build(n, &edges, BTreeMap::new())?)
}

/// Disjoint union with vertex identifications and extra edges; the workhorse
/// behind all compositions. Returns the graph and, per part, the map from
/// old to new indices.
fn compose(
    parts: &[&Graph],
    identify: &[((usize, usize), (usize, usize))],
    extra_edges: &[((usize, usize), (usize, usize))],
) -> Result<(Graph, Vec<Vec<usize>>), GenError> {
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0usize, |acc, g| {
            let off = *acc;
            *acc += g.n();
            Some(off)
        })
        .collect();
    let total: usize = parts.iter().map(|g| g.n()).sum();

    let global = |(part, v): (usize, usize)| -> Result<usize, GenError> {
        if v >= parts[part].n() {
            return Err(GenError::IndexOutOfRange {
                vertex: v,
                n: parts[part].n(),
            });
        }
        Ok(offsets[part] + v)
    };

    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &(a, b) in identify {
        let (ga, gb) = (global(a)?, global(b)?);
        let (ra, rb) = (find(&mut parent, ga), find(&mut parent, gb));
        if ra != rb {
            // keep the smaller global index as representative
            parent[ra.max(rb)] = ra.min(rb);
        }
    }

    let mut new_index = vec![usize::MAX; total];
    let mut next = 0usize;
    for v in 0..total {
        let root = find(&mut parent, v);
        if new_index[root] == usize::MAX {
            new_index[root] = next;
            next += 1;
        }
        new_index[v] = new_index[root];
    }

    let maps: Vec<Vec<usize>> = parts
        .iter()
        .enumerate()
        .map(|(i, g)| (0..g.n()).map(|v| new_index[offsets[i] + v]).collect())
        .collect();

    let mut edges = Vec::new();
    for (i, g) in parts.iter().enumerate() {
        for &(u, v) in g.edges() {
            edges.push((maps[i][u], maps[i][v]));
        }
    }
    for &(a, b) in extra_edges {
        edges.push((new_index[global(a)?], new_index[global(b)?]));
    }

    let mut roles = BTreeMap::new();
    for (i, g) in parts.iter().enumerate() {
        for (name, &v) in g.roles() {
            roles.insert(format!("p{i}.{name}"), maps[i][v]);
        }
    }

    Ok((Graph::build(next, &edges, roles)?, maps))
}

fn with_role(g: Graph, name: &str, v: usize) -> Result<Graph, GenError> {
    let mut roles = g.roles().clone();
    roles.insert(name.to_string(), v);
    Ok(Graph::build(g.n(), g.edges(), roles)?)
}

/// Identifies `v1` in `g1` with `v2` in `g2`.
pub fn point_attach(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph, GenError> {
    let (g, _) = compose(&[g1, g2], &[((0, v1), (1, v2))], &[])?;
    Ok(g)
}

/// Merges all roots into a single vertex tagged `"root"`.
pub fn bouquet(parts: &[(&Graph, usize)]) -> Result<Graph, GenError> {
    if parts.len() < 2 {
        return Err(GenError::BadParams("bouquet needs at least 2 parts".into()));
    }
    let graphs: Vec<&Graph> = parts.iter().map(|&(g, _)| g).collect();
    let identify: Vec<_> = (1..parts.len())
        .map(|i| ((0, parts[0].1), (i, parts[i].1)))
        .collect();
    let (g, maps) = compose(&graphs, &identify, &[])?;
    with_role(g, "root", maps[0][parts[0].1])
}

/// Attaches part `i` at its contact vertex to the `i`-th vertex of a cycle
/// `C_k`; the contact vertices themselves form the cycle.
pub fn circuit(parts: &[(&Graph, usize)]) -> Result<Graph, GenError> {
    let k = parts.len();
    if k < 3 {
        return Err(GenError::BadParams("circuit needs k >= 3 parts".into()));
    }
    let graphs: Vec<&Graph> = parts.iter().map(|&(g, _)| g).collect();
    let extra: Vec<_> = (0..k)
        .map(|i| ((i, parts[i].1), ((i + 1) % k, parts[(i + 1) % k].1)))
        .collect();
    let (g, maps) = compose(&graphs, &[], &extra)?;
    let mut out = g;
    for (i, &(_, x)) in parts.iter().enumerate() {
        out = with_role(out, &format!("contact:{i}"), maps[i][x])?;
    }
    Ok(out)
}

/// Identifies `y_i` with `x_{i+1}` along the part sequence.
pub fn chain(parts: &[(&Graph, usize, usize)]) -> Result<Graph, GenError> {
    if parts.is_empty() {
        return Err(GenError::BadParams("chain needs at least 1 part".into()));
    }
    for &(g, x, y) in parts {
        if x == y {
            return Err(GenError::BadContacts(format!(
                "chain contacts must differ within a part, got x = y = {x}"
            )));
        }
        for v in [x, y] {
            if v >= g.n() {
                return Err(GenError::IndexOutOfRange { vertex: v, n: g.n() });
            }
        }
    }
    let graphs: Vec<&Graph> = parts.iter().map(|&(g, _, _)| g).collect();
    let identify: Vec<_> = (0..parts.len() - 1)
        .map(|i| ((i, parts[i].2), (i + 1, parts[i + 1].1)))
        .collect();
    let (g, maps) = compose(&graphs, &identify, &[])?;
    let mut out = g;
    for (i, &(_, x, y)) in parts.iter().enumerate() {
        out = with_role(out, &format!("contact:{i}:x"), maps[i][x])?;
        out = with_role(out, &format!("contact:{i}:y"), maps[i][y])?;
    }
    Ok(out)
}

/// Joins `y_i` to `x_{i+1}` by a bridge edge along the part sequence.
pub fn link(parts: &[(&Graph, usize, usize)]) -> Result<Graph, GenError> {
    if parts.is_empty() {
        return Err(GenError::BadParams("link needs at least 1 part".into()));
    }
    for &(g, x, y) in parts {
        for v in [x, y] {
            if v >= g.n() {
                return Err(GenError::IndexOutOfRange { vertex: v, n: g.n() });
            }
        }
    }
    let graphs: Vec<&Graph> = parts.iter().map(|&(g, _, _)| g).collect();
    let extra: Vec<_> = (0..parts.len() - 1)
        .map(|i| ((i, parts[i].2), (i + 1, parts[i + 1].1)))
        .collect();
    let (g, maps) = compose(&graphs, &[], &extra)?;
    let mut out = g;
    for (i, &(_, x, y)) in parts.iter().enumerate() {
        out = with_role(out, &format!("contact:{i}:x"), maps[i][x])?;
        out = with_role(out, &format!("contact:{i}:y"), maps[i][y])?;
    }
    Ok(out)
}

/// `Q(m,n)`: `K_m` with each hub vertex identified into its own `K_n` blade.
pub fn q_graph(m: u64, n: u64) -> Result<Graph, GenError> {
    if m < 2 || n < 2 {
        return Err(GenError::BadParams(format!(
            "Q(m,n) needs m >= 2 and n >= 2, got ({m},{n})"
        )));
    }
    let (m, n) = (m as usize, n as usize);
    let order = m * n; // m hubs + m*(n-1) blade vertices
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            edges.push((u, v));
        }
    }
    let mut roles = BTreeMap::new();
    for i in 0..m {
        roles.insert(format!("hub:{i}"), i);
        let blade: Vec<usize> = std::iter::once(i)
            .chain((0..n - 1).map(|j| m + i * (n - 1) + j))
            .collect();
        for a in 0..blade.len() {
            for b in a + 1..blade.len() {
                edges.push((blade[a], blade[b]));
            }
        }
    }
    Ok(Graph::build(order, &edges, roles)?)
}

/// Dutch windmill `D_n^k`: `n` cycles `C_k` sharing the center vertex 0.
pub fn dutch(n: u64, k: u64) -> Result<Graph, GenError> {
    if n < 2 || k < 3 {
        return Err(GenError::BadParams(format!(
            "dutch windmill needs n >= 2 and k >= 3, got ({n},{k})"
        )));
    }
    let (n, k) = (n as usize, k as usize);
    let order = 1 + n * (k - 1);
    let mut edges = Vec::new();
    for i in 0..n {
        let blade: Vec<usize> = (0..k - 1).map(|j| 1 + i * (k - 1) + j).collect();
        edges.push((0, blade[0]));
        for w in blade.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((*blade.last().unwrap(), 0));
    }
    let mut roles = BTreeMap::new();
    roles.insert("center".to_string(), 0);
    Ok(Graph::build(order, &edges, roles)?)
}

/// Friendship graph `F_n = D_n^3`.
pub fn friendship(n: u64) -> Result<Graph, GenError> {
    dutch(n, 3)
}

fn cycle_with_contacts(q: u64, h: u64) -> Result<Graph, GenError> {
    if q < 3 || h < 1 || h > q / 2 {
        return Err(GenError::BadParams(format!(
            "cycle contacts need q >= 3 and 1 <= h <= q/2, got ({q},{h})"
        )));
    }
    make_base(BaseKind::Cycle, q)
}

/// Spiro-chain `S_{q,h,k}`: chain of `k` cycles `C_q`, consecutive contacts
/// at cycle distance `h` (shorter arc).
pub fn spiro(q: u64, h: u64, k: u64) -> Result<Graph, GenError> {
    if k < 1 {
        return Err(GenError::BadParams("spiro needs k >= 1".into()));
    }
    let cycle = cycle_with_contacts(q, h)?;
    let parts: Vec<(&Graph, usize, usize)> =
        (0..k).map(|_| (&cycle, 0usize, h as usize)).collect();
    chain(&parts)
}

/// Polyphenylene `L_{q,h,k}`: link of `k` cycles `C_q`, contacts at cycle
/// distance `h`.
pub fn poly(q: u64, h: u64, k: u64) -> Result<Graph, GenError> {
    if k < 1 {
        return Err(GenError::BadParams("poly needs k >= 1".into()));
    }
    let cycle = cycle_with_contacts(q, h)?;
    let parts: Vec<(&Graph, usize, usize)> =
        (0..k).map(|_| (&cycle, 0usize, h as usize)).collect();
    link(&parts)
}

/// Default base graph `F` for the dendrimer recursion: `C_6` with pendant
/// edges at the antipodal vertices 0 and 3, rooted at the pendant leaf 6.
pub fn nanostar_default_f() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 0),
        (0, 6),
        (3, 7),
    ];
    let mut roles = BTreeMap::new();
    roles.insert("root".to_string(), 6);
    Graph::build(8, &edges, roles).expect("fixed base graph is valid")
}

/// Default base graph `G_1`: `C_6` with one pendant edge, rooted at the leaf.
pub fn nanostar_default_g1() -> Graph {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)];
    let mut roles = BTreeMap::new();
    roles.insert("root".to_string(), 6);
    Graph::build(7, &edges, roles).expect("fixed base graph is valid")
}

/// Nanostar dendrimer `ND_k` with the default base graphs.
pub fn nanostar(k: u64) -> Result<Graph, GenError> {
    nanostar_with(k, &nanostar_default_f(), &nanostar_default_g1())
}

/// `ND_k` over user-supplied base graphs, each carrying a `"root"` role.
/// `G_j` (j >= 2) is the bouquet of two copies of `G_{j-1}` and one `F` at
/// their roots, re-rooted at its unique remaining leaf; `ND_k` is the
/// bouquet of three copies of `G_k` at their roots.
pub fn nanostar_with(k: u64, f: &Graph, g1: &Graph) -> Result<Graph, GenError> {
    if k < 1 {
        return Err(GenError::BadParams("nanostar needs k >= 1".into()));
    }
    let root_of = |g: &Graph| -> Result<usize, GenError> {
        g.role("root")
            .ok_or_else(|| GenError::BadSelector("root".into()))
    };
    let f_root = root_of(f)?;
    let mut level = g1.clone();
    for _ in 1..k {
        let r = root_of(&level)?;
        let merged = bouquet(&[(&level, r), (&level, r), (f, f_root)])?;
        let degrees = merged.degrees();
        let leaves: Vec<usize> = (0..merged.n()).filter(|&v| degrees[v] == 1).collect();
        let [leaf] = leaves[..] else {
            return Err(GenError::BadParams(format!(
                "dendrimer level has {} leaves, expected exactly 1; \
                 base graphs must each expose exactly one non-root leaf",
                leaves.len()
            )));
        };
        level = with_role(merged, "root", leaf)?;
    }
    let r = root_of(&level)?;
    bouquet(&[(&level, r), (&level, r), (&level, r)])
}

/// Symbolic description of a family or composition; the JSON input format
/// of the `gen` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Complete,
    Cycle,
    Path,
    Star,
    QGraph,
    Dutch,
    Friendship,
    Spiro,
    Poly,
    Nanostar,
    Bouquet,
    Circuit,
    Chain,
    Link,
    PointAttach,
}

impl FamilyKind {
    pub fn parse(name: &str) -> Result<FamilyKind, GenError> {
        use FamilyKind::*;
        Ok(match name {
            "complete" => Complete,
            "cycle" => Cycle,
            "path" => Path,
            "star" => Star,
            "q" | "q_graph" => QGraph,
            "dutch" => Dutch,
            "friendship" => Friendship,
            "spiro" => Spiro,
            "poly" => Poly,
            "nanostar" => Nanostar,
            "bouquet" => Bouquet,
            "circuit" => Circuit,
            "chain" => Chain,
            "link" => Link,
            "point_attach" => PointAttach,
            other => return Err(GenError::UnknownFamily(other.to_string())),
        })
    }
}

/// One part of a composition with its attachment selectors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartSpec {
    #[serde(flatten)]
    pub spec: FamilySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Selector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Selector>,
}

/// Vertex selector: a raw index or a role name.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Selector {
    Index(usize),
    Role(String),
}

impl Selector {
    fn resolve(&self, g: &Graph) -> Result<usize, GenError> {
        match self {
            Selector::Index(i) => {
                if *i < g.n() {
                    Ok(*i)
                } else {
                    Err(GenError::IndexOutOfRange {
                        vertex: *i,
                        n: g.n(),
                    })
                }
            }
            Selector::Role(name) => g
                .role(name)
                .ok_or_else(|| GenError::BadSelector(name.clone())),
        }
    }
}

fn expect_params<const N: usize>(spec: &FamilySpec, what: &str) -> Result<[u64; N], GenError> {
    spec.params.clone().try_into().map_err(|_| {
        GenError::BadParams(format!(
            "{what} takes {N} parameter(s), got {:?}",
            spec.params
        ))
    })
}

fn build_parts(spec: &FamilySpec, need_y: bool) -> Result<Vec<(Graph, usize, usize)>, GenError> {
    if spec.parts.is_empty() {
        return Err(GenError::BadParams("composition needs parts".into()));
    }
    spec.parts
        .iter()
        .map(|p| {
            let g = family(&p.spec)?;
            let x = p
                .x
                .as_ref()
                .ok_or_else(|| GenError::BadParams("part is missing selector x".into()))?
                .resolve(&g)?;
            let y = if need_y {
                p.y.as_ref()
                    .ok_or_else(|| GenError::BadParams("part is missing selector y".into()))?
                    .resolve(&g)?
            } else {
                0
            };
            Ok((g, x, y))
        })
        .collect()
}

/// Builds the graph described by a [`FamilySpec`]; deterministic for
/// identical specs.
pub fn family(spec: &FamilySpec) -> Result<Graph, GenError> {
    use FamilyKind::*;
    match spec.kind {
        Complete | Cycle | Path | Star => {
            let [p] = expect_params::<1>(spec, "base graph")?;
            let kind = match spec.kind {
                Complete => BaseKind::Complete,
                Cycle => BaseKind::Cycle,
                Path => BaseKind::Path,
                Star => BaseKind::Star,
                _ => unreachable!(),
            };
            make_base(kind, p)
        }
        QGraph => {
            let [m, n] = expect_params::<2>(spec, "q_graph")?;
            q_graph(m, n)
        }
        Dutch => {
            let [n, k] = expect_params::<2>(spec, "dutch")?;
            dutch(n, k)
        }
        Friendship => {
            let [n] = expect_params::<1>(spec, "friendship")?;
            friendship(n)
        }
        Spiro => {
            let [q, h, k] = expect_params::<3>(spec, "spiro")?;
            spiro(q, h, k)
        }
        Poly => {
            let [q, h, k] = expect_params::<3>(spec, "poly")?;
            poly(q, h, k)
        }
        Nanostar => {
            let [k] = expect_params::<1>(spec, "nanostar")?;
            nanostar(k)
        }
        Bouquet => {
            let parts = build_parts(spec, false)?;
            let refs: Vec<(&Graph, usize)> = parts.iter().map(|(g, x, _)| (g, *x)).collect();
            bouquet(&refs)
        }
        Circuit => {
            let parts = build_parts(spec, false)?;
            let refs: Vec<(&Graph, usize)> = parts.iter().map(|(g, x, _)| (g, *x)).collect();
            circuit(&refs)
        }
        Chain => {
            let parts = build_parts(spec, true)?;
            let refs: Vec<(&Graph, usize, usize)> =
                parts.iter().map(|(g, x, y)| (g, *x, *y)).collect();
            chain(&refs)
        }
        Link => {
            let parts = build_parts(spec, true)?;
            let refs: Vec<(&Graph, usize, usize)> =
                parts.iter().map(|(g, x, y)| (g, *x, *y)).collect();
            link(&refs)
        }
        PointAttach => {
            let parts = build_parts(spec, false)?;
            let [(g1, v1, _), (g2, v2, _)] = &parts[..] else {
                return Err(GenError::BadParams(
                    "point_attach takes exactly 2 parts".into(),
                ));
            };
            point_attach(g1, *v1, g2, *v2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_graphs() {
        let c5 = make_base(BaseKind::Cycle, 5).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        let k4 = make_base(BaseKind::Complete, 4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let s7 = make_base(BaseKind::Star, 7).unwrap();
        assert_eq!((s7.n(), s7.degree(0)), (8, 7));
        assert!(make_base(BaseKind::Cycle, 2).is_err());
    }

    #[test]
    fn point_attach_k2s_gives_p3() {
        let k2 = make_base(BaseKind::Complete, 2).unwrap();
        let g = point_attach(&k2, 0, &k2, 0).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
    }

    #[test]
    fn bowtie_from_triangles() {
        let c3 = make_base(BaseKind::Cycle, 3).unwrap();
        let g = point_attach(&c3, 0, &c3, 0).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
    }

    #[test]
    fn bouquet_of_stars_is_star() {
        let s3 = make_base(BaseKind::Star, 3).unwrap();
        let s4 = make_base(BaseKind::Star, 4).unwrap();
        let g = bouquet(&[(&s3, 0), (&s4, 0)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 7));
        assert_eq!(g.degree(g.role("root").unwrap()), 7);
    }

    #[test]
    fn bouquet_of_triangles_is_friendship() {
        let c3 = make_base(BaseKind::Cycle, 3).unwrap();
        let g = bouquet(&[(&c3, 0), (&c3, 0), (&c3, 0)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 9));
    }

    #[test]
    fn circuit_shapes() {
        let k1 = make_base(BaseKind::Path, 1).unwrap();
        let g = circuit(&[(&k1, 0), (&k1, 0), (&k1, 0)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));

        let c3 = make_base(BaseKind::Cycle, 3).unwrap();
        let g = circuit(&[(&c3, 0); 5]).unwrap();
        assert_eq!(g.n(), 15);

        let k2 = make_base(BaseKind::Complete, 2).unwrap();
        let net = circuit(&[(&k2, 0); 3]).unwrap();
        assert_eq!((net.n(), net.edge_count()), (6, 6));
    }

    #[test]
    fn chain_shapes() {
        let k2 = make_base(BaseKind::Complete, 2).unwrap();
        let g = chain(&[(&k2, 0, 1), (&k2, 0, 1)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));

        let single = chain(&[(&k2, 0, 1)]).unwrap();
        assert_eq!(single.n(), 2);

        assert!(matches!(
            chain(&[(&k2, 0, 0)]),
            Err(GenError::BadContacts(_))
        ));
    }

    #[test]
    fn link_shapes() {
        let k1 = make_base(BaseKind::Path, 1).unwrap();
        let g = link(&[(&k1, 0, 0), (&k1, 0, 0)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));

        let c6 = make_base(BaseKind::Cycle, 6).unwrap();
        let g = link(&[(&c6, 0, 2), (&c6, 0, 2)]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 13));
    }

    #[test]
    fn q_graph_counts() {
        let g = q_graph(5, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (15, 25));
        assert_eq!(g.role("hub:0"), Some(0));
        // Q(2,2) is the path P4
        let p4 = q_graph(2, 2).unwrap();
        assert_eq!((p4.n(), p4.edge_count()), (4, 3));
    }

    #[test]
    fn dutch_counts() {
        for (n, k) in [(2u64, 3u64), (3, 4), (4, 5)] {
            let g = dutch(n, k).unwrap();
            assert_eq!(g.n() as u64, 1 + n * (k - 1));
            assert_eq!(g.edge_count() as u64, n * k);
        }
        assert_eq!(friendship(2).unwrap(), dutch(2, 3).unwrap());
    }

    #[test]
    fn spiro_counts() {
        let g = spiro(6, 2, 2).unwrap();
        assert_eq!(g.n(), 11);
        let one = spiro(6, 2, 1).unwrap();
        assert_eq!(one.n(), 6);
        assert!(spiro(6, 4, 2).is_err()); // h beyond q/2
    }

    #[test]
    fn nanostar_orders() {
        let nd1 = nanostar(1).unwrap();
        assert_eq!(nd1.n(), 19);
        let nd2 = nanostar(2).unwrap();
        assert_eq!(nd2.n(), 58);
        assert!(nd1.is_connected());
        assert!(nd2.is_connected());
    }

    #[test]
    fn family_from_json_spec() {
        let text = r#"{
            "kind": "chain",
            "parts": [
                {"kind": "cycle", "params": [6], "x": 0, "y": 2},
                {"kind": "cycle", "params": [6], "x": 0, "y": 2}
            ]
        }"#;
        let spec: FamilySpec = serde_json::from_str(text).unwrap();
        let g = family(&spec).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(g, spiro(6, 2, 2).unwrap());
    }

    #[test]
    fn family_determinism() {
        let spec = FamilySpec {
            kind: FamilyKind::QGraph,
            params: vec![4, 3],
            parts: vec![],
        };
        assert_eq!(family(&spec).unwrap(), family(&spec).unwrap());
    }
}
