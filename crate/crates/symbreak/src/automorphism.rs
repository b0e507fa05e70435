//! Exhaustive enumeration of automorphism groups for desk-scale graphs.
//!
//! The enumerator is a pruned backtracking search that assigns images vertex
//! by vertex in ascending index order, trying candidate images in ascending
//! order, so the element list is deterministic and starts with the identity.
//! Groups are stored as flat `u16` image tables because windmill-style
//! instances reach millions of elements.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{Graph, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutError {
    #[error("cap must be at least 1")]
    BadCap,
    #[error("graph order {0} exceeds the enumerator limit of 65535")]
    TooLarge(usize),
    #[error("group was capped during enumeration; exact results unavailable")]
    CappedGroup,
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// A fully enumerated automorphism group.
///
/// `capped` means enumeration stopped at the cap and the element list is a
/// prefix, not the whole group; anything needing exactness must check it.
pub struct AutGroup {
    n: usize,
    count: usize,
    images: Vec<u16>,
    inverses: Vec<u16>,
    capped: bool,
}

impl AutGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.count
    }

    pub fn is_capped(&self) -> bool {
        self.capped
    }

    /// Image table of element `i`; element 0 is the identity.
    pub fn image(&self, i: usize) -> &[u16] {
        &self.images[i * self.n..(i + 1) * self.n]
    }

    pub fn inverse_image(&self, i: usize) -> &[u16] {
        &self.inverses[i * self.n..(i + 1) * self.n]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u16]> {
        self.images.chunks_exact(self.n.max(1)).take(self.count)
    }

    pub fn element(&self, i: usize) -> Permutation {
        Permutation::new(self.image(i).iter().map(|&v| v as usize).collect())
            .expect("stored images are bijections")
    }

    pub fn elements(&self) -> Vec<Permutation> {
        (0..self.count).map(|i| self.element(i)).collect()
    }
}

/// Enumerates all automorphisms of `g`, stopping with `capped = true` once
/// more than `cap` elements have been found.
///
/// Pruning: candidate images must match on (degree, sorted multiset of
/// neighbor degrees) and on adjacency with every already-assigned vertex.
pub fn enumerate_automorphisms(g: &Graph, cap: usize) -> Result<AutGroup, AutError> {
    if cap == 0 {
        return Err(AutError::BadCap);
    }
    let n = g.n();
    if n > u16::MAX as usize {
        return Err(AutError::TooLarge(n));
    }
    if n == 0 {
        return Ok(AutGroup {
            n,
            count: 1,
            images: Vec::new(),
            inverses: Vec::new(),
            capped: false,
        });
    }

    let adj = g.adjacency_matrix();
    let degrees = g.degrees();
    // Invariant class per vertex: degree plus sorted neighbor-degree multiset.
    let keys: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| degrees[w]).collect();
            nd.sort_unstable();
            (degrees[v], nd)
        })
        .collect();
    // compatible[v] lists candidate images of v, ascending.
    let compatible: Vec<Vec<u16>> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| keys[w] == keys[v])
                .map(|w| w as u16)
                .collect()
        })
        .collect();

    let mut search = Search {
        n,
        adj,
        compatible,
        partial: vec![0u16; n],
        used: vec![false; n],
        images: Vec::new(),
        count: 0,
        cap,
        capped: false,
    };
    search.assign(0);

    let mut inverses = vec![0u16; search.images.len()];
    for (i, img) in search.images.chunks_exact(n).enumerate() {
        let inv = &mut inverses[i * n..(i + 1) * n];
        for (v, &w) in img.iter().enumerate() {
            inv[w as usize] = v as u16;
        }
    }
    Ok(AutGroup {
        n,
        count: search.count,
        images: search.images,
        inverses,
        capped: search.capped,
    })
}

struct Search {
    n: usize,
    adj: Vec<bool>,
    compatible: Vec<Vec<u16>>,
    partial: Vec<u16>,
    used: Vec<bool>,
    images: Vec<u16>,
    count: usize,
    cap: usize,
    capped: bool,
}

impl Search {
    fn assign(&mut self, v: usize) {
        if self.capped {
            return;
        }
        if v == self.n {
            if self.count == self.cap {
                self.capped = true;
                return;
            }
            self.images.extend_from_slice(&self.partial);
            self.count += 1;
            return;
        }
        for i in 0..self.compatible[v].len() {
            let w = self.compatible[v][i];
            if self.used[w as usize] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                self.adj[u * self.n + v]
                    == self.adj[self.partial[u] as usize * self.n + w as usize]
            });
            if !consistent {
                continue;
            }
            self.partial[v] = w;
            self.used[w as usize] = true;
            self.assign(v + 1);
            self.used[w as usize] = false;
            if self.capped {
                return;
            }
        }
    }
}

/// Vertex orbits under the group, as a partition sorted by smallest member.
pub fn orbits(group: &AutGroup) -> Result<Vec<Vec<usize>>, AutError> {
    if group.is_capped() {
        return Err(AutError::CappedGroup);
    }
    let n = group.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for img in group.iter() {
        for (v, &w) in img.iter().enumerate() {
            let a = find(&mut parent, v);
            let b = find(&mut parent, w as usize);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let root = find(&mut parent, v);
        buckets[root].push(v);
    }
    Ok(buckets.into_iter().filter(|b| !b.is_empty()).collect())
}

/// `n! * 2^n`, the order of the automorphism group of the dutch windmill
/// graph on `n` cycles of length `k`.
pub fn group_order_formula_dutch(n: u64, k: u64) -> Result<BigUint, AutError> {
    if n < 2 || k < 3 {
        return Err(AutError::BadParams(format!(
            "dutch windmill needs n >= 2 and k >= 3, got ({n},{k})"
        )));
    }
    let mut out = BigUint::from(1u32);
    for i in 2..=n {
        out *= i;
    }
    Ok(out << n)
}
