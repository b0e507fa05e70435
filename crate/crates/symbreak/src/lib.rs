//! Point-attaching graph families, exact automorphism enumeration, and
//! distinguishing numbers/indices with witness labelings.
//!
//! A graph is *r-distinguished* by a vertex (edge) labeling when no
//! nontrivial automorphism preserves all labels; the distinguishing number
//! `D(G)` and index `D'(G)` are the least such `r`. This crate builds the
//! supported families (windmills, `Q(m,n)`, spiro-chains, polyphenylenes,
//! nanostar dendrimers, and the bouquet/circuit/chain/link compositions),
//! solves `D` and `D'` exactly by pruned search, evaluates the known closed
//! forms with exact integer arithmetic, and cross-verifies the two routes.
//!
//! Formula arithmetic is generic over an integer scalar (the
//! [`formulas::Count`] trait); use [`Exact`] when overflow is possible and
//! [`Fast`] for large parameter sweeps.

pub mod automorphism;
pub mod distinguishing;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod io;
pub mod report;

/// Arbitrary-precision scalar for formula evaluation.
pub type Exact = num_bigint::BigUint;

/// Fixed-width scalar for fast parameter sweeps; panics on overflow.
pub type Fast = u128;

pub use distinguishing::{distinguishing_index, distinguishing_number, DistResult};
pub use graph::{EdgeLabeling, Graph, Permutation, VertexLabeling};
