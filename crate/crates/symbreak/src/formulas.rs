//! Integer-exact evaluation of the closed forms and upper bounds for every
//! supported family.
//!
//! All exact paths avoid floating point: every ceiling-of-radical expression
//! is evaluated as the least integer satisfying the equivalent polynomial
//! inequality, through a shared exponential-then-binary search over a
//! monotone predicate. The arithmetic scalar is a type parameter; see the
//! [`Exact`](crate::Exact) and [`Fast`](crate::Fast) aliases at the crate
//! root.

use num_integer::Integer;
use num_traits::CheckedMul;
use thiserror::Error;

use serde::Serialize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("predicate has no solution below {limit}")]
    NoSolutionBelowLimit { limit: u64 },
    #[error("parameters are outside the scope of the stated result: {0}")]
    OutOfTheoremScope(String),
}

/// Integer scalar for formula arithmetic. `u64`/`u128` give speed with
/// checked overflow; `BigUint` never overflows.
pub trait Count: Integer + Clone + From<u64> {
    /// `None` signals overflow; big integers never return `None`.
    fn checked_mul_scalar(&self, other: &Self) -> Option<Self>;
}

impl Count for u64 {
    fn checked_mul_scalar(&self, other: &Self) -> Option<Self> {
        self.checked_mul(other)
    }
}

impl Count for u128 {
    fn checked_mul_scalar(&self, other: &Self) -> Option<Self> {
        self.checked_mul(other)
    }
}

impl Count for num_bigint::BigUint {
    fn checked_mul_scalar(&self, other: &Self) -> Option<Self> {
        CheckedMul::checked_mul(self, other)
    }
}

const SEARCH_LIMIT: u64 = 1_000_000_000;

/// Least `r >= 1` with `pred(r)` true, for a monotone nondecreasing
/// predicate, by exponential growth then binary search.
pub fn min_r<F: Fn(u64) -> bool>(pred: F) -> Result<u64, FormulaError> {
    let mut hi = 1u64;
    while !pred(hi) {
        if hi >= SEARCH_LIMIT {
            return Err(FormulaError::NoSolutionBelowLimit {
                limit: SEARCH_LIMIT,
            });
        }
        hi = (hi * 2).min(SEARCH_LIMIT);
    }
    let mut lo = hi / 2; // pred(lo) false or lo == 0
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `base^exp` in the scalar type; panics on primitive overflow, which the
/// callers' search ranges never reach (and `BigUint` cannot).
fn pow<T: Count>(base: u64, exp: u64) -> T {
    let mut out = T::from(1);
    let b = T::from(base);
    for _ in 0..exp {
        out = out
            .checked_mul_scalar(&b)
            .expect("scalar overflow; use a wider scalar type");
    }
    out
}

/// Binomial coefficient `C(r, j)`, zero when `r < j`.
pub fn binomial<T: Count>(r: u64, j: u64) -> T {
    if r < j {
        return T::from(0);
    }
    let mut c = T::from(1);
    for i in 1..=j {
        // numerator first keeps every intermediate value integral
        c = c
            .checked_mul_scalar(&T::from(r - j + i))
            .expect("scalar overflow; use a wider scalar type");
        c = c.div_floor(&T::from(i));
    }
    c
}

/// `D(Q(m,n)) = min{r : r * C(r, n-1) >= m}`.
pub fn d_q<T: Count>(m: u64, n: u64) -> Result<u64, FormulaError> {
    if m < 2 || n < 2 {
        return Err(FormulaError::BadParams(format!(
            "Q(m,n) needs m >= 2 and n >= 2, got ({m},{n})"
        )));
    }
    min_r(|r| {
        let lhs = T::from(r)
            .checked_mul_scalar(&binomial::<T>(r, n - 1))
            .expect("scalar overflow; use a wider scalar type");
        lhs >= T::from(m)
    })
}

/// `D'(Q(m,n)) = 2`. Blades must be real cliques (`n >= 3`); at `n = 2` they
/// degenerate to single edges, outside the stated result.
pub fn dprime_q(m: u64, n: u64) -> Result<u64, FormulaError> {
    if m < 2 {
        return Err(FormulaError::BadParams(format!(
            "Q(m,n) needs m >= 2, got m = {m}"
        )));
    }
    if n < 3 {
        return Err(FormulaError::OutOfTheoremScope(format!(
            "index of Q(m,n) needs n >= 3, got n = {n}"
        )));
    }
    Ok(2)
}

/// `D(D_n^k) = min{r : (r^(k-1) - r^ceil((k-1)/2)) / 2 >= n}`, evaluated as
/// `r^(k-1) - r^c >= 2n` (the left side is always even).
pub fn d_dutch<T: Count>(n: u64, k: u64) -> Result<u64, FormulaError> {
    if n < 2 || k < 3 {
        return Err(FormulaError::BadParams(format!(
            "dutch windmill needs n >= 2 and k >= 3, got ({n},{k})"
        )));
    }
    let c = k / 2; // ceil((k-1)/2)
    let target = T::from(2 * n);
    min_r(|r| {
        let hi: T = pow(r, k - 1);
        let lo: T = pow(r, c);
        hi >= lo && hi - lo >= target
    })
}

/// Closed form for odd `k = 2m+1`: the ceiling of the `m`-th root of
/// `(1+sqrt(8n+1))/2`, evaluated exactly as `min{r : r^m (r^m - 1) >= 2n}`.
pub fn d_dutch_odd_closed<T: Count>(n: u64, m: u64) -> Result<u64, FormulaError> {
    if n < 2 || m < 1 {
        return Err(FormulaError::BadParams(format!(
            "odd-cycle closed form needs n >= 2 and m >= 1, got ({n},{m})"
        )));
    }
    let target = T::from(2 * n);
    min_r(|r| {
        let rm: T = pow(r, m);
        let lhs = rm
            .checked_mul_scalar(&(rm.clone() - T::from(1)))
            .expect("scalar overflow; use a wider scalar type");
        lhs >= target
    })
}

/// `D'(D_n^k) = D(D_n^(k+1))`: vertex labelings of the next windmill are
/// exactly edge labelings of this one.
pub fn dprime_dutch<T: Count>(n: u64, k: u64) -> Result<u64, FormulaError> {
    if n < 2 || k < 3 {
        return Err(FormulaError::BadParams(format!(
            "dutch windmill needs n >= 2 and k >= 3, got ({n},{k})"
        )));
    }
    d_dutch::<T>(n, k + 1)
}

/// Friendship-graph closed forms, exact and floating-point routes side by
/// side.
///
/// Exact: `D = min{r : r(r-1) >= 2n}` and `D' = min{r : r^2(r-1) >= 2n}`
/// (least-integer forms of the published radical and Cardano expressions;
/// both are ceilings of roots of increasing polynomials). The float fields
/// evaluate the radical expressions naively; where the root is an exact
/// integer the naive ceiling can land one too high, so any disagreement is
/// surfaced to callers rather than resolved here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriendshipClosed {
    pub d: u64,
    pub dprime: u64,
    pub d_float: u64,
    pub dprime_float: u64,
}

impl FriendshipClosed {
    pub fn floats_agree(&self) -> bool {
        self.d == self.d_float && self.dprime == self.dprime_float
    }
}

pub fn friendship_closed<T: Count>(n: u64) -> Result<FriendshipClosed, FormulaError> {
    if n < 2 {
        return Err(FormulaError::BadParams(format!(
            "friendship graph needs n >= 2, got {n}"
        )));
    }
    let target = T::from(2 * n);
    let d = min_r(|r| {
        T::from(r)
            .checked_mul_scalar(&T::from(r - 1))
            .expect("scalar overflow; use a wider scalar type")
            >= target
    })?;
    let dprime = min_r(|r| {
        let r2 = T::from(r)
            .checked_mul_scalar(&T::from(r))
            .expect("scalar overflow; use a wider scalar type");
        r2.checked_mul_scalar(&T::from(r - 1))
            .expect("scalar overflow; use a wider scalar type")
            >= target
    })?;

    let nf = n as f64;
    let d_float = ((1.0 + (8.0 * nf + 1.0).sqrt()) / 2.0).ceil() as u64;
    let a = 1.0 + 27.0 * nf + 3.0 * (81.0 * nf * nf + 6.0 * nf).sqrt();
    let cbrt = a.cbrt();
    let dprime_float = (cbrt / 3.0 + 1.0 / (3.0 * cbrt) + 1.0 / 3.0).ceil() as u64;

    Ok(FriendshipClosed {
        d,
        dprime,
        d_float,
        dprime_float,
    })
}

/// Whether a result is a proven exact value or only an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub d: u64,
    pub dprime: u64,
    pub kind: BoundKind,
    pub source: String,
}

/// Chemical families whose values are constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChemFamily {
    /// `S_{q,h,k}`, a chain of `k` cycles `C_q`, contacts at distance `h`.
    Spiro,
    /// `L_{q,h,k}`, a link of `k` cycles `C_q`, contacts at distance `h`.
    Poly,
    /// `ND_k`, the recursive dendrimer.
    Nanostar,
}

/// Constant values for spiro-chains, polyphenylenes and nanostar dendrimers:
/// always `(2, 2)` except `D(S_{3,1,2}) = 3`.
pub fn chemical_constants(
    family: ChemFamily,
    params: &[u64],
) -> Result<FormulaResult, FormulaError> {
    match family {
        ChemFamily::Spiro | ChemFamily::Poly => {
            let name = if family == ChemFamily::Spiro {
                "spiro"
            } else {
                "poly"
            };
            let [q, h, k] = *params else {
                return Err(FormulaError::BadParams(format!(
                    "{name} takes (q, h, k), got {params:?}"
                )));
            };
            if q < 3 || h < 1 || h > q / 2 {
                return Err(FormulaError::BadParams(format!(
                    "{name} needs q >= 3 and 1 <= h <= q/2, got ({q},{h},{k})"
                )));
            }
            if k < 2 {
                return Err(FormulaError::OutOfTheoremScope(format!(
                    "{name} constants are stated for k >= 2, got k = {k}"
                )));
            }
            let d = if family == ChemFamily::Spiro && (q, h, k) == (3, 1, 2) {
                3
            } else {
                2
            };
            Ok(FormulaResult {
                d,
                dprime: 2,
                kind: BoundKind::Exact,
                source: format!("{name}_constant"),
            })
        }
        ChemFamily::Nanostar => {
            let [k] = *params else {
                return Err(FormulaError::BadParams(format!(
                    "nanostar takes (k), got {params:?}"
                )));
            };
            if k < 1 {
                return Err(FormulaError::BadParams("nanostar needs k >= 1".into()));
            }
            Ok(FormulaResult {
                d: 2,
                dprime: 2,
                kind: BoundKind::Exact,
                source: "nanostar_constant".into(),
            })
        }
    }
}

/// Exact per-part values feeding a composition bound.
#[derive(Debug, Clone, Copy)]
pub struct PartValues {
    pub d: u64,
    pub dprime: u64,
}

/// Inputs for the four composition upper bounds.
pub enum BoundInput<'a> {
    /// Sum over parts.
    Bouquet { parts: &'a [PartValues] },
    /// Max over parts and the carrying cycle.
    Circuit {
        parts: &'a [PartValues],
        cycle: PartValues,
    },
    /// Max over parts and composed-graph degrees of the interior contact
    /// vertices (`x_i` for `i = 2..k`).
    Chain {
        parts: &'a [PartValues],
        contact_degrees: &'a [u64],
    },
    /// Max over parts.
    Link { parts: &'a [PartValues] },
}

pub fn composition_bound(input: &BoundInput<'_>) -> Result<FormulaResult, FormulaError> {
    fn nonempty(parts: &[PartValues]) -> Result<(), FormulaError> {
        if parts.is_empty() {
            Err(FormulaError::BadParams("composition needs parts".into()))
        } else {
            Ok(())
        }
    }
    let (d, dprime, source) = match input {
        BoundInput::Bouquet { parts } => {
            nonempty(parts)?;
            (
                parts.iter().map(|p| p.d).sum(),
                parts.iter().map(|p| p.dprime).sum(),
                "bouquet_bound",
            )
        }
        BoundInput::Circuit { parts, cycle } => {
            nonempty(parts)?;
            if parts.len() < 3 {
                return Err(FormulaError::BadParams(
                    "circuit needs at least 3 parts".into(),
                ));
            }
            (
                parts.iter().map(|p| p.d).max().unwrap().max(cycle.d),
                parts
                    .iter()
                    .map(|p| p.dprime)
                    .max()
                    .unwrap()
                    .max(cycle.dprime),
                "circuit_bound",
            )
        }
        BoundInput::Chain {
            parts,
            contact_degrees,
        } => {
            nonempty(parts)?;
            if contact_degrees.len() + 1 != parts.len() {
                return Err(FormulaError::BadParams(format!(
                    "chain of {} parts needs {} interior contact degrees, got {}",
                    parts.len(),
                    parts.len() - 1,
                    contact_degrees.len()
                )));
            }
            let deg = contact_degrees.iter().copied().max().unwrap_or(0);
            (
                parts.iter().map(|p| p.d).max().unwrap().max(deg),
                parts.iter().map(|p| p.dprime).max().unwrap().max(deg),
                "chain_bound",
            )
        }
        BoundInput::Link { parts } => {
            nonempty(parts)?;
            (
                parts.iter().map(|p| p.d).max().unwrap(),
                parts.iter().map(|p| p.dprime).max().unwrap(),
                "link_bound",
            )
        }
    };
    Ok(FormulaResult {
        d,
        dprime,
        kind: BoundKind::UpperBound,
        source: source.into(),
    })
}
