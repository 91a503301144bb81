//! Closed formulas for `ar(M, t)` on structured families, and their
//! comparison with the flat formula and the brute force.

use std::fmt;

use crate::error::{MatroidError, Result};
use crate::families::{
    bicircular_matroid, complete_graph, cube_matroid, graphic_matroid, signed_complete_graph,
    signed_matroid, uniform_matroid, Field,
};
use crate::matroid::Matroid;
use crate::subset::MAX_GROUND_SIZE;

use super::{ar_bruteforce, ar_number, ArResult, MAX_BRUTE_FORCE_SIZE};

/// A family member with a known closed formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    /// Cycle matroid of `K_n`, `n ≥ 2`.
    GraphicComplete { n: usize },
    /// Bicircular matroid of `K_n`, `n ≥ 3`.
    BicircularComplete { n: usize },
    /// Signed-graphic matroid of `±K_n` (both signs on every edge), `n ≥ 3`.
    SignedComplete { n: usize },
    /// `U_{k,n}`, `1 ≤ k ≤ n`.
    Uniform { n: usize, k: usize },
    /// `T^d` with `T = {0, .., size-1}` over the smallest prime field with at
    /// least `size` elements, `d ≥ 3`.
    Cube { size: usize, d: usize },
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyParams::GraphicComplete { n } => write!(f, "graphic K_{n}"),
            FamilyParams::BicircularComplete { n } => write!(f, "bicircular K_{n}"),
            FamilyParams::SignedComplete { n } => write!(f, "signed ±K_{n}"),
            FamilyParams::Uniform { n, k } => write!(f, "uniform U_{{{k},{n}}}"),
            FamilyParams::Cube { size, d } => write!(f, "cube |T|={size} d={d}"),
        }
    }
}

impl FamilyParams {
    /// Number of elements of the instance, if it fits in 64 bits of
    /// arithmetic.
    pub fn ground_size(&self) -> Option<usize> {
        match *self {
            FamilyParams::GraphicComplete { n } | FamilyParams::BicircularComplete { n } => {
                n.checked_mul(n.checked_sub(1)?).map(|x| x / 2)
            }
            FamilyParams::SignedComplete { n } => n.checked_mul(n.checked_sub(1)?),
            FamilyParams::Uniform { n, .. } => Some(n),
            FamilyParams::Cube { size, d } => size.checked_pow(u32::try_from(d).ok()?),
        }
    }

    /// Range checks shared by [`closed_form`] and [`FamilyParams::build`].
    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(MatroidError::OutOfRange(msg));
        match *self {
            FamilyParams::GraphicComplete { n } if n < 2 => bad(format!("graphic K_n needs n >= 2, got {n}")),
            FamilyParams::BicircularComplete { n } if n < 3 => {
                bad(format!("bicircular K_n needs n >= 3, got {n}"))
            }
            FamilyParams::SignedComplete { n } if n < 3 => bad(format!("signed K_n needs n >= 3, got {n}")),
            FamilyParams::Uniform { n, k } if k < 1 || k > n => {
                bad(format!("uniform U_{{k,n}} needs 1 <= k <= n, got k = {k}, n = {n}"))
            }
            FamilyParams::Cube { size, d } if size < 2 || d < 3 => {
                bad(format!("cube needs |T| >= 2 and d >= 3, got |T| = {size}, d = {d}"))
            }
            _ => Ok(()),
        }
    }

    /// Builds the matroid. Fails when it would exceed 64 elements.
    pub fn build(&self) -> Result<Matroid> {
        self.check()?;
        match self.ground_size() {
            Some(size) if size <= MAX_GROUND_SIZE => {}
            other => return Err(MatroidError::GroundSetTooLarge(other.unwrap_or(usize::MAX))),
        }
        match *self {
            FamilyParams::GraphicComplete { n } => graphic_matroid(&complete_graph(n)),
            FamilyParams::BicircularComplete { n } => bicircular_matroid(&complete_graph(n)),
            FamilyParams::SignedComplete { n } => signed_matroid(&signed_complete_graph(n)),
            FamilyParams::Uniform { n, k } => uniform_matroid(k, n),
            FamilyParams::Cube { size, d } => {
                let values: Vec<i64> = (0..size as i64).collect();
                let p = smallest_prime_at_least(size as u64);
                cube_matroid(&values, d, Field::Prime(p))
            }
        }
    }
}

pub fn smallest_prime_at_least(n: u64) -> u64 {
    let is_prime = |p: u64| p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
    (n.max(2)..).find(|&p| is_prime(p)).expect("primes are unbounded")
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Evaluates the family's piecewise formula for `ar(M, t)`.
pub fn closed_form(params: FamilyParams, t: usize) -> Result<usize> {
    params.check()?;
    if t == 0 {
        return Err(MatroidError::OutOfRange("t must be at least 1".into()));
    }
    let value = match params {
        FamilyParams::GraphicComplete { n } => {
            if n < 2 * t {
                binom2(n)
            } else if n <= 2 * t + 1 {
                t * (n - 2)
            } else {
                binom2(n - 2) + t
            }
        }
        FamilyParams::BicircularComplete { n } => {
            if n <= 2 * t {
                binom2(n)
            } else if n <= 2 * t + 3 {
                t * (n - 1)
            } else {
                binom2(n - 2) + t
            }
        }
        FamilyParams::SignedComplete { n } => {
            if n <= t {
                2 * binom2(n)
            } else if n <= t + 3 {
                t * (n - 1)
            } else {
                2 * binom2(n - 2) + t
            }
        }
        FamilyParams::Uniform { n, k } => {
            if n < k * t {
                n
            } else {
                t * (k - 1)
            }
        }
        FamilyParams::Cube { size, d } => {
            let total = params
                .ground_size()
                .ok_or_else(|| MatroidError::OutOfRange(format!("|T|^d overflows for {params}")))?;
            let slice = total / (size * size);
            if t * d > total - 1 {
                total
            } else if t * (d - 2) <= slice - 1 {
                slice + t
            } else {
                1 + t * (d - 1)
            }
        }
    };
    Ok(value)
}

/// Side-by-side values from the closed formula, the flat formula and (for
/// at most 10 elements) the brute force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    pub params: FamilyParams,
    pub t: usize,
    pub ground_size: usize,
    pub closed_form: usize,
    pub formula: ArResult,
    pub brute_force: Option<usize>,
}

impl CrossReport {
    pub fn formula_agrees(&self) -> bool {
        self.closed_form == self.formula.value
    }

    /// `None` when the brute force was skipped.
    pub fn brute_force_agrees(&self) -> Option<bool> {
        self.brute_force.map(|b| b == self.formula.value)
    }

    pub fn all_agree(&self) -> bool {
        self.formula_agrees() && self.brute_force_agrees() != Some(false)
    }
}

pub fn cross_verify(params: FamilyParams, t: usize) -> Result<CrossReport> {
    let closed = closed_form(params, t)?;
    let matroid = params.build()?;
    let formula = ar_number(&matroid, t)?;
    let brute_force = if matroid.ground_size() <= MAX_BRUTE_FORCE_SIZE {
        Some(ar_bruteforce(&matroid, t)?)
    } else {
        None
    };
    Ok(CrossReport {
        params,
        t,
        ground_size: matroid.ground_size(),
        closed_form: closed,
        formula,
        brute_force,
    })
}
