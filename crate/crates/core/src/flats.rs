//! Flat enumeration.
//!
//! Flats are generated level by level: every flat of rank `k + 1` is the
//! closure of `F + x` for some flat `F` of rank `k` and some `x ∉ F`, so
//! closing the covers of each known flat reaches all of them. Elements that
//! land in the same cover are skipped, so each cover is closed once per
//! parent.

use std::collections::HashSet;

use crate::error::{MatroidError, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Default cap on closure computations during enumeration.
pub const DEFAULT_FLAT_BUDGET: u64 = 10_000_000;

/// A closed set together with its rank.
///
/// Ordered by `(rank, elements)`, the canonical order used for every
/// tie-break in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    pub rank: usize,
    pub elements: Subset,
}

impl Flat {
    /// Wraps `set` after checking that it is closed.
    pub fn new(matroid: &Matroid, set: Subset) -> Result<Flat> {
        if !matroid.is_flat(set)? {
            return Err(MatroidError::Contract(format!("{set} is not a flat")));
        }
        Ok(Flat {
            rank: matroid.rank_of(set),
            elements: set,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// All flats of rank at most `max_rank` (default: every flat), sorted by
/// `(rank, subset)`.
pub fn enumerate_flats(matroid: &Matroid, max_rank: Option<usize>) -> Result<Vec<Flat>> {
    enumerate_flats_with_budget(matroid, max_rank, DEFAULT_FLAT_BUDGET)
}

pub fn enumerate_flats_with_budget(
    matroid: &Matroid,
    max_rank: Option<usize>,
    budget: u64,
) -> Result<Vec<Flat>> {
    let top = max_rank.map_or(matroid.full_rank(), |r| r.min(matroid.full_rank()));
    let ground = matroid.ground();
    let mut closures = 1u64;
    let mut level = vec![matroid.loops()];
    let mut flats: Vec<Flat> = level
        .iter()
        .map(|&elements| Flat { rank: 0, elements })
        .collect();

    for rank in 1..=top {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for &parent in &level {
            let mut rest = ground - parent;
            while let Some(x) = rest.min() {
                if closures >= budget {
                    return Err(MatroidError::FlatBudgetExceeded {
                        budget,
                        reached: closures,
                    });
                }
                closures += 1;
                let cover = matroid.cl(parent.with(x));
                rest -= cover;
                if seen.insert(cover) {
                    next.push(cover);
                }
            }
        }
        next.sort_unstable();
        flats.extend(next.iter().map(|&elements| Flat { rank, elements }));
        level = next;
    }
    Ok(flats)
}
