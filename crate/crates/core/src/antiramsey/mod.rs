//! Anti-Ramsey numbers for pairwise disjoint rainbow bases.
//!
//! `ar(M, t)` is the largest number of colors in a coloring of `E` that
//! admits no `t` pairwise disjoint rainbow bases. [`ar_number`] evaluates it
//! from the flats of `M`; [`ar_bruteforce`] checks it against every set
//! partition of a small ground set; [`closed_form`] evaluates the known
//! formulas for complete graphs, uniform matroids and cubes.

mod brute;
mod closed_form;

pub use brute::{ar_bruteforce, ar_bruteforce_with, avoiding_partition, MAX_BRUTE_FORCE_SIZE};
pub use closed_form::{closed_form, cross_verify, smallest_prime_at_least, CrossReport, FamilyParams};

use std::fmt;

use crate::coloring::Coloring;
use crate::error::{MatroidError, Result};
use crate::flats::{enumerate_flats, Flat};
use crate::matroid::Matroid;
use crate::packing::{PackingSearcher, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArBranch {
    /// Some flat rules out `t` disjoint bases, so every coloring works.
    Degenerate,
    /// Maximum of `|F| + t(r(E) − r(F) − 1)` over flats of rank at most
    /// `r(E) − 2`.
    Formula,
    /// Rank 1 with fewer than `|M₀| + t` elements.
    Rank1Degenerate,
    /// Rank 1, value `|M₀| + t − 1`.
    Rank1Formula,
}

impl fmt::Display for ArBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArBranch::Degenerate => "degenerate",
            ArBranch::Formula => "formula",
            ArBranch::Rank1Degenerate => "rank1-degenerate",
            ArBranch::Rank1Formula => "rank1-formula",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArResult {
    pub value: usize,
    pub branch: ArBranch,
    /// First maximizing flat, on the formula branch.
    pub argmax_flat: Option<Flat>,
    /// First flat with `|E| − |F| < t(r(E) − r(F))`, on the degenerate branch.
    pub degenerate_flat: Option<Flat>,
}

pub fn ar_number(matroid: &Matroid, t: usize) -> Result<ArResult> {
    matroid.require_positive_rank()?;
    require_t(t)?;
    let n = matroid.ground_size();
    let r = matroid.full_rank();
    if r == 1 {
        let loops = matroid.loops().len();
        let (value, branch) = if n < loops + t {
            (n, ArBranch::Rank1Degenerate)
        } else {
            (loops + t - 1, ArBranch::Rank1Formula)
        };
        return Ok(ArResult {
            value,
            branch,
            argmax_flat: None,
            degenerate_flat: None,
        });
    }

    let flats = enumerate_flats(matroid, None)?;
    if let Some(f) = flats.iter().find(|f| n - f.len() < t * (r - f.rank)) {
        return Ok(ArResult {
            value: n,
            branch: ArBranch::Degenerate,
            argmax_flat: None,
            degenerate_flat: Some(*f),
        });
    }
    let mut best: Option<(usize, Flat)> = None;
    for f in flats.iter().filter(|f| f.rank + 2 <= r) {
        let value = f.len() + t * (r - f.rank - 1);
        if best.map_or(true, |(v, _)| value > v) {
            best = Some((value, *f));
        }
    }
    let (value, flat) = best.expect("rank >= 2 leaves the loop flat below r(E) - 1");
    Ok(ArResult {
        value,
        branch: ArBranch::Formula,
        argmax_flat: Some(flat),
        degenerate_flat: None,
    })
}

/// The rank-2 case split on loops and parallel classes. Agrees with
/// [`ar_number`].
pub fn ar_rank2_special(matroid: &Matroid, t: usize) -> Result<usize> {
    if matroid.full_rank() != 2 {
        return Err(MatroidError::OutOfRange(format!(
            "rank-2 evaluation needs rank 2, got {}",
            matroid.full_rank()
        )));
    }
    require_t(t)?;
    let n = matroid.ground_size();
    let loops = matroid.loops();
    let biggest_class = (matroid.ground() - loops)
        .iter()
        .map(|x| matroid.cl(loops.with(x)).len())
        .max()
        .unwrap_or(0);
    if n < loops.len() + 2 * t || n < biggest_class + t {
        Ok(n)
    } else {
        Ok(loops.len() + t)
    }
}

/// A coloring that attains `ar(M, t)` colors without `t` disjoint rainbow
/// bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalColoring {
    pub coloring: Coloring,
    /// The flat the construction starts from.
    pub flat_used: Option<Flat>,
    /// The canonical id of the color shared by the leftover elements, when
    /// `t ≥ 2`.
    pub shared_color: Option<usize>,
}

pub fn extremal_coloring(matroid: &Matroid, t: usize) -> Result<ExtremalColoring> {
    extremal_coloring_with(matroid, t, SearchOptions::default())
}

/// Builds the extremal coloring and confirms with a complete search that it
/// has no `t` disjoint rainbow bases.
pub fn extremal_coloring_with(matroid: &Matroid, t: usize, options: SearchOptions) -> Result<ExtremalColoring> {
    let ar = ar_number(matroid, t)?;
    let n = matroid.ground_size();
    let r = matroid.full_rank();
    let extremal = match ar.branch {
        ArBranch::Degenerate | ArBranch::Rank1Degenerate => ExtremalColoring {
            coloring: Coloring::rainbow(n)?,
            flat_used: ar.degenerate_flat,
            shared_color: None,
        },
        ArBranch::Rank1Formula => {
            return Err(MatroidError::Contract(
                "no extremal construction for rank 1 once t disjoint bases exist".into(),
            ))
        }
        ArBranch::Formula => {
            let flat = ar.argmax_flat.expect("formula branch reports its flat");
            let mut labels = vec![0usize; n];
            let mut next = 0;
            for e in flat.elements {
                labels[e] = next;
                next += 1;
            }
            let outside = flat.elements.complement(n).to_vec();
            let gap = r - flat.rank - 1;
            let mut shared = None;
            if t == 1 {
                for (i, &e) in outside.iter().enumerate() {
                    labels[e] = next + i % gap;
                }
            } else {
                let fresh = t * gap - 1;
                for (i, &e) in outside.iter().enumerate() {
                    labels[e] = next + i.min(fresh);
                }
                shared = outside.get(fresh).copied();
            }
            let coloring = Coloring::from_labels(&labels)?;
            let shared_color = shared.map(|e| coloring.color(e));
            ExtremalColoring {
                coloring,
                flat_used: Some(flat),
                shared_color,
            }
        }
    };
    if extremal.coloring.num_colors() != ar.value {
        return Err(MatroidError::Contract(format!(
            "extremal coloring has {} colors, expected {}",
            extremal.coloring.num_colors(),
            ar.value
        )));
    }
    let searcher = PackingSearcher::new(matroid, options)?;
    if let Some(p) = searcher.rainbow_bases(&extremal.coloring, t)? {
        return Err(MatroidError::Contract(format!(
            "extremal coloring admits disjoint rainbow bases {:?}",
            p.bases
        )));
    }
    Ok(extremal)
}

fn require_t(t: usize) -> Result<()> {
    if t == 0 {
        Err(MatroidError::OutOfRange("t must be at least 1".into()))
    } else {
        Ok(())
    }
}
