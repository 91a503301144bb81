//! Matroids given by an explicit list of bases.

use std::collections::HashSet;

use crate::error::{MatroidError, Result};
use crate::matroid::{Family, IndependenceOracle, Matroid};
use crate::subset::{Subset, MAX_GROUND_SIZE};

/// A nonempty list of equal-size bases over `0..ground_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitBases {
    ground_size: usize,
    bases: Vec<Subset>,
}

impl ExplicitBases {
    /// Validates sizes, ranges and the basis exchange axiom. Duplicate bases
    /// are dropped; the first failing exchange is reported.
    pub fn new(ground_size: usize, bases: Vec<Subset>) -> Result<Self> {
        if ground_size > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge(ground_size));
        }
        let Some(first) = bases.first() else {
            return Err(MatroidError::FamilyPrecondition("no bases given".into()));
        };
        let rank = first.len();
        let ground = Subset::full(ground_size);
        let mut seen = HashSet::new();
        let mut unique = Vec::with_capacity(bases.len());
        for &b in &bases {
            if !b.is_subset_of(ground) {
                return Err(MatroidError::MalformedSubset {
                    subset: b,
                    ground_size,
                });
            }
            if b.len() != rank {
                return Err(MatroidError::FamilyPrecondition(format!(
                    "basis {b} has {} elements, expected {rank}",
                    b.len()
                )));
            }
            if seen.insert(b) {
                unique.push(b);
            }
        }
        for &b1 in &unique {
            for &b2 in &unique {
                for x in b1 - b2 {
                    let ok = (b2 - b1).iter().any(|y| seen.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Err(MatroidError::BasisExchange {
                            first: b1,
                            second: b2,
                            element: x,
                        });
                    }
                }
            }
        }
        Ok(ExplicitBases {
            ground_size,
            bases: unique,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }
}

#[derive(Debug)]
struct ExplicitOracle(ExplicitBases);

impl IndependenceOracle for ExplicitOracle {
    fn ground_size(&self) -> usize {
        self.0.ground_size
    }

    fn is_independent(&self, set: Subset) -> bool {
        self.0.bases.iter().any(|&b| set.is_subset_of(b))
    }

    fn rank(&self, set: Subset) -> usize {
        self.0.bases.iter().map(|&b| (set & b).len()).max().unwrap_or(0)
    }
}

/// Subsets of listed bases are independent.
pub fn explicit_matroid(bases: &ExplicitBases) -> Result<Matroid> {
    Matroid::from_oracle(ExplicitOracle(bases.clone()), Family::Explicit)
}

/// All bases of `matroid`, in canonical order.
pub fn bases_of(matroid: &Matroid) -> Vec<Subset> {
    let r = matroid.full_rank();
    matroid
        .ground()
        .subsets()
        .filter(|&s| s.len() == r && matroid.indep(s))
        .collect()
}
