//! Transversal matroids via augmenting-path bipartite matching.

use crate::error::{MatroidError, Result};
use crate::matroid::{Family, IndependenceOracle, Matroid};
use crate::subset::{ElementId, Subset, MAX_GROUND_SIZE};

/// A finite family of subsets `A_j` of `E = {0, .., universe_size-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe_size: usize,
    sets: Vec<Subset>,
}

impl SetFamily {
    /// Every element of the universe must lie in some set.
    pub fn new(universe_size: usize, sets: Vec<Subset>) -> Result<Self> {
        if universe_size > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge(universe_size));
        }
        if sets.is_empty() {
            return Err(MatroidError::FamilyPrecondition("set family is empty".into()));
        }
        let universe = Subset::full(universe_size);
        let mut covered = Subset::EMPTY;
        for (j, &a) in sets.iter().enumerate() {
            if !a.is_subset_of(universe) {
                return Err(MatroidError::FamilyPrecondition(format!(
                    "set {j} = {a} is not inside 0..{universe_size}"
                )));
            }
            covered |= a;
        }
        if covered != universe {
            return Err(MatroidError::FamilyPrecondition(format!(
                "elements {} lie in no set",
                universe - covered
            )));
        }
        Ok(SetFamily {
            universe_size,
            sets,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// Size of a maximum matching of the elements of `set` into the family.
    pub fn max_matching(&self, set: Subset) -> usize {
        let mut owner: Vec<Option<ElementId>> = vec![None; self.sets.len()];
        let mut size = 0;
        for x in set {
            let mut visited = vec![false; self.sets.len()];
            if self.augment(x, &mut owner, &mut visited) {
                size += 1;
            }
        }
        size
    }

    fn augment(&self, x: ElementId, owner: &mut [Option<ElementId>], visited: &mut [bool]) -> bool {
        for j in 0..self.sets.len() {
            if visited[j] || !self.sets[j].contains(x) {
                continue;
            }
            visited[j] = true;
            let free = match owner[j] {
                None => true,
                Some(y) => self.augment(y, owner, visited),
            };
            if free {
                owner[j] = Some(x);
                return true;
            }
        }
        false
    }
}

#[derive(Debug)]
struct TransversalOracle(SetFamily);

impl IndependenceOracle for TransversalOracle {
    fn ground_size(&self) -> usize {
        self.0.universe_size
    }

    fn is_independent(&self, set: Subset) -> bool {
        set.len() <= self.0.sets.len() && self.0.max_matching(set) == set.len()
    }

    fn rank(&self, set: Subset) -> usize {
        self.0.max_matching(set)
    }
}

/// Partial transversals of `family` are independent.
pub fn transversal_matroid(family: &SetFamily) -> Result<Matroid> {
    Matroid::from_oracle(TransversalOracle(family.clone()), Family::Transversal)
}
