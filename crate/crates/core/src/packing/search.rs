//! Complete backtracking search for families of disjoint bases under color
//! constraints.
//!
//! Bases are filled one at a time, elements in increasing index order. When
//! the bases are interchangeable (no seeds) they are generated in increasing
//! order of their minimum element, and elements below the previous minimum
//! are never offered to later bases. Before each new basis starts, a
//! counting bound is checked against every proper flat `F`: each remaining
//! basis needs at least `r(E) − r(F)` (or `r(E) − r(F ∪ I)` with a seed `I`)
//! rainbow elements outside `F`. The bound only ever rejects states with no
//! completion, so the search stays exhaustive.

use crate::coloring::Coloring;
use crate::error::{MatroidError, Result};
use crate::flats::{enumerate_flats, Flat};
use crate::matroid::Matroid;
use crate::subset::Subset;

use super::BasePacking;

/// Default node budget for witness searches.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_budget: u64,
    /// Use the flat counting bound at basis boundaries.
    pub flat_pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            flat_pruning: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ColorRule {
    /// Colors may not repeat inside a basis.
    PerBasis,
    /// Colors may not repeat anywhere in the new elements of all bases.
    Global,
}

/// A matroid prepared for repeated packing searches.
#[derive(Clone, Debug)]
pub struct PackingSearcher<'m> {
    matroid: &'m Matroid,
    rank: usize,
    /// Proper flats, used only for pruning.
    flats: Vec<Flat>,
    options: SearchOptions,
}

impl<'m> PackingSearcher<'m> {
    pub fn new(matroid: &'m Matroid, options: SearchOptions) -> Result<Self> {
        matroid.require_positive_rank()?;
        let flats = if options.flat_pruning {
            enumerate_flats(matroid, Some(matroid.full_rank() - 1))?
        } else {
            Vec::new()
        };
        Ok(PackingSearcher {
            matroid,
            rank: matroid.full_rank(),
            flats,
            options,
        })
    }

    /// Reuses an already enumerated flat list (any superset of the proper
    /// flats is fine).
    pub fn with_flats(matroid: &'m Matroid, flats: &[Flat], options: SearchOptions) -> Result<Self> {
        matroid.require_positive_rank()?;
        let rank = matroid.full_rank();
        let flats = if options.flat_pruning {
            flats.iter().copied().filter(|f| f.rank < rank).collect()
        } else {
            Vec::new()
        };
        Ok(PackingSearcher {
            matroid,
            rank,
            flats,
            options,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        self.matroid
    }

    /// `t` pairwise disjoint bases, each rainbow under `coloring`.
    pub fn rainbow_bases(&self, coloring: &Coloring, t: usize) -> Result<Option<BasePacking>> {
        coloring.check_matches(self.matroid)?;
        let seeds = vec![Subset::EMPTY; t];
        self.run(coloring, &seeds, ColorRule::PerBasis, self.matroid.ground())
    }

    /// `t` pairwise disjoint bases, ignoring colors.
    pub fn disjoint_bases(&self, t: usize) -> Result<Option<BasePacking>> {
        let rainbow = Coloring::rainbow(self.matroid.ground_size())?;
        self.rainbow_bases(&rainbow, t)
    }

    /// `t` bases in which no color is used twice overall.
    pub fn color_disjoint_bases(&self, coloring: &Coloring, t: usize) -> Result<Option<BasePacking>> {
        coloring.check_matches(self.matroid)?;
        let seeds = vec![Subset::EMPTY; t];
        self.run(coloring, &seeds, ColorRule::Global, self.matroid.ground())
    }

    /// Extends each seed to a basis using only elements whose colors are
    /// absent from every seed, each such color at most once overall. Seeds
    /// are assumed valid (see [`super::validate_seeds`]).
    pub fn extend_seeds(&self, coloring: &Coloring, seeds: &[Subset]) -> Result<Option<BasePacking>> {
        coloring.check_matches(self.matroid)?;
        let seeded = seeds.iter().fold(Subset::EMPTY, |acc, &s| acc | s);
        let seed_colors = coloring.colors_in(seeded);
        let allowed = self.matroid.ground() - coloring.elements_with_colors(seed_colors);
        self.run(coloring, seeds, ColorRule::Global, allowed)
    }

    fn run(
        &self,
        coloring: &Coloring,
        seeds: &[Subset],
        rule: ColorRule,
        allowed: Subset,
    ) -> Result<Option<BasePacking>> {
        if seeds.is_empty() {
            return Err(MatroidError::OutOfRange("t must be at least 1".into()));
        }
        let symmetric = seeds.iter().all(|s| s.is_empty());
        let need = seeds
            .iter()
            .map(|&seed| {
                self.flats
                    .iter()
                    .map(|f| self.rank - self.matroid.rank_of(f.elements | seed))
                    .collect()
            })
            .collect();
        let mut run = Run {
            searcher: self,
            coloring,
            rule,
            seeds,
            symmetric,
            allowed,
            need,
            nodes: 0,
            bases: Vec::with_capacity(seeds.len()),
        };
        if run.fill(0, Subset::EMPTY, 0, 0)? {
            Ok(Some(BasePacking {
                bases: run.bases,
            }))
        } else {
            Ok(None)
        }
    }
}

struct Run<'a, 'm> {
    searcher: &'a PackingSearcher<'m>,
    coloring: &'a Coloring,
    rule: ColorRule,
    seeds: &'a [Subset],
    symmetric: bool,
    allowed: Subset,
    /// `need[j][f] = r(E) − r(F_f ∪ seed_j)`
    need: Vec<Vec<usize>>,
    nodes: u64,
    bases: Vec<Subset>,
}

impl Run<'_, '_> {
    fn t(&self) -> usize {
        self.seeds.len()
    }

    fn ground_size(&self) -> usize {
        self.searcher.matroid.ground_size()
    }

    /// Starts basis `i`. `global` holds the colors already spent under the
    /// global rule; `floor` is the smallest index later bases may use.
    fn fill(&mut self, i: usize, used: Subset, global: u64, floor: usize) -> Result<bool> {
        if i == self.t() {
            return Ok(true);
        }
        let mut avail = self.allowed - used;
        if self.symmetric {
            avail &= Subset::at_least(floor, self.ground_size());
        }
        if self.rule == ColorRule::Global {
            avail -= self.coloring.elements_with_colors(global);
        }
        if !self.bound_holds(i, avail) {
            return Ok(false);
        }
        let blocked = match self.rule {
            ColorRule::PerBasis => 0,
            ColorRule::Global => global,
        };
        let cursor = if self.symmetric { floor } else { 0 };
        self.extend(i, self.seeds[i], cursor, used, blocked)
    }

    fn extend(&mut self, i: usize, basis: Subset, cursor: usize, used: Subset, blocked: u64) -> Result<bool> {
        self.nodes += 1;
        let budget = self.searcher.options.node_budget;
        if self.nodes > budget {
            return Err(MatroidError::SearchBudgetExceeded { budget });
        }
        let rank = self.searcher.rank;
        let matroid = self.searcher.matroid;
        if basis.len() == rank {
            self.bases.push(basis);
            let global = match self.rule {
                ColorRule::PerBasis => 0,
                ColorRule::Global => blocked,
            };
            let floor = (basis - self.seeds[i]).min().map_or(0, |m| m + 1);
            if self.fill(i + 1, used | basis, global, floor)? {
                return Ok(true);
            }
            self.bases.pop();
            return Ok(false);
        }

        let candidates = ((self.allowed - used - basis) & Subset::at_least(cursor, self.ground_size()))
            - self.coloring.elements_with_colors(blocked);
        let missing = rank - basis.len();
        if (self.coloring.colors_in(candidates).count_ones() as usize) < missing
            || matroid.rank_of(basis | candidates) < rank
        {
            return Ok(false);
        }
        for x in candidates {
            let grown = basis.with(x);
            if !matroid.indep(grown) {
                continue;
            }
            let color = 1u64 << self.coloring.color(x);
            if self.extend(i, grown, x + 1, used, blocked | color)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Counting bound for bases `i..t` drawing new elements from `avail`.
    fn bound_holds(&self, i: usize, avail: Subset) -> bool {
        let remaining = self.t() - i;
        let rank = self.searcher.rank;
        for (f, flat) in self.searcher.flats.iter().enumerate() {
            let outside = avail - flat.elements;
            match self.rule {
                ColorRule::PerBasis => {
                    let supply: usize = self
                        .coloring
                        .classes()
                        .iter()
                        .map(|&class| (class & outside).len().min(remaining))
                        .sum();
                    if supply < remaining * (rank - flat.rank) {
                        return false;
                    }
                }
                ColorRule::Global => {
                    let supply = self.coloring.color_count(outside);
                    let demand: usize = self.need[i..].iter().map(|n| n[f]).sum();
                    if supply < demand {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Convenience wrapper: `t` pairwise disjoint rainbow bases, or `None` when
/// none exist.
pub fn find_rainbow_bases(matroid: &Matroid, coloring: &Coloring, t: usize) -> Result<Option<BasePacking>> {
    find_rainbow_bases_with(matroid, coloring, t, SearchOptions::default())
}

pub fn find_rainbow_bases_with(
    matroid: &Matroid,
    coloring: &Coloring,
    t: usize,
    options: SearchOptions,
) -> Result<Option<BasePacking>> {
    PackingSearcher::new(matroid, options)?.rainbow_bases(coloring, t)
}
