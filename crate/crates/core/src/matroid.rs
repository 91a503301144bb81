//! Oracle-based matroid kernel: independence, rank, closure and flats.

use std::fmt;
use std::sync::Arc;

use crate::error::{MatroidError, Result};
use crate::subset::{ElementId, Subset, MAX_GROUND_SIZE};

/// An exact independence predicate over a ground set of at most 64 elements.
///
/// Implementors only have to decide independence; `rank` and `closure`
/// default to greedy growth in index order, which is correct for any
/// predicate satisfying the independence axioms. Families with a cheaper
/// combinatorial rank formula override them.
pub trait IndependenceOracle: Send + Sync + fmt::Debug {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, set: Subset) -> bool;

    fn rank(&self, set: Subset) -> usize {
        greedy_rank(self, set)
    }

    fn closure(&self, set: Subset) -> Subset {
        let basis = greedy_basis_of(self, set);
        let mut closed = set;
        for x in set.complement(self.ground_size()) {
            if !self.is_independent(basis.with(x)) {
                closed.insert(x);
            }
        }
        closed
    }
}

/// Greedy maximal independent subset of `set`, scanning in index order.
pub fn greedy_basis_of<O: IndependenceOracle + ?Sized>(oracle: &O, set: Subset) -> Subset {
    let mut basis = Subset::EMPTY;
    for e in set {
        let grown = basis.with(e);
        if oracle.is_independent(grown) {
            basis = grown;
        }
    }
    basis
}

/// Rank by greedy growth; valid for every matroid by the exchange axiom.
pub fn greedy_rank<O: IndependenceOracle + ?Sized>(oracle: &O, set: Subset) -> usize {
    greedy_basis_of(oracle, set).len()
}

/// The constructor a matroid came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Uniform,
    Graphic,
    Bicircular,
    Cographic,
    Signed,
    Transversal,
    Linear,
    Cube,
    Explicit,
    Relabeled,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Uniform => "uniform",
            Family::Graphic => "graphic",
            Family::Bicircular => "bicircular",
            Family::Cographic => "cographic",
            Family::Signed => "signed",
            Family::Transversal => "transversal",
            Family::Linear => "linear",
            Family::Cube => "cube",
            Family::Explicit => "explicit",
            Family::Relabeled => "relabeled",
            Family::Custom => "custom",
        };
        f.write_str(name)
    }
}

/// An immutable matroid instance. Cloning is cheap and instances can be
/// shared across threads.
#[derive(Clone)]
pub struct Matroid {
    oracle: Arc<dyn IndependenceOracle>,
    family: Family,
    ground_size: usize,
    full_rank: usize,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("family", &self.family)
            .field("ground_size", &self.ground_size)
            .field("rank", &self.full_rank)
            .finish()
    }
}

impl Matroid {
    pub fn from_oracle<O: IndependenceOracle + 'static>(oracle: O, family: Family) -> Result<Self> {
        Self::from_arc(Arc::new(oracle), family)
    }

    pub(crate) fn from_arc(oracle: Arc<dyn IndependenceOracle>, family: Family) -> Result<Self> {
        let ground_size = oracle.ground_size();
        if ground_size > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge(ground_size));
        }
        if !oracle.is_independent(Subset::EMPTY) {
            return Err(MatroidError::Contract("the empty set must be independent".into()));
        }
        let full_rank = oracle.rank(Subset::full(ground_size));
        Ok(Matroid {
            oracle,
            family,
            ground_size,
            full_rank,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// The whole ground set `E`.
    pub fn ground(&self) -> Subset {
        Subset::full(self.ground_size)
    }

    /// `r(E)`.
    pub fn full_rank(&self) -> usize {
        self.full_rank
    }

    pub fn oracle(&self) -> &dyn IndependenceOracle {
        self.oracle.as_ref()
    }

    /// Rejects subsets with bits at or above `|E|`.
    pub fn check_subset(&self, set: Subset) -> Result<()> {
        if set.is_subset_of(self.ground()) {
            Ok(())
        } else {
            Err(MatroidError::MalformedSubset {
                subset: set,
                ground_size: self.ground_size,
            })
        }
    }

    /// Builds a subset from element indices, rejecting out-of-range ones.
    pub fn subset(&self, elements: &[ElementId]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for &e in elements {
            if e >= self.ground_size {
                return Err(MatroidError::ElementOutOfRange {
                    element: e,
                    ground_size: self.ground_size,
                });
            }
            s.insert(e);
        }
        Ok(s)
    }

    pub fn is_independent(&self, set: Subset) -> Result<bool> {
        self.check_subset(set)?;
        Ok(self.indep(set))
    }

    pub fn rank(&self, set: Subset) -> Result<usize> {
        self.check_subset(set)?;
        Ok(self.rank_of(set))
    }

    /// `cl(S) = {x : r(S + x) = r(S)}`.
    pub fn closure(&self, set: Subset) -> Result<Subset> {
        self.check_subset(set)?;
        Ok(self.cl(set))
    }

    pub fn is_flat(&self, set: Subset) -> Result<bool> {
        self.check_subset(set)?;
        Ok(self.cl(set) == set)
    }

    /// Inclusion-maximal independent subset of `set \ forbidden`, grown in
    /// index order.
    pub fn greedy_basis(&self, set: Subset, forbidden: Subset) -> Result<Subset> {
        self.check_subset(set)?;
        self.check_subset(forbidden)?;
        Ok(greedy_basis_of(self.oracle.as_ref(), set - forbidden))
    }

    /// The rank-0 elements `M₀`, equal to `cl(∅)`.
    pub fn loops(&self) -> Subset {
        self.cl(Subset::EMPTY)
    }

    /// Is `set` a basis (independent with `r(E)` elements)?
    pub fn is_basis(&self, set: Subset) -> Result<bool> {
        Ok(set.len() == self.full_rank && self.is_independent(set)?)
    }

    /// A copy whose element `i` is element `perm[i]` of `self`.
    pub fn relabel(&self, perm: &[ElementId]) -> Result<Matroid> {
        let n = self.ground_size;
        let mut seen = Subset::EMPTY;
        if perm.len() != n {
            return Err(MatroidError::Contract(format!(
                "permutation has {} entries for a ground set of {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(MatroidError::Contract(format!("{perm:?} is not a permutation")));
            }
            seen.insert(p);
        }
        let oracle = Relabeled {
            inner: Arc::clone(&self.oracle),
            perm: perm.to_vec(),
        };
        Matroid::from_oracle(oracle, Family::Relabeled)
    }

    #[inline]
    pub(crate) fn indep(&self, set: Subset) -> bool {
        self.oracle.is_independent(set)
    }

    #[inline]
    pub(crate) fn rank_of(&self, set: Subset) -> usize {
        self.oracle.rank(set)
    }

    #[inline]
    pub(crate) fn cl(&self, set: Subset) -> Subset {
        self.oracle.closure(set)
    }

    /// Contract check shared by all anti-Ramsey and packing entry points.
    pub(crate) fn require_positive_rank(&self) -> Result<()> {
        if self.full_rank == 0 {
            Err(MatroidError::RankZero)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug)]
struct Relabeled {
    inner: Arc<dyn IndependenceOracle>,
    perm: Vec<ElementId>,
}

impl Relabeled {
    fn map(&self, set: Subset) -> Subset {
        set.iter().map(|e| self.perm[e]).collect()
    }
}

impl IndependenceOracle for Relabeled {
    fn ground_size(&self) -> usize {
        self.perm.len()
    }

    fn is_independent(&self, set: Subset) -> bool {
        self.inner.is_independent(self.map(set))
    }

    fn rank(&self, set: Subset) -> usize {
        self.inner.rank(self.map(set))
    }
}
