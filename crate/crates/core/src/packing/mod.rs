//! Base-packing certificates.
//!
//! Each decision is made by scanning all flats for a violated counting
//! inequality, so a negative answer always comes with the flat that proves
//! it. A positive answer is backed by an explicit witness found by
//! [`PackingSearcher`].

mod search;

pub use search::{
    find_rainbow_bases, find_rainbow_bases_with, PackingSearcher, SearchOptions, DEFAULT_NODE_BUDGET,
};

use crate::coloring::Coloring;
use crate::error::{MatroidError, Result};
use crate::flats::{enumerate_flats, Flat};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// `t` bases of a matroid, in the order they were found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePacking {
    pub bases: Vec<Subset>,
}

impl BasePacking {
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// Pairwise disjoint bases of `matroid`.
    pub fn is_valid(&self, matroid: &Matroid) -> bool {
        let mut seen = Subset::EMPTY;
        for &b in &self.bases {
            if !b.is_disjoint(seen) || matroid.is_basis(b) != Ok(true) {
                return false;
            }
            seen |= b;
        }
        true
    }

    /// Valid, and every basis is rainbow.
    pub fn is_valid_rainbow(&self, matroid: &Matroid, coloring: &Coloring) -> bool {
        self.is_valid(matroid) && self.bases.iter().all(|&b| coloring.is_rainbow(b))
    }

    /// Valid, and no color appears twice in the union of the bases.
    pub fn is_valid_color_disjoint(&self, matroid: &Matroid, coloring: &Coloring) -> bool {
        let all = self.bases.iter().fold(Subset::EMPTY, |acc, &b| acc | b);
        self.is_valid(matroid) && coloring.is_rainbow(all)
    }

    /// Valid, basis `i` contains seed `i`, and the added elements carry
    /// distinct colors that no seed uses.
    pub fn is_valid_extension(&self, matroid: &Matroid, coloring: &Coloring, seeds: &[Subset]) -> bool {
        if self.bases.len() != seeds.len() || !self.is_valid(matroid) {
            return false;
        }
        let mut added = Subset::EMPTY;
        let mut seeded = Subset::EMPTY;
        for (&b, &s) in self.bases.iter().zip(seeds) {
            if !s.is_subset_of(b) {
                return false;
            }
            added |= b - s;
            seeded |= s;
        }
        coloring.is_rainbow(added) && coloring.colors_in(added) & coloring.colors_in(seeded) == 0
    }
}

/// A flat together with the two sides of the inequality it violates
/// (`lhs < rhs`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatViolation {
    pub flat: Flat,
    pub lhs: usize,
    pub rhs: usize,
}

/// What is known about a witness once the flat condition holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Found(BasePacking),
    /// The node budget ran out before a witness was built. The verdict of
    /// the flat condition still stands.
    BudgetExceeded { budget: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingCertificate {
    Feasible(Witness),
    Infeasible(FlatViolation),
}

impl PackingCertificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, PackingCertificate::Feasible(_))
    }

    pub fn witness(&self) -> Option<&BasePacking> {
        match self {
            PackingCertificate::Feasible(Witness::Found(p)) => Some(p),
            _ => None,
        }
    }

    pub fn violation(&self) -> Option<&FlatViolation> {
        match self {
            PackingCertificate::Infeasible(v) => Some(v),
            _ => None,
        }
    }
}

/// Rank of the union of `t` copies of the matroid:
/// `min over flats F of |E∖F| + t·r(F)`.
pub fn union_rank(matroid: &Matroid, t: usize) -> Result<usize> {
    matroid.require_positive_rank()?;
    require_t(t)?;
    let n = matroid.ground_size();
    let flats = enumerate_flats(matroid, None)?;
    Ok(flats
        .iter()
        .map(|f| n - f.len() + t * f.rank)
        .min()
        .expect("the closure of the empty set is always a flat"))
}

/// `t` pairwise disjoint bases exist iff `|E∖F| ≥ t(r(E) − r(F))` for every
/// flat `F`.
pub fn has_disjoint_bases(matroid: &Matroid, t: usize) -> Result<PackingCertificate> {
    has_disjoint_bases_with(matroid, t, SearchOptions::default())
}

pub fn has_disjoint_bases_with(matroid: &Matroid, t: usize, options: SearchOptions) -> Result<PackingCertificate> {
    matroid.require_positive_rank()?;
    require_t(t)?;
    let flats = enumerate_flats(matroid, None)?;
    let r = matroid.full_rank();
    let n = matroid.ground_size();
    let violation = first_violation(&flats, |f| (n - f.len(), t * (r - f.rank)));
    certify(violation, || {
        let searcher = PackingSearcher::with_flats(matroid, &flats, options)?;
        let found = searcher.disjoint_bases(t)?;
        Ok(found.filter(|p| p.len() == t && p.is_valid(matroid)))
    })
}

/// `t` bases with no color repeated anywhere exist iff
/// `|c(E∖F)| ≥ t(r(E) − r(F))` for every flat `F`.
pub fn has_color_disjoint_bases(matroid: &Matroid, coloring: &Coloring, t: usize) -> Result<PackingCertificate> {
    has_color_disjoint_bases_with(matroid, coloring, t, SearchOptions::default())
}

pub fn has_color_disjoint_bases_with(
    matroid: &Matroid,
    coloring: &Coloring,
    t: usize,
    options: SearchOptions,
) -> Result<PackingCertificate> {
    matroid.require_positive_rank()?;
    coloring.check_matches(matroid)?;
    require_t(t)?;
    let flats = enumerate_flats(matroid, None)?;
    let r = matroid.full_rank();
    let n = matroid.ground_size();
    let violation = first_violation(&flats, |f| {
        (coloring.color_count(f.elements.complement(n)), t * (r - f.rank))
    });
    certify(violation, || {
        let searcher = PackingSearcher::with_flats(matroid, &flats, options)?;
        let found = searcher.color_disjoint_bases(coloring, t)?;
        Ok(found.filter(|p| p.len() == t && p.is_valid_color_disjoint(matroid, coloring)))
    })
}

/// Checks that the seeds are pairwise disjoint independent sets whose
/// union is rainbow.
pub fn validate_seeds(matroid: &Matroid, coloring: &Coloring, seeds: &[Subset]) -> Result<()> {
    coloring.check_matches(matroid)?;
    require_t(seeds.len())?;
    let mut seen = Subset::EMPTY;
    for (i, &s) in seeds.iter().enumerate() {
        if !matroid.is_independent(s)? {
            return Err(MatroidError::Contract(format!("seed {i} = {s} is dependent")));
        }
        if !s.is_disjoint(seen) {
            return Err(MatroidError::Contract(format!(
                "seed {i} = {s} meets an earlier seed"
            )));
        }
        seen |= s;
    }
    if !coloring.is_rainbow(seen) {
        return Err(MatroidError::Contract(
            "seeds repeat a color, within one seed or across seeds".into(),
        ));
    }
    Ok(())
}

/// Can every seed `I_i` be extended to a basis, with the added elements
/// carrying distinct colors that no seed uses, and all bases disjoint?
///
/// Exactly when every flat `F` satisfies
/// `|c(E∖F) ∖ c(∪I)| ≥ Σ_i (r(E) − r(F ∪ I_i))`. The reported violation
/// uses these two sides.
pub fn extension_feasible(matroid: &Matroid, coloring: &Coloring, seeds: &[Subset]) -> Result<PackingCertificate> {
    extension_feasible_with(matroid, coloring, seeds, SearchOptions::default())
}

pub fn extension_feasible_with(
    matroid: &Matroid,
    coloring: &Coloring,
    seeds: &[Subset],
    options: SearchOptions,
) -> Result<PackingCertificate> {
    matroid.require_positive_rank()?;
    validate_seeds(matroid, coloring, seeds)?;
    let flats = enumerate_flats(matroid, None)?;
    let r = matroid.full_rank();
    let n = matroid.ground_size();
    let seed_colors = coloring.colors_in(seeds.iter().fold(Subset::EMPTY, |acc, &s| acc | s));
    let violation = first_violation(&flats, |f| {
        let fresh = coloring.colors_in(f.elements.complement(n)) & !seed_colors;
        let need = seeds.iter().map(|&s| r - matroid.rank_of(f.elements | s)).sum();
        (fresh.count_ones() as usize, need)
    });
    certify(violation, || {
        let searcher = PackingSearcher::with_flats(matroid, &flats, options)?;
        let found = searcher.extend_seeds(coloring, seeds)?;
        Ok(found.filter(|p| p.is_valid_extension(matroid, coloring, seeds)))
    })
}

/// The weaker counting condition that credits each seed with its elements
/// outside `F`: `|c(E∖F) ∖ c(∪I)| + Σ_i |I_i ∖ F| ≥ t(r(E) − r(F))`.
///
/// Every extendable seed family satisfies it, but it does not imply
/// extendability once a seed spans more than `F` can absorb, so
/// [`extension_feasible`] does not decide by it. Returns the first violated
/// flat, if any.
pub fn credited_extension_violation(
    matroid: &Matroid,
    coloring: &Coloring,
    seeds: &[Subset],
) -> Result<Option<FlatViolation>> {
    matroid.require_positive_rank()?;
    validate_seeds(matroid, coloring, seeds)?;
    let flats = enumerate_flats(matroid, None)?;
    let r = matroid.full_rank();
    let n = matroid.ground_size();
    let t = seeds.len();
    let seed_colors = coloring.colors_in(seeds.iter().fold(Subset::EMPTY, |acc, &s| acc | s));
    Ok(first_violation(&flats, |f| {
        let fresh = coloring.colors_in(f.elements.complement(n)) & !seed_colors;
        let credit: usize = seeds.iter().map(|&s| (s - f.elements).len()).sum();
        (fresh.count_ones() as usize + credit, t * (r - f.rank))
    }))
}

fn require_t(t: usize) -> Result<()> {
    if t == 0 {
        Err(MatroidError::OutOfRange("t must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// First flat in canonical order with `lhs < rhs`.
fn first_violation(flats: &[Flat], sides: impl Fn(&Flat) -> (usize, usize)) -> Option<FlatViolation> {
    flats.iter().find_map(|f| {
        let (lhs, rhs) = sides(f);
        (lhs < rhs).then_some(FlatViolation { flat: *f, lhs, rhs })
    })
}

fn certify(
    violation: Option<FlatViolation>,
    search: impl FnOnce() -> Result<Option<BasePacking>>,
) -> Result<PackingCertificate> {
    if let Some(v) = violation {
        return Ok(PackingCertificate::Infeasible(v));
    }
    match search() {
        Ok(Some(p)) => Ok(PackingCertificate::Feasible(Witness::Found(p))),
        Ok(None) => Err(MatroidError::Contract(
            "flat condition holds but the exhaustive search found no valid witness".into(),
        )),
        Err(MatroidError::SearchBudgetExceeded { budget }) => {
            Ok(PackingCertificate::Feasible(Witness::BudgetExceeded { budget }))
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, graphic_matroid, uniform_matroid, VectorList, linear_matroid, Field};

    fn labels(s: &str) -> Coloring {
        Coloring::from_labels(&s.chars().collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn union_rank_examples() {
        let k4 = graphic_matroid(&complete_graph(4)).unwrap();
        assert_eq!(union_rank(&k4, 2).unwrap(), 6);
        assert_eq!(union_rank(&k4, 1).unwrap(), 3);
        let u = uniform_matroid(2, 4).unwrap();
        assert_eq!(union_rank(&u, 3).unwrap(), 4);
        assert!(union_rank(&u, 0).is_err());
    }

    #[test]
    fn disjoint_bases_examples() {
        let k4 = graphic_matroid(&complete_graph(4)).unwrap();
        let cert = has_disjoint_bases(&k4, 2).unwrap();
        assert!(cert.witness().unwrap().is_valid(&k4));
        let cert = has_disjoint_bases(&k4, 3).unwrap();
        let v = cert.violation().unwrap();
        assert_eq!((v.flat.elements, v.lhs, v.rhs), (Subset::EMPTY, 6, 9));

        let u = uniform_matroid(2, 4).unwrap();
        let cert = has_disjoint_bases(&u, 2).unwrap();
        assert_eq!(
            cert.witness().unwrap().bases,
            vec![Subset::from_indices([0, 1]), Subset::from_indices([2, 3])]
        );
    }

    #[test]
    fn color_disjoint_examples() {
        let u = uniform_matroid(2, 4).unwrap();
        let cert = has_color_disjoint_bases(&u, &labels("aabb"), 1).unwrap();
        assert_eq!(cert.witness().unwrap().bases, vec![Subset::from_indices([0, 2])]);
        let cert = has_color_disjoint_bases(&u, &labels("aaaa"), 1).unwrap();
        let v = cert.violation().unwrap();
        assert_eq!((v.flat.elements, v.lhs, v.rhs), (Subset::EMPTY, 1, 2));
        let cert = has_color_disjoint_bases(&u, &labels("aabb"), 2).unwrap();
        let v = cert.violation().unwrap();
        assert_eq!((v.flat.elements, v.lhs, v.rhs), (Subset::EMPTY, 2, 4));
    }

    #[test]
    fn extension_examples() {
        let u = uniform_matroid(2, 4).unwrap();
        let seeds = [Subset::singleton(0), Subset::singleton(1)];
        let cert = extension_feasible(&u, &labels("abcc"), &seeds).unwrap();
        assert_eq!(cert.violation().unwrap().flat.elements, Subset::EMPTY);
        let credited = credited_extension_violation(&u, &labels("abcc"), &seeds)
            .unwrap()
            .unwrap();
        assert_eq!((credited.lhs, credited.rhs), (3, 4));

        let cert = extension_feasible(&u, &labels("abcd"), &seeds).unwrap();
        assert_eq!(
            cert.witness().unwrap().bases,
            vec![Subset::from_indices([0, 2]), Subset::from_indices([1, 3])]
        );
        assert_eq!(credited_extension_violation(&u, &labels("abcd"), &seeds).unwrap(), None);
    }

    #[test]
    fn empty_seeds_match_color_disjoint() {
        let u = uniform_matroid(2, 5).unwrap();
        for c in ["aabbc", "abcde", "aaabb", "abcab"] {
            for t in 1..=3 {
                let a = has_color_disjoint_bases(&u, &labels(c), t).unwrap();
                let b = extension_feasible(&u, &labels(c), &vec![Subset::EMPTY; t]).unwrap();
                assert_eq!(a.is_feasible(), b.is_feasible());
            }
        }
    }

    #[test]
    fn credited_condition_can_accept_infeasible_seeds() {
        // GF(2)^2: e0 = (1,1), e1 = (0,1), e2 = (1,0), e3..e5 = 0, e6 = (0,1)
        let vectors = VectorList::from_integers(
            Field::Prime(2),
            2,
            &[vec![1, 1], vec![0, 1], vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 0], vec![0, 1]],
        )
        .unwrap();
        let m = linear_matroid(&vectors).unwrap();
        let c = Coloring::from_labels(&[1, 2, 3, 4, 6, 4, 5]).unwrap();
        let seeds = [Subset::singleton(6), Subset::from_indices([0, 2])];
        assert_eq!(credited_extension_violation(&m, &c, &seeds).unwrap(), None);
        let cert = extension_feasible(&m, &c, &seeds).unwrap();
        assert!(!cert.is_feasible());
        let plain = SearchOptions {
            flat_pruning: false,
            ..SearchOptions::default()
        };
        let searcher = PackingSearcher::new(&m, plain).unwrap();
        assert_eq!(searcher.extend_seeds(&c, &seeds).unwrap(), None);
    }

    #[test]
    fn invalid_seeds_are_rejected() {
        let u = uniform_matroid(2, 4).unwrap();
        let c = labels("abcd");
        assert!(extension_feasible(&u, &c, &[Subset::from_indices([0, 1, 2])]).is_err());
        assert!(extension_feasible(&u, &c, &[Subset::singleton(0), Subset::singleton(0)]).is_err());
        assert!(extension_feasible(&u, &labels("aacd"), &[Subset::singleton(0), Subset::singleton(1)]).is_err());
    }

    #[test]
    fn tiny_budget_keeps_the_verdict() {
        let k4 = graphic_matroid(&complete_graph(4)).unwrap();
        let tiny = SearchOptions {
            node_budget: 1,
            flat_pruning: true,
        };
        let cert = has_disjoint_bases_with(&k4, 2, tiny).unwrap();
        assert_eq!(cert, PackingCertificate::Feasible(Witness::BudgetExceeded { budget: 1 }));
    }
}
