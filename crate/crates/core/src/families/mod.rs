//! Concrete matroid constructors.

mod explicit;
mod graph;
mod linear;
mod transversal;

pub use explicit::{bases_of, explicit_matroid, ExplicitBases};
pub use graph::{
    bicircular_matroid, cographic_matroid, complete_graph, graphic_matroid, signed_complete_graph,
    signed_matroid, Multigraph, SignedMultigraph,
};
pub use linear::{cube_matroid, cube_vectors, linear_matroid, Field, VectorList, MAX_PRIME};
pub use transversal::{transversal_matroid, SetFamily};

use crate::error::{MatroidError, Result};
use crate::matroid::{Family, IndependenceOracle, Matroid};
use crate::subset::{Subset, MAX_GROUND_SIZE};

#[derive(Debug)]
struct UniformOracle {
    k: usize,
    n: usize,
}

impl IndependenceOracle for UniformOracle {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: Subset) -> bool {
        set.len() <= self.k
    }

    fn rank(&self, set: Subset) -> usize {
        set.len().min(self.k)
    }

    fn closure(&self, set: Subset) -> Subset {
        if set.len() >= self.k {
            Subset::full(self.n)
        } else {
            set
        }
    }
}

/// `U_{k,n}`: every set of at most `k` elements is independent.
pub fn uniform_matroid(k: usize, n: usize) -> Result<Matroid> {
    if n > MAX_GROUND_SIZE {
        return Err(MatroidError::GroundSetTooLarge(n));
    }
    if k > n {
        return Err(MatroidError::OutOfRange(format!(
            "uniform matroid needs k <= n, got k = {k}, n = {n}"
        )));
    }
    Matroid::from_oracle(UniformOracle { k, n }, Family::Uniform)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flats::enumerate_flats;

    #[test]
    fn uniform_examples() {
        let u = uniform_matroid(2, 4).unwrap();
        assert_eq!(u.full_rank(), 2);
        assert_eq!(enumerate_flats(&u, Some(0)).unwrap().len(), 1);
        let u35 = uniform_matroid(3, 5).unwrap();
        assert!(u35.is_basis(Subset::from_indices([0, 2, 4])).unwrap());
        assert!(uniform_matroid(5, 4).is_err());
        assert!(uniform_matroid(2, 65).is_err());
    }

    #[test]
    fn uniform_flats_are_small_sets_and_the_ground_set() {
        let u = uniform_matroid(3, 5).unwrap();
        for f in enumerate_flats(&u, None).unwrap() {
            assert!(f.len() <= 2 || f.elements == u.ground());
        }
    }
}
