//! Linear matroids over exact fields: the rationals or a prime field GF(p).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{MatroidError, Result};
use crate::matroid::{Family, IndependenceOracle, Matroid};
use crate::subset::{Subset, MAX_GROUND_SIZE};

/// Largest accepted prime modulus; products of two residues fit in `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn validate(self) -> Result<Field> {
        if let Field::Prime(p) = self {
            if p > MAX_PRIME {
                return Err(MatroidError::InvalidField(format!(
                    "modulus {p} exceeds {MAX_PRIME}"
                )));
            }
            if !is_prime(p) {
                return Err(MatroidError::InvalidField(format!("{p} is not prime")));
            }
        }
        Ok(self)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((x % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

fn rational_to_residue(x: &BigRational, p: u64) -> Result<u64> {
    let den = residue(x.denom(), p);
    if den == 0 {
        return Err(MatroidError::InvalidField(format!(
            "{x} has a denominator divisible by {p}"
        )));
    }
    Ok(residue(x.numer(), p) * inv_mod(den, p) % p)
}

#[derive(Clone, Debug)]
enum Rows {
    Prime { p: u64, rows: Vec<Vec<u64>> },
    Rational(Vec<Vec<BigRational>>),
}

/// A list of vectors in `F^d`; vector `i` is element `i`.
#[derive(Clone, Debug)]
pub struct VectorList {
    field: Field,
    dimension: usize,
    rows: Rows,
}

impl VectorList {
    /// Coordinates are given as rationals; over GF(p) each is reduced modulo
    /// `p`, with denominators inverted.
    pub fn new(field: Field, dimension: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        let field = field.validate()?;
        if dimension == 0 {
            return Err(MatroidError::OutOfRange("dimension must be at least 1".into()));
        }
        if vectors.len() > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge(vectors.len()));
        }
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != dimension {
                return Err(MatroidError::DimensionMismatch {
                    index,
                    expected: dimension,
                    found: v.len(),
                });
            }
        }
        let rows = match field {
            Field::Rational => Rows::Rational(vectors),
            Field::Prime(p) => Rows::Prime {
                p,
                rows: vectors
                    .iter()
                    .map(|v| v.iter().map(|x| rational_to_residue(x, p)).collect())
                    .collect::<Result<_>>()?,
            },
        };
        Ok(VectorList {
            field,
            dimension,
            rows,
        })
    }

    pub fn from_integers(field: Field, dimension: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        let vectors = vectors
            .iter()
            .map(|v| v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        VectorList::new(field, dimension, vectors)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        match &self.rows {
            Rows::Prime { rows, .. } => rows.len(),
            Rows::Rational(rows) => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Dimension of the span of the selected vectors.
    pub fn span_rank(&self, set: Subset) -> usize {
        match &self.rows {
            Rows::Prime { p, rows } => {
                rank_mod_p(set.iter().map(|e| rows[e].clone()).collect(), *p)
            }
            Rows::Rational(rows) => rank_rational(set.iter().map(|e| rows[e].clone()).collect()),
        }
    }
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][col], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..cols {
                    let sub = f * m[rank][c] % p;
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn rank_rational(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[rank][col];
            for c in col..cols {
                let sub = &f * &m[rank][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[derive(Debug)]
struct LinearOracle(VectorList);

impl IndependenceOracle for LinearOracle {
    fn ground_size(&self) -> usize {
        self.0.len()
    }

    fn is_independent(&self, set: Subset) -> bool {
        set.len() <= self.0.dimension && self.0.span_rank(set) == set.len()
    }

    fn rank(&self, set: Subset) -> usize {
        self.0.span_rank(set)
    }
}

/// Linearly independent subsets of `vectors` are independent.
pub fn linear_matroid(vectors: &VectorList) -> Result<Matroid> {
    Matroid::from_oracle(LinearOracle(vectors.clone()), Family::Linear)
}

/// The vectors of `T^d` in lexicographic order (first coordinate most
/// significant, `T` in the given order).
pub fn cube_vectors(values: &[i64], d: usize, field: Field) -> Result<VectorList> {
    let field = field.validate()?;
    if values.len() < 2 || d < 2 {
        return Err(MatroidError::OutOfRange(
            "cube needs |T| >= 2 and d >= 2".into(),
        ));
    }
    let as_field = |x: i64| -> BigRational {
        match field {
            Field::Rational => BigRational::from_integer(x.into()),
            Field::Prime(p) => BigRational::from_integer(residue(&BigInt::from(x), p).into()),
        }
    };
    let reduced: Vec<BigRational> = values.iter().map(|&x| as_field(x)).collect();
    if !reduced.iter().any(|x| x.is_zero()) {
        return Err(MatroidError::OutOfRange("T must contain 0".into()));
    }
    for (i, a) in reduced.iter().enumerate() {
        if reduced[..i].contains(a) {
            return Err(MatroidError::OutOfRange(format!(
                "T lists {} twice in the field",
                values[i]
            )));
        }
    }
    let size = (values.len() as u64)
        .checked_pow(d as u32)
        .filter(|&s| s <= MAX_GROUND_SIZE as u64)
        .ok_or_else(|| {
            MatroidError::GroundSetTooLarge(
                values.len().saturating_pow(d.min(64) as u32),
            )
        })? as usize;

    let mut vectors = Vec::with_capacity(size);
    for mut code in 0..size {
        let mut v = vec![BigRational::zero(); d];
        for slot in v.iter_mut().rev() {
            *slot = reduced[code % values.len()].clone();
            code /= values.len();
        }
        vectors.push(v);
    }
    VectorList::new(field, d, vectors)
}

/// The linear matroid on `T^d ⊆ F^d`. `T` must contain 0, `|T| >= 2`,
/// `d >= 2` and `|T|^d <= 64`.
pub fn cube_matroid(values: &[i64], d: usize, field: Field) -> Result<Matroid> {
    let vectors = cube_vectors(values, d, field)?;
    Matroid::from_oracle(LinearOracle(vectors), Family::Cube)
}
