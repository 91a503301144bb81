//! Bit-set representation of subsets of a ground set of at most 64 elements.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// Dense index of a ground-set element, in `[0, |E|)`.
pub type ElementId = usize;

/// Largest supported ground set.
pub const MAX_GROUND_SIZE: usize = 64;

/// A subset of the ground set, one bit per element.
///
/// The canonical order on subsets is the numeric order of the bitmask, which
/// is what `Ord` implements and what every sorted output in the crate uses.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole ground set `{0, .., n-1}`. `n` must be at most 64.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(e: ElementId) -> Self {
        Subset(1u64 << e)
    }

    /// Builds a subset from element indices. Panics on indices of 64 or more.
    pub fn from_indices<I: IntoIterator<Item = ElementId>>(indices: I) -> Self {
        let mut s = Subset::EMPTY;
        for e in indices {
            assert!(e < MAX_GROUND_SIZE, "element index {e} out of range");
            s.insert(e);
        }
        s
    }

    /// Elements `{lo, .., n-1}`.
    #[inline]
    pub fn at_least(lo: ElementId, n: usize) -> Self {
        if lo >= n {
            Subset::EMPTY
        } else {
            Subset(Subset::full(n).0 & !Subset::full(lo).0)
        }
    }

    #[inline]
    pub const fn contains(self, e: ElementId) -> bool {
        e < 64 && (self.0 >> e) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: ElementId) {
        self.0 |= 1u64 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: ElementId) {
        self.0 &= !(1u64 << e);
    }

    #[inline]
    #[must_use]
    pub const fn with(self, e: ElementId) -> Self {
        Subset(self.0 | (1u64 << e))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, e: ElementId) -> Self {
        Subset(self.0 & !(1u64 << e))
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// `E \ self` for a ground set of size `n`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        Subset(Subset::full(n).0 & !self.0)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<ElementId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<ElementId> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    #[inline]
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<ElementId> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing canonical order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(Subset(cur))
        })
    }
}

/// Iterator over the elements of a [`Subset`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = ElementId;

    #[inline]
    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for Subset {
    type Item = ElementId;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<ElementId> for Subset {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitOrAssign for Subset {
    fn bitor_assign(&mut self, rhs: Subset) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl BitAndAssign for Subset {
    fn bitand_assign(&mut self, rhs: Subset) {
        self.0 &= rhs.0;
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl SubAssign for Subset {
    fn sub_assign(&mut self, rhs: Subset) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
