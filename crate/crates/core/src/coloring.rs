//! Colorings of the ground set, kept in canonical set-partition form.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{MatroidError, Result};
use crate::flats::Flat;
use crate::matroid::Matroid;
use crate::subset::{ElementId, Subset, MAX_GROUND_SIZE};

/// A surjective map from elements onto colors `0..num_colors`.
///
/// Colors are always relabeled by first occurrence, so two colorings that
/// induce the same partition of the ground set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    color_of: Vec<u8>,
    classes: Vec<Subset>,
}

impl Coloring {
    /// Canonicalizes arbitrary labels: the first element gets color 0, the
    /// first element with a different label gets color 1, and so on.
    pub fn from_labels<T: Eq + Hash>(labels: &[T]) -> Result<Coloring> {
        if labels.len() > MAX_GROUND_SIZE {
            return Err(MatroidError::GroundSetTooLarge(labels.len()));
        }
        let mut ids: HashMap<&T, u8> = HashMap::new();
        let mut classes: Vec<Subset> = Vec::new();
        let color_of = labels
            .iter()
            .enumerate()
            .map(|(e, label)| {
                let next = ids.len() as u8;
                let c = *ids.entry(label).or_insert(next);
                if c as usize == classes.len() {
                    classes.push(Subset::EMPTY);
                }
                classes[c as usize].insert(e);
                c
            })
            .collect();
        Ok(Coloring { color_of, classes })
    }

    /// Every element its own color.
    pub fn rainbow(n: usize) -> Result<Coloring> {
        Coloring::from_labels(&(0..n).collect::<Vec<_>>())
    }

    /// Every element the same color.
    pub fn monochromatic(n: usize) -> Result<Coloring> {
        Coloring::from_labels(&vec![0u8; n])
    }

    pub fn ground_size(&self) -> usize {
        self.color_of.len()
    }

    pub fn num_colors(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn color(&self, e: ElementId) -> usize {
        self.color_of[e] as usize
    }

    /// Canonical color of every element, in element order.
    pub fn labels(&self) -> Vec<usize> {
        self.color_of.iter().map(|&c| c as usize).collect()
    }

    /// Color classes, indexed by color.
    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    /// `c(S)` as a bitmask over colors.
    #[inline]
    pub fn colors_in(&self, set: Subset) -> u64 {
        set.iter().fold(0u64, |acc, e| acc | (1u64 << self.color_of[e]))
    }

    /// `|c(S)|`.
    pub fn color_count(&self, set: Subset) -> usize {
        self.colors_in(set).count_ones() as usize
    }

    /// Does every element of `set` get a different color?
    pub fn is_rainbow(&self, set: Subset) -> bool {
        self.color_count(set) == set.len()
    }

    /// Elements whose color lies in the `colors` bitmask.
    pub fn elements_with_colors(&self, colors: u64) -> Subset {
        let mut out = Subset::EMPTY;
        let mut rest = colors;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if let Some(&class) = self.classes.get(c) {
                out |= class;
            }
        }
        out
    }

    pub(crate) fn check_matches(&self, matroid: &Matroid) -> Result<()> {
        if self.ground_size() != matroid.ground_size() {
            return Err(MatroidError::Contract(format!(
                "coloring covers {} elements but the ground set has {}",
                self.ground_size(),
                matroid.ground_size()
            )));
        }
        Ok(())
    }
}

/// `η(F) = |F| − |c(F)|` and `ξ(F) = |c(F) ∩ c(E∖F)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorStats {
    pub eta: usize,
    pub xi: usize,
}

/// Color statistics of a flat. The inclusion-exclusion identity
/// `|c(E∖F)| = |c(E)| − |F| + η(F) + ξ(F)` holds for the result.
pub fn color_stats(matroid: &Matroid, coloring: &Coloring, flat: &Flat) -> Result<ColorStats> {
    coloring.check_matches(matroid)?;
    if !matroid.is_flat(flat.elements)? {
        return Err(MatroidError::Contract(format!(
            "{} is not a flat",
            flat.elements
        )));
    }
    let inside = coloring.colors_in(flat.elements);
    let outside = coloring.colors_in(flat.elements.complement(matroid.ground_size()));
    Ok(ColorStats {
        eta: flat.elements.len() - inside.count_ones() as usize,
        xi: (inside & outside).count_ones() as usize,
    })
}
