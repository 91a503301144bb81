//! Exact anti-Ramsey numbers for pairwise disjoint rainbow bases in
//! matroids, together with the base-packing certificates they rest on.
//!
//! Every matroid lives on a ground set of at most 64 elements, represented
//! as a [`Subset`] bitmask. Matroids are built by the constructors in
//! [`families`], queried through [`Matroid`], and analysed by [`packing`]
//! and [`antiramsey`].

pub mod antiramsey;
pub mod coloring;
pub mod document;
pub mod error;
pub mod families;
pub mod flats;
pub mod matroid;
pub mod packing;
pub mod partitions;
pub mod subset;
pub mod union_find;

pub use coloring::{color_stats, ColorStats, Coloring};
pub use error::{MatroidError, Result};
pub use flats::{enumerate_flats, Flat};
pub use matroid::{Family, IndependenceOracle, Matroid};
pub use subset::{ElementId, Subset};
