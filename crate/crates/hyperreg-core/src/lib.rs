//! Combinatorics of partite graded complexes for k-uniform hypergraphs.
//!
//! The crate is organized around a small set of value types:
//!
//! - [`complex::Complex`] — a downward-closed family of crossing edge sets
//!   at levels `2..=k` over ordered vertex classes.
//! - [`density::DensityVector`] and [`density::RegularityReport`] — relative
//!   densities between consecutive levels and `(d, δ, r)` regularity
//!   certification.
//! - [`partition::PartitionFamily`] — clusters plus per-level partitions of
//!   crossing sets with polyad structure.
//! - [`counting::Embedding`] — partition-respecting vertex maps, with exact
//!   copy and extension counting against brute-force oracles.
//! - [`ramsey::ColoredHypergraph`] — red/blue colourings of complete
//!   k-uniform hypergraphs, the reduced hypergraph, and a desk-scale
//!   monochromatic-embedding pipeline with an exact Ramsey oracle for tiny
//!   instances.
//!
//! All randomized constructions draw per-edge decisions from a seeded,
//! splittable hash generator ([`rng::SplitRng`]), so outputs are bit-identical
//! for a given seed regardless of iteration or scheduling order.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion `hyperreg-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod combin;
pub mod complex;
pub mod counting;
pub mod density;
pub mod embed;
pub mod fmath;
pub mod partition;
pub mod ramsey;
pub mod random;
pub mod rng;

pub use complex::{Complex, ComplexError, Edge, UniformHypergraph, VertexClasses, VertexId};
pub use density::{DensityError, DensityVector, RegularityReport};
pub use rng::SplitRng;
