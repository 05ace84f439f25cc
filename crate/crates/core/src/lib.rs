//! Classification data for Harish-Chandra bimodules over the rational
//! Cherednik algebra `H_c` of the symmetric group `S_n`, with an exact
//! engine for finite-dimensional quiver algebras.
//!
//! - [`partitions`]: partitions, the `μ + mν` decomposition, `m`-trivial shapes.
//! - [`symgroup`]: irreducible dimensions and Littlewood–Richardson branching.
//! - [`quiver_algebra`]: path algebras with relations, Hom, `Ext¹`, Serre quotients.
//! - [`hc_model`]: parameter classes, labels of simples, ideal chains.
//! - [`principal_block`]: the principal block as a quiver with relations.
//!
//! All arithmetic is over the rationals and exact.

pub mod error;
pub mod hc_model;
pub mod linalg;
pub mod partitions;
pub mod principal_block;
pub mod quiver_algebra;
pub mod symgroup;

pub use error::{Error, Result};
pub use partitions::Partition;
