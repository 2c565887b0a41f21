//! Exact-arithmetic workbench for growth and convolution experiments on
//! finitely generated groups.
//!
//! The crate provides three composable group backends (free groups, weighted
//! free-abelian groups, finite cyclic groups) plus graph products over them,
//! exhaustive ball/sphere enumeration under proper length functions,
//! convolution of finitely supported nonnegative functions, centroid and
//! relative-centroid verifiers, and expansion / Folner-cube experiments on
//! lattices.
//!
//! All group arithmetic and all length values are exact (rational); counting
//! results are exact integers. Function values are `f64`, with summation
//! orders pinned so that outputs are byte-reproducible across runs and across
//! thread counts.

pub mod analysis;
pub mod centroid;
pub mod convolution;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod groups;
pub mod length;

pub use error::Error;
pub use length::Length;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
