//! Wall-and-chamber decompositions for moduli of thin quiver representations.
//!
//! The stability space of a quiver with a 0/1 dimension vector `d` is the
//! lattice `d^⊥`. This crate enumerates its GIT chambers exactly, describes
//! each chamber's semistable locus as a positive CNF over the arrows, and
//! derives unstable divisors, Picard numbers, stable chambers and
//! pseudoeffective cones. Reports render as text tables, JSON or SVG slices.

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod quiver;
pub mod rational;
pub mod report;

pub use analysis::{analyze, AnalysisOptions, QuiverAnalysis, Scope};
pub use error::{AnalysisError, GeometryError, QuiverError};
pub use quiver::{Character, DimensionVector, Quiver, ThinRepPattern};
