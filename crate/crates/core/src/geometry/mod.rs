//! Exact polyhedral geometry over the rationals.

pub mod arrangement;
pub mod feasibility;
pub mod fourier_motzkin;
pub mod lattice;
pub mod linalg;
pub mod slice;
