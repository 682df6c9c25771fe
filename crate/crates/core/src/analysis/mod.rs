//! GIT and Mori data of quiver chambers.

pub mod chambers;
pub mod cnf;
pub mod picard;
pub mod stable;
pub mod walls;

pub use chambers::{analyze, AnalysisOptions, GitChamberReport, QuiverAnalysis, Scope};
pub use cnf::SemistableCnf;
pub use stable::{locate_chamber, pseudoeffective_cone, stable_matrix, stable_wrt, Location, StableChamberMatrix};
