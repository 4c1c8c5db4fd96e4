//! Seeds of braid varieties from 3D plabic graphs.
//!
//! Given a permutation `u` and a positive braid word `β`, the crate builds the
//! plabic graph, sweeps its soap films, and assembles the exchange matrix `B̂`,
//! its inverse `A`, the quiver and the torus action on cluster variables.

pub mod analysis;
pub mod autgroup;
pub mod braid;
pub mod error;
pub mod exchange;
pub mod half;
pub mod par;
pub mod plabic;
pub mod report;
pub mod variety;

pub use analysis::{analyze, analyze_with, Analysis};
pub use braid::{BraidWord, Permutation};
pub use error::{Error, Result};
pub use half::Half;
pub use par::Execution;
pub use report::AnalysisReport;
