//! Exact polynomial algebra over Q for studying singularities at infinity
//! of polynomial maps and the resulting top Betti defect of generic fibres.

pub mod analysis;
pub mod betti;
pub mod deform;
pub mod error;
pub mod groebner;
pub mod invariants;
mod linalg;
pub mod sampling;
pub mod singularity;
pub mod poly;

pub use error::{Error, Result};
pub use groebner::{IdealBasis, MonomialOrder};
pub use invariants::{StaircaseCount, VarietyDim};
pub use poly::{Degree, LinearChange, Monomial, Poly, Rational};
pub use singularity::{MilnorPairSums, SingularityProfile};
pub use betti::{BettiReport, Method, StratificationData};
pub use analysis::{analyze, Analysis, AnalysisOptions};
