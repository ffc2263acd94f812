//! Universal extensions: the catalogue of invariants, weighted
//! hypersurface models, and the polynomial identities behind them.

pub mod betti;
pub mod catalogue;
pub mod construction;
pub mod poly;
pub mod weighted;

pub use betti::{reference_betti_genus3_bicanonical, BettiTable, Summand};
pub use catalogue::{universal_catalogue, UniversalCase, UniversalExtensionRecord};
pub use construction::{check_construction_genus3, check_construction_genus4, klein_quartic_split};
pub use poly::SparsePoly;
pub use weighted::{wh_invariants, WeightedHypersurface, WhInvariants};
