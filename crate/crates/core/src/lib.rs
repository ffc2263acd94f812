//! Exact invariants for extensions of non-special polarized curves.
//!
//! The crate computes curve cohomology on hyperelliptic, trigonal and
//! genus-3 curves, coranks of Gaussian maps, the classification of surface
//! extensions in high degree, dimensions of extension families, and the
//! invariants of universal extensions. Everything is exact: integer
//! arithmetic for the invariants and rational arithmetic for the polynomial
//! identities behind the weighted-hypersurface constructions.
//!
//! Modules:
//! - [`cohomology`]: `h^0`/`h^1` of line bundles on special curves.
//! - [`surface`]: intersection theory on Hirzebruch surfaces and plane systems.
//! - [`gaussian`]: Gaussian-map kernels and coranks.
//! - [`classify`]: extendability verdicts and family dimensions.
//! - [`universal`]: universal-extension catalogue, weighted hypersurfaces,
//!   sparse polynomials and construction checks.
//! - [`tables`]: regenerated classification tables.

pub mod classify;
pub mod cohomology;
mod error;
pub mod gaussian;
pub mod surface;
pub mod tables;
pub mod universal;

pub use error::{Error, Result};
