//! Exact-arithmetic verification of the numerical skeleton behind the
//! degree bound `-K³ ≤ 72` for Fano threefolds with canonical Gorenstein
//! singularities.
//!
//! The library is layered bottom-up:
//!
//! * [`lattice`]: Picard lattices of `P²` and `F_e`.
//! * [`chern`]: Chern data, Riemann–Roch, twists, section counts over `P¹`.
//! * [`chow`]: degree-3 products on projectivized bundles and quadric bundles.
//! * [`wps`]: weighted projective spaces.
//! * [`cases`]: the named verification cases and the runner.
//! * [`report`]: case and suite reports, text and JSON output.

pub mod cases;
pub mod chern;
pub mod chow;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod report;
pub mod wps;

pub use error::{Error, Result};
pub use exact::Rat;
pub use lattice::{DivClass, Surface};
pub use report::{CaseReport, Status, SuiteReport};
