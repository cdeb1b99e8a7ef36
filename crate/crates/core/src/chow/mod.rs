//! Degree-3 (and degree-4 ambient) intersection numbers on projectivized
//! bundles, computed by rewriting monomials with the Hirsch relation.
//!
//! Each ring exposes `expand` (a list of unreduced terms) and `reduce_with`
//! (a rewrite loop whose next redex is chosen by a caller-supplied function),
//! so that tests can drive the rewriting in arbitrary orders.

pub mod curve;
pub mod quadric;
pub mod surface;

pub use curve::{antican_p2bundle_p1, CurveBundleRing, CurveDivisor, P2BundleAntican};
pub use quadric::{QuadricBundleModel, QuadricDivisor};
pub use surface::{antican_cube_p1bundle_surface, BaseCycle, BundleDivisor, SurfaceBundleRing};
