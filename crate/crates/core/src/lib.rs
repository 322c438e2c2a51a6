//! Arithmetic dimension of hyperbolic triangle groups, and complete
//! enumeration of the triples `(a, b, c)` with a given arithmetic dimension.
//!
//! Everything on the main path is exact integer arithmetic. Floating point is
//! confined to [`oracle`], which exists for differential testing.

pub mod adim;
pub mod arith;
pub mod curvature;
pub mod enumerate;
pub mod error;
pub mod multiplicity;
pub mod oracle;
pub mod output;

pub use adim::{adim, is_r_arithmetic, AdimResult};
pub use arith::{chi_sign, euler_phi, fold, ndp, Order, Sign, Triple};
pub use curvature::{c_bound_for_prime, curvature_sign, CurvatureSign};
pub use enumerate::{enumerate, BoundMode, EnumerationConfig, FoundVia, TripleRecord};
pub use error::{Error, Result};
pub use multiplicity::{multiplicity, Method, MultiplicityMode, MultiplicityReport};
