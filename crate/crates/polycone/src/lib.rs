//! Exact polyhedral cones over the rationals.
//!
//! Cones are given by integer linear equalities and halfspaces; the
//! generator description (extreme rays plus a lineality basis) is computed
//! by the double description method with arbitrary-precision arithmetic,
//! so every predicate here is exact. Empty-looking systems produce the
//! zero cone rather than an error.
//!
//! Scale target: ambient dimension below ten and a few hundred constraints,
//! which keeps the combinatorial adjacency test cheap.

mod cone;
mod dd;
mod error;
mod functional;
mod linalg;

pub use cone::{cone_from_h, Cone};
pub use error::ConeError;
pub use functional::{Functional, RationalVector};
