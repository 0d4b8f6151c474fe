//! Wall-and-chamber combinatorics for stability parameters of framed
//! affine ADE quivers.
//!
//! Fix a simply-laced root system and a multiplicity n. Stability
//! parameters live on the affine node set, with the framing coordinate
//! eliminated; the hyperplanes through delta and its shifts by positive
//! roots cut the simplicial fundamental cone into a fan. This crate builds
//! that arrangement exactly over the rationals, localizes parameters to
//! fan cones, constructs the distinguished cones attached to each subset K
//! of finite nodes, and checks the characterization that pins those cones
//! down uniquely.
//!
//! The geometry behind the names: for n >= 2 the fan cone at a parameter
//! controls a moduli space over the n-th symmetric power of a Kleinian
//! singularity, sigma(K) is the nef cone of the Hilbert scheme of n points
//! on the partial resolution contracting the curves in K, and the chamber
//! above it is the unique projective crepant resolution. None of that
//! geometry is computed here; only the combinatorics that certifies it.

mod arrangement;
mod cones;
mod error;
mod fan;
mod verify;

pub use arrangement::Arrangement;
pub use cones::{
    chamber_closure, chamber_witness, cone_from_sign_vector, sigma, sigma_prime, signs_at,
    ConeLabel, GitCone, Sign,
};
pub use error::GitFanError;
pub use fan::{
    adjacent, cell_at, cells_in_face, chambers, chambers_containing, is_chamber, is_q_factorial,
    minimal_face_containing, picard_rank, vanishes_on, Budget,
};
pub use verify::{verify, Clause, ClauseStatus, Overall, VerificationReport};
