//! Space-efficient verifiable secret sharing.
//!
//! Shares produced by any threshold scheme can be checked against compact
//! polynomial verification data: public power maps (POW), split-share maps
//! (SSP), per-verifier private exponents, and per-verifier exponential maps
//! (EXP, EXP-SSP). Hashing, Feldman commitments and set coherence are provided
//! as baselines, together with the number theory they need and executable
//! versions of the known attacks.

pub mod analysis;
pub mod coherence;
pub mod encoding;
pub mod error;
pub mod field;
mod gf2x;
pub mod numtheory;
pub mod poly;
pub mod shamir;
mod small;
pub mod vss;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldKind, FieldSpec};
pub use poly::{PointSet, Polynomial};
pub use shamir::{Share, ShareSet};
