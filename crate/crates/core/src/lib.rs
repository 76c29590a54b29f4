//! Local sum uncertainty relations for permutation-symmetric multiqubit states.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod lsur;
pub mod numlin;
pub mod oracle;
pub mod sample;
pub mod spin;
pub mod states;
pub mod tomo;

pub use error::{Error, Result};
pub use lsur::{lsur_verdict, AxisAngle, LsurVerdict};
pub use states::{SymmetricState, SymmetricStateFile, TwoQubitState};
pub use tomo::{
    bloch_from_symmetric, bloch_from_two_qubit, covariance, BlochPair, CovarianceReport,
};
