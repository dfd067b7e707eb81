//! Exact q-expansions of W(E8)-invariant Jacobi forms.
//!
//! Coefficients of every power of q are finite sums of Weyl orbits, stored as
//! sparse maps from dominant weights to exact rationals.

pub mod catalog;
pub mod e8;
pub mod error;
pub mod invring;
pub mod jacobi;
pub mod linalg;
pub mod qseries;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
