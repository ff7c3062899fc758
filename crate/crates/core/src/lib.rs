//! Exact section constructions on finite filtered probability spaces.
//!
//! The crate is organized bottom-up:
//!
//! * [`souslin`]: Souslin schemes over finite pavings, the Souslin
//!   operation, union/intersection merges through the pairing [`souslin::theta`],
//!   and monotonization;
//! * [`measure`]: finite probability spaces, partition σ-algebras,
//!   measurable covers and the outer measure;
//! * [`time`]: discrete filtrations, stopping and predictable times,
//!   stochastic sets, intervals, debuts and the accessible/inaccessible split;
//! * [`section`]: interval representations, monotone schemes of predictable
//!   sets and the predictable, measurable, optional and accessible section
//!   solvers;
//! * [`fixture`] and [`cli`]: the JSON document format and the batch front end.
//!
//! All probabilities are exact rationals.

pub mod cli;
pub mod error;
pub mod fixture;
pub mod gen;
pub mod measure;
pub mod rational;
pub mod section;
pub mod souslin;
pub mod time;

pub use error::{Error, Result};

/// Exact rational used for every probability and time label.
pub type Rational = num_rational::BigRational;
