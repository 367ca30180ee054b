//! Exact exterior calculus on cohomogeneity-one coframes of S⁷ and the
//! Berger space SO(5)/SO(3), with checks for nearly-parallel G₂ and
//! nearly-half-flat SU(3) structures.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod exterior;
pub mod liealg;
pub mod quaternionic;
pub mod scalars;
pub mod structures;
pub mod suite;

pub use error::{Error, Result};
