//! Exact coefficient arithmetic.

pub mod algebraic;
mod complex;
pub mod poly;
pub mod trig;

pub use algebraic::AlgebraicScalar;
pub use poly::{poly_substitute, Bindings, Monomial, ParamPoly, Unknown};
pub use trig::{trig_deriv, trig_mul, FourierComponent, TrigScalar};
