//! Exact scalars, polynomials and truncated power series.

mod polynomial;
mod rational;
mod series;

pub use polynomial::Polynomial;
pub use rational::{q, Rational};
pub use series::PowerSeries;
