//! Exact Euler characteristics of moduli spaces of pointed curves in genus
//! 0, 1 and 2: open spaces, the finite quotients that appear in their
//! boundary strata, and the compactified spaces through their generating
//! functions.
//!
//! Everything is computed in exact rational arithmetic. Two brute-force
//! oracles ([`oracle`]) cross-check the closed forms: twisted point counts
//! over finite fields for genus-0 quotients, and explicit enumeration of
//! stable rooted trees.

pub mod algebra;
pub mod error;
pub mod genfun;
pub mod open;
pub mod oracle;
pub mod output;
pub mod quotient;
pub mod verify;

pub use algebra::{Polynomial, PowerSeries, Rational};
pub use error::{Error, Result};
