//! Dense univariate polynomials over [`Rational`] in a formal variable `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `q^k`. The leading coefficient is never
/// zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = quotient * den + remainder` with
    /// `deg(remainder) < deg(den)`.
    pub fn div_rem(&self, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let Some(den_deg) = den.degree() else {
            return Err(Error::Domain {
                op: "poly_div_rem",
                reason: "division by the zero polynomial".into(),
            });
        };
        let lead_inv = den.coeffs[den_deg].recip();
        let mut rem = self.coeffs.clone();
        let Some(num_deg) = self.degree().filter(|&d| d >= den_deg) else {
            return Ok((Polynomial::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); num_deg - den_deg + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + den_deg] * &lead_inv;
            if !c.is_zero() {
                for (i, d) in den.coeffs.iter().enumerate() {
                    rem[k + i] -= &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(den_deg);
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, den: &Polynomial) -> Result<Polynomial> {
        let (quot, rem) = self.div_rem(den)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NotDivisible {
                numerator: self.to_string(),
                denominator: den.to_string(),
            })
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $Trait::$method(&self, &rhs)
            }
        }
        impl $Trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $Trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn pgl2_order() -> Polynomial {
        Polynomial::from_i64s(&[0, -1, 0, 1])
    }

    #[test]
    fn self_division_is_one() {
        assert_eq!(pgl2_order().exact_div(&pgl2_order()).unwrap(), Polynomial::one());
    }

    #[test]
    fn m04_point_count() {
        // (q+1) q (q-1) (q-2) / (q^3 - q) = q - 2
        let num = [
            Polynomial::from_i64s(&[1, 1]),
            Polynomial::q(),
            Polynomial::from_i64s(&[-1, 1]),
            Polynomial::from_i64s(&[-2, 1]),
        ]
        .iter()
        .fold(Polynomial::one(), |acc, p| acc * p);
        assert_eq!(
            num.exact_div(&pgl2_order()).unwrap(),
            Polynomial::from_i64s(&[-2, 1])
        );
    }

    #[test]
    fn inexact_division_is_an_error() {
        let err = Polynomial::from_i64s(&[-1, 0, 1])
            .exact_div(&Polynomial::from_i64s(&[-2, 1]))
            .unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
        let (_, rem) = Polynomial::from_i64s(&[-1, 0, 1])
            .div_rem(&Polynomial::from_i64s(&[-2, 1]))
            .unwrap();
        assert_eq!(rem, Polynomial::constant(Rational::from(3)));
    }

    #[test]
    fn zero_divisor_rejected() {
        assert!(Polynomial::one().div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let p = Polynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!((&p - &p).degree(), None);
        assert_eq!(p.to_string(), "2*q + 1");
        assert_eq!(Polynomial::from_i64s(&[0, -1, 0, 1]).to_string(), "q^3 - q");
    }
}
