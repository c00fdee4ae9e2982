//! Truncated formal power series in `t` over [`Rational`].
//!
//! A series of order `N` stores the coefficients of `t^0 .. t^(N-1)`; the
//! coefficients from `t^N` on are unknown, not zero. Binary operations
//! return the smaller of the two orders, and reading past the order is an
//! error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series whose order is `coeffs.len()`. Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs order >= 1");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::from_coeffs(vec![Rational::zero(); order])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(Rational::one(), order)
    }

    /// `c * t^k`, truncated to `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        PowerSeries::monomial(Rational::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; an error when `k >= order`.
    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(Error::Truncated {
            index: k,
            order: self.order(),
        })
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// `k! * [t^k]` for every known `k`.
    pub fn egf_values(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rational::factorial(k as u32))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        assert!(order >= 1 && order <= self.order());
        PowerSeries::from_coeffs(self.coeffs[..order].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative; the result has order one less.
    pub fn derivative(&self) -> Result<PowerSeries> {
        if self.order() < 2 {
            return Err(Error::Truncated {
                index: 1,
                order: self.order(),
            });
        }
        Ok(PowerSeries::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from(k as i64))
                .collect(),
        ))
    }

    /// Antiderivative with zero constant term; the result has order one more.
    pub fn integral(&self) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from(k as i64 + 1)),
        );
        PowerSeries::from_coeffs(coeffs)
    }

    /// `1 / self`; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::ConstantTerm {
                op: "reciprocal",
                requirement: "a nonzero",
            });
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(n);
        g.push(inv0.clone());
        for k in 1..n {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &g[k - i]).sum();
            g.push(-(s * &inv0));
        }
        Ok(PowerSeries::from_coeffs(g))
    }

    /// `outer(inner(t))`. `inner` must have zero constant term; the result
    /// has order `min(outer.order(), inner.order())`.
    pub fn compose(outer: &PowerSeries, inner: &PowerSeries) -> Result<PowerSeries> {
        if !inner.constant_term().is_zero() {
            return Err(Error::ConstantTerm {
                op: "compose",
                requirement: "a zero",
            });
        }
        let order = outer.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner: inner^k vanishes below t^k, so only the first `order`
        // outer coefficients can contribute.
        let mut acc = PowerSeries::zero(order);
        for c in outer.coeffs[..order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `log(1 + self)`; needs a zero constant term. Keeps the order.
    pub fn log1p(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::ConstantTerm {
                op: "log1p",
                requirement: "a zero",
            });
        }
        if self.order() == 1 {
            return Ok(PowerSeries::zero(1));
        }
        // log(1+f)' = f' / (1+f)
        let one_plus = self + &PowerSeries::one(self.order());
        let quotient = &self.derivative()? * &one_plus.reciprocal()?;
        Ok(quotient.integral())
    }

    /// `exp(self)`; needs a zero constant term. Keeps the order.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::ConstantTerm {
                op: "exp",
                requirement: "a zero",
            });
        }
        // g = exp(f) satisfies k g_k = sum_{j=1..k} j f_j g_{k-j}
        let n = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(n);
        g.push(Rational::one());
        for k in 1..n {
            let s: Rational = (1..=k)
                .map(|j| Rational::from(j as i64) * &self.coeffs[j] * &g[k - j])
                .sum();
            g.push(s / Rational::from(k as i64));
        }
        Ok(PowerSeries::from_coeffs(g))
    }

    /// `sum_k coeffs[k] * x^k`, a polynomial evaluated at a series. Unlike
    /// [`PowerSeries::compose`], `x` may have any constant term.
    pub fn eval_polynomial(coeffs: &[Rational], x: &PowerSeries) -> PowerSeries {
        let mut acc = PowerSeries::zero(x.order());
        for c in coeffs.iter().rev() {
            acc = &acc * x;
            acc.coeffs[0] += c;
        }
        acc
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries({self})")
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_coeffs((0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_coeffs((0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        PowerSeries::from_coeffs(out)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                $Trait::$method(&self, &rhs)
            }
        }
        impl $Trait<&PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: &PowerSeries) -> PowerSeries {
                $Trait::$method(&self, rhs)
            }
        }
        impl $Trait<PowerSeries> for &PowerSeries {
            type Output = PowerSeries;
            fn $method(self, rhs: PowerSeries) -> PowerSeries {
                $Trait::$method(self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn series(cs: &[(i64, i64)]) -> PowerSeries {
        PowerSeries::from_coeffs(cs.iter().map(|&(p, d)| q(p, d)).collect())
    }

    #[test]
    fn linearity_and_products() {
        let t = PowerSeries::t(6);
        assert_eq!(&t + &t, PowerSeries::monomial(q(2, 1), 1, 6));

        let one = PowerSeries::one(6);
        let prod = &(&one + &t) * &(&one - &t);
        assert_eq!(prod, &one - &t.pow(2));

        let t2 = PowerSeries::monomial(Rational::one(), 2, 4);
        let t3 = &t * &t2;
        assert_eq!(t3.order(), 4);
        assert_eq!(t3, PowerSeries::monomial(Rational::one(), 3, 4));
    }

    #[test]
    fn reading_past_order_is_an_error() {
        let s = PowerSeries::t(3);
        assert!(s.coeff(2).is_ok());
        assert_eq!(s.coeff(3).unwrap_err(), Error::Truncated { index: 3, order: 3 });
    }

    #[test]
    fn compose_edge_cases() {
        let outer = series(&[(1, 1), (1, 1), (1, 1), (0, 1), (0, 1)]);
        let zero = PowerSeries::zero(5);
        assert_eq!(PowerSeries::compose(&outer, &zero).unwrap(), PowerSeries::one(5));

        let f = series(&[(0, 1), (2, 1), (-1, 3), (5, 7), (1, 2)]);
        let x = PowerSeries::t(5);
        assert_eq!(PowerSeries::compose(&x, &f).unwrap(), f);

        let shifted = &f + &PowerSeries::one(5);
        assert!(matches!(
            PowerSeries::compose(&outer, &shifted),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn compose_truncates_to_smaller_order() {
        let outer = PowerSeries::one(8);
        let inner = PowerSeries::t(5);
        assert_eq!(PowerSeries::compose(&outer, &inner).unwrap().order(), 5);
    }

    #[test]
    fn mercator_series() {
        let log = PowerSeries::t(6).log1p().unwrap();
        assert_eq!(log, series(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4), (1, 5)]));
        assert_eq!(PowerSeries::zero(6).log1p().unwrap(), PowerSeries::zero(6));
    }

    #[test]
    fn log_of_exp_minus_one_is_t() {
        let e = PowerSeries::t(9).exp().unwrap();
        let em1 = &e - &PowerSeries::one(9);
        assert_eq!(em1.log1p().unwrap(), PowerSeries::t(9));
    }

    #[test]
    fn log1p_matches_composition_with_mercator() {
        let n = 9;
        let mercator = PowerSeries::from_coeffs(
            (0..n)
                .map(|k| {
                    if k == 0 {
                        Rational::zero()
                    } else {
                        Rational::sign_power(k as i64 - 1) / Rational::from(k as i64)
                    }
                })
                .collect(),
        );
        let f = series(&[(0, 1), (1, 1), (3, 2), (-2, 5), (0, 1), (7, 3), (1, 1), (-1, 9), (4, 1)]);
        assert_eq!(
            PowerSeries::compose(&mercator, &f).unwrap(),
            f.log1p().unwrap()
        );
    }

    #[test]
    fn geometric_series_and_power_rule() {
        let one_minus_t = &PowerSeries::one(7) - &PowerSeries::t(7);
        assert_eq!(one_minus_t.reciprocal().unwrap(), PowerSeries::from_coeffs(vec![Rational::one(); 7]));

        let t3 = PowerSeries::monomial(Rational::one(), 3, 7);
        assert_eq!(t3.derivative().unwrap(), PowerSeries::monomial(q(3, 1), 2, 6));
    }

    #[test]
    fn precondition_violations() {
        let s = PowerSeries::one(4);
        assert!(s.log1p().is_err());
        assert!(s.exp().is_err());
        assert!(PowerSeries::t(4).reciprocal().is_err());
        assert!(PowerSeries::one(1).derivative().is_err());
    }

    #[test]
    fn eval_polynomial_allows_constant_terms() {
        // (1 + t)^2 via the polynomial x^2 at x = 1 + t
        let x = &PowerSeries::one(4) + &PowerSeries::t(4);
        let p = PowerSeries::eval_polynomial(&[Rational::zero(), Rational::zero(), Rational::one()], &x);
        assert_eq!(p, series(&[(1, 1), (2, 1), (1, 1), (0, 1)]));
    }
}
