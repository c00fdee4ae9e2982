use crate::algebra::{PowerSeries, Rational};
use crate::error::{domain, Error, Result};
use crate::open::chi_m0_open;

pub(crate) fn check_order(op: &'static str, order: usize) -> Result<()> {
    if order < 2 {
        return Err(domain(op, format!("order = {order} < 2")));
    }
    Ok(())
}

/// The generating series `D` of stable rooted trees, the solution of
/// `D'(1 - log(1+D)) = 1` with `D(0) = 0`.
pub fn series_d(order: usize) -> Result<PowerSeries> {
    check_order("series_d", order)?;
    let mut coeffs = vec![Rational::zero(), Rational::one()];
    // once D is known mod t^k, the equation fixes [t^(k-1)] D' = k D_k
    while coeffs.len() < order {
        let k = coeffs.len();
        let d = PowerSeries::from_coeffs(coeffs.clone());
        let rhs = (PowerSeries::one(k) - d.log1p()?).reciprocal()?;
        coeffs.push(rhs.coeff(k - 1)? / Rational::from(k as i64));
    }
    Ok(PowerSeries::from_coeffs(coeffs))
}

/// `E = log(1 + D)`.
pub fn series_e(order: usize) -> Result<PowerSeries> {
    series_d(order)?.log1p()
}

/// `E` as `Σ_{n≥1} χ(M_{0,n+2}) D^n / n!`, the contribution of trees whose
/// root carries two extra half-edges.
pub fn series_e_from_trees(order: usize) -> Result<PowerSeries> {
    let d = series_d(order)?;
    let mut coeffs = vec![Rational::zero()];
    for n in 1..order as u32 {
        coeffs.push(chi_m0_open(n + 2)? / Rational::factorial(n));
    }
    Ok(PowerSeries::eval_polynomial(&coeffs, &d))
}

/// `D`, `E` and the two reciprocals every closed expression is built from.
pub(crate) struct Terms {
    pub d: PowerSeries,
    pub e: PowerSeries,
    /// `1/(1+D)`
    pub inv_d: PowerSeries,
    /// `1/(1-E)`
    pub inv_e: PowerSeries,
}

impl Terms {
    pub fn new(op: &'static str, order: usize) -> Result<Self> {
        check_order(op, order)?;
        let d = series_d(order)?;
        let e = d.log1p()?;
        let one = PowerSeries::one(order);
        let inv_d = (&one + &d).reciprocal()?;
        let inv_e = (&one - &e).reciprocal()?;
        Ok(Terms { d, e, inv_d, inv_e })
    }

    /// `Σ c_k D^k`
    pub fn in_d(&self, c: &[Rational]) -> PowerSeries {
        PowerSeries::eval_polynomial(c, &self.d)
    }

    /// `Σ c_k E^k`
    pub fn in_e(&self, c: &[Rational]) -> PowerSeries {
        PowerSeries::eval_polynomial(c, &self.e)
    }

    /// `log(1 - E)`
    pub fn log_one_minus_e(&self) -> Result<PowerSeries> {
        (-&self.e).log1p()
    }
}

/// `Σ_n a_n D^n / n!` over every `n < order` that `a` accepts.
pub(crate) fn egf_in_d(
    d: &PowerSeries,
    start: u32,
    a: impl Fn(u32) -> Result<Rational>,
) -> Result<PowerSeries> {
    let mut coeffs = vec![Rational::zero(); d.order()];
    for n in start..d.order() as u32 {
        coeffs[n as usize] = a(n)? / Rational::factorial(n);
    }
    Ok(PowerSeries::eval_polynomial(&coeffs, d))
}

/// Errors unless `a` and `b` agree to their common order.
pub(crate) fn must_agree(what: &str, a: &PowerSeries, b: &PowerSeries) -> Result<()> {
    if a == b {
        return Ok(());
    }
    let k = a
        .coeffs()
        .iter()
        .zip(b.coeffs())
        .position(|(x, y)| x != y)
        .unwrap_or(a.order().min(b.order()));
    Err(Error::Mismatch {
        what: format!("{what}, coefficient of t^{k}"),
        expected: a.coeffs().get(k).map_or("?".into(), ToString::to_string),
        actual: b.coeffs().get(k).map_or("?".into(), ToString::to_string),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn d_coefficients() {
        let d = series_d(8).unwrap();
        let expected = [
            q(0, 1),
            q(1, 1),
            q(1, 2),
            q(1, 3),
            q(7, 24),
            q(17, 60),
            q(71, 240),
            q(163, 504),
        ];
        assert_eq!(d.coeffs(), &expected);
        assert!(series_d(1).is_err());
    }

    #[test]
    fn d_solves_its_equation() {
        let d = series_d(14).unwrap();
        let e = d.log1p().unwrap();
        let lhs = &d.derivative().unwrap() * &(PowerSeries::one(14) - e);
        assert_eq!(lhs, PowerSeries::one(13));
    }

    #[test]
    fn two_ways_to_e() {
        let e = series_e(12).unwrap();
        assert_eq!(e.coeff(1).unwrap(), &q(1, 1));
        assert_eq!(e.coeff(2).unwrap(), &q(0, 1));
        assert!(e.constant_term().is_zero());
        assert_eq!(e, series_e_from_trees(12).unwrap());
    }

    #[test]
    fn mismatch_reports_first_difference() {
        let a = PowerSeries::from_coeffs(vec![q(1, 1), q(2, 1)]);
        let b = PowerSeries::from_coeffs(vec![q(1, 1), q(3, 1)]);
        let err = must_agree("x", &a, &b).unwrap_err();
        assert!(err.to_string().contains("t^1"));
    }
}
