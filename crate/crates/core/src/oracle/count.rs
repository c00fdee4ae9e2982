use std::collections::HashMap;

use super::group::PermutationGroupAction;
use super::perm::MarkedPermutation;
use crate::algebra::{Polynomial, Rational};
use crate::error::{domain, Error, Result};

/// Finite fields at which a quotient's count polynomial is sampled for the
/// soundness check.
pub const SAMPLE_FIELDS: [i64; 7] = [2, 3, 4, 5, 7, 8, 9];

pub fn mobius(n: u64) -> i64 {
    assert!(n > 0);
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `m_l(q) = Σ_{e|l} μ(l/e)(q^e + 1)`: points of `P^1` whose Frobenius orbit
/// has exactly `l` elements.
pub fn exact_degree_count(l: u32) -> Result<Polynomial> {
    if l == 0 {
        return Err(domain("exact_degree_count", "l = 0"));
    }
    let mut total = Polynomial::zero();
    for e in (1..=l).filter(|e| l.is_multiple_of(*e)) {
        let mu = mobius(u64::from(l / e));
        if mu != 0 {
            let term = Polynomial::monomial(Rational::one(), e as usize) + Polynomial::one();
            total = total + term.scale(&Rational::from(mu));
        }
    }
    Ok(total)
}

fn pgl2_order() -> Polynomial {
    Polynomial::from_i64s(&[0, -1, 0, 1])
}

/// Number of `PGL_2`-orbits of `n` distinct points on `P^1` on which
/// Frobenius acts through `sigma`, as a polynomial in `q`.
pub fn twisted_count(n: u32, sigma: &MarkedPermutation) -> Result<Polynomial> {
    if n < 3 {
        return Err(domain("twisted_count", format!("n = {n} < 3")));
    }
    if sigma.n() != n {
        return Err(domain(
            "twisted_count",
            format!("permutation of {} markings on M_0,{n}", sigma.n()),
        ));
    }
    twisted_count_by_type(sigma.cycle_type())
}

fn twisted_count_by_type(cycle_type: &[u32]) -> Result<Polynomial> {
    let mut multiplicity: HashMap<u32, u32> = HashMap::new();
    for &l in cycle_type {
        *multiplicity.entry(l).or_default() += 1;
    }
    let mut num = Polynomial::one();
    for (&l, &c) in &multiplicity {
        let m = exact_degree_count(l)?;
        for t in 0..c {
            let shift = Polynomial::constant(Rational::from(i64::from(t) * i64::from(l)));
            num = num * (&m - &shift);
        }
    }
    num.exact_div(&pgl2_order())
}

/// Result of twisted Burnside counting on a quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideQuotient {
    /// Point count of the quotient over `F_q`.
    pub polynomial: Polynomial,
    /// `polynomial(1)`.
    pub chi: Rational,
}

impl BurnsideQuotient {
    /// The count polynomial must give a nonnegative integer at every sampled
    /// field size.
    pub fn check_counts(&self) -> Result<()> {
        for q in SAMPLE_FIELDS {
            let v = self.polynomial.eval(&Rational::from(q));
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Mismatch {
                    what: format!("point count at q = {q}"),
                    expected: "a nonnegative integer".into(),
                    actual: v.to_string(),
                });
            }
        }
        Ok(())
    }
}

/// `P(q) = (1/|G|) Σ_g Π_i N_{g_i}(q)`, and `χ = P(1)`.
pub fn burnside_quotient(action: &PermutationGroupAction) -> Result<BurnsideQuotient> {
    if let Some(f) = action.factors().iter().find(|f| f.genus != 0) {
        return Err(Error::Unsupported(format!(
            "factor M_{},{} is not genus 0; its point count is not polynomial",
            f.genus, f.n
        )));
    }
    if let Some(f) = action.factors().iter().find(|f| f.n < 3) {
        return Err(domain("burnside_quotient", format!("factor with n = {} < 3", f.n)));
    }
    // many elements share cycle types; count each type once
    let mut classes: HashMap<Vec<&[u32]>, u64> = HashMap::new();
    for g in action.elements() {
        let key: Vec<&[u32]> = g.iter().map(MarkedPermutation::cycle_type).collect();
        *classes.entry(key).or_default() += 1;
    }
    let mut cache: HashMap<&[u32], Polynomial> = HashMap::new();
    let mut total = Polynomial::zero();
    for (key, size) in classes {
        let mut term = Polynomial::constant(Rational::from(size as i64));
        for ct in key {
            if !cache.contains_key(ct) {
                cache.insert(ct, twisted_count_by_type(ct)?);
            }
            term = term * &cache[ct];
        }
        total = total + term;
    }
    let polynomial = total.scale(&Rational::from(action.order() as i64).recip());
    let chi = polynomial.eval(&Rational::one());
    Ok(BurnsideQuotient { polynomial, chi })
}

pub fn burnside_quotient_chi(action: &PermutationGroupAction) -> Result<Rational> {
    Ok(burnside_quotient(action)?.chi)
}

#[cfg(test)]
mod tests {
    use super::super::group::Factor;
    use super::*;
    use crate::open::chi_m0_open;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn exact_degree_points() {
        assert_eq!(exact_degree_count(1).unwrap(), poly(&[1, 1]));
        assert_eq!(exact_degree_count(2).unwrap(), poly(&[0, -1, 1]));
        // q^6 + 1 - (q^3 + 1) - (q^2 + 1) + (q + 1)
        assert_eq!(exact_degree_count(6).unwrap(), poly(&[0, 1, -1, -1, 0, 0, 1]));
    }

    #[test]
    fn twisted_counts() {
        let id4 = MarkedPermutation::identity(4);
        assert_eq!(twisted_count(4, &id4).unwrap(), poly(&[-2, 1]));
        let s34 = MarkedPermutation::parse(4, "(3 4)").unwrap();
        assert_eq!(twisted_count(4, &s34).unwrap(), poly(&[0, 1]));
        assert_eq!(twisted_count(3, &MarkedPermutation::identity(3)).unwrap(), Polynomial::one());
        assert!(twisted_count(2, &MarkedPermutation::identity(2)).is_err());
        assert!(twisted_count(5, &id4).is_err());
    }

    #[test]
    fn burnside_examples() {
        let klein6 = PermutationGroupAction::klein(6).unwrap();
        let b = burnside_quotient(&klein6).unwrap();
        assert_eq!(b.chi, Rational::from(-2));
        b.check_counts().unwrap();

        let s = PermutationGroupAction::from_generators(
            vec![Factor::genus0(4)],
            vec![vec![MarkedPermutation::parse(4, "(3 4)").unwrap()]],
        )
        .unwrap();
        assert_eq!(burnside_quotient_chi(&s).unwrap(), Rational::zero());

        let d4 = burnside_quotient(&PermutationGroupAction::dihedral4(6).unwrap()).unwrap();
        assert_eq!(d4.polynomial, poly(&[-3, 3, -2, 1]));
    }

    #[test]
    fn trivial_group_gives_open_chi() {
        for n in 3..=10 {
            let g = PermutationGroupAction::trivial(vec![Factor::genus0(n)]);
            assert_eq!(burnside_quotient_chi(&g).unwrap(), chi_m0_open(n).unwrap());
        }
    }

    #[test]
    fn elliptic_factor_refused() {
        let g = PermutationGroupAction::trivial(vec![Factor { genus: 1, n: 3 }]);
        assert!(matches!(burnside_quotient(&g), Err(Error::Unsupported(_))));
    }
}
