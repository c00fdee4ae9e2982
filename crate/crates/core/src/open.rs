//! Euler characteristics of the open moduli spaces `M_{0,n}`, `M_{1,n}` and
//! `M_{2,n}`.
//!
//! Each value is available from its closed form and, for genus 1 and 2, by
//! stratifying according to how the marked points sit relative to the
//! hyperelliptic involution, plus a universal-curve recursion for large `n`.
//! The closed forms are authoritative; the other paths exist to check them.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Rational;
use crate::error::{domain, Error, Result};
use crate::quotient::chi_m0_mod_sj;

/// How to compute an open Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    #[default]
    Closed,
    Strata,
    Recursive,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Strata => "strata",
            Method::Recursive => "recursive",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "strata" => Ok(Method::Strata),
            "recursive" => Ok(Method::Recursive),
            _ => Err(Error::Parse {
                what: "method",
                input: s.to_string(),
            }),
        }
    }
}

const M1_LOW: [i64; 4] = [1, 1, 0, 0];
const M2_LOW: [i64; 7] = [1, 2, 2, 0, -4, 0, -24];

/// `χ(M_{0,n}) = (-1)^{n-3} (n-3)!`
pub fn chi_m0_open(n: u32) -> Result<Rational> {
    if n < 3 {
        return Err(domain("chi_m0_open", format!("n = {n} < 3")));
    }
    Ok(Rational::sign_power(i64::from(n - 3)) * Rational::factorial(n - 3))
}

/// `χ(M_{1,n})`: tabulated for n <= 4, `(-1)^n (n-1)!/12` after.
pub fn chi_m1_open(n: u32) -> Result<Rational> {
    match n {
        0 => Err(domain("chi_m1_open", "n = 0 < 1")),
        1..=4 => Ok(Rational::from(M1_LOW[n as usize - 1])),
        _ => Ok(Rational::sign_power(i64::from(n)) * Rational::factorial(n - 1) / Rational::from(12)),
    }
}

/// `χ(M_{2,n})`: tabulated for n <= 6, `(-1)^{n+1} (n+1)!/240` after.
pub fn chi_m2_open(n: u32) -> Result<Rational> {
    match M2_LOW.get(n as usize) {
        Some(&v) => Ok(Rational::from(v)),
        None => Ok(Rational::sign_power(i64::from(n) + 1) * Rational::factorial(n + 1)
            / Rational::from(240)),
    }
}

/// The locus `U_{j,r}` of curves in `M_{g,n}` whose markings contain `j`
/// points fixed by the involution and `r` pairs exchanged by it.
///
/// In genus 1 the involution is centered at the last marking, which is not
/// counted in `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StratumSpec {
    pub genus: u8,
    pub n: u32,
    pub j: u32,
    pub r: u32,
}

impl StratumSpec {
    pub fn new(genus: u8, n: u32, j: u32, r: u32) -> Result<Self> {
        let spec = StratumSpec { genus, n, j, r };
        spec.validate()?;
        Ok(spec)
    }

    /// Markings that are free to move, i.e. not the genus-1 center.
    fn free(&self) -> u32 {
        if self.genus == 1 {
            self.n - 1
        } else {
            self.n
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Err(domain("stratum", reason));
        match self.genus {
            1 if self.n == 0 => return bad("genus-1 strata need n >= 1".into()),
            1 => {}
            2 if self.j > 6 => return bad(format!("j = {} > 6 fixed points", self.j)),
            2 => {}
            g => return bad(format!("genus {g} has no stratification")),
        }
        let free = self.free();
        if self.j > free {
            return bad(format!("j = {} exceeds the {free} free markings", self.j));
        }
        if 2 * self.r > free - self.j {
            return bad(format!("r = {} pairs do not fit in {} markings", self.r, free - self.j));
        }
        Ok(())
    }
}

impl fmt::Display for StratumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U[g={}, n={}, j={}, r={}]", self.genus, self.n, self.j, self.r)
    }
}

/// Number of ways to pick which markings are fixed and which are paired:
/// `C(n,j) (n-j)! / (2^r (n-j-2r)! r!)`.
pub fn a_jr(n: u32, j: u32, r: u32) -> Result<Rational> {
    StratumSpec::new(2, n, j, r)?;
    Ok(multiplicity(n, j, r))
}

fn multiplicity(n: u32, j: u32, r: u32) -> Rational {
    Rational::binomial(n, j) * Rational::factorial(n - j)
        / (Rational::from(2).pow(r as i32) * Rational::factorial(n - j - 2 * r) * Rational::factorial(r))
}

/// Strata of `M_{2,n}` whose covering map to the quotient is ramified.
const RAMIFIED: [(u32, u32, u32); 3] = [(2, 0, 0), (3, 0, 1), (4, 0, 2)];

/// `χ(U_{j,r})`.
///
/// In genus 2, `U_{j,r}` covers `M_{0,n+6-r-j} / S_{6-j}` with degree
/// `2^{n-j-r-1}`, except that it is isomorphic to it when every marking is
/// fixed, and the three strata in [`RAMIFIED`] are double covers branched
/// over a copy of `M_{0,5}/S_3`.
///
/// In genus 1 the base is `M_{0,n-r+3-j} / S_{3-j}` and the degree is
/// `2^{n-j-r-2}`, which is a half when every free marking is fixed. Only
/// `n <= 4` has a stratification of this shape.
pub fn chi_u_jr(spec: &StratumSpec) -> Result<Rational> {
    spec.validate()?;
    let StratumSpec { genus, n, j, r } = *spec;
    if genus == 1 {
        if n > 4 {
            return Err(domain("chi_u_jr", format!("genus-1 strata need n <= 4, got {n}")));
        }
        let m = n - 1;
        let base = chi_m0_mod_sj(m - r + 4 - j, 3 - j)?;
        return Ok(Rational::from(2).pow(m as i32 - j as i32 - r as i32 - 1) * base);
    }
    let base = chi_m0_mod_sj(n + 6 - r - j, 6 - j)?;
    if j == n && r == 0 {
        return Ok(base);
    }
    if RAMIFIED.contains(&(n, j, r)) {
        return Ok(Rational::from(2) * base - chi_m0_mod_sj(5, 3)?);
    }
    Ok(Rational::from(2).pow((n - j - r - 1) as i32) * base)
}

/// `Σ_{j,r} a_{j,r} χ(U_{j,r})` over all strata of `M_{2,n}`, for n <= 6.
pub fn chi_m2_via_strata(n: u32) -> Result<Rational> {
    if n > 6 {
        return Err(domain(
            "chi_m2_via_strata",
            format!("n = {n} > 6 has more markings than Weierstrass points; use the recursion"),
        ));
    }
    let mut total = Rational::zero();
    for j in 0..=n {
        for r in 0..=(n - j) / 2 {
            total += a_jr(n, j, r)? * chi_u_jr(&StratumSpec::new(2, n, j, r)?)?;
        }
    }
    Ok(total)
}

/// `χ(M_{2,n})` for n >= 7 by forgetting the last marking.
///
/// Over `M_{2,6}` the fiber is a genus-2 curve minus six points, except over
/// `U_{6,0}` where the six markings are exactly the Weierstrass points and the
/// fiber is that curve modulo the involution. Past n = 7 every fiber is the
/// curve minus `n-1` points.
pub fn chi_m2_recursive(n: u32) -> Result<Rational> {
    if n < 7 {
        return Err(domain("chi_m2_recursive", format!("n = {n} < 7; use the strata")));
    }
    let u60 = chi_u_jr(&StratumSpec::new(2, 6, 6, 0)?)?;
    let m26 = chi_m2_via_strata(6)?;
    let mut chi = Rational::from(-8) * (&m26 - &u60) + Rational::from(-4) * u60;
    for h in 7..n {
        chi = Rational::from(-(i64::from(h) + 2)) * chi;
    }
    Ok(chi)
}

/// `χ(M_{1,n})` for 1 <= n <= 4, via strata over the involution centered at
/// the last marking plus the locus where all free markings are 2-torsion.
pub fn chi_m1_via_strata(n: u32) -> Result<Rational> {
    if !(1..=4).contains(&n) {
        return Err(domain("chi_m1_via_strata", format!("need 1 <= n <= 4, got {n}")));
    }
    let m = n - 1;
    let mut total = Rational::zero();
    for j in 0..=m {
        for r in 0..=(m - j) / 2 {
            total += multiplicity(m, j, r) * chi_u_jr(&StratumSpec::new(1, n, j, r)?)?;
        }
    }
    Ok(total + Rational::new(1, 2) * chi_m0_mod_sj(4, 3 - m)?)
}

/// `χ(M_{1,n})` for n >= 5 by forgetting the last marking.
pub fn chi_m1_recursive(n: u32) -> Result<Rational> {
    if n < 5 {
        return Err(domain("chi_m1_recursive", format!("n = {n} < 5; use the strata")));
    }
    let m14 = chi_m1_via_strata(4)?;
    let m04 = chi_m0_open(4)?;
    // over the M_{0,4} locus the four markings are the 2-torsion points
    let mut chi = Rational::from(-4) * (&m14 - &m04) + Rational::from(-2) * m04;
    for h in 5..n {
        chi = Rational::from(-i64::from(h)) * chi;
    }
    Ok(chi)
}

/// `χ(M_{g,n})` by the chosen method.
pub fn chi_open(genus: u8, n: u32, method: Method) -> Result<Rational> {
    match (genus, method) {
        (0, Method::Closed) => chi_m0_open(n),
        (1, Method::Closed) => chi_m1_open(n),
        (1, Method::Strata) => chi_m1_via_strata(n),
        (1, Method::Recursive) => chi_m1_recursive(n),
        (2, Method::Closed) => chi_m2_open(n),
        (2, Method::Strata) => chi_m2_via_strata(n),
        (2, Method::Recursive) => chi_m2_recursive(n),
        (0, m) => Err(Error::Unsupported(format!("genus 0 has no {m} method"))),
        (g, _) => Err(domain("chi_open", format!("genus {g} is not 0, 1 or 2"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn closed_forms() {
        assert_eq!(chi_m0_open(3).unwrap(), int(1));
        assert_eq!(chi_m0_open(4).unwrap(), int(-1));
        assert_eq!(chi_m0_open(7).unwrap(), int(24));
        assert!(chi_m0_open(2).is_err());
        assert_eq!(chi_m1_open(1).unwrap(), int(1));
        assert_eq!(chi_m1_open(5).unwrap(), int(-2));
        assert_eq!(chi_m1_open(6).unwrap(), int(10));
        assert!(chi_m1_open(0).is_err());
        assert_eq!(chi_m2_open(0).unwrap(), int(1));
        assert_eq!(chi_m2_open(6).unwrap(), int(-24));
        assert_eq!(chi_m2_open(7).unwrap(), int(168));
    }

    #[test]
    fn stratum_coefficients() {
        for n in 0..=6 {
            assert_eq!(a_jr(n, n, 0).unwrap(), int(1));
        }
        assert_eq!(a_jr(2, 0, 1).unwrap(), int(1));
        assert_eq!(a_jr(4, 0, 2).unwrap(), int(3));
        assert!(a_jr(3, 0, 2).is_err());
        assert!(a_jr(8, 7, 0).is_err());
    }

    #[test]
    fn genus_two_strata() {
        let u = |n, j, r| chi_u_jr(&StratumSpec::new(2, n, j, r).unwrap()).unwrap();
        assert_eq!(u(0, 0, 0), int(1));
        assert_eq!(u(2, 0, 0), int(-1));
        assert_eq!(u(1, 1, 0), int(1));
        let expected = [1, 2, 2, 0, -4, 0, -24];
        for (n, e) in expected.into_iter().enumerate() {
            assert_eq!(chi_m2_via_strata(n as u32).unwrap(), int(e), "n = {n}");
        }
        assert!(chi_m2_via_strata(7).is_err());
    }

    #[test]
    fn genus_two_recursion() {
        assert_eq!(chi_m2_recursive(7).unwrap(), int(168));
        assert_eq!(chi_m2_recursive(8).unwrap(), int(-1512));
        assert_eq!(chi_m2_recursive(10).unwrap(), int(-166320));
        for n in 7..=15 {
            assert_eq!(chi_m2_recursive(n).unwrap(), chi_m2_open(n).unwrap());
        }
        assert!(chi_m2_recursive(6).is_err());
    }

    #[test]
    fn genus_one() {
        for n in 1..=4 {
            assert_eq!(chi_m1_via_strata(n).unwrap(), chi_m1_open(n).unwrap(), "n = {n}");
        }
        assert_eq!(chi_m1_recursive(5).unwrap(), int(-2));
        for n in 5..=12 {
            assert_eq!(chi_m1_recursive(n).unwrap(), chi_m1_open(n).unwrap());
        }
        assert!(chi_m1_via_strata(5).is_err());
        assert!(chi_m1_recursive(4).is_err());
    }

    #[test]
    fn dispatch() {
        assert_eq!(chi_open(2, 4, Method::Strata).unwrap(), int(-4));
        assert_eq!(chi_open(1, 6, Method::Recursive).unwrap(), int(10));
        assert!(matches!(chi_open(0, 5, Method::Strata), Err(Error::Unsupported(_))));
        assert!(chi_open(3, 5, Method::Closed).is_err());
        assert_eq!("strata".parse::<Method>().unwrap(), Method::Strata);
    }
}
