//! Euler characteristics of finite quotients of `M_{0,n}`, `M_{1,n}` and
//! their products, by the small permutation groups that show up as graph
//! stabilizers in the boundary of `M̄_{g,n}`.
//!
//! When a group acts freely the characteristic is `χ / |G|`. At low `n` the
//! actions have fixed points and the values are exceptional; those live in
//! explicit tables below. Inputs outside each formula's range are rejected,
//! never extrapolated.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Rational;
use crate::error::{domain, Error, Result};
use crate::open::{chi_m0_open, chi_m1_open};

/// Which group acts on which space. Group actions are fixed as follows
/// (markings are 1-based):
///
/// * `M0ModSj`: `S_j` permuting `j` of the `n` markings.
/// * `M0ModKlein`: `⟨(n-3 n-2), (n-1 n)⟩`.
/// * `M0ModD4`: `⟨(1 2), (1 3)(2 4)⟩`.
/// * `Prod2ModS2`: one swap of the last two markings, on both factors at once.
/// * `Prod2ModS3`: `S_3` on the last three markings, on both factors at once.
/// * `Prod2ModKlein`: `σ1` swaps the last pair of factor 1 and `(n2-3 n2-2)`
///   of factor 2; `σ2` swaps the last pair of factor 2.
/// * `Prod3ModKlein`: `σ1` swaps the last pair of factor 1 and `(n3-3 n3-2)`;
///   `σ2` swaps the last pair of factor 2 and of factor 3.
/// * `M1ModS2`: swap of the last two markings.
/// * `M1CrossM0ModS2`: swap of the last two markings on both factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuotientKind {
    M0ModSj,
    M0ModKlein,
    M0ModD4,
    Prod2ModS2,
    Prod2ModS3,
    Prod2ModKlein,
    Prod3ModKlein,
    M1ModS2,
    M1CrossM0ModS2,
}

impl QuotientKind {
    pub const ALL: [QuotientKind; 9] = [
        QuotientKind::M0ModSj,
        QuotientKind::M0ModKlein,
        QuotientKind::M0ModD4,
        QuotientKind::Prod2ModS2,
        QuotientKind::Prod2ModS3,
        QuotientKind::Prod2ModKlein,
        QuotientKind::Prod3ModKlein,
        QuotientKind::M1ModS2,
        QuotientKind::M1CrossM0ModS2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuotientKind::M0ModSj => "m0-mod-sj",
            QuotientKind::M0ModKlein => "m0-mod-klein",
            QuotientKind::M0ModD4 => "m0-mod-d4",
            QuotientKind::Prod2ModS2 => "prod2-mod-s2",
            QuotientKind::Prod2ModS3 => "prod2-mod-s3",
            QuotientKind::Prod2ModKlein => "prod2-mod-klein",
            QuotientKind::Prod3ModKlein => "prod3-mod-klein",
            QuotientKind::M1ModS2 => "m1-mod-s2",
            QuotientKind::M1CrossM0ModS2 => "m1-cross-m0-mod-s2",
        }
    }

    /// Number of marked-point counts in [`QuotientSpec::sizes`].
    pub fn arity(self) -> usize {
        match self {
            QuotientKind::M0ModSj
            | QuotientKind::M0ModKlein
            | QuotientKind::M0ModD4
            | QuotientKind::M1ModS2 => 1,
            QuotientKind::Prod2ModS2
            | QuotientKind::Prod2ModS3
            | QuotientKind::Prod2ModKlein
            | QuotientKind::M1CrossM0ModS2 => 2,
            QuotientKind::Prod3ModKlein => 3,
        }
    }

    /// True when every factor is a genus-0 configuration space.
    pub fn is_genus_zero(self) -> bool {
        !matches!(self, QuotientKind::M1ModS2 | QuotientKind::M1CrossM0ModS2)
    }
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QuotientKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QuotientKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "quotient kind",
                input: s.to_string(),
            })
    }
}

/// One quotient situation: a kind plus its marked-point counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientSpec {
    pub kind: QuotientKind,
    pub sizes: Vec<u32>,
    /// Number of symmetrized markings; only for [`QuotientKind::M0ModSj`].
    pub j: Option<u32>,
}

impl QuotientSpec {
    pub fn new(kind: QuotientKind, sizes: Vec<u32>, j: Option<u32>) -> Result<Self> {
        if sizes.len() != kind.arity() {
            return Err(domain(
                "quotient",
                format!("{kind} takes {} size(s), got {}", kind.arity(), sizes.len()),
            ));
        }
        match (kind, j) {
            (QuotientKind::M0ModSj, None) => {
                return Err(domain("quotient", "m0-mod-sj needs j"));
            }
            (QuotientKind::M0ModSj, Some(_)) => {}
            (_, Some(_)) => {
                return Err(domain("quotient", format!("{kind} does not take j")));
            }
            (_, None) => {}
        }
        let spec = QuotientSpec { kind, sizes, j };
        spec.chi()?;
        Ok(spec)
    }

    pub fn chi(&self) -> Result<Rational> {
        let s = &self.sizes;
        match self.kind {
            QuotientKind::M0ModSj => chi_m0_mod_sj(s[0], self.j.unwrap_or(0)),
            QuotientKind::M0ModKlein => chi_m0_mod_klein(s[0]),
            QuotientKind::M0ModD4 => chi_m0_mod_d4(s[0]),
            QuotientKind::Prod2ModS2 => chi_prod2_mod_s2(s[0], s[1]),
            QuotientKind::Prod2ModS3 => chi_prod2_mod_s3(s[0], s[1]),
            QuotientKind::Prod2ModKlein => chi_prod2_mod_klein(s[0], s[1]),
            QuotientKind::Prod3ModKlein => chi_prod3_mod_klein(s[0], s[1], s[2]),
            QuotientKind::M1ModS2 => chi_m1_mod_s2(s[0]),
            QuotientKind::M1CrossM0ModS2 => chi_m1_cross_m0_mod_s2(s[0], s[1]),
        }
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, n) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}")?;
        }
        if let Some(j) = self.j {
            write!(f, "; j={j}")?;
        }
        write!(f, ")")
    }
}

// Exceptional low-n values, where the group action has fixed points.

/// `χ(M_{0,n} / (S_2×S_2))` for n = 4, 5, 6.
const KLEIN_LOW: [(u32, i64); 3] = [(4, 0), (5, 0), (6, -2)];
/// `χ(M_{0,n} / D_4)` for n = 4, 5, 6.
const D4_LOW: [(u32, i64); 3] = [(4, 0), (5, 0), (6, -1)];
/// `χ((M_{0,n1} × M_{0,n2}) / S_3)` for (4,4), (4,5), (5,5).
const PROD2_S3_LOW: [((u32, u32), i64); 3] = [((4, 4), 2), ((4, 5), 1), ((5, 5), 2)];
/// `χ((M_{0,4} × M_{0,n2}) / (S_2×S_2))` for n2 = 4, 5, 6.
const PROD2_KLEIN_N1_4: [(u32, i64); 3] = [(4, 0), (5, -1), (6, 1)];
/// `χ((M_{0,4} × M_{0,4} × M_{0,n3}) / (S_2×S_2))` for n3 = 4, 5, 6.
const PROD3_KLEIN_44: [(u32, i64); 3] = [(4, -1), (5, 0), (6, -2)];
/// `χ(M_{1,n} / S_2)` for n = 2..=6.
const M1_S2_LOW: [(u32, i64); 5] = [(2, 1), (3, 1), (4, 1), (5, 0), (6, 6)];

fn lookup<K: PartialEq + Copy>(table: &[(K, i64)], key: K) -> Option<Rational> {
    table
        .iter()
        .find(|(k, _)| *k == key)
        .map(|&(_, v)| Rational::from(v))
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// `χ(M_{0,n} / S_j)`.
pub fn chi_m0_mod_sj(n: u32, j: u32) -> Result<Rational> {
    if n < 3 {
        return Err(domain("chi_m0_mod_sj", format!("n = {n} < 3")));
    }
    if j > n {
        return Err(domain("chi_m0_mod_sj", format!("j = {j} > n = {n}")));
    }
    Ok(match n - j {
        // at least three markings stay fixed, so S_j acts freely
        3.. => chi_m0_open(n)? / Rational::factorial(j),
        2 if n.is_multiple_of(2) => Rational::zero(),
        2 => Rational::one(),
        _ => Rational::one(),
    })
}

pub fn chi_m0_mod_klein(n: u32) -> Result<Rational> {
    if n < 4 {
        return Err(domain("chi_m0_mod_klein", format!("n = {n} < 4")));
    }
    match lookup(&KLEIN_LOW, n) {
        Some(v) => Ok(v),
        None => Ok(chi_m0_open(n)? / Rational::from(4)),
    }
}

pub fn chi_m0_mod_d4(n: u32) -> Result<Rational> {
    if n < 4 {
        return Err(domain("chi_m0_mod_d4", format!("n = {n} < 4")));
    }
    match lookup(&D4_LOW, n) {
        Some(v) => Ok(v),
        None => Ok(chi_m0_open(n)? / Rational::from(8)),
    }
}

fn check_ordered_pair(op: &'static str, n1: u32, n2: u32) -> Result<()> {
    if n1 < 3 || n1 > n2 {
        return Err(domain(op, format!("need 3 <= n1 <= n2, got ({n1}, {n2})")));
    }
    Ok(())
}

/// `χ((M_{0,n1} × M_{0,n2}) / S_2)`, the swap acting on both factors.
pub fn chi_prod2_mod_s2(n1: u32, n2: u32) -> Result<Rational> {
    check_ordered_pair("chi_prod2_mod_s2", n1, n2)?;
    Ok(match n1 {
        3 => chi_m0_mod_sj(n2, 2)?,
        4 => chi_m0_mod_sj(n2, 2)? - chi_m0_open(n2)?,
        _ => chi_m0_open(n1)? * chi_m0_open(n2)? * half(),
    })
}

pub fn chi_prod2_mod_s3(n1: u32, n2: u32) -> Result<Rational> {
    check_ordered_pair("chi_prod2_mod_s3", n1, n2)?;
    if n1 == 3 {
        return chi_m0_mod_sj(n2, 3);
    }
    if let Some(v) = lookup(&PROD2_S3_LOW, (n1, n2)) {
        return Ok(v);
    }
    // n2 >= 6 here
    Ok(chi_m0_open(n1)? * chi_m0_open(n2)? / Rational::from(6))
}

/// Klein group on `M_{0,a} × M_{0,b}` where `a` only sees one swap and `b`
/// carries both generators. No ordering between `a` and `b` is assumed.
fn chi_swap_times_klein(op: &'static str, single: u32, klein: u32) -> Result<Rational> {
    if single < 3 || klein < 4 {
        return Err(domain(op, format!("need sizes >= (3, 4), got ({single}, {klein})")));
    }
    match single {
        3 => chi_m0_mod_klein(klein),
        4 => lookup(&PROD2_KLEIN_N1_4, klein).ok_or_else(|| Error::OutsideTable {
            op,
            args: format!("4, {klein}"),
        }),
        _ => Ok(half() * chi_m0_open(single)? * chi_m0_mod_sj(klein, 2)?),
    }
}

/// `χ((M_{0,n1} × M_{0,n2}) / (S_2×S_2))`.
///
/// `(4, n2)` with `n2 >= 7` has no tabulated value and is refused with
/// [`Error::OutsideTable`]; the point-counting oracle can still evaluate it.
pub fn chi_prod2_mod_klein(n1: u32, n2: u32) -> Result<Rational> {
    check_ordered_pair("chi_prod2_mod_klein", n1, n2)?;
    chi_swap_times_klein("chi_prod2_mod_klein", n1, n2)
}

/// `χ((M_{0,n1} × M_{0,n2} × M_{0,n3}) / (S_2×S_2))`.
pub fn chi_prod3_mod_klein(n1: u32, n2: u32, n3: u32) -> Result<Rational> {
    const OP: &str = "chi_prod3_mod_klein";
    if n1 < 3 || n2 < 3 || n1 > n2 || n3 < 4 {
        return Err(domain(
            OP,
            format!("need 3 <= n1 <= n2 and n3 >= 4, got ({n1}, {n2}, {n3})"),
        ));
    }
    // the product M_{0,a} × M_{0,b} / S_2 is symmetric in its two factors
    let prod2_s2 = |a: u32, b: u32| chi_prod2_mod_s2(a.min(b), a.max(b));
    match (n1, n2) {
        (3, _) => chi_swap_times_klein(OP, n2, n3),
        (4, 4) => match lookup(&PROD3_KLEIN_44, n3) {
            Some(v) => Ok(v),
            None => Ok(chi_m0_open(n3)? / Rational::from(4)),
        },
        (4, _) => Ok(half() * prod2_s2(4, n3)? * chi_m0_open(n2)?),
        _ => Ok(half() * prod2_s2(n2, n3)? * chi_m0_open(n1)?),
    }
}

/// `χ(M_{1,n} / S_2)`, swapping the last two markings.
pub fn chi_m1_mod_s2(n: u32) -> Result<Rational> {
    if n < 2 {
        return Err(domain("chi_m1_mod_s2", format!("n = {n} < 2")));
    }
    match lookup(&M1_S2_LOW, n) {
        Some(v) => Ok(v),
        None => Ok(half() * chi_m1_open(n)?),
    }
}

/// `χ((M_{1,n1} × M_{0,n2}) / S_2)`, swapping the last two markings on both
/// factors. The swap needs two markings on the elliptic factor, so `n1 >= 2`.
pub fn chi_m1_cross_m0_mod_s2(n1: u32, n2: u32) -> Result<Rational> {
    if n1 < 2 || n2 < 3 {
        return Err(domain(
            "chi_m1_cross_m0_mod_s2",
            format!("need n1 >= 2 and n2 >= 3, got ({n1}, {n2})"),
        ));
    }
    Ok(match n2 {
        3 => chi_m1_mod_s2(n1)?,
        4 => chi_m1_mod_s2(n1)? - chi_m1_open(n1)?,
        _ => half() * chi_m0_open(n2)? * chi_m1_open(n1)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn symmetric_group_quotients() {
        assert_eq!(chi_m0_mod_sj(9, 6).unwrap(), int(1));
        assert_eq!(chi_m0_mod_sj(8, 6).unwrap(), int(0));
        assert_eq!(chi_m0_mod_sj(5, 3).unwrap(), int(1));
        for n in 3..12 {
            assert_eq!(chi_m0_mod_sj(n, 0).unwrap(), chi_m0_open(n).unwrap());
            assert_eq!(chi_m0_mod_sj(n, n).unwrap(), int(1));
            assert_eq!(chi_m0_mod_sj(n, n - 1).unwrap(), int(1));
            assert_eq!(chi_m0_mod_sj(n, n - 2).unwrap(), int((n % 2) as i64));
        }
        assert!(chi_m0_mod_sj(2, 0).is_err());
        assert!(chi_m0_mod_sj(5, 6).is_err());
    }

    #[test]
    fn klein_and_dihedral() {
        assert_eq!(chi_m0_mod_klein(6).unwrap(), int(-2));
        assert_eq!(chi_m0_mod_klein(4).unwrap(), int(0));
        assert_eq!(chi_m0_mod_klein(7).unwrap(), int(6));
        assert_eq!(chi_m0_mod_d4(6).unwrap(), int(-1));
        assert_eq!(chi_m0_mod_d4(5).unwrap(), int(0));
        assert_eq!(chi_m0_mod_d4(7).unwrap(), int(3));
        assert!(chi_m0_mod_klein(3).is_err());
        assert!(chi_m0_mod_d4(3).is_err());
    }

    #[test]
    fn product_quotients() {
        assert_eq!(chi_prod2_mod_s2(3, 6).unwrap(), int(-3));
        assert_eq!(chi_prod2_mod_s2(4, 6).unwrap(), int(3));
        assert_eq!(chi_prod2_mod_s2(5, 5).unwrap(), int(2));
        assert!(chi_prod2_mod_s2(6, 5).is_err());

        assert_eq!(chi_prod2_mod_s3(4, 4).unwrap(), int(2));
        assert_eq!(chi_prod2_mod_s3(4, 5).unwrap(), int(1));
        assert_eq!(chi_prod2_mod_s3(4, 6).unwrap(), int(1));

        assert_eq!(chi_prod2_mod_klein(4, 5).unwrap(), int(-1));
        assert_eq!(chi_prod2_mod_klein(3, 6).unwrap(), int(-2));
        assert_eq!(chi_prod2_mod_klein(5, 5).unwrap(), int(1));
        assert!(matches!(chi_prod2_mod_klein(5, 4), Err(Error::Domain { .. })));
        assert!(matches!(chi_prod2_mod_klein(4, 7), Err(Error::OutsideTable { .. })));

        assert_eq!(chi_prod3_mod_klein(4, 4, 4).unwrap(), int(-1));
        assert_eq!(chi_prod3_mod_klein(4, 4, 7).unwrap(), int(6));
        assert_eq!(chi_prod3_mod_klein(3, 4, 5).unwrap(), int(-1));
        assert!(chi_prod3_mod_klein(4, 4, 3).is_err());
    }

    #[test]
    fn elliptic_quotients() {
        assert_eq!(chi_m1_mod_s2(6).unwrap(), int(6));
        assert_eq!(chi_m1_mod_s2(3).unwrap(), int(1));
        assert_eq!(chi_m1_mod_s2(7).unwrap(), int(-30));
        assert!(chi_m1_mod_s2(1).is_err());

        assert_eq!(chi_m1_cross_m0_mod_s2(2, 3).unwrap(), int(1));
        assert_eq!(chi_m1_cross_m0_mod_s2(2, 4).unwrap(), int(0));
        assert_eq!(chi_m1_cross_m0_mod_s2(5, 5).unwrap(), int(-2));
    }

    #[test]
    fn branch_locus_of_a_single_swap() {
        // 2 χ(M_{0,n}/S_2) - χ(M_{0,n}) is the characteristic of the fixed
        // locus of the swap; it is empty once three markings stay fixed.
        for n in 5..12 {
            let fixed = int(2) * chi_m0_mod_sj(n, 2).unwrap() - chi_m0_open(n).unwrap();
            assert!(fixed.is_zero(), "n = {n}");
        }
        assert_eq!(int(2) * chi_m0_mod_sj(4, 2).unwrap() - chi_m0_open(4).unwrap(), int(1));
    }

    #[test]
    fn in_range_values_are_integers() {
        for n in 3..=12 {
            for j in 0..=n {
                assert!(chi_m0_mod_sj(n, j).unwrap().is_integer());
            }
            for n2 in n..=12 {
                assert!(chi_prod2_mod_s2(n, n2).unwrap().is_integer());
                assert!(chi_prod2_mod_s3(n, n2).unwrap().is_integer());
                if let Ok(v) = chi_prod2_mod_klein(n, n2) {
                    assert!(v.is_integer());
                }
                for n3 in 4..=10 {
                    match chi_prod3_mod_klein(n, n2, n3) {
                        Ok(v) => assert!(v.is_integer()),
                        Err(e) => assert!(matches!(e, Error::OutsideTable { .. })),
                    }
                }
            }
        }
        for n in 2..=14 {
            assert!(chi_m1_mod_s2(n).unwrap().is_integer());
            for n2 in 3..=10 {
                assert!(chi_m1_cross_m0_mod_s2(n, n2).unwrap().is_integer());
            }
        }
    }

    #[test]
    fn spec_construction_validates() {
        let s = QuotientSpec::new(QuotientKind::M0ModSj, vec![9], Some(6)).unwrap();
        assert_eq!(s.chi().unwrap(), int(1));
        assert!(QuotientSpec::new(QuotientKind::M0ModSj, vec![9], None).is_err());
        assert!(QuotientSpec::new(QuotientKind::M0ModD4, vec![6], Some(2)).is_err());
        assert!(QuotientSpec::new(QuotientKind::Prod2ModS2, vec![6], None).is_err());
        assert!(QuotientSpec::new(QuotientKind::Prod2ModKlein, vec![4, 8], None).is_err());
        for k in QuotientKind::ALL {
            assert_eq!(k.name().parse::<QuotientKind>().unwrap(), k);
        }
    }
}
