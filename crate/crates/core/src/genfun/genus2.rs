use std::fmt;
use std::str::FromStr;

use super::base::{egf_in_d, must_agree, Terms};
use crate::algebra::{q, PowerSeries, Rational};
use crate::error::{Error, Result};
use crate::open::chi_m2_open;

/// The genus-2 stable graph types, with types 2, 3 and 4 handled together.
/// Type 1 is the single genus-2 vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum K2Type {
    T1,
    T234,
    T5,
    T6,
    T7,
}

impl K2Type {
    pub const ALL: [K2Type; 5] = [K2Type::T1, K2Type::T234, K2Type::T5, K2Type::T6, K2Type::T7];

    pub fn label(self) -> &'static str {
        match self {
            K2Type::T1 => "1",
            K2Type::T234 => "234",
            K2Type::T5 => "5",
            K2Type::T6 => "6",
            K2Type::T7 => "7",
        }
    }
}

impl fmt::Display for K2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for K2Type {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        K2Type::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::Parse {
                what: "genus-2 graph type",
                input: s.to_string(),
            })
    }
}

fn fr(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(p, d)| q(p, d)).collect()
}

/// The contribution of one graph type to `K_2`, as a series in `t`.
pub fn k2_contribution(graph_type: K2Type, order: usize) -> Result<PowerSeries> {
    let t = Terms::new("k2_contribution", order)?;
    match graph_type {
        K2Type::T1 => type1(&t),
        K2Type::T234 => Ok(type234(&t)),
        K2Type::T5 => Ok(type5(&t)),
        K2Type::T6 => Ok(type6(&t)),
        K2Type::T7 => Ok(type7(&t)),
    }
}

fn type1(t: &Terms) -> Result<PowerSeries> {
    let inv_d2 = &t.inv_d * &t.inv_d;
    let closed = inv_d2.scale(&q(-1, 240))
        + t.in_d(&fr(&[
            (241, 240),
            (239, 120),
            (81, 80),
            (-1, 60),
            (-7, 48),
            (-1, 40),
            (-1, 240),
        ]));
    let direct = egf_in_d(&t.d, 0, chi_m2_open)?;
    must_agree("genus-2 vertex term", &closed, &direct)?;
    Ok(closed)
}

fn type234(t: &Terms) -> PowerSeries {
    let a = t.in_d(&fr(&[(19, 1), (23, 1), (10, 1), (2, 1)]));
    let ie = &t.inv_e;
    let ie2 = ie * ie;
    let ie3 = &ie2 * ie;
    let id = &t.inv_d;
    let id2 = id * id;
    t.in_d(&fr(&[(1, 1), (1, 1), (1, 2)]))
        + &t.in_d(&fr(&[
            (361, 288),
            (874, 288),
            (909, 288),
            (536, 288),
            (192, 288),
            (40, 288),
            (4, 288),
        ])) * ie
        - (&(&a * ie) * id).scale(&q(1, 144))
        + (&(&a * &ie2) * id).scale(&q(1, 24))
        - (&ie2 * &id2).scale(&q(1, 24))
        + (ie * &id2).scale(&q(1, 288))
        + (&ie3 * &id2).scale(&q(1, 8))
}

fn type5(t: &Terms) -> PowerSeries {
    let ie = &t.inv_e;
    let id2 = &t.inv_d * &t.inv_d;
    (ie * &id2).scale(&q(1, 24))
        + &t.in_d(&fr(&[(11, 24), (2, 24), (-3, 24)])) * ie
        + t.in_d(&fr(&[(1, 2), (3, 2), (7, 4), (7, 6), (11, 24), (-1, 8), (1, 48)]))
}

fn type6(t: &Terms) -> PowerSeries {
    let ie = &t.inv_e;
    let id2 = &t.inv_d * &t.inv_d;
    let e2 = &t.e * &t.e;
    (&(ie * ie) * &id2).scale(&q(-1, 8))
        + &(&e2 * ie) * &t.in_d(&fr(&[(1, 4), (1, 4), (1, 8)]))
        + &t.e * &t.in_d(&fr(&[(1, 4), (1, 4), (1, 8)]))
        + t.in_d(&fr(&[(1, 8), (-1, 4), (-3, 4), (-7, 8), (-17, 32), (-3, 16), (-1, 32)]))
}

fn type7(t: &Terms) -> PowerSeries {
    let ie = &t.inv_e;
    let id2 = &t.inv_d * &t.inv_d;
    let e2 = &t.e * &t.e;
    (&(&(ie * ie) * ie) * &id2).scale(&q(1, 12))
        + (&e2 * ie).scale(&q(1, 4))
        + &(&t.e * ie) * &t.in_d(&fr(&[(0, 1), (1, 2), (1, 4)]))
        + t.e.scale(&q(1, 4))
        + t.in_d(&fr(&[(11, 12), (5, 3), (7, 4), (1, 1), (17, 48), (1, 16), (1, 96)]))
}

/// `K_2 = Σ_n χ(M̄_{2,n}) t^n/n!` in closed form: a polynomial in `D` and `E`
/// over `1440 (1+D)^2 (E-1)^3`.
pub fn k2_closed(order: usize) -> Result<PowerSeries> {
    let t = Terms::new("k2_closed", order)?;
    let e = |c: &[i64]| t.in_e(&c.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>());
    let em1_2 = e(&[1, -2, 1]);
    let d = |k: u32| t.d.pow(k);
    let numerator = (&d(8) * &em1_2 * e(&[7, 3])).scale(&q(-2, 1))
        + (&d(7) * &em1_2 * e(&[-7, 17])).scale(&q(-24, 1))
        + (&d(6) * &em1_2 * e(&[259, 201])).scale(&q(-3, 1))
        + (&d(5) * &em1_2 * e(&[-221, 61])).scale(&q(30, 1))
        + (&d(4) * &e(&[-1386, 3395, -2640, 631])).scale(&q(15, 1))
        + (&d(3) * &e(&[-652, 1633, -1322, 341])).scale(&q(60, 1))
        + (&d(2) * &e(&[-254, 635, -519, 138])).scale(&q(180, 1))
        + (&t.d * &e(&[-84, 206, -167, 45])).scale(&q(360, 1))
        + e(&[-144, 336, -270, 73]).scale(&q(60, 1));
    // (E-1)^3 = -(1-E)^3
    let ie3 = &(&t.inv_e * &t.inv_e) * &t.inv_e;
    let id2 = &t.inv_d * &t.inv_d;
    Ok((&(&numerator * &ie3) * &id2).scale(&q(-1, 1440)))
}

/// `K_2` as the sum of the graph-type contributions.
pub fn k2_assembled(order: usize) -> Result<PowerSeries> {
    let mut total = PowerSeries::zero(order.max(1));
    for ty in K2Type::ALL {
        total = total + k2_contribution(ty, order)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_terms() {
        let c: Vec<Rational> = K2Type::ALL
            .iter()
            .map(|&ty| k2_contribution(ty, 4).unwrap().constant_term().clone())
            .collect();
        assert_eq!(c, [1, 3, 1, 0, 1].map(Rational::from).to_vec());
    }

    #[test]
    fn expansion() {
        let k2 = k2_closed(8).unwrap();
        let expected = fr(&[
            (6, 1),
            (13, 1),
            (21, 1),
            (181, 6),
            (251, 6),
            (6853, 120),
            (27971, 360),
            (177673, 1680),
        ]);
        assert_eq!(k2.coeffs(), &expected[..]);
    }

    #[test]
    fn assembled_matches_closed() {
        let k2 = k2_closed(12).unwrap();
        assert_eq!(k2_assembled(12).unwrap(), k2);
        assert_eq!(k2.egf_values()[8], Rational::from(5810008));
    }

    #[test]
    fn graph_type_labels() {
        for ty in K2Type::ALL {
            assert_eq!(ty.label().parse::<K2Type>().unwrap(), ty);
        }
        assert!("8".parse::<K2Type>().is_err());
    }
}
