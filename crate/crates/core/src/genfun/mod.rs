//! Generating functions `K_g(t) = Σ_n χ(M̄_{g,n}) t^n / n!` for g = 1, 2.
//!
//! Every stratum of `M̄_{g,n}` is indexed by a stable graph. Summing over the
//! ways of growing genus-0 trees on a fixed core graph turns each core into an
//! expression in the tree series `D` and in `E = log(1+D)`. All such
//! expressions are evaluated by substituting truncated series.

mod base;
mod genus1;
mod genus2;

use std::fmt;
use std::str::FromStr;

pub use base::{series_d, series_e, series_e_from_trees};
pub use genus1::{
    k1_assembled, k1_closed, k1_loop_contribution, k1_loop_from_quotients,
    k1_vertex_contribution,
};
pub use genus2::{k2_assembled, k2_closed, k2_contribution, K2Type};

use crate::algebra::{PowerSeries, Rational};
use crate::error::{domain, Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    D,
    E,
    K1,
    K2,
    K2Type(K2Type),
    K1Vertex,
    K1Loop,
}

impl SeriesName {
    pub const ALL: [SeriesName; 11] = [
        SeriesName::D,
        SeriesName::E,
        SeriesName::K1,
        SeriesName::K2,
        SeriesName::K2Type(K2Type::T1),
        SeriesName::K2Type(K2Type::T234),
        SeriesName::K2Type(K2Type::T5),
        SeriesName::K2Type(K2Type::T6),
        SeriesName::K2Type(K2Type::T7),
        SeriesName::K1Vertex,
        SeriesName::K1Loop,
    ];

    pub fn compute(self, order: usize) -> Result<PowerSeries> {
        match self {
            SeriesName::D => series_d(order),
            SeriesName::E => series_e(order),
            SeriesName::K1 => k1_closed(order),
            SeriesName::K2 => k2_closed(order),
            SeriesName::K2Type(ty) => k2_contribution(ty, order),
            SeriesName::K1Vertex => k1_vertex_contribution(order),
            SeriesName::K1Loop => k1_loop_contribution(order),
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::D => write!(f, "D"),
            SeriesName::E => write!(f, "E"),
            SeriesName::K1 => write!(f, "K1"),
            SeriesName::K2 => write!(f, "K2"),
            SeriesName::K2Type(ty) => write!(f, "K2_type{ty}"),
            SeriesName::K1Vertex => write!(f, "K1_vertex"),
            SeriesName::K1Loop => write!(f, "K1_loop"),
        }
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| Error::Parse {
                what: "series name",
                input: s.to_string(),
            })
    }
}

/// A computed series together with its name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSeries {
    pub name: SeriesName,
    pub series: PowerSeries,
}

impl NamedSeries {
    pub fn compute(name: SeriesName, order: usize) -> Result<Self> {
        Ok(NamedSeries {
            name,
            series: name.compute(order)?,
        })
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

/// `(n, χ(M̄_{g,n}))` for every stable `n <= max_n`, read off `K_g`.
pub fn chibar_table(genus: u8, max_n: u32, order: usize) -> Result<Vec<(u32, Rational)>> {
    if max_n as usize >= order {
        return Err(domain(
            "chibar_table",
            format!("n = {max_n} needs truncation order at least {}", max_n + 1),
        ));
    }
    let (k, first) = match genus {
        1 => (k1_closed(order)?, 1),
        2 => (k2_closed(order)?, 0),
        g => return Err(domain("chibar_table", format!("genus {g} is not 1 or 2"))),
    };
    let values = k.egf_values();
    Ok((first..=max_n).map(|n| (n, values[n as usize].clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in SeriesName::ALL {
            assert_eq!(n.to_string().parse::<SeriesName>().unwrap(), n);
        }
        assert_eq!("K2_type234".parse::<SeriesName>().unwrap(), SeriesName::K2Type(K2Type::T234));
        assert!("K3".parse::<SeriesName>().is_err());
    }

    #[test]
    fn tables() {
        let t2 = chibar_table(2, 7, 12).unwrap();
        assert_eq!(t2[2], (2, Rational::from(42)));
        assert_eq!(t2[7], (7, Rational::from(533019)));
        let t1 = chibar_table(1, 3, 12).unwrap();
        assert_eq!(t1[0], (1, Rational::from(2)));
        assert!(chibar_table(2, 12, 12).is_err());
        assert!(chibar_table(3, 2, 12).is_err());
    }
}
