use std::fmt;

use crate::error::{Error, Result};

/// A permutation of the markings `1..=n`.
///
/// Stored 0-based internally; every public constructor and accessor speaks
/// 1-based marking labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MarkedPermutation {
    images: Box<[u32]>,
    /// Cycle lengths in decreasing order, fixed points included.
    cycle_type: Box<[u32]>,
}

impl MarkedPermutation {
    pub fn identity(n: u32) -> Self {
        Self::from_images_unchecked((0..n).collect())
    }

    fn from_images_unchecked(images: Vec<u32>) -> Self {
        let cycle_type = cycle_type_of(&images);
        MarkedPermutation {
            images: images.into_boxed_slice(),
            cycle_type,
        }
    }

    /// `images[i-1] = σ(i)`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            let i = x as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Parse {
                    what: "permutation",
                    input: format!("{images:?}"),
                });
            }
            seen[i - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Self::from_images_unchecked(zero_based))
    }

    /// Builds a permutation of `1..=n` from disjoint cycles.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Result<Self> {
        let bad = || Error::Parse {
            what: "permutation",
            input: format!("n={n} cycles={cycles:?}"),
        };
        let mut images: Vec<u32> = (0..n).collect();
        let mut touched = vec![false; n as usize];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a as usize - 1] {
                    return Err(bad());
                }
                touched[a as usize - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                images[a as usize - 1] = b - 1;
            }
        }
        Ok(Self::from_images_unchecked(images))
    }

    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        Self::from_cycles(n, &[vec![a, b]])
    }

    /// Parses cycle notation such as `(1 2)(3 4)`, `(1,3,2)` or `()`.
    pub fn parse(n: u32, s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "permutation",
            input: s.to_string(),
        };
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = inner.find(')').ok_or_else(bad)?;
            let body = &inner[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = inner[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles).map_err(|_| bad())
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    /// `σ(i)` for a 1-based marking `i`.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1] + 1
    }

    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn cycle_type(&self) -> &[u32] {
        &self.cycle_type
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::Domain {
                op: "compose",
                reason: format!("permutations of {} and {} markings", self.n(), other.n()),
            });
        }
        Ok(Self::from_images_unchecked(
            other.images.iter().map(|&i| self.images[i as usize]).collect(),
        ))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self::from_images_unchecked(inv)
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// element, in increasing order of that element. 1-based.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.images[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

fn cycle_type_of(images: &[u32]) -> Box<[u32]> {
    let mut seen = vec![false; images.len()];
    let mut lengths = Vec::new();
    for start in 0..images.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = images[i] as usize;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths.into_boxed_slice()
}

impl fmt::Display for MarkedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MarkedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} on {}", self.n())
    }
}

/// All permutations of `1..=n` that move only the markings in `moved`
/// (1-based), by direct enumeration in lexicographic order of images.
pub(crate) fn permutations_of(n: u32, moved: &[u32]) -> Vec<MarkedPermutation> {
    let mut order: Vec<u32> = moved.to_vec();
    order.sort_unstable();
    let mut current = order.clone();
    let mut out = Vec::new();
    loop {
        let mut images: Vec<u32> = (0..n).collect();
        for (src, dst) in order.iter().zip(&current) {
            images[*src as usize - 1] = dst - 1;
        }
        out.push(MarkedPermutation::from_images_unchecked(images));
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let p = MarkedPermutation::parse(6, "(1 3)(2 4)").unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 4)");
        assert_eq!(p.cycle_type(), &[2, 2, 1, 1]);
        assert_eq!(MarkedPermutation::parse(4, "()").unwrap(), MarkedPermutation::identity(4));
        assert_eq!(MarkedPermutation::parse(3, "(3,1,2)").unwrap().apply(3), 1);
        assert!(MarkedPermutation::parse(4, "(1 5)").is_err());
        assert!(MarkedPermutation::parse(4, "(1 2)(2 3)").is_err());
        assert!(MarkedPermutation::parse(4, "1 2").is_err());
    }

    #[test]
    fn compose_applies_right_first() {
        let a = MarkedPermutation::parse(3, "(1 2)").unwrap();
        let b = MarkedPermutation::parse(3, "(2 3)").unwrap();
        let ab = a.compose(&b).unwrap();
        // 2 -> 3 -> 3, 3 -> 2 -> 1, 1 -> 1 -> 2
        assert_eq!(ab.images(), vec![2, 3, 1]);
        assert!(ab.compose(&ab.inverse()).unwrap().is_identity());
    }

    #[test]
    fn images_validated() {
        assert!(MarkedPermutation::from_images(&[2, 1, 3]).is_ok());
        assert!(MarkedPermutation::from_images(&[2, 2, 3]).is_err());
        assert!(MarkedPermutation::from_images(&[0, 1]).is_err());
    }

    #[test]
    fn enumerates_symmetric_groups() {
        assert_eq!(permutations_of(5, &[3, 4, 5]).len(), 6);
        assert_eq!(permutations_of(4, &[]).len(), 1);
        let all = permutations_of(5, &[1, 2, 3, 4, 5]);
        assert_eq!(all.len(), 120);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 120);
    }
}
