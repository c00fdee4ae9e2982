use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::perm::{permutations_of, MarkedPermutation};
use crate::error::{domain, Error, Result};
use crate::quotient::{QuotientKind, QuotientSpec};

/// One factor `M_{g,n}` of a product acted on by a permutation group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub genus: u8,
    pub n: u32,
}

impl Factor {
    pub fn genus0(n: u32) -> Self {
        Factor { genus: 0, n }
    }
}

/// A finite group acting on a product of configuration spaces by permuting
/// markings factor by factor. Elements are stored as a complete list.
#[derive(Debug, Clone)]
pub struct PermutationGroupAction {
    factors: Vec<Factor>,
    elements: Vec<Vec<MarkedPermutation>>,
}

impl PermutationGroupAction {
    /// The trivial group.
    pub fn trivial(factors: Vec<Factor>) -> Self {
        let id = factors.iter().map(|f| MarkedPermutation::identity(f.n)).collect();
        PermutationGroupAction {
            factors,
            elements: vec![id],
        }
    }

    /// Closure of `generators` under componentwise composition.
    pub fn from_generators(
        factors: Vec<Factor>,
        generators: Vec<Vec<MarkedPermutation>>,
    ) -> Result<Self> {
        for g in &generators {
            check_shape(&factors, g)?;
        }
        let id: Vec<_> = factors.iter().map(|f| MarkedPermutation::identity(f.n)).collect();
        let mut seen: HashSet<Vec<MarkedPermutation>> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = compose_tuple(g, &x)?;
                if seen.insert(y.clone()) {
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermutationGroupAction { factors, elements })
    }

    /// Takes `elements` as given; [`is_group`](Self::is_group) checks them.
    pub fn from_elements(
        factors: Vec<Factor>,
        elements: Vec<Vec<MarkedPermutation>>,
    ) -> Result<Self> {
        for g in &elements {
            check_shape(&factors, g)?;
        }
        Ok(PermutationGroupAction { factors, elements })
    }

    /// `S_j` acting on the last `j` markings of `M_{0,n}`, enumerated
    /// directly.
    pub fn symmetric(n: u32, j: u32) -> Result<Self> {
        if j > n {
            return Err(domain("symmetric", format!("j = {j} > n = {n}")));
        }
        let moved: Vec<u32> = (n - j + 1..=n).collect();
        let elements = permutations_of(n, &moved).into_iter().map(|p| vec![p]).collect();
        Ok(PermutationGroupAction {
            factors: vec![Factor::genus0(n)],
            elements,
        })
    }

    /// `⟨(n-3 n-2), (n-1 n)⟩` on `M_{0,n}`.
    pub fn klein(n: u32) -> Result<Self> {
        if n < 4 {
            return Err(domain("klein", format!("n = {n} < 4")));
        }
        Self::from_generators(
            vec![Factor::genus0(n)],
            vec![vec![swap(n, n - 3)?], vec![swap(n, n - 1)?]],
        )
    }

    /// `⟨(1 2), (1 3)(2 4)⟩` on `M_{0,n}`.
    pub fn dihedral4(n: u32) -> Result<Self> {
        if n < 4 {
            return Err(domain("dihedral4", format!("n = {n} < 4")));
        }
        Self::from_generators(
            vec![Factor::genus0(n)],
            vec![
                vec![MarkedPermutation::transposition(n, 1, 2)?],
                vec![MarkedPermutation::from_cycles(n, &[vec![1, 3], vec![2, 4]])?],
            ],
        )
    }

    /// The concrete action behind a tabulated quotient. Elliptic factors are
    /// refused: their point counts are not polynomial.
    pub fn for_quotient(spec: &QuotientSpec) -> Result<Self> {
        if !spec.kind.is_genus_zero() {
            return Err(Error::Unsupported(format!(
                "{} has a genus-1 factor; point counting needs genus-0 factors",
                spec.kind
            )));
        }
        let s = &spec.sizes;
        let factors = |ns: &[u32]| -> Result<Vec<Factor>> {
            ns.iter()
                .map(|&n| {
                    if n < 3 {
                        Err(domain("for_quotient", format!("factor with n = {n} < 3")))
                    } else {
                        Ok(Factor::genus0(n))
                    }
                })
                .collect()
        };
        let id = MarkedPermutation::identity;
        match spec.kind {
            QuotientKind::M0ModSj => Self::symmetric(s[0], spec.j.unwrap_or(0)),
            QuotientKind::M0ModKlein => Self::klein(s[0]),
            QuotientKind::M0ModD4 => Self::dihedral4(s[0]),
            QuotientKind::Prod2ModS2 => {
                let (a, b) = (s[0], s[1]);
                Self::from_generators(factors(s)?, vec![vec![swap(a, a - 1)?, swap(b, b - 1)?]])
            }
            QuotientKind::Prod2ModS3 => {
                let (a, b) = (s[0], s[1]);
                let three = |n: u32| MarkedPermutation::from_cycles(n, &[vec![n - 2, n - 1, n]]);
                Self::from_generators(
                    factors(s)?,
                    vec![
                        vec![swap(a, a - 1)?, swap(b, b - 1)?],
                        vec![three(a)?, three(b)?],
                    ],
                )
            }
            QuotientKind::Prod2ModKlein => {
                let (a, b) = (s[0], s[1]);
                if b < 4 {
                    return Err(domain("for_quotient", "the Klein factor needs n >= 4"));
                }
                Self::from_generators(
                    factors(s)?,
                    vec![
                        vec![swap(a, a - 1)?, swap(b, b - 3)?],
                        vec![id(a), swap(b, b - 1)?],
                    ],
                )
            }
            QuotientKind::Prod3ModKlein => {
                let (a, b, c) = (s[0], s[1], s[2]);
                if c < 4 {
                    return Err(domain("for_quotient", "the Klein factor needs n >= 4"));
                }
                Self::from_generators(
                    factors(s)?,
                    vec![
                        vec![swap(a, a - 1)?, id(b), swap(c, c - 3)?],
                        vec![id(a), swap(b, b - 1)?, swap(c, c - 1)?],
                    ],
                )
            }
            QuotientKind::M1ModS2 | QuotientKind::M1CrossM0ModS2 => unreachable!(),
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn elements(&self) -> &[Vec<MarkedPermutation>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Closure, identity, inverses, and no repeated elements. Quadratic in
    /// the order; meant for small groups.
    pub fn is_group(&self) -> bool {
        let set: HashSet<&Vec<MarkedPermutation>> = self.elements.iter().collect();
        if set.len() != self.elements.len() {
            return false;
        }
        let has_identity = self
            .elements
            .iter()
            .any(|g| g.iter().all(MarkedPermutation::is_identity));
        let closed = self.elements.iter().all(|a| {
            self.elements.iter().all(|b| {
                compose_tuple(a, b).is_ok_and(|ab| set.contains(&ab))
            })
        });
        let inverses = self.elements.iter().all(|a| {
            let inv: Vec<_> = a.iter().map(MarkedPermutation::inverse).collect();
            set.contains(&inv)
        });
        has_identity && closed && inverses
    }
}

fn swap(n: u32, a: u32) -> Result<MarkedPermutation> {
    MarkedPermutation::transposition(n, a, a + 1)
}

fn check_shape(factors: &[Factor], g: &[MarkedPermutation]) -> Result<()> {
    if g.len() != factors.len() || g.iter().zip(factors).any(|(p, f)| p.n() != f.n) {
        return Err(domain(
            "group action",
            format!("element {g:?} does not match factors {factors:?}"),
        ));
    }
    Ok(())
}

fn compose_tuple(a: &[MarkedPermutation], b: &[MarkedPermutation]) -> Result<Vec<MarkedPermutation>> {
    a.iter().zip(b).map(|(x, y)| x.compose(y)).collect()
}

/// A group acting on a single `M_{0,n}`, as named on the command line:
/// `klein`, `d4`, `sj:<j>` or `custom:<gen>,<gen>,...` with each generator
/// in cycle notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupChoice {
    Klein,
    D4,
    Symmetric(u32),
    Custom(Vec<String>),
}

impl FromStr for GroupChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "group",
            input: s.to_string(),
        };
        match s {
            "klein" => Ok(GroupChoice::Klein),
            "d4" => Ok(GroupChoice::D4),
            _ => {
                if let Some(j) = s.strip_prefix("sj:") {
                    j.parse().map(GroupChoice::Symmetric).map_err(|_| bad())
                } else if let Some(gens) = s.strip_prefix("custom:") {
                    Ok(GroupChoice::Custom(
                        gens.split(',').map(|g| g.trim().to_string()).collect(),
                    ))
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl fmt::Display for GroupChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupChoice::Klein => write!(f, "klein"),
            GroupChoice::D4 => write!(f, "d4"),
            GroupChoice::Symmetric(j) => write!(f, "sj:{j}"),
            GroupChoice::Custom(gens) => write!(f, "custom:{}", gens.join(",")),
        }
    }
}

impl GroupChoice {
    pub fn action(&self, n: u32) -> Result<PermutationGroupAction> {
        match self {
            GroupChoice::Klein => PermutationGroupAction::klein(n),
            GroupChoice::D4 => PermutationGroupAction::dihedral4(n),
            GroupChoice::Symmetric(j) => PermutationGroupAction::symmetric(n, *j),
            GroupChoice::Custom(gens) => {
                let gens = gens
                    .iter()
                    .map(|g| MarkedPermutation::parse(n, g).map(|p| vec![p]))
                    .collect::<Result<Vec<_>>>()?;
                PermutationGroupAction::from_generators(vec![Factor::genus0(n)], gens)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_have_expected_orders() {
        assert_eq!(PermutationGroupAction::klein(6).unwrap().order(), 4);
        assert_eq!(PermutationGroupAction::dihedral4(5).unwrap().order(), 8);
        assert_eq!(PermutationGroupAction::symmetric(6, 4).unwrap().order(), 24);
        for g in [
            PermutationGroupAction::klein(6).unwrap(),
            PermutationGroupAction::dihedral4(4).unwrap(),
            PermutationGroupAction::symmetric(5, 3).unwrap(),
        ] {
            assert!(g.is_group());
        }
    }

    #[test]
    fn product_actions_are_groups() {
        let cases = [
            (QuotientKind::Prod2ModS2, vec![4, 6], 2),
            (QuotientKind::Prod2ModS3, vec![4, 5], 6),
            (QuotientKind::Prod2ModKlein, vec![3, 5], 4),
            (QuotientKind::Prod3ModKlein, vec![4, 4, 5], 4),
        ];
        for (kind, sizes, order) in cases {
            let spec = QuotientSpec { kind, sizes, j: None };
            let g = PermutationGroupAction::for_quotient(&spec).unwrap();
            assert_eq!(g.order(), order, "{kind}");
            assert!(g.is_group(), "{kind}");
        }
    }

    #[test]
    fn non_groups_detected() {
        let f = vec![Factor::genus0(4)];
        let swap12 = MarkedPermutation::parse(4, "(1 2)").unwrap();
        let g = PermutationGroupAction::from_elements(f, vec![vec![swap12]]).unwrap();
        assert!(!g.is_group());
    }

    #[test]
    fn elliptic_factors_refused() {
        let spec = QuotientSpec {
            kind: QuotientKind::M1ModS2,
            sizes: vec![4],
            j: None,
        };
        assert!(matches!(
            PermutationGroupAction::for_quotient(&spec),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn group_choice_parses() {
        assert_eq!("sj:3".parse::<GroupChoice>().unwrap(), GroupChoice::Symmetric(3));
        let c: GroupChoice = "custom:(3 4),(5 6)".parse().unwrap();
        assert_eq!(c.action(6).unwrap().order(), 4);
        assert!("sj:x".parse::<GroupChoice>().is_err());
        assert!("a5".parse::<GroupChoice>().is_err());
    }
}
