//! Self-checks: closed forms against recursions, tables against oracles,
//! assembled generating functions against their closed forms, and
//! randomized algebraic identities.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Polynomial, PowerSeries, Rational};
use crate::error::{Error, Result};
use crate::genfun::{
    chibar_table, k1_assembled, k1_closed, k1_loop_contribution, k1_loop_from_quotients,
    k1_vertex_contribution, k2_assembled, k2_closed, k2_contribution, series_d, series_e,
    series_e_from_trees, K2Type,
};
use crate::open::{
    a_jr, chi_m0_open, chi_m1_open, chi_m1_recursive, chi_m1_via_strata, chi_m2_open,
    chi_m2_recursive, chi_m2_via_strata,
};
use crate::oracle::{
    burnside_quotient, burnside_quotient_chi, enumerate_stable_rooted_trees,
    tree_contribution_sum, Factor, PermutationGroupAction,
};
use crate::quotient::{QuotientKind, QuotientSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    SeriesAlgebra,
    QuotientsVsOracle,
    Strata,
    K1,
    K2,
    Trees,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::SeriesAlgebra,
        Suite::QuotientsVsOracle,
        Suite::Strata,
        Suite::K1,
        Suite::K2,
        Suite::Trees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SeriesAlgebra => "series-algebra",
            Suite::QuotientsVsOracle => "quotients-vs-oracle",
            Suite::Strata => "strata",
            Suite::K1 => "k1",
            Suite::K2 => "k2",
            Suite::Trees => "trees",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "verification suite",
                input: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub order: usize,
    /// Random cases per randomized identity.
    pub cases: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: crate::genfun::DEFAULT_ORDER,
            cases: 500,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

/// Checks of one or more suites, sorted by name.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn run(suite: Suite, options: &VerifyOptions) -> Report {
    let mut checks = Vec::new();
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    for s in suites {
        let prefix = s.name();
        let outcomes = match s {
            Suite::SeriesAlgebra => series_algebra(options),
            Suite::QuotientsVsOracle => quotients_vs_oracle(),
            Suite::Strata => strata(),
            Suite::K1 => k1(options.order),
            Suite::K2 => k2(options.order),
            Suite::Trees => trees(),
            Suite::All => unreachable!(),
        };
        for (name, outcome) in outcomes {
            let (passed, detail) = match outcome {
                Ok(detail) => (true, detail),
                Err(e) => (false, e.to_string()),
            };
            checks.push(Check {
                name: format!("{prefix}/{name}"),
                passed,
                detail,
            });
        }
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Report { checks }
}

type Outcome = Result<String>;

fn expect_eq(what: impl Into<String>, expected: &Rational, actual: &Rational) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::Mismatch {
            what: what.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

fn expect_series(what: &str, expected: &PowerSeries, actual: &PowerSeries) -> Result<()> {
    if expected == actual {
        return Ok(());
    }
    let k = (0..expected.order().min(actual.order()))
        .find(|&k| expected.coeffs()[k] != actual.coeffs()[k])
        .unwrap_or(0);
    expect_eq(
        format!("{what}, coefficient of t^{k}"),
        &expected.coeffs()[k],
        &actual.coeffs()[k],
    )?;
    Err(Error::Mismatch {
        what: what.to_string(),
        expected: format!("order {}", expected.order()),
        actual: format!("order {}", actual.order()),
    })
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

// randomized identities

fn rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-12..=12), rng.gen_range(1..=6))
}

fn series(rng: &mut ChaCha8Rng, order: usize, zero_constant: bool) -> PowerSeries {
    let mut c: Vec<Rational> = (0..order).map(|_| rational(rng)).collect();
    if zero_constant {
        c[0] = Rational::zero();
    }
    PowerSeries::from_coeffs(c)
}

fn polynomial(rng: &mut ChaCha8Rng, max_degree: usize) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    Polynomial::from_coeffs((0..=d).map(|_| rational(rng)).collect())
}

fn randomized(
    options: &VerifyOptions,
    salt: u64,
    mut case: impl FnMut(&mut ChaCha8Rng) -> Result<()>,
) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ salt);
    for i in 0..options.cases {
        case(&mut rng).map_err(|e| Error::Mismatch {
            what: format!("random case {i}"),
            expected: "identity to hold".into(),
            actual: e.to_string(),
        })?;
    }
    Ok(format!("{} random cases", options.cases))
}

fn identity<T: PartialEq + fmt::Debug>(what: &str, lhs: T, rhs: T) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::Mismatch {
            what: what.to_string(),
            expected: format!("{lhs:?}"),
            actual: format!("{rhs:?}"),
        })
    }
}

fn series_algebra(options: &VerifyOptions) -> Vec<(&'static str, Outcome)> {
    vec![
        (
            "ring-axioms",
            randomized(options, 1, |rng| {
                let n = rng.gen_range(1..=8);
                let (a, b, c) = (series(rng, n, false), series(rng, n, false), series(rng, n, false));
                identity("a+b = b+a", &a + &b, &b + &a)?;
                identity("ab = ba", &a * &b, &b * &a)?;
                identity("(a+b)+c = a+(b+c)", &(&a + &b) + &c, &a + &(&b + &c))?;
                identity("(ab)c = a(bc)", &(&a * &b) * &c, &a * &(&b * &c))?;
                identity("a(b+c) = ab+ac", &a * &(&b + &c), &(&a * &b) + &(&a * &c))?;
                let (p, q, r) = (polynomial(rng, 5), polynomial(rng, 5), polynomial(rng, 5));
                identity("p+q = q+p", &p + &q, &q + &p)?;
                identity("pq = qp", &p * &q, &q * &p)?;
                identity("(pq)r = p(qr)", &(&p * &q) * &r, &p * &(&q * &r))?;
                identity("p(q+r) = pq+pr", &p * &(&q + &r), &(&p * &q) + &(&p * &r))
            }),
        ),
        (
            "exp-log-inverse",
            randomized(options, 2, |rng| {
                let n = rng.gen_range(1..=8);
                let f = series(rng, n, true);
                let one = PowerSeries::one(n);
                identity("exp(log(1+f)) = 1+f", f.log1p()?.exp()?, &one + &f)?;
                identity("log(1+(exp(f)-1)) = f", (f.exp()? - &one).log1p()?, f)
            }),
        ),
        (
            "product-rule",
            randomized(options, 3, |rng| {
                let n = rng.gen_range(2..=8);
                let (f, g) = (series(rng, n, false), series(rng, n, false));
                identity(
                    "(fg)' = f'g + fg'",
                    (&f * &g).derivative()?,
                    &(&f.derivative()? * &g) + &(&f * &g.derivative()?),
                )
            }),
        ),
        (
            "poly-exact-division",
            randomized(options, 4, |rng| {
                let a = polynomial(rng, 6);
                let mut b = polynomial(rng, 4);
                while b.is_zero() {
                    b = polynomial(rng, 4);
                }
                identity("(ab)/b = a", (&a * &b).exact_div(&b)?, a)
            }),
        ),
        (
            "rational-exactness",
            randomized(options, 5, |rng| {
                let (x, y) = (rational(rng), rational(rng));
                identity("(x+y)-x = y", &(&x + &y) - &x, y.clone())?;
                if !y.is_zero() {
                    identity("(xy)/y = x", &(&x * &y) / &y, x)?;
                }
                Ok(())
            }),
        ),
    ]
}

/// Every in-range genus-0 quotient with all sizes at most `max`.
pub fn genus0_quotient_cases(max: u32) -> Vec<QuotientSpec> {
    let mut out = Vec::new();
    let mut push = |kind, sizes: Vec<u32>, j| {
        let spec = QuotientSpec { kind, sizes, j };
        if spec.chi().is_ok() {
            out.push(spec);
        }
    };
    for n in 3..=max {
        for j in 0..=n {
            push(QuotientKind::M0ModSj, vec![n], Some(j));
        }
        push(QuotientKind::M0ModKlein, vec![n], None);
        push(QuotientKind::M0ModD4, vec![n], None);
        for n2 in n..=max {
            push(QuotientKind::Prod2ModS2, vec![n, n2], None);
            push(QuotientKind::Prod2ModS3, vec![n, n2], None);
            push(QuotientKind::Prod2ModKlein, vec![n, n2], None);
            for n3 in 4..=max {
                push(QuotientKind::Prod3ModKlein, vec![n, n2, n3], None);
            }
        }
    }
    out
}

fn quotients_vs_oracle() -> Vec<(&'static str, Outcome)> {
    let cases = genus0_quotient_cases(9);
    let mut out = Vec::new();
    let mut sound: Outcome = Ok(String::new());
    let mut counted = 0;
    for kind in QuotientKind::ALL.into_iter().filter(|k| k.is_genus_zero()) {
        let mut outcome: Outcome = Ok(String::new());
        let mut n = 0;
        for spec in cases.iter().filter(|s| s.kind == kind) {
            let step = (|| {
                let table = spec.chi()?;
                let b = burnside_quotient(&PermutationGroupAction::for_quotient(spec)?)?;
                if sound.is_ok() {
                    if let Err(e) = b.check_counts() {
                        sound = Err(Error::Mismatch {
                            what: spec.to_string(),
                            expected: "nonnegative integer point counts".into(),
                            actual: e.to_string(),
                        });
                    }
                }
                expect_eq(spec.to_string(), &table, &b.chi)
            })();
            if let Err(e) = step {
                outcome = Err(e);
                break;
            }
            n += 1;
        }
        counted += n;
        out.push((kind.name(), outcome.map(|_| format!("{n} sizes agree"))));
    }
    out.push(("point-counts", sound.map(|_| format!("{counted} count polynomials, exact division, nonnegative integers at q = 2..9"))));
    let trivial = (|| {
        for n in 3..=10 {
            let g = PermutationGroupAction::trivial(vec![Factor::genus0(n)]);
            expect_eq(format!("trivial group on M_0,{n}"), &chi_m0_open(n)?, &burnside_quotient_chi(&g)?)?;
        }
        Ok("n = 3..10".to_string())
    })();
    out.push(("trivial-group", trivial));
    out
}

fn strata() -> Vec<(&'static str, Outcome)> {
    vec![
        ("genus2-strata", (|| {
            let expected = ints(&[1, 2, 2, 0, -4, 0, -24]);
            for n in 0..=6u32 {
                expect_eq(format!("chi(M_2,{n}) via strata"), &expected[n as usize], &chi_m2_via_strata(n)?)?;
                expect_eq(format!("chi(M_2,{n}) closed"), &expected[n as usize], &chi_m2_open(n)?)?;
            }
            Ok("n = 0..6".to_string())
        })()),
        ("genus2-recursion", (|| {
            expect_eq("chi(M_2,7)", &Rational::from(168), &chi_m2_recursive(7)?)?;
            for n in 7..=15 {
                expect_eq(format!("chi(M_2,{n})"), &chi_m2_open(n)?, &chi_m2_recursive(n)?)?;
            }
            Ok("n = 7..15".to_string())
        })()),
        ("genus1-strata", (|| {
            let expected = ints(&[1, 1, 0, 0]);
            for n in 1..=4u32 {
                expect_eq(format!("chi(M_1,{n})"), &expected[n as usize - 1], &chi_m1_via_strata(n)?)?;
            }
            Ok("n = 1..4".to_string())
        })()),
        ("genus1-recursion", (|| {
            expect_eq("chi(M_1,5)", &Rational::from(-2), &chi_m1_recursive(5)?)?;
            for n in 5..=12 {
                expect_eq(format!("chi(M_1,{n})"), &chi_m1_open(n)?, &chi_m1_recursive(n)?)?;
            }
            Ok("n = 5..12".to_string())
        })()),
        ("stratum-coefficients", (|| {
            let two = Rational::from(2);
            for n in 0..=6u32 {
                for j in 0..=n {
                    for r in 0..=(n - j) / 2 {
                        let a = a_jr(n, j, r)?;
                        if !a.is_integer() || a.is_negative() || a.is_zero() {
                            return Err(Error::Mismatch {
                                what: format!("a({n},{j},{r})"),
                                expected: "a positive integer".into(),
                                actual: a.to_string(),
                            });
                        }
                        let e = n as i32 - j as i32 - r as i32 - 1;
                        let lhs = &a * two.pow(e);
                        let rhs = Rational::binomial(n, j) * Rational::factorial(n - j)
                            * two.pow(e - r as i32)
                            / (Rational::factorial(n - j - 2 * r) * Rational::factorial(r));
                        expect_eq(format!("a({n},{j},{r}) packaging"), &rhs, &lhs)?;
                    }
                }
            }
            Ok("n = 0..6".to_string())
        })()),
    ]
}

fn integral_egf(what: &str, k: &PowerSeries) -> Result<()> {
    for (n, v) in k.egf_values().iter().enumerate() {
        if !v.is_integer() {
            return Err(Error::Mismatch {
                what: format!("{what}: {n}! [t^{n}]"),
                expected: "an integer".into(),
                actual: v.to_string(),
            });
        }
    }
    Ok(())
}

fn k1(order: usize) -> Vec<(&'static str, Outcome)> {
    vec![
        ("assembled-vs-closed", (|| {
            expect_series("K1", &k1_closed(order)?, &k1_assembled(order)?)?;
            Ok(format!("through order {order}"))
        })()),
        ("integrality", (|| {
            integral_egf("K1", &k1_closed(order)?)?;
            Ok(format!("n < {order}"))
        })()),
        ("vertex-term", k1_vertex_contribution(order).map(|_| "direct sum agrees".to_string())),
        ("loop-term-from-quotients", (|| {
            expect_series("loop term", &k1_loop_contribution(order)?, &k1_loop_from_quotients(order)?)?;
            Ok(format!("through order {order}"))
        })()),
    ]
}

/// Printed expansion of `K_2` through `t^7`.
pub const K2_EXPANSION: [(i64, i64); 8] = [
    (6, 1),
    (13, 1),
    (21, 1),
    (181, 6),
    (251, 6),
    (6853, 120),
    (27971, 360),
    (177673, 1680),
];

/// `χ(M̄_{2,n})` for n = 0..7.
pub const K2_TABLE: [i64; 8] = [6, 13, 42, 181, 1004, 6853, 55942, 533019];

fn k2(order: usize) -> Vec<(&'static str, Outcome)> {
    vec![
        ("assembled-vs-closed", (|| {
            expect_series("K2", &k2_closed(order)?, &k2_assembled(order)?)?;
            Ok(format!("through order {order}"))
        })()),
        ("expansion", (|| {
            let k = k2_closed(order.max(8))?;
            for (n, &(p, d)) in K2_EXPANSION.iter().enumerate() {
                expect_eq(format!("[t^{n}] K2"), &Rational::new(p, d), k.coeff(n)?)?;
            }
            Ok("t^0..t^7".to_string())
        })()),
        ("table", (|| {
            let table = chibar_table(2, 7, order.max(8))?;
            for (n, v) in table {
                expect_eq(format!("chi(M-bar_2,{n})"), &Rational::from(K2_TABLE[n as usize]), &v)?;
            }
            Ok("n = 0..7".to_string())
        })()),
        ("integrality", (|| {
            integral_egf("K2", &k2_closed(order)?)?;
            Ok(format!("n < {order}"))
        })()),
        ("constant-terms", (|| {
            let expected = ints(&[1, 3, 1, 0, 1]);
            for (ty, e) in K2Type::ALL.into_iter().zip(&expected) {
                expect_eq(format!("type {ty} at t = 0"), e, k2_contribution(ty, order)?.constant_term())?;
            }
            Ok("1 + 3 + 1 + 0 + 1 = 6".to_string())
        })()),
        ("vertex-term", k2_contribution(K2Type::T1, order).map(|_| "direct sum agrees".to_string())),
    ]
}

/// Number of stable rooted trees on n = 2..=7 labelled leaves.
const TREE_COUNTS: [usize; 6] = [1, 4, 26, 236, 2752, 39208];

fn trees() -> Vec<(&'static str, Outcome)> {
    vec![
        ("contribution-vs-d", (|| {
            let d = series_d(9)?;
            for n in 2..=8u32 {
                let from_d = d.coeff(n as usize)? * Rational::factorial(n);
                expect_eq(format!("trees on {n} leaves"), &from_d, &tree_contribution_sum(n)?)?;
            }
            Ok("n = 2..8".to_string())
        })()),
        ("counts", (|| {
            for (i, &c) in TREE_COUNTS.iter().enumerate() {
                let n = i as u32 + 2;
                let trees = enumerate_stable_rooted_trees(n)?;
                expect_eq(format!("tree count for n = {n}"), &Rational::from(c as i64), &Rational::from(trees.len() as i64))?;
                if !trees.iter().all(|t| t.is_valid(n)) {
                    return Err(Error::Mismatch {
                        what: format!("trees on {n} leaves"),
                        expected: "stable, every label once".into(),
                        actual: "an invalid tree".into(),
                    });
                }
            }
            Ok("n = 2..7".to_string())
        })()),
        ("e-two-ways", (|| {
            expect_series("E", &series_e(12)?, &series_e_from_trees(12)?)?;
            Ok("log(1+D) = tree sum".to_string())
        })()),
        ("d-equation", (|| {
            let d = series_d(12)?;
            let lhs = &d.derivative()? * &(PowerSeries::one(12) - d.log1p()?);
            expect_series("D'(1-E)", &PowerSeries::one(11), &lhs)?;
            Ok("D'(1-E) = 1".to_string())
        })()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("k3".parse::<Suite>().is_err());
    }

    #[test]
    fn cheap_suites_pass() {
        let opts = VerifyOptions {
            cases: 20,
            ..VerifyOptions::default()
        };
        for s in [Suite::SeriesAlgebra, Suite::Strata, Suite::K1, Suite::K2] {
            let report = run(s, &opts);
            assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
            let names: Vec<_> = report.checks.iter().map(|c| c.name.clone()).collect();
            let mut sorted = names.clone();
            sorted.sort();
            assert_eq!(names, sorted);
        }
    }

    #[test]
    fn quotient_cases_cover_every_kind() {
        let cases = genus0_quotient_cases(6);
        for k in QuotientKind::ALL.into_iter().filter(|k| k.is_genus_zero()) {
            assert!(cases.iter().any(|c| c.kind == k), "{k}");
        }
        assert!(!cases.iter().any(|c| c.kind == QuotientKind::Prod2ModKlein && c.sizes == [4, 7]));
    }
}
