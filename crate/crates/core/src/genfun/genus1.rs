use super::base::{egf_in_d, must_agree, Terms};
use crate::algebra::{q, PowerSeries, Rational};
use crate::error::Result;
use crate::open::chi_m1_open;
use crate::quotient::{chi_m0_mod_sj, chi_prod2_mod_s2};

/// Graphs with a single genus-1 vertex: `Σ_{n≥1} χ(M_{1,n}) D^n / n!`.
///
/// Computed term by term and in closed form; the two must agree.
pub fn k1_vertex_contribution(order: usize) -> Result<PowerSeries> {
    let t = Terms::new("k1_vertex_contribution", order)?;
    let direct = egf_in_d(&t.d, 1, chi_m1_open)?;
    let closed = t.in_d(&[q(0, 1), q(13, 12), q(11, 24), q(1, 36), q(-1, 48)])
        - t.e.scale(&q(1, 12));
    must_agree("genus-1 vertex term", &closed, &direct)?;
    Ok(closed)
}

/// Graphs with a single loop of genus-0 vertices.
pub fn k1_loop_contribution(order: usize) -> Result<PowerSeries> {
    let t = Terms::new("k1_loop_contribution", order)?;
    Ok(t.log_one_minus_e()?.scale(&q(-1, 2))
        + t.in_d(&[q(0, 1), q(1, 2), q(1, 2), q(1, 4), q(1, 16)]))
}

/// The loop term assembled graph by graph: cycles of length at least three
/// modulo rotation and reflection, plus the one- and two-vertex cycles whose
/// reflections act on the vertices' markings.
pub fn k1_loop_from_quotients(order: usize) -> Result<PowerSeries> {
    let t = Terms::new("k1_loop_from_quotients", order)?;
    let mut total = PowerSeries::zero(order);
    let mut e_power = t.e.pow(3);
    for l in 3..order {
        total = total + e_power.scale(&q(1, 2 * l as i64));
        e_power = &e_power * &t.e;
    }
    total = total + egf_in_d(&t.d, 1, |n| chi_m0_mod_sj(n + 2, 2))?;
    let mut pairs = vec![Rational::zero(); order];
    for n in 1..order as u32 {
        for m in 1..order as u32 - n {
            let (a, b) = ((n + 2).min(m + 2), (n + 2).max(m + 2));
            pairs[(n + m) as usize] += chi_prod2_mod_s2(a, b)?
                / (Rational::factorial(n) * Rational::factorial(m));
        }
    }
    Ok(total + PowerSeries::eval_polynomial(&pairs, &t.d).scale(&q(1, 2)))
}

/// `K_1 = Σ_n χ(M̄_{1,n}) t^n/n!` in closed form.
pub fn k1_closed(order: usize) -> Result<PowerSeries> {
    let t = Terms::new("k1_closed", order)?;
    Ok(t.in_d(&[q(0, 1), q(19, 12), q(23, 24), q(5, 18), q(1, 24)])
        - t.e.scale(&q(1, 12))
        - t.log_one_minus_e()?.scale(&q(1, 2)))
}

/// `K_1` as the sum of its two graph contributions.
pub fn k1_assembled(order: usize) -> Result<PowerSeries> {
    Ok(k1_vertex_contribution(order)? + k1_loop_contribution(order)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_coefficients() {
        let v = k1_vertex_contribution(6).unwrap();
        assert!(v.constant_term().is_zero());
        assert_eq!(v.coeff(1).unwrap(), &q(1, 1));
        let l = k1_loop_contribution(6).unwrap();
        assert!(l.constant_term().is_zero());
        assert_eq!(l.coeff(1).unwrap(), &q(1, 1));
    }

    #[test]
    fn loop_term_two_ways() {
        assert_eq!(k1_loop_contribution(12).unwrap(), k1_loop_from_quotients(12).unwrap());
    }

    #[test]
    fn assembled_matches_closed() {
        let k1 = k1_closed(12).unwrap();
        assert_eq!(k1_assembled(12).unwrap(), k1);
        let values: Vec<_> = k1.egf_values().into_iter().skip(1).take(8).collect();
        let expected = [2, 4, 12, 49, 260, 1716, 13622, 126648];
        assert_eq!(values, expected.map(Rational::from).to_vec());
    }
}
