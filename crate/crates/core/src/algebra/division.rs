use std::collections::BTreeMap;

use num_complex::Complex;

use super::laurent::{sub_exp, Exp, LaurentPoly};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tol::Tolerance;

/// Exact division `num / den` in the Laurent ring.
///
/// Performs long division in `s_{var+1}` with Laurent coefficients in the other
/// two variables. The leading coefficient of `den` in that variable must be a
/// single term, which holds for the quadratic factors `s² − t s + 1` that show up
/// as `det Φ(1 − x_v)`. The division is accepted when
/// `max|num − q·den| ≤ tol.abs · max|num|`.
pub fn lp_divide_exact<T: Real>(
    num: &LaurentPoly<T>,
    den: &LaurentPoly<T>,
    var: usize,
    tol: &Tolerance,
) -> Result<LaurentPoly<T>> {
    if den.is_zero() {
        return Err(Error::Degenerate("division by the zero polynomial".into()));
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let den_parts = den.split_by_var(var);
    let (&den_top, lead) = den_parts.iter().next_back().expect("nonzero");
    let &den_low = den_parts.keys().next().expect("nonzero");
    let (lead_exp, lead_coef) = lead.as_monomial().ok_or_else(|| {
        Error::Domain(format!("leading coefficient in s{} is not a monomial: {lead}", var + 1))
    })?;

    let mut rem = num.split_by_var(var);
    let num_low = *rem.keys().next().expect("nonzero");
    let q_low = num_low - den_low;
    let mut quotient: BTreeMap<i32, LaurentPoly<T>> = BTreeMap::new();

    while let Some((&k, top)) = rem.iter().next_back() {
        let qk = k - den_top;
        if qk < q_low {
            break;
        }
        let c = divide_by_monomial(top, &lead_exp, lead_coef);
        for (dk, dc) in &den_parts {
            let target = qk + dk;
            let prod = &c * dc;
            let entry = rem.entry(target).or_default();
            *entry = &*entry - &prod;
        }
        rem.remove(&k);
        rem.retain(|_, p| !p.is_zero());
        quotient.insert(qk, c);
    }

    let q = LaurentPoly::join_by_var(&quotient, var);
    let residual = (num - &(&q * den)).max_abs() / num.max_abs();
    let residual = residual.to_f64_lossy();
    if residual.is_nan() || residual > tol.abs {
        return Err(Error::NotDivisible { residual });
    }
    Ok(q)
}

fn divide_by_monomial<T: Real>(p: &LaurentPoly<T>, exp: &Exp, coef: Complex<T>) -> LaurentPoly<T> {
    let inv = coef.inv();
    LaurentPoly::from_terms(p.terms().map(|(e, c)| (sub_exp(e, exp), *c * inv)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    type P = LaurentPoly<f64>;

    fn quad(var: usize, t: f64) -> P {
        P::from_terms([
            (super::super::laurent::unit_exp(var, 2), re(1.0)),
            (super::super::laurent::unit_exp(var, 1), re(-t)),
            ([0; 3], re(1.0)),
        ])
    }

    #[test]
    fn self_division_is_one() {
        let d = quad(2, 2.5);
        let q = lp_divide_exact(&d, &d, 2, &Tolerance::default()).unwrap();
        assert!((&q - &P::one()).max_abs() < 1e-14);
    }

    #[test]
    fn divides_out_the_quadratic() {
        let d = quad(2, 2.0);
        let f = &P::var(0) + &P::one();
        let q = lp_divide_exact(&(&f * &d), &d, 2, &Tolerance::default()).unwrap();
        assert!((&q - &f).max_abs() < 1e-14);
    }

    #[test]
    fn shifted_inputs() {
        let d = quad(1, -0.7).shift([0, -3, 1]);
        let f = P::from_terms([([1, 0, -1], re(2.0)), ([0, 4, 2], re(-1.5)), ([-2, -1, 0], re(0.25))]);
        let q = lp_divide_exact(&(&f * &d), &d, 1, &Tolerance::default()).unwrap();
        assert!((&q - &f).max_abs() < 1e-13);
    }

    #[test]
    fn non_multiple_is_rejected() {
        let d = quad(2, 2.5);
        let num = &d + &P::var(0);
        match lp_divide_exact(&num, &d, 2, &Tolerance::default()) {
            Err(Error::NotDivisible { residual }) => assert!(residual > 1e-3),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
    }

    #[test]
    fn zero_denominator() {
        assert!(matches!(
            lp_divide_exact(&P::one(), &P::zero(), 0, &Tolerance::default()),
            Err(Error::Degenerate(_))
        ));
    }
}
