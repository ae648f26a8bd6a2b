//! Comparison of Laurent polynomials up to a monomial unit `s₁^k₁ s₂^k₂ s₃^k₃`
//! and the canonical form used to report them.

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{sub_exp, Exp, LaurentPoly, NVARS};
use crate::scalar::Real;
use crate::tol::Tolerance;

/// Outcome of [`equal_up_to_unit`]: `p ≈ scale · s^unit · q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitMatch<T> {
    pub equal: bool,
    pub unit: Exp,
    pub scale: Complex<T>,
    /// `max|p − scale·s^unit·q| / max|p|`.
    pub residual: T,
}

/// Canonical representative of a polynomial's class under monomial units.
///
/// `raw = scale · s^unit · poly`, where `poly` has minimum exponent 0 in each
/// variable and coefficient 1 at its lexicographically smallest exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct Normalized<T> {
    pub poly: LaurentPoly<T>,
    pub unit: Exp,
    pub scale: Complex<T>,
}

/// Terms that matter for determining exponent ranges: modulus above
/// `tol.abs × max`.
fn significant<T: Real>(p: &LaurentPoly<T>, tol: &Tolerance) -> LaurentPoly<T> {
    p.chop((p.max_abs() * T::lit(tol.abs)).to_f64_lossy())
}

pub fn normalize<T: Real>(p: &LaurentPoly<T>, tol: &Tolerance) -> Normalized<T> {
    let sig = significant(p, tol);
    let Some(min) = sig.min_exp() else {
        return Normalized { poly: LaurentPoly::zero(), unit: [0; NVARS], scale: Complex::one() };
    };
    let shifted = p.shift(std::array::from_fn(|j| -min[j]));
    let (lead, _) = sig.shift(std::array::from_fn(|j| -min[j])).terms().next().map(|(e, c)| (*e, *c)).expect("nonzero");
    let scale = shifted.coeff(&lead);
    Normalized { poly: shifted.scale(scale.inv()), unit: min, scale }
}

/// Tests `p = scale · s^unit · q` within `tol.abs` relative to `max|p|`.
///
/// The unit is read off from the minimum exponents of the significant terms and
/// the scale from the largest coefficient of `q`. Any constant scale is reported;
/// callers decide whether a scale other than 1 is acceptable.
pub fn equal_up_to_unit<T: Real>(p: &LaurentPoly<T>, q: &LaurentPoly<T>, tol: &Tolerance) -> UnitMatch<T> {
    let mismatch = |residual: T| UnitMatch { equal: false, unit: [0; NVARS], scale: Complex::zero(), residual };
    let (sp, sq) = (significant(p, tol), significant(q, tol));
    let (Some(pmin), Some(qmin)) = (sp.min_exp(), sq.min_exp()) else {
        let both_zero = p.is_zero() && q.is_zero();
        return UnitMatch { equal: both_zero, unit: [0; NVARS], scale: Complex::one(), residual: T::zero() };
    };
    if sp.max_exp().map(|m| sub_exp(&m, &pmin)) != sq.max_exp().map(|m| sub_exp(&m, &qmin)) {
        return mismatch(T::one());
    }
    let unit = sub_exp(&pmin, &qmin);
    let shifted = q.shift(unit);
    let (anchor, qc) = shifted
        .terms()
        .max_by(|a, b| a.1.norm().partial_cmp(&b.1.norm()).unwrap_or(std::cmp::Ordering::Equal))
        .map(|(e, c)| (*e, *c))
        .expect("nonzero");
    let scale = p.coeff(&anchor) / qc;
    if scale.is_zero() || !scale.re.is_finite() || !scale.im.is_finite() {
        return mismatch(T::one());
    }
    let diff = p - &shifted.scale(scale);
    let residual = diff.max_abs() / p.max_abs();
    UnitMatch { equal: residual <= T::lit(tol.abs), unit, scale, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cx, re};

    type P = LaurentPoly<f64>;

    fn sample() -> P {
        P::from_terms([([0, 0, 0], cx(1.0, 0.5)), ([1, 2, 0], re(-2.0)), ([0, 1, -1], cx(0.0, 3.0))])
    }

    #[test]
    fn monomial_multiple_is_detected() {
        let p = sample();
        let m = equal_up_to_unit(&p.shift([2, 0, 0]), &p, &Tolerance::default());
        assert!(m.equal);
        assert_eq!(m.unit, [2, 0, 0]);
        assert!((m.scale - re(1.0)).norm() < 1e-15);
    }

    #[test]
    fn sign_is_reported_as_scale() {
        let p = sample();
        let m = equal_up_to_unit(&(-&p).shift([0, -1, 3]), &p, &Tolerance::default());
        assert!(m.equal);
        assert_eq!(m.unit, [0, -1, 3]);
        assert!((m.scale + re(1.0)).norm() < 1e-15);
    }

    #[test]
    fn perturbed_polynomial_is_different() {
        let p = sample();
        let m = equal_up_to_unit(&p, &(&p + &P::var(1)), &Tolerance::default());
        assert!(!m.equal);
    }

    #[test]
    fn normal_form_is_unit_invariant() {
        let p = sample();
        let tol = Tolerance::default();
        let a = normalize(&p, &tol);
        let b = normalize(&p.shift([-4, 1, 7]).scale(cx(0.0, -2.0)), &tol);
        assert!(equal_up_to_unit(&a.poly, &b.poly, &tol).equal);
        assert_eq!(a.poly.min_exp(), Some([0, 0, 0]));
        assert_eq!(b.unit, [-4, 1, 6]);
        // raw = scale · s^unit · poly
        let rebuilt = a.poly.shift(a.unit).scale(a.scale);
        assert!((&rebuilt - &p).max_abs() < 1e-14);
    }
}
