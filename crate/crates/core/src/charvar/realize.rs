//! Representations realizing each component of the character variety.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::matrices::{mk_d, mk_w};
use super::representation::{ComponentLabel, Representation};
use super::theta::{quadratic_roots, quartic_holds};
use crate::algebra::Mat2;
use crate::error::{Error, Result};
use crate::scalar::{approx_eq, imag_unit, near_zero, re, Real};
use crate::tol::Tolerance;
use crate::words::{next, prev};

/// `xᵢ = +e` or `xᵢ = −e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Root of `κ² − t₃κ + 1 = 0` used by [`realize_x4`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KappaBranch {
    /// `|κ| ≥ 1`, ties broken by `arg κ ∈ [0, π)`.
    #[default]
    Principal,
    /// `1/κ` of the principal root.
    Other,
}

impl KappaBranch {
    pub fn flip(self) -> Self {
        match self {
            Self::Principal => Self::Other,
            Self::Other => Self::Principal,
        }
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=3).contains(&i) {
        Ok(())
    } else {
        Err(Error::Index { index: i, max: 3 })
    }
}

fn place<T: Real>(i: usize, xi: Mat2<T>, x_prev: Mat2<T>, x_next: Mat2<T>) -> [Mat2<T>; 3] {
    let mut x = [Mat2::identity(); 3];
    x[i - 1] = xi;
    x[prev(i) - 1] = x_prev;
    x[next(i) - 1] = x_next;
    x
}

/// `xᵢ = ±e` with `xᵢ₋₁, xᵢ₊₁` arbitrary without a common eigenvector.
pub fn realize_x1<T: Real>(i: usize, sign: Sign, x_prev: Mat2<T>, x_next: Mat2<T>, tol: &Tolerance) -> Result<Representation<T>> {
    check_index(i)?;
    for (name, x) in [("x_prev", &x_prev), ("x_next", &x_next)] {
        if !x.is_unimodular(tol.abs) {
            return Err(Error::Domain(format!("{name} is not unimodular (det = {})", x.det())));
        }
    }
    let trace = Mat2::commutator(&x_prev, &x_next).trace();
    if approx_eq(trace, re(2.0), tol.abs) {
        return Err(Error::Reducible { trace: trace.to_string() });
    }
    let xi = Mat2::scalar(re(sign.value()));
    let label = match sign {
        Sign::Plus => ComponentLabel::X1Plus(i),
        Sign::Minus => ComponentLabel::X1Minus(i),
    };
    Ok(Representation::new(place(i, xi, x_prev, x_next), label).with_param("sign", re(sign.value())))
}

/// `xᵢ = w`, `xᵢ₋₁ = d(κ_prev)`, `xᵢ₊₁ = d(κ_next)`.
pub fn realize_x2<T: Real>(i: usize, kappa_prev: Complex<T>, kappa_next: Complex<T>, tol: &Tolerance) -> Result<Representation<T>> {
    check_index(i)?;
    for (name, k) in [("kappa_prev", kappa_prev), ("kappa_next", kappa_next)] {
        if approx_eq(k, re(1.0), tol.abs) || approx_eq(k, re(-1.0), tol.abs) {
            return Err(Error::Domain(format!("{name} must differ from ±1 (trace ±2)")));
        }
    }
    let x = place(i, mk_w(), mk_d(kappa_prev)?, mk_d(kappa_next)?);
    Ok(Representation::new(x, ComponentLabel::X2(i))
        .with_param("kappa_prev", kappa_prev)
        .with_param("kappa_next", kappa_next))
}

/// `xᵢ₋₁ = w`, `xᵢ₊₁ = d(√−1)` and `xᵢ` assembled from
/// `(tᵢ, t_{i,i−1}, t_{i,i+1}, t₁₂₃)`.
pub fn realize_x3<T: Real>(
    i: usize,
    t_i: Complex<T>,
    t_prev_pair: Complex<T>,
    t_next_pair: Complex<T>,
    t123: Complex<T>,
    tol: &Tolerance,
) -> Result<Representation<T>> {
    check_index(i)?;
    let sq = |z: Complex<T>| z * z;
    let four = re::<T>(4.0);
    if !approx_eq(t_i * t123, t_prev_pair * t_next_pair, tol.abs) {
        return Err(Error::Constraint("t_i t_123 must equal t_{i,i-1} t_{i,i+1}".into()));
    }
    if !approx_eq(sq(t_i) + sq(t_prev_pair) + sq(t_next_pair) + sq(t123), four, tol.abs) {
        return Err(Error::Constraint("t_i^2 + t_{i,i-1}^2 + t_{i,i+1}^2 + t_123^2 must equal 4".into()));
    }
    if approx_eq(sq(t_i), four, tol.abs) {
        return Err(Error::Constraint("4 - t_i^2 must be nonzero".into()));
    }
    let j = imag_unit::<T>();
    let h = re::<T>(0.5);
    let a = Mat2::new(
        (t_i - t_next_pair * j) * h,
        -(t_prev_pair + t123 * j) * h,
        (t_prev_pair - t123 * j) * h,
        (t_i + t_next_pair * j) * h,
    );
    let x = place(i, a, mk_w(), mk_d(j)?);
    Ok(Representation::new(x, ComponentLabel::X3(i))
        .with_param("t_i", t_i)
        .with_param("t_prev_pair", t_prev_pair)
        .with_param("t_next_pair", t_next_pair)
        .with_param("t123", t123))
}

/// The root of `κ² − tκ + 1 = 0` selected by `branch`.
pub fn kappa_root<T: Real>(t: Complex<T>, branch: KappaBranch) -> Complex<T> {
    let [r1, r2] = quadratic_roots(-t, Complex::one());
    let (n1, n2) = (r1.norm(), r2.norm());
    let in_half_plane = |z: Complex<T>| {
        let a = z.arg();
        a >= T::zero() && a < T::PI()
    };
    let principal = if (n1 - n2).abs() <= T::lit(1e-12) * n1.max(n2) {
        if in_half_plane(r1) || !in_half_plane(r2) {
            r1
        } else {
            r2
        }
    } else if n1 > n2 {
        r1
    } else {
        r2
    };
    match branch {
        KappaBranch::Principal => principal,
        KappaBranch::Other => principal.inv(),
    }
}

/// `λ = (κ − κ⁻¹ + θt₃) / (κ − κ⁻¹ − θt₃)`.
pub fn x4_lambda<T: Real>(kappa: Complex<T>, theta: Complex<T>, t3: Complex<T>) -> Complex<T> {
    let k = kappa - kappa.inv();
    (k + theta * t3) / (k - theta * t3)
}

fn x4_matrices<T: Real>(t: [Complex<T>; 3], theta: Complex<T>, kappa: Complex<T>, tol: &Tolerance) -> Option<[Mat2<T>; 3]> {
    let [t1, t2, t3] = t;
    let one = Complex::<T>::one();
    let (half, two, four) = (re::<T>(0.5), re::<T>(2.0), re::<T>(4.0));
    let kk = kappa - kappa.inv();
    let (a, c) = (t1 * t1, t3 * t3);
    let diag = theta * a * t3;
    let x1 = Mat2::new(diag + kk * (a - four), a - four, theta * theta * a * c - (a - four) * (c - four), diag - kk * (a - four))
        .scale((two * theta * t1 * t3).inv());
    let m11 = kappa + (theta - one) * t3 * half;
    let m21 = two + kappa.inv() * (theta - one) * t3;
    let m22 = kappa.inv() + (one - theta) * t3 * half;
    let scale = t2 / t3;
    if near_zero(m21 * scale, tol.abs) {
        return None;
    }
    let star = (m11 * m22 - scale.inv() * scale.inv()) / m21;
    let x2 = Mat2::new(m11, star, m21, m22).scale(scale);
    let x3 = Mat2::new(kappa, one, Complex::zero(), kappa.inv());
    Some([x1, x2, x3])
}

/// Representation of the canonical-component point `(t₁, t₂, t₃, θ)`.
///
/// If the lower-left entry of `x₂` vanishes on the requested κ branch the other
/// branch is tried; the branch actually used is recorded as parameter `kappa`.
pub fn realize_x4<T: Real>(
    t1: Complex<T>,
    t2: Complex<T>,
    t3: Complex<T>,
    theta: Complex<T>,
    branch: KappaBranch,
    tol: &Tolerance,
) -> Result<Representation<T>> {
    if [t1, t2, t3].iter().any(|t| near_zero(*t, tol.abs)) {
        return Err(Error::Domain("t_i must be nonzero on X4".into()));
    }
    if near_zero(theta, tol.abs) {
        return Err(Error::Domain("theta must be nonzero on X4".into()));
    }
    if !quartic_holds(t1, t2, t3, theta, tol.abs) {
        return Err(Error::Constraint("(t1, t2, t3, theta) is not on the X4 quartic".into()));
    }
    for b in [branch, branch.flip()] {
        let kappa = kappa_root(t3, b);
        if let Some(x) = x4_matrices([t1, t2, t3], theta, kappa, tol) {
            return Ok(Representation::new(x, ComponentLabel::X4)
                .with_param("t1", t1)
                .with_param("t2", t2)
                .with_param("t3", t3)
                .with_param("theta", theta)
                .with_param("kappa", kappa));
        }
    }
    Err(Error::Degenerate("x2[2,1] = 2 + (theta - 1) t3 / kappa vanishes on both kappa branches".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::matrices::mk_p;
    use crate::charvar::CharacterTuple;
    use crate::scalar::cx;

    type C = Complex<f64>;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn x1_examples() {
        let d2 = mk_d::<f64>(re(2.0)).unwrap();
        let rep = realize_x1(1, Sign::Plus, d2, mk_w(), &tol()).unwrap();
        assert_eq!(rep.x1, Mat2::identity());
        assert_eq!(rep.x2, mk_w());
        assert_eq!(rep.x3, d2);
        assert!(rep.relation_residuals().iter().all(|r| *r == 0.0));
        let err = realize_x1(1, Sign::Plus, d2, mk_d(re(3.0)).unwrap(), &tol());
        assert!(matches!(err, Err(Error::Reducible { .. })));
    }

    #[test]
    fn x2_example() {
        let rep = realize_x2(1, re::<f64>(3.0), re(2.0), &tol()).unwrap();
        assert_eq!(rep.x1, mk_w());
        assert_eq!(rep.x2, mk_d(re(2.0)).unwrap());
        assert_eq!(rep.x3, mk_d(re(3.0)).unwrap());
        assert!(rep.relation_residuals().iter().all(|r| *r < 1e-14));
        assert!(matches!(realize_x2(1, re::<f64>(1.0), re(2.0), &tol()), Err(Error::Domain(_))));
    }

    #[test]
    fn x3_example() {
        // i = 3: t3 = 0, t_{3,2} = 0, t_{3,1} = 2, t123 = 0
        let rep = realize_x3(3, C::zero(), C::zero(), re(2.0), C::zero(), &tol()).unwrap();
        assert!(rep.x3.dist(&mk_d(cx(0.0, -1.0)).unwrap()) < 1e-15);
        assert_eq!(rep.x2, mk_w());
        assert!(rep.relation_residuals().iter().all(|r| *r < 1e-10));
        let c = rep.character();
        assert!((c.t13 - re(2.0)).norm() < 1e-15);
        let bad = realize_x3(3, C::zero(), re(1.0), re(1.0), C::zero(), &tol());
        assert!(matches!(bad, Err(Error::Constraint(_))));
    }

    #[test]
    fn kappa_branches() {
        let k = kappa_root(re::<f64>(2.5), KappaBranch::Principal);
        assert!((k - re(2.0)).norm() < 1e-15);
        assert!((kappa_root(re::<f64>(2.5), KappaBranch::Other) - re(0.5)).norm() < 1e-15);
        // |κ| = 1: pick the upper half plane
        let k = kappa_root(re::<f64>(1.0), KappaBranch::Principal);
        assert!(k.im > 0.0 && (k.norm() - 1.0).abs() < 1e-15);
        assert!((kappa_root(re::<f64>(2.0), KappaBranch::Principal) - re(1.0)).norm() < 1e-7);
    }

    #[test]
    fn holonomy_representation() {
        let two = re::<f64>(2.0);
        let i = cx(0.0, 1.0);
        let rep = realize_x4(two, two, two, i, KappaBranch::Principal, &tol()).unwrap();
        assert!(rep.relation_residuals().iter().all(|r| *r < 1e-9), "{:?}", rep.relation_residuals());
        let c = rep.character();
        assert!((c.t12 - cx(2.0, 2.0)).norm() < 1e-9);
        let remark = [Mat2::new(re(1.0), re(0.0), re(2.0), re(1.0)), Mat2::new(i, i, re(2.0), two - i), mk_p(i)];
        assert!(c.dist(&CharacterTuple::from_matrices(&remark)) < 1e-9);
    }

    #[test]
    fn x4_rejections() {
        let two = re::<f64>(2.0);
        assert!(matches!(realize_x4(two, C::zero(), two, C::one(), KappaBranch::Principal, &tol()), Err(Error::Domain(_))));
        assert!(matches!(realize_x4(two, two, two, re(0.5), KappaBranch::Principal, &tol()), Err(Error::Constraint(_))));
    }
}
