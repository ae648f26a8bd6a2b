//! The matrix families `w, d(κ), p(u), h_t^λ(μ), k_t(α)` and the residuals of
//! the commutator conditions they are designed for.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::Mat2;
use crate::error::{Error, Result};
use crate::scalar::{approx_eq, near_zero, re, Real};
use crate::tol::Tolerance;

const GUARD: f64 = Tolerance::DEFAULT_ABS;

fn nonzero<T: Real>(z: Complex<T>, what: &str) -> Result<()> {
    if near_zero(z, GUARD) || !crate::scalar::is_finite(z) {
        return Err(Error::Domain(format!("{what} must be nonzero and finite")));
    }
    Ok(())
}

/// `w = (0 1; −1 0)`.
pub fn mk_w<T: Real>() -> Mat2<T> {
    Mat2::from_real(0.0, 1.0, -1.0, 0.0)
}

/// `d(κ) = diag(κ, κ⁻¹)`.
pub fn mk_d<T: Real>(kappa: Complex<T>) -> Result<Mat2<T>> {
    nonzero(kappa, "kappa")?;
    Ok(Mat2::new(kappa, Complex::zero(), Complex::zero(), kappa.inv()))
}

/// `p(u) = (1 u; 0 1)`; `p = p(1)`.
pub fn mk_p<T: Real>(u: Complex<T>) -> Mat2<T> {
    Mat2::new(Complex::one(), u, Complex::zero(), Complex::one())
}

/// `δ = t² − λ − λ⁻¹ − 2`.
pub fn delta<T: Real>(t: Complex<T>, lambda: Complex<T>) -> Complex<T> {
    t * t - lambda - lambda.inv() - re(2.0)
}

/// `h_t^λ(μ) = (λ+1)⁻¹ (λt  μ; δλμ⁻¹  t)`.
pub fn mk_h<T: Real>(t: Complex<T>, lambda: Complex<T>, mu: Complex<T>) -> Result<Mat2<T>> {
    let mut failed = Vec::new();
    if near_zero(lambda, GUARD) {
        failed.push("lambda = 0");
    } else {
        let sum = lambda + lambda.inv();
        if approx_eq(lambda, re(-1.0), GUARD) {
            failed.push("lambda = -1");
        }
        if approx_eq(sum, t * t - re(2.0), GUARD) {
            failed.push("lambda + 1/lambda = t^2 - 2");
        }
        if approx_eq(sum, re(2.0), GUARD) || approx_eq(sum, re(-2.0), GUARD) {
            failed.push("lambda + 1/lambda = ±2");
        }
    }
    if near_zero(mu, GUARD) {
        failed.push("mu = 0");
    }
    if !failed.is_empty() {
        return Err(Error::Domain(format!("h_t^lambda(mu) undefined: {}", failed.join(", "))));
    }
    let c = (lambda + Complex::one()).inv();
    let dl = delta(t, lambda) * lambda / mu;
    Ok(Mat2::new(lambda * t, mu, dl, t).scale(c))
}

/// `k_t(α) = (α+t/2  (2t)⁻¹(t²/4−1−α²); 2t  −α+t/2)`.
pub fn mk_k<T: Real>(t: Complex<T>, alpha: Complex<T>) -> Result<Mat2<T>> {
    nonzero(t, "t")?;
    let half = t * re(0.5);
    let b = (t * t * re(0.25) - Complex::one() - alpha * alpha) / (t * re(2.0));
    Ok(Mat2::new(alpha + half, b, t * re(2.0), half - alpha))
}

/// `(λ−1)t₁t₂ − (λδ₁μ⁻¹ν − δ₂μν⁻¹)`: vanishes iff `[h_{t₁}^λ(μ), h_{t₂}^λ(ν)⁻¹] = d(λ)`.
pub fn commutator_condition_residual_a<T: Real>(
    t1: Complex<T>,
    t2: Complex<T>,
    lambda: Complex<T>,
    mu: Complex<T>,
    nu: Complex<T>,
) -> Result<Complex<T>> {
    nonzero(lambda, "lambda")?;
    if approx_eq(lambda, re(1.0), GUARD) || approx_eq(lambda, re(-1.0), GUARD) {
        return Err(Error::Domain("lambda must differ from ±1".into()));
    }
    nonzero(mu, "mu")?;
    nonzero(nu, "nu")?;
    let (d1, d2) = (delta(t1, lambda), delta(t2, lambda));
    nonzero(d1, "delta_1")?;
    nonzero(d2, "delta_2")?;
    Ok((lambda - Complex::one()) * t1 * t2 - (lambda * d1 * nu / mu - d2 * mu / nu))
}

/// `t₁⁻¹t₂(α²+1) + t₁t₂⁻¹(β²+1) − (2αβ + t₂α − t₁β)`: vanishes iff
/// `[k_{t₁}(α), k_{t₂}(β)⁻¹] = −p`.
pub fn commutator_condition_residual_c<T: Real>(
    t1: Complex<T>,
    t2: Complex<T>,
    alpha: Complex<T>,
    beta: Complex<T>,
) -> Result<Complex<T>> {
    if near_zero(t1 * t2, GUARD) {
        return Err(Error::Domain("t1 t2 must be nonzero".into()));
    }
    let one = Complex::one();
    Ok(t2 / t1 * (alpha * alpha + one) + t1 / t2 * (beta * beta + one)
        - (alpha * beta * re(2.0) + t2 * alpha - t1 * beta))
}

/// Condition (a) with `x₁ = h_{t₁}^λ(1)`, `x₂ = h_{t₂}^λ(ν)`.
pub fn case1_1_residual<T: Real>(t1: Complex<T>, t2: Complex<T>, lambda: Complex<T>, nu: Complex<T>) -> Result<Complex<T>> {
    commutator_condition_residual_a(t1, t2, lambda, Complex::one(), nu)
}

/// Condition (a) for the pair `x₃⌟x₁ = h_{t₁}^λ(κ²)`, `x₂ = h_{t₂}^λ(ν)`.
pub fn case1_2_residual<T: Real>(
    t1: Complex<T>,
    t2: Complex<T>,
    lambda: Complex<T>,
    kappa: Complex<T>,
    nu: Complex<T>,
) -> Result<Complex<T>> {
    commutator_condition_residual_a(t1, t2, lambda, kappa * kappa, nu)
}

/// `δ₁ν − (1−λ⁻¹)t₁t₂/(1+κ⁻²)` and `δ₂ν⁻¹ − (1−λ)t₁t₂/(1+κ²)`.
pub fn mu_and_inverse_residual<T: Real>(
    t1: Complex<T>,
    t2: Complex<T>,
    lambda: Complex<T>,
    kappa: Complex<T>,
    nu: Complex<T>,
) -> [Complex<T>; 2] {
    let one = Complex::<T>::one();
    let k2 = kappa * kappa;
    [
        delta(t1, lambda) * nu - (one - lambda.inv()) / (one + k2.inv()) * t1 * t2,
        delta(t2, lambda) / nu - (one - lambda) / (one + k2) * t1 * t2,
    ]
}

/// `t₃² − (2−λ−λ⁻¹)t₁²t₂² / ((t₁²−2−λ−λ⁻¹)(t₂²−2−λ−λ⁻¹))`.
pub fn case3_residual<T: Real>(t1: Complex<T>, t2: Complex<T>, t3: Complex<T>, lambda: Complex<T>) -> Complex<T> {
    let l = lambda + lambda.inv();
    let two = re::<T>(2.0);
    t3 * t3 - (two - l) * t1 * t1 * t2 * t2 / ((t1 * t1 - two - l) * (t2 * t2 - two - l))
}

/// Condition (c) with `x₁ = k_{t₁}(0)`, `x₂ = k_{t₂}(β)`.
pub fn case2_1_residual<T: Real>(t1: Complex<T>, t2: Complex<T>, beta: Complex<T>) -> Result<Complex<T>> {
    commutator_condition_residual_c(t1, t2, Complex::zero(), beta)
}

/// Condition (c) for `x₃⌟x₁ = k_{t₁}(t₁θ)`, `x₂ = k_{t₂}(β)`.
pub fn case2_2_residual<T: Real>(t1: Complex<T>, t2: Complex<T>, theta: Complex<T>, beta: Complex<T>) -> Result<Complex<T>> {
    commutator_condition_residual_c(t1, t2, t1 * theta, beta)
}

/// `β − (θ−1)t₂/2`.
pub fn beta_residual<T: Real>(t2: Complex<T>, theta: Complex<T>, beta: Complex<T>) -> Complex<T> {
    beta - (theta - Complex::one()) * t2 * re(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    type C = Complex<f64>;

    fn close(a: &Mat2<f64>, b: &Mat2<f64>, tol: f64) -> bool {
        a.dist(b) <= tol
    }

    #[test]
    fn literal_matrices() {
        assert_eq!(mk_d::<f64>(re(1.0)).unwrap(), Mat2::identity());
        assert_eq!(mk_p::<f64>(C::zero()), Mat2::identity());
        let w = mk_w::<f64>();
        assert_eq!(w.trace(), C::zero());
        assert_eq!(w.det(), C::one());
        assert_eq!(w * w, -Mat2::identity());
        assert!(matches!(mk_d::<f64>(C::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn h_example() {
        let h = mk_h::<f64>(re(1.0), re(4.0), re(1.0)).unwrap();
        let expect = Mat2::from_real(4.0, 1.0, -21.0, 1.0).scale(re(0.2));
        assert!(close(&h, &expect, 1e-15));
        assert!((h.det() - C::one()).norm() < 1e-15);
    }

    #[test]
    fn h_product_is_diagonal() {
        let (t, l, mu): (C, C, C) = (cx(0.7, 0.2), cx(1.5, -0.4), cx(-0.3, 0.9));
        let a = mk_h(t, l, mu).unwrap();
        let b = mk_h(t, l, -mu / l).unwrap();
        assert!(close(&(a * b), &mk_d(l).unwrap(), 1e-13));
        assert!((a.trace() - t).norm() < 1e-14);
    }

    #[test]
    fn h_domain_errors_name_the_failure() {
        let err = mk_h::<f64>(re(1.0), re(-1.0), re(0.0)).unwrap_err().to_string();
        assert!(err.contains("lambda = -1") && err.contains("mu = 0"), "{err}");
        // λ + λ⁻¹ = t² − 2 at t = 3, λ = (7 + √45)/2
        let l = re((7.0 + 45f64.sqrt()) / 2.0);
        assert!(mk_h::<f64>(re(3.0), l, re(1.0)).is_err());
    }

    #[test]
    fn k_examples() {
        let k = mk_k::<f64>(re(2.0), C::zero()).unwrap();
        assert!(close(&k, &Mat2::from_real(1.0, 0.0, 4.0, 1.0), 1e-15));
        let (t, a): (C, C) = (cx(1.3, -0.5), cx(0.2, 0.8));
        let prod = mk_k(t, a).unwrap() * mk_k(t, a - t).unwrap();
        assert!(close(&prod, &-mk_p(re(1.0)), 1e-13));
        assert!(mk_k::<f64>(C::zero(), C::one()).is_err());
    }

    #[test]
    fn condition_a_forward_direction() {
        // solve (λ−1)t₁t₂ = λδ₁μ⁻¹ν − δ₂μν⁻¹ for ν with μ = 1: λδ₁ν² − (λ−1)t₁t₂ν − δ₂ = 0
        let (t1, t2, l): (C, C, C) = (cx(0.9, 0.3), cx(1.4, -0.2), cx(2.0, 0.5));
        let (a, b, c) = (l * delta(t1, l), -(l - C::one()) * t1 * t2, -delta(t2, l));
        let nu = (-b + (b * b - a * c * 4.0).sqrt()) / (a * 2.0);
        let r = commutator_condition_residual_a(t1, t2, l, C::one(), nu).unwrap();
        assert!(r.norm() < 1e-12);
        let a1 = mk_h(t1, l, C::one()).unwrap();
        let a2 = mk_h(t2, l, nu).unwrap().inv();
        assert!(close(&Mat2::commutator(&a1, &a2), &mk_d(l).unwrap(), 1e-10));
    }

    #[test]
    fn condition_c_forward_direction() {
        // case (c) specialised to α = 0: t₁t₂⁻¹β² + t₁β + t₁⁻¹t₂ + t₁t₂⁻¹ = 0
        let (t1, t2) = (re::<f64>(2.0), re::<f64>(2.0));
        let (a, b, c) = (t1 / t2, t1, t2 / t1 + t1 / t2);
        for sgn in [1.0, -1.0] {
            let beta = (-b + (b * b - a * c * 4.0).sqrt() * sgn) / (a * 2.0);
            assert!(case2_1_residual(t1, t2, beta).unwrap().norm() < 1e-12);
            let a1 = mk_k(t1, C::zero()).unwrap();
            let a2 = mk_k(t2, beta).unwrap().inv();
            assert!(close(&Mat2::commutator(&a1, &a2), &-mk_p(re(1.0)), 1e-10));
        }
        assert!(commutator_condition_residual_c::<f64>(C::zero(), re(1.0), C::zero(), C::zero()).is_err());
    }

    #[test]
    fn residuals_are_nonzero_off_the_solution_set() {
        let r = commutator_condition_residual_c::<f64>(re(1.0), re(2.0), re(0.3), re(0.4)).unwrap();
        assert!(r.norm() > 1e-3);
        let r = commutator_condition_residual_a::<f64>(re(1.0), re(2.0), re(3.0), re(0.5), re(0.7)).unwrap();
        assert!(r.norm() > 1e-3);
    }
}
