//! Seeded random points on each component, used by the test suites and the
//! command-line batch mode.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::classify::irreducibility_check;
use super::realize::{realize_x1, realize_x2, realize_x3, realize_x4, KappaBranch, Sign};
use super::representation::{ComponentLabel, Representation};
use super::theta::solve_theta;
use crate::algebra::Mat2;
use crate::error::{Error, Result};
use crate::tol::Tolerance;

/// Largest matrix entry accepted from a sampler; keeps rounding in products of
/// a few matrices well below the acceptance tolerances.
pub const MAX_ENTRY: f64 = 10.0;
const MAX_TRIES: usize = 10_000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `a, b, c` complex standard normal, `d = (1 + bc)/a`, redrawn while `|a| < 10⁻³`
/// or some entry exceeds [`MAX_ENTRY`].
pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R) -> Mat2<f64> {
    loop {
        let (a, b, c) = (normal(rng), normal(rng), normal(rng));
        if a.norm() >= 1e-3 {
            let m = Mat2::new(a, b, c, (1.0 + b * c) / a);
            if m.max_norm() <= MAX_ENTRY {
                return m;
            }
        }
    }
}

/// Uniform in the annulus `lo ≤ |z| ≤ hi`.
fn annulus<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> Complex64 {
    Complex64::from_polar(rng.random_range(lo..hi), rng.random_range(0.0..std::f64::consts::TAU))
}

fn disc<R: Rng + ?Sized>(rng: &mut R, r: f64) -> Complex64 {
    annulus(rng, 0.0, r)
}

fn acceptable(rep: &Representation<f64>) -> bool {
    rep.matrices().iter().all(|m| m.is_finite() && m.max_norm() <= MAX_ENTRY)
}

fn retry<R: Rng + ?Sized>(rng: &mut R, mut f: impl FnMut(&mut R) -> Option<Representation<f64>>) -> Result<Representation<f64>> {
    for _ in 0..MAX_TRIES {
        if let Some(rep) = f(rng) {
            if acceptable(&rep) {
                return Ok(rep);
            }
        }
    }
    Err(Error::Degenerate("sampler exhausted its retry budget".into()))
}

/// Point of `X₁±,ᵢ` with `xᵢ₋₁, xᵢ₊₁` random in SL(2,ℂ) and `|f − 2| ≥ 0.1`.
pub fn sample_x1<R: Rng + ?Sized>(rng: &mut R, i: usize, sign: Sign, tol: &Tolerance) -> Result<Representation<f64>> {
    retry(rng, |rng| {
        let (a, b) = (random_sl2(rng), random_sl2(rng));
        if (Mat2::commutator(&a, &b).trace() - 2.0).norm() < 0.1 {
            return None;
        }
        realize_x1(i, sign, a, b, tol).ok()
    })
}

/// Point of `X₂,ᵢ` with `0.3 ≤ |κ| ≤ 3` and `κ + κ⁻¹` at least 0.1 from `±2`.
pub fn sample_x2<R: Rng + ?Sized>(rng: &mut R, i: usize, tol: &Tolerance) -> Result<Representation<f64>> {
    retry(rng, |rng| {
        let (kp, kn) = (annulus(rng, 0.3, 3.0), annulus(rng, 0.3, 3.0));
        let far = |k: Complex64| {
            let t = k + k.inv();
            (t - 2.0).norm() >= 0.1 && (t + 2.0).norm() >= 0.1
        };
        if !far(kp) || !far(kn) {
            return None;
        }
        realize_x2(i, kp, kn, tol).ok()
    })
}

/// Point of `X₃,ᵢ`: `tᵢ` and `t_{i,i−1}` random, then `t_{i,i+1}` and `t₁₂₃`
/// solved from the two defining equations.
pub fn sample_x3<R: Rng + ?Sized>(rng: &mut R, i: usize, tol: &Tolerance) -> Result<Representation<f64>> {
    retry(rng, |rng| {
        let ti = disc(rng, 2.5);
        let r = 4.0 - ti * ti;
        if r.norm() < 0.1 || ti.norm() < 0.1 {
            return None;
        }
        let a = disc(rng, 2.0);
        let denom = 1.0 + a * a / (ti * ti);
        if denom.norm() < 0.1 {
            return None;
        }
        let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
        let b = ((r - a * a) / denom).sqrt() * sign;
        let c = a * b / ti;
        realize_x3(i, ti, a, b, c, tol).ok()
    })
}

/// Point of `X₄`: random `tᵢ` with `0.5 ≤ |tᵢ| ≤ 3`, a random root `θ`, and
/// a random κ branch.
pub fn sample_x4<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> Result<Representation<f64>> {
    retry(rng, |rng| {
        let t = [(); 3].map(|_| annulus(rng, 0.5, 3.0));
        let thetas = solve_theta(t[0], t[1], t[2], tol).ok()?;
        if thetas.is_empty() {
            return None;
        }
        let theta = thetas[rng.random_range(0..thetas.len())];
        if theta.norm() < 0.05 || (theta * t[2]).norm() < 0.05 {
            return None;
        }
        let branch = if rng.random::<bool>() { KappaBranch::Principal } else { KappaBranch::Other };
        let rep = realize_x4(t[0], t[1], t[2], theta, branch, tol).ok()?;
        irreducibility_check(&rep.matrices(), tol).then_some(rep)
    })
}

/// Random point on the given component.
pub fn sample_component<R: Rng + ?Sized>(rng: &mut R, label: ComponentLabel, tol: &Tolerance) -> Result<Representation<f64>> {
    match label {
        ComponentLabel::X1Plus(i) => sample_x1(rng, i, Sign::Plus, tol),
        ComponentLabel::X1Minus(i) => sample_x1(rng, i, Sign::Minus, tol),
        ComponentLabel::X2(i) => sample_x2(rng, i, tol),
        ComponentLabel::X3(i) => sample_x3(rng, i, tol),
        ComponentLabel::X4 => sample_x4(rng, tol),
        ComponentLabel::Custom => Err(Error::Domain("no sampler for custom representations".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sample() {
        let tol = Tolerance::default();
        for label in ComponentLabel::all() {
            let a = sample_component(&mut rng_from_seed(7), label, &tol).unwrap();
            let b = sample_component(&mut rng_from_seed(7), label, &tol).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.component, label);
        }
    }

    #[test]
    fn random_sl2_is_unimodular() {
        let mut rng = rng_from_seed(1);
        for _ in 0..100 {
            assert!(random_sl2(&mut rng).is_unimodular(1e-12));
        }
    }
}
