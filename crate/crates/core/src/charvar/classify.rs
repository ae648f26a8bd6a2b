use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::character::CharacterTuple;
use super::representation::ComponentLabel;
use super::theta::quartic_holds;
use crate::algebra::Mat2;
use crate::error::{Error, Result};
use crate::scalar::{approx_eq, re, Real};
use crate::tol::Tolerance;
use crate::words::{next, prev};

/// Components containing a character; `boundary_warning` is set when some
/// component's equalities hold but one of its inequations fails only within
/// tolerance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub labels: Vec<ComponentLabel>,
    pub boundary_warning: bool,
}

enum Verdict {
    In,
    Out,
    Boundary,
}

struct Checker {
    tol: f64,
}

impl Checker {
    fn eq<T: Real>(&self, a: Complex<T>, b: Complex<T>) -> bool {
        approx_eq(a, b, self.tol)
    }

    fn zero<T: Real>(&self, a: Complex<T>) -> bool {
        self.eq(a, Complex::zero())
    }

    /// Equalities first, then inequations `a ≠ b`.
    fn verdict<T: Real>(&self, equalities: &[bool], inequations: &[(Complex<T>, Complex<T>)]) -> Verdict {
        if !equalities.iter().all(|b| *b) {
            Verdict::Out
        } else if inequations.iter().any(|(a, b)| self.eq(*a, *b)) {
            Verdict::Boundary
        } else {
            Verdict::In
        }
    }
}

fn x1_verdict<T: Real>(k: &Checker, c: &CharacterTuple<T>, i: usize, sign: f64) -> Verdict {
    let (ip, im) = (next(i), prev(i));
    let s = re::<T>(sign);
    let eqs = [
        k.eq(c.t(i), s * re(2.0)),
        k.eq(c.tij(i, ip), s * c.t(ip)),
        k.eq(c.tij(i, im), s * c.t(im)),
        k.eq(c.t123, s * c.tij(im, ip)),
    ];
    k.verdict(&eqs, &[(c.f(im, ip), re(2.0))])
}

fn x2_verdict<T: Real>(k: &Checker, c: &CharacterTuple<T>, i: usize) -> Verdict {
    let (ip, im) = (next(i), prev(i));
    let eqs = [k.zero(c.t(i)), k.zero(c.tij(i, ip)), k.zero(c.tij(i, im)), k.zero(c.t123), k.eq(c.f(im, ip), re(2.0))];
    let sq = |z: Complex<T>| z * z;
    k.verdict(&eqs, &[(sq(c.t(ip)), re(4.0)), (sq(c.t(im)), re(4.0))])
}

fn x3_verdict<T: Real>(k: &Checker, c: &CharacterTuple<T>, i: usize) -> Verdict {
    let (ip, im) = (next(i), prev(i));
    let sq = |z: Complex<T>| z * z;
    let (a, b) = (c.tij(i, im), c.tij(i, ip));
    let rhs = re::<T>(4.0) - sq(c.t(i));
    let eqs = [
        k.zero(c.t(ip)),
        k.zero(c.t(im)),
        k.zero(c.tij(im, ip)),
        k.eq(c.t(i) * c.t123, a * b),
        k.eq(sq(a) + sq(b) + sq(c.t123), rhs),
    ];
    k.verdict(&eqs, &[(rhs, Complex::zero())])
}

/// `θ` recorded on the character, or recovered from `t₁₂ = ((θ+1)/2)t₁t₂`.
pub fn theta_of<T: Real>(c: &CharacterTuple<T>) -> Option<Complex<T>> {
    c.theta.or_else(|| {
        let d = c.t1 * c.t2;
        (!d.is_zero()).then(|| c.t12 * re(2.0) / d - Complex::one())
    })
}

fn x4_verdict<T: Real>(k: &Checker, c: &CharacterTuple<T>) -> Verdict {
    let Some(theta) = theta_of(c) else {
        return Verdict::Out;
    };
    if !theta.re.is_finite() || !theta.im.is_finite() {
        return Verdict::Out;
    }
    let h = (theta + Complex::one()) * re(0.5);
    let [t1, t2, t3] = [c.t1, c.t2, c.t3];
    let eqs = [
        quartic_holds(t1, t2, t3, theta, k.tol),
        k.eq(c.t12, h * t1 * t2),
        k.eq(c.t13, h * t1 * t3),
        k.eq(c.t23, h * t2 * t3),
        k.eq(c.t123, h * h * t1 * t2 * t3),
    ];
    let z = Complex::zero();
    k.verdict(&eqs, &[(t1, z), (t2, z), (t3, z), (theta, z)])
}

/// Every component whose defining equations hold at `c`.
pub fn classify<T: Real>(c: &CharacterTuple<T>, tol: &Tolerance) -> Result<Classification> {
    let k = Checker { tol: tol.abs };
    let mut labels = Vec::new();
    let mut boundary_warning = false;
    let mut record = |v: Verdict, label: ComponentLabel| match v {
        Verdict::In => labels.push(label),
        Verdict::Boundary => boundary_warning = true,
        Verdict::Out => {}
    };
    for i in 1..=3 {
        record(x1_verdict(&k, c, i, 1.0), ComponentLabel::X1Plus(i));
        record(x1_verdict(&k, c, i, -1.0), ComponentLabel::X1Minus(i));
        record(x2_verdict(&k, c, i), ComponentLabel::X2(i));
        record(x3_verdict(&k, c, i), ComponentLabel::X3(i));
    }
    record(x4_verdict(&k, c), ComponentLabel::X4);
    if labels.is_empty() {
        return Err(Error::Unclassified);
    }
    Ok(Classification { labels, boundary_warning })
}

/// Eigenvectors of `x` (one if parabolic, none if `±e`), normalized.
fn eigenvectors<T: Real>(x: &Mat2<T>, tol: f64) -> Vec<[Complex<T>; 2]> {
    let [[a, b], [c, d]] = x.m;
    let tr = a + d;
    let disc = (tr * tr - re(4.0)).sqrt();
    let half = re::<T>(0.5);
    let mut lams = vec![(tr + disc) * half];
    if disc.norm() > T::lit(tol) {
        lams.push((tr - disc) * half);
    }
    let mut out = Vec::new();
    for l in lams {
        let v = if b.norm() >= c.norm() { [b, l - a] } else { [l - d, c] };
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if n > T::lit(tol) {
            out.push([v[0] / n, v[1] / n]);
        }
    }
    out
}

/// `|x v ∧ v|` relative to `‖x‖` for a unit vector `v`.
fn eigen_defect<T: Real>(x: &Mat2<T>, v: &[Complex<T>; 2]) -> T {
    let w0 = x.m[0][0] * v[0] + x.m[0][1] * v[1];
    let w1 = x.m[1][0] * v[0] + x.m[1][1] * v[1];
    (w0 * v[1] - w1 * v[0]).norm() / x.max_norm().max(T::one())
}

/// Whether `x₁, x₂, x₃` have no common eigenvector.
pub fn irreducibility_check<T: Real>(x: &[Mat2<T>; 3], tol: &Tolerance) -> bool {
    let c = CharacterTuple::from_matrices(x);
    if [(1, 2), (1, 3), (2, 3)].iter().any(|&(i, j)| !approx_eq(c.f(i, j), re(2.0), tol.abs)) {
        return true;
    }
    let spread = |m: &Mat2<T>| (m.trace() * m.trace() - re(4.0)).norm();
    let mut order: Vec<&Mat2<T>> = x.iter().collect();
    order.sort_by(|a, b| spread(b).partial_cmp(&spread(a)).unwrap_or(std::cmp::Ordering::Equal));
    let Some(pivot) = order.iter().find(|m| m.dist(&Mat2::identity()) > T::lit(tol.abs) && m.dist(&-Mat2::identity()) > T::lit(tol.abs)) else {
        return false;
    };
    let tol_vec = (tol.abs.sqrt()).max(tol.abs);
    !eigenvectors(pivot, tol.abs).iter().any(|v| x.iter().all(|m| eigen_defect(m, v) <= T::lit(tol_vec)))
}

/// Both sides of "`[a, b] = −e` iff `tr a = tr b = tr ab = 0`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorMinusE {
    pub commutator_is_minus_e: bool,
    pub traces_vanish: bool,
}

impl CommutatorMinusE {
    pub fn consistent(&self) -> bool {
        self.commutator_is_minus_e == self.traces_vanish
    }
}

pub fn commutator_minus_e_check<T: Real>(a: &Mat2<T>, b: &Mat2<T>, tol: &Tolerance) -> CommutatorMinusE {
    let g = Mat2::commutator(a, b);
    let scale = T::one().max(a.max_norm() * b.max_norm()).powi(2);
    let z = |v: Complex<T>| v.norm() <= T::lit(tol.abs) * T::one().max(a.max_norm() * b.max_norm());
    CommutatorMinusE {
        commutator_is_minus_e: g.dist(&-Mat2::identity()) <= T::lit(tol.abs) * scale,
        traces_vanish: z(a.trace()) && z(b.trace()) && z((*a * *b).trace()),
    }
}
