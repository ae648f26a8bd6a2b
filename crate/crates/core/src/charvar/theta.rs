//! The quartic `θ⁴ + (4Σtᵢ⁻² − 2)θ² + Π(1 − 4tᵢ⁻²) = 0` cutting out the
//! canonical component, its solver, and the 2-fold cover maps.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{approx_eq, near_zero, re, Real};
use crate::tol::Tolerance;

fn require_nonzero<T: Real>(ts: &[Complex<T>], tol: &Tolerance) -> Result<()> {
    if ts.iter().any(|t| near_zero(*t, tol.abs)) {
        return Err(Error::Domain("t_i must be nonzero on X4".into()));
    }
    Ok(())
}

/// Coefficients `(b, c)` of `u² + bu + c` with `u = θ²`.
fn quadratic_in_u<T: Real>(t1: Complex<T>, t2: Complex<T>, t3: Complex<T>) -> (Complex<T>, Complex<T>) {
    let inv4 = |t: Complex<T>| (t * t).inv() * re(4.0);
    let (a1, a2, a3) = (inv4(t1), inv4(t2), inv4(t3));
    let one = Complex::<T>::one();
    (a1 + a2 + a3 - re(2.0), (one - a1) * (one - a2) * (one - a3))
}

/// Value of the quartic at `(t₁, t₂, t₃, θ)`.
pub fn quartic_residual<T: Real>(t1: Complex<T>, t2: Complex<T>, t3: Complex<T>, theta: Complex<T>) -> Complex<T> {
    let (b, c) = quadratic_in_u(t1, t2, t3);
    let u = theta * theta;
    u * u + b * u + c
}

/// Whether the quartic holds, relative to the size of its terms.
pub fn quartic_holds<T: Real>(t1: Complex<T>, t2: Complex<T>, t3: Complex<T>, theta: Complex<T>, tol: f64) -> bool {
    let (b, c) = quadratic_in_u(t1, t2, t3);
    let u = theta * theta;
    approx_eq(u * u + b * u, -c, tol)
}

/// Roots of `u² + bu + c` without cancellation.
pub(crate) fn quadratic_roots<T: Real>(b: Complex<T>, c: Complex<T>) -> [Complex<T>; 2] {
    let s = (b * b - c * re(4.0)).sqrt();
    let q = if (-b + s).norm() >= (-b - s).norm() { -b + s } else { -b - s } * re(0.5);
    if q.is_zero() {
        return [Complex::zero(), Complex::zero()];
    }
    [q, c / q]
}

/// All nonzero `θ` on the quartic over `(t₁, t₂, t₃)`: up to four values,
/// ordered as `+√u, −√u` (principal branch, right half plane) for each root `u` of the quadratic in `θ²`, larger
/// `|u|` first; numerically repeated values are listed once.
pub fn solve_theta<T: Real>(t1: Complex<T>, t2: Complex<T>, t3: Complex<T>, tol: &Tolerance) -> Result<Vec<Complex<T>>> {
    require_nonzero(&[t1, t2, t3], tol)?;
    let (b, c) = quadratic_in_u(t1, t2, t3);
    let mut out: Vec<Complex<T>> = Vec::new();
    for u in quadratic_roots(b, c) {
        if near_zero(u, tol.abs) {
            continue;
        }
        let r = right_half_plane(u.sqrt());
        for theta in [r, -r] {
            if !out.iter().any(|o| approx_eq(*o, theta, tol.abs)) {
                out.push(theta);
            }
        }
    }
    Ok(out)
}

/// `±z`, whichever has positive real part (positive imaginary part on the axis).
fn right_half_plane<T: Real>(z: Complex<T>) -> Complex<T> {
    let eps = T::epsilon() * T::lit(16.0) * z.norm();
    if z.re < -eps || (z.re.abs() <= eps && z.im < T::zero()) {
        -z
    } else {
        z
    }
}

/// `θ² ≠ 1−4a⁻², 1−4b⁻², (1−4a⁻²)(1−4b⁻²)` plus the square roots of
/// `t² = 4((4a⁻²−1)(4b⁻²−1) − θ²) / ((θ²+4a⁻²−1)(θ²+4b⁻²−1))`.
fn cover<T: Real>(a: Complex<T>, b: Complex<T>, theta: Complex<T>, names: [&str; 2], tol: &Tolerance) -> Result<(Complex<T>, Complex<T>)> {
    require_nonzero(&[a, b], tol)?;
    if near_zero(theta, tol.abs) {
        return Err(Error::Domain("theta must be nonzero".into()));
    }
    let one = Complex::<T>::one();
    let u = theta * theta;
    let (pa, pb) = (one - (a * a).inv() * re(4.0), one - (b * b).inv() * re(4.0));
    let [na, nb] = names;
    for (v, what) in [(pa, format!("1 - 4/{na}^2")), (pb, format!("1 - 4/{nb}^2")), (pa * pb, format!("(1 - 4/{na}^2)(1 - 4/{nb}^2)"))] {
        if approx_eq(u, v, tol.abs) {
            return Err(Error::ExcludedHypersurface(format!("theta^2 = {what}")));
        }
    }
    let t_sq = (pa * pb - u) * re(4.0) / ((u - pa) * (u - pb));
    let t = t_sq.sqrt();
    Ok((t, -t))
}

/// `±t₃` over `(t₁, t₂, θ)`.
pub fn cover_t3<T: Real>(t1: Complex<T>, t2: Complex<T>, theta: Complex<T>, tol: &Tolerance) -> Result<(Complex<T>, Complex<T>)> {
    cover(t1, t2, theta, ["t1", "t2"], tol)
}

/// `±t₁` over `(t₂, t₃, θ)`, by the symmetry of the quartic.
pub fn cover_t1<T: Real>(t2: Complex<T>, t3: Complex<T>, theta: Complex<T>, tol: &Tolerance) -> Result<(Complex<T>, Complex<T>)> {
    cover(t2, t3, theta, ["t2", "t3"], tol)
}

/// `±t₂` over `(t₁, t₃, θ)`, by the symmetry of the quartic.
pub fn cover_t2<T: Real>(t1: Complex<T>, t3: Complex<T>, theta: Complex<T>, tol: &Tolerance) -> Result<(Complex<T>, Complex<T>)> {
    cover(t1, t3, theta, ["t1", "t3"], tol)
}
