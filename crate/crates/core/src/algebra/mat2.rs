use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{is_finite, Real};

/// A 2×2 complex matrix, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<T> {
    pub m: [[Complex<T>; 2]; 2],
}

impl<T: Real> Mat2<T> {
    pub fn new(a11: Complex<T>, a12: Complex<T>, a21: Complex<T>, a22: Complex<T>) -> Self {
        Self { m: [[a11, a12], [a21, a22]] }
    }

    pub fn from_real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        let r = |x: f64| Complex::new(T::lit(x), T::zero());
        Self::new(r(a11), r(a12), r(a21), r(a22))
    }

    pub fn identity() -> Self {
        Self::scalar(Complex::one())
    }

    pub fn zero() -> Self {
        Self::scalar(Complex::zero())
    }

    /// `c · e`.
    pub fn scalar(c: Complex<T>) -> Self {
        Self::new(c, Complex::zero(), Complex::zero(), c)
    }

    pub fn trace(&self) -> Complex<T> {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> Complex<T> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Adjugate `u*`, satisfying `u u* = det(u) e` and `u + u* = tr(u) e`.
    pub fn adj(&self) -> Self {
        let [[a, b], [c, d]] = self.m;
        Self::new(d, -b, -c, a)
    }

    /// Inverse via the adjugate. Not checked for singularity.
    pub fn inv(&self) -> Self {
        self.adj().scale(self.det().inv())
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        self.map(|z| z * c)
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        let [[a, b], [c, d]] = self.m;
        Self::new(f(a), f(b), f(c), f(d))
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.m;
        Self::new(a, c, b, d)
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> T {
        self.m.iter().flatten().fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    /// `max |a_ij − b_ij|`.
    pub fn dist(&self, other: &Self) -> T {
        (*self - *other).max_norm()
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| is_finite(*z))
    }

    pub fn is_unimodular(&self, tol: f64) -> bool {
        (self.det() - Complex::one()).norm() <= T::lit(tol)
    }

    /// Conjugation `x ⌟ y = x y x⁻¹` with `self = x`.
    pub fn conj(&self, y: &Self) -> Self {
        *self * *y * self.inv()
    }

    /// Group commutator `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        *a * *b * a.inv() * b.inv()
    }

    /// `m² − tr(m)·m + e`, which vanishes identically on SL(2,ℂ).
    pub fn hamilton_cayley_residual(&self) -> T {
        let tr = self.trace();
        (*self * *self - self.scale(tr) + Self::identity()).max_norm()
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self {
        items.into_iter().fold(Self::identity(), |acc, x| acc * *x)
    }
}

impl<T: Real> Index<(usize, usize)> for Mat2<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.m[i][j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for Mat2<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.m[i][j]
    }
}

impl<T: Real> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = rhs.m;
        Self::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl<T: Real> Add for Mat2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][j] + rhs.m[i][j];
            }
        }
        out
    }
}

impl<T: Real> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Real> Neg for Mat2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

/// Serialized row-major as `[a11, a12, a21, a22]`, each entry `[re, im]`.
impl<T: Real> Serialize for Mat2<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let [[a, b], [c, d]] = self.m;
        [a, b, c, d].serialize(serializer)
    }
}

impl<'de, T: Real> Deserialize<'de> for Mat2<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [a, b, c, d] = <[Complex<T>; 4]>::deserialize(deserializer)?;
        Ok(Self::new(a, b, c, d))
    }
}

/// Standard 2×2 product.
pub fn mat_mul<T: Real>(a: &Mat2<T>, b: &Mat2<T>) -> Mat2<T> {
    *a * *b
}

/// Max-entry norm of `m² − tr(m) m + e`.
pub fn hamilton_cayley_check<T: Real>(m: &Mat2<T>) -> T {
    m.hamilton_cayley_residual()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    type M = Mat2<f64>;

    fn w() -> M {
        M::from_real(0.0, 1.0, -1.0, 0.0)
    }

    fn d(k: f64) -> M {
        M::from_real(k, 0.0, 0.0, 1.0 / k)
    }

    #[test]
    fn identity_is_neutral() {
        let m = M::new(cx(1.0, 2.0), cx(0.5, 0.0), cx(-3.0, 1.0), cx(0.0, -1.0));
        assert_eq!(M::identity() * m, m);
        assert_eq!(m * M::identity(), m);
    }

    #[test]
    fn w_squares_to_minus_e() {
        assert_eq!(w() * w(), -M::identity());
    }

    #[test]
    fn diagonal_product() {
        assert!((d(2.0) * d(3.0)).dist(&d(6.0)) < 1e-15);
    }

    #[test]
    fn hamilton_cayley_on_fixed_points() {
        assert_eq!(hamilton_cayley_check(&M::identity()), 0.0);
        assert_eq!(hamilton_cayley_check(&w()), 0.0);
    }

    #[test]
    fn adjugate_identities() {
        let u = M::new(cx(1.0, 2.0), cx(0.5, 0.0), cx(-3.0, 1.0), cx(0.0, -1.0));
        assert!((u * u.adj()).dist(&M::scalar(u.det())) < 1e-14);
        assert!((u + u.adj()).dist(&M::scalar(u.trace())) < 1e-14);
        assert!((u * u.inv()).dist(&M::identity()) < 1e-14);
    }

    #[test]
    fn commutator_of_commuting_pair_is_identity() {
        let g = M::commutator(&d(2.0), &d(5.0));
        assert!(g.dist(&M::identity()) < 1e-15);
    }

    #[test]
    fn works_over_f32() {
        let a = Mat2::<f32>::from_real(2.0, 1.0, 1.0, 1.0);
        assert!(a.hamilton_cayley_residual() < 1e-5);
        assert!((a * a.inv()).dist(&Mat2::identity()) < 1e-5);
    }
}
