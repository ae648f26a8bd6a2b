use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use super::laurent::{Exp, LaurentPoly};
use super::mat2::Mat2;
use crate::scalar::Real;

/// 2×2 matrix over `ℂ[s₁^±1, s₂^±1, s₃^±1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2L<T> {
    pub m: [[LaurentPoly<T>; 2]; 2],
}

impl<T: Real> Mat2L<T> {
    pub fn new(a11: LaurentPoly<T>, a12: LaurentPoly<T>, a21: LaurentPoly<T>, a22: LaurentPoly<T>) -> Self {
        Self { m: [[a11, a12], [a21, a22]] }
    }

    pub fn zero() -> Self {
        Self::new(LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero())
    }

    pub fn identity() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    /// `p · e`.
    pub fn scalar(p: LaurentPoly<T>) -> Self {
        Self::new(p.clone(), LaurentPoly::zero(), LaurentPoly::zero(), p)
    }

    /// Constant matrix.
    pub fn from_mat2(x: &Mat2<T>) -> Self {
        Self::monomial_times(x, [0; 3])
    }

    /// `s^exp · x`.
    pub fn monomial_times(x: &Mat2<T>, exp: Exp) -> Self {
        let e = |z: Complex<T>| LaurentPoly::monomial(exp, z);
        Self::new(e(x.m[0][0]), e(x.m[0][1]), e(x.m[1][0]), e(x.m[1][1]))
    }

    pub fn det(&self) -> LaurentPoly<T> {
        let [[a, b], [c, d]] = &self.m;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> LaurentPoly<T> {
        &self.m[0][0] + &self.m[1][1]
    }

    /// Adjugate `u*`.
    pub fn adj(&self) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Self::new(d.clone(), -b, -c, a.clone())
    }

    pub fn scale(&self, p: &LaurentPoly<T>) -> Self {
        self.map(|x| x * p)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly<T>) -> LaurentPoly<T>) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Self::new(f(a), f(b), f(c), f(d))
    }

    /// Largest coefficient modulus over all entries.
    pub fn max_abs(&self) -> T {
        self.m.iter().flatten().fold(T::zero(), |acc, p| acc.max(p.max_abs()))
    }

    /// Largest coefficient modulus of `self − other`.
    pub fn dist(&self, other: &Self) -> T {
        (self - other).max_abs()
    }

    pub fn eval(&self, s: [Complex<T>; 3]) -> Mat2<T> {
        let [[a, b], [c, d]] = &self.m;
        Mat2::new(a.eval(s), b.eval(s), c.eval(s), d.eval(s))
    }
}

impl<T: Real> Add for &Mat2L<T> {
    type Output = Mat2L<T>;
    fn add(self, rhs: &Mat2L<T>) -> Mat2L<T> {
        let f = |i: usize, j: usize| &self.m[i][j] + &rhs.m[i][j];
        Mat2L::new(f(0, 0), f(0, 1), f(1, 0), f(1, 1))
    }
}

impl<T: Real> Sub for &Mat2L<T> {
    type Output = Mat2L<T>;
    fn sub(self, rhs: &Mat2L<T>) -> Mat2L<T> {
        let f = |i: usize, j: usize| &self.m[i][j] - &rhs.m[i][j];
        Mat2L::new(f(0, 0), f(0, 1), f(1, 0), f(1, 1))
    }
}

impl<T: Real> Mul for &Mat2L<T> {
    type Output = Mat2L<T>;
    fn mul(self, rhs: &Mat2L<T>) -> Mat2L<T> {
        let f = |i: usize, j: usize| &(&self.m[i][0] * &rhs.m[0][j]) + &(&self.m[i][1] * &rhs.m[1][j]);
        Mat2L::new(f(0, 0), f(0, 1), f(1, 0), f(1, 1))
    }
}

impl<T: Real> Neg for &Mat2L<T> {
    type Output = Mat2L<T>;
    fn neg(self) -> Mat2L<T> {
        self.map(|p| -p)
    }
}

/// `a₁₁a₂₂ − a₁₂a₂₁` over the Laurent ring.
pub fn matl_det<T: Real>(m: &Mat2L<T>) -> LaurentPoly<T> {
    m.det()
}

/// Square matrix over the Laurent ring, used for the block determinants of
/// twisted Fox Jacobians.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentMatrix<T> {
    n: usize,
    entries: Vec<LaurentPoly<T>>,
}

impl<T: Real> LaurentMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![LaurentPoly::zero(); n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<T> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly<T>) {
        self.entries[i * self.n + j] = p;
    }

    /// Flattens a `k×k` array of 2×2 blocks into a `2k×2k` matrix.
    pub fn from_blocks(blocks: &[Vec<Mat2L<T>>]) -> Self {
        let k = blocks.len();
        let mut out = Self::zeros(2 * k);
        for (bi, row) in blocks.iter().enumerate() {
            assert_eq!(row.len(), k, "block matrix must be square");
            for (bj, block) in row.iter().enumerate() {
                for i in 0..2 {
                    for j in 0..2 {
                        out.set(2 * bi + i, 2 * bj + j, block.m[i][j].clone());
                    }
                }
            }
        }
        out
    }

    /// Division-free determinant by Laplace expansion over column subsets:
    /// `O(n 2ⁿ)` ring multiplications.
    pub fn det(&self) -> LaurentPoly<T> {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        assert!(n <= 20, "determinant of size {n} is too large");
        // minors[mask] = det of the first popcount(mask) rows restricted to the columns in mask
        let mut minors: Vec<Option<LaurentPoly<T>>> = vec![None; 1 << n];
        minors[0] = Some(LaurentPoly::one());
        for mask in 1usize..(1 << n) {
            let row = mask.count_ones() as usize - 1;
            let mut acc = LaurentPoly::zero();
            let mut sign_pos = row.is_multiple_of(2);
            for col in (0..n).filter(|c| mask & (1 << c) != 0) {
                let entry = self.get(row, col);
                if !entry.is_zero() {
                    if let Some(sub) = &minors[mask & !(1 << col)] {
                        let term = entry * sub;
                        acc = if sign_pos { &acc + &term } else { &acc - &term };
                    }
                }
                sign_pos = !sign_pos;
            }
            if !acc.is_zero() {
                minors[mask] = Some(acc);
            }
        }
        minors[(1 << n) - 1].take().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cx, re};

    type P = LaurentPoly<f64>;
    type ML = Mat2L<f64>;

    fn d(k: f64) -> Mat2<f64> {
        Mat2::from_real(k, 0.0, 0.0, 1.0 / k)
    }

    #[test]
    fn det_of_identity() {
        assert_eq!(ML::identity().det(), P::one());
    }

    #[test]
    fn det_of_e_minus_s_d() {
        // det(e − s₃ d(2)) = s₃² − 2.5 s₃ + 1
        let m = &ML::identity() - &ML::monomial_times(&d(2.0), [0, 0, 1]);
        let expect = P::from_terms([([0, 0, 2], re(1.0)), ([0, 0, 1], re(-2.5)), ([0, 0, 0], re(1.0))]);
        assert!((&m.det() - &expect).max_abs() < 1e-15);
    }

    #[test]
    fn det_scales_quadratically() {
        let x = Mat2::new(cx(1.0, 1.0), cx(2.0, 0.0), cx(0.5, -0.5), cx(0.0, 0.0));
        let x = x.scale(x.det().sqrt().inv());
        let m = ML::monomial_times(&x, [1, 0, 0]);
        assert!((&m.det() - &P::monomial([2, 0, 0], re(1.0))).max_abs() < 1e-14);
    }

    #[test]
    fn adjugate_product_is_det() {
        let a = &ML::monomial_times(&d(3.0), [0, 1, 0]) - &ML::from_mat2(&Mat2::from_real(0.0, 1.0, -1.0, 2.0));
        let lhs = &a * &a.adj();
        assert!(lhs.dist(&ML::scalar(a.det())) < 1e-13);
    }

    #[test]
    fn block_det_matches_2x2_formula() {
        let a = &ML::monomial_times(&d(3.0), [0, 1, 0]) - &ML::identity();
        let big = LaurentMatrix::from_blocks(&[vec![a.clone()]]);
        assert!((&big.det() - &a.det()).max_abs() < 1e-14);
    }

    #[test]
    fn block_triangular_det_factors() {
        let a = &ML::monomial_times(&d(3.0), [0, 1, 0]) - &ML::identity();
        let b = &ML::monomial_times(&Mat2::from_real(1.0, 1.0, 0.0, 1.0), [1, 0, 0]) + &ML::identity();
        let c = ML::from_mat2(&Mat2::from_real(0.3, -2.0, 1.0, 4.0));
        let big = LaurentMatrix::from_blocks(&[vec![a.clone(), c], vec![ML::zero(), b.clone()]]);
        let expect = &a.det() * &b.det();
        assert!((&big.det() - &expect).max_abs() < 1e-12);
    }
}
