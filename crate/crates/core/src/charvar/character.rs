use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Mat2;
use crate::scalar::{re, Real};
use crate::words::{next, prev};

/// Trace coordinates `(t₁, t₂, t₃, t₁₂, t₁₃, t₂₃, t₁₂₃)` of a triple in SL(2,ℂ),
/// with the `θ` coordinate of the canonical component when known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacterTuple<T> {
    pub t1: Complex<T>,
    pub t2: Complex<T>,
    pub t3: Complex<T>,
    pub t12: Complex<T>,
    pub t13: Complex<T>,
    pub t23: Complex<T>,
    pub t123: Complex<T>,
    pub theta: Option<Complex<T>>,
}

impl<T: Real> CharacterTuple<T> {
    pub fn new(t: [Complex<T>; 7]) -> Self {
        let [t1, t2, t3, t12, t13, t23, t123] = t;
        Self { t1, t2, t3, t12, t13, t23, t123, theta: None }
    }

    pub fn with_theta(mut self, theta: Option<Complex<T>>) -> Self {
        self.theta = theta;
        self
    }

    /// Traces of `x₁, x₂, x₃, x₁x₂, x₁x₃, x₂x₃, x₁x₂x₃`.
    pub fn from_matrices(x: &[Mat2<T>; 3]) -> Self {
        let [a, b, c] = *x;
        Self::new([a.trace(), b.trace(), c.trace(), (a * b).trace(), (a * c).trace(), (b * c).trace(), (a * b * c).trace()])
    }

    pub fn to_array(&self) -> [Complex<T>; 7] {
        [self.t1, self.t2, self.t3, self.t12, self.t13, self.t23, self.t123]
    }

    /// `tᵢ` for `i` in 1..=3.
    pub fn t(&self, i: usize) -> Complex<T> {
        match i {
            1 => self.t1,
            2 => self.t2,
            3 => self.t3,
            _ => panic!("generator index {i} outside 1..=3"),
        }
    }

    /// `t_{ij} = t_{ji}` for distinct `i, j` in 1..=3.
    pub fn tij(&self, i: usize, j: usize) -> Complex<T> {
        match (i.min(j), i.max(j)) {
            (1, 2) => self.t12,
            (1, 3) => self.t13,
            (2, 3) => self.t23,
            _ => panic!("invalid pair ({i}, {j})"),
        }
    }

    /// `t_{i,i+1}`, `t_{i,i−1}` and `t_{i−1,i+1}` for cyclic `i`.
    pub fn pairs_around(&self, i: usize) -> (Complex<T>, Complex<T>, Complex<T>) {
        (self.tij(i, next(i)), self.tij(i, prev(i)), self.tij(prev(i), next(i)))
    }

    pub fn nu0(&self) -> Complex<T> {
        let [t1, t2, t3, t12, t13, t23, _] = self.to_array();
        t1 * t1 + t2 * t2 + t3 * t3 + t12 * t12 + t13 * t13 + t23 * t23
            - t1 * t2 * t12
            - t1 * t3 * t13
            - t2 * t3 * t23
            + t12 * t13 * t23
            - re(4.0)
    }

    pub fn nu1(&self) -> Complex<T> {
        self.t1 * self.t23 + self.t2 * self.t13 + self.t3 * self.t12 - self.t1 * self.t2 * self.t3
    }

    /// `t₁₂₃² − ν₁t₁₂₃ + ν₀`, zero for the traces of every triple in SL(2,ℂ).
    pub fn f3_residual(&self) -> Complex<T> {
        self.t123 * self.t123 - self.nu1() * self.t123 + self.nu0()
    }

    /// `f_{i,j} = tᵢ² + tⱼ² + t_{ij}² − tᵢtⱼt_{ij} − 2 = tr[xᵢ, xⱼ]`.
    pub fn f(&self, i: usize, j: usize) -> Complex<T> {
        f_ij(self, i, j)
    }

    pub fn map<U: Real>(&self, f: impl Fn(Complex<T>) -> Complex<U>) -> CharacterTuple<U> {
        CharacterTuple::new(self.to_array().map(&f)).with_theta(self.theta.map(&f))
    }

    /// Largest entrywise distance, ignoring `θ`.
    pub fn dist(&self, other: &Self) -> T {
        self.to_array().iter().zip(other.to_array()).map(|(a, b)| (a - b).norm()).fold(T::zero(), T::max)
    }
}

/// `f_{i,j}` of a character.
pub fn f_ij<T: Real>(c: &CharacterTuple<T>, i: usize, j: usize) -> Complex<T> {
    assert_ne!(i, j, "f_ij needs distinct indices");
    let (ti, tj, tij) = (c.t(i), c.t(j), c.tij(i, j));
    ti * ti + tj * tj + tij * tij - ti * tj * tij - re(2.0)
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr<T> {
    t: [Complex<T>; 7],
    theta: Option<Complex<T>>,
}

impl<T: Real> Serialize for CharacterTuple<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CharacterRepr { t: self.to_array(), theta: self.theta }.serialize(serializer)
    }
}

impl<'de, T: Real> Deserialize<'de> for CharacterTuple<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = CharacterRepr::<T>::deserialize(deserializer)?;
        Ok(Self::new(r.t).with_theta(r.theta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::matrices::{mk_d, mk_w};
    use crate::scalar::cx;

    fn x2_sample() -> [Mat2<f64>; 3] {
        [mk_w(), mk_d(re(2.0)).unwrap(), mk_d(re(3.0)).unwrap()]
    }

    #[test]
    fn x2_character() {
        let c = CharacterTuple::from_matrices(&x2_sample());
        let expect = [0.0, 2.5, 10.0 / 3.0, 0.0, 0.0, 37.0 / 6.0, 0.0].map(re::<f64>);
        assert!(c.dist(&CharacterTuple::new(expect)) < 1e-14);
        assert!((c.f(2, 3) - re(2.0)).norm() < 1e-12);
        assert!(c.f3_residual().norm() < 1e-12);
    }

    #[test]
    fn f_matches_commutator_trace() {
        let a: Mat2<f64> = Mat2::new(cx(1.0, 0.5), cx(0.3, 0.0), cx(-0.2, 1.0), cx(0.0, 0.0));
        let a = a.scale(a.det().sqrt().inv());
        let b: Mat2<f64> = Mat2::new(cx(0.4, -0.1), cx(2.0, 0.3), cx(0.1, 0.1), cx(1.0, 1.0));
        let b = b.scale(b.det().sqrt().inv());
        let c = CharacterTuple::from_matrices(&[a, b, Mat2::identity()]);
        assert!((c.f(1, 2) - Mat2::commutator(&a, &b).trace()).norm() < 1e-12);
        assert_eq!(c.f(1, 2), c.f(2, 1));
    }

    #[test]
    fn json_shape() {
        let c = CharacterTuple::from_matrices(&x2_sample()).with_theta(Some(cx(0.0, 1.0)));
        let v = serde_json::to_value(c).unwrap();
        assert_eq!(v["t"].as_array().unwrap().len(), 7);
        assert_eq!(v["theta"], serde_json::json!([0.0, 1.0]));
        let back: CharacterTuple<f64> = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
        let none: CharacterTuple<f64> = serde_json::from_str(r#"{"t":[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]],"theta":null}"#).unwrap();
        assert_eq!(none.theta, None);
    }
}
