use serde::{Deserialize, Serialize};

use super::word::FreeWord;
use crate::algebra::Mat2;
use crate::scalar::Real;

/// `[x_i, [x_{i+1}, x̄_{i−1}]]` with indices mod 3 (`i` in 1..=3).
pub fn borromean_relator(i: usize) -> FreeWord {
    let (a, b, c) = (i, super::next(i), super::prev(i));
    FreeWord::commutator(&FreeWord::gen(a), &FreeWord::commutator(&FreeWord::gen(b), &FreeWord::gen_inv(c)))
}

/// `max|ρ(r_i) − e|` for the three cyclic relators `i = 1, 2, 3`.
pub fn relation_residuals<T: Real>(x: &[Mat2<T>; 3]) -> [T; 3] {
    [1, 2, 3].map(|i| borromean_relator(i).eval(x).dist(&Mat2::identity()))
}

/// Residuals of the two relators of the standard presentation and of the third
/// relator they imply.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelationImplication<T> {
    /// `[x₂,[x₃,x̄₁]]` and `[x₃,[x₁,x̄₂]]`.
    pub premises: [T; 2],
    /// `[x₁,[x₂,x̄₃]]`.
    pub conclusion: T,
}

impl<T: Real> RelationImplication<T> {
    pub fn premises_hold(&self, tol: f64) -> bool {
        self.premises.iter().all(|r| *r <= T::lit(tol))
    }
}

/// Checks that the omitted relator is satisfied whenever the two given ones are.
pub fn relation_implication_check<T: Real>(x: &[Mat2<T>; 3]) -> RelationImplication<T> {
    let [r1, r2, r3] = relation_residuals(x);
    RelationImplication { premises: [r2, r3], conclusion: r1 }
}
