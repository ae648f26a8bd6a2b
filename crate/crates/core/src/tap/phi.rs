use crate::algebra::{Exp, Mat2, Mat2L, NVARS};
use crate::scalar::{re, Real};
use crate::words::{FreeWord, GroupRingElem};

/// `s`-exponent of a word under `x_j ↦ s_{σ(j)}`.
pub fn abelianize(w: &FreeWord, sigma: &[usize]) -> Exp {
    let mut exp = [0; NVARS];
    for l in w.letters() {
        exp[sigma[l.gen - 1] - 1] += l.exponent();
    }
    exp
}

/// `Φ(w) = s^{𝔞(w)} ρ(w)`.
pub fn phi_word<T: Real>(w: &FreeWord, images: &[Mat2<T>], sigma: &[usize]) -> Mat2L<T> {
    Mat2L::monomial_times(&w.eval(images), abelianize(w, sigma))
}

/// `Φ` extended linearly to `ℤ[F]`.
pub fn phi<T: Real>(g: &GroupRingElem, images: &[Mat2<T>], sigma: &[usize]) -> Mat2L<T> {
    g.terms().fold(Mat2L::zero(), |acc, (w, c)| {
        let term = phi_word(w, images, sigma);
        &acc + &term.map(|p| p.scale(re(c as f64)))
    })
}
