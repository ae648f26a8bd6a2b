use num_complex::Complex;

use super::compute::closed_form_poly;
use crate::algebra::{LaurentPoly, Mat2, Mat2L};
use crate::charvar::{CharacterTuple, Representation};
use crate::scalar::{re, Real};
use crate::words::{parse_word, GroupRingElem};

fn tr<T: Real>(x: &[Mat2<T>; 3], word: &str) -> Complex<T> {
    parse_word(word).expect("valid word").eval(x).trace()
}

/// `ξ` as a sum of four traces.
pub fn xi_from_traces<T: Real>(x: &[Mat2<T>; 3]) -> Complex<T> {
    ["x2 x3 X1", "x3 X2 X1", "x3 x1 X3 x2 x3", "x3 x1 X2"].iter().map(|w| tr(x, w)).sum()
}

/// `ξ = (t₃² − 4)t₁₂₃ − t₃t₁₃t₂₃ + 2t₁t₂₃ + 2t₂t₁₃`.
pub fn xi_closed<T: Real>(c: &CharacterTuple<T>) -> Complex<T> {
    let two = re::<T>(2.0);
    (c.t3 * c.t3 - re(4.0)) * c.t123 - c.t3 * c.t13 * c.t23 + two * c.t1 * c.t23 + two * c.t2 * c.t13
}

/// `|ξ_traces − ξ_closed|`.
pub fn xi_cross_check<T: Real>(rep: &Representation<T>) -> T {
    (xi_from_traces(&rep.matrices()) - xi_closed(&rep.character())).norm()
}

/// `(η₁, η₂, η₃)` computed as traces of words.
pub fn eta_traces<T: Real>(x: &[Mat2<T>; 3]) -> [Complex<T>; 3] {
    [
        tr(x, "x2 x3 X2 X1") + tr(x, "x3 x1 [X3,x2]"),
        tr(x, "x3 x1 [X3,x2] X1"),
        tr(x, "x3 x1 X3 x2 x3 X1") + tr(x, "x3 x1 X2 X1"),
    ]
}

/// `(t₁t₃, t₃, t₂t₃)`.
pub fn eta_closed<T: Real>(c: &CharacterTuple<T>) -> [Complex<T>; 3] {
    [c.t1 * c.t3, c.t3, c.t2 * c.t3]
}

/// `u = (s₁e − x₃⌟x₁)(e − s₂x₂)x₃` and `v = (s₁e − x₁)(s₂x₂ − e)`, in `s₁, s₂`.
pub fn reduced_form<T: Real>(x: &[Mat2<T>; 3]) -> (Mat2L<T>, Mat2L<T>) {
    let [x1, x2, x3] = x;
    let e = Mat2L::identity();
    let s1e = Mat2L::scalar(LaurentPoly::var(0));
    let s2x2 = Mat2L::monomial_times(x2, [0, 1, 0]);
    let a = &s1e - &Mat2L::from_mat2(&x3.conj(x1));
    let u = &(&a * &(&e - &s2x2)) * &Mat2L::from_mat2(x3);
    let v = &(&s1e - &Mat2L::from_mat2(x1)) * &(&s2x2 - &e);
    (u, v)
}

/// `det(s₃u + v)`, which equals the twisted Alexander polynomial up to a unit.
pub fn reduced_det<T: Real>(x: &[Mat2<T>; 3]) -> LaurentPoly<T> {
    let (u, v) = reduced_form(x);
    (&u.scale(&LaurentPoly::var(2)) + &v).det()
}

/// `max|det(s₃u+v) − (s₃²det u + det v + s₃ tr(u v*))|`.
pub fn det_identity_residual<T: Real>(x: &[Mat2<T>; 3]) -> T {
    let (u, v) = reduced_form(x);
    let s3 = LaurentPoly::var(2);
    let expansion = &(&(&s3.pow(2) * &u.det()) + &v.det()) + &(&s3 * &(&u * &v.adj()).trace());
    (&reduced_det(x) - &expansion).max_abs()
}

/// `∏(sⱼ + sⱼ⁻¹ − tⱼ) + t₁t₂t₃ − ξ`, with `ξ` from traces.
pub fn tap2_form<T: Real>(rep: &Representation<T>) -> LaurentPoly<T> {
    let x = rep.matrices();
    let t = x.map(|m| m.trace());
    closed_form_poly(t, t[0] * t[1] * t[2] - xi_from_traces(&x))
}

/// Entries of the simplified Jacobian with the third column removed, as
/// written in group-ring form; rows follow the relators, columns `x₁, x₂`.
pub fn m3_paper_entries() -> [[GroupRingElem; 2]; 2] {
    let elem = |terms: &[(i64, &str)]| {
        GroupRingElem::from_terms(terms.iter().map(|&(c, w)| (c, parse_word(w).expect("valid word"))))
    };
    [
        [
            elem(&[(1, "x3 X1"), (-1, "x3 X1 X3"), (-1, "x2 x3 X1"), (1, "x2 x3 X1 X3")]),
            elem(&[(1, "1"), (-1, "[x3,X1]")]),
        ],
        [
            elem(&[(1, "x1 X2 X1"), (-1, "1"), (-1, "x3 x1 X2 X1"), (1, "x3")]),
            elem(&[(1, "x1 X2"), (-1, "x1 X2 X1"), (-1, "x3 x1 X2"), (1, "x3 x1 X2 X1")]),
        ],
    ]
}
