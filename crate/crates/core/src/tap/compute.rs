use num_complex::Complex;
use num_traits::Zero;

use super::phi::phi;
use super::result::{TapMethod, TapResult};
use crate::algebra::{lp_divide_exact, LaurentMatrix, LaurentPoly, Mat2, Mat2L};
use crate::charvar::{classify, CharacterTuple, ComponentLabel, Representation};
use crate::error::{Error, Result};
use crate::scalar::{re, Real};
use crate::tol::Tolerance;
use crate::words::{GroupRingElem, Presentation};

/// `det Φ(M_v) / det Φ(1 − x_v)` for any presentation with one relator fewer
/// than generators, before normalization.
pub fn tap_fox_raw<T: Real>(p: &Presentation, images: &[Mat2<T>], v: usize, tol: &Tolerance) -> Result<LaurentPoly<T>> {
    let n = p.generators();
    if images.len() != n {
        return Err(Error::Domain(format!("{} matrices given for {n} generators", images.len())));
    }
    if p.relators().len() + 1 != n {
        return Err(Error::Domain(format!("{} relators for {n} generators; need {}", p.relators().len(), n - 1)));
    }
    let sigma = p.abelianization();
    let mv = p.jacobian().delete_column(v)?;
    let blocks: Vec<Vec<Mat2L<T>>> = mv.iter().map(|row| row.iter().map(|g| phi(g, images, sigma)).collect()).collect();
    let num = LaurentMatrix::from_blocks(&blocks).det();
    let one_minus = &GroupRingElem::one() - &GroupRingElem::from_word(crate::words::FreeWord::gen(v));
    let den = phi(&one_minus, images, sigma).det();
    if den.is_zero() {
        return Err(Error::Degenerate(format!("det Phi(1 - x{v}) vanishes identically")));
    }
    lp_divide_exact(&num, &den, sigma[v - 1] - 1, tol)
}

/// Fox-calculus twisted Alexander polynomial of a representation, from the
/// two-relator presentation with column `v` deleted.
pub fn tap_fox<T: Real>(rep: &Representation<T>, v: usize, tol: &Tolerance) -> Result<TapResult<T>> {
    let raw = tap_fox_raw(&Presentation::borromean(), &rep.matrices(), v, tol)?;
    Ok(TapResult::from_raw(&raw, TapMethod::Fox, Some(v), tol))
}

/// The same, through the six-generator Wirtinger presentation; `v` ranges over 1..=6.
pub fn tap_fox_wirtinger<T: Real>(rep: &Representation<T>, v: usize, tol: &Tolerance) -> Result<TapResult<T>> {
    let raw = tap_fox_raw(&Presentation::borromean_wirtinger(), &wirtinger_images(&rep.matrices()), v, tol)?;
    Ok(TapResult::from_raw(&raw, TapMethod::Fox, Some(v), tol))
}

/// `(x₁, x₂, x₃, x₃⌟x₁, x₁⌟x₂, x₂⌟x₃)`: images of all six Wirtinger generators.
pub fn wirtinger_images<T: Real>(x: &[Mat2<T>; 3]) -> [Mat2<T>; 6] {
    let [a, b, c] = *x;
    [a, b, c, c.conj(&a), a.conj(&b), b.conj(&c)]
}

/// `∏ⱼ (sⱼ + sⱼ⁻¹ − tⱼ) + constant`.
pub fn closed_form_poly<T: Real>(t: [Complex<T>; 3], constant: Complex<T>) -> LaurentPoly<T> {
    let factor = |j: usize| &(&LaurentPoly::var(j) + &LaurentPoly::var_inv(j)) - &LaurentPoly::constant(t[j]);
    let prod = &(&factor(0) * &factor(1)) * &factor(2);
    &prod + &LaurentPoly::constant(constant)
}

/// Constant term added to the product for each component.
pub fn closed_form_constant<T: Real>(c: &CharacterTuple<T>, label: ComponentLabel) -> Result<Complex<T>> {
    match label {
        ComponentLabel::X1Plus(_) | ComponentLabel::X1Minus(_) | ComponentLabel::X2(_) => Ok(Complex::zero()),
        ComponentLabel::X3(_) => Ok(c.t123 * re(4.0) + c.t1 * c.t2 * c.t3),
        ComponentLabel::X4 => {
            let theta = c.theta.ok_or(Error::MissingTheta)?;
            Ok(theta * theta * c.t1 * c.t2 * c.t3)
        }
        ComponentLabel::Custom => Err(Error::LabelMismatch { label: label.to_string() }),
    }
}

/// Closed-form twisted Alexander polynomial on a labelled character.
pub fn tap_closed<T: Real>(c: &CharacterTuple<T>, label: ComponentLabel, tol: &Tolerance) -> Result<TapResult<T>> {
    if label == ComponentLabel::X4 && c.theta.is_none() {
        return Err(Error::MissingTheta);
    }
    let on_component = classify(c, tol).map(|r| r.labels.contains(&label)).unwrap_or(false);
    if !on_component {
        return Err(Error::LabelMismatch { label: label.to_string() });
    }
    let constant = closed_form_constant(c, label)?;
    let raw = closed_form_poly([c.t1, c.t2, c.t3], constant);
    Ok(TapResult::from_raw(&raw, TapMethod::Closed, None, tol))
}

/// `(per-variable spans, total)` of a nonzero polynomial.
pub fn span_degree<T: Real>(p: &LaurentPoly<T>) -> Result<([i32; 3], i32)> {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return Err(Error::ZeroPolynomial);
    };
    let spans = [0, 1, 2].map(|j| hi[j] - lo[j]);
    Ok((spans, spans.iter().sum()))
}
