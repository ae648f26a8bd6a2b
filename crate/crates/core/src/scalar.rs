//! Real scalar abstraction. Everything numeric in this crate is generic over
//! `T: Real` and works with `Complex<T>` entries; `f64` is the working type.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating point type usable as the real part of the coefficient field.
pub trait Real:
    Float
    + NumAssign
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Lossy conversion from `f64`, used for literals and tolerances.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex literal.
pub fn cx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

/// Real literal lifted to the complex field.
pub fn re<T: Real>(x: f64) -> Complex<T> {
    Complex::new(T::lit(x), T::zero())
}

/// The imaginary unit `√−1`.
pub fn imag_unit<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `|a − b| ≤ tol · max(1, |a|, |b|)`: absolute near zero, relative for large values.
pub fn approx_eq<T: Real>(a: Complex<T>, b: Complex<T>, tol: f64) -> bool {
    let scale = T::one().max(a.norm()).max(b.norm());
    (a - b).norm() <= T::lit(tol) * scale
}

/// `|a| ≤ tol`.
pub fn near_zero<T: Real>(a: Complex<T>, tol: f64) -> bool {
    a.norm() <= T::lit(tol)
}
