//! Irreducible SL(2,ℂ) characters of the Borromean link group and the twisted
//! Alexander polynomial as a function on them.
//!
//! The numeric core is generic over the real scalar (`f32`/`f64`) through
//! [`Real`]; the aliases below fix it to `f64`, which is what every tolerance in
//! this crate is calibrated for.

pub mod algebra;
pub mod charvar;
pub mod error;
pub mod scalar;
pub mod tap;
pub mod tol;
pub mod words;

pub use error::{Error, Result};
pub use scalar::Real;
pub use tol::Tolerance;

pub type Complex64 = num_complex::Complex<f64>;
pub type Mat2C = algebra::Mat2<f64>;
pub type LaurentPoly3 = algebra::LaurentPoly<f64>;
pub type Mat2L = algebra::Mat2L<f64>;
pub type Representation64 = charvar::Representation<f64>;
pub type CharacterTuple64 = charvar::CharacterTuple<f64>;
pub type TapResult64 = tap::TapResult<f64>;
