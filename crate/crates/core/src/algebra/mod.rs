//! Numeric kernel: 2×2 complex matrices, sparse Laurent polynomials in three
//! variables, and 2×2 matrices over the Laurent ring.

pub mod division;
pub mod laurent;
pub mod mat2;
pub mod mat2l;
pub mod normal;

pub use division::lp_divide_exact;
pub use laurent::{lp_mul, Exp, LaurentPoly, NVARS};
pub use mat2::{hamilton_cayley_check, mat_mul, Mat2};
pub use mat2l::{matl_det, LaurentMatrix, Mat2L};
pub use normal::{equal_up_to_unit, normalize, Normalized, UnitMatch};
