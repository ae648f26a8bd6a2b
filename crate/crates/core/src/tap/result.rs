use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::algebra::{equal_up_to_unit, normalize, Exp, LaurentPoly, UnitMatch};
use crate::scalar::Real;
use crate::tol::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TapMethod {
    Fox,
    Closed,
}

impl fmt::Display for TapMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TapMethod::Fox => "fox",
            TapMethod::Closed => "closed",
        })
    }
}

/// A twisted Alexander polynomial in canonical form; the polynomial as first
/// computed is `scale · s^unit · delta`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct TapResult<T> {
    pub delta: LaurentPoly<T>,
    pub method: TapMethod,
    pub column: Option<usize>,
    pub unit: Exp,
    pub scale: Complex<T>,
}

impl<T: Real> TapResult<T> {
    pub fn from_raw(raw: &LaurentPoly<T>, method: TapMethod, column: Option<usize>, tol: &Tolerance) -> Self {
        let n = normalize(raw, tol);
        Self { delta: n.poly, method, column, unit: n.unit, scale: n.scale }
    }

    /// The polynomial before normalization.
    pub fn raw(&self) -> LaurentPoly<T> {
        self.delta.shift(self.unit).scale(self.scale)
    }

    /// `self ≐ scale · other` on the polynomials as computed.
    pub fn compare(&self, other: &Self, tol: &Tolerance) -> UnitMatch<T> {
        equal_up_to_unit(&self.raw(), &other.raw(), tol)
    }
}

/// Whether a comparison is an equality up to a unit with `|scale| = 1`.
pub fn is_unit_match<T: Real>(m: &UnitMatch<T>, scale_tol: f64) -> bool {
    m.equal && (m.scale.norm() - T::one()).abs() <= T::lit(scale_tol)
}
