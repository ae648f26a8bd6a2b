use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::character::CharacterTuple;
use crate::algebra::Mat2;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::words::{relation_implication_check, relation_residuals, RelationImplication};

/// Irreducible component of the character variety a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum ComponentLabel {
    X1Plus(usize),
    X1Minus(usize),
    X2(usize),
    X3(usize),
    X4,
    #[default]
    Custom,
}

impl ComponentLabel {
    /// The thirteen components of the decomposition.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        for i in 1..=3 {
            out.extend([Self::X1Plus(i), Self::X1Minus(i), Self::X2(i), Self::X3(i)]);
        }
        out.push(Self::X4);
        out
    }

    pub fn index(&self) -> Option<usize> {
        match *self {
            Self::X1Plus(i) | Self::X1Minus(i) | Self::X2(i) | Self::X3(i) => Some(i),
            Self::X4 | Self::Custom => None,
        }
    }

    /// Component family without the index: `X1+`, `X1-`, `X2`, `X3`, `X4`.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::X1Plus(_) => "X1+",
            Self::X1Minus(_) => "X1-",
            Self::X2(_) => "X2",
            Self::X3(_) => "X3",
            Self::X4 => "X4",
            Self::Custom => "Custom",
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            Some(i) => write!(f, "{}_{i}", self.kind()),
            None => f.write_str(self.kind()),
        }
    }
}

impl FromStr for ComponentLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown component label '{s}'"));
        match s {
            "X4" => return Ok(Self::X4),
            "Custom" => return Ok(Self::Custom),
            _ => {}
        }
        let (kind, idx) = s.split_once('_').ok_or_else(bad)?;
        let i: usize = idx.parse().map_err(|_| bad())?;
        if !(1..=3).contains(&i) {
            return Err(bad());
        }
        match kind {
            "X1+" => Ok(Self::X1Plus(i)),
            "X1-" => Ok(Self::X1Minus(i)),
            "X2" => Ok(Self::X2(i)),
            "X3" => Ok(Self::X3(i)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for ComponentLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ComponentLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Images `(x₁, x₂, x₃)` of the meridians, with the component they were built
/// for and the parameters used.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct Representation<T> {
    pub x1: Mat2<T>,
    pub x2: Mat2<T>,
    pub x3: Mat2<T>,
    #[serde(default)]
    pub component: ComponentLabel,
    #[serde(default)]
    pub params: BTreeMap<String, Complex<T>>,
}

impl<T: Real> Representation<T> {
    pub fn new(x: [Mat2<T>; 3], component: ComponentLabel) -> Self {
        let [x1, x2, x3] = x;
        Self { x1, x2, x3, component, params: BTreeMap::new() }
    }

    pub fn with_param(mut self, name: &str, value: Complex<T>) -> Self {
        self.params.insert(name.to_owned(), value);
        self
    }

    pub fn matrices(&self) -> [Mat2<T>; 3] {
        [self.x1, self.x2, self.x3]
    }

    /// `xᵢ` for `i` in 1..=3.
    pub fn x(&self, i: usize) -> Mat2<T> {
        self.matrices()[i - 1]
    }

    pub fn theta(&self) -> Option<Complex<T>> {
        self.params.get("theta").copied()
    }

    /// `‖[xᵢ,[xᵢ₊₁,x̄ᵢ₋₁]] − e‖` for `i = 1, 2, 3`.
    pub fn relation_residuals(&self) -> [T; 3] {
        relation_residuals(&self.matrices())
    }

    pub fn relation_implication(&self) -> RelationImplication<T> {
        relation_implication_check(&self.matrices())
    }

    /// `max |det xᵢ − 1|`.
    pub fn unimodularity_residual(&self) -> T {
        self.matrices().iter().map(|x| (x.det() - Complex::new(T::one(), T::zero())).norm()).fold(T::zero(), T::max)
    }

    /// `(g x₁ g⁻¹, g x₂ g⁻¹, g x₃ g⁻¹)`, keeping label and parameters.
    pub fn conjugate_by(&self, g: &Mat2<T>) -> Self {
        let [a, b, c] = self.matrices().map(|x| g.conj(&x));
        Self { x1: a, x2: b, x3: c, component: self.component, params: self.params.clone() }
    }

    /// Character, with `θ` attached when the representation carries one.
    pub fn character(&self) -> CharacterTuple<T> {
        CharacterTuple::from_matrices(&self.matrices()).with_theta(self.theta())
    }
}

/// The seven traces of a representation (and its `θ`, if recorded).
pub fn character_of<T: Real>(rep: &Representation<T>) -> CharacterTuple<T> {
    rep.character()
}
