use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Real;
use crate::tol::Tolerance;

/// Number of Laurent variables `s₁, s₂, s₃`, one per link component.
pub const NVARS: usize = 3;

/// Exponent vector `(k₁, k₂, k₃)` of a monomial `s₁^k₁ s₂^k₂ s₃^k₃`.
pub type Exp = [i32; NVARS];

/// Sparse Laurent polynomial in `s₁, s₂, s₃` with complex coefficients.
///
/// Coefficients whose modulus falls below `prune × reference` are dropped after
/// every arithmetic operation, where `reference` is the natural scale of the
/// operands (max coefficient for sums, product of max coefficients for
/// products). The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<Exp, Complex<T>>,
}

impl<T: Real> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex::one())
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(exp: Exp, c: Complex<T>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable `s_{var+1}` (`var` is zero-based).
    pub fn var(var: usize) -> Self {
        Self::monomial(unit_exp(var, 1), Complex::one())
    }

    /// `s_{var+1}^{-1}`.
    pub fn var_inv(var: usize) -> Self {
        Self::monomial(unit_exp(var, -1), Complex::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(items: impl IntoIterator<Item = (Exp, Complex<T>)>) -> Self {
        let mut terms = BTreeMap::new();
        let mut reference = T::zero();
        for (e, c) in items {
            reference = reference.max(c.norm());
            *terms.entry(e).or_insert_with(Complex::zero) += c;
        }
        Self::finish(terms, reference, Tolerance::DEFAULT_PRUNE)
    }

    fn finish(mut terms: BTreeMap<Exp, Complex<T>>, reference: T, prune: f64) -> Self {
        let max = terms.values().fold(T::zero(), |acc, c| acc.max(c.norm()));
        let cutoff = T::lit(prune) * reference.max(max);
        terms.retain(|_, c| !c.is_zero() && c.norm() >= cutoff);
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Complex<T>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exp) -> Complex<T> {
        self.terms.get(exp).copied().unwrap_or_else(Complex::zero)
    }

    /// Largest coefficient modulus (0 for the zero polynomial).
    pub fn max_abs(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc.max(c.norm()))
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        let reference = self.max_abs() * c.norm();
        let terms = self.terms.iter().map(|(e, v)| (*e, *v * c)).collect();
        Self::finish(terms, reference, Tolerance::DEFAULT_PRUNE)
    }

    /// Multiplication by the monomial `s^shift`.
    pub fn shift(&self, shift: Exp) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (add_exp(e, &shift), *c)).collect();
        Self { terms }
    }

    /// Drops coefficients below `rel × max_abs`.
    pub fn pruned(&self, rel: f64) -> Self {
        Self::finish(self.terms.clone(), self.max_abs(), rel)
    }

    /// Drops coefficients with modulus at most `abs`.
    pub fn chop(&self, abs: f64) -> Self {
        let cutoff = T::lit(abs);
        let terms = self.terms.iter().filter(|(_, c)| c.norm() > cutoff).map(|(e, c)| (*e, *c)).collect();
        Self { terms }
    }

    /// Per-variable minimum exponent; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<Exp> {
        self.fold_exp(i32::min)
    }

    /// Per-variable maximum exponent; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<Exp> {
        self.fold_exp(i32::max)
    }

    fn fold_exp(&self, f: impl Fn(i32, i32) -> i32) -> Option<Exp> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, e| std::array::from_fn(|j| f(acc[j], e[j]))))
    }

    /// Evaluates at a point of `(ℂ*)³`.
    pub fn eval(&self, s: [Complex<T>; NVARS]) -> Complex<T> {
        self.terms
            .iter()
            .map(|(e, c)| (0..NVARS).fold(*c, |acc, j| acc * s[j].powi(e[j])))
            .fold(Complex::zero(), |acc, x| acc + x)
    }

    /// Splits by the exponent of `var`: `p = Σ_k s_var^k · c_k` where no `c_k`
    /// involves `s_var`.
    pub fn split_by_var(&self, var: usize) -> BTreeMap<i32, LaurentPoly<T>> {
        let mut out: BTreeMap<i32, BTreeMap<Exp, Complex<T>>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[var] = 0;
            out.entry(e[var]).or_default().insert(rest, *c);
        }
        out.into_iter().map(|(k, terms)| (k, LaurentPoly { terms })).collect()
    }

    /// Inverse of [`split_by_var`](Self::split_by_var).
    pub fn join_by_var(parts: &BTreeMap<i32, LaurentPoly<T>>, var: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (k, p) in parts {
            for (e, c) in &p.terms {
                let mut e = *e;
                e[var] += *k;
                terms.insert(e, *c);
            }
        }
        Self { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_monomial(&self) -> Option<(Exp, Complex<T>)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, *c))
        } else {
            None
        }
    }
}

pub(crate) fn unit_exp(var: usize, k: i32) -> Exp {
    assert!(var < NVARS, "variable index {var} out of range");
    let mut e = [0; NVARS];
    e[var] = k;
    e
}

pub(crate) fn add_exp(a: &Exp, b: &Exp) -> Exp {
    std::array::from_fn(|j| a[j] + b[j])
}

pub(crate) fn sub_exp(a: &Exp, b: &Exp) -> Exp {
    std::array::from_fn(|j| a[j] - b[j])
}

impl<T: Real> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let reference = self.max_abs().max(rhs.max_abs());
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(*e).or_insert_with(Complex::zero) += *c;
        }
        LaurentPoly::finish(terms, reference, Tolerance::DEFAULT_PRUNE)
    }
}

impl<T: Real> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let reference = self.max_abs().max(rhs.max_abs());
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(*e).or_insert_with(Complex::zero) -= *c;
        }
        LaurentPoly::finish(terms, reference, Tolerance::DEFAULT_PRUNE)
    }
}

impl<T: Real> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let reference = self.max_abs() * rhs.max_abs();
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *terms.entry(add_exp(a, b)).or_insert_with(Complex::zero) += *x * *y;
            }
        }
        LaurentPoly::finish(terms, reference, Tolerance::DEFAULT_PRUNE)
    }
}

impl<T: Real> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -*c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<T: Real> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $f(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$f(&rhs)
            }
        }
        impl<T: Real> $tr<&LaurentPoly<T>> for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $f(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$f(rhs)
            }
        }
        impl<T: Real> $tr<LaurentPoly<T>> for &LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $f(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Real> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

/// Product of two Laurent polynomials.
pub fn lp_mul<T: Real>(p: &LaurentPoly<T>, q: &LaurentPoly<T>) -> LaurentPoly<T> {
    p * q
}

impl<T: Real> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if c.im.is_zero() {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({} + {}i)", c.re, c.im)?;
            }
            for (j, k) in e.iter().enumerate() {
                match *k {
                    0 => {}
                    1 => write!(f, "*s{}", j + 1)?,
                    k => write!(f, "*s{}^{}", j + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<T> {
    exp: Exp,
    coef: Complex<T>,
}

impl<T: Real> Serialize for LaurentPoly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let list: Vec<TermRepr<T>> = self.terms.iter().map(|(e, c)| TermRepr { exp: *e, coef: *c }).collect();
        list.serialize(serializer)
    }
}

impl<'de, T: Real> Deserialize<'de> for LaurentPoly<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let list: Vec<TermRepr<T>> = Vec::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in list {
            *terms.entry(t.exp).or_insert_with(Complex::zero) += t.coef;
        }
        terms.retain(|_, c: &mut Complex<T>| !c.is_zero());
        Ok(Self { terms })
    }
}
