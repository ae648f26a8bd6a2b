use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::FreeWord;

/// Element of the integral group ring `ℤ[F]`: a finite ℤ-combination of
/// reduced words. Like words are merged and zero coefficients dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElem {
    terms: BTreeMap<FreeWord, i64>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::empty())
    }

    pub fn from_word(w: FreeWord) -> Self {
        Self::term(1, w)
    }

    pub fn term(coef: i64, w: FreeWord) -> Self {
        let mut out = Self::zero();
        out.add_term(coef, w);
        out
    }

    pub fn from_terms(items: impl IntoIterator<Item = (i64, FreeWord)>) -> Self {
        let mut out = Self::zero();
        for (c, w) in items {
            out.add_term(c, w);
        }
        out
    }

    pub fn add_term(&mut self, coef: i64, w: FreeWord) {
        let entry = self.terms.entry(w).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Augmentation `ε(Σ cᵢ wᵢ) = Σ cᵢ`.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Left multiplication by a word.
    pub fn left_mul(&self, w: &FreeWord) -> Self {
        Self::from_terms(self.terms.iter().map(|(u, c)| (*c, w * u)))
    }
}

impl Add for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*c, w.clone());
        }
        out
    }
}

impl Sub for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: &GroupRingElem) -> GroupRingElem {
        self + &(-rhs)
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        GroupRingElem { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut out = GroupRingElem::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(a * b, u * v);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for GroupRingElem {
            type Output = GroupRingElem;
            fn $f(self, rhs: GroupRingElem) -> GroupRingElem {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<FreeWord> for GroupRingElem {
    fn from(w: FreeWord) -> Self {
        Self::from_word(w)
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if n > 0 || *c < 0 {
                write!(f, "{}{}", if n > 0 { " " } else { "" }, sign)?;
                if n > 0 {
                    write!(f, " ")?;
                }
            }
            match c.abs() {
                1 => write!(f, "{w}")?,
                k => write!(f, "{k}·{w}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(j: usize) -> GroupRingElem {
        FreeWord::gen(j).into()
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let a = &x(1) + &x(1);
        assert_eq!(a.terms().next().map(|(_, c)| c), Some(2));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_reduces_words() {
        let inv = GroupRingElem::from_word(FreeWord::gen_inv(1));
        assert_eq!(&x(1) * &inv, GroupRingElem::one());
        // (1 - x1)(1 + x1) = 1 - x1^2
        let p = &(&GroupRingElem::one() - &x(1)) * &(&GroupRingElem::one() + &x(1));
        assert_eq!(p.len(), 2);
        assert_eq!(p.augmentation(), 0);
    }

    #[test]
    fn display() {
        let e = &GroupRingElem::one() - &x(2);
        assert_eq!(e.to_string(), "1 - x2");
        assert_eq!((-&x(1)).to_string(), "-x1");
    }
}
