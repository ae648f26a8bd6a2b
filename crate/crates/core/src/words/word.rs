use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::algebra::Mat2;
use crate::error::Error;
use crate::scalar::Real;

/// A generator `x_gen` (1-based) or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        assert!(gen >= 1, "generators are numbered from 1");
        Self { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Self { gen: self.gen, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Freely reduced word in the free group on `x₁, x₂, …`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn gen(j: usize) -> Self {
        Self { letters: vec![Letter::new(j, false)] }
    }

    pub fn gen_inv(j: usize) -> Self {
        Self { letters: vec![Letter::new(j, true)] }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends a letter, cancelling against the last one when they are inverse.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// `u v ū v̄`.
    pub fn commutator(u: &Self, v: &Self) -> Self {
        u * v * u.inverse() * v.inverse()
    }

    /// `u ⌟ v = u v ū`.
    pub fn conj(u: &Self, v: &Self) -> Self {
        u * v * u.inverse()
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::empty(), |acc, _| &acc * &base)
    }

    /// Highest generator index used (0 for the empty word).
    pub fn max_gen(&self) -> usize {
        self.letters.iter().map(|l| l.gen).max().unwrap_or(0)
    }

    /// Image under `x_j ↦ images[j-1]`.
    pub fn eval<T: Real>(&self, images: &[Mat2<T>]) -> Mat2<T> {
        let inverses: Vec<Mat2<T>> = images.iter().map(|m| m.inv()).collect();
        self.letters.iter().fold(Mat2::identity(), |acc, l| {
            let m = if l.inverse { &inverses[l.gen - 1] } else { &images[l.gen - 1] };
            acc * *m
        })
    }

    /// Exponent sum of every generator, indexed `0..n`.
    pub fn exponent_sums(&self, n: usize) -> Vec<i32> {
        let mut out = vec![0; n];
        for l in &self.letters {
            out[l.gen - 1] += l.exponent();
        }
        out
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for l in &rhs.letters {
            out.push(*l);
        }
        out
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: FreeWord) -> FreeWord {
        &self * &rhs
    }
}

impl Mul<&FreeWord> for FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        &self * rhs
    }
}

impl Mul<FreeWord> for &FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: FreeWord) -> FreeWord {
        self * &rhs
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", if l.inverse { 'X' } else { 'x' }, l.gen)?;
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_word(s)
    }
}
