use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{blade_product, Blade, Signature};
use crate::error::{Error, Result};

/// Coefficient ring of a multivector.
///
/// Exact rationals (`num_rational::Rational64`) for structural checks,
/// `f64` or `Complex<f64>` where irrational values appear.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// Z2 degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_grade(k: u32) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn degree(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl core::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        Parity::of_grade(u32::from(self.degree() + other.degree()))
    }
}

/// Sparse element of `Cl(p,q)` with no stored zero coefficients.
#[derive(Clone, PartialEq)]
pub struct Multivector<S> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, value: S) -> Self {
        Self::blade(sig, Blade::SCALAR, value)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn blade(sig: Signature, blade: Blade, coeff: S) -> Self {
        let mut mv = Self::zero(sig);
        mv.add_term(blade, coeff);
        mv
    }

    /// Generator `e_i` (1-based).
    pub fn generator(sig: Signature, i: u32) -> Self {
        Self::blade(sig, Blade::generator(i), S::one())
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        let mut mv = Self::zero(sig);
        for (b, c) in terms {
            mv.add_term(b, c);
        }
        mv
    }

    pub fn signature(&self) -> Signature {
        self.sig
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

    pub fn coeff(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn add_term(&mut self, blade: Blade, coeff: S) {
        assert!(blade.is_valid_for(self.sig), "blade {blade} outside {}", self.sig);
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(blade).or_insert_with(S::zero);
        *slot = slot.clone() + coeff;
        if slot.is_zero() {
            self.terms.remove(&blade);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch { left: self.sig, right: other.sig })
        }
    }

    /// Geometric (Clifford) product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.sig);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                let (sign, c) = blade_product(a, b, self.sig);
                let v = ca.clone() * cb.clone();
                out.add_term(c, if sign < 0 { -v } else { v });
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negated())
    }

    pub fn scaled(&self, k: &S) -> Self {
        Self::from_terms(self.sig, self.terms.iter().map(|(b, c)| (*b, c.clone() * k.clone())))
    }

    pub fn negated(&self) -> Self {
        self.map_by_grade(|_| -1)
    }

    /// Part of grade `k`.
    pub fn grade_part(&self, k: u32) -> Self {
        Self::from_terms(self.sig, self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, c.clone())))
    }

    /// Scale every grade-`k` term by `sign(k)` (which must be `+1` or `-1`).
    fn map_by_grade(&self, sign: impl Fn(u32) -> i8) -> Self {
        let terms = self.terms.iter().map(|(b, c)| {
            let c = c.clone();
            (*b, if sign(b.grade()) < 0 { -c } else { c })
        });
        Multivector { sig: self.sig, terms: terms.collect() }
    }

    /// `A*`: grade-`k` part scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_by_grade(grade_involution_sign)
    }

    /// `~A`: grade-`k` part scaled by `(-1)^(k(k-1)/2)`.
    pub fn reversion(&self) -> Self {
        self.map_by_grade(reversion_sign)
    }

    /// `~A*`: grade-`k` part scaled by `(-1)^(k(k+1)/2)`.
    pub fn conjugation(&self) -> Self {
        self.map_by_grade(conjugation_sign)
    }

    /// Z2 degree, or `None` when both even and odd blades are present.
    /// Zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for b in self.terms.keys() {
            let p = Parity::of_grade(b.grade());
            match seen {
                None => seen = Some(p),
                Some(s) if s != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn blades(&self) -> Vec<Blade> {
        self.terms.keys().copied().collect()
    }
}

pub(crate) fn grade_involution_sign(k: u32) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn reversion_sign(k: u32) -> i8 {
    if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn conjugation_sign(k: u32) -> i8 {
    if (k * (k + 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){b}")?;
        }
        Ok(())
    }
}

impl<S: Scalar + fmt::Debug> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multivector").field("sig", &self.sig).field("terms", &self.terms).finish()
    }
}
