//! Tensor factorizations into two-generator blocks and periodicity reductions.

use alloc::vec::Vec;
use core::fmt;

use crate::classify::{classify, classify_complex, AlgebraClass, MatrixAlgebra, RingType};
use crate::error::{Error, Result};
use crate::ga::{omega_square, Signature};

pub const CL11: Signature = Signature::const_new(1, 1);
pub const CL20: Signature = Signature::const_new(2, 0);
pub const CL02: Signature = Signature::const_new(0, 2);

/// Sign flip `Q → −Q` applied to the remaining form after peeling a negative
/// factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignFlip {
    /// Index of the peel step (in peeling order).
    pub step: usize,
    pub before: Signature,
    pub after: Signature,
}

/// One peel: the block taken off and whether it forced a flip of the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Peel {
    pub factor: Signature,
    pub flips_rest: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sig: Signature,
    /// Two-generator blocks, each one of `Cl(1,1)`, `Cl(2,0)`, `Cl(0,2)`.
    pub factors: Vec<Signature>,
    /// Odd `n` with center `R ⊕ R`: a union of two identical products.
    pub doubled: bool,
    /// Odd `n` with center `C`: the product tensored with `C`.
    pub complexified: bool,
    pub residual_sign_flips: Vec<SignFlip>,
}

impl Factorization {
    pub fn generator_count(&self) -> u32 {
        self.factors.iter().map(|f| f.n()).sum()
    }

    /// Class of the product of the factors (ungraded), including the
    /// doubling or complexification for odd `n`.
    pub fn composed_class(&self) -> Option<MatrixAlgebra> {
        let mut acc = MatrixAlgebra::SCALARS;
        for f in &self.factors {
            acc = acc.tensor(&classify(*f).algebra())?;
        }
        if self.doubled {
            acc = acc.doubled()?;
        }
        if self.complexified {
            acc = acc.tensor(&MatrixAlgebra { ring: RingType::C, size: 1 })?;
        }
        Some(acc)
    }

    /// Whether the product of the factors reproduces `classify(sig)`.
    pub fn verify(&self) -> bool {
        self.composed_class() == Some(classify(self.sig).algebra())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let product = |f: &mut fmt::Formatter<'_>| {
            if self.factors.is_empty() {
                return f.write_str("R");
            }
            for (i, s) in self.factors.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ⊗ ")?;
                }
                write!(f, "{s}")?;
            }
            Ok(())
        };
        write!(f, "{} ≅ ", self.sig)?;
        if self.doubled {
            f.write_str("(")?;
            product(f)?;
            f.write_str(") ∪ (")?;
            product(f)?;
            f.write_str(")")
        } else if self.complexified {
            product(f)?;
            f.write_str(" ⊗ C")
        } else {
            product(f)
        }
    }
}

fn is_positive(block: Signature) -> bool {
    omega_square(block) == 1
}

/// Peels two-generator blocks off an even signature, in peeling order.
pub(crate) fn peel(sig: Signature) -> Vec<Peel> {
    let (mut p, mut q) = (sig.p(), sig.q());
    let mut out = Vec::new();
    while p + q > 0 {
        let factor = if p >= 1 && q >= 1 {
            (p, q) = (p - 1, q - 1);
            CL11
        } else if p >= 2 {
            p -= 2;
            CL20
        } else {
            q -= 2;
            CL02
        };
        let flips_rest = !is_positive(factor);
        if flips_rest {
            (p, q) = (q, p);
        }
        out.push(Peel { factor, flips_rest });
    }
    out
}

/// Orders peeled blocks for presentation: the first half in peeling order,
/// the second half reversed.
fn mirror<T: Copy>(items: &[T]) -> Vec<T> {
    let half = items.len().div_ceil(2);
    items[..half].iter().chain(items[half..].iter().rev()).copied().collect()
}

pub fn karoubi_factorize(sig: Signature) -> Result<Factorization> {
    if sig.n() % 2 == 1 {
        return Err(Error::UnsupportedParity { n: sig.n() });
    }
    let peels = peel(sig);
    let mut flips = Vec::new();
    let (mut p, mut q) = (sig.p(), sig.q());
    for (step, pl) in peels.iter().enumerate() {
        let (rp, rq) = (p - pl.factor.p(), q - pl.factor.q());
        (p, q) = (rp, rq);
        if pl.flips_rest {
            (p, q) = (q, p);
        }
        if pl.flips_rest && p + q > 0 {
            flips.push(SignFlip { step, before: Signature::const_new(rp, rq), after: Signature::const_new(p, q) });
        }
    }
    let factors: Vec<Signature> = peels.iter().map(|pl| pl.factor).collect();
    Ok(Factorization { sig, factors: mirror(&factors), doubled: false, complexified: false, residual_sign_flips: flips })
}

/// Signature left after dropping the last generator (a negative one when
/// `q ≥ 1`).
pub fn truncate_last(sig: Signature) -> Result<Signature> {
    if sig.q() >= 1 {
        Signature::new(sig.p(), sig.q() - 1)
    } else if sig.p() >= 1 {
        Signature::new(sig.p() - 1, 0)
    } else {
        Err(Error::EmptySignature)
    }
}

/// Factorization of an odd-dimensional algebra through the even algebra on
/// all but the last generator: the center `span{1, ω}` is `R ⊕ R` for
/// `p − q ≡ 1, 5` and `C` for `p − q ≡ 3, 7 (mod 8)`.
pub fn factorize_odd(sig: Signature) -> Result<Factorization> {
    if sig.n().is_multiple_of(2) {
        return Err(Error::ExpectedOdd { n: sig.n() });
    }
    let base = karoubi_factorize(truncate_last(sig)?)?;
    let doubled = matches!(sig.type_label(), 1 | 5);
    Ok(Factorization { sig, factors: base.factors, doubled, complexified: !doubled, residual_sign_flips: base.residual_sign_flips })
}

/// Either factorization, by parity of `n`.
pub fn factorize(sig: Signature) -> Result<Factorization> {
    if sig.n().is_multiple_of(2) {
        karoubi_factorize(sig)
    } else {
        factorize_odd(sig)
    }
}

/// `m` with `C_n ≅ C_2 ⊗ ... ⊗ C_2` (`m` factors).
pub fn complex_factorize(n: u32) -> Result<u32> {
    if n % 2 == 1 {
        return Err(Error::OddComplexDimension { n });
    }
    let m = n / 2;
    debug_assert_eq!(classify_complex(n).matrix_size, 1u64 << m);
    Ok(m)
}

/// Result of stripping `Cl(8,0)` and `Cl(0,8)` factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodicityReduction {
    pub base: Signature,
    pub octaves: u32,
}

/// Strips factors of `Cl(8,0)` from `p` and `Cl(0,8)` from `q` until both
/// are below 8.
pub fn periodicity_reduce(sig: Signature) -> PeriodicityReduction {
    PeriodicityReduction { base: Signature::const_new(sig.p() % 8, sig.q() % 8), octaves: sig.p() / 8 + sig.q() / 8 }
}

impl PeriodicityReduction {
    /// Class of the original signature rebuilt from the base: each octave
    /// multiplies the matrix size by 16.
    pub fn lifted_class(&self) -> AlgebraClass {
        let mut c = classify(self.base);
        c.matrix_size <<= 4 * self.octaves;
        c.generators += 8 * self.octaves;
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn quoted_factor_lists() {
        assert_eq!(karoubi_factorize(sig(1, 3)).unwrap().factors, [CL11, CL02]);
        assert_eq!(karoubi_factorize(sig(3, 1)).unwrap().factors, [CL11, CL20]);
        assert_eq!(karoubi_factorize(sig(8, 0)).unwrap().factors, [CL20, CL02, CL02, CL20]);
    }

    #[test]
    fn flips_are_logged() {
        let f = karoubi_factorize(sig(8, 0)).unwrap();
        assert_eq!(f.residual_sign_flips.len(), 3);
        assert_eq!(f.residual_sign_flips[0].before, sig(6, 0));
        assert_eq!(f.residual_sign_flips[0].after, sig(0, 6));
        assert!(karoubi_factorize(sig(2, 2)).unwrap().residual_sign_flips.is_empty());
    }

    #[test]
    fn empty_and_odd() {
        let f = karoubi_factorize(sig(0, 0)).unwrap();
        assert!(f.factors.is_empty());
        assert!(f.verify());
        assert_eq!(karoubi_factorize(sig(1, 0)), Err(Error::UnsupportedParity { n: 1 }));
        assert_eq!(factorize_odd(sig(1, 1)), Err(Error::ExpectedOdd { n: 2 }));
    }

    #[test]
    fn odd_examples() {
        let f = factorize_odd(sig(1, 0)).unwrap();
        assert!(f.doubled && f.factors.is_empty());
        assert_eq!(f.composed_class(), Some(MatrixAlgebra { ring: RingType::DoubleR, size: 1 }));

        let f = factorize_odd(sig(3, 0)).unwrap();
        assert_eq!(f.factors, [CL20]);
        assert!(f.complexified);
        assert_eq!(f.composed_class(), Some(MatrixAlgebra { ring: RingType::C, size: 2 }));

        let f = factorize_odd(sig(1, 4)).unwrap();
        assert!(f.doubled);
        assert_eq!(f.composed_class(), Some(MatrixAlgebra { ring: RingType::DoubleH, size: 2 }));
    }

    #[test]
    fn every_small_factorization_verifies() {
        for s in Signature::all_up_to(12) {
            let f = factorize(s).unwrap();
            assert!(f.verify(), "{s}: {f}");
            assert_eq!(f.generator_count() + s.n() % 2, s.n());
        }
    }

    #[test]
    fn complex_counts() {
        assert_eq!(complex_factorize(4), Ok(2));
        assert_eq!(complex_factorize(0), Ok(0));
        assert_eq!(complex_factorize(8), Ok(4));
        assert!(complex_factorize(3).is_err());
    }

    #[test]
    fn periodicity_examples() {
        assert_eq!(periodicity_reduce(sig(9, 0)), PeriodicityReduction { base: sig(1, 0), octaves: 1 });
        assert_eq!(periodicity_reduce(sig(1, 9)), PeriodicityReduction { base: sig(1, 1), octaves: 1 });
        assert_eq!(periodicity_reduce(sig(2, 2)), PeriodicityReduction { base: sig(2, 2), octaves: 0 });
        for s in Signature::all_up_to(16) {
            let r = periodicity_reduce(s);
            assert!(r.base.p() < 8 && r.base.q() < 8);
            assert_eq!(r.lifted_class(), classify(s), "{s}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(karoubi_factorize(sig(1, 3)).unwrap().to_string(), "Cl(1,3) ≅ Cl(1,1) ⊗ Cl(0,2)");
        assert_eq!(factorize_odd(sig(1, 0)).unwrap().to_string(), "Cl(1,0) ≅ (R) ∪ (R)");
    }
}
