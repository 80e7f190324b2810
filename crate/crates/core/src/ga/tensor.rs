//! Graded tensor products `Cl(V,Q) ⊗̂ Cl(V',Q')` and their identification with
//! `Cl(V ⊕ V', Q ⊕ Q')`.

use alloc::collections::BTreeMap;

use super::{blade_product, Blade, Multivector, Scalar, Signature};
use crate::error::{Error, Result};

/// Element of a graded tensor product, as a sparse sum of `a ⊗ b`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElement<S> {
    left: Signature,
    right: Signature,
    terms: BTreeMap<(Blade, Blade), S>,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero(left: Signature, right: Signature) -> Self {
        TensorElement { left, right, terms: BTreeMap::new() }
    }

    pub fn pure(left: Signature, right: Signature, a: Blade, b: Blade, coeff: S) -> Self {
        let mut t = Self::zero(left, right);
        t.add_term(a, b, coeff);
        t
    }

    pub fn one(left: Signature, right: Signature) -> Self {
        Self::pure(left, right, Blade::SCALAR, Blade::SCALAR, S::one())
    }

    pub fn add_term(&mut self, a: Blade, b: Blade, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(S::zero);
        *slot = slot.clone() + coeff;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, Blade, &S)> {
        self.terms.iter().map(|((a, b), c)| (*a, *b, c))
    }

    /// `(a ⊗ b)(a' ⊗ b') = (-1)^(deg b · deg a') aa' ⊗ bb'`.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!((self.left, self.right), (other.left, other.right));
        let mut out = Self::zero(self.left, self.right);
        for (&(a, b), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                let (sa, aa) = blade_product(a, a2, self.left);
                let (sb, bb) = blade_product(b, b2, self.right);
                let koszul = if b.grade() % 2 == 1 && a2.grade() % 2 == 1 { -1 } else { 1 };
                let v = c1.clone() * c2.clone();
                out.add_term(aa, bb, if sa * sb * koszul < 0 { -v } else { v });
            }
        }
        out
    }
}

/// The pair of algebras `A = Cl(p_A,q_A)`, `B = Cl(p_B,q_B)` together with
/// `C = Cl(p_A+p_B, q_A+q_B)`.
///
/// Generators of `C` are ordered positives first: `A`'s positives, `B`'s
/// positives, `A`'s negatives, `B`'s negatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedTensor {
    left: Signature,
    right: Signature,
    combined: Signature,
}

enum Side {
    Left(u32),
    Right(u32),
}

impl GradedTensor {
    pub fn new(left: Signature, right: Signature) -> Result<GradedTensor> {
        let combined = Signature::new(left.p() + right.p(), left.q() + right.q())?;
        Ok(GradedTensor { left, right, combined })
    }

    pub fn left(&self) -> Signature {
        self.left
    }

    pub fn right(&self) -> Signature {
        self.right
    }

    pub fn combined(&self) -> Signature {
        self.combined
    }

    fn left_index(&self, i: u32) -> u32 {
        if i <= self.left.p() {
            i
        } else {
            self.left.p() + self.right.p() + (i - self.left.p())
        }
    }

    fn right_index(&self, j: u32) -> u32 {
        if j <= self.right.p() {
            self.left.p() + j
        } else {
            self.left.p() + self.right.p() + self.left.q() + (j - self.right.p())
        }
    }

    fn split_index(&self, c: u32) -> Side {
        let (pa, pb, qa) = (self.left.p(), self.right.p(), self.left.q());
        if c <= pa {
            Side::Left(c)
        } else if c <= pa + pb {
            Side::Right(c - pa)
        } else if c <= pa + pb + qa {
            Side::Left(pa + (c - pa - pb))
        } else {
            Side::Right(pb + (c - pa - pb - qa))
        }
    }

    fn embed<S: Scalar>(&self, blade: Blade, index: impl Fn(u32) -> u32) -> Multivector<S> {
        blade.indices().fold(Multivector::one(self.combined), |acc, i| {
            let g = Multivector::generator(self.combined, index(i));
            acc.product(&g).expect("same signature")
        })
    }

    /// Image of a blade of `A` in `C` (the homomorphism induced by `V -> V ⊕ V'`).
    pub fn embed_left<S: Scalar>(&self, blade: Blade) -> Multivector<S> {
        self.embed(blade, |i| self.left_index(i))
    }

    /// Image of a blade of `B` in `C`.
    pub fn embed_right<S: Scalar>(&self, blade: Blade) -> Multivector<S> {
        self.embed(blade, |j| self.right_index(j))
    }

    /// `theta(x ⊗ x') = gamma(x) gamma'(x')`.
    pub fn theta<S: Scalar>(&self, t: &TensorElement<S>) -> Result<Multivector<S>> {
        if (t.left, t.right) != (self.left, self.right) {
            return Err(Error::SignatureMismatch { left: t.left, right: self.left });
        }
        let mut out = Multivector::zero(self.combined);
        for (a, b, c) in t.terms() {
            let img = self.embed_left::<S>(a).product(&self.embed_right::<S>(b))?;
            out = out.try_add(&img.scaled(c))?;
        }
        Ok(out)
    }

    /// `psi`, induced by `(v, v') -> v ⊗ 1 + 1 ⊗ v'`.
    pub fn psi<S: Scalar>(&self, x: &Multivector<S>) -> Result<TensorElement<S>> {
        if x.signature() != self.combined {
            return Err(Error::SignatureMismatch { left: x.signature(), right: self.combined });
        }
        let mut out = TensorElement::zero(self.left, self.right);
        for (blade, c) in x.terms() {
            let img = blade.indices().fold(TensorElement::one(self.left, self.right), |acc, idx| {
                let g = match self.split_index(idx) {
                    Side::Left(i) => TensorElement::pure(self.left, self.right, Blade::generator(i), Blade::SCALAR, S::one()),
                    Side::Right(j) => TensorElement::pure(self.left, self.right, Blade::SCALAR, Blade::generator(j), S::one()),
                };
                acc.product(&g)
            });
            for (a, b, v) in img.terms() {
                out.add_term(a, b, v.clone() * c.clone());
            }
        }
        Ok(out)
    }

    /// `psi ∘ theta = id` and `theta ∘ psi = id` on the full blade bases.
    pub fn theta_psi_check(&self) -> bool {
        type Q = num_rational::Rational64;
        let one = Q::from_integer(1);
        let forward = Blade::all(self.combined).all(|c| {
            let x = Multivector::blade(self.combined, c, one);
            self.psi(&x).and_then(|t| self.theta(&t)).map(|y| y == x).unwrap_or(false)
        });
        forward
            && Blade::all(self.left).all(|a| {
                Blade::all(self.right).all(|b| {
                    let t = TensorElement::pure(self.left, self.right, a, b, one);
                    self.theta(&t).and_then(|x| self.psi(&x)).map(|u| u == t).unwrap_or(false)
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn spacetime_from_split_factors() {
        let g = GradedTensor::new(sig(1, 1), sig(0, 2)).unwrap();
        assert_eq!(g.combined(), sig(1, 3));
        assert!(g.theta_psi_check());
    }

    #[test]
    fn trivial_left_factor() {
        for s in [sig(0, 0), sig(2, 1), sig(0, 3)] {
            let g = GradedTensor::new(sig(0, 0), s).unwrap();
            assert_eq!(g.combined(), s);
            assert!(g.theta_psi_check());
        }
    }

    #[test]
    fn two_lines_make_a_plane() {
        let (a, b) = (sig(1, 0), sig(1, 0));
        let g = GradedTensor::new(a, b).unwrap();
        assert_eq!(g.combined(), sig(2, 0));
        assert!(g.theta_psi_check());
        // e'_1 ⊗ 1 and 1 ⊗ e''_1 anticommute through the Koszul sign.
        let x = TensorElement::<Rational64>::pure(a, b, Blade::generator(1), Blade::SCALAR, Rational64::from_integer(1));
        let y = TensorElement::<Rational64>::pure(a, b, Blade::SCALAR, Blade::generator(1), Rational64::from_integer(1));
        let xy = x.product(&y);
        let yx = y.product(&x);
        let mut sum = xy.clone();
        for (a, b, c) in yx.terms() {
            sum.add_term(a, b, *c);
        }
        assert_eq!(sum, TensorElement::zero(a, b));
    }

    #[test]
    fn oversize_rejected() {
        assert!(GradedTensor::new(sig(8, 0), sig(0, 9)).is_err());
    }

    #[test]
    fn generator_images_square_correctly() {
        let g = GradedTensor::new(sig(1, 2), sig(2, 1)).unwrap();
        for i in 1..=3 {
            let e = g.embed_left::<Rational64>(Blade::generator(i));
            let sq = e.product(&e).unwrap();
            let expect = Rational64::from_integer(sig(1, 2).generator_square(i).into());
            assert_eq!(sq, Multivector::scalar(g.combined(), expect));
        }
    }
}
