use core::fmt;

use crate::error::{Error, Result};

/// Largest supported `p + q`; dense blade enumeration stays at `2^16` entries.
pub const MAX_GENERATORS: u32 = 16;

/// The pair `(p, q)` naming `Cl(p,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Signature> {
        if p + q > MAX_GENERATORS {
            return Err(Error::SignatureTooLarge { p, q, max: MAX_GENERATORS });
        }
        Ok(Signature { p, q })
    }

    /// Panics if `p + q` exceeds the generator limit.
    pub const fn const_new(p: u32, q: u32) -> Signature {
        assert!(p + q <= MAX_GENERATORS, "too many generators");
        Signature { p, q }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    /// Number of generators `p + q`.
    pub fn n(self) -> u32 {
        self.p + self.q
    }

    /// `(p - q) mod 8`, the index of the type lists and of the volume-element laws.
    pub fn type_label(self) -> u8 {
        (self.p as i64 - self.q as i64).rem_euclid(8) as u8
    }

    /// `Cl(q,p)`, the algebra of the negated quadratic form.
    pub fn flipped(self) -> Signature {
        Signature { p: self.q, q: self.p }
    }

    /// Number of blades, `2^(p+q)`.
    pub fn blade_count(self) -> usize {
        1usize << self.n()
    }

    /// Mask of generators squaring to `-1`.
    pub fn negative_mask(self) -> u32 {
        ((1u32 << self.q) - 1) << self.p
    }

    /// Square of generator `e_i` (1-based).
    pub fn generator_square(self, i: u32) -> i8 {
        debug_assert!(i >= 1 && i <= self.n());
        if i <= self.p {
            1
        } else {
            -1
        }
    }

    /// All signatures with `p + q <= n_max`, ordered by `n` then `p`.
    pub fn all_up_to(n_max: u32) -> impl Iterator<Item = Signature> {
        (0..=n_max.min(MAX_GENERATORS)).flat_map(|n| (0..=n).map(move |p| Signature { p, q: n - p }))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_oversized() {
        assert!(Signature::new(10, 7).is_err());
        assert!(Signature::new(8, 8).is_ok());
    }

    #[test]
    fn type_labels() {
        assert_eq!(Signature::new(1, 3).unwrap().type_label(), 6);
        assert_eq!(Signature::new(3, 1).unwrap().type_label(), 2);
        assert_eq!(Signature::new(0, 0).unwrap().type_label(), 0);
    }

    #[test]
    fn negative_mask_covers_tail() {
        let s = Signature::new(1, 3).unwrap();
        assert_eq!(s.negative_mask(), 0b1110);
        assert_eq!(s.generator_square(1), 1);
        assert_eq!(s.generator_square(4), -1);
    }

    #[test]
    fn enumeration_count() {
        // sum_{n=0}^{8} (n+1) = 45
        assert_eq!(Signature::all_up_to(8).count(), 45);
    }
}
