use core::fmt;

use super::Signature;

/// A basis monomial `e_{i1 i2 ... ik}` with `i1 < i2 < ... < ik`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    /// The unit `e_0`.
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_mask(mask: u32) -> Blade {
        Blade(mask)
    }

    /// Generator `e_i`, 1-based.
    pub const fn generator(i: u32) -> Blade {
        Blade(1 << (i - 1))
    }

    /// Blade from a set of 1-based generator indices (any order, no repeats).
    pub fn from_indices(indices: &[u32]) -> Blade {
        Blade(indices.iter().fold(0, |m, &i| m | (1 << (i - 1))))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_valid_for(self, sig: Signature) -> bool {
        self.0 >> sig.n() == 0
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        let mask = self.0;
        (0..32).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
    }

    /// Every blade of `sig`, ordered by mask.
    pub fn all(sig: Signature) -> impl Iterator<Item = Blade> {
        (0..1u32 << sig.n()).map(Blade)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("e0");
        }
        f.write_str("e")?;
        let wide = self.indices().any(|i| i > 9);
        for (k, i) in self.indices().enumerate() {
            if wide && k > 0 {
                f.write_str("_")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Count of transpositions needed to merge `a` then `b` into ascending order.
fn reorder_parity(a: u32, b: u32) -> u32 {
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j >> 1).count_ones();
        rest &= rest - 1;
    }
    swaps & 1
}

/// Product of two basis blades: `a * b = sign * result`.
///
/// The sign collects the transpositions that sort the concatenated index list
/// and the squares `e_i^2 = -1` of repeated negative generators.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> (i8, Blade) {
    debug_assert!(a.is_valid_for(sig) && b.is_valid_for(sig));
    let mut odd = reorder_parity(a.0, b.0);
    odd ^= (a.0 & b.0 & sig.negative_mask()).count_ones() & 1;
    let sign = if odd == 0 { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}
