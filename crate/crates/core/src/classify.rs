//! Mod-8 classification of `Cl(p,q)` and mod-2 classification of `C_n`.
//!
//! Two clock conventions live side by side and must not be confused:
//! `type_label = (p - q) mod 8` indexes the division-ring lists and the
//! volume-element laws, while `hour_real = (q - p) mod 8` is the position of
//! the hour hand on the spinorial clock.

use core::fmt;

use crate::error::{Error, Result};
use crate::ga::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingType {
    R,
    C,
    H,
    /// `R ⊕ R`
    DoubleR,
    /// `H ⊕ H`
    DoubleH,
}

impl RingType {
    /// Ring of `Cl(p,q)` from `(p - q) mod 8`.
    pub fn from_type_label(t: u8) -> RingType {
        match t % 8 {
            0 | 2 => RingType::R,
            3 | 7 => RingType::C,
            4 | 6 => RingType::H,
            1 => RingType::DoubleR,
            _ => RingType::DoubleH,
        }
    }

    /// Real dimension of one simple summand's division ring.
    pub fn real_dim(self) -> u32 {
        match self {
            RingType::R | RingType::DoubleR => 1,
            RingType::C => 2,
            RingType::H | RingType::DoubleH => 4,
        }
    }

    pub fn is_double(self) -> bool {
        matches!(self, RingType::DoubleR | RingType::DoubleH)
    }

    /// The division ring of one summand.
    pub fn simple_part(self) -> RingType {
        match self {
            RingType::DoubleR => RingType::R,
            RingType::DoubleH => RingType::H,
            r => r,
        }
    }

    fn doubled(self) -> Option<RingType> {
        match self {
            RingType::R => Some(RingType::DoubleR),
            RingType::H => Some(RingType::DoubleH),
            _ => None,
        }
    }

    fn letter(self) -> &'static str {
        match self.simple_part() {
            RingType::R => "R",
            RingType::C => "C",
            _ => "H",
        }
    }
}

impl fmt::Display for RingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_double() {
            write!(f, "{0} ⊕ {0}", self.letter())
        } else {
            f.write_str(self.letter())
        }
    }
}

/// `Mat_m(K)` or `Mat_m(K) ⊕ Mat_m(K)` as a bare real algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixAlgebra {
    pub ring: RingType,
    pub size: u64,
}

impl MatrixAlgebra {
    pub fn real_dim(&self) -> u64 {
        let summands = if self.ring.is_double() { 2 } else { 1 };
        summands * u64::from(self.ring.real_dim()) * self.size * self.size
    }

    pub fn is_simple(&self) -> bool {
        !self.ring.is_double()
    }

    /// Ungraded real tensor product `self ⊗_R other`.
    ///
    /// Returns `None` when the product leaves the five Clifford ring types
    /// (`C ⊗ C = C ⊕ C`, or a double ring against anything but `R` or `H`).
    pub fn tensor(&self, other: &MatrixAlgebra) -> Option<MatrixAlgebra> {
        use RingType::*;
        let size = self.size * other.size;
        let (ring, extra) = match (self.ring, other.ring) {
            (R, r) | (r, R) => (r, 1),
            (H, H) => (R, 4),
            (H, C) | (C, H) => (C, 2),
            (H, DoubleR) | (DoubleR, H) => (DoubleH, 1),
            (H, DoubleH) | (DoubleH, H) => (DoubleR, 4),
            _ => return None,
        };
        Some(MatrixAlgebra { ring, size: size * extra })
    }

    /// `A ⊕ A` for simple real or quaternionic `A`.
    pub fn doubled(&self) -> Option<MatrixAlgebra> {
        Some(MatrixAlgebra { ring: self.ring.doubled()?, size: self.size })
    }

    pub const SCALARS: MatrixAlgebra = MatrixAlgebra { ring: RingType::R, size: 1 };
}

impl fmt::Display for MatrixAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |f: &mut fmt::Formatter<'_>| {
            if self.size == 1 {
                f.write_str(self.ring.letter())
            } else {
                write!(f, "Mat_{}({})", self.size, self.ring.letter())
            }
        };
        one(f)?;
        if self.ring.is_double() {
            f.write_str(" ⊕ ")?;
            one(f)?;
        }
        Ok(())
    }
}

/// Classification data of `Cl(p,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraClass {
    pub ring: RingType,
    pub matrix_size: u64,
    pub simple: bool,
    /// `h` in `q - p = h + 8r`.
    pub hour_real: u8,
    /// `(p - q) mod 8`.
    pub type_label: u8,
    /// `p + q`.
    pub generators: u32,
}

impl AlgebraClass {
    /// Class of any algebra with the given `(p - q) mod 8` and `p + q`.
    ///
    /// The matrix size is solved from `2^n = summands · dim_R(K) · m^2`.
    pub fn from_type_and_generators(type_label: u8, generators: u32) -> AlgebraClass {
        let type_label = type_label % 8;
        debug_assert_eq!(u32::from(type_label) % 2, generators % 2, "type and n have equal parity");
        let ring = RingType::from_type_label(type_label);
        let summands = if ring.is_double() { 1 } else { 0 };
        let log_k = match ring.real_dim() {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        let two_log_m = generators - summands - log_k;
        debug_assert!(two_log_m.is_multiple_of(2));
        AlgebraClass {
            ring,
            matrix_size: 1u64 << (two_log_m / 2),
            simple: !ring.is_double(),
            hour_real: ((8 - type_label) % 8),
            type_label,
            generators,
        }
    }

    pub fn algebra(&self) -> MatrixAlgebra {
        MatrixAlgebra { ring: self.ring, size: self.matrix_size }
    }

    pub fn real_dim(&self) -> u64 {
        self.algebra().real_dim()
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, {}, hour {}",
            self.algebra(),
            if self.simple { "simple" } else { "semi-simple" },
            self.hour_real
        )
    }
}

pub fn classify(sig: Signature) -> AlgebraClass {
    AlgebraClass::from_type_and_generators(sig.type_label(), sig.n())
}

/// Classification data of the complex algebra `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComplexClass {
    pub n: u32,
    /// `n mod 2`.
    pub parity: u8,
    /// `2^floor(n/2)`.
    pub matrix_size: u64,
    /// `n` even; odd `n` gives `C_{n-1} ⊕ C_{n-1}`.
    pub simple: bool,
}

impl fmt::Display for ComplexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |f: &mut fmt::Formatter<'_>| {
            if self.matrix_size == 1 {
                f.write_str("C")
            } else {
                write!(f, "Mat_{}(C)", self.matrix_size)
            }
        };
        one(f)?;
        if !self.simple {
            f.write_str(" ⊕ ")?;
            one(f)?;
        }
        Ok(())
    }
}

pub fn classify_complex(n: u32) -> ComplexClass {
    ComplexClass { n, parity: (n % 2) as u8, matrix_size: 1u64 << (n / 2), simple: n.is_multiple_of(2) }
}

/// Position on the real spinorial clock: `q - p = h + 8r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClockHour {
    pub h: u8,
    pub r: i32,
}

pub fn clock_hour(sig: Signature) -> ClockHour {
    let d = sig.q() as i32 - sig.p() as i32;
    ClockHour { h: d.rem_euclid(8) as u8, r: d.div_euclid(8) }
}

/// Position on the complex clock: `n = h + 2r`.
pub fn complex_clock_hour(n: u32) -> ClockHour {
    ClockHour { h: (n % 2) as u8, r: (n / 2) as i32 }
}

/// Signature whose full algebra is isomorphic to `Cl+(p,q)`:
/// `Cl+(p,q+1) ≅ Cl(p,q)` and `Cl+(p+1,q) ≅ Cl(q,p)`.
pub fn even_subalgebra(sig: Signature) -> Result<Signature> {
    if sig.q() >= 1 {
        Signature::new(sig.p(), sig.q() - 1)
    } else if sig.p() >= 1 {
        Signature::new(0, sig.p() - 1)
    } else {
        Err(Error::EmptySignature)
    }
}

/// Class of the graded tensor product `Cl(p,q) ⊗̂ Cl(p',q') ≅ Cl(p+p', q+q')`.
///
/// Types (and hours) add mod 8, generator counts add.
pub fn bw_compose(a: &AlgebraClass, b: &AlgebraClass) -> AlgebraClass {
    AlgebraClass::from_type_and_generators((a.type_label + b.type_label) % 8, a.generators + b.generators)
}

/// Ungraded tensor product of the underlying matrix algebras.
pub fn tensor_compose(a: &AlgebraClass, b: &AlgebraClass) -> Option<MatrixAlgebra> {
    a.algebra().tensor(&b.algebra())
}
