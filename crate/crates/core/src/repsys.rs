//! Labels of the complex and real representation systems of Spin+(1,3) and
//! the cyclic actions on them.

use alloc::vec::Vec;
use core::fmt;

use crate::classify::{clock_hour, ClockHour};
use crate::error::{Error, Result};
use crate::ga::Signature;
use crate::half::Half;

/// `C^{a,b}`, or `C^{a,b} ∪ C^{a,b}` when doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComplexRepLabel {
    pub a: u32,
    pub b: i32,
    pub doubled: bool,
}

impl ComplexRepLabel {
    pub fn new(a: u32, b: i32) -> ComplexRepLabel {
        ComplexRepLabel { a, b, doubled: false }
    }

    /// `C^{l0+l1−1, l0−l1+1}`.
    pub fn from_gn(l0: Half, l1: Half) -> Result<ComplexRepLabel> {
        let a = l0 + l1 - Half::ONE;
        let b = l0 - l1 + Half::ONE;
        if !a.is_integer() || a < Half::ZERO {
            return Err(Error::InvalidLabel("l0 + l1 - 1 must be a non-negative integer"));
        }
        Ok(ComplexRepLabel::new((a.doubled() / 2) as u32, b.doubled() / 2))
    }

    pub fn with_double(self) -> ComplexRepLabel {
        ComplexRepLabel { doubled: true, ..self }
    }

    /// Spinspace dimension `2^(a+|b|)`, twice that when doubled.
    pub fn dim(&self) -> u64 {
        let base = 1u64 << (self.a + self.b.unsigned_abs());
        if self.doubled {
            2 * base
        } else {
            base
        }
    }

    /// `a/2` on the `C^{a,0}` ladder.
    pub fn spin(&self) -> Option<Half> {
        (self.b == 0).then(|| Half::from_doubled(self.a as i32))
    }

    /// `|Δs1| = |Δs2| = 1`.
    pub fn interlocks(&self, other: &ComplexRepLabel) -> bool {
        self.a.abs_diff(other.a) == 1 && self.b.abs_diff(other.b) == 1
    }
}

impl fmt::Display for ComplexRepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{{{},{}}}", self.a, self.b)?;
        if self.doubled {
            write!(f, " ∪ C^{{{},{}}}", self.a, self.b)?;
        }
        Ok(())
    }
}

/// One tick of the mod-2 clock on the `C^{a,0}` ladder. Returns the new
/// label and the hour `h` of the transition.
///
/// `C^{a,0} ∪ C^{a,0} → C^{a+1,0}` and `C^{0,0} → C^{1,0}` have `h = 1`;
/// `C^{a,0} → C^{a,0} ∪ C^{a,0}` (`a ≥ 1`) has `h = 0`.
pub fn bw_complex_transition(rep: ComplexRepLabel) -> Result<(ComplexRepLabel, u8)> {
    if rep.b != 0 {
        return Err(Error::OutsideLadder);
    }
    if rep.doubled || rep.a == 0 {
        Ok((ComplexRepLabel::new(rep.a + 1, 0), 1))
    } else {
        Ok((rep.with_double(), 0))
    }
}

pub fn bw_complex_step(rep: ComplexRepLabel) -> Result<ComplexRepLabel> {
    bw_complex_transition(rep).map(|(r, _)| r)
}

/// Bottom row of the interlocking scheme for `2s = n`:
/// `C^{n,0}, C^{n−1,−1}, ..., C^{0,−n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainNode {
    pub labels: Vec<ComplexRepLabel>,
}

impl ChainNode {
    pub fn is_interlocking(&self) -> bool {
        self.labels.windows(2).all(|w| w[0].interlocks(&w[1]))
    }
}

impl fmt::Display for ChainNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(" <-> ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn interlocking_chain(two_s: u32) -> ChainNode {
    ChainNode { labels: (0..=two_s).map(|j| ComplexRepLabel::new(two_s - j, -(j as i32))).collect() }
}

/// Labels `C^{s1±1, s2±1}` inside the wedge `s1 ≥ 0 ≥ s2`.
pub fn neighbors(rep: ComplexRepLabel) -> Vec<ComplexRepLabel> {
    let mut out = Vec::new();
    for da in [1i64, -1] {
        for db in [1i64, -1] {
            let a = i64::from(rep.a) + da;
            let b = i64::from(rep.b) + db;
            if a >= 0 && b <= 0 {
                out.push(ComplexRepLabel { a: a as u32, b: b as i32, doubled: rep.doubled });
            }
        }
    }
    out
}

/// Tensor with the fundamental factor: `C^{1,0}` on the undotted ladder,
/// `C^{0,−1}` on the dotted ladder, `C^{1,−1}` for mixed labels.
pub fn tensor_step(rep: ComplexRepLabel) -> ComplexRepLabel {
    let (a, b) = match (rep.a, rep.b) {
        (a, 0) => (a + 1, 0),
        (0, b) => (0, b - 1),
        (a, b) => (a + 1, b - 1),
    };
    ComplexRepLabel { a, b, doubled: rep.doubled }
}

/// The eight classes of real representations, by `(p − q) mod 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealClass {
    R0,
    R2,
    H4,
    H6,
    C3,
    C7,
    /// `R_{0,2} ∪ R_{0,2}`
    R02Double,
    /// `H_{4,6} ∪ H_{4,6}`
    H46Double,
}

impl RealClass {
    pub fn from_type_label(t: u8) -> RealClass {
        match t % 8 {
            0 => RealClass::R0,
            1 => RealClass::R02Double,
            2 => RealClass::R2,
            3 => RealClass::C3,
            4 => RealClass::H4,
            5 => RealClass::H46Double,
            6 => RealClass::H6,
            _ => RealClass::C7,
        }
    }

    pub fn type_label(self) -> u8 {
        match self {
            RealClass::R0 => 0,
            RealClass::R02Double => 1,
            RealClass::R2 => 2,
            RealClass::C3 => 3,
            RealClass::H4 => 4,
            RealClass::H46Double => 5,
            RealClass::H6 => 6,
            RealClass::C7 => 7,
        }
    }

    /// Clock position `(q − p) mod 8` of the class.
    pub fn hour(self) -> u8 {
        (8 - self.type_label()) % 8
    }

    pub fn is_doubled(self) -> bool {
        matches!(self, RealClass::R02Double | RealClass::H46Double)
    }

    fn is_real_family(self) -> bool {
        matches!(self, RealClass::R0 | RealClass::R2 | RealClass::R02Double)
    }

    fn is_quaternionic_family(self) -> bool {
        matches!(self, RealClass::H4 | RealClass::H6 | RealClass::H46Double)
    }

    fn double_of(self) -> Option<RealClass> {
        if self.is_doubled() {
            None
        } else if self.is_real_family() {
            Some(RealClass::R02Double)
        } else if self.is_quaternionic_family() {
            Some(RealClass::H46Double)
        } else {
            None
        }
    }

    fn letter(self) -> char {
        if self.is_real_family() {
            'R'
        } else if self.is_quaternionic_family() {
            'H'
        } else {
            'C'
        }
    }

    fn subscript(self) -> &'static str {
        match self {
            RealClass::R0 => "0",
            RealClass::R2 => "2",
            RealClass::H4 => "4",
            RealClass::H6 => "6",
            RealClass::C3 => "3",
            RealClass::C7 => "7",
            RealClass::R02Double => "{0,2}",
            RealClass::H46Double => "{4,6}",
        }
    }

    /// Simple class at an even hour of the real clock.
    fn at_even_hour(h: u8) -> RealClass {
        match h % 8 {
            0 => RealClass::R0,
            2 => RealClass::H6,
            4 => RealClass::H4,
            _ => RealClass::R2,
        }
    }
}

/// A real representation `D^{l0}` of one of the eight classes. Doubled
/// labels may record the simple class they are the union of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RealRepLabel {
    pub class: RealClass,
    pub l0: Half,
    pub summand: Option<RealClass>,
}

impl RealRepLabel {
    pub fn new(class: RealClass, l0: Half) -> RealRepLabel {
        RealRepLabel { class, l0, summand: None }
    }

    /// `D^{l0} ∪ D^{l0}` for a simple real or quaternionic `D`.
    pub fn doubled_of(simple: RealClass, l0: Half) -> Result<RealRepLabel> {
        let class = simple.double_of().ok_or(Error::InvalidLabel("only real and quaternionic classes double"))?;
        Ok(RealRepLabel { class, l0, summand: Some(simple) })
    }
}

impl fmt::Display for RealRepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |f: &mut fmt::Formatter<'_>, c: RealClass| {
            write!(f, "{}^{{{}}}_{}", c.letter(), self.l0, c.subscript())
        };
        match (self.class.is_doubled(), self.summand) {
            (true, Some(s)) => {
                one(f, s)?;
                f.write_str(" ∪ ")?;
                one(f, s)
            }
            (true, None) => {
                one(f, self.class)?;
                f.write_str(" ∪ ")?;
                one(f, self.class)
            }
            _ => one(f, self.class),
        }
    }
}

/// Class from `(p − q) mod 8` and `l0 = r/2`, `r` the number of
/// two-generator factors (`l0 = (p+q)/4` for even `p+q`).
pub fn classify_real_rep(sig: Signature) -> RealRepLabel {
    RealRepLabel::new(RealClass::from_type_label(sig.type_label()), Half::from_doubled((sig.n() / 2) as i32))
}

/// One tick of the real clock, landing at hour `h`.
///
/// Odd `h` doubles a simple label sitting at hour `h − 1`. Even `h` takes a
/// doubled label of the family of the class at hour `h − 2` to the class at
/// hour `h`, raising `l0` by 1/2.
pub fn bw_real_step(rep: RealRepLabel, h: u8) -> Result<RealRepLabel> {
    if h > 7 {
        return Err(Error::InconsistentHour { h });
    }
    if matches!(rep.class, RealClass::C3 | RealClass::C7) {
        return Err(Error::OutsideLadder);
    }
    if h % 2 == 1 {
        if rep.class.is_doubled() || rep.class.hour() != h - 1 {
            return Err(Error::InconsistentHour { h });
        }
        return RealRepLabel::doubled_of(rep.class, rep.l0);
    }
    let previous = RealClass::at_even_hour((h + 6) % 8);
    if !rep.class.is_doubled() || rep.class.is_real_family() != previous.is_real_family() {
        return Err(Error::InconsistentHour { h });
    }
    Ok(RealRepLabel::new(RealClass::at_even_hour(h), rep.l0 + Half::HALF))
}

/// `D^{l0+2} ≃ D^{l0} ⊗ R^2_0`: the signature gains eight generators.
pub fn real_period_step(rep: RealRepLabel) -> RealRepLabel {
    RealRepLabel { l0: rep.l0 + Half::from_int(2), ..rep }
}

/// A state of the real cycle walked along `Cl(1,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealWalkStep {
    pub sig: Signature,
    pub hour: ClockHour,
    pub label: RealRepLabel,
}

/// Walks `Cl(1,0) → Cl(1,1) → ...` for `steps` transitions, starting from
/// `R^0_0 ∪ R^0_0` (the double numbers).
pub fn real_clock_walk(steps: u32) -> Result<Vec<RealWalkStep>> {
    let mut label = RealRepLabel::doubled_of(RealClass::R0, Half::ZERO)?;
    let mut out = Vec::with_capacity(steps as usize);
    for q in 1..=steps {
        let sig = Signature::new(1, q)?;
        let hour = clock_hour(sig);
        label = bw_real_step(label, hour.h)?;
        out.push(RealWalkStep { sig, hour, label });
    }
    Ok(out)
}
