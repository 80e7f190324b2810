//! Non-negative and signed half-integers, stored doubled.

use core::fmt;
use core::ops::{Add, Neg, Sub};

/// A half-integer `v`, stored as `2v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Half(i32);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const HALF: Half = Half(1);
    pub const ONE: Half = Half(2);

    pub const fn from_doubled(twice: i32) -> Half {
        Half(twice)
    }

    pub const fn from_int(v: i32) -> Half {
        Half(2 * v)
    }

    pub const fn doubled(self) -> i32 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    /// `self, self+1, ..., <= end` (empty when `end < self`).
    pub fn range_inclusive(self, end: Half) -> impl Iterator<Item = Half> {
        (self.0..=end.0).step_by(2).map(Half)
    }

    /// Parses `3`, `-1/2`, `1.5`.
    pub fn parse(s: &str) -> Option<Half> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().ok()?;
            match den.trim() {
                "1" => Some(Half(2 * num)),
                "2" => Some(Half(num)),
                _ => None,
            }
        } else if let Ok(v) = s.parse::<i32>() {
            Some(Half(2 * v))
        } else {
            let v: f64 = s.parse().ok()?;
            let twice = v * 2.0;
            if twice == libm::round(twice) && twice.abs() < i32::MAX as f64 {
                Some(Half(twice as i32))
            } else {
                None
            }
        }
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
