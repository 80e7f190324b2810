//! Clifford algebras of arbitrary signature and the representation theory
//! that rides on their mod-8 periodicity.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! - [`ga`]: exact blade/multivector arithmetic, the fundamental automorphisms,
//!   volume element, center, graded tensor products and the graded bracket.
//! - [`classify`]: division-ring type, matrix size and Brauer–Wall hour of
//!   `Cl(p,q)` and `C_n`.
//! - [`factorize`]: tensor factorizations into two-generator blocks and the
//!   periodicity reductions.
//! - [`matrep`]: explicit gamma matrices built from a factorization.
//! - [`lorentz`]: Spin+(1,3) operators in the Gel'fand–Naimark and
//!   Van der Waerden bases, and spintensor transformations.
//! - [`repsys`]: labels of the complex and real representation systems and the
//!   cyclic actions on them.
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod factorize;
pub mod ga;
pub mod half;
pub mod lorentz;
pub mod matrep;
pub mod matrix;
pub mod repsys;

pub use classify::{AlgebraClass, ClockHour, ComplexClass, MatrixAlgebra, RingType};
pub use error::{Error, Result};
pub use ga::{Blade, Multivector, Parity, Signature};
pub use half::Half;
pub use matrix::{OperatorMatrix, C64};
