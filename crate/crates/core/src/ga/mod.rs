//! Exact Clifford algebra arithmetic.
//!
//! Generators `e_1..e_n` with `n = p + q` square to `+1` for `i <= p` and to
//! `-1` for `i > p`. Blades are bitmasks (bit `i-1` set means `e_i` is present)
//! kept in ascending generator order.

mod blade;
mod bracket;
mod multivector;
mod signature;
mod structure;
mod tensor;

pub use blade::{blade_product, Blade};
pub use bracket::{graded_bracket, GradedBracketResult};
pub use multivector::{Multivector, Parity, Scalar};
pub use signature::{Signature, MAX_GENERATORS};
pub use structure::{center, involution_via_omega, omega_inverse, omega_square, volume_element};
pub use tensor::{GradedTensor, TensorElement};
