use crate::ga::Signature;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("signature ({p},{q}) exceeds the supported range p+q <= {max}")]
    SignatureTooLarge { p: u32, q: u32, max: u32 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("operation requires even p+q, got n = {n}")]
    UnsupportedParity { n: u32 },

    #[error("operation requires odd p+q, got n = {n}")]
    ExpectedOdd { n: u32 },

    #[error("multivector is not homogeneous in the Z2 grading")]
    NotHomogeneous,

    #[error("the even subalgebra of Cl(0,0) is not a Clifford algebra of lower dimension")]
    EmptySignature,

    #[error("complex Clifford algebra C_{n}: expected even n")]
    OddComplexDimension { n: u32 },

    #[error("invalid representation label: {0}")]
    InvalidLabel(&'static str),

    #[error("index k = {k} outside [{lo}, {hi}]")]
    IndexOutOfRange { k: crate::Half, lo: crate::Half, hi: crate::Half },

    #[error("shape mismatch: expected {expected} components, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("hour {h} is inconsistent with the current clock position")]
    InconsistentHour { h: u8 },

    #[error("label lies outside the ladder family of this step")]
    OutsideLadder,
}
