use super::{Multivector, Parity, Scalar};
use crate::error::{Error, Result};

/// `⟦x, y⟧` together with its Z2 degree.
#[derive(Clone, PartialEq)]
pub struct GradedBracketResult<S> {
    pub value: Multivector<S>,
    pub degree: Parity,
}

impl<S> core::fmt::Debug for GradedBracketResult<S>
where
    Multivector<S>: core::fmt::Debug,
{
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("GradedBracketResult").field("value", &self.value).field("degree", &self.degree).finish()
    }
}

/// `⟦x, y⟧ = xy - (-1)^(deg x · deg y) yx` for homogeneous `x`, `y`.
pub fn graded_bracket<S: Scalar>(x: &Multivector<S>, y: &Multivector<S>) -> Result<GradedBracketResult<S>> {
    let dx = x.parity().ok_or(Error::NotHomogeneous)?;
    let dy = y.parity().ok_or(Error::NotHomogeneous)?;
    let xy = x.product(y)?;
    let yx = y.product(x)?;
    let value = if dx == Parity::Odd && dy == Parity::Odd { xy.try_add(&yx)? } else { xy.try_sub(&yx)? };
    Ok(GradedBracketResult { value, degree: dx + dy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::{Blade, Signature};
    use num_rational::Rational64;

    type Mv = Multivector<Rational64>;

    #[test]
    fn odd_pairs_use_anticommutator() {
        let s = Signature::new(2, 0).unwrap();
        let e1 = Mv::generator(s, 1);
        let e2 = Mv::generator(s, 2);
        let b11 = graded_bracket(&e1, &e1).unwrap();
        assert_eq!(b11.value, Mv::scalar(s, Rational64::from_integer(2)));
        assert_eq!(b11.degree, Parity::Even);
        assert!(graded_bracket(&e1, &e2).unwrap().value.is_zero());
    }

    #[test]
    fn unit_brackets_to_zero() {
        let s = Signature::new(1, 2).unwrap();
        let one = Mv::one(s);
        for x in [Mv::generator(s, 3), Mv::blade(s, Blade::from_mask(0b011), Rational64::from_integer(5))] {
            assert!(graded_bracket(&one, &x).unwrap().value.is_zero());
        }
    }

    #[test]
    fn mixed_input_rejected() {
        let s = Signature::new(2, 0).unwrap();
        let mixed = Mv::one(s).try_add(&Mv::generator(s, 1)).unwrap();
        assert_eq!(graded_bracket(&mixed, &Mv::one(s)), Err(Error::NotHomogeneous));
    }
}
