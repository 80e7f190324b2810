//! Volume element, center and the inner form of the grade involution.

use alloc::vec;
use alloc::vec::Vec;

use super::{blade_product, Blade, Multivector, Scalar, Signature};
use crate::error::{Error, Result};

/// `omega = e_{12...n}`; `e_0` for `Cl(0,0)`.
pub fn volume_element<S: Scalar>(sig: Signature) -> Multivector<S> {
    Multivector::blade(sig, volume_blade(sig), S::one())
}

pub(crate) fn volume_blade(sig: Signature) -> Blade {
    Blade::from_mask(((1u64 << sig.n()) - 1) as u32)
}

/// `omega^2`, computed by multiplying the volume blade with itself.
pub fn omega_square(sig: Signature) -> i8 {
    let w = volume_blade(sig);
    let (sign, rest) = blade_product(w, w, sig);
    debug_assert_eq!(rest, Blade::SCALAR);
    sign
}

/// Basis of the center of `Cl(p,q)`: `{e_0}` for even `n`, `{e_0, omega}` for odd `n`.
pub fn center(sig: Signature) -> Vec<Blade> {
    if sig.n() % 2 == 1 {
        vec![Blade::SCALAR, volume_blade(sig)]
    } else {
        vec![Blade::SCALAR]
    }
}

/// `omega^{-1} = omega / omega^2`.
pub fn omega_inverse<S: Scalar>(sig: Signature) -> Multivector<S> {
    let w = volume_element::<S>(sig);
    if omega_square(sig) > 0 {
        w
    } else {
        w.negated()
    }
}

/// `omega x omega^{-1}`, which equals the grade involution of `x` for even `n`.
///
/// For odd `n` the volume element is central and conjugation by it is the
/// identity, so the operation is refused there.
pub fn involution_via_omega<S: Scalar>(x: &Multivector<S>) -> Result<Multivector<S>> {
    let sig = x.signature();
    if sig.n() % 2 == 1 {
        return Err(Error::UnsupportedParity { n: sig.n() });
    }
    let w = volume_element::<S>(sig);
    let w_inv = omega_inverse::<S>(sig);
    debug_assert!(w.product(&w_inv).map(|u| u == Multivector::one(sig)).unwrap_or(false));
    w.product(x)?.product(&w_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type Mv = Multivector<Rational64>;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn omega_square_examples() {
        assert_eq!(omega_square(sig(1, 3)), -1);
        assert_eq!(omega_square(sig(4, 0)), 1);
        assert_eq!(omega_square(sig(0, 0)), 1);
        assert_eq!(volume_element::<Rational64>(sig(0, 0)), Mv::one(sig(0, 0)));
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(sig(3, 0)), vec![Blade::SCALAR, Blade::from_indices(&[1, 2, 3])]);
        assert_eq!(center(sig(1, 3)), vec![Blade::SCALAR]);
        assert_eq!(center(sig(0, 1)), vec![Blade::SCALAR, Blade::generator(1)]);
    }

    #[test]
    fn omega_inverse_is_inverse() {
        for s in Signature::all_up_to(9) {
            let prod = volume_element::<Rational64>(s).product(&omega_inverse(s)).unwrap();
            assert_eq!(prod, Mv::one(s), "{s}");
        }
    }

    #[test]
    fn omega_conjugation_in_plane() {
        let s = sig(2, 0);
        let e1 = Mv::generator(s, 1);
        let e12 = Mv::blade(s, Blade::from_indices(&[1, 2]), Rational64::from_integer(1));
        assert_eq!(involution_via_omega(&e1).unwrap(), e1.negated());
        assert_eq!(involution_via_omega(&e12).unwrap(), e12);
        let one = Mv::one(sig(0, 0));
        assert_eq!(involution_via_omega(&one).unwrap(), one);
    }

    #[test]
    fn odd_dimension_refused() {
        let x = Mv::generator(sig(2, 1), 1);
        assert_eq!(involution_via_omega(&x), Err(Error::UnsupportedParity { n: 3 }));
    }
}
