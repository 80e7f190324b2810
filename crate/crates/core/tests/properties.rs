use clifperiod_core::ga::{graded_bracket, Blade, GradedTensor, Multivector, Parity, Signature};
use clifperiod_core::lorentz::{build_gn_operators, reconstruct_ab, spintensor_transform, verify_com1, GNLabel, Spintensor};
use clifperiod_core::matrep::build_generators;
use clifperiod_core::matrix::{OperatorMatrix, C64};
use clifperiod_core::Half;
use proptest::prelude::*;

fn signature(max_n: u32) -> impl Strategy<Value = Signature> {
    (0..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

fn element(sig: Signature) -> impl Strategy<Value = Multivector<i64>> {
    let blades = sig.blade_count() as u32;
    proptest::collection::vec((0..blades, -4i64..=4), 0..6)
        .prop_map(move |terms| Multivector::from_terms(sig, terms.into_iter().map(|(m, c)| (Blade::from_mask(m), c))))
}

fn homogeneous(sig: Signature, parity: Parity) -> impl Strategy<Value = Multivector<i64>> {
    element(sig).prop_map(move |x| {
        let mut out = Multivector::zero(sig);
        for (b, c) in x.terms() {
            if Parity::of_grade(b.grade()) == parity {
                out.add_term(b, *c);
            }
        }
        out
    })
}

fn triple(max_n: u32) -> impl Strategy<Value = (Multivector<i64>, Multivector<i64>, Multivector<i64>)> {
    signature(max_n).prop_flat_map(|s| (element(s), element(s), element(s)))
}

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

proptest! {
    #[test]
    fn product_is_associative((x, y, z) in triple(6)) {
        let left = x.product(&y).unwrap().product(&z).unwrap();
        let right = x.product(&y.product(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_distributes((x, y, z) in triple(6)) {
        let left = x.product(&y.try_add(&z).unwrap()).unwrap();
        let right = x.product(&y).unwrap().try_add(&x.product(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reversion_is_antiautomorphism((x, y, _) in triple(6)) {
        let xy = x.product(&y).unwrap();
        prop_assert_eq!(xy.reversion(), y.reversion().product(&x.reversion()).unwrap());
    }

    #[test]
    fn conjugation_is_antiautomorphism((x, y, _) in triple(6)) {
        let xy = x.product(&y).unwrap();
        prop_assert_eq!(xy.conjugation(), y.conjugation().product(&x.conjugation()).unwrap());
    }

    #[test]
    fn grade_involution_is_automorphism((x, y, _) in triple(6)) {
        let xy = x.product(&y).unwrap();
        prop_assert_eq!(xy.grade_involution(), x.grade_involution().product(&y.grade_involution()).unwrap());
        prop_assert_eq!(x.grade_involution().grade_involution(), x.clone());
        prop_assert_eq!(x.reversion().grade_involution(), x.conjugation());
    }

    #[test]
    fn graded_jacobi(
        (x, y, z) in (signature(5), parity(), parity(), parity())
            .prop_flat_map(|(s, a, b, c)| (homogeneous(s, a), homogeneous(s, b), homogeneous(s, c)))
    ) {
        let br = |a: &Multivector<i64>, b: &Multivector<i64>| graded_bracket(a, b).unwrap().value;
        let deg = |a: &Multivector<i64>| a.parity().unwrap().degree() as i64;
        let sign = if deg(&x) * deg(&y) % 2 == 0 { 1 } else { -1 };
        let left = br(&x, &br(&y, &z));
        let right = br(&br(&x, &y), &z).try_add(&br(&y, &br(&x, &z)).scaled(&sign)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn graded_tensor_round_trip((a, b) in (signature(4), signature(4))) {
        let t = GradedTensor::new(a, b).unwrap();
        prop_assert!(t.theta_psi_check());
    }

    #[test]
    fn gamma_matrices_represent_the_product(
        (s, a, b) in signature(6).prop_flat_map(|s| {
            let n = s.blade_count() as u32;
            (Just(s), 0..n, 0..n)
        })
    ) {
        let g = build_generators(s).unwrap();
        let (x, y) = (Blade::from_mask(a), Blade::from_mask(b));
        let prod = Multivector::<i64>::blade(s, x, 1).product(&Multivector::blade(s, y, 1)).unwrap();
        let (blade, coeff) = prod.terms().next().map(|(b, c)| (b, *c)).unwrap();
        let lhs = g.blade_image(x).matmul(&g.blade_image(y));
        let rhs = g.blade_image(blade).scale(C64::new(coeff as f64, 0.0));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lorentz_commutators(l0 in 0i32..=6, gap in 1i32..=4) {
        let label = GNLabel::new(Half::from_doubled(l0), Half::from_doubled(l0 + 2 * gap)).unwrap();
        prop_assume!(label.dim() <= 64);
        prop_assert!(verify_com1(&reconstruct_ab(&build_gn_operators(label).unwrap()), 1e-10));
    }

    #[test]
    fn spintensor_transform_is_homomorphism(
        g in proptest::array::uniform8(-1.0f64..1.0),
        h in proptest::array::uniform8(-1.0f64..1.0),
        (k, r, comps) in (0u32..=3, 0u32..=3).prop_flat_map(|(k, r)| {
            (Just(k), Just(r), proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1usize << (k + r)))
        })
    ) {
        let mat = |v: [f64; 8]| {
            OperatorMatrix::from_entries(2, (0..4).map(|i| C64::new(v[2 * i], v[2 * i + 1])).collect()).unwrap()
        };
        let (g, h) = (mat(g), mat(h));
        let t = Spintensor::new(k, r, comps.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap();
        let once = spintensor_transform(&g.matmul(&h), &t).unwrap();
        let twice = spintensor_transform(&g, &spintensor_transform(&h, &t).unwrap()).unwrap();
        for (a, b) in once.components.iter().zip(&twice.components) {
            prop_assert!((a - b).norm_sqr() < 1e-24);
        }
    }
}
