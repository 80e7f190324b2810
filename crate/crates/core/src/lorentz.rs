//! Finite-dimensional Spin+(1,3) operators in the Gel'fand–Naimark and
//! Van der Waerden bases.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::half::Half;
use crate::matrix::{OperatorMatrix, C64, I, ZERO};

/// Representation label `(l0, l1)` with `l1 − l0` a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GNLabel {
    pub l0: Half,
    pub l1: Half,
}

impl GNLabel {
    pub fn new(l0: Half, l1: Half) -> Result<GNLabel> {
        if l0 < Half::ZERO {
            return Err(Error::InvalidLabel("l0 must be non-negative"));
        }
        if l1 <= l0 || !(l1 - l0).is_integer() {
            return Err(Error::InvalidLabel("l1 - l0 must be a positive integer"));
        }
        Ok(GNLabel { l0, l1 })
    }

    /// `l1² − l0²`.
    pub fn dim(&self) -> usize {
        let (a, b) = (self.l0.doubled() as usize, self.l1.doubled() as usize);
        (b * b - a * a) / 4
    }

    /// Levels `k = l0, ..., l1 − 1`.
    pub fn levels(&self) -> impl Iterator<Item = Half> {
        self.l0.range_inclusive(self.l1 - Half::ONE)
    }

    /// Weights `(l, l̇)` of the corresponding Van der Waerden label, with
    /// `l = (l0 + l1 − 1)/2` and `l̇ = |l0 − l1 + 1|/2`.
    pub fn vdw_label(&self) -> VdWLabel {
        let l = Half::from_doubled((self.l0 + self.l1 - Half::ONE).doubled() / 2);
        let ld = Half::from_doubled((self.l0 - self.l1 + Half::ONE).abs().doubled() / 2);
        VdWLabel { l, l_dot: ld }
    }

    /// Position of `ξ_{kν}` in the lexicographic `(k, ν)` basis.
    fn index(&self, k: Half, nu: Half) -> Option<usize> {
        if k < self.l0 || k >= self.l1 || nu.abs() > k || (k - nu).doubled() % 2 != 0 {
            return None;
        }
        let below: usize = self.l0.range_inclusive(k - Half::ONE).map(|j| j.doubled() as usize + 1).sum();
        Some(below + (nu + k).doubled() as usize / 2)
    }
}

/// `(A_k, C_k)`. `C_{l0}` is taken as zero since it multiplies the absent
/// level `l0 − 1`.
pub fn gn_coefficients(label: GNLabel, k: Half) -> Result<(C64, C64)> {
    if k < label.l0 || k > label.l1 {
        return Err(Error::IndexOutOfRange { k, lo: label.l0, hi: label.l1 });
    }
    let (kf, l0, l1) = (k.to_f64(), label.l0.to_f64(), label.l1.to_f64());
    let a = if k == Half::ZERO { ZERO } else { I * (l0 * l1 / (kf * (kf + 1.0))) };
    let c = if k == label.l0 {
        ZERO
    } else {
        let rad = (kf * kf - l0 * l0) * (kf * kf - l1 * l1) / (4.0 * kf * kf - 1.0);
        let root = if rad >= 0.0 { C64::new(libm::sqrt(rad), 0.0) } else { C64::new(0.0, libm::sqrt(-rad)) };
        I * root / kf
    };
    Ok((a, c))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GNOperators {
    pub label: GNLabel,
    pub h3: OperatorMatrix,
    pub h_plus: OperatorMatrix,
    pub h_minus: OperatorMatrix,
    pub f3: OperatorMatrix,
    pub f_plus: OperatorMatrix,
    pub f_minus: OperatorMatrix,
}

impl GNOperators {
    pub fn named(&self) -> [(&'static str, &OperatorMatrix); 6] {
        [
            ("H3", &self.h3),
            ("H+", &self.h_plus),
            ("H-", &self.h_minus),
            ("F3", &self.f3),
            ("F+", &self.f_plus),
            ("F-", &self.f_minus),
        ]
    }
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn sqrt_re(x: f64) -> C64 {
    re(libm::sqrt(x.max(0.0)))
}

pub fn build_gn_operators(label: GNLabel) -> Result<GNOperators> {
    let label = GNLabel::new(label.l0, label.l1)?;
    let n = label.dim();
    let note = format!("Gel'fand-Naimark xi_(k,nu), (k,nu) lexicographic ascending, l0 = {}, l1 = {}", label.l0, label.l1);
    let mut m: [OperatorMatrix; 6] = core::array::from_fn(|_| OperatorMatrix::zeros(n).with_basis_note(note.clone()));
    let coeff = |k: Half| gn_coefficients(label, k).unwrap_or((ZERO, ZERO));
    let one = Half::ONE;
    for k in label.levels() {
        let (a_k, c_k) = coeff(k);
        let (_, c_k1) = coeff(k + one);
        let kf = k.to_f64();
        for nu in (-k).range_inclusive(k) {
            let col = label.index(k, nu).expect("basis vector");
            let v = nu.to_f64();
            let mut put = |op: usize, k2: Half, nu2: Half, value: C64| {
                if let Some(row) = label.index(k2, nu2) {
                    m[op].set(row, col, m[op].get(row, col) + value);
                }
            };
            put(0, k, nu, re(v));
            put(1, k, nu + one, sqrt_re((kf + v + 1.0) * (kf - v)));
            put(2, k, nu - one, sqrt_re((kf + v) * (kf - v + 1.0)));

            put(3, k - one, nu, c_k * sqrt_re(kf * kf - v * v));
            put(3, k, nu, -a_k * v);
            put(3, k + one, nu, -c_k1 * sqrt_re((kf + 1.0) * (kf + 1.0) - v * v));

            put(4, k - one, nu + one, c_k * sqrt_re((kf - v) * (kf - v - 1.0)));
            put(4, k, nu + one, -a_k * sqrt_re((kf - v) * (kf + v + 1.0)));
            put(4, k + one, nu + one, c_k1 * sqrt_re((kf + v + 1.0) * (kf + v + 2.0)));

            put(5, k - one, nu - one, -c_k * sqrt_re((kf + v) * (kf + v - 1.0)));
            put(5, k, nu - one, -a_k * sqrt_re((kf + v) * (kf - v + 1.0)));
            put(5, k + one, nu - one, -c_k1 * sqrt_re((kf - v + 1.0) * (kf - v + 2.0)));
        }
    }
    let [h3, h_plus, h_minus, f3, f_plus, f_minus] = m;
    Ok(GNOperators { label, h3, h_plus, h_minus, f3, f_plus, f_minus })
}

/// Rotation generators `A_1..A_3` and boost generators `B_1..B_3`.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzGenerators {
    pub a: [OperatorMatrix; 3],
    pub b: [OperatorMatrix; 3],
}

fn split_triple(plus: &OperatorMatrix, minus: &OperatorMatrix, three: &OperatorMatrix) -> [OperatorMatrix; 3] {
    let half = re(0.5);
    [(plus + minus).scale(half / I), (minus - plus).scale(half), three.scale(-I)]
}

fn join_triple(t: &[OperatorMatrix; 3]) -> [OperatorMatrix; 3] {
    let ia1 = t[0].scale(I);
    [&ia1 - &t[1], &ia1 + &t[1], t[2].scale(I)]
}

/// Inverts `H± = iA_1 ∓ A_2`, `H3 = iA_3` (and the same for `F`, `B`).
pub fn reconstruct_ab(ops: &GNOperators) -> LorentzGenerators {
    LorentzGenerators {
        a: split_triple(&ops.h_plus, &ops.h_minus, &ops.h3),
        b: split_triple(&ops.f_plus, &ops.f_minus, &ops.f3),
    }
}

/// Rebuilds the Gel'fand–Naimark operators from `A`, `B`.
pub fn gn_from_ab(label: GNLabel, g: &LorentzGenerators) -> GNOperators {
    let [h_plus, h_minus, h3] = join_triple(&g.a);
    let [f_plus, f_minus, f3] = join_triple(&g.b);
    GNOperators { label, h3, h_plus, h_minus, f3, f_plus, f_minus }
}

/// Residual (max entry modulus) of each of the fifteen commutation relations
/// of the proper Lorentz algebra.
pub fn com1_residuals(g: &LorentzGenerators) -> Vec<(&'static str, f64)> {
    let (a, b) = (&g.a, &g.b);
    let zero = OperatorMatrix::zeros(a[0].dim());
    let neg = |m: &OperatorMatrix| -m;
    let cases: [(&'static str, &OperatorMatrix, &OperatorMatrix, OperatorMatrix); 15] = [
        ("[A1,A2]=A3", &a[0], &a[1], a[2].clone()),
        ("[A2,A3]=A1", &a[1], &a[2], a[0].clone()),
        ("[A3,A1]=A2", &a[2], &a[0], a[1].clone()),
        ("[B1,B2]=-A3", &b[0], &b[1], neg(&a[2])),
        ("[B2,B3]=-A1", &b[1], &b[2], neg(&a[0])),
        ("[B3,B1]=-A2", &b[2], &b[0], neg(&a[1])),
        ("[A1,B1]=0", &a[0], &b[0], zero.clone()),
        ("[A2,B2]=0", &a[1], &b[1], zero.clone()),
        ("[A3,B3]=0", &a[2], &b[2], zero),
        ("[A1,B2]=B3", &a[0], &b[1], b[2].clone()),
        ("[A1,B3]=-B2", &a[0], &b[2], neg(&b[1])),
        ("[A2,B3]=B1", &a[1], &b[2], b[0].clone()),
        ("[A2,B1]=-B3", &a[1], &b[0], neg(&b[2])),
        ("[A3,B1]=B2", &a[2], &b[0], b[1].clone()),
        ("[A3,B2]=-B1", &a[2], &b[1], neg(&b[0])),
    ];
    cases.into_iter().map(|(name, x, y, rhs)| (name, x.commutator(y).max_abs_diff(&rhs))).collect()
}

pub fn verify_com1(g: &LorentzGenerators, tol: f64) -> bool {
    com1_residuals(g).iter().all(|(_, r)| *r <= tol)
}

/// Weights `(l, l̇)` of a Van der Waerden basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VdWLabel {
    pub l: Half,
    pub l_dot: Half,
}

impl VdWLabel {
    pub fn new(l: Half, l_dot: Half) -> Result<VdWLabel> {
        if l < Half::ZERO || l_dot < Half::ZERO {
            return Err(Error::InvalidLabel("weights must be non-negative"));
        }
        Ok(VdWLabel { l, l_dot })
    }

    /// `(2l + 1)(2l̇ + 1)`.
    pub fn dim(&self) -> usize {
        (self.l.doubled() as usize + 1) * (self.l_dot.doubled() as usize + 1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VdWOperators {
    pub label: VdWLabel,
    pub x3: OperatorMatrix,
    pub x_plus: OperatorMatrix,
    pub x_minus: OperatorMatrix,
    pub y3: OperatorMatrix,
    pub y_plus: OperatorMatrix,
    pub y_minus: OperatorMatrix,
}

impl VdWOperators {
    pub fn named(&self) -> [(&'static str, &OperatorMatrix); 6] {
        [
            ("X3", &self.x3),
            ("X+", &self.x_plus),
            ("X-", &self.x_minus),
            ("Y3", &self.y3),
            ("Y+", &self.y_plus),
            ("Y-", &self.y_minus),
        ]
    }
}

/// Ladder operators of spin `j` on `m = −j..j`, ascending.
fn ladder(j: Half) -> [OperatorMatrix; 3] {
    let n = j.doubled() as usize + 1;
    let jf = j.to_f64();
    let mut three = OperatorMatrix::zeros(n);
    let mut plus = OperatorMatrix::zeros(n);
    let mut minus = OperatorMatrix::zeros(n);
    for i in 0..n {
        let m = i as f64 - jf;
        three.set(i, i, re(m));
        if i + 1 < n {
            plus.set(i + 1, i, sqrt_re((jf - m) * (jf + m + 1.0)));
        }
        if i > 0 {
            minus.set(i - 1, i, sqrt_re((jf + m) * (jf - m + 1.0)));
        }
    }
    [three, plus, minus]
}

pub fn build_vdw_operators(l: Half, l_dot: Half) -> Result<VdWOperators> {
    let label = VdWLabel::new(l, l_dot)?;
    let note = format!("Van der Waerden |l,m;ldot,mdot>, (m,mdot) lexicographic ascending, l = {l}, ldot = {l_dot}");
    let id_x = OperatorMatrix::identity(l.doubled() as usize + 1);
    let id_y = OperatorMatrix::identity(l_dot.doubled() as usize + 1);
    let x = ladder(l).map(|m| m.kron(&id_y).with_basis_note(note.clone()));
    let y = ladder(l_dot).map(|m| id_x.kron(&m).with_basis_note(note.clone()));
    let [x3, x_plus, x_minus] = x;
    let [y3, y_plus, y_minus] = y;
    Ok(VdWOperators { label, x3, x_plus, x_minus, y3, y_plus, y_minus })
}

/// `(X1, X2, X3)` from `X± = X1 ± iX2`.
pub fn cartesian(plus: &OperatorMatrix, minus: &OperatorMatrix, three: &OperatorMatrix) -> [OperatorMatrix; 3] {
    let half = re(0.5);
    [(plus + minus).scale(half), (plus - minus).scale(half / I), three.clone()]
}

/// Residuals of `[X_k, X_l] = iε_klm X_m`, the same for `Y`, and `[X_k, Y_l] = 0`.
pub fn com2_residuals(ops: &VdWOperators) -> Vec<(&'static str, f64)> {
    let x = cartesian(&ops.x_plus, &ops.x_minus, &ops.x3);
    let y = cartesian(&ops.y_plus, &ops.y_minus, &ops.y3);
    let su2 = |t: &[OperatorMatrix; 3]| {
        [
            t[0].commutator(&t[1]).max_abs_diff(&t[2].scale(I)),
            t[1].commutator(&t[2]).max_abs_diff(&t[0].scale(I)),
            t[2].commutator(&t[0]).max_abs_diff(&t[1].scale(I)),
        ]
    };
    let [x12, x23, x31] = su2(&x);
    let [y12, y23, y31] = su2(&y);
    let mut out = alloc::vec![
        ("[X1,X2]=iX3", x12),
        ("[X2,X3]=iX1", x23),
        ("[X3,X1]=iX2", x31),
        ("[Y1,Y2]=iY3", y12),
        ("[Y2,Y3]=iY1", y23),
        ("[Y3,Y1]=iY2", y31),
    ];
    const CROSS: [&str; 9] = [
        "[X1,Y1]=0", "[X1,Y2]=0", "[X1,Y3]=0", "[X2,Y1]=0", "[X2,Y2]=0", "[X2,Y3]=0", "[X3,Y1]=0", "[X3,Y2]=0",
        "[X3,Y3]=0",
    ];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            out.push((CROSS[3 * i + j], xi.commutator(yj).max_abs()));
        }
    }
    out
}

pub fn verify_com2(ops: &VdWOperators, tol: f64) -> bool {
    com2_residuals(ops).iter().all(|(_, r)| *r <= tol)
}

/// Van der Waerden operators in the Gel'fand–Naimark basis:
/// `X = ½(H + iF)`, `Y = ½(H − iF)` componentwise, i.e.
/// `X_l = ½i(A_l + iB_l)`, `Y_l = ½i(A_l − iB_l)`.
pub fn gn_to_vdw(ops: &GNOperators) -> VdWOperators {
    let half = re(0.5);
    let x = |h: &OperatorMatrix, f: &OperatorMatrix| (h + &f.scale(I)).scale(half);
    let y = |h: &OperatorMatrix, f: &OperatorMatrix| (h - &f.scale(I)).scale(half);
    VdWOperators {
        label: ops.label.vdw_label(),
        x3: x(&ops.h3, &ops.f3),
        x_plus: x(&ops.h_plus, &ops.f_plus),
        x_minus: x(&ops.h_minus, &ops.f_minus),
        y3: y(&ops.h3, &ops.f3),
        y_plus: y(&ops.h_plus, &ops.f_plus),
        y_minus: y(&ops.h_minus, &ops.f_minus),
    }
}

/// `X_l = ½i(A_l + iB_l)` and `Y_l = ½i(A_l − iB_l)` directly from the
/// rotation and boost generators.
pub fn xy_from_ab(g: &LorentzGenerators) -> ([OperatorMatrix; 3], [OperatorMatrix; 3]) {
    let half_i = re(0.5) * I;
    let x = core::array::from_fn(|l| (&g.a[l] + &g.b[l].scale(I)).scale(half_i));
    let y = core::array::from_fn(|l| (&g.a[l] - &g.b[l].scale(I)).scale(half_i));
    (x, y)
}

/// Element of `S_2 ⊗ ... ⊗ S_2 ⊗ Ṡ_2 ⊗ ... ⊗ Ṡ_2` (`k` undotted, `r` dotted
/// factors). The first index is the most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct Spintensor {
    pub k: u32,
    pub r: u32,
    pub components: Vec<C64>,
}

impl Spintensor {
    pub fn new(k: u32, r: u32, components: Vec<C64>) -> Result<Spintensor> {
        let expected = 1usize << (k + r);
        if components.len() != expected {
            return Err(Error::ShapeMismatch { expected, got: components.len() });
        }
        Ok(Spintensor { k, r, components })
    }

    pub fn rank(&self) -> u32 {
        self.k + self.r
    }
}

/// `g` on every undotted index, `conj(g)` on every dotted index.
pub fn spintensor_transform(g: &OperatorMatrix, t: &Spintensor) -> Result<Spintensor> {
    if g.dim() != 2 {
        return Err(Error::ShapeMismatch { expected: 4, got: g.entries().len() });
    }
    let t = Spintensor::new(t.k, t.r, t.components.clone())?;
    let gbar = g.conj();
    let n = t.rank();
    let mut c = t.components;
    for slot in 0..n {
        let m = if slot < t.k { g } else { &gbar };
        let stride = 1usize << (n - 1 - slot);
        for base in 0..c.len() {
            if base & stride != 0 {
                continue;
            }
            let (s0, s1) = (c[base], c[base | stride]);
            c[base] = m.get(0, 0) * s0 + m.get(0, 1) * s1;
            c[base | stride] = m.get(1, 0) * s0 + m.get(1, 1) * s1;
        }
    }
    Ok(Spintensor { k: t.k, r: t.r, components: c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ONE;

    fn h(s: &str) -> Half {
        Half::parse(s).unwrap()
    }

    fn gn(l0: &str, l1: &str) -> GNLabel {
        GNLabel::new(h(l0), h(l1)).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let (a, _) = gn_coefficients(gn("1/2", "3/2"), h("1/2")).unwrap();
        assert!((a - I).norm_sqr() < 1e-24);
        for k in ["0", "1", "2"] {
            assert_eq!(gn_coefficients(gn("0", "2"), h(k)).unwrap().0, ZERO);
        }
        let (_, c) = gn_coefficients(gn("1/2", "3/2"), h("3/2")).unwrap();
        assert!(c.norm_sqr() < 1e-24);
        assert!(gn_coefficients(gn("1/2", "3/2"), h("5/2")).is_err());
    }

    #[test]
    fn coefficient_c_is_real_inside_the_ladder() {
        let (_, c) = gn_coefficients(gn("0", "3"), h("1")).unwrap();
        // (i/1)·sqrt((1)(1−9)/3) = −sqrt(8/3)
        assert!((c - re(-libm::sqrt(8.0 / 3.0))).norm_sqr() < 1e-24);
    }

    #[test]
    fn labels() {
        assert!(GNLabel::new(h("1/2"), h("1")).is_err());
        assert!(GNLabel::new(h("1"), h("1")).is_err());
        assert!(GNLabel::new(h("-1"), h("1")).is_err());
        assert_eq!(gn("0", "2").dim(), 4);
        assert_eq!(gn("1/2", "3/2").dim(), 2);
        let v = gn("1/2", "5/2").vdw_label();
        assert_eq!((v.l, v.l_dot), (h("1"), h("1/2")));
    }

    #[test]
    fn trivial_representation_is_zero() {
        let ops = build_gn_operators(gn("0", "1")).unwrap();
        for (_, m) in ops.named() {
            assert_eq!(m.dim(), 1);
            assert!(m.is_zero(0.0));
        }
    }

    #[test]
    fn two_dimensional_representation() {
        let ops = build_gn_operators(gn("1/2", "3/2")).unwrap();
        assert_eq!(ops.h3, OperatorMatrix::diagonal(&[re(-0.5), re(0.5)]));
        let f3 = OperatorMatrix::diagonal(&[re(-0.5), re(0.5)]).scale(-I);
        assert!(ops.f3.approx_eq(&f3, 1e-15));
    }

    #[test]
    fn round_trip_through_ab() {
        let ops = build_gn_operators(gn("1", "3")).unwrap();
        let back = gn_from_ab(ops.label, &reconstruct_ab(&ops));
        for ((_, x), (_, y)) in ops.named().iter().zip(back.named().iter()) {
            assert!(x.approx_eq(y, 1e-14));
        }
        let z = reconstruct_ab(&build_gn_operators(gn("0", "1")).unwrap());
        assert!(z.a.iter().chain(&z.b).all(|m| m.is_zero(0.0)));
    }

    #[test]
    fn com1_holds_and_detects_perturbation() {
        for (l0, l1) in [("1/2", "3/2"), ("0", "3"), ("1", "3"), ("3/2", "7/2")] {
            let g = reconstruct_ab(&build_gn_operators(gn(l0, l1)).unwrap());
            assert!(verify_com1(&g, 1e-10), "{l0},{l1}: {:?}", com1_residuals(&g));
        }
        let mut g = reconstruct_ab(&build_gn_operators(gn("1/2", "3/2")).unwrap());
        g.a[0].set(0, 1, g.a[0].get(0, 1) + re(1e-3));
        assert!(!verify_com1(&g, 1e-10));
    }

    #[test]
    fn vdw_examples() {
        let ops = build_vdw_operators(h("1/2"), h("0")).unwrap();
        assert_eq!(ops.x_plus.get(1, 0), ONE);
        assert!(verify_com2(&ops, 1e-12));
        let ops = build_vdw_operators(h("0"), h("0")).unwrap();
        assert_eq!(ops.x3.dim(), 1);
        assert!(ops.named().iter().all(|(_, m)| m.is_zero(0.0)));
        let ops = build_vdw_operators(h("1/2"), h("1/2")).unwrap();
        assert_eq!(ops.x3.dim(), 4);
        assert!(verify_com2(&ops, 1e-12));
    }

    #[test]
    fn com2_detects_swapped_operator() {
        let mut ops = build_vdw_operators(h("1/2"), h("1/2")).unwrap();
        ops.y_plus = ops.x_plus.clone();
        assert!(!verify_com2(&ops, 1e-12));
    }

    #[test]
    fn conversion_of_two_dimensional_representation() {
        let v = gn_to_vdw(&build_gn_operators(gn("1/2", "3/2")).unwrap());
        assert_eq!((v.label.l, v.label.l_dot), (h("1/2"), h("0")));
        assert!(verify_com2(&v, 1e-12));
        assert_eq!(v.x3.real_spectrum_multiplicities(&[-0.5, 0.5], 1e-12), Some(alloc::vec![1, 1]));
        assert!(v.y3.is_zero(1e-15) && v.y_plus.is_zero(1e-15) && v.y_minus.is_zero(1e-15));
        let z = gn_to_vdw(&build_gn_operators(gn("0", "1")).unwrap());
        assert_eq!(z.label.l, Half::ZERO);
        assert!(z.named().iter().all(|(_, m)| m.is_zero(0.0)));
    }

    #[test]
    fn spintensor_actions() {
        let a = C64::new(2.0, 1.0);
        let g = OperatorMatrix::diagonal(&[a, ONE / a]);
        let t = Spintensor::new(1, 0, alloc::vec![ONE, ONE]).unwrap();
        let u = spintensor_transform(&g, &t).unwrap();
        assert_eq!(u.components[0], a);
        let t = Spintensor::new(0, 1, alloc::vec![ONE, ZERO]).unwrap();
        let u = spintensor_transform(&g, &t).unwrap();
        assert_eq!(u.components[0], a.conj());
        let t = Spintensor::new(1, 1, alloc::vec![ONE, I, -ONE, re(2.0)]).unwrap();
        assert_eq!(spintensor_transform(&OperatorMatrix::identity(2), &t).unwrap(), t);
        assert!(Spintensor::new(2, 0, alloc::vec![ONE; 3]).is_err());
        assert!(spintensor_transform(&OperatorMatrix::identity(3), &t).is_err());
    }
}
