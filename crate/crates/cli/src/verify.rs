//! Invariant suite behind `clifperiod verify`.

use clifperiod_core::classify::{classify, tensor_compose, RingType};
use clifperiod_core::factorize::{karoubi_factorize, CL02, CL11, CL20};
use clifperiod_core::ga::{blade_product, center, involution_via_omega, omega_square, Blade, GradedTensor, Multivector};
use clifperiod_core::lorentz::{
    build_gn_operators, build_vdw_operators, gn_to_vdw, reconstruct_ab, verify_com1, verify_com2, xy_from_ab, GNLabel,
};
use clifperiod_core::matrep::{build_generators, verify_anticommutation};
use clifperiod_core::repsys::{bw_complex_step, bw_real_step, real_clock_walk, real_period_step, ComplexRepLabel, RealRepLabel};
use clifperiod_core::{Half, OperatorMatrix, Signature, C64};
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::table;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type CheckFn = fn(u32) -> (bool, String);

pub const CHECKS: [(&str, CheckFn); 11] = [
    ("table1", check_table),
    ("omega-square", check_omega_square),
    ("center", check_center),
    ("automorphisms", check_automorphisms),
    ("graded-tensor", check_graded_tensor),
    ("karoubi", check_karoubi),
    ("gamma", check_gamma),
    ("gn-commutators", check_gn),
    ("vdw", check_vdw),
    ("cycles", check_cycles),
    ("periodicity", check_periodicity),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs the selected checks (all when `names` is empty) in parallel; results
/// come back in suite order.
pub fn run(names: &[String], nmax: u32) -> Vec<Check> {
    CHECKS
        .par_iter()
        .filter(|(n, _)| names.is_empty() || names.iter().any(|s| s == n))
        .map(|(name, f)| {
            let (passed, detail) = f(nmax);
            Check { name, passed, detail }
        })
        .collect()
}

fn outcome(failures: Vec<String>, total: usize, what: &str) -> (bool, String) {
    if failures.is_empty() {
        (true, format!("{total} {what}"))
    } else {
        let shown: Vec<_> = failures.iter().take(5).cloned().collect();
        (false, format!("{}/{total} {what} failed: {}", failures.len(), shown.join("; ")))
    }
}

fn sigs(nmax: u32) -> impl Iterator<Item = Signature> {
    Signature::all_up_to(nmax)
}

fn check_table(_: u32) -> (bool, String) {
    let (checked, bad) = table::diff(7, 7);
    let failures = bad.iter().map(|m| format!("({},{})", m.p, m.q)).collect();
    outcome(failures, checked, "entries")
}

fn check_omega_square(nmax: u32) -> (bool, String) {
    let list: Vec<_> = sigs(nmax).filter(|s| s.n() >= 1).collect();
    let failures = list
        .iter()
        .filter(|s| {
            let expected = if matches!(s.type_label(), 2 | 3 | 6 | 7) { -1 } else { 1 };
            omega_square(**s) != expected
        })
        .map(|s| s.to_string())
        .collect();
    outcome(failures, list.len(), "signatures")
}

fn brute_center(s: Signature) -> Vec<Blade> {
    Blade::all(s).filter(|a| Blade::all(s).all(|b| blade_product(*a, b, s) == blade_product(b, *a, s))).collect()
}

fn check_center(nmax: u32) -> (bool, String) {
    let list: Vec<_> = sigs(nmax.min(8)).collect();
    let failures = list.iter().filter(|s| center(**s) != brute_center(**s)).map(|s| s.to_string()).collect();
    outcome(failures, list.len(), "signatures")
}

fn check_automorphisms(nmax: u32) -> (bool, String) {
    let mut failures = Vec::new();
    let mut total = 0;
    for s in sigs(nmax.min(8)) {
        for b in Blade::all(s) {
            total += 1;
            let k = b.grade() as i64;
            let x = Multivector::blade(s, b, Rational64::from_integer(1));
            let sign = |e: i64| Rational64::from_integer(if e % 2 == 0 { 1 } else { -1 });
            let ok = x.grade_involution() == x.scaled(&sign(k))
                && x.reversion() == x.scaled(&sign(k * (k - 1) / 2))
                && x.conjugation() == x.scaled(&sign(k * (k + 1) / 2))
                && (s.n() % 2 == 1 || involution_via_omega(&x).ok() == Some(x.grade_involution()));
            if !ok {
                failures.push(format!("{s} {b}"));
            }
        }
    }
    outcome(failures, total, "blades")
}

fn check_graded_tensor(nmax: u32) -> (bool, String) {
    let mut pairs = Vec::new();
    for a in sigs(nmax.min(8)) {
        for b in sigs(nmax.min(8) - a.n()) {
            pairs.push((a, b));
        }
    }
    let failures = pairs
        .par_iter()
        .filter(|(a, b)| !GradedTensor::new(*a, *b).map(|t| t.theta_psi_check()).unwrap_or(false))
        .map(|(a, b)| format!("{a}⊗{b}"))
        .collect();
    outcome(failures, pairs.len(), "pairs")
}

fn check_karoubi(nmax: u32) -> (bool, String) {
    let list: Vec<_> = sigs(nmax).filter(|s| s.n() % 2 == 0).collect();
    let mut failures: Vec<String> =
        list.iter().filter(|s| !karoubi_factorize(**s).map(|f| f.verify()).unwrap_or(false)).map(|s| s.to_string()).collect();
    let quoted = [((1, 3), vec![CL11, CL02]), ((3, 1), vec![CL11, CL20]), ((8, 0), vec![CL20, CL02, CL02, CL20])];
    for ((p, q), expected) in quoted {
        let s = Signature::const_new(p, q);
        if karoubi_factorize(s).map(|f| f.factors) != Ok(expected) {
            failures.push(format!("{s} factor list"));
        }
    }
    outcome(failures, list.len() + 3, "factorizations")
}

fn check_gamma(nmax: u32) -> (bool, String) {
    let list: Vec<_> = sigs(nmax.min(12)).collect();
    let failures = list
        .par_iter()
        .filter(|s| {
            let Ok(g) = build_generators(**s) else { return true };
            let w = g.omega_image();
            let sq = OperatorMatrix::identity(g.dim()).scale(C64::new(f64::from(omega_square(**s)), 0.0));
            let rank_ok = s.n() > 8 || g.faithfulness_rank() == s.blade_count();
            !(verify_anticommutation(&g) && rank_ok && w.matmul(&w) == sq)
        })
        .map(|s| s.to_string())
        .collect();
    outcome(failures, list.len(), "generator sets (rank checked up to n = 8)")
}

pub fn gn_labels(max_dim: usize) -> Vec<GNLabel> {
    let mut out = Vec::new();
    for two_l0 in 0..=6 {
        for gap in 1..=4 {
            let label = GNLabel::new(Half::from_doubled(two_l0), Half::from_doubled(two_l0 + 2 * gap)).expect("valid label");
            if label.dim() <= max_dim {
                out.push(label);
            }
        }
    }
    out
}

fn check_gn(_: u32) -> (bool, String) {
    let labels = gn_labels(64);
    let failures = labels
        .par_iter()
        .filter(|l| !build_gn_operators(**l).map(|o| verify_com1(&reconstruct_ab(&o), 1e-10)).unwrap_or(false))
        .map(|l| format!("({}, {})", l.l0, l.l1))
        .collect();
    outcome(failures, labels.len(), "labels")
}

fn x3_spectrum_ok(x3: &OperatorMatrix, l: Half, l_dot: Half) -> bool {
    let candidates: Vec<f64> = (-l).range_inclusive(l).map(Half::to_f64).collect();
    let mult = l_dot.doubled() as usize + 1;
    x3.real_spectrum_multiplicities(&candidates, 1e-9).is_some_and(|m| m.iter().all(|&k| k == mult))
}

fn check_vdw(_: u32) -> (bool, String) {
    let mut failures = Vec::new();
    let mut total = 0;
    for two_l in 0..64 {
        for two_ld in 0..64 {
            let (l, ld) = (Half::from_doubled(two_l), Half::from_doubled(two_ld));
            if (two_l + 1) * (two_ld + 1) > 64 {
                continue;
            }
            total += 1;
            if !build_vdw_operators(l, ld).map(|o| verify_com2(&o, 1e-12)).unwrap_or(false) {
                failures.push(format!("vdw ({l}, {ld})"));
            }
        }
    }
    for label in gn_labels(64) {
        total += 1;
        let ops = build_gn_operators(label).expect("valid label");
        let v = gn_to_vdw(&ops);
        let (x, y) = xy_from_ab(&reconstruct_ab(&ops));
        let xs = clifperiod_core::lorentz::cartesian(&v.x_plus, &v.x_minus, &v.x3);
        let ys = clifperiod_core::lorentz::cartesian(&v.y_plus, &v.y_minus, &v.y3);
        let sl25 = (0..3).all(|i| xs[i].approx_eq(&x[i], 1e-12) && ys[i].approx_eq(&y[i], 1e-12));
        if !(verify_com2(&v, 1e-12) && x3_spectrum_ok(&v.x3, v.label.l, v.label.l_dot) && sl25) {
            failures.push(format!("gn ({}, {})", label.l0, label.l1));
        }
    }
    outcome(failures, total, "labels")
}

fn check_cycles(_: u32) -> (bool, String) {
    let mut failures = Vec::new();
    let mut c = ComplexRepLabel::new(0, 0);
    let expected = [(1, false), (1, true), (2, false), (2, true), (3, false)];
    for (a, doubled) in expected {
        c = match bw_complex_step(c) {
            Ok(x) => x,
            Err(e) => {
                failures.push(e.to_string());
                break;
            }
        };
        if (c.a, c.b, c.doubled) != (a, 0, doubled) {
            failures.push(format!("complex step gave {c}"));
        }
    }
    let names = [
        "R^{1/2}_0",
        "R^{1/2}_0 ∪ R^{1/2}_0",
        "H^{1}_6",
        "H^{1}_6 ∪ H^{1}_6",
        "H^{3/2}_4",
        "H^{3/2}_4 ∪ H^{3/2}_4",
        "R^{2}_2",
        "R^{2}_2 ∪ R^{2}_2",
        "R^{5/2}_0",
    ];
    match real_clock_walk(9) {
        Ok(walk) => {
            let got: Vec<String> = walk.iter().map(|s| s.label.to_string()).collect();
            if got != names {
                failures.push(format!("real walk {got:?}"));
            }
            if (walk[8].hour.h, walk[8].hour.r) != (0, 1) {
                failures.push("new cycle not at h=0, r=1".into());
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    outcome(failures, 2, "cycles")
}

fn check_periodicity(_: u32) -> (bool, String) {
    let mut failures = Vec::new();
    let base: Vec<_> = Signature::all_up_to(4).collect();
    for s in &base {
        let (a, b) = (classify(*s), classify(Signature::const_new(s.p() + 8, s.q())));
        if a.ring != b.ring || a.simple != b.simple || b.matrix_size != 16 * a.matrix_size {
            failures.push(s.to_string());
        }
    }
    let h = classify(CL02);
    match tensor_compose(&h, &h) {
        Some(m) if m.ring == RingType::R && m.size == 4 => {}
        other => failures.push(format!("H⊗H gave {other:?}")),
    }
    let start = RealRepLabel::new(clifperiod_core::repsys::RealClass::R0, Half::HALF);
    let mut x = start;
    for k in 0..16u8 {
        match bw_real_step(x, (k + 1) % 8) {
            Ok(y) => x = y,
            Err(e) => {
                failures.push(e.to_string());
                break;
            }
        }
    }
    if x != real_period_step(real_period_step(start)) {
        failures.push(format!("16 ticks gave {x}"));
    }
    outcome(failures, base.len() + 2, "checks")
}
