//! Dense square complex matrices.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Square matrix, row-major, with a note describing the basis ordering.
/// Equality ignores the note.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<C64>,
    basis_note: String,
}

impl PartialEq for OperatorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        OperatorMatrix { dim, entries: vec![ZERO; dim * dim], basis_note: String::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = ONE;
        }
        m
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, *v);
        }
        m
    }

    pub fn from_entries(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::ShapeMismatch { expected: dim * dim, got: entries.len() });
        }
        Ok(OperatorMatrix { dim, entries, basis_note: String::new() })
    }

    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        OperatorMatrix { dim: N, entries: rows.iter().flatten().copied().collect(), basis_note: String::new() }
    }

    pub fn with_basis_note(mut self, note: impl Into<String>) -> Self {
        self.basis_note = note.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn basis_note(&self) -> &str {
        &self.basis_note
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.entries[row * self.dim + col] = value;
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        OperatorMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(*a, *b)).collect(),
            basis_note: self.basis_note.clone(),
        }
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        OperatorMatrix { dim: self.dim, entries: self.entries.iter().map(|a| f(*a)).collect(), basis_note: self.basis_note.clone() }
    }

    pub fn scale(&self, k: C64) -> Self {
        self.map(|a| a * k)
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|a| a.conj())
    }

    pub fn transpose(&self) -> Self {
        let mut t = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Kronecker product; `self` indexes the most significant block.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let n = a * b;
        let mut m = Self::zeros(n);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x == ZERO {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        m.entries[(i * b + k) * n + j * b + l] = x * other.get(k, l);
                    }
                }
            }
        }
        m
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let mut m = Self::zeros(n);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.dim {
            for c in 0..other.dim {
                m.set(self.dim + r, self.dim + c, other.get(r, c));
            }
        }
        m
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.entries[i * n + k];
                if x == ZERO {
                    continue;
                }
                for j in 0..n {
                    m.entries[i * n + j] += x * other.entries[k * n + j];
                }
            }
        }
        m.basis_note = self.basis_note.clone();
        m
    }

    pub fn try_matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::ShapeMismatch { expected: self.dim, got: other.dim });
        }
        Ok(self.matmul(other))
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    /// `self·other + other·self`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.matmul(other) + &other.matmul(self)
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        libm::sqrt(self.entries.iter().map(|a| a.norm_sqr()).fold(0.0, f64::max))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c) == ZERO))
    }

    pub fn rank(&self, tol: f64) -> usize {
        let rows: Vec<Vec<C64>> = self.entries.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect();
        rank_of_vectors(&rows, tol)
    }

    /// Multiplicity of each candidate eigenvalue.
    ///
    /// Returns `None` unless `prod (M − λ_i)` vanishes within `tol`, i.e. unless
    /// the candidates contain the whole spectrum and `M` is diagonalizable.
    /// Multiplicities are traces of the Lagrange projectors.
    pub fn real_spectrum_multiplicities(&self, candidates: &[f64], tol: f64) -> Option<Vec<usize>> {
        let n = self.dim;
        let id = Self::identity(n);
        let shifted: Vec<Self> = candidates.iter().map(|&l| self - &id.scale(C64::new(l, 0.0))).collect();
        let annihilator = shifted.iter().fold(id.clone(), |acc, s| acc.matmul(s));
        if !annihilator.is_zero(tol) {
            return None;
        }
        let mut out = Vec::with_capacity(candidates.len());
        for (i, li) in candidates.iter().enumerate() {
            let mut proj = id.clone();
            for (j, lj) in candidates.iter().enumerate() {
                if i != j {
                    proj = proj.matmul(&shifted[j].scale(C64::new(1.0 / (li - lj), 0.0)));
                }
            }
            let t = proj.trace();
            if libm::fabs(t.im) > 1e-6 || libm::fabs(t.re - libm::round(t.re)) > 1e-6 || t.re < -0.5 {
                return None;
            }
            out.push(libm::round(t.re) as usize);
        }
        Some(out)
    }
}

/// Dimension of the complex span of `vectors`, by Gaussian elimination with
/// partial pivoting.
pub fn rank_of_vectors(vectors: &[Vec<C64>], tol: f64) -> usize {
    let mut rows: Vec<Vec<C64>> = vectors.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        if rank == rows.len() {
            break;
        }
        let (pivot, best) = rows[rank..]
            .iter()
            .enumerate()
            .map(|(i, r)| (i + rank, r[col].norm_sqr()))
            .fold((rank, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= tol * tol {
            continue;
        }
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        let head = rows[rank].clone();
        for r in rows.iter_mut().skip(rank + 1) {
            let f = r[col] / p;
            if f == ZERO {
                continue;
            }
            for (x, h) in r.iter_mut().zip(&head).skip(col) {
                *x -= f * h;
            }
        }
        rank += 1;
    }
    rank
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        self.map(|a| -a)
    }
}

impl fmt::Display for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            f.write_str("[")?;
            for c in 0..self.dim {
                if c > 0 {
                    f.write_str(", ")?;
                }
                let z = self.get(r, c);
                match (z.re == 0.0, z.im == 0.0) {
                    (_, true) => write!(f, "{}", z.re)?,
                    (true, false) => write!(f, "{}i", z.im)?,
                    _ => write!(f, "{}{:+}i", z.re, z.im)?,
                }
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn kron_of_paulis() {
        let x = OperatorMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]]);
        let z = OperatorMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]]);
        let xz = x.kron(&z);
        assert_eq!(xz.dim(), 4);
        assert_eq!(xz.get(0, 2), ONE);
        assert_eq!(xz.get(1, 3), -ONE);
        assert_eq!(xz.get(0, 0), ZERO);
        // (A⊗B)(C⊗D) = AC⊗BD
        assert_eq!(&xz * &xz, x.matmul(&x).kron(&z.matmul(&z)));
    }

    #[test]
    fn commutator_of_paulis() {
        let x = OperatorMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]]);
        let y = OperatorMatrix::from_rows([[ZERO, -I], [I, ZERO]]);
        let z = OperatorMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]]);
        assert_eq!(x.commutator(&y), z.scale(c(2.0) * I));
        assert!(x.anticommutator(&y).is_zero(0.0));
    }

    #[test]
    fn ranks() {
        let m = OperatorMatrix::from_rows([[ONE, c(2.0)], [c(2.0), c(4.0)]]);
        assert_eq!(m.rank(1e-12), 1);
        assert_eq!(OperatorMatrix::identity(5).rank(1e-12), 5);
        assert_eq!(OperatorMatrix::zeros(3).rank(1e-12), 0);
        let v = vec![vec![ONE, I], vec![I, -ONE], vec![ONE, ZERO]];
        assert_eq!(rank_of_vectors(&v, 1e-12), 2);
    }

    #[test]
    fn spectrum_multiplicities() {
        let m = OperatorMatrix::diagonal(&[c(-0.5), c(0.5), c(0.5)]);
        assert_eq!(m.real_spectrum_multiplicities(&[-0.5, 0.5], 1e-12), Some(vec![1, 2]));
        assert_eq!(m.real_spectrum_multiplicities(&[0.5], 1e-12), None);
        // non-diagonal but diagonalizable
        let x = OperatorMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]]);
        assert_eq!(x.real_spectrum_multiplicities(&[-1.0, 1.0], 1e-12), Some(vec![1, 1]));
    }

    #[test]
    fn direct_sum_and_shape_errors() {
        let d = OperatorMatrix::identity(1).direct_sum(&OperatorMatrix::identity(1).scale(-ONE));
        assert_eq!(d, OperatorMatrix::diagonal(&[ONE, -ONE]));
        assert!(OperatorMatrix::from_entries(2, vec![ONE; 3]).is_err());
        assert!(OperatorMatrix::identity(2).try_matmul(&OperatorMatrix::identity(3)).is_err());
    }
}
