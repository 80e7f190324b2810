//! JSON documents written by the command-line tool.

use clifperiod_core::{OperatorMatrix, C64};
use serde::{Deserialize, Serialize};

/// `{ "dim": n, "entries": [[re, im], ...], "basis": "..." }`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
    pub basis: String,
}

impl From<&OperatorMatrix> for MatrixJson {
    fn from(m: &OperatorMatrix) -> Self {
        MatrixJson {
            dim: m.dim(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
            basis: m.basis_note().to_string(),
        }
    }
}

impl TryFrom<&MatrixJson> for OperatorMatrix {
    type Error = clifperiod_core::Error;

    fn try_from(j: &MatrixJson) -> Result<Self, Self::Error> {
        let entries = j.entries.iter().map(|[re, im]| C64::new(*re, *im)).collect();
        Ok(OperatorMatrix::from_entries(j.dim, entries)?.with_basis_note(j.basis.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignatureJson {
    pub p: u32,
    pub q: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaDoc {
    pub signature: SignatureJson,
    pub reducible: bool,
    pub anticommutation: bool,
    pub faithfulness_rank: Option<usize>,
    pub gammas: Vec<MatrixJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub relation: String,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepDoc {
    /// `"gn"` or `"vdw"`.
    pub basis: String,
    /// `[l0, l1]` or `[l, ldot]` as strings like `"3/2"`.
    pub label: [String; 2],
    pub dim: usize,
    pub operators: Vec<NamedMatrix>,
    pub residuals: Vec<Residual>,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn residuals(list: &[(&str, f64)]) -> Vec<Residual> {
    list.iter().map(|(n, r)| Residual { relation: n.to_string(), residual: *r }).collect()
}

pub fn named(list: &[(&str, &OperatorMatrix)]) -> Vec<NamedMatrix> {
    list.iter().map(|(n, m)| NamedMatrix { name: n.to_string(), matrix: (*m).into() }).collect()
}
