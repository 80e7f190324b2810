//! Explicit gamma matrices for `Cl(p,q)`.
//!
//! Even `n`: Kronecker chain over the peeled two-generator blocks. A block
//! `F` contributes its two seeds `s ⊗ I`; the remaining generators become
//! `Ω_F ⊗ g`, where `g` comes from the rest of the form, flipped when
//! `Ω_F² = −1`. Odd `n`: block-diagonal doubling of the truncated algebra
//! with the last generator `diag(cΩ, −cΩ)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::factorize::{peel, truncate_last, CL02, CL11, CL20};
use crate::ga::{omega_square, Blade, Signature};
use crate::matrix::{rank_of_vectors, OperatorMatrix, C64, I, ONE, ZERO};

/// Largest `p + q` accepted by [`build_generators`].
pub const MAX_MATREP_GENERATORS: u32 = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    pub sig: Signature,
    /// `gammas[i]` represents `e_{i+1}`.
    pub gammas: Vec<OperatorMatrix>,
    pub reducible: bool,
}

struct Chain {
    dim: usize,
    pos: Vec<OperatorMatrix>,
    neg: Vec<OperatorMatrix>,
}

fn seeds(block: Signature) -> (Vec<OperatorMatrix>, Vec<OperatorMatrix>) {
    let sx = OperatorMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]]);
    let sz = OperatorMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]]);
    let j = OperatorMatrix::from_rows([[ZERO, ONE], [-ONE, ZERO]]);
    let ix = OperatorMatrix::from_rows([[ZERO, I], [I, ZERO]]);
    if block == CL11 {
        (vec![sx], vec![j])
    } else if block == CL20 {
        (vec![sx, sz], vec![])
    } else {
        debug_assert_eq!(block, CL02);
        (vec![], vec![ix, j])
    }
}

fn even_chain(sig: Signature) -> Chain {
    let peels = peel(sig);
    let mut chain = Chain { dim: 1, pos: Vec::new(), neg: Vec::new() };
    // Build from the innermost block outwards.
    for pl in peels.iter().rev() {
        let (sp, sn) = seeds(pl.factor);
        let omega = sp.iter().chain(&sn).fold(OperatorMatrix::identity(2), |acc, s| acc.matmul(s));
        let id = OperatorMatrix::identity(chain.dim);
        let (rest_pos, rest_neg) = if pl.flips_rest { (chain.neg, chain.pos) } else { (chain.pos, chain.neg) };
        let lift = |g: &OperatorMatrix| omega.kron(g);
        chain = Chain {
            dim: chain.dim * 2,
            pos: sp.iter().map(|s| s.kron(&id)).chain(rest_pos.iter().map(lift)).collect(),
            neg: sn.iter().map(|s| s.kron(&id)).chain(rest_neg.iter().map(lift)).collect(),
        };
    }
    chain
}

fn product(ms: &[OperatorMatrix], dim: usize) -> OperatorMatrix {
    ms.iter().fold(OperatorMatrix::identity(dim), |acc, m| acc.matmul(m))
}

pub fn build_generators(sig: Signature) -> Result<GeneratorSet> {
    if sig.n() > MAX_MATREP_GENERATORS {
        return Err(Error::SignatureTooLarge { p: sig.p(), q: sig.q(), max: MAX_MATREP_GENERATORS });
    }
    let note = format!("{sig} gamma matrices, dim 2^{}", sig.n().div_ceil(2));
    if sig.n().is_multiple_of(2) {
        let c = even_chain(sig);
        let gammas = c.pos.into_iter().chain(c.neg).map(|g| g.with_basis_note(note.clone())).collect();
        return Ok(GeneratorSet { sig, gammas, reducible: false });
    }
    let base = truncate_last(sig)?;
    let c = even_chain(base);
    let inner: Vec<OperatorMatrix> = c.pos.into_iter().chain(c.neg).collect();
    let omega = product(&inner, c.dim);
    let omega_sq = omega_square(base);
    let last_sq = sig.generator_square(sig.n());
    let k = if omega_sq == last_sq { ONE } else { I };
    let last = omega.scale(k).direct_sum(&omega.scale(-k));
    let gammas = inner
        .iter()
        .map(|g| g.direct_sum(g))
        .chain(core::iter::once(last))
        .map(|g| g.with_basis_note(note.clone()))
        .collect();
    Ok(GeneratorSet { sig, gammas, reducible: true })
}

impl GeneratorSet {
    pub fn dim(&self) -> usize {
        self.gammas.first().map_or(1, OperatorMatrix::dim)
    }

    /// Image of a blade: the ordered product of its generators' gammas.
    pub fn blade_image(&self, blade: Blade) -> OperatorMatrix {
        blade
            .indices()
            .fold(OperatorMatrix::identity(self.dim()), |acc, i| acc.matmul(&self.gammas[i as usize - 1]))
    }

    /// Images of all `2^(p+q)` blades.
    pub fn blade_images(&self) -> BTreeMap<Blade, OperatorMatrix> {
        Blade::all(self.sig).map(|b| (b, self.blade_image(b))).collect()
    }

    /// Dimension of the span of all blade images.
    pub fn faithfulness_rank(&self) -> usize {
        let vectors: Vec<Vec<C64>> = Blade::all(self.sig).map(|b| self.blade_image(b).entries().to_vec()).collect();
        rank_of_vectors(&vectors, 1e-9)
    }

    pub fn omega_image(&self) -> OperatorMatrix {
        product(&self.gammas, self.dim())
    }
}

/// `γ_i γ_j + γ_j γ_i = 2 η_ij I`, checked exactly.
pub fn verify_anticommutation(g: &GeneratorSet) -> bool {
    let n = g.sig.n() as usize;
    if g.gammas.len() != n {
        return false;
    }
    let dim = g.dim();
    if g.gammas.iter().any(|m| m.dim() != dim) {
        return false;
    }
    let id = OperatorMatrix::identity(dim);
    for i in 0..n {
        for j in i..n {
            let expected = if i == j {
                id.scale(C64::new(2.0 * f64::from(g.sig.generator_square(i as u32 + 1)), 0.0))
            } else {
                OperatorMatrix::zeros(dim)
            };
            if g.gammas[i].anticommutator(&g.gammas[j]).entries() != expected.entries() {
                return false;
            }
        }
    }
    true
}
