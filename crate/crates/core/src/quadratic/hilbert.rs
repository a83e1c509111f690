//! Matrix Hilbert series over the simple `A_0`-modules and the numerical
//! Koszulity test.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Subspace};
use crate::partitions::Label;
use crate::symgroup::{label_projector, GroupAlgebraElement};

use super::presentation::{ambient_of, step_down, word_idempotent, Index};
use super::{quadratic_dual, QuadraticAlgebra};

/// Multiplicities `(ν, λ) ↦ H[ν, λ]` in one graded piece.
pub type HilbertBlock = BTreeMap<(Label, Label), u64>;

/// `entries[(top, k)][(ν, λ)] = dim Y_ν · A_k · Y_λ`, where `λ` labels a simple
/// module at `top` and `ν` one at the index `k` steps below.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    entries: BTreeMap<(Index, usize), HilbertBlock>,
}

impl HilbertSeries {
    pub fn entry(&self, top: Index, k: usize, nu: &Label, lambda: &Label) -> u64 {
        self.entries
            .get(&(top, k))
            .and_then(|m| m.get(&(nu.clone(), lambda.clone())))
            .copied()
            .unwrap_or(0)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&(Index, usize), &HilbertBlock)> {
        self.entries.iter()
    }
}

pub fn hilbert_series(a: &QuadraticAlgebra) -> Result<HilbertSeries> {
    let g = a.g();
    let entries = a
        .components()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|c| {
            let top_amb = ambient_of(g, c.top);
            let bottom_amb = ambient_of(g, c.bottom);
            let e = word_idempotent(g, c.top, c.degree);
            let ix = top_amb.index();
            let mut block = BTreeMap::new();
            for nu in bottom_amb.irreps() {
                let left = &label_projector(&nu, bottom_amb).embed(top_amb) * &e;
                let left_v = left.to_vector();
                let shifted: Vec<SparseVec> = ix
                    .elements()
                    .iter()
                    .map(|h| GroupAlgebraElement::right_multiply_vector(top_amb, &left_v, h))
                    .collect();
                for lambda in top_amb.irreps() {
                    let y = label_projector(&lambda, top_amb);
                    let vecs = shifted
                        .iter()
                        .map(|v| (&GroupAlgebraElement::from_vector(top_amb, v) * &y).to_vector())
                        .chain(c.ideal().basis().iter().cloned());
                    let d = Subspace::span(top_amb.order(), vecs).dim() - c.ideal().dim();
                    if d > 0 {
                        block.insert((nu.clone(), lambda), d as u64);
                    }
                }
            }
            ((c.top, c.degree), block)
        })
        .collect();
    Ok(HilbertSeries { entries })
}

/// Result of the numerical Koszulity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulReport {
    pub holds: bool,
    /// Depth actually checked (capped at the algebra's top degree).
    pub depth: usize,
    /// `(top, k, ν, λ, value)` for every nonzero entry that should vanish.
    pub failures: Vec<(Index, usize, Label, Label, i64)>,
}

/// Checks `Σ_j (−1)^j H_A[k−j] · H_{A^!}[j] = δ_{k,0}` blockwise for `k ≤ depth`.
///
/// Both series are oriented the same way (bottom label × top label), which is
/// the orientation of the Koszul complex `A ⊗_{A_0} (A^!)^*`: the dual of
/// `A^!_j` is the intersection of the relation positions inside the words,
/// and it has the multiplicities of `A^!_j` because the trace form is
/// invariant and the simple modules are self-dual.
pub fn hilbert_koszul_test(a: &QuadraticAlgebra, depth: usize) -> Result<KoszulReport> {
    if depth < 2 {
        return Err(Error::IndexOutOfRange(format!("Koszul test needs depth ≥ 2, got {depth}")));
    }
    let g = a.g();
    let depth = depth.min(a.top_degree());
    let ha = hilbert_series(a)?;
    let hd = hilbert_series(&quadratic_dual(a)?)?;
    let mut failures = Vec::new();
    for &top in a.base.indices() {
        let top_amb = ambient_of(g, top);
        for k in 0..=depth {
            let Some(bottom) = step_down(g, top, k) else { break };
            for nu in ambient_of(g, bottom).irreps() {
                for lambda in top_amb.irreps() {
                    let mut s: i64 = 0;
                    for j in 0..=k {
                        let mid = step_down(g, top, j).expect("between top and bottom");
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        for kappa in ambient_of(g, mid).irreps() {
                            let x = ha.entry(mid, k - j, &nu, &kappa) * hd.entry(top, j, &kappa, &lambda);
                            s += sign * x as i64;
                        }
                    }
                    let expect = i64::from(k == 0 && nu == lambda);
                    if s != expect {
                        failures.push((top, k, nu.clone(), lambda.clone(), s - expect));
                    }
                }
            }
        }
    }
    Ok(KoszulReport { holds: failures.is_empty(), depth, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::build_algebra;
    use crate::LieType;

    #[test]
    fn degree_zero_is_identity() {
        let a = build_algebra(LieType::Sl, 2).unwrap();
        let h = hilbert_series(&a).unwrap();
        for ((top, k), block) in h.blocks() {
            if *k == 0 {
                assert!(block.iter().all(|((nu, la), v)| nu == la && *v == 1), "{top:?}");
                assert_eq!(block.len(), ambient_of(LieType::Sl, *top).irreps().len());
            }
        }
    }

    #[test]
    fn entries_reassemble_dimensions() {
        // Σ_{ν,λ} dim ν · dim λ · H[ν,λ] = dim A_k
        for g in [LieType::Sl, LieType::O] {
            let a = build_algebra(g, 4).unwrap();
            let h = hilbert_series(&a).unwrap();
            for c in a.components() {
                let (ta, ba) = (ambient_of(g, c.top), ambient_of(g, c.bottom));
                let total: u64 = ba
                    .irreps()
                    .iter()
                    .flat_map(|nu| ta.irreps().into_iter().map(move |la| (nu.clone(), la)))
                    .map(|(nu, la)| ba.irrep_dim(&nu) * ta.irrep_dim(&la) * h.entry(c.top, c.degree, &nu, &la))
                    .sum();
                assert_eq!(total as usize, c.dim(), "{g} {:?} k={}", c.top, c.degree);
            }
        }
    }

    #[test]
    fn koszul_small() {
        let a = build_algebra(LieType::Sl, 2).unwrap();
        let rep = hilbert_koszul_test(&a, 2).unwrap();
        assert!(rep.holds, "{rep:?}");
        assert!(hilbert_koszul_test(&a, 1).is_err());
    }
}
