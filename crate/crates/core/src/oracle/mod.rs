//! Exact finite-rank model: `gl(n)`, `o(2n)` and `sp(2n)` acting on tensor
//! spaces, with contraction and place-permutation operators.
//!
//! Everything here is brute force on coordinates. Weight spaces are the unit
//! of work: every operator in the module preserves weights, so kernels and
//! ranks are computed one weight block at a time.

mod maps;
mod socle;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{RootSystem, Weight};
use crate::LieType;

pub use maps::{
    algebra_action, contraction_phi, contraction_psi, diagram_evaluations, linear_relations, permutation_action, stable_hom_basis,
    verify_relation, EquivariantMap,
};
pub use socle::{
    highest_weight_layers, schur_weyl_check, socle_filtration, tensor_with_natural, SocleFiltration, TensorWithNatural,
};
pub use crate::weyl::{decompose_layer, WeightDecomposition};

/// `(row, col, coefficient)` triples.
pub type SparseMatrix = Vec<(usize, usize, i64)>;

/// `g_n` together with its natural module and invariant form.
///
/// For `sl` the rank is the dimension of `V_n`; for `o` and `sp` it is `n`
/// with `dim V_n = 2n`, basis `e_0 .. e_{2n-1}` and `e_i` paired with
/// `e_{2n-1-i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteRankContext {
    pub g: LieType,
    pub n: usize,
}

impl FiniteRankContext {
    pub fn new(g: LieType, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InsufficientRank { rank: 0, reason: "rank must be positive".into() });
        }
        Ok(Self { g, n })
    }

    pub fn dim_v(&self) -> usize {
        match self.g {
            LieType::Sl => self.n,
            _ => 2 * self.n,
        }
    }

    pub fn roots(&self) -> RootSystem {
        RootSystem::new(self.g, self.n)
    }

    pub fn partner(&self, a: usize) -> usize {
        2 * self.n - 1 - a
    }

    /// `⟨e_a, e_b⟩`, zero unless `b` is the partner of `a`.
    pub fn form(&self, a: usize, b: usize) -> i64 {
        match self.g {
            LieType::Sl => i64::from(a == b),
            LieType::O => i64::from(b == self.partner(a)),
            LieType::Sp => {
                if b != self.partner(a) {
                    0
                } else if a < self.n {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Sign `s_a` with `⟨e_a, e_{a'}⟩ = s_a`.
    fn form_sign(&self, a: usize) -> i64 {
        self.form(a, self.partner(a))
    }

    /// Adds the weight of the basis vector `a` (dual if `!covariant`) to `w`.
    #[inline]
    fn add_weight(&self, w: &mut [i64], a: usize, covariant: bool) {
        match self.g {
            LieType::Sl => w[a] += if covariant { 1 } else { -1 },
            _ => {
                if a < self.n {
                    w[a] += 1;
                } else {
                    w[self.partner(a)] -= 1;
                }
            }
        }
    }

    /// Root vectors for the simple roots and their negatives, as sparse
    /// matrices on `V_n`, each flagged `true` when raising.
    pub fn chevalley_generators(&self) -> Vec<(bool, SparseMatrix)> {
        let n = self.n;
        let mut simple: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        match self.g {
            LieType::Sl => {}
            LieType::Sp => simple.push((n - 1, n)),
            LieType::O => {
                if n >= 2 {
                    simple.push((n - 2, n));
                }
            }
        }
        let mut out = Vec::new();
        for (a, b) in simple {
            out.push((true, self.root_vector(a, b)));
            out.push((false, self.root_vector(b, a)));
        }
        out
    }

    /// `E_ab` for `sl`; `E_ab − s_a s_b E_{b'a'}` for `o` and `sp`.
    fn root_vector(&self, a: usize, b: usize) -> Vec<(usize, usize, i64)> {
        match self.g {
            LieType::Sl => vec![(a, b, 1)],
            _ => {
                let mut m: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                *m.entry((a, b)).or_default() += 1;
                *m.entry((self.partner(b), self.partner(a))).or_default() -= self.form_sign(a) * self.form_sign(b);
                m.into_iter().filter(|(_, c)| *c != 0).map(|((r, c), v)| (r, c, v)).collect()
            }
        }
    }
}

/// `T^{p,q} = V^{⊗p} ⊗ V_*^{⊗q}` (with `q = 0` for `o` and `sp`).
///
/// Basis vectors are index tuples stored as mixed-radix codes, most
/// significant digit first; positions `0..p` are covariant and `p..p+q`
/// contravariant.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    ctx: FiniteRankContext,
    p: usize,
    q: usize,
    buckets: Arc<OnceLock<BTreeMap<Weight, Vec<usize>>>>,
}

impl PartialEq for TensorSpace {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.p == other.p && self.q == other.q
    }
}

impl Eq for TensorSpace {}

/// Largest tensor space the oracle agrees to enumerate.
pub const MAX_TENSOR_DIM: usize = 1 << 24;

impl TensorSpace {
    pub fn new(ctx: FiniteRankContext, p: usize, q: usize) -> Result<Self> {
        if ctx.g != LieType::Sl && q != 0 {
            return Err(Error::WrongType { expected: "sl", got: ctx.g });
        }
        let dim = (ctx.dim_v() as u128).pow((p + q) as u32);
        if dim > MAX_TENSOR_DIM as u128 {
            return Err(Error::Budget(format!("T^{{{p},{q}}} at rank {} has dimension {dim}", ctx.n)));
        }
        Ok(Self { ctx, p, q, buckets: Arc::new(OnceLock::new()) })
    }

    pub fn context(&self) -> FiniteRankContext {
        self.ctx
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.p + self.q
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim_v().pow(self.degree() as u32)
    }

    #[inline]
    pub fn decode(&self, mut code: usize, digits: &mut [usize]) {
        let d = self.ctx.dim_v();
        for slot in digits.iter_mut().rev() {
            *slot = code % d;
            code /= d;
        }
    }

    #[inline]
    pub fn encode(&self, digits: &[usize]) -> usize {
        let d = self.ctx.dim_v();
        digits.iter().fold(0, |acc, &x| acc * d + x)
    }

    pub fn digits(&self, code: usize) -> Vec<usize> {
        let mut v = vec![0; self.degree()];
        self.decode(code, &mut v);
        v
    }

    pub fn weight_of_digits(&self, digits: &[usize]) -> Weight {
        let mut w = vec![0; self.ctx.n];
        for (pos, &a) in digits.iter().enumerate() {
            self.ctx.add_weight(&mut w, a, pos < self.p);
        }
        w
    }

    pub fn weight(&self, code: usize) -> Weight {
        self.weight_of_digits(&self.digits(code))
    }

    /// All basis codes grouped by weight.
    pub fn buckets(&self) -> &BTreeMap<Weight, Vec<usize>> {
        self.buckets.get_or_init(|| {
            let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
            let mut digits = vec![0; self.degree()];
            for code in 0..self.dim() {
                self.decode(code, &mut digits);
                out.entry(self.weight_of_digits(&digits)).or_default().push(code);
            }
            out
        })
    }

    /// Basis codes of the weight space `w`, in increasing order.
    pub fn weight_basis(&self, w: &[i64]) -> &[usize] {
        self.buckets().get(w).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dominant_weights(&self) -> Vec<Weight> {
        let roots = self.ctx.roots();
        self.buckets().keys().filter(|w| roots.is_dominant(w)).cloned().collect()
    }

    /// Formal character of the whole space.
    pub fn character(&self) -> WeightDecomposition {
        let mut w = WeightDecomposition::new(self.ctx.roots());
        for (k, v) in self.buckets() {
            if self.ctx.roots().is_dominant(k) {
                w.add(k.clone(), v.len() as u64);
            }
        }
        w
    }
}

impl std::fmt::Display for TensorSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.ctx.g {
            LieType::Sl => write!(f, "T^{{{},{}}}(gl_{})", self.p, self.q, self.ctx.n),
            LieType::O => write!(f, "T^{}(o_{})", self.p, 2 * self.ctx.n),
            LieType::Sp => write!(f, "T^{}(sp_{})", self.p, 2 * self.ctx.n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        let o = FiniteRankContext::new(LieType::O, 2).unwrap();
        let sp = FiniteRankContext::new(LieType::Sp, 2).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(o.form(a, b), o.form(b, a));
                assert_eq!(sp.form(a, b), -sp.form(b, a));
            }
            assert_eq!(o.form(a, 3 - a), 1);
        }
    }

    #[test]
    fn generators_preserve_form() {
        for g in [LieType::O, LieType::Sp] {
            for n in 1..=4 {
                let ctx = FiniteRankContext::new(g, n).unwrap();
                let d = ctx.dim_v();
                for (_, x) in ctx.chevalley_generators() {
                    let mut m = vec![vec![0i64; d]; d];
                    for (r, c, v) in x {
                        m[r][c] += v;
                    }
                    // ⟨Xu, v⟩ + ⟨u, Xv⟩ = 0 on basis vectors
                    for u in 0..d {
                        for v in 0..d {
                            let s: i64 = (0..d).map(|k| m[k][u] * ctx.form(k, v) + m[k][v] * ctx.form(u, k)).sum();
                            assert_eq!(s, 0, "{g} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn space_dimensions_and_weights() {
        let ctx = FiniteRankContext::new(LieType::Sl, 3).unwrap();
        let t = TensorSpace::new(ctx, 1, 1).unwrap();
        assert_eq!(t.dim(), 9);
        assert_eq!(t.weight_basis(&[0, 0, 0]).len(), 3);
        assert_eq!(t.character().total(), 9);
        let o = TensorSpace::new(FiniteRankContext::new(LieType::O, 2).unwrap(), 2, 0).unwrap();
        assert_eq!(o.dim(), 16);
        assert_eq!(o.character().total(), 16);
        assert!(TensorSpace::new(FiniteRankContext::new(LieType::O, 2).unwrap(), 1, 1).is_err());
        let digits = vec![2, 0];
        let code = o.encode(&digits);
        assert_eq!(o.digits(code), digits);
        // e_2 has weight -ε_1 and e_0 weight +ε_0
        assert_eq!(o.weight(code), vec![1, -1]);
    }
}
