use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{FiniteRankContext, TensorSpace};
use crate::error::{Error, Result};
use crate::linalg::{kernel, SparseVec, Subspace};
use crate::partitions::{BiPartition, Label, Partition};
use crate::symgroup::{label_projector, Ambient, GroupAlgebraElement};
use crate::weyl::{decompose_layer, label_to_weight, RootSystem, Weight, WeightDecomposition};
use crate::LieType;

/// A set of disjoint contraction pairs, as slot indices of the tensor.
type Matching = Vec<(usize, usize)>;

fn matchings(space: &TensorSpace, size: usize) -> Vec<Matching> {
    let (p, q) = (space.p(), space.q());
    let mut out = Vec::new();
    match space.context().g {
        LieType::Sl => {
            fn rec(p: usize, q: usize, start: usize, size: usize, used: &mut Vec<bool>, cur: &mut Matching, out: &mut Vec<Matching>) {
                if cur.len() == size {
                    out.push(cur.clone());
                    return;
                }
                for i in start..p {
                    for j in 0..q {
                        if !used[j] {
                            used[j] = true;
                            cur.push((i, p + j));
                            rec(p, q, i + 1, size, used, cur, out);
                            cur.pop();
                            used[j] = false;
                        }
                    }
                }
            }
            rec(p, q, 0, size, &mut vec![false; q], &mut Vec::new(), &mut out);
        }
        _ => {
            fn rec(p: usize, size: usize, used: &mut Vec<bool>, cur: &mut Matching, out: &mut Vec<Matching>) {
                if cur.len() == size {
                    out.push(cur.clone());
                    return;
                }
                // Smallest free slot not below the last pair's first slot keeps pairs ordered.
                let from = cur.last().map_or(0, |&(a, _)| a + 1);
                for a in from..p {
                    if used[a] {
                        continue;
                    }
                    used[a] = true;
                    for b in a + 1..p {
                        if !used[b] {
                            used[b] = true;
                            cur.push((a, b));
                            rec(p, size, used, cur, out);
                            cur.pop();
                            used[b] = false;
                        }
                    }
                    used[a] = false;
                }
            }
            rec(p, size, &mut vec![false; p], &mut Vec::new(), &mut out);
        }
    }
    out
}

fn max_layers(space: &TensorSpace) -> usize {
    match space.context().g {
        LieType::Sl => space.p().min(space.q()),
        _ => space.p() / 2,
    }
}

/// Joint kernel of all contractions of `size` disjoint pairs, on one weight
/// space, returned as vectors of global basis codes.
fn contraction_kernel(space: &TensorSpace, w: &[i64], size: usize) -> Vec<SparseVec> {
    let basis = space.weight_basis(w);
    if size == 0 || size > max_layers(space) {
        return basis.iter().map(|&c| SparseVec::unit(c)).collect();
    }
    let ctx = space.context();
    let ms = matchings(space, size);
    let rest_len = space.degree() - 2 * size;
    let d = ctx.dim_v();
    let target_dim = d.pow(rest_len as u32);
    let mut digits = vec![0; space.degree()];
    let images: Vec<SparseVec> = basis
        .iter()
        .map(|&code| {
            space.decode(code, &mut digits);
            let mut pairs = Vec::new();
            for (mi, m) in ms.iter().enumerate() {
                let mut v = 1;
                let mut drop = vec![false; digits.len()];
                for &(a, b) in m {
                    v *= ctx.form(digits[a], digits[b]);
                    drop[a] = true;
                    drop[b] = true;
                }
                if v != 0 {
                    let t = digits.iter().zip(&drop).filter(|(_, x)| !**x).fold(0, |acc, (x, _)| acc * d + x);
                    pairs.push((mi * target_dim + t, BigInt::from(v)));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    kernel(&images).into_iter().map(|v| v.reindex(|i| basis[i])).collect()
}

/// Applies `ρ(x)` to a vector of global codes (up to a positive scalar when
/// `x` has denominators).
pub(crate) fn apply_algebra(space: &TensorSpace, x: &GroupAlgebraElement, v: &SparseVec) -> SparseVec {
    let coeffs = x.to_vector();
    let ix = x.ambient().index();
    let (p, q) = (space.p(), space.q());
    let mut out: Vec<(usize, BigInt)> = Vec::new();
    let mut digits = vec![0; p + q];
    let mut img = vec![0; p + q];
    for (code, a) in v.entries() {
        space.decode(*code, &mut digits);
        for (gi, c) in coeffs.entries() {
            let g = &ix.elements()[*gi];
            for i in 0..p {
                img[g.left.apply(i)] = digits[i];
            }
            for j in 0..q {
                img[p + g.right.apply(j)] = digits[p + j];
            }
            out.push((space.encode(&img), a * c));
        }
    }
    SparseVec::from_pairs(out)
}

/// Filtration `F⁰ ⊆ F¹ ⊆ …` of a tensor space (or of `ρ(Y)T`), with `F^k`
/// the joint kernel of all `(k+1)`-fold contraction composites.
#[derive(Clone, Debug)]
pub struct SocleFiltration {
    pub roots: RootSystem,
    /// `dims[k][w]`: dimension of `F^k` at the dominant weight `w`.
    pub dims: Vec<BTreeMap<Weight, u64>>,
}

impl SocleFiltration {
    pub fn depth(&self) -> usize {
        self.dims.len()
    }

    /// Character of `F^k / F^{k-1}`.
    pub fn layer(&self, k: usize) -> WeightDecomposition {
        let mut w = WeightDecomposition::new(self.roots);
        for (wt, d) in &self.dims[k] {
            let below = if k == 0 { 0 } else { self.dims[k - 1].get(wt).copied().unwrap_or(0) };
            w.add(wt.clone(), d - below);
        }
        w
    }

    /// Irreducible constituents of every layer.
    pub fn layer_labels(&self) -> Result<Vec<BTreeMap<Label, u64>>> {
        (0..self.depth()).map(|k| decompose_layer(&self.layer(k))).collect()
    }

    pub fn total(&self) -> u128 {
        (0..self.depth()).map(|k| self.layer(k).total()).sum()
    }
}

/// Socle-style filtration of `space`, or of `ρ(projector)·space` when given.
///
/// Dominant weight spaces are processed in parallel; results are merged into
/// ordered maps, so the output does not depend on scheduling.
pub fn socle_filtration(space: &TensorSpace, projector: Option<&GroupAlgebraElement>) -> Result<SocleFiltration> {
    if let Some(y) = projector {
        check_acts(space, y)?;
    }
    let depth = max_layers(space) + 1;
    let weights = space.dominant_weights();
    let per_weight: Vec<(Weight, Vec<u64>)> = weights
        .par_iter()
        .map(|w| {
            let dims = (0..depth)
                .map(|k| {
                    let f = contraction_kernel(space, w, k + 1);
                    match projector {
                        None => f.len() as u64,
                        Some(y) => {
                            let imgs: Vec<SparseVec> = f.iter().map(|v| apply_algebra(space, y, v)).collect();
                            crate::linalg::rank(&imgs) as u64
                        }
                    }
                })
                .collect();
            (w.clone(), dims)
        })
        .collect();
    let mut dims = vec![BTreeMap::new(); depth];
    for (w, ds) in per_weight {
        for (k, d) in ds.into_iter().enumerate() {
            if d > 0 {
                dims[k].insert(w.clone(), d);
            }
        }
    }
    Ok(SocleFiltration { roots: space.context().roots(), dims })
}

fn check_acts(space: &TensorSpace, y: &GroupAlgebraElement) -> Result<()> {
    let expected = match space.context().g {
        LieType::Sl => Ambient::Product(space.p(), space.q()),
        _ => Ambient::Single(space.p()),
    };
    if y.ambient() != expected {
        return Err(Error::Shape(format!("{} does not act on {space}", y.ambient())));
    }
    Ok(())
}

/// Layer multiplicities from highest-weight vectors instead of peeling.
///
/// At finite rank every module is semisimple, so the multiplicity of the
/// irreducible of highest weight `w` in `F^k` is the dimension of the
/// vectors of weight `w` in `F^k` killed by all raising operators.
pub fn highest_weight_layers(space: &TensorSpace, projector: Option<&GroupAlgebraElement>) -> Result<Vec<BTreeMap<Label, u64>>> {
    if let Some(y) = projector {
        check_acts(space, y)?;
    }
    let ctx = space.context();
    let raising: Vec<Vec<(usize, usize, i64)>> =
        ctx.chevalley_generators().into_iter().filter(|(up, _)| *up).map(|(_, x)| x).collect();
    let depth = max_layers(space) + 1;
    let weights = space.dominant_weights();
    let per_weight: Vec<(Weight, Vec<u64>)> = weights
        .par_iter()
        .map(|w| {
            let counts = (0..depth)
                .map(|k| {
                    let mut f = contraction_kernel(space, w, k + 1);
                    if let Some(y) = projector {
                        f = f.iter().map(|v| apply_algebra(space, y, v)).collect();
                    }
                    let local = Subspace::span(space.dim(), f);
                    let images: Vec<SparseVec> = local
                        .basis()
                        .iter()
                        .map(|v| {
                            // Stack the raising operators into one long vector.
                            let mut parts = Vec::new();
                            for (r, x) in raising.iter().enumerate() {
                                for (i, c) in super::maps::act(space, x, v).entries() {
                                    parts.push((r * space.dim() + i, c.clone()));
                                }
                            }
                            SparseVec::from_pairs(parts)
                        })
                        .collect();
                    kernel(&images).len() as u64
                })
                .collect();
            (w.clone(), counts)
        })
        .collect();
    let mut out = vec![BTreeMap::new(); depth];
    for (w, counts) in per_weight {
        let label = crate::weyl::weight_to_label(ctx.g, &w)?;
        for k in 0..depth {
            let below = if k == 0 { 0 } else { counts[k - 1] };
            let m = counts[k] - below;
            if m > 0 {
                out[k].insert(label.clone(), m);
            }
        }
    }
    Ok(out)
}

/// Socle and composition factors of `V ⊗ V_λ` at finite rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorWithNatural {
    pub socle: BTreeMap<Label, u64>,
    pub composition: BTreeMap<Label, u64>,
}

/// Realises `V_λ` as `ρ(Y_λ)F⁰ ⊆ T^{p,q}`, embeds `V ⊗ V_λ` into
/// `T^{p+1,q}` through the first slot and intersects with `F⁰` there.
pub fn tensor_with_natural(label: &BiPartition, ctx: FiniteRankContext) -> Result<TensorWithNatural> {
    if ctx.g != LieType::Sl {
        return Err(Error::WrongType { expected: "sl", got: ctx.g });
    }
    let (p, q) = (label.first.size(), label.second.size());
    let small = TensorSpace::new(ctx, p, q)?;
    let big = TensorSpace::new(ctx, p + 1, q)?;
    let y = label_projector(&Label::Bi(label.clone()), Ambient::Product(p, q));
    let d = ctx.dim_v();
    let shift = d.pow((p + q) as u32);
    let mut simple_cache: HashMap<Weight, Vec<SparseVec>> = HashMap::new();
    let mut simple_at = |u: &Weight| -> Vec<SparseVec> {
        simple_cache
            .entry(u.clone())
            .or_insert_with(|| {
                let f = contraction_kernel(&small, u, 1);
                let imgs: Vec<SparseVec> = f.iter().map(|v| apply_algebra(&small, &y, v)).collect();
                Subspace::span(small.dim(), imgs).basis().to_vec()
            })
            .clone()
    };
    let mut soc = WeightDecomposition::new(ctx.roots());
    let mut comp = WeightDecomposition::new(ctx.roots());
    for w in big.dominant_weights() {
        let mut vecs = Vec::new();
        for a in 0..d {
            let mut u = w.clone();
            u[a] -= 1;
            for x in simple_at(&u) {
                vecs.push(x.reindex(|c| a * shift + c));
            }
        }
        let tensor = Subspace::span(big.dim(), vecs);
        comp.add(w.clone(), tensor.dim() as u64);
        let f0 = Subspace::span(big.dim(), contraction_kernel(&big, &w, 1));
        soc.add(w.clone(), tensor.intersection(&f0).dim() as u64);
    }
    Ok(TensorWithNatural { socle: decompose_layer(&soc)?, composition: decompose_layer(&comp)? })
}

/// `dim T^{p,q} = Σ d_{λ¹} d_{λ²} dim V_{λ¹} dim V_{λ²}` at rank `n ≥ p + q`.
pub fn schur_weyl_check(p: usize, q: usize, ctx: FiniteRankContext) -> Result<bool> {
    if ctx.g != LieType::Sl {
        return Err(Error::WrongType { expected: "sl", got: ctx.g });
    }
    if ctx.n < p + q {
        return Err(Error::InsufficientRank { rank: ctx.n, reason: format!("need n ≥ {}", p + q) });
    }
    let roots = ctx.roots();
    let schur_dim = |lam: &Partition| -> u128 {
        match label_to_weight(LieType::Sl, &Label::Bi(BiPartition::new(lam.clone(), Partition::empty())), ctx.n) {
            Ok(w) => roots.weyl_dimension(&w),
            Err(_) => 0,
        }
    };
    let side = |m: usize| -> u128 {
        Partition::all_of_size(m).iter().map(|l| l.symmetric_group_dim() as u128 * schur_dim(l)).sum()
    };
    let lhs = (ctx.n as u128).pow((p + q) as u32);
    Ok(lhs == side(p) * side(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(g: LieType, n: usize) -> FiniteRankContext {
        FiniteRankContext::new(g, n).unwrap()
    }

    fn bl(a: &[usize], b: &[usize]) -> Label {
        Label::Bi(BiPartition::of(a, b))
    }

    #[test]
    fn matching_counts() {
        let t = TensorSpace::new(ctx(LieType::Sl, 2), 2, 2).unwrap();
        assert_eq!(matchings(&t, 1).len(), 4);
        assert_eq!(matchings(&t, 2).len(), 2);
        let o = TensorSpace::new(ctx(LieType::O, 2), 4, 0).unwrap();
        assert_eq!(matchings(&o, 1).len(), 6);
        assert_eq!(matchings(&o, 2).len(), 3);
    }

    #[test]
    fn trace_splitting() {
        let t = TensorSpace::new(ctx(LieType::Sl, 4), 1, 1).unwrap();
        let f = socle_filtration(&t, None).unwrap();
        assert_eq!(f.layer(0).total(), 15);
        assert_eq!(f.layer(1).total(), 1);
        let labels = f.layer_labels().unwrap();
        assert_eq!(labels[0], BTreeMap::from([(bl(&[1], &[1]), 1)]));
        assert_eq!(labels[1], BTreeMap::from([(bl(&[], &[]), 1)]));
        let v = TensorSpace::new(ctx(LieType::Sl, 3), 1, 0).unwrap();
        let fv = socle_filtration(&v, None).unwrap();
        assert_eq!(fv.depth(), 1);
        assert_eq!(fv.layer(0).total(), 3);
    }

    #[test]
    fn orthogonal_square_socle() {
        let t = TensorSpace::new(ctx(LieType::O, 3), 2, 0).unwrap();
        let labels = socle_filtration(&t, None).unwrap().layer_labels().unwrap();
        let l = |p: &[usize]| Label::Single(Partition::of(p));
        assert_eq!(labels[0], BTreeMap::from([(l(&[2]), 1), (l(&[1, 1]), 1)]));
        assert_eq!(labels[1], BTreeMap::from([(l(&[]), 1)]));
    }

    #[test]
    fn peeling_agrees_with_highest_weight_vectors() {
        for (g, n, p, q) in [(LieType::Sl, 4, 2, 1), (LieType::Sl, 5, 2, 2), (LieType::O, 4, 3, 0), (LieType::Sp, 4, 4, 0)] {
            let t = TensorSpace::new(ctx(g, n), p, q).unwrap();
            let a = socle_filtration(&t, None).unwrap().layer_labels().unwrap();
            let b = highest_weight_layers(&t, None).unwrap();
            assert_eq!(a, b, "{t}");
        }
        let t = TensorSpace::new(ctx(LieType::Sl, 5), 2, 1).unwrap();
        let y = label_projector(&bl(&[2], &[1]), Ambient::Product(2, 1));
        assert_eq!(
            socle_filtration(&t, Some(&y)).unwrap().layer_labels().unwrap(),
            highest_weight_layers(&t, Some(&y)).unwrap()
        );
    }

    #[test]
    fn conservation() {
        let t = TensorSpace::new(ctx(LieType::Sl, 4), 2, 1).unwrap();
        let f = socle_filtration(&t, None).unwrap();
        assert_eq!(f.total(), t.dim() as u128);
        for labels in f.layer_labels().unwrap().iter().zip(0..) {
            let (ls, k) = labels;
            let s: u128 = ls
                .iter()
                .map(|(l, m)| *m as u128 * f.roots.weyl_dimension(&label_to_weight(LieType::Sl, l, 4).unwrap()))
                .sum();
            assert_eq!(s, f.layer(k).total());
        }
    }

    #[test]
    fn adjoint_tensor_natural() {
        let r = tensor_with_natural(&BiPartition::of(&[1], &[1]), ctx(LieType::Sl, 5)).unwrap();
        assert_eq!(r.socle, BTreeMap::from([(bl(&[2], &[1]), 1), (bl(&[1, 1], &[1]), 1)]));
        assert_eq!(
            r.composition,
            BTreeMap::from([(bl(&[2], &[1]), 1), (bl(&[1, 1], &[1]), 1), (bl(&[1], &[]), 1)])
        );
    }

    #[test]
    fn schur_weyl_examples() {
        assert!(schur_weyl_check(1, 0, ctx(LieType::Sl, 3)).unwrap());
        assert!(schur_weyl_check(2, 0, ctx(LieType::Sl, 3)).unwrap());
        assert!(schur_weyl_check(2, 1, ctx(LieType::Sl, 4)).unwrap());
        assert!(schur_weyl_check(3, 2, ctx(LieType::Sl, 6)).unwrap());
        assert!(schur_weyl_check(3, 2, ctx(LieType::Sl, 4)).is_err());
    }
}
