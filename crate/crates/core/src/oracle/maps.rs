use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{FiniteRankContext, TensorSpace};
use crate::error::{Error, Result};
use crate::linalg::{kernel, rank, Rational, SparseVec};
use crate::symgroup::{Ambient, GroupAlgebraElement, GroupElement};
use crate::LieType;

/// Linear map between tensor spaces with exact rational entries.
///
/// Column `c` holds `denominator ×` the image of the basis vector with code
/// `c`. Maps built from contractions, permutations and group-algebra elements
/// commute with `g_n`; [`EquivariantMap::check_equivariance`] confirms it.
#[derive(Clone, Debug)]
pub struct EquivariantMap {
    source: TensorSpace,
    target: TensorSpace,
    columns: Vec<SparseVec>,
    denominator: BigInt,
}

impl EquivariantMap {
    fn from_columns(source: TensorSpace, target: TensorSpace, columns: Vec<SparseVec>, denominator: BigInt) -> Self {
        debug_assert_eq!(columns.len(), source.dim());
        debug_assert!(denominator.is_positive());
        Self { source, target, columns, denominator }
    }

    /// Builds a map whose column `c` has at most one nonzero entry.
    fn monomial<F>(source: &TensorSpace, target: &TensorSpace, f: F) -> Self
    where
        F: Fn(&[usize]) -> Option<(Vec<usize>, i64)> + Sync,
    {
        let columns = (0..source.dim())
            .into_par_iter()
            .map(|c| {
                let digits = source.digits(c);
                match f(&digits) {
                    Some((img, v)) if v != 0 => SparseVec::from_pairs([(target.encode(&img), BigInt::from(v))]),
                    _ => SparseVec::new(),
                }
            })
            .collect();
        Self::from_columns(source.clone(), target.clone(), columns, BigInt::one())
    }

    pub fn identity(space: &TensorSpace) -> Self {
        Self::monomial(space, space, |d| Some((d.to_vec(), 1)))
    }

    pub fn zero(source: &TensorSpace, target: &TensorSpace) -> Self {
        Self::from_columns(source.clone(), target.clone(), vec![SparseVec::new(); source.dim()], BigInt::one())
    }

    pub fn source(&self) -> &TensorSpace {
        &self.source
    }

    pub fn target(&self) -> &TensorSpace {
        &self.target
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Column of basis vector `code`, scaled by the denominator.
    pub fn scaled_column(&self, code: usize) -> &SparseVec {
        &self.columns[code]
    }

    /// Exact image of basis vector `code`.
    pub fn column(&self, code: usize) -> Vec<(usize, Rational)> {
        self.columns[code]
            .entries()
            .iter()
            .map(|(i, v)| (*i, Rational::new(v.clone(), self.denominator.clone())))
            .collect()
    }

    /// Image of an integer vector, up to the positive factor `denominator`.
    pub fn apply_scaled(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (c, x) in v.entries() {
            acc = acc.combine(&BigInt::one(), &self.columns[*c], x);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EquivariantMap) -> Result<EquivariantMap> {
        if other.target != self.source {
            return Err(Error::Shape(format!("cannot compose {} -> {} after {} -> {}", self.source, self.target, other.source, other.target)));
        }
        let columns = other.columns.par_iter().map(|v| self.apply_scaled(v)).collect();
        Ok(Self::from_columns(
            other.source.clone(),
            self.target.clone(),
            columns,
            &self.denominator * &other.denominator,
        )
        .normalized())
    }

    /// `Σ c_k M_k` over maps with common source and target.
    pub fn linear_combination(terms: &[(Rational, &EquivariantMap)]) -> Result<EquivariantMap> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::Shape("empty linear combination".into()));
        };
        for (_, m) in terms {
            if m.source != first.source || m.target != first.target {
                return Err(Error::Shape(format!(
                    "mixed shapes {} -> {} and {} -> {}",
                    first.source, first.target, m.source, m.target
                )));
            }
        }
        // Bring every term to a common denominator.
        let den = terms
            .iter()
            .fold(BigInt::one(), |acc, (c, m)| acc.lcm(&(c.denom() * &m.denominator)));
        let factors: Vec<BigInt> = terms
            .iter()
            .map(|(c, m)| c.numer() * (&den / (c.denom() * &m.denominator)))
            .collect();
        let columns = (0..first.source.dim())
            .into_par_iter()
            .map(|col| {
                let mut acc = SparseVec::new();
                for ((_, m), f) in terms.iter().zip(&factors) {
                    acc = acc.combine(&BigInt::one(), &m.columns[col], f);
                }
                acc
            })
            .collect();
        Ok(Self::from_columns(first.source.clone(), first.target.clone(), columns, den).normalized())
    }

    pub fn scale(&self, c: &Rational) -> EquivariantMap {
        Self::linear_combination(&[(c.clone(), self)]).expect("single term")
    }

    /// Divides out common factors between the entries and the denominator.
    fn normalized(mut self) -> Self {
        let mut g = self.denominator.clone();
        for col in &self.columns {
            for (_, v) in col.entries() {
                g = g.gcd(v);
                if g.is_one() {
                    return self;
                }
            }
        }
        if g.is_one() || g.is_zero() {
            if self.is_zero() {
                self.denominator = BigInt::one();
            }
            return self;
        }
        for col in &mut self.columns {
            *col = col.scale_div(&g);
        }
        self.denominator /= g;
        self
    }

    pub fn same_as(&self, other: &EquivariantMap) -> bool {
        self.source == other.source
            && self.target == other.target
            && self
                .columns
                .iter()
                .zip(&other.columns)
                .all(|(a, b)| a.scale(&other.denominator) == b.scale(&self.denominator))
    }

    /// The map as one long integer vector (`column × dim target + row`).
    pub fn flatten(&self) -> SparseVec {
        let t = self.target.dim();
        SparseVec::from_pairs(
            self.columns
                .iter()
                .enumerate()
                .flat_map(|(c, col)| col.entries().iter().map(move |(r, v)| (c * t + r, v.clone()))),
        )
    }

    /// Checks `X·M = M·X` for every Chevalley generator `X` of `g_n`.
    pub fn check_equivariance(&self) -> bool {
        let ctx = self.source.context();
        ctx.chevalley_generators().iter().all(|(_, x)| {
            (0..self.source.dim()).into_par_iter().all(|c| {
                let lhs = act(&self.target, x, &self.columns[c]);
                let moved = act(&self.source, x, &SparseVec::unit(c));
                lhs == self.apply_scaled(&moved)
            })
        })
    }
}

/// Action of a Lie algebra element of `V_n` on an integer vector of `space`.
pub(crate) fn act(space: &TensorSpace, x: &[(usize, usize, i64)], v: &SparseVec) -> SparseVec {
    let mut out: Vec<(usize, BigInt)> = Vec::new();
    let mut digits = vec![0; space.degree()];
    for (code, coeff) in v.entries() {
        space.decode(*code, &mut digits);
        for pos in 0..space.degree() {
            let covariant = pos < space.p();
            let a = digits[pos];
            for &(r, c, val) in x {
                let (hit, new, sign) = if covariant { (c == a, r, 1) } else { (r == a, c, -1) };
                if hit {
                    let mut d = digits.clone();
                    d[pos] = new;
                    out.push((space.encode(&d), coeff * BigInt::from(sign * val)));
                }
            }
        }
    }
    SparseVec::from_pairs(out)
}

/// `φ_{i,j}`: pairs covariant factor `i` with contravariant factor `j` (1-based).
pub fn contraction_phi(i: usize, j: usize, space: &TensorSpace) -> Result<EquivariantMap> {
    let ctx = space.context();
    if ctx.g != LieType::Sl {
        return Err(Error::WrongType { expected: "sl", got: ctx.g });
    }
    let (p, q) = (space.p(), space.q());
    if i == 0 || i > p || j == 0 || j > q {
        return Err(Error::IndexOutOfRange(format!("φ_{{{i},{j}}} on {space}")));
    }
    let target = TensorSpace::new(ctx, p - 1, q - 1)?;
    let (a, b) = (i - 1, p + j - 1);
    Ok(EquivariantMap::monomial(space, &target, |d| {
        let v = ctx.form(d[a], d[b]);
        let rest: Vec<usize> = d.iter().enumerate().filter(|(k, _)| *k != a && *k != b).map(|(_, x)| *x).collect();
        Some((rest, v))
    }))
}

/// `ψ_{i,j}`: applies the invariant form to factors `i < j` (1-based).
pub fn contraction_psi(i: usize, j: usize, space: &TensorSpace) -> Result<EquivariantMap> {
    let ctx = space.context();
    if ctx.g == LieType::Sl {
        return Err(Error::WrongType { expected: "o or sp", got: ctx.g });
    }
    let p = space.p();
    if i == 0 || i >= j || j > p {
        return Err(Error::IndexOutOfRange(format!("ψ_{{{i},{j}}} on {space}")));
    }
    let target = TensorSpace::new(ctx, p - 2, 0)?;
    let (a, b) = (i - 1, j - 1);
    Ok(EquivariantMap::monomial(space, &target, |d| {
        let v = ctx.form(d[a], d[b]);
        let rest: Vec<usize> = d.iter().enumerate().filter(|(k, _)| *k != a && *k != b).map(|(_, x)| *x).collect();
        Some((rest, v))
    }))
}

/// Place permutation: the factor in slot `i` moves to slot `s(i)`.
pub fn permutation_action(g: &GroupElement, space: &TensorSpace) -> Result<EquivariantMap> {
    let (p, q) = (space.p(), space.q());
    if g.left.degree() != p || g.right.degree() != q {
        return Err(Error::Shape(format!("{g} does not act on {space}")));
    }
    Ok(EquivariantMap::monomial(space, space, |d| {
        let mut img = vec![0; p + q];
        for i in 0..p {
            img[g.left.apply(i)] = d[i];
        }
        for j in 0..q {
            img[p + g.right.apply(j)] = d[p + j];
        }
        Some((img, 1))
    }))
}

/// `Σ c_g ρ(g)` for an element of `C[S_p]` or `C[S_p × S_q]`.
pub fn algebra_action(x: &GroupAlgebraElement, space: &TensorSpace) -> Result<EquivariantMap> {
    let ambient = x.ambient();
    let (p, q) = ambient.degrees();
    let expected = match space.context().g {
        LieType::Sl => Ambient::Product(space.p(), space.q()),
        _ => Ambient::Single(space.p()),
    };
    if (p, q) != (space.p(), space.q()) || ambient != expected {
        return Err(Error::Shape(format!("{ambient} does not act on {space}")));
    }
    if x.is_zero() {
        return Ok(EquivariantMap::zero(space, space));
    }
    let perms: Vec<(Rational, EquivariantMap)> = x
        .terms()
        .map(|(g, c)| Ok((c.clone(), permutation_action(g, space)?)))
        .collect::<Result<_>>()?;
    let refs: Vec<(Rational, &EquivariantMap)> = perms.iter().map(|(c, m)| (c.clone(), m)).collect();
    EquivariantMap::linear_combination(&refs)
}

/// True iff `Σ c_k M_k` is exactly zero.
pub fn verify_relation(terms: &[(Rational, &EquivariantMap)]) -> Result<bool> {
    Ok(EquivariantMap::linear_combination(terms)?.is_zero())
}

/// All linear relations `Σ a_k M_k = 0` among the given maps.
pub fn linear_relations(maps: &[EquivariantMap]) -> Result<Vec<Vec<Rational>>> {
    if let Some(first) = maps.first() {
        if maps.iter().any(|m| m.source != first.source || m.target != first.target) {
            return Err(Error::Shape("maps with different shapes".into()));
        }
    }
    let flat: Vec<SparseVec> = maps.par_iter().map(EquivariantMap::flatten).collect();
    Ok(kernel(&flat)
        .into_iter()
        .map(|v| {
            let mut a = vec![Rational::zero(); maps.len()];
            for (k, c) in v.entries() {
                // Column k was scaled by its denominator.
                a[*k] = Rational::from_integer(c * maps[*k].denominator());
            }
            a
        })
        .collect())
}

/// Flattened matrices of `C_P ∘ ρ(g)` for each `g`, where `C_P` applies the
/// form to every slot pair of `pairs` (0-based, order inside a pair matters
/// for `sp`) and keeps the other slots in order.
///
/// This is the fast path for evaluating many degree-`k` words at once; the
/// vectors are indexed like [`EquivariantMap::flatten`].
pub fn diagram_evaluations(space: &TensorSpace, pairs: &[(usize, usize)], elements: &[GroupElement]) -> Result<Vec<SparseVec>> {
    let ctx = space.context();
    let (p, q) = (space.p(), space.q());
    let deg = p + q;
    let mut dropped = vec![false; deg];
    for &(a, b) in pairs {
        if a >= deg || b >= deg || a == b || dropped[a] || dropped[b] {
            return Err(Error::IndexOutOfRange(format!("bad contraction pairs {pairs:?} on {space}")));
        }
        if ctx.g == LieType::Sl && !(a < p && b >= p) {
            return Err(Error::IndexOutOfRange(format!("φ pairs a covariant with a contravariant slot, got {pairs:?}")));
        }
        dropped[a] = true;
        dropped[b] = true;
    }
    let d = ctx.dim_v();
    let target_dim = d.pow((deg - 2 * pairs.len()) as u32);
    elements
        .par_iter()
        .map(|g| {
            if g.left.degree() != p || g.right.degree() != q {
                return Err(Error::Shape(format!("{g} does not act on {space}")));
            }
            let mut digits = vec![0; deg];
            let mut img = vec![0; deg];
            let mut out = Vec::new();
            for code in 0..space.dim() {
                space.decode(code, &mut digits);
                for i in 0..p {
                    img[g.left.apply(i)] = digits[i];
                }
                for j in 0..q {
                    img[p + g.right.apply(j)] = digits[p + j];
                }
                let mut v = 1;
                for &(a, b) in pairs {
                    v *= ctx.form(img[a], img[b]);
                    if v == 0 {
                        break;
                    }
                }
                if v != 0 {
                    let t = img.iter().zip(&dropped).filter(|(_, x)| !**x).fold(0, |acc, (x, _)| acc * d + x);
                    out.push((code * target_dim + t, BigInt::from(v)));
                }
            }
            Ok(SparseVec::from_pairs(out))
        })
        .collect()
}

/// The composite of `i` contractions on the last factors, and its slot pairs.
fn base_composite(p: usize, q: usize, i: usize, ctx: FiniteRankContext) -> Result<(EquivariantMap, Vec<(usize, usize)>)> {
    let mut space = TensorSpace::new(ctx, p, q)?;
    let mut map = EquivariantMap::identity(&space);
    let mut pairs = Vec::new();
    for k in 0..i {
        let step = match ctx.g {
            LieType::Sl => {
                pairs.push((p - 1 - k, p + q - 1 - k));
                contraction_phi(p - k, q - k, &space)?
            }
            _ => {
                pairs.push((p - 2 - 2 * k, p - 1 - 2 * k));
                contraction_psi(p - 1 - 2 * k, p - 2 * k, &space)?
            }
        };
        space = step.target().clone();
        map = step.compose(&map)?;
    }
    Ok((map, pairs))
}

/// Candidate basis `{contraction composite ∘ ρ(g)}` of the degree-`i` maps
/// out of `T^{p,q}` (or `T^p`), one map per contraction diagram.
///
/// Fails with [`Error::InsufficientRank`] if the maps are dependent at this rank.
pub fn stable_hom_basis(p: usize, q: usize, i: usize, ctx: FiniteRankContext) -> Result<Vec<EquivariantMap>> {
    let (need_p, need_q) = match ctx.g {
        LieType::Sl => (i, i),
        _ => (2 * i, 0),
    };
    if p < need_p || q < need_q || (ctx.g != LieType::Sl && q != 0) {
        return Err(Error::IndexOutOfRange(format!("degree {i} out of T^{{{p},{q}}}")));
    }
    let (base, pairs) = base_composite(p, q, i, ctx)?;
    let source = base.source().clone();
    let contracted: BTreeSet<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let kept: Vec<usize> = (0..p + q).filter(|x| !contracted.contains(x)).collect();
    let ambient = match ctx.g {
        LieType::Sl => Ambient::Product(p, q),
        _ => Ambient::Single(p),
    };
    let mut seen = BTreeSet::new();
    let mut chosen = Vec::new();
    for g in ambient.index().elements() {
        // Which source slot lands in each slot of the composite.
        let inv = g.inverse();
        let slot = |y: usize| if y < p { inv.left.apply(y) } else { p + inv.right.apply(y - p) };
        let mut diagram: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (slot(a), slot(b));
                if ctx.g == LieType::Sl { (x, y) } else { (x.min(y), x.max(y)) }
            })
            .collect();
        diagram.sort_unstable();
        let survivors: Vec<usize> = kept.iter().map(|&y| slot(y)).collect();
        if seen.insert((diagram, survivors)) {
            chosen.push(g.clone());
        }
    }
    let maps: Vec<EquivariantMap> = chosen
        .par_iter()
        .map(|g| base.compose(&permutation_action(g, &source)?))
        .collect::<Result<_>>()?;
    let flat: Vec<SparseVec> = maps.iter().map(EquivariantMap::flatten).collect();
    let r = rank(&flat);
    if r < maps.len() {
        return Err(Error::InsufficientRank {
            rank: ctx.n,
            reason: format!("{} diagram maps out of {source} span only {r} dimensions", maps.len()),
        });
    }
    Ok(maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::symgroup::{young_projector, Permutation};

    fn ctx(g: LieType, n: usize) -> FiniteRankContext {
        FiniteRankContext::new(g, n).unwrap()
    }

    fn single(p: Permutation) -> GroupElement {
        GroupElement::single(p)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn phi_examples() {
        let c = ctx(LieType::Sl, 2);
        let t = TensorSpace::new(c, 1, 1).unwrap();
        let phi = contraction_phi(1, 1, &t).unwrap();
        assert_eq!(phi.column(t.encode(&[0, 0])), vec![(0, q(1))]);
        assert!(phi.column(t.encode(&[0, 1])).is_empty());
        let c3 = ctx(LieType::Sl, 3);
        let t3 = TensorSpace::new(c3, 1, 1).unwrap();
        let id = SparseVec::from_pairs((0..3).map(|i| (t3.encode(&[i, i]), BigInt::one())));
        let phi3 = contraction_phi(1, 1, &t3).unwrap();
        assert_eq!(phi3.apply_scaled(&id), SparseVec::from_pairs([(0, BigInt::from(3))]));
        let t21 = TensorSpace::new(c3, 2, 1).unwrap();
        let m = contraction_phi(2, 1, &t21).unwrap();
        let cols: Vec<SparseVec> = (0..t21.dim()).map(|c| m.scaled_column(c).clone()).collect();
        // rank of the 9 × 27 matrix: row space is all of T^{1,0}
        let rows_rank = rank(&cols);
        assert_eq!(rows_rank, 3);
        assert!(m.check_equivariance());
        assert!(contraction_phi(2, 2, &t21).is_err());
        assert!(contraction_psi(1, 2, &t21).is_err());
    }

    #[test]
    fn phi_rank_on_t21_counts_columns() {
        // φ_{2,1}: T^{2,1} → T^{1,0}; as a 3 × 27 matrix its rank is 3, and the
        // flattened operator spans n² = 9 nonzero columns.
        let c3 = ctx(LieType::Sl, 3);
        let t21 = TensorSpace::new(c3, 2, 1).unwrap();
        let m = contraction_phi(2, 1, &t21).unwrap();
        let nonzero = (0..t21.dim()).filter(|&c| !m.scaled_column(c).is_zero()).count();
        assert_eq!(nonzero, 9);
    }

    #[test]
    fn psi_examples_and_symmetry() {
        let o = ctx(LieType::O, 2);
        let t = TensorSpace::new(o, 2, 0).unwrap();
        let psi = contraction_psi(1, 2, &t).unwrap();
        assert_eq!(psi.column(t.encode(&[0, 3])), vec![(0, q(1))]);
        assert!(psi.check_equivariance());
        let sp = ctx(LieType::Sp, 2);
        let ts = TensorSpace::new(sp, 2, 0).unwrap();
        let psis = contraction_psi(1, 2, &ts).unwrap();
        for x in 0..4 {
            assert!(psis.column(ts.encode(&[x, x])).is_empty());
        }
        assert!(psis.check_equivariance());
        for (g, sign) in [(LieType::O, 1), (LieType::Sp, -1)] {
            let c = ctx(g, 3);
            let t4 = TensorSpace::new(c, 4, 0).unwrap();
            for i in 1..=4 {
                for j in i + 1..=4 {
                    let psi = contraction_psi(i, j, &t4).unwrap();
                    let swap = permutation_action(&single(Permutation::transposition(4, i, j)), &t4).unwrap();
                    let twisted = psi.compose(&swap).unwrap();
                    assert!(verify_relation(&[(q(1), &twisted), (q(-sign), &psi)]).unwrap());
                }
            }
        }
    }

    #[test]
    fn permutations_form_a_homomorphism() {
        let c = ctx(LieType::Sl, 3);
        let t = TensorSpace::new(c, 3, 0).unwrap();
        let s = single(Permutation::transposition(3, 1, 2));
        let u = single(Permutation::transposition(3, 2, 3));
        let rs = permutation_action(&s, &t).unwrap();
        let ru = permutation_action(&u, &t).unwrap();
        let prod = permutation_action(&s.compose(&u), &t).unwrap();
        // ρ(s)ρ(u) = ρ(s∘u): apply u first
        assert!(rs.compose(&ru).unwrap().same_as(&prod));
        let id = permutation_action(&single(Permutation::identity(3)), &t).unwrap();
        assert!(id.same_as(&EquivariantMap::identity(&t)));
        let t2 = TensorSpace::new(c, 2, 0).unwrap();
        let sw = permutation_action(&single(Permutation::transposition(2, 1, 2)), &t2).unwrap();
        assert_eq!(sw.column(t2.encode(&[0, 1])), vec![(t2.encode(&[1, 0]), q(1))]);
        assert!(permutation_action(&s, &t2).is_err());
    }

    #[test]
    fn stable_bases() {
        let sl = stable_hom_basis(1, 1, 1, ctx(LieType::Sl, 2)).unwrap();
        assert_eq!(sl.len(), 1);
        let sl21 = stable_hom_basis(2, 1, 1, ctx(LieType::Sl, 3)).unwrap();
        assert_eq!(sl21.len(), 2);
        let sl22 = stable_hom_basis(2, 2, 2, ctx(LieType::Sl, 4)).unwrap();
        assert_eq!(sl22.len(), 2);
        let o = stable_hom_basis(2, 0, 1, ctx(LieType::O, 2)).unwrap();
        assert_eq!(o.len(), 1);
        let o4 = stable_hom_basis(4, 0, 2, ctx(LieType::O, 2)).unwrap();
        assert_eq!(o4.len(), 3);
        for m in sl21.iter().chain(&o4) {
            assert!(m.check_equivariance());
        }
        // At n = 1 the two maps T^{2,1} → T^{1,0} coincide.
        assert!(matches!(stable_hom_basis(2, 1, 1, ctx(LieType::Sl, 1)), Err(Error::InsufficientRank { .. })));
    }

    #[test]
    fn diagram_evaluations_match_composites() {
        let c = ctx(LieType::Sp, 2);
        let t4 = TensorSpace::new(c, 4, 0).unwrap();
        let t2 = TensorSpace::new(c, 2, 0).unwrap();
        let composite = contraction_psi(1, 2, &t2).unwrap().compose(&contraction_psi(3, 4, &t4).unwrap()).unwrap();
        let elems: Vec<GroupElement> = Ambient::Single(4).index().elements().to_vec();
        let fast = diagram_evaluations(&t4, &[(2, 3), (0, 1)], &elems).unwrap();
        for (g, v) in elems.iter().zip(&fast) {
            let slow = composite.compose(&permutation_action(g, &t4).unwrap()).unwrap();
            assert_eq!(&slow.flatten(), v);
        }
        assert!(diagram_evaluations(&t4, &[(0, 0)], &elems).is_err());
    }

    #[test]
    fn group_algebra_action_respects_products() {
        let c = ctx(LieType::O, 2);
        let t = TensorSpace::new(c, 3, 0).unwrap();
        let letters = [1, 2, 3];
        let y = young_projector(&Partition::of(&[2, 1]), &letters, 3).unwrap();
        let ry = algebra_action(&y, &t).unwrap();
        let ryy = algebra_action(&(&y * &y), &t).unwrap();
        assert!(ry.compose(&ry).unwrap().same_as(&ryy));
        assert!(ry.check_equivariance());
        let half = ry.scale(&Rational::new(BigInt::one(), BigInt::from(2)));
        assert!(verify_relation(&[(q(2), &half), (q(-1), &ry)]).unwrap());
    }
}
