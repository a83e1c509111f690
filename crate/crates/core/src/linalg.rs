//! Exact sparse linear algebra over the integers and rationals.
//!
//! Vectors are sparse and integer-valued; elimination is fraction-free.
//! Every row kept in an echelon basis is primitive (content 1, positive
//! leading coefficient), so entries stay small for the 0/±1 matrices the
//! oracle produces.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Sparse integer vector, entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, BigInt)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        Self { entries: vec![(index, BigInt::one())] }
    }

    /// Builds a vector from unsorted `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, BigInt)>>(pairs: I) -> Self {
        let mut acc: HashMap<usize, BigInt> = HashMap::new();
        for (i, v) in pairs {
            *acc.entry(i).or_default() += v;
        }
        let mut entries: Vec<_> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        entries.sort_unstable_by_key(|(i, _)| *i);
        Self { entries }
    }

    /// Clears denominators of a rational vector. The result spans the same line.
    pub fn from_rational_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut acc: HashMap<usize, Rational> = HashMap::new();
        for (i, v) in pairs {
            *acc.entry(i).or_insert_with(Rational::zero) += v;
        }
        let mut items: Vec<_> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        items.sort_unstable_by_key(|(i, _)| *i);
        let lcm = items.iter().fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
        let entries = items
            .into_iter()
            .map(|(i, v)| (i, v.numer() * (&lcm / v.denom())))
            .collect();
        Self { entries }
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: &BigInt, other: &SparseVec, b: &BigInt) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while i < x.len() || j < y.len() {
            let take = match (x.get(i), y.get(j)) {
                (Some(l), Some(r)) => l.0.cmp(&r.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match take {
                std::cmp::Ordering::Less => {
                    out.push((x[i].0, a * &x[i].1));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((y[j].0, b * &y[j].1));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = a * &x[i].1 + b * &y[j].1;
                    if !v.is_zero() {
                        out.push((x[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseVec { entries: out }
    }

    pub fn scale(&self, c: &BigInt) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn dot(&self, other: &SparseVec) -> BigInt {
        let (mut i, mut j) = (0, 0);
        let mut acc = BigInt::zero();
        while i < self.entries.len() && j < other.entries.len() {
            match self.entries[i].0.cmp(&other.entries[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &self.entries[i].1 * &other.entries[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Content of the vector (gcd of entries), zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.entries.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        let g = self.content();
        if g.is_zero() {
            return;
        }
        let g = if self.entries[0].1.is_negative() { -g } else { g };
        if !g.is_one() {
            for (_, v) in &mut self.entries {
                *v = &*v / &g;
            }
        }
    }

    pub fn primitive(mut self) -> Self {
        self.make_primitive();
        self
    }

    /// Maps indices through `f`, which must be injective.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        let mut entries: Vec<_> = self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect();
        entries.sort_unstable_by_key(|(i, _)| *i);
        SparseVec { entries }
    }

    pub fn to_rational_pairs(&self) -> Vec<(usize, Rational)> {
        self.entries
            .iter()
            .map(|(i, v)| (*i, Rational::from_integer(v.clone())))
            .collect()
    }
}

/// Row-echelon basis of a subspace with fraction-free primitive rows.
///
/// Rows have pairwise distinct leading indices. After [`Echelon::reduce_fully`]
/// every pivot column is zero in all rows but its own.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    reduced: bool,
}

impl Echelon {
    pub fn new() -> Self {
        Self { reduced: true, ..Self::default() }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vectors: I) -> Self {
        let mut e = Self::new();
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Eliminates every pivot occurring in `v`; returns the primitive remainder.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut pos = 0;
        while pos < v.entries.len() {
            let (idx, _) = v.entries[pos];
            match self.pivot_row.get(&idx) {
                Some(&r) => {
                    let row = &self.rows[r];
                    let p = row.entries[0].1.clone();
                    let c = v.entries[pos].1.clone();
                    let g = p.gcd(&c);
                    v = v.combine(&(&p / &g), row, &(-(&c / &g)));
                    v.make_primitive();
                    pos = v.entries.iter().take_while(|(i, _)| *i < idx).count();
                }
                None => pos += 1,
            }
        }
        v
    }

    /// Inserts `v`; returns `true` if it was independent of the current rows.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let lead = r.entries[0].0;
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(r);
        self.reduced = false;
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Brings the basis into reduced row-echelon form (up to row scaling).
    pub fn reduce_fully(&mut self) {
        if self.reduced {
            return;
        }
        for k in 0..self.rows.len() {
            let row = std::mem::take(&mut self.rows[k]);
            let lead = row.entries[0].0;
            let rest = SparseVec { entries: row.entries[1..].to_vec() };
            let reduced_rest = self.reduce_tail(rest, lead);
            let mut entries = vec![row.entries[0].clone()];
            // `reduce_tail` scales the whole row; rebuild with the same factor.
            let (factor, tail) = reduced_rest;
            entries[0].1 = &entries[0].1 * factor;
            entries.extend(tail.entries);
            let mut full = SparseVec { entries };
            full.make_primitive();
            self.rows[k] = full;
        }
        self.reduced = true;
    }

    // Reduces `tail` against all pivots other than `own`, returning the
    // accumulated scalar applied to the original row and the new tail.
    fn reduce_tail(&self, mut tail: SparseVec, own: usize) -> (BigInt, SparseVec) {
        let mut factor = BigInt::one();
        let mut pos = 0;
        while pos < tail.entries.len() {
            let (idx, _) = tail.entries[pos];
            match self.pivot_row.get(&idx) {
                Some(&r) if idx != own && !self.rows[r].is_zero() => {
                    let row = &self.rows[r];
                    let p = row.entries[0].1.clone();
                    let c = tail.entries[pos].1.clone();
                    let g = p.gcd(&c);
                    let (a, b) = (&p / &g, -(&c / &g));
                    tail = tail.combine(&a, row, &b);
                    factor *= a;
                    pos = tail.entries.iter().take_while(|(i, _)| *i < idx).count();
                }
                _ => pos += 1,
            }
        }
        (factor, tail)
    }

    /// Coordinates of `v` in the reduced basis; `None` if `v` is outside the span.
    ///
    /// Requires [`Echelon::reduce_fully`] to have been called.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        assert!(self.reduced, "coordinates need a fully reduced basis");
        if !self.contains(v) {
            return None;
        }
        Some(
            self.rows
                .iter()
                .map(|row| {
                    let (piv, p) = row.leading().expect("nonzero row");
                    let c = v.get(piv).cloned().unwrap_or_default();
                    Rational::new(c, p.clone())
                })
                .collect(),
        )
    }

    /// Coefficient of the projection of `v` along pivot-free columns onto row `k`.
    pub fn pivot_coordinate(&self, k: usize, v: &SparseVec) -> Rational {
        let (piv, p) = self.rows[k].leading().expect("nonzero row");
        Rational::new(v.get(piv).cloned().unwrap_or_default(), p.clone())
    }
}

/// Kernel of the linear map sending the `j`-th basis vector to `images[j]`.
///
/// The returned vectors are primitive, indexed by `j`, and form a basis.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    // Augmented elimination: each stored row carries the combination of
    // source basis vectors that produced it.
    let mut rows: Vec<(SparseVec, SparseVec)> = Vec::new();
    let mut pivot_row: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::new();
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut combo = SparseVec::unit(j);
        while let Some((lead, c)) = v.leading().map(|(i, c)| (i, c.clone())) {
            let Some(&r) = pivot_row.get(&lead) else {
                break;
            };
            let (row, row_combo) = &rows[r];
            let p = row.entries[0].1.clone();
            let g = p.gcd(&c);
            let (a, b) = (&p / &g, -(&c / &g));
            v = v.combine(&a, row, &b);
            combo = combo.combine(&a, row_combo, &b);
            let gv = v.content().gcd(&combo.content());
            if !gv.is_zero() && !gv.is_one() {
                v = v.scale_div(&gv);
                combo = combo.scale_div(&gv);
            }
        }
        if v.is_zero() {
            out.push(combo.primitive());
        } else {
            pivot_row.insert(v.entries[0].0, rows.len());
            rows.push((v, combo));
        }
    }
    out
}

/// Rank of a family of vectors.
pub fn rank(vectors: &[SparseVec]) -> usize {
    Echelon::from_vectors(vectors).rank()
}

impl SparseVec {
    pub(crate) fn scale_div(&self, g: &BigInt) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v / g)).collect() }
    }
}

/// A subspace of a finite-dimensional coordinate space `Q^ambient`.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Echelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Echelon::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(SparseVec::unit))
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(ambient: usize, vectors: I) -> Self {
        let mut basis = Echelon::new();
        for v in vectors {
            debug_assert!(v.entries().last().is_none_or(|(i, _)| *i < ambient));
            basis.insert(v);
        }
        basis.reduce_fully();
        Self { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &[SparseVec] {
        self.basis.rows()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.basis
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.basis.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis().iter().chain(other.basis()).cloned())
    }

    /// Orthogonal complement in the ambient space under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        // Kernel of x -> (<b_i, x>)_i: column j has entries b_i[j].
        let mut cols: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); self.ambient];
        for (i, b) in self.basis().iter().enumerate() {
            for (j, v) in b.entries() {
                cols[*j].push((i, v.clone()));
            }
        }
        let images: Vec<SparseVec> = cols.into_iter().map(SparseVec::from_pairs).collect();
        Subspace::span(self.ambient, kernel(&images))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x in self with x = sum a_i b_i and x in other: kernel of
        // (a, c) -> sum a_i b_i - sum c_k o_k.
        let k = self.dim();
        let mut images: Vec<SparseVec> = self.basis().to_vec();
        images.extend(other.basis().iter().map(|o| o.scale(&BigInt::from(-1))));
        let ker = kernel(&images);
        let vecs = ker.into_iter().map(|c| {
            let mut acc = SparseVec::new();
            for (i, a) in c.entries() {
                if *i < k {
                    acc = acc.combine(&BigInt::one(), &self.basis()[*i], a);
                }
            }
            acc
        });
        Subspace::span(self.ambient, vecs)
    }

    /// Orthogonal complement of `self` inside `within`.
    pub fn complement_within(&self, within: &Subspace) -> Subspace {
        self.orthogonal_complement().intersection(within)
    }

    /// Trace of a linear endomorphism that preserves the subspace.
    pub fn trace_of<F: Fn(&SparseVec) -> SparseVec>(&self, f: F) -> Rational {
        let mut t = Rational::zero();
        for (k, b) in self.basis().iter().enumerate() {
            t += self.basis.pivot_coordinate(k, &f(b));
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(pairs.iter().map(|&(i, x)| (i, BigInt::from(x))))
    }

    #[test]
    fn combine_cancels() {
        let a = v(&[(0, 1), (2, 3)]);
        let b = v(&[(0, 2), (1, 1)]);
        let c = a.combine(&BigInt::from(2), &b, &BigInt::from(-1));
        assert_eq!(c, v(&[(1, -1), (2, 6)]));
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // columns: e0 -> (1,1), e1 -> (2,2), e2 -> (0,1)
        let imgs = vec![v(&[(0, 1), (1, 1)]), v(&[(0, 2), (1, 2)]), v(&[(1, 1)])];
        let ker = kernel(&imgs);
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], v(&[(0, 2), (1, -1)]));
    }

    #[test]
    fn subspace_ops() {
        let u = Subspace::span(3, vec![v(&[(0, 1)]), v(&[(1, 1)])]);
        let w = Subspace::span(3, vec![v(&[(1, 1)]), v(&[(2, 1)])]);
        assert_eq!(u.intersection(&w).dim(), 1);
        assert!(u.intersection(&w).contains(&v(&[(1, 5)])));
        assert_eq!(u.sum(&w).dim(), 3);
        let perp = u.orthogonal_complement();
        assert!(perp.same_as(&Subspace::span(3, vec![v(&[(2, 1)])])));
    }

    #[test]
    fn trace_of_swap_on_plane() {
        let u = Subspace::span(2, vec![v(&[(0, 1)]), v(&[(1, 1)])]);
        let t = u.trace_of(|x| x.reindex(|i| 1 - i));
        assert!(t.is_zero());
        let sym = Subspace::span(2, vec![v(&[(0, 1), (1, 1)])]);
        assert_eq!(sym.trace_of(|x| x.reindex(|i| 1 - i)), Rational::one());
    }

    #[test]
    fn coordinates_roundtrip() {
        let mut e = Echelon::from_vectors(&[v(&[(0, 2), (1, 4)]), v(&[(1, 3), (2, 1)])]);
        e.reduce_fully();
        let x = v(&[(0, 2), (1, 7), (2, 1)]);
        let c = e.coordinates(&x).unwrap();
        let mut back: std::collections::BTreeMap<usize, Rational> = Default::default();
        for (row, ci) in e.rows().iter().zip(&c) {
            for (i, r) in row.to_rational_pairs() {
                *back.entry(i).or_insert_with(Rational::zero) += r * ci;
            }
        }
        let back = SparseVec::from_pairs(back.into_iter().map(|(i, r)| {
            assert!(r.is_integer());
            (i, r.to_integer())
        }));
        assert_eq!(back, x);
    }

    proptest::proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec((0usize..5, -3i64..4), 0..20), ncols in 1usize..7) {
            let mut cols = vec![Vec::new(); ncols];
            for (k, (row, val)) in entries.iter().enumerate() {
                cols[k % ncols].push((*row, BigInt::from(*val)));
            }
            let imgs: Vec<SparseVec> = cols.into_iter().map(SparseVec::from_pairs).collect();
            let ker = kernel(&imgs);
            proptest::prop_assert_eq!(ker.len() + rank(&imgs), ncols);
            for k in &ker {
                let mut acc = SparseVec::new();
                for (j, c) in k.entries() {
                    acc = acc.combine(&BigInt::one(), &imgs[*j], c);
                }
                proptest::prop_assert!(acc.is_zero());
            }
        }
    }
}
