//! Group algebras of `S_p` and `S_p × S_q` with exact rational coefficients.

mod characters;
mod perm;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use characters::{character, class_size};
pub use perm::Permutation;

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec, Subspace};
use crate::partitions::{BiPartition, Label, Partition};

/// The finite group a group algebra lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ambient {
    /// `S_p`.
    Single(usize),
    /// `S_p × S_q`.
    Product(usize, usize),
}

impl Ambient {
    pub fn degrees(self) -> (usize, usize) {
        match self {
            Ambient::Single(p) => (p, 0),
            Ambient::Product(p, q) => (p, q),
        }
    }

    pub fn order(self) -> usize {
        let (p, q) = self.degrees();
        (1..=p).product::<usize>() * (1..=q).product::<usize>()
    }

    pub fn identity(self) -> GroupElement {
        let (p, q) = self.degrees();
        GroupElement::new(Permutation::identity(p), Permutation::identity(q))
    }

    /// Deterministic enumeration with a reverse lookup, shared process-wide.
    pub fn index(self) -> Arc<GroupIndex> {
        static CACHE: OnceLock<RwLock<HashMap<Ambient, Arc<GroupIndex>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(ix) = cache.read().expect("group index cache poisoned").get(&self) {
            return ix.clone();
        }
        let ix = Arc::new(GroupIndex::build(self));
        cache.write().expect("group index cache poisoned").entry(self).or_insert(ix).clone()
    }

    /// Representatives of the conjugacy classes with their sizes.
    pub fn classes(self) -> Vec<(GroupElement, u64)> {
        let (p, q) = self.degrees();
        let mut out = Vec::new();
        for a in Partition::all_of_size(p) {
            for b in Partition::all_of_size(q) {
                out.push((
                    GroupElement::new(Permutation::with_cycle_type(&a), Permutation::with_cycle_type(&b)),
                    class_size(&a) * class_size(&b),
                ));
            }
        }
        out
    }

    /// Labels of the irreducible representations.
    pub fn irreps(self) -> Vec<Label> {
        match self {
            Ambient::Single(p) => Partition::all_of_size(p).into_iter().map(Label::Single).collect(),
            Ambient::Product(p, q) => Partition::all_of_size(p)
                .into_iter()
                .flat_map(|a| Partition::all_of_size(q).into_iter().map(move |b| Label::Bi(BiPartition::new(a.clone(), b))))
                .collect(),
        }
    }

    /// Irreducible character `label` at `g`.
    pub fn character(self, label: &Label, g: &GroupElement) -> i64 {
        match (self, label) {
            (Ambient::Single(_), Label::Single(l)) => character(l, &g.left.cycle_type()),
            (Ambient::Product(..), Label::Bi(b)) => {
                character(&b.first, &g.left.cycle_type()) * character(&b.second, &g.right.cycle_type())
            }
            _ => panic!("label {label} does not index irreps of {self}"),
        }
    }

    pub fn irrep_dim(self, label: &Label) -> u64 {
        match label {
            Label::Single(l) => l.symmetric_group_dim(),
            Label::Bi(b) => b.first.symmetric_group_dim() * b.second.symmetric_group_dim(),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Single(p) => write!(f, "S_{p}"),
            Ambient::Product(p, q) => write!(f, "S_{p}×S_{q}"),
        }
    }
}

/// Element `(s, t)` of `S_p × S_q`; `t` has degree 0 in `S_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub left: Permutation,
    pub right: Permutation,
}

impl GroupElement {
    pub fn new(left: Permutation, right: Permutation) -> Self {
        Self { left, right }
    }

    pub fn single(p: Permutation) -> Self {
        Self { left: p, right: Permutation::identity(0) }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement::new(self.left.compose(&other.left), self.right.compose(&other.right))
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement::new(self.left.inverse(), self.right.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.left.is_identity() && self.right.is_identity()
    }

    /// Sign of the whole element.
    pub fn sign(&self) -> i8 {
        self.left.sign() * self.right.sign()
    }

    /// Extends both factors by fixed points.
    pub fn extend(&self, p: usize, q: usize) -> GroupElement {
        GroupElement::new(self.left.extend(p), self.right.extend(q))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.right.degree() == 0 {
            write!(f, "{}", self.left)
        } else {
            write!(f, "{}⊠{}", self.left, self.right)
        }
    }
}

/// Enumeration of a group with a lookup table.
#[derive(Debug)]
pub struct GroupIndex {
    elements: Vec<GroupElement>,
    lookup: HashMap<GroupElement, usize>,
}

impl GroupIndex {
    fn build(ambient: Ambient) -> Self {
        let (p, q) = ambient.degrees();
        let lefts = Permutation::all(p);
        let rights = Permutation::all(q);
        let elements: Vec<GroupElement> = lefts
            .iter()
            .flat_map(|l| rights.iter().map(move |r| GroupElement::new(l.clone(), r.clone())))
            .collect();
        let lookup = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        Self { elements, lookup }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn position(&self, g: &GroupElement) -> usize {
        self.lookup[g]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Finitely supported rational combination of group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    ambient: Ambient,
    coeffs: BTreeMap<GroupElement, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(ambient: Ambient) -> Self {
        Self { ambient, coeffs: BTreeMap::new() }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::basis(ambient, ambient.identity())
    }

    pub fn basis(ambient: Ambient, g: GroupElement) -> Self {
        Self::from_terms(ambient, [(g, Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupElement, Rational)>>(ambient: Ambient, terms: I) -> Self {
        let (p, q) = ambient.degrees();
        let mut coeffs: BTreeMap<GroupElement, Rational> = BTreeMap::new();
        for (g, c) in terms {
            assert!(g.left.degree() == p && g.right.degree() == q, "{g} not in {ambient}");
            *coeffs.entry(g).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { ambient, coeffs }
    }

    /// `s` in `C[S_p]`.
    pub fn perm(p: Permutation) -> Self {
        let n = p.degree();
        Self::basis(Ambient::Single(n), GroupElement::single(p))
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, g: &GroupElement) -> Rational {
        self.coeffs.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.ambient, self.coeffs.iter().map(|(g, x)| (g.clone(), x * c)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::GroupMismatch(self.ambient.to_string(), other.ambient.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_terms(self.ambient, self.coeffs.iter().chain(&other.coeffs).map(|(g, c)| (g.clone(), c.clone()))))
    }

    /// Convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out: HashMap<GroupElement, Rational> = HashMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                *out.entry(a.compose(b)).or_insert_with(Rational::zero) += x * y;
            }
        }
        Ok(Self::from_terms(self.ambient, out))
    }

    /// `s ↦ sgn(s) s` on `C[S_p]`, `(s, t) ↦ sgn(t) (s, t)` on `C[S_p × S_q]`.
    pub fn sign_twist(&self) -> Self {
        let twist = |g: &GroupElement| match self.ambient {
            Ambient::Single(_) => g.left.sign(),
            Ambient::Product(..) => g.right.sign(),
        };
        Self::from_terms(
            self.ambient,
            self.coeffs.iter().map(|(g, c)| (g.clone(), if twist(g) < 0 { -c } else { c.clone() })),
        )
    }

    /// Linear extension of `g ↦ g⁻¹`.
    pub fn antipode(&self) -> Self {
        Self::from_terms(self.ambient, self.coeffs.iter().map(|(g, c)| (g.inverse(), c.clone())))
    }

    /// Image under the inclusion fixing the added letters.
    pub fn embed(&self, target: Ambient) -> Self {
        let (p, q) = target.degrees();
        let (sp, sq) = self.ambient.degrees();
        assert!(sp <= p && sq <= q, "cannot embed {} into {target}", self.ambient);
        assert_eq!(
            matches!(self.ambient, Ambient::Product(..)),
            matches!(target, Ambient::Product(..)),
            "embedding must preserve the group shape"
        );
        Self::from_terms(target, self.coeffs.iter().map(|(g, c)| (g.extend(p, q), c.clone())))
    }

    /// Coefficient vector over the group enumeration, denominators cleared.
    pub fn to_vector(&self) -> SparseVec {
        let ix = self.ambient.index();
        SparseVec::from_rational_pairs(self.coeffs.iter().map(|(g, c)| (ix.position(g), c.clone())))
    }

    pub fn from_vector(ambient: Ambient, v: &SparseVec) -> Self {
        let ix = ambient.index();
        Self::from_terms(
            ambient,
            v.entries().iter().map(|(i, c)| (ix.elements()[*i].clone(), Rational::from_integer(c.clone()))),
        )
    }

    /// Right multiplication by a group element, on coefficient vectors.
    pub fn right_multiply_vector(ambient: Ambient, v: &SparseVec, g: &GroupElement) -> SparseVec {
        let ix = ambient.index();
        v.reindex(|i| ix.position(&ix.elements()[i].compose(g)))
    }

    /// Left multiplication by a group element, on coefficient vectors.
    pub fn left_multiply_vector(ambient: Ambient, g: &GroupElement, v: &SparseVec) -> SparseVec {
        let ix = ambient.index();
        v.reindex(|i| ix.position(&g.compose(&ix.elements()[i])))
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: Self) -> GroupAlgebraElement {
        self.try_add(rhs).expect("adding elements of different group algebras")
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: Self) -> GroupAlgebraElement {
        self + &-rhs
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: Self) -> GroupAlgebraElement {
        self.multiply(rhs).expect("multiplying elements of different group algebras")
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}·")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Unnormalized Young symmetrizer: row symmetrizer times column antisymmetrizer.
///
/// The boxes of `shape` are filled row by row with the 1-based `letters`, so
/// `young_projector(&[2,2], &[p, p-1, p-2, p-3], p)` has rows `{p, p-1}` and
/// `{p-2, p-3}`.
pub fn young_projector(shape: &Partition, letters: &[usize], degree: usize) -> Result<GroupAlgebraElement> {
    if letters.len() != shape.size() {
        return Err(Error::ShapeMismatch { letters: letters.len(), shape: shape.size() });
    }
    if letters.iter().any(|&a| a == 0 || a > degree) {
        return Err(Error::IndexOutOfRange(format!("letters {letters:?} on {degree} points")));
    }
    let ambient = Ambient::Single(degree);
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut k = 0;
    for &r in shape.parts() {
        rows.push(letters[k..k + r].to_vec());
        k += r;
    }
    let cols: Vec<Vec<usize>> = (0..shape.row(0))
        .map(|c| rows.iter().filter(|row| row.len() > c).map(|row| row[c]).collect())
        .collect();
    let product_of = |blocks: &[Vec<usize>], signed: bool| {
        blocks.iter().fold(GroupAlgebraElement::one(ambient), |acc, block| {
            let sum = GroupAlgebraElement::from_terms(
                ambient,
                Permutation::all_on(degree, block).into_iter().map(|s| {
                    let c = if signed && s.sign() < 0 { -Rational::one() } else { Rational::one() };
                    (GroupElement::single(s), c)
                }),
            );
            &acc * &sum
        })
    };
    Ok(&product_of(&rows, false) * &product_of(&cols, true))
}

/// `Y_{λ¹} ⊠ Y_{λ²}` in `C[S_p × S_q]` on the letters `1..|λ¹|` and `1..|λ²|`.
pub fn bi_young_projector(label: &BiPartition, p: usize, q: usize) -> GroupAlgebraElement {
    let first: Vec<usize> = (1..=label.first.size()).collect();
    let second: Vec<usize> = (1..=label.second.size()).collect();
    let a = young_projector(&label.first, &first, p).expect("letters fit");
    let b = young_projector(&label.second, &second, q).expect("letters fit");
    let ambient = Ambient::Product(p, q);
    let mut terms = Vec::new();
    for (s, x) in a.terms() {
        for (t, y) in b.terms() {
            terms.push((GroupElement::new(s.left.clone(), t.left.clone()), x * y));
        }
    }
    GroupAlgebraElement::from_terms(ambient, terms)
}

/// Young projector for any label, on the initial letters.
pub fn label_projector(label: &Label, ambient: Ambient) -> GroupAlgebraElement {
    match (label, ambient) {
        (Label::Single(l), Ambient::Single(p)) => {
            let letters: Vec<usize> = (1..=l.size()).collect();
            young_projector(l, &letters, p).expect("letters fit")
        }
        (Label::Bi(b), Ambient::Product(p, q)) => bi_young_projector(b, p, q),
        _ => panic!("label {label} does not match {ambient}"),
    }
}

/// Central idempotent of the isotypic component `label` in `C[ambient]`.
pub fn central_idempotent(label: &Label, ambient: Ambient) -> GroupAlgebraElement {
    let ix = ambient.index();
    let scale = Rational::new(BigInt::from(ambient.irrep_dim(label)), BigInt::from(ambient.order()));
    GroupAlgebraElement::from_terms(
        ambient,
        ix.elements()
            .iter()
            .map(|g| (g.clone(), &scale * Rational::from_integer(BigInt::from(ambient.character(label, g))))),
    )
}

/// Right ideal of a group algebra, stored as a subspace of coefficient space.
#[derive(Clone, Debug)]
pub struct RightIdeal {
    ambient: Ambient,
    space: Subspace,
}

impl RightIdeal {
    /// `Σ x·C[G]` over the given generators.
    pub fn generated_by(ambient: Ambient, generators: &[GroupAlgebraElement]) -> Self {
        let ix = ambient.index();
        let vecs: Vec<SparseVec> = generators.iter().map(|x| x.to_vector()).collect();
        let space = Subspace::span(
            ambient.order(),
            vecs.iter()
                .flat_map(|v| ix.elements().iter().map(move |g| GroupAlgebraElement::right_multiply_vector(ambient, v, g))),
        );
        Self { ambient, space }
    }

    /// Wraps a subspace after checking it is closed under right multiplication.
    pub fn from_subspace(ambient: Ambient, space: Subspace) -> Result<Self> {
        let ideal = Self { ambient, space };
        if !ideal.is_right_closed() {
            return Err(Error::NotRightModule);
        }
        Ok(ideal)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<GroupAlgebraElement> {
        self.space.basis().iter().map(|v| GroupAlgebraElement::from_vector(self.ambient, v)).collect()
    }

    pub fn is_right_closed(&self) -> bool {
        let gens = group_generators(self.ambient);
        self.space.basis().iter().all(|v| {
            gens.iter()
                .all(|g| self.space.contains(&GroupAlgebraElement::right_multiply_vector(self.ambient, v, g)))
        })
    }

    /// Character of the right regular action restricted to the ideal.
    pub fn character_at(&self, g: &GroupElement) -> Rational {
        self.space
            .trace_of(|v| GroupAlgebraElement::right_multiply_vector(self.ambient, v, g))
    }

    /// Irreducible constituents with multiplicities.
    pub fn decompose(&self) -> Result<BTreeMap<Label, usize>> {
        if !self.is_right_closed() {
            return Err(Error::NotRightModule);
        }
        let classes = self.ambient.classes();
        let values: Vec<(Rational, u64, GroupElement)> =
            classes.into_iter().map(|(g, size)| (self.character_at(&g), size, g)).collect();
        let order = Rational::from_integer(BigInt::from(self.ambient.order()));
        let mut out = BTreeMap::new();
        for label in self.ambient.irreps() {
            let mut s = Rational::zero();
            for (chi, size, g) in &values {
                s += chi * Rational::from_integer(BigInt::from(*size as i64 * self.ambient.character(&label, g)));
            }
            let m = s / &order;
            assert!(m.is_integer() && !m.is_negative(), "non-integral multiplicity {m} for {label}");
            let m: usize = m.to_integer().try_into().expect("small multiplicity");
            if m > 0 {
                out.insert(label, m);
            }
        }
        Ok(out)
    }
}

/// Irreducible constituents of a right ideal, with multiplicities.
pub fn decompose_right_module(m: &RightIdeal) -> Result<BTreeMap<Label, usize>> {
    m.decompose()
}

/// Adjacent transpositions generating the group.
pub fn group_generators(ambient: Ambient) -> Vec<GroupElement> {
    let (p, q) = ambient.degrees();
    let mut out = Vec::new();
    for i in 1..p {
        out.push(GroupElement::new(Permutation::transposition(p, i, i + 1), Permutation::identity(q)));
    }
    for i in 1..q {
        out.push(GroupElement::new(Permutation::identity(p), Permutation::transposition(q, i, i + 1)));
    }
    out
}

/// Idempotent `(1/|S|) Σ χ(s) s` of a one-dimensional character `χ` of the
/// subgroup `S` generated by `generators`, with `χ(generator) = ±1` given.
pub fn character_idempotent(
    ambient: Ambient,
    generators: &[(GroupElement, i8)],
    expected_order: usize,
) -> Result<GroupAlgebraElement> {
    let id = ambient.identity();
    let mut chi: BTreeMap<GroupElement, i8> = BTreeMap::from([(id.clone(), 1)]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let cx = chi[&x];
        for (g, cg) in generators {
            if *cg != 1 && *cg != -1 {
                return Err(Error::Subgroup(format!("character value {cg} is not ±1")));
            }
            let y = x.compose(g);
            let cy = cx * cg;
            match chi.get(&y) {
                Some(&old) if old != cy => {
                    return Err(Error::Subgroup(format!("character is not well defined at {y}")));
                }
                Some(_) => {}
                None => {
                    chi.insert(y.clone(), cy);
                    queue.push_back(y);
                }
            }
        }
    }
    if chi.len() != expected_order {
        return Err(Error::Subgroup(format!(
            "generators span a subgroup of order {}, expected {expected_order}",
            chi.len()
        )));
    }
    let w = Rational::new(BigInt::one(), BigInt::from(chi.len()));
    Ok(GroupAlgebraElement::from_terms(
        ambient,
        chi.into_iter().map(|(g, c)| (g, if c < 0 { -w.clone() } else { w.clone() })),
    ))
}

/// `χ ⊗_{C[S]} C[G]`, realised as the right ideal `e_χ · C[G]`.
pub fn induced_right_ideal(
    ambient: Ambient,
    generators: &[(GroupElement, i8)],
    expected_order: usize,
) -> Result<RightIdeal> {
    let e = character_idempotent(ambient, generators, expected_order)?;
    Ok(RightIdeal::generated_by(ambient, &[e]))
}
