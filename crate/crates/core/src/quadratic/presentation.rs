//! Concrete generators for the base ring, the degree-one bimodule and the
//! quadratic relations, all realized inside group algebras.
//!
//! A word of `k` generators starting at index `(p, q)` is identified with
//! `e_k · C[G_{p,q}]`: the element `x` stands for the composite of `k`
//! contractions on the last slots precomposed with `ρ(x)`. For `sl` the
//! idempotent `e_k` is `1`. For `o`/`sp` it is the product of the symmetrizers
//! (antisymmetrizers for `sp`) of the contracted letter pairs.

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{Rational, Subspace};
use crate::partitions::{Label, Partition};
use crate::symgroup::{central_idempotent, Ambient, GroupAlgebraElement, GroupElement, Permutation, RightIdeal};
use crate::LieType;

/// An index of the base ring: `(p, q)` for `sl`, `(p, 0)` for `o`/`sp`.
pub type Index = (usize, usize);

pub fn ambient_of(g: LieType, idx: Index) -> Ambient {
    match g {
        LieType::Sl => Ambient::Product(idx.0, idx.1),
        _ => Ambient::Single(idx.0),
    }
}

/// Where a word of `k` generators starting at `idx` lands, if it fits.
pub fn step_down(g: LieType, idx: Index, k: usize) -> Option<Index> {
    match g {
        LieType::Sl => Some((idx.0.checked_sub(k)?, idx.1.checked_sub(k)?)),
        _ => Some((idx.0.checked_sub(2 * k)?, 0)),
    }
}

/// Largest `k` with a degree-`k` component starting at `idx`.
pub fn top_degree(g: LieType, idx: Index) -> usize {
    match g {
        LieType::Sl => idx.0.min(idx.1),
        _ => idx.0 / 2,
    }
}

/// Indices of the base ring of `A^r`.
pub fn indices(g: LieType, r: usize) -> Vec<Index> {
    match g {
        LieType::Sl => (0..=r).flat_map(|p| (0..=r - p).map(move |q| (p, q))).collect(),
        _ => (0..=r).map(|p| (p, 0)).collect(),
    }
}

fn transposition_element(g: LieType, idx: Index, a: usize, left: bool) -> GroupElement {
    let (p, q) = idx;
    match (g, left) {
        (LieType::Sl, true) => GroupElement::new(Permutation::transposition(p, a, a - 1), Permutation::identity(q)),
        (LieType::Sl, false) => GroupElement::new(Permutation::identity(p), Permutation::transposition(q, a, a - 1)),
        _ => GroupElement::single(Permutation::transposition(p, a, a - 1)),
    }
}

/// `1 + ε·t` for a group element `t`.
fn one_plus(ambient: Ambient, t: GroupElement, sign: i64) -> GroupAlgebraElement {
    GroupAlgebraElement::from_terms(
        ambient,
        [(ambient.identity(), Rational::one()), (t, Rational::from_integer(sign.into()))],
    )
}

/// Idempotent of the letter pair contracted by the `j`-th generator of a word
/// starting at `idx` (`j = 0` is applied first). Always `1` for `sl`.
pub fn level_idempotent(g: LieType, idx: Index, j: usize) -> GroupAlgebraElement {
    let ambient = ambient_of(g, idx);
    match g {
        LieType::Sl => GroupAlgebraElement::one(ambient),
        _ => {
            let top = idx.0 - 2 * j;
            let t = transposition_element(g, idx, top, true);
            let sign = if g == LieType::O { 1 } else { -1 };
            one_plus(ambient, t, sign).scale(&Rational::new(1.into(), 2.into()))
        }
    }
}

/// `e_k`, the product of the first `k` level idempotents.
pub fn word_idempotent(g: LieType, idx: Index, k: usize) -> GroupAlgebraElement {
    (0..k).fold(GroupAlgebraElement::one(ambient_of(g, idx)), |acc, j| &acc * &level_idempotent(g, idx, j))
}

/// Product of all level idempotents `0..k` except `skip` and `skip + 1`.
pub(crate) fn idempotent_without(g: LieType, idx: Index, k: usize, skip: usize) -> GroupAlgebraElement {
    (0..k)
        .filter(|&j| j != skip && j != skip + 1)
        .fold(GroupAlgebraElement::one(ambient_of(g, idx)), |acc, j| &acc * &level_idempotent(g, idx, j))
}

/// The right ideal `e_k C[G]` of words of length `k`.
pub fn word_space(g: LieType, idx: Index, k: usize) -> RightIdeal {
    RightIdeal::generated_by(ambient_of(g, idx), &[word_idempotent(g, idx, k)])
}

/// Relabels an element of `C[S_m]` onto the last `m` of `p` letters.
fn onto_last_letters(x: &GroupAlgebraElement, p: usize) -> GroupAlgebraElement {
    let (m, _) = x.ambient().degrees();
    let off = p - m;
    GroupAlgebraElement::from_terms(
        Ambient::Single(p),
        x.terms().map(|(s, c)| {
            let images: Vec<usize> = (0..p).map(|i| if i < off { i + 1 } else { off + s.left.apply(i - off) + 1 }).collect();
            (GroupElement::single(Permutation::from_one_line(&images).expect("bijection")), c.clone())
        }),
    )
}

/// Irreducible constituent of the degree-two word space of `S_4` (acting on the
/// last four letters) that the double contraction annihilates.
pub fn relation_constituent(g: LieType) -> Result<Partition> {
    match g {
        LieType::O => Ok(Partition::of(&[3, 1])),
        LieType::Sp => Ok(Partition::of(&[2, 1, 1])),
        LieType::Sl => Err(Error::WrongType { expected: "o or sp", got: g }),
    }
}

/// Generators of the relation space at a degree-two index, as a right ideal.
///
/// `sl`: `(1 − a)(1 + b)` and `(1 + a)(1 − b)` with `a = (p, p−1)` on the
/// left and `b = (q, q−1)` on the right. `o`/`sp`: `e_2 · c`, where `c` is
/// the central idempotent of [`relation_constituent`] for the last four
/// letters.
pub fn relation_generators(g: LieType, idx: Index) -> Result<Vec<GroupAlgebraElement>> {
    check_degree_two(g, idx)?;
    Ok(match g {
        LieType::Sl => sl_pair(idx, [(-1, 1), (1, -1)]),
        _ => {
            let c = central_idempotent(&Label::Single(relation_constituent(g)?), Ambient::Single(4));
            vec![&word_idempotent(g, idx, 2) * &onto_last_letters(&c, idx.0)]
        }
    })
}

/// Generators of `R̄` for `sl`: `(1 + a)(1 + b)` and `(1 − a)(1 − b)`.
pub fn bar_relation_generators(idx: Index) -> Result<Vec<GroupAlgebraElement>> {
    check_degree_two(LieType::Sl, idx)?;
    Ok(sl_pair(idx, [(1, 1), (-1, -1)]))
}

fn sl_pair(idx: Index, signs: [(i64, i64); 2]) -> Vec<GroupAlgebraElement> {
    let ambient = ambient_of(LieType::Sl, idx);
    let a = transposition_element(LieType::Sl, idx, idx.0, true);
    let b = transposition_element(LieType::Sl, idx, idx.1, false);
    signs
        .iter()
        .map(|&(x, y)| &one_plus(ambient, a.clone(), x) * &one_plus(ambient, b.clone(), y))
        .collect()
}

pub(crate) fn check_degree_two(g: LieType, idx: Index) -> Result<()> {
    if step_down(g, idx, 2).is_none() || (g != LieType::Sl && idx.1 != 0) {
        return Err(Error::IndexOutOfRange(format!("no degree-two component at {idx:?} for {g}")));
    }
    Ok(())
}

/// Presentation-based relation subspace at one index.
pub fn relation_subspace(g: LieType, idx: Index) -> Result<Subspace> {
    Ok(RightIdeal::generated_by(ambient_of(g, idx), &relation_generators(g, idx)?).space().clone())
}

/// Applies `σ` to every vector of a subspace of `C[G]`.
pub fn twist_subspace(ambient: Ambient, s: &Subspace) -> Subspace {
    Subspace::span(
        s.ambient(),
        s.basis().iter().map(|v| GroupAlgebraElement::from_vector(ambient, v).sign_twist().to_vector()),
    )
}
