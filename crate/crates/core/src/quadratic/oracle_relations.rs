//! Relations recovered from the tensor model instead of the presentation.

use crate::error::{Error, Result};
use crate::linalg::{kernel, Subspace};
use crate::oracle::{diagram_evaluations, FiniteRankContext, TensorSpace};
use crate::LieType;

use super::presentation::{ambient_of, check_degree_two, word_space, Index};

/// Kernel of `x ↦ (double contraction) ∘ ρ(x)` on the degree-two words at one
/// index, together with the ranks at which it was computed.
#[derive(Clone, Debug)]
pub struct OracleRelations {
    pub g: LieType,
    pub index: Index,
    pub ranks: (usize, usize),
    pub space: Subspace,
}

/// Computes the relation space at `idx` from the finite-rank model.
///
/// The kernel is evaluated at `rank` (default: `p + q` for `sl`, `p` for
/// `o`/`sp`) and again one rank higher; the two must agree.
pub fn relation_space_from_oracle(g: LieType, idx: Index, rank: Option<usize>) -> Result<OracleRelations> {
    check_degree_two(g, idx)?;
    let n = rank.unwrap_or(match g {
        LieType::Sl => idx.0 + idx.1,
        _ => idx.0,
    });
    let low = kernel_at(g, idx, n)?;
    let high = kernel_at(g, idx, n + 1)?;
    if !low.same_as(&high) {
        return Err(Error::NotStabilized {
            low: n,
            high: n + 1,
            detail: format!("relation kernel at {idx:?} has dimension {} then {}", low.dim(), high.dim()),
        });
    }
    Ok(OracleRelations { g, index: idx, ranks: (n, n + 1), space: low })
}

fn kernel_at(g: LieType, idx: Index, n: usize) -> Result<Subspace> {
    let (p, q) = idx;
    let ctx = FiniteRankContext::new(g, n)?;
    let space = TensorSpace::new(ctx, p, q)?;
    // 0-based slots contracted first by the last generator, then by the one before
    let pairs = match g {
        LieType::Sl => vec![(p - 1, p + q - 1), (p - 2, p + q - 2)],
        _ => vec![(p - 2, p - 1), (p - 4, p - 3)],
    };
    let amb = ambient_of(g, idx);
    let ix = amb.index();
    let images = diagram_evaluations(&space, &pairs, ix.elements())?;
    let ker = Subspace::span(amb.order(), kernel(&images));
    Ok(match g {
        LieType::Sl => ker,
        _ => ker.intersection(word_space(g, idx, 2).space()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::relation_subspace;
    use crate::symgroup::{Ambient, GroupAlgebraElement, GroupElement, Permutation};

    #[test]
    fn sl_kernel_contains_obvious_relations() {
        let r = relation_space_from_oracle(LieType::Sl, (2, 2), None).unwrap();
        assert_eq!(r.space.dim(), 2);
        let amb = Ambient::Product(2, 2);
        let t = Permutation::transposition(2, 1, 2);
        let a = GroupElement::new(t.clone(), Permutation::identity(2));
        let b = GroupElement::new(Permutation::identity(2), t.clone());
        let ab = GroupElement::new(t.clone(), t);
        let one = GroupAlgebraElement::one(amb);
        assert!(r.space.contains(&(&one - &GroupAlgebraElement::basis(amb, ab)).to_vector()));
        let diff = &GroupAlgebraElement::basis(amb, a) - &GroupAlgebraElement::basis(amb, b);
        assert!(r.space.contains(&diff.to_vector()));
        assert!(r.space.same_as(&relation_subspace(LieType::Sl, (2, 2)).unwrap()));
    }

    #[test]
    fn o_sp_kernels_match_presentation_at_four() {
        for g in [LieType::O, LieType::Sp] {
            let r = relation_space_from_oracle(g, (4, 0), None).unwrap();
            assert_eq!(r.space.dim(), 3);
            assert!(r.space.same_as(&relation_subspace(g, (4, 0)).unwrap()), "{g}");
        }
    }

    #[test]
    fn tiny_rank_does_not_stabilize() {
        assert!(matches!(
            relation_space_from_oracle(LieType::Sl, (2, 2), Some(1)),
            Err(Error::NotStabilized { .. })
        ));
        assert!(relation_space_from_oracle(LieType::Sl, (2, 1), None).is_err());
    }
}

#[cfg(test)]
mod heavier {
    use super::*;
    use crate::quadratic::{indices, relation_subspace, step_down};

    #[test]
    fn presentation_matches_oracle_up_to_five() {
        for g in [LieType::Sl, LieType::O, LieType::Sp] {
            for idx in indices(g, 5) {
                if step_down(g, idx, 2).is_none() {
                    continue;
                }
                let r = relation_space_from_oracle(g, idx, None).unwrap();
                assert!(r.space.same_as(&relation_subspace(g, idx).unwrap()), "{g} {idx:?}");
            }
        }
    }
}
