//! The graded algebras `A^r` as quadratic algebras over a sum of symmetric
//! group algebras: presentation, graded components, quadratic duals and the
//! duality checks.

mod hilbert;
mod oracle_relations;
mod presentation;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Subspace, SparseVec};
use crate::symgroup::{group_generators, Ambient, GroupAlgebraElement, GroupElement, RightIdeal};
use crate::LieType;

pub use hilbert::{hilbert_koszul_test, hilbert_series, HilbertBlock, HilbertSeries, KoszulReport};
pub use oracle_relations::{relation_space_from_oracle, OracleRelations};
pub use presentation::{
    ambient_of, bar_relation_generators, indices, level_idempotent, relation_constituent, relation_generators,
    relation_subspace, step_down, top_degree, twist_subspace, word_idempotent, word_space, Index,
};

/// `A_0 = ⊕ C[G_i]` over the indices of `A^r`.
#[derive(Clone, Debug)]
pub struct GradedBaseRing {
    pub g: LieType,
    pub r: usize,
    indices: Vec<Index>,
}

impl GradedBaseRing {
    pub fn new(g: LieType, r: usize) -> Self {
        Self { g, r, indices: indices(g, r) }
    }

    pub fn indices(&self) -> &[Index] {
        &self.indices
    }

    pub fn ambient(&self, idx: Index) -> Ambient {
        ambient_of(self.g, idx)
    }

    pub fn dim(&self) -> usize {
        self.indices.iter().map(|&i| self.ambient(i).order()).sum()
    }

    /// Componentwise identities; their sum is the unit of `A_0`.
    pub fn unit_components(&self) -> Vec<GroupAlgebraElement> {
        self.indices.iter().map(|&i| GroupAlgebraElement::one(self.ambient(i))).collect()
    }
}

/// `A_1`: one right ideal `e_1 C[G_{idx}]` per index that has room for a
/// contraction, with `C[G_{target}]` acting on the left through the inclusion.
#[derive(Clone, Debug)]
pub struct DegreeOneBimodule {
    pub g: LieType,
    components: BTreeMap<Index, RightIdeal>,
}

impl DegreeOneBimodule {
    pub fn new(base: &GradedBaseRing) -> Self {
        let components = base
            .indices()
            .iter()
            .filter(|&&i| step_down(base.g, i, 1).is_some())
            .map(|&i| (i, word_space(base.g, i, 1)))
            .collect();
        Self { g: base.g, components }
    }

    pub fn component(&self, idx: Index) -> Option<&RightIdeal> {
        self.components.get(&idx)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Index, &RightIdeal)> {
        self.components.iter()
    }

    pub fn generator(&self, idx: Index) -> Option<GroupAlgebraElement> {
        self.components.contains_key(&idx).then(|| word_idempotent(self.g, idx, 1))
    }

    /// `y · x` for `y` in the group algebra of the target index.
    pub fn left_act(&self, y: &GroupAlgebraElement, idx: Index, x: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        let target = step_down(self.g, idx, 1).ok_or_else(|| Error::IndexOutOfRange(format!("{idx:?}")))?;
        let amb = ambient_of(self.g, idx);
        if y.ambient() != ambient_of(self.g, target) || x.ambient() != amb {
            return Err(Error::GroupMismatch(y.ambient().to_string(), amb.to_string()));
        }
        y.embed(amb).multiply(x)
    }

    /// Checks that the left action of generators preserves every component.
    pub fn is_bimodule(&self) -> bool {
        self.components.iter().all(|(&idx, ideal)| {
            let target = step_down(self.g, idx, 1).expect("component has a target");
            left_stable(self.g, idx, target, ideal.space())
        })
    }
}

/// Is `s ⊂ C[G_idx]` stable under left multiplication by `C[G_lower]`?
fn left_stable(g: LieType, idx: Index, lower: Index, s: &Subspace) -> bool {
    let amb = ambient_of(g, idx);
    let (p, q) = amb.degrees();
    group_generators(ambient_of(g, lower)).iter().all(|h| {
        let h = h.extend(p, q);
        s.basis().iter().all(|v| s.contains(&GroupAlgebraElement::left_multiply_vector(amb, &h, v)))
    })
}

/// Quadratic relations: one subspace of `e_2 C[G_{idx}]` per degree-two index.
#[derive(Clone, Debug)]
pub struct RelationSpace {
    pub g: LieType,
    components: BTreeMap<Index, Subspace>,
}

impl RelationSpace {
    /// The relations of the presentation, for every index of `A^r`.
    pub fn presentation(g: LieType, r: usize) -> Result<Self> {
        let components = indices(g, r)
            .into_par_iter()
            .filter(|&i| step_down(g, i, 2).is_some())
            .map(|i| Ok((i, relation_subspace(g, i)?)))
            .collect::<Result<_>>()?;
        Ok(Self { g, components })
    }

    pub fn from_components(g: LieType, components: BTreeMap<Index, Subspace>) -> Self {
        Self { g, components }
    }

    pub fn get(&self, idx: Index) -> Option<&Subspace> {
        self.components.get(&idx)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Index, &Subspace)> {
        self.components.iter()
    }

    pub fn dim(&self, idx: Index) -> usize {
        self.get(idx).map_or(0, Subspace::dim)
    }

    pub fn same_as(&self, other: &RelationSpace) -> bool {
        self.g == other.g
            && self.components.len() == other.components.len()
            && self.components.iter().all(|(i, s)| other.get(*i).is_some_and(|t| t.same_as(s)))
    }

    /// Closure under both actions and containment in the degree-two words.
    pub fn is_sub_bimodule(&self) -> bool {
        self.components.iter().all(|(&idx, s)| {
            let amb = ambient_of(self.g, idx);
            let words = word_space(self.g, idx, 2);
            let lower = step_down(self.g, idx, 2).expect("degree-two index");
            words.space().contains_subspace(s)
                && RightIdeal::from_subspace(amb, s.clone()).is_ok()
                && left_stable(self.g, idx, lower, s)
        })
    }

    /// Orthogonal complement inside the degree-two words under the trace form.
    pub fn perp(&self) -> Result<RelationSpace> {
        let components = self
            .components
            .par_iter()
            .map(|(&idx, s)| {
                let words = word_space(self.g, idx, 2);
                let c = s.complement_within(words.space());
                if c.dim() + s.dim() != words.dim() || c.intersection(s).dim() != 0 {
                    return Err(Error::DegeneratePairing(format!(
                        "at {idx:?}: dim R = {}, dim R^⊥ = {}, words = {}",
                        s.dim(),
                        c.dim(),
                        words.dim()
                    )));
                }
                Ok((idx, c))
            })
            .collect::<Result<_>>()?;
        Ok(RelationSpace { g: self.g, components })
    }
}

/// The degree-`k` component starting at `top`: words modulo relations.
#[derive(Clone, Debug)]
pub struct Component {
    pub top: Index,
    pub bottom: Index,
    pub degree: usize,
    words: Subspace,
    ideal: Subspace,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.words.dim() - self.ideal.dim()
    }

    pub fn words(&self) -> &Subspace {
        &self.words
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }
}

/// Element of a graded component, represented by a word in `e_k C[G_top]`.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    pub top: Index,
    pub degree: usize,
    pub rep: GroupAlgebraElement,
}

/// `A^r = T_{A_0}(A_1)/(R)` with every graded component computed.
#[derive(Clone, Debug)]
pub struct QuadraticAlgebra {
    pub base: GradedBaseRing,
    pub one: DegreeOneBimodule,
    pub relations: RelationSpace,
    /// `true` for an algebra produced by [`quadratic_dual`].
    pub is_dual: bool,
    components: BTreeMap<(Index, usize), Component>,
}

/// Builds `A^r` from the presentation.
pub fn build_algebra(g: LieType, r: usize) -> Result<QuadraticAlgebra> {
    QuadraticAlgebra::from_relations(g, r, RelationSpace::presentation(g, r)?, false)
}

/// Same base and generators, relations replaced by their orthogonal complement.
pub fn quadratic_dual(a: &QuadraticAlgebra) -> Result<QuadraticAlgebra> {
    QuadraticAlgebra::from_relations(a.g(), a.r(), a.relations.perp()?, !a.is_dual)
}

impl QuadraticAlgebra {
    pub fn from_relations(g: LieType, r: usize, relations: RelationSpace, is_dual: bool) -> Result<Self> {
        if relations.g != g {
            return Err(Error::WrongType { expected: "relations of the same type", got: relations.g });
        }
        let base = GradedBaseRing::new(g, r);
        let one = DegreeOneBimodule::new(&base);
        let jobs: Vec<(Index, usize)> =
            base.indices().iter().flat_map(|&i| (0..=top_degree(g, i)).map(move |k| (i, k))).collect();
        let components = jobs
            .into_par_iter()
            .map(|(idx, k)| Ok(((idx, k), compute_component(g, &relations, idx, k)?)))
            .collect::<Result<_>>()?;
        Ok(Self { base, one, relations, is_dual, components })
    }

    pub fn g(&self) -> LieType {
        self.base.g
    }

    pub fn r(&self) -> usize {
        self.base.r
    }

    pub fn component(&self, top: Index, degree: usize) -> Option<&Component> {
        self.components.get(&(top, degree))
    }

    pub fn components(&self) -> impl Iterator<Item = &Component> {
        self.components.values()
    }

    /// Dimension of the degree-`k` piece leaving `top`; zero if it does not fit.
    pub fn dim(&self, top: Index, degree: usize) -> usize {
        self.component(top, degree).map_or(0, Component::dim)
    }

    pub fn top_degree(&self) -> usize {
        self.components.keys().map(|(_, k)| *k).max().unwrap_or(0)
    }

    /// Wraps a representative after checking it is a word of the right shape.
    pub fn element(&self, top: Index, degree: usize, rep: GroupAlgebraElement) -> Result<AlgebraElement> {
        let c = self
            .component(top, degree)
            .ok_or_else(|| Error::IndexOutOfRange(format!("no degree-{degree} component at {top:?}")))?;
        if rep.ambient() != ambient_of(self.g(), top) || !c.words.contains(&rep.to_vector()) {
            return Err(Error::Shape(format!("{rep} is not a degree-{degree} word at {top:?}")));
        }
        Ok(AlgebraElement { top, degree, rep })
    }

    /// `upper · lower`; `None` when the indices do not chain, in which case the
    /// product is zero by the grading.
    pub fn multiply(&self, upper: &AlgebraElement, lower: &AlgebraElement) -> Result<Option<AlgebraElement>> {
        if step_down(self.g(), lower.top, lower.degree) != Some(upper.top) {
            return Ok(None);
        }
        let rep = upper.rep.embed(ambient_of(self.g(), lower.top)).multiply(&lower.rep)?;
        self.element(lower.top, upper.degree + lower.degree, rep).map(Some)
    }

    /// Whether an element vanishes in the quotient.
    pub fn is_zero(&self, x: &AlgebraElement) -> bool {
        self.component(x.top, x.degree).is_some_and(|c| c.ideal.contains(&x.rep.to_vector()))
    }

    /// Serializable summary: dimensions and relation bases.
    pub fn dump(&self) -> AlgebraDump {
        let ix_elems = |idx: Index| ambient_of(self.g(), idx).index();
        AlgebraDump {
            g: self.g(),
            r: self.r(),
            dual: self.is_dual,
            components: self
                .components
                .values()
                .map(|c| ComponentDump {
                    top: c.top,
                    bottom: c.bottom,
                    degree: c.degree,
                    words: c.words.dim(),
                    dim: c.dim(),
                })
                .collect(),
            relations: self
                .relations
                .components()
                .map(|(&idx, s)| {
                    let ix = ix_elems(idx);
                    RelationDump {
                        index: idx,
                        dim: s.dim(),
                        basis: s.basis().iter().map(|v| coefficient_list(ix.elements(), v)).collect(),
                    }
                })
                .collect(),
        }
    }
}

fn coefficient_list(elements: &[GroupElement], v: &SparseVec) -> Vec<(String, String)> {
    v.entries().iter().map(|(i, c)| (elements[*i].to_string(), c.to_string())).collect()
}

fn compute_component(g: LieType, relations: &RelationSpace, top: Index, k: usize) -> Result<Component> {
    let bottom = step_down(g, top, k).ok_or_else(|| Error::IndexOutOfRange(format!("{top:?} degree {k}")))?;
    let amb = ambient_of(g, top);
    let words = word_space(g, top, k).space().clone();
    let mut gens = Vec::new();
    for j in 0..k.saturating_sub(1) {
        let level = step_down(g, top, j).expect("inside the word");
        let Some(rel) = relations.get(level) else { continue };
        let outer = presentation::idempotent_without(g, top, k, j);
        let level_amb = ambient_of(g, level);
        for v in rel.basis() {
            gens.push(&outer * &GroupAlgebraElement::from_vector(level_amb, v).embed(amb));
        }
    }
    let ideal = RightIdeal::generated_by(amb, &gens).space().clone();
    if !words.contains_subspace(&ideal) {
        return Err(Error::Shape(format!("relations at {top:?} degree {k} leave the word space")));
    }
    Ok(Component { top, bottom, degree: k, words, ideal })
}

/// JSON form of an algebra.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDump {
    pub g: LieType,
    pub r: usize,
    pub dual: bool,
    pub components: Vec<ComponentDump>,
    pub relations: Vec<RelationDump>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ComponentDump {
    pub top: Index,
    pub bottom: Index,
    pub degree: usize,
    pub words: usize,
    pub dim: usize,
}

/// Relation basis vectors as `(group element, integer coefficient)` lists.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RelationDump {
    pub index: Index,
    pub dim: usize,
    pub basis: Vec<Vec<(String, String)>>,
}

/// Outcome of a componentwise comparison; `witness` is the first failing index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub holds: bool,
    pub checked: Vec<Index>,
    pub witness: Option<Index>,
}

impl DualityReport {
    fn from_checks(checks: Vec<(Index, bool)>) -> Self {
        let witness = checks.iter().find(|(_, ok)| !ok).map(|(i, _)| *i);
        Self { holds: witness.is_none(), checked: checks.into_iter().map(|(i, _)| i).collect(), witness }
    }
}

/// `σ(R^{p,q}) = R̄^{p,q}` and `R^⊥ = R̄^{p,q}` for all `p + q ≤ r`.
pub fn check_self_duality_sl(r: usize) -> Result<DualityReport> {
    let rel = RelationSpace::presentation(LieType::Sl, r)?;
    let perp = rel.perp()?;
    let checks = rel
        .components()
        .map(|(&idx, s)| {
            let amb = ambient_of(LieType::Sl, idx);
            let bar = RightIdeal::generated_by(amb, &bar_relation_generators(idx)?).space().clone();
            let twisted = twist_subspace(amb, s);
            let ok = twisted.same_as(&bar) && perp.get(idx).is_some_and(|c| c.same_as(&bar));
            Ok((idx, ok))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DualityReport::from_checks(checks))
}

/// `σ` carries the `o` presentation onto the `sp` one: generators, relations,
/// and the relation ideal in every degree, for `p ≤ r`.
pub fn check_o_sp_isomorphism(r: usize) -> Result<DualityReport> {
    let o = build_algebra(LieType::O, r)?;
    let sp = build_algebra(LieType::Sp, r)?;
    let mut checks = Vec::new();
    for &idx in o.base.indices() {
        let amb = ambient_of(LieType::O, idx);
        let mut ok = true;
        if let (Some(a), Some(b)) = (o.one.generator(idx), sp.one.generator(idx)) {
            ok &= a.sign_twist() == b;
        }
        if let Some(s) = o.relations.get(idx) {
            ok &= sp.relations.get(idx).is_some_and(|t| twist_subspace(amb, s).same_as(t));
        }
        for k in 0..=top_degree(LieType::O, idx) {
            let (a, b) = (o.component(idx, k).expect("built"), sp.component(idx, k).expect("built"));
            ok &= twist_subspace(amb, &a.words).same_as(&b.words) && twist_subspace(amb, &a.ideal).same_as(&b.ideal);
        }
        checks.push((idx, ok));
    }
    Ok(DualityReport::from_checks(checks))
}
