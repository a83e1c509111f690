//! Socle tables from the tensor model, Ext tables, Ext¹ supports, purity and
//! blocks.

mod cache;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{highest_weight_layers, socle_filtration, FiniteRankContext, TensorSpace};
use crate::partitions::{block_label, closure_classes, BiPartition, BlockLabel, Label, Partition};
use crate::symgroup::{label_projector, Ambient};
use crate::LieType;

pub use cache::{Cache, CacheStats, CACHE_VERSION};

/// How oracle tables are computed.
#[derive(Clone, Debug, Default)]
pub struct OracleOptions {
    /// Rank to use instead of [`default_rank`]; the check still runs one higher.
    pub rank: Option<usize>,
    /// Permit a rank override below the default.
    pub allow_unsafe_rank: bool,
    pub cache: Option<Cache>,
}

/// Rank at which tables for labels of size `(p, q)` are computed: `p + q + 2`
/// for `sl` (`dim V = n`), `max(2p, 2)` for `o`/`sp` (`dim V = 2n`).
pub fn default_rank(label: &Label) -> usize {
    match label {
        Label::Bi(b) => b.first.size() + b.second.size() + 2,
        Label::Single(p) => (2 * p.size()).max(2),
    }
}

fn check_label(g: LieType, label: &Label) -> Result<()> {
    block_label(g, label).map(|_| ())
}

fn ambient_for(label: &Label) -> Ambient {
    match label {
        Label::Bi(b) => Ambient::Product(b.first.size(), b.second.size()),
        Label::Single(p) => Ambient::Single(p.size()),
    }
}

/// Layers of the socle filtration of `Ṽ_λ`: `layers[k][μ]` is the
/// multiplicity of `V_μ` in `soc^k / soc^{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleSlice {
    pub g: LieType,
    pub label: Label,
    pub ranks: (usize, usize),
    #[serde(with = "layer_pairs")]
    pub layers: Vec<BTreeMap<Label, u64>>,
}

/// JSON objects need string keys, so layers travel as `[label, multiplicity]` lists.
mod layer_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::partitions::Label;

    pub fn serialize<S: Serializer>(layers: &[BTreeMap<Label, u64>], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<(&Label, &u64)>> = layers.iter().map(|l| l.iter().collect()).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BTreeMap<Label, u64>>, D::Error> {
        let v: Vec<Vec<(Label, u64)>> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|l| l.into_iter().collect()).collect())
    }
}

/// Which oracle computation produces the layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerRoute {
    /// Filtration characters peeled with Freudenthal multiplicities.
    Peeling,
    /// Highest-weight vectors inside each filtration step.
    HighestWeight,
}

fn layers_at(g: LieType, label: &Label, n: usize, route: LayerRoute) -> Result<Vec<BTreeMap<Label, u64>>> {
    let amb = ambient_for(label);
    let (p, q) = amb.degrees();
    let space = TensorSpace::new(FiniteRankContext::new(g, n)?, p, q)?;
    let y = label_projector(label, amb);
    let mut layers = match route {
        LayerRoute::Peeling => socle_filtration(&space, Some(&y))?.layer_labels()?,
        LayerRoute::HighestWeight => highest_weight_layers(&space, Some(&y))?,
    };
    while layers.last().is_some_and(BTreeMap::is_empty) {
        layers.pop();
    }
    Ok(layers)
}

/// Socle layers of `Ṽ_λ` up to `max_layer`, computed at the working rank and
/// one rank higher; disagreement is an error.
pub fn socle_multiplicities(g: LieType, label: &Label, max_layer: usize, opts: &OracleOptions) -> Result<SocleSlice> {
    socle_multiplicities_via(g, label, max_layer, opts, LayerRoute::Peeling)
}

pub fn socle_multiplicities_via(
    g: LieType,
    label: &Label,
    max_layer: usize,
    opts: &OracleOptions,
    route: LayerRoute,
) -> Result<SocleSlice> {
    check_label(g, label)?;
    let base = default_rank(label);
    let n = match opts.rank {
        Some(r) if r < base && !opts.allow_unsafe_rank => {
            return Err(Error::InsufficientRank {
                rank: r,
                reason: format!("{label} needs rank ≥ {base} unless explicitly marked unsafe"),
            })
        }
        Some(r) => r,
        None => base,
    };
    let compute = || -> Result<SocleSlice> {
        let low = layers_at(g, label, n, route)?;
        let high = layers_at(g, label, n + 1, route)?;
        if low != high {
            return Err(Error::NotStabilized {
                low: n,
                high: n + 1,
                detail: format!("socle layers of {label}: {low:?} vs {high:?}"),
            });
        }
        Ok(SocleSlice { g, label: label.clone(), ranks: (n, n + 1), layers: low })
    };
    let mut slice = match (&opts.cache, route) {
        (Some(c), LayerRoute::Peeling) => c.get_or_compute(&format!("socle|{g}|{label}|{n}"), compute)?,
        _ => compute()?,
    };
    slice.layers.truncate(max_layer + 1);
    Ok(slice)
}

/// Does a nonzero entry at layer/degree `i` respect the grading?
/// `sl`: `|μ¹| − |λ¹| = |μ²| − |λ²| = i`; `o`/`sp`: `|μ| − |λ| = 2i`.
pub fn degree_condition(lower: &Label, upper: &Label, i: usize) -> bool {
    let i = i as i64;
    match (lower, upper) {
        (Label::Bi(l), Label::Bi(u)) => {
            u.first.size() as i64 - l.first.size() as i64 == i && u.second.size() as i64 - l.second.size() as i64 == i
        }
        (Label::Single(l), Label::Single(u)) => u.size() as i64 - l.size() as i64 == 2 * i,
        _ => false,
    }
}

/// Collection of socle slices keyed by `(λ, μ, k)`; serialize through [`SocleTable::rows`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SocleTable {
    entries: BTreeMap<(Label, Label, usize), u64>,
}

impl SocleTable {
    pub fn insert(&mut self, slice: &SocleSlice) {
        for (k, layer) in slice.layers.iter().enumerate() {
            for (mu, m) in layer {
                self.entries.insert((slice.label.clone(), mu.clone(), k), *m);
            }
        }
    }

    pub fn get(&self, lambda: &Label, mu: &Label, k: usize) -> u64 {
        self.entries.get(&(lambda.clone(), mu.clone(), k)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Label, Label, usize), &u64)> {
        self.entries.iter()
    }

    /// Layer 0 of every stored `λ` is exactly `{λ: 1}`.
    pub fn layer_zero_normalized(&self) -> bool {
        let labels: BTreeSet<&Label> = self.entries.keys().map(|(l, _, _)| l).collect();
        labels.into_iter().all(|l| {
            let zero: Vec<_> = self.entries.iter().filter(|((a, _, k), _)| a == l && *k == 0).collect();
            zero.len() == 1 && zero[0].0 .1 == *l && *zero[0].1 == 1
        })
    }

    /// Every nonzero entry satisfies the degree condition (`μ` below `λ`).
    pub fn degrees_consistent(&self) -> bool {
        self.entries.iter().all(|((l, m, k), v)| *v == 0 || degree_condition(m, l, *k))
    }

    pub fn rows(&self, g: LieType) -> Vec<TableRow> {
        self.entries
            .iter()
            .map(|((l, m, k), v)| TableRow { g, lambda: l.clone(), mu: m.clone(), i: *k, dim: *v })
            .collect()
    }
}

/// One JSON row `{ g, lambda, mu, i, dim }`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableRow {
    pub g: LieType,
    pub lambda: Label,
    pub mu: Label,
    pub i: usize,
    pub dim: u64,
}

/// `dim Ext^i(V_λ, V_μ)`, nonzero entries only; serialize through [`ExtTable::rows`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub g: LieType,
    pub max_size: usize,
    pub max_degree: usize,
    /// Set for `o`/`sp` tables that include `i ≥ 2`: those entries are socle
    /// data of `Ṽ_μ` read as Ext, which is not established for these types.
    pub interpretation_pending: bool,
    entries: BTreeMap<(Label, Label, usize), u64>,
}

impl ExtTable {
    pub fn empty(g: LieType) -> Self {
        Self { g, max_size: 0, max_degree: 0, interpretation_pending: false, entries: BTreeMap::new() }
    }

    pub fn get(&self, lambda: &Label, mu: &Label, i: usize) -> u64 {
        self.entries.get(&(lambda.clone(), mu.clone(), i)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, lambda: Label, mu: Label, i: usize, dim: u64) {
        if dim == 0 {
            self.entries.remove(&(lambda, mu, i));
        } else {
            self.entries.insert((lambda, mu, i), dim);
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rows in lexicographic label order.
    pub fn rows(&self) -> Vec<TableRow> {
        self.entries
            .iter()
            .map(|((l, m, i), v)| TableRow { g: self.g, lambda: l.clone(), mu: m.clone(), i: *i, dim: *v })
            .collect()
    }
}

/// `true` iff every nonzero entry satisfies the degree condition.
pub fn purity_check(table: &ExtTable) -> bool {
    table.entries.iter().all(|((l, m, i), v)| *v == 0 || degree_condition(l, m, *i))
}

/// `ν^⊥ = (ν¹, (ν²)^⊥)` for `sl`; identity otherwise.
pub fn perp_label(label: &Label) -> Label {
    match label {
        Label::Bi(b) => Label::Bi(b.perp()),
        other => other.clone(),
    }
}

/// `dim Ext^i(V_λ, V_μ)` for one pair.
///
/// `sl`: multiplicity of `V_{λ^⊥}` in layer `i` of `Ṽ_{μ^⊥}`. `o`/`sp`:
/// multiplicity of `V_λ` in layer `i` of `Ṽ_μ`, meaningful as Ext only for
/// `i ≤ 1` (see [`ExtTable::interpretation_pending`]).
pub fn ext_dimension(g: LieType, lambda: &Label, mu: &Label, i: usize, opts: &OracleOptions) -> Result<u64> {
    check_label(g, lambda)?;
    check_label(g, mu)?;
    if !degree_condition(lambda, mu, i) {
        return Ok(0);
    }
    let (a, b) = match g {
        LieType::Sl => (perp_label(lambda), perp_label(mu)),
        _ => (lambda.clone(), mu.clone()),
    };
    let slice = socle_multiplicities(g, &b, i, opts)?;
    Ok(slice.layers.get(i).and_then(|l| l.get(&a)).copied().unwrap_or(0))
}

/// Full table over all labels of size `≤ max_size` and degrees `≤ max_degree`.
///
/// Each `μ` costs one oracle run; nothing is skipped by the degree condition,
/// so the table can be used to test it.
pub fn ext_table(g: LieType, max_size: usize, max_degree: usize, opts: &OracleOptions) -> Result<ExtTable> {
    let labels = Label::all_up_to(g, max_size);
    let slices: Vec<(Label, SocleSlice)> = labels
        .par_iter()
        .map(|mu| {
            let target = if g == LieType::Sl { perp_label(mu) } else { mu.clone() };
            Ok((mu.clone(), socle_multiplicities(g, &target, max_degree, opts)?))
        })
        .collect::<Result<_>>()?;
    let mut table = ExtTable::empty(g);
    table.max_size = max_size;
    table.max_degree = max_degree;
    table.interpretation_pending = g != LieType::Sl && max_degree >= 2;
    for (mu, slice) in slices {
        for (i, layer) in slice.layers.iter().enumerate() {
            for (nu, m) in layer {
                let lambda = if g == LieType::Sl { perp_label(nu) } else { nu.clone() };
                if lambda.size() <= max_size {
                    table.set(lambda, mu.clone(), i, *m);
                }
            }
        }
    }
    Ok(table)
}

fn one_box_up(p: &Partition) -> Vec<Partition> {
    p.up_set().into_iter().collect()
}

/// Labels `μ` with `Ext¹(V_λ, V_μ) ≠ 0`.
///
/// `sl`: one box added to each of `λ¹` and `λ²`. `o`: two boxes added as in
/// the Pieri rule for `S²V`. `sp`: the conjugate rule (`Λ²V`).
pub fn ext1_support(g: LieType, label: &Label) -> Result<BTreeSet<Label>> {
    check_label(g, label)?;
    Ok(match (g, label) {
        (LieType::Sl, Label::Bi(b)) => {
            let mut out = BTreeSet::new();
            for f in one_box_up(&b.first) {
                for s in one_box_up(&b.second) {
                    out.insert(Label::Bi(BiPartition::new(f.clone(), s)));
                }
            }
            out
        }
        (LieType::O, Label::Single(p)) => p.pieri_s2().into_iter().map(Label::Single).collect(),
        (LieType::Sp, Label::Single(p)) => {
            p.conjugate().pieri_s2().into_iter().map(|x| Label::Single(x.conjugate())).collect()
        }
        _ => unreachable!("checked by check_label"),
    })
}

/// Extra size allowed when closing up the Ext¹ graph before restricting to
/// the requested labels.
pub const BLOCK_SLACK: usize = 4;

/// Connected components of the Ext¹ graph on `labels`, with a check that
/// each component lies in one block-label fiber.
///
/// Connectivity is computed among all labels up to `max |λ| + slack`, so two
/// input labels linked only through larger labels still end up together.
pub fn block_decomposition(g: LieType, labels: &[Label]) -> Result<Vec<BTreeSet<Label>>> {
    block_decomposition_with_slack(g, labels, BLOCK_SLACK)
}

pub fn block_decomposition_with_slack(g: LieType, labels: &[Label], slack: usize) -> Result<Vec<BTreeSet<Label>>> {
    for l in labels {
        check_label(g, l)?;
    }
    let max = labels.iter().map(Label::size).max().unwrap_or(0);
    let universe = Label::all_up_to(g, max + slack);
    let classes = closure_classes(&universe, |l| ext1_support(g, l).map(|s| s.into_iter().collect()).unwrap_or_default());
    let wanted: BTreeSet<&Label> = labels.iter().collect();
    let mut out: Vec<BTreeSet<Label>> = classes
        .into_iter()
        .map(|c| c.into_iter().filter(|l| wanted.contains(l)).collect::<BTreeSet<_>>())
        .filter(|c| !c.is_empty())
        .collect();
    out.sort();
    for c in &out {
        let fibers: BTreeSet<BlockLabel> = c.iter().map(|l| block_label(g, l)).collect::<Result<_>>()?;
        if fibers.len() > 1 {
            let names: Vec<String> = fibers.iter().map(ToString::to_string).collect();
            return Err(Error::BlockCrossing(format!("component of size {} meets blocks {}", c.len(), names.join(", "))));
        }
    }
    Ok(out)
}
