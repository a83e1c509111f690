//! Verification suites behind `tenscat verify`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde_json::{json, Value};
use tenscat_core::homology::{ext1_support, ext_table, purity_check};
use tenscat_core::oracle::{
    algebra_action, contraction_psi, linear_relations, permutation_action, schur_weyl_check, EquivariantMap,
    FiniteRankContext, TensorSpace,
};
use tenscat_core::quadratic::{
    build_algebra, check_o_sp_isomorphism, check_self_duality_sl, hilbert_koszul_test, indices,
    relation_space_from_oracle, relation_subspace, step_down,
};
use tenscat_core::symgroup::young_projector;
use tenscat_core::{GroupAlgebraElement, GroupElement, Label, LieType, Partition, Permutation, Result};

use crate::commands::{block_classes, cache_json, labels};
use crate::{JobSpec, Suite};

pub(crate) fn verify(spec: &JobSpec, g: LieType, list: &[Suite]) -> Result<(bool, Value)> {
    let mut wanted: Vec<Suite> = list.to_vec();
    wanted.sort();
    wanted.dedup();
    let mut out = Vec::new();
    let mut all = true;
    for s in wanted {
        let (holds, checks) = match s {
            Suite::Relations => relations(spec, g)?,
            Suite::Duality => duality(spec, g)?,
            Suite::Koszul => koszul(spec, g)?,
            Suite::Ext => ext(spec, g)?,
            Suite::Blocks => blocks(spec, g)?,
            Suite::SchurWeyl => schur_weyl(spec, g)?,
        };
        all &= holds;
        out.push(json!({ "suite": s.name(), "holds": holds, "checks": checks }));
    }
    Ok((all, json!({ "command": "verify", "g": g.name(), "r": spec.r, "holds": all, "suites": out })))
}

fn summarize(checks: Vec<Value>) -> (bool, Value) {
    let holds = checks.iter().all(|c| c["holds"] == json!(true));
    (holds, Value::Array(checks))
}

/// Oracle kernel equals the presented relations at every index up to `r`,
/// plus the ψψ·Y identities for `o`/`sp`.
fn relations(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let mut checks = Vec::new();
    for idx in indices(g, spec.r) {
        if step_down(g, idx, 2).is_none() {
            continue;
        }
        let oracle = relation_space_from_oracle(g, idx, None)?;
        let presented = relation_subspace(g, idx)?;
        checks.push(json!({
            "identity": format!("oracle kernel = relations at {idx:?}"),
            "ranks": [oracle.ranks.0, oracle.ranks.1],
            "dim": presented.dim(),
            "holds": oracle.space.same_as(&presented),
        }));
    }
    if g != LieType::Sl {
        checks.extend(psi_psi_identities(g)?);
    }
    Ok(summarize(checks))
}

/// `ψψ·Y_λ` for every shape of 4 on the last four letters (twisted by the
/// sign for `sp`). It must vanish exactly off the constituents `(4)`, `(2,2)`
/// of the degree-two words, and the nonzero ones are reported in the basis of
/// the three complete pairings.
fn psi_psi_identities(g: LieType) -> Result<Vec<Value>> {
    let p = 4;
    let letters = [p, p - 1, p - 2, p - 3];
    let mut out = Vec::new();
    for n in [4, 5] {
        let ctx = FiniteRankContext::new(g, n)?;
        let t4 = TensorSpace::new(ctx, 4, 0)?;
        let t2 = TensorSpace::new(ctx, 2, 0)?;
        let psipsi = contraction_psi(1, 2, &t2)?.compose(&contraction_psi(3, 4, &t4)?)?;
        let after = |a: usize, b: usize| -> Result<EquivariantMap> {
            psipsi.compose(&permutation_action(&GroupElement::single(Permutation::transposition(p, a, b)), &t4)?)
        };
        let pairings = [psipsi.clone(), after(p - 3, p - 1)?, after(p - 2, p - 1)?];
        for shape in Partition::all_of_size(4) {
            let y = young_projector(&shape, &letters, p)?;
            let y: GroupAlgebraElement = if g == LieType::Sp { y.sign_twist() } else { y };
            let lhs = psipsi.compose(&algebra_action(&y, &t4)?)?;
            let expect_zero = !matches!(shape.parts(), [4] | [2, 2]);
            let name = if g == LieType::Sp { format!("psi psi . sigma(Y{shape})") } else { format!("psi psi . Y{shape}") };
            out.push(json!({
                "identity": name,
                "rank": n,
                "expected": if expect_zero { "zero" } else { "nonzero" },
                "value": pairing_coordinates(&lhs, &pairings)?,
                "holds": lhs.is_zero() == expect_zero,
            }));
        }
    }
    Ok(out)
}

/// Coefficients of `lhs` over the three pairings, as strings.
fn pairing_coordinates(lhs: &EquivariantMap, pairings: &[EquivariantMap; 3]) -> Result<Value> {
    if lhs.is_zero() {
        return Ok(json!(["0", "0", "0"]));
    }
    let mut maps = vec![lhs.clone()];
    maps.extend(pairings.iter().cloned());
    let rels = linear_relations(&maps)?;
    Ok(match rels.iter().find(|r| !r[0].is_zero()) {
        Some(r) => Value::Array(r[1..].iter().map(|x| json!((-x / &r[0]).to_string())).collect()),
        None => json!("outside the pairing span"),
    })
}

fn duality(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let (name, rep) = match g {
        LieType::Sl => ("sigma(R) = Rbar = R^perp", check_self_duality_sl(spec.r)?),
        _ => ("sigma exchanges the o and sp presentations", check_o_sp_isomorphism(spec.r)?),
    };
    let check = json!({ "identity": name, "checked": rep.checked, "witness": rep.witness, "holds": rep.holds });
    Ok(summarize(vec![check]))
}

fn koszul(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let a = build_algebra(g, spec.r)?;
    let rep = hilbert_koszul_test(&a, a.top_degree().max(2))?;
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .map(|(top, k, nu, la, v)| json!({ "top": top, "k": k, "nu": nu.to_string(), "lambda": la.to_string(), "value": v }))
        .collect();
    let check = json!({ "identity": "H_A(t) H_A!(-t) = 1", "depth": rep.depth, "failures": failures, "holds": rep.holds });
    Ok(summarize(vec![check]))
}

/// Purity of the oracle table and agreement of its Ext¹ part with the
/// combinatorial support.
fn ext(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let opts = spec.oracle_options()?;
    let table = ext_table(g, spec.max_size, spec.max_layer, &opts)?;
    let mut checks = vec![json!({ "identity": "purity", "entries": table.len(), "holds": purity_check(&table) })];
    let all = Label::all_up_to(g, spec.max_size);
    let mut observed: BTreeMap<&Label, BTreeSet<&Label>> = BTreeMap::new();
    for lambda in &all {
        for mu in &all {
            if table.get(lambda, mu, 1) != 0 {
                observed.entry(lambda).or_default().insert(mu);
            }
        }
    }
    for lambda in &all {
        let support: BTreeSet<Label> =
            ext1_support(g, lambda)?.into_iter().filter(|m| m.size() <= spec.max_size).collect();
        let seen: BTreeSet<Label> = observed.get(lambda).into_iter().flatten().map(|m| (*m).clone()).collect();
        let zero = all.iter().all(|mu| table.get(lambda, mu, 0) == u64::from(mu == lambda));
        checks.push(json!({
            "identity": format!("Ext support of {lambda}"),
            "support": labels(&support),
            "oracle": labels(&seen),
            "holds": support == seen && zero,
        }));
    }
    let (holds, checks) = summarize(checks);
    let checks = json!({ "entries": checks, "cache": cache_json(opts.cache.as_ref()) });
    Ok((holds, checks))
}

/// Ext¹ classes coincide with the fibers of the block label.
fn blocks(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let classes = block_classes(g, spec.max_size)?;
    let names: BTreeSet<&String> = classes.iter().map(|(b, _)| b).collect();
    let check = json!({
        "identity": "one Ext class per block label",
        "classes": classes.len(),
        "block_labels": names.len(),
        "holds": names.len() == classes.len(),
    });
    Ok(summarize(vec![check]))
}

fn schur_weyl(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    if g != LieType::Sl {
        return Ok((true, json!([{ "identity": "Schur-Weyl dimension identity", "applies": false, "holds": true }])));
    }
    let mut checks = Vec::new();
    for total in 0..=spec.r {
        for p in 0..=total {
            let q = total - p;
            let ctx = FiniteRankContext::new(g, total + 1)?;
            checks.push(json!({
                "identity": format!("Schur-Weyl dimension identity at ({p},{q})"),
                "holds": schur_weyl_check(p, q, ctx)?,
            }));
        }
    }
    Ok(summarize(checks))
}
