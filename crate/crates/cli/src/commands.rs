//! One function per subcommand. Each returns whether its checks held and the
//! JSON body of the report.

use std::collections::BTreeSet;

use serde_json::{json, Value};
use tenscat_core::homology::{block_decomposition, ext_table, purity_check, socle_multiplicities, Cache, CacheStats};
use tenscat_core::quadratic::{build_algebra, check_o_sp_isomorphism, check_self_duality_sl, quadratic_dual};
use tenscat_core::{block_label, Label, LieType, Result};

use crate::{suites, Command, JobSpec};

pub(crate) fn dispatch(spec: &JobSpec) -> Result<(bool, Value)> {
    match &spec.command {
        Command::CacheList => cache_list(spec),
        Command::CacheClear => cache_clear(spec),
        cmd => {
            let g = spec.g.expect("validated");
            match cmd {
                Command::Ext => ext(spec, g),
                Command::Socle => socle(spec, g),
                Command::Blocks => blocks(spec, g),
                Command::Algebra { dual } => algebra(spec, g, *dual),
                Command::Dual => dual(spec, g),
                Command::Verify(list) => suites::verify(spec, g, list),
                Command::CacheList | Command::CacheClear => unreachable!(),
            }
        }
    }
}

pub(crate) fn cache_json(cache: Option<&Cache>) -> Value {
    match cache {
        Some(c) => {
            let CacheStats { hits, misses, rejected } = c.stats();
            json!({ "hits": hits, "misses": misses, "rejected": rejected })
        }
        None => Value::Null,
    }
}

pub(crate) fn labels(labels: impl IntoIterator<Item = impl ToString>) -> Value {
    Value::Array(labels.into_iter().map(|l| Value::String(l.to_string())).collect())
}

fn ext(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let opts = spec.oracle_options()?;
    let table = ext_table(g, spec.max_size, spec.max_layer, &opts)?;
    let rows: Vec<Value> = table
        .rows()
        .into_iter()
        .map(|r| json!({ "lambda": r.lambda.to_string(), "mu": r.mu.to_string(), "i": r.i, "dim": r.dim }))
        .collect();
    Ok((
        true,
        json!({
            "command": "ext",
            "g": g.name(),
            "max_size": spec.max_size,
            "max_degree": spec.max_layer,
            "interpretation_pending": table.interpretation_pending,
            "pure": purity_check(&table),
            "rows": rows,
            "cache": cache_json(opts.cache.as_ref()),
        }),
    ))
}

fn socle(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let opts = spec.oracle_options()?;
    let mut rows = Vec::new();
    let mut ranks = Vec::new();
    for label in Label::all_up_to(g, spec.max_size) {
        let slice = socle_multiplicities(g, &label, spec.max_layer, &opts)?;
        ranks.push(json!({ "label": label.to_string(), "low": slice.ranks.0, "high": slice.ranks.1 }));
        for (k, layer) in slice.layers.iter().enumerate() {
            for (nu, m) in layer {
                rows.push(json!({
                    "label": label.to_string(),
                    "layer": k,
                    "constituent": nu.to_string(),
                    "multiplicity": m,
                }));
            }
        }
    }
    Ok((
        true,
        json!({
            "command": "socle",
            "g": g.name(),
            "max_size": spec.max_size,
            "max_layer": spec.max_layer,
            "ranks": ranks,
            "rows": rows,
            "cache": cache_json(opts.cache.as_ref()),
        }),
    ))
}

/// Classes of the Ext¹ graph, each tagged with its block label.
pub(crate) fn block_classes(g: LieType, max_size: usize) -> Result<Vec<(String, BTreeSet<Label>)>> {
    let all = Label::all_up_to(g, max_size);
    block_decomposition(g, &all)?
        .into_iter()
        .map(|c| {
            let first = c.iter().next().expect("classes are nonempty");
            Ok((block_label(g, first)?.to_string(), c))
        })
        .collect()
}

fn blocks(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let classes: Vec<Value> = block_classes(g, spec.max_size)?
        .into_iter()
        .map(|(block, c)| json!({ "block": block, "size": c.len(), "labels": labels(&c) }))
        .collect();
    Ok((true, json!({ "command": "blocks", "g": g.name(), "max_size": spec.max_size, "classes": classes })))
}

fn algebra(spec: &JobSpec, g: LieType, dual: bool) -> Result<(bool, Value)> {
    let a = build_algebra(g, spec.r)?;
    let a = if dual { quadratic_dual(&a)? } else { a };
    let mut body = serde_json::to_value(a.dump())?;
    body["command"] = json!("algebra");
    Ok((true, body))
}

fn dual(spec: &JobSpec, g: LieType) -> Result<(bool, Value)> {
    let (check, rep) = match g {
        LieType::Sl => ("sigma(R) = Rbar = R^perp", check_self_duality_sl(spec.r)?),
        _ => ("sigma exchanges the o and sp presentations", check_o_sp_isomorphism(spec.r)?),
    };
    Ok((
        rep.holds,
        json!({
            "command": "dual",
            "g": g.name(),
            "r": spec.r,
            "check": check,
            "holds": rep.holds,
            "checked": rep.checked,
            "witness": rep.witness,
        }),
    ))
}

fn cache_list(spec: &JobSpec) -> Result<(bool, Value)> {
    let cache = Cache::new(spec.cache.as_ref().expect("validated"))?;
    let entries: Vec<Value> = cache
        .list()?
        .into_iter()
        .map(|(path, key)| {
            let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
            json!({ "file": file, "key": key })
        })
        .collect();
    Ok((true, json!({ "command": "cache list", "entries": entries })))
}

fn cache_clear(spec: &JobSpec) -> Result<(bool, Value)> {
    let cache = Cache::new(spec.cache.as_ref().expect("validated"))?;
    Ok((true, json!({ "command": "cache clear", "removed": cache.clear()? })))
}
