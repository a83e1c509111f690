//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p tenscat-core --test acceptance`, optionally followed
//! by `-- 3 7` to run only some criteria. Values are checked exactly; a
//! criterion with a runtime bound fails when the bound is exceeded.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use tenscat_core::homology::{
    block_decomposition, default_rank, ext1_support, ext_dimension, ext_table, purity_check, socle_multiplicities,
    OracleOptions,
};
use tenscat_core::oracle::{
    algebra_action, contraction_phi, contraction_psi, linear_relations, permutation_action, schur_weyl_check,
    tensor_with_natural, verify_relation, EquivariantMap, FiniteRankContext, TensorSpace,
};
use tenscat_core::quadratic::{
    build_algebra, check_o_sp_isomorphism, check_self_duality_sl, hilbert_koszul_test, relation_space_from_oracle,
    relation_subspace,
};
use tenscat_core::symgroup::{decompose_right_module, induced_right_ideal, young_projector, Ambient};
use tenscat_core::{
    block_label, BiPartition, GroupAlgebraElement, GroupElement, Label, LieType, Partition, Permutation, Rational,
    Result,
};

type Check = Result<(bool, String)>;

/// Name, left factor, and expected right-hand side as a combination of pairings.
type Claim<'a> = (&'static str, GroupAlgebraElement, Vec<(Rational, &'a EquivariantMap)>);

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn bi(a: &[usize], b: &[usize]) -> Label {
    Label::Bi(BiPartition::of(a, b))
}

fn single(a: &[usize]) -> Label {
    Label::Single(Partition::of(a))
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn show<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

// 1 ──────────────────────────────────────────────────────────────────────────

fn c1_s4_inductions() -> Check {
    let s4 = Ambient::Single(4);
    let t = |a, b| GroupElement::single(Permutation::transposition(4, a, b));
    let mut ok = true;
    let mut detail = Vec::new();
    for (sign, expected) in [(1i8, [&[2, 1, 1][..], &[2, 2], &[4]]), (-1, [&[3, 1][..], &[2, 2], &[1, 1, 1, 1]])] {
        let ideal = induced_right_ideal(s4, &[(t(3, 4), sign), (t(1, 2), sign)], 4)?;
        let got = decompose_right_module(&ideal)?;
        let want: BTreeMap<Label, usize> = expected.iter().map(|p| (single(p), 1)).collect();
        let name = if sign > 0 { "triv" } else { "sgn⊠sgn" };
        if got != want {
            ok = false;
        }
        detail.push(format!("{name}: got {} expected {}", show(got.keys()), show(want.keys())));
    }
    Ok((ok, detail.join("; ")))
}

// 2 ──────────────────────────────────────────────────────────────────────────

/// Writes `lhs` in terms of the three complete pairings of four slots, if possible.
fn pairing_coordinates(lhs: &EquivariantMap, pairings: &[EquivariantMap; 3]) -> Result<String> {
    let mut maps = vec![lhs.clone()];
    maps.extend(pairings.iter().cloned());
    let rels = linear_relations(&maps)?;
    let Some(r) = rels.iter().find(|r| !r[0].is_zero()) else { return Ok("outside the pairing span".into()) };
    let c: Vec<Rational> = r[1..].iter().map(|x| -x / &r[0]).collect();
    Ok(format!("{}·ψψ + {}·ψ′ψ′ + {}·ψ″ψ″", c[0], c[1], c[2]))
}

fn c2_psi_psi_identities() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    let p = 4;
    let letters = [p, p - 1, p - 2, p - 3];
    for g in [LieType::O, LieType::Sp] {
        for n in [4, 5] {
            let ctx = FiniteRankContext::new(g, n)?;
            let t4 = TensorSpace::new(ctx, 4, 0)?;
            let t2 = TensorSpace::new(ctx, 2, 0)?;
            // ψ_{p−3,p−2} ψ_{p−1,p}
            let psipsi = contraction_psi(1, 2, &t2)?.compose(&contraction_psi(3, 4, &t4)?)?;
            let after = |a: usize, b: usize| -> Result<EquivariantMap> {
                let s = GroupElement::single(Permutation::transposition(p, a, b));
                psipsi.compose(&permutation_action(&s, &t4)?)
            };
            // ψ_{p−3,p} ψ_{p−1,p−2} and the remaining pairing {p−3,p−1},{p−2,p}
            let primed = after(p - 3, p - 1)?;
            let third = after(p - 2, p - 1)?;
            let pairings = [psipsi.clone(), primed.clone(), third];
            let twist = |y: GroupAlgebraElement| if g == LieType::Sp { y.sign_twist() } else { y };
            let y = |shape: &[usize]| -> Result<GroupAlgebraElement> {
                Ok(twist(young_projector(&Partition::of(shape), &letters, p)?))
            };
            // sp statements are the o ones carried through s ↦ sgn(s)s, under which
            // ψ′ψ′ = ψψ∘ρ((p−3, p−1)) changes sign.
            let primed_sign = if g == LieType::O { -2 } else { 2 };
            let claims: [Claim; 3] = [
                ("Y(2,1,1)", y(&[2, 1, 1])?, vec![]),
                ("Y(2,2)", y(&[2, 2])?, vec![(q(2), &psipsi), (q(primed_sign), &primed)]),
                ("Y(4)", y(&[4])?, vec![(q(4), &psipsi)]),
            ];
            for (name, proj, rhs) in claims {
                let lhs = psipsi.compose(&algebra_action(&proj, &t4)?)?;
                let mut terms = vec![(Rational::one(), &lhs)];
                let neg: Vec<(Rational, &EquivariantMap)> = rhs.iter().map(|(c, m)| (-c, *m)).collect();
                terms.extend(neg);
                let holds = verify_relation(&terms)?;
                ok &= holds;
                let wrap = if g == LieType::Sp { format!("σ({name})") } else { name.to_string() };
                if !holds {
                    detail.push(format!("{g} n={n}: ψψ·{wrap} = {}", pairing_coordinates(&lhs, &pairings)?));
                }
            }
        }
    }
    if detail.is_empty() {
        detail.push("all 12 identities hold".into());
    }
    Ok((ok, detail.join("; ")))
}

// 3 ──────────────────────────────────────────────────────────────────────────

fn c3_sl_relations() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (p, qq) in [(2usize, 1usize), (2, 2), (3, 2)] {
        if qq < 2 {
            detail.push(format!("({p},{qq}): no degree-two component, nothing to check"));
            continue;
        }
        let n = p + qq + 2;
        let ctx = FiniteRankContext::new(LieType::Sl, n)?;
        let top = TensorSpace::new(ctx, p, qq)?;
        let mid = TensorSpace::new(ctx, p - 1, qq - 1)?;
        let phiphi = contraction_phi(p - 1, qq - 1, &mid)?.compose(&contraction_phi(p, qq, &top)?)?;
        let a = GroupElement::new(Permutation::transposition(p, p, p - 1), Permutation::identity(qq));
        let b = GroupElement::new(Permutation::identity(p), Permutation::transposition(qq, qq, qq - 1));
        let ab = a.compose(&b);
        let with = |s: &GroupElement| -> Result<EquivariantMap> { phiphi.compose(&permutation_action(s, &top)?) };
        let (pa, pb, pab) = (with(&a)?, with(&b)?, with(&ab)?);
        let r1 = verify_relation(&[(Rational::one(), &phiphi), (-Rational::one(), &pab)])?;
        let r2 = verify_relation(&[(Rational::one(), &pa), (-Rational::one(), &pb)])?;
        let oracle = relation_space_from_oracle(LieType::Sl, (p, qq), Some(n))?;
        let same = oracle.space.same_as(&relation_subspace(LieType::Sl, (p, qq))?);
        ok &= r1 && r2 && same;
        detail.push(format!(
            "({p},{qq}) n={n}: φφ(1−ab)=0 {r1}, φφ(a−b)=0 {r2}, oracle kernel dim {} = presentation {same}",
            oracle.space.dim()
        ));
    }
    Ok((ok, detail.join("; ")))
}

// 4–6 ────────────────────────────────────────────────────────────────────────

fn c4_self_duality() -> Check {
    let r = check_self_duality_sl(5)?;
    Ok((r.holds, format!("{} indices checked, witness {:?}", r.checked.len(), r.witness)))
}

fn c5_o_sp() -> Check {
    let r = check_o_sp_isomorphism(5)?;
    Ok((r.holds, format!("{} indices checked, witness {:?}", r.checked.len(), r.witness)))
}

fn c6_koszul() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for g in LieType::ALL {
        for r in 0..=4 {
            let a = build_algebra(g, r)?;
            let rep = hilbert_koszul_test(&a, a.top_degree().max(2))?;
            ok &= rep.holds;
            if !rep.holds {
                detail.push(format!("{g} r={r}: {} failing entries", rep.failures.len()));
            }
        }
    }
    if ok {
        detail.push("15 algebras, full degree".into());
    }
    Ok((ok, detail.join("; ")))
}

// 7–8 ────────────────────────────────────────────────────────────────────────

fn c7_ext1_values() -> Check {
    let o = OracleOptions::default();
    let e1 = ext_dimension(LieType::Sl, &bi(&[], &[]), &bi(&[1], &[1]), 1, &o)?;
    let e2 = ext_dimension(LieType::Sl, &bi(&[], &[]), &bi(&[1], &[]), 1, &o)?;
    let cases: [(LieType, Label, Vec<Label>); 4] = [
        (LieType::Sl, bi(&[], &[]), vec![bi(&[1], &[1])]),
        (LieType::Sl, bi(&[1], &[]), vec![bi(&[2], &[1]), bi(&[1, 1], &[1])]),
        (LieType::O, single(&[]), vec![single(&[2])]),
        (LieType::O, single(&[1]), vec![single(&[3]), single(&[2, 1])]),
    ];
    let mut ok = e1 == 1 && e2 == 0;
    let mut detail = vec![format!("Ext¹(C, V⊗V_*) = {e1}, Ext¹(C, V) = {e2}")];
    for (g, l, want) in cases {
        let got = ext1_support(g, &l)?;
        let want: BTreeSet<Label> = want.into_iter().collect();
        ok &= got == want;
        detail.push(format!("{g} {l}: {}", show(&got)));
    }
    Ok((ok, detail.join("; ")))
}

fn c8_purity() -> Check {
    let o = OracleOptions::default();
    let mut ok = true;
    let mut detail = Vec::new();
    for (g, size) in [(LieType::Sl, 3), (LieType::O, 4), (LieType::Sp, 4)] {
        let t = ext_table(g, size, 2, &o)?;
        let pure = purity_check(&t);
        ok &= pure;
        detail.push(format!("{g} |λ|≤{size}: {} nonzero entries, pure {pure}", t.len()));
    }
    Ok((ok, detail.join("; ")))
}

// 9 ──────────────────────────────────────────────────────────────────────────

fn c9_blocks() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    let fibers = |g: LieType, labels: &[Label]| -> Result<BTreeSet<BTreeSet<Label>>> {
        let mut m: BTreeMap<_, BTreeSet<Label>> = BTreeMap::new();
        for l in labels {
            m.entry(block_label(g, l)?).or_default().insert(l.clone());
        }
        Ok(m.into_values().collect())
    };
    for (g, size, expected_count) in [(LieType::Sl, 4, 9), (LieType::O, 6, 2), (LieType::Sp, 6, 2)] {
        let labels = Label::all_up_to(g, size);
        let comps: BTreeSet<BTreeSet<Label>> = block_decomposition(g, &labels)?.into_iter().collect();
        let same = comps == fibers(g, &labels)?;
        ok &= same && comps.len() == expected_count;
        detail.push(format!("{g} |λ|≤{size}: {} components, equal to fibers {same}", comps.len()));
    }
    Ok((ok, detail.join("; ")))
}

// 10 ─────────────────────────────────────────────────────────────────────────

fn natural_rank(l: &BiPartition) -> usize {
    l.size() + 3
}

fn c10_tensor_with_natural() -> Check {
    let mut ok = true;
    let mut bad = Vec::new();
    let labels = BiPartition::all_up_to(3);
    for l in &labels {
        let ctx = FiniteRankContext::new(LieType::Sl, natural_rank(l))?;
        let got = tensor_with_natural(l, ctx)?;
        let plus: BTreeMap<Label, u64> = l.up_set().into_iter().map(|x| (Label::Bi(x), 1)).collect();
        let mut all = plus.clone();
        for x in l.down_set() {
            *all.entry(Label::Bi(x)).or_default() += 1;
        }
        if got.socle != plus || got.composition != all {
            ok = false;
            bad.push(l.to_string());
        }
    }
    Ok((ok, format!("{} bipartitions, mismatches {}", labels.len(), show(bad))))
}

// 11 ─────────────────────────────────────────────────────────────────────────

fn c11_schur_weyl() -> Check {
    let mut bad = Vec::new();
    let mut count = 0;
    for total in 0..=5 {
        for p in 0..=total {
            let qq = total - p;
            let ctx = FiniteRankContext::new(LieType::Sl, p + qq + 1)?;
            count += 1;
            if !schur_weyl_check(p, qq, ctx)? {
                bad.push(format!("({p},{qq})"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{count} cases, failures {}", show(bad))))
}

// 12 ─────────────────────────────────────────────────────────────────────────

fn c12_stability() -> Check {
    let mut cases = 0;
    let mut bad = Vec::new();
    // criteria 7–8 and the oracle side of 9: every socle slice, shifted one rank up
    for (g, size) in [(LieType::Sl, 3), (LieType::O, 4), (LieType::Sp, 4)] {
        for l in Label::all_up_to(g, size) {
            let base = socle_multiplicities(g, &l, 2, &OracleOptions::default())?;
            let shifted =
                socle_multiplicities(g, &l, 2, &OracleOptions { rank: Some(default_rank(&l) + 1), ..Default::default() })?;
            cases += 1;
            if base.layers != shifted.layers {
                bad.push(format!("{g} {l}"));
            }
            // Ext¹ supports agree with the first socle layer of Ṽ_λ
            if let Some(layer1) = base.layers.get(1) {
                for mu in layer1.keys() {
                    if !ext1_support(g, mu)?.contains(&l) {
                        bad.push(format!("{g} {mu}→{l} not in Ext¹ support"));
                    }
                }
            }
            let expected: usize = Label::all_up_to(g, size)
                .iter()
                .filter(|m| ext1_support(g, m).is_ok_and(|s| s.contains(&l)))
                .count();
            let got = base.layers.get(1).map_or(0, BTreeMap::len);
            if expected != got {
                bad.push(format!("{g} {l}: layer 1 has {got} labels, Ext¹ supports give {expected}"));
            }
        }
    }
    // criterion 10
    for l in BiPartition::all_up_to(3) {
        let n = natural_rank(&l);
        let a = tensor_with_natural(&l, FiniteRankContext::new(LieType::Sl, n)?)?;
        let b = tensor_with_natural(&l, FiniteRankContext::new(LieType::Sl, n + 1)?)?;
        cases += 1;
        if a != b {
            bad.push(format!("V⊗V_{l}"));
        }
    }
    Ok((bad.is_empty(), format!("{cases} tables compared at n₀ and n₀+1, problems {}", show(bad))))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "S_4 inductions from S_2×S_2 (literal labels)", limit: Some(Duration::from_secs(1)), run: c1_s4_inductions },
        Criterion { id: 2, title: "ψψ·Y identities at p = 4, n ∈ {4,5}", limit: Some(Duration::from_secs(60)), run: c2_psi_psi_identities },
        Criterion { id: 3, title: "sl quadratic relations in the oracle", limit: None, run: c3_sl_relations },
        Criterion { id: 4, title: "σ(R) = R̄ = R^⊥ for p + q ≤ 5", limit: Some(Duration::from_secs(60)), run: c4_self_duality },
        Criterion { id: 5, title: "o/sp presentations exchanged by σ, p ≤ 5", limit: None, run: c5_o_sp },
        Criterion { id: 6, title: "Hilbert series Koszul condition, r ≤ 4", limit: None, run: c6_koszul },
        Criterion { id: 7, title: "Ext¹ values and supports", limit: None, run: c7_ext1_values },
        Criterion { id: 8, title: "purity of oracle Ext tables, i ≤ 2", limit: None, run: c8_purity },
        Criterion { id: 9, title: "blocks equal block-label fibers", limit: None, run: c9_blocks },
        Criterion { id: 10, title: "socle and composition of V ⊗ V_λ, |λ| ≤ 3", limit: Some(Duration::from_secs(600)), run: c10_tensor_with_natural },
        Criterion { id: 11, title: "Schur–Weyl dimension identity, p + q ≤ 5", limit: None, run: c11_schur_weyl },
        Criterion { id: 12, title: "oracle tables stable from n₀ to n₀ + 1", limit: None, run: c12_stability },
    ];
    let wanted: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for c in criteria.iter().filter(|c| wanted.is_empty() || wanted.contains(&c.id)) {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let over = c.limit.is_some_and(|l| elapsed > l);
        let (pass, detail) = match outcome {
            Ok((ok, d)) => (ok && !over, d),
            Err(e) => (false, format!("error: {e}")),
        };
        let bound = c.limit.map_or(String::new(), |l| format!(", bound {}s", l.as_secs()));
        let timing = if over { format!("{elapsed:.2?} OVER TIME{bound}") } else { format!("{elapsed:.2?}{bound}") };
        println!("{} criterion {:>2}: {} ({timing}) :: {detail}", if pass { "PASS" } else { "FAIL" }, c.id, c.title);
        if !pass {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
