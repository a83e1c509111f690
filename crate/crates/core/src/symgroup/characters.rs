//! Irreducible characters of symmetric groups by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partitions::Partition;

type Key = (Partition, Partition);

fn memo() -> &'static RwLock<HashMap<Key, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ_shape` evaluated on the class of cycle type `cycle_type`.
///
/// Both partitions must have the same size. Values are memoized in a
/// process-wide table; concurrent fills of the same key write the same value.
pub fn character(shape: &Partition, cycle_type: &Partition) -> i64 {
    assert_eq!(shape.size(), cycle_type.size(), "character of mismatched sizes");
    let key = (shape.clone(), cycle_type.clone());
    if let Some(v) = memo().read().expect("character memo poisoned").get(&key) {
        return *v;
    }
    let v = compute(shape, cycle_type.parts());
    memo().write().expect("character memo poisoned").insert(key, v);
    v
}

fn compute(shape: &Partition, cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let rest_type = Partition::new(rest.to_vec()).expect("tail of a partition");
    // Beta-set of the shape with as many beads as rows.
    let len = shape.len();
    let beta: Vec<usize> = (0..len).map(|i| shape.row(i) + len - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        // Removing a rim hook of length k = sliding a bead from b to b - k;
        // the sign counts the beads jumped over.
        let jumped = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(i, &x)| x + i + 1 - len).collect();
        let smaller = Partition::new(parts).expect("bead configuration gives a partition");
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * character(&smaller, &rest_type);
    }
    total
}

/// Size of the conjugacy class of cycle type `ty` in `S_n`.
pub fn class_size(ty: &Partition) -> u64 {
    let n = ty.size() as u64;
    let fact = |m: u64| (1..=m).product::<u64>();
    let mut z: u64 = 1;
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &p in ty.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (p, m) in counts {
        z *= (p as u64).pow(m as u32) * fact(m);
    }
    fact(n) / z
}
