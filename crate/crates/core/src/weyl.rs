//! Weights, dominant characters and Weyl-character peeling for `gl(n)`,
//! `sp(2n)` (type C) and `o(2n)` (type D).
//!
//! Weights are integer vectors in the `ε` basis. For `sl` the oracle works
//! with `gl(n)`-weights, which separate the mixed tensor labels cleanly.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::partitions::{BiPartition, Label, Partition};
use crate::LieType;

pub type Weight = Vec<i64>;

/// Root datum of `gl(n)`, `sp(2n)` or `o(2n)` in the `ε` basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSystem {
    pub g: LieType,
    pub rank: usize,
}

impl RootSystem {
    pub fn new(g: LieType, rank: usize) -> Self {
        Self { g, rank }
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        let n = self.rank;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut a = vec![0; n];
                a[i] = 1;
                a[j] = -1;
                out.push(a);
                if self.g != LieType::Sl {
                    let mut b = vec![0; n];
                    b[i] = 1;
                    b[j] = 1;
                    out.push(b);
                }
            }
            if self.g == LieType::Sp {
                let mut c = vec![0; n];
                c[i] = 2;
                out.push(c);
            }
        }
        out
    }

    /// Half the sum of positive roots, shifted to be integral where harmless.
    pub fn rho(&self) -> Vec<i64> {
        let n = self.rank as i64;
        match self.g {
            LieType::Sl => (0..n).map(|i| n - 1 - i).collect(),
            LieType::Sp => (0..n).map(|i| n - i).collect(),
            LieType::O => (0..n).map(|i| n - 1 - i).collect(),
        }
    }

    /// Dominant element of the Weyl orbit of `w`.
    pub fn dominant(&self, w: &[i64]) -> Weight {
        let mut d: Weight = match self.g {
            LieType::Sl => w.to_vec(),
            _ => w.iter().map(|x| x.abs()).collect(),
        };
        d.sort_unstable_by(|a, b| b.cmp(a));
        if self.g == LieType::O {
            let negatives = w.iter().filter(|&&x| x < 0).count();
            if negatives % 2 == 1 && w.iter().all(|&x| x != 0) {
                let last = d.len() - 1;
                d[last] = -d[last];
            }
        }
        d
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        let decreasing = w.windows(2).all(|p| p[0] >= p[1]);
        match self.g {
            LieType::Sl => decreasing,
            LieType::Sp => decreasing && w.last().is_none_or(|&x| x >= 0),
            LieType::O => {
                let n = w.len();
                n < 2 && w.iter().all(|&x| x >= 0)
                    || n >= 2 && w[..n - 1].windows(2).all(|p| p[0] >= p[1]) && w[n - 2] >= w[n - 1].abs()
            }
        }
    }

    /// Coefficients of `x` in the simple roots, if `x` lies in the root lattice.
    pub fn simple_coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        let n = x.len();
        let s: Vec<i64> = x.iter().scan(0, |acc, v| {
            *acc += v;
            Some(*acc)
        }).collect();
        if n == 0 {
            return Some(Vec::new());
        }
        match self.g {
            LieType::Sl => (s[n - 1] == 0).then(|| s[..n - 1].to_vec()),
            LieType::Sp => {
                if s[n - 1] % 2 != 0 {
                    return None;
                }
                let mut c = s[..n - 1].to_vec();
                c.push(s[n - 1] / 2);
                Some(c)
            }
            LieType::O => {
                if n == 1 {
                    return (s[0] == 0).then(Vec::new);
                }
                if s[n - 1] % 2 != 0 {
                    return None;
                }
                let mut c = s[..n - 2].to_vec();
                c.push(s[n - 2] - s[n - 1] / 2);
                c.push(s[n - 1] / 2);
                Some(c)
            }
        }
    }

    /// `x ≥ 0` in the positive root cone.
    pub fn is_nonnegative_root_combination(&self, x: &[i64]) -> bool {
        self.simple_coordinates(x).is_some_and(|c| c.iter().all(|&v| v >= 0))
    }

    /// Weyl group orbit size of a weight.
    pub fn orbit_size(&self, w: &[i64]) -> u128 {
        let n = w.len();
        let fact = |m: usize| (1..=m as u128).product::<u128>();
        let key: Vec<i64> = match self.g {
            LieType::Sl => w.to_vec(),
            _ => w.iter().map(|x| x.abs()).collect(),
        };
        let mut counts: HashMap<i64, usize> = HashMap::new();
        for v in &key {
            *counts.entry(*v).or_default() += 1;
        }
        let mut size = fact(n);
        for m in counts.values() {
            size /= fact(*m);
        }
        if self.g != LieType::Sl {
            let nonzero = key.iter().filter(|&&v| v != 0).count();
            size <<= nonzero;
            if self.g == LieType::O && nonzero == n && n > 0 {
                size /= 2;
            }
        }
        size
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, highest: &[i64]) -> u128 {
        let rho = self.rho();
        let shifted: Vec<i64> = highest.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for a in self.positive_roots() {
            num *= BigInt::from(dot(&shifted, &a));
            den *= BigInt::from(dot(&rho, &a));
        }
        let q = Rational::new(num, den);
        assert!(q.is_integer(), "Weyl dimension must be integral");
        q.to_integer().to_u128().expect("dimension fits u128")
    }

    /// Dominant weights `μ ≤ highest` together with their multiplicities in
    /// the irreducible module of that highest weight (Freudenthal).
    pub fn dominant_character(&self, highest: &[i64]) -> Arc<BTreeMap<Weight, u64>> {
        type Memo = RwLock<HashMap<(RootSystem, Weight), Arc<BTreeMap<Weight, u64>>>>;
        static MEMO: OnceLock<Memo> = OnceLock::new();
        let memo = MEMO.get_or_init(Default::default);
        let key = (*self, highest.to_vec());
        if let Some(c) = memo.read().expect("character memo poisoned").get(&key) {
            return c.clone();
        }
        let c = Arc::new(self.freudenthal(highest));
        memo.write().expect("character memo poisoned").entry(key).or_insert(c).clone()
    }

    fn candidates_below(&self, highest: &[i64]) -> Vec<Weight> {
        let n = self.rank;
        let hi = highest.iter().map(|x| x.abs()).max().unwrap_or(0);
        let (lo, top) = match self.g {
            LieType::Sl => (*highest.last().unwrap_or(&0), *highest.first().unwrap_or(&0)),
            _ => (-hi, hi),
        };
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, lo: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            let mut v = max;
            while v >= lo {
                cur.push(v);
                rec(n, lo, v, cur, out);
                cur.pop();
                v -= 1;
            }
        }
        rec(n, lo, top, &mut cur, &mut out);
        out.retain(|w| self.is_dominant(w) && {
            let diff: Vec<i64> = highest.iter().zip(w).map(|(a, b)| a - b).collect();
            self.is_nonnegative_root_combination(&diff)
        });
        out
    }

    fn freudenthal(&self, highest: &[i64]) -> BTreeMap<Weight, u64> {
        assert!(self.is_dominant(highest), "{highest:?} is not dominant");
        let rho = self.rho();
        let roots = self.positive_roots();
        let bound = highest.iter().map(|x| x.abs()).max().unwrap_or(0);
        let norm = |w: &[i64]| {
            let s: Vec<i64> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
            dot(&s, &s)
        };
        let top = norm(highest);
        let height = |w: &[i64]| -> i64 {
            let diff: Vec<i64> = highest.iter().zip(w).map(|(a, b)| a - b).collect();
            self.simple_coordinates(&diff).expect("in root lattice").iter().sum()
        };
        let mut cands = self.candidates_below(highest);
        cands.sort_by_key(|w| height(w));
        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        for mu in cands {
            if mu == highest {
                mult.insert(mu, 1);
                continue;
            }
            let mut acc: i64 = 0;
            for a in &roots {
                let mut k = 1;
                loop {
                    let nu: Weight = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                    if nu.iter().any(|x| x.abs() > bound) {
                        break;
                    }
                    if let Some(&m) = mult.get(&self.dominant(&nu)) {
                        acc += m as i64 * dot(&nu, a);
                    }
                    k += 1;
                }
            }
            let den = top - norm(&mu);
            assert!(den > 0, "Freudenthal denominator vanished at {mu:?}");
            assert_eq!((2 * acc) % den, 0, "non-integral Freudenthal multiplicity");
            let m = 2 * acc / den;
            if m > 0 {
                mult.insert(mu, m as u64);
            }
        }
        mult
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Highest weight of the irreducible labelled by `label` at rank `n`.
pub fn label_to_weight(g: LieType, label: &Label, n: usize) -> Result<Weight> {
    match (g, label) {
        (LieType::Sl, Label::Bi(b)) => {
            if b.first.len() + b.second.len() > n {
                return Err(Error::InsufficientRank { rank: n, reason: format!("{b} needs {} rows", b.len()) });
            }
            let mut w = vec![0; n];
            for (i, &x) in b.first.parts().iter().enumerate() {
                w[i] = x as i64;
            }
            for (i, &x) in b.second.parts().iter().enumerate() {
                w[n - 1 - i] = -(x as i64);
            }
            Ok(w)
        }
        (LieType::O | LieType::Sp, Label::Single(p)) => {
            if p.len() > n {
                return Err(Error::InsufficientRank { rank: n, reason: format!("{p} needs {} rows", p.len()) });
            }
            let mut w = vec![0; n];
            for (i, &x) in p.parts().iter().enumerate() {
                w[i] = x as i64;
            }
            Ok(w)
        }
        _ => Err(Error::LabelMismatch { g, label: label.to_string() }),
    }
}

/// Label of a dominant highest weight.
pub fn weight_to_label(g: LieType, w: &[i64]) -> Result<Label> {
    match g {
        LieType::Sl => {
            let first: Vec<usize> = w.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
            let second: Vec<usize> = w.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as usize).collect();
            Ok(Label::Bi(BiPartition::new(Partition::new(first)?, Partition::new(second)?)))
        }
        _ => {
            if w.iter().any(|&x| x < 0) {
                return Err(Error::InsufficientRank {
                    rank: w.len(),
                    reason: format!("weight {w:?} is not the highest weight of a tensor label"),
                });
            }
            Ok(Label::Single(Partition::new(w.iter().map(|&x| x as usize).collect())?))
        }
    }
}

/// Character of a finite-dimensional module, stored by its dominant weights.
///
/// Characters of `g_n`-modules are Weyl-invariant, so the dominant part
/// determines everything; `total` and `expand` recover the full picture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDecomposition {
    pub roots: RootSystem,
    pub dominant: BTreeMap<Weight, u64>,
}

impl WeightDecomposition {
    pub fn new(roots: RootSystem) -> Self {
        Self { roots, dominant: BTreeMap::new() }
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.dominant.entry(w).or_default() += m;
        }
    }

    pub fn total(&self) -> u128 {
        self.dominant.iter().map(|(w, m)| *m as u128 * self.roots.orbit_size(w)).sum()
    }

    /// Every weight with its multiplicity.
    pub fn expand(&self) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for (w, m) in &self.dominant {
            for x in orbit(self.roots, w) {
                out.insert(x, *m);
            }
        }
        out
    }

    /// Character of the irreducible module with the given highest weight.
    pub fn irreducible(roots: RootSystem, highest: &[i64]) -> Self {
        Self { roots, dominant: (*roots.dominant_character(highest)).clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.dominant.is_empty()
    }
}

fn orbit(roots: RootSystem, w: &[i64]) -> Vec<Weight> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![w.to_vec()];
    let n = w.len();
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for i in 0..n.saturating_sub(1) {
            let mut y = x.clone();
            y.swap(i, i + 1);
            stack.push(y);
        }
        match roots.g {
            LieType::Sl => {}
            LieType::Sp => {
                if n > 0 {
                    let mut y = x.clone();
                    y[n - 1] = -y[n - 1];
                    stack.push(y);
                }
            }
            LieType::O => {
                if n >= 2 {
                    let mut y = x.clone();
                    let (a, b) = (y[n - 2], y[n - 1]);
                    y[n - 2] = -b;
                    y[n - 1] = -a;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Splits a character into irreducible labels by greedy highest-weight peeling.
pub fn decompose_layer(w: &WeightDecomposition) -> Result<BTreeMap<Label, u64>> {
    let roots = w.roots;
    let mut rest: BTreeMap<Weight, i128> = w.dominant.iter().map(|(k, v)| (k.clone(), *v as i128)).collect();
    let mut out = BTreeMap::new();
    loop {
        rest.retain(|_, m| *m != 0);
        let Some((top, &m)) = rest.iter().next_back() else { break };
        let top = top.clone();
        if m < 0 {
            return Err(Error::NegativeMultiplicity { weight: top });
        }
        let label = weight_to_label(roots.g, &top)?;
        for (mu, k) in roots.dominant_character(&top).iter() {
            *rest.entry(mu.clone()).or_insert(0) -= m * *k as i128;
        }
        out.insert(label, m as u64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(g: LieType, n: usize) -> RootSystem {
        RootSystem::new(g, n)
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(rs(LieType::Sl, 3).weyl_dimension(&[2, 0, 0]), 6);
        assert_eq!(rs(LieType::Sl, 3).weyl_dimension(&[1, 1, 0]), 3);
        assert_eq!(rs(LieType::Sl, 3).weyl_dimension(&[1, 0, -1]), 8);
        assert_eq!(rs(LieType::Sp, 2).weyl_dimension(&[1, 0]), 4);
        assert_eq!(rs(LieType::Sp, 2).weyl_dimension(&[1, 1]), 5);
        assert_eq!(rs(LieType::Sp, 2).weyl_dimension(&[2, 0]), 10);
        assert_eq!(rs(LieType::O, 3).weyl_dimension(&[1, 0, 0]), 6);
        assert_eq!(rs(LieType::O, 3).weyl_dimension(&[2, 0, 0]), 20);
        assert_eq!(rs(LieType::O, 3).weyl_dimension(&[1, 1, 0]), 15);
        assert_eq!(rs(LieType::O, 2).weyl_dimension(&[1, 1]), 3);
        assert_eq!(rs(LieType::O, 2).weyl_dimension(&[1, -1]), 3);
    }

    #[test]
    fn freudenthal_matches_weyl_dimension() {
        for (g, n) in [(LieType::Sl, 4), (LieType::Sp, 3), (LieType::O, 4), (LieType::O, 3)] {
            let roots = rs(g, n);
            for lam in Partition::all_up_to(4) {
                let labels: Vec<Label> = match g {
                    LieType::Sl => (0..=lam.size())
                        .flat_map(|a| Partition::all_of_size(a).into_iter().map(move |p| (p, a)))
                        .map(|(p, _)| Label::Bi(BiPartition::new(p, lam.clone())))
                        .collect(),
                    _ => vec![Label::Single(lam.clone())],
                };
                for l in labels {
                    let Ok(w) = label_to_weight(g, &l, n) else { continue };
                    let ch = WeightDecomposition::irreducible(roots, &w);
                    assert_eq!(ch.total(), roots.weyl_dimension(&w), "{g} {l}");
                    assert_eq!(decompose_layer(&ch).unwrap(), BTreeMap::from([(l.clone(), 1)]));
                }
            }
        }
    }

    #[test]
    fn tensor_square_peels() {
        let roots = rs(LieType::Sl, 3);
        let mut w = WeightDecomposition::new(roots);
        // V ⊗ V at n = 3: (2,0,0) once, (1,1,0) twice.
        w.add(vec![2, 0, 0], 1);
        w.add(vec![1, 1, 0], 2);
        assert_eq!(w.total(), 9);
        let dec = decompose_layer(&w).unwrap();
        assert_eq!(dec[&Label::Bi(BiPartition::of(&[2], &[]))], 1);
        assert_eq!(dec[&Label::Bi(BiPartition::of(&[1, 1], &[]))], 1);
        let mut bad = WeightDecomposition::new(roots);
        bad.add(vec![2, 0, 0], 1);
        assert!(matches!(decompose_layer(&bad), Err(Error::NegativeMultiplicity { .. })));
    }

    #[test]
    fn orbits_agree_with_orbit_size() {
        for (g, w) in [
            (LieType::Sl, vec![2, 1, 1, 0]),
            (LieType::Sp, vec![2, 1, 0]),
            (LieType::O, vec![2, 1, 1]),
            (LieType::O, vec![2, 1, 0]),
            (LieType::O, vec![1, 1, -1]),
        ] {
            let roots = rs(g, w.len());
            let orb = orbit(roots, &w);
            assert_eq!(orb.len() as u128, roots.orbit_size(&w), "{g} {w:?}");
            assert!(orb.iter().all(|x| roots.dominant(x) == w));
        }
    }

    #[test]
    fn labels_roundtrip() {
        let l = Label::Bi(BiPartition::of(&[2, 1], &[1]));
        let w = label_to_weight(LieType::Sl, &l, 4).unwrap();
        assert_eq!(w, vec![2, 1, 0, -1]);
        assert_eq!(weight_to_label(LieType::Sl, &w).unwrap(), l);
        assert!(label_to_weight(LieType::Sl, &l, 2).is_err());
        assert!(label_to_weight(LieType::O, &l, 4).is_err());
    }
}
