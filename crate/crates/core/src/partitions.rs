//! Partitions, bipartitions and the combinatorics that index simple objects.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::LieType;

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates `parts`; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    /// Panics on invalid input; meant for literals in code and tests.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.row(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&r| r > c).count())
            .collect();
        Partition { parts }
    }

    /// All partitions obtained by adding one box.
    pub fn up_set(&self) -> BTreeSet<Partition> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.row(i - 1) > self.row(i))
            .map(|i| {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                Partition { parts: p }
            })
            .collect()
    }

    /// All partitions obtained by removing one box.
    pub fn down_set(&self) -> BTreeSet<Partition> {
        (0..self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| {
                let mut p = self.parts.clone();
                p[i] -= 1;
                Partition::new(p).expect("removing a corner keeps a partition")
            })
            .collect()
    }

    /// Two-box additions in which two growing rows had different lengths:
    /// the constituents of `S^2(V) ⊗ V_λ`.
    pub fn pieri_s2(&self) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        for mid in self.up_set() {
            for top in mid.up_set() {
                if self.admits_s2_step(&top) {
                    out.insert(top);
                }
            }
        }
        out
    }

    fn admits_s2_step(&self, top: &Partition) -> bool {
        let grown: Vec<usize> = (0..top.len()).filter(|&i| top.row(i) != self.row(i)).collect();
        (0..top.len()).all(|i| top.row(i) >= self.row(i))
            && top.size() == self.size() + 2
            && grown
                .iter()
                .enumerate()
                .all(|(a, &j)| grown[a + 1..].iter().all(|&k| self.row(j) != self.row(k)))
    }

    /// `true` if the diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.row(i) >= other.row(i))
    }

    /// Hook lengths of every box, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &r) in self.parts.iter().enumerate() {
            for j in 0..r {
                out.push(r - j + conj.row(j) - i - 1);
            }
        }
        out
    }

    /// Dimension of the irreducible `S_n`-module, by the hook length formula.
    pub fn symmetric_group_dim(&self) -> u64 {
        // n! / prod hooks, interleaved to keep intermediate values small.
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (k, h) in (1..=self.size()).zip(self.hooks()) {
            num *= k as u128;
            den *= h as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num as u64
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by size then decreasing lex order.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| {
                let v: usize = x.trim().parse().map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))?;
                if v == 0 {
                    return Err(Error::Parse(format!("zero part in {s:?}")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// A pair of partitions `(λ¹, λ²)` labelling simple `sl(∞)`-modules.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn of(first: &[usize], second: &[usize]) -> Self {
        Self::new(Partition::of(first), Partition::of(second))
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// `(λ¹, (λ²)^⊥)`.
    pub fn perp(&self) -> BiPartition {
        BiPartition::new(self.first.clone(), self.second.conjugate())
    }

    /// A box added to the first partition.
    pub fn up_set(&self) -> BTreeSet<BiPartition> {
        self.first
            .up_set()
            .into_iter()
            .map(|f| BiPartition::new(f, self.second.clone()))
            .collect()
    }

    /// A box removed from the second partition.
    pub fn down_set(&self) -> BTreeSet<BiPartition> {
        self.second
            .down_set()
            .into_iter()
            .map(|s| BiPartition::new(self.first.clone(), s))
            .collect()
    }

    /// `|λ¹| - |λ²|`.
    pub fn charge(&self) -> i64 {
        self.first.size() as i64 - self.second.size() as i64
    }

    /// All bipartitions with total size at most `n`.
    pub fn all_up_to(n: usize) -> Vec<BiPartition> {
        let mut out = Vec::new();
        for total in 0..=n {
            for a in (0..=total).rev() {
                for f in Partition::all_of_size(a) {
                    for s in Partition::all_of_size(total - a) {
                        out.push(BiPartition::new(f.clone(), s));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl FromStr for BiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bipartition must be parenthesised: {s:?}")))?;
        let close = inner
            .find(']')
            .ok_or_else(|| Error::Parse(format!("missing first partition in {s:?}")))?;
        let (a, rest) = inner.split_at(close + 1);
        let b = rest
            .trim_start()
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("missing comma in {s:?}")))?;
        Ok(BiPartition::new(a.parse()?, b.parse()?))
    }
}

/// Label of a simple object: a bipartition for `sl`, a partition for `o`/`sp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Bi(BiPartition),
    Single(Partition),
}

impl Label {
    pub fn size(&self) -> usize {
        match self {
            Label::Bi(b) => b.size(),
            Label::Single(p) => p.size(),
        }
    }

    pub fn parse_for(g: LieType, s: &str) -> Result<Label> {
        match g {
            LieType::Sl => Ok(Label::Bi(s.parse()?)),
            LieType::O | LieType::Sp => Ok(Label::Single(s.parse()?)),
        }
    }

    /// All labels for `g` with size at most `n`.
    pub fn all_up_to(g: LieType, n: usize) -> Vec<Label> {
        match g {
            LieType::Sl => BiPartition::all_up_to(n).into_iter().map(Label::Bi).collect(),
            _ => Partition::all_up_to(n).into_iter().map(Label::Single).collect(),
        }
    }

    pub fn as_bi(&self) -> Option<&BiPartition> {
        match self {
            Label::Bi(b) => Some(b),
            Label::Single(_) => None,
        }
    }

    pub fn as_single(&self) -> Option<&Partition> {
        match self {
            Label::Single(p) => Some(p),
            Label::Bi(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Bi(b) => b.fmt(f),
            Label::Single(p) => p.fmt(f),
        }
    }
}

/// Block of the category containing a simple object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BlockLabel {
    /// `|λ¹| - |λ²|` for `sl`.
    Charge(i64),
    /// `|λ| mod 2` for `o`/`sp`; `true` means odd.
    Parity(bool),
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockLabel::Charge(c) => write!(f, "{c}"),
            BlockLabel::Parity(false) => write!(f, "even"),
            BlockLabel::Parity(true) => write!(f, "odd"),
        }
    }
}

pub fn block_label(g: LieType, label: &Label) -> Result<BlockLabel> {
    match (g, label) {
        (LieType::Sl, Label::Bi(b)) => Ok(BlockLabel::Charge(b.charge())),
        (LieType::O | LieType::Sp, Label::Single(p)) => Ok(BlockLabel::Parity(p.size() % 2 == 1)),
        _ => Err(Error::LabelMismatch { g, label: label.to_string() }),
    }
}

/// Connected components of the relation generated by `step` on `universe`.
///
/// Edges leaving the universe are ignored. Components are returned sorted.
pub fn closure_classes<T, F>(universe: &[T], step: F) -> Vec<BTreeSet<T>>
where
    T: Ord + Clone,
    F: Fn(&T) -> Vec<T>,
{
    let all: BTreeSet<T> = universe.iter().cloned().collect();
    let mut adj: std::collections::BTreeMap<T, Vec<T>> = all.iter().map(|x| (x.clone(), Vec::new())).collect();
    for x in &all {
        for y in step(x) {
            if all.contains(&y) {
                adj.get_mut(x).unwrap().push(y.clone());
                adj.get_mut(&y).unwrap().push(x.clone());
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in &all {
        if seen.contains(x) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([x.clone()]);
        seen.insert(x.clone());
        while let Some(c) = queue.pop_front() {
            for y in &adj[&c] {
                if seen.insert(y.clone()) {
                    queue.push_back(y.clone());
                }
            }
            comp.insert(c);
        }
        out.push(comp);
    }
    out.sort();
    out
}
