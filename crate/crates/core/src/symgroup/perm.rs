use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A bijection of `{1, ..., n}`, stored 0-based.
///
/// Composition is right-to-left: `s.compose(&t)` first applies `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u8).collect() }
    }

    /// One-line notation with 1-based images.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x - 1] = true;
        }
        Ok(Self { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// Cycle `(a_1 a_2 ... a_k)` on `n` letters, 1-based.
    pub fn cycle(n: usize, letters: &[usize]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut seen = vec![false; n];
        for (k, &a) in letters.iter().enumerate() {
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!("bad cycle {letters:?} on {n} letters")));
            }
            seen[a - 1] = true;
            let b = letters[(k + 1) % letters.len()];
            images[a - 1] = (b - 1) as u8;
        }
        Ok(Self { images })
    }

    /// Transposition of the 1-based letters `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        Self::cycle(n, &[a, b]).expect("letters within range")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("cycle lengths form a partition")
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Extends to `n ≥ degree` letters, fixing the new ones.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..n as u8);
        Permutation { images }
    }

    /// All permutations of `n` letters in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        // next_permutation
        while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation { images: cur.clone() });
        }
        out
    }

    /// All permutations of `n` letters moving only the 1-based `letters`.
    pub fn all_on(n: usize, letters: &[usize]) -> Vec<Permutation> {
        Permutation::all(letters.len())
            .into_iter()
            .map(|p| {
                let mut images: Vec<u8> = (0..n as u8).collect();
                for (k, &a) in letters.iter().enumerate() {
                    images[a - 1] = (letters[p.apply(k)] - 1) as u8;
                }
                Permutation { images }
            })
            .collect()
    }

    /// A permutation of the given cycle type.
    pub fn with_cycle_type(ty: &Partition) -> Permutation {
        let n = ty.size();
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut start = 0;
        for &len in ty.parts() {
            for k in 0..len {
                images[start + k] = (start + (k + 1) % len) as u8;
            }
            start += len;
        }
        Permutation { images }
    }

    /// Parses cycle notation `"(1 2)(3 4)"` on `n` letters; `"()"` is the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Permutation> {
        let mut p = Permutation::identity(n);
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner_end = rest
                .find(')')
                .filter(|_| rest.starts_with('('))
                .ok_or_else(|| Error::Parse(format!("bad cycle notation {s:?}")))?;
            let letters = rest[1..inner_end]
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if !letters.is_empty() {
                p = p.compose(&Permutation::cycle(n, &letters)?);
            }
            rest = rest[inner_end + 1..].trim_start();
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation, e.g. `"[2,1,3]"` or `"2 1 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad image {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_right_to_left() {
        let a = Permutation::transposition(3, 1, 2);
        let b = Permutation::transposition(3, 1, 3);
        // (1 3)(1 2): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        assert_eq!(b.compose(&a), Permutation::cycle(3, &[1, 2, 3]).unwrap());
        assert!(a.compose(&a).is_identity());
    }

    #[test]
    fn notation() {
        let p = Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!("[2,1,4,3]".parse::<Permutation>().unwrap(), p);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!("[1,1]".parse::<Permutation>().is_err());
    }

    #[test]
    fn enumeration_and_signs() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
        let on = Permutation::all_on(5, &[2, 4, 5]);
        assert_eq!(on.len(), 6);
        assert!(on.iter().all(|p| p.apply(0) == 0 && p.apply(2) == 2));
        assert_eq!(Permutation::with_cycle_type(&Partition::of(&[3, 1])).cycle_type(), Partition::of(&[3, 1]));
    }

    proptest::proptest! {
        #[test]
        fn sign_is_multiplicative(a in 0usize..120, b in 0usize..120) {
            let all = Permutation::all(5);
            let (x, y) = (&all[a], &all[b]);
            proptest::prop_assert_eq!(x.compose(y).sign(), x.sign() * y.sign());
            proptest::prop_assert!(x.compose(&x.inverse()).is_identity());
        }
    }
}
