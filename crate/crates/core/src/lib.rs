//! Tensor-module categories of the finitary Lie algebras `sl(∞)`, `o(∞)` and
//! `sp(∞)`.
//!
//! The crate builds the graded endomorphism algebras of `T^{≤r}` from their
//! quadratic presentation over symmetric-group algebras, computes quadratic
//! duals, Hilbert series, socle layers, Ext dimensions and blocks, and checks
//! all of it against an exact finite-rank oracle acting on tensor spaces of
//! `gl(n)`, `o(2n)` and `sp(2n)`.
//!
//! Permutations compose right-to-left: `(s * t)(i) = s(t(i))`, and a
//! permutation `s` acts on tensors by moving the factor in position `i` to
//! position `s(i)`. Every identity in the crate is stated and checked in this
//! convention.

pub mod error;
pub mod homology;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod quadratic;
pub mod symgroup;
pub mod weyl;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use error::{Error, Result};
pub use linalg::{Rational, SparseVec, Subspace};
pub use partitions::{block_label, BiPartition, BlockLabel, Label, Partition};
pub use symgroup::{GroupAlgebraElement, GroupElement, Permutation, RightIdeal};

/// Which finitary Lie algebra the category belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LieType {
    Sl,
    O,
    Sp,
}

impl LieType {
    pub const ALL: [LieType; 3] = [LieType::Sl, LieType::O, LieType::Sp];

    pub fn name(self) -> &'static str {
        match self {
            LieType::Sl => "sl",
            LieType::O => "o",
            LieType::Sp => "sp",
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sl" => Ok(LieType::Sl),
            "o" => Ok(LieType::O),
            "sp" => Ok(LieType::Sp),
            _ => Err(Error::Parse(format!("unknown Lie type {s:?}; expected sl, o or sp"))),
        }
    }
}
