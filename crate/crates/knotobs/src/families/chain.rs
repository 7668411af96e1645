//! Links `L(k1, k2, k3)` built from three twist tangles joined in a cycle,
//! where an entry may be the infinity tangle.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainEntry {
    Finite(u64),
    Infinity,
}

impl fmt::Display for ChainEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainEntry::Finite(k) => write!(f, "{k}"),
            ChainEntry::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ChainEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" => Ok(ChainEntry::Infinity),
            t => match t.parse::<u64>() {
                Ok(k) if k >= 1 => Ok(ChainEntry::Finite(k)),
                _ => Err(Error::params(format!(
                    "chain entry {t:?} is not a positive integer or inf"
                ))),
            },
        }
    }
}

/// Three entries, at least one finite. Cyclic permutations give the same link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TangleChain([ChainEntry; 3]);

impl TangleChain {
    pub fn new(entries: [ChainEntry; 3]) -> Result<Self> {
        if entries.iter().all(|e| *e == ChainEntry::Infinity) {
            return Err(Error::params("a tangle chain needs a finite entry"));
        }
        if entries.contains(&ChainEntry::Finite(0)) {
            return Err(Error::params("finite chain entries are positive"));
        }
        Ok(TangleChain(entries))
    }

    pub fn finite(k1: u64, k2: u64, k3: u64) -> Result<Self> {
        Self::new([ChainEntry::Finite(k1), ChainEntry::Finite(k2), ChainEntry::Finite(k3)])
    }

    pub fn entries(&self) -> [ChainEntry; 3] {
        self.0
    }
}

impl fmt::Display for TangleChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for TangleChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::params(format!(
                "expected three chain entries, got {}",
                parts.len()
            )));
        }
        let e: Vec<ChainEntry> = parts.iter().map(|p| p.parse()).collect::<Result<_>>()?;
        Self::new([e[0], e[1], e[2]])
    }
}

/// Determinant from the Goeritz matrices of the standard diagrams.
/// With two infinite entries the link is `T(3,4)`.
pub fn chain_link_det(c: &TangleChain) -> i64 {
    let ks: Vec<i64> =
        c.0.iter()
            .filter_map(|e| match e {
                ChainEntry::Finite(k) => Some(*k as i64),
                ChainEntry::Infinity => None,
            })
            .collect();
    match ks[..] {
        [a, b, c] => 3 * (a * b + b * c + c * a) - 4 * (a + b + c) + 4,
        [a, b] => 3 * (a + b) - 4,
        _ => 3,
    }
}

/// Whether `(l, l0, linf)` is an additive triple: the chains agree except in
/// one slot holding `k + 1`, `k` and `inf`, both smaller determinants are
/// nonzero, and `det l = det l0 + det linf`.
pub fn additive_triple_check(l: &TangleChain, l0: &TangleChain, linf: &TangleChain) -> bool {
    let diff: Vec<usize> = (0..3)
        .filter(|&i| !(l.0[i] == l0.0[i] && l.0[i] == linf.0[i]))
        .collect();
    let pattern = match diff[..] {
        [i] => matches!(
            (l.0[i], l0.0[i], linf.0[i]),
            (ChainEntry::Finite(a), ChainEntry::Finite(b), ChainEntry::Infinity) if a == b + 1
        ),
        _ => false,
    };
    let (d, d0, dinf) = (chain_link_det(l), chain_link_det(l0), chain_link_det(linf));
    pattern && d0 != 0 && dinf != 0 && d == d0 + dinf
}
