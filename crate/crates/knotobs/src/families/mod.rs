//! Closed-form invariants and classifiers for pretzel links, two-bridge
//! knots, torus knots and three-tangle chains.

pub mod chain;
pub mod pretzel;
pub mod torus;
pub mod twobridge;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use chain::{additive_triple_check, chain_link_det, ChainEntry, TangleChain};
pub use pretzel::{
    pretzel3_symmetrized_form, pretzel_all_odd_signature, pretzel_genus1_alexander, pretzel_knot_is_sqp,
    pretzel_link_is_sqp3, pretzel_odd_seifert_matrix, pretzel_sigma2_is_lspace, Orientation, SqpVerdict,
};
pub use torus::torus_alexander;
pub use twobridge::{
    even_continued_fraction, genus1_n_bound, genus1_two_bridge, genus1_two_bridge_seifert, kkm_alexander,
    kkm_root_location, minkus_alexander, two_bridge_seifert_matrix,
};

use crate::error::{Error, Result};
use crate::frontend::braid::{braid_seifert_matrix, torus_braid};
use crate::polyalg::LaurentPoly;
use crate::seifert::SeifertMatrix;

/// A family member given by its parameters, as in `pretzel:3,5,-7`,
/// `twobridge:7/2`, `kkm:2,2`, `chain:1,1,inf` or `torus:2,5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Pretzel { strands: Vec<i64> },
    TwoBridge { p: i64, q: i64 },
    Kkm { k: i64, m: i64 },
    Chain { chain: TangleChain },
    Torus { p: u64, q: u64 },
}

fn ints<T: FromStr>(s: &str, sep: char) -> Result<Vec<T>> {
    s.split(sep)
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| Error::params(format!("{x:?} is not an integer")))
        })
        .collect()
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::params(format!("family string {s:?} has no ':'")))?;
        let pair = |v: Vec<i64>| match v[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Error::params(format!("{kind} takes two parameters"))),
        };
        match kind.trim() {
            "pretzel" => Ok(Family::Pretzel {
                strands: ints(args, ',')?,
            }),
            "twobridge" => {
                let (p, q) = pair(ints(args, '/')?)?;
                Ok(Family::TwoBridge { p, q })
            }
            "kkm" => {
                let (k, m) = pair(ints(args, ',')?)?;
                Ok(Family::Kkm { k, m })
            }
            "chain" => Ok(Family::Chain { chain: args.parse()? }),
            "torus" => {
                let (p, q) = pair(ints(args, ',')?)?;
                if p < 0 || q < 0 {
                    return Err(Error::params("torus parameters are positive"));
                }
                Ok(Family::Torus {
                    p: p as u64,
                    q: q as u64,
                })
            }
            other => Err(Error::params(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Pretzel { strands } => {
                let s: Vec<String> = strands.iter().map(|p| p.to_string()).collect();
                write!(f, "pretzel:{}", s.join(","))
            }
            Family::TwoBridge { p, q } => write!(f, "twobridge:{p}/{q}"),
            Family::Kkm { k, m } => write!(f, "kkm:{k},{m}"),
            Family::Chain { chain } => {
                let [a, b, c] = chain.entries();
                write!(f, "chain:{a},{b},{c}")
            }
            Family::Torus { p, q } => write!(f, "torus:{p},{q}"),
        }
    }
}

impl Family {
    /// Alexander polynomial of a knot in the family. Chains carry only a determinant.
    pub fn alexander(&self) -> Result<LaurentPoly> {
        match self {
            Family::Pretzel { strands } => {
                if let [p, q, r] = strands[..] {
                    if [p, q, r].iter().all(|x| x % 2 != 0) {
                        let (d, _) = pretzel_genus1_alexander(p, q, r)?;
                        return Ok(d.normalize().map(|x| x.0).unwrap_or_else(|_| LaurentPoly::zero()));
                    }
                }
                Ok(pretzel_odd_seifert_matrix(strands)?.alexander())
            }
            Family::TwoBridge { p, q } => minkus_alexander(*p, *q),
            Family::Kkm { k, m } => kkm_alexander(*k, *m).and_then(|d| Ok(d.normalize()?.0)),
            Family::Torus { p, q } => torus_alexander(*p, *q),
            Family::Chain { .. } => Err(Error::params("tangle chains are given by their determinant only")),
        }
    }

    /// A Seifert matrix for the family member, where one is available:
    /// odd pretzels, two-bridge knots (including `K(k, m)`) and torus knots.
    pub fn seifert_matrix(&self) -> Result<SeifertMatrix> {
        let s = match self {
            Family::Pretzel { strands } => pretzel_odd_seifert_matrix(strands)?,
            Family::TwoBridge { p, q } => two_bridge_seifert_matrix(*p, *q)?,
            Family::Kkm { k, m } => {
                if *k < 1 || *m < 1 {
                    return Err(Error::params("need k, m >= 1"));
                }
                two_bridge_seifert_matrix(2 * m * (2 * k - 1) + 1, 2 * k - 1)?
            }
            Family::Torus { p, q } => {
                torus_alexander(*p, *q)?;
                braid_seifert_matrix(&torus_braid(*p as usize, *q as usize))?
            }
            Family::Chain { .. } => return Err(Error::params("tangle chains are given by their determinant only")),
        };
        Ok(s.with_name(self.to_string()))
    }
}
