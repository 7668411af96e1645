//! Pretzel links `P(e1 p1, ..., en pn)` with `pi >= 2`.
//!
//! Each classifier normalizes its input by cyclic rotation, reversal and
//! mirroring, and reports the transformation it applied. Mirroring is
//! harmless here: the classifications are stated up to mirror image.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{int_matrix, symmetric_inertia, Inertia};
use crate::polyalg::LaurentPoly;
use crate::seifert::SeifertMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SqpVerdict {
    Sqp,
    NotSqp,
    /// The strand signs change at least twice, where no classification is known.
    Unknown,
}

impl fmt::Display for SqpVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SqpVerdict::Sqp => "SQP",
            SqpVerdict::NotSqp => "not SQP",
            SqpVerdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PretzelKnotVerdict {
    pub verdict: SqpVerdict,
    /// Which case of the classification decided the verdict.
    pub clause: &'static str,
    /// Strands after rotation and mirroring, in the convention of `clause`.
    pub normalized: Vec<i64>,
    pub rotated_by: usize,
    pub mirrored: bool,
}

impl fmt::Display for PretzelKnotVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.verdict, self.clause)
    }
}

fn check_strands(strands: &[i64]) -> Result<()> {
    if strands.len() < 3 {
        return Err(Error::params("a pretzel link needs at least three strands"));
    }
    if let Some(p) = strands.iter().find(|p| p.abs() < 2) {
        return Err(Error::params(format!("strand {p} has fewer than two half twists")));
    }
    Ok(())
}

/// Number of components of `P(p1, ..., pn)`.
pub fn pretzel_components(strands: &[i64]) -> usize {
    let evens = strands.iter().filter(|p| *p % 2 == 0).count();
    match evens {
        0 if strands.len() % 2 == 1 => 1,
        0 => 2,
        e => e,
    }
}

pub fn is_knot(strands: &[i64]) -> bool {
    pretzel_components(strands) == 1
}

/// Strong quasipositivity of a pretzel knot, up to mirror image.
pub fn pretzel_knot_is_sqp(strands: &[i64]) -> Result<PretzelKnotVerdict> {
    check_strands(strands)?;
    if !is_knot(strands) {
        return Err(Error::NotAKnot(format!(
            "P{strands:?} has {} components",
            pretzel_components(strands)
        )));
    }
    let n = strands.len();
    let d: i64 = strands.iter().map(|p| p.signum()).sum();
    match strands.iter().position(|p| p % 2 == 0) {
        Some(e) => {
            // even strand first
            let mut v: Vec<i64> = strands[e..].iter().chain(&strands[..e]).copied().collect();
            let mirrored = v[1] < 0;
            if mirrored {
                v.iter_mut().for_each(|p| *p = -*p);
            }
            let (verdict, clause) = if d.unsigned_abs() as usize == n {
                if n.is_multiple_of(2) {
                    (SqpVerdict::Sqp, "even strand, all signs agree, even strand count")
                } else {
                    (SqpVerdict::NotSqp, "even strand, all signs agree, odd strand count")
                }
            } else if d.unsigned_abs() as usize + 2 == n && n % 2 == 1 && v[1..].iter().all(|p| *p > 0) {
                (SqpVerdict::Sqp, "the even strand alone has the opposite sign")
            } else {
                (SqpVerdict::NotSqp, "even strand, signs disagree among the odd strands")
            };
            Ok(PretzelKnotVerdict {
                verdict,
                clause,
                normalized: v,
                rotated_by: e,
                mirrored,
            })
        }
        None => {
            let mirrored = d < 0;
            let mut v: Vec<i64> = strands.iter().map(|p| if mirrored { -p } else { *p }).collect();
            let k = d.unsigned_abs() as usize;
            if k == n {
                return Ok(PretzelKnotVerdict {
                    verdict: SqpVerdict::Sqp,
                    clause: "all odd, all signs agree",
                    normalized: v,
                    rotated_by: 0,
                    mirrored,
                });
            }
            if k + 2 < n {
                return Ok(PretzelKnotVerdict {
                    verdict: SqpVerdict::Unknown,
                    clause: "all odd, at least two strands of the minority sign",
                    normalized: v,
                    rotated_by: 0,
                    mirrored,
                });
            }
            // one negative strand: rotate it to the end
            let neg = v.iter().position(|p| *p < 0).expect("one negative strand");
            let rot = (neg + 1) % n;
            v.rotate_left(rot);
            let last = v[n - 1].abs();
            let smallest = v[..n - 1].iter().all(|p| last < *p);
            let (verdict, clause) = if smallest {
                (SqpVerdict::Sqp, "all odd, the single negative strand is the shortest")
            } else {
                (
                    SqpVerdict::NotSqp,
                    "all odd, the single negative strand is not the shortest",
                )
            };
            Ok(PretzelKnotVerdict {
                verdict,
                clause,
                normalized: v,
                rotated_by: rot,
                mirrored,
            })
        }
    }
}

/// Orientations of a three-strand pretzel link with `p` even. In the standard
/// diagram the strands of each twist region run parallel or antiparallel:
/// `A` has all three regions antiparallel (the boundary of the two-disk
/// surface, which needs every entry even); `B` and `C` have the `p` region
/// antiparallel and `q`, respectively `r`, parallel; `D` has `r` antiparallel
/// with `p` and `q` parallel, which needs `r` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    A,
    B,
    C,
    D,
}

impl std::str::FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Orientation::A),
            "b" => Ok(Orientation::B),
            "c" => Ok(Orientation::C),
            "d" => Ok(Orientation::D),
            _ => Err(Error::params(format!("unknown orientation {s:?}"))),
        }
    }
}

/// Strong quasipositivity of the oriented link `P(p, q, r)` with `p` even
/// and `p, q > 0`. Orientations `B` and `C` are never SQP.
pub fn pretzel_link_is_sqp3(p: i64, q: i64, r: i64, o: Orientation) -> Result<bool> {
    if matches!(o, Orientation::B | Orientation::C) {
        return Ok(false);
    }
    if p < 2 || p % 2 != 0 || q < 2 || r.abs() < 2 {
        return Err(Error::params("need p even, p, q >= 2 and |r| >= 2"));
    }
    if is_knot(&[p, q, r]) {
        return Err(Error::params(format!("P({p},{q},{r}) is a knot")));
    }
    Ok(match o {
        Orientation::A => {
            if q % 2 != 0 || r % 2 != 0 {
                return Err(Error::params("orientation a needs every entry even"));
            }
            r > 0 || r.abs() < p.min(q)
        }
        Orientation::D => {
            if r % 2 != 0 {
                return Err(Error::params("orientation d needs r even"));
            }
            r < 0
        }
        Orientation::B | Orientation::C => unreachable!(),
    })
}

/// `sigma = (n - 2) + sign(1/pn - sum_{i<n} 1/pi)` for `P(p1, ..., p_{n-1}, -pn)`
/// with every `pi` odd.
pub fn pretzel_all_odd_signature(strands: &[i64]) -> Result<i64> {
    check_strands(strands)?;
    let n = strands.len();
    let (head, last) = strands.split_at(n - 1);
    if strands.iter().any(|p| p % 2 == 0) || n.is_multiple_of(2) || head.iter().any(|p| *p < 0) || last[0] > 0 {
        return Err(Error::params(format!(
            "P{strands:?} is not of the form (p1, ..., p_(n-1), -pn) with odd entries and n odd"
        )));
    }
    let one = |p: i64| BigRational::new(BigInt::from(1), BigInt::from(p));
    let s = one(-last[0]) - head.iter().map(|p| one(*p)).fold(BigRational::zero(), |a, b| a + b);
    Ok(n as i64 - 2
        + if s.is_zero() {
            0
        } else {
            s.signum().to_integer().try_into().unwrap_or(0)
        })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizedForm {
    pub matrix: [[i64; 2]; 2],
    pub det: i64,
    pub inertia: Inertia,
}

/// `[[p + r, r], [r, q + r]]`, twice the symmetrized Seifert form of the
/// two-disk surface; its determinant is `pq + qr + rp`.
pub fn pretzel3_symmetrized_form(p: i64, q: i64, r: i64) -> SymmetrizedForm {
    let matrix = [[p + r, r], [r, q + r]];
    let inertia = symmetric_inertia(&int_matrix(&[&matrix[0], &matrix[1]]));
    SymmetrizedForm {
        matrix,
        det: p * q + q * r + r * p,
        inertia,
    }
}

/// Whether the double branched cover of `P(p1, ..., pn, -q1, ..., -qr)` is
/// an L-space, for `pos` sorted ascending, `n >= r` and `n + r >= 3`.
pub fn pretzel_sigma2_is_lspace(pos: &[i64], neg: &[i64]) -> Result<bool> {
    if pos.iter().chain(neg).any(|p| *p < 2) {
        return Err(Error::Hypothesis("every |entry| must be at least 2".into()));
    }
    if pos.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Hypothesis("positive entries must be sorted ascending".into()));
    }
    if pos.len() < neg.len() || pos.len() + neg.len() < 3 {
        return Err(Error::Hypothesis("need n >= r and n + r >= 3; mirror first".into()));
    }
    Ok(match neg {
        [] => true,
        [q] => *q >= pos[0] || (*q == pos[0] - 1 && 2 * q + 1 >= pos[1]),
        _ => false,
    })
}

/// `a t^2 + (1 - 2a) t + a` with `a = (1 + pq + qr + rp) / 4`, the Alexander
/// polynomial of the genus one pretzel knot `P(p, q, r)` with odd entries.
pub fn pretzel_genus1_alexander(p: i64, q: i64, r: i64) -> Result<(LaurentPoly, i64)> {
    if [p, q, r].iter().any(|x| x % 2 == 0) {
        return Err(Error::params("genus one pretzel knots have odd entries"));
    }
    let s = 1 + p * q + q * r + r * p;
    assert_eq!(s % 4, 0, "1 + pq + qr + rp is divisible by 4 for odd entries");
    let a = s / 4;
    Ok((LaurentPoly::from_i64(0, &[a, 1 - 2 * a, a]), a))
}

/// Seifert matrix of the two-disk surface of `P(p1, ..., pn)` with odd
/// entries and `n` odd, signs fixed so that `P(3, 5, 7)` has signature `-2`.
pub fn pretzel_odd_seifert_matrix(strands: &[i64]) -> Result<SeifertMatrix> {
    if strands.len().is_multiple_of(2) || strands.iter().any(|p| p % 2 == 0) {
        return Err(Error::params("need an odd number of odd strands"));
    }
    let k = strands.len() - 1;
    let mut v = vec![vec![0i64; k]; k];
    for i in 0..k {
        v[i][i] = (strands[i] + strands[i + 1]) / 2;
        if i + 1 < k {
            v[i][i + 1] = (strands[i + 1] + 1) / 2;
            v[i + 1][i] = (strands[i + 1] - 1) / 2;
        }
    }
    let rows: Vec<&[i64]> = v.iter().map(|r| r.as_slice()).collect();
    Ok(SeifertMatrix::from_rows(&rows, 1)?.mirror())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::murasugi_signature;

    fn sqp(s: &[i64]) -> SqpVerdict {
        pretzel_knot_is_sqp(s).unwrap().verdict
    }

    #[test]
    fn knot_verdicts() {
        assert_eq!(sqp(&[3, 5, 7]), SqpVerdict::Sqp);
        assert_eq!(sqp(&[3, 5, -4]), SqpVerdict::Sqp);
        assert_eq!(sqp(&[3, 5, -3]), SqpVerdict::NotSqp);
        assert_eq!(sqp(&[4, 3, 5]), SqpVerdict::NotSqp);
        assert_eq!(sqp(&[3, 5, -7]), SqpVerdict::NotSqp);
        assert_eq!(sqp(&[-5, 3, 7]), SqpVerdict::NotSqp);
        assert_eq!(sqp(&[7, -3, 5]), SqpVerdict::Sqp);
        assert_eq!(sqp(&[-5, -7, 3]), SqpVerdict::Sqp);
        assert_eq!(sqp(&[4, 3, -5]), SqpVerdict::NotSqp);
        assert_eq!(sqp(&[-4, -3, 5]), SqpVerdict::NotSqp);
        assert_eq!(sqp(&[2, 3, 5, 7]), SqpVerdict::Sqp);
        assert_eq!(sqp(&[-2, -3, -5, -7]), SqpVerdict::Sqp);
        assert_eq!(sqp(&[3, 3, 3, -3, -3]), SqpVerdict::Unknown);
        assert_eq!(sqp(&[5, 5, 5, 5, -3]), SqpVerdict::Sqp);
        assert!(matches!(pretzel_knot_is_sqp(&[2, 4, 3]), Err(Error::NotAKnot(_))));
        assert!(matches!(pretzel_knot_is_sqp(&[3, 3, 3, 3]), Err(Error::NotAKnot(_))));
        assert!(pretzel_knot_is_sqp(&[1, 3, 5]).is_err());
        let v = pretzel_knot_is_sqp(&[-3, 5, 7]).unwrap();
        assert_eq!(v.normalized, vec![5, 7, -3]);
        assert_eq!(
            v.to_string(),
            "SQP (all odd, the single negative strand is the shortest)"
        );
    }

    #[test]
    fn links() {
        use Orientation::*;
        assert!(pretzel_link_is_sqp3(2, 4, 6, A).unwrap());
        assert!(!pretzel_link_is_sqp3(4, 3, -5, B).unwrap());
        assert!(pretzel_link_is_sqp3(4, 6, -2, A).unwrap());
        assert!(!pretzel_link_is_sqp3(4, 6, -4, A).unwrap());
        assert!(pretzel_link_is_sqp3(4, 3, -2, D).unwrap());
        assert!(!pretzel_link_is_sqp3(4, 3, 2, D).unwrap());
        assert!(pretzel_link_is_sqp3(3, 4, 2, A).is_err());
        assert!(pretzel_link_is_sqp3(4, 3, 5, A).is_err());
    }

    #[test]
    fn jabuka() {
        assert_eq!(pretzel_all_odd_signature(&[3, 3, -3]).unwrap(), 0);
        assert_eq!(pretzel_all_odd_signature(&[3, 5, -7]).unwrap(), 0);
        assert_eq!(pretzel_all_odd_signature(&[3, 3, -5]).unwrap(), 0);
        assert_eq!(pretzel_all_odd_signature(&[7, 9, -3]).unwrap(), 2);
        assert!(pretzel_all_odd_signature(&[3, -5, 7]).is_err());
        assert!(pretzel_all_odd_signature(&[3, 4, -7]).is_err());
        // the two-disk Seifert matrix agrees in absolute value
        for s in [[3, 5, -7], [7, 9, -3], [5, 7, -3], [3, 3, -3], [7, 9, -5], [9, 11, -15]] {
            let m = pretzel_odd_seifert_matrix(&s).unwrap();
            assert_eq!(
                murasugi_signature(&m).abs(),
                pretzel_all_odd_signature(&s).unwrap(),
                "{s:?}"
            );
        }
        for s in [
            [3, 3, 3, 3, -3],
            [5, 5, 5, 5, -3],
            [3, 5, 7, 9, -11],
            [15, 15, 15, 15, -3],
        ] {
            let m = pretzel_odd_seifert_matrix(&s).unwrap();
            assert_eq!(
                murasugi_signature(&m).abs(),
                pretzel_all_odd_signature(&s).unwrap(),
                "{s:?}"
            );
        }
    }

    #[test]
    fn symmetrized() {
        let f = pretzel3_symmetrized_form(3, 3, 3);
        assert_eq!(f.det, 27);
        assert_eq!(
            f.inertia,
            Inertia {
                n_plus: 2,
                n_zero: 0,
                n_minus: 0
            }
        );
        let f = pretzel3_symmetrized_form(4, 6, -2);
        assert_eq!(f.det, 4);
        assert_eq!(f.inertia.signature(), 2);
        let f = pretzel3_symmetrized_form(2, 2, -2);
        assert_eq!(f.det, -4);
        assert_eq!(f.inertia.signature(), 0);
    }

    #[test]
    fn lspace_covers() {
        assert!(pretzel_sigma2_is_lspace(&[3, 5], &[7]).unwrap());
        assert!(!pretzel_sigma2_is_lspace(&[5, 7], &[3]).unwrap());
        assert!(pretzel_sigma2_is_lspace(&[5, 7], &[4]).unwrap());
        assert!(!pretzel_sigma2_is_lspace(&[5, 10], &[4]).unwrap());
        assert!(pretzel_sigma2_is_lspace(&[2, 3, 7], &[]).unwrap());
        assert!(!pretzel_sigma2_is_lspace(&[3, 3, 3], &[3, 3]).unwrap());
        assert!(pretzel_sigma2_is_lspace(&[5, 3], &[4]).is_err());
        assert!(pretzel_sigma2_is_lspace(&[3], &[3, 3]).is_err());
    }

    #[test]
    fn genus_one_pretzels() {
        let (d, a) = pretzel_genus1_alexander(3, 3, 3).unwrap();
        assert_eq!((d, a), (LaurentPoly::from_i64(0, &[7, -13, 7]), 7));
        let (d, a) = pretzel_genus1_alexander(3, 5, -7).unwrap();
        assert_eq!((d, a), (LaurentPoly::from_i64(0, &[-10, 21, -10]), -10));
        assert_eq!(pretzel_genus1_alexander(1, 1, 1).unwrap().1, 1);
        for p in (-15i64..=15).step_by(2) {
            for q in (-15i64..=15).step_by(2) {
                for r in (-15i64..=15).step_by(2) {
                    let (d, _) = pretzel_genus1_alexander(p, q, r).unwrap();
                    let det = pretzel3_symmetrized_form(p, q, r).det;
                    assert_eq!(d.eval_int(-1).unwrap().abs(), BigInt::from(det.abs()));
                    if p.abs() > 1 && q.abs() > 1 && r.abs() > 1 {
                        let m = pretzel_odd_seifert_matrix(&[p, q, r]).unwrap();
                        assert_eq!(
                            m.alexander(),
                            d.normalize().map(|x| x.0).unwrap_or_else(|_| LaurentPoly::zero())
                        );
                    }
                }
            }
        }
    }
}
