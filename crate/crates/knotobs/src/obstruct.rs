//! Decision procedures bounding which cyclic branched covers can be L-spaces.
//!
//! For a strongly quasipositive link every root of the Alexander polynomial
//! must lie in the arc `I_+(zeta_n)` around `1` when the `n`-fold cover is an
//! L-space, and the signature must be maximal on the complementary arc.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyalg::{
    cyclotomic_factorization, cyclotomic_laurent, isolate_circle_roots, AlgebraicCosineBoundary, CircleRootProfile,
    LaurentPoly, RealAlgebraic,
};
use crate::seifert::{murasugi_signature, reduced_alexander, signature_profile, SeifertMatrix, SignatureProfile};

/// Bound on the cover order: a positive integer, no bound, or no admissible order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverBound {
    Finite(u64),
    Unbounded,
    Undefined,
}

impl CoverBound {
    pub fn finite(self) -> Option<u64> {
        match self {
            CoverBound::Finite(n) => Some(n),
            _ => None,
        }
    }

    /// Whether the bound excludes the order `n`.
    pub fn excludes(self, n: u64) -> bool {
        match self {
            CoverBound::Finite(b) => n > b,
            CoverBound::Unbounded => false,
            CoverBound::Undefined => true,
        }
    }
}

impl fmt::Display for CoverBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverBound::Finite(n) => write!(f, "{n}"),
            CoverBound::Unbounded => f.write_str("UNBOUNDED"),
            CoverBound::Undefined => f.write_str("UNDEFINED"),
        }
    }
}

impl Serialize for CoverBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoverBound::Finite(n) => s.serialize_u64(*n),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Largest `r >= 2` with `2cos(2 pi / r) < x`, for `-2 < x < 2`.
fn largest_order_below(x: &RealAlgebraic) -> u64 {
    let theta = (x.to_f64() / 2.0).clamp(-1.0, 1.0).acos();
    let mut r = ((2.0 * std::f64::consts::PI / theta).ceil() as u64)
        .saturating_sub(1)
        .max(2);
    let below = |r: u64| x.cmp_exact(&AlgebraicCosineBoundary::for_order(r).value) == Ordering::Greater;
    while r > 2 && !below(r) {
        r -= 1;
    }
    while below(r + 1) {
        r += 1;
    }
    r
}

/// Largest `r >= 2` with every root of `Delta` inside `I_+(zeta_r)`.
///
/// `UNBOUNDED` when every root is `1` (so `Delta` is a constant times a
/// power of `t - 1`); `UNDEFINED` when a root is off the circle or at `-1`.
pub fn n3(delta: &LaurentPoly) -> Result<CoverBound> {
    let p = isolate_circle_roots(delta)?;
    Ok(n3_from_roots(&p))
}

pub fn n3_from_roots(p: &CircleRootProfile) -> CoverBound {
    if p.off_circle_count > 0 || p.root_at_minus_one > 0 {
        return CoverBound::Undefined;
    }
    match p.circle_roots.last() {
        None => CoverBound::Unbounded,
        Some(outer) => CoverBound::Finite(largest_order_below(&outer.x)),
    }
}

/// Largest `n >= 2` for which the roots inside `I_+(zeta_n)`, counted with
/// multiplicity and including `t = 1`, number at least `2 g4 + (m - 1)`.
pub fn n4(delta: &LaurentPoly, g4: u64, m: u64) -> Result<CoverBound> {
    if m == 0 {
        return Err(Error::params("a link has at least one component"));
    }
    let threshold = (2 * g4 + m - 1) as usize;
    let p = isolate_circle_roots(delta)?;
    if p.root_at_one >= threshold {
        return Err(Error::Hypothesis(format!("Delta is divisible by (t - 1)^{threshold}")));
    }
    let mut count = p.root_at_one;
    for r in &p.circle_roots {
        count += 2 * r.multiplicity;
        if count >= threshold {
            return Ok(CoverBound::Finite(largest_order_below(&r.x)));
        }
    }
    Ok(CoverBound::Undefined)
}

/// Outcome of the cyclotomic classification of a monic Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonicVerdict {
    pub n: u64,
    pub pass: bool,
    /// Cyclotomic factor indices with exponents.
    pub factors: BTreeMap<usize, usize>,
    /// Non-cyclotomic cofactor, `1` for a cyclotomic product.
    pub remainder: LaurentPoly,
    pub reason: &'static str,
}

fn allowed_indices(n: u64, knot: bool) -> Option<&'static [usize]> {
    match (n, knot) {
        (2, _) => None,
        (3, false) => Some(&[1, 4, 6, 10]),
        (3, true) => Some(&[6, 10]),
        (4 | 5, false) => Some(&[1, 6]),
        (4 | 5, true) => Some(&[6]),
        _ => Some(&[]),
    }
}

/// Which cyclotomic factors a monic `Delta` may have if the `n`-fold cover
/// of a strongly quasipositive link is an L-space. Knots additionally rule
/// out `Phi_1` and `Phi_4`, which never divide a knot polynomial.
pub fn monic_classification(delta: &LaurentPoly, n: u64, knot: bool) -> Result<MonicVerdict> {
    if n < 2 {
        return Err(Error::params("cover order must be at least 2"));
    }
    let f = delta.normalized_poly()?;
    if !f.lc().is_one() || !f.coeff(0).abs().is_one() {
        return Err(Error::NonMonic);
    }
    let fac = cyclotomic_factorization(delta)?;
    let factors = fac.exponents.clone();
    let remainder = LaurentPoly::from_poly(fac.remainder.clone());
    let verdict = |pass, reason| MonicVerdict {
        n,
        pass,
        factors: factors.clone(),
        remainder: remainder.clone(),
        reason,
    };
    if factors.keys().all(|&k| k == 1) && fac.is_pure() {
        return Ok(verdict(true, "power-of-t-minus-one-exempt"));
    }
    if !fac.is_pure() {
        return Ok(verdict(false, "not-cyclotomic-product"));
    }
    if knot && factors.keys().any(|&k| k == 1 || k == 4) {
        return Ok(verdict(false, "knot-with-phi1-or-phi4"));
    }
    if n >= 6 {
        return Ok(verdict(false, "cover-order-above-5"));
    }
    match allowed_indices(n, knot) {
        None => Ok(verdict(true, "cyclotomic-product")),
        Some(allowed) => {
            if factors.keys().all(|k| allowed.contains(k)) {
                Ok(verdict(true, "allowed-cyclotomic-factors"))
            } else {
                Ok(verdict(false, "disallowed-cyclotomic-factor"))
            }
        }
    }
}

/// Orders `n` in `2..=5` at which an L-space knot with this Alexander
/// polynomial can have an L-space `n`-fold cover and be strongly quasipositive.
/// With `check_coefficients`, `Delta` must have all nonzero coefficients `+-1`,
/// which holds for every L-space knot.
pub fn lspace_knot_screen(delta: &LaurentPoly, check_coefficients: bool) -> Result<BTreeSet<u64>> {
    let f = delta.normalized_poly()?;
    if check_coefficients && f.coeffs().iter().any(|c| c.abs() > BigInt::one()) {
        return Err(Error::Hypothesis(
            "an L-space knot has coefficients in {-1, 0, 1}".into(),
        ));
    }
    let (canon, _) = delta.normalize()?;
    let phi6 = cyclotomic_laurent(6);
    let phi10 = cyclotomic_laurent(10);
    let mut out = BTreeSet::new();
    for n in 2..=5u64 {
        if !monic_classification(delta, n, true)?.pass {
            continue;
        }
        let ok = match n {
            2 => true,
            3 => canon == phi6 || canon == phi10,
            _ => canon == phi6,
        };
        if ok {
            out.insert(n);
        }
    }
    Ok(out)
}

/// Machine-readable reason an L-space cover is ruled out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// A root of `Delta` lies on or beyond the boundary of `I_+(zeta_n)`.
    RootOutsidePlusArc,
    /// `|sigma(-1)|` is below `2g + (m - 1)`.
    Indefinite,
    /// `deg Delta` differs from `2g + (m - 1)`.
    DegreeMismatch,
    /// `|sigma|` drops below the maximum somewhere on the closed arc `I_-(zeta_n)`.
    SignatureNotMaximal,
    /// A monic `Delta` has a cyclotomic factor not allowed at this order.
    MonicClassification,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::RootOutsidePlusArc => "root-outside-plus-arc",
            Reason::Indefinite => "indefinite",
            Reason::DegreeMismatch => "degree-mismatch",
            Reason::SignatureNotMaximal => "signature-not-maximal",
            Reason::MonicClassification => "monic-classification",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reasons", rename_all = "kebab-case")]
pub enum LSpaceVerdict {
    ConsistentWithLSpace,
    RulesOutLSpace(Vec<Reason>),
}

impl LSpaceVerdict {
    pub fn rules_out(&self) -> bool {
        matches!(self, LSpaceVerdict::RulesOutLSpace(_))
    }
}

/// Checks that must hold if `S` is a genus-realizing Seifert matrix of a
/// strongly quasipositive link whose `n`-fold cover is an L-space.
pub fn sqp_lspace_obstruction(s: &SeifertMatrix, n: u64) -> Result<LSpaceVerdict> {
    let profile = signature_profile(s)?;
    Ok(lspace_reasons(s, &profile, n))
}

fn lspace_reasons(s: &SeifertMatrix, profile: &SignatureProfile, n: u64) -> LSpaceVerdict {
    let size = s.size();
    let mut reasons = Vec::new();
    let full = s.alexander();
    if full.is_zero() || full.span() != size {
        reasons.push(Reason::DegreeMismatch);
    }
    if murasugi_signature(s).unsigned_abs() as usize != size {
        reasons.push(Reason::Indefinite);
    }
    let roots = &profile.roots;
    let arc = roots.count_roots_in_plus_arc(n);
    if full.is_zero() || arc.on_boundary + arc.outside + roots.off_circle_count > 0 {
        reasons.push(Reason::RootOutsidePlusArc);
    }
    if !signature_maximal_on_minus_arc(profile, n) {
        reasons.push(Reason::SignatureNotMaximal);
    }
    if reasons.is_empty() {
        LSpaceVerdict::ConsistentWithLSpace
    } else {
        LSpaceVerdict::RulesOutLSpace(reasons)
    }
}

/// `|sigma| = N` on every arc meeting the closed arc `I_-(zeta_n)`, and at
/// every jump in it whose value was evaluated exactly.
fn signature_maximal_on_minus_arc(profile: &SignatureProfile, n: u64) -> bool {
    let b = AlgebraicCosineBoundary::for_order(n).value;
    let max = profile.size as i64;
    let roots = &profile.roots.circle_roots;
    let arcs_ok = profile.arcs.iter().enumerate().all(|(k, a)| {
        // arc k has lower end roots[k], or -2 for the last arc
        let meets = match roots.get(k) {
            None => true,
            Some(r) => r.x.cmp_exact(&b) == Ordering::Less,
        };
        !meets || a.sigma.abs() == max
    });
    let jumps_ok = roots.iter().zip(&profile.jumps).all(|(r, jump)| {
        r.x.cmp_exact(&b) == Ordering::Greater || jump.at_jump.is_none_or(|(sigma, _)| sigma.abs() == max)
    });
    arcs_ok && jumps_ok
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SqpStatus {
    NoObstruction,
    #[serde(rename = "not-sqp")]
    NotSqp,
}

/// A link with an L-space cover and non-maximal signature is not strongly quasipositive.
pub fn sqp_status_obstruction(sigma: i64, g: i64, m: i64, some_cover_is_lspace: bool) -> SqpStatus {
    if some_cover_is_lspace && sigma.abs() != 2 * g + (m - 1) {
        SqpStatus::NotSqp
    } else {
        SqpStatus::NoObstruction
    }
}

/// Range of cover orders ruled out for one reason; `to = None` is unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuledOut {
    pub from: u64,
    pub to: Option<u64>,
    pub reasons: Vec<Reason>,
}

/// Everything the Seifert data says about L-space covers under the
/// assumption that the link is strongly quasipositive and `S` realizes its genus.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub schema: u32,
    pub name: Option<String>,
    pub alexander: LaurentPoly,
    pub size: usize,
    pub components: usize,
    pub sigma: i64,
    pub definite: bool,
    pub deg_equals_max_signature: bool,
    pub n3: CoverBound,
    pub n4: Option<CoverBound>,
    pub monic_class: Option<BTreeMap<u64, bool>>,
    pub ruled_out_covers: Vec<RuledOut>,
}

/// Orders below `n3` are examined one by one up to this bound.
const EXPLICIT_ORDERS: u64 = 12;

pub fn obstruction_report(s: &SeifertMatrix, g4: Option<u64>) -> Result<ObstructionReport> {
    let profile = signature_profile(s)?;
    let full = s.alexander();
    let size = s.size();
    let sigma = murasugi_signature(s);
    let (reduced, _) = reduced_alexander(s)?;
    let n3v = if full.is_zero() {
        CoverBound::Undefined
    } else {
        n3_from_roots(&profile.roots)
    };
    // n4 is left out when (t - 1)^(2 g4 + m - 1) divides Delta
    let n4v = match g4 {
        Some(g4) if !full.is_zero() => match n4(&full, g4, s.components as u64) {
            Ok(b) => Some(b),
            Err(Error::Hypothesis(_)) => None,
            Err(e) => return Err(e),
        },
        _ => None,
    };
    let monic = match full.normalized_poly() {
        Ok(f) if f.lc().is_one() && f.coeff(0).abs().is_one() => {
            let knot = s.components == 1;
            let mut m = BTreeMap::new();
            for n in 2..=5 {
                m.insert(n, monic_classification(&full, n, knot)?.pass);
            }
            Some(m)
        }
        _ => None,
    };
    let mut ruled = Vec::new();
    let last_explicit = match n3v {
        CoverBound::Finite(b) => b.min(EXPLICIT_ORDERS),
        CoverBound::Unbounded => EXPLICIT_ORDERS,
        CoverBound::Undefined => 1,
    };
    for n in 2..=last_explicit {
        let mut reasons = match lspace_reasons(s, &profile, n) {
            LSpaceVerdict::ConsistentWithLSpace => Vec::new(),
            LSpaceVerdict::RulesOutLSpace(r) => r,
        };
        if monic.as_ref().and_then(|m| m.get(&n)) == Some(&false) {
            reasons.push(Reason::MonicClassification);
        }
        if !reasons.is_empty() {
            ruled.push(RuledOut {
                from: n,
                to: Some(n),
                reasons,
            });
        }
    }
    match n3v {
        CoverBound::Finite(b) => ruled.push(RuledOut {
            from: b + 1,
            to: None,
            reasons: vec![Reason::RootOutsidePlusArc],
        }),
        CoverBound::Undefined => ruled.push(RuledOut {
            from: 2,
            to: None,
            reasons: vec![Reason::RootOutsidePlusArc],
        }),
        CoverBound::Unbounded => {}
    }
    Ok(ObstructionReport {
        schema: 1,
        name: s.name.clone(),
        alexander: if full.is_zero() { reduced } else { full.clone() },
        size,
        components: s.components,
        sigma,
        definite: sigma.unsigned_abs() as usize == size,
        deg_equals_max_signature: !full.is_zero() && full.span() == size,
        n3: n3v,
        n4: n4v,
        monic_class: monic,
        ruled_out_covers: ruled,
    })
}

impl ObstructionReport {
    /// Whether the report rules out an L-space `n`-fold cover.
    pub fn rules_out(&self, n: u64) -> bool {
        self.ruled_out_covers
            .iter()
            .any(|r| r.from <= n && r.to.is_none_or(|t| n <= t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::cyclotomic_laurent as phi;

    fn lp(v: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(0, v)
    }

    #[test]
    fn n3_examples() {
        assert_eq!(n3(&lp(&[1, -1, 1])).unwrap(), CoverBound::Finite(5));
        assert_eq!(n3(&phi(10)).unwrap(), CoverBound::Finite(3));
        assert_eq!(n3(&lp(&[2, -3, 2])).unwrap(), CoverBound::Finite(8));
        assert_eq!(n3(&lp(&[-1, 1])).unwrap(), CoverBound::Unbounded);
        assert_eq!(n3(&lp(&[1, -3, 1])).unwrap(), CoverBound::Undefined);
        assert_eq!(n3(&lp(&[1, 1])).unwrap(), CoverBound::Undefined);
    }

    #[test]
    fn n4_examples() {
        assert_eq!(n4(&phi(10), 2, 1).unwrap(), CoverBound::Finite(3));
        assert_eq!(n4(&lp(&[1, -1, 1]), 1, 1).unwrap(), CoverBound::Finite(5));
        assert_eq!(n4(&lp(&[2, -3, 2]), 1, 1).unwrap(), CoverBound::Finite(8));
        // two roots needed: the pair at pi/5 suffices below n = 10
        assert_eq!(n4(&phi(10), 1, 1).unwrap(), CoverBound::Finite(9));
        assert!(matches!(n4(&lp(&[1, -2, 1]), 1, 1), Err(Error::Hypothesis(_))));
        assert_eq!(n4(&lp(&[1, -3, 1]), 1, 1).unwrap(), CoverBound::Undefined);
    }

    #[test]
    fn monic_examples() {
        assert!(monic_classification(&phi(6), 5, true).unwrap().pass);
        assert!(monic_classification(&phi(10), 3, true).unwrap().pass);
        assert!(!monic_classification(&phi(10), 4, true).unwrap().pass);
        assert!(monic_classification(&phi(6).mul(&phi(10)), 3, true).unwrap().pass);
        assert!(!monic_classification(&phi(6), 6, true).unwrap().pass);
        assert_eq!(monic_classification(&lp(&[2, -3, 2]), 2, true), Err(Error::NonMonic));
        assert!(!monic_classification(&lp(&[1, -3, 1]), 2, true).unwrap().pass);
    }

    #[test]
    fn screen_examples() {
        let s = |p: &LaurentPoly| lspace_knot_screen(p, false).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(s(&phi(6)), vec![2, 3, 4, 5]);
        assert_eq!(s(&phi(10)), vec![2, 3]);
        assert_eq!(s(&phi(6).mul(&phi(6)).mul(&phi(10))), vec![2]);
    }

    #[test]
    fn sqp_verdicts() {
        let tre = SeifertMatrix::from_rows(&[&[-1, 1], &[0, -1]], 1).unwrap();
        assert_eq!(
            sqp_lspace_obstruction(&tre, 5).unwrap(),
            LSpaceVerdict::ConsistentWithLSpace
        );
        assert_eq!(
            sqp_lspace_obstruction(&tre, 6).unwrap(),
            LSpaceVerdict::RulesOutLSpace(vec![Reason::RootOutsidePlusArc, Reason::SignatureNotMaximal])
        );
        let fig8 = SeifertMatrix::from_rows(&[&[1, 1], &[0, -1]], 1).unwrap();
        for n in 2..6 {
            match sqp_lspace_obstruction(&fig8, n).unwrap() {
                LSpaceVerdict::RulesOutLSpace(r) => assert!(r.contains(&Reason::Indefinite)),
                v => panic!("{v:?}"),
            }
        }
        assert_eq!(sqp_status_obstruction(0, 1, 1, true), SqpStatus::NotSqp);
        assert_eq!(sqp_status_obstruction(-2, 1, 1, true), SqpStatus::NoObstruction);
        assert_eq!(sqp_status_obstruction(0, 1, 1, false), SqpStatus::NoObstruction);
    }

    #[test]
    fn report_for_trefoil() {
        let tre = SeifertMatrix::from_rows(&[&[-1, 1], &[0, -1]], 1).unwrap();
        let r = obstruction_report(&tre, Some(1)).unwrap();
        assert_eq!(r.n3, CoverBound::Finite(5));
        assert_eq!(r.n4, Some(CoverBound::Finite(5)));
        assert!(r.definite);
        assert!((2..=5).all(|n| !r.rules_out(n)));
        assert!((6..40).all(|n| r.rules_out(n)));
    }
}
