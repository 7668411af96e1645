//! Homology of cyclic branched covers and the inequalities built on signatures.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::cycfield::product_of_norms;
use crate::polyalg::{eval_at_root_of_unity, resultant_with_cyclotomic_tower, HomologyOrder, LaurentPoly};
use crate::seifert::{nullity_at_root_of_unity, signature_profile, SeifertMatrix, SignatureProfile};

/// Value of `Delta` and the nullity at one `zeta_n^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverTerm {
    pub j: u64,
    /// Whether `Delta(zeta_n^j) = 0`, decided exactly in the cyclotomic field.
    pub vanishes: bool,
    /// `|N(Delta(zeta_n^j))|` over `Q(zeta_n^j)`, rendered exactly.
    pub norm: String,
    /// Nullity at `zeta_n^j`; unknown at a root of `Delta` without a Seifert matrix.
    pub eta: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchedCoverReport {
    pub n: u64,
    pub h1_order: HomologyOrder,
    /// `None` when some nullity is unknown.
    pub betti1: Option<usize>,
    pub is_qhs: bool,
    pub per_j: Vec<CoverTerm>,
    pub provenance: Vec<&'static str>,
}

const ORDER_FACT: &str = "|H1| is the product of |Delta| over the nontrivial n-th roots of unity";
const BETTI_FACT: &str = "b1 is the sum of the nullities over the nontrivial n-th roots of unity";

fn cover_terms(delta: &LaurentPoly, n: u64, seifert: Option<&SeifertMatrix>) -> Vec<CoverTerm> {
    (1..n)
        .map(|j| {
            let (field, v) = eval_at_root_of_unity(delta, n, j);
            let norm = field.norm(&v).abs();
            let vanishes = v.is_zero();
            let eta = match seifert {
                Some(s) => Some(nullity_at_root_of_unity(s, n, j)),
                None if !vanishes => Some(0),
                None => None,
            };
            CoverTerm {
                j,
                vanishes,
                norm: norm.to_string(),
                eta,
            }
        })
        .collect()
}

/// Report for the `n`-fold cyclic branched cover from the Alexander polynomial alone.
pub fn branched_cover_from_alexander(delta: &LaurentPoly, n: u64) -> Result<BranchedCoverReport> {
    report(delta, n, None)
}

/// Report for the `n`-fold cover from a Seifert matrix, with exact nullities.
pub fn branched_cover_homology(s: &SeifertMatrix, n: u64) -> Result<BranchedCoverReport> {
    report(&s.alexander(), n, Some(s))
}

fn report(delta: &LaurentPoly, n: u64, s: Option<&SeifertMatrix>) -> Result<BranchedCoverReport> {
    if n < 2 {
        return Err(Error::params("cover order must be at least 2"));
    }
    if delta.is_zero() {
        // every nullity is positive: H1 is infinite
        let per_j = (1..n)
            .map(|j| CoverTerm {
                j,
                vanishes: true,
                norm: "0".into(),
                eta: s.map(|s| nullity_at_root_of_unity(s, n, j)),
            })
            .collect::<Vec<_>>();
        let betti1 = per_j.iter().map(|t| t.eta).sum();
        return Ok(BranchedCoverReport {
            n,
            h1_order: HomologyOrder::Infinite,
            betti1,
            is_qhs: false,
            per_j,
            provenance: vec![ORDER_FACT, BETTI_FACT],
        });
    }
    let h1_order = resultant_with_cyclotomic_tower(delta, n as usize)?;
    let per_j = cover_terms(delta, n, s);
    let betti1: Option<usize> = per_j.iter().map(|t| t.eta).sum();
    Ok(BranchedCoverReport {
        n,
        is_qhs: h1_order.is_finite(),
        h1_order,
        betti1,
        per_j,
        provenance: vec![ORDER_FACT, BETTI_FACT],
    })
}

/// `|H1|` as the product of the field norms of `Delta` over the
/// divisors of `n`, independent of the resultant.
pub fn h1_order_by_norms(delta: &LaurentPoly, n: u64) -> HomologyOrder {
    let v: BigRational = product_of_norms(delta, n);
    debug_assert!(v.is_integer());
    HomologyOrder::from_value(v.to_integer())
}

/// `|sigma| + |eta - (mu - 1)| <= 2 g(F) + (m - mu)`
pub fn murasugi_tristram_check(sigma: i64, eta: i64, mu: i64, g_f: i64, m: i64) -> bool {
    sigma.abs() + (eta - (mu - 1)).abs() <= 2 * g_f + (m - mu)
}

/// `max ceil(|sigma|/2)` over the arcs of the signature function of a knot.
pub fn top_four_genus_lower_bound(s: &SeifertMatrix) -> Result<i64> {
    if s.components != 1 {
        return Err(Error::Hypothesis(
            "the four-genus bound needs a knot; use big_genus for links".into(),
        ));
    }
    let p = signature_profile(s)?;
    let mut best = (p.at_minus_one.0.abs() + 1) / 2;
    for a in &p.arcs {
        best = best.max((a.sigma.abs() + 1) / 2);
    }
    Ok(best)
}

/// `G(F) = g(F) + (m - mu)`
pub fn big_genus(g_f: i64, m: i64, mu: i64) -> Result<i64> {
    if !(1 <= mu && mu <= m) {
        return Err(Error::params("need 1 <= mu <= m"));
    }
    Ok(g_f + m - mu)
}

/// `sigma_K(zeta_n^j) = sigma_C(zeta_n^{wj}) + sigma_{K_1}(zeta_n^j)` for a
/// satellite with companion `C`, pattern knot `K_1` and winding number `w`.
pub fn satellite_signature(
    companion: &SignatureProfile,
    pattern: &SignatureProfile,
    w: i64,
    n: u64,
    j: i64,
) -> Result<i64> {
    let c = companion.sigma_at(w * j, n)?;
    let k = pattern.sigma_at(j, n)?;
    Ok(c + k)
}

/// `g(K) >= |w| g(C) + g(K_1)`
pub fn satellite_genus_bound(g_c: i64, g_k1: i64, w: i64) -> i64 {
    w.abs() * g_c + g_k1
}

/// Product `h1(n)` for a connected sum, the sanity check for multiplicativity.
pub fn multiply_orders(a: &HomologyOrder, b: &HomologyOrder) -> HomologyOrder {
    match (a, b) {
        (HomologyOrder::Finite(x), HomologyOrder::Finite(y)) => HomologyOrder::Finite(x * y),
        _ => HomologyOrder::Infinite,
    }
}

impl BranchedCoverReport {
    pub fn h1_value(&self) -> Option<&BigInt> {
        self.h1_order.finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::from_rows(&[&[-1, 1], &[0, -1]], 1).unwrap()
    }

    #[test]
    fn cover_examples() {
        let r = branched_cover_homology(&trefoil(), 2).unwrap();
        assert_eq!(r.h1_order, HomologyOrder::Finite(3.into()));
        assert!(r.is_qhs);
        assert_eq!(r.betti1, Some(0));
        let r = branched_cover_homology(&trefoil(), 6).unwrap();
        assert_eq!(r.h1_order, HomologyOrder::Infinite);
        assert_eq!(r.betti1, Some(2));
        let hopf = LaurentPoly::from_i64(0, &[-1, 1]);
        let r = branched_cover_from_alexander(&hopf, 4).unwrap();
        assert_eq!(r.h1_order, HomologyOrder::Finite(4.into()));
        let r = branched_cover_from_alexander(&trefoil().alexander(), 6).unwrap();
        assert_eq!(r.betti1, None);
    }

    #[test]
    fn inequalities() {
        assert!(murasugi_tristram_check(-2, 0, 1, 1, 1));
        assert!(!murasugi_tristram_check(-2, 0, 1, 0, 1));
        assert!(murasugi_tristram_check(0, 0, 1, 0, 1));
        assert_eq!(big_genus(1, 1, 1).unwrap(), 1);
        assert_eq!(big_genus(0, 2, 1).unwrap(), 1);
        assert_eq!(big_genus(2, 3, 2).unwrap(), 3);
        assert_eq!(satellite_genus_bound(1, 0, 3), 3);
        assert_eq!(satellite_genus_bound(1, 1, 1), 2);
        assert_eq!(satellite_genus_bound(2, 1, 0), 1);
    }

    #[test]
    fn four_genus_bounds() {
        assert_eq!(top_four_genus_lower_bound(&trefoil()).unwrap(), 1);
        let fig8 = SeifertMatrix::from_rows(&[&[1, 1], &[0, -1]], 1).unwrap();
        assert_eq!(top_four_genus_lower_bound(&fig8).unwrap(), 0);
        let hopf = SeifertMatrix::from_rows(&[&[-1]], 2).unwrap();
        assert!(top_four_genus_lower_bound(&hopf).is_err());
    }

    #[test]
    fn satellites() {
        let t = signature_profile(&trefoil()).unwrap();
        let sum = signature_profile(&trefoil().block_sum(&trefoil())).unwrap();
        let unknot = signature_profile(&SeifertMatrix::new(vec![], 1).unwrap()).unwrap();
        assert_eq!(
            satellite_signature(&t, &t, 1, 2, 1).unwrap(),
            sum.sigma_at(1, 2).unwrap()
        );
        assert_eq!(satellite_signature(&t, &t, 1, 2, 1).unwrap(), -4);
        assert_eq!(satellite_signature(&t, &t, 0, 2, 1).unwrap(), -2);
        assert_eq!(satellite_signature(&t, &unknot, 2, 4, 1).unwrap(), -2);
        assert_eq!(satellite_signature(&t, &unknot, 1, 6, 1), Err(Error::JumpPoint));
    }
}
