//! Two-bridge knots `K(p/q)`: even continued fractions, the Minkus formula,
//! the genus-one family and the knots `K(k, m) = K((2m(2k-1)+1)/(2k-1))`.

use num_bigint::BigInt;
use num_integer::{gcd, Integer};
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::obstruct::{n3, CoverBound};
use crate::polyalg::sturm::count_distinct_roots_open;
use crate::polyalg::{chebyshev_reduce, LaurentPoly};
use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Genus1TwoBridge {
    pub k: i64,
    pub l: i64,
    pub p: i64,
    pub q: i64,
    pub alexander: LaurentPoly,
    pub abs_sigma: i64,
    pub is_sqp: bool,
    /// Every cyclic branched cover is an L-space.
    pub lspace_for_all_n: bool,
    /// Largest `n` not excluded by the root location of `Delta`, for `l > 0`.
    pub n_bound: Option<u64>,
}

/// `kl t^2 + (1 - 2kl) t + kl`, unnormalized.
fn genus1_poly(a: i64) -> LaurentPoly {
    LaurentPoly::from_i64(0, &[a, 1 - 2 * a, a])
}

/// Largest `n` with `2 cos(2 pi / n) < 2 - 1/a`, the cover bound of a genus
/// one knot whose Alexander polynomial is `a t^2 + (1 - 2a) t + a`.
pub fn genus1_n_bound(a: i64) -> Result<u64> {
    if a <= 0 {
        return Err(Error::NoCircleRoots(format!(
            "a = {a}: the signature function vanishes identically"
        )));
    }
    match n3(&genus1_poly(a))? {
        CoverBound::Finite(n) => Ok(n),
        other => unreachable!("genus one bound with a >= 1 is finite, got {other}"),
    }
}

/// The knot with continued fraction `[2k, -2l]`.
pub fn genus1_two_bridge(k: i64, l: i64) -> Result<Genus1TwoBridge> {
    if k < 1 || l == 0 {
        return Err(Error::params("need k >= 1 and l != 0"));
    }
    let (p, q) = continued_fraction_value(&[2 * k, -2 * l]);
    let a = k * l;
    Ok(Genus1TwoBridge {
        k,
        l,
        p,
        q,
        alexander: genus1_poly(a),
        abs_sigma: if l > 0 { 2 } else { 0 },
        is_sqp: l > 0,
        lspace_for_all_n: l < 0,
        n_bound: if l > 0 { Some(genus1_n_bound(a)?) } else { None },
    })
}

/// A genus one Seifert matrix for `[2k, -2l]`, with the sign convention that
/// makes the positive trefoil `(1, 1)` have signature `-2`.
pub fn genus1_two_bridge_seifert(k: i64, l: i64) -> Result<SeifertMatrix> {
    if k < 1 || l == 0 {
        return Err(Error::params("need k >= 1 and l != 0"));
    }
    Ok(SeifertMatrix::from_rows(&[&[k, 1], &[0, l]], 1)?.mirror())
}

/// Seifert matrix of `K(p/q)` from the plumbing of twisted bands read off the
/// even continued fraction, in the sign convention of [`genus1_two_bridge_seifert`].
/// An odd `q` is handled through the mirror image `K(p/(p - q))`.
pub fn two_bridge_seifert_matrix(p: i64, q: i64) -> Result<SeifertMatrix> {
    if q.is_odd() && 0 < q && q < p {
        return Ok(two_bridge_seifert_matrix(p, p - q)?.mirror());
    }
    let cf = even_continued_fraction(p, q)?;
    let k = cf.len();
    let mut v = vec![vec![0i64; k]; k];
    for i in 0..k {
        v[i][i] = if i % 2 == 0 { cf[i] / 2 } else { -cf[i] / 2 };
        if i + 1 < k {
            v[i][i + 1] = 1;
        }
    }
    let rows: Vec<&[i64]> = v.iter().map(|r| r.as_slice()).collect();
    Ok(SeifertMatrix::from_rows(&rows, 1)?.mirror())
}

/// `a1 + 1/(a2 + 1/(... + 1/an))` as a reduced fraction with positive denominator.
pub fn continued_fraction_value(terms: &[i64]) -> (i64, i64) {
    let mut num = BigInt::from(*terms.last().expect("nonempty continued fraction"));
    let mut den = BigInt::from(1);
    for &a in terms.iter().rev().skip(1) {
        let next = BigInt::from(a) * &num + &den;
        den = num;
        num = next;
    }
    let r = BigRational::new(num, den);
    let n: i64 = r.numer().try_into().expect("fits in i64");
    let d: i64 = r.denom().try_into().expect("fits in i64");
    (n, d)
}

/// The expansion of `p/q` in the form `a1 + 1/(a2 + 1/(...))` with every
/// `a_i` even. Its length is twice the genus of `K(p/q)`.
pub fn even_continued_fraction(p: i64, q: i64) -> Result<Vec<i64>> {
    if p.is_even() || q.is_odd() || !(1 < q && q < p) || gcd(p, q) != 1 {
        return Err(Error::params(format!(
            "{p}/{q}: need p odd, q even, 1 < q < p and gcd 1"
        )));
    }
    // x = num/den; each step takes the nearest even integer and inverts the remainder
    let (mut num, mut den) = (p as i128, q as i128);
    let mut out = Vec::new();
    loop {
        let a = 2 * (num as f64 / (2 * den) as f64).round() as i128;
        let a = [a - 2, a, a + 2]
            .into_iter()
            .min_by_key(|c| (num - c * den).abs())
            .expect("nonempty");
        out.push(a as i64);
        let rem = num - a * den;
        if rem == 0 {
            break;
        }
        (num, den) = (den, rem);
        if den < 0 {
            (num, den) = (-num, -den);
        }
    }
    Ok(out)
}

/// `sum_{j=0}^{p-1} (-t)^{s_j}` with `s_j = sum_{i<=j} (-1)^{floor(iq/p)}`.
/// An even `q` is first replaced by `p - q`, which gives the mirror image.
pub fn minkus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    if p.is_even() || !(0 < q && q < p) || gcd(p, q) != 1 {
        return Err(Error::params(format!("{p}/{q}: need p odd, 0 < q < p and gcd 1")));
    }
    let q = if q.is_even() { p - q } else { q };
    let mut s = 0i64;
    let mut terms = vec![(0i64, BigInt::from(1))];
    for i in 1..p {
        s += if ((i * q) / p).is_even() { 1 } else { -1 };
        let sign = if s.rem_euclid(2) == 0 { 1 } else { -1 };
        terms.push((s, BigInt::from(sign)));
    }
    Ok(LaurentPoly::from_terms(terms).normalize()?.0)
}

/// `k - (2k-1) t + (2k-1) t^2 - ... - (2k-1) t^{2m-1} + k t^{2m}`.
pub fn kkm_alexander(k: i64, m: i64) -> Result<LaurentPoly> {
    if k < 1 || m < 1 {
        return Err(Error::params("need k, m >= 1"));
    }
    let c = 2 * k - 1;
    let coeffs: Vec<i64> = (0..=2 * m)
        .map(|i| match i {
            0 => k,
            i if i == 2 * m => k,
            i if i % 2 == 1 => -c,
            _ => c,
        })
        .collect();
    Ok(LaurentPoly::from_i64(0, &coeffs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootLocation {
    /// Distinct roots `exp(i theta)` with `2 pi / 3 < theta < pi`.
    pub roots_in_two_thirds_pi_to_pi: usize,
    /// Distinct roots with `pi / 2 < theta < pi`.
    pub roots_in_half_pi_to_pi: usize,
}

impl RootLocation {
    pub fn has_root_in_two_thirds_pi_to_pi(&self) -> bool {
        self.roots_in_two_thirds_pi_to_pi > 0
    }

    pub fn has_root_in_half_pi_to_pi(&self) -> bool {
        self.roots_in_half_pi_to_pi > 0
    }
}

/// Sturm counts of the Chebyshev reduction of `Delta_{K(k,m)}` on
/// `(-2, -1)` and `(-2, 0)`, the images of the two arcs under `x = 2 cos theta`.
pub fn kkm_root_location(k: i64, m: i64) -> Result<RootLocation> {
    let f = chebyshev_reduce(&kkm_alexander(k, m)?)?;
    let r = |a: i64, b: i64| {
        count_distinct_roots_open(
            &f,
            &BigRational::from_integer(a.into()),
            &BigRational::from_integer(b.into()),
        )
    };
    Ok(RootLocation {
        roots_in_two_thirds_pi_to_pi: r(-2, -1),
        roots_in_half_pi_to_pi: r(-2, 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(0, c)
    }

    #[test]
    fn genus_one() {
        let t = genus1_two_bridge(1, 1).unwrap();
        assert_eq!((t.p, t.q), (3, 2));
        assert_eq!(t.alexander.normalize().unwrap().0, lp(&[1, -1, 1]));
        assert!(t.is_sqp);
        assert_eq!(t.n_bound, Some(5));
        let t = genus1_two_bridge(2, 1).unwrap();
        assert_eq!((t.p, t.q), (7, 2));
        assert_eq!(t.n_bound, Some(8));
        let t = genus1_two_bridge(1, -1).unwrap();
        assert_eq!((t.p, t.q), (5, 2));
        assert_eq!(t.alexander.normalize().unwrap().0, lp(&[1, -3, 1]));
        assert!(!t.is_sqp && t.lspace_for_all_n);
        assert_eq!(t.n_bound, None);
        assert!(genus1_two_bridge(0, 1).is_err());
    }

    #[test]
    fn genus_one_bounds() {
        assert_eq!(genus1_n_bound(1).unwrap(), 5);
        assert_eq!(genus1_n_bound(2).unwrap(), 8);
        assert_eq!(genus1_n_bound(7).unwrap(), 16);
        assert!(matches!(genus1_n_bound(0), Err(Error::NoCircleRoots(_))));
        for a in 1..=30 {
            let theta = (1.0 - 0.5 / a as f64).acos();
            let float = (2.0 * std::f64::consts::PI / theta).ceil() as u64 - 1;
            assert_eq!(genus1_n_bound(a).unwrap(), float, "a = {a}");
        }
    }

    #[test]
    fn genus_one_seifert_matches() {
        for (k, l) in [(1, 1), (2, 1), (1, -1), (3, -2)] {
            let s = genus1_two_bridge_seifert(k, l).unwrap();
            let g = genus1_two_bridge(k, l).unwrap();
            assert_eq!(s.alexander(), g.alexander.normalize().unwrap().0);
            let sigma = crate::seifert::murasugi_signature(&s);
            assert_eq!(sigma.abs(), g.abs_sigma);
        }
        let t = genus1_two_bridge_seifert(1, 1).unwrap();
        assert_eq!(crate::seifert::murasugi_signature(&t), -2);
    }

    #[test]
    fn even_fractions() {
        assert_eq!(even_continued_fraction(7, 2).unwrap(), vec![4, -2]);
        assert_eq!(even_continued_fraction(3, 2).unwrap(), vec![2, -2]);
        let cf = even_continued_fraction(13, 4).unwrap();
        assert_eq!(cf.len(), 4);
        assert_eq!(continued_fraction_value(&cf), (13, 4));
        for p in (3..60).step_by(2) {
            for q in (2..p).step_by(2) {
                if gcd(p, q) != 1 {
                    continue;
                }
                let cf = even_continued_fraction(p, q).unwrap();
                assert!(cf.iter().all(|a| a % 2 == 0));
                assert_eq!(cf.len() % 2, 0);
                assert_eq!(continued_fraction_value(&cf), (p, q));
                let genus = minkus_alexander(p, q).unwrap().span() / 2;
                assert_eq!(cf.len() / 2, genus, "{p}/{q}");
            }
        }
        assert!(even_continued_fraction(7, 3).is_err());
        assert!(even_continued_fraction(9, 6).is_err());
    }

    #[test]
    fn minkus() {
        assert_eq!(minkus_alexander(3, 1).unwrap(), lp(&[1, -1, 1]));
        assert_eq!(minkus_alexander(7, 3).unwrap(), lp(&[2, -3, 2]));
        assert_eq!(minkus_alexander(7, 2).unwrap(), lp(&[2, -3, 2]));
        let fig8 = SeifertMatrix::from_rows(&[&[1, 1], &[0, -1]], 1).unwrap();
        assert_eq!(minkus_alexander(5, 3).unwrap(), fig8.alexander());
        assert!(minkus_alexander(6, 1).is_err());
        assert!(minkus_alexander(9, 3).is_err());
    }

    #[test]
    fn two_bridge_matrices() {
        for p in (3i64..45).step_by(2) {
            for q in 1..p {
                if gcd(p, q) != 1 {
                    continue;
                }
                let s = two_bridge_seifert_matrix(p, q).unwrap();
                assert_eq!(s.alexander(), minkus_alexander(p, q).unwrap(), "{p}/{q}");
                // signature of K(p/q), q odd, is the sum of (-1)^floor(iq/p) up to sign
                let qo = if q.is_odd() { q } else { p - q };
                let sum: i64 = (1..p).map(|i| if ((i * qo) / p).is_even() { 1 } else { -1 }).sum();
                assert_eq!(crate::seifert::murasugi_signature(&s).abs(), sum.abs(), "{p}/{q}");
            }
        }
        let s = two_bridge_seifert_matrix(7, 2).unwrap();
        assert_eq!(s, genus1_two_bridge_seifert(2, 1).unwrap());
    }

    #[test]
    fn kkm() {
        assert_eq!(kkm_alexander(1, 1).unwrap(), lp(&[1, -1, 1]));
        assert_eq!(kkm_alexander(2, 1).unwrap(), lp(&[2, -3, 2]));
        assert_eq!(kkm_alexander(2, 2).unwrap(), lp(&[2, -3, 3, -3, 2]));
        for k in 1..=4 {
            for m in 1..=4 {
                let p = 2 * m * (2 * k - 1) + 1;
                assert_eq!(kkm_alexander(k, m).unwrap(), minkus_alexander(p, 2 * k - 1).unwrap());
            }
        }
    }

    #[test]
    fn kkm_roots() {
        assert!(kkm_root_location(1, 3).unwrap().has_root_in_two_thirds_pi_to_pi());
        let r = kkm_root_location(2, 2).unwrap();
        assert!(r.has_root_in_half_pi_to_pi() && !r.has_root_in_two_thirds_pi_to_pi());
        let r = kkm_root_location(1, 1).unwrap();
        assert!(!r.has_root_in_half_pi_to_pi() && !r.has_root_in_two_thirds_pi_to_pi());
    }
}
