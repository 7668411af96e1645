//! Unit-circle roots of integer polynomials and exact sample points on the circle.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::algebraic::{AlgebraicCosineBoundary, RealAlgebraic};
use super::chebyshev::chebyshev_reduce_poly;
use super::laurent::LaurentPoly;
use super::poly::ZPoly;
use super::sturm::{isolate_roots, square_free_decomposition};
use crate::error::Result;

/// Point `(c, s)` on the unit circle with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalCirclePoint {
    #[serde(with = "rational_string")]
    pub c: BigRational,
    #[serde(with = "rational_string")]
    pub s: BigRational,
}

impl RationalCirclePoint {
    /// `((1 - u^2)/(1 + u^2), 2u/(1 + u^2))`
    pub fn from_u(u: &BigRational) -> Self {
        let u2 = u * u;
        let d = BigRational::one() + &u2;
        RationalCirclePoint {
            c: (BigRational::one() - &u2) / &d,
            s: (u * BigRational::from_integer(2.into())) / d,
        }
    }

    pub fn minus_one() -> Self {
        RationalCirclePoint {
            c: -BigRational::one(),
            s: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        RationalCirclePoint {
            c: BigRational::one(),
            s: BigRational::zero(),
        }
    }

    pub fn is_on_circle(&self) -> bool {
        &self.c * &self.c + &self.s * &self.s == BigRational::one()
    }

    pub fn is_one(&self) -> bool {
        self.c.is_one() && self.s.is_zero()
    }

    pub fn is_minus_one(&self) -> bool {
        self.c == -BigRational::one() && self.s.is_zero()
    }

    /// Parameter `u = s / (1 + c)`, undefined at `-1`.
    pub fn u(&self) -> Option<BigRational> {
        if self.is_minus_one() {
            None
        } else {
            Some(&self.s / (BigRational::one() + &self.c))
        }
    }

    /// `x = t + 1/t = 2c`
    pub fn x(&self) -> BigRational {
        &self.c * BigRational::from_integer(2.into())
    }

    pub fn angle(&self) -> f64 {
        let c = self.c.to_f64().unwrap_or(0.0);
        let s = self.s.to_f64().unwrap_or(0.0);
        s.atan2(c)
    }
}

pub(crate) mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One conjugate pair `e^{+-i theta}` of roots, located by `x = 2cos(theta)`.
#[derive(Clone, Debug)]
pub struct CircleRoot {
    pub x: RealAlgebraic,
    pub multiplicity: usize,
}

impl CircleRoot {
    pub fn angle(&self) -> f64 {
        (self.x.to_f64() / 2.0).clamp(-1.0, 1.0).acos()
    }
}

/// Unit-circle roots of a polynomial, sorted by increasing angle in `(0, pi)`.
#[derive(Clone, Debug)]
pub struct CircleRootProfile {
    pub circle_roots: Vec<CircleRoot>,
    pub root_at_one: usize,
    pub root_at_minus_one: usize,
    pub off_circle_count: usize,
    /// Degree of the canonical form.
    pub degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArcCount {
    pub inside: usize,
    pub on_boundary: usize,
    pub outside: usize,
}

impl ArcCount {
    pub fn total(&self) -> usize {
        self.inside + self.on_boundary + self.outside
    }
}

fn t_minus_one() -> ZPoly {
    ZPoly::from_i64(&[-1, 1])
}

fn t_plus_one() -> ZPoly {
    ZPoly::from_i64(&[1, 1])
}

/// Locate every unit-circle root of `p`.
///
/// Circle roots of `p` are exactly the circle roots of `gcd(p, p*)` with
/// the same multiplicities; after removing `t = +-1` that gcd is palindromic
/// of even degree and its Chebyshev reduction has the circle roots as real
/// roots in `(-2, 2)`.
pub fn isolate_circle_roots(p: &LaurentPoly) -> Result<CircleRootProfile> {
    let f = p.normalized_poly()?;
    let degree = f.deg();
    let h = f.gcd(&f.reciprocal());
    let (h, root_at_one) = h.strip_factor(&t_minus_one());
    let (h, root_at_minus_one) = h.strip_factor(&t_plus_one());
    let mut circle_roots = Vec::new();
    if h.deg() > 0 {
        let q = chebyshev_reduce_poly(&h.primitive())
            .expect("self-reciprocal part without roots at +-1 is palindromic of even degree");
        let two = BigRational::from_integer(2.into());
        for (g, mult) in square_free_decomposition(&q) {
            for r in isolate_roots(&g, &-two.clone(), &two) {
                circle_roots.push(CircleRoot {
                    x: RealAlgebraic::from_isolated(r),
                    multiplicity: mult,
                });
            }
        }
    }
    circle_roots.sort_by(|a, b| b.x.cmp_exact(&a.x));
    let on = 2 * circle_roots.iter().map(|r| r.multiplicity).sum::<usize>();
    let off_circle_count = degree - on - root_at_one - root_at_minus_one;
    Ok(CircleRootProfile {
        circle_roots,
        root_at_one,
        root_at_minus_one,
        off_circle_count,
        degree,
    })
}

impl CircleRootProfile {
    /// Total multiplicity of roots on the circle.
    pub fn circle_total(&self) -> usize {
        self.root_at_one + self.root_at_minus_one + self.pair_total()
    }

    pub fn pair_total(&self) -> usize {
        2 * self.circle_roots.iter().map(|r| r.multiplicity).sum::<usize>()
    }

    /// Classify circle roots against the open arc `I_+(zeta_n)`, i.e. `x > 2cos(2 pi / n)`.
    pub fn count_roots_in_plus_arc(&self, n: u64) -> ArcCount {
        assert!(n >= 2, "arc order must be at least 2");
        let c = AlgebraicCosineBoundary::for_order(n).value;
        let mut out = ArcCount {
            inside: self.root_at_one,
            on_boundary: 0,
            outside: 0,
        };
        if n == 2 {
            out.on_boundary += self.root_at_minus_one;
        } else {
            out.outside += self.root_at_minus_one;
        }
        for r in &self.circle_roots {
            let m = 2 * r.multiplicity;
            match r.x.cmp_exact(&c) {
                Ordering::Greater => out.inside += m,
                Ordering::Equal => out.on_boundary += m,
                Ordering::Less => out.outside += m,
            }
        }
        out
    }

    /// Split values on the `x` axis: circle roots plus extra boundaries,
    /// deduplicated and sorted decreasingly; `+-2` are dropped.
    pub fn breakpoints(&self, extra: &[AlgebraicCosineBoundary]) -> Vec<RealAlgebraic> {
        let mut pts: Vec<RealAlgebraic> = self.circle_roots.iter().map(|r| r.x.clone()).collect();
        for b in extra {
            if b.n > 2 {
                pts.push(b.value.clone());
            }
        }
        pts.sort_by(|a, b| b.cmp_exact(a));
        pts.dedup_by(|a, b| a.cmp_exact(b) == Ordering::Equal);
        pts
    }

    /// One rational point strictly inside each arc of the upper half circle
    /// cut out by the circle roots and the extra angles, in angle order.
    pub fn sample_points_between_roots(&self, extra: &[AlgebraicCosineBoundary]) -> Vec<RationalCirclePoint> {
        self.arc_samples(extra, 1).into_iter().flatten().collect()
    }

    /// `per_arc` distinct points inside each arc.
    pub fn arc_samples(&self, extra: &[AlgebraicCosineBoundary], per_arc: usize) -> Vec<Vec<RationalCirclePoint>> {
        let pts = self.breakpoints(extra);
        let mut out = Vec::with_capacity(pts.len() + 1);
        let two = RealAlgebraic::integer(2);
        let minus_two = RealAlgebraic::integer(-2);
        for k in 0..=pts.len() {
            let upper = if k == 0 { &two } else { &pts[k - 1] };
            let lower = if k == pts.len() { &minus_two } else { &pts[k] };
            out.push(points_between(lower, upper, per_arc));
        }
        out
    }
}

/// `count` circle points with `x` strictly between `lower < upper`.
pub fn points_between(lower: &RealAlgebraic, upper: &RealAlgebraic, count: usize) -> Vec<RationalCirclePoint> {
    let (l, u) = separate(lower, upper);
    let w = (&u - &l) / BigRational::from_integer(BigInt::from(count.max(1) as u64));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    (0..count)
        .map(|i| {
            let a = &l + &w * BigRational::from_integer(BigInt::from(i as u64));
            let b = &a + &w;
            point_with_cos_in(&(&a * &half), &(&b * &half))
        })
        .collect()
}

/// Rationals `l < u` with `lower <= l` and `u <= upper`, where the
/// inequalities are strict unless the endpoint is irrational.
fn separate(lower: &RealAlgebraic, upper: &RealAlgebraic) -> (BigRational, BigRational) {
    debug_assert_eq!(lower.cmp_exact(upper), Ordering::Less);
    let mut a = lower.clone();
    let mut b = upper.clone();
    loop {
        let l = a.bounds().1;
        let u = b.bounds().0;
        if l < u {
            return (l, u);
        }
        a.refine();
        b.refine();
    }
}

/// A circle point whose cosine lies in the open interval `(lo, hi)`, with a
/// parameter `u` of small height.
pub fn point_with_cos_in(lo: &BigRational, hi: &BigRational) -> RationalCirclePoint {
    let cos_of = |u: &BigRational| RationalCirclePoint::from_u(u).c;
    let ok = |u: &BigRational| {
        let c = cos_of(u);
        &c > lo && &c < hi
    };
    // c(u) is decreasing on u > 0, so the u-window is (u(hi), u(lo))
    let uf = |c: f64| ((1.0 - c) / (1.0 + c)).max(0.0).sqrt();
    let (lf, hf) = (lo.to_f64().unwrap_or(-1.0), hi.to_f64().unwrap_or(1.0));
    let ua = uf(hf.min(1.0));
    let ub = if lf <= -1.0 { f64::INFINITY } else { uf(lf) };
    let guess = if ub.is_finite() {
        let pad = (ub - ua) * 1e-6;
        match (BigRational::from_f64(ua + pad), BigRational::from_f64(ub - pad)) {
            (Some(a), Some(b)) if a < b && a.is_positive() => Some(simplest_between(&a, &b)),
            _ => None,
        }
    } else {
        Some(BigRational::from_integer(BigInt::from(ua.floor() as i64 + 1)))
    };
    if let Some(u) = guess.filter(|u| ok(u)) {
        return RationalCirclePoint::from_u(&u);
    }
    // exact bisection fallback
    let mut ulo = BigRational::zero();
    let mut uhi = BigRational::one();
    while &cos_of(&uhi) >= hi {
        ulo = uhi.clone();
        uhi *= BigRational::from_integer(2.into());
    }
    loop {
        if ok(&uhi) {
            return RationalCirclePoint::from_u(&uhi);
        }
        let m = (&ulo + &uhi) / BigRational::from_integer(2.into());
        let c = cos_of(&m);
        if &c >= hi {
            ulo = m;
        } else if &c <= lo {
            uhi = m;
        } else {
            return RationalCirclePoint::from_u(&m);
        }
    }
}

/// Rational of least denominator in the closed interval `[lo, hi]`, `0 <= lo < hi`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + BigRational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

impl Serialize for CircleRootProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Root {
            x_interval: [String; 2],
            angle: f64,
            multiplicity: usize,
        }
        #[derive(Serialize)]
        struct View {
            circle_roots: Vec<Root>,
            root_at_one: usize,
            root_at_minus_one: usize,
            off_circle_count: usize,
            degree: usize,
        }
        let roots = self
            .circle_roots
            .iter()
            .map(|r| {
                let (a, b) = r.x.bounds();
                Root {
                    x_interval: [a.to_string(), b.to_string()],
                    angle: round_angle(r.angle()),
                    multiplicity: r.multiplicity,
                }
            })
            .collect();
        View {
            circle_roots: roots,
            root_at_one: self.root_at_one,
            root_at_minus_one: self.root_at_minus_one,
            off_circle_count: self.off_circle_count,
            degree: self.degree,
        }
        .serialize(s)
    }
}

/// Angles in reports are informational; rounding keeps output stable.
pub(crate) fn round_angle(a: f64) -> f64 {
    (a * 1e9).round() / 1e9
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(0, v)
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let p = isolate_circle_roots(&lp(&[1, -1, 1])).unwrap();
        assert_eq!(p.circle_roots.len(), 1);
        assert_eq!(p.circle_roots[0].x.cmp_rational(&BigRational::one()), Ordering::Equal);
        assert_eq!(p.off_circle_count, 0);

        let p = isolate_circle_roots(&lp(&[1, -3, 1])).unwrap();
        assert!(p.circle_roots.is_empty());
        assert_eq!(p.off_circle_count, 2);

        let q = &ZPoly::from_i64(&[-1, 1]).pow(2) * &ZPoly::from_i64(&[1, -1, 1]);
        let p = isolate_circle_roots(&LaurentPoly::from_poly(q)).unwrap();
        assert_eq!(p.root_at_one, 2);
        assert_eq!(p.circle_roots.len(), 1);
    }

    #[test]
    fn arc_counts() {
        let tre = isolate_circle_roots(&lp(&[1, -1, 1])).unwrap();
        assert_eq!(
            tre.count_roots_in_plus_arc(5),
            ArcCount {
                inside: 2,
                on_boundary: 0,
                outside: 0
            }
        );
        assert_eq!(
            tre.count_roots_in_plus_arc(6),
            ArcCount {
                inside: 0,
                on_boundary: 2,
                outside: 0
            }
        );
        let p10 = isolate_circle_roots(&lp(&[1, -1, 1, -1, 1])).unwrap();
        assert_eq!(
            p10.count_roots_in_plus_arc(4),
            ArcCount {
                inside: 2,
                on_boundary: 0,
                outside: 2
            }
        );
    }

    #[test]
    fn samples_separate_roots() {
        let tre = isolate_circle_roots(&lp(&[1, -1, 1])).unwrap();
        let pts = tre.sample_points_between_roots(&[]);
        assert_eq!(pts.len(), 2);
        assert!(pts[0].angle() < std::f64::consts::PI / 3.0);
        assert!(pts[1].angle() > std::f64::consts::PI / 3.0);
        assert!(pts.iter().all(|p| p.is_on_circle() && p.s.is_positive()));

        let none = isolate_circle_roots(&lp(&[1])).unwrap();
        assert_eq!(none.sample_points_between_roots(&[]).len(), 1);

        let p10 = isolate_circle_roots(&lp(&[1, -1, 1, -1, 1])).unwrap();
        let pts = p10.sample_points_between_roots(&[]);
        assert_eq!(pts.len(), 3);
        let pi = std::f64::consts::PI;
        assert!(pts[0].angle() < pi / 5.0 && pts[1].angle() > pi / 5.0);
        assert!(pts[1].angle() < 3.0 * pi / 5.0 && pts[2].angle() > 3.0 * pi / 5.0);
    }

    #[test]
    fn simplest_rational() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(simplest_between(&r(3, 10), &r(4, 10)), r(1, 3));
        assert_eq!(simplest_between(&r(3, 2), &r(5, 2)), r(2, 1));
    }
}
