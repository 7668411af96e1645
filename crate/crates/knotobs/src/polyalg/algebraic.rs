//! Real algebraic numbers given by isolating intervals, and the cosine
//! boundaries `2cos(2 pi j / n)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::chebyshev::chebyshev_reduce_poly;
use super::cyclotomic::cyclotomic;
use super::poly::ZPoly;
use super::sturm::{count_distinct_roots_open, isolate_roots, Isolated};

/// A real algebraic number.
#[derive(Clone, PartialEq, Eq)]
pub enum RealAlgebraic {
    Rational(BigRational),
    /// The unique root of the square-free `poly` in the open interval `(lo, hi)`.
    Root {
        poly: ZPoly,
        lo: BigRational,
        hi: BigRational,
    },
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

impl RealAlgebraic {
    pub fn from_isolated(i: Isolated) -> Self {
        match i {
            Isolated::Exact(r) => RealAlgebraic::Rational(r),
            Isolated::Interval { poly, lo, hi } => RealAlgebraic::Root { poly, lo, hi },
        }
    }

    pub fn integer(v: i64) -> Self {
        RealAlgebraic::Rational(BigRational::from(BigInt::from(v)))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, RealAlgebraic::Rational(_))
    }

    /// Current enclosing interval (degenerate for rationals).
    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            RealAlgebraic::Rational(r) => (r.clone(), r.clone()),
            RealAlgebraic::Root { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    pub fn width(&self) -> BigRational {
        let (a, b) = self.bounds();
        b - a
    }

    /// Halve the isolating interval.
    pub fn refine(&mut self) {
        let RealAlgebraic::Root { poly, lo, hi } = self else {
            return;
        };
        let m = (&*lo + &*hi) * half();
        match poly.sign_at(&m) {
            Ordering::Equal => *self = RealAlgebraic::Rational(m),
            s if s == poly.sign_at(lo) => *lo = m,
            _ => *hi = m,
        }
    }

    pub fn refine_below(&mut self, width: &BigRational) {
        while !self.is_rational() && &self.width() > width {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut c = self.clone();
        c.refine_below(&BigRational::new(BigInt::one(), BigInt::from(1u64 << 52)));
        let (a, b) = c.bounds();
        ((a + b) * half()).to_f64().unwrap_or(f64::NAN)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        match self {
            RealAlgebraic::Rational(q) => q.cmp(r),
            RealAlgebraic::Root { poly, .. } => {
                let mut me = self.clone();
                let root_here = poly.sign_at(r) == Ordering::Equal;
                loop {
                    let (lo, hi) = me.bounds();
                    if me.is_rational() {
                        return lo.cmp(r);
                    }
                    if r <= &lo {
                        return Ordering::Greater;
                    }
                    if r >= &hi {
                        return Ordering::Less;
                    }
                    if root_here {
                        return Ordering::Equal;
                    }
                    me.refine();
                }
            }
        }
    }

    /// Exact comparison; equality is decided through the gcd of the defining
    /// polynomials, so refinement always terminates.
    pub fn cmp_exact(&self, other: &RealAlgebraic) -> Ordering {
        match (self, other) {
            (_, RealAlgebraic::Rational(r)) => self.cmp_rational(r),
            (RealAlgebraic::Rational(r), _) => other.cmp_rational(r).reverse(),
            (RealAlgebraic::Root { poly: p, .. }, RealAlgebraic::Root { poly: q, .. }) => {
                let g = p.gcd(q);
                let mut a = self.clone();
                let mut b = other.clone();
                let mut checked_equal = false;
                loop {
                    let (alo, ahi) = a.bounds();
                    let (blo, bhi) = b.bounds();
                    if a.is_rational() || b.is_rational() {
                        return a.cmp_exact(&b);
                    }
                    if ahi <= blo {
                        return Ordering::Less;
                    }
                    if bhi <= alo {
                        return Ordering::Greater;
                    }
                    if !checked_equal {
                        checked_equal = true;
                        if g.deg() > 0 {
                            let lo = if alo > blo { alo } else { blo };
                            let hi = if ahi < bhi { ahi } else { bhi };
                            if count_distinct_roots_open(&g, &lo, &hi) > 0 {
                                return Ordering::Equal;
                            }
                        }
                    }
                    a.refine();
                    b.refine();
                }
            }
        }
    }
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealAlgebraic::Rational(r) => write!(f, "{r}"),
            RealAlgebraic::Root { poly, lo, hi } => {
                write!(f, "root of {} in ({lo}, {hi})", poly.fmt_var("x"))
            }
        }
    }
}

/// The point `x = 2cos(2 pi j / n)` on the Chebyshev axis, i.e. the image of
/// `zeta_n^j` under `t -> t + 1/t`.
#[derive(Clone, Debug)]
pub struct AlgebraicCosineBoundary {
    /// Reduced numerator, `0 <= j <= n/2`.
    pub j: u64,
    /// Reduced denominator.
    pub n: u64,
    /// Minimal polynomial of the value over the rationals.
    pub min_poly: ZPoly,
    pub value: RealAlgebraic,
}

impl AlgebraicCosineBoundary {
    pub fn new(j: i64, n: u64) -> Self {
        assert!(n >= 1);
        let jr = j.rem_euclid(n as i64) as u64;
        let g = jr.gcd(&n);
        let (mut j, n) = (jr / g, n / g);
        if 2 * j > n {
            j = n - j;
        }
        let (min_poly, value) = match n {
            1 => (ZPoly::from_i64(&[-2, 1]), RealAlgebraic::integer(2)),
            2 => (ZPoly::from_i64(&[2, 1]), RealAlgebraic::integer(-2)),
            3 => (ZPoly::from_i64(&[1, 1]), RealAlgebraic::integer(-1)),
            4 => (ZPoly::from_i64(&[0, 1]), RealAlgebraic::integer(0)),
            6 => (ZPoly::from_i64(&[-1, 1]), RealAlgebraic::integer(1)),
            _ => {
                let psi = chebyshev_reduce_poly(&cyclotomic(n as usize))
                    .expect("cyclotomic polynomials of index >= 3 are palindromic of even degree")
                    .primitive();
                // roots 2cos(2 pi k / n), gcd(k, n) = 1, k < n/2, decrease with k
                let above = (1..j).filter(|k| k.gcd(&n) == 1).count();
                let two = BigRational::from(BigInt::from(2));
                let roots = isolate_roots(&psi, &-two.clone(), &two);
                let idx = roots.len() - 1 - above;
                let value = RealAlgebraic::from_isolated(roots[idx].clone());
                (psi, value)
            }
        };
        AlgebraicCosineBoundary { j, n, min_poly, value }
    }

    /// Boundary of the arc `I_+(zeta_n)`: the value `2cos(2 pi / n)`.
    pub fn for_order(n: u64) -> Self {
        Self::new(1, n)
    }

    /// Angle as a fraction of a full turn.
    pub fn turn_fraction(&self) -> (u64, u64) {
        (self.j, self.n)
    }

    pub fn angle(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.j as f64 / self.n as f64
    }

    pub fn is_zero_of(&self, p: &ZPoly) -> bool {
        match &self.value {
            RealAlgebraic::Rational(r) => p.sign_at(r) == Ordering::Equal,
            RealAlgebraic::Root { .. } => {
                !p.is_zero() && {
                    let r = p.primitive();
                    let rem = super::qpoly::QPoly::from(&r).rem(&super::qpoly::QPoly::from(&self.min_poly));
                    rem.is_zero()
                }
            }
        }
    }
}

impl PartialEq for AlgebraicCosineBoundary {
    fn eq(&self, other: &Self) -> bool {
        self.j == other.j && self.n == other.n
    }
}
