//! Resultants and products of values at roots of unity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::laurent::{coeff_json, LaurentPoly};
use super::poly::ZPoly;
use super::qpoly::QPoly;
use crate::error::Result;

/// `Res(a, b) = lc(a)^deg b * prod_{a(x)=0} b(x)`, by Euclid over the rationals.
pub fn resultant(a: &ZPoly, b: &ZPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let r = resultant_q(&QPoly::from(a), &QPoly::from(b));
    debug_assert!(r.is_integer());
    r.to_integer()
}

fn resultant_q(a: &QPoly, b: &QPoly) -> BigRational {
    let (m, n) = (a.deg(), b.deg());
    if n == 0 {
        return pow(&b.lc(), m);
    }
    if m == 0 {
        return pow(&a.lc(), n);
    }
    let r = a.rem(b);
    if r.is_zero() {
        return BigRational::zero();
    }
    let sign = if (m * n) % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    sign * pow(&b.lc(), m - r.deg()) * resultant_q(b, &r)
}

fn pow(x: &BigRational, k: usize) -> BigRational {
    num_traits::pow(x.clone(), k)
}

/// Order of a first homology group: a positive integer or infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HomologyOrder {
    Finite(BigInt),
    Infinite,
}

impl HomologyOrder {
    pub fn is_finite(&self) -> bool {
        matches!(self, HomologyOrder::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            HomologyOrder::Finite(v) => Some(v),
            HomologyOrder::Infinite => None,
        }
    }

    pub fn from_value(v: BigInt) -> Self {
        if v.is_zero() {
            HomologyOrder::Infinite
        } else {
            HomologyOrder::Finite(v.abs())
        }
    }
}

impl fmt::Display for HomologyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyOrder::Finite(v) => write!(f, "{v}"),
            HomologyOrder::Infinite => f.write_str("INFINITE"),
        }
    }
}

impl Serialize for HomologyOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomologyOrder::Finite(v) => coeff_json(v).serialize(s),
            HomologyOrder::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// `(t^n - 1)/(t - 1)`
pub fn cyclotomic_tower(n: usize) -> ZPoly {
    ZPoly::new(vec![BigInt::one(); n])
}

/// `prod_{j=1}^{n-1} |p(zeta_n^j)|` as `|Res((t^n - 1)/(t - 1), p)|`; the
/// first argument is monic so no leading-coefficient correction is needed.
pub fn resultant_with_cyclotomic_tower(p: &LaurentPoly, n: usize) -> Result<HomologyOrder> {
    assert!(n >= 2, "cover order must be at least 2");
    let f = p.normalized_poly()?;
    Ok(HomologyOrder::from_value(resultant(&cyclotomic_tower(n), &f)))
}
