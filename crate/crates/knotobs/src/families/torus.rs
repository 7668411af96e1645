//! Torus knots.

use num_integer::gcd;

use crate::error::{Error, Result};
use crate::polyalg::{LaurentPoly, ZPoly};

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized.
pub fn torus_alexander(p: u64, q: u64) -> Result<LaurentPoly> {
    if p < 2 || q < 2 {
        return Err(Error::params("torus knot parameters must be at least 2"));
    }
    if gcd(p, q) != 1 {
        return Err(Error::params(format!("T({p},{q}) is not a knot: gcd is {}", gcd(p, q))));
    }
    let num = &ZPoly::t_pow_minus_one((p * q) as usize) * &ZPoly::t_pow_minus_one(1);
    let den = &ZPoly::t_pow_minus_one(p as usize) * &ZPoly::t_pow_minus_one(q as usize);
    let d = num.div_exact(&den).expect("cyclotomic quotient is exact");
    Ok(LaurentPoly::from_poly(d).normalize()?.0)
}
