//! The substitution `x = t + 1/t` for palindromic polynomials.

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::{palindromic_type, LaurentPoly, Palindromic};
use super::poly::ZPoly;
use crate::error::{Error, Result};

/// `V_k(x)` with `V_k(t + 1/t) = t^k + t^-k`, for `k = 0..=d`.
pub fn dickson_table(d: usize) -> Vec<ZPoly> {
    let x = ZPoly::from_i64(&[0, 1]);
    let mut v = vec![ZPoly::from_i64(&[2]), x.clone()];
    for k in 2..=d {
        let next = &(&x * &v[k - 1]) - &v[k - 2];
        v.push(next);
    }
    v.truncate(d + 1);
    v
}

/// For a `+`-palindromic `p` of degree `2d`, the `q` of degree `d` with
/// `p(t) = t^d q(t + 1/t)`.
pub fn chebyshev_reduce_poly(p: &ZPoly) -> Result<ZPoly> {
    if palindromic_type(p) != Palindromic::Plus || p.deg() % 2 == 1 {
        return Err(Error::Hypothesis(format!("{p} is not palindromic of even degree")));
    }
    let d = p.deg() / 2;
    let v = dickson_table(d);
    let mut q = ZPoly::constant(p.coeff(d));
    for k in 1..=d {
        let a = p.coeff(d + k);
        if !a.is_zero() {
            q = &q + &v[k].scale(&a);
        }
    }
    Ok(q)
}

/// Chebyshev reduction of the canonical form of `p`, after removing the
/// `(t - 1)` factors of a `-`-palindromic input and the `(t + 1)` factor of
/// an odd-degree `+`-palindromic one.
pub fn chebyshev_reduce(p: &LaurentPoly) -> Result<ZPoly> {
    let (n, kind) = p.normalize()?;
    let mut q = n.poly().clone();
    match kind {
        Palindromic::NotPalindromic => return Err(Error::Hypothesis(format!("{n} is not palindromic"))),
        Palindromic::Minus => {
            q = q.strip_factor(&ZPoly::from_i64(&[-1, 1])).0;
        }
        Palindromic::Plus => {}
    }
    if q.deg() % 2 == 1 {
        q = q
            .div_exact(&ZPoly::from_i64(&[1, 1]))
            .expect("odd-degree palindromic polynomials vanish at -1");
    }
    if palindromic_type(&q) == Palindromic::Minus && !q.is_constant() {
        q = q.strip_factor(&ZPoly::from_i64(&[-1, 1])).0;
    }
    if q.lc() < BigInt::zero() {
        q = -q;
    }
    chebyshev_reduce_poly(&q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        let f = |v: &[i64]| chebyshev_reduce(&LaurentPoly::from_i64(0, v)).unwrap();
        assert_eq!(f(&[1, -1, 1]), ZPoly::from_i64(&[-1, 1]));
        assert_eq!(f(&[2, -3, 2]), ZPoly::from_i64(&[-3, 2]));
        assert_eq!(f(&[1, -1, 1, -1, 1]), ZPoly::from_i64(&[-1, -1, 1]));
        // (t - 1)(t^2 - t + 1) is --palindromic
        assert_eq!(f(&[-1, 2, -2, 1]), ZPoly::from_i64(&[-1, 1]));
        assert!(chebyshev_reduce(&LaurentPoly::from_i64(0, &[1, 2])).is_err());
    }
}
