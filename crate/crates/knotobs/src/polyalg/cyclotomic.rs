//! Cyclotomic polynomials and trial-division factorization.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use super::laurent::LaurentPoly;
use super::poly::ZPoly;
use crate::error::Result;

fn cache() -> &'static RwLock<HashMap<usize, ZPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, ZPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(mut n: usize) -> usize {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// The `k`-th cyclotomic polynomial, by dividing `t^k - 1` by every
/// `Phi_d` with `d` a proper divisor of `k`.
pub fn cyclotomic(k: usize) -> ZPoly {
    assert!(k >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().unwrap().get(&k) {
        return p.clone();
    }
    let mut p = ZPoly::t_pow_minus_one(k);
    for d in divisors(k) {
        if d < k {
            p = p.div_exact(&cyclotomic(d)).expect("Phi_d divides t^k - 1 for d | k");
        }
    }
    cache().write().unwrap().insert(k, p.clone());
    p
}

pub fn cyclotomic_laurent(k: usize) -> LaurentPoly {
    LaurentPoly::from_poly(cyclotomic(k))
}

/// Exponents of cyclotomic factors together with the cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub exponents: BTreeMap<usize, usize>,
    pub remainder: ZPoly,
}

impl CyclotomicFactorization {
    pub fn product(&self) -> ZPoly {
        let mut p = self.remainder.clone();
        for (&k, &e) in &self.exponents {
            p = &p * &cyclotomic(k).pow(e);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.remainder.is_one()
    }

    pub fn factor_indices(&self) -> Vec<usize> {
        self.exponents.keys().copied().collect()
    }
}

/// Trial division of the canonical form of `p` by every `Phi_k` of small
/// enough degree.
pub fn cyclotomic_factorization(p: &LaurentPoly) -> Result<CyclotomicFactorization> {
    let p = p.normalized_poly()?;
    Ok(factor_zpoly(&p))
}

pub(crate) fn factor_zpoly(p: &ZPoly) -> CyclotomicFactorization {
    let mut rem = p.clone();
    let mut exponents = BTreeMap::new();
    let bound = 2 * rem.deg() * rem.deg() + 2;
    for k in 1..=bound {
        if rem.deg() == 0 {
            break;
        }
        if euler_phi(k) > rem.deg() {
            continue;
        }
        let (q, e) = rem.strip_factor(&cyclotomic(k));
        if e > 0 {
            exponents.insert(k, e);
            rem = q;
        }
    }
    CyclotomicFactorization {
        exponents,
        remainder: rem,
    }
}

/// True when the canonical form is a product of cyclotomic polynomials.
pub fn is_cyclotomic_product(p: &LaurentPoly) -> Result<bool> {
    Ok(cyclotomic_factorization(p)?.is_pure())
}
