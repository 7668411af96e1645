//! Arithmetic in cyclotomic fields `Q[t]/Phi_n(t)`.

use std::cmp::Ordering;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::algebraic::{AlgebraicCosineBoundary, RealAlgebraic};
use super::chebyshev::dickson_table;
use super::cyclotomic::cyclotomic;
use super::laurent::LaurentPoly;
use super::poly::ZPoly;
use super::qpoly::QPoly;
use super::sturm::count_distinct_roots_open;

/// The field `Q(tau)` with `tau = zeta_n^j` a primitive `n`-th root of
/// unity; the generator `t` stands for `tau`, so real elements are evaluated
/// at `tau + 1/tau = 2cos(2 pi j / n)`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    n: u64,
    modulus: QPoly,
    embedding: AlgebraicCosineBoundary,
}

/// Element of a cyclotomic field, reduced modulo `Phi_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycElem(pub QPoly);

impl CycElem {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl CyclotomicField {
    /// Field generated by `zeta_n^j`; `j/n` is reduced first.
    pub fn new(n: u64, j: u64) -> Self {
        assert!(n >= 1);
        let g = j.gcd(&n).max(1);
        let (j, n) = if j == 0 { (0, 1) } else { (j / g, n / g) };
        let modulus = QPoly::from(&cyclotomic(n as usize));
        CyclotomicField {
            n,
            modulus,
            embedding: AlgebraicCosineBoundary::new(j as i64, n),
        }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn zero(&self) -> CycElem {
        CycElem(QPoly::zero())
    }

    pub fn one(&self) -> CycElem {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> CycElem {
        CycElem(QPoly::constant(BigRational::from_integer(v.into())))
    }

    pub fn from_rational(&self, v: BigRational) -> CycElem {
        CycElem(QPoly::constant(v))
    }

    /// `tau^k` for any integer `k`.
    pub fn gen_pow(&self, k: i64) -> CycElem {
        let e = k.rem_euclid(self.n as i64) as usize;
        self.reduce(QPoly::from(&ZPoly::monomial(1.into(), e)))
    }

    pub fn reduce(&self, p: QPoly) -> CycElem {
        CycElem(p.rem(&self.modulus))
    }

    /// Image of a Laurent polynomial under `t -> tau`.
    pub fn eval_laurent(&self, p: &LaurentPoly) -> CycElem {
        let mut acc = QPoly::zero();
        for (e, c) in p.terms() {
            let k = e.rem_euclid(self.n as i64) as usize;
            acc = acc.add(&QPoly::from(&ZPoly::monomial(c, k)));
        }
        self.reduce(acc)
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.add(&b.0))
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.sub(&b.0))
    }

    pub fn neg(&self, a: &CycElem) -> CycElem {
        CycElem(a.0.neg())
    }

    pub fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        self.reduce(a.0.mul(&b.0))
    }

    pub fn inv(&self, a: &CycElem) -> Option<CycElem> {
        a.0.inverse_mod(&self.modulus).map(CycElem)
    }

    /// Complex conjugation `tau -> 1/tau`.
    pub fn conj(&self, a: &CycElem) -> CycElem {
        let mut acc = QPoly::zero();
        for (k, c) in a.0.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (self.n as usize - k % self.n as usize) % self.n as usize;
            let mut v = vec![BigRational::zero(); e + 1];
            v[e] = c.clone();
            acc = acc.add(&QPoly::new(v));
        }
        self.reduce(acc)
    }

    /// Field norm to `Q`: the determinant of multiplication by `a`.
    pub fn norm(&self, a: &CycElem) -> BigRational {
        let d = self.degree();
        let mut m: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        let mut col = a.clone();
        let t = self.gen_pow(1);
        for _ in 0..d {
            m.push((0..d).map(|i| col.0.coeff(i)).collect());
            col = self.mul(&col, &t);
        }
        crate::linalg::det_rational(m)
    }

    /// Sign of a real (self-conjugate) element under the fixed embedding.
    pub fn real_sign(&self, a: &CycElem) -> Ordering {
        if a.is_zero() {
            return Ordering::Equal;
        }
        debug_assert_eq!(self.conj(a), *a, "element is not real");
        // a = sum a_k tau^k = sum a_k (tau^k + tau^-k)/2 = sum a_k V_k(x)/2
        let d = a.0.deg();
        let v = dickson_table(d);
        let half = BigRational::new(1.into(), 2.into());
        let mut r = QPoly::zero();
        for (k, c) in a.0.coeffs().iter().enumerate() {
            if !c.is_zero() {
                r = r.add(&QPoly::from(&v[k]).scale(&(c * &half)));
            }
        }
        let psi = QPoly::from(&self.embedding.min_poly);
        let r = r.rem(&psi);
        assert!(!r.is_zero(), "nonzero field element has nonzero real part");
        // the primitive integer form has positive leading coefficient
        let flip = r.lc() < BigRational::zero();
        let s = sign_at_algebraic(&r.to_primitive_zpoly(), &self.embedding.value);
        if flip {
            s.reverse()
        } else {
            s
        }
    }
}

/// Sign of an integer polynomial at a real algebraic number where it does not vanish.
pub fn sign_at_algebraic(p: &ZPoly, x: &RealAlgebraic) -> Ordering {
    match x {
        RealAlgebraic::Rational(r) => p.sign_at(r),
        RealAlgebraic::Root { .. } => {
            let mut x = x.clone();
            loop {
                let (lo, hi) = x.bounds();
                if x.is_rational() {
                    return p.sign_at(&lo);
                }
                if count_distinct_roots_open(p, &lo, &hi) == 0 && p.sign_at(&hi) != Ordering::Equal {
                    return p.sign_at(&hi);
                }
                x.refine();
            }
        }
    }
}

/// Exact value `p(zeta_n^j)` in `Q(zeta_n')`, `n' = n / gcd(j, n)`.
pub fn eval_at_root_of_unity(p: &LaurentPoly, n: u64, j: u64) -> (CyclotomicField, CycElem) {
    let field = CyclotomicField::new(n, j);
    let v = field.eval_laurent(p);
    (field, v)
}

/// `prod_{j=1}^{n-1} |p(zeta_n^j)|` grouped by the order `d` of `zeta_n^j`:
/// each group is the absolute norm of `p mod Phi_d`.
pub fn product_of_norms(p: &LaurentPoly, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    for d in super::cyclotomic::divisors(n as usize) {
        if d == 1 {
            continue;
        }
        let f = CyclotomicField::new(d as u64, 1);
        let v = f.eval_laurent(p);
        let nm = f.norm(&v);
        acc *= if nm < BigRational::zero() { -nm } else { nm };
    }
    acc
}
