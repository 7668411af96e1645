//! Square-free decomposition, Sturm sequences and real-root isolation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::ZPoly;
use super::qpoly::QPoly;

/// Yun decomposition: `(factor, multiplicity)` pairs of primitive
/// square-free, pairwise coprime factors of positive degree.
pub fn square_free_decomposition(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let a = QPoly::from(&f.primitive());
    let b = derivative_q(&a);
    let c = a.gcd(&b);
    let mut w = a.div_rem(&c).0;
    let mut y = b.div_rem(&c).0;
    let mut i = 1;
    while w.deg() > 0 {
        let z = y.sub(&derivative_q(&w));
        let g = w.gcd(&z);
        if g.deg() > 0 {
            out.push((g.to_primitive_zpoly(), i));
        }
        w = w.div_rem(&g).0;
        y = z.div_rem(&g).0;
        i += 1;
    }
    out
}

fn derivative_q(p: &QPoly) -> QPoly {
    QPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect(),
    )
}

/// Sturm sequence built from sign-corrected primitive pseudo-remainders.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<ZPoly>,
}

impl SturmSequence {
    pub fn new(f: &ZPoly) -> Self {
        let mut seq = vec![f.primitive()];
        let d = f.derivative().primitive();
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let a = &seq[seq.len() - 2];
            let b = &seq[seq.len() - 1];
            if b.deg() == 0 {
                break;
            }
            let mut r = a.pseudo_rem(b);
            let delta = a.deg() - b.deg();
            if b.lc().is_negative() && delta % 2 == 0 {
                r = -r;
            }
            if r.is_zero() {
                break;
            }
            let g = r.content();
            let r = ZPoly::new(r.coeffs().iter().map(|c| c / &g).collect());
            seq.push(-r);
        }
        SturmSequence { seq }
    }

    pub fn poly(&self) -> &ZPoly {
        &self.seq[0]
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        count_changes(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_changes(self.seq.iter().map(|p| {
            let s = p.lc().cmp(&BigInt::zero());
            if positive || p.deg() % 2 == 0 {
                s
            } else {
                s.reverse()
            }
        }))
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

fn count_changes<I: Iterator<Item = Ordering>>(signs: I) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// One real root: exact when rational, else an open interval containing
/// exactly one root of `poly`, with non-root endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isolated {
    Exact(BigRational),
    Interval {
        poly: ZPoly,
        lo: BigRational,
        hi: BigRational,
    },
}

/// Isolate the real roots of a square-free `f` in the open interval
/// `(lo, hi)`, whose endpoints must not be roots. Results are sorted.
pub fn isolate_roots(f: &ZPoly, lo: &BigRational, hi: &BigRational) -> Vec<Isolated> {
    let mut out = Vec::new();
    let mut f = f.primitive();
    'restart: loop {
        if f.deg() == 0 {
            break;
        }
        if f.deg() == 1 {
            let r = BigRational::new(-f.coeff(0), f.coeff(1));
            if &r > lo && &r < hi {
                out.push(Isolated::Exact(r));
            }
            break;
        }
        let sturm = SturmSequence::new(&f);
        let mut found = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone(), sturm.count(lo, hi))];
        while let Some((a, b, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                found.push(Isolated::Interval {
                    poly: f.clone(),
                    lo: a,
                    hi: b,
                });
                continue;
            }
            let m = (&a + &b) / BigRational::from(BigInt::from(2));
            if f.sign_at(&m) == Ordering::Equal {
                out.push(Isolated::Exact(m.clone()));
                let lin = ZPoly::new(vec![-m.numer().clone(), m.denom().clone()]);
                f = f
                    .div_exact(&lin)
                    .expect("rational root gives a linear factor")
                    .primitive();
                continue 'restart;
            }
            let left = sturm.count(&a, &m);
            stack.push((m.clone(), b, n - left));
            stack.push((a, m, left));
        }
        out.extend(found);
        break;
    }
    out.sort_by(|x, y| lower(x).cmp(lower(y)));
    out
}

fn lower(i: &Isolated) -> &BigRational {
    match i {
        Isolated::Exact(r) => r,
        Isolated::Interval { lo, .. } => lo,
    }
}

/// Distinct roots of `f` (any polynomial) in the open interval `(a, b)`.
pub fn count_distinct_roots_open(f: &ZPoly, a: &BigRational, b: &BigRational) -> usize {
    if f.deg() == 0 || a >= b {
        return 0;
    }
    let g = f.gcd(&f.derivative());
    let sf = f.primitive().div_exact(&g).expect("gcd divides").primitive();
    let s = SturmSequence::new(&sf);
    let n = s.count(a, b);
    if sf.sign_at(b) == Ordering::Equal {
        n - 1
    } else {
        n
    }
}
