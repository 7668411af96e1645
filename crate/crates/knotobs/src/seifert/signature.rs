//! Exact values of the signature and nullity functions.
//!
//! At a rational point `zeta = c + is` the Hermitian form
//! `(1 - zeta) S + (1 - conj zeta) S^T` is `A + iB` with `A = (1 - c)(S + S^T)`
//! and `B = s(S^T - S)`. Its real doubling `[[A, -B], [B, A]]` has every
//! eigenvalue of the Hermitian form twice. Writing `u = s/(1 + c)` the pair
//! `(A, B)` is a positive multiple of `(u(S + S^T), S^T - S)` for `u > 0`, so
//! with `u = a/b` the doubled form is congruent to an integer matrix.
//!
//! At roots of unity the form is diagonalized over the cyclotomic field.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::SeifertMatrix;
use crate::error::{Error, Result};
use crate::linalg::{self, Inertia, IntMatrix};
use crate::polyalg::{CycElem, CyclotomicField, LaurentPoly, RationalCirclePoint};

/// Inertia of the Hermitian form at a rational point of the circle.
pub fn inertia_at_rational_point(s: &SeifertMatrix, p: &RationalCirclePoint) -> Inertia {
    let n = s.size();
    if p.is_one() {
        return Inertia {
            n_plus: 0,
            n_zero: n,
            n_minus: 0,
        };
    }
    let Some(u) = p.u() else {
        return linalg::symmetric_inertia(&s.symmetrize());
    };
    let (a, b) = (u.numer().clone(), u.denom().clone());
    let sym = s.symmetrize();
    let skew = s.intersection_form(); // S - S^T = -(S^T - S)
    let mut m: IntMatrix = vec![vec![BigInt::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let d = &a * &sym[i][j];
            let off = &b * &skew[i][j];
            m[i][j] = d.clone();
            m[n + i][n + j] = d;
            // upper right -b(S^T - S) = b(S - S^T), lower left the negative
            m[i][n + j] = off.clone();
            m[n + i][j] = -off;
        }
    }
    let mut inertia = linalg::symmetric_inertia(&m);
    if a.is_negative() {
        inertia = inertia.swapped();
    }
    debug_assert!(inertia.n_plus.is_multiple_of(2) && inertia.n_zero.is_multiple_of(2));
    Inertia {
        n_plus: inertia.n_plus / 2,
        n_zero: inertia.n_zero / 2,
        n_minus: inertia.n_minus / 2,
    }
}

/// Signature at `-1`: the inertia of `S + S^T`.
pub fn murasugi_signature(s: &SeifertMatrix) -> i64 {
    linalg::symmetric_inertia(&s.symmetrize()).signature()
}

/// Whether `|sigma(-1)|` attains the maximum `2g + (m - 1) = N`.
pub fn is_definite(s: &SeifertMatrix) -> Result<bool> {
    s.genus()?;
    Ok(murasugi_signature(s).unsigned_abs() as usize == s.size())
}

fn field_matrix<F>(s: &SeifertMatrix, field: &CyclotomicField, entry: F) -> Vec<Vec<CycElem>>
where
    F: Fn(&CycElem, &CycElem) -> CycElem,
{
    let n = s.size();
    let e = s.entries();
    let lift = |v: &BigInt| field.from_rational(v.clone().into());
    (0..n)
        .map(|i| (0..n).map(|j| entry(&lift(&e[i][j]), &lift(&e[j][i]))).collect())
        .collect()
}

fn reduce_fraction(n: u64, j: u64) -> (u64, u64) {
    let j = j % n;
    let g = num_integer::gcd(j, n).max(1);
    (j / g, n / g)
}

/// Corank of `S - zeta^{-1} S^T` at `zeta = zeta_n^j`, by Gaussian
/// elimination over `Q(zeta)`.
pub fn nullity_at_root_of_unity(s: &SeifertMatrix, n: u64, j: u64) -> usize {
    let (j, n) = reduce_fraction(n, j);
    let field = CyclotomicField::new(n.max(1), j);
    let zinv = field.gen_pow(-1);
    let mut a = field_matrix(s, &field, |sij, sji| field.sub(sij, &field.mul(&zinv, sji)));
    let size = s.size();
    let mut rank = 0;
    for c in 0..size {
        let Some(p) = (rank..size).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let inv = field.inv(&a[rank][c]).expect("nonzero field element is invertible");
        for r in rank + 1..size {
            if a[r][c].is_zero() {
                continue;
            }
            let f = field.mul(&a[r][c], &inv);
            for k in c..size {
                let v = field.mul(&f, &a[rank][k]);
                a[r][k] = field.sub(&a[r][k], &v);
            }
        }
        rank += 1;
    }
    size - rank
}

/// Inertia of `(1 - zeta) S + (1 - conj zeta) S^T` at `zeta = zeta_n^j`,
/// diagonalized by Hermitian congruence over `Q(zeta)`.
pub fn inertia_at_root_of_unity(s: &SeifertMatrix, n: u64, j: u64) -> Inertia {
    assert!(n >= 1);
    let (j, n) = reduce_fraction(n, j);
    if j == 0 {
        return Inertia {
            n_plus: 0,
            n_zero: s.size(),
            n_minus: 0,
        };
    }
    let field = CyclotomicField::new(n, j);
    let one = field.one();
    let a_coef = field.sub(&one, &field.gen_pow(1));
    let b_coef = field.sub(&one, &field.gen_pow(-1));
    let h = field_matrix(s, &field, |sij, sji| {
        field.add(&field.mul(&a_coef, sij), &field.mul(&b_coef, sji))
    });
    hermitian_inertia(&field, h)
}

fn hermitian_inertia(field: &CyclotomicField, mut h: Vec<Vec<CycElem>>) -> Inertia {
    let n = h.len();
    let mut out = Inertia::default();
    let mut k = 0;
    while k < n {
        let piv = match (k..n).find(|&i| !h[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let pair = (k..n).find_map(|i| (i + 1..n).find(|&j| !h[i][j].is_zero()).map(|j| (i, j)));
                let Some((i, j)) = pair else {
                    out.n_zero += n - k;
                    break;
                };
                // R_i += l R_j, C_i += conj(l) C_j puts 2|h_ij|^2 on the diagonal
                let l = h[i][j].clone();
                let lc = field.conj(&l);
                for c in k..n {
                    let v = field.mul(&l, &h[j][c]);
                    h[i][c] = field.add(&h[i][c], &v);
                }
                for r in k..n {
                    let v = field.mul(&lc, &h[r][j]);
                    h[r][i] = field.add(&h[r][i], &v);
                }
                i
            }
        };
        if piv != k {
            h.swap(piv, k);
            for row in h.iter_mut() {
                row.swap(piv, k);
            }
        }
        let d = h[k][k].clone();
        match field.real_sign(&d) {
            Ordering::Greater => out.n_plus += 1,
            Ordering::Less => out.n_minus += 1,
            Ordering::Equal => unreachable!("pivot is nonzero"),
        }
        let inv = field.inv(&d).expect("nonzero pivot");
        for i in k + 1..n {
            if h[i][k].is_zero() {
                continue;
            }
            let f = field.mul(&h[i][k], &inv);
            for jj in k + 1..n {
                let v = field.mul(&f, &h[k][jj]);
                h[i][jj] = field.sub(&h[i][jj], &v);
            }
        }
        k += 1;
    }
    out
}

/// `(sigma, eta)` at `zeta_n^j`.
pub fn signature_at_root_of_unity(s: &SeifertMatrix, n: u64, j: u64) -> (i64, usize) {
    let i = inertia_at_root_of_unity(s, n, j);
    (i.signature(), i.n_zero)
}

/// Rows and columns of `S` spanning a complement of the common kernel
/// `ker S ∩ ker S^T`, together with its dimension. The kernel contributes
/// only to nullity, so the restricted form carries every sign change.
pub fn reduce_common_kernel(s: &SeifertMatrix) -> (SeifertMatrix, usize) {
    let n = s.size();
    let mut stacked = s.entries().clone();
    stacked.extend(s.transpose());
    let kernel = linalg::integer_kernel(&stacked, n);
    if kernel.is_empty() {
        return (s.clone(), 0);
    }
    let mut basis = kernel.clone();
    let mut keep = Vec::new();
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[i] = 1.into();
        basis.push(e);
        if linalg::rank(&basis, n) == basis.len() {
            keep.push(i);
        } else {
            basis.pop();
        }
    }
    let e = s.entries();
    let sub: IntMatrix = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| e[i][j].clone()).collect())
        .collect();
    (s.with_entries(sub), kernel.len())
}

/// Alexander polynomial of the kernel-free part, whose circle roots are
/// exactly the places where the signature function can change.
pub fn reduced_alexander(s: &SeifertMatrix) -> Result<(LaurentPoly, usize)> {
    let (r, k) = reduce_common_kernel(s);
    let d = r.alexander();
    if d.is_zero() {
        return Err(Error::Degenerate(
            "S - tS^T is singular for every t after removing the common kernel".into(),
        ));
    }
    Ok((d, k))
}
