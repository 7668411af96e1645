//! Exact dense linear algebra over Z, Q and Z[t].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::polyalg::ZPoly;

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Numbers of positive, zero and negative eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn size(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    pub fn swapped(self) -> Inertia {
        Inertia {
            n_plus: self.n_minus,
            n_zero: self.n_zero,
            n_minus: self.n_plus,
        }
    }
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    let n = m.len();
    let c = m.first().map_or(0, |r| r.len());
    (0..c).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(BigInt::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Fraction-free Bareiss determinant.
pub fn det_int(m: &IntMatrix) -> BigInt {
    let n = m.len();
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { prev };
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant over `Z[t]`, by Bareiss elimination with exact polynomial division.
pub fn det_poly(m: &[Vec<ZPoly>]) -> ZPoly {
    let n = m.len();
    let mut a = m.to_vec();
    let mut prev = ZPoly::one();
    let mut sign = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return ZPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { ZPoly::one() } else { prev };
    if sign {
        -d
    } else {
        d
    }
}

pub fn det_rational(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Inertia of a symmetric integer matrix by fraction-free symmetric
/// elimination with diagonal pivoting. When every remaining diagonal entry
/// vanishes, adding row and column `j` to `i` puts `2 m_ij` on the diagonal;
/// this integral congruence keeps the Bareiss divisions exact.
pub fn symmetric_inertia(m: &IntMatrix) -> Inertia {
    let n = m.len();
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut out = Inertia::default();
    let mut k = 0;
    while k < n {
        let diag = (k..n).filter(|&i| !a[i][i].is_zero()).min_by_key(|&i| a[i][i].bits());
        let piv = match diag {
            Some(i) => i,
            None => {
                let pair = (k..n).find_map(|i| (i + 1..n).find(|&j| !a[i][j].is_zero()).map(|j| (i, j)));
                let Some((i, j)) = pair else {
                    out.n_zero += n - k;
                    break;
                };
                for c in k..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in k..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                i
            }
        };
        if piv != k {
            a.swap(piv, k);
            for row in a.iter_mut() {
                row.swap(piv, k);
            }
        }
        let pv = a[k][k].clone();
        if pv.is_positive() == prev.is_positive() {
            out.n_plus += 1;
        } else {
            out.n_minus += 1;
        }
        for i in k + 1..n {
            for j in i..n {
                let v = (&pv * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v.clone();
                a[j][i] = v;
            }
        }
        prev = pv;
        k += 1;
    }
    out
}

/// Basis of the right null space over `Q`, scaled to primitive integer vectors.
pub fn integer_kernel(m: &IntMatrix, cols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|v| BigRational::from(v.clone())).collect())
        .collect();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            primitive_vector(&v)
        })
        .collect()
}

fn primitive_vector(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let w: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from(l.clone())).to_integer())
        .collect();
    let g = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return w;
    }
    w.into_iter().map(|x| x / &g).collect()
}

/// Rank over `Q`.
pub fn rank(m: &IntMatrix, cols: usize) -> usize {
    cols - integer_kernel(m, cols).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let m = int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det_int(&m), BigInt::from(18));
        let m = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_int(&m), BigInt::from(-1));
        let q: Vec<Vec<BigRational>> = int_matrix(&[&[0, 2], &[3, 1]])
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from).collect())
            .collect();
        assert_eq!(det_rational(q), BigRational::from(BigInt::from(-6)));
    }

    #[test]
    fn inertia_examples() {
        let i = symmetric_inertia(&int_matrix(&[&[-2, 1], &[1, -2]]));
        assert_eq!(
            i,
            Inertia {
                n_plus: 0,
                n_zero: 0,
                n_minus: 2
            }
        );
        let i = symmetric_inertia(&int_matrix(&[&[2, 1], &[1, -2]]));
        assert_eq!(
            i,
            Inertia {
                n_plus: 1,
                n_zero: 0,
                n_minus: 1
            }
        );
        // zero diagonal forces the hyperbolic step
        let i = symmetric_inertia(&int_matrix(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]));
        assert_eq!(
            i,
            Inertia {
                n_plus: 1,
                n_zero: 1,
                n_minus: 1
            }
        );
        let i = symmetric_inertia(&int_matrix(&[&[1, 2], &[2, 4]]));
        assert_eq!(
            i,
            Inertia {
                n_plus: 1,
                n_zero: 1,
                n_minus: 0
            }
        );
    }

    #[test]
    fn kernel() {
        let m = int_matrix(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = integer_kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let col: IntMatrix = v.iter().map(|x| vec![x.clone()]).collect();
            assert!(mat_mul(&m, &col).iter().all(|r| r[0].is_zero()));
        }
    }
}
