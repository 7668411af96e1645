//! Seifert matrices and their Alexander polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::polyalg::{LaurentPoly, ZPoly};

/// Matrix of the Seifert form of a surface `F` bounding a link, with the
/// number of link components `m` and of surface components `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: IntMatrix,
    pub components: usize,
    pub surface_components: usize,
    pub name: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct SeifertJson {
    matrix: Vec<Vec<serde_json::Value>>,
    #[serde(default = "one")]
    components: usize,
    #[serde(default = "one")]
    surface_components: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

fn one() -> usize {
    1
}

impl SeifertMatrix {
    pub fn new(entries: IntMatrix, components: usize) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::params("Seifert matrix must be square"));
        }
        if components == 0 {
            return Err(Error::params("a link has at least one component"));
        }
        Ok(SeifertMatrix {
            entries,
            components,
            surface_components: 1,
            name: None,
        })
    }

    pub fn from_rows(rows: &[&[i64]], components: usize) -> Result<Self> {
        Self::new(linalg::int_matrix(rows), components)
    }

    pub fn with_surface_components(mut self, mu: usize) -> Result<Self> {
        if mu == 0 || mu > self.components {
            return Err(Error::InconsistentMetadata(format!(
                "surface components {mu} must lie in 1..={}",
                self.components
            )));
        }
        self.surface_components = mu;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn transpose(&self) -> IntMatrix {
        linalg::transpose(&self.entries)
    }

    /// `S + S^T`
    pub fn symmetrize(&self) -> IntMatrix {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| &self.entries[i][j] + &self.entries[j][i]).collect())
            .collect()
    }

    /// `S - S^T`, the intersection form.
    pub fn intersection_form(&self) -> IntMatrix {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| &self.entries[i][j] - &self.entries[j][i]).collect())
            .collect()
    }

    /// Matrix of the mirror image.
    pub fn mirror(&self) -> SeifertMatrix {
        let mut out = self.clone();
        out.entries = self
            .transpose()
            .into_iter()
            .map(|r| r.into_iter().map(|v| -v).collect())
            .collect();
        out
    }

    /// `det(S - t S^T)` before normalization.
    pub fn alexander_raw(&self) -> ZPoly {
        let n = self.size();
        let m: Vec<Vec<ZPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ZPoly::new(vec![self.entries[i][j].clone(), -self.entries[j][i].clone()]))
                    .collect()
            })
            .collect();
        linalg::det_poly(&m)
    }

    /// Canonical Alexander polynomial; the zero polynomial flags a degenerate form.
    pub fn alexander(&self) -> LaurentPoly {
        let d = LaurentPoly::from_poly(self.alexander_raw());
        match d.normalize() {
            Ok((p, _)) => p,
            Err(_) => LaurentPoly::zero(),
        }
    }

    /// `P S P^T` for unimodular `P`, keeping the metadata.
    pub fn congruence_transform(&self, p: &IntMatrix) -> Result<SeifertMatrix> {
        if p.len() != self.size() || p.iter().any(|r| r.len() != self.size()) {
            return Err(Error::params("transform has the wrong shape"));
        }
        if !linalg::det_int(p).abs().is_one() {
            return Err(Error::NonUnimodular);
        }
        let mut out = self.clone();
        out.entries = linalg::mat_mul(&linalg::mat_mul(p, &self.entries), &linalg::transpose(p));
        Ok(out)
    }

    /// Seifert genus asserted by a genus-realizing connected surface: `(N - m + 1)/2`.
    pub fn genus(&self) -> Result<usize> {
        let n = self.size() as i64;
        let m = self.components as i64;
        let mu = self.surface_components as i64;
        let twice = n - (m - mu) - mu + 1 - (mu - 1);
        // for mu = 1 this is N - m + 1
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::InconsistentMetadata(format!(
                "size {n} with {m} components gives no integral genus"
            )));
        }
        Ok((twice / 2) as usize)
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let j: SeifertJson = serde_json::from_str(src).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        let rows = j
            .matrix
            .iter()
            .map(|r| r.iter().map(json_int).collect::<Result<Vec<_>>>())
            .collect::<Result<IntMatrix>>()?;
        let mut s = SeifertMatrix::new(rows, j.components)?.with_surface_components(j.surface_components)?;
        s.name = j.name;
        Ok(s)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let j = SeifertJson {
            matrix: self
                .entries
                .iter()
                .map(|r| r.iter().map(crate::polyalg::laurent::coeff_json).collect())
                .collect(),
            components: self.components,
            surface_components: self.surface_components,
            name: self.name.clone(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    /// Block sum, the Seifert matrix of a boundary connected sum.
    pub fn block_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        let (a, b) = (self.size(), other.size());
        let mut e = vec![vec![BigInt::zero(); a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                e[i][j] = self.entries[i][j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                e[a + i][a + j] = other.entries[i][j].clone();
            }
        }
        SeifertMatrix {
            entries: e,
            components: self.components + other.components - 1,
            surface_components: 1,
            name: None,
        }
    }

    /// Small entries as machine integers, if they fit.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64()).collect())
            .collect()
    }

    pub(crate) fn with_entries(&self, entries: IntMatrix) -> SeifertMatrix {
        SeifertMatrix {
            entries,
            ..self.clone()
        }
    }
}

fn json_int(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::parse(0, "matrix entries must be integers")),
        serde_json::Value::String(s) => s.parse().map_err(|_| Error::parse(0, "bad integer string")),
        _ => Err(Error::parse(0, "matrix entries must be integers")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alexander_examples() {
        let tre = SeifertMatrix::from_rows(&[&[-1, 1], &[0, -1]], 1).unwrap();
        assert_eq!(tre.alexander(), LaurentPoly::from_i64(0, &[1, -1, 1]));
        let fig8 = SeifertMatrix::from_rows(&[&[1, 1], &[0, -1]], 1).unwrap();
        assert_eq!(fig8.alexander(), LaurentPoly::from_i64(0, &[1, -3, 1]));
        let hopf = SeifertMatrix::from_rows(&[&[-1]], 2).unwrap();
        assert_eq!(hopf.alexander(), LaurentPoly::from_i64(0, &[-1, 1]));
    }

    #[test]
    fn symmetrize_and_transform() {
        let tre = SeifertMatrix::from_rows(&[&[-1, 1], &[0, -1]], 1).unwrap();
        assert_eq!(tre.symmetrize(), linalg::int_matrix(&[&[-2, 1], &[1, -2]]));
        let swap = linalg::int_matrix(&[&[0, 1], &[1, 0]]);
        let t = tre.congruence_transform(&swap).unwrap();
        assert_eq!(t.entries(), &linalg::int_matrix(&[&[-1, 0], &[1, -1]]));
        let bad = linalg::int_matrix(&[&[2, 0], &[0, 1]]);
        assert_eq!(tre.congruence_transform(&bad), Err(Error::NonUnimodular));
    }

    #[test]
    fn json_roundtrip() {
        let s = SeifertMatrix::from_json(r#"{"matrix": [[-1, 1], [0, -1]], "components": 1, "name": "3_1"}"#).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.name.as_deref(), Some("3_1"));
        let back = SeifertMatrix::from_json(&s.to_json_value().to_string()).unwrap();
        assert_eq!(back, s);
    }
}
