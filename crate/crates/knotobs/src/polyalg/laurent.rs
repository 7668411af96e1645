//! Integer Laurent polynomials and their canonical associates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::poly::ZPoly;
use crate::error::{Error, Result};

/// Element of `Z[t, 1/t]`, stored as `t^low * poly` with `poly(0) != 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    poly: ZPoly,
}

/// Symmetry of a canonical polynomial under `t -> 1/t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Palindromic {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "none")]
    NotPalindromic,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn from_poly(p: ZPoly) -> Self {
        Self::with_shift(p, 0)
    }

    /// `t^shift * p`
    pub fn with_shift(p: ZPoly, shift: i64) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let k = p.low_order();
        LaurentPoly {
            low: shift + k as i64,
            poly: p.strip_t(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        let Some((&low, _)) = map.iter().next() else {
            return Self::zero();
        };
        let high = *map.keys().next_back().unwrap();
        let mut v = vec![BigInt::zero(); (high - low) as usize + 1];
        for (e, c) in map {
            v[(e - low) as usize] = c;
        }
        LaurentPoly {
            low,
            poly: ZPoly::new(v),
        }
    }

    pub fn from_i64(low: i64, coeffs: &[i64]) -> Self {
        Self::with_shift(ZPoly::from_i64(coeffs), low)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.poly.deg() as i64
    }

    /// Breadth `high - low`; the degree of the canonical form.
    pub fn span(&self) -> usize {
        self.poly.deg()
    }

    /// The polynomial part, i.e. the value after multiplying by `t^-low`.
    pub fn poly(&self) -> &ZPoly {
        &self.poly
    }

    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i64, c.clone()))
            .collect()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.poly.coeff((e - self.low) as usize)
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        Self::with_shift(&self.poly * &o.poly, self.low + o.low)
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        Self::from_terms(self.terms().into_iter().chain(o.terms()))
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            poly: -&self.poly,
        }
    }

    /// Canonical associate: lowest exponent 0, positive leading coefficient.
    pub fn normalize(&self) -> Result<(LaurentPoly, Palindromic)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = if self.poly.lc().is_negative() {
            -&self.poly
        } else {
            self.poly.clone()
        };
        let kind = palindromic_type(&p);
        Ok((LaurentPoly { low: 0, poly: p }, kind))
    }

    /// Polynomial part of the canonical associate.
    pub fn normalized_poly(&self) -> Result<ZPoly> {
        Ok(self.normalize()?.0.poly)
    }

    /// `p(1/t)`
    pub fn invert_variable(&self) -> LaurentPoly {
        Self::with_shift(self.poly.reciprocal(), -self.high())
    }

    pub fn eval_int(&self, x: i64) -> Option<BigInt> {
        if x == 0 && self.low < 0 {
            return None;
        }
        let v = self.poly.eval_int(&BigInt::from(x));
        if self.low >= 0 {
            Some(v * num_traits::pow(BigInt::from(x), self.low as usize))
        } else {
            let d = num_traits::pow(BigInt::from(x), (-self.low) as usize);
            if (&v % &d).is_zero() {
                Some(v / d)
            } else {
                None
            }
        }
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (e, c) in self.terms().into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if a == BigInt::from(1) && e != 0 {
                s.push_str(&mono);
            } else {
                s.push_str(&a.to_string());
                s.push_str(&mono);
            }
        }
        s
    }
}

pub fn palindromic_type(p: &ZPoly) -> Palindromic {
    let c = p.coeffs();
    let n = c.len();
    if (0..n).all(|i| c[i] == c[n - 1 - i]) {
        Palindromic::Plus
    } else if (0..n).all(|i| c[i] == -&c[n - 1 - i]) {
        Palindromic::Minus
    } else {
        Palindromic::NotPalindromic
    }
}

impl From<ZPoly> for LaurentPoly {
    fn from(p: ZPoly) -> Self {
        LaurentPoly::from_poly(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Coefficient written as a JSON number when it fits, else as a decimal string.
pub(crate) fn coeff_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (e, c) in &terms {
            seq.serialize_element(&(e, coeff_json(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut a: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut terms = Vec::new();
                while let Some((e, c)) = a.next_element::<(i64, serde_json::Value)>()? {
                    let c = match c {
                        serde_json::Value::Number(n) => n
                            .as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| de::Error::custom("coefficient is not an integer"))?,
                        serde_json::Value::String(s) => s
                            .parse::<BigInt>()
                            .map_err(|_| de::Error::custom("bad coefficient string"))?,
                        _ => return Err(de::Error::custom("bad coefficient")),
                    };
                    terms.push((e, c));
                }
                Ok(LaurentPoly::from_terms(terms))
            }
        }
        d.deserialize_seq(V)
    }
}
