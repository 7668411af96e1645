//! One knot or link given as text: a Seifert matrix, a braid word, a family
//! string or an Alexander polynomial.

use std::str::FromStr;

use serde::Serialize;

use super::braid::{braid_seifert_matrix, parse_braid, BraidWord};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::polyalg::{parse_laurent, LaurentPoly};
use crate::seifert::SeifertMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Seifert,
    Braid,
    Family,
    Polynomial,
}

impl FromStr for InputKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "seifert" | "matrix" => Ok(InputKind::Seifert),
            "braid" => Ok(InputKind::Braid),
            "family" => Ok(InputKind::Family),
            "polynomial" | "poly" => Ok(InputKind::Polynomial),
            other => Err(Error::params(format!("unknown presentation kind {other:?}"))),
        }
    }
}

impl InputKind {
    /// Guess from the leading characters: `[[` or `{` is a matrix, `[`, `s`
    /// or `b(` a braid, `name:` a family, anything else a polynomial.
    pub fn detect(src: &str) -> InputKind {
        let t = src.trim_start();
        let compact: String = t.chars().filter(|c| !c.is_whitespace()).take(2).collect();
        if compact == "[[" || t.starts_with('{') {
            InputKind::Seifert
        } else if t.starts_with('[') || t.starts_with('s') || t.starts_with("b(") {
            InputKind::Braid
        } else if t
            .split_once(':')
            .is_some_and(|(k, _)| k.chars().all(|c| c.is_ascii_alphabetic()))
        {
            InputKind::Family
        } else {
            InputKind::Polynomial
        }
    }
}

#[derive(Clone, Debug)]
pub enum KnotInput {
    Seifert(SeifertMatrix),
    Braid(BraidWord),
    Family(Family),
    Polynomial(LaurentPoly),
}

/// A Seifert matrix from a JSON object, or from a bare JSON array of rows
/// together with the component count.
pub fn parse_seifert(src: &str, components: usize) -> Result<SeifertMatrix> {
    if src.trim_start().starts_with('{') {
        SeifertMatrix::from_json(src)
    } else {
        SeifertMatrix::from_json(&format!("{{\"matrix\": {src}, \"components\": {components}}}"))
    }
}

pub fn parse_input(src: &str, kind: Option<InputKind>, components: Option<usize>) -> Result<KnotInput> {
    let src = src.trim();
    Ok(match kind.unwrap_or_else(|| InputKind::detect(src)) {
        InputKind::Seifert => KnotInput::Seifert(parse_seifert(src, components.unwrap_or(1))?),
        InputKind::Braid => KnotInput::Braid(parse_braid(src, None)?),
        InputKind::Family => KnotInput::Family(src.parse()?),
        InputKind::Polynomial => KnotInput::Polynomial(parse_laurent(src)?),
    })
}

impl KnotInput {
    pub fn kind(&self) -> InputKind {
        match self {
            KnotInput::Seifert(_) => InputKind::Seifert,
            KnotInput::Braid(_) => InputKind::Braid,
            KnotInput::Family(_) => InputKind::Family,
            KnotInput::Polynomial(_) => InputKind::Polynomial,
        }
    }

    pub fn seifert(&self) -> Result<SeifertMatrix> {
        match self {
            KnotInput::Seifert(s) => Ok(s.clone()),
            KnotInput::Braid(w) => Ok(braid_seifert_matrix(w)?.with_name(w.to_string())),
            KnotInput::Family(f) => f.seifert_matrix(),
            KnotInput::Polynomial(_) => Err(Error::params(
                "this needs a Seifert matrix, braid or family, not a polynomial",
            )),
        }
    }

    /// Normalized Alexander polynomial.
    pub fn alexander(&self) -> Result<LaurentPoly> {
        match self {
            KnotInput::Polynomial(p) => Ok(p.normalize()?.0),
            KnotInput::Family(f) => f.alexander(),
            _ => Ok(self.seifert()?.alexander()),
        }
    }

    /// Number of link components, when the presentation determines it.
    pub fn components(&self) -> Option<usize> {
        match self {
            KnotInput::Seifert(s) => Some(s.components),
            KnotInput::Braid(w) => Some(w.closure_components()),
            KnotInput::Family(Family::Pretzel { strands }) => {
                Some(crate::families::pretzel::pretzel_components(strands))
            }
            KnotInput::Family(Family::Chain { .. }) => None,
            KnotInput::Family(_) => Some(1),
            KnotInput::Polynomial(_) => None,
        }
    }
}
