//! Batch runs over a CSV corpus of knots and links with asserted properties.
//!
//! Columns: `name, presentation_kind, presentation, m, g, g4, sigma, sqp, qp,
//! cover_lspace_n`, where `cover_lspace_n` is a semicolon separated list of
//! cover orders asserted to be L-spaces. Unknown cells are left empty.

use std::io::Read;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::input::{parse_input, InputKind, KnotInput};
use crate::error::{Error, Result};
use crate::obstruct::{obstruction_report, ObstructionReport, SqpStatus};
use crate::seifert::SeifertMatrix;

#[derive(Debug, Deserialize)]
struct Row {
    name: String,
    presentation_kind: String,
    presentation: String,
    m: Option<usize>,
    g: Option<i64>,
    g4: Option<u64>,
    sigma: Option<i64>,
    sqp: Option<bool>,
    qp: Option<bool>,
    #[serde(default)]
    cover_lspace_n: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub presentation: KnotInput,
    pub m: Option<usize>,
    pub g: Option<i64>,
    pub g4: Option<u64>,
    pub sigma: Option<i64>,
    pub sqp: Option<bool>,
    pub qp: Option<bool>,
    pub cover_lspace_n: Vec<u64>,
}

/// A corpus line that could not be read, kept so the run can report it in place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryError {
    pub line: u64,
    pub name: Option<String>,
    pub message: String,
}

pub type CorpusLine = std::result::Result<CorpusEntry, EntryError>;

fn entry_from_row(r: Row) -> Result<CorpusEntry> {
    let kind: InputKind = r.presentation_kind.parse()?;
    if kind == InputKind::Polynomial {
        return Err(Error::params("corpus entries need a Seifert matrix, braid or family"));
    }
    let presentation = parse_input(&r.presentation, Some(kind), r.m)?;
    let cover_lspace_n = r
        .cover_lspace_n
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<u64>() {
            Ok(n) if n >= 2 => Ok(n),
            _ => Err(Error::params(format!("cover order {s:?} is not an integer >= 2"))),
        })
        .collect::<Result<_>>()?;
    Ok(CorpusEntry {
        name: r.name,
        presentation,
        m: r.m,
        g: r.g,
        g4: r.g4,
        sigma: r.sigma,
        sqp: r.sqp,
        qp: r.qp,
        cover_lspace_n,
    })
}

/// Reads every line of a corpus; malformed lines become [`EntryError`]s.
pub fn read_corpus<R: Read>(src: R) -> Result<Vec<CorpusLine>> {
    let mut rd = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(src);
    let headers = rd.headers().map_err(|e| Error::parse(0, e.to_string()))?.clone();
    let mut out = Vec::new();
    for rec in rd.records() {
        let rec = rec.map_err(|e| Error::parse(e.position().map_or(0, |p| p.byte() as usize), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let name = rec.get(0).map(str::to_owned);
        let entry = rec
            .deserialize::<Row>(Some(&headers))
            .map_err(|e| Error::params(e.to_string()))
            .and_then(entry_from_row)
            .map_err(|e| EntryError {
                line,
                name,
                message: e.to_string(),
            });
        out.push(entry);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusResult {
    pub name: Option<String>,
    pub presentation_kind: Option<InputKind>,
    pub report: Option<ObstructionReport>,
    /// Verdict from the asserted L-space covers and the signature.
    pub sqp_status: Option<SqpStatus>,
    /// Asserted values the computation contradicts.
    pub contradictions: Vec<String>,
    pub error: Option<String>,
}

impl CorpusResult {
    fn failed(name: Option<String>, kind: Option<InputKind>, message: String) -> Self {
        CorpusResult {
            name,
            presentation_kind: kind,
            report: None,
            sqp_status: None,
            contradictions: Vec::new(),
            error: Some(message),
        }
    }
}

/// Lower bound on the Seifert genus from `span(Delta) <= 2g + m - 1`.
fn genus_lower_bound(s: &SeifertMatrix) -> i64 {
    let d = s.alexander();
    if d.is_zero() {
        return 0;
    }
    let m = s.components as i64;
    ((d.span() as i64 - (m - 1)).max(0) + 1) / 2
}

pub fn run_entry(e: &CorpusEntry) -> Result<CorpusResult> {
    let s = e.presentation.seifert()?.with_name(e.name.clone());
    let m = s.components as i64;
    let report = obstruction_report(&s, e.g4)?;
    let sigma = report.sigma;
    let mut contra = Vec::new();
    if let Some(m0) = e.m {
        if m0 != s.components {
            contra.push(format!("m asserted {m0}, presentation has {}", s.components));
        }
    }
    if let Some(x) = e.sigma {
        if x != sigma {
            contra.push(format!("sigma asserted {x}, computed {sigma}"));
        }
    }
    let lb = genus_lower_bound(&s);
    if let Some(g) = e.g {
        if g < lb {
            contra.push(format!("g asserted {g}, but span(Delta) needs g >= {lb}"));
        }
        if let Ok(ub) = s.genus() {
            if g > ub as i64 {
                contra.push(format!("g asserted {g}, but the surface has genus {ub}"));
            }
        }
    }
    if let Some(g4) = e.g4 {
        if sigma.abs() > 2 * g4 as i64 + m - 1 {
            contra.push(format!("g4 asserted {g4}, but |sigma| = {} needs more", sigma.abs()));
        }
    }
    // |sigma| <= 2g + m - 1 always; an unknown g is replaced by its lower bound,
    // which can only certify indefiniteness
    let maximal = match e.g {
        Some(g) => sigma.abs() == 2 * g + m - 1,
        None => sigma.abs() >= 2 * lb + m - 1,
    };
    let some_lspace = !e.cover_lspace_n.is_empty();
    let status = if some_lspace && !maximal {
        SqpStatus::NotSqp
    } else {
        SqpStatus::NoObstruction
    };
    if e.sqp == Some(true) {
        if status == SqpStatus::NotSqp {
            contra.push("sqp asserted, but the signature is not maximal and a cover is an L-space".into());
        }
        for &n in &e.cover_lspace_n {
            if report.rules_out(n) {
                contra.push(format!(
                    "sqp asserted with an L-space {n}-fold cover, which the Alexander polynomial rules out"
                ));
            }
        }
        if e.qp == Some(false) {
            contra.push("sqp asserted but qp denied".into());
        }
        if let (Some(g), Some(g4)) = (e.g, e.g4) {
            if g != g4 as i64 {
                contra.push(format!("sqp asserted, but g = {g} differs from g4 = {g4}"));
            }
        }
    }
    Ok(CorpusResult {
        name: Some(e.name.clone()),
        presentation_kind: Some(e.presentation.kind()),
        report: Some(report),
        sqp_status: Some(status),
        contradictions: contra,
        error: None,
    })
}

/// Runs every entry, in parallel, keeping the input order. Failures are
/// recorded in their entry and do not stop the run.
pub fn run_corpus(lines: &[CorpusLine]) -> Vec<CorpusResult> {
    lines
        .par_iter()
        .map(|l| match l {
            Ok(e) => run_entry(e).unwrap_or_else(|err| {
                CorpusResult::failed(Some(e.name.clone()), Some(e.presentation.kind()), err.to_string())
            }),
            Err(err) => CorpusResult::failed(err.name.clone(), None, format!("line {}: {}", err.line, err.message)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "name,presentation_kind,presentation,m,g,g4,sigma,sqp,qp,cover_lspace_n\n";

    fn run(body: &str) -> Vec<CorpusResult> {
        run_corpus(&read_corpus(format!("{HEADER}{body}").as_bytes()).unwrap())
    }

    #[test]
    fn empty_corpus() {
        assert!(run("").is_empty());
    }

    #[test]
    fn examples() {
        let r = run("5_2,family,twobridge:7/2,1,1,1,-2,true,,2\n");
        let rep = r[0].report.as_ref().unwrap();
        assert_eq!(rep.n3, crate::obstruct::CoverBound::Finite(8));
        assert_eq!(r[0].sqp_status, Some(SqpStatus::NoObstruction));
        assert!(r[0].contradictions.is_empty());
        let r = run("4_1,seifert,\"[[1,1],[0,-1]]\",1,1,,0,,,2\n");
        assert_eq!(r[0].sqp_status, Some(SqpStatus::NotSqp));
        let r = run("4_1,seifert,\"[[1,1],[0,-1]]\",1,1,,-2,true,,2\n");
        assert_eq!(r[0].contradictions.len(), 3, "{:?}", r[0].contradictions);
    }

    #[test]
    fn errors_do_not_stop_the_run() {
        let r = run("bad,braid,s1 x,,,,,,,\nworse,nope,s1,,,,,,,\n3_1,braid,s1^3,,,,,,,\n");
        assert_eq!(r.len(), 3);
        assert!(r[0].error.as_ref().unwrap().contains("parse error"));
        assert!(r[1].error.is_some());
        assert!(r[2].error.is_none());
        assert_eq!(r[2].name.as_deref(), Some("3_1"));
    }
}
