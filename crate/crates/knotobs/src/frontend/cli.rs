//! Command line dispatch. Exit codes: 0 when the computation finished, 1 when
//! an obstruction subcommand fired, 2 on bad input.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use super::corpus::{read_corpus, run_corpus};
use super::input::{parse_input, InputKind, KnotInput};
use crate::covers::{branched_cover_from_alexander, branched_cover_homology};
use crate::error::{Error, Result};
use crate::families::{
    chain_link_det, even_continued_fraction, genus1_two_bridge, kkm_alexander, kkm_root_location, minkus_alexander,
    pretzel_all_odd_signature, pretzel_knot_is_sqp, pretzel_link_is_sqp3, pretzel_sigma2_is_lspace, torus_alexander,
    two_bridge_seifert_matrix, ChainEntry, Orientation, TangleChain,
};
use crate::obstruct::{monic_classification, n3, n4, obstruction_report, sqp_lspace_obstruction, LSpaceVerdict};
use crate::seifert::{murasugi_signature, signature_profile};

#[derive(Parser, Debug)]
#[command(
    name = "knotobs",
    version,
    about = "Signature and cyclic branched cover obstructions for knots and links"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Input {
    /// Seifert matrix (`[[..]]` or JSON object), braid word, family string or
    /// Alexander polynomial. Read from stdin when absent.
    input: Option<String>,
    /// Presentation kind, overriding detection: seifert, braid, family or polynomial.
    #[arg(long)]
    kind: Option<InputKind>,
    /// Number of link components for a bare Seifert matrix or a polynomial.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normalized Alexander polynomial.
    Alexander(Input),
    /// Tristram-Levine signature and nullity on each arc of the circle.
    SignatureProfile(Input),
    /// Homology of the n-fold cyclic branched cover.
    BranchedCover {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Largest cover order not excluded by the root location of Delta.
    N3(Input),
    /// The cover bound with multiplicity threshold 2 g4 + m - 1.
    N4 {
        #[arg(long)]
        g4: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Cyclotomic classification of a monic Alexander polynomial at order n.
    Classify {
        #[arg(long)]
        n: u64,
        /// Apply the stricter lists for knots.
        #[arg(long)]
        knot: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Whether an SQP link can have an L-space n-fold cover; the full report without --n.
    SqpObstruct {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        g4: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Pretzel classifiers.
    #[command(allow_negative_numbers = true)]
    Pretzel {
        #[arg(required = true, num_args = 1..)]
        strands: Vec<i64>,
        /// Strong quasipositivity verdict.
        #[arg(long)]
        sqp: bool,
        /// Orientation a, b, c or d of a three-strand link with the first entry even.
        #[arg(long)]
        orientation: Option<Orientation>,
        /// Signature of an all-odd pretzel with one negative last entry.
        #[arg(long)]
        signature: bool,
        /// Whether the double branched cover is an L-space.
        #[arg(long)]
        lspace: bool,
    },
    /// Two-bridge knot K(p/q), given as p/q.
    Twobridge { fraction: String },
    /// The two-bridge knot K(k, m).
    Kkm { k: i64, m: i64 },
    /// Determinant of the tangle chain L(k1, k2, k3); entries may be `inf`.
    ChainDet {
        k1: ChainEntry,
        k2: ChainEntry,
        k3: ChainEntry,
    },
    /// Alexander polynomial of the torus knot T(p, q).
    Torus { p: u64, q: u64 },
    /// Batch runs.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCmd {
    /// Run every entry of a CSV corpus.
    Run { file: String },
}

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        let s = if self.json {
            serde_json::to_string_pretty(value).expect("serializable")
        } else {
            text()
        };
        match writeln!(self.out, "{s}") {
            // a closed pipe downstream is a normal way to stop
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => Ok(r?),
        }
    }

    fn knot(&mut self, i: &Input) -> Result<KnotInput> {
        let src = match &i.input {
            Some(s) => s.clone(),
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                s
            }
        };
        parse_input(&src, i.kind, i.m)
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run(args: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{msg}");
            } else {
                let _ = write!(err, "{msg}");
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        out,
        stdin,
    };
    match dispatch(cli.cmd, &mut ctx) {
        Ok(fired) => i32::from(fired),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Returns whether an obstruction fired.
fn dispatch(cmd: Cmd, ctx: &mut Ctx<'_>) -> Result<bool> {
    match cmd {
        Cmd::Alexander(i) => {
            let d = ctx.knot(&i)?.alexander()?;
            ctx.emit(&json!({ "alexander": d }), || d.to_string())?;
        }
        Cmd::SignatureProfile(i) => {
            let p = signature_profile(&ctx.knot(&i)?.seifert()?)?;
            ctx.emit(&p, || {
                let mut lines = vec![format!("Delta = {}", p.alexander)];
                let mut lo = 0.0;
                for (k, a) in p.arcs.iter().enumerate() {
                    let hi = p.jumps.get(k).map_or(1.0, |j| j.angle / std::f64::consts::PI);
                    lines.push(format!(
                        "arc {k}: theta/pi in ({lo:.4}, {hi:.4})  sigma {}  eta {}",
                        a.sigma, a.eta
                    ));
                    if let Some(j) = p.jumps.get(k) {
                        let at = match (j.root_of_unity, j.at_jump) {
                            (Some((a, b)), Some((s, e))) => format!("  at exp(2 pi i {a}/{b}): sigma {s} eta {e}"),
                            _ => String::new(),
                        };
                        lines.push(format!(
                            "jump at theta/pi = {hi:.4}, multiplicity {}{at}",
                            j.multiplicity
                        ));
                    }
                    lo = hi;
                }
                lines.push(format!("at -1: sigma {} eta {}", p.at_minus_one.0, p.at_minus_one.1));
                lines.join("\n")
            })?;
        }
        Cmd::BranchedCover { n, input } => {
            let k = ctx.knot(&input)?;
            let r = match &k {
                KnotInput::Polynomial(p) => branched_cover_from_alexander(p, n)?,
                _ => branched_cover_homology(&k.seifert()?, n)?,
            };
            ctx.emit(&r, || {
                let b1 = r.betti1.map_or("unknown".to_string(), |b| b.to_string());
                format!(
                    "|H1| = {}\nb1 = {b1}\nrational homology sphere: {}",
                    r.h1_order, r.is_qhs
                )
            })?;
        }
        Cmd::N3(i) => {
            let b = n3(&ctx.knot(&i)?.alexander()?)?;
            ctx.emit(&json!({ "n3": b }), || b.to_string())?;
        }
        Cmd::N4 { g4, input } => {
            let k = ctx.knot(&input)?;
            let m = input.m.or(k.components()).unwrap_or(1);
            let b = n4(&k.alexander()?, g4, m as u64)?;
            ctx.emit(&json!({ "n4": b }), || b.to_string())?;
        }
        Cmd::Classify { n, knot, input } => {
            let v = monic_classification(&ctx.knot(&input)?.alexander()?, n, knot)?;
            ctx.emit(&v, || format!("{}: {}", if v.pass { "pass" } else { "fail" }, v.reason))?;
        }
        Cmd::SqpObstruct { n, g4, input } => {
            let s = ctx.knot(&input)?.seifert()?;
            match n {
                Some(n) => {
                    let v = sqp_lspace_obstruction(&s, n)?;
                    let fired = v.rules_out();
                    ctx.emit(&v, || match &v {
                        LSpaceVerdict::ConsistentWithLSpace => format!("n = {n}: consistent with an L-space cover"),
                        LSpaceVerdict::RulesOutLSpace(r) => {
                            let codes: Vec<&str> = r.iter().map(|x| x.code()).collect();
                            format!("n = {n}: ruled out ({})", codes.join(", "))
                        }
                    })?;
                    return Ok(fired);
                }
                None => {
                    let r = obstruction_report(&s, g4)?;
                    let fired = !r.ruled_out_covers.is_empty();
                    ctx.emit(&r, || {
                        let mut lines = vec![
                            format!("Delta = {}", r.alexander),
                            format!("sigma = {}  size = {}  definite = {}", r.sigma, r.size, r.definite),
                            format!("n3 = {}", r.n3),
                        ];
                        if let Some(b) = r.n4 {
                            lines.push(format!("n4 = {b}"));
                        }
                        for x in &r.ruled_out_covers {
                            let to = x.to.map_or("inf".to_string(), |t| t.to_string());
                            let codes: Vec<&str> = x.reasons.iter().map(|c| c.code()).collect();
                            lines.push(format!("ruled out n in [{}, {to}]: {}", x.from, codes.join(", ")));
                        }
                        lines.join("\n")
                    })?;
                    return Ok(fired);
                }
            }
        }
        Cmd::Pretzel {
            strands,
            sqp,
            orientation,
            signature,
            lspace,
        } => {
            let all = !(sqp || signature || lspace);
            let mut obj = serde_json::Map::new();
            let mut lines = Vec::new();
            if sqp || all {
                match orientation {
                    Some(o) => {
                        let [p, q, r] = strands[..] else {
                            return Err(Error::params("an orientation needs exactly three strands"));
                        };
                        let v = pretzel_link_is_sqp3(p, q, r, o)?;
                        obj.insert("sqp".into(), json!(v));
                        lines.push(if v { "SQP".to_string() } else { "not SQP".to_string() });
                    }
                    None => match pretzel_knot_is_sqp(&strands) {
                        Ok(v) => {
                            lines.push(v.to_string());
                            obj.insert("sqp".into(), serde_json::to_value(&v).expect("serializable"));
                        }
                        Err(e) if !all => return Err(e),
                        Err(_) => {}
                    },
                }
            }
            if signature || all {
                match pretzel_all_odd_signature(&strands) {
                    Ok(s) => {
                        lines.push(format!("sigma = {s}"));
                        obj.insert("sigma".into(), json!(s));
                    }
                    Err(e) if !all => return Err(e),
                    Err(_) => {}
                }
            }
            if lspace || all {
                let mut pos: Vec<i64> = strands.iter().filter(|p| **p > 0).copied().collect();
                let mut neg: Vec<i64> = strands.iter().filter(|p| **p < 0).map(|p| -p).collect();
                if pos.len() < neg.len() {
                    std::mem::swap(&mut pos, &mut neg);
                }
                pos.sort_unstable();
                neg.sort_unstable();
                match pretzel_sigma2_is_lspace(&pos, &neg) {
                    Ok(v) => {
                        lines.push(format!("double branched cover is an L-space: {v}"));
                        obj.insert("sigma2_lspace".into(), json!(v));
                    }
                    Err(e) if !all => return Err(e),
                    Err(_) => {}
                }
            }
            ctx.emit(&obj, || lines.join("\n"))?;
        }
        Cmd::Twobridge { fraction } => {
            let (p, q) = fraction
                .split_once('/')
                .and_then(|(a, b)| Some((a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)))
                .ok_or_else(|| Error::params(format!("expected p/q, got {fraction:?}")))?;
            let d = minkus_alexander(p, q)?;
            let s = two_bridge_seifert_matrix(p, q)?;
            let sigma = murasugi_signature(&s);
            let qe = if q % 2 == 0 { q } else { p - q };
            let cf = even_continued_fraction(p, qe)?;
            let genus1 = match cf[..] {
                [a, b] => Some(genus1_two_bridge(a / 2, -b / 2)?),
                _ => None,
            };
            let v = json!({ "p": p, "q": q, "alexander": d, "sigma": sigma,
                "even_continued_fraction": cf, "genus": cf.len() / 2, "genus_one": genus1 });
            ctx.emit(&v, || {
                let mut lines = vec![
                    format!("Delta = {d}"),
                    format!("sigma = {sigma}"),
                    format!("even continued fraction of {p}/{qe}: {cf:?}, genus {}", cf.len() / 2),
                ];
                if let Some(g) = &genus1 {
                    lines.push(format!("SQP: {}", g.is_sqp));
                    match g.n_bound {
                        Some(n) => lines.push(format!("n-fold covers are not L-spaces for n > {n}")),
                        None => lines.push("every cyclic branched cover is an L-space".into()),
                    }
                }
                lines.join("\n")
            })?;
        }
        Cmd::Kkm { k, m } => {
            let d = kkm_alexander(k, m)?;
            let r = kkm_root_location(k, m)?;
            ctx.emit(&json!({ "alexander": d, "roots": r }), || {
                format!(
                    "Delta = {d}\nroots with 2pi/3 < theta < pi: {}\nroots with pi/2 < theta < pi: {}",
                    r.roots_in_two_thirds_pi_to_pi, r.roots_in_half_pi_to_pi
                )
            })?;
        }
        Cmd::ChainDet { k1, k2, k3 } => {
            let c = TangleChain::new([k1, k2, k3])?;
            let d = chain_link_det(&c);
            ctx.emit(&json!({ "chain": c.to_string(), "det": d }), || d.to_string())?;
        }
        Cmd::Torus { p, q } => {
            let d = torus_alexander(p, q)?;
            ctx.emit(&json!({ "alexander": d }), || d.to_string())?;
        }
        Cmd::Corpus {
            cmd: CorpusCmd::Run { file },
        } => {
            let f = std::fs::File::open(&file).map_err(|e| Error::Io(format!("{file}: {e}")))?;
            let results = run_corpus(&read_corpus(f)?);
            ctx.emit(&results, || {
                results
                    .iter()
                    .map(|r| {
                        let name = r.name.as_deref().unwrap_or("?");
                        match (&r.error, &r.report) {
                            (Some(e), _) => format!("{name}: error: {e}"),
                            (None, Some(rep)) => {
                                let status = serde_json::to_value(&r.sqp_status).expect("serializable");
                                let mut s = format!(
                                    "{name}: sigma {} n3 {} sqp-status {}",
                                    rep.sigma,
                                    rep.n3,
                                    status.as_str().unwrap_or("?")
                                );
                                for c in &r.contradictions {
                                    s.push_str(&format!("\n  contradiction: {c}"));
                                }
                                s
                            }
                            (None, None) => format!("{name}: no result"),
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
        }
    }
    Ok(false)
}
