//! Braid words, their closures and Seifert matrices of the closures.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;

/// `s_i^{sign}`, or the band `(s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^{-1}`
/// raised to `sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Letter {
    Sigma { i: usize, sign: i8 },
    Band { i: usize, j: usize, sign: i8 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<Letter>,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let (base, sign) = match *l {
                    Letter::Sigma { i, sign } => (format!("s{i}"), sign),
                    Letter::Band { i, j, sign } => (format!("b({i},{j})"), sign),
                };
                if sign < 0 {
                    format!("{base}^-1")
                } else {
                    base
                }
            })
            .collect();
        f.write_str(&toks.join(" "))
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(start, "expected an integer"))
    }

    fn index(&mut self) -> Result<(usize, usize)> {
        let at = self.pos;
        let v = self.int()?;
        if v < 1 {
            return Err(Error::parse(at, format!("generator index {v} is not positive")));
        }
        Ok((v as usize, at))
    }
}

/// Parses whitespace separated tokens `s3`, `s3^-1`, `s1^4`, `b(1,4)`, or a
/// compact list `[1,-2,1]` of signed generator indices. With `strands` unset
/// the strand count is one more than the largest index, and at least two.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut letters = Vec::new();
    // (letter, position) for range errors
    let mut spans = Vec::new();
    lx.skip_ws();
    if lx.peek() == Some(b'[') {
        lx.pos += 1;
        lx.skip_ws();
        if lx.peek() != Some(b']') {
            loop {
                lx.skip_ws();
                let at = lx.pos;
                let v = lx.int()?;
                if v == 0 {
                    return Err(Error::parse(at, "generator index 0"));
                }
                letters.push(Letter::Sigma {
                    i: v.unsigned_abs() as usize,
                    sign: v.signum() as i8,
                });
                spans.push(at);
                lx.skip_ws();
                match lx.peek() {
                    Some(b',') => lx.pos += 1,
                    _ => break,
                }
            }
        }
        lx.expect(b']')?;
        lx.skip_ws();
    } else {
        while lx.pos < lx.src.len() {
            let at = lx.pos;
            let letter = match lx.peek() {
                Some(b's') => {
                    lx.pos += 1;
                    let (i, _) = lx.index()?;
                    Letter::Sigma { i, sign: 1 }
                }
                Some(b'b') => {
                    lx.pos += 1;
                    lx.expect(b'(')?;
                    lx.skip_ws();
                    let (i, _) = lx.index()?;
                    lx.skip_ws();
                    lx.expect(b',')?;
                    lx.skip_ws();
                    let (j, jat) = lx.index()?;
                    lx.skip_ws();
                    lx.expect(b')')?;
                    if j <= i {
                        return Err(Error::parse(jat, format!("band ({i},{j}) needs i < j")));
                    }
                    Letter::Band { i, j, sign: 1 }
                }
                _ => return Err(Error::parse(at, "expected 's<i>', 'b(i,j)' or '['")),
            };
            let mut power = 1i64;
            if lx.peek() == Some(b'^') {
                lx.pos += 1;
                let eat = lx.pos;
                power = lx.int()?;
                if power == 0 {
                    return Err(Error::parse(eat, "zero exponent"));
                }
            }
            if lx.peek().is_some_and(|c| !c.is_ascii_whitespace()) {
                return Err(Error::parse(lx.pos, "expected whitespace between tokens"));
            }
            let letter = match letter {
                Letter::Sigma { i, .. } => Letter::Sigma {
                    i,
                    sign: power.signum() as i8,
                },
                Letter::Band { i, j, .. } => Letter::Band {
                    i,
                    j,
                    sign: power.signum() as i8,
                },
            };
            for _ in 0..power.unsigned_abs() {
                letters.push(letter);
                spans.push(at);
            }
            lx.skip_ws();
        }
    }
    if lx.pos != lx.src.len() {
        return Err(Error::parse(lx.pos, "trailing input"));
    }
    let top = |l: &Letter| match *l {
        Letter::Sigma { i, .. } => i + 1,
        Letter::Band { j, .. } => j,
    };
    let needed = letters.iter().map(top).max().unwrap_or(2).max(2);
    let strands = match strands {
        None => needed,
        Some(s) if s < 2 => return Err(Error::params("a braid needs at least two strands")),
        Some(s) => {
            if let Some(k) = letters.iter().position(|l| top(l) > s) {
                return Err(Error::parse(spans[k], format!("index out of range for {s} strands")));
            }
            s
        }
    };
    Ok(BraidWord { strands, letters })
}

impl BraidWord {
    /// Standard generators as signed indices, bands expanded.
    pub fn expand(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for l in &self.letters {
            match *l {
                Letter::Sigma { i, sign } => out.push(sign as i64 * i as i64),
                Letter::Band { i, j, sign } => {
                    out.extend((i..j - 1).map(|k| k as i64));
                    out.push(sign as i64 * (j - 1) as i64);
                    out.extend((i..j - 1).rev().map(|k| -(k as i64)));
                }
            }
        }
        out
    }

    /// Permutation taking the strand at position `k` at the bottom to its top position.
    fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for g in self.expand() {
            let i = g.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        pos
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut k = s;
                while !seen[k] {
                    seen[k] = true;
                    k = perm[k];
                }
            }
        }
        cycles
    }
}

/// Surface made of one disk per strand and one half-twisted band per letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BennequinData {
    pub strands: usize,
    pub bands: usize,
    pub euler: i64,
    pub components: usize,
    pub surface_components: usize,
    pub genus: i64,
    /// `g + (m - mu)`
    pub big_genus: i64,
}

/// Euler characteristic and genus of the band surface of a positive band word.
/// The surface is quasipositive, so its genus is also the four-genus.
pub fn bennequin_surface_data(w: &BraidWord) -> Result<BennequinData> {
    let mut parent: Vec<usize> = (0..w.strands).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for l in &w.letters {
        let (i, j) = match *l {
            Letter::Sigma { i, sign: 1 } => (i, i + 1),
            Letter::Band { i, j, sign: 1 } => (i, j),
            _ => return Err(Error::params("the band surface needs positive band letters only")),
        };
        let (a, b) = (find(&mut parent, i - 1), find(&mut parent, j - 1));
        parent[a] = b;
    }
    let mu = (0..w.strands).filter(|&k| find(&mut parent, k) == k).count();
    let m = w.closure_components();
    let euler = w.strands as i64 - w.letters.len() as i64;
    let genus = (2 * mu as i64 - euler - m as i64) / 2;
    Ok(BennequinData {
        strands: w.strands,
        bands: w.letters.len(),
        euler,
        components: m,
        surface_components: mu,
        genus,
        big_genus: genus + m as i64 - mu as i64,
    })
}

/// Seifert matrix of the surface given by Seifert's algorithm on the closed
/// braid diagram: one disk per strand and a half-twisted band per crossing.
/// The basis consists of the loops through consecutive crossings on the same
/// pair of strands. Positive crossings give negative signatures, so the
/// closure of `s1^3` has signature `-2`.
pub fn braid_seifert_matrix(w: &BraidWord) -> Result<SeifertMatrix> {
    let word = w.expand();
    let mut cols: Vec<Vec<(usize, i64)>> = vec![Vec::new(); w.strands];
    for (k, &g) in word.iter().enumerate() {
        cols[g.unsigned_abs() as usize].push((k, g.signum()));
    }
    if let Some(i) = (1..w.strands).find(|&i| cols[i].is_empty()) {
        return Err(Error::params(format!(
            "the closed braid diagram splits into strands 1..={i} and {}..={}",
            i + 1,
            w.strands
        )));
    }
    // (column, first crossing, second crossing, sign of first, sign of second)
    let mut loops = Vec::new();
    for (i, c) in cols.iter().enumerate() {
        for pair in c.windows(2) {
            loops.push((i, pair[0].0, pair[1].0, pair[0].1, pair[1].1));
        }
    }
    let n = loops.len();
    let mut s = vec![vec![0i64; n]; n];
    for (x, g) in loops.iter().enumerate() {
        s[x][x] = -(g.3 + g.4) / 2;
    }
    for (x, g) in loops.iter().enumerate() {
        for (y, h) in loops.iter().enumerate() {
            if x == y {
                continue;
            }
            if g.0 == h.0 && g.2 == h.1 {
                if g.4 == 1 {
                    s[x][y] = 1;
                } else {
                    s[y][x] = -1;
                }
            }
            if h.0 == g.0 + 1 {
                let (a, b, c, d) = (g.1, g.2, h.1, h.2);
                if a < c && c < b && b < d {
                    s[x][y] = 1;
                    s[y][x] = 0;
                } else if c < a && a < d && d < b {
                    s[x][y] = -1;
                    s[y][x] = 0;
                }
            }
        }
    }
    let entries = s
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    SeifertMatrix::new(entries, w.closure_components())
}

/// `(s1 s2 ... s_{p-1})^q`, whose closure is the torus link `T(p, q)`.
pub fn torus_braid(p: usize, q: usize) -> BraidWord {
    let letters = (0..q)
        .flat_map(|_| (1..p).map(|i| Letter::Sigma { i, sign: 1 }))
        .collect();
    BraidWord { strands: p, letters }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::torus_alexander;
    use crate::polyalg::{cyclotomic_laurent, LaurentPoly};
    use crate::seifert::murasugi_signature;

    fn b(s: &str) -> BraidWord {
        parse_braid(s, None).unwrap()
    }

    #[test]
    fn parsing() {
        let w = parse_braid("[1,1,1]", Some(2)).unwrap();
        assert_eq!(w.expand(), vec![1, 1, 1]);
        let w = parse_braid("s1 s2^-1 s1 s2^-1", Some(3)).unwrap();
        assert_eq!(w.expand(), vec![1, -2, 1, -2]);
        let w = parse_braid("b(1,3) b(1,2)", Some(3)).unwrap();
        assert_eq!(w.expand(), vec![1, 2, -1, 1]);
        assert_eq!(b("s1^3").expand(), vec![1, 1, 1]);
        assert_eq!(b("s2^-2").expand(), vec![-2, -2]);
        assert_eq!(b("[ ]").letters.len(), 0);
        assert_eq!(b("  s1   s3 ").strands, 4);
        assert_eq!(b("b(1,4)^-1").expand(), vec![1, 2, -3, -2, -1]);
        assert_eq!(b(&b("b(1,3) s2^-1").to_string()), b("b(1,3) s2^-1"));
    }

    #[test]
    fn parse_errors() {
        let pos = |s: &str, n: Option<usize>| match parse_braid(s, n) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("s1 x2", None), 3);
        assert_eq!(pos("s1 s3", Some(3)), 3);
        assert_eq!(pos("[1,0]", None), 3);
        assert_eq!(pos("b(3,1)", None), 4);
        assert_eq!(pos("s1s2", None), 2);
        assert_eq!(pos("[1,2", None), 4);
        assert_eq!(pos("s1^0", None), 3);
        assert_eq!(pos("s", None), 1);
    }

    #[test]
    fn components() {
        assert_eq!(parse_braid("[1,1,1]", Some(2)).unwrap().closure_components(), 1);
        assert_eq!(parse_braid("[]", Some(3)).unwrap().closure_components(), 3);
        assert_eq!(b("s1 s2").closure_components(), 1);
        assert_eq!(b("s1^2").closure_components(), 2);
        assert_eq!(b("b(1,3) b(1,2) b(2,3)").closure_components(), 2);
    }

    #[test]
    fn band_surfaces() {
        let d = bennequin_surface_data(&b("b(1,2)^3")).unwrap();
        assert_eq!((d.euler, d.components, d.genus), (-1, 1, 1));
        let d = bennequin_surface_data(&b("b(1,2) b(2,3)")).unwrap();
        assert_eq!((d.euler, d.components, d.genus), (1, 1, 0));
        let d = bennequin_surface_data(&b("b(1,3) b(1,2) b(2,3)")).unwrap();
        assert_eq!((d.euler, d.components, d.big_genus), (0, 2, 1));
        assert!(bennequin_surface_data(&b("s1 s2^-1")).is_err());
    }

    #[test]
    fn seifert_matrices() {
        let s = braid_seifert_matrix(&b("s1^3")).unwrap();
        assert_eq!(s.alexander(), cyclotomic_laurent(6));
        assert_eq!(murasugi_signature(&s), -2);
        let s = braid_seifert_matrix(&b("s1^5")).unwrap();
        assert_eq!(s.alexander(), cyclotomic_laurent(10));
        let s = braid_seifert_matrix(&b("s1 s2^-1 s1 s2^-1")).unwrap();
        assert_eq!(s.alexander(), LaurentPoly::from_i64(0, &[1, -3, 1]));
        assert_eq!(murasugi_signature(&s), 0);
        for (p, q, sigma) in [(3, 4, -6), (3, 5, -8), (4, 5, -8), (3, 7, -8)] {
            let s = braid_seifert_matrix(&torus_braid(p, q)).unwrap();
            assert_eq!(s.size(), (p - 1) * (q - 1));
            assert_eq!(s.alexander(), torus_alexander(p as u64, q as u64).unwrap());
            assert_eq!(murasugi_signature(&s), sigma);
        }
        let err = braid_seifert_matrix(&parse_braid("s1 s3", Some(4)).unwrap()).unwrap_err();
        assert!(err.to_string().contains("splits"));
        let hopf = braid_seifert_matrix(&b("s1^2")).unwrap();
        assert_eq!(hopf.components, 2);
        assert_eq!(
            hopf.alexander(),
            LaurentPoly::from_i64(0, &[-1, 1]).normalize().unwrap().0
        );
    }
}
