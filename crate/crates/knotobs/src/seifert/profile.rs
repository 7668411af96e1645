//! The signature function on the upper half circle, arc by arc.

use std::cmp::Ordering;

use serde::Serialize;

use super::matrix::SeifertMatrix;
use super::signature::{inertia_at_rational_point, reduced_alexander, signature_at_root_of_unity};
use crate::error::{Error, Result};
use crate::polyalg::circle::round_angle;
use crate::polyalg::cyclotomic::{cyclotomic, euler_phi};
use crate::polyalg::{
    isolate_circle_roots, AlgebraicCosineBoundary, CircleRootProfile, LaurentPoly, RationalCirclePoint,
};

/// Largest root-of-unity order checked when evaluating at jumps.
pub const DEFAULT_JUMP_ORDER_BOUND: u64 = 60;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcValue {
    pub sample: RationalCirclePoint,
    pub sigma: i64,
    pub eta: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Jump {
    pub angle: f64,
    pub multiplicity: usize,
    /// `(j, n)` when the jump sits at `exp(2 pi i j / n)`.
    pub root_of_unity: Option<(u64, u64)>,
    pub at_jump: Option<(i64, usize)>,
}

/// Values of `sigma` and `eta` on the arcs of the upper half circle cut out
/// by the circle roots of the Alexander polynomial, in increasing angle.
/// Arc `k` lies between jumps `k - 1` and `k`; the last arc ends at `-1`.
#[derive(Clone, Debug, Serialize)]
pub struct SignatureProfile {
    pub size: usize,
    /// Alexander polynomial of the form with its common kernel removed.
    pub alexander: LaurentPoly,
    pub kernel_dim: usize,
    #[serde(skip)]
    pub roots: CircleRootProfile,
    pub jumps: Vec<Jump>,
    pub arcs: Vec<ArcValue>,
    /// `(sigma, eta)` at `-1`.
    pub at_minus_one: (i64, usize),
}

pub fn signature_profile(s: &SeifertMatrix) -> Result<SignatureProfile> {
    signature_profile_with(s, 1, DEFAULT_JUMP_ORDER_BOUND).map(|(p, _)| p)
}

/// Profile with `per_arc` samples in every arc; the extra samples are
/// returned per arc alongside the profile for consistency checks.
pub fn signature_profile_with(
    s: &SeifertMatrix,
    per_arc: usize,
    jump_bound: u64,
) -> Result<(SignatureProfile, Vec<Vec<ArcValue>>)> {
    let (alexander, kernel_dim) = reduced_alexander(s)?;
    let roots = isolate_circle_roots(&alexander)?;
    let value = |p: RationalCirclePoint| {
        let i = inertia_at_rational_point(s, &p);
        ArcValue {
            sample: p,
            sigma: i.signature(),
            eta: i.n_zero,
        }
    };
    let samples: Vec<Vec<ArcValue>> = roots
        .arc_samples(&[], per_arc.max(1))
        .into_iter()
        .map(|pts| pts.into_iter().map(value).collect())
        .collect();
    let arcs = samples.iter().map(|v| v[0].clone()).collect();
    let unity = roots_of_unity_among(&alexander, &roots, jump_bound)?;
    let jumps = roots
        .circle_roots
        .iter()
        .zip(unity)
        .map(|(r, ru)| Jump {
            angle: round_angle(r.angle()),
            multiplicity: r.multiplicity,
            root_of_unity: ru,
            at_jump: ru.map(|(j, n)| signature_at_root_of_unity(s, n, j)),
        })
        .collect();
    let m = value(RationalCirclePoint::minus_one());
    let profile = SignatureProfile {
        size: s.size(),
        alexander,
        kernel_dim,
        roots,
        jumps,
        arcs,
        at_minus_one: (m.sigma, m.eta),
    };
    Ok((profile, samples))
}

/// For each circle root, the root of unity it equals, if its order is at most `bound`.
fn roots_of_unity_among(p: &LaurentPoly, roots: &CircleRootProfile, bound: u64) -> Result<Vec<Option<(u64, u64)>>> {
    let mut out = vec![None; roots.circle_roots.len()];
    if roots.circle_roots.is_empty() {
        return Ok(out);
    }
    let f = p.normalized_poly()?;
    for k in 3..=bound {
        if euler_phi(k as usize) > f.deg() || f.div_exact(&cyclotomic(k as usize)).is_none() {
            continue;
        }
        for j in 1..=(k - 1) / 2 {
            if num_integer::gcd(j, k) != 1 {
                continue;
            }
            let b = AlgebraicCosineBoundary::new(j as i64, k);
            if let Some(i) = roots
                .circle_roots
                .iter()
                .position(|r| r.x.cmp_exact(&b.value) == Ordering::Equal)
            {
                out[i] = Some((j, k));
            }
        }
    }
    Ok(out)
}

impl SignatureProfile {
    /// Number of arcs, one more than the number of jumps.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Index of the arc containing `exp(2 pi i j / n)`, after folding to the
    /// upper half circle; `None` at `1`. Errors when the angle is a jump.
    pub fn arc_index(&self, j: i64, n: u64) -> Result<Option<usize>> {
        let b = AlgebraicCosineBoundary::new(j, n);
        if b.turn_fraction().0 == 0 {
            return Ok(None);
        }
        let mut k = 0;
        for r in &self.roots.circle_roots {
            match r.x.cmp_exact(&b.value) {
                Ordering::Greater => k += 1,
                Ordering::Equal => return Err(Error::JumpPoint),
                Ordering::Less => break,
            }
        }
        if b.n == 2 && self.roots.root_at_minus_one > 0 {
            return Err(Error::JumpPoint);
        }
        Ok(Some(k))
    }

    /// Arc value of `sigma` at `exp(2 pi i j / n)`; zero at `1`.
    pub fn sigma_at(&self, j: i64, n: u64) -> Result<i64> {
        Ok(self.arc_index(j, n)?.map_or(0, |k| self.arcs[k].sigma))
    }

    /// Largest `|sigma|` over all arcs.
    pub fn max_abs_sigma(&self) -> i64 {
        self.arcs.iter().map(|a| a.sigma.abs()).max().unwrap_or(0)
    }
}
