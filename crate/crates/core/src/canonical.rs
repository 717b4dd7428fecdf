//! The canonical module `ω` of a Cohen-Macaulay curve semigroup.
//!
//! A lattice point `w` lies in `ω` exactly when `−x ∉ S₁` and `−y ∉ S₂`: the
//! negated point can never be pushed into `S_a` along either axis. Minimal
//! generators then live in the finite box `[−F(S₁), a_n] × [−F(S₂), a_n]`,
//! since a point with `x > a_n` stays in `ω` after subtracting `(a_n,0)`.
//!
//! Nearly Gorensteinness is decided by covering each curve generator `g` as
//! `u + v` with `v` of minimal degree among the generators of `ω` and `u` in
//! `S − V(S)`.

use crate::curve::{Curve, Point, Sequence};
use crate::error::{Error, Result};

/// Minimal generators of `ω` and their degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalData {
    /// `V(S)`, ordered by first coordinate.
    pub gens: Vec<Point>,
    pub degrees: Vec<i64>,
    /// Generators of minimal degree.
    pub vmin: Vec<Point>,
    pub level: bool,
}

impl CanonicalData {
    pub fn min_degree(&self) -> i64 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }
}

/// One translate `V_min + u` of a movement, with the first coordinates it hits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translate {
    pub u: Point,
    pub covered: Vec<i64>,
}

/// A set of shifts whose translates of `V_min` cover every curve generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovementChain {
    /// Ordered by `π₁(u)` ascending.
    pub translates: Vec<Translate>,
    /// `π₁(u)` for each translate.
    pub movement: Vec<i64>,
    pub covers_all: bool,
}

fn omega_member(curve: &Curve, w: Point) -> bool {
    curve.lattice_contains(w) && !curve.s1().contains(-w.x) && !curve.s2().contains(-w.y)
}

pub fn omega_contains(curve: &Curve, w: Point) -> Result<bool> {
    curve.require_cm()?;
    Ok(omega_member(curve, w))
}

/// `V(S)` together with degrees and levelness; cached on the curve.
pub fn canonical_generators(curve: &Curve) -> Result<&CanonicalData> {
    curve.require_cm()?;
    Ok(curve.canonical.get_or_init(|| compute_generators(curve)))
}

fn compute_generators(curve: &Curve) -> CanonicalData {
    let an = curve.an();
    let x_lo = -curve.s1().frobenius();
    let y_lo = -curve.s2().frobenius();
    let mut gens = Vec::new();
    for x in x_lo..=an {
        // smallest y ≥ y_lo with x + y ≡ 0 (mod a_n)
        let mut y = y_lo + (-(x + y_lo)).rem_euclid(an);
        while y <= an {
            let w = Point::new(x, y);
            if omega_member(curve, w)
                && curve
                    .generators()
                    .iter()
                    .all(|&g| !omega_member(curve, w - g))
            {
                gens.push(w);
            }
            y += an;
        }
    }
    let degrees: Vec<i64> = gens
        .iter()
        .map(|&g| curve.degree(g).expect("generators lie on the lattice"))
        .collect();
    let min = degrees.iter().copied().min().unwrap_or(0);
    let vmin = gens
        .iter()
        .zip(&degrees)
        .filter(|&(_, &d)| d == min)
        .map(|(&g, _)| g)
        .collect::<Vec<_>>();
    let level = vmin.len() == gens.len();
    CanonicalData {
        gens,
        degrees,
        vmin,
        level,
    }
}

pub fn is_level(curve: &Curve) -> Result<bool> {
    Ok(canonical_generators(curve)?.level)
}

/// `u ∈ ℤS_a` with `u + v ∈ S_a` for every `v ∈ V(S)`.
pub fn in_s_minus_v(curve: &Curve, u: Point) -> Result<bool> {
    let data = canonical_generators(curve)?;
    Ok(curve.lattice_contains(u) && data.gens.iter().all(|&v| curve.contains(u + v)))
}

pub fn is_nearly_gorenstein(curve: &Curve) -> Result<bool> {
    let data = canonical_generators(curve)?;
    for &g in curve.generators() {
        let mut hit = false;
        for &v in &data.vmin {
            if in_s_minus_v(curve, g - v)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A minimum-size nearly Gorenstein movement, or `None` when the curve is not
/// nearly Gorenstein.
///
/// Candidate shifts are `g − v` for curve generators `g` and `v ∈ V_min`. Among
/// covers of minimum size the one with the lexicographically smallest list of
/// `π₁(u)` is returned.
pub fn find_movement(curve: &Curve) -> Result<Option<MovementChain>> {
    let data = canonical_generators(curve)?;
    let gens = curve.generators();
    if gens.len() > 128 {
        return Err(Error::TooManyGenerators(gens.len()));
    }

    let mut candidates: Vec<(Point, u128)> = Vec::new();
    for &g in gens {
        for &v in &data.vmin {
            let u = g - v;
            if candidates.iter().any(|&(c, _)| c == u) || !in_s_minus_v(curve, u)? {
                continue;
            }
            let mut mask = 0u128;
            for &w in &data.vmin {
                let idx = gens
                    .iter()
                    .position(|&h| h == u + w)
                    .expect("degree-one points of the curve are its generators");
                mask |= 1 << idx;
            }
            candidates.push((u, mask));
        }
    }
    // π₁ determines u: all candidates share the degree 1 − deg(V_min)
    candidates.sort_by_key(|&(u, _)| u.x);

    let full: u128 = if gens.len() == 128 {
        u128::MAX
    } else {
        (1u128 << gens.len()) - 1
    };
    let union = candidates.iter().fold(0, |acc, &(_, m)| acc | m);
    if union != full {
        return Ok(None);
    }

    for size in 1..=candidates.len() {
        let mut picked = Vec::with_capacity(size);
        if let Some(choice) = smallest_cover(&candidates, size, 0, 0, full, &mut picked) {
            let translates = choice
                .iter()
                .map(|&i| {
                    let u = candidates[i].0;
                    let mut covered: Vec<i64> = data.vmin.iter().map(|&v| (u + v).x).collect();
                    covered.sort_unstable();
                    Translate { u, covered }
                })
                .collect::<Vec<_>>();
            let movement = translates.iter().map(|t| t.u.x).collect();
            return Ok(Some(MovementChain {
                translates,
                movement,
                covers_all: true,
            }));
        }
    }
    unreachable!("the union of all candidates covers every generator")
}

/// First `size`-subset (in lexicographic index order) whose masks cover `full`.
fn smallest_cover(
    candidates: &[(Point, u128)],
    size: usize,
    start: usize,
    acc: u128,
    full: u128,
    picked: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if picked.len() == size {
        return (acc == full).then(|| picked.clone());
    }
    let remaining = size - picked.len();
    for i in start..=candidates.len().saturating_sub(remaining) {
        picked.push(i);
        if let Some(found) =
            smallest_cover(candidates, size, i + 1, acc | candidates[i].1, full, picked)
        {
            return Some(found);
        }
        picked.pop();
    }
    None
}

/// Renders a chain as `[0,6],7,13 --(+7)--> 0,6,[7,13]`.
///
/// Each translate lists `0,a₁,…,a_n` with covered entries wrapped in brackets
/// as maximal runs; arrows carry the difference of consecutive `π₁(u)`.
pub fn render_movement(chain: &MovementChain, seq: &Sequence) -> String {
    let mut entries = vec![0];
    entries.extend_from_slice(seq.values());
    let segments: Vec<String> = chain
        .translates
        .iter()
        .map(|t| render_segment(&entries, &t.covered))
        .collect();
    let mut out = String::new();
    for (i, seg) in segments.iter().enumerate() {
        if i > 0 {
            let d = chain.movement[i] - chain.movement[i - 1];
            out.push_str(&format!(" --({d:+})--> "));
        }
        out.push_str(seg);
    }
    out
}

fn render_segment(entries: &[i64], covered: &[i64]) -> String {
    let mut out = String::new();
    let mut open = false;
    for (i, &e) in entries.iter().enumerate() {
        let hit = covered.contains(&e);
        if i > 0 {
            if open && !hit {
                out.push(']');
                open = false;
            }
            out.push(',');
        }
        if hit && !open {
            out.push('[');
            open = true;
        }
        out.push_str(&e.to_string());
    }
    if open {
        out.push(']');
    }
    out
}
