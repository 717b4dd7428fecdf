//! Brute-force reference implementations.
//!
//! These share no algorithmic path with the production code they check:
//! semigroup membership comes from a fresh boolean sieve, curve membership
//! from multiset enumeration, and `ω` membership from the defining
//! axis-shift condition. [`cross_check`] runs them against a curve.

use std::collections::{BTreeSet, HashSet};

use crate::canonical;
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};
use crate::numsg::NumericalSemigroup;

/// Largest degree accepted by [`brute_curve_contains`].
pub const BRUTE_DEGREE_LIMIT: i64 = 8;

/// Largest `a_n` accepted by [`canonical_generators_layered`].
pub const LAYERED_AN_LIMIT: i64 = 15;

/// Largest Frobenius number accepted by [`pf_brute`].
pub const PF_FROBENIUS_LIMIT: i64 = 10_000;

/// Membership by enumerating all multisets of exactly `degree(p)` generators.
pub fn brute_curve_contains(curve: &Curve, p: Point) -> Result<bool> {
    let Some(d) = curve.degree(p) else {
        return Ok(false);
    };
    if d < 0 {
        return Ok(false);
    }
    if d > BRUTE_DEGREE_LIMIT {
        return Err(Error::DegreeTooLargeForOracle(d));
    }
    // generators are sorted by first coordinate, so once one overshoots, all
    // later ones do too
    fn go(gens: &[Point], start: usize, left: i64, acc: Point, target: Point) -> bool {
        if left == 0 {
            return acc == target;
        }
        for i in start..gens.len() {
            if acc.x + left * gens[i].x > target.x {
                break;
            }
            if go(gens, i, left - 1, acc + gens[i], target) {
                return true;
            }
        }
        false
    }
    Ok(go(curve.generators(), 0, d, Point::new(0, 0), p))
}

/// `−w ∈ C₁ ∩ C₂` checked directly: `−w + m·f ∉ S_a` for both axis
/// generators `f` and all `m ≤ m_bound`.
///
/// The default bound is `(F(S₁)+F(S₂))/a_n + |deg w| + 2`.
pub fn omega_contains_definitional(curve: &Curve, w: Point, m_bound: Option<i64>) -> Result<bool> {
    if !curve.is_cm()? {
        return Err(Error::NotCohenMacaulay);
    }
    let Some(d) = curve.degree(w) else {
        return Ok(false);
    };
    let an = curve.an();
    let m_bound =
        m_bound.unwrap_or((curve.s1().frobenius() + curve.s2().frobenius()) / an + d.abs() + 2);
    let z = -w;
    for f in [curve.axis_x(), curve.axis_y()] {
        let mut q = z;
        for _ in 0..=m_bound {
            if curve.contains(q) {
                return Ok(false);
            }
            q = q + f;
        }
    }
    Ok(true)
}

/// Minimal generators of `ω` found layer by layer in degree.
///
/// A member of degree `d` is generated when subtracting some curve generator
/// lands on a member of degree `d − 1`. Layers run from the least possible
/// degree through degree 4; generators must all have degree at most 2.
pub fn canonical_generators_layered(curve: &Curve) -> Result<BTreeSet<Point>> {
    if !curve.is_cm()? {
        return Err(Error::NotCohenMacaulay);
    }
    let an = curve.an();
    if an > LAYERED_AN_LIMIT {
        return Err(Error::OracleRangeExceeded(format!(
            "layered generators need a_n <= {LAYERED_AN_LIMIT}, got {an}"
        )));
    }
    let f1 = curve.s1().frobenius();
    let f2 = curve.s2().frobenius();
    let lowest = (-(f1 + f2)).div_euclid(an);
    let member = |w: Point| omega_contains_definitional(curve, w, None);

    let layer = |d: i64| -> Result<HashSet<Point>> {
        let total = d * an;
        // −x ∉ S₁ forces x ≥ −F₁, likewise y ≥ −F₂; widen by a_n on each side
        let mut out = HashSet::new();
        for x in (-f1 - an)..=(total + f2 + an) {
            let w = Point::new(x, total - x);
            if member(w)? {
                out.insert(w);
            }
        }
        Ok(out)
    };

    let mut below = layer(lowest - 1)?;
    if !below.is_empty() {
        return Err(Error::OracleRangeExceeded(format!(
            "omega has members below degree {lowest}"
        )));
    }
    let mut gens = BTreeSet::new();
    for d in lowest..=4 {
        let current = layer(d)?;
        for &w in &current {
            let generated = curve.generators().iter().any(|&g| below.contains(&(w - g)));
            if !generated {
                if d > 2 {
                    return Err(Error::OracleRangeExceeded(format!(
                        "new generator {w} in degree {d}"
                    )));
                }
                gens.insert(w);
            }
        }
        below = current;
    }
    Ok(gens)
}

/// Membership table of `⟨gens⟩` on `0..=limit` by the plain coin sieve.
pub fn sieve_members(gens: &[i64], limit: usize) -> Vec<bool> {
    let mut table = vec![false; limit + 1];
    table[0] = true;
    for i in 1..=limit {
        table[i] = gens
            .iter()
            .any(|&g| g as usize <= i && table[i - g as usize]);
    }
    table
}

/// Pseudo-Frobenius numbers from the definition: gaps `x` with `x + s ∈ S`
/// for every nonzero `s ∈ S` up to the conductor.
pub fn pf_brute(s: &NumericalSemigroup) -> Result<Vec<i64>> {
    let gens = s.generators();
    // F < a₁·a_n for any gcd-1 generating set
    let limit = (gens[0] * gens[gens.len() - 1]) as usize;
    if limit > 100 * PF_FROBENIUS_LIMIT as usize {
        return Err(Error::OracleRangeExceeded(format!(
            "pf_brute sieve limit {limit} too large"
        )));
    }
    let table = sieve_members(gens, 2 * limit + 2);
    let frobenius = (0..=limit)
        .rev()
        .find(|&i| !table[i])
        .map_or(-1, |i| i as i64);
    if frobenius > PF_FROBENIUS_LIMIT {
        return Err(Error::OracleRangeExceeded(format!(
            "Frobenius number {frobenius} above {PF_FROBENIUS_LIMIT}"
        )));
    }
    let conductor = (frobenius + 1) as usize;
    Ok((0..conductor)
        .filter(|&x| !table[x])
        .filter(|&x| (1..=conductor).all(|s| !table[s] || table[x + s]))
        .map(|x| x as i64)
        .collect())
}

/// A disagreement between a production routine and its oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub detail: String,
}

/// Re-derives the curve's invariants through the oracles and reports every
/// disagreement. Checks that are out of an oracle's range are skipped.
pub fn cross_check(curve: &Curve) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    let mut fail = |check: &'static str, detail: String| out.push(Mismatch { check, detail });

    for (name, s) in [("pf S1", curve.s1()), ("pf S2", curve.s2())] {
        if let Ok(pf) = pf_brute(s) {
            if pf != s.pseudo_frobenius() {
                fail(name, format!("oracle {pf:?} vs {:?}", s.pseudo_frobenius()));
            }
            let symmetric = pf.len() == 1 && pf[0] == s.frobenius();
            if s.frobenius() >= 0 && symmetric != s.is_symmetric() {
                fail(
                    name,
                    "symmetry disagrees with the pseudo-Frobenius set".into(),
                );
            }
        }
    }

    let top = if curve.an() <= 15 { 4 } else { 2 };
    for d in 0..=top {
        let an = curve.an();
        for x in 0..=d * an {
            let p = Point::new(x, d * an - x);
            if brute_curve_contains(curve, p)? != curve.contains(p) {
                fail("membership", format!("{p}"));
            }
        }
    }

    let table = curve.apery()?;
    if !table.good {
        if let Some(w) = curve.find_non_cm_witness(curve.witness_degree_bound()) {
            if !curve.is_non_cm_witness(w) {
                fail("witness", format!("{w} fails the witness conditions"));
            }
        }
        return Ok(out);
    }
    if let Some(w) = curve.find_non_cm_witness(curve.witness_degree_bound()) {
        fail("witness", format!("Cohen-Macaulay curve has witness {w}"));
    }

    let data = canonical::canonical_generators(curve)?;
    let cm_type = curve.cm_type()?;
    if data.gens.len() != cm_type {
        fail(
            "type",
            format!("|V(S)| = {} but type {}", data.gens.len(), cm_type),
        );
    }
    if curve.is_gorenstein_symmetry()? != (cm_type == 1) {
        fail("gorenstein", "symmetry test disagrees with type".into());
    }
    for &g in &data.gens {
        if !omega_contains_definitional(curve, g, None)? {
            fail("omega", format!("generator {g} not in omega"));
        }
    }
    if curve.an() <= LAYERED_AN_LIMIT {
        let layered = canonical_generators_layered(curve)?;
        let boxed: BTreeSet<Point> = data.gens.iter().copied().collect();
        if layered != boxed {
            fail(
                "generators",
                format!("layered {layered:?} vs box {boxed:?}"),
            );
        }
    }
    let ng = canonical::is_nearly_gorenstein(curve)?;
    if ng != canonical::find_movement(curve)?.is_some() {
        fail(
            "movement",
            "movement existence disagrees with NG test".into(),
        );
    }
    Ok(out)
}
