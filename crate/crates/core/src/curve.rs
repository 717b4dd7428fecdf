//! The homogeneous affine semigroup `S_a ⊆ ℕ²` of a projective monomial curve.
//!
//! For `a = a₁ < … < a_n` with gcd 1 the semigroup is generated by
//! `(0,a_n)`, `(aᵢ, a_n−aᵢ)` and `(a_n,0)`. Every generator has coordinate sum
//! `a_n`, so a point `(x,y)` of `S_a` has degree `(x+y)/a_n` and lies in `S_a`
//! exactly when `x` is a sum of `degree` values drawn from `{0,a₁,…,a_n}`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use crate::canonical::CanonicalData;
use crate::error::{Error, Result};
use crate::numsg::{validate_generators, NumericalSemigroup};

/// A lattice point of `ℤ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

/// A validated sequence `a₁ < … < a_n`, `n ≥ 2`, with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence(Vec<i64>);

impl Sequence {
    pub fn new(values: &[i64]) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooShort(values.len()));
        }
        validate_generators(values)?;
        Ok(Self(values.to_vec()))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The largest value `a_n`.
    pub fn last(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    pub fn codimension(&self) -> usize {
        self.0.len() - 1
    }

    /// `(a_n−a_{n−1}, …, a_n−a₁, a_n)`, whose curve is isomorphic to this one.
    pub fn dual(&self) -> Sequence {
        let an = self.last();
        let mut values: Vec<i64> = self.0[..self.0.len() - 1]
            .iter()
            .rev()
            .map(|&a| an - a)
            .collect();
        values.push(an);
        Sequence(values)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl TryFrom<Vec<i64>> for Sequence {
    type Error = Error;
    fn try_from(values: Vec<i64>) -> Result<Self> {
        Sequence::new(&values)
    }
}

/// The Apéry set of `S_a` with respect to `a_n`.
///
/// `points[0] = (0,a_n)`, `points[a_n] = (a_n,0)`, and the points in between
/// are the `(νᵢ,μᵢ)` ordered by `ν` ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    pub points: Vec<Point>,
    pub good: bool,
    pub b_tilde: Vec<Point>,
}

impl AperyTable {
    /// The `a_n − 1` points off the axes, ordered by first coordinate.
    pub fn inner(&self) -> &[Point] {
        &self.points[1..self.points.len() - 1]
    }
}

/// Per-degree reachable first coordinates, stored as bitsets.
#[derive(Debug, Default)]
struct ReachCache {
    levels: Vec<Vec<u64>>,
}

impl ReachCache {
    fn test(bits: &[u64], x: usize) -> bool {
        bits.get(x / 64).is_some_and(|w| w >> (x % 64) & 1 == 1)
    }

    /// Extends the cache so that `levels[degree]` exists.
    fn fill(&mut self, degree: usize, steps: &[usize], an: usize) {
        if self.levels.is_empty() {
            self.levels.push(vec![1]);
        }
        while self.levels.len() <= degree {
            let d = self.levels.len();
            let prev = &self.levels[d - 1];
            let width = d * an + 1;
            let mut next = vec![0u64; width.div_ceil(64)];
            for &shift in steps {
                or_shifted(&mut next, prev, shift);
            }
            self.levels.push(next);
        }
    }
}

/// `dst |= src << shift`, truncating at the length of `dst`.
fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let words = shift / 64;
    let bits = shift % 64;
    for (i, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let j = i + words;
        if j < dst.len() {
            dst[j] |= w << bits;
        }
        if bits != 0 && j + 1 < dst.len() {
            dst[j + 1] |= w >> (64 - bits);
        }
    }
}

/// The projective monomial curve semigroup `S_a` of a sequence.
#[derive(Debug)]
pub struct Curve {
    seq: Sequence,
    generators: Vec<Point>,
    s1: NumericalSemigroup,
    s2: NumericalSemigroup,
    /// `{0, a₁, …, a_n}` as bit shifts for the membership recurrence.
    steps: Vec<usize>,
    reach: RwLock<ReachCache>,
    apery: OnceLock<AperyTable>,
    pub(crate) canonical: OnceLock<CanonicalData>,
}

impl Curve {
    pub fn new(seq: Sequence) -> Result<Self> {
        let a = seq.values();
        let an = seq.last();
        let mut generators = Vec::with_capacity(a.len() + 1);
        generators.push(Point::new(0, an));
        generators.extend(a.iter().map(|&ai| Point::new(ai, an - ai)));
        let s1 = NumericalSemigroup::new(a)?;
        let s2 = NumericalSemigroup::new(seq.dual().values())?;
        let mut steps = vec![0usize];
        steps.extend(a.iter().map(|&ai| ai as usize));
        Ok(Self {
            seq,
            generators,
            s1,
            s2,
            steps,
            reach: RwLock::new(ReachCache::default()),
            apery: OnceLock::new(),
            canonical: OnceLock::new(),
        })
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        Curve::new(Sequence::new(values)?)
    }

    pub fn sequence(&self) -> &Sequence {
        &self.seq
    }

    pub fn an(&self) -> i64 {
        self.seq.last()
    }

    /// The `n+1` degree-one generators, from `(0,a_n)` to `(a_n,0)`.
    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// First projection `S₁ = ⟨a₁,…,a_n⟩`.
    pub fn s1(&self) -> &NumericalSemigroup {
        &self.s1
    }

    /// Second projection `S₂ = ⟨a_n−a_{n−1},…,a_n−a₁,a_n⟩`.
    pub fn s2(&self) -> &NumericalSemigroup {
        &self.s2
    }

    pub fn axis_x(&self) -> Point {
        Point::new(self.an(), 0)
    }

    pub fn axis_y(&self) -> Point {
        Point::new(0, self.an())
    }

    /// `(x+y)/a_n`, or `None` when the point is off the lattice.
    pub fn degree(&self, p: Point) -> Option<i64> {
        let s = p.x + p.y;
        let an = self.an();
        (s.rem_euclid(an) == 0).then(|| s.div_euclid(an))
    }

    /// Membership in `ℤS_a = {(x,y) : x+y ≡ 0 mod a_n}`.
    pub fn lattice_contains(&self, p: Point) -> bool {
        self.degree(p).is_some()
    }

    pub fn contains(&self, p: Point) -> bool {
        let Some(d) = self.degree(p) else {
            return false;
        };
        if d < 0 || p.x < 0 || p.y < 0 {
            return false;
        }
        self.with_level(d as usize, |bits| ReachCache::test(bits, p.x as usize))
    }

    /// Runs `f` on the bitset of first coordinates reachable in `degree` steps.
    pub(crate) fn with_level<R>(&self, degree: usize, f: impl FnOnce(&[u64]) -> R) -> R {
        {
            let cache = self.reach.read().unwrap_or_else(|e| e.into_inner());
            if let Some(bits) = cache.levels.get(degree) {
                return f(bits);
            }
        }
        let mut cache = self.reach.write().unwrap_or_else(|e| e.into_inner());
        cache.fill(degree, &self.steps, self.an() as usize);
        f(&cache.levels[degree])
    }

    /// All points of `S_a` of the given degree, by first coordinate ascending.
    pub fn points_of_degree(&self, degree: usize) -> Vec<Point> {
        let total = degree as i64 * self.an();
        self.with_level(degree, |bits| {
            let mut out = Vec::new();
            for (i, &w) in bits.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let x = (i * 64) as i64 + w.trailing_zeros() as i64;
                    out.push(Point::new(x, total - x));
                    w &= w - 1;
                }
            }
            out
        })
    }

    /// The Apéry table, computed on first use.
    pub fn apery(&self) -> Result<&AperyTable> {
        if let Some(t) = self.apery.get() {
            return Ok(t);
        }
        let table = self.compute_apery()?;
        Ok(self.apery.get_or_init(|| table))
    }

    fn compute_apery(&self) -> Result<AperyTable> {
        let an = self.an();
        let a1 = self.s1.multiplicity();
        let mut nus: Vec<i64> = self.s1.apery(an)?.elements[1..].to_vec();
        nus.sort_unstable();

        let mut points = Vec::with_capacity(an as usize + 1);
        points.push(self.axis_y());
        for &nu in &nus {
            let bound = ((nu + a1 - 1) / a1)
                .checked_mul(an)
                .ok_or(Error::Overflow)?;
            let mut mu = (-nu).rem_euclid(an);
            while !self.contains(Point::new(nu, mu)) {
                mu += an;
                if mu > bound {
                    return Err(Error::AperyBoundExceeded { nu, bound });
                }
            }
            points.push(Point::new(nu, mu));
        }
        points.push(self.axis_x());

        let mut mus: Vec<i64> = points[1..points.len() - 1].iter().map(|p| p.y).collect();
        mus.push(an);
        mus.sort_unstable();
        let good = mus == self.s2.apery(an)?.sorted();

        let members: HashSet<Point> = points.iter().copied().collect();
        let b_tilde = points[1..points.len() - 1]
            .iter()
            .copied()
            .filter(|&b| points.iter().all(|&bi| !members.contains(&(b + bi))))
            .collect();

        Ok(AperyTable {
            points,
            good,
            b_tilde,
        })
    }

    pub fn is_cm(&self) -> Result<bool> {
        Ok(self.apery()?.good)
    }

    pub(crate) fn require_cm(&self) -> Result<&AperyTable> {
        let table = self.apery()?;
        if table.good {
            Ok(table)
        } else {
            Err(Error::NotCohenMacaulay)
        }
    }

    /// Cohen-Macaulay type, the number of maximal Apéry points.
    pub fn cm_type(&self) -> Result<usize> {
        Ok(self.require_cm()?.b_tilde.len())
    }

    /// Gorenstein test by symmetry of the ν-ordered Apéry points:
    /// `b_{a_n−1} = bᵢ + b_{a_n−1−i}` for `i = 1,…,a_n−2`.
    pub fn is_gorenstein_symmetry(&self) -> Result<bool> {
        let table = self.require_cm()?;
        // points[i] is b_i, with b_{a_n−1} the last inner point
        let b = &table.points;
        let top = b.len() - 2;
        Ok((1..top).all(|i| b[top] == b[i] + b[top - i]))
    }

    /// Default degree bound for [`Curve::find_non_cm_witness`].
    ///
    /// Witnesses live in degrees where `H¹_m` of the semigroup ring is nonzero,
    /// which the regularity bound `reg ≤ a_n − n + 1` caps at `a_n − n`; the
    /// searched point `p = w + (0,a_n)` therefore has degree at most
    /// `a_n − n + 1`. The result is never below `2·(F(S₁)+F(S₂)+2a_n)/a_n`.
    pub fn witness_degree_bound(&self) -> i64 {
        let an = self.an();
        let frobenius_bound = 2 * (self.s1.frobenius() + self.s2.frobenius() + 2 * an) / an;
        let regularity_bound = an - self.seq.len() as i64 + 1;
        frobenius_bound.max(regularity_bound)
    }

    /// Searches for `w ∈ ℤS_a \ S_a` with `w+(0,a_n) ∈ S_a` and `w+(a_n,0) ∈ S_a`.
    ///
    /// Candidates are `w = p − (0,a_n)` for `p ∈ S_a` of degree at most
    /// `degree_bound`, tried by degree and then by first coordinate. A hit
    /// proves the curve is not Cohen-Macaulay; a miss proves nothing.
    pub fn find_non_cm_witness(&self, degree_bound: i64) -> Option<Point> {
        let up = self.axis_y();
        let right = self.axis_x();
        for d in 1..=degree_bound.max(0) as usize {
            for p in self.points_of_degree(d) {
                let w = p - up;
                if !self.contains(w) && self.contains(w + right) {
                    return Some(w);
                }
            }
        }
        None
    }

    /// Whether `w` satisfies both witness conditions.
    pub fn is_non_cm_witness(&self, w: Point) -> bool {
        self.lattice_contains(w)
            && !self.contains(w)
            && self.contains(w + self.axis_y())
            && self.contains(w + self.axis_x())
    }
}
