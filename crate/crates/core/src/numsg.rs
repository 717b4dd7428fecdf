//! Numerical semigroups `⟨a₁,…,a_n⟩ ⊆ ℕ`.
//!
//! Membership is answered in constant time from the table of least elements
//! in each residue class modulo the smallest generator. The table is built
//! once, at construction, by a shortest-path pass over the residues.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Largest generator accepted anywhere in the crate.
pub const MAX_GENERATOR: i64 = 1_000_000;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Checks positivity, strict increase, the size cap and `gcd = 1`, in that order.
pub(crate) fn validate_generators(values: &[i64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(&bad) = values.iter().find(|&&v| v <= 0) {
        return Err(Error::NonPositive(bad));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing);
    }
    if let Some(&big) = values.iter().find(|&&v| v > MAX_GENERATOR) {
        return Err(Error::TooLarge {
            value: big,
            max: MAX_GENERATOR,
        });
    }
    let g = values.iter().fold(0, |acc, &v| gcd(acc, v));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    Ok(())
}

/// A numerical semigroup given by strictly increasing generators with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    /// `least_in_class[r]` is the least element congruent to `r` modulo the
    /// smallest generator.
    least_in_class: Vec<i64>,
    frobenius: i64,
}

/// The Apéry set of a semigroup with respect to one of its nonzero elements.
///
/// `elements[r]` is the least member congruent to `r` modulo `base`, except
/// that class 0 is represented by `base` itself rather than by 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet1D {
    pub base: i64,
    pub elements: Vec<i64>,
}

impl AperySet1D {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in ascending order.
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.elements[(x % self.base) as usize] == x
    }
}

impl NumericalSemigroup {
    pub fn new(generators: &[i64]) -> Result<Self> {
        validate_generators(generators)?;
        let m = generators[0];
        let least_in_class = residue_table(generators);
        let frobenius = least_in_class.iter().copied().max().unwrap_or(0) - m;
        Ok(Self {
            generators: generators.to_vec(),
            least_in_class,
            frobenius,
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = self.multiplicity();
        n >= self.least_in_class[(n % m) as usize]
    }

    /// Largest integer outside the semigroup, or −1 when it is all of ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn apery(&self, base: i64) -> Result<AperySet1D> {
        if base <= 0 || !self.contains(base) {
            return Err(Error::BaseNotInSemigroup(base));
        }
        let mut elements = Vec::with_capacity(base as usize);
        elements.push(base);
        for r in 1..base {
            // terminates: everything from the conductor on is a member
            let mut x = r;
            while !self.contains(x) {
                x += base;
            }
            elements.push(x);
        }
        Ok(AperySet1D { base, elements })
    }

    /// Gaps `x` with `x + s ∈ S` for every nonzero `s ∈ S`, ascending.
    ///
    /// Testing `x + aᵢ` for the generators suffices. Empty for ℕ.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .filter(|&x| self.generators.iter().all(|&a| self.contains(x + a)))
            .collect()
    }

    /// Number of elements of `S` below the conductor.
    pub fn small_elements(&self) -> i64 {
        (0..self.conductor()).filter(|&x| self.contains(x)).count() as i64
    }

    pub fn is_symmetric(&self) -> bool {
        let c = self.conductor();
        c % 2 == 0 && 2 * self.small_elements() == c
    }
}

/// Least semigroup element in each residue class modulo the smallest generator.
fn residue_table(generators: &[i64]) -> Vec<i64> {
    let m = generators[0] as usize;
    let mut dist = vec![i64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &a in &generators[1..] {
            let next = (r + a as usize) % m;
            let nd = d + a;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}
