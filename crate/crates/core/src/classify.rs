//! Per-sequence classification, the named sequence families, and the
//! exhaustive scanner that checks the small-codimension classification of
//! non-Gorenstein nearly Gorenstein curves.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::canonical::{self, MovementChain};
use crate::curve::{Curve, Point, Sequence};
use crate::error::{Error, Result};
use crate::numsg::gcd;

/// Default upper limit on `a_n` for [`scan`].
pub const DEFAULT_SCAN_CAP: i64 = 200;

/// Environment variable overriding [`DEFAULT_SCAN_CAP`].
pub const SCAN_CAP_ENV: &str = "NGCURVES_MAX_AN";

/// Verdicts for one sequence. Ring invariants are present iff the curve is
/// Cohen-Macaulay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub seq: Sequence,
    pub cm: bool,
    pub gorenstein: Option<bool>,
    pub nearly_gorenstein: Option<bool>,
    pub level: Option<bool>,
    pub cm_type: Option<usize>,
    pub canonical_gens: Option<Vec<Point>>,
    /// Present iff the curve is nearly Gorenstein.
    pub movement: Option<MovementChain>,
    /// A non-Cohen-Macaulay certificate, when the bounded search found one.
    pub witness: Option<Point>,
}

impl ClassificationRecord {
    /// Cohen-Macaulay, nearly Gorenstein, and not Gorenstein.
    pub fn is_ng_non_gorenstein(&self) -> bool {
        self.cm && self.nearly_gorenstein == Some(true) && self.gorenstein == Some(false)
    }

    pub fn canonical_degrees(&self) -> Option<Vec<i64>> {
        let an = self.seq.last();
        self.canonical_gens
            .as_ref()
            .map(|g| g.iter().map(|p| (p.x + p.y).div_euclid(an)).collect())
    }

    pub fn vmin_size(&self) -> Option<usize> {
        let degrees = self.canonical_degrees()?;
        let min = degrees.iter().min()?;
        Some(degrees.iter().filter(|&d| d == min).count())
    }
}

pub fn analyze(seq: &Sequence) -> Result<ClassificationRecord> {
    let curve = Curve::new(seq.clone())?;
    analyze_curve(&curve)
}

pub fn analyze_curve(curve: &Curve) -> Result<ClassificationRecord> {
    let seq = curve.sequence().clone();
    if !curve.is_cm()? {
        let witness = curve.find_non_cm_witness(curve.witness_degree_bound());
        return Ok(ClassificationRecord {
            seq,
            cm: false,
            gorenstein: None,
            nearly_gorenstein: None,
            level: None,
            cm_type: None,
            canonical_gens: None,
            movement: None,
            witness,
        });
    }
    let cm_type = curve.cm_type()?;
    let data = canonical::canonical_generators(curve)?;
    let movement = canonical::find_movement(curve)?;
    Ok(ClassificationRecord {
        seq,
        cm: true,
        gorenstein: Some(cm_type == 1),
        nearly_gorenstein: Some(movement.is_some()),
        level: Some(data.level),
        cm_type: Some(cm_type),
        canonical_gens: Some(data.gens.clone()),
        movement,
        witness: None,
    })
}

/// One-parameter families of sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(k, k+1, 2k+1)`
    Alpha,
    /// `(k, k+1, 2k+1, 3k+2)`
    IA,
    /// `(2k−1, 2k+1, 4k, 6k+1)`
    IB,
    /// `(k, k+1, 2k+1, 3k+1)`, `k ≥ 2`
    IID,
    /// `(2k+1, 4k, 4k+2, 6k+1)`, the duals of [`Family::IB`]
    IVB,
    /// `(k, 2k, 2k+1, 3k+1)`, `k ≥ 2`, the duals of [`Family::IID`]
    VD,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Alpha,
        Family::IA,
        Family::IB,
        Family::IID,
        Family::IVB,
        Family::VD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alpha => "alpha",
            Family::IA => "i_a",
            Family::IB => "i_b",
            Family::IID => "ii_d",
            Family::IVB => "iv_b",
            Family::VD => "v_d",
        }
    }

    pub fn min_k(self) -> i64 {
        match self {
            Family::IID | Family::VD => 2,
            _ => 1,
        }
    }

    pub fn sequence(self, k: i64) -> Result<Sequence> {
        if k < self.min_k() {
            return Err(Error::OutOfFamilyRange {
                family: self.name(),
                param: format!("k = {k}"),
            });
        }
        let v = match self {
            Family::Alpha => vec![k, k + 1, 2 * k + 1],
            Family::IA => vec![k, k + 1, 2 * k + 1, 3 * k + 2],
            Family::IB => vec![2 * k - 1, 2 * k + 1, 4 * k, 6 * k + 1],
            Family::IID => vec![k, k + 1, 2 * k + 1, 3 * k + 1],
            Family::IVB => vec![2 * k + 1, 4 * k, 4 * k + 2, 6 * k + 1],
            Family::VD => vec![k, 2 * k, 2 * k + 1, 3 * k + 1],
        };
        Sequence::new(&v)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

pub fn family(name: Family, k: i64) -> Result<Sequence> {
    name.sequence(k)
}

/// Two-parameter families of non-Cohen-Macaulay curves, each with an explicit
/// point `v` such that `v ∉ S_a` but `v + (0,a_n)` and `v + (a_n,0)` are in `S_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairFamily {
    /// `(a, b, a+b, a+2b)` with `b ≥ a+3`
    IC,
    /// `(a, b, a+b, 2a+b)` with `b ≥ a+2`
    IIE,
    /// `(a, b, a+b, 2b)` with `b ≠ 2`
    III,
}

impl PairFamily {
    pub const ALL: [PairFamily; 3] = [PairFamily::IC, PairFamily::IIE, PairFamily::III];

    pub fn name(self) -> &'static str {
        match self {
            PairFamily::IC => "i_c",
            PairFamily::IIE => "ii_e",
            PairFamily::III => "iii",
        }
    }

    fn admits(self, a: i64, b: i64) -> bool {
        let base = 0 < a && a < b && gcd(a, b) == 1;
        base && match self {
            PairFamily::IC => b >= a + 3,
            PairFamily::IIE => b >= a + 2,
            PairFamily::III => b != 2,
        }
    }

    pub fn sequence(self, a: i64, b: i64) -> Result<Sequence> {
        if !self.admits(a, b) {
            return Err(Error::OutOfFamilyRange {
                family: self.name(),
                param: format!("(a, b) = ({a}, {b})"),
            });
        }
        let v = match self {
            PairFamily::IC => vec![a, b, a + b, a + 2 * b],
            PairFamily::IIE => vec![a, b, a + b, 2 * a + b],
            PairFamily::III => vec![a, b, a + b, 2 * b],
        };
        Sequence::new(&v)
    }

    /// The closed-form non-Cohen-Macaulay certificate for `(a, b)`.
    pub fn witness(self, a: i64, b: i64) -> Result<Point> {
        self.sequence(a, b)?;
        Ok(match self {
            PairFamily::IC => Point::new(a * (b - 1), 2 * b * b - a - 4 * b),
            PairFamily::IIE => Point::new(a * (b - 1), b * b - 2 * b + a * b - 3 * a),
            PairFamily::III => Point::new(2 * a, 2 * b - 2 * a),
        })
    }
}

impl fmt::Display for PairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PairFamily {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        PairFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// Sequences of length `n` with `a_n ≤ max_an` whose curves should be
/// Cohen-Macaulay, nearly Gorenstein and not Gorenstein, in sorted order.
///
/// Length 4 includes the dual family, since scans do not identify isomorphic
/// curves.
pub fn expected_ng(n: usize, max_an: i64) -> Vec<Sequence> {
    let mut out = BTreeSet::new();
    let collect = |out: &mut BTreeSet<Sequence>, fam: Family| {
        let mut k = fam.min_k();
        while let Ok(seq) = fam.sequence(k) {
            if seq.last() > max_an {
                break;
            }
            out.insert(seq);
            k += 1;
        }
    };
    match n {
        3 => collect(&mut out, Family::Alpha),
        4 => {
            if max_an >= 4 {
                out.insert(Sequence::new(&[1, 2, 3, 4]).expect("valid"));
            }
            collect(&mut out, Family::IB);
            collect(&mut out, Family::IVB);
        }
        _ => {}
    }
    out.into_iter().collect()
}

/// Result of an exhaustive scan.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub n: usize,
    pub max_an: i64,
    /// Sorted by sequence.
    pub records: Vec<ClassificationRecord>,
    pub ng_found: Vec<Sequence>,
    pub ng_expected: Vec<Sequence>,
    pub verdict: bool,
}

/// Scan cap from `NGCURVES_MAX_AN`, falling back to [`DEFAULT_SCAN_CAP`].
pub fn scan_cap() -> i64 {
    std::env::var(SCAN_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SCAN_CAP)
}

/// All strictly increasing gcd-1 sequences of length `n` ending at `last`.
pub fn sequences_ending_at(n: usize, last: i64) -> Vec<Sequence> {
    fn extend(prefix: &mut Vec<i64>, n: usize, last: i64, out: &mut Vec<Sequence>) {
        if prefix.len() == n - 1 {
            let g = prefix.iter().fold(last, |acc, &v| gcd(acc, v));
            if g == 1 {
                prefix.push(last);
                out.push(Sequence::new(prefix).expect("valid by construction"));
                prefix.pop();
            }
            return;
        }
        let start = prefix.last().map_or(1, |&v| v + 1);
        for v in start..last {
            prefix.push(v);
            extend(prefix, n, last, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        extend(&mut Vec::with_capacity(n), n, last, &mut out);
    }
    out
}

pub fn scan(n: usize, max_an: i64) -> Result<ScanReport> {
    scan_with_cap(n, max_an, scan_cap())
}

pub fn scan_with_cap(n: usize, max_an: i64, cap: i64) -> Result<ScanReport> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedScanLength(n));
    }
    if max_an > cap {
        return Err(Error::CapExceeded { max_an, cap });
    }
    let sequences: Vec<Sequence> = (n as i64..=max_an)
        .flat_map(|last| sequences_ending_at(n, last))
        .collect();
    let mut records = sequences
        .par_iter()
        .map(analyze)
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.seq.cmp(&b.seq));
    let ng_found: Vec<Sequence> = records
        .iter()
        .filter(|r| r.is_ng_non_gorenstein())
        .map(|r| r.seq.clone())
        .collect();
    let ng_expected = expected_ng(n, max_an);
    let verdict = ng_found == ng_expected;
    Ok(ScanReport {
        n,
        max_an,
        records,
        ng_found,
        ng_expected,
        verdict,
    })
}
