//! Acceptance suite: every criterion runs in turn and prints one PASS/FAIL
//! line. Run with `cargo test -p ngcurves --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ngcurves::canonical::{canonical_generators, omega_contains};
use ngcurves::classify::{analyze, expected_ng, scan_with_cap, sequences_ending_at};
use ngcurves::verify::{
    brute_curve_contains, canonical_generators_layered, omega_contains_definitional, pf_brute,
};
use ngcurves::{
    ClassificationRecord, Curve, Family, NumericalSemigroup, PairFamily, Point, Sequence,
};

/// Why a criterion failed.
#[derive(Debug)]
struct Failure(String);

impl From<ngcurves::Error> for Failure {
    fn from(e: ngcurves::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(), Failure>;
type Check = Box<dyn Fn(&ClassificationRecord) -> Outcome>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Failure(format!($($fmt)+)));
        }
    };
}

fn seq(v: &[i64]) -> Sequence {
    Sequence::new(v).unwrap()
}

fn rec(v: &[i64]) -> ClassificationRecord {
    analyze(&seq(v)).unwrap()
}

fn pts(v: &[(i64, i64)]) -> Vec<Point> {
    v.iter().map(|&p| p.into()).collect()
}

fn set(v: &[Point]) -> BTreeSet<Point> {
    v.iter().copied().collect()
}

/// Every valid sequence with length in `lengths` and `a_n ≤ max_an`.
fn all_sequences(lengths: std::ops::RangeInclusive<usize>, max_an: i64) -> Vec<Sequence> {
    let mut out = Vec::new();
    for n in lengths {
        for last in n as i64..=max_an {
            out.extend(sequences_ending_at(n, last));
        }
    }
    out
}

fn cm_curves(seqs: Vec<Sequence>) -> Vec<Curve> {
    seqs.into_iter()
        .map(|s| Curve::new(s).unwrap())
        .filter(|c| c.is_cm().unwrap())
        .collect()
}

fn verdicts(
    r: &ClassificationRecord,
) -> (
    bool,
    Option<usize>,
    Option<bool>,
    Option<bool>,
    Option<bool>,
) {
    (r.cm, r.cm_type, r.gorenstein, r.nearly_gorenstein, r.level)
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn golden_examples() -> Outcome {
    let cases: Vec<(&[i64], Check)> = vec![
        (
            &[6, 7, 13],
            Box::new(|r| {
                ensure!(
                    verdicts(r) == (true, Some(2), Some(false), Some(true), Some(true)),
                    "(6,7,13) verdicts {:?}",
                    verdicts(r)
                );
                ensure!(
                    r.canonical_gens == Some(pts(&[(-29, -23), (-23, -29)])),
                    "(6,7,13) V(S) {:?}",
                    r.canonical_gens
                );
                Ok(())
            }),
        ),
        (
            &[6, 7, 13, 20],
            Box::new(|r| {
                ensure!(r.gorenstein == Some(true), "(6,7,13,20) not Gorenstein");
                Ok(())
            }),
        ),
        (
            &[5, 7, 12, 19],
            Box::new(|r| {
                ensure!(
                    verdicts(r) == (true, Some(3), Some(false), Some(true), Some(true)),
                    "(5,7,12,19) verdicts {:?}",
                    verdicts(r)
                );
                ensure!(
                    r.canonical_gens == Some(pts(&[(-23, -53), (-18, -58), (-11, -65)])),
                    "(5,7,12,19) V(S) {:?}",
                    r.canonical_gens
                );
                Ok(())
            }),
        ),
        (
            &[7, 12, 14, 19],
            Box::new(|r| {
                let base = rec(&[5, 7, 12, 19]);
                ensure!(
                    verdicts(r) == verdicts(&base),
                    "(7,12,14,19) {:?} vs (5,7,12,19) {:?}",
                    verdicts(r),
                    verdicts(&base)
                );
                Ok(())
            }),
        ),
        (
            &[1, 2, 3, 4],
            Box::new(|r| {
                ensure!(
                    verdicts(r) == (true, Some(3), Some(false), Some(true), Some(true)),
                    "(1,2,3,4) verdicts {:?}",
                    verdicts(r)
                );
                ensure!(
                    r.canonical_gens == Some(pts(&[(1, 3), (2, 2), (3, 1)])),
                    "(1,2,3,4) V(S) {:?}",
                    r.canonical_gens
                );
                Ok(())
            }),
        ),
    ];
    for (values, check) in cases {
        timed(Duration::from_millis(100), || check(&rec(values)))?;
    }
    Ok(())
}

fn family_suites() -> Outcome {
    timed(Duration::from_secs(10), || {
        for k in 1..=15 {
            let s = Family::Alpha.sequence(k)?;
            let r = analyze(&s).unwrap();
            ensure!(
                verdicts(&r) == (true, Some(2), Some(false), Some(true), Some(true)),
                "alpha k={k}: {:?}",
                verdicts(&r)
            );
            let (p, q) = (k * k - k - 1, k * k - 2 * k - 1);
            let expect = set(&pts(&[(-p, -q), (-q, -p)]));
            let got = set(r.canonical_gens.as_deref().unwrap());
            ensure!(got == expect, "alpha k={k}: V(S) {got:?} vs {expect:?}");
            ensure!(
                r.canonical_degrees().unwrap().iter().all(|&d| d == 2 - k),
                "alpha k={k}: degrees {:?}",
                r.canonical_degrees()
            );
        }
        for k in 1..=15 {
            let r = analyze(&Family::IA.sequence(k)?).unwrap();
            ensure!(r.gorenstein == Some(true), "i_a k={k} not Gorenstein");
        }
        for k in 1..=10 {
            let r = analyze(&Family::IB.sequence(k)?).unwrap();
            ensure!(
                verdicts(&r) == (true, Some(3), Some(false), Some(true), Some(true)),
                "i_b k={k}: {:?}",
                verdicts(&r)
            );
            let v1 = Point::new(-(4 * k * k - 4 * k - 1), -(8 * k * k - 6 * k - 1));
            let v2 = Point::new(-(4 * k * k - 6 * k), -(8 * k * k - 4 * k - 2));
            let v3 = Point::new(-(4 * k * k - 8 * k - 1), -(8 * k * k - 2 * k - 1));
            let got = set(r.canonical_gens.as_deref().unwrap());
            ensure!(
                got == set(&[v1, v2, v3]),
                "i_b k={k}: V(S) {got:?} vs {:?}",
                [v1, v2, v3]
            );
        }
        for k in 2..=12 {
            let r = analyze(&Family::IID.sequence(k)?).unwrap();
            ensure!(
                r.cm && r.nearly_gorenstein == Some(false),
                "ii_d k={k}: {:?}",
                verdicts(&r)
            );
        }
        for fam in PairFamily::ALL {
            let mut count = 0;
            for b in 2..=60 {
                for a in 1..b {
                    let Ok(s) = fam.sequence(a, b) else { continue };
                    if s.last() > 60 {
                        continue;
                    }
                    let c = Curve::new(s.clone()).unwrap();
                    ensure!(!c.is_cm().unwrap(), "{fam} {s} is Cohen-Macaulay");
                    let w = fam.witness(a, b)?;
                    ensure!(c.is_non_cm_witness(w), "{fam} {s}: {w} is not a witness");
                    count += 1;
                }
            }
            ensure!(count > 0, "{fam}: no admissible pairs sampled");
        }
        Ok(())
    })
}

fn classification_scans() -> Outcome {
    timed(Duration::from_secs(60), || {
        for (n, max_an) in [(3, 40), (4, 30)] {
            let report = scan_with_cap(n, max_an, 200)?;
            ensure!(
                report.verdict,
                "scan n={n} max={max_an}: found {:?}, expected {:?}",
                report.ng_found,
                report.ng_expected
            );
            ensure!(
                report.ng_expected == expected_ng(n, max_an),
                "expected set drifted"
            );
        }
        Ok(())
    })
}

fn corollary() -> Outcome {
    for (n, max_an) in [(3, 40), (4, 30)] {
        let report = scan_with_cap(n, max_an, 200)?;
        for r in &report.records {
            if r.nearly_gorenstein == Some(true) {
                ensure!(
                    r.level == Some(true),
                    "{} is nearly Gorenstein but not level",
                    r.seq
                );
            }
        }
    }
    let r = rec(&[4, 9, 12, 13, 21]);
    ensure!(
        r.nearly_gorenstein == Some(true) && r.level == Some(false),
        "(4,9,12,13,21): {:?}",
        verdicts(&r)
    );
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    timed(Duration::from_secs(120), || {
        let small = all_sequences(2..=15, 15);

        for s in &small {
            let c = Curve::new(s.clone()).unwrap();
            for d in 0..=6 {
                for x in 0..=d * c.an() {
                    let p = Point::new(x, d * c.an() - x);
                    ensure!(
                        brute_curve_contains(&c, p)? == c.contains(p),
                        "membership {s} {p}"
                    );
                }
            }
        }

        let small_cm = cm_curves(small);
        for c in &small_cm {
            let an = c.an();
            let (f1, f2) = (c.s1().frobenius(), c.s2().frobenius());
            for x in -f1..=an {
                for y in -f2..=an {
                    let w = Point::new(x, y);
                    if !c.lattice_contains(w) {
                        continue;
                    }
                    ensure!(
                        omega_contains_definitional(c, w, None)? == omega_contains(c, w)?,
                        "omega {} {w}",
                        c.sequence()
                    );
                }
            }
            let boxed = set(&canonical_generators(c)?.gens);
            let layered = canonical_generators_layered(c)?;
            ensure!(
                boxed == layered,
                "V(S) {}: box {boxed:?} layered {layered:?}",
                c.sequence()
            );
        }

        let mut type_curves = small_cm;
        type_curves.extend(cm_curves(
            all_sequences(2..=4, 30)
                .into_iter()
                .filter(|s| s.last() > 15)
                .collect(),
        ));
        for c in &type_curves {
            let t = c.cm_type()?;
            let gens = canonical_generators(c)?.gens.len();
            ensure!(gens == t, "{}: |V(S)| = {gens}, type {t}", c.sequence());
            ensure!(
                c.is_gorenstein_symmetry()? == (t == 1),
                "{}: symmetry test vs type {t}",
                c.sequence()
            );
        }

        for b in 2..=40 {
            for a in 1..b {
                let Ok(s) = NumericalSemigroup::new(&[a, b]) else {
                    continue;
                };
                ensure!(s.frobenius() == a * b - a - b, "F(<{a},{b}>)");
                if a > 1 {
                    ensure!(s.is_symmetric(), "<{a},{b}> not symmetric");
                }
            }
        }
        for gens in generator_sets(20, 5) {
            let Ok(s) = NumericalSemigroup::new(&gens) else {
                continue;
            };
            if gens[0] == 1 {
                continue;
            }
            let pf = pf_brute(&s)?;
            ensure!(pf == s.pseudo_frobenius(), "PF {gens:?}");
            ensure!(
                s.is_symmetric() == (pf == vec![s.frobenius()]),
                "symmetry vs PF {gens:?}"
            );
        }

        downward_closure()
    })
}

/// Strictly increasing subsets of `1..=max` with at most `size` elements.
fn generator_sets(max: i64, size: usize) -> Vec<Vec<i64>> {
    fn go(start: i64, max: i64, size: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == size {
            return;
        }
        for v in start..=max {
            cur.push(v);
            go(v + 1, max, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max, size, &mut Vec::new(), &mut out);
    out
}

/// For representations `Σcᵢaᵢ ∈ Ape(s,S)` with every `cᵢ ≤ 4`, all `Σdᵢaᵢ`
/// with `dᵢ ≤ cᵢ` stay in the Apéry set.
fn downward_closure() -> Outcome {
    for gens in generator_sets(12, 3) {
        let Ok(sg) = NumericalSemigroup::new(&gens) else {
            continue;
        };
        for &base in &gens {
            let ape = sg.apery(base)?;
            let in_ape = |v: i64| v != 0 && ape.contains(v) || v == 0;
            for c in boxes(&vec![4; gens.len()]) {
                let total: i64 = c.iter().zip(&gens).map(|(ci, a)| ci * a).sum();
                if total == 0 || !ape.contains(total) {
                    continue;
                }
                for d in boxes(&c) {
                    let sub: i64 = d.iter().zip(&gens).map(|(di, a)| di * a).sum();
                    ensure!(in_ape(sub), "{gens:?} base {base}: {c:?} -> {d:?}");
                }
            }
        }
    }
    Ok(())
}

/// All vectors `d` with `0 ≤ dᵢ ≤ bounds[i]`.
fn boxes(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn dual_invariance() -> Outcome {
    let degrees = |r: &ClassificationRecord| {
        let mut d = r.canonical_degrees().unwrap();
        d.sort_unstable();
        d
    };
    for s in all_sequences(2..=5, 25) {
        let r = analyze(&s).unwrap();
        if !r.cm {
            continue;
        }
        let rd = analyze(&s.dual()).unwrap();
        ensure!(
            verdicts(&r) == verdicts(&rd),
            "{s}: {:?} vs dual {:?}",
            verdicts(&r),
            verdicts(&rd)
        );
        ensure!(degrees(&r) == degrees(&rd), "{s}: degree multisets differ");
    }
    Ok(())
}

fn hypersurfaces() -> Outcome {
    for s in all_sequences(2..=2, 40) {
        let r = analyze(&s).unwrap();
        ensure!(r.cm && r.cm_type == Some(1), "{s}: {:?}", verdicts(&r));
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("1 golden examples", golden_examples),
        ("2 family suites", family_suites),
        (
            "3 classification scans n=3 max 40, n=4 max 30",
            classification_scans,
        ),
        (
            "4 nearly Gorenstein implies level; (4,9,12,13,21) is not level",
            corollary,
        ),
        ("5 oracle equivalence", oracle_equivalence),
        ("6 dual invariance a_n <= 25", dual_invariance),
        ("7 n = 2 curves have type 1", hypersurfaces),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(()) => println!("[PASS] criterion {name} ({:.2?})", start.elapsed()),
            Err(e) => {
                println!("[FAIL] criterion {name}: {}", e.0);
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
