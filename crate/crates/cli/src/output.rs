//! Text, JSON and CSV renderings of records and scan reports.

use ngcurves::canonical::render_movement;
use ngcurves::{ClassificationRecord, MovementChain, Point, ScanReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslateJson {
    pub u: [i64; 2],
    pub covered: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovementJson {
    pub translates: Vec<TranslateJson>,
}

/// Wire form of a [`ClassificationRecord`]. Absent values are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub sequence: Vec<i64>,
    pub cm: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nearly_gorenstein: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cm_type: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_generators: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub movement: Option<MovementJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<[i64; 2]>,
}

fn pair(p: Point) -> [i64; 2] {
    [p.x, p.y]
}

fn movement_json(chain: &MovementChain) -> MovementJson {
    MovementJson {
        translates: chain
            .translates
            .iter()
            .map(|t| TranslateJson {
                u: pair(t.u),
                covered: t.covered.clone(),
            })
            .collect(),
    }
}

impl From<&ClassificationRecord> for RecordJson {
    fn from(r: &ClassificationRecord) -> Self {
        RecordJson {
            sequence: r.seq.values().to_vec(),
            cm: r.cm,
            gorenstein: r.gorenstein,
            nearly_gorenstein: r.nearly_gorenstein,
            level: r.level,
            cm_type: r.cm_type,
            canonical_generators: r
                .canonical_gens
                .as_ref()
                .map(|g| g.iter().copied().map(pair).collect()),
            movement: r.movement.as_ref().map(movement_json),
            witness: r.witness.map(pair),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanJson {
    pub n: usize,
    pub max_an: i64,
    pub verdict: bool,
    pub ng_found: Vec<Vec<i64>>,
    pub ng_expected: Vec<Vec<i64>>,
    pub records: Vec<RecordJson>,
}

impl From<&ScanReport> for ScanJson {
    fn from(r: &ScanReport) -> Self {
        ScanJson {
            n: r.n,
            max_an: r.max_an,
            verdict: r.verdict,
            ng_found: r.ng_found.iter().map(|s| s.values().to_vec()).collect(),
            ng_expected: r.ng_expected.iter().map(|s| s.values().to_vec()).collect(),
            records: r.records.iter().map(RecordJson::from).collect(),
        }
    }
}

pub fn record_json(r: &ClassificationRecord) -> String {
    let mut s = serde_json::to_string(&RecordJson::from(r)).expect("record serializes");
    s.push('\n');
    s
}

pub fn scan_json(r: &ScanReport) -> String {
    let mut s = serde_json::to_string(&ScanJson::from(r)).expect("report serializes");
    s.push('\n');
    s
}

fn flag(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "sequence",
    "cm",
    "gorenstein",
    "nearly_gorenstein",
    "level",
    "cm_type",
    "vmin_size",
    "canonical_degrees",
    "movement",
];

fn csv_row(r: &ClassificationRecord) -> [String; 10] {
    [
        r.seq.len().to_string(),
        joined(r.seq.values()),
        r.cm.to_string(),
        flag(r.gorenstein),
        flag(r.nearly_gorenstein),
        flag(r.level),
        r.cm_type.map(|t| t.to_string()).unwrap_or_default(),
        r.vmin_size().map(|t| t.to_string()).unwrap_or_default(),
        r.canonical_degrees()
            .map(|d| joined(&d))
            .unwrap_or_default(),
        r.movement
            .as_ref()
            .map(|m| joined(&m.movement))
            .unwrap_or_default(),
    ]
}

/// CSV with a header row; multi-valued fields are space separated.
pub fn records_csv<'a>(records: impl IntoIterator<Item = &'a ClassificationRecord>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("write to memory");
    for r in records {
        w.write_record(csv_row(r)).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
}

pub fn record_text(r: &ClassificationRecord) -> String {
    let mut out = format!("sequence: {}\ncm: {}\n", r.seq, r.cm);
    let mut line = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
    if let Some(g) = r.gorenstein {
        line("gorenstein", g.to_string());
    }
    if let Some(g) = r.nearly_gorenstein {
        line("nearly_gorenstein", g.to_string());
    }
    if let Some(g) = r.level {
        line("level", g.to_string());
    }
    if let Some(t) = r.cm_type {
        line("cm_type", t.to_string());
    }
    if let Some(gens) = &r.canonical_gens {
        line("canonical_generators", joined(gens));
    }
    if let Some(d) = r.canonical_degrees() {
        line("canonical_degrees", joined(&d));
    }
    if let Some(m) = &r.movement {
        line("movement", render_movement(m, &r.seq));
    }
    if let Some(w) = r.witness {
        line("witness", w.to_string());
    }
    out
}

pub fn scan_text(r: &ScanReport) -> String {
    let listed =
        |v: &[ngcurves::Sequence]| v.iter().map(|s| format!("  {s}\n")).collect::<String>();
    let cm = r.records.iter().filter(|r| r.cm).count();
    let gor = r
        .records
        .iter()
        .filter(|r| r.gorenstein == Some(true))
        .count();
    format!(
        "n: {}\nmax_an: {}\nsequences: {}\ncohen_macaulay: {}\ngorenstein: {}\n\
         ng_found: {}\n{}ng_expected: {}\n{}verdict: {}\n",
        r.n,
        r.max_an,
        r.records.len(),
        cm,
        gor,
        r.ng_found.len(),
        listed(&r.ng_found),
        r.ng_expected.len(),
        listed(&r.ng_expected),
        if r.verdict { "pass" } else { "fail" },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use ngcurves::classify::analyze;
    use ngcurves::Sequence;

    fn record(v: &[i64]) -> ClassificationRecord {
        analyze(&Sequence::new(v).unwrap()).unwrap()
    }

    #[test]
    fn json_round_trips() {
        for v in [
            &[5, 7, 12, 19][..],
            &[2, 5, 7, 12],
            &[4, 9, 12, 13, 21],
            &[1, 2],
        ] {
            let first = record_json(&record(v));
            let parsed: RecordJson = serde_json::from_str(&first).unwrap();
            let second = serde_json::to_string(&parsed).unwrap() + "\n";
            assert_eq!(first, second);
        }
    }

    #[test]
    fn absent_keys_are_omitted() {
        let json = record_json(&record(&[2, 5, 7, 12]));
        assert!(json.starts_with(r#"{"sequence":[2,5,7,12],"cm":false,"witness":["#));
        for key in ["gorenstein", "cm_type", "movement", "canonical_generators"] {
            assert!(!json.contains(key), "{key}");
        }
    }

    #[test]
    fn csv_leaves_absent_fields_empty() {
        let csv = records_csv([&record(&[2, 5, 7, 12]), &record(&[6, 7, 13])]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert_eq!(lines[1], "4,2 5 7 12,false,,,,,,,");
        assert_eq!(lines[2], "3,6 7 13,true,false,true,true,2,2,-4 -4,29 36");
        assert!(!csv.contains('\r'));
    }
}
