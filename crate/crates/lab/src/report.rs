//! Experiment reports and their TABLE / JSON / CSV renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use dold::{Condition, Int, Verdict, Witness, WitnessDetail};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{LabError, Result};

/// An integer that serializes as a JSON number when it fits in `i64` and as a
/// decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigValue(pub Int);

impl Serialize for BigValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Small(i64),
            Big(String),
        }
        match Repr::deserialize(d)? {
            Repr::Small(v) => Ok(BigValue(Int::from(v))),
            Repr::Big(s) => s.parse().map(BigValue).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass-up-to")]
    PassUpTo,
    #[serde(rename = "fail-at")]
    FailAt,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::PassUpTo => "pass-up-to",
            Status::FailAt => "fail-at",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub n: usize,
    pub value: BigValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<usize>,
}

impl WitnessDoc {
    pub fn from_witness(w: &Witness, condition: Option<Condition>) -> Self {
        WitnessDoc {
            n: w.n,
            value: BigValue(w.value.clone()),
            condition: condition.map(|c| c.name().to_string()),
            divisor: match w.detail {
                WitnessDetail::Divisor(d) => Some(d),
                _ => None,
            },
            shift: None,
        }
    }

    fn describe(&self) -> String {
        let mut s = format!("n={} value={}", self.n, self.value.0);
        if let Some(c) = &self.condition {
            write!(s, " ({c})").unwrap();
        }
        if let Some(d) = self.divisor {
            write!(s, " divisor={d}").unwrap();
        }
        if let Some(k) = self.shift {
            write!(s, " shift={k}").unwrap();
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    #[serde(rename = "type")]
    pub kind: String,
    pub status: Status,
    /// Prefix length for a pass; omitted on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upto: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl CheckEntry {
    pub fn from_verdict(kind: &str, v: &Verdict, condition: Option<Condition>) -> Self {
        match v {
            Verdict::PassUpTo(n) => {
                CheckEntry { kind: kind.into(), status: Status::PassUpTo, upto: Some(*n), witness: None }
            }
            Verdict::FailAt(w) => CheckEntry {
                kind: kind.into(),
                status: Status::FailAt,
                upto: None,
                witness: Some(WitnessDoc::from_witness(w, condition)),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEntry {
    pub prime: u64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub sequence_id: String,
    pub depth: usize,
    pub checks: Vec<CheckEntry>,
    pub local: Vec<LocalEntry>,
    pub annotations: Vec<String>,
}

impl ReportDocument {
    /// Primes whose local sequence passed on the prefix.
    pub fn realizable_primes(&self) -> Vec<u64> {
        self.local.iter().filter(|e| e.status == Status::PassUpTo).map(|e| e.prime).collect()
    }

    pub fn failing_primes(&self) -> Vec<u64> {
        self.local.iter().filter(|e| e.status == Status::FailAt).map(|e| e.prime).collect()
    }

    pub fn check(&self, kind: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.kind == kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| LabError::Parse {
            source_name: "report".into(),
            line: e.line(),
            msg: e.to_string(),
        })
    }

    /// One row per prime.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["sequence_id", "depth", "prime", "status", "witness_n", "witness_value", "condition"])
            .expect("in-memory write");
        for e in &self.local {
            let (n, v, c) = match &e.witness {
                Some(w) => (w.n.to_string(), w.value.0.to_string(), w.condition.clone().unwrap_or_default()),
                None => (String::new(), String::new(), String::new()),
            };
            w.write_record([
                self.sequence_id.as_str(),
                &self.depth.to_string(),
                &e.prime.to_string(),
                e.status.as_str(),
                &n,
                &v,
                &c,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        writeln!(s, "sequence {}  depth {}", self.sequence_id, self.depth).unwrap();
        if !self.checks.is_empty() {
            writeln!(s).unwrap();
            writeln!(s, "{:<12} {:<11} witness", "check", "status").unwrap();
            for c in &self.checks {
                let detail = match (&c.witness, c.upto) {
                    (Some(w), _) => w.describe(),
                    (None, Some(n)) => format!("n<={n}"),
                    (None, None) => String::new(),
                };
                writeln!(s, "{:<12} {:<11} {}", c.kind, c.status.as_str(), detail).unwrap();
            }
        }
        if !self.local.is_empty() {
            writeln!(s).unwrap();
            writeln!(s, "{:<6} {:<11} witness", "prime", "status").unwrap();
            for e in &self.local {
                let detail = e.witness.as_ref().map(WitnessDoc::describe).unwrap_or_default();
                writeln!(s, "{:<6} {:<11} {}", e.prime, e.status.as_str(), detail).unwrap();
            }
            writeln!(s).unwrap();
            writeln!(s, "realizable* at: {}", join(&self.realizable_primes())).unwrap();
            writeln!(s, "not realizable at: {}", join(&self.failing_primes())).unwrap();
        }
        for a in &self.annotations {
            writeln!(s, "note: {a}").unwrap();
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Json => self.to_json() + "\n",
            Format::Csv => self.to_csv(),
        }
    }
}

fn join(xs: &[u64]) -> String {
    if xs.is_empty() {
        return "-".into();
    }
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (table, json or csv)")),
        }
    }
}

/// A plain grid of cells, for the subcommands that are not realizability
/// reports.
#[derive(Debug, Clone, Default)]
pub struct Grid {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Grid {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Grid { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|i| {
                        self.rows.iter().map(|r| r[i].len()).chain([self.headers[i].len()]).max().unwrap_or(0)
                    })
                    .collect();
                let mut s = String::new();
                for row in std::iter::once(&self.headers).chain(&self.rows) {
                    let cells: Vec<String> =
                        row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                    writeln!(s, "{}", cells.join("  ").trim_end()).unwrap();
                }
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Json => {
                let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
                    .rows
                    .iter()
                    .map(|r| {
                        self.headers
                            .iter()
                            .zip(r)
                            .map(|(h, c)| (h.clone(), json_cell(c)))
                            .collect()
                    })
                    .collect();
                serde_json::to_string_pretty(&rows).expect("grid serializes") + "\n"
            }
        }
    }
}

/// Integers small enough for `i64` become numbers, everything else a string.
fn json_cell(c: &str) -> serde_json::Value {
    match c.parse::<i64>() {
        Ok(v) => v.into(),
        Err(_) => c.into(),
    }
}
