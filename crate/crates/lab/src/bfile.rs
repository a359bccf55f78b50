//! OEIS b-files: one `index value` pair per line.

use std::str::FromStr;

use dold::{Int, Nat, Sequence1};
use num_bigint::Sign;

use crate::error::{LabError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub source: String,
    /// Index of the first entry.
    pub offset: i64,
    pub values: Vec<Int>,
}

/// How file indices map onto the 1-based indices of [`Sequence1`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OffsetPolicy {
    /// The first entry becomes `a_1`.
    #[default]
    ShiftTo1,
    /// The file must start at index 1.
    Strict,
}

impl FromStr for OffsetPolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "shift-to-1" | "shift" => Ok(OffsetPolicy::ShiftTo1),
            "strict" => Ok(OffsetPolicy::Strict),
            other => Err(format!("unknown offset policy {other:?} (shift-to-1 or strict)")),
        }
    }
}

pub fn parse_bfile(source: &str, text: &str) -> Result<BFile> {
    let err = |line: usize, msg: String| LabError::Parse { source_name: source.to_string(), line, msg };
    let mut offset = None;
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut parts = body.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(line, format!("expected `index value`, got {body:?}")));
        };
        let idx: i64 = idx.parse().map_err(|_| err(line, format!("bad index {idx:?}")))?;
        let val: Int = val.parse().map_err(|_| err(line, format!("bad value {val:?}")))?;
        match offset {
            None => offset = Some(idx),
            Some(o) => {
                let expected = o + values.len() as i64;
                if idx != expected {
                    return Err(err(line, format!("index {idx} breaks the run (expected {expected})")));
                }
            }
        }
        values.push(val);
    }
    let offset = offset.ok_or_else(|| err(0, "no entries".into()))?;
    Ok(BFile { source: source.to_string(), offset, values })
}

impl BFile {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries from file index `start` on.
    pub fn from_index(&self, start: i64) -> Result<BFile> {
        let skip = start - self.offset;
        if skip < 0 || skip as usize >= self.values.len() {
            return Err(LabError::Usage(format!(
                "{}: index {start} outside {}..{}",
                self.source,
                self.offset,
                self.offset + self.values.len() as i64 - 1
            )));
        }
        Ok(BFile { source: self.source.clone(), offset: start, values: self.values[skip as usize..].to_vec() })
    }

    pub fn to_sequence(&self, policy: OffsetPolicy, abs: bool) -> Result<Sequence1> {
        if policy == OffsetPolicy::Strict && self.offset != 1 {
            return Err(LabError::Offset { source_name: self.source.clone(), offset: self.offset });
        }
        let mut out: Vec<Nat> = Vec::with_capacity(self.values.len());
        for v in &self.values {
            if v.sign() == Sign::Minus && !abs {
                return Err(LabError::SignedValue(self.source.clone()));
            }
            out.push(v.magnitude().clone());
        }
        Ok(Sequence1::new(self.source.clone(), out)?)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{} {v}\n", self.offset + i as i64));
        }
        s
    }
}
