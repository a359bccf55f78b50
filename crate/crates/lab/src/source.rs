//! Turning a sequence name on the command line into a [`Sequence1`].
//!
//! A name is one of the built-in classical sequences, a survey id, an
//! A-number, or a path to a b-file.

use std::path::Path;

use dold::algebraic::two_adic_five;
use dold::{classical, Criterion, Nat, Sequence1};

use crate::bfile::{parse_bfile, OffsetPolicy};
use crate::error::{LabError, Result};
use crate::fetch::Fetcher;
use crate::fixtures;

pub const DEFAULT_DEPTH: usize = 400;

pub const BUILTIN_NAMES: [&str; 6] = ["e", "t", "b", "d", "lehmer-pierce", "five-x"];

#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    pub upto: Option<usize>,
    pub policy: OffsetPolicy,
    pub abs: bool,
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub id: String,
    pub sequence: Sequence1,
    /// Criterion the source is normally judged by.
    pub criterion: Criterion,
}

fn builtin(name: &str, n: usize) -> Result<Option<Sequence1>> {
    Ok(Some(match name {
        "e" => classical::sequence_e(n),
        "t" => classical::derived_bernoulli(n).t,
        "b" => classical::derived_bernoulli(n).b,
        "d" => classical::derived_bernoulli(n).d,
        "lehmer-pierce" | "lp" => classical::lehmer_pierce(&classical::x3_minus_x_minus_1(), n)?,
        "five-x" => two_adic_five(n),
        _ => return Ok(None),
    }))
}

fn cap(seq: Sequence1, upto: Option<usize>) -> Result<Sequence1> {
    let n = upto.unwrap_or(DEFAULT_DEPTH);
    if n == 0 {
        return Err(LabError::Usage("--upto must be positive".into()));
    }
    if let Some(wanted) = upto {
        if wanted > seq.len() {
            return Err(dold::Error::InsufficientDepth { needed: wanted, available: seq.len() }.into());
        }
    }
    Ok(seq.truncate(n.min(seq.len()))?)
}

/// Multiplies every term by `k`.
pub fn scaled(seq: Sequence1, k: u32) -> Sequence1 {
    if k == 1 {
        return seq;
    }
    let label = seq.label().to_string();
    let values: Vec<Nat> = seq.into_values().into_iter().map(|v| v * k).collect();
    Sequence1::new(label, values).expect("non-empty")
}

pub fn load(name: &str, fetcher: &Fetcher, opts: &LoadOptions) -> Result<Loaded> {
    let depth = opts.upto.unwrap_or(DEFAULT_DEPTH);
    if depth == 0 {
        return Err(LabError::Usage("--upto must be positive".into()));
    }
    if let Some(seq) = builtin(name, depth)? {
        return Ok(Loaded { id: name.to_string(), sequence: seq, criterion: Criterion::Full });
    }
    if let Some(s) = fixtures::survey_sequence(name) {
        let bf = fetcher.fetch(s.a_number)?.from_index(s.start)?;
        let seq = scaled(bf.to_sequence(OffsetPolicy::ShiftTo1, false)?, s.scale);
        let seq = cap(seq, Some(opts.upto.unwrap_or(s.depth)))?;
        return Ok(Loaded { id: s.id.to_string(), sequence: seq.with_label(s.id), criterion: s.criterion });
    }
    let path = Path::new(name);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
        let seq = parse_bfile(name, &text)?.to_sequence(opts.policy, opts.abs)?;
        return Ok(Loaded { id: name.to_string(), sequence: cap(seq, opts.upto)?, criterion: Criterion::Full });
    }
    if let Ok(a) = fixtures::normalize_a_number(name) {
        let seq = fetcher.fetch(&a)?.to_sequence(opts.policy, opts.abs)?;
        return Ok(Loaded { id: a, sequence: cap(seq, opts.upto)?, criterion: Criterion::Full });
    }
    Err(LabError::UnknownSequence(name.to_string()))
}
