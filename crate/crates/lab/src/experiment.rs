//! Global, local and shifted realizability checks on one sequence.

use rayon::prelude::*;

use dold::realize::{self, arias_criterion, check_realizable, magical_report};
use dold::{Condition, Criterion, Sequence1};

use crate::error::Result;
use crate::report::{CheckEntry, LocalEntry, ReportDocument, Status, WitnessDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub global: bool,
    pub local: bool,
    /// Check the shifts `1..=k` under the full criterion.
    pub magical: Option<usize>,
}

impl Default for Checks {
    fn default() -> Self {
        Checks { global: true, local: true, magical: None }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub sequence_id: String,
    pub sequence: Sequence1,
    pub primes: Vec<u64>,
    pub criterion: Criterion,
    pub checks: Checks,
}

pub fn local_entry(seq: &Sequence1, q: u64, criterion: Criterion) -> Result<(LocalEntry, Option<String>)> {
    let rep = realize::local_report(seq, q)?;
    let entry = match rep.first_failure(criterion) {
        None => LocalEntry { prime: q, status: Status::PassUpTo, witness: None },
        Some((c, w)) => {
            LocalEntry { prime: q, status: Status::FailAt, witness: Some(WitnessDoc::from_witness(w, Some(c))) }
        }
    };
    let note = match (criterion, &entry.status, rep.sign.witness()) {
        (Criterion::Dold, Status::PassUpTo, Some(w)) => {
            Some(format!("sign condition fails at {q} (n={}, orbit count {})", w.n, w.value))
        }
        _ => None,
    };
    Ok((entry, note))
}

/// Runs the requested checks. Local checks run in parallel; the output order
/// follows `primes`.
pub fn run(spec: &ExperimentSpec) -> Result<ReportDocument> {
    let seq = &spec.sequence;
    let mut checks = Vec::new();
    let mut annotations = Vec::new();
    if spec.checks.global {
        let rep = check_realizable(seq);
        for c in [Condition::Dold, Condition::Sign, Condition::Monotone] {
            checks.push(CheckEntry::from_verdict(c.name(), rep.verdict(c), Some(c)));
        }
        checks.push(CheckEntry::from_verdict("arias", &arias_criterion(seq), None));
    }
    if let Some(k) = spec.checks.magical {
        let rep = magical_report(seq, k)?;
        checks.push(match rep.first_failure() {
            None => CheckEntry { kind: "magical".into(), status: Status::PassUpTo, upto: Some(k), witness: None },
            Some((shift, c, w)) => {
                let mut doc = WitnessDoc::from_witness(w, Some(c));
                doc.shift = Some(shift);
                CheckEntry { kind: "magical".into(), status: Status::FailAt, upto: None, witness: Some(doc) }
            }
        });
    }
    let mut local = Vec::new();
    if spec.checks.local {
        let results: Vec<(LocalEntry, Option<String>)> =
            spec.primes.par_iter().map(|&q| local_entry(seq, q, spec.criterion)).collect::<Result<_>>()?;
        for (entry, note) in results {
            local.push(entry);
            annotations.extend(note);
        }
        if spec.criterion == Criterion::Dold {
            annotations.insert(0, "local verdicts use the Dold congruence alone".into());
        }
        let failing: Vec<String> =
            local.iter().filter(|e| e.status == Status::FailAt).map(|e| e.prime.to_string()).collect();
        if !failing.is_empty() {
            annotations.push(format!("not nilpotently realizable (fails locally at {})", failing.join(", ")));
        }
    }
    Ok(ReportDocument { sequence_id: spec.sequence_id.clone(), depth: seq.len(), checks, local, annotations })
}
