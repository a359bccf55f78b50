//! Bundled OEIS b-files and group tables, and the pinned experiment setups.

use dold::Criterion;

use crate::error::{LabError, Result};

macro_rules! bfiles {
    ($($a:literal => $file:literal),* $(,)?) => {
        const BFILES: &[(&str, &str)] = &[
            $(($a, include_str!(concat!("../fixtures/oeis/", $file)))),*
        ];
    };
}

bfiles! {
    "A000032" => "b000032.txt",
    "A000364" => "b000364.txt",
    "A001067" => "b001067.txt",
    "A001850" => "b001850.txt",
    "A001945" => "b001945.txt",
    "A002895" => "b002895.txt",
    "A005258" => "b005258.txt",
    "A005259" => "b005259.txt",
    "A005725" => "b005725.txt",
    "A006953" => "b006953.txt",
    "A010122" => "b010122.txt",
    "A053175" => "b053175.txt",
    "A054783" => "b054783.txt",
}

pub fn bundled_bfile(a_number: &str) -> Option<&'static str> {
    BFILES.iter().find(|(a, _)| *a == a_number).map(|(_, t)| *t)
}

pub fn bundled_a_numbers() -> impl Iterator<Item = &'static str> {
    BFILES.iter().map(|(a, _)| *a)
}

/// `A32`, `a000032` and `000032` all become `A000032`.
pub fn normalize_a_number(s: &str) -> Result<String> {
    let digits = s.strip_prefix(['A', 'a']).unwrap_or(s);
    if digits.is_empty() || digits.len() > 7 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(LabError::UnknownSequence(s.to_string()));
    }
    let n: u32 = digits.parse().map_err(|_| LabError::UnknownSequence(s.to_string()))?;
    Ok(format!("A{n:06}"))
}

/// File name of the b-file for an A-number, e.g. `b000032.txt`.
pub fn bfile_name(a_number: &str) -> String {
    format!("b{}.txt", &a_number[1..])
}

const GROUP_TABLES: &[(&str, &str)] = &[
    ("trivial", include_str!("../fixtures/groups/trivial.tbl")),
    ("z6", include_str!("../fixtures/groups/z6.tbl")),
    ("s3", include_str!("../fixtures/groups/s3.tbl")),
    ("d8", include_str!("../fixtures/groups/d8.tbl")),
    ("z2^3", include_str!("../fixtures/groups/z2x3.tbl")),
    ("q8", include_str!("../fixtures/groups/q8.tbl")),
];

pub fn bundled_group_table(name: &str) -> Option<&'static str> {
    GROUP_TABLES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn bundled_group_names() -> impl Iterator<Item = &'static str> {
    GROUP_TABLES.iter().map(|(n, _)| *n)
}

/// A sequence from the local-realizability survey, with the slice of the
/// OEIS entry it is read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveySequence {
    pub id: &'static str,
    pub title: &'static str,
    pub a_number: &'static str,
    /// OEIS index of the term that becomes `a_1`.
    pub start: i64,
    /// Every term is multiplied by this.
    pub scale: u32,
    /// Number of terms used by default.
    pub depth: usize,
    /// Condition set deciding the per-prime verdicts.
    pub criterion: Criterion,
}

pub const SURVEY: [SurveySequence; 8] = [
    SurveySequence { id: "lucas", title: "Lucas numbers", a_number: "A000032", start: 1, scale: 1, depth: 38, criterion: Criterion::Dold },
    SurveySequence { id: "domb", title: "Domb numbers", a_number: "A002895", start: 1, scale: 1, depth: 18, criterion: Criterion::Dold },
    SurveySequence { id: "apery1", title: "Apery numbers (first kind)", a_number: "A005259", start: 0, scale: 1, depth: 17, criterion: Criterion::Dold },
    SurveySequence { id: "apery2", title: "Apery numbers (second kind)", a_number: "A005258", start: 0, scale: 1, depth: 20, criterion: Criterion::Dold },
    SurveySequence { id: "quadrinomial", title: "Quadrinomial coefficients", a_number: "A005725", start: 1, scale: 1, depth: 30, criterion: Criterion::Dold },
    SurveySequence { id: "fib-squares", title: "5 F(n^2)", a_number: "A054783", start: 1, scale: 5, depth: 13, criterion: Criterion::Dold },
    SurveySequence { id: "clf", title: "Catalan-Larcombe-French numbers", a_number: "A053175", start: 1, scale: 1, depth: 200, criterion: Criterion::Dold },
    SurveySequence { id: "delannoy", title: "Central Delannoy numbers", a_number: "A001850", start: 0, scale: 1, depth: 25, criterion: Criterion::Dold },
];

pub fn survey_sequence(id: &str) -> Option<&'static SurveySequence> {
    SURVEY.iter().find(|s| s.id == id)
}
