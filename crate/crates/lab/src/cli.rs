//! Command-line interface of the `dold` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dold::algebraic::{
    construct_matrix, ell_algebraically_realizable, ell_sequence, enumerate_endomorphisms, find_realizing_endomorphism,
    fix_counts, torsion_fix_counts, ConstructionParams, FiniteGroup,
};
use dold::classify::{self, BernoulliStatus, EulerStatus, EulerStrength, Kind};
use dold::congruence::{self, GridSummary};
use dold::realize::{check_realizable, magical_report};
use dold::{arith, classical, Criterion, Nat, Sequence1};

use crate::bfile::OffsetPolicy;
use crate::error::{LabError, Result};
use crate::experiment::{self, Checks, ExperimentSpec};
use crate::fetch::Fetcher;
use crate::fixtures;
use crate::report::{Format, Grid};
use crate::source::{self, LoadOptions};

#[derive(Debug, Parser)]
#[command(name = "dold", version, about = "Experiments on realizable integer sequences")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format: table, json or csv.
    #[arg(long, global = true, default_value = "table")]
    pub format: Format,
    /// Allow downloading b-files that are neither bundled nor cached.
    #[arg(long, global = true, conflicts_with = "offline")]
    pub online: bool,
    /// Use bundled fixtures only (the default).
    #[arg(long, global = true)]
    pub offline: bool,
    /// Directory of b-files taking precedence over the bundled ones.
    #[arg(long, global = true)]
    pub fixtures_dir: Option<PathBuf>,
    /// shift-to-1 or strict.
    #[arg(long, global = true, default_value = "shift-to-1")]
    pub offset_policy: OffsetPolicy,
    /// Take absolute values of signed entries.
    #[arg(long, global = true)]
    pub abs: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Dold,
    Full,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Self {
        match c {
            CriterionArg::Dold => Criterion::Dold,
            CriterionArg::Full => Criterion::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Bernoulli,
    Euler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    Kummer,
    Young,
    Lemma5,
    StayingAlive,
    Wagstaff,
    EulerAdditive,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print e, t, b and d.
    Classical {
        #[arg(long, default_value_t = 20)]
        upto: usize,
    },
    /// Dold, sign, monotonicity and Arias checks on a whole sequence.
    Check {
        /// Built-in name, survey id, A-number or b-file path.
        sequence: String,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Local realizability at every prime up to a bound.
    Localscan {
        sequence: String,
        #[arg(long)]
        upto: Option<usize>,
        /// Scan primes up to this bound.
        #[arg(long, default_value_t = 200)]
        primes: u64,
        /// Scan this prime only.
        #[arg(long, conflicts_with = "primes")]
        prime: Option<u64>,
        /// Verdict criterion; defaults to dold for survey ids, full otherwise.
        #[arg(long)]
        criterion: Option<CriterionArg>,
        /// Also check the shifted sequences up to this shift.
        #[arg(long)]
        max_shift: Option<usize>,
    },
    /// Bernoulli or Euler (ir)regularity of small primes.
    Regular {
        #[arg(long, value_enum, default_value = "bernoulli")]
        kind: KindArg,
        #[arg(long, default_value_t = 200)]
        primes: u64,
        /// Terms of t or e to compute.
        #[arg(long)]
        upto: Option<usize>,
    },
    /// The sequences l^(k,m,p) and their torus realization.
    Ell {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 24)]
        upto: usize,
    },
    /// Endomorphisms of a finite group and their fixed-point counts.
    Groups {
        /// Built-in group name.
        #[arg(long, default_value = "s3")]
        group: String,
        /// Cayley table file instead of a built-in group.
        #[arg(long, conflicts_with = "group")]
        table: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        upto: usize,
        /// Print the Cayley table in the file format and stop.
        #[arg(long)]
        export: bool,
        /// Comma-separated target counts to realize.
        #[arg(long)]
        target: Option<String>,
    },
    /// Realizability of the shifts a_(n+k).
    Magical {
        sequence: String,
        #[arg(long)]
        upto: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_shift: usize,
        #[arg(long)]
        shift: Option<usize>,
    },
    /// Run a congruence oracle over a parameter grid.
    Oracle {
        #[arg(value_enum)]
        name: OracleArg,
        #[arg(long, default_value_t = 31)]
        primes: u64,
        #[arg(long, default_value_t = 60)]
        upto: usize,
    },
    /// Load an OEIS b-file and print it.
    Fetch {
        a_number: String,
        #[arg(long)]
        upto: Option<usize>,
    },
}

impl GlobalArgs {
    pub fn fetcher(&self) -> Fetcher {
        Fetcher::from_env(self.online && !self.offline, self.fixtures_dir.clone())
    }

    fn load_options(&self, upto: Option<usize>) -> LoadOptions {
        LoadOptions { upto, policy: self.offset_policy, abs: self.abs }
    }
}

fn primes_for(bound: u64, single: Option<u64>) -> Result<Vec<u64>> {
    match single {
        Some(q) if !arith::is_prime(q) => Err(dold::Error::NotPrime(q).into()),
        Some(q) => Ok(vec![q]),
        None => Ok(arith::primes_in_range(2, bound)),
    }
}

fn seq_cells(s: &Sequence1) -> String {
    s.values().iter().map(Nat::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs one command and returns what it prints on stdout.
pub fn execute(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    let fmt = g.format;
    match &cli.command {
        Command::Classical { upto } => {
            if *upto == 0 {
                return Err(LabError::Usage("--upto must be positive".into()));
            }
            let e = classical::sequence_e(*upto);
            let db = classical::derived_bernoulli(*upto);
            let mut grid = Grid::new(["n", "e", "t", "b", "d"]);
            for n in 1..=*upto {
                grid.push(vec![
                    n.to_string(),
                    e.get(n).to_string(),
                    db.t.get(n).to_string(),
                    db.b.get(n).to_string(),
                    db.d.get(n).to_string(),
                ]);
            }
            Ok(grid.render(fmt))
        }
        Command::Check { sequence, upto } => {
            let loaded = source::load(sequence, &g.fetcher(), &g.load_options(*upto))?;
            let spec = ExperimentSpec {
                sequence_id: loaded.id,
                sequence: loaded.sequence,
                primes: Vec::new(),
                criterion: loaded.criterion,
                checks: Checks { global: true, local: false, magical: None },
            };
            Ok(experiment::run(&spec)?.render(fmt))
        }
        Command::Localscan { sequence, upto, primes, prime, criterion, max_shift } => {
            let loaded = source::load(sequence, &g.fetcher(), &g.load_options(*upto))?;
            let spec = ExperimentSpec {
                sequence_id: loaded.id,
                sequence: loaded.sequence,
                primes: primes_for(*primes, *prime)?,
                criterion: criterion.map_or(loaded.criterion, Criterion::from),
                checks: Checks { global: true, local: true, magical: *max_shift },
            };
            Ok(experiment::run(&spec)?.render(fmt))
        }
        Command::Regular { kind, primes, upto } => regular(*kind, *primes, *upto, fmt),
        Command::Ell { k, m, p, upto } => ell(*k, *m, *p, *upto, fmt),
        Command::Groups { group, table, upto, export, target } => {
            let grp = match table {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
                    FiniteGroup::parse(&text)?
                }
                None => FiniteGroup::builtin(group).ok_or_else(|| {
                    LabError::Usage(format!(
                        "unknown group {group:?} (one of {})",
                        FiniteGroup::BUILTIN_NAMES.join(", ")
                    ))
                })?,
            };
            if *export {
                return Ok(grp.to_table_text());
            }
            groups(&grp, *upto, target.as_deref(), fmt)
        }
        Command::Magical { sequence, upto, max_shift, shift } => {
            let loaded = source::load(sequence, &g.fetcher(), &g.load_options(*upto))?;
            let rep = magical_report(&loaded.sequence, shift.unwrap_or(*max_shift))?;
            let mut grid = Grid::new(["shift", "status", "condition", "n", "value"]);
            for (k, r) in &rep.reports {
                if shift.is_some_and(|s| s != *k) {
                    continue;
                }
                let row = match r.first_failure(Criterion::Full) {
                    None => vec![k.to_string(), "pass-up-to".into(), String::new(), r.checked_upto.to_string(), String::new()],
                    Some((c, w)) => vec![
                        k.to_string(),
                        "fail-at".into(),
                        c.name().into(),
                        w.n.to_string(),
                        w.value.to_string(),
                    ],
                };
                grid.push(row);
            }
            Ok(grid.render(fmt))
        }
        Command::Oracle { name, primes, upto } => oracle(*name, *primes, *upto, fmt),
        Command::Fetch { a_number, upto } => {
            let a = fixtures::normalize_a_number(a_number)?;
            let bf = g.fetcher().fetch(&a)?;
            // validates the policy even though the raw entries are printed
            bf.to_sequence(g.offset_policy, true)?;
            let mut grid = Grid::new(["n", "value"]);
            for (i, v) in bf.values.iter().take(upto.unwrap_or(usize::MAX)).enumerate() {
                grid.push(vec![(bf.offset + i as i64).to_string(), v.to_string()]);
            }
            Ok(grid.render(fmt))
        }
    }
}

fn regular(kind: KindArg, bound: u64, upto: Option<usize>, fmt: Format) -> Result<String> {
    let mut grid = Grid::new(["prime", "status", "index", "strength"]);
    match kind {
        KindArg::Bernoulli => {
            let depth = upto.unwrap_or((bound.saturating_sub(3) / 2).max(1) as usize);
            for c in classify::scan_primes(Kind::Bernoulli, bound, depth)? {
                let (status, idx) = match c.bernoulli {
                    Some(BernoulliStatus::Irregular { k }) => ("irregular", k.to_string()),
                    _ => ("regular", String::new()),
                };
                grid.push(vec![c.q.to_string(), status.into(), idx, String::new()]);
            }
        }
        KindArg::Euler => {
            let depth = upto.unwrap_or(source::DEFAULT_DEPTH.max(bound as usize / 2));
            for c in classify::scan_primes(Kind::Euler, bound, depth)? {
                let (status, idx) = match c.euler {
                    Some(EulerStatus::Irregular { n }) => ("irregular", n.to_string()),
                    _ => ("regular", String::new()),
                };
                let strength = match c.euler_strength {
                    EulerStrength::StrongUpTo(n) => format!("strong (n<={n})"),
                    EulerStrength::Weak { n } => format!("weak (q | e_{n})"),
                    EulerStrength::NotApplicable => String::new(),
                };
                grid.push(vec![c.q.to_string(), status.into(), idx, strength]);
            }
        }
    }
    Ok(grid.render(fmt))
}

fn ell(k: u64, m: u32, p: u64, upto: usize, fmt: Format) -> Result<String> {
    let params = ConstructionParams::new(k, m, p)?;
    let l = ell_sequence(&params, upto);
    let mut grid = Grid::new(["key", "value"]);
    grid.push(vec!["sequence".into(), seq_cells(&l)]);
    grid.push(vec!["realizable".into(), check_realizable(&l).is_realizable_consistent().to_string()]);
    let algebraic = match ell_algebraically_realizable(k, m, p) {
        Ok(b) => b.to_string(),
        Err(dold::Error::Unsupported(_)) => "n/a (p = 2)".into(),
        Err(e) => return Err(e.into()),
    };
    grid.push(vec!["algebraically realizable".into(), algebraic]);
    if let Some(c) = params.c {
        let pair = construct_matrix(p, m)?;
        grid.push(vec!["A".into(), pair.a.to_string()]);
        grid.push(vec!["B".into(), pair.b.to_string()]);
        grid.push(vec!["adjusted".into(), pair.adjusted.to_string()]);
        let fix = torsion_fix_counts(&pair.a, c, p, upto)?;
        grid.push(vec![format!("fix(A^{c})"), seq_cells(&fix)]);
        grid.push(vec!["matches".into(), (fix.values() == l.values()).to_string()]);
    }
    Ok(grid.render(fmt))
}

fn groups(grp: &FiniteGroup, upto: usize, target: Option<&str>, fmt: Format) -> Result<String> {
    if upto == 0 {
        return Err(LabError::Usage("--upto must be positive".into()));
    }
    if let Some(t) = target {
        let values = t
            .split(',')
            .map(|x| x.trim().parse::<Nat>().map_err(|_| LabError::Usage(format!("bad target entry {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let target = Sequence1::new("target", values)?;
        let mut grid = Grid::new(["target", "endomorphism"]);
        let found = find_realizing_endomorphism(grp, &target).map_or("none".to_string(), |e| e.to_string());
        grid.push(vec![seq_cells(&target), found]);
        return Ok(grid.render(fmt));
    }
    let mut grid = Grid::new(["index", "images", "automorphism", "fix"]);
    for (i, theta) in enumerate_endomorphisms(grp).iter().enumerate() {
        grid.push(vec![
            i.to_string(),
            theta.to_string(),
            theta.is_automorphism().to_string(),
            seq_cells(&fix_counts(grp, theta, upto)),
        ]);
    }
    Ok(grid.render(fmt))
}

fn oracle(name: OracleArg, p_max: u64, n_max: usize, fmt: Format) -> Result<String> {
    if n_max == 0 {
        return Err(LabError::Usage("--upto must be positive".into()));
    }
    let names: Vec<OracleArg> = match name {
        OracleArg::All => vec![
            OracleArg::Kummer,
            OracleArg::Young,
            OracleArg::Lemma5,
            OracleArg::StayingAlive,
            OracleArg::Wagstaff,
            OracleArg::EulerAdditive,
        ],
        one => vec![one],
    };
    let b = classical::bernoulli_upto(n_max);
    let e = classical::euler_upto(n_max);
    let mut grid = Grid::new(["oracle", "checked", "rejected", "failures", "first failure"]);
    let mut failed = Vec::new();
    for n in names {
        let (label, s): (&str, GridSummary) = match n {
            OracleArg::Kummer => ("kummer", congruence::kummer_grid(&b, p_max, 3, n_max)?),
            OracleArg::Young => ("young", congruence::young_grid(&b, p_max, 3, n_max)?),
            OracleArg::Lemma5 => ("lemma5", congruence::lemma_five_grid(&b, n_max)?),
            OracleArg::StayingAlive => ("staying-alive", congruence::staying_alive_grid(n_max)?),
            OracleArg::Wagstaff => ("wagstaff", congruence::wagstaff_grid(&e, n_max.min(15), p_max.min(13))?),
            OracleArg::EulerAdditive => ("euler-additive", congruence::euler_additive_grid(&e, p_max, 3, n_max)?),
            OracleArg::All => unreachable!(),
        };
        let first = s.failures.first().map(|c| c.description.clone()).unwrap_or_default();
        if !s.all_hold() {
            failed.push(label);
        }
        grid.push(vec![label.into(), s.checked.to_string(), s.rejected.to_string(), s.failures.len().to_string(), first]);
    }
    let out = grid.render(fmt);
    if failed.is_empty() {
        Ok(out)
    } else {
        Err(LabError::Core(dold::Error::VerificationFailed(format!("{} failed\n{out}", failed.join(", ")))))
    }
}
