//! Command line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cyclic_bar::report::Status;
use cyclic_bar::sset::format::from_text;

use crate::emit::{emit, summary, Format};
use crate::run::{run_filtered, RunConfig};
use crate::scenario::{
    parse_scenario, scenario_for_set, Job, JobKind, JobBody, Scenario, Space, SpaceExpr, VerifyJob,
};

/// Scenario used by `counterexample` when no file is given.
pub const PARTIAL_MONOID_SCENARIO: &str = "\
monoid M: elems 1,x,0; unit 1; mul x*x=0 x*0=0 0*x=0 0*0=0
situation S = submonoid M {1,0}
counterexample partial-monoid S p=3
";

pub const SELFTEST_SCENARIO: &str = include_str!("../scenarios/selftest.scn");

#[derive(Debug, Parser)]
#[command(name = "cybar", version, about = "Nerves, generalized wedges and cyclic bar constructions with integral homology")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Truncation level for every construction.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub trunc: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Simplex cap per construction.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Run independent jobs on all cores; output order is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Report wall-clock time per job.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct the spaces of a scenario, or a simplicial set file.
    Build { file: PathBuf },
    /// Run the verification jobs of a scenario.
    Verify { file: PathBuf },
    /// Homology tables for a scenario or a simplicial set file.
    Homology { file: PathBuf },
    /// Search for the partial-monoid counterexample.
    Counterexample { file: Option<PathBuf> },
    /// Run the built-in scenario.
    Selftest,
    /// Run every job of a scenario.
    Run { file: PathBuf },
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    /// 0 when nothing failed, 1 when a job failed, 2 on unusable input.
    pub code: u8,
}

impl Outcome {
    fn input_error(msg: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        }
    }
}

fn is_sset_text(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("sset "))
}

/// A scenario, or a bare simplicial set wrapped as the space `input`.
pub fn load(text: &str) -> Result<Scenario, String> {
    if is_sset_text(text) {
        let set = from_text(text).map_err(|e| e.to_string())?;
        Ok(scenario_for_set(set))
    } else {
        parse_scenario(text).map_err(|e| e.to_string())
    }
}

fn synthetic(kind: JobKind, name: &str, space: &Space) -> Option<Job> {
    let body = match kind {
        JobKind::Build => JobBody::Build(space.clone()),
        JobKind::Homology => JobBody::Homology {
            space: space.clone(),
            upto: match &space.expr {
                SpaceExpr::Given(x) => Some(x.truncation().saturating_sub(1)),
                _ => None,
            },
            reduced: false,
            expect: None,
        },
        JobKind::Verify => JobBody::Verify(VerifyJob::Identities(space.clone())),
        JobKind::Counterexample => return None,
    };
    let verb = match kind {
        JobKind::Verify => "verify identities",
        k => k.verb(),
    };
    Some(Job {
        line: 0,
        text: format!("{verb} {name}"),
        body,
    })
}

/// When a scenario has no jobs of the requested kind, run that kind on every
/// defined space instead.
fn ensure_jobs(sc: &mut Scenario, kind: JobKind) -> Result<(), String> {
    if sc.jobs.iter().any(|j| j.kind() == kind) {
        return Ok(());
    }
    let extra: Vec<Job> = match kind {
        JobKind::Counterexample => sc
            .situations
            .values()
            .filter(|s| s.partial.is_some())
            .map(|s| Job {
                line: 0,
                text: format!("counterexample partial-monoid {} p=3", s.label),
                body: JobBody::PartialMonoid(s.clone(), 3),
            })
            .collect(),
        _ => sc
            .spaces
            .iter()
            .filter_map(|(name, space)| synthetic(kind, name, space))
            .collect(),
    };
    if extra.is_empty() {
        return Err(format!("nothing to {}: no matching jobs or definitions", kind.verb()));
    }
    sc.jobs.extend(extra);
    Ok(())
}

impl JobKind {
    fn verb(self) -> &'static str {
        match self {
            JobKind::Build => "build",
            JobKind::Homology => "homology",
            JobKind::Verify => "verify",
            JobKind::Counterexample => "counterexample",
        }
    }
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn execute(cli: &Cli) -> Outcome {
    let (text, kind) = match &cli.command {
        Command::Build { file } => (read(file), Some(JobKind::Build)),
        Command::Verify { file } => (read(file), Some(JobKind::Verify)),
        Command::Homology { file } => (read(file), Some(JobKind::Homology)),
        Command::Counterexample { file } => (
            file.as_ref().map_or(Ok(PARTIAL_MONOID_SCENARIO.to_string()), read),
            Some(JobKind::Counterexample),
        ),
        Command::Selftest => (Ok(SELFTEST_SCENARIO.to_string()), None),
        Command::Run { file } => (read(file), None),
    };
    let mut sc = match text.and_then(|t| load(&t)) {
        Ok(sc) => sc,
        Err(e) => return Outcome::input_error(e),
    };
    let g = &cli.global;
    if let Some(t) = g.trunc {
        sc.trunc = t as usize;
    }
    if let Some(s) = g.seed {
        sc.seed = s;
    }
    if let Some(c) = g.cap {
        sc.cap = c;
    }
    if let Some(kind) = kind {
        if let Err(e) = ensure_jobs(&mut sc, kind) {
            return Outcome::input_error(e);
        }
    }
    let cfg = RunConfig {
        parallel: g.parallel,
        timing: g.timing,
    };
    let report = run_filtered(&sc, cfg, |j| kind.is_none_or(|k| j.kind() == k));
    let mut stderr = String::new();
    let flagged = report.count(Status::Flagged);
    if flagged > 0 {
        stderr.push_str(&format!("warning: {flagged} record(s) flagged\n"));
    }
    if g.format == Format::Records {
        stderr.push_str(&summary(&report));
        stderr.push('\n');
    }
    Outcome {
        stdout: emit(&report, g.format),
        stderr,
        code: u8::from(report.failed()),
    }
}
