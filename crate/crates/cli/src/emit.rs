//! Rendering reports as text or as line-delimited JSON records.

use std::fmt::Write as _;

use cyclic_bar::homology::HomologyRow;
use cyclic_bar::report::{Record, Status};
use serde::Serialize;

use crate::run::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

/// One output line in `records` format. Tables and counts ride on the last
/// record of their job.
#[derive(Serialize)]
struct Line<'a> {
    job: usize,
    line: usize,
    #[serde(flatten)]
    record: &'a Record,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<&'a [HomologyRow]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counts: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

pub fn summary(report: &Report) -> String {
    format!(
        "{} jobs, {} records: {} pass, {} fail, {} flagged",
        report.jobs.len(),
        report.records().count(),
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Flagged)
    )
}

pub fn emit(report: &Report, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Records => {
            for job in &report.jobs {
                let last = job.records.len().saturating_sub(1);
                for (k, record) in job.records.iter().enumerate() {
                    let line = Line {
                        job: job.index,
                        line: job.line,
                        record,
                        table: job.table.as_deref().filter(|_| k == last),
                        counts: job.counts.as_deref().filter(|_| k == last),
                        elapsed_ms: job.elapsed_ms.filter(|_| k == last),
                    };
                    out.push_str(&serde_json::to_string(&line).expect("records serialize"));
                    out.push('\n');
                }
            }
        }
        Format::Text => {
            for job in &report.jobs {
                write!(out, "job {} (line {}): {}", job.index, job.line, job.text).unwrap();
                if let Some(ms) = job.elapsed_ms {
                    write!(out, "  [{ms} ms]").unwrap();
                }
                out.push('\n');
                for r in &job.records {
                    for l in r.to_string().lines() {
                        writeln!(out, "  {l}").unwrap();
                    }
                }
                if let Some(counts) = &job.counts {
                    let c: Vec<String> = counts.iter().map(usize::to_string).collect();
                    writeln!(out, "  nondegenerate simplices by degree: {}", c.join(" ")).unwrap();
                }
                for row in job.table.iter().flatten() {
                    writeln!(out, "  {row}").unwrap();
                }
            }
            writeln!(out, "{}", summary(report)).unwrap();
        }
    }
    out
}
