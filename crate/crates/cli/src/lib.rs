//! Scenario-driven front end: parse definitions and jobs, run them, and
//! render the records as text or JSON lines.

pub mod app;
pub mod emit;
pub mod run;
pub mod scenario;

pub use app::{execute, Cli, Outcome};
pub use emit::{emit, Format};
pub use run::{run, run_filtered, Report, RunConfig};
pub use scenario::{parse_scenario, ParseError, Scenario};
