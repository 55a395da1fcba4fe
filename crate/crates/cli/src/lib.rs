//! Front end of the workbench: settings, value commands and suites.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use qiso_report::{Status, SuiteReport};
use qiso_scalars::parse_rational;
use serde_json::json;

use crate::args::{Cli, Command};
pub use crate::config::{Format, Settings};
pub use crate::error::CliError;
pub use crate::suites::{Suite, Workbench};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Config file first, then flags.
pub fn settings(cli: &Cli) -> Result<Settings, CliError> {
    let mut s = Settings::default();
    if let Some(p) = &cli.config {
        s.apply_file(p)?;
    }
    if let Some(t) = &cli.t {
        s.t = parse_rational(t)?;
    }
    if let Some(q) = &cli.q {
        s.q = config::parse_q(q)?;
    }
    if let Some(f) = cli.format {
        s.format = f;
    }
    if let Some(v) = cli.max_l2 {
        s.max_l2 = v;
    }
    if let Some(v) = cli.top_l2 {
        s.top_l2 = v;
    }
    if let Some(v) = cli.hopf_degree {
        s.hopf_degree = v;
    }
    if let Some(v) = cli.confluence_bound {
        s.confluence_bound = v;
    }
    s.deterministic |= cli.deterministic;
    s.verbose |= cli.verbose;
    Ok(s)
}

/// Parse arguments, run, write to `out`, and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let st = settings(cli)?;
    let format = st.format;
    let wb = Workbench::new(st)?;
    let value = match &cli.command {
        Command::Normalize { expr } => commands::normalize(&wb, expr)?,
        Command::Coproduct { expr } => commands::coproduct(&wb, expr)?,
        Command::Counit { expr } => commands::counit(&wb, expr)?,
        Command::Antipode { expr } => commands::antipode(&wb, expr)?,
        Command::Haar { expr } => commands::haar(&wb, expr)?,
        Command::Pair { f, x } => commands::pair(&wb, f, x)?,
        Command::Act { f, x, right } => commands::act(&wb, f, x, *right)?,
        Command::Basis { l2 } => commands::basis(&wb, *l2)?,
        Command::Gram { l2 } => commands::gram(&wb, *l2)?,
        Command::Corep { l2 } => commands::corep(&wb, *l2)?,
        Command::Extract { what } => commands::extract(&wb, what)?,
        Command::Verify { suite, only } => {
            let name = suite.clone().or_else(|| wb.settings.suite.clone()).ok_or_else(|| CliError::Usage("verify needs a suite".into()))?;
            let rep = wb.run(Suite::from_name(&name)?, only)?;
            write_report(out, &rep, format, wb.settings.verbose);
            return Ok(if rep.ok() { EXIT_OK } else { EXIT_CHECK_FAILED });
        }
        Command::Report => return report(&wb, out, format),
    };
    let _ = match format {
        Format::Text => writeln!(out, "{}", value.text),
        Format::Json => writeln!(out, "{}", value.json),
    };
    Ok(EXIT_OK)
}

pub fn write_report(out: &mut dyn Write, rep: &SuiteReport, format: Format, verbose: bool) {
    let _ = match format {
        Format::Text => write!(out, "{}", rep.render_text(verbose)),
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&json!({ "suite": rep.suite, "ok": rep.ok(), "checks": rep.to_json() })).expect("json")
        ),
    };
}

/// Counts per suite. The exit code ignores the printed suite, whose lines
/// record the literal forms.
fn report(wb: &Workbench, out: &mut dyn Write, format: Format) -> Result<i32, CliError> {
    let mut rows = Vec::new();
    let mut ok = true;
    for s in Suite::ALL.iter().copied().chain([Suite::Printed]) {
        let rep = wb.run(s, &[])?;
        if s != Suite::Printed {
            ok &= rep.ok();
        }
        rows.push((s.name(), rep.count(Status::Pass), rep.count(Status::Fail), rep.count(Status::NegativeControl), rep.checks.iter().map(|c| c.millis).sum::<u64>()));
    }
    let _ = match format {
        Format::Text => {
            let mut s = format!("{:<14} {:>5} {:>5} {:>5} {:>9}\n", "suite", "pass", "fail", "ctrl", "ms");
            for (n, p, f, c, ms) in &rows {
                s.push_str(&format!("{n:<14} {p:>5} {f:>5} {c:>5} {ms:>9}\n"));
            }
            write!(out, "{s}")
        }
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|(n, p, f, c, ms)| json!({ "suite": n, "pass": p, "fail": f, "negative_control": c, "millis": ms })).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}
