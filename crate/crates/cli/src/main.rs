//! `ellipsoid`: surface area, capacitance and demagnetizing factors of ellipsoids.

mod commands;
mod numfmt;
mod record;
mod sweep;

use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ellipsoid_core::verify::{run_suite, Suite, VerifyReport};
use ellipsoid_core::{Error, QuadratureSpec, Tolerance};

use record::{csv_writer, OutputRecord};
use sweep::{Grid, Quantity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Tables,
    Identities,
    Oracle,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ellipsoid",
    version,
    about = "Ellipsoid surface area, capacitance and demagnetizing factors"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Relative accuracy target for the series and quadratures
    #[arg(long, global = true, default_value_t = 1e-15)]
    rel_tol: f64,

    /// Cap on series terms, or quadrature nodes, per evaluation
    #[arg(long, global = true, default_value_t = Tolerance::default().max_terms)]
    max_terms: usize,

    /// Significant digits of printed results
    #[arg(long, global = true, default_value_t = 15, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,

    /// Magnetic susceptibility used for L, M, N and W
    #[arg(long, global = true, default_value_t = 2.0)]
    kappa: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Surface area of the ellipsoid with semi-axes A B C (any order)
    Area {
        #[arg(num_args = 3, required = true, allow_negative_numbers = true)]
        axes: Vec<f64>,
    },
    /// Capacitance of an ellipsoid with n >= 3 semi-axes; c = 0 gives a disk when n = 3
    Cap {
        #[arg(num_args = 3.., required = true, allow_negative_numbers = true)]
        axes: Vec<f64>,
    },
    /// Demagnetizing coefficients n_a, n_b, n_c, factors L, M, N and the constant W
    Demag {
        #[arg(num_args = 3, required = true, allow_negative_numbers = true)]
        axes: Vec<f64>,
    },
    /// Evaluate a quantity over a grid of axis ratios with a = 1
    Sweep {
        #[arg(value_enum)]
        quantity: Quantity,
        /// Values of b/a: a list `0.25,0.5,1` or a range `start:stop:count`
        #[arg(long)]
        b_over_a: Grid,
        /// Values of c/a, in the same syntax
        #[arg(long)]
        c_over_a: Grid,
    },
    /// Check closed forms against published tables, identities and the quadrature oracle
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Print every check in text mode, not only failures
        #[arg(long)]
        verbose: bool,
    },
}

enum Failure {
    Verification,
    Core(Error),
    Convergence(String),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn color_enabled() -> bool {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    !no_color && io::stdout().is_terminal()
}

fn paint(s: &str, ok: bool, color: bool) -> String {
    if !color {
        return s.to_string();
    }
    let code = if ok { 32 } else { 31 };
    format!("\x1b[{code}m{s}\x1b[0m")
}

fn write_record(rec: &OutputRecord, format: Format, digits: usize, out: &mut impl Write) -> Result<(), Failure> {
    match format {
        Format::Text => rec.write_text(out, digits)?,
        Format::Json => rec.write_json(out, digits)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(rec.csv_header())?;
            w.write_record(rec.csv_row(digits))?;
            w.flush()?;
        }
    }
    Ok(())
}

fn write_report(report: &VerifyReport, format: Format, verbose: bool, out: &mut impl Write) -> Result<(), Failure> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "suite",
                "name",
                "value",
                "reference",
                "residual",
                "tolerance",
                "comparison",
                "passed",
                "error",
            ])?;
            for c in &report.checks {
                let comparison = match c.comparison {
                    ellipsoid_core::verify::Comparison::Abs => "abs",
                    ellipsoid_core::verify::Comparison::Rel => "rel",
                };
                w.write_record([
                    c.suite.as_str().to_string(),
                    c.name.clone(),
                    c.value.to_string(),
                    c.reference.to_string(),
                    format!("{:e}", c.residual),
                    format!("{:e}", c.tolerance),
                    comparison.to_string(),
                    c.passed.to_string(),
                    c.error.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let color = color_enabled();
            for c in report.checks.iter().filter(|c| verbose || !c.passed) {
                let tag = paint(if c.passed { "PASS" } else { "FAIL" }, c.passed, color);
                match &c.error {
                    Some(e) => writeln!(out, "{tag} {}: {e}", c.name)?,
                    None => writeln!(
                        out,
                        "{tag} {}: residual {:.3e} (limit {:.0e})",
                        c.name, c.residual, c.tolerance
                    )?,
                }
            }
            let verdict = paint(if report.passed { "PASS" } else { "FAIL" }, report.passed, color);
            writeln!(
                out,
                "{verdict} {}: {}/{} checks passed, max residual {:.3e}",
                report.suite.as_str(),
                report.total - report.failures,
                report.total,
                report.max_residual
            )?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if !(cli.rel_tol > 0.0 && cli.rel_tol < 1.0) {
        return Err(Failure::Usage(format!(
            "--rel-tol must lie in (0, 1), got {}",
            cli.rel_tol
        )));
    }
    let tol = Tolerance {
        max_terms: cli.max_terms,
        ..Tolerance::with_rel(cli.rel_tol)
    };
    let digits = usize::from(cli.digits);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::Area { axes } => write_record(&commands::area(&axes, tol)?, cli.format, digits, &mut out)?,
        Command::Cap { axes } => write_record(&commands::cap(&axes, tol)?, cli.format, digits, &mut out)?,
        Command::Demag { axes } => {
            write_record(&commands::demag(&axes, cli.kappa, tol)?, cli.format, digits, &mut out)?
        }
        Command::Sweep {
            quantity,
            b_over_a,
            c_over_a,
        } => {
            let report = sweep::run(quantity, &b_over_a.0, &c_over_a.0, tol);
            match cli.format {
                Format::Text => report.write_text(&mut out, digits)?,
                Format::Csv => report.write_csv(&mut out, digits)?,
                Format::Json => report.write_json(&mut out, digits)?,
            }
            out.flush()?;
            if let Some(row) = report.first_error() {
                return Err(Failure::Convergence(format!(
                    "sweep point b/a = {}, c/a = {}: {}",
                    row.b_over_a,
                    row.c_over_a,
                    row.message.as_deref().unwrap_or("evaluation failed")
                )));
            }
        }
        Command::Verify { suite, verbose } => {
            // the oracle is not asked for more than about twelve digits
            let q = QuadratureSpec::with_rel(cli.rel_tol.max(1e-12));
            let report = run_suite(suite.into(), tol, q)?;
            write_report(&report, cli.format, verbose, &mut out)?;
            out.flush()?;
            if !report.passed {
                return Err(Failure::Verification);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_convergence_failure() { 3 } else { 2 })
        }
        Err(Failure::Convergence(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
