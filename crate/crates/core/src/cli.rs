//! Command-line front end. `run` returns the process exit code:
//! 0 when every identity holds, 1 when any fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::structures::sweep::SweepConfig;
use crate::structures::VerificationReport;
use crate::suite::{constraint_reports, report_all, sweep_report, verify_space, Space};

#[derive(Debug, Parser)]
#[command(name = "g2forms", version, about = "Exact verification of G2 and SU(3) structure identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the exact identities of one space, or of all of them.
    Verify(CommonArgs),
    /// Numerically search the ansatz parameter space for zeros.
    Sweep(CommonArgs),
    /// Extract the constraint systems and check the claimed solutions.
    Constraints(CommonArgs),
    /// Every exact check, with zeroed timings.
    ReportAll(CommonArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Default, clap::Args)]
pub struct CommonArgs {
    /// s7-squashed, s7-canonical, b7, lemma-1-1, connection, gram-blocks or lie-checks
    #[arg(long)]
    pub space: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_max: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a_max: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b_max: Option<f64>,
    #[arg(long)]
    pub resolution: Option<f64>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long)]
    pub t_samples: Option<usize>,
    /// JSON file with the same keys as the flags; flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Contents of a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FileConfig {
    pub space: Option<String>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub lambda_min: Option<f64>,
    pub lambda_max: Option<f64>,
    pub a_min: Option<f64>,
    pub a_max: Option<f64>,
    pub b_min: Option<f64>,
    pub b_max: Option<f64>,
    pub resolution: Option<f64>,
    pub tolerance: Option<f64>,
    pub t_samples: Option<usize>,
}

/// Flags merged over the config file and the defaults.
#[derive(Debug)]
pub struct Settings {
    pub space: Option<Space>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub sweep: SweepConfig,
}

fn load_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn range(name: &str, lo: f64, hi: f64) -> Result<(f64, f64)> {
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(Error::Config(format!("{name} range [{lo}, {hi}] is empty")));
    }
    Ok((lo, hi))
}

impl Settings {
    pub fn resolve(args: CommonArgs) -> Result<Settings> {
        let file = match &args.config {
            Some(p) => load_config(p)?,
            None => FileConfig::default(),
        };
        let d = SweepConfig::default();
        let sweep = SweepConfig {
            lambda: range(
                "lambda",
                args.lambda_min.or(file.lambda_min).unwrap_or(d.lambda.0),
                args.lambda_max.or(file.lambda_max).unwrap_or(d.lambda.1),
            )?,
            a: range(
                "a",
                args.a_min.or(file.a_min).unwrap_or(d.a.0),
                args.a_max.or(file.a_max).unwrap_or(d.a.1),
            )?,
            b: range(
                "b",
                args.b_min.or(file.b_min).unwrap_or(d.b.0),
                args.b_max.or(file.b_max).unwrap_or(d.b.1),
            )?,
            resolution: args.resolution.or(file.resolution).unwrap_or(d.resolution),
            tolerance: args.tolerance.or(file.tolerance).unwrap_or(d.tolerance),
            t_samples: args.t_samples.or(file.t_samples).unwrap_or(d.t_samples),
        };
        if !(sweep.resolution > 0.0 && sweep.resolution.is_finite()) {
            return Err(Error::Config("resolution must be positive".into()));
        }
        if !(sweep.tolerance > 0.0 && sweep.tolerance.is_finite()) {
            return Err(Error::Config("tolerance must be positive".into()));
        }
        if sweep.t_samples == 0 {
            return Err(Error::Config("t-samples must be at least 1".into()));
        }
        let space = args.space.or(file.space).map(|s| s.parse()).transpose()?;
        Ok(Settings {
            space,
            format: args.format.or(file.format).unwrap_or(Format::Text),
            output: args.output.or(file.output),
            sweep,
        })
    }

    /// The spaces a command acts on when none is named.
    fn spaces_or(&self, default: &[Space]) -> Vec<Space> {
        self.space.map_or_else(|| default.to_vec(), |s| vec![s])
    }
}

fn execute(command: Command) -> Result<(Vec<VerificationReport>, Format, Option<PathBuf>)> {
    let (args, kind) = match command {
        Command::Verify(a) => (a, 0),
        Command::Sweep(a) => (a, 1),
        Command::Constraints(a) => (a, 2),
        Command::ReportAll(a) => (a, 3),
    };
    let s = Settings::resolve(args)?;
    let families = [Space::S7Squashed, Space::B7];
    let reports = match kind {
        0 => s.spaces_or(&Space::ALL).into_iter().flat_map(verify_space).collect(),
        1 => {
            let mut out = Vec::new();
            for sp in s.spaces_or(&families) {
                out.push(sweep_report(sp, &s.sweep)?);
            }
            out
        }
        2 => {
            let mut out = Vec::new();
            for sp in s.spaces_or(&families) {
                out.extend(constraint_reports(sp)?);
            }
            out
        }
        _ => {
            if s.space.is_some() {
                return Err(Error::Config("report-all takes no --space".into()));
            }
            report_all()
        }
    };
    Ok((reports, s.format, s.output))
}

pub fn render(reports: &[VerificationReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(reports)? + "\n",
        Format::Text => {
            let mut out: String = reports.iter().map(|r| r.render_text() + "\n").collect();
            let failed = reports.iter().filter(|r| !r.ok()).count();
            out.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
            out
        }
    })
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parse `argv` and run; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok((reports, format, output)) => {
            let text = match render(&reports, format) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            if let Err(e) = emit(&text, output.as_deref()) {
                eprintln!("error: {e}");
                return 2;
            }
            if reports.iter().all(VerificationReport::ok) {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
