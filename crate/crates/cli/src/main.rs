mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::ReportFormat;

#[derive(Debug, Parser)]
#[command(name = "p4geo", version, about = "Numerical invariants of smooth surfaces in P4 on hypersurfaces of low degree")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

impl Toggle {
    fn is_on(self) -> bool {
        self == Toggle::On
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CatalogName {
    ConicBundles,
    Scrolls,
    QuarticDegz,
    SegreConfig,
    ScrollReport,
    AppendixDegrees,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the Hilbert triples (d, H.K, chi) allowed for slope alpha on a hypersurface of degree m.
    Families {
        #[arg(long)]
        m: i64,
        /// Slope K^2/chi as an exact rational "p/q".
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
        /// Discard triples violating the Hodge index inequality (H.K)^2 >= d K^2.
        #[arg(long, value_enum, default_value = "off")]
        hodge: Toggle,
        /// Keep only triples with H.K >= 1.
        #[arg(long = "hk-positive", value_enum, default_value = "off")]
        hk_positive: Toggle,
    },
    /// Check a JSON record (or array of records) of surface invariants.
    Check {
        path: PathBuf,
        /// Also test the discriminant of the extension bundle for a hypersurface of degree m.
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
    },
    /// Print one of the fixed catalogs.
    Catalog {
        #[arg(value_enum)]
        name: CatalogName,
        /// Degree cap for `scrolls`, or a single degree for `quartic-degz`.
        #[arg(long)]
        d: Option<i64>,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
    },
}

/// Output and exit status of a finished command.
pub struct Finished {
    pub stdout: String,
    pub code: u8,
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("P4GEO_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("P4GEO_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<Finished, String> {
    configure_threads()?;
    match cli.command {
        Command::Families { m, alpha, format, hodge, hk_positive } => {
            commands::families(m, &alpha, hodge.is_on(), hk_positive.is_on(), format)
        }
        Command::Check { path, m, format } => commands::check(&path, m, format),
        Command::Catalog { name, d, format } => match name {
            CatalogName::ConicBundles => commands::conic_bundles(format),
            CatalogName::Scrolls => commands::scrolls(d.unwrap_or(100), format),
            CatalogName::QuarticDegz => commands::quartic_degz(d, format),
            CatalogName::SegreConfig => commands::segre_config(format),
            CatalogName::ScrollReport => commands::scroll_report(format),
            CatalogName::AppendixDegrees => commands::appendix_degrees(format),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(done) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(done.stdout.as_bytes());
            let _ = out.flush();
            ExitCode::from(done.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
