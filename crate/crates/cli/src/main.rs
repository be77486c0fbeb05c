use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use narayana_cli::render::{render_poly, render_zero};
use narayana_cli::sweep::{run_sweep, SweepConfig};
use narayana_cli::{CliError, Format};
use narayana_core::narayana::gn_poly;
use narayana_core::theorems::zero_report;
use narayana_core::{Check, FamilyIndex, Rational};

#[derive(Parser)]
#[command(
    name = "gnarayana",
    version,
    about = "Exact computations and certified checks for generalized Narayana polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of N_{n,m}(x).
    Poly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certify the real zeros of N_{n,m}(x), n >= m+2, and run the per-member checks.
    Zero {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Relative refinement: enclosures shrink to (initial width) * 2^-bits.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
        bits: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep the selected checks over a grid of (n, m).
    Verify {
        /// Comma-separated subset of recurrence,bounds,signs,monotonic,interlace,proposition,census,chu.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Option<Vec<Check>>,
        #[arg(long, default_value_t = 0)]
        m_min: u32,
        #[arg(long, default_value_t = 10)]
        m_max: u32,
        /// n runs up to m+K, starting where each check's regime begins.
        #[arg(long, default_value_t = 20)]
        n_offset_max: u32,
        #[arg(long, default_value_t = 64)]
        bits: u32,
        /// Write the report here and print only the summary.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads; defaults to the available cores.
        #[arg(long)]
        parallelism: Option<usize>,
        /// Require the last proposition upper bound to fall below this rational, e.g. 1/100.
        #[arg(long, value_parser = parse_rational)]
        epsilon: Option<Rational>,
    },
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse()
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|e| format!("not a rational: {e}"))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Poly { n, m, format } => {
            let idx = FamilyIndex::new(n, m);
            print!("{}", render_poly(idx, &gn_poly(idx), format)?);
            Ok(0)
        }
        Command::Zero { n, m, bits, format } => {
            let idx = FamilyIndex::new(n, m);
            let report = zero_report(idx, bits)?;
            print!("{}", render_zero(&report, &gn_poly(idx), format)?);
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Verify { checks, m_min, m_max, n_offset_max, bits, out, format, parallelism, epsilon } => {
            let config = SweepConfig {
                m_min,
                m_max,
                n_offset_max,
                bits,
                checks: checks.unwrap_or_else(|| Check::ALL.to_vec()),
                format,
                output_path: out,
                parallelism: parallelism.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get())),
                epsilon,
            };
            let report = run_sweep(&config)?;
            let rendered = report.render(config.format)?;
            match &config.output_path {
                Some(path) => {
                    std::fs::write(path, rendered)?;
                    print!("{}", report.summary_text());
                }
                None => print!("{rendered}"),
            }
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gnarayana: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
