use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

mod output;
mod targets;

use output::{CountsRecord, ListRecord, RunRecord};

#[derive(Parser)]
#[command(name = "overq", version, about = "Exact q-series identities for overpartition families")]
struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compare both sides of one or more identities.
    Verify {
        /// theorem:<id>, classical:<id>, bailey:<pair>, lemma:<pair>,
        /// chain, chain:<stage-or-prefix>, or all.
        #[arg(long)]
        target: String,
        #[arg(long, env = "OVERQ_ORDER", default_value_t = 200)]
        order: usize,
        /// Largest index for the Bailey-pair defining relation.
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print the coefficients of a series.
    Coeffs {
        /// gen:<family>, lhs:<theorem>, rhs:<theorem>, classical:<id>:lhs|rhs,
        /// or poch:<c>,<e>,<base>,<n|inf>.
        #[arg(long)]
        series: String,
        #[arg(long, env = "OVERQ_ORDER", default_value_t = 200)]
        order: usize,
        /// Replace q by q^k before printing.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        dilate: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// List the members of a family at n, or their signed counts.
    #[command(group(ArgGroup::new("mode").required(true).args(["list", "counts"])))]
    Enum {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        counts: bool,
        /// Render overlines with a combining mark instead of a trailing `~`.
        #[arg(long)]
        unicode: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Compare brute-force signed counts with series coefficients.
    Oracle {
        /// A family name or `all`.
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

struct Emitted {
    body: String,
    exit: u8,
}

fn run(cli: &Cli) -> Result<Emitted, String> {
    match &cli.command {
        Command::Verify {
            target,
            order,
            max_n,
            format,
        } => {
            let jobs = targets::parse_target(target)?;
            let reports = targets::run_jobs(&jobs, *order, *max_n);
            let record = RunRecord::new("verify", target, *order, &reports);
            let exit = record.exit_status;
            let body = match format {
                ReportFormat::Text => record.to_text(),
                ReportFormat::Json => output::to_json(&record),
            };
            Ok(Emitted { body, exit })
        }
        Command::Coeffs {
            series,
            order,
            dilate,
            format,
        } => {
            let s = targets::build_series(series, *order, *dilate as usize)?;
            let body = match format {
                TableFormat::Json => output::coeffs_json(series, &s),
                TableFormat::Csv => output::coeffs_csv(&s),
            };
            Ok(Emitted { body, exit: 0 })
        }
        Command::Enum {
            family,
            n,
            list,
            counts: _,
            unicode,
            format,
        } => {
            let f = targets::parse_family(family)?;
            let body = if *list {
                let record = ListRecord::new(f, *n, *unicode);
                match format {
                    ReportFormat::Text => record.to_text(),
                    ReportFormat::Json => output::to_json(&record),
                }
            } else {
                let record = CountsRecord::new(f, *n);
                match format {
                    ReportFormat::Text => record.to_text(),
                    ReportFormat::Json => output::to_json(&record),
                }
            };
            Ok(Emitted { body, exit: 0 })
        }
        Command::Oracle { family, max_n, format } => {
            let families = targets::parse_family_or_all(family)?;
            let reports = targets::run_oracles(&families, *max_n);
            let record = RunRecord::new("oracle", family, *max_n as usize, &reports);
            if let Some(bad) = reports.iter().find(|r| !r.is_equal()) {
                eprintln!("first offender: {bad}");
            }
            let exit = record.exit_status;
            let body = match format {
                ReportFormat::Text => record.to_text(),
                ReportFormat::Json => output::to_json(&record),
            };
            Ok(Emitted { body, exit })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emitted = match run(&cli) {
        Ok(e) => e,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &emitted.body),
        None => io::stdout().lock().write_all(emitted.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(emitted.exit)
}
