use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pmod_core::census::{ratio_table, CensusRow, EnumOptions, TableMode, DEFAULT_CAP};
use pmod_core::gamma::{gamma_bfs_sphere_sizes, gamma_census, gamma_closed_form_rows, GammaRow};
use pmod_core::series::{expand, gf_h, gf_p, gf_r};
use pmod_core::{classify, CensusError, Word};

/// Largest radius the breadth-first Γ oracle is run at.
const BFS_RADIUS: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "pmod", version, about = "Reducible and pseudo-Anosov census of PMod(0,4)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a word in a, A, b, B as identity, reducible or pseudo-Anosov.
    Classify {
        #[arg(value_name = "WORD", conflicts_with = "word")]
        text: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Per-radius counts, cumulative counts and the p_n/h_n ratio.
    Census(TableArgs),
    /// Power-series coefficients of a growth function.
    Series {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Census of PMod(0,4) x Z2 x Z2 with generators t_a, t_b, i, j.
    Gamma(TableArgs),
}

#[derive(clap::Args, Debug)]
struct TableArgs {
    #[arg(long)]
    max_radius: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Enumerate every sphere and fail on any disagreement with the closed forms.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    cap_override: Option<usize>,
}

impl TableArgs {
    fn options(&self) -> EnumOptions {
        EnumOptions {
            cap: self.cap_override.unwrap_or(DEFAULT_CAP),
            threads: self.threads,
            prefix_depth: None,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    H,
    R,
    P,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<CensusError> for Failure {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Mismatch { .. } => Failure::Mismatch(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match cli.command {
        Command::Classify { text, word } => cmd_classify(text.or(word).unwrap_or_default(), &mut out),
        Command::Census(args) => cmd_census(&args, &mut out),
        Command::Series { which, terms, format } => cmd_series(which, terms, format, &mut out),
        Command::Gamma(args) => cmd_gamma(&args, &mut out),
    };
    match result {
        Ok(()) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}

fn cmd_classify(text: String, out: &mut String) -> Result<(), Failure> {
    let word: Word = text.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
    out.push_str(&classify(&word).to_json());
    out.push('\n');
    Ok(())
}

fn render<T: serde::Serialize>(
    rows: &[T],
    format: Format,
    header: &str,
    csv: impl Fn(&T) -> String,
    out: &mut String,
) {
    match format {
        Format::Csv => {
            out.push_str(header);
            out.push('\n');
            for row in rows {
                out.push_str(&csv(row));
                out.push('\n');
            }
        }
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(rows).expect("rows serialize"));
            out.push('\n');
        }
    }
}

fn cmd_census(args: &TableArgs, out: &mut String) -> Result<(), Failure> {
    let mode = if args.verify {
        TableMode::Verify(args.options())
    } else {
        TableMode::ClosedForm
    };
    let rows = ratio_table(args.max_radius, mode)?;
    render(&rows, args.format, CensusRow::CSV_HEADER, CensusRow::to_csv, out);
    Ok(())
}

fn cmd_gamma(args: &TableArgs, out: &mut String) -> Result<(), Failure> {
    let closed = gamma_closed_form_rows(args.max_radius);
    let rows = if args.verify {
        let rows = gamma_census(args.max_radius, &args.options())?;
        for (row, expected) in rows.iter().zip(&closed) {
            row.check_against(expected)?;
        }
        let bfs = gamma_bfs_sphere_sizes(args.max_radius.min(BFS_RADIUS));
        for (n, size) in bfs.iter().enumerate() {
            if rows[n].total != (*size).into() {
                return Err(Failure::Mismatch(format!(
                    "row n={n}: enumerated total = {}, breadth-first search gives {size}",
                    rows[n].total
                )));
            }
        }
        rows
    } else {
        closed
    };
    render(&rows, args.format, GammaRow::CSV_HEADER, GammaRow::to_csv, out);
    Ok(())
}

fn cmd_series(which: Which, terms: usize, format: Format, out: &mut String) -> Result<(), Failure> {
    let gf = match which {
        Which::H => gf_h(),
        Which::R => gf_r(),
        Which::P => gf_p(),
    };
    let coefficients = expand(&gf, terms).map_err(|e| Failure::Usage(e.to_string()))?;
    match format {
        Format::Csv => {
            out.push_str("n,c_n\n");
            for (n, c) in coefficients.iter().enumerate() {
                out.push_str(&format!("{n},{c}\n"));
            }
        }
        Format::Json => {
            let list = coefficients.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            out.push_str(&format!("[{list}]\n"));
        }
    }
    Ok(())
}
