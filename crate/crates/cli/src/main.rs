//! `ngcurves`: invariants of projective monomial curves from the command line.
//!
//! Exit codes: 0 ok, 2 usage or validation error, 3 `--verify` mismatch,
//! 4 scan verdict failure, 5 no nearly Gorenstein movement.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ngcurves::canonical::{find_movement, render_movement};
use ngcurves::classify::{analyze_curve, scan, PairFamily};
use ngcurves::verify::cross_check;
use ngcurves::{Curve, Family, Sequence};

use output::Format;

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_VERDICT: u8 = 4;
const EXIT_NOT_NG: u8 = 5;

#[derive(Parser)]
#[command(
    name = "ngcurves",
    version,
    about = "Invariants of projective monomial curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the curve of a sequence 0 < a1 < ... < an
    Analyze {
        #[arg(required = true, num_args = 2.., allow_negative_numbers = true)]
        values: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Re-derive the invariants through the brute-force oracles
        #[arg(long)]
        verify: bool,
    },
    /// Classify every sequence of length n with an <= max
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the nearly Gorenstein movement chain
    Movement {
        #[arg(required = true, num_args = 2.., allow_negative_numbers = true)]
        values: Vec<i64>,
    },
    /// Print the dual sequence (an - a(n-1), ..., an - a1, an)
    Dual {
        #[arg(required = true, num_args = 2.., allow_negative_numbers = true)]
        values: Vec<i64>,
    },
    /// Classify a member of a named family
    ///
    /// One-parameter families (alpha, i_a, i_b, ii_d, iv_b, v_d) take k;
    /// two-parameter families (i_c, ii_e, iii) take a and b.
    Family {
        name: String,
        #[arg(required = true, num_args = 1..=2, allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<ngcurves::Error> for Failure {
    fn from(e: ngcurves::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze {
            values,
            format,
            verify,
        } => {
            let curve = Curve::new(Sequence::new(&values)?)?;
            print_record(&curve, format)?;
            if verify {
                let mismatches = cross_check(&curve)?;
                if !mismatches.is_empty() {
                    for m in &mismatches {
                        eprintln!("mismatch [{}]: {}", m.check, m.detail);
                    }
                    return Err(Failure::new(
                        EXIT_VERIFY,
                        format!("{} oracle mismatch(es)", mismatches.len()),
                    ));
                }
                eprintln!("verify: all oracle checks agree");
            }
            Ok(())
        }
        Command::Scan {
            n,
            max,
            format,
            out,
        } => {
            let report = scan(n, max)?;
            let body = match format {
                Format::Text => output::scan_text(&report),
                Format::Json => output::scan_json(&report),
                Format::Csv => output::records_csv(&report.records),
            };
            match out {
                Some(path) => std::fs::write(&path, body).map_err(|e| {
                    Failure::new(EXIT_USAGE, format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{body}"),
            }
            if report.verdict {
                Ok(())
            } else {
                Err(Failure::new(
                    EXIT_VERDICT,
                    "nearly Gorenstein curves found differ from the classification",
                ))
            }
        }
        Command::Movement { values } => {
            let seq = Sequence::new(&values)?;
            let curve = Curve::new(seq.clone())?;
            let chain = if curve.is_cm()? {
                find_movement(&curve)?
            } else {
                None
            };
            match chain {
                Some(chain) => {
                    println!("{}", render_movement(&chain, &seq));
                    Ok(())
                }
                None => Err(Failure::new(
                    EXIT_NOT_NG,
                    "no nearly Gorenstein movement exists",
                )),
            }
        }
        Command::Dual { values } => {
            println!("{}", Sequence::new(&values)?.dual());
            Ok(())
        }
        Command::Family {
            name,
            params,
            format,
        } => {
            let seq = family_sequence(&name, &params)?;
            print_record(&Curve::new(seq)?, format)
        }
    }
}

fn family_sequence(name: &str, params: &[i64]) -> Result<Sequence, Failure> {
    if let Ok(f) = name.parse::<Family>() {
        let [k] = params else {
            return Err(Failure::new(
                EXIT_USAGE,
                format!("family {f} takes one parameter k"),
            ));
        };
        return Ok(f.sequence(*k)?);
    }
    match name.parse::<PairFamily>() {
        Ok(f) => {
            let [a, b] = params else {
                return Err(Failure::new(
                    EXIT_USAGE,
                    format!("family {f} takes parameters a b"),
                ));
            };
            Ok(f.sequence(*a, *b)?)
        }
        Err(e) => Err(Failure::new(EXIT_USAGE, e)),
    }
}

fn print_record(curve: &Curve, format: Format) -> Result<(), Failure> {
    let record = analyze_curve(curve)?;
    match format {
        Format::Text => print!("{}", output::record_text(&record)),
        Format::Json => print!("{}", output::record_json(&record)),
        Format::Csv => print!("{}", output::records_csv([&record])),
    }
    Ok(())
}
