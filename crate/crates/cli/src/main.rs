//! `neutro`: batch decomposition of bifuzzy pairs and neutrosophic triplets.
//!
//! Exit status: 0 success, 1 input or validation error, 2 invariant violation
//! (`check`), 3 unsupported option combination.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use neutro_core::invariants::{self, CheckReport, InvariantResult};
use neutro_core::io::{
    compute_results, generate_grid, parse_records, write_entropy_report, write_results, Format,
    ParseOptions, RecordBatch, Schema,
};
use neutro_core::{deca_decompose, Feature, Prototype, Variant};

#[derive(Parser, Debug)]
#[command(
    name = "neutro",
    version,
    about = "Penta- and deca-valued decomposition with entropy, neutro-entropy and anti-entropy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Construction variant
    #[arg(long, global = true, value_enum, default_value = "1")]
    variant: VariantArg,

    /// Input file (standard input when omitted)
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output file (standard output when omitted)
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: FormatArg,

    /// Lattice spacing for `grid` and `check`; must divide 1 evenly
    #[arg(long, global = true, default_value_t = 0.05)]
    step: f64,

    /// Largest accepted deviation for `check`
    #[arg(long, global = true, default_value_t = 1e-12)]
    tolerance: f64,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Ten-feature decomposition of (mu, omega, nu) triplets, with the entropy triad
    Deca,
    /// Five-feature decomposition of (mu, nu) pairs
    Penta,
    /// Entropy measures only; pairs or triplets, chosen from the input fields
    Entropy,
    /// Full results over the lattice of the unit cube
    Grid,
    /// The ten prototype triplets and their decompositions
    Prototypes,
    /// Sweep the square and cube, report the largest deviation of every invariant
    Check,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum VariantArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::One => Variant::I,
            VariantArg::Two => Variant::II,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum FormatArg {
    Csv,
    Jsonl,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Jsonl => Format::Jsonl,
        }
    }
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 1,
            error: error.into(),
        }
    }

    fn unsupported(error: anyhow::Error) -> Self {
        Failure { code: 3, error }
    }
}

enum Outcome {
    Done,
    Violation,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(2),
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let variant = Variant::from(cli.variant);
    let format = Format::from(cli.format);
    if cli.tolerance.is_nan() || cli.tolerance < 0.0 {
        return Err(Failure::input(anyhow!(
            "tolerance must be non-negative, got {}",
            cli.tolerance
        )));
    }

    match cli.command {
        Command::Deca | Command::Penta | Command::Entropy => {
            let text = read_input(cli.input.as_ref())?;
            let schema = match cli.command {
                Command::Deca => Schema::Triplet,
                Command::Penta => Schema::Pair,
                _ => detect_schema(&text, format),
            };
            let batch = parse_records(text.as_bytes(), format, schema, &ParseOptions::default())
                .map_err(Failure::input)?;
            warn_ignored(&batch);
            let rows = compute_results(&batch, variant);
            let sink = open_output(cli.output.as_ref())?;
            let written = if cli.command == Command::Entropy {
                write_entropy_report(&rows, schema, format, sink)
            } else {
                write_results(&rows, schema, format, sink)
            };
            written.map_err(Failure::input)?;
            Ok(Outcome::Done)
        }
        Command::Grid => {
            let batch = generate_grid(Schema::Triplet, cli.step).map_err(Failure::input)?;
            let rows = compute_results(&batch, variant);
            let sink = open_output(cli.output.as_ref())?;
            write_results(&rows, Schema::Triplet, format, sink).map_err(Failure::input)?;
            Ok(Outcome::Done)
        }
        Command::Prototypes => {
            if variant != Variant::I {
                return Err(Failure::unsupported(anyhow!(
                    "the prototype table is the basis of the variant 1 inverse transform; \
                     it is not defined for variant 2"
                )));
            }
            let sink = open_output(cli.output.as_ref())?;
            write_prototypes(format, sink).map_err(Failure::input)?;
            Ok(Outcome::Done)
        }
        Command::Check => {
            let report =
                invariants::sweep(variant, cli.step, cli.tolerance).map_err(Failure::input)?;
            let sink = open_output(cli.output.as_ref())?;
            write_report(&report, format, sink).map_err(Failure::input)?;
            summarize(&report);
            Ok(if report.passed() {
                Outcome::Done
            } else {
                Outcome::Violation
            })
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => {
            File::open(p)
                .and_then(|mut f| f.read_to_string(&mut text))
                .with_context(|| format!("reading {}", p.display()))
                .map_err(Failure::input)?;
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")
                .map_err(Failure::input)?;
        }
    }
    Ok(text)
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p)
                .with_context(|| format!("creating {}", p.display()))
                .map_err(Failure::input)?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Triplets when the first record carries an `omega` field, pairs otherwise.
fn detect_schema(text: &str, format: Format) -> Schema {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let has_omega = match format {
        Format::Csv => first
            .split(',')
            .any(|h| h.trim().eq_ignore_ascii_case("omega")),
        Format::Jsonl => first.to_ascii_lowercase().contains("\"omega\""),
    };
    if has_omega {
        Schema::Triplet
    } else {
        Schema::Pair
    }
}

fn warn_ignored(batch: &RecordBatch) {
    if !batch.ignored_fields.is_empty() {
        eprintln!(
            "warning: ignored {} unknown field(s): {}",
            batch.ignored_fields.len(),
            batch.ignored_fields.join(", ")
        );
    }
}

fn write_prototypes<W: Write>(format: Format, mut sink: W) -> io::Result<()> {
    let mut header = vec!["label", "mu", "omega", "nu"];
    header.extend(Feature::ALL.map(Feature::symbol));
    if format == Format::Csv {
        writeln!(sink, "{}", header.join(","))?;
    }
    for p in Prototype::all() {
        let d = deca_decompose(p.coordinates, Variant::I);
        let mut values = p.coordinates.values().to_vec();
        values.extend(d.values());
        match format {
            Format::Csv => {
                write!(sink, "{}", p.label)?;
                for v in &values {
                    write!(sink, ",{v}")?;
                }
                writeln!(sink)?;
            }
            Format::Jsonl => {
                write!(sink, "{{\"label\":\"{}\"", p.label)?;
                for (name, v) in header[1..].iter().zip(&values) {
                    write!(sink, ",\"{name}\":{v}")?;
                }
                writeln!(sink, "}}")?;
            }
        }
    }
    sink.flush()
}

fn status(report: &CheckReport, r: &InvariantResult) -> &'static str {
    if !r.enforced {
        "info"
    } else if r.max_deviation <= report.tolerance {
        "ok"
    } else {
        "violated"
    }
}

fn write_report<W: Write>(report: &CheckReport, format: Format, mut sink: W) -> io::Result<()> {
    if format == Format::Csv {
        writeln!(sink, "invariant,max_deviation,status")?;
    }
    for r in &report.results {
        let (name, dev, status) = (r.name, r.max_deviation, status(report, r));
        match format {
            Format::Csv => writeln!(sink, "{name},{dev:e},{status}")?,
            Format::Jsonl => writeln!(
                sink,
                "{{\"invariant\":\"{name}\",\"max_deviation\":{dev:e},\"status\":\"{status}\"}}"
            )?,
        }
    }
    sink.flush()
}

fn summarize(report: &CheckReport) {
    let enforced = report.results.iter().filter(|r| r.enforced).count();
    let failed: Vec<&str> = report
        .results
        .iter()
        .filter(|r| r.enforced && r.max_deviation > report.tolerance)
        .map(|r| r.name)
        .collect();
    eprintln!(
        "variant {}: {} pairs, {} triplets, max support {}",
        report.variant, report.square_points, report.cube_points, report.max_support
    );
    if failed.is_empty() {
        eprintln!(
            "all {enforced} enforced invariants within {:e}",
            report.tolerance
        );
    } else {
        eprintln!(
            "{} of {enforced} invariants exceed {:e}: {}",
            failed.len(),
            report.tolerance,
            failed.join(", ")
        );
    }
}
