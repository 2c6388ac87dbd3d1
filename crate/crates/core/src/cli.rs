//! The `pmatch` command line.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{self, BenchConfig, BenchRecord, ReportFormat};
use crate::corpus::{self, StridePolicy};
use crate::error::{Error, Result};
use crate::format;
use crate::search::Algorithm;
use crate::textgen::{self, derive_seed, Distribution, PlantSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pmatch",
    version,
    about = "Exact and parameterized string matching: naive vs. automaton"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate benchmark inputs.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Convert external sequence data.
    #[command(subcommand)]
    Ingest(IngestCommand),
    /// Search a text file for a pattern file; prints one 0-based start per line.
    Search(SearchArgs),
    /// Run a benchmark suite described by a JSON config.
    Bench(BenchArgs),
    /// Render saved benchmark records as CSV or Markdown.
    Report(ReportArgs),
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Uniform random text with planted pattern occurrences.
    Random(GenRandomArgs),
    /// Text 0^n with pattern 0^(m-1) 1.
    Periodic(GenPeriodicArgs),
}

#[derive(Debug, Args)]
struct GenRandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    sigma: u32,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 100)]
    plants: usize,
    /// `uniform`, `end` (half of the plants in the last quarter) or FRACTION:REGION.
    #[arg(long, default_value = "uniform")]
    skew: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory; receives text.pmtx, pattern.pmtx and meta.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct GenPeriodicArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Subcommand)]
enum IngestCommand {
    /// Cut clean ACGT windows out of a FASTA file.
    Fasta(IngestFastaArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrideArg {
    Resync,
    Grid,
}

#[derive(Debug, Args)]
struct IngestFastaArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    window: usize,
    #[arg(long)]
    count: usize,
    #[arg(long, value_enum, default_value = "resync")]
    stride: StrideArg,
    /// Output directory; receives window_NNN.pmtx files and meta.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// exact-naive, exact-kmp, pm-naive or pm-auto.
    #[arg(long)]
    algo: String,
    #[arg(long)]
    text: PathBuf,
    #[arg(long)]
    pattern: PathBuf,
    /// Write stats JSON here instead of the error stream.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    config: PathBuf,
    /// Multiply n and the plant count, for quick runs.
    #[arg(long)]
    scale: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

#[derive(Debug, Args)]
struct ReportArgs {
    /// JSON array of records written by `bench`.
    #[arg(long)]
    records: PathBuf,
    #[arg(long, value_enum)]
    format: FormatArg,
    /// Defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct GenMeta {
    kind: &'static str,
    n: usize,
    sigma: u32,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    plant_count: usize,
    distribution: String,
    planted: Vec<usize>,
}

#[derive(Serialize)]
struct WindowMeta {
    file: String,
    record: usize,
    header: String,
    start: usize,
}

#[derive(Serialize)]
struct IngestMeta {
    source: String,
    window: usize,
    stride: StridePolicy,
    sigma: u32,
    windows: Vec<WindowMeta>,
}

#[derive(Serialize)]
struct SearchStats {
    algorithm: Algorithm,
    n: usize,
    m: usize,
    sigma: u32,
    occurrences: usize,
    symbol_comparisons: u64,
    aux_lookups: u64,
    elapsed_ns: u64,
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    fs::write(path, bytes)?;
    Ok(())
}

fn gen_random(args: GenRandomArgs) -> Result<()> {
    let distribution = Distribution::parse(&args.skew)?;
    let text = textgen::gen_uniform_text(args.n, args.sigma, derive_seed(args.seed, &[1]))?;
    let pattern = textgen::gen_pattern(args.m, args.sigma, derive_seed(args.seed, &[2]))?;
    let spec = PlantSpec {
        count: args.plants,
        distribution,
        seed: derive_seed(args.seed, &[3]),
    };
    let (text, planted) = textgen::plant(&text, &pattern, &spec)?;
    fs::create_dir_all(&args.out)?;
    format::write_text(&args.out.join("text.pmtx"), &text)?;
    format::write_pattern(&args.out.join("pattern.pmtx"), &pattern)?;
    write_json(
        &args.out.join("meta.json"),
        &GenMeta {
            kind: "random",
            n: args.n,
            sigma: args.sigma,
            m: args.m,
            seed: Some(args.seed),
            plant_count: args.plants,
            distribution: distribution.label(),
            planted,
        },
    )
}

fn gen_periodic(args: GenPeriodicArgs) -> Result<()> {
    let (text, pattern) = textgen::gen_periodic(args.n, args.m)?;
    fs::create_dir_all(&args.out)?;
    format::write_text(&args.out.join("text.pmtx"), &text)?;
    format::write_pattern(&args.out.join("pattern.pmtx"), &pattern)?;
    write_json(
        &args.out.join("meta.json"),
        &GenMeta {
            kind: "periodic",
            n: args.n,
            sigma: 2,
            m: args.m,
            seed: None,
            plant_count: 0,
            distribution: "none".to_owned(),
            planted: Vec::new(),
        },
    )
}

fn ingest_fasta(args: IngestFastaArgs) -> Result<()> {
    let stride = match args.stride {
        StrideArg::Resync => StridePolicy::Resync,
        StrideArg::Grid => StridePolicy::Grid,
    };
    let records = corpus::read_fasta(&args.input)?;
    fs::create_dir_all(&args.out)?;
    let mut windows = Vec::new();
    for (ri, record) in records.iter().enumerate() {
        if windows.len() == args.count {
            break;
        }
        let encoded = corpus::encode_dna(record);
        let need = args.count - windows.len();
        for w in corpus::extract_windows(&encoded, args.window, need, stride)? {
            let file = format!("window_{:03}.pmtx", windows.len());
            format::write_text(&args.out.join(&file), &w.text)?;
            windows.push(WindowMeta {
                file,
                record: ri,
                header: record.header.clone(),
                start: w.start,
            });
        }
    }
    write_json(
        &args.out.join("meta.json"),
        &IngestMeta {
            source: args.input.display().to_string(),
            window: args.window,
            stride,
            sigma: 4,
            windows,
        },
    )
}

fn search(args: SearchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let algorithm: Algorithm = args.algo.parse()?;
    let text = format::read_text(&args.text)?;
    let pattern = format::read_pattern(&args.pattern)?;
    let out = algorithm.search(&text, &pattern)?;
    let mut listing = String::with_capacity(out.occurrences.len() * 8);
    for j in &out.occurrences {
        listing.push_str(&j.to_string());
        listing.push('\n');
    }
    stdout.write_all(listing.as_bytes())?;
    let stats = SearchStats {
        algorithm,
        n: text.len(),
        m: pattern.len(),
        sigma: text.alphabet().size(),
        occurrences: out.occurrences.len(),
        symbol_comparisons: out.stats.symbol_comparisons,
        aux_lookups: out.stats.aux_lookups,
        elapsed_ns: out.stats.elapsed_ns,
    };
    match &args.stats {
        Some(path) => write_json(path, &stats),
        None => {
            writeln!(stderr, "{}", serde_json::to_string(&stats)?)?;
            Ok(())
        }
    }
}

fn run_bench(args: BenchArgs, stderr: &mut dyn Write) -> Result<()> {
    let mut config = BenchConfig::load(&args.config)?;
    if let Some(scale) = args.scale {
        config.scale = scale;
    }
    let run = bench::run_suite(&config)?;
    bench::write_outputs(&run, &config.outputs)?;
    let skipped = run.manifest.cells.len() - run.records.len();
    writeln!(
        stderr,
        "{} cells measured, {skipped} skipped or diverged (n = {})",
        run.records.len(),
        run.manifest.effective_n
    )?;
    if run
        .manifest
        .cells
        .iter()
        .any(|c| c.status == bench::CellStatus::Diverged)
    {
        return Err(Error::internal(
            "naive and automaton results diverged; see manifest",
        ));
    }
    Ok(())
}

fn report(args: ReportArgs, stdout: &mut dyn Write) -> Result<()> {
    let records: Vec<BenchRecord> = serde_json::from_slice(&fs::read(&args.records)?)?;
    let format = match args.format {
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Markdown => ReportFormat::Markdown,
    };
    let bytes = bench::emit_report(&records, format)?;
    match args.out {
        Some(path) => fs::write(path, bytes)?,
        None => stdout.write_all(&bytes)?,
    }
    Ok(())
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Gen(GenCommand::Random(a)) => gen_random(a),
        Command::Gen(GenCommand::Periodic(a)) => gen_periodic(a),
        Command::Ingest(IngestCommand::Fasta(a)) => ingest_fasta(a),
        Command::Search(a) => search(a, stdout, stderr),
        Command::Bench(a) => run_bench(a, stderr),
        Command::Report(a) => report(a, stdout),
    }
}

/// Runs the CLI and returns the process exit code: 0 on success, 1 on bad
/// input, 2 on a violated internal invariant.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "{line}");
            return EXIT_INPUT;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_INPUT
            }
        }
    }
}
