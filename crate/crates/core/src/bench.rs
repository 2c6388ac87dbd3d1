//! Benchmark harness: timed trials of a naive/automaton pair over a grid of
//! alphabet sizes and pattern lengths, aggregated into one record per cell.
//!
//! Each cell runs `repeats` independently seeded instances. For every
//! instance both algorithms first run `warmup` untimed times and then
//! `runs_per_text` timed times, strictly one after another. Comparison
//! counts are deterministic; only the timings vary between runs.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{self, StridePolicy};
use crate::error::{Error, Result};
use crate::search::{Algorithm, Matching};
use crate::symbols::{Pattern, Text};
use crate::textgen::{self, derive_seed, Distribution, PlantSpec};

fn default_n() -> usize {
    1_000_000
}
fn default_scale() -> f64 {
    1.0
}
fn default_plant_count() -> usize {
    100
}
fn default_distributions() -> Vec<Distribution> {
    vec![Distribution::Uniform, Distribution::END_SKEWED]
}
fn default_repeats() -> usize {
    10
}
fn one() -> usize {
    1
}

/// Where the texts come from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum TextSource {
    /// Uniform random text with planted occurrences.
    #[default]
    Random,
    /// `0^n` searched for `0^(m-1) 1`; alphabet fixed at 2, nothing planted.
    Periodic,
    /// Windows of a DNA sequence; alphabet fixed at 4.
    Fasta {
        path: PathBuf,
        #[serde(default)]
        stride: StridePolicy,
    },
}

/// How the pattern for each instance is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PatternSource {
    /// Uniform random symbols.
    #[default]
    Random,
    /// A substring of the text at a seeded offset.
    Substring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Outputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub markdown: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub records: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub matching: Matching,
    pub sigmas: Vec<u32>,
    pub pattern_lengths: Vec<usize>,
    #[serde(default = "default_n")]
    pub n: usize,
    /// Multiplies `n` and the plant count.
    #[serde(default = "default_scale")]
    pub scale: f64,
    #[serde(default = "default_plant_count")]
    pub plant_count: usize,
    #[serde(default = "default_distributions")]
    pub distributions: Vec<Distribution>,
    /// Independently generated instances per cell.
    #[serde(default = "default_repeats")]
    pub repeats: usize,
    /// Timed runs per instance and algorithm.
    #[serde(default = "one")]
    pub runs_per_text: usize,
    /// Untimed runs per instance and algorithm before timing.
    #[serde(default = "one")]
    pub warmup: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub source: TextSource,
    #[serde(default)]
    pub pattern_source: PatternSource,
    #[serde(default)]
    pub outputs: Outputs,
}

impl BenchConfig {
    /// A config over the given grid with every other field at its default.
    pub fn new(matching: Matching, sigmas: Vec<u32>, pattern_lengths: Vec<usize>) -> Self {
        BenchConfig {
            matching,
            sigmas,
            pattern_lengths,
            n: default_n(),
            scale: default_scale(),
            plant_count: default_plant_count(),
            distributions: default_distributions(),
            repeats: default_repeats(),
            runs_per_text: 1,
            warmup: 1,
            seed: 0,
            source: TextSource::Random,
            pattern_source: PatternSource::Random,
            outputs: Outputs::default(),
        }
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self> {
        let cfg: BenchConfig = serde_json::from_slice(bytes)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut cfg = Self::from_json(&fs::read(path)?)?;
        // relative paths in the config are relative to the config file
        if let Some(dir) = path.parent() {
            cfg.resolve_paths(dir);
        }
        Ok(cfg)
    }

    fn resolve_paths(&mut self, dir: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = dir.join(&*p);
            }
        };
        if let TextSource::Fasta { path, .. } = &mut self.source {
            fix(path);
        }
        for p in [
            &mut self.outputs.csv,
            &mut self.outputs.markdown,
            &mut self.outputs.records,
            &mut self.outputs.manifest,
        ]
        .into_iter()
        .flatten()
        {
            fix(p);
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.repeats == 0 || self.runs_per_text == 0 {
            return Err(Error::invalid(
                "repeats and runs_per_text must be at least 1",
            ));
        }
        if self.sigmas.is_empty()
            || self.pattern_lengths.is_empty()
            || self.distributions.is_empty()
        {
            return Err(Error::invalid(
                "sigmas, pattern_lengths and distributions must be non-empty",
            ));
        }
        if self.sigmas.contains(&0) || self.pattern_lengths.contains(&0) || self.n == 0 {
            return Err(Error::invalid("grid values and n must be positive"));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::invalid(format!(
                "scale must be positive, got {}",
                self.scale
            )));
        }
        let max_m = *self.pattern_lengths.iter().max().unwrap();
        if self.n < max_m {
            return Err(Error::invalid(format!(
                "n = {} is smaller than the longest pattern {max_m}",
                self.n
            )));
        }
        let fixed_sigma = match self.source {
            TextSource::Random => None,
            TextSource::Periodic => Some(2),
            TextSource::Fasta { .. } => Some(4),
        };
        if let Some(s) = fixed_sigma {
            if self.sigmas.iter().any(|&x| x != s) {
                return Err(Error::invalid(format!(
                    "this text source fixes the alphabet size at {s}"
                )));
            }
        }
        Ok(())
    }

    /// `n` after scaling.
    pub fn effective_n(&self) -> usize {
        ((self.n as f64 * self.scale).round() as usize).max(1)
    }

    /// Plant count after scaling; never drops a non-zero count to zero.
    pub fn effective_plant_count(&self) -> usize {
        if self.plant_count == 0 {
            return 0;
        }
        ((self.plant_count as f64 * self.scale).round() as usize).max(1)
    }
}

/// Timings and counters for one algorithm on one input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialStats {
    pub algorithm: Algorithm,
    pub samples_ns: Vec<u64>,
    pub mean_ns: f64,
    pub median_ns: f64,
    pub min_ns: u64,
    pub symbol_comparisons: u64,
    pub aux_lookups: u64,
    pub occurrences: Vec<usize>,
}

fn median(sorted: &[u64]) -> f64 {
    let k = sorted.len();
    if k % 2 == 1 {
        sorted[k / 2] as f64
    } else {
        (sorted[k / 2 - 1] as f64 + sorted[k / 2] as f64) / 2.0
    }
}

/// Runs `warmup` untimed searches, then `repeats` timed ones.
pub fn run_trial(
    algorithm: Algorithm,
    text: &Text,
    pattern: &Pattern,
    repeats: usize,
    warmup: usize,
) -> Result<TrialStats> {
    if repeats == 0 {
        return Err(Error::invalid("repeats must be at least 1"));
    }
    for _ in 0..warmup {
        algorithm.search(text, pattern)?;
    }
    let mut samples = Vec::with_capacity(repeats);
    let mut first: Option<(Vec<usize>, u64, u64)> = None;
    for _ in 0..repeats {
        let started = Instant::now();
        let out = algorithm.search(text, pattern)?;
        samples.push(started.elapsed().as_nanos() as u64);
        let key = (
            out.occurrences,
            out.stats.symbol_comparisons,
            out.stats.aux_lookups,
        );
        match &first {
            None => first = Some(key),
            Some(prev) if *prev != key => {
                return Err(Error::internal(format!(
                    "{algorithm} is not deterministic on identical input"
                )))
            }
            Some(_) => {}
        }
    }
    let (occurrences, symbol_comparisons, aux_lookups) = first.unwrap();
    let mut sorted = samples.clone();
    sorted.sort_unstable();
    Ok(TrialStats {
        algorithm,
        mean_ns: samples.iter().sum::<u64>() as f64 / samples.len() as f64,
        median_ns: median(&sorted),
        min_ns: sorted[0],
        samples_ns: samples,
        symbol_comparisons,
        aux_lookups,
        occurrences,
    })
}

/// One row of a results table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub matching: Matching,
    pub sigma: u32,
    pub m: usize,
    pub distribution: String,
    pub trials: usize,
    pub naive_mean_ns: f64,
    pub auto_mean_ns: f64,
    /// `naive_mean_ns / auto_mean_ns`.
    pub ratio: f64,
    pub naive_median_ns: f64,
    pub auto_median_ns: f64,
    pub naive_min_ns: u64,
    pub auto_min_ns: u64,
    /// Mean symbol comparisons per instance.
    pub naive_comparisons: f64,
    pub auto_comparisons: f64,
}

impl BenchRecord {
    pub fn comparison_ratio(&self) -> f64 {
        self.naive_comparisons / self.auto_comparisons
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Ok,
    Skipped,
    Diverged,
}

/// Per-cell entry of the run manifest. Holds no timings, so identical
/// configs give identical manifests.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub sigma: u32,
    pub m: usize,
    pub distribution: String,
    pub status: CellStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub instance_seeds: Vec<u64>,
    pub occurrence_counts: Vec<usize>,
    pub naive_comparisons: Vec<u64>,
    pub auto_comparisons: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub effective_n: usize,
    pub effective_plant_count: usize,
    pub config: BenchConfig,
    pub cells: Vec<CellReport>,
}

#[derive(Debug, Clone)]
pub struct SuiteRun {
    pub records: Vec<BenchRecord>,
    pub manifest: RunManifest,
}

/// One generated benchmark input.
#[derive(Debug, Clone)]
pub struct Instance {
    pub text: Text,
    pub pattern: Pattern,
    pub planted: Vec<usize>,
}

enum Corpus {
    None,
    Windows(Vec<Text>),
}

impl Corpus {
    fn load(config: &BenchConfig, n: usize) -> Result<Self> {
        let TextSource::Fasta { path, stride } = &config.source else {
            return Ok(Corpus::None);
        };
        let mut windows = Vec::new();
        for record in corpus::read_fasta(path)? {
            let need = config.repeats - windows.len();
            let enc = corpus::encode_dna(&record);
            windows.extend(
                corpus::extract_windows(&enc, n, need, *stride)?
                    .into_iter()
                    .map(|w| w.text),
            );
            if windows.len() == config.repeats {
                break;
            }
        }
        if windows.is_empty() {
            return Err(Error::invalid(format!(
                "{} holds no clean window of {n} bases",
                path.display()
            )));
        }
        Ok(Corpus::Windows(windows))
    }
}

/// Builds instance `trial` of a cell.
pub fn make_instance(
    config: &BenchConfig,
    sigma: u32,
    m: usize,
    distribution: Distribution,
    seed: u64,
    window: Option<&Text>,
) -> Result<Instance> {
    let n = config.effective_n();
    if m > n {
        return Err(Error::invalid(format!(
            "pattern length {m} exceeds n = {n}"
        )));
    }
    if matches!(config.source, TextSource::Periodic) {
        let (text, pattern) = textgen::gen_periodic(n, m)?;
        return Ok(Instance {
            text,
            pattern,
            planted: Vec::new(),
        });
    }
    let text = match window {
        Some(w) => w.clone(),
        None => textgen::gen_uniform_text(n, sigma, derive_seed(seed, &[1]))?,
    };
    let pattern = match config.pattern_source {
        PatternSource::Random => textgen::gen_pattern(m, sigma, derive_seed(seed, &[2]))?,
        PatternSource::Substring => {
            let at = textgen::rng(derive_seed(seed, &[2])).gen_range(0..=text.len() - m);
            Pattern::new(text.alphabet(), text.symbols()[at..at + m].to_vec())?
        }
    };
    let spec = PlantSpec {
        count: config.effective_plant_count(),
        distribution,
        seed: derive_seed(seed, &[3]),
    };
    let (text, planted) = textgen::plant(&text, &pattern, &spec)?;
    Ok(Instance {
        text,
        pattern,
        planted,
    })
}

fn is_superset(found: &[usize], planted: &[usize]) -> bool {
    planted.iter().all(|p| found.binary_search(p).is_ok())
}

fn mean<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let (sum, k) = values
        .into_iter()
        .fold((0.0, 0usize), |(s, k), v| (s + v, k + 1));
    sum / k as f64
}

/// Runs every `(σ, m, distribution)` cell of the grid. Infeasible cells and
/// cells where the two algorithms disagree are reported in the manifest and
/// produce no record.
pub fn run_suite(config: &BenchConfig) -> Result<SuiteRun> {
    config.validate()?;
    let n = config.effective_n();
    let corpus = Corpus::load(config, n)?;
    let naive_algo = config.matching.naive();
    let auto_algo = config.matching.automaton();

    let mut records = Vec::new();
    let mut cells = Vec::new();
    for (di, &distribution) in config.distributions.iter().enumerate() {
        for &sigma in &config.sigmas {
            for &m in &config.pattern_lengths {
                let mut cell = CellReport {
                    sigma,
                    m,
                    distribution: distribution.label(),
                    status: CellStatus::Ok,
                    reason: None,
                    instance_seeds: Vec::new(),
                    occurrence_counts: Vec::new(),
                    naive_comparisons: Vec::new(),
                    auto_comparisons: Vec::new(),
                };
                let mut naive_runs = Vec::new();
                let mut auto_runs = Vec::new();
                for trial in 0..config.repeats {
                    let seed = derive_seed(
                        config.seed,
                        &[di as u64, u64::from(sigma), m as u64, trial as u64],
                    );
                    cell.instance_seeds.push(seed);
                    let window = match &corpus {
                        Corpus::None => None,
                        Corpus::Windows(w) => Some(&w[trial % w.len()]),
                    };
                    let inst = match make_instance(config, sigma, m, distribution, seed, window) {
                        Ok(inst) => inst,
                        Err(Error::InvalidArgument(reason)) => {
                            cell.status = CellStatus::Skipped;
                            cell.reason = Some(reason);
                            break;
                        }
                        Err(e) => return Err(e),
                    };
                    let naive = run_trial(
                        naive_algo,
                        &inst.text,
                        &inst.pattern,
                        config.runs_per_text,
                        config.warmup,
                    )?;
                    let auto = run_trial(
                        auto_algo,
                        &inst.text,
                        &inst.pattern,
                        config.runs_per_text,
                        config.warmup,
                    )?;
                    if naive.occurrences != auto.occurrences
                        || !is_superset(&auto.occurrences, &inst.planted)
                    {
                        cell.status = CellStatus::Diverged;
                        cell.reason = Some(format!(
                            "instance {trial}: {naive_algo} found {} occurrences, {auto_algo} found {}, {} planted",
                            naive.occurrences.len(),
                            auto.occurrences.len(),
                            inst.planted.len()
                        ));
                        break;
                    }
                    cell.occurrence_counts.push(auto.occurrences.len());
                    cell.naive_comparisons.push(naive.symbol_comparisons);
                    cell.auto_comparisons.push(auto.symbol_comparisons);
                    naive_runs.push(naive);
                    auto_runs.push(auto);
                }
                if cell.status == CellStatus::Ok {
                    records.push(aggregate(
                        config.matching,
                        sigma,
                        m,
                        &cell.distribution,
                        &naive_runs,
                        &auto_runs,
                    ));
                }
                cells.push(cell);
            }
        }
    }
    Ok(SuiteRun {
        records,
        manifest: RunManifest {
            tool: "pmatch".to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            effective_n: n,
            effective_plant_count: config.effective_plant_count(),
            config: config.clone(),
            cells,
        },
    })
}

fn aggregate(
    matching: Matching,
    sigma: u32,
    m: usize,
    distribution: &str,
    naive: &[TrialStats],
    auto: &[TrialStats],
) -> BenchRecord {
    let naive_mean_ns = mean(naive.iter().map(|t| t.mean_ns));
    let auto_mean_ns = mean(auto.iter().map(|t| t.mean_ns));
    BenchRecord {
        matching,
        sigma,
        m,
        distribution: distribution.to_owned(),
        trials: naive.len(),
        naive_mean_ns,
        auto_mean_ns,
        ratio: naive_mean_ns / auto_mean_ns,
        naive_median_ns: mean(naive.iter().map(|t| t.median_ns)),
        auto_median_ns: mean(auto.iter().map(|t| t.median_ns)),
        naive_min_ns: naive.iter().map(|t| t.min_ns).min().unwrap_or(0),
        auto_min_ns: auto.iter().map(|t| t.min_ns).min().unwrap_or(0),
        naive_comparisons: mean(naive.iter().map(|t| t.symbol_comparisons as f64)),
        auto_comparisons: mean(auto.iter().map(|t| t.symbol_comparisons as f64)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Markdown,
}

pub const CSV_COLUMNS: [&str; 8] = [
    "sigma",
    "m",
    "naive_mean_ns",
    "auto_mean_ns",
    "ratio",
    "naive_comparisons",
    "auto_comparisons",
    "distribution",
];

/// Four decimals, as in the published tables.
pub fn format_ratio(ratio: f64) -> String {
    format!("{ratio:.4}")
}

pub fn emit_report(records: &[BenchRecord], format: ReportFormat) -> Result<Vec<u8>> {
    if records.is_empty() {
        return Err(Error::invalid("no records to report"));
    }
    match format {
        ReportFormat::Csv => emit_csv(records),
        ReportFormat::Markdown => Ok(emit_markdown(records).into_bytes()),
    }
}

fn emit_csv(records: &[BenchRecord]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.write_record([
            r.sigma.to_string(),
            r.m.to_string(),
            format!("{:.1}", r.naive_mean_ns),
            format!("{:.1}", r.auto_mean_ns),
            format_ratio(r.ratio),
            format!("{:.1}", r.naive_comparisons),
            format!("{:.1}", r.auto_comparisons),
            r.distribution.clone(),
        ])?;
    }
    w.into_inner()
        .map_err(|e| Error::internal(format!("flushing CSV buffer: {e}")))
}

fn emit_markdown(records: &[BenchRecord]) -> String {
    let mut groups: Vec<(Matching, &str)> = Vec::new();
    for r in records {
        let key = (r.matching, r.distribution.as_str());
        if !groups.contains(&key) {
            groups.push(key);
        }
    }
    let mut out = String::new();
    for (gi, (matching, dist)) in groups.iter().enumerate() {
        if gi > 0 {
            out.push('\n');
        }
        let title = match matching {
            Matching::Exact => "Exact matching",
            Matching::Parameterized => "Parameterized matching",
        };
        let _ = writeln!(out, "### {title}, patterns {dist}\n");
        out.push_str("| \\|Σ\\| | patt. length | Naive (µs) | Automaton (µs) | Naive/Automaton | Naive cmp | Automaton cmp |\n");
        out.push_str("|---:|---:|---:|---:|---:|---:|---:|\n");
        let mut last_sigma = None;
        for r in records
            .iter()
            .filter(|r| r.matching == *matching && r.distribution == *dist)
        {
            let sigma = if last_sigma == Some(r.sigma) {
                String::new()
            } else {
                r.sigma.to_string()
            };
            last_sigma = Some(r.sigma);
            let _ = writeln!(
                out,
                "| {sigma} | {} | {:.1} | {:.1} | {} | {:.1} | {:.1} |",
                r.m,
                r.naive_mean_ns / 1000.0,
                r.auto_mean_ns / 1000.0,
                format_ratio(r.ratio),
                r.naive_comparisons,
                r.auto_comparisons,
            );
        }
    }
    out
}

/// Writes whichever outputs the config names.
pub fn write_outputs(run: &SuiteRun, outputs: &Outputs) -> Result<()> {
    fn put(path: &Path, bytes: &[u8]) -> Result<()> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        fs::write(path, bytes)?;
        Ok(())
    }
    if let Some(p) = &outputs.records {
        put(p, &serde_json::to_vec_pretty(&run.records)?)?;
    }
    if let Some(p) = &outputs.manifest {
        put(p, &serde_json::to_vec_pretty(&run.manifest)?)?;
    }
    if !run.records.is_empty() {
        if let Some(p) = &outputs.csv {
            put(p, &emit_report(&run.records, ReportFormat::Csv)?)?;
        }
        if let Some(p) = &outputs.markdown {
            put(p, &emit_report(&run.records, ReportFormat::Markdown)?)?;
        }
    }
    Ok(())
}
