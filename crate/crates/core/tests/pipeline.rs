use pmatch::bench::{self, BenchConfig, CellStatus, Outputs, ReportFormat, TextSource};
use pmatch::textgen::{self, Distribution, PlantSpec};
use pmatch::{Algorithm, Matching};

#[test]
fn planted_positions_are_found_by_every_algorithm() {
    for sigma in [2, 4, 26] {
        for m in [1, 7, 64] {
            let text = textgen::gen_uniform_text(50_000, sigma, 7).unwrap();
            let pattern = textgen::gen_pattern(m, sigma, 8).unwrap();
            for distribution in [Distribution::Uniform, Distribution::END_SKEWED] {
                let spec = PlantSpec {
                    count: 40,
                    distribution,
                    seed: 9,
                };
                let (text, planted) = textgen::plant(&text, &pattern, &spec).unwrap();
                assert_eq!(planted.len(), 40);
                for algo in Algorithm::ALL {
                    let found = algo.search(&text, &pattern).unwrap().occurrences;
                    assert!(
                        planted.iter().all(|p| found.binary_search(p).is_ok()),
                        "{algo} sigma={sigma} m={m}"
                    );
                }
            }
        }
    }
}

#[test]
fn generators_are_deterministic() {
    let a = textgen::gen_uniform_text(1000, 5, 42).unwrap();
    assert_eq!(a, textgen::gen_uniform_text(1000, 5, 42).unwrap());
    assert_ne!(a, textgen::gen_uniform_text(1000, 5, 43).unwrap());
    let p = textgen::gen_pattern(10, 5, 1).unwrap();
    let spec = PlantSpec::uniform(20, 3);
    assert_eq!(
        textgen::plant(&a, &p, &spec).unwrap(),
        textgen::plant(&a, &p, &spec).unwrap()
    );
}

#[test]
fn periodic_naive_count_is_exact() {
    let (text, pattern) = textgen::gen_periodic(10_000, 100).unwrap();
    let out = Algorithm::ExactNaive.search(&text, &pattern).unwrap();
    assert!(out.occurrences.is_empty());
    assert_eq!(
        out.stats.symbol_comparisons,
        ((10_000 - 100 + 1) * 100) as u64
    );
}

fn small_config(matching: Matching) -> BenchConfig {
    let mut c = BenchConfig::new(matching, vec![2, 8], vec![4, 16]);
    c.n = 5_000;
    c.repeats = 3;
    c.plant_count = 10;
    c.seed = 11;
    c
}

#[test]
fn suite_runs_every_cell_and_is_reproducible() {
    for matching in [Matching::Exact, Matching::Parameterized] {
        let config = small_config(matching);
        let a = bench::run_suite(&config).unwrap();
        let b = bench::run_suite(&config).unwrap();
        assert_eq!(a.records.len(), 8);
        assert!(a.manifest.cells.iter().all(|c| c.status == CellStatus::Ok));
        assert_eq!(a.manifest, b.manifest);
        for r in &a.records {
            assert_eq!(r.trials, 3);
            assert!((r.ratio - r.naive_mean_ns / r.auto_mean_ns).abs() < 1e-9);
        }
    }
}

#[test]
fn infeasible_cells_are_skipped() {
    let mut config = small_config(Matching::Exact);
    config.pattern_lengths = vec![4, 1000];
    let run = bench::run_suite(&config).unwrap();
    let skipped = run
        .manifest
        .cells
        .iter()
        .filter(|c| c.status == CellStatus::Skipped)
        .count();
    assert_eq!(skipped, 4);
    assert_eq!(run.records.len(), 4);
}

#[test]
fn periodic_source_reports_half_m_count_ratio() {
    let mut config = BenchConfig::new(Matching::Exact, vec![2], vec![32]);
    config.source = TextSource::Periodic;
    config.n = 20_000;
    config.repeats = 1;
    config.distributions = vec![Distribution::Uniform];
    let run = bench::run_suite(&config).unwrap();
    let r = &run.records[0];
    assert!((r.comparison_ratio() - 16.0).abs() < 0.5);
}

#[test]
fn outputs_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = small_config(Matching::Exact);
    config.outputs = Outputs {
        csv: Some(dir.path().join("r.csv")),
        markdown: Some(dir.path().join("r.md")),
        records: Some(dir.path().join("r.json")),
        manifest: Some(dir.path().join("m.json")),
    };
    let run = bench::run_suite(&config).unwrap();
    bench::write_outputs(&run, &config.outputs).unwrap();

    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap(), bench::CSV_COLUMNS.join(","));
    assert_eq!(csv.lines().count(), 9);
    let md = std::fs::read_to_string(dir.path().join("r.md")).unwrap();
    assert!(md.contains("Naive/Automaton"));

    let records: Vec<bench::BenchRecord> =
        serde_json::from_slice(&std::fs::read(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(records, run.records);
    let again = bench::emit_report(&records, ReportFormat::Csv).unwrap();
    assert_eq!(String::from_utf8(again).unwrap(), csv);
}

#[test]
fn shipped_configs_load() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let config =
                BenchConfig::load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert!(config.outputs.csv.is_some(), "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 6);
}
