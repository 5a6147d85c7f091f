use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;

use chi_lab::graph::{encode_graph6, enumerate_labeled_with_guard, GnpGenerator, DEFAULT_ENUMERATION_GUARD};
use chi_lab::harness::{
    default_guard, scan_eps, scan_invariants, scan_reed, verify_all, Engine, GraphSource, GraphStream, OversizePolicy,
    RecordFormat, RecordWriter, ScanOptions, StrategyKind, VerificationSummary, VerifyOptions, Violation,
    DEFAULT_GUARD,
};
use chi_lab::rational::parse_rational;

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_NOTABLE: u8 = 3;

/// Exact graph invariants and chromatic-number bound verification.
///
/// Exit status: 0 pass, 1 usage or I/O error, 2 a proven bound was violated,
/// 3 a Reed-bound violator was found.
#[derive(Parser)]
#[command(name = "chi-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariants of every graph in a graph6 file.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        with_excess: bool,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guard: Guard,
    },
    /// Every proven bound on every graph in a graph6 file.
    Bounds {
        file: PathBuf,
        #[command(flatten)]
        check: Check,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guard: Guard,
    },
    /// Soundness sweep of every proven bound; records are written only with --out.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        check: Check,
        /// Stop after the first graph with a violation.
        #[arg(long)]
        fail_fast: bool,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guard: Guard,
    },
    /// Search for graphs with χ > ⌈(ω + Δ + 1)/2⌉.
    ScanReed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guard: Guard,
    },
    /// Check the ε-relaxed bound / complement-connectivity dichotomy.
    ScanEps {
        #[command(flatten)]
        input: Input,
        /// Comma-separated positive rationals, e.g. 1/10,1/4,1/2.
        #[arg(long, required = true, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
        epsilon: Vec<Rational64>,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        guard: Guard,
    },
    /// Seeded G(n, p) graphs as graph6 lines.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational)]
        p: Rational64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every labeled graph on n vertices as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Largest order accepted.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_GUARD)]
        limit: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// graph6 file, one graph per line.
    file: Option<PathBuf>,
    /// Use every labeled graph on N vertices instead of a file.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
}

#[derive(Args)]
struct Check {
    #[arg(long)]
    with_excess: bool,
    #[arg(long, default_value_t = StrategyKind::Heuristic)]
    strategy: StrategyKind,
}

#[derive(Args)]
struct Output {
    /// Record file; stdout for `invariants` and `bounds` when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "jsonl")]
    format: RecordFormat,
}

#[derive(Args)]
struct Guard {
    /// Largest graph order processed (default 12 with excess, 16 without).
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
    /// Fail on a graph above the guard instead of skipping it.
    #[arg(long)]
    abort_oversize: bool,
    /// Largest order accepted by --enumerate.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ENUMERATION_GUARD)]
    enumerate_limit: usize,
}

impl Guard {
    fn policy(&self) -> OversizePolicy {
        if self.abort_oversize {
            OversizePolicy::Abort
        } else {
            OversizePolicy::Skip
        }
    }

    fn scan(&self, with_excess: bool) -> ScanOptions {
        ScanOptions {
            max_order: self.max_n.unwrap_or_else(|| default_guard(with_excess)),
            oversize: self.policy(),
        }
    }

    fn open(&self, input: &Input) -> anyhow::Result<GraphStream> {
        let source = match (&input.file, input.enumerate) {
            (Some(path), _) => GraphSource::File(path.clone()),
            (None, Some(n)) => GraphSource::Enumerate {
                n,
                guard: self.enumerate_limit,
            },
            (None, None) => bail!("no input: give a graph6 file or --enumerate N"),
        };
        Ok(source.open()?)
    }

    fn open_file(&self, file: &Path) -> anyhow::Result<GraphStream> {
        self.open(&Input {
            file: Some(file.to_path_buf()),
            enumerate: None,
        })
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { EXIT_OK });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    let engine = Engine::from_env();
    log::info!("{} worker threads", engine.threads());
    match command {
        Command::Invariants {
            file,
            with_excess,
            output,
            guard,
        } => {
            let mut writer = RecordWriter::create(output.out.as_deref(), output.format)?;
            let summary = scan_invariants(
                guard.open_file(&file)?,
                with_excess,
                &guard.scan(with_excess),
                &engine,
                |rec| writer.write(rec),
            )?;
            writer.finish()?;
            eprintln!(
                "processed {} graphs ({} skipped)",
                summary.graphs_processed, summary.graphs_skipped
            );
            Ok(EXIT_OK)
        }
        Command::Bounds {
            file,
            check,
            output,
            guard,
        } => {
            let opts = verify_options(&check, false, &guard);
            let mut writer = RecordWriter::create(output.out.as_deref(), output.format)?;
            let summary = verify_all(guard.open_file(&file)?, &opts, &engine, |rec| writer.write(rec))?;
            writer.finish()?;
            Ok(report_verification(&summary))
        }
        Command::Verify {
            input,
            check,
            fail_fast,
            output,
            guard,
        } => {
            let opts = verify_options(&check, fail_fast, &guard);
            let stream = guard.open(&input)?;
            let summary = match &output.out {
                Some(path) => {
                    let mut writer = RecordWriter::create(Some(path), output.format)?;
                    let s = verify_all(stream, &opts, &engine, |rec| writer.write(rec))?;
                    writer.finish()?;
                    s
                }
                None => verify_all(stream, &opts, &engine, |_| Ok(()))?,
            };
            Ok(report_verification(&summary))
        }
        Command::ScanReed { input, output, guard } => {
            let stream = guard.open(&input)?;
            let mut writer = output
                .out
                .as_deref()
                .map(|p| RecordWriter::create(Some(p), output.format))
                .transpose()?;
            let summary = scan_reed(stream, &guard.scan(false), &engine, |rec| match &mut writer {
                Some(w) => w.write(rec),
                None => Ok(()),
            })?;
            if let Some(w) = writer {
                w.finish()?;
            }
            eprintln!(
                "processed {} graphs ({} skipped)",
                summary.graphs_processed, summary.graphs_skipped
            );
            if summary.violators.is_empty() {
                eprintln!("no violators");
                return Ok(EXIT_OK);
            }
            for v in &summary.violators {
                eprintln!(
                    "VIOLATOR {} chi={} reed={} kappa_bar={}",
                    v.graph6, v.chromatic, v.reed_bound, v.kappa_bar
                );
            }
            eprintln!("{} violators", summary.violators.len());
            if let Some(ratio) = summary.min_violator_ratio() {
                eprintln!("min kappa_bar/log2(n) over violators: {ratio:.6}");
            }
            Ok(EXIT_NOTABLE)
        }
        Command::ScanEps {
            input,
            epsilon,
            output,
            guard,
        } => {
            let stream = guard.open(&input)?;
            let mut writer = output
                .out
                .as_deref()
                .map(|p| RecordWriter::create(Some(p), output.format))
                .transpose()?;
            let opts = ScanOptions {
                max_order: guard.max_n.unwrap_or(DEFAULT_GUARD),
                oversize: guard.policy(),
            };
            let summary = scan_eps(stream, &epsilon, &opts, &engine, |rec| match &mut writer {
                Some(w) => w.write(rec),
                None => Ok(()),
            })?;
            if let Some(w) = writer {
                w.finish()?;
            }
            eprintln!(
                "processed {} graphs ({} skipped)",
                summary.graphs_processed, summary.graphs_skipped
            );
            for t in &summary.tallies {
                eprintln!(
                    "eps={}: bound holds {}, threshold consulted {}, threshold holds {}, dichotomy failures {}",
                    t.eps, t.bound_holds, t.threshold_consulted, t.threshold_holds, t.dichotomy_failures
                );
            }
            print_violations(&summary.failures);
            Ok(if summary.passed() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Gen { n, p, count, seed } => {
            let generator = GnpGenerator::new(n, p, seed)?;
            emit(generator.take(count as usize))
        }
        Command::Enumerate { n, limit } => emit(enumerate_labeled_with_guard(n, limit)?),
    }
}

fn verify_options(check: &Check, fail_fast: bool, guard: &Guard) -> VerifyOptions {
    VerifyOptions {
        with_excess: check.with_excess,
        strategy: check.strategy,
        fail_fast,
        max_order: guard.max_n,
        oversize: guard.policy(),
        bias: None,
    }
}

fn print_violations(violations: &[Violation]) {
    for v in violations {
        eprintln!(
            "VIOLATION {} check={} params={} value={} chi={}",
            v.graph6, v.check, v.params, v.value, v.chromatic
        );
    }
}

fn report_verification(s: &VerificationSummary) -> u8 {
    eprintln!(
        "processed {} graphs ({} skipped), {} bound checks, {} violations in {:.2}s",
        s.graphs_processed,
        s.graphs_skipped,
        s.bound_checks,
        s.violations.len(),
        s.elapsed.as_secs_f64()
    );
    print_violations(&s.violations);
    for g6 in &s.reed_violators {
        eprintln!("VIOLATOR {g6}");
    }
    if !s.passed() {
        EXIT_VIOLATION
    } else if !s.reed_violators.is_empty() {
        EXIT_NOTABLE
    } else {
        EXIT_OK
    }
}

fn emit(graphs: impl Iterator<Item = chi_lab::Graph>) -> anyhow::Result<u8> {
    let mut out = BufWriter::new(io::stdout().lock());
    for g in graphs {
        let line = encode_graph6(&g)?;
        match writeln!(out, "{line}") {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => return Ok(EXIT_OK),
            r => r.context("writing to stdout")?,
        }
    }
    match out.flush() {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(EXIT_OK),
        r => r.context("writing to stdout").map(|_| EXIT_OK),
    }
}
