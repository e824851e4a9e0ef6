use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use minuet_core::grid::{parse_grid, Grid};
use minuet_core::harness::{
    batch_solve, load_corpus, render_trace, BatchConfig, CounterexampleReport, PuzzleStatus,
    Verbosity,
};
use minuet_core::oracle::{brute_solve, verify_well_posed, OracleError};
use minuet_core::solver::{solve, SolveConfig, SolveOutcome};

const EXIT_SOLVED: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_FAILURE: u8 = 2;
const EXIT_ILL_POSED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "minuet",
    version,
    about = "Solve Sudoku puzzles with the minuet method"
)]
struct Cli {
    /// key=value file supplying defaults for the flags below
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceLevel {
    Summary,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one puzzle
    Solve {
        /// 81 characters, or a file holding them
        puzzle: String,
        #[arg(long, value_enum)]
        trace: Option<TraceLevel>,
        /// Give up after this many stuck starters in a row
        #[arg(long)]
        max_starters: Option<usize>,
        /// Also look for hidden triples in Step 1
        #[arg(long)]
        phase1_triples: bool,
    },
    /// Report whether a puzzle has exactly one solution
    Verify { puzzle: String },
    /// Brute-force solution
    Oracle { puzzle: String },
    /// Solve every puzzle of a corpus file and print statistics
    Batch {
        corpus: PathBuf,
        /// Directory for counterexample reports and the summary
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Confidence level of the failure-rate bound
        #[arg(long)]
        level: Option<f64>,
        #[arg(long)]
        max_starters: Option<usize>,
        #[arg(long)]
        phase1_triples: bool,
    },
}

fn read_config(path: &Path) -> Result<HashMap<String, String>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut map = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("{}:{}: expected key=value", path.display(), i + 1);
        };
        map.insert(k.trim().replace('_', "-"), v.trim().to_owned());
    }
    Ok(map)
}

fn setting<T: std::str::FromStr>(map: &HashMap<String, String>, key: &str) -> Result<Option<T>> {
    map.get(key)
        .map(|v| {
            v.parse()
                .map_err(|_| anyhow::anyhow!("config: bad value for {key}: {v}"))
        })
        .transpose()
}

fn read_puzzle(arg: &str) -> Result<Grid> {
    let text = if Path::new(arg).is_file() {
        let body = fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        body.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect::<String>()
    } else {
        arg.to_owned()
    };
    Ok(parse_grid(&text)?)
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = match &cli.config {
        Some(p) => read_config(p)?,
        None => HashMap::new(),
    };
    let triples_default = setting::<bool>(&cfg, "phase1-triples")?.unwrap_or(false);
    match cli.command {
        Command::Solve {
            puzzle,
            trace,
            max_starters,
            phase1_triples,
        } => {
            let grid = read_puzzle(&puzzle)?;
            let trace = match trace {
                Some(t) => Some(t),
                None => match cfg.get("trace").map(String::as_str) {
                    Some("summary") => Some(TraceLevel::Summary),
                    Some("full") => Some(TraceLevel::Full),
                    Some("none") | None => None,
                    Some(other) => bail!("config: bad value for trace: {other}"),
                },
            };
            let config = SolveConfig {
                phase1_triples: phase1_triples || triples_default,
                max_starters: max_starters.or(setting(&cfg, "max-starters")?),
                trace: trace.is_some(),
                ..SolveConfig::default()
            };
            let run = solve(&grid, &config);
            if let Some(level) = trace {
                let v = match level {
                    TraceLevel::Summary => Verbosity::Summary,
                    TraceLevel::Full => Verbosity::Full,
                };
                print!("{}", render_trace(&run.trace, v));
            }
            let s = run.stats;
            let stats = format!(
                "givens {} / phase I finds {} / step 3 sweeps {} / starters {} ({} stuck)",
                s.givens, s.phase1_finds, s.step3_sweeps, s.minuets, s.stuck
            );
            Ok(match run.outcome {
                SolveOutcome::Solved(g) => {
                    println!("{}", g.to_line());
                    println!("{stats}");
                    EXIT_SOLVED
                }
                SolveOutcome::ConjectureFailure(failure) => {
                    let report = CounterexampleReport::new(0, &failure);
                    if report.oracle.solution.is_none() {
                        // the method stalled on a puzzle that is not well-posed
                        println!("ill-posed: {}", report.oracle.verdict);
                        return Ok(EXIT_ILL_POSED);
                    }
                    println!("conjecture failure");
                    println!("{stats}");
                    print!("{}", report.to_text());
                    EXIT_FAILURE
                }
                SolveOutcome::IllPosedDetected(reason) => {
                    println!("ill-posed: {reason}");
                    EXIT_ILL_POSED
                }
            })
        }
        Command::Verify { puzzle } => {
            let verdict = verify_well_posed(&read_puzzle(&puzzle)?);
            println!("{}", verdict.label());
            Ok(if verdict.is_well_posed() {
                EXIT_SOLVED
            } else {
                EXIT_ILL_POSED
            })
        }
        Command::Oracle { puzzle } => match brute_solve(&read_puzzle(&puzzle)?) {
            Ok(g) => {
                println!("{}", g.to_line());
                Ok(EXIT_SOLVED)
            }
            Err(e @ (OracleError::NoSolution | OracleError::MultipleSolutions)) => {
                println!("{e}");
                Ok(EXIT_ILL_POSED)
            }
        },
        Command::Batch {
            corpus,
            report,
            jobs,
            level,
            max_starters,
            phase1_triples,
        } => {
            let corpus = load_corpus(&corpus)?;
            for e in &corpus.errors {
                eprintln!("skipped {e}");
            }
            let defaults = BatchConfig::default();
            let config = BatchConfig {
                solve: SolveConfig {
                    phase1_triples: phase1_triples || triples_default,
                    max_starters: max_starters.or(setting(&cfg, "max-starters")?),
                    ..defaults.solve
                },
                jobs: jobs.or(setting(&cfg, "jobs")?).unwrap_or(defaults.jobs),
                level: level.or(setting(&cfg, "level")?).unwrap_or(defaults.level),
            };
            let report = report.or(setting(&cfg, "report")?);
            let result = batch_solve(&corpus, &config)?;
            let summary = result.stats.render();
            print!("{summary}{}", result.stats.render_timing());
            for r in &result.results {
                match &r.status {
                    PuzzleStatus::IllPosedInput(v) => println!("line {}: ill-posed ({v})", r.line),
                    PuzzleStatus::ConjectureFailure(_) => {
                        println!("line {}: conjecture failure", r.line);
                    }
                    PuzzleStatus::Solved => {}
                }
            }
            if let Some(dir) = report {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                fs::write(dir.join("summary.txt"), &summary)?;
                for rep in result.reports() {
                    fs::write(dir.join(format!("line-{}.txt", rep.line)), rep.to_text())?;
                }
            }
            Ok(if result.stats.failures == 0 {
                EXIT_SOLVED
            } else {
                EXIT_FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
