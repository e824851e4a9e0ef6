use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::grid::Grid;
use crate::oracle::{classify, WellPosedness};
use crate::solver::{solve, SolveConfig, SolveOutcome, SolveRun};

use super::corpus::Corpus;
use super::report::{validate_report, CounterexampleReport};
use super::stats::BatchStats;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatchConfig {
    pub solve: SolveConfig,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    pub level: f64,
}

impl Default for BatchConfig {
    fn default() -> Self {
        Self {
            solve: SolveConfig {
                trace: false,
                ..SolveConfig::default()
            },
            jobs: 1,
            level: 0.90,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PuzzleStatus {
    Solved,
    ConjectureFailure(Box<CounterexampleReport>),
    /// Skipped: the oracle says the puzzle is not well-posed.
    IllPosedInput(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleResult {
    pub line: usize,
    pub text: String,
    pub status: PuzzleStatus,
    pub minuets: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchResult {
    pub stats: BatchStats,
    /// In corpus order.
    pub results: Vec<PuzzleResult>,
}

impl BatchResult {
    pub fn reports(&self) -> impl Iterator<Item = &CounterexampleReport> {
        self.results.iter().filter_map(|r| match &r.status {
            PuzzleStatus::ConjectureFailure(rep) => Some(rep.as_ref()),
            _ => None,
        })
    }
}

/// The solver disagreed with the oracle. Batch runs stop on the first one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BatchError {
    #[error("line {line}: solver answer differs from the oracle\n  puzzle   {puzzle}\n  solver   {got}\n  oracle   {expected}\n  cells    {cells}")]
    OracleMismatch {
        line: usize,
        puzzle: String,
        got: String,
        expected: String,
        cells: String,
    },
    #[error(
        "line {line}: solver called a well-posed puzzle ill-posed ({reason})\n  puzzle   {puzzle}"
    )]
    FalseIllPosed {
        line: usize,
        puzzle: String,
        reason: String,
    },
    #[error("line {line}: failure report does not validate: {reason}\n  puzzle   {puzzle}")]
    InvalidReport {
        line: usize,
        puzzle: String,
        reason: String,
    },
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

fn differing_cells(got: &Grid, expected: &Grid) -> String {
    crate::grid::CellIndex::all()
        .filter(|&c| got.ink(c) != expected.ink(c))
        .map(|c| {
            let show = |d: Option<crate::grid::Digit>| d.map_or("-".to_owned(), |d| d.to_string());
            format!("{c}:{}≠{}", show(got.ink(c)), show(expected.ink(c)))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_one<F>(
    entry: &super::corpus::CorpusEntry,
    config: &SolveConfig,
    solver: &F,
) -> Result<PuzzleResult, BatchError>
where
    F: Fn(&Grid, &SolveConfig) -> SolveRun + Sync,
{
    let mut result = PuzzleResult {
        line: entry.line,
        text: entry.text.clone(),
        status: PuzzleStatus::Solved,
        minuets: 0,
        elapsed: Duration::ZERO,
    };
    let expected = match classify(&entry.grid).0 {
        WellPosedness::WellPosed(g) => g,
        other => {
            result.status = PuzzleStatus::IllPosedInput(other.label());
            return Ok(result);
        }
    };
    let start = Instant::now();
    let run = solver(&entry.grid, config);
    result.elapsed = start.elapsed();
    result.minuets = run.stats.minuets;
    match run.outcome {
        SolveOutcome::Solved(got) => {
            if got.to_line() != expected.to_line() {
                return Err(BatchError::OracleMismatch {
                    line: entry.line,
                    puzzle: entry.text.clone(),
                    got: got.to_line(),
                    expected: expected.to_line(),
                    cells: differing_cells(&got, &expected),
                });
            }
        }
        SolveOutcome::ConjectureFailure(failure) => {
            let report = CounterexampleReport::new(entry.line, &failure);
            if let Err(e) = validate_report(&report) {
                return Err(BatchError::InvalidReport {
                    line: entry.line,
                    puzzle: entry.text.clone(),
                    reason: e.to_string(),
                });
            }
            result.status = PuzzleStatus::ConjectureFailure(Box::new(report));
        }
        SolveOutcome::IllPosedDetected(reason) => {
            return Err(BatchError::FalseIllPosed {
                line: entry.line,
                puzzle: entry.text.clone(),
                reason: reason.to_string(),
            });
        }
    }
    Ok(result)
}

pub fn batch_solve(corpus: &Corpus, config: &BatchConfig) -> Result<BatchResult, BatchError> {
    batch_solve_with(corpus, config, solve)
}

/// Like [`batch_solve`] with a caller-supplied solver, which is how the
/// oracle checks themselves get tested.
pub fn batch_solve_with<F>(
    corpus: &Corpus,
    config: &BatchConfig,
    solver: F,
) -> Result<BatchResult, BatchError>
where
    F: Fn(&Grid, &SolveConfig) -> SolveRun + Sync,
{
    let mut results = if config.jobs <= 1 {
        corpus
            .entries
            .iter()
            .map(|e| run_one(e, &config.solve, &solver))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| BatchError::Pool(e.to_string()))?;
        pool.install(|| {
            corpus
                .entries
                .par_iter()
                .map(|e| run_one(e, &config.solve, &solver))
                .collect::<Result<Vec<_>, _>>()
        })?
    };
    results.sort_by_key(|r| r.line);

    let mut minuets = Vec::new();
    let mut times = Vec::new();
    let (mut failures, mut ill_posed) = (0, 0);
    for r in &results {
        match r.status {
            PuzzleStatus::IllPosedInput(_) => {
                ill_posed += 1;
                continue;
            }
            PuzzleStatus::ConjectureFailure(_) => failures += 1,
            PuzzleStatus::Solved => {}
        }
        minuets.push(r.minuets);
        times.push(r.elapsed);
    }
    Ok(BatchResult {
        stats: BatchStats::new(minuets, failures, ill_posed, times, config.level),
        results,
    })
}
