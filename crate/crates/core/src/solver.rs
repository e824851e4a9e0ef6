//! The full method: Phase I, then Step 3, then minuets until the grid is
//! complete or no starter makes progress.
//!
//! The solver never consults the oracle.

use serde::{Deserialize, Serialize};

use crate::grid::{Consistency, Grid};
use crate::minuet::{
    enumerate_starters, run_minuet, IllPosedReason, MinuetObserver, MinuetResult, Starter,
    DEFAULT_ROUND_CAP,
};
use crate::phase1::run_phase1;
use crate::phase2::{step3_fixpoint, CleanupOptions};
use crate::trace::{Rule, Step, Trace, TraceEvent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveConfig {
    /// Look for hidden triples (three half doubles in three cells) in Step 1.
    pub phase1_triples: bool,
    /// Give up after this many stuck starters in a row. `None` tries every
    /// starter in the list.
    pub max_starters: Option<usize>,
    pub round_cap: usize,
    pub cleanup: CleanupOptions,
    /// Record a trace. Turning it off saves allocation in batch runs.
    pub trace: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            phase1_triples: false,
            max_starters: None,
            round_cap: DEFAULT_ROUND_CAP,
            cleanup: CleanupOptions::default(),
            trace: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub givens: usize,
    pub phase1_passes: usize,
    pub phase1_finds: usize,
    pub step3_sweeps: usize,
    /// Starters danced, including stuck ones.
    pub minuets: usize,
    pub progress: usize,
    pub stuck: usize,
    pub rounds: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailureReason {
    /// Every starter of the final list left the grid unchanged.
    AllStartersStuck,
    /// The grid has no bivalue cell and no half double.
    NoStarters,
    /// `max_starters` stuck starters in a row.
    StarterLimit(usize),
}

impl FailureReason {
    #[must_use]
    pub fn code(self) -> &'static str {
        match self {
            FailureReason::AllStartersStuck => "all-starters-stuck",
            FailureReason::NoStarters => "no-starters",
            FailureReason::StarterLimit(_) => "starter-limit",
        }
    }
}

/// What the method left behind when it could go no further.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureReport {
    pub puzzle: Grid,
    pub residual: Grid,
    pub starters_tried: Vec<Starter>,
    pub reason: FailureReason,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(Grid),
    ConjectureFailure(Box<FailureReport>),
    IllPosedDetected(IllPosedReason),
}

impl SolveOutcome {
    #[must_use]
    pub fn solved(&self) -> Option<&Grid> {
        match self {
            SolveOutcome::Solved(g) => Some(g),
            _ => None,
        }
    }

    #[must_use]
    pub fn label(&self) -> &'static str {
        match self {
            SolveOutcome::Solved(_) => "solved",
            SolveOutcome::ConjectureFailure(_) => "conjecture-failure",
            SolveOutcome::IllPosedDetected(_) => "ill-posed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveRun {
    pub outcome: SolveOutcome,
    pub stats: SolveStats,
    pub trace: Trace,
    /// The grid as it stood when the solver stopped.
    pub final_grid: Grid,
}

#[must_use]
pub fn solve(puzzle: &Grid, config: &SolveConfig) -> SolveRun {
    solve_with_observer(puzzle, config, &mut ())
}

pub fn solve_with_observer(
    puzzle: &Grid,
    config: &SolveConfig,
    observer: &mut dyn MinuetObserver,
) -> SolveRun {
    let mut trace = if config.trace {
        Trace::new()
    } else {
        Trace::disabled()
    };
    let mut stats = SolveStats {
        givens: puzzle.given_count(),
        ..SolveStats::default()
    };
    let mut grid = puzzle.clone();
    let outcome = drive(&mut grid, config, &mut stats, &mut trace, observer);
    let outcome = match outcome {
        Ok(Some(report)) => SolveOutcome::ConjectureFailure(Box::new(FailureReport {
            puzzle: puzzle.clone(),
            residual: grid.clone(),
            ..report
        })),
        Ok(None) => SolveOutcome::Solved(grid.clone()),
        Err(reason) => SolveOutcome::IllPosedDetected(reason),
    };
    SolveRun {
        outcome,
        stats,
        trace,
        final_grid: grid,
    }
}

/// `Ok(None)` when solved, `Ok(Some(_))` on a conjecture failure (puzzle and
/// residual are filled in by the caller).
fn drive(
    grid: &mut Grid,
    config: &SolveConfig,
    stats: &mut SolveStats,
    trace: &mut Trace,
    observer: &mut dyn MinuetObserver,
) -> Result<Option<FailureReport>, IllPosedReason> {
    if let Consistency::Conflict(structure, digit) = grid.check_consistency() {
        return Err(IllPosedReason::Contradiction(
            crate::grid::Contradiction::Conflict { structure, digit },
        ));
    }
    let changes = grid.propagate_ink();
    if !changes.is_empty() {
        trace.push(TraceEvent::new(Step::Setup, Rule::GivenBlocking).with_changes(changes));
    }
    if let Some(c) = grid.check_consistency().into_contradiction() {
        return Err(IllPosedReason::Contradiction(c));
    }

    let (step1, _, _) =
        run_phase1(grid, config.phase1_triples, trace).map_err(IllPosedReason::Contradiction)?;
    stats.phase1_passes = step1.passes;
    stats.phase1_finds = step1.finds.len();
    let step3 =
        step3_fixpoint(grid, config.cleanup, trace).map_err(IllPosedReason::Contradiction)?;
    stats.step3_sweeps += step3.sweeps;

    let mut tried = Vec::new();
    'outer: while !grid.is_complete() {
        let Ok(starters) = enumerate_starters(grid) else {
            return Ok(Some(failure(tried, FailureReason::NoStarters)));
        };
        let mut stuck_in_row = 0;
        for starter in starters {
            if let Some(limit) = config.max_starters {
                if stuck_in_row >= limit {
                    return Ok(Some(failure(tried, FailureReason::StarterLimit(limit))));
                }
            }
            tried.push(starter.starter);
            stats.minuets += 1;
            let run = run_minuet(
                grid,
                starter,
                config.round_cap,
                config.cleanup,
                trace,
                observer,
            )?;
            stats.rounds += run.rounds;
            match run.result {
                MinuetResult::Stuck => {
                    stats.stuck += 1;
                    stuck_in_row += 1;
                }
                MinuetResult::Progress | MinuetResult::SolvedOutright => {
                    stats.progress += 1;
                    continue 'outer;
                }
            }
        }
        return Ok(Some(failure(tried, FailureReason::AllStartersStuck)));
    }
    if let Some(c) = grid.check_consistency().into_contradiction() {
        return Err(IllPosedReason::Contradiction(c));
    }
    Ok(None)
}

fn failure(starters_tried: Vec<Starter>, reason: FailureReason) -> FailureReport {
    FailureReport {
        puzzle: Grid::empty(),
        residual: Grid::empty(),
        starters_tried,
        reason,
    }
}
