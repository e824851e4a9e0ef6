//! Counterexample reports: a readable account plus a JSON block that can be
//! checked without trusting the solver.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{parse_grid, CellIndex, Grid};
use crate::oracle::{classify, WellPosedness};
use crate::solver::FailureReport;

const MACHINE_MARKER: &str = "--- machine-readable ---";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub verdict: String,
    pub solution: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    /// Line of the corpus file, 0 when the puzzle did not come from one.
    pub line: usize,
    pub puzzle: String,
    /// Per-cell tokens: `=d` for ink, otherwise the remaining candidates.
    pub residual: Vec<String>,
    pub starters_tried: Vec<String>,
    pub reason: String,
    pub oracle: OracleVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("no machine-readable block")]
    MissingBlock,
    #[error("malformed machine-readable block: {0}")]
    Json(String),
    #[error("bad puzzle: {0}")]
    Puzzle(String),
    #[error("bad residual grid")]
    Residual,
    #[error("the puzzle is not well-posed ({0})")]
    NotWellPosed(&'static str),
    #[error("recorded oracle verdict disagrees with a fresh run")]
    VerdictMismatch,
    #[error("residual grid lost the solution digit at {0}")]
    SolutionLost(CellIndex),
    #[error("residual grid disagrees with a given at {0}")]
    GivenChanged(CellIndex),
    #[error("residual grid is already complete")]
    Complete,
}

impl CounterexampleReport {
    /// Builds a report and runs the oracle on the puzzle.
    #[must_use]
    pub fn new(line: usize, failure: &FailureReport) -> Self {
        let (verdict, _) = classify(&failure.puzzle);
        Self {
            line,
            puzzle: failure.puzzle.to_line(),
            residual: failure.residual.to_candidate_tokens(),
            starters_tried: failure
                .starters_tried
                .iter()
                .map(ToString::to_string)
                .collect(),
            reason: failure.reason.code().to_owned(),
            oracle: OracleVerdict {
                verdict: verdict.label().to_owned(),
                solution: match verdict {
                    WellPosedness::WellPosed(g) => Some(g.to_line()),
                    _ => None,
                },
            },
        }
    }

    #[must_use]
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "counterexample candidate");
        if self.line > 0 {
            let _ = writeln!(out, "corpus line  {}", self.line);
        }
        let _ = writeln!(out, "puzzle       {}", self.puzzle);
        let _ = writeln!(out, "reason       {}", self.reason);
        let _ = writeln!(out, "oracle       {}", self.oracle.verdict);
        if let Some(s) = &self.oracle.solution {
            let _ = writeln!(out, "solution     {s}");
        }
        let _ = writeln!(out, "residual grid:");
        for row in self.residual.chunks(9) {
            let cells: Vec<String> = row.iter().map(|t| format!("{t:>9}")).collect();
            let _ = writeln!(out, "  {}", cells.join(" "));
        }
        let _ = writeln!(out, "starters tried ({}):", self.starters_tried.len());
        for s in &self.starters_tried {
            let _ = writeln!(out, "  {s}");
        }
        let _ = writeln!(out, "{MACHINE_MARKER}");
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(self).expect("plain data serializes")
        );
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ReportError> {
        let (_, block) = text
            .split_once(MACHINE_MARKER)
            .ok_or(ReportError::MissingBlock)?;
        serde_json::from_str(block.trim()).map_err(|e| ReportError::Json(e.to_string()))
    }
}

/// Checks a report from scratch: the puzzle must be well-posed by a fresh
/// oracle run, and every cell of the residual grid must still allow the
/// solution digit.
pub fn validate_report(report: &CounterexampleReport) -> Result<Grid, ReportError> {
    let puzzle = parse_grid(&report.puzzle).map_err(|e| ReportError::Puzzle(e.to_string()))?;
    let solution = match classify(&puzzle).0 {
        WellPosedness::WellPosed(g) => g,
        other => return Err(ReportError::NotWellPosed(other.label())),
    };
    if report.oracle.verdict != "WellPosed"
        || report.oracle.solution.as_deref() != Some(solution.to_line().as_str())
    {
        return Err(ReportError::VerdictMismatch);
    }
    let residual = Grid::from_candidate_tokens(&report.residual).ok_or(ReportError::Residual)?;
    for c in CellIndex::all() {
        if let Some(given) = puzzle.ink(c) {
            if residual.ink(c) != Some(given) {
                return Err(ReportError::GivenChanged(c));
            }
        }
        let truth = solution.ink(c).expect("solution is complete");
        if !residual.options(c).contains(truth) {
            return Err(ReportError::SolutionLost(c));
        }
    }
    if residual.is_complete() {
        return Err(ReportError::Complete);
    }
    Ok(solution)
}
