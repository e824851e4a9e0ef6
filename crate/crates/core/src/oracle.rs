//! Brute-force backtracking used as ground truth.
//!
//! This module reads only the inked cells of a grid and shares nothing with
//! the deduction rules, so its answers are an independent check on them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{CellIndex, CellState, Consistency, Digit, Grid, Origin};

/// A well-posed puzzle needs at least this many clues.
pub const MIN_CLUES_FOR_UNIQUENESS: usize = 17;

// a grid is a flat 324-byte array; boxing it buys nothing
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WellPosedness {
    WellPosed(Grid),
    NoSolution,
    MultipleSolutions,
}

impl WellPosedness {
    #[must_use]
    pub fn is_well_posed(&self) -> bool {
        matches!(self, WellPosedness::WellPosed(_))
    }

    #[must_use]
    pub fn label(&self) -> &'static str {
        match self {
            WellPosedness::WellPosed(_) => "WellPosed",
            WellPosedness::NoSolution => "NoSolution",
            WellPosedness::MultipleSolutions => "MultipleSolutions",
        }
    }
}

/// How [`classify`] reached its verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// An inked conflict was spotted without searching.
    Conflict,
    /// Too few clues for a unique solution; no search performed.
    ClueCount,
    /// Backtracking search, with the number of nodes visited.
    Search { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("puzzle has no solution")]
    NoSolution,
    #[error("puzzle has more than one solution")]
    MultipleSolutions,
}

/// Cell selection used by the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CellOrder {
    /// Fewest remaining options first, lowest index on ties.
    #[default]
    MostConstrained,
    /// Lowest empty index first.
    Naive,
}

struct Search {
    digits: [u8; 81],
    rows: [u16; 9],
    cols: [u16; 9],
    boxes: [u16; 9],
    order: CellOrder,
    cap: u64,
    found: u64,
    nodes: u64,
    first: Option<[u8; 81]>,
}

#[inline]
fn box_of(i: usize) -> usize {
    3 * (i / 27) + (i % 9) / 3
}

impl Search {
    /// `None` when the inked cells already conflict.
    fn new(grid: &Grid, order: CellOrder, cap: u64) -> Option<Self> {
        let mut s = Search {
            digits: [0; 81],
            rows: [0; 9],
            cols: [0; 9],
            boxes: [0; 9],
            order,
            cap,
            found: 0,
            nodes: 0,
            first: None,
        };
        for c in CellIndex::all() {
            if let Some(d) = grid.ink(c) {
                let i = c.index();
                let bit = 1u16 << (d.get() - 1);
                let (r, col, b) = (i / 9, i % 9, box_of(i));
                if (s.rows[r] | s.cols[col] | s.boxes[b]) & bit != 0 {
                    return None;
                }
                s.digits[i] = d.get();
                s.rows[r] |= bit;
                s.cols[col] |= bit;
                s.boxes[b] |= bit;
            }
        }
        Some(s)
    }

    #[inline]
    fn free(&self, i: usize) -> u16 {
        !(self.rows[i / 9] | self.cols[i % 9] | self.boxes[box_of(i)]) & 0x1ff
    }

    fn pick(&self) -> Option<(usize, u16)> {
        let mut best: Option<(usize, u16)> = None;
        for i in 0..81 {
            if self.digits[i] != 0 {
                continue;
            }
            let free = self.free(i);
            match self.order {
                CellOrder::Naive => return Some((i, free)),
                CellOrder::MostConstrained => {
                    if best.is_none_or(|(_, b)| free.count_ones() < b.count_ones()) {
                        best = Some((i, free));
                        if free.count_ones() <= 1 {
                            break;
                        }
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        self.nodes += 1;
        let Some((i, mut free)) = self.pick() else {
            self.found += 1;
            if self.first.is_none() {
                self.first = Some(self.digits);
            }
            return;
        };
        let (r, c, b) = (i / 9, i % 9, box_of(i));
        while free != 0 && self.found < self.cap {
            let bit = free & free.wrapping_neg();
            free &= free - 1;
            self.digits[i] = bit.trailing_zeros() as u8 + 1;
            self.rows[r] |= bit;
            self.cols[c] |= bit;
            self.boxes[b] |= bit;
            self.run();
            self.rows[r] &= !bit;
            self.cols[c] &= !bit;
            self.boxes[b] &= !bit;
        }
        self.digits[i] = 0;
    }
}

/// Number of completions of the inked cells, capped at `cap`.
#[must_use]
pub fn count_solutions(grid: &Grid, cap: u64) -> u64 {
    count_solutions_with(grid, cap, CellOrder::MostConstrained)
}

#[must_use]
pub fn count_solutions_with(grid: &Grid, cap: u64, order: CellOrder) -> u64 {
    assert!(cap >= 1, "cap must be at least 1");
    match Search::new(grid, order, cap) {
        Some(mut s) => {
            s.run();
            s.found
        }
        None => 0,
    }
}

fn solution_grid(start: &Grid, digits: &[u8; 81]) -> Grid {
    let mut out = start.clone();
    for c in CellIndex::all() {
        if let CellState::Pencil(_) = start.cell(c) {
            let d = Digit::new(digits[c.index()]).expect("search fills every cell");
            out.set_raw(
                c,
                CellState::Ink {
                    digit: d,
                    origin: Origin::Deduced,
                },
            );
        }
    }
    out
}

/// The unique completion of a well-posed grid.
pub fn brute_solve(grid: &Grid) -> Result<Grid, OracleError> {
    let mut s = Search::new(grid, CellOrder::MostConstrained, 2).ok_or(OracleError::NoSolution)?;
    s.run();
    match s.found {
        0 => Err(OracleError::NoSolution),
        1 => Ok(solution_grid(
            grid,
            &s.first.expect("one solution recorded"),
        )),
        _ => Err(OracleError::MultipleSolutions),
    }
}

/// Classifies a puzzle, reporting whether a search was needed.
#[must_use]
pub fn classify(grid: &Grid) -> (WellPosedness, Method) {
    if matches!(grid.check_consistency(), Consistency::Conflict(..)) {
        return (WellPosedness::NoSolution, Method::Conflict);
    }
    if grid.ink_count() < MIN_CLUES_FOR_UNIQUENESS {
        return (WellPosedness::MultipleSolutions, Method::ClueCount);
    }
    let Some(mut s) = Search::new(grid, CellOrder::MostConstrained, 2) else {
        return (WellPosedness::NoSolution, Method::Conflict);
    };
    s.run();
    let verdict = match s.found {
        0 => WellPosedness::NoSolution,
        1 => WellPosedness::WellPosed(solution_grid(grid, &s.first.expect("recorded"))),
        _ => WellPosedness::MultipleSolutions,
    };
    (verdict, Method::Search { nodes: s.nodes })
}

#[must_use]
pub fn verify_well_posed(grid: &Grid) -> WellPosedness {
    classify(grid).0
}
