//! The minuet method for 9×9 Sudoku: human-style deduction rules, a
//! two-hypothesis step for hard puzzles, a brute-force oracle and a batch
//! harness that checks one against the other.
//!
//! ```
//! use minuet_core::{grid::parse_grid, solver::{solve, SolveConfig}};
//!
//! let puzzle = parse_grid(
//!     "53..7....6..195....98....6.8...6...34..8.3..17...2...6.6....28....419..5....8..79",
//! ).unwrap();
//! let run = solve(&puzzle, &SolveConfig::default());
//! assert!(run.outcome.solved().is_some());
//! ```

pub mod grid;
pub mod harness;
pub mod minuet;
pub mod oracle;
pub mod phase1;
pub mod phase2;
pub mod solver;
pub mod trace;

pub use grid::{parse_grid, serialize_grid, CandidateSet, CellIndex, Digit, Grid, StructureId};
pub use solver::{solve, SolveConfig, SolveOutcome};
