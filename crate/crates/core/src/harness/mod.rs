//! Batch runs over puzzle files: loading, solving with oracle checks,
//! statistics, counterexample reports and trace rendering.

pub mod batch;
pub mod corpus;
pub mod render;
pub mod report;
pub mod stats;

pub use batch::{
    batch_solve, batch_solve_with, BatchConfig, BatchError, BatchResult, PuzzleResult, PuzzleStatus,
};
pub use corpus::{load_corpus, parse_corpus, Corpus, CorpusEntry, CorpusError, LineError};
pub use render::{render_trace, Verbosity};
pub use report::{validate_report, CounterexampleReport, ReportError};
pub use stats::{confidence_upper_bound, BatchStats, BoundError};
