use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::grid::{parse_grid, Grid, ParseError};

/// One puzzle and the (1-based) line it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub line: usize,
    pub text: String,
    pub grid: Grid,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {error}")]
pub struct LineError {
    pub line: usize,
    pub error: ParseError,
}

/// Puzzles in file order plus any lines that failed to parse.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub errors: Vec<LineError>,
}

impl Corpus {
    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus: {0}")]
    Io(#[from] std::io::Error),
    #[error("corpus has no valid puzzles ({} bad lines)", .errors.len())]
    EmptyCorpus { errors: Vec<LineError> },
}

/// One puzzle per line; blank lines and lines starting with `#` are
/// skipped.
pub fn parse_corpus(text: &str) -> Result<Corpus, CorpusError> {
    let mut corpus = Corpus::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match parse_grid(trimmed) {
            Ok(grid) => corpus.entries.push(CorpusEntry {
                line,
                text: trimmed.to_owned(),
                grid,
            }),
            Err(error) => corpus.errors.push(LineError { line, error }),
        }
    }
    if corpus.entries.is_empty() {
        return Err(CorpusError::EmptyCorpus {
            errors: corpus.errors,
        });
    }
    Ok(corpus)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus, CorpusError> {
    parse_corpus(&fs::read_to_string(path)?)
}
