use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("a bound is only computed when no failures were seen")]
    Unsupported,
    #[error("the sample must hold at least one puzzle and the level lie in (0, 1)")]
    DomainError,
}

/// Largest failure rate `p` for which seeing no failures in `n` independent
/// trials still has probability at least `1 - level`:
/// `p = 1 - (1 - level)^(1/n)`.
pub fn confidence_upper_bound(n: u64, failures: u64, level: f64) -> Result<f64, BoundError> {
    if failures > 0 {
        return Err(BoundError::Unsupported);
    }
    if n == 0 || !(level > 0.0 && level < 1.0) {
        return Err(BoundError::DomainError);
    }
    // expm1 keeps precision when the bound is tiny
    Ok(-((1.0 - level).ln() / n as f64).exp_m1())
}

/// Nearest-rank quantile of a sorted slice.
fn quantile(sorted: &[Duration], q: f64) -> Duration {
    if sorted.is_empty() {
        return Duration::ZERO;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchStats {
    /// Well-posed puzzles; ill-posed entries are counted separately.
    pub puzzles: usize,
    pub solved: usize,
    pub failures: usize,
    pub ill_posed: usize,
    /// Starters danced per well-posed puzzle, in corpus order.
    pub minuets: Vec<usize>,
    pub level: f64,
    /// `None` when there were failures.
    pub bound: Option<f64>,
    pub median: Duration,
    pub p90: Duration,
    pub max: Duration,
}

impl BatchStats {
    #[must_use]
    pub fn new(
        minuets: Vec<usize>,
        failures: usize,
        ill_posed: usize,
        mut times: Vec<Duration>,
        level: f64,
    ) -> Self {
        times.sort();
        let puzzles = minuets.len();
        Self {
            puzzles,
            solved: puzzles - failures,
            failures,
            ill_posed,
            bound: confidence_upper_bound(puzzles as u64, failures as u64, level).ok(),
            minuets,
            level,
            median: quantile(&times, 0.5),
            p90: quantile(&times, 0.9),
            max: times.last().copied().unwrap_or_default(),
        }
    }

    /// Puzzles finished by Phase I and Step 3 alone.
    #[must_use]
    pub fn without_minuet(&self) -> usize {
        self.minuets.iter().filter(|&&m| m == 0).count()
    }

    /// Everything except timings, so identical runs render identically.
    #[must_use]
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "puzzles   {}", self.puzzles);
        let _ = writeln!(out, "solved    {}", self.solved);
        let _ = writeln!(out, "failures  {}", self.failures);
        let _ = writeln!(out, "ill-posed {} (excluded)", self.ill_posed);
        let mut sorted = self.minuets.clone();
        sorted.sort_unstable();
        let total: usize = sorted.iter().sum();
        let _ = writeln!(
            out,
            "starters  none {} / median {} / max {} / total {}",
            self.without_minuet(),
            sorted.get(sorted.len() / 2).copied().unwrap_or(0),
            sorted.last().copied().unwrap_or(0),
            total
        );
        match self.bound {
            Some(b) => {
                let _ = writeln!(
                    out,
                    "bound     failure rate < {:.5} at {:.0}% confidence",
                    b,
                    self.level * 100.0
                );
            }
            None => {
                let _ = writeln!(out, "bound     none (failures observed)");
            }
        }
        out
    }

    #[must_use]
    pub fn render_timing(&self) -> String {
        format!(
            "time      median {:.2?} / p90 {:.2?} / max {:.2?}\n",
            self.median, self.p90, self.max
        )
    }
}
