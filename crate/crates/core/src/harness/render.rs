use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::trace::{Rule, Trace, TraceEvent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verbosity {
    /// Event counts per step and rule.
    #[default]
    Summary,
    /// One line per event.
    Full,
}

fn describe(event: &TraceEvent) -> String {
    let mut line = event.to_string();
    if event.rule == Rule::StarterChosen {
        let digits: Vec<_> = event.digits.iter().collect();
        match (event.cells.as_slice(), digits.as_slice()) {
            ([cell], [a, b]) => {
                let _ = write!(line, " (circle {cell}={a}, square {cell}={b})");
            }
            ([a, b], [d]) => {
                let _ = write!(line, " (circle {a}={d}, square {b}={d})");
            }
            _ => {}
        }
    }
    line
}

/// Renders a solve log using the method's own vocabulary.
#[must_use]
pub fn render_trace(trace: &Trace, verbosity: Verbosity) -> String {
    let inked: usize = trace.events().iter().map(|e| e.inked().count()).sum();
    let erased: u32 = trace.events().iter().map(TraceEvent::erased_count).sum();
    let mut out = format!(
        "trace: {} events, {inked} inked, {erased} candidates erased\n",
        trace.len()
    );
    match verbosity {
        Verbosity::Summary => {
            let mut counts = BTreeMap::new();
            for e in trace.events() {
                *counts.entry((e.step, e.rule)).or_insert(0usize) += 1;
            }
            for ((step, rule), n) in counts {
                let _ = writeln!(out, "  [{}] {:<40} {n}", step.label(), rule.name());
            }
        }
        Verbosity::Full => {
            for e in trace.events() {
                let _ = writeln!(out, "  {}", describe(e));
            }
        }
    }
    out
}
