//! Solve log: every ink and erasure the solver applies to the base grid,
//! tagged with the step and rule that produced it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grid::{CandidateSet, CellIndex, CellState, Digit, Grid, Origin, StructureId};

/// A single mutation of the base grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Change {
    Ink {
        cell: CellIndex,
        digit: Digit,
    },
    Erase {
        cell: CellIndex,
        digits: CandidateSet,
    },
}

/// Where in the method an event happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    /// Blocking by the givens before Phase I begins.
    Setup,
    Step1_1,
    Step1_2,
    Step1_3,
    Step2,
    Step3_1,
    Step3_2,
    Step3_3,
    /// Minuet bookkeeping: starters chosen, stalls.
    Step4,
    Step4a,
    Step4b,
    Commit,
}

impl Step {
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            Step::Setup => "setup",
            Step::Step1_1 => "1.1",
            Step::Step1_2 => "1.2",
            Step::Step1_3 => "1.3",
            Step::Step2 => "2",
            Step::Step3_1 => "3.1",
            Step::Step3_2 => "3.2",
            Step::Step3_3 => "3.3",
            Step::Step4 => "4",
            Step::Step4a => "4a",
            Step::Step4b => "4b",
            Step::Commit => "commit",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    GivenBlocking,
    HiddenSingle,
    PassiveSingle,
    HalfDouble,
    HiddenDouble,
    HiddenTriple,
    Fill,
    NakedSingle,
    NakedDouble,
    NakedTriple,
    StarterChosen,
    MinuetStuck,
    UnmarkedCandidates,
    CommonSingle,
    DoubleBlocked,
    Commit,
}

impl Rule {
    /// Player-facing name.
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Rule::GivenBlocking => "blocking by givens",
            Rule::HiddenSingle => "hidden single",
            Rule::PassiveSingle => "passive single",
            Rule::HalfDouble => "half double",
            Rule::HiddenDouble => "hidden double",
            Rule::HiddenTriple => "hidden triple",
            Rule::Fill => "candidate fill",
            Rule::NakedSingle => "naked single",
            Rule::NakedDouble => "naked double",
            Rule::NakedTriple => "naked triple",
            Rule::StarterChosen => "starter",
            Rule::MinuetStuck => "minuet stalled",
            Rule::UnmarkedCandidates => "trick (a): unmarked candidates",
            Rule::CommonSingle => "trick (a): circle and square agree",
            Rule::DoubleBlocked => "trick (b): double-blocked candidates",
            Rule::Commit => "commit retained solution",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub step: Step,
    pub rule: Rule,
    pub structure: Option<StructureId>,
    pub cells: Vec<CellIndex>,
    pub digits: CandidateSet,
    pub changes: Vec<Change>,
}

impl TraceEvent {
    #[must_use]
    pub fn new(step: Step, rule: Rule) -> Self {
        Self {
            step,
            rule,
            structure: None,
            cells: Vec::new(),
            digits: CandidateSet::EMPTY,
            changes: Vec::new(),
        }
    }

    #[must_use]
    pub fn in_structure(mut self, s: StructureId) -> Self {
        self.structure = Some(s);
        self
    }

    #[must_use]
    pub fn at(mut self, cells: impl IntoIterator<Item = CellIndex>) -> Self {
        self.cells.extend(cells);
        self
    }

    #[must_use]
    pub fn with_digits(mut self, digits: CandidateSet) -> Self {
        self.digits = digits;
        self
    }

    #[must_use]
    pub fn with_changes(mut self, changes: Vec<Change>) -> Self {
        self.changes = changes;
        self
    }

    #[must_use]
    pub fn erased_count(&self) -> u32 {
        self.changes
            .iter()
            .map(|c| match c {
                Change::Erase { digits, .. } => digits.len(),
                Change::Ink { .. } => 0,
            })
            .sum()
    }

    pub fn inked(&self) -> impl Iterator<Item = (CellIndex, Digit)> + '_ {
        self.changes.iter().filter_map(|c| match *c {
            Change::Ink { cell, digit } => Some((cell, digit)),
            Change::Erase { .. } => None,
        })
    }
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.step.label(), self.rule.name())?;
        if !self.digits.is_empty() {
            write!(f, " {:?}", self.digits)?;
        }
        if !self.cells.is_empty() {
            write!(f, " at ")?;
            for (i, c) in self.cells.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        if let Some(s) = self.structure {
            write!(f, " in {s}")?;
        }
        let inked: Vec<_> = self.inked().collect();
        if !inked.is_empty() {
            write!(f, "; ink")?;
            for (c, d) in inked {
                write!(f, " {c}={d}")?;
            }
        }
        let erased = self.erased_count();
        if erased > 0 {
            write!(f, "; {erased} erased")?;
        }
        Ok(())
    }
}

/// An ordered event log. A disabled trace drops everything pushed to it,
/// which is what hypothesis views use.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    enabled: bool,
    events: Vec<TraceEvent>,
}

impl Trace {
    #[must_use]
    pub fn new() -> Self {
        Self {
            enabled: true,
            events: Vec::new(),
        }
    }

    #[must_use]
    pub fn disabled() -> Self {
        Self {
            enabled: false,
            events: Vec::new(),
        }
    }

    #[must_use]
    pub fn is_enabled(&self) -> bool {
        self.enabled
    }

    pub fn push(&mut self, event: TraceEvent) {
        if self.enabled {
            self.events.push(event);
        }
    }

    #[must_use]
    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.events.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Applies every logged ink and erasure to `start`, in order.
    #[must_use]
    pub fn replay(&self, start: &Grid) -> Grid {
        let mut grid = start.clone();
        for change in self.events.iter().flat_map(|e| e.changes.iter()) {
            match *change {
                Change::Ink { cell, digit } => grid.set_raw(
                    cell,
                    CellState::Ink {
                        digit,
                        origin: Origin::Deduced,
                    },
                ),
                Change::Erase { cell, digits } => {
                    if let CellState::Pencil(set) = grid.cell(cell) {
                        grid.set_raw(cell, CellState::Pencil(set.difference(digits)));
                    }
                }
            }
        }
        grid
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::parse_grid;

    #[test]
    fn replay_reproduces_place_ink() {
        let start = parse_grid(&format!("1{}", ".".repeat(80))).unwrap();
        let mut g = start.clone();
        let mut trace = Trace::new();
        let c = CellIndex::at(4, 4);
        let changes = g.place_ink(c, Digit::new(5).unwrap()).unwrap();
        trace.push(
            TraceEvent::new(Step::Step3_1, Rule::NakedSingle)
                .at([c])
                .with_changes(changes),
        );
        assert_eq!(trace.replay(&start), g);
    }

    #[test]
    fn disabled_trace_drops_events() {
        let mut t = Trace::disabled();
        t.push(TraceEvent::new(Step::Step2, Rule::Fill));
        assert!(t.is_empty());
    }
}
