//! Phase I: populating the grid with candidates.
//!
//! Step 1 lets numbers look for cells, box by box: a digit with a single
//! available cell in a box is inked, one with two available cells is recorded
//! as a half double, and two half doubles on the same pair of cells form a
//! hidden double. Step 2 then lets cells look for numbers, writing every digit
//! that nothing blocks.
//!
//! Ink blocking is kept in the grid itself: [`Grid::place_ink`] erases the
//! digit from all peers, so an unsolved cell's pencil set always excludes
//! digits inked around it. Half doubles and claimed groups are recorded
//! separately as marks until Step 2 turns them into erasures.

use std::collections::BTreeMap;

use crate::grid::{
    common_structures, CandidateSet, CellIndex, CellSet, CellState, Contradiction, Digit, Grid,
    StructureId,
};
use crate::trace::{Rule, Step, Trace, TraceEvent};

/// Half doubles found in Step 1, keyed by box and digit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HalfDoubleRegistry {
    entries: BTreeMap<(StructureId, Digit), [CellIndex; 2]>,
}

impl HalfDoubleRegistry {
    #[must_use]
    pub fn new() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn get(&self, s: StructureId, d: Digit) -> Option<[CellIndex; 2]> {
        self.entries.get(&(s, d)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (StructureId, Digit, [CellIndex; 2])> + '_ {
        self.entries.iter().map(|(&(s, d), &cells)| (s, d, cells))
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, s: StructureId, d: Digit, cells: [CellIndex; 2]) {
        let [a, b] = cells;
        let pair = if a <= b { [a, b] } else { [b, a] };
        self.entries.insert((s, d), pair);
    }

    pub fn remove(&mut self, s: StructureId, d: Digit) -> Option<[CellIndex; 2]> {
        self.entries.remove(&(s, d))
    }
}

/// Cells claimed by a hidden double or triple: they hold only `digits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupClaim {
    pub cells: CellSet,
    pub digits: CandidateSet,
}

/// Marks carried through Phase I.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Phase1State {
    pub registry: HalfDoubleRegistry,
    pub claims: Vec<GroupClaim>,
    /// Also look for hidden triples among half doubles.
    pub triples: bool,
}

impl Phase1State {
    #[must_use]
    pub fn new(triples: bool) -> Self {
        Self {
            triples,
            ..Self::default()
        }
    }

    fn claimed(&self) -> CellSet {
        self.claims
            .iter()
            .fold(CellSet::EMPTY, |acc, g| acc.union(g.cells))
    }

    /// Cells from which `d` is blocked by a half double or a claimed group:
    /// every cell of a structure holding the whole group, except the group.
    #[must_use]
    pub fn blocked_by_marks(&self, d: Digit) -> CellSet {
        let mut blocked = CellSet::EMPTY;
        for (_, digit, [a, b]) in self.registry.iter() {
            if digit != d {
                continue;
            }
            let pair: CellSet = [a, b].into_iter().collect();
            for s in common_structures(pair) {
                blocked = blocked.union(s.cell_set().difference(pair));
            }
        }
        for claim in &self.claims {
            if !claim.digits.contains(d) {
                continue;
            }
            for s in common_structures(claim.cells) {
                blocked = blocked.union(s.cell_set().difference(claim.cells));
            }
        }
        blocked
    }
}

/// What Step 1 found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase1Find {
    HiddenSingle {
        square: StructureId,
        cell: CellIndex,
        digit: Digit,
    },
    HalfDouble {
        square: StructureId,
        digit: Digit,
        cells: [CellIndex; 2],
    },
    HiddenDouble {
        square: StructureId,
        cells: [CellIndex; 2],
        digits: [Digit; 2],
    },
    HiddenTriple {
        square: StructureId,
        cells: [CellIndex; 3],
        digits: [Digit; 3],
    },
    /// A half double lost one of its cells, leaving a single.
    PassiveSingle {
        square: StructureId,
        cell: CellIndex,
        digit: Digit,
    },
}

/// Cells of `square` still available to `d`: unsolved, carrying `d` (so
/// neither blocked by ink nor claimed by a group without `d`), and not
/// blocked by a half double or group of `d` in a covering structure.
#[must_use]
pub fn available_cells(grid: &Grid, state: &Phase1State, square: StructureId, d: Digit) -> CellSet {
    let blocked = state.blocked_by_marks(d);
    grid.positions(square, d).difference(blocked)
}

fn ink(
    grid: &mut Grid,
    cell: CellIndex,
    d: Digit,
    square: StructureId,
    rule: Rule,
    trace: &mut Trace,
) {
    let changes = grid
        .place_ink(cell, d)
        .expect("available cells are unsolved and carry the digit");
    trace.push(
        TraceEvent::new(Step::Step1_1, rule)
            .in_structure(square)
            .at([cell])
            .with_digits(CandidateSet::single(d))
            .with_changes(changes),
    );
}

/// Narrows the group's cells to `digits`.
fn claim(
    grid: &mut Grid,
    state: &mut Phase1State,
    square: StructureId,
    cells: CellSet,
    digits: CandidateSet,
    rule: Rule,
    trace: &mut Trace,
) {
    state.claims.push(GroupClaim { cells, digits });
    let foreign = CandidateSet::FULL.difference(digits);
    let changes = cells
        .iter()
        .filter_map(|c| grid.erase(c, foreign))
        .collect();
    trace.push(
        TraceEvent::new(Step::Step1_3, rule)
            .in_structure(square)
            .at(cells.iter())
            .with_digits(digits)
            .with_changes(changes),
    );
}

/// Re-examines every recorded half double: one whose digit got inked is
/// dropped, one reduced to a single available cell is inked on the spot.
fn refresh(
    grid: &mut Grid,
    state: &mut Phase1State,
    finds: &mut Vec<Phase1Find>,
    trace: &mut Trace,
) -> Result<(), Contradiction> {
    'outer: loop {
        let entries: Vec<_> = state.registry.iter().collect();
        for (square, d, pair) in entries {
            if grid.inked_in(square).contains(d) {
                state.registry.remove(square, d);
                continue;
            }
            let avail = available_cells(grid, state, square, d);
            match avail.len() {
                0 => {
                    return Err(Contradiction::Starved {
                        structure: square,
                        digit: d,
                    })
                }
                1 => {
                    let cell = avail.first().expect("one cell");
                    state.registry.remove(square, d);
                    ink(grid, cell, d, square, Rule::PassiveSingle, trace);
                    finds.push(Phase1Find::PassiveSingle {
                        square,
                        cell,
                        digit: d,
                    });
                    continue 'outer;
                }
                _ => {
                    let cells: Vec<_> = avail.iter().collect();
                    if cells.as_slice() != pair {
                        state.registry.insert(square, d, [cells[0], cells[1]]);
                    }
                }
            }
        }
        return Ok(());
    }
}

fn look_for_hidden_double(
    grid: &mut Grid,
    state: &mut Phase1State,
    square: StructureId,
    d: Digit,
    pair: [CellIndex; 2],
    finds: &mut Vec<Phase1Find>,
    trace: &mut Trace,
) {
    let cells: CellSet = pair.into_iter().collect();
    if !cells.intersection(state.claimed()).is_empty() {
        return;
    }
    let partner = state
        .registry
        .iter()
        .find(|&(s, other, p)| s == square && other != d && p == pair)
        .map(|(_, other, _)| other);
    if let Some(other) = partner {
        let digits: CandidateSet = [d, other].into_iter().collect();
        claim(
            grid,
            state,
            square,
            cells,
            digits,
            Rule::HiddenDouble,
            trace,
        );
        let (lo, hi) = if d < other { (d, other) } else { (other, d) };
        finds.push(Phase1Find::HiddenDouble {
            square,
            cells: pair,
            digits: [lo, hi],
        });
    }
}

fn look_for_hidden_triple(
    grid: &mut Grid,
    state: &mut Phase1State,
    square: StructureId,
    d: Digit,
    pair: [CellIndex; 2],
    finds: &mut Vec<Phase1Find>,
    trace: &mut Trace,
) {
    let claimed = state.claimed();
    let pair_set: CellSet = pair.into_iter().collect();
    let others: Vec<_> = state
        .registry
        .iter()
        .filter(|&(s, other, p)| s == square && other != d && p != pair)
        .map(|(_, other, p)| (other, p.into_iter().collect::<CellSet>()))
        .collect();
    for (i, &(d2, p2)) in others.iter().enumerate() {
        for &(d3, p3) in &others[i + 1..] {
            if p2 == p3 {
                continue;
            }
            let cells = pair_set.union(p2).union(p3);
            if cells.len() != 3 || !cells.intersection(claimed).is_empty() {
                continue;
            }
            let mut digits = [d, d2, d3];
            digits.sort();
            claim(
                grid,
                state,
                square,
                cells,
                digits.into_iter().collect(),
                Rule::HiddenTriple,
                trace,
            );
            let mut it = cells.iter();
            let cells = [
                it.next().expect("3 cells"),
                it.next().expect("3 cells"),
                it.next().expect("3 cells"),
            ];
            finds.push(Phase1Find::HiddenTriple {
                square,
                cells,
                digits,
            });
            return;
        }
    }
}

/// One pass over every (digit, box) pair, digits ascending then boxes
/// ascending, applying each find immediately.
pub fn step1_scan(
    grid: &mut Grid,
    state: &mut Phase1State,
    trace: &mut Trace,
) -> Result<Vec<Phase1Find>, Contradiction> {
    let mut finds = Vec::new();
    for d in Digit::ALL {
        for square in StructureId::boxes() {
            if grid.inked_in(square).contains(d) {
                continue;
            }
            let avail = available_cells(grid, state, square, d);
            match avail.len() {
                0 => {
                    return Err(Contradiction::Starved {
                        structure: square,
                        digit: d,
                    })
                }
                1 => {
                    let cell = avail.first().expect("one cell");
                    let rule = if state.registry.remove(square, d).is_some() {
                        Rule::PassiveSingle
                    } else {
                        Rule::HiddenSingle
                    };
                    ink(grid, cell, d, square, rule, trace);
                    finds.push(if rule == Rule::PassiveSingle {
                        Phase1Find::PassiveSingle {
                            square,
                            cell,
                            digit: d,
                        }
                    } else {
                        Phase1Find::HiddenSingle {
                            square,
                            cell,
                            digit: d,
                        }
                    });
                    refresh(grid, state, &mut finds, trace)?;
                }
                2 => {
                    let mut it = avail.iter();
                    let pair = [it.next().expect("2"), it.next().expect("2")];
                    if state.registry.get(square, d) == Some(pair) {
                        continue;
                    }
                    state.registry.insert(square, d, pair);
                    trace.push(
                        TraceEvent::new(Step::Step1_2, Rule::HalfDouble)
                            .in_structure(square)
                            .at(pair)
                            .with_digits(CandidateSet::single(d)),
                    );
                    finds.push(Phase1Find::HalfDouble {
                        square,
                        digit: d,
                        cells: pair,
                    });
                    look_for_hidden_double(grid, state, square, d, pair, &mut finds, trace);
                    if state.triples {
                        look_for_hidden_triple(grid, state, square, d, pair, &mut finds, trace);
                    }
                    refresh(grid, state, &mut finds, trace)?;
                }
                _ => {}
            }
        }
    }
    Ok(finds)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Step1Summary {
    pub passes: usize,
    pub finds: Vec<Phase1Find>,
}

/// Repeats [`step1_scan`] until a pass finds nothing new.
pub fn step1_fixpoint(
    grid: &mut Grid,
    state: &mut Phase1State,
    trace: &mut Trace,
) -> Result<Step1Summary, Contradiction> {
    let mut summary = Step1Summary::default();
    loop {
        summary.passes += 1;
        let finds = step1_scan(grid, state, trace)?;
        if finds.is_empty() {
            return Ok(summary);
        }
        summary.finds.extend(finds);
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Step2Summary {
    pub cells_filled: usize,
    pub naked_singles: usize,
}

/// Writes every unblocked digit into each unsolved cell, ascending, inking
/// cells left with one candidate.
pub fn step2_fill(
    grid: &mut Grid,
    state: &Phase1State,
    trace: &mut Trace,
) -> Result<Step2Summary, Contradiction> {
    let blocked: Vec<CellSet> = Digit::ALL
        .iter()
        .map(|&d| state.blocked_by_marks(d))
        .collect();
    let mut summary = Step2Summary::default();
    for cell in CellIndex::all() {
        let CellState::Pencil(set) = grid.cell(cell) else {
            continue;
        };
        let marked: CandidateSet = set
            .iter()
            .filter(|d| blocked[usize::from(d.get() - 1)].contains(cell))
            .collect();
        let changes: Vec<_> = grid.erase(cell, marked).into_iter().collect();
        let written = set.difference(marked);
        summary.cells_filled += 1;
        trace.push(
            TraceEvent::new(Step::Step2, Rule::Fill)
                .at([cell])
                .with_digits(written)
                .with_changes(changes),
        );
        match written.len() {
            0 => return Err(Contradiction::EmptyCell { cell }),
            1 => {
                let d = written.first().expect("one digit");
                let changes = grid.place_ink(cell, d).expect("d is the last candidate");
                summary.naked_singles += 1;
                trace.push(
                    TraceEvent::new(Step::Step2, Rule::NakedSingle)
                        .at([cell])
                        .with_digits(written)
                        .with_changes(changes),
                );
            }
            _ => {}
        }
    }
    match grid.check_consistency().into_contradiction() {
        Some(c) => Err(c),
        None => Ok(summary),
    }
}

/// Runs Step 1 to its fixpoint and then Step 2.
pub fn run_phase1(
    grid: &mut Grid,
    triples: bool,
    trace: &mut Trace,
) -> Result<(Step1Summary, Step2Summary, Phase1State), Contradiction> {
    let mut state = Phase1State::new(triples);
    let step1 = step1_fixpoint(grid, &mut state, trace)?;
    let step2 = step2_fill(grid, &state, trace)?;
    Ok((step1, step2, state))
}
