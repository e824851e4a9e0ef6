//! Step 4: the minuet.
//!
//! A binary choice (a cell with two candidates, or a digit with two places
//! in a structure) seeds two hypothesis views, the circle and the square.
//! Each view is developed alone with the Step 3 cleanup. Then the views are
//! compared: a digit neither view keeps in a cell is erased from the base
//! grid, and a digit one view places at A and the other at B is erased from
//! cells seen by both. When one view runs into a contradiction, the other is
//! committed to the base grid.
//!
//! Each view holds the set of candidates it retains per cell. A view never
//! holds more than the base grid does.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{
    CandidateSet, CellIndex, CellSet, CellState, Contradiction, Digit, Grid, StructureId,
};
use crate::phase2::{margin_half_doubles, step3_fixpoint, CleanupOptions};
use crate::trace::{Rule, Step, Trace, TraceEvent};

/// The binary choice that seeds a minuet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Starter {
    /// A cell with exactly two candidates; circle takes the smaller.
    BivalueCell { cell: CellIndex, digits: [Digit; 2] },
    /// A digit with exactly two places in a structure; circle takes the
    /// lower cell.
    HalfDouble {
        digit: Digit,
        cells: [CellIndex; 2],
        structure: StructureId,
    },
}

impl Starter {
    /// Cells whose structures are searched when scoring.
    fn cells(self) -> CellSet {
        match self {
            Starter::BivalueCell { cell, .. } => CellSet::single(cell),
            Starter::HalfDouble { cells, .. } => cells.into_iter().collect(),
        }
    }

    fn sort_key(self) -> (CellIndex, Digit, u8, CellIndex) {
        match self {
            Starter::BivalueCell { cell, digits } => (cell, digits[0], 0, cell),
            Starter::HalfDouble { digit, cells, .. } => (cells[0], digit, 1, cells[1]),
        }
    }

    /// Checks that the starter is still a binary choice in `grid`.
    #[must_use]
    pub fn is_valid_in(self, grid: &Grid) -> bool {
        match self {
            Starter::BivalueCell { cell, digits } => {
                grid.cell(cell).pencil() == Some(digits.into_iter().collect())
            }
            Starter::HalfDouble {
                digit,
                cells,
                structure,
            } => grid.positions(structure, digit) == cells.into_iter().collect(),
        }
    }
}

impl fmt::Display for Starter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Starter::BivalueCell { cell, digits } => {
                write!(f, "cell {cell} {{{},{}}}", digits[0], digits[1])
            }
            Starter::HalfDouble {
                digit,
                cells,
                structure,
            } => write!(
                f,
                "half double {digit} at {},{} in {structure}",
                cells[0], cells[1]
            ),
        }
    }
}

/// A starter and the number of bivalue cells in its structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoredStarter {
    pub starter: Starter,
    pub score: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no cell with two candidates and no half double left")]
pub struct NoStarters;

/// Every bivalue cell and every half double of `grid`, best first.
///
/// The score counts the other bivalue cells sharing a structure with the
/// starter. Ties go to the lower cell, then the lower digit, then bivalue
/// cells before half doubles. A half double found in two structures is
/// listed once, under the first structure in scan order.
pub fn enumerate_starters(grid: &Grid) -> Result<Vec<ScoredStarter>, NoStarters> {
    let bivalue: CellSet = grid
        .unsolved()
        .filter(|&c| grid.options(c).len() == 2)
        .collect();
    let score = |st: Starter| {
        let cells = st.cells();
        let mut seen = CellSet::EMPTY;
        for c in cells.iter() {
            for s in c.structures() {
                seen = seen.union(s.cell_set());
            }
        }
        seen.intersection(bivalue).difference(cells).len()
    };

    let mut out = Vec::new();
    for cell in bivalue.iter() {
        let mut ds = grid.options(cell).iter();
        let digits = [ds.next().expect("2"), ds.next().expect("2")];
        let starter = Starter::BivalueCell { cell, digits };
        out.push(ScoredStarter {
            starter,
            score: score(starter),
        });
    }
    let mut seen_pairs = Vec::new();
    for structure in StructureId::all() {
        for (digit, a, b) in margin_half_doubles(grid, structure) {
            if seen_pairs.contains(&(digit, a, b)) {
                continue;
            }
            seen_pairs.push((digit, a, b));
            let starter = Starter::HalfDouble {
                digit,
                cells: [a, b],
                structure,
            };
            out.push(ScoredStarter {
                starter,
                score: score(starter),
            });
        }
    }
    if out.is_empty() {
        return Err(NoStarters);
    }
    out.sort_by(|x, y| {
        y.score
            .cmp(&x.score)
            .then_with(|| x.starter.sort_key().cmp(&y.starter.sort_key()))
    });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Circle,
    Square,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Circle => "circle",
            Label::Square => "square",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViewStatus {
    Alive,
    Contradicted(Contradiction),
}

/// One hypothesis: the base grid with one starter choice assumed and then
/// developed. `shadow` holds the retained candidates; inked cells in it are
/// the view's singles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisView {
    pub label: Label,
    pub shadow: Grid,
    pub status: ViewStatus,
}

impl HypothesisView {
    #[must_use]
    pub fn is_alive(&self) -> bool {
        self.status == ViewStatus::Alive
    }

    fn contradict(&mut self, reason: Contradiction) {
        self.status = ViewStatus::Contradicted(reason);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinuetState {
    pub starter: ScoredStarter,
    pub circle: HypothesisView,
    pub square: HypothesisView,
    pub rounds: usize,
}

impl MinuetState {
    #[must_use]
    pub fn views(&self) -> [&HypothesisView; 2] {
        [&self.circle, &self.square]
    }
}

/// Hooks for instrumentation. All methods default to doing nothing.
pub trait MinuetObserver {
    fn after_init(&mut self, _base: &Grid, _state: &MinuetState) {}
    fn after_dance_together(&mut self, _base: &Grid, _state: &MinuetState) {}
    fn after_commit(&mut self, _base: &Grid, _survivor: Label) {}
}

impl MinuetObserver for () {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum IllPosedReason {
    #[error("the grid contradicts itself: {0}")]
    Contradiction(Contradiction),
    #[error("both choices of starter {0} lead to a contradiction")]
    BothContradicted(Starter),
}

fn develop(view: &mut HypothesisView, opts: CleanupOptions) {
    if !view.is_alive() {
        return;
    }
    let mut quiet = Trace::disabled();
    if let Err(reason) = step3_fixpoint(&mut view.shadow, opts, &mut quiet) {
        view.contradict(reason);
    }
}

fn assume(view: &mut HypothesisView, cell: CellIndex, d: Digit) {
    if view.shadow.place_ink(cell, d).is_err() {
        view.contradict(Contradiction::EmptyCell { cell });
    }
}

/// Builds the circle and square views for `starter` and develops each with
/// Step 3. A view that contradicts right away is a valid outcome.
#[must_use]
pub fn init_hypotheses(base: &Grid, starter: ScoredStarter, opts: CleanupOptions) -> MinuetState {
    let mut circle = HypothesisView {
        label: Label::Circle,
        shadow: base.clone(),
        status: ViewStatus::Alive,
    };
    let mut square = HypothesisView {
        label: Label::Square,
        shadow: base.clone(),
        status: ViewStatus::Alive,
    };
    match starter.starter {
        Starter::BivalueCell { cell, digits } => {
            assume(&mut circle, cell, digits[0]);
            assume(&mut square, cell, digits[1]);
        }
        Starter::HalfDouble { digit, cells, .. } => {
            assume(&mut circle, cells[0], digit);
            assume(&mut square, cells[1], digit);
        }
    }
    develop(&mut circle, opts);
    develop(&mut square, opts);
    MinuetState {
        starter,
        circle,
        square,
        rounds: 0,
    }
}

/// Narrows the view to the base grid, then develops it with Step 3.
pub fn dance_alone(view: &mut HypothesisView, base: &Grid, opts: CleanupOptions) {
    if !view.is_alive() {
        return;
    }
    for cell in CellIndex::all() {
        let outcome = match (base.cell(cell), view.shadow.cell(cell)) {
            (CellState::Ink { digit, .. }, CellState::Ink { digit: mine, .. }) => {
                (digit == mine).then_some(())
            }
            (CellState::Ink { digit, .. }, CellState::Pencil(set)) => {
                if set.contains(digit) {
                    view.shadow.place_ink(cell, digit).ok().map(|_| ())
                } else {
                    None
                }
            }
            (CellState::Pencil(set), CellState::Ink { digit: mine, .. }) => {
                set.contains(mine).then_some(())
            }
            (CellState::Pencil(set), CellState::Pencil(mine)) => {
                view.shadow.erase(cell, mine.difference(set));
                Some(())
            }
        };
        if outcome.is_none() {
            view.contradict(Contradiction::EmptyCell { cell });
            return;
        }
    }
    develop(view, opts);
}

/// Combines the two views against the base grid.
///
/// (a) A digit retained by neither view in a cell is erased; a cell both
/// views solve with the same digit is inked. (b) A digit the circle places
/// at A and the square at B is erased from every cell lying in a structure
/// of A and a structure of B. Step 3 then runs on the base grid and both
/// views are narrowed again. Returns whether the base grid changed.
pub fn dance_together(
    state: &mut MinuetState,
    base: &mut Grid,
    opts: CleanupOptions,
    trace: &mut Trace,
) -> Result<bool, IllPosedReason> {
    let before = (base.candidate_count(), base.ink_count());
    let (circle, square) = (&state.circle.shadow, &state.square.shadow);

    for cell in CellIndex::all() {
        let CellState::Pencil(set) = base.cell(cell) else {
            continue;
        };
        if let (Some(a), Some(b)) = (circle.ink(cell), square.ink(cell)) {
            if a == b && set.contains(a) {
                let changes = base.place_ink(cell, a).expect("candidate checked");
                trace.push(
                    TraceEvent::new(Step::Step4a, Rule::CommonSingle)
                        .at([cell])
                        .with_digits(CandidateSet::single(a))
                        .with_changes(changes),
                );
                continue;
            }
        }
        let kept = circle.options(cell).union(square.options(cell));
        let dropped = set.difference(kept);
        if let Some(change) = base.erase(cell, dropped) {
            trace.push(
                TraceEvent::new(Step::Step4a, Rule::UnmarkedCandidates)
                    .at([cell])
                    .with_digits(dropped)
                    .with_changes(vec![change]),
            );
        }
    }

    for d in Digit::ALL {
        let only = CandidateSet::single(d);
        let placed = |g: &Grid| -> Vec<CellIndex> {
            CellIndex::all()
                .filter(|&c| g.ink(c) == Some(d) && !base.is_solved(c))
                .collect()
        };
        let circles = placed(circle);
        let squares = placed(square);
        for &a in &circles {
            for &b in &squares {
                if a == b {
                    continue;
                }
                let ends: CellSet = [a, b].into_iter().collect();
                for s1 in a.structures() {
                    for s2 in b.structures() {
                        let overlap = s1.cell_set().intersection(s2.cell_set()).difference(ends);
                        let changes: Vec<_> =
                            overlap.iter().filter_map(|c| base.erase(c, only)).collect();
                        if !changes.is_empty() {
                            let mut event = TraceEvent::new(Step::Step4b, Rule::DoubleBlocked)
                                .at([a, b])
                                .with_digits(only)
                                .with_changes(changes);
                            if s1 == s2 {
                                event = event.in_structure(s1);
                            }
                            trace.push(event);
                        }
                    }
                }
            }
        }
    }

    let changed = (base.candidate_count(), base.ink_count()) != before;
    if changed {
        step3_fixpoint(base, opts, trace).map_err(IllPosedReason::Contradiction)?;
        dance_alone(&mut state.circle, base, opts);
        dance_alone(&mut state.square, base, opts);
    }
    Ok(changed)
}

/// Writes the surviving view into the base grid: its singles in ink, its
/// retained sets as the new candidates. Step 3 follows.
pub fn commit_retained(
    state: &MinuetState,
    base: &mut Grid,
    opts: CleanupOptions,
    trace: &mut Trace,
) -> Result<Label, IllPosedReason> {
    let survivor = match (state.circle.is_alive(), state.square.is_alive()) {
        (false, false) => return Err(IllPosedReason::BothContradicted(state.starter.starter)),
        (true, false) => &state.circle,
        (false, true) => &state.square,
        (true, true) => {
            if state.circle.shadow.is_complete() {
                &state.circle
            } else {
                &state.square
            }
        }
    };
    commit_view(survivor, base, trace)?;
    step3_fixpoint(base, opts, trace).map_err(IllPosedReason::Contradiction)?;
    Ok(survivor.label)
}

fn commit_view(
    view: &HypothesisView,
    base: &mut Grid,
    trace: &mut Trace,
) -> Result<(), IllPosedReason> {
    for cell in CellIndex::all() {
        if base.is_solved(cell) {
            continue;
        }
        if let Some(d) = view.shadow.ink(cell) {
            let changes = base
                .place_ink(cell, d)
                .map_err(|_| IllPosedReason::Contradiction(Contradiction::EmptyCell { cell }))?;
            trace.push(
                TraceEvent::new(Step::Commit, Rule::Commit)
                    .at([cell])
                    .with_digits(CandidateSet::single(d))
                    .with_changes(changes),
            );
        }
    }
    let mut changes = Vec::new();
    for cell in CellIndex::all() {
        if let CellState::Pencil(set) = base.cell(cell) {
            let keep = view.shadow.options(cell);
            if let Some(ch) = base.erase(cell, set.difference(keep)) {
                changes.push(ch);
            }
        }
    }
    if !changes.is_empty() {
        trace.push(TraceEvent::new(Step::Commit, Rule::Commit).with_changes(changes));
    }
    if let Some(c) = base.check_consistency().into_contradiction() {
        return Err(IllPosedReason::Contradiction(c));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinuetResult {
    /// The base grid lost candidates but is not complete.
    Progress,
    SolvedOutright,
    /// Nothing was learned; the base grid is unchanged.
    Stuck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinuetRun {
    pub result: MinuetResult,
    pub rounds: usize,
    pub survivor: Option<Label>,
}

pub const DEFAULT_ROUND_CAP: usize = 81;

/// Dances one starter until a view is refuted, a view or the base grid is
/// complete, or a joint round brings nothing new.
pub fn run_minuet(
    base: &mut Grid,
    starter: ScoredStarter,
    round_cap: usize,
    opts: CleanupOptions,
    trace: &mut Trace,
    observer: &mut dyn MinuetObserver,
) -> Result<MinuetRun, IllPosedReason> {
    let entry = (base.candidate_count(), base.ink_count());
    trace.push(
        TraceEvent::new(Step::Step4, Rule::StarterChosen)
            .at(starter.starter.cells().iter())
            .with_digits(match starter.starter {
                Starter::BivalueCell { digits, .. } => digits.into_iter().collect(),
                Starter::HalfDouble { digit, .. } => CandidateSet::single(digit),
            }),
    );
    let mut state = init_hypotheses(base, starter, opts);
    observer.after_init(base, &state);

    let finish = |base: &Grid, survivor| {
        let result = if base.is_complete() {
            MinuetResult::SolvedOutright
        } else {
            MinuetResult::Progress
        };
        (result, survivor)
    };

    while state.rounds < round_cap {
        state.rounds += 1;
        dance_alone(&mut state.circle, base, opts);
        dance_alone(&mut state.square, base, opts);

        let complete_view = [&state.circle, &state.square]
            .into_iter()
            .any(|v| v.is_alive() && v.shadow.is_complete());
        if !state.circle.is_alive() || !state.square.is_alive() || complete_view {
            let survivor = commit_retained(&state, base, opts, trace)?;
            observer.after_commit(base, survivor);
            let (result, survivor) = finish(base, Some(survivor));
            return Ok(MinuetRun {
                result,
                rounds: state.rounds,
                survivor,
            });
        }

        let changed = dance_together(&mut state, base, opts, trace)?;
        observer.after_dance_together(base, &state);
        if base.is_complete() {
            return Ok(MinuetRun {
                result: MinuetResult::SolvedOutright,
                rounds: state.rounds,
                survivor: None,
            });
        }
        if !changed {
            break;
        }
    }

    let (result, survivor) = if (base.candidate_count(), base.ink_count()) == entry {
        trace.push(
            TraceEvent::new(Step::Step4, Rule::MinuetStuck).at(starter.starter.cells().iter()),
        );
        (MinuetResult::Stuck, None)
    } else {
        finish(base, None)
    };
    Ok(MinuetRun {
        result,
        rounds: state.rounds,
        survivor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Origin;

    fn d(v: u8) -> Digit {
        Digit::new(v).unwrap()
    }

    fn set(ds: &[u8]) -> CandidateSet {
        ds.iter().map(|&v| d(v)).collect()
    }

    fn view(label: Label, shadow: Grid) -> HypothesisView {
        HypothesisView {
            label,
            shadow,
            status: ViewStatus::Alive,
        }
    }

    fn starter_for(cell: CellIndex, a: u8, b: u8) -> ScoredStarter {
        ScoredStarter {
            starter: Starter::BivalueCell {
                cell,
                digits: [d(a), d(b)],
            },
            score: 0,
        }
    }

    #[test]
    fn unmarked_candidates_are_erased() {
        let mut base = Grid::empty();
        let c = CellIndex::at(4, 4);
        base.set_raw(c, CellState::Pencil(set(&[2, 5, 9])));
        let mut circle = base.clone();
        circle.set_raw(c, CellState::Pencil(set(&[5])));
        let mut square = base.clone();
        square.set_raw(c, CellState::Pencil(set(&[5, 9])));
        let mut state = MinuetState {
            starter: starter_for(CellIndex::at(0, 0), 1, 2),
            circle: view(Label::Circle, circle),
            square: view(Label::Square, square),
            rounds: 0,
        };
        let mut trace = Trace::new();
        let changed =
            dance_together(&mut state, &mut base, CleanupOptions::default(), &mut trace).unwrap();
        assert!(changed);
        assert_eq!(trace.events()[0].rule, Rule::UnmarkedCandidates);
        assert_eq!(trace.events()[0].changes.len(), 1);
        // base is then cleaned up; 2 must be gone from the cell
        assert!(!base.options(c).contains(d(2)));
    }

    #[test]
    fn agreeing_views_ink_the_cell() {
        let mut base = Grid::empty();
        let c = CellIndex::at(2, 2);
        let mut circle = base.clone();
        circle.place_ink(c, d(7)).unwrap();
        let square = circle.clone();
        let mut state = MinuetState {
            starter: starter_for(CellIndex::at(8, 8), 1, 2),
            circle: view(Label::Circle, circle),
            square: view(Label::Square, square),
            rounds: 0,
        };
        let mut trace = Trace::new();
        dance_together(&mut state, &mut base, CleanupOptions::default(), &mut trace).unwrap();
        assert_eq!(base.ink(c), Some(d(7)));
        assert!(trace.events().iter().any(|e| e.rule == Rule::CommonSingle));
    }

    #[test]
    fn double_blocking_erases_the_intersection() {
        // circle: 4 at r1c1 (row 0); square: 4 at r5c9 (column 8); X = r1c9
        let mut base = Grid::empty();
        let a = CellIndex::at(0, 0);
        let b = CellIndex::at(4, 8);
        let x = CellIndex::at(0, 8);
        let mut circle = base.clone();
        circle.set_raw(
            a,
            CellState::Ink {
                digit: d(4),
                origin: Origin::Deduced,
            },
        );
        let mut square = base.clone();
        square.set_raw(
            b,
            CellState::Ink {
                digit: d(4),
                origin: Origin::Deduced,
            },
        );
        let mut state = MinuetState {
            starter: starter_for(CellIndex::at(8, 0), 1, 2),
            circle: view(Label::Circle, circle),
            square: view(Label::Square, square),
            rounds: 0,
        };
        let mut trace = Trace::new();
        dance_together(&mut state, &mut base, CleanupOptions::default(), &mut trace).unwrap();
        assert!(!base.options(x).contains(d(4)));
        assert!(trace.events().iter().any(|e| e.rule == Rule::DoubleBlocked
            && e.changes
                .iter()
                .any(|ch| matches!(ch, crate::trace::Change::Erase { cell, .. } if *cell == x))));
        assert!(base.options(a).contains(d(4)));
        assert!(base.options(b).contains(d(4)));
    }

    #[test]
    fn init_solves_starter_each_way() {
        let mut base = Grid::empty();
        let c = CellIndex::at(3, 3);
        base.set_raw(c, CellState::Pencil(set(&[2, 9])));
        let st = init_hypotheses(&base, starter_for(c, 2, 9), CleanupOptions::default());
        assert_eq!(st.circle.shadow.ink(c), Some(d(2)));
        assert_eq!(st.square.shadow.ink(c), Some(d(9)));
    }

    #[test]
    fn half_double_starter_places_digit_each_side() {
        let base = Grid::empty();
        let (a, b) = (CellIndex::at(0, 0), CellIndex::at(0, 5));
        let st = init_hypotheses(
            &base,
            ScoredStarter {
                starter: Starter::HalfDouble {
                    digit: d(6),
                    cells: [a, b],
                    structure: StructureId::row(0),
                },
                score: 0,
            },
            CleanupOptions::default(),
        );
        assert_eq!(st.circle.shadow.ink(a), Some(d(6)));
        assert_eq!(st.square.shadow.ink(b), Some(d(6)));
    }

    #[test]
    fn immediate_conflict_contradicts_the_view() {
        let mut base = Grid::empty();
        let c = CellIndex::at(0, 0);
        base.set_raw(c, CellState::Pencil(set(&[1, 2])));
        // r1c2 can only be 1: assuming 1 at r1c1 empties it
        base.set_raw(CellIndex::at(0, 1), CellState::Pencil(set(&[1, 3])));
        base.set_raw(CellIndex::at(0, 2), CellState::Pencil(set(&[1, 3])));
        let st = init_hypotheses(&base, starter_for(c, 1, 2), CleanupOptions::default());
        assert!(matches!(st.circle.status, ViewStatus::Contradicted(_)));
        assert!(st.square.is_alive());
    }

    #[test]
    fn base_elimination_can_empty_a_view_cell() {
        let mut base = Grid::empty();
        let c = CellIndex::at(5, 5);
        let mut shadow = base.clone();
        shadow.set_raw(c, CellState::Pencil(set(&[3])));
        base.erase(c, set(&[3]));
        let mut v = view(Label::Square, shadow);
        dance_alone(&mut v, &base, CleanupOptions::default());
        assert!(matches!(v.status, ViewStatus::Contradicted(_)));
    }

    #[test]
    fn dance_alone_is_noop_at_fixpoint() {
        let base = Grid::empty();
        let mut v = view(Label::Circle, base.clone());
        dance_alone(&mut v, &base, CleanupOptions::default());
        assert!(v.is_alive());
        assert_eq!(v.shadow, base);
    }

    #[test]
    fn starters_are_ordered_by_score_then_cell() {
        let mut g = Grid::empty();
        for r in 0..9 {
            for c in 0..9 {
                let a = (r * 3 + r / 3 + c) % 9 + 1;
                let b = a % 9 + 1;
                g.set_raw(CellIndex::at(r, c), CellState::Pencil(set(&[a, b])));
            }
        }
        let starters = enumerate_starters(&g).unwrap();
        assert!(starters.len() >= 81);
        for w in starters.windows(2) {
            assert!(w[0].score >= w[1].score);
            if w[0].score == w[1].score {
                assert!(w[0].starter.sort_key() <= w[1].starter.sort_key());
            }
        }
    }

    #[test]
    fn no_starters_on_full_candidates() {
        // every cell has 9 candidates and every digit 9 places
        assert_eq!(enumerate_starters(&Grid::empty()), Err(NoStarters));
    }
}
