//! Step 3: the basic cleanup.
//!
//! Each of the 27 structures is searched for singles, then doubles, then
//! triples, naked and hidden, and every find is cleaned up immediately.
//! Sweeps repeat until one finds nothing. The same routine develops the
//! hypothesis views of the minuet.
//!
//! Quadruples are not searched for.

use crate::grid::{
    common_structures, CandidateSet, CellIndex, CellSet, CellState, Contradiction, Digit, Grid,
    StructureId,
};
use serde::{Deserialize, Serialize};

use crate::trace::{Change, Rule, Step, Trace, TraceEvent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanupOptions {
    /// Skip doubles in structures with fewer than 4 unsolved cells and
    /// triples in structures with fewer than 6.
    pub guards: bool,
}

impl Default for CleanupOptions {
    fn default() -> Self {
        Self { guards: true }
    }
}

pub const DOUBLES_MIN_UNSOLVED: u32 = 4;
pub const TRIPLES_MIN_UNSOLVED: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFind {
    NakedSingle {
        cell: CellIndex,
        digit: Digit,
    },
    HiddenSingle {
        structure: StructureId,
        cell: CellIndex,
        digit: Digit,
    },
    NakedDouble {
        structure: StructureId,
        cells: [CellIndex; 2],
        digits: CandidateSet,
    },
    HiddenDouble {
        structure: StructureId,
        cells: [CellIndex; 2],
        digits: CandidateSet,
    },
    NakedTriple {
        structure: StructureId,
        cells: [CellIndex; 3],
        digits: CandidateSet,
    },
    HiddenTriple {
        structure: StructureId,
        cells: [CellIndex; 3],
        digits: CandidateSet,
    },
}

/// Digits that are candidates in exactly two cells of `s`, with those cells.
#[must_use]
pub fn margin_half_doubles(grid: &Grid, s: StructureId) -> Vec<(Digit, CellIndex, CellIndex)> {
    Digit::ALL
        .iter()
        .filter_map(|&d| {
            let pos = grid.positions(s, d);
            if pos.len() == 2 {
                let mut it = pos.iter();
                Some((d, it.next()?, it.next()?))
            } else {
                None
            }
        })
        .collect()
}

fn check_structure(grid: &Grid, s: StructureId) -> Result<(), Contradiction> {
    let mut covered = CandidateSet::EMPTY;
    for c in s.cells() {
        match grid.cell(c) {
            CellState::Pencil(set) if set.is_empty() => {
                return Err(Contradiction::EmptyCell { cell: c })
            }
            CellState::Pencil(set) => covered = covered.union(set),
            CellState::Ink { digit, .. } => covered.insert(digit),
        }
    }
    match CandidateSet::FULL.difference(covered).first() {
        Some(digit) => Err(Contradiction::Starved {
            structure: s,
            digit,
        }),
        None => Ok(()),
    }
}

fn ink(
    grid: &mut Grid,
    cell: CellIndex,
    d: Digit,
    rule: Rule,
    structure: Option<StructureId>,
    trace: &mut Trace,
) -> Result<(), Contradiction> {
    let changes = grid
        .place_ink(cell, d)
        .map_err(|_| Contradiction::EmptyCell { cell })?;
    let mut event = TraceEvent::new(Step::Step3_1, rule)
        .at([cell])
        .with_digits(CandidateSet::single(d))
        .with_changes(changes);
    event.structure = structure;
    trace.push(event);
    Ok(())
}

/// Naked singles (cells with one candidate), then hidden singles (digits
/// with one place left in `s`), each inked at once.
pub fn detect_singles(
    grid: &mut Grid,
    s: StructureId,
    trace: &mut Trace,
) -> Result<Vec<GroupFind>, Contradiction> {
    check_structure(grid, s)?;
    let mut finds = Vec::new();
    for cell in s.cells() {
        if let CellState::Pencil(set) = grid.cell(cell) {
            match set.len() {
                0 => return Err(Contradiction::EmptyCell { cell }),
                1 => {
                    let digit = set.first().expect("one candidate");
                    ink(grid, cell, digit, Rule::NakedSingle, None, trace)?;
                    finds.push(GroupFind::NakedSingle { cell, digit });
                }
                _ => {}
            }
        }
    }
    for digit in Digit::ALL {
        if grid.inked_in(s).contains(digit) {
            continue;
        }
        let pos = grid.positions(s, digit);
        match pos.len() {
            0 => {
                return Err(Contradiction::Starved {
                    structure: s,
                    digit,
                })
            }
            1 => {
                let cell = pos.first().expect("one cell");
                ink(grid, cell, digit, Rule::HiddenSingle, Some(s), trace)?;
                finds.push(GroupFind::HiddenSingle {
                    structure: s,
                    cell,
                    digit,
                });
            }
            _ => {}
        }
    }
    Ok(finds)
}

/// Whether cleaning up the group would erase anything: foreign candidates
/// in its cells, or its digits elsewhere in a structure holding all of it.
fn group_would_erase(grid: &Grid, cells: CellSet, digits: CandidateSet) -> bool {
    let foreign = CandidateSet::FULL.difference(digits);
    if cells
        .iter()
        .any(|c| !grid.options(c).intersection(foreign).is_empty() && !grid.is_solved(c))
    {
        return true;
    }
    common_structures(cells).any(|t| {
        t.cell_set()
            .difference(cells)
            .iter()
            .any(|c| !grid.is_solved(c) && !grid.options(c).intersection(digits).is_empty())
    })
}

fn clean_up_group(grid: &mut Grid, cells: CellSet, digits: CandidateSet) -> Vec<Change> {
    let foreign = CandidateSet::FULL.difference(digits);
    let mut changes: Vec<Change> = cells
        .iter()
        .filter_map(|c| grid.erase(c, foreign))
        .collect();
    for t in common_structures(cells) {
        for c in t.cell_set().difference(cells).iter() {
            if let Some(ch) = grid.erase(c, digits) {
                changes.push(ch);
            }
        }
    }
    changes
}

fn record_group(
    grid: &mut Grid,
    s: StructureId,
    step: Step,
    rule: Rule,
    cells: CellSet,
    digits: CandidateSet,
    trace: &mut Trace,
) {
    let changes = clean_up_group(grid, cells, digits);
    trace.push(
        TraceEvent::new(step, rule)
            .in_structure(s)
            .at(cells.iter())
            .with_digits(digits)
            .with_changes(changes),
    );
}

fn pencil_cells(grid: &Grid, s: StructureId) -> Vec<(CellIndex, CandidateSet)> {
    s.cells()
        .into_iter()
        .filter_map(|c| grid.cell(c).pencil().map(|set| (c, set)))
        .collect()
}

fn first_naked_double(grid: &Grid, s: StructureId) -> Option<(CellSet, CandidateSet)> {
    let cells = pencil_cells(grid, s);
    for (i, &(a, sa)) in cells.iter().enumerate() {
        if sa.len() != 2 {
            continue;
        }
        for &(b, sb) in &cells[i + 1..] {
            if sa == sb {
                let group: CellSet = [a, b].into_iter().collect();
                if group_would_erase(grid, group, sa) {
                    return Some((group, sa));
                }
            }
        }
    }
    None
}

fn first_hidden_double(grid: &Grid, s: StructureId) -> Option<(CellSet, CandidateSet)> {
    let margin = margin_half_doubles(grid, s);
    for (i, &(d1, a, b)) in margin.iter().enumerate() {
        for &(d2, a2, b2) in &margin[i + 1..] {
            if (a, b) == (a2, b2) {
                let group: CellSet = [a, b].into_iter().collect();
                let digits: CandidateSet = [d1, d2].into_iter().collect();
                if group_would_erase(grid, group, digits) {
                    return Some((group, digits));
                }
            }
        }
    }
    None
}

fn pair(cells: CellSet) -> [CellIndex; 2] {
    let mut it = cells.iter();
    [it.next().expect("2 cells"), it.next().expect("2 cells")]
}

fn trio(cells: CellSet) -> [CellIndex; 3] {
    let mut it = cells.iter();
    [
        it.next().expect("3 cells"),
        it.next().expect("3 cells"),
        it.next().expect("3 cells"),
    ]
}

/// Naked and hidden doubles in `s`. Only finds that erase something are
/// reported; the search restarts after each one.
pub fn detect_doubles(
    grid: &mut Grid,
    s: StructureId,
    opts: CleanupOptions,
    trace: &mut Trace,
) -> Result<Vec<GroupFind>, Contradiction> {
    let mut finds = Vec::new();
    if opts.guards && grid.unsolved_in(s).len() < DOUBLES_MIN_UNSOLVED {
        return Ok(finds);
    }
    loop {
        if let Some((cells, digits)) = first_naked_double(grid, s) {
            record_group(
                grid,
                s,
                Step::Step3_2,
                Rule::NakedDouble,
                cells,
                digits,
                trace,
            );
            finds.push(GroupFind::NakedDouble {
                structure: s,
                cells: pair(cells),
                digits,
            });
        } else if let Some((cells, digits)) = first_hidden_double(grid, s) {
            record_group(
                grid,
                s,
                Step::Step3_2,
                Rule::HiddenDouble,
                cells,
                digits,
                trace,
            );
            finds.push(GroupFind::HiddenDouble {
                structure: s,
                cells: pair(cells),
                digits,
            });
        } else {
            break;
        }
    }
    check_structure(grid, s)?;
    Ok(finds)
}

fn first_naked_triple(grid: &Grid, s: StructureId) -> Option<(CellSet, CandidateSet)> {
    let cells: Vec<_> = pencil_cells(grid, s)
        .into_iter()
        .filter(|(_, set)| (2..=3).contains(&set.len()))
        .collect();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let uij = cells[i].1.union(cells[j].1);
            if uij.len() > 3 {
                continue;
            }
            for k in j + 1..cells.len() {
                let digits = uij.union(cells[k].1);
                if digits.len() != 3 {
                    continue;
                }
                let group: CellSet = [cells[i].0, cells[j].0, cells[k].0].into_iter().collect();
                if group_would_erase(grid, group, digits) {
                    return Some((group, digits));
                }
            }
        }
    }
    None
}

fn first_hidden_triple(grid: &Grid, s: StructureId) -> Option<(CellSet, CandidateSet)> {
    let inked = grid.inked_in(s);
    let spots: Vec<(Digit, CellSet)> = Digit::ALL
        .iter()
        .filter(|d| !inked.contains(**d))
        .map(|&d| (d, grid.positions(s, d)))
        .filter(|(_, pos)| (2..=3).contains(&pos.len()))
        .collect();
    for i in 0..spots.len() {
        for j in i + 1..spots.len() {
            let uij = spots[i].1.union(spots[j].1);
            if uij.len() > 3 {
                continue;
            }
            for k in j + 1..spots.len() {
                let group = uij.union(spots[k].1);
                if group.len() != 3 {
                    continue;
                }
                let digits: CandidateSet =
                    [spots[i].0, spots[j].0, spots[k].0].into_iter().collect();
                if group_would_erase(grid, group, digits) {
                    return Some((group, digits));
                }
            }
        }
    }
    None
}

/// Naked and hidden triples in `s`, same reporting rules as doubles.
pub fn detect_triples(
    grid: &mut Grid,
    s: StructureId,
    opts: CleanupOptions,
    trace: &mut Trace,
) -> Result<Vec<GroupFind>, Contradiction> {
    let mut finds = Vec::new();
    if opts.guards && grid.unsolved_in(s).len() < TRIPLES_MIN_UNSOLVED {
        return Ok(finds);
    }
    loop {
        if let Some((cells, digits)) = first_naked_triple(grid, s) {
            record_group(
                grid,
                s,
                Step::Step3_3,
                Rule::NakedTriple,
                cells,
                digits,
                trace,
            );
            finds.push(GroupFind::NakedTriple {
                structure: s,
                cells: trio(cells),
                digits,
            });
        } else if let Some((cells, digits)) = first_hidden_triple(grid, s) {
            record_group(
                grid,
                s,
                Step::Step3_3,
                Rule::HiddenTriple,
                cells,
                digits,
                trace,
            );
            finds.push(GroupFind::HiddenTriple {
                structure: s,
                cells: trio(cells),
                digits,
            });
        } else {
            break;
        }
    }
    check_structure(grid, s)?;
    Ok(finds)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Step3Summary {
    pub sweeps: usize,
    pub finds: usize,
}

/// One pass over all 27 structures. Returns the number of finds.
pub fn step3_sweep(
    grid: &mut Grid,
    opts: CleanupOptions,
    trace: &mut Trace,
) -> Result<usize, Contradiction> {
    let mut finds = 0;
    for s in StructureId::all() {
        finds += detect_singles(grid, s, trace)?.len();
        finds += detect_doubles(grid, s, opts, trace)?.len();
        finds += detect_triples(grid, s, opts, trace)?.len();
    }
    match grid.check_consistency().into_contradiction() {
        Some(c) => Err(c),
        None => Ok(finds),
    }
}

/// Sweeps until a sweep finds nothing. Each productive sweep removes at
/// least one candidate, so this terminates.
pub fn step3_fixpoint(
    grid: &mut Grid,
    opts: CleanupOptions,
    trace: &mut Trace,
) -> Result<Step3Summary, Contradiction> {
    let mut summary = Step3Summary::default();
    loop {
        summary.sweeps += 1;
        let finds = step3_sweep(grid, opts, trace)?;
        summary.finds += finds;
        if finds == 0 || grid.is_complete() {
            return Ok(summary);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: u8) -> Digit {
        Digit::new(v).unwrap()
    }

    fn set(ds: &[u8]) -> CandidateSet {
        ds.iter().map(|&v| d(v)).collect()
    }

    fn pencil(g: &mut Grid, c: CellIndex, ds: &[u8]) {
        g.set_raw(c, CellState::Pencil(set(ds)));
    }

    #[test]
    fn naked_single_is_inked() {
        let mut g = Grid::empty();
        let c = CellIndex::at(2, 3);
        pencil(&mut g, c, &[4]);
        let mut t = Trace::new();
        let finds = detect_singles(&mut g, StructureId::row(2), &mut t).unwrap();
        assert_eq!(
            finds[0],
            GroupFind::NakedSingle {
                cell: c,
                digit: d(4)
            }
        );
        assert_eq!(g.ink(c), Some(d(4)));
        assert!(!g.options(CellIndex::at(2, 0)).contains(d(4)));
    }

    #[test]
    fn hidden_single_in_row() {
        let mut g = Grid::empty();
        for c in StructureId::row(2).cells() {
            if c != CellIndex::at(2, 6) {
                g.erase(c, set(&[6]));
            }
        }
        let mut t = Trace::new();
        let finds = detect_singles(&mut g, StructureId::row(2), &mut t).unwrap();
        assert_eq!(
            finds,
            vec![GroupFind::HiddenSingle {
                structure: StructureId::row(2),
                cell: CellIndex::at(2, 6),
                digit: d(6)
            }]
        );
    }

    #[test]
    fn no_singles_leaves_grid_alone() {
        let mut g = Grid::empty();
        let before = g.clone();
        let mut t = Trace::new();
        assert!(detect_singles(&mut g, StructureId::boxed(3), &mut t)
            .unwrap()
            .is_empty());
        assert_eq!(g, before);
        assert!(t.is_empty());
    }

    #[test]
    fn naked_double_in_column() {
        let mut g = Grid::empty();
        let (a, b) = (CellIndex::at(0, 4), CellIndex::at(5, 4));
        pencil(&mut g, a, &[2, 7]);
        pencil(&mut g, b, &[2, 7]);
        let mut t = Trace::new();
        let finds = detect_doubles(
            &mut g,
            StructureId::col(4),
            CleanupOptions::default(),
            &mut t,
        )
        .unwrap();
        assert_eq!(
            finds,
            vec![GroupFind::NakedDouble {
                structure: StructureId::col(4),
                cells: [a, b],
                digits: set(&[2, 7])
            }]
        );
        for c in StructureId::col(4).cells() {
            if c != a && c != b {
                assert!(g.options(c).intersection(set(&[2, 7])).is_empty());
            }
        }
        // row 0 untouched
        assert!(g.options(CellIndex::at(0, 0)).contains(d(2)));
    }

    #[test]
    fn hidden_double_in_box_strips_cells() {
        let mut g = Grid::empty();
        let (a, b) = (CellIndex::at(3, 3), CellIndex::at(5, 4));
        for c in StructureId::boxed(4).cells() {
            if c != a && c != b {
                g.erase(c, set(&[3, 8]));
            }
        }
        let mut t = Trace::new();
        let finds = detect_doubles(
            &mut g,
            StructureId::boxed(4),
            CleanupOptions::default(),
            &mut t,
        )
        .unwrap();
        assert_eq!(
            finds,
            vec![GroupFind::HiddenDouble {
                structure: StructureId::boxed(4),
                cells: [a, b],
                digits: set(&[3, 8])
            }]
        );
        assert_eq!(g.options(a), set(&[3, 8]));
        assert_eq!(g.options(b), set(&[3, 8]));
    }

    #[test]
    fn double_sharing_box_and_row_cleans_both() {
        let mut g = Grid::empty();
        let (a, b) = (CellIndex::at(4, 3), CellIndex::at(4, 5));
        pencil(&mut g, a, &[1, 9]);
        pencil(&mut g, b, &[1, 9]);
        let mut t = Trace::new();
        detect_doubles(
            &mut g,
            StructureId::row(4),
            CleanupOptions::default(),
            &mut t,
        )
        .unwrap();
        assert!(!g.options(CellIndex::at(4, 0)).contains(d(1)));
        assert!(!g.options(CellIndex::at(3, 4)).contains(d(9)));
        assert!(g.options(CellIndex::at(0, 3)).contains(d(1)));
    }

    #[test]
    fn naked_triples_from_examples() {
        for cells_sets in [
            [&[5u8, 6][..], &[6, 8], &[5, 8]],
            [&[3, 6], &[3, 7], &[3, 6, 7]],
        ] {
            let mut g = Grid::empty();
            let cells = [
                CellIndex::at(7, 0),
                CellIndex::at(7, 4),
                CellIndex::at(7, 8),
            ];
            for (c, ds) in cells.iter().zip(cells_sets) {
                pencil(&mut g, *c, ds);
            }
            let union: CandidateSet = cells_sets
                .iter()
                .flat_map(|ds| ds.iter())
                .map(|&v| d(v))
                .collect();
            let mut t = Trace::new();
            let finds = detect_triples(
                &mut g,
                StructureId::row(7),
                CleanupOptions::default(),
                &mut t,
            )
            .unwrap();
            assert_eq!(
                finds,
                vec![GroupFind::NakedTriple {
                    structure: StructureId::row(7),
                    cells,
                    digits: union
                }]
            );
            assert!(g
                .options(CellIndex::at(7, 1))
                .intersection(union)
                .is_empty());
        }
    }

    #[test]
    fn triple_guard_skips_small_structures() {
        let mut g = Grid::empty();
        let row = StructureId::row(0);
        for (i, c) in row.cells().into_iter().enumerate().take(4) {
            g.place_ink(c, d(i as u8 + 1)).unwrap();
        }
        // five unsolved cells, three of which form a naked triple
        pencil(&mut g, CellIndex::at(0, 4), &[5, 6]);
        pencil(&mut g, CellIndex::at(0, 5), &[6, 7]);
        pencil(&mut g, CellIndex::at(0, 6), &[5, 7]);
        let before = g.clone();
        let mut t = Trace::new();
        let finds = detect_triples(&mut g, row, CleanupOptions::default(), &mut t).unwrap();
        assert!(finds.is_empty());
        assert_eq!(g, before);
        let finds = detect_triples(&mut g, row, CleanupOptions { guards: false }, &mut t).unwrap();
        assert_eq!(finds.len(), 1);
    }

    #[test]
    fn passive_single_shows_up_as_hidden_single() {
        // 7 confined to r1c1/r1c2 in box 0; a 7 inked in column 1 below
        let mut g = Grid::empty();
        for c in StructureId::boxed(0).cells() {
            if c != CellIndex::at(0, 0) && c != CellIndex::at(0, 1) {
                g.erase(c, set(&[7]));
            }
        }
        g.place_ink(CellIndex::at(6, 0), d(7)).unwrap();
        let mut t = Trace::new();
        let finds = detect_singles(&mut g, StructureId::boxed(0), &mut t).unwrap();
        assert!(finds.contains(&GroupFind::HiddenSingle {
            structure: StructureId::boxed(0),
            cell: CellIndex::at(0, 1),
            digit: d(7)
        }));
    }

    #[test]
    fn empty_cell_is_a_contradiction() {
        let mut g = Grid::empty();
        pencil(&mut g, CellIndex::at(1, 1), &[]);
        let mut t = Trace::new();
        assert_eq!(
            step3_fixpoint(&mut g, CleanupOptions::default(), &mut t),
            Err(Contradiction::EmptyCell {
                cell: CellIndex::at(1, 1)
            })
        );
    }
}
