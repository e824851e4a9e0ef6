mod common;

use std::collections::BTreeMap;

use minuet_core::grid::{CandidateSet, CellIndex, CellState, Digit, Grid, Origin, StructureId};
use minuet_core::phase1::{
    available_cells, run_phase1, step1_fixpoint, step2_fill, Phase1Find, Phase1State,
};
use minuet_core::phase2::{
    detect_doubles, detect_singles, detect_triples, step3_fixpoint, CleanupOptions, GroupFind,
};
use minuet_core::trace::{Change, Trace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_puzzles, d, digits, lost_truth, solution};

/// A corpus puzzle with some extra solution cells inked; still well-posed.
fn enriched(p: &Grid, truth: &[Digit; 81], rng: &mut ChaCha8Rng) -> Grid {
    let mut g = p.clone();
    let extra = rng.gen_range(0..=20);
    for _ in 0..extra {
        let c = CellIndex::new(rng.gen_range(0..81)).unwrap();
        if !g.is_solved(c) {
            g.set_raw(
                c,
                CellState::Ink {
                    digit: truth[c.index()],
                    origin: Origin::Given,
                },
            );
        }
    }
    g
}

#[test]
fn phase1_keeps_every_true_digit_and_inks_only_true_digits() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in all_puzzles() {
        let truth = digits(&solution(&p));
        for triples in [false, true] {
            let mut g = enriched(&p, &truth, &mut rng);
            g.propagate_ink();
            let mut trace = Trace::new();
            let mut st = Phase1State::new(triples);
            step1_fixpoint(&mut g, &mut st, &mut trace).unwrap();
            for s in StructureId::boxes() {
                for digit in Digit::ALL {
                    if g.inked_in(s).contains(digit) {
                        continue;
                    }
                    let home = s
                        .cells()
                        .into_iter()
                        .find(|c| truth[c.index()] == digit)
                        .unwrap();
                    assert!(available_cells(&g, &st, s, digit).contains(home));
                }
            }
            step2_fill(&mut g, &st, &mut trace).unwrap();
            assert_eq!(lost_truth(&g, &truth), None, "{}", p.to_line());
            for e in trace.events() {
                for (c, digit) in e.inked() {
                    assert_eq!(digit, truth[c.index()], "{e}");
                }
            }
        }
    }
}

#[test]
fn step1_often_needs_more_than_one_pass() {
    let mut multi = 0;
    for p in all_puzzles() {
        let mut g = p.clone();
        g.propagate_ink();
        let mut st = Phase1State::new(false);
        let summary = step1_fixpoint(&mut g, &mut st, &mut Trace::disabled()).unwrap();
        if summary.passes >= 2 {
            multi += 1;
        }
    }
    assert!(multi > 0);
}

#[test]
fn phase1_traces_are_reproducible() {
    for p in all_puzzles().into_iter().take(50) {
        let run = || {
            let mut g = p.clone();
            g.propagate_ink();
            let mut t = Trace::new();
            run_phase1(&mut g, true, &mut t).unwrap();
            (g, t)
        };
        assert_eq!(run(), run());
    }
}

fn kind(f: &GroupFind) -> &'static str {
    match f {
        GroupFind::NakedSingle { .. } => "naked single",
        GroupFind::HiddenSingle { .. } => "hidden single",
        GroupFind::NakedDouble { .. } => "naked double",
        GroupFind::HiddenDouble { .. } => "hidden double",
        GroupFind::NakedTriple { .. } => "naked triple",
        GroupFind::HiddenTriple { .. } => "hidden triple",
    }
}

#[test]
fn every_cleanup_kind_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for p in all_puzzles() {
        let truth = digits(&solution(&p));
        for guards in [true, false] {
            let opts = CleanupOptions { guards };
            let mut g = enriched(&p, &truth, &mut rng);
            g.propagate_ink();
            let mut t = Trace::disabled();
            run_phase1(&mut g, false, &mut t).unwrap();
            loop {
                let mut found = 0;
                for s in StructureId::all() {
                    for finds in [
                        detect_singles(&mut g, s, &mut t).unwrap(),
                        detect_doubles(&mut g, s, opts, &mut t).unwrap(),
                        detect_triples(&mut g, s, opts, &mut t).unwrap(),
                    ] {
                        found += finds.len();
                        let kinds: Vec<_> = finds.iter().map(kind).collect();
                        assert_eq!(lost_truth(&g, &truth), None, "after {kinds:?} in {s}");
                        for k in kinds {
                            *seen.entry(k).or_default() += 1;
                        }
                    }
                }
                if found == 0 {
                    break;
                }
            }
        }
    }
    assert_eq!(seen.len(), 6, "kinds exercised: {seen:?}");
}

#[test]
fn solved_grid_sweeps_once() {
    let p = &all_puzzles()[0];
    let mut g = solution(p);
    let s = step3_fixpoint(&mut g, CleanupOptions::default(), &mut Trace::new()).unwrap();
    assert_eq!((s.sweeps, s.finds), (1, 0));
}

#[test]
fn easy_corpus_is_mostly_finished_by_step3() {
    let easy: Vec<Grid> = common::corpus("easy.txt")
        .entries
        .into_iter()
        .map(|e| e.grid)
        .collect();
    let done = easy
        .iter()
        .filter(|p| {
            let mut g = (*p).clone();
            g.propagate_ink();
            let mut t = Trace::disabled();
            run_phase1(&mut g, false, &mut t).unwrap();
            step3_fixpoint(&mut g, CleanupOptions::default(), &mut t).unwrap();
            g.is_complete()
        })
        .count();
    // one easy puzzle needs a minuet
    assert_eq!(done, 99);
}

/// A half double of `digit` on `a`, `b` in a box; then `digit` is inked in a
/// row through `a` outside the box. The box now has one place left.
#[test]
fn passive_singles_are_hidden_singles_at_full_candidates() {
    let mut checked = 0;
    for square in StructureId::boxes() {
        let cells = square.cells();
        for (i, &a) in cells.iter().enumerate() {
            for &b in &cells[i + 1..] {
                if a.row() == b.row() {
                    continue;
                }
                let digit = d(1 + (checked % 9) as u8);
                let mut g = Grid::empty();
                for c in cells {
                    if c != a && c != b {
                        g.erase(c, CandidateSet::single(digit));
                    }
                }
                let outside = CellIndex::at(a.row(), (a.col() + 3) % 9);
                g.place_ink(outside, digit).unwrap();
                let finds = detect_singles(&mut g, square, &mut Trace::new()).unwrap();
                assert!(
                    finds.contains(&GroupFind::HiddenSingle {
                        structure: square,
                        cell: b,
                        digit
                    }),
                    "{a} {b} {finds:?}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 200);
}

#[test]
fn phase1_reports_passive_singles_on_corpus() {
    let passive = all_puzzles()
        .iter()
        .map(|p| {
            let mut g = p.clone();
            g.propagate_ink();
            let (s1, _, _) = run_phase1(&mut g, false, &mut Trace::disabled()).unwrap();
            s1.finds
                .iter()
                .filter(|f| matches!(f, Phase1Find::PassiveSingle { .. }))
                .count()
        })
        .sum::<usize>();
    assert!(passive > 0);
}

#[test]
fn erasures_only_ever_remove() {
    for p in all_puzzles().into_iter().take(100) {
        let mut g = p.clone();
        g.propagate_ink();
        let mut replay = g.clone();
        let mut t = Trace::new();
        run_phase1(&mut g, true, &mut t).unwrap();
        step3_fixpoint(&mut g, CleanupOptions::default(), &mut t).unwrap();
        for ch in t.events().iter().flat_map(|e| e.changes.iter()) {
            match *ch {
                Change::Erase { cell, digits } => {
                    assert!(!digits.is_empty());
                    assert!(
                        digits.is_subset(replay.options(cell)),
                        "erasing absent digits at {cell}"
                    );
                    replay.erase(cell, digits);
                }
                Change::Ink { cell, digit } => {
                    assert!(replay.options(cell).contains(digit));
                    replay.set_raw(
                        cell,
                        CellState::Ink {
                            digit,
                            origin: Origin::Deduced,
                        },
                    );
                }
            }
        }
        assert_eq!(replay, g);
    }
}
