#![allow(dead_code)]

use std::path::PathBuf;

use minuet_core::grid::{CellIndex, CellState, Digit, Grid, Origin};
use minuet_core::harness::{load_corpus, Corpus};
use minuet_core::oracle::brute_solve;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn corpus(name: &str) -> Corpus {
    load_corpus(data(name)).expect("corpus loads")
}

/// Hard then easy puzzles.
pub fn all_puzzles() -> Vec<Grid> {
    let mut out: Vec<Grid> = corpus("hard.txt")
        .entries
        .into_iter()
        .map(|e| e.grid)
        .collect();
    out.extend(corpus("easy.txt").entries.into_iter().map(|e| e.grid));
    out
}

pub fn d(v: u8) -> Digit {
    Digit::new(v).unwrap()
}

pub fn solution(grid: &Grid) -> Grid {
    brute_solve(grid).expect("corpus puzzles are well-posed")
}

/// Digits of a complete grid, row-major.
pub fn digits(solution: &Grid) -> [Digit; 81] {
    let mut out = [d(1); 81];
    for c in CellIndex::all() {
        out[c.index()] = solution.ink(c).expect("complete");
    }
    out
}

/// A random complete grid: random digit order in each cell, first fit.
pub fn random_solution(rng: &mut impl Rng) -> [u8; 81] {
    fn fill(cells: &mut [u8; 81], at: usize, rng: &mut impl Rng) -> bool {
        if at == 81 {
            return true;
        }
        let (r, c) = (at / 9, at % 9);
        let mut ds: Vec<u8> = (1..=9).collect();
        ds.shuffle(rng);
        for v in ds {
            let clash = (0..9).any(|k| {
                cells[r * 9 + k] == v
                    || cells[k * 9 + c] == v
                    || cells[(3 * (r / 3) + k / 3) * 9 + 3 * (c / 3) + k % 3] == v
            });
            if !clash {
                cells[at] = v;
                if fill(cells, at + 1, rng) {
                    return true;
                }
                cells[at] = 0;
            }
        }
        false
    }
    let mut cells = [0u8; 81];
    assert!(fill(&mut cells, 0, rng));
    cells
}

/// The solution with `holes` random cells emptied, candidates refilled.
pub fn random_position(rng: &mut impl Rng, holes: usize) -> (Grid, [u8; 81]) {
    let sol = random_solution(rng);
    let mut order: Vec<usize> = (0..81).collect();
    order.shuffle(rng);
    let mut g = Grid::empty();
    for (i, &v) in sol.iter().enumerate() {
        if !order[..holes].contains(&i) {
            g.set_raw(
                CellIndex::new(i as u8).unwrap(),
                CellState::Ink {
                    digit: d(v),
                    origin: Origin::Given,
                },
            );
        }
    }
    (g, sol)
}

/// First cell whose options no longer include its solution digit.
pub fn lost_truth(grid: &Grid, truth: &[Digit; 81]) -> Option<CellIndex> {
    CellIndex::all().find(|&c| !grid.options(c).contains(truth[c.index()]))
}
