//! Generates the test corpora under `tests/data/`.
//!
//! ```text
//! cargo run --release -p minuet-core --example make_corpus -- hard 300 > hard.txt
//! cargo run --release -p minuet-core --example make_corpus -- easy 100 > easy.txt
//! ```
//!
//! Solution grids come from randomized backtracking with a fixed seed.
//! `hard` removes clues one at a time while the oracle still reports a
//! unique solution and keeps minimal puzzles that Phase I plus Step 3 do not
//! finish. `easy` stops removing at 36 clues and keeps unique puzzles.
//! Neither selection looks at whether the minuet succeeds.

use std::env;

use minuet_core::grid::{CellIndex, CellState, Digit, Grid, Origin};
use minuet_core::oracle::count_solutions;
use minuet_core::phase1::run_phase1;
use minuet_core::phase2::{step3_fixpoint, CleanupOptions};
use minuet_core::trace::Trace;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fill(cells: &mut [u8; 81], at: usize, rng: &mut ChaCha8Rng) -> bool {
    if at == 81 {
        return true;
    }
    let (r, c) = (at / 9, at % 9);
    let mut digits: Vec<u8> = (1..=9).collect();
    digits.shuffle(rng);
    for d in digits {
        let clash = (0..9).any(|k| {
            cells[r * 9 + k] == d
                || cells[k * 9 + c] == d
                || cells[(3 * (r / 3) + k / 3) * 9 + 3 * (c / 3) + k % 3] == d
        });
        if !clash {
            cells[at] = d;
            if fill(cells, at + 1, rng) {
                return true;
            }
            cells[at] = 0;
        }
    }
    false
}

fn to_grid(cells: &[u8; 81]) -> Grid {
    let mut g = Grid::empty();
    for c in CellIndex::all() {
        if let Some(d) = Digit::new(cells[c.index()]) {
            g.set_raw(
                c,
                CellState::Ink {
                    digit: d,
                    origin: Origin::Given,
                },
            );
        }
    }
    g
}

fn line(cells: &[u8; 81]) -> String {
    cells
        .iter()
        .map(|&d| if d == 0 { '.' } else { char::from(b'0' + d) })
        .collect()
}

/// Removes clues in random order while the puzzle stays unique, stopping at
/// `floor` clues.
fn reduce(solution: &[u8; 81], floor: usize, rng: &mut ChaCha8Rng) -> [u8; 81] {
    let mut cells = *solution;
    let mut order: Vec<usize> = (0..81).collect();
    order.shuffle(rng);
    let mut clues = 81;
    for i in order {
        if clues <= floor {
            break;
        }
        let keep = cells[i];
        cells[i] = 0;
        if count_solutions(&to_grid(&cells), 2) == 1 {
            clues -= 1;
        } else {
            cells[i] = keep;
        }
    }
    cells
}

fn basic_rules_finish(cells: &[u8; 81]) -> bool {
    let mut g = to_grid(cells);
    g.propagate_ink();
    let mut quiet = Trace::disabled();
    run_phase1(&mut g, false, &mut quiet).is_ok()
        && step3_fixpoint(&mut g, CleanupOptions::default(), &mut quiet).is_ok()
        && g.is_complete()
}

fn main() {
    let args: Vec<String> = env::args().collect();
    let kind = args.get(1).map_or("hard", String::as_str);
    let want: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(300);
    let seed: u64 = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(2024);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    println!("# {kind} corpus, seed {seed}");
    let mut made = 0;
    let mut tried = 0;
    while made < want {
        let mut solution = [0u8; 81];
        fill(&mut solution, 0, &mut rng);
        tried += 1;
        let puzzle = match kind {
            "easy" => reduce(&solution, 36, &mut rng),
            _ => {
                let p = reduce(&solution, 17, &mut rng);
                if basic_rules_finish(&p) {
                    continue;
                }
                p
            }
        };
        println!("{}", line(&puzzle));
        made += 1;
    }
    eprintln!("{made} puzzles from {tried} solution grids");
}
