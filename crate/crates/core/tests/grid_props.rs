mod common;

use std::collections::BTreeSet;

use minuet_core::grid::{
    parse_grid, serialize_grid, CandidateSet, CellIndex, CellState, Consistency, Digit, Grid,
    Origin, StructureId,
};
use proptest::prelude::*;

use common::{all_puzzles, d, digits, solution};

fn model(set: CandidateSet) -> BTreeSet<u8> {
    set.iter().map(Digit::get).collect()
}

proptest! {
    #[test]
    fn candidate_set_matches_a_set_model(a in 0u16..512, b in 0u16..512) {
        let (x, y) = (CandidateSet::from_bits(a), CandidateSet::from_bits(b));
        let (mx, my) = (model(x), model(y));
        prop_assert_eq!(model(x.union(y)), &mx | &my);
        prop_assert_eq!(model(x.intersection(y)), &mx & &my);
        prop_assert_eq!(model(x.difference(y)), &mx - &my);
        prop_assert_eq!(x.len() as usize, mx.len());
        prop_assert_eq!(x.is_subset(y), mx.is_subset(&my));
    }

    #[test]
    fn line_round_trip(cells in proptest::collection::vec(0u8..10, 81)) {
        // drop digits that would clash so the line parses
        let mut g = Grid::empty();
        for (i, &v) in cells.iter().enumerate() {
            let c = CellIndex::new(i as u8).unwrap();
            if let Some(digit) = Digit::new(v) {
                if c.peers().iter().all(|p| g.ink(p) != Some(digit)) {
                    g.set_raw(c, CellState::Ink { digit, origin: Origin::Given });
                }
            }
        }
        let line = serialize_grid(&g);
        prop_assert_eq!(line.len(), 81);
        let back = parse_grid(&line).unwrap();
        prop_assert_eq!(serialize_grid(&back), line);
    }

    #[test]
    fn place_ink_is_monotone(cell in 0u8..81, v in 1u8..=9, erased in proptest::collection::vec((0u8..81, 0u16..512), 0..40)) {
        let mut g = Grid::empty();
        for (c, bits) in erased {
            g.erase(CellIndex::new(c).unwrap(), CandidateSet::from_bits(bits));
        }
        let c = CellIndex::new(cell).unwrap();
        let before = g.clone();
        if g.place_ink(c, d(v)).is_ok() {
            for x in CellIndex::all() {
                prop_assert!(g.options(x).is_subset(before.options(x)));
                if x != c && c.sees(x) {
                    prop_assert!(!g.options(x).contains(d(v)));
                }
            }
        } else {
            prop_assert_eq!(g, before);
        }
    }
}

#[test]
fn serialize_edge_cases() {
    assert_eq!(serialize_grid(&Grid::empty()), ".".repeat(81));
    let full = "534678912672195348198342567859761423426853791713924856961537284287419635345286179";
    let line = serialize_grid(&parse_grid(full).unwrap());
    assert_eq!(line, full);
    assert!(!line.contains('.'));
}

#[test]
fn corpus_round_trip_keeps_givens() {
    for p in all_puzzles() {
        let back = parse_grid(&serialize_grid(&p)).unwrap();
        assert_eq!(back, p);
    }
}

#[test]
fn placing_true_digits_never_empties_a_peer() {
    for p in all_puzzles().into_iter().take(150) {
        let truth = digits(&solution(&p));
        let mut g = p.clone();
        g.propagate_ink();
        for c in CellIndex::all() {
            if g.is_solved(c) {
                continue;
            }
            g.place_ink(c, truth[c.index()]).unwrap();
            for peer in c.peers().iter() {
                assert!(!g.options(peer).is_empty(), "{peer} emptied");
            }
        }
        assert!(g.is_complete());
        assert!(g.check_consistency().is_ok());
    }
}

#[test]
fn two_fives_in_row_three_conflict() {
    let mut g = Grid::empty();
    for c in [CellIndex::at(3, 1), CellIndex::at(3, 7)] {
        g.set_raw(
            c,
            CellState::Ink {
                digit: d(5),
                origin: Origin::Given,
            },
        );
    }
    assert_eq!(
        g.check_consistency(),
        Consistency::Conflict(StructureId::row(3), d(5))
    );
}

#[test]
fn peer_symmetry_and_cover() {
    let mut cover = [0; 81];
    for s in StructureId::all() {
        for c in s.cells() {
            cover[c.index()] += 1;
        }
    }
    assert!(cover.iter().all(|&n| n == 3));
    for a in CellIndex::all() {
        assert_eq!(a.peers().len(), 20);
        for b in a.peers().iter() {
            assert!(b.peers().contains(a));
        }
    }
}
