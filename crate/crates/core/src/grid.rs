//! Grid topology, candidate-set algebra and the 81-character text format.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::trace::Change;

/// A Sudoku digit, always in `1..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Digit(u8);

impl Digit {
    pub const ALL: [Digit; 9] = [
        Digit(1),
        Digit(2),
        Digit(3),
        Digit(4),
        Digit(5),
        Digit(6),
        Digit(7),
        Digit(8),
        Digit(9),
    ];

    #[must_use]
    pub const fn new(value: u8) -> Option<Self> {
        if value >= 1 && value <= 9 {
            Some(Self(value))
        } else {
            None
        }
    }

    #[inline]
    #[must_use]
    pub const fn get(self) -> u8 {
        self.0
    }

    #[inline]
    const fn bit(self) -> u16 {
        1 << (self.0 - 1)
    }
}

impl TryFrom<u8> for Digit {
    type Error = String;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        Digit::new(value).ok_or_else(|| format!("digit out of range: {value}"))
    }
}

impl From<Digit> for u8 {
    fn from(d: Digit) -> u8 {
        d.0
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of digits stored as a 9-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CandidateSet(u16);

impl CandidateSet {
    pub const EMPTY: CandidateSet = CandidateSet(0);
    pub const FULL: CandidateSet = CandidateSet(0x1ff);

    #[inline]
    #[must_use]
    pub const fn single(d: Digit) -> Self {
        Self(d.bit())
    }

    #[inline]
    #[must_use]
    pub const fn from_bits(bits: u16) -> Self {
        Self(bits & 0x1ff)
    }

    #[inline]
    #[must_use]
    pub const fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    #[must_use]
    pub const fn contains(self, d: Digit) -> bool {
        self.0 & d.bit() != 0
    }

    #[inline]
    pub fn insert(&mut self, d: Digit) {
        self.0 |= d.bit();
    }

    #[inline]
    pub fn remove(&mut self, d: Digit) {
        self.0 &= !d.bit();
    }

    #[inline]
    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    #[inline]
    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    #[inline]
    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    #[inline]
    #[must_use]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    #[must_use]
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    #[must_use]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    #[must_use]
    pub fn first(self) -> Option<Digit> {
        if self.0 == 0 {
            None
        } else {
            Digit::new(self.0.trailing_zeros() as u8 + 1)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Digit> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let d = bits.trailing_zeros() as u8 + 1;
            bits &= bits - 1;
            Digit::new(d)
        })
    }
}

impl FromIterator<Digit> for CandidateSet {
    fn from_iter<I: IntoIterator<Item = Digit>>(iter: I) -> Self {
        let mut set = CandidateSet::EMPTY;
        for d in iter {
            set.insert(d);
        }
        set
    }
}

impl fmt::Debug for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.iter() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A cell position, row-major `0..81`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct CellIndex(u8);

impl CellIndex {
    #[must_use]
    pub const fn new(index: u8) -> Option<Self> {
        if index < 81 {
            Some(Self(index))
        } else {
            None
        }
    }

    #[must_use]
    pub const fn at(row: u8, col: u8) -> Self {
        assert!(row < 9 && col < 9);
        Self(row * 9 + col)
    }

    pub fn all() -> impl Iterator<Item = CellIndex> {
        (0..81).map(CellIndex)
    }

    #[inline]
    #[must_use]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    #[must_use]
    pub const fn row(self) -> u8 {
        self.0 / 9
    }

    #[inline]
    #[must_use]
    pub const fn col(self) -> u8 {
        self.0 % 9
    }

    #[inline]
    #[must_use]
    pub const fn box_index(self) -> u8 {
        3 * (self.row() / 3) + self.col() / 3
    }

    /// The row, column and box containing this cell, in that order.
    #[must_use]
    pub const fn structures(self) -> [StructureId; 3] {
        [
            StructureId::row(self.row()),
            StructureId::col(self.col()),
            StructureId::boxed(self.box_index()),
        ]
    }

    /// The 20 distinct cells sharing a structure with this one.
    #[must_use]
    pub fn peers(self) -> CellSet {
        PEERS[self.index()]
    }

    #[must_use]
    pub fn sees(self, other: CellIndex) -> bool {
        self.peers().contains(other)
    }
}

impl TryFrom<u8> for CellIndex {
    type Error = String;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        CellIndex::new(value).ok_or_else(|| format!("cell index out of range: {value}"))
    }
}

impl From<CellIndex> for u8 {
    fn from(c: CellIndex) -> u8 {
        c.0
    }
}

impl fmt::Display for CellIndex {
    /// `r<row>c<col>`, one-based, the way players name cells.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}c{}", self.row() + 1, self.col() + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StructureKind {
    Row,
    Col,
    Box,
}

/// One of the 27 rows, columns and boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StructureId {
    pub kind: StructureKind,
    pub ordinal: u8,
}

impl StructureId {
    #[must_use]
    pub const fn row(ordinal: u8) -> Self {
        Self {
            kind: StructureKind::Row,
            ordinal,
        }
    }

    #[must_use]
    pub const fn col(ordinal: u8) -> Self {
        Self {
            kind: StructureKind::Col,
            ordinal,
        }
    }

    #[must_use]
    pub const fn boxed(ordinal: u8) -> Self {
        Self {
            kind: StructureKind::Box,
            ordinal,
        }
    }

    /// All structures in scan order: rows 0..8, columns 0..8, boxes 0..8.
    pub fn all() -> impl Iterator<Item = StructureId> {
        (0..27).map(StructureId::from_dense)
    }

    pub fn boxes() -> impl Iterator<Item = StructureId> {
        (0..9).map(StructureId::boxed)
    }

    /// Dense index `0..27` matching the scan order of [`StructureId::all`].
    #[inline]
    #[must_use]
    pub const fn dense(self) -> usize {
        let base = match self.kind {
            StructureKind::Row => 0,
            StructureKind::Col => 9,
            StructureKind::Box => 18,
        };
        base + self.ordinal as usize
    }

    #[must_use]
    pub const fn from_dense(i: usize) -> Self {
        let ordinal = (i % 9) as u8;
        match i / 9 {
            0 => Self::row(ordinal),
            1 => Self::col(ordinal),
            _ => Self::boxed(ordinal),
        }
    }

    /// The nine cells of the structure in ascending order.
    #[must_use]
    pub fn cells(self) -> [CellIndex; 9] {
        STRUCTURE_CELLS[self.dense()]
    }

    #[must_use]
    pub fn cell_set(self) -> CellSet {
        STRUCTURE_SETS[self.dense()]
    }

    #[must_use]
    pub fn contains(self, cell: CellIndex) -> bool {
        self.cell_set().contains(cell)
    }
}

/// Ascending cell list of a structure. Same as [`StructureId::cells`].
#[must_use]
pub fn cells_of_structure(s: StructureId) -> [CellIndex; 9] {
    s.cells()
}

/// Every structure that contains all of `cells`, in scan order.
pub fn common_structures(cells: CellSet) -> impl Iterator<Item = StructureId> {
    StructureId::all().filter(move |s| !cells.is_empty() && cells.is_subset(s.cell_set()))
}

impl fmt::Display for StructureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            StructureKind::Row => "row",
            StructureKind::Col => "column",
            StructureKind::Box => "square",
        };
        write!(f, "{name} {}", self.ordinal + 1)
    }
}

/// A set of cells stored as an 81-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CellSet(u128);

impl CellSet {
    pub const EMPTY: CellSet = CellSet(0);

    #[inline]
    #[must_use]
    pub const fn single(c: CellIndex) -> Self {
        Self(1 << c.0)
    }

    #[inline]
    #[must_use]
    pub const fn contains(self, c: CellIndex) -> bool {
        self.0 & (1 << c.0) != 0
    }

    #[inline]
    pub fn insert(&mut self, c: CellIndex) {
        self.0 |= 1 << c.0;
    }

    #[inline]
    pub fn remove(&mut self, c: CellIndex) {
        self.0 &= !(1 << c.0);
    }

    #[inline]
    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    #[inline]
    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    #[inline]
    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    #[inline]
    #[must_use]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    #[must_use]
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    #[must_use]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[must_use]
    pub fn first(self) -> Option<CellIndex> {
        if self.0 == 0 {
            None
        } else {
            CellIndex::new(self.0.trailing_zeros() as u8)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = CellIndex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as u8;
            bits &= bits - 1;
            Some(CellIndex(i))
        })
    }
}

impl FromIterator<CellIndex> for CellSet {
    fn from_iter<I: IntoIterator<Item = CellIndex>>(iter: I) -> Self {
        let mut set = CellSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

const fn build_structure_cells() -> [[CellIndex; 9]; 27] {
    let mut out = [[CellIndex(0); 9]; 27];
    let mut i = 0;
    while i < 9 {
        let mut j = 0;
        while j < 9 {
            out[i][j] = CellIndex((i * 9 + j) as u8);
            out[9 + i][j] = CellIndex((j * 9 + i) as u8);
            let r = 3 * (i / 3) + j / 3;
            let c = 3 * (i % 3) + j % 3;
            out[18 + i][j] = CellIndex((r * 9 + c) as u8);
            j += 1;
        }
        i += 1;
    }
    out
}

const fn build_structure_sets() -> [CellSet; 27] {
    let mut out = [CellSet(0); 27];
    let mut s = 0;
    while s < 27 {
        let mut j = 0;
        while j < 9 {
            out[s].0 |= 1 << STRUCTURE_CELLS[s][j].0;
            j += 1;
        }
        s += 1;
    }
    out
}

const fn build_peers() -> [CellSet; 81] {
    let mut out = [CellSet(0); 81];
    let mut c = 0;
    while c < 81 {
        let cell = CellIndex(c as u8);
        let structs = cell.structures();
        let mut k = 0;
        while k < 3 {
            out[c].0 |= STRUCTURE_SETS[structs[k].dense()].0;
            k += 1;
        }
        out[c].0 &= !(1 << c);
        c += 1;
    }
    out
}

static STRUCTURE_CELLS: [[CellIndex; 9]; 27] = build_structure_cells();
static STRUCTURE_SETS: [CellSet; 27] = build_structure_sets();
static PEERS: [CellSet; 81] = build_peers();

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Origin {
    Given,
    Deduced,
}

/// What a cell holds: a permanent digit, or erasable pencil candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellState {
    Ink { digit: Digit, origin: Origin },
    Pencil(CandidateSet),
}

impl CellState {
    #[must_use]
    pub fn ink(self) -> Option<Digit> {
        match self {
            CellState::Ink { digit, .. } => Some(digit),
            CellState::Pencil(_) => None,
        }
    }

    #[must_use]
    pub fn pencil(self) -> Option<CandidateSet> {
        match self {
            CellState::Pencil(set) => Some(set),
            CellState::Ink { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("expected 81 significant characters, found {0}")]
    WrongLength(usize),
    #[error("unexpected character {ch:?} at position {position}")]
    BadChar { ch: char, position: usize },
    #[error("digit {digit} is given twice in {structure}")]
    InconsistentGivens {
        structure: StructureId,
        digit: Digit,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("{digit} is not a candidate of {cell}")]
    NotACandidate { cell: CellIndex, digit: Digit },
    #[error("{cell} is already solved")]
    AlreadySolved { cell: CellIndex },
}

/// A reason a grid cannot be completed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Contradiction {
    /// A digit is inked twice in one structure.
    Conflict {
        structure: StructureId,
        digit: Digit,
    },
    /// A digit can no longer be placed anywhere in a structure.
    Starved {
        structure: StructureId,
        digit: Digit,
    },
    /// An unsolved cell has no candidates left.
    EmptyCell { cell: CellIndex },
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contradiction::Conflict { structure, digit } => {
                write!(f, "conflict: {digit} appears twice in {structure}")
            }
            Contradiction::Starved { structure, digit } => {
                write!(f, "{digit} has no place left in {structure}")
            }
            Contradiction::EmptyCell { cell } => write!(f, "{cell} has no candidates"),
        }
    }
}

impl std::error::Error for Contradiction {}

/// Result of [`Grid::check_consistency`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    Ok,
    Conflict(StructureId, Digit),
    Starved(StructureId, Digit),
    EmptyCell(CellIndex),
}

impl Consistency {
    #[must_use]
    pub fn is_ok(self) -> bool {
        self == Consistency::Ok
    }

    #[must_use]
    pub fn into_contradiction(self) -> Option<Contradiction> {
        match self {
            Consistency::Ok => None,
            Consistency::Conflict(structure, digit) => {
                Some(Contradiction::Conflict { structure, digit })
            }
            Consistency::Starved(structure, digit) => {
                Some(Contradiction::Starved { structure, digit })
            }
            Consistency::EmptyCell(cell) => Some(Contradiction::EmptyCell { cell }),
        }
    }
}

/// The 81 cells of a puzzle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    cells: [CellState; 81],
}

impl Default for Grid {
    fn default() -> Self {
        Self::empty()
    }
}

impl Grid {
    /// Every cell unsolved with all nine candidates.
    #[must_use]
    pub fn empty() -> Self {
        Self {
            cells: [CellState::Pencil(CandidateSet::FULL); 81],
        }
    }

    #[inline]
    #[must_use]
    pub fn cell(&self, c: CellIndex) -> CellState {
        self.cells[c.index()]
    }

    #[inline]
    #[must_use]
    pub fn ink(&self, c: CellIndex) -> Option<Digit> {
        self.cells[c.index()].ink()
    }

    /// Digits the cell may still hold: the inked digit alone, or the pencil set.
    #[inline]
    #[must_use]
    pub fn options(&self, c: CellIndex) -> CandidateSet {
        match self.cells[c.index()] {
            CellState::Ink { digit, .. } => CandidateSet::single(digit),
            CellState::Pencil(set) => set,
        }
    }

    #[inline]
    #[must_use]
    pub fn is_solved(&self, c: CellIndex) -> bool {
        matches!(self.cells[c.index()], CellState::Ink { .. })
    }

    #[must_use]
    pub fn is_complete(&self) -> bool {
        self.cells
            .iter()
            .all(|c| matches!(c, CellState::Ink { .. }))
    }

    #[must_use]
    pub fn given_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| {
                matches!(
                    c,
                    CellState::Ink {
                        origin: Origin::Given,
                        ..
                    }
                )
            })
            .count()
    }

    #[must_use]
    pub fn ink_count(&self) -> usize {
        self.cells.iter().filter(|c| c.ink().is_some()).count()
    }

    /// Sum of candidate-set sizes over unsolved cells.
    #[must_use]
    pub fn candidate_count(&self) -> u32 {
        self.cells
            .iter()
            .filter_map(|c| c.pencil())
            .map(CandidateSet::len)
            .sum()
    }

    pub fn unsolved(&self) -> impl Iterator<Item = CellIndex> + '_ {
        CellIndex::all().filter(|&c| !self.is_solved(c))
    }

    /// Unsolved cells of `s`.
    #[must_use]
    pub fn unsolved_in(&self, s: StructureId) -> CellSet {
        s.cells()
            .into_iter()
            .filter(|&c| !self.is_solved(c))
            .collect()
    }

    /// Digits inked somewhere in `s`.
    #[must_use]
    pub fn inked_in(&self, s: StructureId) -> CandidateSet {
        s.cells().into_iter().filter_map(|c| self.ink(c)).collect()
    }

    /// Unsolved cells of `s` that still carry `d` as a candidate.
    #[must_use]
    pub fn positions(&self, s: StructureId, d: Digit) -> CellSet {
        s.cells()
            .into_iter()
            .filter(|&c| matches!(self.cells[c.index()], CellState::Pencil(set) if set.contains(d)))
            .collect()
    }

    /// Sets a cell's state with no bookkeeping. Used by parsers, replay and tests.
    pub fn set_raw(&mut self, c: CellIndex, state: CellState) {
        self.cells[c.index()] = state;
    }

    /// Inks `d` in an unsolved cell and erases `d` from the cell's peers.
    ///
    /// Returns the applied changes: the ink first, then one erasure per
    /// affected peer in ascending order.
    pub fn place_ink(&mut self, cell: CellIndex, d: Digit) -> Result<Vec<Change>, GridError> {
        match self.cells[cell.index()] {
            CellState::Ink { .. } => return Err(GridError::AlreadySolved { cell }),
            CellState::Pencil(set) if !set.contains(d) => {
                return Err(GridError::NotACandidate { cell, digit: d })
            }
            CellState::Pencil(_) => {}
        }
        self.cells[cell.index()] = CellState::Ink {
            digit: d,
            origin: Origin::Deduced,
        };
        let mut changes = vec![Change::Ink { cell, digit: d }];
        let only = CandidateSet::single(d);
        for peer in cell.peers().iter() {
            if let Some(erased) = self.erase(peer, only) {
                changes.push(erased);
            }
        }
        Ok(changes)
    }

    /// Removes `digits` from an unsolved cell. Returns the erasure, if any
    /// candidate was actually removed. Inked cells are left alone.
    pub fn erase(&mut self, cell: CellIndex, digits: CandidateSet) -> Option<Change> {
        match &mut self.cells[cell.index()] {
            CellState::Pencil(set) => {
                let removed = set.intersection(digits);
                if removed.is_empty() {
                    None
                } else {
                    *set = set.difference(digits);
                    Some(Change::Erase {
                        cell,
                        digits: removed,
                    })
                }
            }
            CellState::Ink { .. } => None,
        }
    }

    /// Erases from every unsolved cell the digits inked among its peers.
    pub fn propagate_ink(&mut self) -> Vec<Change> {
        let mut changes = Vec::new();
        for c in CellIndex::all() {
            let Some(d) = self.ink(c) else { continue };
            let only = CandidateSet::single(d);
            for peer in c.peers().iter() {
                if let Some(ch) = self.erase(peer, only) {
                    changes.push(ch);
                }
            }
        }
        changes
    }

    /// Scans structures for doubly inked digits, then cells for empty
    /// candidate sets, then structures for starved digits. The first
    /// failure in that order is reported.
    #[must_use]
    pub fn check_consistency(&self) -> Consistency {
        for s in StructureId::all() {
            let mut seen = CandidateSet::EMPTY;
            for c in s.cells() {
                if let Some(d) = self.ink(c) {
                    if seen.contains(d) {
                        return Consistency::Conflict(s, d);
                    }
                    seen.insert(d);
                }
            }
        }
        for c in CellIndex::all() {
            if self.cells[c.index()] == CellState::Pencil(CandidateSet::EMPTY) {
                return Consistency::EmptyCell(c);
            }
        }
        for s in StructureId::all() {
            let covered = s
                .cells()
                .into_iter()
                .fold(CandidateSet::EMPTY, |acc, c| acc.union(self.options(c)));
            if let Some(d) = CandidateSet::FULL.difference(covered).first() {
                return Consistency::Starved(s, d);
            }
        }
        Consistency::Ok
    }

    /// Inked digits only, `.` elsewhere.
    #[must_use]
    pub fn to_line(&self) -> String {
        serialize_grid(self)
    }

    /// One token per cell: `=d` for ink, the candidate digits otherwise
    /// (`-` for an empty set).
    #[must_use]
    pub fn to_candidate_tokens(&self) -> Vec<String> {
        self.cells
            .iter()
            .map(|c| match c {
                CellState::Ink { digit, .. } => format!("={digit}"),
                CellState::Pencil(set) if set.is_empty() => "-".to_owned(),
                CellState::Pencil(set) => set.to_string(),
            })
            .collect()
    }

    /// Inverse of [`Grid::to_candidate_tokens`]. Inked tokens come back as
    /// [`Origin::Deduced`].
    pub fn from_candidate_tokens<S: AsRef<str>>(tokens: &[S]) -> Option<Grid> {
        if tokens.len() != 81 {
            return None;
        }
        let mut grid = Grid::empty();
        for (i, tok) in tokens.iter().enumerate() {
            let tok = tok.as_ref();
            let state = if let Some(rest) = tok.strip_prefix('=') {
                let d = rest.parse::<u8>().ok().and_then(Digit::new)?;
                CellState::Ink {
                    digit: d,
                    origin: Origin::Deduced,
                }
            } else if tok == "-" {
                CellState::Pencil(CandidateSet::EMPTY)
            } else {
                let mut set = CandidateSet::EMPTY;
                for ch in tok.chars() {
                    set.insert(ch.to_digit(10).and_then(|v| Digit::new(v as u8))?);
                }
                CellState::Pencil(set)
            };
            grid.cells[i] = state;
        }
        Some(grid)
    }
}

/// Parses the 81-character row-major format. Digits `1`-`9` are givens,
/// `.` or `0` are blanks carrying all nine candidates, whitespace is ignored.
pub fn parse_grid(text: &str) -> Result<Grid, ParseError> {
    let mut grid = Grid::empty();
    let mut n = 0usize;
    for (position, ch) in text.chars().filter(|c| !c.is_whitespace()).enumerate() {
        let state = match ch {
            '.' | '0' => CellState::Pencil(CandidateSet::FULL),
            '1'..='9' => CellState::Ink {
                digit: Digit(ch as u8 - b'0'),
                origin: Origin::Given,
            },
            _ => return Err(ParseError::BadChar { ch, position }),
        };
        if position < 81 {
            grid.cells[position] = state;
        }
        n += 1;
    }
    if n != 81 {
        return Err(ParseError::WrongLength(n));
    }
    if let Consistency::Conflict(structure, digit) = grid.check_consistency() {
        return Err(ParseError::InconsistentGivens { structure, digit });
    }
    Ok(grid)
}

#[must_use]
pub fn serialize_grid(grid: &Grid) -> String {
    grid.cells
        .iter()
        .map(|c| match c {
            CellState::Ink { digit, .. } => char::from(b'0' + digit.get()),
            CellState::Pencil(_) => '.',
        })
        .collect()
}

impl FromStr for Grid {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_grid(s)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_grid(self))
    }
}

impl fmt::Debug for Grid {
    /// Nine rows of inked digits, with candidate sets in braces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f)?;
        for r in 0..9 {
            for c in 0..9 {
                match self.cell(CellIndex::at(r, c)) {
                    CellState::Ink { digit, .. } => write!(f, "{digit:>10}")?,
                    CellState::Pencil(set) => write!(f, "{:>10}", format!("{set:?}"))?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
