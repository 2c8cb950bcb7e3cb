//! Strict partitions, shifted diagrams of types B and D, hooks, and the
//! associated variable and index sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a diagram, with 1-indexed row and column.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(into = "(u32, u32)", from = "(u32, u32)")]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    /// Content of the cell: column minus row.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl From<(u32, u32)> for Cell {
    fn from((row, col): (u32, u32)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (u32, u32) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// The two coordinate conventions for shifted diagrams. In type B row `i`
/// starts at column `i`; in type D it starts at column `i + 1`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum DiagramKind {
    B,
    D,
}

impl DiagramKind {
    pub const BOTH: [DiagramKind; 2] = [DiagramKind::B, DiagramKind::D];

    /// Column offset of the first cell of each row relative to the row index.
    pub fn shift(self) -> u32 {
        match self {
            DiagramKind::B => 0,
            DiagramKind::D => 1,
        }
    }

    /// First column of row `i`, whether or not the row is present.
    pub fn row_start(self, i: u32) -> u32 {
        i + self.shift()
    }

    /// A cell in the first column of its row.
    pub fn is_diagonal(self, cell: Cell) -> bool {
        cell.col == self.row_start(cell.row)
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramKind::B => write!(f, "B"),
            DiagramKind::D => write!(f, "D"),
        }
    }
}

impl FromStr for DiagramKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(DiagramKind::B),
            "D" | "d" => Ok(DiagramKind::D),
            _ => Err(Error::Parse(s.to_string(), "diagram kind")),
        }
    }
}

/// A partition with strictly decreasing positive parts.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// The `i`-th part (1-indexed), or 0 past the last part.
    pub fn part(&self, i: u32) -> u32 {
        if i >= 1 && (i as usize) <= self.0.len() {
            self.0[i as usize - 1]
        } else {
            0
        }
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    /// Number of cells in column `j` of the type-B shifted diagram. Columns
    /// are prefixes of the row set, so this also names the last row meeting
    /// column `j`.
    pub fn col_len(&self, j: u32) -> u32 {
        if j == 0 {
            return 0;
        }
        (1..=self.len())
            .take_while(|&i| i <= j && self.part(i) + i > j)
            .count() as u32
    }

    /// Number of cells in column `j` of the shifted diagram of `kind`.
    pub fn col_len_for(&self, kind: DiagramKind, j: u32) -> u32 {
        self.col_len(j.saturating_sub(kind.shift()))
    }

    /// Last column of row `i`, if the row is present.
    pub fn row_end(&self, kind: DiagramKind, i: u32) -> Option<u32> {
        if i >= 1 && i <= self.len() {
            Some(self.part(i) + i - 1 + kind.shift())
        } else {
            None
        }
    }

    pub fn has_cell(&self, kind: DiagramKind, cell: Cell) -> bool {
        match self.row_end(kind, cell.row) {
            Some(end) => cell.col >= kind.row_start(cell.row) && cell.col <= end,
            None => false,
        }
    }

    /// All cells of the shifted diagram, in row-major order.
    pub fn diagram(&self, kind: DiagramKind) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.size() as usize);
        for i in 1..=self.len() {
            for j in kind.row_start(i)..=self.row_end(kind, i).unwrap() {
                cells.push(Cell::new(i, j));
            }
        }
        cells
    }

    /// Cells of the skew diagram, i.e. cells of `self` not in `inner`.
    pub fn skew_cells(&self, kind: DiagramKind, inner: &StrictPartition) -> Vec<Cell> {
        self.diagram(kind)
            .into_iter()
            .filter(|&c| !inner.has_cell(kind, c))
            .collect()
    }

    /// Whether the diagram of `inner` sits inside the diagram of `self`.
    pub fn contains(&self, inner: &StrictPartition) -> bool {
        (1..=inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Whether `self` is obtained from `inner` by adding a single cell.
    pub fn covers(&self, inner: &StrictPartition) -> bool {
        self.contains(inner) && self.size() == inner.size() + 1
    }

    /// Rows whose last cell can be removed keeping the partition strict.
    fn corner_rows(&self) -> Vec<u32> {
        (1..=self.len())
            .filter(|&i| i == self.len() || self.part(i) >= self.part(i + 1) + 2)
            .collect()
    }

    /// Removable cells of the type-B diagram, in row order.
    pub fn corners(&self) -> Vec<Cell> {
        self.corners_for(DiagramKind::B)
    }

    pub fn corners_for(&self, kind: DiagramKind) -> Vec<Cell> {
        self.corner_rows()
            .into_iter()
            .map(|i| Cell::new(i, self.row_end(kind, i).unwrap()))
            .collect()
    }

    /// Rows that can receive one more cell keeping the partition strict.
    /// Row `len() + 1` stands for appending a new part equal to 1.
    fn outer_rows(&self) -> Vec<u32> {
        let mut rows = vec![1];
        for i in 2..=self.len() {
            if self.part(i - 1) >= self.part(i) + 2 {
                rows.push(i);
            }
        }
        if self.is_empty() {
            return vec![1];
        }
        if self.part(self.len()) >= 2 {
            rows.push(self.len() + 1);
        }
        rows
    }

    /// Addable cells of the type-B diagram, in row order.
    pub fn outer_cells(&self) -> Vec<Cell> {
        self.outer_rows()
            .into_iter()
            .map(|i| Cell::new(i, self.part(i) + i))
            .collect()
    }

    /// Partition obtained by lengthening row `row` by one cell.
    pub fn with_cell_added(&self, row: u32) -> Result<Self> {
        if row == 0 || row > self.len() + 1 {
            return Err(Error::OutOfRange(format!("row {row} cannot grow")));
        }
        let mut parts = self.0.clone();
        if row as usize == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row as usize - 1] += 1;
        }
        StrictPartition::new(parts)
    }

    /// Partition obtained by shortening row `row` by one cell.
    pub fn with_cell_removed(&self, row: u32) -> Result<Self> {
        if row == 0 || row > self.len() {
            return Err(Error::OutOfRange(format!("row {row} cannot shrink")));
        }
        let mut parts = self.0.clone();
        parts[row as usize - 1] -= 1;
        if parts[row as usize - 1] == 0 {
            parts.pop();
        }
        StrictPartition::new(parts)
    }

    /// Partitions covering `inner` and contained in `self`, in decreasing
    /// lexicographic order.
    pub fn covers_within(&self, inner: &StrictPartition) -> Vec<StrictPartition> {
        if !self.contains(inner) {
            return Vec::new();
        }
        let mut out: Vec<StrictPartition> = inner
            .outer_rows()
            .into_iter()
            .filter_map(|row| inner.with_cell_added(row).ok())
            .filter(|nu| self.contains(nu))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// The hook of a cell, as a list with multiplicity.
    ///
    /// In type B the hook of a diagonal cell is its row; the hook of `(i, j)`
    /// with `i < j` also picks up column `j` below row `i` and, when row `j`
    /// exists, all of row `j`, counting the diagonal cell `(j, j)` twice.
    /// In type D the leg stops above the diagonal and row `j` (when present)
    /// joins without any doubled cell.
    pub fn hook_cells(&self, kind: DiagramKind, cell: Cell) -> Result<Vec<Cell>> {
        if !self.has_cell(kind, cell) {
            return Err(Error::CellOutsideDiagram(cell.row, cell.col));
        }
        let (i, j) = (cell.row, cell.col);
        let end = self.row_end(kind, i).unwrap();
        let mut cells: Vec<Cell> = (j..=end).map(|c| Cell::new(i, c)).collect();
        if kind == DiagramKind::B && i == j {
            return Ok(cells);
        }
        for r in i + 1..=self.col_len_for(kind, j) {
            cells.push(Cell::new(r, j));
        }
        if j <= self.len() {
            let from = match kind {
                DiagramKind::B => j,
                DiagramKind::D => j + 1,
            };
            for c in from..=self.row_end(kind, j).unwrap() {
                cells.push(Cell::new(j, c));
            }
        }
        Ok(cells)
    }

    pub fn hook_length(&self, kind: DiagramKind, cell: Cell) -> Result<u64> {
        Ok(self.hook_cells(kind, cell)?.len() as u64)
    }

    /// The variable attached to index `i`: the `i`-th part while `i` is a row,
    /// and a column statistic beyond the rows. Hook lengths of cells with both
    /// coordinates meaningful decompose as sums of these.
    pub fn x_var(&self, kind: DiagramKind, i: u32) -> i64 {
        assert!(i >= 1, "variable indices start at 1");
        if i <= self.len() {
            return self.part(i) as i64;
        }
        match kind {
            DiagramKind::B => self.col_len(i) as i64 - i as i64,
            DiagramKind::D => self.col_len(i - 1) as i64 - (i as i64 - 1),
        }
    }

    /// Indices whose variables sum to the size of the skew diagram over
    /// `inner`. `inner` need not be contained in `self`.
    pub fn w_set(&self, kind: DiagramKind, inner: &StrictPartition) -> BTreeSet<u32> {
        let bound = self.first().max(inner.first()) + 3;
        let inner_vals: BTreeSet<i64> = (1..=bound + 2)
            .map(|j| inner.col_len(j) as i64 - j as i64)
            .collect();
        let mut set = BTreeSet::new();
        for k in 1..=self.len() {
            if !inner.0.contains(&self.part(k)) {
                set.insert(k);
            }
        }
        match kind {
            DiagramKind::B => {
                for k in self.len() + 1..=bound {
                    if !inner_vals.contains(&(self.col_len(k) as i64 - k as i64)) {
                        set.insert(k);
                    }
                }
            }
            DiagramKind::D => {
                if (self.len() + inner.len()) % 2 == 1 {
                    set.insert(self.len() + 1);
                }
                for k in self.len() + 2..=bound {
                    let v = self.col_len(k - 1) as i64 - (k as i64 - 1);
                    if !inner_vals.contains(&v) {
                        set.insert(k);
                    }
                }
            }
        }
        set
    }

    /// The index range `1..=first_part + 1` used when inserting into shapes
    /// bounded by `self`.
    pub fn w_universe(&self) -> BTreeSet<u32> {
        (1..=self.first() + 1).collect()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[]");
        }
        if self.0.iter().all(|&p| p <= 9) {
            for p in &self.0 {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            write!(f, "[")?;
            for (idx, p) in self.0.iter().enumerate() {
                if idx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")
        }
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "[]" {
            return Ok(StrictPartition::empty());
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let parts = inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(s.to_string(), "partition"))
                })
                .collect::<Result<Vec<u32>>>()?;
            return StrictPartition::new(parts);
        }
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(s.to_string(), "partition"));
        }
        let parts = s.chars().map(|c| c.to_digit(10).unwrap()).collect();
        StrictPartition::new(parts)
    }
}

/// Parses `"outer/inner"`; a missing `/inner` means an empty inner shape.
pub fn parse_skew(s: &str) -> Result<(StrictPartition, StrictPartition)> {
    match s.split_once('/') {
        Some((outer, inner)) => Ok((outer.trim().parse()?, inner.trim().parse()?)),
        None => Ok((s.trim().parse()?, StrictPartition::empty())),
    }
}

/// All strict partitions of `n`, in decreasing lexicographic order.
pub fn strict_partitions_of(n: u32) -> Vec<StrictPartition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if remaining == 0 {
            out.push(StrictPartition(prefix.clone()));
            return;
        }
        let mut p = remaining.min(max);
        while p >= 1 {
            prefix.push(p);
            rec(remaining - p, p.saturating_sub(1), prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    rec(n, n, &mut prefix, &mut out);
    out
}

/// All strict partitions of size at most `n`, ordered by size then
/// decreasing lexicographically.
pub fn strict_partitions_up_to(n: u32) -> Vec<StrictPartition> {
    (0..=n).flat_map(strict_partitions_of).collect()
}

impl StrictPartition {
    /// All strict partitions contained in `self`, ordered by size then
    /// decreasing lexicographically.
    pub fn sub_partitions(&self) -> Vec<StrictPartition> {
        strict_partitions_up_to(self.size() as u32)
            .into_iter()
            .filter(|mu| self.contains(mu))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(StrictPartition::new(vec![4, 3, 2]).is_ok());
        assert!(StrictPartition::new(vec![3, 3]).is_err());
        assert!(StrictPartition::new(vec![3, 0]).is_err());
        assert!(StrictPartition::new(vec![2, 3]).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p("432").parts(), &[4, 3, 2]);
        assert_eq!(p("432").to_string(), "432");
        assert_eq!(p("[10,4,3]").to_string(), "[10,4,3]");
        assert_eq!(p("[]"), StrictPartition::empty());
        assert_eq!(StrictPartition::empty().to_string(), "[]");
        let (l, m) = parse_skew("865321/431").unwrap();
        assert_eq!(l.parts(), &[8, 6, 5, 3, 2, 1]);
        assert_eq!(m.parts(), &[4, 3, 1]);
        let (l, m) = parse_skew("42").unwrap();
        assert_eq!(l.parts(), &[4, 2]);
        assert!(m.is_empty());
    }

    #[test]
    fn diagrams_and_columns() {
        let l = p("432");
        assert_eq!(
            l.diagram(DiagramKind::B),
            vec![
                Cell::new(1, 1),
                Cell::new(1, 2),
                Cell::new(1, 3),
                Cell::new(1, 4),
                Cell::new(2, 2),
                Cell::new(2, 3),
                Cell::new(2, 4),
                Cell::new(3, 3),
                Cell::new(3, 4),
            ]
        );
        assert_eq!(
            l.diagram(DiagramKind::D),
            vec![
                Cell::new(1, 2),
                Cell::new(1, 3),
                Cell::new(1, 4),
                Cell::new(1, 5),
                Cell::new(2, 3),
                Cell::new(2, 4),
                Cell::new(2, 5),
                Cell::new(3, 4),
                Cell::new(3, 5),
            ]
        );
        let cols: Vec<u32> = (1..=6).map(|j| l.col_len(j)).collect();
        assert_eq!(cols, vec![1, 2, 3, 3, 0, 0]);
        // Column prefixes: column j of the B diagram is rows 1..=col_len(j).
        for j in 1..=6 {
            for i in 1..=4 {
                assert_eq!(
                    l.has_cell(DiagramKind::B, Cell::new(i, j)),
                    i <= l.col_len(j),
                    "cell ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn corners_and_outer_cells() {
        let l = p("432");
        assert_eq!(l.corners(), vec![Cell::new(3, 4)]);
        assert_eq!(
            l.outer_cells(),
            vec![Cell::new(1, 5), Cell::new(4, 4)]
        );
        let m = p("42");
        assert_eq!(m.corners(), vec![Cell::new(1, 4), Cell::new(2, 3)]);
        assert_eq!(
            m.outer_cells(),
            vec![Cell::new(1, 5), Cell::new(2, 4), Cell::new(3, 3)]
        );
        assert_eq!(StrictPartition::empty().outer_cells(), vec![Cell::new(1, 1)]);
        assert_eq!(StrictPartition::empty().corners(), Vec::<Cell>::new());
    }

    #[test]
    fn covers_within_lists_additions_in_decreasing_order() {
        let l = p("432");
        let covers = l.covers_within(&p("2"));
        assert_eq!(covers, vec![p("3"), p("21")]);
        let covers = l.covers_within(&l);
        assert!(covers.is_empty());
        assert_eq!(l.covers_within(&StrictPartition::empty()), vec![p("1")]);
    }

    #[test]
    fn x_vars() {
        let l = p("432");
        let xb: Vec<i64> = (1..=6).map(|i| l.x_var(DiagramKind::B, i)).collect();
        assert_eq!(xb, vec![4, 3, 2, -1, -5, -6]);
        let xd: Vec<i64> = (1..=6).map(|i| l.x_var(DiagramKind::D, i)).collect();
        assert_eq!(xd, vec![4, 3, 2, 0, -1, -5]);
        // The index just past the last row always carries 0 in type D.
        for s in ["1", "21", "6532", "865321"] {
            let l = p(s);
            assert_eq!(l.x_var(DiagramKind::D, l.len() + 1), 0);
        }
    }

    #[test]
    fn hooks_by_cells_match_variable_sums() {
        for s in ["6532", "432", "865321", "1", "21"] {
            let l = p(s);
            for kind in DiagramKind::BOTH {
                for cell in l.diagram(kind) {
                    let h = l.hook_length(kind, cell).unwrap() as i64;
                    let expect = if kind == DiagramKind::B && cell.row == cell.col {
                        l.x_var(kind, cell.row)
                    } else {
                        l.x_var(kind, cell.row) + l.x_var(kind, cell.col)
                    };
                    assert_eq!(h, expect, "{s} {kind} {cell}");
                }
            }
        }
    }

    #[test]
    fn hook_multisets_agree_between_kinds() {
        for s in ["6532", "432", "865321", "42", "1"] {
            let l = p(s);
            let mut b: Vec<u64> = l
                .diagram(DiagramKind::B)
                .into_iter()
                .map(|c| l.hook_length(DiagramKind::B, c).unwrap())
                .collect();
            let mut d: Vec<u64> = l
                .diagram(DiagramKind::D)
                .into_iter()
                .map(|c| l.hook_length(DiagramKind::D, c).unwrap())
                .collect();
            b.sort_unstable();
            d.sort_unstable();
            assert_eq!(b, d, "{s}");
        }
    }

    #[test]
    fn doubled_cell_in_type_b_hooks() {
        let l = p("6532");
        // Hook of (1,2): arm in row 1, column 2 down to row 2, then row 2,
        // with (2,2) contributing twice.
        let cells = l.hook_cells(DiagramKind::B, Cell::new(1, 2)).unwrap();
        let doubled = cells.iter().filter(|&&c| c == Cell::new(2, 2)).count();
        assert_eq!(doubled, 2);
        assert_eq!(cells.len() as i64, 6 + 5);
        // Type D never doubles.
        for cell in l.diagram(DiagramKind::D) {
            let cells = l.hook_cells(DiagramKind::D, cell).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for c in &cells {
                assert!(seen.insert(*c), "duplicate {c} in D hook of {cell}");
            }
        }
    }

    #[test]
    fn w_sets() {
        let l = p("865321");
        let m = p("431");
        let wb: Vec<u32> = l.w_set(DiagramKind::B, &m).into_iter().collect();
        assert_eq!(wb, vec![1, 2, 3, 5, 7]);
        let wd: Vec<u32> = l.w_set(DiagramKind::D, &m).into_iter().collect();
        assert_eq!(wd, vec![1, 2, 3, 5, 7, 8]);
        let l = p("432");
        let m = p("2");
        for kind in DiagramKind::BOTH {
            let w: Vec<u32> = l.w_set(kind, &m).into_iter().collect();
            assert_eq!(w, vec![1, 2], "{kind}");
        }
    }

    #[test]
    fn w_set_sums_skew_size() {
        // Also holds without containment.
        let cases = [("865321", "431"), ("432", "2"), ("1", "[10]"), ("54321", "21")];
        for (ls, ms) in cases {
            let l = p(ls);
            let m = p(ms);
            let skew = l.size() as i64 - m.size() as i64;
            for kind in DiagramKind::BOTH {
                let total: i64 = l
                    .w_set(kind, &m)
                    .iter()
                    .map(|&k| l.x_var(kind, k))
                    .sum();
                assert_eq!(total, skew, "{ls}/{ms} {kind}");
            }
        }
    }

    #[test]
    fn w_set_within_universe_under_containment() {
        let l = p("5431");
        for m in l.sub_partitions() {
            for kind in DiagramKind::BOTH {
                assert!(l.w_set(kind, &m).is_subset(&l.w_universe()));
            }
        }
    }

    #[test]
    fn partition_generators() {
        let of6 = strict_partitions_of(6);
        let shown: Vec<String> = of6.iter().map(|q| q.to_string()).collect();
        assert_eq!(shown, vec!["6", "51", "42", "321"]);
        assert_eq!(strict_partitions_up_to(0).len(), 1);
        let subs = p("321").sub_partitions();
        let shown: Vec<String> = subs.iter().map(|q| q.to_string()).collect();
        assert_eq!(
            shown,
            vec!["[]", "1", "2", "3", "21", "31", "32", "321"]
        );
    }

    #[test]
    fn serde_formats() {
        let l = p("432");
        assert_eq!(serde_json::to_string(&l).unwrap(), "[4,3,2]");
        let back: StrictPartition = serde_json::from_str("[4,3,2]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<StrictPartition>("[3,3]").is_err());
        let c = Cell::new(2, 5);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[2,5]");
        assert_eq!(serde_json::to_string(&DiagramKind::D).unwrap(), "\"D\"");
    }
}
