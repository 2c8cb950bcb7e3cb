//! Excited diagrams: placements of an inner shape inside an outer shifted
//! diagram reachable by local excitation moves, together with the tableau
//! encoding that records how far every cell has travelled.

use std::collections::{BTreeSet, VecDeque};

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, DiagramKind, StrictPartition};

/// A set of cells inside the diagram of `lambda` obtained from the diagram of
/// `mu` by excitation moves. Cells are kept sorted row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ExcitedDiagramData")]
pub struct ExcitedDiagram {
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    pub kind: DiagramKind,
    cells: Vec<Cell>,
}

#[derive(Deserialize)]
struct ExcitedDiagramData {
    lambda: StrictPartition,
    mu: StrictPartition,
    kind: DiagramKind,
    cells: Vec<Cell>,
}

impl TryFrom<ExcitedDiagramData> for ExcitedDiagram {
    type Error = Error;

    fn try_from(data: ExcitedDiagramData) -> Result<Self> {
        let mut cells = data.cells;
        cells.sort();
        cells.dedup();
        let d = ExcitedDiagram {
            lambda: data.lambda,
            mu: data.mu,
            kind: data.kind,
            cells,
        };
        if d.to_move_tableau()?.to_excited(&d.lambda)? != d {
            return Err(Error::InvalidTableau("cells are not an excited placement".into()));
        }
        Ok(d)
    }
}

impl ExcitedDiagram {
    /// The unexcited placement: the diagram of `mu` itself.
    pub fn initial(
        lambda: StrictPartition,
        mu: StrictPartition,
        kind: DiagramKind,
    ) -> Result<Self> {
        if !lambda.contains(&mu) {
            return Err(Error::OutOfRange(format!(
                "{mu} does not fit inside {lambda}"
            )));
        }
        let cells = mu.diagram(kind);
        Ok(ExcitedDiagram { lambda, mu, kind, cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    fn absent(&self, row: u32, col: u32) -> bool {
        !self.contains_cell(Cell::new(row, col))
    }

    /// Target of the excitation move starting at `from`, if the move is legal.
    fn move_target(&self, from: Cell) -> Option<Cell> {
        let (i, j) = (from.row, from.col);
        if self.kind == DiagramKind::D && self.kind.is_diagonal(from) {
            let to = Cell::new(i + 2, j + 2);
            let clear = self.absent(i, j + 1)
                && self.absent(i, j + 2)
                && self.absent(i + 1, j + 1)
                && self.absent(i + 1, j + 2)
                && self.absent(i + 2, j + 2);
            (clear && self.lambda.has_cell(self.kind, to)).then_some(to)
        } else {
            let to = Cell::new(i + 1, j + 1);
            let clear = self.absent(i + 1, j)
                && self.absent(i, j + 1)
                && self.absent(i + 1, j + 1);
            (clear && self.lambda.has_cell(self.kind, to)).then_some(to)
        }
    }

    /// Legal excitation moves as `(from, to)` pairs, ordered by source cell.
    pub fn legal_moves(&self) -> Vec<(Cell, Cell)> {
        self.cells
            .iter()
            .filter_map(|&c| self.move_target(c).map(|t| (c, t)))
            .collect()
    }

    pub fn apply_move(&self, from: Cell, to: Cell) -> Result<Self> {
        if self.move_target(from) != Some(to) {
            return Err(Error::OutOfRange(format!(
                "no legal move {from} -> {to}"
            )));
        }
        let mut cells = self.cells.clone();
        let pos = cells.binary_search(&from).expect("source cell present");
        cells.remove(pos);
        let pos = cells.binary_search(&to).unwrap_err();
        cells.insert(pos, to);
        Ok(ExcitedDiagram { cells, ..self.clone() })
    }

    pub fn successors(&self) -> Vec<Self> {
        self.legal_moves()
            .into_iter()
            .map(|(f, t)| self.apply_move(f, t).expect("move is legal"))
            .collect()
    }

    /// Product of the hook lengths of `lambda` over the cells of the diagram.
    pub fn hook_product(&self) -> BigUint {
        self.cells
            .iter()
            .map(|&c| self.lambda.hook_length(self.kind, c).expect("cell inside"))
            .product()
    }

    /// Entry tableau of the diagram: cells keep their content diagonal, so
    /// matching the cells of `mu` and of the diagram along each diagonal in
    /// row order gives the rows travelled by every cell.
    pub fn to_move_tableau(&self) -> Result<MoveTableau> {
        let mut rows: Vec<Vec<u32>> = (1..=self.mu.len())
            .map(|i| vec![0; self.mu.part(i) as usize])
            .collect();
        let contents: BTreeSet<i64> = self.mu.diagram(self.kind).iter().map(Cell::content).collect();
        for c in contents {
            let origins: Vec<Cell> = self
                .mu
                .diagram(self.kind)
                .into_iter()
                .filter(|u| u.content() == c)
                .collect();
            let images: Vec<Cell> = self
                .cells
                .iter()
                .copied()
                .filter(|u| u.content() == c)
                .collect();
            if origins.len() != images.len() {
                return Err(Error::Invariant(format!(
                    "diagonal {c} has {} origins but {} cells",
                    origins.len(),
                    images.len()
                )));
            }
            for (o, m) in origins.iter().zip(&images) {
                let shift = m.row.checked_sub(o.row).ok_or_else(|| {
                    Error::Invariant(format!("cell {m} above its origin {o}"))
                })?;
                rows[o.row as usize - 1][(o.col - self.kind.row_start(o.row)) as usize] = shift;
            }
        }
        MoveTableau::new(self.mu.clone(), self.kind, rows)
    }
}

/// All excited diagrams of `lambda / mu`, sorted by their cell lists. Empty
/// when `mu` does not fit inside `lambda`.
pub fn enumerate_excited(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: DiagramKind,
) -> Vec<ExcitedDiagram> {
    let Ok(start) = ExcitedDiagram::initial(lambda.clone(), mu.clone(), kind) else {
        return Vec::new();
    };
    let mut seen: BTreeSet<Vec<Cell>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.cells.clone());
    queue.push_back(start.clone());
    let mut out = Vec::new();
    while let Some(d) = queue.pop_front() {
        out.push(d.clone());
        for next in d.successors() {
            if seen.insert(next.cells.clone()) {
                queue.push_back(next);
            }
        }
    }
    out.sort_by(|a, b| a.cells.cmp(&b.cells));
    out
}

/// Per-cell row shifts of an excited diagram, arranged like the diagram of
/// `shape`. Entries increase weakly along rows and columns; in type D the
/// leading entry of every row is even because diagonal cells travel two rows
/// per move.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MoveTableauData")]
pub struct MoveTableau {
    pub shape: StrictPartition,
    pub kind: DiagramKind,
    rows: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct MoveTableauData {
    shape: StrictPartition,
    kind: DiagramKind,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<MoveTableauData> for MoveTableau {
    type Error = Error;

    fn try_from(data: MoveTableauData) -> Result<Self> {
        MoveTableau::new(data.shape, data.kind, data.rows)
    }
}

impl MoveTableau {
    pub fn new(shape: StrictPartition, kind: DiagramKind, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.len() as usize
            || rows
                .iter()
                .enumerate()
                .any(|(r, row)| row.len() != shape.part(r as u32 + 1) as usize)
        {
            return Err(Error::InvalidTableau("row lengths do not match shape".into()));
        }
        let t = MoveTableau { shape, kind, rows };
        t.check_structure()?;
        Ok(t)
    }

    pub fn zero(shape: StrictPartition, kind: DiagramKind) -> Self {
        let rows = (1..=shape.len())
            .map(|i| vec![0; shape.part(i) as usize])
            .collect();
        MoveTableau { shape, kind, rows }
    }

    fn check_structure(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {} decreases", r + 1)));
            }
            if self.kind == DiagramKind::D && !row.is_empty() && row[0] % 2 != 0 {
                return Err(Error::InvalidTableau(format!(
                    "diagonal entry in row {} is odd",
                    r + 1
                )));
            }
        }
        for r in 0..self.rows.len().saturating_sub(1) {
            for p in 0..self.rows[r + 1].len() {
                // cell (r+2, col) sits under (r+1, col), which is index p+1
                // in row r because rows shift right by one.
                if let Some(&above) = self.rows[r].get(p + 1) {
                    if above > self.rows[r + 1][p] {
                        return Err(Error::InvalidTableau(format!(
                            "column decreases between rows {} and {}",
                            r + 1,
                            r + 2
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at a cell of the diagram of `shape`.
    pub fn entry(&self, cell: Cell) -> Option<u32> {
        if !self.shape.has_cell(self.kind, cell) {
            return None;
        }
        let idx = (cell.col - self.kind.row_start(cell.row)) as usize;
        Some(self.rows[cell.row as usize - 1][idx])
    }

    /// Where each cell of `shape` ends up, sorted row-major.
    pub fn image_cells(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .shape
            .diagram(self.kind)
            .into_iter()
            .map(|c| {
                let s = self.entry(c).unwrap();
                Cell::new(c.row + s, c.col + s)
            })
            .collect();
        cells.sort();
        cells
    }

    /// Whether every cell's image lies inside the diagram of `lambda`.
    pub fn is_valid_for(&self, lambda: &StrictPartition) -> bool {
        self.shape.diagram(self.kind).into_iter().all(|c| {
            let s = self.entry(c).unwrap();
            lambda.has_cell(self.kind, Cell::new(c.row + s, c.col + s))
        })
    }

    /// Same as [`is_valid_for`](Self::is_valid_for), checked only at the
    /// removable corners of `shape`.
    pub fn is_valid_for_at_corners(&self, lambda: &StrictPartition) -> bool {
        self.shape.corners_for(self.kind).into_iter().all(|c| {
            let s = self.entry(c).unwrap();
            lambda.has_cell(self.kind, Cell::new(c.row + s, c.col + s))
        })
    }

    pub fn to_excited(&self, lambda: &StrictPartition) -> Result<ExcitedDiagram> {
        if !self.is_valid_for(lambda) {
            return Err(Error::InvalidTableau(format!(
                "tableau does not fit inside {lambda}"
            )));
        }
        Ok(ExcitedDiagram {
            lambda: lambda.clone(),
            mu: self.shape.clone(),
            kind: self.kind,
            cells: self.image_cells(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    fn cellset(pairs: &[(u32, u32)]) -> Vec<Cell> {
        pairs.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn enumeration_of_432_over_2() {
        let l = p("432");
        let m = p("2");
        let b = enumerate_excited(&l, &m, DiagramKind::B);
        let got: Vec<Vec<Cell>> = b.iter().map(|d| d.cells.clone()).collect();
        assert_eq!(
            got,
            vec![
                cellset(&[(1, 1), (1, 2)]),
                cellset(&[(1, 1), (2, 3)]),
                cellset(&[(1, 1), (3, 4)]),
                cellset(&[(2, 2), (2, 3)]),
                cellset(&[(2, 2), (3, 4)]),
                cellset(&[(3, 3), (3, 4)]),
            ]
        );
        let d = enumerate_excited(&l, &m, DiagramKind::D);
        let got: Vec<Vec<Cell>> = d.iter().map(|x| x.cells.clone()).collect();
        assert_eq!(
            got,
            vec![
                cellset(&[(1, 2), (1, 3)]),
                cellset(&[(1, 2), (2, 4)]),
                cellset(&[(1, 2), (3, 5)]),
                cellset(&[(3, 4), (3, 5)]),
            ]
        );
    }

    #[test]
    fn initial_d_diagram_has_one_move() {
        let start =
            ExcitedDiagram::initial(p("432"), p("2"), DiagramKind::D).unwrap();
        let moves = start.legal_moves();
        assert_eq!(moves, vec![(Cell::new(1, 3), Cell::new(2, 4))]);
    }

    #[test]
    fn enumeration_counts_for_865321_over_431() {
        let l = p("865321");
        let m = p("431");
        assert_eq!(enumerate_excited(&l, &m, DiagramKind::B).len(), 156);
        assert_eq!(enumerate_excited(&l, &m, DiagramKind::D).len(), 37);
    }

    #[test]
    fn degenerate_enumerations() {
        let l = p("432");
        assert_eq!(enumerate_excited(&l, &l, DiagramKind::B).len(), 1);
        assert_eq!(
            enumerate_excited(&l, &StrictPartition::empty(), DiagramKind::D).len(),
            1
        );
        assert!(enumerate_excited(&p("21"), &p("31"), DiagramKind::B).is_empty());
    }

    #[test]
    fn move_tableau_round_trip() {
        let l = p("865321");
        let m = p("431");
        for kind in DiagramKind::BOTH {
            for d in enumerate_excited(&l, &m, kind) {
                let t = d.to_move_tableau().unwrap();
                assert!(t.is_valid_for(&l));
                assert!(t.is_valid_for_at_corners(&l));
                assert_eq!(t.to_excited(&l).unwrap(), d);
            }
        }
    }

    #[test]
    fn move_tableau_entries_for_known_diagrams() {
        let l = p("865321");
        let m = p("431");
        let d = ExcitedDiagram {
            lambda: l.clone(),
            mu: m.clone(),
            kind: DiagramKind::B,
            cells: cellset(&[(1, 1), (1, 2), (2, 4), (2, 5), (3, 3), (3, 4), (4, 6), (5, 5)]),
        };
        let t = d.to_move_tableau().unwrap();
        assert_eq!(t.rows(), &[vec![0, 0, 1, 1], vec![1, 1, 2], vec![2]]);
        assert_eq!(t.to_excited(&l).unwrap(), d);
        let d = ExcitedDiagram {
            lambda: l.clone(),
            mu: m.clone(),
            kind: DiagramKind::D,
            cells: cellset(&[(1, 2), (1, 3), (2, 3), (2, 5), (2, 6), (3, 5), (4, 7), (5, 6)]),
        };
        let t = d.to_move_tableau().unwrap();
        assert_eq!(t.rows(), &[vec![0, 0, 1, 1], vec![0, 1, 2], vec![2]]);
        assert_eq!(t.to_excited(&l).unwrap(), d);
    }

    #[test]
    fn corner_validity_matches_full_validity() {
        let l = p("5431");
        for m in l.sub_partitions() {
            for kind in DiagramKind::BOTH {
                for d in enumerate_excited(&l, &m, kind) {
                    let t = d.to_move_tableau().unwrap();
                    // Shrink lambda in all ways and compare the two checks.
                    for probe in l.sub_partitions() {
                        assert_eq!(
                            t.is_valid_for(&probe),
                            t.is_valid_for_at_corners(&probe),
                            "{m} {kind} {probe}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn d_diagonal_moves_jump_two_rows() {
        let l = p("5431");
        let m = p("1");
        let ds = enumerate_excited(&l, &m, DiagramKind::D);
        for d in &ds {
            let t = d.to_move_tableau().unwrap();
            assert_eq!(t.rows()[0].len(), 1);
            assert_eq!(t.rows()[0][0] % 2, 0);
        }
        // (1,2) can reach (3,4) and beyond never lands on row 2.
        assert!(ds.iter().all(|d| d.cells()[0].row % 2 == 1));
    }

    #[test]
    fn serde_shape() {
        let t = MoveTableau::new(p("21"), DiagramKind::B, vec![vec![0, 1], vec![1]]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            "{\"shape\":[2,1],\"kind\":\"B\",\"rows\":[[0,1],[1]]}"
        );
        let back: MoveTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
