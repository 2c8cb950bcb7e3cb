//! Bicolored tableaux: the entries of a move tableau together with a
//! black/red color on each cell. Black cells weigh by row index plus entry,
//! red cells by column index plus entry, so the pair records one monomial of
//! the hook product attached to an excited diagram.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::excited::{enumerate_excited, MoveTableau};
use crate::poly::Monomial;
use crate::shapes::{Cell, DiagramKind, StrictPartition};

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Color {
    #[serde(rename = "b")]
    Black,
    #[serde(rename = "r")]
    Red,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Black => Ok(()),
            Color::Red => write!(f, "r"),
        }
    }
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct ColoredEntry {
    #[serde(rename = "v")]
    pub value: u32,
    #[serde(rename = "c")]
    pub color: Color,
}

impl ColoredEntry {
    pub fn black(value: u32) -> Self {
        ColoredEntry { value, color: Color::Black }
    }

    pub fn red(value: u32) -> Self {
        ColoredEntry { value, color: Color::Red }
    }

    /// The index of the variable this entry contributes at `cell`.
    pub fn weight_index(&self, cell: Cell) -> u32 {
        match self.color {
            Color::Black => cell.row + self.value,
            Color::Red => cell.col + self.value,
        }
    }
}

impl fmt::Display for ColoredEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.color, self.value)
    }
}

/// A move tableau with colors. In type B diagonal cells are always black; in
/// type D diagonal cells carry even values and either color.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BicoloredTableauData")]
pub struct BicoloredTableau {
    pub shape: StrictPartition,
    pub kind: DiagramKind,
    rows: Vec<Vec<ColoredEntry>>,
}

#[derive(Deserialize)]
struct BicoloredTableauData {
    shape: StrictPartition,
    kind: DiagramKind,
    rows: Vec<Vec<ColoredEntry>>,
}

impl TryFrom<BicoloredTableauData> for BicoloredTableau {
    type Error = Error;

    fn try_from(data: BicoloredTableauData) -> Result<Self> {
        BicoloredTableau::new(data.shape, data.kind, data.rows)
    }
}

impl BicoloredTableau {
    pub fn new(
        shape: StrictPartition,
        kind: DiagramKind,
        rows: Vec<Vec<ColoredEntry>>,
    ) -> Result<Self> {
        let values: Vec<Vec<u32>> = rows
            .iter()
            .map(|row| row.iter().map(|e| e.value).collect())
            .collect();
        MoveTableau::new(shape.clone(), kind, values)?;
        if kind == DiagramKind::B {
            for (r, row) in rows.iter().enumerate() {
                if row.first().is_some_and(|e| e.color == Color::Red) {
                    return Err(Error::InvalidTableau(format!(
                        "diagonal cell in row {} is red",
                        r + 1
                    )));
                }
            }
        }
        Ok(BicoloredTableau { shape, kind, rows })
    }

    pub fn empty(kind: DiagramKind) -> Self {
        BicoloredTableau {
            shape: StrictPartition::empty(),
            kind,
            rows: Vec::new(),
        }
    }

    pub fn rows(&self) -> &[Vec<ColoredEntry>] {
        &self.rows
    }

    pub fn size(&self) -> u64 {
        self.shape.size()
    }

    pub fn entry(&self, cell: Cell) -> Option<ColoredEntry> {
        if !self.shape.has_cell(self.kind, cell) {
            return None;
        }
        let idx = (cell.col - self.kind.row_start(cell.row)) as usize;
        Some(self.rows[cell.row as usize - 1][idx])
    }

    /// Replaces the entry at an existing cell without structural checks;
    /// used by the insertion dynamics, which maintain validity on their own.
    pub(crate) fn set_entry(&mut self, cell: Cell, e: ColoredEntry) {
        debug_assert!(self.shape.has_cell(self.kind, cell));
        let idx = (cell.col - self.kind.row_start(cell.row)) as usize;
        self.rows[cell.row as usize - 1][idx] = e;
    }

    /// The underlying move tableau.
    pub fn move_tableau(&self) -> MoveTableau {
        let values = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| e.value).collect())
            .collect();
        MoveTableau::new(self.shape.clone(), self.kind, values)
            .expect("entries stay structurally valid")
    }

    /// Whether the underlying move tableau fits inside `lambda`. Colors play
    /// no part in membership.
    pub fn is_member(&self, lambda: &StrictPartition) -> bool {
        self.move_tableau().is_valid_for_at_corners(lambda)
    }

    /// Product over all cells of the variable selected by color and entry.
    pub fn weight(&self) -> Monomial {
        let mut m = Monomial::one();
        for i in 1..=self.shape.len() {
            for j in self.kind.row_start(i)..=self.shape.row_end(self.kind, i).unwrap() {
                let cell = Cell::new(i, j);
                m = m * Monomial::var(self.entry(cell).unwrap().weight_index(cell));
            }
        }
        m
    }

    /// Extends the shape by one cell in `row` holding `e`.
    pub fn with_added_cell(&self, row: u32, e: ColoredEntry) -> Result<Self> {
        let shape = self.shape.with_cell_added(row)?;
        let mut rows = self.rows.clone();
        if row as usize == rows.len() + 1 {
            rows.push(vec![e]);
        } else {
            rows[row as usize - 1].push(e);
        }
        Ok(BicoloredTableau { shape, kind: self.kind, rows })
    }

    /// Removes the last cell of `row`, returning the shrunk tableau and the
    /// removed entry.
    pub fn with_removed_cell(&self, row: u32) -> Result<(Self, ColoredEntry)> {
        let shape = self.shape.with_cell_removed(row)?;
        let mut rows = self.rows.clone();
        let e = rows[row as usize - 1].pop().expect("row is nonempty");
        if rows[row as usize - 1].is_empty() {
            rows.pop();
        }
        Ok((BicoloredTableau { shape, kind: self.kind, rows }, e))
    }

    /// Parses the compact form produced by [`Display`](fmt::Display): rows
    /// separated by `/`, entries like `0` or `r2`. The shape is inferred
    /// from the row lengths.
    pub fn from_compact(kind: DiagramKind, s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut parts = Vec::new();
        for row in s.split('/') {
            let mut entries = Vec::new();
            for tok in row.split_whitespace() {
                let (color, digits) = match tok.strip_prefix('r') {
                    Some(rest) => (Color::Red, rest),
                    None => (Color::Black, tok),
                };
                let value = digits
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(tok.to_string(), "colored entry"))?;
                entries.push(ColoredEntry { value, color });
            }
            if entries.is_empty() {
                return Err(Error::Parse(s.to_string(), "bicolored tableau"));
            }
            parts.push(entries.len() as u32);
            rows.push(entries);
        }
        BicoloredTableau::new(StrictPartition::new(parts)?, kind, rows)
    }
}

impl fmt::Display for BicoloredTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            for (idx, e) in row.iter().enumerate() {
                if idx > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// All bicolored tableaux of `mu` whose move tableau fits inside `lambda`.
/// For each excited placement the colorings run in binary-counter order over
/// the colorable cells (row-major, last cell changing fastest, black before
/// red), so the output is deterministic.
pub fn enumerate_bicolored(
    mu: &StrictPartition,
    lambda: &StrictPartition,
    kind: DiagramKind,
) -> Vec<BicoloredTableau> {
    let mut out = Vec::new();
    for d in enumerate_excited(lambda, mu, kind) {
        let t = d.to_move_tableau().expect("excited diagrams convert");
        let colorable: Vec<(usize, usize)> = (0..t.rows().len())
            .flat_map(|r| {
                let skip = usize::from(kind == DiagramKind::B);
                (skip..t.rows()[r].len()).map(move |c| (r, c))
            })
            .collect();
        let base: Vec<Vec<ColoredEntry>> = t
            .rows()
            .iter()
            .map(|row| row.iter().map(|&v| ColoredEntry::black(v)).collect())
            .collect();
        let n = colorable.len();
        for word in 0u64..(1u64 << n) {
            let mut rows = base.clone();
            for (pos, &(r, c)) in colorable.iter().enumerate() {
                if word >> (n - 1 - pos) & 1 == 1 {
                    rows[r][c].color = Color::Red;
                }
            }
            out.push(BicoloredTableau {
                shape: mu.clone(),
                kind,
                rows,
            });
        }
    }
    out
}
