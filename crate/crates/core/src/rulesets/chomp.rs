use super::{position_error, Ruleset};
use crate::error::Result;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Cell {
    Poison,
    Black,
    Gray,
}

/// A polychromatic chomp board: a staircase of columns, each listed from the
/// bottom row up. The first cell of the first column is the poison square.
///
/// Only the cells still on the board are stored, so two boards with the same
/// remaining cells are the same position.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChompGrid {
    columns: Vec<Vec<Cell>>,
}

impl ChompGrid {
    pub fn poison_only() -> Self {
        ChompGrid {
            columns: vec![vec![Cell::Poison]],
        }
    }

    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// Cell at 1-based `(row, column)`, rows counted from the bottom.
    pub fn cell(&self, row: usize, column: usize) -> Option<Cell> {
        self.columns.get(column.checked_sub(1)?)?.get(row.checked_sub(1)?).copied()
    }

    /// Black and gray exchanged everywhere.
    pub fn swapped_colors(&self) -> Self {
        let columns = self
            .columns
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&cell| match cell {
                        Cell::Black => Cell::Gray,
                        Cell::Gray => Cell::Black,
                        Cell::Poison => Cell::Poison,
                    })
                    .collect()
            })
            .collect();
        ChompGrid { columns }
    }

    /// Removes the cell at `(row, column)` and everything above or right of it.
    fn chomp(&self, row: usize, column: usize) -> Self {
        let columns = self
            .columns
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k + 1 >= column {
                    c[..c.len().min(row - 1)].to_vec()
                } else {
                    c.clone()
                }
            })
            .filter(|c| !c.is_empty())
            .collect();
        ChompGrid { columns }
    }

    fn bites(&self, color: Cell) -> Vec<ChompGrid> {
        let mut out = Vec::new();
        for (j, col) in self.columns.iter().enumerate() {
            for (i, &cell) in col.iter().enumerate() {
                if cell == color {
                    out.push(self.chomp(i + 1, j + 1));
                }
            }
        }
        out
    }
}

/// Left bites at black squares, Right at gray ones.
#[derive(Clone, Copy, Debug, Default)]
pub struct Chomp;

impl Ruleset for Chomp {
    type Position = ChompGrid;

    fn name(&self) -> &'static str {
        "chomp"
    }

    /// Rows top to bottom, `/`-separated, over `B` and `G`. Every row starts
    /// at column 1 except the bottom one, which starts at column 2 after the
    /// implicit poison square. `""` is the poison square alone.
    fn parse_position(&self, text: &str) -> Result<ChompGrid> {
        let err = |msg: String| position_error("chomp", text, msg);
        let mut rows: Vec<Vec<Cell>> = Vec::new();
        let parts: Vec<&str> = text.split('/').collect();
        for (k, part) in parts.iter().rev().enumerate() {
            let mut row = if k == 0 { vec![Cell::Poison] } else { Vec::new() };
            for c in part.trim().chars() {
                row.push(match c.to_ascii_uppercase() {
                    'B' => Cell::Black,
                    'G' => Cell::Gray,
                    _ => return Err(err(format!("unexpected `{c}`"))),
                });
            }
            if k > 0 {
                if row.is_empty() {
                    return Err(err("empty row above the bottom".into()));
                }
                if row.len() > rows[k - 1].len() {
                    return Err(err(format!("row {} is longer than the row below", k + 1)));
                }
            }
            rows.push(row);
        }
        let width = rows[0].len();
        let columns = (0..width)
            .map(|j| rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        Ok(ChompGrid { columns })
    }

    fn render_position(&self, p: &ChompGrid) -> String {
        let height = p.columns[0].len();
        let mut rows = Vec::with_capacity(height);
        for i in (0..height).rev() {
            let row: String = p
                .columns
                .iter()
                .take_while(|c| c.len() > i)
                .filter_map(|c| match c[i] {
                    Cell::Black => Some('B'),
                    Cell::Gray => Some('G'),
                    Cell::Poison => None,
                })
                .collect();
            rows.push(row);
        }
        rows.join("/")
    }

    fn left_moves(&self, p: &ChompGrid) -> Vec<ChompGrid> {
        p.bites(Cell::Black)
    }

    fn right_moves(&self, p: &ChompGrid) -> Vec<ChompGrid> {
        p.bites(Cell::Gray)
    }
}
