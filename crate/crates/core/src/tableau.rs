//! Semistandard tableaux and Schensted insertion.
//!
//! A [`Tableau`] is stored as its list of columns, left to right, each column
//! `⪰` the next. Row views are computed on demand.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::column::Column;
use crate::error::{Error, Result};
use crate::word::{self, Letter, Word};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    columns: Vec<Column>,
}

#[derive(Deserialize)]
struct RawTableau {
    columns: Vec<Column>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Tableau> {
        Tableau::from_columns(raw.columns)
    }
}

/// One cell write performed by [`Tableau::insert_traced`]: `letter` was
/// placed in `row` (1 is the bottom row) at `column` (1 is the leftmost),
/// displacing `bumped` if the cell was occupied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub row: usize,
    pub column: usize,
    pub letter: Letter,
    pub bumped: Option<Letter>,
}

impl Tableau {
    pub fn empty() -> Tableau {
        Tableau::default()
    }

    /// Builds a tableau from columns, checking that each is `⪰` the next.
    pub fn from_columns(columns: Vec<Column>) -> Result<Tableau> {
        if let Some(p) = columns.windows(2).find(|p| !p[0].column_ge(p[1])) {
            return Err(Error::NotATableau(format!("column {} cannot stand left of column {}", p[0], p[1])));
        }
        Ok(Tableau { columns })
    }

    /// Builds a tableau from rows listed top to bottom.
    pub fn from_rows(rows: &[Word]) -> Result<Tableau> {
        if let Some(r) = rows.iter().find(|r| r.is_empty() || !word::is_row(r)) {
            return Err(Error::NotATableau(format!("`{r}` is not a nonempty row")));
        }
        if let Some(p) = rows.windows(2).find(|p| !word::dominates(&p[0], &p[1])) {
            return Err(Error::NotATableau(format!("row {} does not dominate row {}", p[0], p[1])));
        }
        let bottom_first: Vec<Vec<Letter>> = rows.iter().rev().map(|r| r.letters().to_vec()).collect();
        Ok(Tableau { columns: columns_of_rows(&bottom_first) })
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn num_rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.len())
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Rows listed top to bottom, i.e. in order of domination.
    pub fn rows(&self) -> Vec<Word> {
        self.rows_bottom_first().into_iter().rev().map(Word::from).collect()
    }

    fn rows_bottom_first(&self) -> Vec<Vec<Letter>> {
        (1..=self.num_rows()).map(|r| self.columns.iter().map_while(|c| c.from_bottom(r)).collect()).collect()
    }

    /// Right-multiplies by `letter` using Schensted's row insertion.
    pub fn insert(&self, letter: Letter) -> Tableau {
        let mut rows = self.rows_bottom_first();
        row_insert(&mut rows, letter, |_| {});
        Tableau { columns: columns_of_rows(&rows) }
    }

    /// Like [`Tableau::insert`], also returning every cell write in order.
    pub fn insert_traced(&self, letter: Letter) -> (Tableau, Vec<Placement>) {
        let mut rows = self.rows_bottom_first();
        let mut trace = Vec::new();
        row_insert(&mut rows, letter, |p| trace.push(p));
        (Tableau { columns: columns_of_rows(&rows) }, trace)
    }

    /// Concatenation of the columns, left to right, each read top to bottom.
    pub fn column_reading(&self) -> Word {
        self.columns.iter().flat_map(|c| c.letters()).collect()
    }

    /// Concatenation of the rows, top to bottom. This is the tableau word.
    pub fn row_reading(&self) -> Word {
        self.rows().iter().flat_map(|r| r.letters().iter().copied()).collect()
    }

    /// Planar form: one line per row, top row first, left-justified.
    pub fn planar(&self) -> String {
        let width = self.columns.iter().map(|c| c.top().get().to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|l| format!("{:<width$}", l.get())).collect();
            let _ = writeln!(out, "{}", cells.join(" ").trim_end());
        }
        out
    }
}

/// Schensted insertion on rows stored bottom first.
fn row_insert(rows: &mut Vec<Vec<Letter>>, letter: Letter, mut record: impl FnMut(Placement)) {
    let mut letter = letter;
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&x| x > letter) {
            None => {
                row.push(letter);
                record(Placement { row: r + 1, column: row.len(), letter, bumped: None });
                return;
            }
            Some(j) => {
                let bumped = std::mem::replace(&mut row[j], letter);
                record(Placement { row: r + 1, column: j + 1, letter, bumped: Some(bumped) });
                letter = bumped;
            }
        }
    }
    rows.push(vec![letter]);
    record(Placement { row: rows.len(), column: 1, letter, bumped: None });
}

fn columns_of_rows(rows: &[Vec<Letter>]) -> Vec<Column> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| {
            let mask = rows.iter().map_while(|r| r.get(c)).fold(0u32, |m, l| m | 1 << (l.get() - 1));
            Column::from_mask(mask).expect("column of a nonempty row")
        })
        .collect()
}

/// `P(w)`: the unique tableau equal to `w` in the plactic monoid, built by
/// inserting the letters of `w` one by one into the empty tableau.
pub fn tableau_of_word(word: &[Letter]) -> Tableau {
    let mut rows = Vec::new();
    for &l in word {
        row_insert(&mut rows, l, |_| {});
    }
    Tableau { columns: columns_of_rows(&rows) }
}
