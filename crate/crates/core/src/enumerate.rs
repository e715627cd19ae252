//! Exhaustive enumeration of small instances, used by the verification
//! sweeps.

use crate::column::Column;
use crate::tableau::Tableau;
use crate::word::{Letter, Rank, Word};

/// All `n^len` words of the given length, in lexicographic order.
pub fn words_of_length(rank: Rank, len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|w| rank.letters().map(move |l| w.concat(&[l]))).collect();
    }
    out
}

/// All words of length at most `max_len`, shortest first.
pub fn words_up_to(rank: Rank, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|len| words_of_length(rank, len)).collect()
}

/// Every tableau with at most `max_cells` cells, as column lists. The order
/// is deterministic: depth first over columns in [`Column::all`] order.
pub fn tableaux_up_to(rank: Rank, max_cells: usize) -> Vec<Tableau> {
    fn extend(cols: &[Column], current: &mut Vec<Column>, cells: usize, max_cells: usize, out: &mut Vec<Tableau>) {
        out.push(Tableau::from_columns(current.clone()).expect("chained by construction"));
        for &c in cols {
            if cells + c.len() > max_cells {
                continue;
            }
            if current.last().is_some_and(|last| !last.column_ge(c)) {
                continue;
            }
            current.push(c);
            extend(cols, current, cells + c.len(), max_cells, out);
            current.pop();
        }
    }
    let cols = Column::all(rank);
    let mut out = Vec::new();
    extend(&cols, &mut Vec::new(), 0, max_cells, &mut out);
    out
}

/// Column readings of all tableaux with at most `max_cells` cells: the
/// members of the language `L` up to that length.
pub fn column_readings_up_to(rank: Rank, max_cells: usize) -> Vec<Word> {
    tableaux_up_to(rank, max_cells).iter().map(Tableau::column_reading).collect()
}

/// `rank.letters()` as a vector, handy in sweeps.
pub fn letters(rank: Rank) -> Vec<Letter> {
    rank.letters().collect()
}
