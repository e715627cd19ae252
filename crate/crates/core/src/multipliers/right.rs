//! Right multiplication of a normal form by a generator.
//!
//! Inserting `γ` into a tableau touches the columns from right to left: the
//! letter displaced from row `m` enters row `m + 1` weakly to the left of
//! where it left. The transducer therefore reads the reversed normal form,
//! one column at a time, carrying the letter `η` to be placed and the row
//! `m` it is headed for. Whether `η` settles in the current column depends on
//! the column to its left, which has not been read yet; the transducer
//! guesses it and checks the guess on the next symbol.

use crate::automata::{StateId, Transducer};
use crate::column::Column;
use crate::error::Result;
use crate::multipliers::Builder;
use crate::word::{Letter, Rank};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum State {
    Start,
    /// The next input must be `expect`; `eta` is bound for row `m` of it or
    /// of some column further left.
    Seeking {
        m: usize,
        eta: Letter,
        expect: Column,
    },
    /// Insertion is over; the next input must be `expect`.
    Verify(Column),
    /// Insertion is over; copy the remaining columns, each `⪰` the last.
    Copy(Column),
    End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// `eta` lands further left, in row `m`.
    HandOver {
        m: usize,
        eta: Letter,
    },
    Done,
    /// The guessed left neighbour is inconsistent with the input.
    Invalid,
}

/// Schensted insertion of `eta` into row `m`, restricted to the column `cur`
/// and its left neighbour `left` (`None` if `cur` is the first column).
/// Returns the new `cur` and how the insertion continues. Rows that received
/// a letter in `cur` are pushed to `rows`.
pub(crate) fn cascade(
    left: Option<Column>,
    mut cur: Column,
    mut m: usize,
    mut eta: Letter,
    rows: &mut Vec<usize>,
) -> (Column, Outcome) {
    let left_exceeds = |m: usize, eta: Letter| match left {
        Some(l) => l.from_bottom(m).is_none_or(|x| x > eta),
        None => false,
    };
    loop {
        let below_ok = m == 1 || cur.from_bottom(m - 1).is_some_and(|x| x < eta);
        match cur.from_bottom(m) {
            Some(x) if x > eta && below_ok => {
                if left_exceeds(m, eta) {
                    return (cur, Outcome::HandOver { m, eta });
                }
                cur = cur.replace(x, eta);
                rows.push(m);
                eta = x;
                m += 1;
            }
            None if cur.len() + 1 == m && below_ok => {
                if left_exceeds(m, eta) {
                    return (cur, Outcome::HandOver { m, eta });
                }
                rows.push(m);
                return (cur.with_letter(eta), Outcome::Done);
            }
            _ => return (cur, Outcome::Invalid),
        }
    }
}

/// The multiplier over reversed words: accepts `(rev u, rev v)` for
/// `u ∈ K` and `v` the normal form of `u·c_γ`.
pub fn reversed_right_multiplier(rank: Rank, gamma: Letter) -> Result<Transducer<Column, Column>> {
    rank.check_word(&[gamma])?;
    let cols = Column::all(rank);
    let mut b = Builder::new(&cols, |s: &State| matches!(s, State::Copy(_) | State::End));
    let start = b.id(State::Start);
    b.t.add_initial(start);
    let c_gamma = Column::singleton(gamma);
    while let Some((from, state)) = b.next() {
        match state {
            State::Start => {
                let end = b.id(State::End);
                b.t.add_edge(from, None, vec![c_gamma], end);
                for &a in &cols {
                    if a.bottom() <= gamma {
                        let to = b.id(State::Copy(a));
                        b.t.add_edge(from, Some(a), vec![c_gamma, a], to);
                    } else {
                        guesses(&mut b, &cols, from, a, 1, gamma);
                    }
                }
            }
            State::Seeking { m, eta, expect } => guesses(&mut b, &cols, from, expect, m, eta),
            State::Verify(g) => {
                let to = b.id(State::Copy(g));
                b.t.add_edge(from, Some(g), vec![g], to);
            }
            State::Copy(prev) => {
                for &c in cols.iter().filter(|c| c.column_ge(prev)) {
                    let to = b.id(State::Copy(c));
                    b.t.add_edge(from, Some(c), vec![c], to);
                }
            }
            State::End => {}
        }
    }
    Ok(b.t.trim())
}

/// Edges for reading `cur` with `eta` bound for row `m`, one per guess of
/// the column to the left of `cur`.
fn guesses(b: &mut Builder<State>, cols: &[Column], from: StateId, cur: Column, m: usize, eta: Letter) {
    let lefts = std::iter::once(None).chain(cols.iter().filter(|c| c.column_ge(cur)).map(|&c| Some(c)));
    for left in lefts {
        let (out, outcome) = cascade(left, cur, m, eta, &mut Vec::new());
        let next = match (outcome, left) {
            (Outcome::Done, None) => State::End,
            (Outcome::Done, Some(g)) => State::Verify(g),
            (Outcome::HandOver { m, eta }, Some(g)) => State::Seeking { m, eta, expect: g },
            _ => continue,
        };
        let to = b.id(next);
        b.t.add_edge(from, Some(cur), vec![out], to);
    }
}

/// Transducer for `K_{c_γ} = {(u, v) ∈ K×K : u·c_γ = v in the monoid}`.
pub fn right_multiplier(rank: Rank, gamma: Letter) -> Result<Transducer<Column, Column>> {
    Ok(reversed_right_multiplier(rank, gamma)?.reversed().trim())
}

/// A cell written while multiplying on the right: row 1 is the bottom row,
/// column 1 the leftmost column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub column: usize,
}

/// Runs the insertion the way the transducer does, column by column from the
/// right, but with the left neighbours known. Returns the product and the
/// cells written, in order. `u` must be a normal form.
pub fn right_multiply_traced(u: &[Column], gamma: Letter) -> (Vec<Column>, Vec<Cell>) {
    let mut out = u.to_vec();
    let Some(&last) = u.last() else {
        return (vec![Column::singleton(gamma)], vec![Cell { row: 1, column: 1 }]);
    };
    if last.bottom() <= gamma {
        out.push(Column::singleton(gamma));
        return (out, vec![Cell { row: 1, column: u.len() + 1 }]);
    }
    let (mut m, mut eta) = (1, gamma);
    let mut cells = Vec::new();
    for j in (0..u.len()).rev() {
        let left = j.checked_sub(1).map(|i| u[i]);
        let mut rows = Vec::new();
        let (col, outcome) = cascade(left, u[j], m, eta, &mut rows);
        out[j] = col;
        cells.extend(rows.into_iter().map(|row| Cell { row, column: j + 1 }));
        match outcome {
            Outcome::HandOver { m: m2, eta: e2 } => (m, eta) = (m2, e2),
            Outcome::Done => return (out, cells),
            Outcome::Invalid => panic!("input is not a normal form"),
        }
    }
    unreachable!("insertion always settles in the first column")
}
