//! Left multiplication of a normal form by a generator: one left-to-right
//! pass that rewrites `c_η c_α` and carries the leftover letter on.

use crate::automata::Transducer;
use crate::column::Column;
use crate::error::Result;
use crate::multipliers::Builder;
use crate::rewriting::{product_columns, ColumnProduct};
use crate::word::{Letter, Rank};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum State {
    /// `η` still has to be multiplied into the rest; `prev` is the last
    /// column read, if any.
    Pending {
        eta: Letter,
        prev: Option<Column>,
    },
    Copy(Column),
    End,
}

/// Transducer for `_{c_γ}K = {(u, v) ∈ K×K : c_γ·u = v in the monoid}`.
pub fn left_multiplier(rank: Rank, gamma: Letter) -> Result<Transducer<Column, Column>> {
    rank.check_word(&[gamma])?;
    let cols = Column::all(rank);
    let mut b = Builder::new(&cols, |s: &State| matches!(s, State::Copy(_) | State::End));
    let start = b.id(State::Pending { eta: gamma, prev: None });
    b.t.add_initial(start);
    while let Some((from, state)) = b.next() {
        match state {
            State::Pending { eta, prev } => {
                let c_eta = Column::singleton(eta);
                let end = b.id(State::End);
                b.t.add_edge(from, None, vec![c_eta], end);
                for &a in cols.iter().filter(|&&a| prev.is_none_or(|p| p.column_ge(a))) {
                    let (out, next) = match product_columns(c_eta, a) {
                        ColumnProduct::Irreducible => (vec![c_eta, a], State::Copy(a)),
                        ColumnProduct::One(z) => (vec![z], State::Copy(a)),
                        ColumnProduct::Two(a2, z) => {
                            assert_eq!(z.len(), 1, "c_{c_eta} c_{a} leaves more than a letter");
                            (vec![a2], State::Pending { eta: z.bottom(), prev: Some(a) })
                        }
                    };
                    let to = b.id(next);
                    b.t.add_edge(from, Some(a), out, to);
                }
            }
            State::Copy(prev) => {
                for &c in cols.iter().filter(|c| prev.column_ge(**c)) {
                    let to = b.id(State::Copy(c));
                    b.t.add_edge(from, Some(c), vec![c], to);
                }
            }
            State::End => {}
        }
    }
    Ok(b.t.trim())
}
