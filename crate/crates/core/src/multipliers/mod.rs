//! The normal-form languages `K` (over columns) and `L` (over letters), the
//! multiplication transducers, and the padded multiplier automata.
//!
//! The lifted multipliers over `A` are `Q⁻¹ ∘ M ∘ Q` for a multiplier `M`
//! over `C`, where `Q` spells each column symbol out as its letters.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use serde::Serialize;

use crate::automata::{synchronize_with_limit, Direction, Nfa, PairAutomaton, StateId, Transducer};
use crate::column::Column;
use crate::error::{Error, Result};
use crate::rewriting::ColumnWord;
use crate::word::{Letter, Rank, Word};

mod left;
mod right;

pub use left::left_multiplier;
pub use right::{reversed_right_multiplier, right_multiplier, right_multiply_traced, Cell};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Breadth-first numbering of the states of a transducer under
/// construction: states are numbered in the order they are discovered and
/// handed back in the same order.
pub(crate) struct Builder<S> {
    pub t: Transducer<Column, Column>,
    ids: HashMap<S, StateId>,
    queue: VecDeque<S>,
    next: StateId,
    accepting: fn(&S) -> bool,
}

impl<S: Copy + Eq + Hash> Builder<S> {
    pub fn new(cols: &[Column], accepting: fn(&S) -> bool) -> Builder<S> {
        Builder {
            t: Transducer::new(cols.iter().copied(), cols.iter().copied()),
            ids: HashMap::new(),
            queue: VecDeque::new(),
            next: 0,
            accepting,
        }
    }

    pub fn id(&mut self, s: S) -> StateId {
        if let Some(&id) = self.ids.get(&s) {
            return id;
        }
        let id = self.t.add_state((self.accepting)(&s));
        self.ids.insert(s, id);
        self.queue.push_back(s);
        id
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<(StateId, S)> {
        let s = self.queue.pop_front()?;
        self.next += 1;
        Some((self.next - 1, s))
    }
}

/// Acceptor for `K`: words of columns, each `⪰` the next. State 0 is the
/// start; state `i + 1` remembers the `i`-th column of [`Column::all`].
pub fn k_acceptor(rank: Rank) -> Nfa<Column> {
    let cols = Column::all(rank);
    let mut nfa = Nfa::new(cols.iter().copied());
    let start = nfa.add_state(true);
    nfa.add_initial(start);
    for _ in &cols {
        nfa.add_state(true);
    }
    for (j, &b) in cols.iter().enumerate() {
        nfa.add_transition(start, Some(b), j + 1);
        for (i, &a) in cols.iter().enumerate() {
            if a.column_ge(b) {
                nfa.add_transition(i + 1, Some(b), j + 1);
            }
        }
    }
    nfa
}

/// Whether consecutive columns are `⪰`-chained, i.e. the word is in `K`.
pub fn is_in_k(word: &[Column]) -> bool {
    word.windows(2).all(|p| p[0].column_ge(p[1]))
}

/// The relation `Q` and its inverse.
#[derive(Debug, Clone)]
pub struct QRelation {
    /// Maps `c_α` to the letters of `α`.
    pub q: Transducer<Column, Letter>,
    /// Factorizes a word over `A` into columns in every possible way.
    pub inverse: Transducer<Letter, Column>,
}

pub fn build_q(rank: Rank) -> QRelation {
    let cols = Column::all(rank);
    let mut q = Transducer::new(cols.iter().copied(), rank.letters());
    let s = q.add_state(true);
    q.add_initial(s);
    for &c in &cols {
        q.add_edge(s, Some(c), c.letters().collect(), s);
    }
    let inverse = q.inverse();
    QRelation { q, inverse }
}

/// Acceptor for `L = K∘Q`, the column readings of tableaux.
pub fn l_acceptor(rank: Rank) -> Nfa<Letter> {
    Transducer::<Column, Column>::identity(&k_acceptor(rank)).compose(&build_q(rank).q).output_language()
}

/// `Q⁻¹ ∘ m ∘ Q`: the multiplier `m` over `C` carried over to `A`.
pub fn lift(m: &Transducer<Column, Column>, q: &QRelation) -> Transducer<Letter, Letter> {
    q.inverse.compose(m).compose(&q.q).trim()
}

/// The single-generator multiplier over `C`.
pub fn multiplier(rank: Rank, side: Side, gamma: Letter) -> Result<Transducer<Column, Column>> {
    match side {
        Side::Right => right_multiplier(rank, gamma),
        Side::Left => left_multiplier(rank, gamma),
    }
}

/// `L_γ` or `_γL` over `A`; `None` stands for the empty word, whose
/// multiplier is the identity on `L`.
pub fn lifted_multiplier(rank: Rank, side: Side, gamma: Option<Letter>) -> Result<Transducer<Letter, Letter>> {
    match gamma {
        None => Ok(Transducer::<Letter, Letter>::identity(&l_acceptor(rank))),
        Some(g) => Ok(lift(&multiplier(rank, side, g)?, &build_q(rank))),
    }
}

/// Multiplication by an arbitrary word `b`, by chaining single-letter
/// multipliers. On the right the letter `b_1` acts first; on the left the
/// last letter acts first, since `b·u = b_1(b_2(⋯(b_k·u)))`.
pub fn general_multiplier(rank: Rank, side: Side, b: &[Letter]) -> Result<Transducer<Letter, Letter>> {
    rank.check_word(b)?;
    let q = build_q(rank);
    let mut order: Vec<Letter> = b.to_vec();
    if side == Side::Left {
        order.reverse();
    }
    let mut acc: Option<Transducer<Letter, Letter>> = None;
    for g in order {
        let next = lift(&multiplier(rank, side, g)?, &q);
        acc = Some(match acc {
            None => next,
            Some(a) => a.compose(&next),
        });
    }
    match acc {
        Some(t) => Ok(t),
        None => lifted_multiplier(rank, side, None),
    }
}

/// The image of `u` under a functional relation.
///
/// Fails with [`Error::NotNormal`] if there is no image or more than one.
pub fn run<I: crate::automata::Symbol, O: crate::automata::Symbol>(
    t: &Transducer<I, O>,
    u: &[I],
    limit: usize,
) -> Result<Vec<O>> {
    let outs = t.outputs(u, limit)?;
    let mut it = outs.into_iter();
    match (it.next(), it.next()) {
        (Some(v), None) => Ok(v),
        (None, _) => Err(Error::NotNormal(format!("no image for input of length {}", u.len()))),
        (Some(_), Some(_)) => Err(Error::NotNormal("relation is not functional here".into())),
    }
}

/// Runs a multiplier over `C` and checks that input and output are normal
/// forms.
pub fn multiply_columns(t: &Transducer<Column, Column>, u: &[Column]) -> Result<ColumnWord> {
    let cw = |w: &[Column]| ColumnWord::from(w.to_vec()).to_string();
    if !is_in_k(u) {
        return Err(Error::NotNormal(format!("input {} is not in K", cw(u))));
    }
    let v = run(t, u, 1 << 16)?;
    if !is_in_k(&v) {
        return Err(Error::NotNormal(format!("output {} is not in K", cw(&v))));
    }
    Ok(v.into())
}

/// Buffer bound for synchronizing multipliers over `A`.
pub const LETTER_DELAY: usize = 2;

/// Buffer bound for synchronizing relations over `C`.
pub fn column_delay(rank: Rank) -> usize {
    2 * rank.get()
}

/// The four padded automata for one generator (`None` for the empty word).
#[derive(Debug, Clone)]
pub struct MultiplierAutomata {
    pub gamma: Option<Letter>,
    /// `L_γ δ_R`
    pub right_r: PairAutomaton<Letter>,
    /// `L_γ δ_L`
    pub right_l: PairAutomaton<Letter>,
    /// `_γL δ_R`
    pub left_r: PairAutomaton<Letter>,
    /// `_γL δ_L`
    pub left_l: PairAutomaton<Letter>,
}

impl MultiplierAutomata {
    pub fn get(&self, side: Side, direction: Direction) -> &PairAutomaton<Letter> {
        match (side, direction) {
            (Side::Right, Direction::Right) => &self.right_r,
            (Side::Right, Direction::Left) => &self.right_l,
            (Side::Left, Direction::Right) => &self.left_r,
            (Side::Left, Direction::Left) => &self.left_l,
        }
    }

    /// `(side, direction, automaton)` in a fixed order.
    pub fn all(&self) -> [(Side, Direction, &PairAutomaton<Letter>); 4] {
        [
            (Side::Right, Direction::Right, &self.right_r),
            (Side::Left, Direction::Right, &self.left_r),
            (Side::Right, Direction::Left, &self.right_l),
            (Side::Left, Direction::Left, &self.left_l),
        ]
    }
}

pub fn multiplier_pair_automata(
    rank: Rank,
    gamma: Option<Letter>,
    max_delay: usize,
    state_limit: usize,
) -> Result<MultiplierAutomata> {
    let right = lifted_multiplier(rank, Side::Right, gamma)?;
    let left = match gamma {
        None => right.clone(),
        Some(_) => lifted_multiplier(rank, Side::Left, gamma)?,
    };
    let sync = |t: &Transducer<Letter, Letter>, d| synchronize_with_limit(t, d, max_delay, state_limit);
    Ok(MultiplierAutomata {
        gamma,
        right_r: sync(&right, Direction::Right)?,
        right_l: sync(&right, Direction::Left)?,
        left_r: sync(&left, Direction::Right)?,
        left_l: sync(&left, Direction::Left)?,
    })
}

/// Column reading of `P(w)`, the representative of `w` in `L`.
pub fn l_representative(w: &[Letter]) -> Word {
    crate::tableau::tableau_of_word(w).column_reading()
}
