//! Finite automata, transducers, and letter-to-letter automata over padded
//! pairs of words.

use std::fmt::{Debug, Display};
use std::hash::Hash;

mod export;
mod nfa;
mod pair;
mod sync;
mod transducer;

pub use export::MachineJson;
pub use nfa::Nfa;
pub use pair::{decode_pairs, delta, delta_l, delta_r, Direction, PairAutomaton, PairLetter};
pub use sync::{synchronize, synchronize_with_limit, DEFAULT_STATE_LIMIT};
pub use transducer::{Edge, Transducer};

pub type StateId = usize;

/// Anything usable as a letter of an automaton alphabet.
pub trait Symbol: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync {}

impl<T: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync> Symbol for T {}
