//! The plactic monoid of finite rank.
//!
//! * [`tableau`]: Schensted insertion, readings and planar printing.
//! * [`knuth`]: brute-force oracles (subsequences, Knuth classes).
//! * [`rewriting`]: the finite complete rewriting system over columns and
//!   its Gröbner–Shirshov basis.
//! * [`automata`]: automata, transducers and padded pair automata.
//! * [`multipliers`]: the normal-form languages `K` and `L` and the
//!   transducers for left and right multiplication by a generator.
//! * [`verify`]: exhaustive desk-scale verification sweeps.

pub mod automata;
pub mod column;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod knuth;
pub mod multipliers;
pub mod rewriting;
pub mod tableau;
pub mod verify;
pub mod word;

pub use column::{column_ge, Column};
pub use error::{Error, Result};
pub use exec::Executor;
pub use tableau::{tableau_of_word, Placement, Tableau};
pub use word::{dominates, is_column, is_row, Letter, Rank, Word, MAX_RANK};
