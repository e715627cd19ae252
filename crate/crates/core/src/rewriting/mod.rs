//! The finite complete rewriting system over the column alphabet and its
//! Gröbner–Shirshov basis export.

mod cword;
mod gsb;
mod order;
mod system;

pub use cword::{decode_word, encode_word, ColumnWord};
pub use gsb::{gsb_export, Binomial, GsbBasis};
pub use order::{OrderDescriptor, OrderKey};
pub use system::{
    check_rules_terminate, product_columns, ColumnProduct, CriticalPair, Decrease, RewritingSystem, Rhs, Rule,
    RulesDocument, TerminationCertificate, DEFAULT_TABLE_LIMIT,
};
