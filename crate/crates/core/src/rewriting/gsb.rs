//! Export of the rules as binomials `l - r` in the free algebra over `C`.
//!
//! Coefficients are `±1`, so the same basis works over any field.

use std::fmt::Write as _;

use serde::Serialize;

use crate::column::Column;
use crate::error::Result;
use crate::rewriting::{ColumnWord, OrderDescriptor, OrderKey, RewritingSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binomial {
    pub leading: ColumnWord,
    pub trailing: ColumnWord,
    pub leading_coeff: i8,
    pub trailing_coeff: i8,
}

#[derive(Debug, Clone, Serialize)]
pub struct GsbBasis {
    pub rank: usize,
    pub generators: Vec<Column>,
    pub order: OrderDescriptor,
    pub elements: Vec<Binomial>,
}

/// One binomial per rule, after certifying that every rule decreases under
/// `key` (so each leading term is the deg-lex larger monomial).
pub fn gsb_export(system: &RewritingSystem, key: OrderKey) -> Result<GsbBasis> {
    let cert = system.check_termination(key)?;
    let elements = cert
        .checks
        .into_iter()
        .map(|(rule, _)| Binomial { leading: rule.lhs, trailing: rule.rhs, leading_coeff: 1, trailing_coeff: -1 })
        .collect();
    Ok(GsbBasis {
        rank: system.rank().get(),
        generators: Column::all(system.rank()),
        order: key.descriptor(),
        elements,
    })
}

fn monomial(word: &[Column]) -> String {
    word.iter().map(|c| format!("c[{c}]")).collect::<Vec<_>>().join("*")
}

impl GsbBasis {
    /// Header line naming the order, then one binomial per line, e.g.
    /// `c[2]*c[1] - c[21]`.
    pub fn to_text(&self) -> String {
        let mut out = format!("order: {}; symbol order: {}\n", self.order.monomial_order, self.order.symbol_order);
        for b in &self.elements {
            let _ = writeln!(out, "{} - {}", monomial(&b.leading), monomial(&b.trailing));
        }
        out
    }
}
