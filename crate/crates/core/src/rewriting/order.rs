use std::cmp::Ordering;

use serde::Serialize;

use crate::column::Column;

/// The well-order `≪` on words over `C` used to certify termination.
///
/// Symbols are ranked by `⊏`: `c_α ⊏ c_β` when `|α| > |β|`, and columns of
/// equal length are compared lexicographically by their written subscript.
/// Words compare by length first, then by the first differing symbol.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OrderKey;

/// Serializable description of the monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderDescriptor {
    pub monomial_order: &'static str,
    pub symbol_order: &'static str,
}

impl OrderKey {
    /// `Less` means `a ⊏ b`.
    pub fn symbol_cmp(self, a: Column, b: Column) -> Ordering {
        b.len().cmp(&a.len()).then(a.cmp(&b))
    }

    pub fn word_cmp(self, u: &[Column], v: &[Column]) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| {
            u.iter().zip(v).map(|(&a, &b)| self.symbol_cmp(a, b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
        })
    }

    /// `u ≪ v`
    pub fn word_less(self, u: &[Column], v: &[Column]) -> bool {
        self.word_cmp(u, v) == Ordering::Less
    }

    pub fn descriptor(self) -> OrderDescriptor {
        OrderDescriptor { monomial_order: "deglex", symbol_order: "|subscript| desc, then lex" }
    }
}
