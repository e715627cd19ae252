use serde::Serialize;

use crate::column::Column;
use crate::error::{Error, Result};
use crate::rewriting::{ColumnWord, OrderKey};
use crate::tableau::tableau_of_word;
use crate::word::Rank;

/// Default cap on the number of entries of the pair table, `(2^n)^2`.
/// Rank 11 fits; rank 12 does not.
pub const DEFAULT_TABLE_LIMIT: usize = 1 << 22;

/// `P(αβ)` for a pair of columns, classified as in the rule definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnProduct {
    /// `α ⪰ β`, so `c_α c_β` is already in normal form.
    Irreducible,
    One(Column),
    Two(Column, Column),
}

/// Right-hand side of a rule of the system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rhs {
    One(Column),
    Two(Column, Column),
}

impl Rhs {
    pub fn symbols(self) -> Vec<Column> {
        match self {
            Rhs::One(c) => vec![c],
            Rhs::Two(a, b) => vec![a, b],
        }
    }
}

pub fn product_columns(a: Column, b: Column) -> ColumnProduct {
    if a.column_ge(b) {
        return ColumnProduct::Irreducible;
    }
    let w: Vec<_> = a.letters().chain(b.letters()).collect();
    match tableau_of_word(&w).columns() {
        [c] => ColumnProduct::One(*c),
        [c, d] => ColumnProduct::Two(*c, *d),
        cols => unreachable!("product of incomparable columns has {} columns", cols.len()),
    }
}

/// A rewriting rule `lhs → rhs` over `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub lhs: ColumnWord,
    pub rhs: ColumnWord,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// The JSON document written by the rules export.
#[derive(Debug, Clone, Serialize)]
pub struct RulesDocument {
    pub rank: usize,
    pub rules: Vec<Rule>,
}

/// The finite complete rewriting system `(C, T)`: one rule `c_α c_β → ...`
/// for each ordered pair of columns with `α ⋡ β`.
#[derive(Debug, Clone)]
pub struct RewritingSystem {
    rank: Rank,
    stride: usize,
    table: Vec<Option<Rhs>>,
    rule_count: usize,
}

impl RewritingSystem {
    pub fn generate(rank: Rank) -> Result<RewritingSystem> {
        Self::generate_with_limit(rank, DEFAULT_TABLE_LIMIT)
    }

    /// Builds the rule table, refusing ranks whose table would exceed
    /// `max_entries`.
    pub fn generate_with_limit(rank: Rank, max_entries: usize) -> Result<RewritingSystem> {
        let stride = 1usize
            .checked_shl(rank.get() as u32)
            .filter(|s| s.checked_mul(*s).is_some_and(|e| e <= max_entries))
            .ok_or(Error::ResourceLimit { what: "rule table entries", limit: max_entries })?;
        let cols = Column::all(rank);
        let mut table = vec![None; stride * stride];
        let mut rule_count = 0;
        for &a in &cols {
            for &b in &cols {
                let rhs = match product_columns(a, b) {
                    ColumnProduct::Irreducible => continue,
                    ColumnProduct::One(c) => Rhs::One(c),
                    ColumnProduct::Two(c, d) => Rhs::Two(c, d),
                };
                table[a.mask() as usize * stride + b.mask() as usize] = Some(rhs);
                rule_count += 1;
            }
        }
        Ok(RewritingSystem { rank, stride, table, rule_count })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Number of rules.
    pub fn len(&self) -> usize {
        self.rule_count
    }

    pub fn is_empty(&self) -> bool {
        self.rule_count == 0
    }

    pub fn rule_for(&self, a: Column, b: Column) -> Option<Rhs> {
        let (a, b) = (a.mask() as usize, b.mask() as usize);
        if a >= self.stride || b >= self.stride {
            return None;
        }
        self.table[a * self.stride + b]
    }

    /// All rules, ordered by left-hand side with columns in [`Column::all`]
    /// order.
    pub fn rules(&self) -> Vec<Rule> {
        let cols = Column::all(self.rank);
        let mut out = Vec::with_capacity(self.rule_count);
        for &a in &cols {
            for &b in &cols {
                if let Some(rhs) = self.rule_for(a, b) {
                    out.push(Rule { lhs: vec![a, b].into(), rhs: rhs.symbols().into() });
                }
            }
        }
        out
    }

    pub fn rules_document(&self) -> RulesDocument {
        RulesDocument { rank: self.rank.get(), rules: self.rules() }
    }

    fn leftmost_redex(&self, word: &[Column], from: usize) -> Option<(usize, Rhs)> {
        (from..word.len().saturating_sub(1)).find_map(|i| self.rule_for(word[i], word[i + 1]).map(|r| (i, r)))
    }

    /// Applies the rule at the leftmost redex, if any.
    pub fn rewrite_step(&self, word: &[Column]) -> Option<ColumnWord> {
        let (i, rhs) = self.leftmost_redex(word, 0)?;
        let mut out = word[..i].to_vec();
        out.extend(rhs.symbols());
        out.extend_from_slice(&word[i + 2..]);
        Some(out.into())
    }

    /// Rewrites to the unique irreducible word, always at the leftmost
    /// redex.
    pub fn normalize(&self, word: &[Column]) -> ColumnWord {
        let mut w = word.to_vec();
        let mut from = 0;
        while let Some((i, rhs)) = self.leftmost_redex(&w, from) {
            w.splice(i..i + 2, rhs.symbols());
            // Only the pair straddling the left edge of the rewrite can be a
            // new redex to the left of `i`.
            from = i.saturating_sub(1);
        }
        w.into()
    }

    pub fn is_normal(&self, word: &[Column]) -> bool {
        self.leftmost_redex(word, 0).is_none()
    }

    pub fn check_termination(&self, key: OrderKey) -> Result<TerminationCertificate> {
        check_rules_terminate(&self.rules(), key)
    }

    /// Every overlap `c_α c_β c_γ` where both `c_α c_β` and `c_β c_γ` are
    /// redexes, with the normal forms of its two one-step descendants.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let cols = Column::all(self.rank);
        let mut out = Vec::new();
        for &a in &cols {
            for &b in &cols {
                let Some(first) = self.rule_for(a, b) else { continue };
                for &c in &cols {
                    let Some(second) = self.rule_for(b, c) else { continue };
                    let mut left = first.symbols();
                    left.push(c);
                    let mut right = vec![a];
                    right.extend(second.symbols());
                    let left_normal = self.normalize(&left);
                    let right_normal = self.normalize(&right);
                    out.push(CriticalPair {
                        overlap: [a, b, c],
                        converged: left_normal == right_normal,
                        left: left.into(),
                        right: right.into(),
                        left_normal,
                        right_normal,
                    });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub overlap: [Column; 3],
    /// Result of rewriting the leading pair.
    pub left: ColumnWord,
    /// Result of rewriting the trailing pair.
    pub right: ColumnWord,
    pub left_normal: ColumnWord,
    pub right_normal: ColumnWord,
    pub converged: bool,
}

/// Why a rule's right-hand side is `≪` its left-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decrease {
    Shorter,
    /// Equal length; first difference at this index (0-based) is `⊏`-smaller.
    SmallerAt(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminationCertificate {
    pub checks: Vec<(Rule, Decrease)>,
}

/// Checks `rhs ≪ lhs` for every rule and reports the first failure.
pub fn check_rules_terminate(rules: &[Rule], key: OrderKey) -> Result<TerminationCertificate> {
    let mut checks = Vec::with_capacity(rules.len());
    for rule in rules {
        if !key.word_less(&rule.rhs, &rule.lhs) {
            return Err(Error::TerminationViolation { rule: rule.to_string() });
        }
        let why = if rule.rhs.len() < rule.lhs.len() {
            Decrease::Shorter
        } else {
            let i = rule.rhs.iter().zip(rule.lhs.iter()).position(|(a, b)| a != b);
            Decrease::SmallerAt(i.expect("strictly smaller word differs somewhere"))
        };
        checks.push((rule.clone(), why));
    }
    Ok(TerminationCertificate { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Column {
        s.parse().unwrap()
    }

    fn cw(s: &str) -> ColumnWord {
        s.parse().unwrap()
    }

    fn system(n: usize) -> RewritingSystem {
        RewritingSystem::generate(Rank::new(n).unwrap()).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(product_columns(c("2"), c("1")), ColumnProduct::One(c("21")));
        assert_eq!(product_columns(c("1"), c("21")), ColumnProduct::Two(c("21"), c("1")));
        assert_eq!(product_columns(c("21"), c("1")), ColumnProduct::Irreducible);
    }

    #[test]
    fn rank_two_rules() {
        assert_eq!(system(1).len(), 0);
        let t = system(2);
        let shown: Vec<String> = t.rules().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["c_1 c_21 -> c_21 c_1", "c_2 c_1 -> c_21", "c_2 c_21 -> c_21 c_2"]);
        let json = serde_json::to_string(&t.rules_document()).unwrap();
        assert!(json.starts_with(r#"{"rank":2,"rules":[{"lhs":["1","21"],"rhs":["21","1"]}"#));
    }

    #[test]
    fn steps_and_normal_forms() {
        let t = system(2);
        assert_eq!(t.rewrite_step(&cw("c_2 c_1")), Some(cw("c_21")));
        assert_eq!(t.rewrite_step(&cw("c_1 c_21 c_1")), Some(cw("c_21 c_1 c_1")));
        assert_eq!(t.rewrite_step(&cw("c_21 c_1")), None);
        assert_eq!(t.normalize(&cw("c_1 c_2 c_1")), cw("c_21 c_1"));
        assert_eq!(t.normalize(&[]), cw(""));
        assert_eq!(t.normalize(&cw("c_21 c_1")), cw("c_21 c_1"));
    }

    #[test]
    fn termination() {
        let cert = system(2).check_termination(OrderKey).unwrap();
        assert_eq!(cert.checks.len(), 3);
        assert!(system(3).check_termination(OrderKey).is_ok());
        let flipped = Rule { lhs: cw("c_21"), rhs: cw("c_2 c_1") };
        assert!(matches!(check_rules_terminate(&[flipped], OrderKey), Err(Error::TerminationViolation { .. })));
    }

    #[test]
    fn critical_pairs_small() {
        assert!(system(1).critical_pairs().is_empty());
        let pairs = system(2).critical_pairs();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].overlap, [c("2"), c("1"), c("21")]);
        assert!(pairs[0].converged);
        assert!(system(3).critical_pairs().iter().all(|p| p.converged));
    }

    #[test]
    fn table_limit() {
        let r = Rank::new(12).unwrap();
        assert!(matches!(
            RewritingSystem::generate_with_limit(r, DEFAULT_TABLE_LIMIT),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
