//! Brute-force oracles: subsequence statistics and the congruence generated
//! by the Knuth relations, explored directly on words.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::word::{Letter, Rank, Word};

/// Default bound on the size of an explored Knuth class.
pub const DEFAULT_CLASS_LIMIT: usize = 1_000_000;

/// Length of the longest non-decreasing subsequence.
pub fn lnds(word: &[Letter]) -> usize {
    longest_chain(word, |a, b| a <= b)
}

/// Length of the longest strictly decreasing subsequence.
pub fn lds(word: &[Letter]) -> usize {
    longest_chain(word, |a, b| a > b)
}

fn longest_chain(word: &[Letter], extends: impl Fn(Letter, Letter) -> bool) -> usize {
    let mut best = vec![1usize; word.len()];
    for j in 0..word.len() {
        for i in 0..j {
            if extends(word[i], word[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// The defining relations of the plactic monoid of rank `n`:
/// `(xzy, zxy)` for `x ≤ y < z` and `(yxz, yzx)` for `x < y ≤ z`.
pub fn knuth_relations(rank: Rank) -> BTreeSet<(Word, Word)> {
    let mut out = BTreeSet::new();
    for x in rank.letters() {
        for y in rank.letters() {
            for z in rank.letters() {
                if x <= y && y < z {
                    out.insert((Word::from(vec![x, z, y]), Word::from(vec![z, x, y])));
                }
                if x < y && y <= z {
                    out.insert((Word::from(vec![y, x, z]), Word::from(vec![y, z, x])));
                }
            }
        }
    }
    out
}

/// All words obtained from a length-3 factor `(a, b, c)` by one application
/// of a Knuth relation in either direction.
fn knuth_moves(a: Letter, b: Letter, c: Letter) -> impl Iterator<Item = [Letter; 3]> {
    let swap_front = (a <= c && c < b) || (b <= c && c < a);
    let swap_back = (b < a && a <= c) || (c < a && a <= b);
    [swap_front.then_some([b, a, c]), swap_back.then_some([a, c, b])].into_iter().flatten()
}

/// The Knuth class of `word`, found by breadth-first search. Fails with
/// [`Error::ResourceLimit`] once more than `limit` words have been seen.
pub fn knuth_class(word: &[Letter], limit: usize) -> Result<HashSet<Vec<Letter>>> {
    let mut seen = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(2) {
            for m in knuth_moves(w[i], w[i + 1], w[i + 2]) {
                let mut next = w.clone();
                next[i..i + 3].copy_from_slice(&m);
                if seen.insert(next.clone()) {
                    if seen.len() > limit {
                        return Err(Error::ResourceLimit { what: "Knuth class size", limit });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Whether `u` and `v` are equal in the plactic monoid, decided by exploring
/// the Knuth class of `u`.
pub fn knuth_equivalent(u: &[Letter], v: &[Letter], limit: usize) -> Result<bool> {
    if u.len() != v.len() {
        return Ok(false);
    }
    if u == v {
        return Ok(true);
    }
    Ok(knuth_class(u, limit)?.contains(v))
}
