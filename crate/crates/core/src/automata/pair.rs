use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::automata::{Nfa, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Padding goes at the end of the shorter word.
    Right,
    /// Padding goes at the start of the shorter word.
    Left,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Right => "R",
            Direction::Left => "L",
        })
    }
}

/// One letter of a padded convolution. `None` is the padding symbol `$`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairLetter<S> {
    pub left: Option<S>,
    pub right: Option<S>,
}

impl<S> PairLetter<S> {
    pub fn new(left: Option<S>, right: Option<S>) -> PairLetter<S> {
        assert!(left.is_some() || right.is_some(), "($,$) is not a pair letter");
        PairLetter { left, right }
    }
}

impl<S: fmt::Display> fmt::Display for PairLetter<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &Option<S>| s.as_ref().map_or("$".to_string(), ToString::to_string);
        write!(f, "({},{})", side(&self.left), side(&self.right))
    }
}

/// `δ_R(u, v)`: the shorter word is padded with `$` on the right.
pub fn delta_r<S: Clone>(u: &[S], v: &[S]) -> Vec<PairLetter<S>> {
    (0..u.len().max(v.len())).map(|i| PairLetter { left: u.get(i).cloned(), right: v.get(i).cloned() }).collect()
}

/// `δ_L(u, v)`: the shorter word is padded with `$` on the left.
pub fn delta_l<S: Clone>(u: &[S], v: &[S]) -> Vec<PairLetter<S>> {
    let n = u.len().max(v.len());
    let (pu, pv) = (n - u.len(), n - v.len());
    (0..n)
        .map(|i| PairLetter {
            left: i.checked_sub(pu).map(|j| u[j].clone()),
            right: i.checked_sub(pv).map(|j| v[j].clone()),
        })
        .collect()
}

pub fn delta<S: Clone>(direction: Direction, u: &[S], v: &[S]) -> Vec<PairLetter<S>> {
    match direction {
        Direction::Right => delta_r(u, v),
        Direction::Left => delta_l(u, v),
    }
}

/// Recovers `(u, v)` from a padded string, or `None` if the padding is not
/// in the shape produced by [`delta`] for this direction.
pub fn decode_pairs<S: Clone>(direction: Direction, w: &[PairLetter<S>]) -> Option<(Vec<S>, Vec<S>)> {
    fn side<S: Clone>(direction: Direction, xs: Vec<Option<S>>) -> Option<Vec<S>> {
        let real = xs.iter().filter(|x| x.is_some()).count();
        let well_formed = match direction {
            Direction::Right => xs[..real].iter().all(Option::is_some),
            Direction::Left => xs[xs.len() - real..].iter().all(Option::is_some),
        };
        well_formed.then(|| xs.into_iter().flatten().collect())
    }
    if w.iter().any(|p| p.left.is_none() && p.right.is_none()) {
        return None;
    }
    let u = side(direction, w.iter().map(|p| p.left.clone()).collect())?;
    let v = side(direction, w.iter().map(|p| p.right.clone()).collect())?;
    (u.len() == w.len() || v.len() == w.len()).then_some((u, v))
}

/// An automaton over padded pairs, read in the given direction.
#[derive(Debug, Clone)]
pub struct PairAutomaton<S> {
    pub direction: Direction,
    pub nfa: Nfa<PairLetter<S>>,
}

impl<S: Symbol> PairAutomaton<S> {
    pub fn accepts(&self, u: &[S], v: &[S]) -> bool {
        self.nfa.accepts(&delta(self.direction, u, v))
    }

    /// Every `v` with `|v| ≤ max_len` such that `δ(u, v)` is accepted.
    ///
    /// Explores the candidate strings depth first and abandons a prefix as
    /// soon as no state is left, so only live prefixes are visited.
    pub fn partners(&self, u: &[S], max_len: usize) -> BTreeSet<Vec<S>> {
        let rights: BTreeSet<S> = self.nfa.alphabet().iter().filter_map(|p| p.right.clone()).collect();
        let mut out = BTreeSet::new();
        for m in 0..=max_len {
            let n = u.len().max(m);
            let (pu, pv) = match self.direction {
                Direction::Right => (0, 0),
                Direction::Left => (n - u.len(), n - m),
            };
            let left_at = |i: usize| match self.direction {
                Direction::Right => u.get(i).cloned(),
                Direction::Left => i.checked_sub(pu).map(|j| u[j].clone()),
            };
            let right_real = |i: usize| match self.direction {
                Direction::Right => i < m,
                Direction::Left => i >= pv,
            };
            let mut stack = vec![(self.nfa.start_set(), Vec::new(), 0usize)];
            while let Some((set, v, i)) = stack.pop() {
                if set.is_empty() {
                    continue;
                }
                if i == n {
                    if self.nfa.any_accepting(&set) {
                        out.insert(v);
                    }
                    continue;
                }
                if right_real(i) {
                    for b in &rights {
                        let letter = PairLetter { left: left_at(i), right: Some(b.clone()) };
                        let mut v2 = v.clone();
                        v2.push(b.clone());
                        stack.push((self.nfa.step_set(&set, &letter), v2, i + 1));
                    }
                } else if let Some(a) = left_at(i) {
                    let letter = PairLetter { left: Some(a), right: None };
                    stack.push((self.nfa.step_set(&set, &letter), v, i + 1));
                }
            }
        }
        out
    }
}

/// Every pair letter over `alphabet ∪ {$}` except `($,$)`.
pub(crate) fn pair_alphabet<S: Symbol>(
    left: impl IntoIterator<Item = S> + Clone,
    right: impl IntoIterator<Item = S> + Clone,
) -> Vec<PairLetter<S>> {
    let with_pad = |xs: Vec<S>| std::iter::once(None).chain(xs.into_iter().map(Some)).collect::<Vec<_>>();
    let ls = with_pad(left.into_iter().collect());
    let rs = with_pad(right.into_iter().collect());
    let mut out = Vec::new();
    for l in &ls {
        for r in &rs {
            if l.is_some() || r.is_some() {
                out.push(PairLetter { left: l.clone(), right: r.clone() });
            }
        }
    }
    out
}
