//! Synchronization of a transducer with bounded delay into an automaton over
//! padded pairs.
//!
//! The pair automaton reads one pair letter at a time and runs the transducer
//! beside it. Input letters that the transducer has not consumed yet and
//! output letters on which the two sides do not yet agree are kept in small
//! buffers; a state of the result is a transducer state together with those
//! buffers.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::automata::pair::pair_alphabet;
use crate::automata::{Direction, Nfa, PairAutomaton, PairLetter, StateId, Symbol, Transducer};
use crate::error::{Error, Result};

pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Phase {
    Both,
    /// A `$` has been read on the input side.
    InputEnded,
    /// A `$` has been read on the output side.
    OutputEnded,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Config<S> {
    q: StateId,
    /// Input letters read from the pair string, not yet consumed by `q`'s run.
    input: Vec<S>,
    /// Unmatched output letters. If `ahead`, the transducer wrote them and
    /// the pair string has not shown them yet; otherwise the reverse.
    out: Vec<S>,
    ahead: bool,
    phase: Phase,
}

impl<S: Symbol> Config<S> {
    fn start(q: StateId) -> Config<S> {
        Config { q, input: Vec::new(), out: Vec::new(), ahead: false, phase: Phase::Both }
    }

    fn size(&self) -> usize {
        self.input.len().max(self.out.len())
    }

    /// The transducer writes `sym`.
    fn emit(&mut self, sym: &S) -> bool {
        if !self.ahead && !self.out.is_empty() {
            if self.out[0] != *sym {
                return false;
            }
            self.out.remove(0);
            return true;
        }
        if self.phase == Phase::OutputEnded {
            return false;
        }
        self.out.push(sym.clone());
        self.ahead = true;
        true
    }

    /// The pair string shows `sym` on the output side.
    fn receive(&mut self, sym: &S) -> bool {
        if self.ahead && !self.out.is_empty() {
            if self.out[0] != *sym {
                return false;
            }
            self.out.remove(0);
            if self.out.is_empty() {
                self.ahead = false;
            }
            return true;
        }
        self.out.push(sym.clone());
        self.ahead = false;
        true
    }

    fn step(&self, letter: &PairLetter<S>) -> Option<Config<S>> {
        let mut c = self.clone();
        c.phase = match (&letter.left, &letter.right, self.phase) {
            (Some(_), Some(_), Phase::Both) => Phase::Both,
            (Some(_), None, Phase::Both | Phase::OutputEnded) => Phase::OutputEnded,
            (None, Some(_), Phase::Both | Phase::InputEnded) => Phase::InputEnded,
            _ => return None,
        };
        if let Some(a) = &letter.left {
            c.input.push(a.clone());
        }
        if let Some(b) = &letter.right {
            if !c.receive(b) {
                return None;
            }
        }
        if c.phase == Phase::OutputEnded && c.ahead && !c.out.is_empty() {
            return None;
        }
        Some(c)
    }
}

/// Configurations reachable from `start` by transducer moves. Returns those
/// within `max_delay` and, separately, those that went past it.
fn closure<S: Symbol>(t: &Transducer<S, S>, start: Config<S>, max_delay: usize) -> (Vec<Config<S>>, Vec<Config<S>>) {
    let mut seen = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    let (mut fine, mut over) = (Vec::new(), Vec::new());
    while let Some(c) = stack.pop() {
        if c.size() > max_delay {
            over.push(c.clone());
        } else {
            fine.push(c.clone());
        }
        'edges: for e in t.edges(c.q) {
            let mut next = c.clone();
            next.q = e.target;
            if let Some(a) = &e.input {
                if next.input.first() != Some(a) {
                    continue;
                }
                next.input.remove(0);
            }
            for o in &e.output {
                if !next.emit(o) {
                    continue 'edges;
                }
            }
            if next.size() > max_delay + 1 {
                over.push(next);
            } else if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    (fine, over)
}

/// Whether some run of `t` from `c` is consistent with the buffers and could
/// still end in acceptance.
fn completable<S: Symbol>(t: &Transducer<S, S>, c: &Config<S>) -> bool {
    if c.phase == Phase::OutputEnded && c.ahead && !c.out.is_empty() {
        return false;
    }
    let behind: &[S] = if c.ahead { &[] } else { &c.out };
    let free_in = c.phase != Phase::InputEnded;
    let free_out = c.phase != Phase::OutputEnded;
    let mut seen = HashSet::from([(c.q, 0, 0)]);
    let mut stack = vec![(c.q, 0, 0)];
    while let Some((q, i, j)) = stack.pop() {
        if t.is_accepting(q) && i == c.input.len() && j == behind.len() {
            return true;
        }
        'edges: for e in t.edges(q) {
            let mut ni = i;
            if let Some(a) = &e.input {
                if i < c.input.len() {
                    if c.input[i] != *a {
                        continue;
                    }
                    ni += 1;
                } else if !free_in {
                    continue;
                }
            }
            let mut nj = j;
            for o in &e.output {
                if nj < behind.len() {
                    if behind[nj] != *o {
                        continue 'edges;
                    }
                    nj += 1;
                } else if !free_out {
                    continue 'edges;
                }
            }
            if seen.insert((e.target, ni, nj)) {
                stack.push((e.target, ni, nj));
            }
        }
    }
    false
}

/// [`synchronize_with_limit`] with [`DEFAULT_STATE_LIMIT`].
pub fn synchronize<S: Symbol>(
    t: &Transducer<S, S>,
    direction: Direction,
    max_delay: usize,
) -> Result<PairAutomaton<S>> {
    synchronize_with_limit(t, direction, max_delay, DEFAULT_STATE_LIMIT)
}

/// Builds an automaton accepting `δ(u, v)` for exactly the pairs `(u, v)`
/// of the relation of `t`, keeping at most `max_delay` letters in each
/// buffer between pair letters.
///
/// Fails with [`Error::DelayExceeded`] when some pair letter can only be
/// followed by exceeding the buffer bound on a run that could still accept,
/// and with [`Error::ResourceLimit`] past `state_limit` states. The left
/// padded automaton is the reversal of the right padded automaton of the
/// reversed relation.
pub fn synchronize_with_limit<S: Symbol>(
    t: &Transducer<S, S>,
    direction: Direction,
    max_delay: usize,
    state_limit: usize,
) -> Result<PairAutomaton<S>> {
    let nfa = match direction {
        Direction::Right => sync_right(&t.trim(), max_delay, state_limit)?,
        Direction::Left => sync_right(&t.reversed().trim(), max_delay, state_limit)?.reversed().trim(),
    };
    Ok(PairAutomaton { direction, nfa })
}

fn sync_right<S: Symbol>(t: &Transducer<S, S>, max_delay: usize, state_limit: usize) -> Result<Nfa<PairLetter<S>>> {
    let letters = pair_alphabet(t.input_alphabet().iter().cloned(), t.output_alphabet().iter().cloned());
    let mut nfa = Nfa::new(letters.iter().cloned());
    let mut ids: HashMap<Config<S>, StateId> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut intern = |nfa: &mut Nfa<PairLetter<S>>, queue: &mut VecDeque<Config<S>>, c: Config<S>| {
        if let Some(&id) = ids.get(&c) {
            return Ok(id);
        }
        if ids.len() >= state_limit {
            return Err(Error::ResourceLimit { what: "synchronized states", limit: state_limit });
        }
        let id = nfa.add_state(t.is_accepting(c.q) && c.input.is_empty() && c.out.is_empty());
        ids.insert(c.clone(), id);
        queue.push_back(c);
        Ok(id)
    };
    let settle = |start: Config<S>| -> Result<Vec<Config<S>>> {
        let (fine, over) = closure(t, start, max_delay);
        if fine.is_empty() && over.iter().any(|c| completable(t, c)) {
            return Err(Error::DelayExceeded { max_delay });
        }
        Ok(fine)
    };
    for &q in t.initial() {
        for c in settle(Config::start(q))? {
            let id = intern(&mut nfa, &mut queue, c)?;
            nfa.add_initial(id);
        }
    }
    // Ids are handed out in queue order, so the n-th dequeued state is n.
    let mut from: StateId = 0;
    while let Some(c) = queue.pop_front() {
        for letter in &letters {
            let Some(stepped) = c.step(letter) else { continue };
            for next in settle(stepped)? {
                let to = intern(&mut nfa, &mut queue, next)?;
                nfa.add_transition(from, Some(letter.clone()), to);
            }
        }
        from += 1;
    }
    Ok(nfa.trim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::delta_r;

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    fn identity_a() -> Transducer<char, char> {
        let mut t = Transducer::new(['a'], ['a']);
        let s = t.add_state(true);
        t.add_initial(s);
        t.add_edge(s, Some('a'), vec!['a'], s);
        t
    }

    /// `{(u, u·a) : u ∈ a*}`.
    fn append_a() -> Transducer<char, char> {
        let mut t = identity_a();
        t.set_accepting(0, false);
        let end = t.add_state(true);
        t.add_edge(0, None, vec!['a'], end);
        t
    }

    /// `{(aaa, aaa)}`, written only after the whole input has been read.
    fn withholding() -> Transducer<char, char> {
        let mut t = Transducer::new(['a'], ['a']);
        let s: Vec<_> = (0..4).map(|i| t.add_state(i == 3)).collect();
        t.add_initial(s[0]);
        for i in 0..2 {
            t.add_edge(s[i], Some('a'), vec![], s[i + 1]);
        }
        t.add_edge(s[2], Some('a'), vec!['a', 'a', 'a'], s[3]);
        t
    }

    #[test]
    fn identity_right() {
        let p = synchronize(&identity_a(), Direction::Right, 1).unwrap();
        for n in 0..5 {
            for m in 0..5 {
                let (u, v) = (vec!['a'; n], vec!['a'; m]);
                assert_eq!(p.accepts(&u, &v), n == m);
            }
        }
    }

    #[test]
    fn append_both_directions() {
        for d in [Direction::Right, Direction::Left] {
            let p = synchronize(&append_a(), d, 2).unwrap();
            for n in 0..5 {
                for m in 0..6 {
                    let (u, v) = (vec!['a'; n], vec!['a'; m]);
                    assert_eq!(p.accepts(&u, &v), m == n + 1, "{d} {n} {m}");
                }
            }
        }
        let p = synchronize(&append_a(), Direction::Right, 1).unwrap();
        assert!(p.nfa.accepts(&delta_r(&chars("aa"), &chars("aaa"))));
        assert!(!p.nfa.accepts(&delta_r(&chars("aa"), &chars("aa"))));
    }

    #[test]
    fn delay_bound_is_enforced() {
        assert!(matches!(synchronize(&withholding(), Direction::Right, 1), Err(Error::DelayExceeded { max_delay: 1 })));
        let p = synchronize(&withholding(), Direction::Right, 3).unwrap();
        assert!(p.accepts(&chars("aaa"), &chars("aaa")));
        assert!(!p.accepts(&chars("aa"), &chars("aa")));
    }

    #[test]
    fn state_limit() {
        assert!(matches!(
            synchronize_with_limit(&append_a(), Direction::Right, 2, 1),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
