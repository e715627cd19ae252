use std::collections::BTreeSet;

use crate::automata::{StateId, Symbol};

/// A nondeterministic finite automaton with ε-transitions (`None` labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa<S> {
    alphabet: BTreeSet<S>,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    edges: Vec<Vec<(Option<S>, StateId)>>,
}

impl<S: Symbol> Nfa<S> {
    pub fn new(alphabet: impl IntoIterator<Item = S>) -> Nfa<S> {
        Nfa { alphabet: alphabet.into_iter().collect(), initial: Vec::new(), accepting: Vec::new(), edges: Vec::new() }
    }

    pub fn add_state(&mut self, accepting: bool) -> StateId {
        self.accepting.push(accepting);
        self.edges.push(Vec::new());
        self.accepting.len() - 1
    }

    pub fn add_initial(&mut self, state: StateId) {
        assert!(state < self.num_states(), "unknown state {state}");
        if !self.initial.contains(&state) {
            self.initial.push(state);
        }
    }

    pub fn set_accepting(&mut self, state: StateId, accepting: bool) {
        self.accepting[state] = accepting;
    }

    /// Adds a transition; `None` is an ε-transition. The symbol must belong
    /// to the alphabet.
    pub fn add_transition(&mut self, from: StateId, symbol: Option<S>, to: StateId) {
        assert!(to < self.num_states(), "unknown state {to}");
        if let Some(s) = &symbol {
            assert!(self.alphabet.contains(s), "symbol {s} not in the alphabet");
        }
        let edge = (symbol, to);
        if !self.edges[from].contains(&edge) {
            self.edges[from].push(edge);
        }
    }

    pub fn alphabet(&self) -> &BTreeSet<S> {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn transitions(&self, state: StateId) -> &[(Option<S>, StateId)] {
        &self.edges[state]
    }

    fn close(&self, set: &mut Vec<StateId>, mark: &mut [bool]) {
        let mut i = 0;
        while i < set.len() {
            let s = set[i];
            for (sym, t) in &self.edges[s] {
                if sym.is_none() && !mark[*t] {
                    mark[*t] = true;
                    set.push(*t);
                }
            }
            i += 1;
        }
    }

    /// ε-closure of the initial states.
    pub(crate) fn start_set(&self) -> Vec<StateId> {
        let mut mark = vec![false; self.num_states()];
        let mut set = Vec::new();
        for &s in &self.initial {
            if !mark[s] {
                mark[s] = true;
                set.push(s);
            }
        }
        self.close(&mut set, &mut mark);
        set
    }

    /// States reachable from `set` by reading `symbol`, ε-closed.
    pub(crate) fn step_set(&self, set: &[StateId], symbol: &S) -> Vec<StateId> {
        let mut mark = vec![false; self.num_states()];
        let mut next = Vec::new();
        for &s in set {
            for (sym, t) in &self.edges[s] {
                if sym.as_ref() == Some(symbol) && !mark[*t] {
                    mark[*t] = true;
                    next.push(*t);
                }
            }
        }
        self.close(&mut next, &mut mark);
        next
    }

    pub(crate) fn any_accepting(&self, set: &[StateId]) -> bool {
        set.iter().any(|&s| self.accepting[s])
    }

    /// Standard subset simulation with ε-closure.
    pub fn accepts(&self, word: &[S]) -> bool {
        let n = self.num_states();
        let mut mark = vec![false; n];
        let mut current = Vec::new();
        for &s in &self.initial {
            if !mark[s] {
                mark[s] = true;
                current.push(s);
            }
        }
        self.close(&mut current, &mut mark);
        for symbol in word {
            for &s in &current {
                mark[s] = false;
            }
            let mut next = Vec::new();
            for &s in &current {
                for (sym, t) in &self.edges[s] {
                    if sym.as_ref() == Some(symbol) && !mark[*t] {
                        mark[*t] = true;
                        next.push(*t);
                    }
                }
            }
            self.close(&mut next, &mut mark);
            if next.is_empty() {
                return false;
            }
            current = next;
        }
        current.iter().any(|&s| self.accepting[s])
    }

    /// The automaton of the reversed language.
    pub fn reversed(&self) -> Nfa<S> {
        let mut out = Nfa::new(self.alphabet.iter().cloned());
        for s in 0..self.num_states() {
            out.add_state(self.initial.contains(&s));
        }
        for s in 0..self.num_states() {
            if self.accepting[s] {
                out.add_initial(s);
            }
        }
        for (s, edges) in self.edges.iter().enumerate() {
            for (sym, t) in edges {
                out.add_transition(*t, sym.clone(), s);
            }
        }
        out
    }

    /// Removes states that are unreachable or cannot reach acceptance.
    /// Surviving states keep their relative order.
    pub fn trim(&self) -> Nfa<S> {
        let n = self.num_states();
        let mut forward = vec![false; n];
        let mut stack: Vec<StateId> = self.initial.clone();
        for &s in &stack {
            forward[s] = true;
        }
        while let Some(s) = stack.pop() {
            for (_, t) in &self.edges[s] {
                if !forward[*t] {
                    forward[*t] = true;
                    stack.push(*t);
                }
            }
        }
        let mut preds = vec![Vec::new(); n];
        for (s, edges) in self.edges.iter().enumerate() {
            for (_, t) in edges {
                preds[*t].push(s);
            }
        }
        let mut backward = self.accepting.clone();
        let mut stack: Vec<StateId> = (0..n).filter(|&s| backward[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &preds[s] {
                if !backward[p] {
                    backward[p] = true;
                    stack.push(p);
                }
            }
        }
        let mut map = vec![None; n];
        let mut out = Nfa::new(self.alphabet.iter().cloned());
        for s in 0..n {
            if forward[s] && backward[s] {
                map[s] = Some(out.add_state(self.accepting[s]));
            }
        }
        for &s in &self.initial {
            if let Some(m) = map[s] {
                out.add_initial(m);
            }
        }
        for (s, edges) in self.edges.iter().enumerate() {
            let Some(from) = map[s] else { continue };
            for (sym, t) in edges {
                if let Some(to) = map[*t] {
                    out.add_transition(from, sym.clone(), to);
                }
            }
        }
        out
    }

    /// Every accepted word of length at most `max_len`.
    pub fn accepted_words(&self, max_len: usize) -> BTreeSet<Vec<S>> {
        let mut out = BTreeSet::new();
        let mut frontier: BTreeSet<(Vec<S>, StateId)> = BTreeSet::new();
        let mut start = self.initial.clone();
        let mut mark = vec![false; self.num_states()];
        for &s in &start {
            mark[s] = true;
        }
        self.close(&mut start, &mut mark);
        for s in start {
            frontier.insert((Vec::new(), s));
        }
        for len in 0..=max_len {
            for (w, s) in &frontier {
                if self.accepting[*s] {
                    out.insert(w.clone());
                }
            }
            if len == max_len {
                break;
            }
            let mut next = BTreeSet::new();
            for (w, s) in &frontier {
                for (sym, t) in &self.edges[*s] {
                    let Some(sym) = sym else { continue };
                    let mut reach = vec![*t];
                    let mut mark = vec![false; self.num_states()];
                    mark[*t] = true;
                    self.close(&mut reach, &mut mark);
                    let mut w2 = w.clone();
                    w2.push(sym.clone());
                    for r in reach {
                        next.insert((w2.clone(), r));
                    }
                }
            }
            frontier = next;
        }
        out
    }
}
