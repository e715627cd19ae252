use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::automata::{Nfa, StateId, Symbol};
use crate::error::{Error, Result};

/// A transition reading at most one input symbol and writing a word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge<I, O> {
    pub input: Option<I>,
    pub output: Vec<O>,
    pub target: StateId,
}

/// A finite transducer recognizing a rational relation between `I*` and
/// `O*`. Several initial states are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transducer<I, O> {
    input_alphabet: BTreeSet<I>,
    output_alphabet: BTreeSet<O>,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    edges: Vec<Vec<Edge<I, O>>>,
}

impl<I: Symbol, O: Symbol> Transducer<I, O> {
    pub fn new(
        input_alphabet: impl IntoIterator<Item = I>,
        output_alphabet: impl IntoIterator<Item = O>,
    ) -> Transducer<I, O> {
        Transducer {
            input_alphabet: input_alphabet.into_iter().collect(),
            output_alphabet: output_alphabet.into_iter().collect(),
            initial: Vec::new(),
            accepting: Vec::new(),
            edges: Vec::new(),
        }
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

    pub fn add_edge(&mut self, from: StateId, input: Option<I>, output: Vec<O>, to: StateId) {
        assert!(to < self.num_states(), "unknown state {to}");
        if let Some(i) = &input {
            assert!(self.input_alphabet.contains(i), "input symbol {i} not in the alphabet");
        }
        for o in &output {
            assert!(self.output_alphabet.contains(o), "output symbol {o} not in the alphabet");
        }
        let edge = Edge { input, output, target: to };
        if !self.edges[from].contains(&edge) {
            self.edges[from].push(edge);
        }
    }

    pub fn input_alphabet(&self) -> &BTreeSet<I> {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &BTreeSet<O> {
        &self.output_alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn edges(&self, state: StateId) -> &[Edge<I, O>] {
        &self.edges[state]
    }

    /// The identity relation restricted to the language of `nfa`.
    pub fn identity(nfa: &Nfa<I>) -> Transducer<I, I> {
        let mut t = Transducer::new(nfa.alphabet().iter().cloned(), nfa.alphabet().iter().cloned());
        for s in 0..nfa.num_states() {
            t.add_state(nfa.is_accepting(s));
        }
        for &s in nfa.initial() {
            t.add_initial(s);
        }
        for s in 0..nfa.num_states() {
            for (sym, to) in nfa.transitions(s) {
                let out = sym.iter().cloned().collect();
                t.add_edge(s, sym.clone(), out, *to);
            }
        }
        t
    }

    /// Every output `v` with `(input, v)` in the relation, found by
    /// breadth-first search over configurations. Fails once more than
    /// `limit` configurations have been visited, which is what happens on
    /// relations with infinitely many images.
    pub fn outputs(&self, input: &[I], limit: usize) -> Result<BTreeSet<Vec<O>>> {
        let mut seen: HashSet<(StateId, usize, Vec<O>)> = HashSet::new();
        let mut queue = VecDeque::new();
        for &s in &self.initial {
            if seen.insert((s, 0, Vec::new())) {
                queue.push_back((s, 0, Vec::new()));
            }
        }
        let mut out = BTreeSet::new();
        while let Some((s, pos, written)) = queue.pop_front() {
            if pos == input.len() && self.accepting[s] {
                out.insert(written.clone());
            }
            for e in &self.edges[s] {
                let next_pos = match &e.input {
                    None => pos,
                    Some(a) if input.get(pos) == Some(a) => pos + 1,
                    Some(_) => continue,
                };
                let mut w = written.clone();
                w.extend(e.output.iter().cloned());
                let config = (e.target, next_pos, w);
                if !seen.contains(&config) {
                    if seen.len() >= limit {
                        return Err(Error::ResourceLimit { what: "transducer configurations", limit });
                    }
                    seen.insert(config.clone());
                    queue.push_back(config);
                }
            }
        }
        Ok(out)
    }

    /// Whether `(input, output)` belongs to the relation.
    pub fn accepts_pair(&self, input: &[I], output: &[O]) -> bool {
        let (m, n) = (input.len() + 1, output.len() + 1);
        let idx = |s: StateId, i: usize, j: usize| (s * m + i) * n + j;
        let mut seen = vec![false; self.num_states() * m * n];
        let mut stack = Vec::new();
        for &s in &self.initial {
            if !seen[idx(s, 0, 0)] {
                seen[idx(s, 0, 0)] = true;
                stack.push((s, 0, 0));
            }
        }
        while let Some((s, i, j)) = stack.pop() {
            if i == input.len() && j == output.len() && self.accepting[s] {
                return true;
            }
            for e in &self.edges[s] {
                let ni = match &e.input {
                    None => i,
                    Some(a) if input.get(i) == Some(a) => i + 1,
                    Some(_) => continue,
                };
                let nj = j + e.output.len();
                if nj > output.len() || output[j..nj] != e.output[..] {
                    continue;
                }
                let k = idx(e.target, ni, nj);
                if !seen[k] {
                    seen[k] = true;
                    stack.push((e.target, ni, nj));
                }
            }
        }
        false
    }

    /// Recognizes `{(rev u, rev v) : (u, v) in R}`: every edge is turned
    /// around (with its output reversed) and initial and accepting states
    /// swap roles.
    pub fn reversed(&self) -> Transducer<I, O> {
        let mut t = Transducer::new(self.input_alphabet.clone(), self.output_alphabet.clone());
        for s in 0..self.num_states() {
            t.add_state(self.initial.contains(&s));
        }
        for s in 0..self.num_states() {
            if self.accepting[s] {
                t.add_initial(s);
            }
        }
        for (s, edges) in self.edges.iter().enumerate() {
            for e in edges {
                let out = e.output.iter().rev().cloned().collect();
                t.add_edge(e.target, e.input.clone(), out, s);
            }
        }
        t
    }

    /// The inverse relation `{(v, u) : (u, v) in R}`. An edge writing a word
    /// of length `k ≥ 2` becomes a chain of `k` edges; the original input
    /// symbol is written on the first edge of the chain.
    pub fn inverse(&self) -> Transducer<O, I> {
        let mut t = Transducer::new(self.output_alphabet.clone(), self.input_alphabet.clone());
        for s in 0..self.num_states() {
            t.add_state(self.accepting[s]);
        }
        for &s in &self.initial {
            t.add_initial(s);
        }
        for (s, edges) in self.edges.iter().enumerate() {
            for e in edges {
                let written: Vec<I> = e.input.iter().cloned().collect();
                if e.output.is_empty() {
                    t.add_edge(s, None, written, e.target);
                    continue;
                }
                let mut from = s;
                for (k, o) in e.output.iter().enumerate() {
                    let last = k + 1 == e.output.len();
                    let to = if last { e.target } else { t.add_state(false) };
                    let out = if k == 0 { written.clone() } else { Vec::new() };
                    t.add_edge(from, Some(o.clone()), out, to);
                    from = to;
                }
            }
        }
        t
    }

    /// An equivalent transducer in which every edge writes at most one
    /// symbol.
    pub fn split_outputs(&self) -> Transducer<I, O> {
        let mut t = self.clone();
        for s in 0..self.num_states() {
            let long: Vec<Edge<I, O>> = self.edges[s].iter().filter(|e| e.output.len() > 1).cloned().collect();
            t.edges[s].retain(|e| e.output.len() <= 1);
            for e in long {
                let mut from = s;
                let mut input = e.input.clone();
                for (k, o) in e.output.iter().enumerate() {
                    let to = if k + 1 == e.output.len() { e.target } else { t.add_state(false) };
                    t.add_edge(from, input.take(), vec![o.clone()], to);
                    from = to;
                }
            }
        }
        t
    }

    /// Relational composition: `(u, w)` is accepted iff some `v` has
    /// `(u, v)` in `self` and `(v, w)` in `next`.
    ///
    /// Product construction over `self` (with outputs split to single
    /// symbols) and `next`; only reachable and co-reachable pairs are kept.
    pub fn compose<P: Symbol>(&self, next: &Transducer<O, P>) -> Transducer<I, P> {
        let first = self.split_outputs();
        let mut t = Transducer::new(self.input_alphabet.clone(), next.output_alphabet.clone());
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut intern = |t: &mut Transducer<I, P>, queue: &mut VecDeque<_>, p: StateId, q: StateId| {
            if let Some(&id) = ids.get(&(p, q)) {
                return id;
            }
            let id = t.add_state(first.accepting[p] && next.accepting[q]);
            ids.insert((p, q), id);
            queue.push_back((p, q, id));
            id
        };
        for &p in &first.initial {
            for &q in &next.initial {
                let id = intern(&mut t, &mut queue, p, q);
                t.add_initial(id);
            }
        }
        while let Some((p, q, from)) = queue.pop_front() {
            for e in &first.edges[p] {
                match e.output.first() {
                    None => {
                        let to = intern(&mut t, &mut queue, e.target, q);
                        t.add_edge(from, e.input.clone(), Vec::new(), to);
                    }
                    Some(b) => {
                        for f in next.edges[q].iter().filter(|f| f.input.as_ref() == Some(b)) {
                            let to = intern(&mut t, &mut queue, e.target, f.target);
                            t.add_edge(from, e.input.clone(), f.output.clone(), to);
                        }
                    }
                }
            }
            for f in next.edges[q].iter().filter(|f| f.input.is_none()) {
                let to = intern(&mut t, &mut queue, p, f.target);
                t.add_edge(from, None, f.output.clone(), to);
            }
        }
        t.trim()
    }

    /// Drops states that are unreachable or cannot reach an accepting
    /// state. Surviving states keep their relative order.
    pub fn trim(&self) -> Transducer<I, O> {
        let n = self.num_states();
        let mut forward = vec![false; n];
        let mut stack = self.initial.clone();
        for &s in &stack {
            forward[s] = true;
        }
        while let Some(s) = stack.pop() {
            for e in &self.edges[s] {
                if !forward[e.target] {
                    forward[e.target] = true;
                    stack.push(e.target);
                }
            }
        }
        let mut preds = vec![Vec::new(); n];
        for (s, edges) in self.edges.iter().enumerate() {
            for e in edges {
                preds[e.target].push(s);
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
        let mut t = Transducer::new(self.input_alphabet.clone(), self.output_alphabet.clone());
        for s in 0..n {
            if forward[s] && backward[s] {
                map[s] = Some(t.add_state(self.accepting[s]));
            }
        }
        for &s in &self.initial {
            if let Some(m) = map[s] {
                t.add_initial(m);
            }
        }
        for (s, edges) in self.edges.iter().enumerate() {
            let Some(from) = map[s] else { continue };
            for e in edges {
                if let Some(to) = map[e.target] {
                    t.add_edge(from, e.input.clone(), e.output.clone(), to);
                }
            }
        }
        t
    }

    /// The image of the whole input language: an automaton for
    /// `{v : (u, v) in R for some u}`.
    pub fn output_language(&self) -> Nfa<O> {
        let mut nfa = Nfa::new(self.output_alphabet.iter().cloned());
        for s in 0..self.num_states() {
            nfa.add_state(self.accepting[s]);
        }
        for &s in &self.initial {
            nfa.add_initial(s);
        }
        for (s, edges) in self.edges.iter().enumerate() {
            for e in edges {
                if e.output.is_empty() {
                    nfa.add_transition(s, None, e.target);
                    continue;
                }
                let mut from = s;
                for (k, o) in e.output.iter().enumerate() {
                    let to = if k + 1 == e.output.len() { e.target } else { nfa.add_state(false) };
                    nfa.add_transition(from, Some(o.clone()), to);
                    from = to;
                }
            }
        }
        nfa.trim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_ab() -> Transducer<char, char> {
        let mut t = Transducer::new(['a', 'b', 'c'], ['a', 'b', 'c']);
        let s = t.add_state(true);
        t.add_initial(s);
        for x in ['a', 'b', 'c'] {
            t.add_edge(s, Some(x), vec![x], s);
        }
        t
    }

    /// Accepts exactly the pair ("ab", "c").
    fn single_pair() -> Transducer<char, char> {
        let mut t = Transducer::new(['a', 'b', 'c'], ['a', 'b', 'c']);
        let s0 = t.add_state(false);
        let s1 = t.add_state(false);
        let s2 = t.add_state(true);
        t.add_initial(s0);
        t.add_edge(s0, Some('a'), vec![], s1);
        t.add_edge(s1, Some('b'), vec!['c'], s2);
        t
    }

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn identity_outputs() {
        let t = identity_ab();
        let outs = t.outputs(&chars("abc"), 1000).unwrap();
        assert_eq!(outs, BTreeSet::from([chars("abc")]));
        let empty: Transducer<char, char> = Transducer::new(['a'], ['a']);
        assert!(empty.outputs(&chars("a"), 1000).unwrap().is_empty());
    }

    #[test]
    fn reversal() {
        let t = single_pair().reversed();
        assert!(t.accepts_pair(&chars("ba"), &chars("c")));
        assert!(!t.accepts_pair(&chars("ab"), &chars("c")));
        let back = t.reversed();
        assert!(back.accepts_pair(&chars("ab"), &chars("c")));
        assert_eq!(identity_ab().reversed().outputs(&chars("ab"), 100).unwrap().len(), 1);
    }

    #[test]
    fn composition_of_singletons() {
        // ("ab","c") then ("c","aa")
        let mut second = Transducer::new(['a', 'b', 'c'], ['a', 'b', 'c']);
        let s0 = second.add_state(false);
        let s1 = second.add_state(true);
        second.add_initial(s0);
        second.add_edge(s0, Some('c'), vec!['a', 'a'], s1);
        let comp = single_pair().compose(&second);
        assert_eq!(comp.outputs(&chars("ab"), 100).unwrap(), BTreeSet::from([chars("aa")]));
        let with_id = identity_ab().compose(&single_pair());
        assert!(with_id.accepts_pair(&chars("ab"), &chars("c")));
        assert!(!with_id.accepts_pair(&chars("a"), &chars("c")));
    }

    #[test]
    fn epsilon_output_loop_hits_limit() {
        let mut t = Transducer::new(['a'], ['a']);
        let s = t.add_state(true);
        t.add_initial(s);
        t.add_edge(s, None, vec!['a'], s);
        assert!(matches!(t.outputs(&[], 50), Err(Error::ResourceLimit { .. })));
        assert!(t.accepts_pair(&[], &chars("aaa")));
    }

    #[test]
    fn inverse_and_split() {
        let mut t = Transducer::new(['x'], ['a', 'b']);
        let s = t.add_state(true);
        t.add_initial(s);
        t.add_edge(s, Some('x'), vec!['a', 'b'], s);
        let inv = t.inverse();
        assert!(inv.accepts_pair(&chars("abab"), &chars("xx")));
        assert!(!inv.accepts_pair(&chars("aba"), &chars("xx")));
        let split = t.split_outputs();
        assert!(split.edges.iter().flatten().all(|e| e.output.len() <= 1));
        assert!(split.accepts_pair(&chars("xx"), &chars("abab")));
        let lang = t.output_language();
        assert!(lang.accepts(&chars("abab")));
        assert!(!lang.accepts(&chars("aab")));
    }
}
