//! DOT and JSON renderings. State numbering is the internal one, which is
//! deterministic for every construction in this crate.

use std::fmt::Write as _;

use serde::Serialize;

use crate::automata::{Direction, Nfa, PairAutomaton, StateId, Symbol, Transducer};

/// Serializable form of any machine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MachineJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Direction>,
    pub states: usize,
    pub initial: Vec<StateId>,
    pub accepting: Vec<StateId>,
    pub input_alphabet: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_alphabet: Option<Vec<String>>,
    pub transitions: Vec<TransitionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionJson {
    pub from: StateId,
    /// `null` for ε.
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Vec<String>>,
    pub to: StateId,
}

fn strings<S: ToString>(xs: impl IntoIterator<Item = S>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_header(out: &mut String, name: &str, states: usize, initial: &[StateId], accepting: impl Fn(StateId) -> bool) {
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(name));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=record];");
    for s in 0..states {
        let role = match (initial.contains(&s), accepting(s)) {
            (true, true) => "initial|accepting",
            (true, false) => "initial",
            (false, true) => "accepting",
            (false, false) => "",
        };
        if role.is_empty() {
            let _ = writeln!(out, "  {s} [label=\"{s}\"];");
        } else {
            let _ = writeln!(out, "  {s} [label=\"{{{s}|{role}}}\"];");
        }
    }
}

impl<S: Symbol> Nfa<S> {
    pub fn to_json(&self) -> MachineJson {
        MachineJson {
            kind: "nfa",
            direction: None,
            states: self.num_states(),
            initial: self.initial().to_vec(),
            accepting: (0..self.num_states()).filter(|&s| self.is_accepting(s)).collect(),
            input_alphabet: strings(self.alphabet()),
            output_alphabet: None,
            transitions: (0..self.num_states())
                .flat_map(|s| {
                    self.transitions(s).iter().map(move |(sym, t)| TransitionJson {
                        from: s,
                        input: sym.as_ref().map(ToString::to_string),
                        output: None,
                        to: *t,
                    })
                })
                .collect(),
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        dot_header(&mut out, name, self.num_states(), self.initial(), |s| self.is_accepting(s));
        for s in 0..self.num_states() {
            for (sym, t) in self.transitions(s) {
                let label = sym.as_ref().map_or("ε".to_string(), ToString::to_string);
                let _ = writeln!(out, "  {s} -> {t} [label=\"{}\"];", dot_escape(&label));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl<I: Symbol, O: Symbol> Transducer<I, O> {
    pub fn to_json(&self) -> MachineJson {
        MachineJson {
            kind: "transducer",
            direction: None,
            states: self.num_states(),
            initial: self.initial().to_vec(),
            accepting: (0..self.num_states()).filter(|&s| self.is_accepting(s)).collect(),
            input_alphabet: strings(self.input_alphabet()),
            output_alphabet: Some(strings(self.output_alphabet())),
            transitions: (0..self.num_states())
                .flat_map(|s| {
                    self.edges(s).iter().map(move |e| TransitionJson {
                        from: s,
                        input: e.input.as_ref().map(ToString::to_string),
                        output: Some(strings(&e.output)),
                        to: e.target,
                    })
                })
                .collect(),
        }
    }

    /// Edges are labelled `in/out`, with `ε` for an empty side.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        dot_header(&mut out, name, self.num_states(), self.initial(), |s| self.is_accepting(s));
        for s in 0..self.num_states() {
            for e in self.edges(s) {
                let input = e.input.as_ref().map_or("ε".to_string(), ToString::to_string);
                let output = if e.output.is_empty() { "ε".to_string() } else { strings(&e.output).join(" ") };
                let _ =
                    writeln!(out, "  {s} -> {} [label=\"{}\"];", e.target, dot_escape(&format!("{input}/{output}")));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl<S: Symbol> PairAutomaton<S> {
    pub fn to_json(&self) -> MachineJson {
        MachineJson { kind: "pair-automaton", direction: Some(self.direction), ..self.nfa.to_json() }
    }

    /// Edges are labelled `(l,r)` with `$` for padding.
    pub fn to_dot(&self, name: &str) -> String {
        self.nfa.to_dot(name)
    }
}
