//! Exhaustive verification sweeps, grouped in the suites run by
//! `plactic verify`.
//!
//! Every check enumerates all small instances up to the configured rank and
//! word length and compares two independent computations of the same thing.
//! Failures are counted; the first few are kept as witnesses.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::automata::{decode_pairs, synchronize_with_limit, Direction, Transducer};
use crate::column::Column;
use crate::enumerate::{column_readings_up_to, tableaux_up_to, words_up_to};
use crate::error::Result;
use crate::exec::Executor;
use crate::knuth::{knuth_class, lds, lnds, DEFAULT_CLASS_LIMIT};
use crate::multipliers::{
    column_delay, general_multiplier, is_in_k, k_acceptor, l_acceptor, lifted_multiplier, multiplier,
    multiplier_pair_automata, right_multiply_traced, Side, LETTER_DELAY,
};
use crate::rewriting::{
    decode_word, encode_word, gsb_export, product_columns, ColumnProduct, ColumnWord, OrderKey, RewritingSystem,
};
use crate::tableau::tableau_of_word;
use crate::word::{Letter, Rank, Word};

const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Rewriting,
    Automata,
    Multipliers,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Core, Suite::Rewriting, Suite::Automata, Suite::Multipliers];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Rewriting => "rewriting",
            Suite::Automata => "automata",
            Suite::Multipliers => "multipliers",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub rank: Rank,
    pub max_len: usize,
    pub executor: Executor,
    pub class_limit: usize,
    pub state_limit: usize,
}

impl VerifyConfig {
    pub fn new(rank: Rank, max_len: usize) -> VerifyConfig {
        VerifyConfig {
            rank,
            max_len,
            executor: Executor::default(),
            class_limit: DEFAULT_CLASS_LIMIT,
            state_limit: crate::automata::DEFAULT_STATE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub witnesses: Vec<String>,
}

impl Check {
    fn new(name: &str, checked: usize, failures: Vec<String>) -> Check {
        Check {
            name: name.to_string(),
            checked,
            failed: failures.len(),
            witnesses: failures.into_iter().take(MAX_WITNESSES).collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub rank: usize,
    pub max_len: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "pass" } else { "FAIL" };
        let _ =
            writeln!(out, "suite {} (rank {}, max length {}): {status}", self.suite.name(), self.rank, self.max_len);
        for c in &self.checks {
            if c.passed() {
                let _ = writeln!(out, "  ok    {}: {} checked", c.name, c.checked);
            } else {
                let _ = writeln!(out, "  FAIL  {}: {} of {} failed", c.name, c.failed, c.checked);
                for w in &c.witnesses {
                    let _ = writeln!(out, "          {w}");
                }
            }
        }
        out
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    let checks = match suite {
        Suite::Core => core_checks(cfg)?,
        Suite::Rewriting => rewriting_checks(cfg)?,
        Suite::Automata => automata_checks(cfg)?,
        Suite::Multipliers => multiplier_checks(cfg)?,
    };
    Ok(Report { suite, rank: cfg.rank.get(), max_len: cfg.max_len, checks })
}

fn show(w: &[Letter]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        Word::from(w.to_vec()).to_string()
    }
}

fn show_set(s: &BTreeSet<Vec<Letter>>) -> String {
    let parts: Vec<String> = s.iter().map(|w| show(w)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Knuth classes of all the given words, as class numbers.
fn knuth_partition(words: &[Word], limit: usize) -> Result<HashMap<Vec<Letter>, usize>> {
    let mut class_of: HashMap<Vec<Letter>, usize> = HashMap::new();
    let mut next = 0;
    for w in words {
        if class_of.contains_key(w.letters()) {
            continue;
        }
        for member in knuth_class(w, limit)? {
            class_of.insert(member, next);
        }
        next += 1;
    }
    Ok(class_of)
}

fn core_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (rank, ex) = (cfg.rank, cfg.executor);
    let words = words_up_to(rank, cfg.max_len);
    let mut checks = Vec::new();

    let failures = ex.collect_failures(&words, |w| {
        let p = tableau_of_word(w);
        let (c, r) = (lnds(w), lds(w));
        if p.num_columns() == c && p.num_rows() == r {
            vec![]
        } else {
            vec![format!("{}: shape {}x{}, lnds {c}, lds {r}", show(w), p.num_columns(), p.num_rows())]
        }
    });
    checks.push(Check::new("columns = lnds, rows = lds", words.len(), failures));

    let class_of = knuth_partition(&words, cfg.class_limit)?;
    let failures = ex.collect_failures(&words, |w| {
        let p = tableau_of_word(w);
        let mut out = Vec::new();
        for (kind, r) in [("column", p.column_reading()), ("row", p.row_reading())] {
            if class_of.get(r.letters()) != class_of.get(w.letters()) {
                out.push(format!("{} is not Knuth equivalent to its {kind} reading {r}", show(w)));
            }
        }
        if p.row_reading().len() != w.len() {
            out.push(format!("{}: length changed", show(w)));
        }
        out
    });
    checks.push(Check::new("word ≡ column reading ≡ row reading", words.len(), failures));

    let mut failures = Vec::new();
    let mut pairs = 0;
    for len in 0..=cfg.max_len {
        let layer: Vec<&Word> = words.iter().filter(|w| w.len() == len).collect();
        pairs += layer.len() * layer.len();
        let mut tableau_of_class = HashMap::new();
        let mut class_of_tableau = HashMap::new();
        for w in layer {
            let c = class_of[w.letters()];
            let p = tableau_of_word(w);
            if let Some(q) = tableau_of_class.insert(c, p.clone()) {
                if q != p {
                    failures.push(format!("{} is Knuth equivalent to a word with another tableau", show(w)));
                }
            }
            if let Some(d) = class_of_tableau.insert(p, c) {
                if d != c {
                    failures.push(format!("{} shares its tableau with an inequivalent word", show(w)));
                }
            }
        }
    }
    checks.push(Check::new("knuth equivalent ⇔ same tableau", pairs, failures));

    let shorter: Vec<&Word> = words.iter().filter(|w| w.len() < cfg.max_len).collect();
    let letters: Vec<Letter> = rank.letters().collect();
    let failures = ex.collect_failures(&shorter, |w| {
        let t = tableau_of_word(w);
        let mut out = Vec::new();
        for &g in &letters {
            let (_, trace) = t.insert_traced(g);
            let local = trace.windows(2).all(|p| p[1].row == p[0].row + 1 && p[1].column <= p[0].column);
            if !local {
                out.push(format!("inserting {g} after {}: bump moved right", show(w)));
            }
        }
        out
    });
    checks.push(Check::new("bumping moves weakly left", shorter.len() * letters.len(), failures));

    let cols = Column::all(Rank::new(rank.get().min(5))?);
    let failures = ex.collect_failures(&cols, |&a| {
        let mut out = Vec::new();
        if !a.column_ge(a) {
            out.push(format!("{a} ⋡ {a}"));
        }
        for &b in &cols {
            if a != b && a.column_ge(b) && b.column_ge(a) {
                out.push(format!("{a} and {b} are mutually ⪰"));
            }
            for &c in &cols {
                if a.column_ge(b) && b.column_ge(c) && !a.column_ge(c) {
                    out.push(format!("{a} ⪰ {b} ⪰ {c} but {a} ⋡ {c}"));
                }
            }
        }
        out
    });
    checks.push(Check::new("⪰ is a partial order", cols.len().pow(3), failures));
    Ok(checks)
}

fn rewriting_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (rank, ex) = (cfg.rank, cfg.executor);
    let system = RewritingSystem::generate(rank)?;
    let cols = Column::all(rank);
    let mut checks = Vec::new();

    let failures = ex.collect_failures(&cols, |&a| {
        let mut out = Vec::new();
        for &b in &cols {
            if a.column_ge(b) == system.rule_for(a, b).is_some() {
                out.push(format!("pair c_{a} c_{b}: comparable and rule presence disagree"));
            }
            let ab: Vec<Letter> = a.letters().chain(b.letters()).collect();
            let p = tableau_of_word(&ab);
            match product_columns(a, b) {
                ColumnProduct::Irreducible => {}
                ColumnProduct::One(c) if p.columns() == [c] => {}
                ColumnProduct::Two(c, d) if p.columns() == [c, d] && c.len() > a.len() => {}
                other => out.push(format!("c_{a} c_{b}: bad product {other:?}")),
            }
        }
        out
    });
    checks.push(Check::new("one rule per incomparable pair, at most two columns", cols.len().pow(2), failures));

    let failures = match system.check_termination(OrderKey) {
        Ok(_) => vec![],
        Err(e) => vec![e.to_string()],
    };
    checks.push(Check::new("every rule decreases", system.len(), failures));

    let pairs = system.critical_pairs();
    let failures = pairs
        .iter()
        .filter(|p| !p.converged)
        .map(|p| format!("overlap {}: {} vs {}", ColumnWord::from(p.overlap.to_vec()), p.left_normal, p.right_normal))
        .collect();
    checks.push(Check::new("critical pairs converge", pairs.len(), failures));

    let words = words_up_to(rank, cfg.max_len);
    let failures = ex.collect_failures(&words, |w| {
        let nf = system.normalize(&encode_word(w));
        let decoded = decode_word(&nf);
        let want = tableau_of_word(w).column_reading();
        let mut sorted_in = w.to_vec();
        let mut sorted_out = decoded.to_vec();
        sorted_in.sort();
        sorted_out.sort();
        if decoded == want && sorted_in == sorted_out && is_in_k(&nf) {
            vec![]
        } else {
            vec![format!("{}: normal form {nf}, column reading {want}", show(w))]
        }
    });
    checks.push(Check::new("normal form = column reading of P(w)", words.len(), failures));

    let short = column_words_up_to(&cols, 3);
    let failures = ex.collect_failures(&short, |u| {
        let fixed = system.normalize(u).symbols() == &u[..];
        if fixed == is_in_k(u) && fixed == system.is_normal(u) {
            vec![]
        } else {
            vec![format!("{}: normal {fixed}, in K {}", ColumnWord::from(u.clone()), is_in_k(u))]
        }
    });
    checks.push(Check::new("normal forms are exactly K", short.len(), failures));

    let basis = gsb_export(&system, OrderKey)?;
    let rules = system.rules();
    let mut failures = Vec::new();
    if basis.elements.len() != rules.len() {
        failures.push(format!("{} binomials for {} rules", basis.elements.len(), rules.len()));
    }
    for (b, r) in basis.elements.iter().zip(&rules) {
        if b.leading != r.lhs || b.trailing != r.rhs || !OrderKey.word_less(&b.trailing, &b.leading) {
            failures.push(format!("binomial {} - {} does not match rule {r}", b.leading, b.trailing));
        }
    }
    checks.push(Check::new("Gröbner–Shirshov basis matches the rules", rules.len(), failures));
    Ok(checks)
}

fn column_words_up_to(cols: &[Column], max_len: usize) -> Vec<Vec<Column>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<Column>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|p| cols.iter().map(move |&c| [p.clone(), vec![c]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn gammas(rank: Rank) -> Vec<Option<Letter>> {
    std::iter::once(None).chain(rank.letters().map(Some)).collect()
}

fn outputs_up_to<I: crate::automata::Symbol, O: crate::automata::Symbol>(
    t: &Transducer<I, O>,
    u: &[I],
    max_len: usize,
) -> Result<BTreeSet<Vec<O>>> {
    Ok(t.outputs(u, 1 << 16)?.into_iter().filter(|v| v.len() <= max_len).collect())
}

fn automata_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (rank, ex) = (cfg.rank, cfg.executor);
    let words = words_up_to(rank, cfg.max_len);
    let mut checks = Vec::new();

    let duals = words_up_to(Rank::new(rank.get().min(3))?, cfg.max_len.min(6));
    let failures = ex.collect_failures(&duals, |u| {
        let mut out = Vec::new();
        for v in &duals {
            let mut r = crate::automata::delta_r(u, v);
            r.reverse();
            if r != crate::automata::delta_l(&u.reversed(), &v.reversed()) {
                out.push(format!("({}, {})", show(u), show(v)));
            }
        }
        out
    });
    checks.push(Check::new("δ_R(u,v) reversed = δ_L(rev u, rev v)", duals.len().pow(2), failures));

    let mut machines = Vec::new();
    for side in [Side::Right, Side::Left] {
        for g in gammas(rank) {
            machines.push((side, g, lifted_multiplier(rank, side, g)?));
        }
    }

    let mut failures = Vec::new();
    let mut checked = 0;
    for (side, g, t) in &machines {
        for d in [Direction::Right, Direction::Left] {
            let p = synchronize_with_limit(t, d, LETTER_DELAY, cfg.state_limit)?;
            let per_word: Vec<Result<Vec<String>>> = ex.map(&words, |u| {
                let want = outputs_up_to(t, u, cfg.max_len + 1)?;
                let got = p.partners(u, cfg.max_len + 1);
                Ok(if got == want {
                    vec![]
                } else {
                    vec![format!(
                        "{side} {} δ_{d}, u = {}: {} vs {}",
                        label(*g),
                        show(u),
                        show_set(&got),
                        show_set(&want)
                    )]
                })
            });
            for r in per_word {
                failures.extend(r?);
            }
            checked += words.len();
            for s in p.nfa.accepted_words(cfg.max_len + 1) {
                checked += 1;
                if decode_pairs(d, &s).is_none() {
                    failures.push(format!("{side} {} δ_{d} accepts a malformed string", label(*g)));
                }
            }
        }
    }
    checks.push(Check::new("synchronized multipliers over A agree with the transducers", checked, failures));

    let small = Rank::new(rank.get().min(2))?;
    let cols = Column::all(small);
    let cwords = column_words_up_to(&cols, 3.min(cfg.max_len));
    let mut failures = Vec::new();
    let mut checked = 0;
    for side in [Side::Right, Side::Left] {
        for g in small.letters() {
            let t = multiplier(small, side, g)?;
            for d in [Direction::Right, Direction::Left] {
                let p = synchronize_with_limit(&t, d, column_delay(small), cfg.state_limit)?;
                for u in &cwords {
                    checked += 1;
                    let want: BTreeSet<Vec<Column>> = outputs_up_to(&t, u, 4)?;
                    if p.partners(u, 4) != want {
                        failures.push(format!("{side} {g} δ_{d} over C disagrees on {}", ColumnWord::from(u.clone())));
                    }
                }
            }
        }
    }
    checks.push(Check::new("synchronized multipliers over C agree with the transducers", checked, failures));

    let mut failures = Vec::new();
    let mut checked = 0;
    for (side, g, t) in &machines {
        let rev = t.reversed();
        let back = rev.reversed();
        for u in &words {
            checked += 1;
            let fwd = outputs_up_to(t, u, cfg.max_len + 1)?;
            let flipped: BTreeSet<Vec<Letter>> = fwd.iter().map(|v| v.iter().rev().copied().collect()).collect();
            if outputs_up_to(&rev, &u.reversed(), cfg.max_len + 1)? != flipped
                || outputs_up_to(&back, u, cfg.max_len + 1)? != fwd
            {
                failures.push(format!("{side} {}: reversal disagrees on {}", label(*g), show(u)));
            }
        }
    }
    checks.push(Check::new("reversal", checked, failures));

    let short: Vec<&Word> = words.iter().filter(|w| w.len() <= cfg.max_len.min(5)).collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    let singles: Vec<_> = machines.iter().filter(|(s, g, _)| *s == Side::Right && g.is_some()).collect();
    for (_, g1, t1) in &singles {
        for (_, g2, t2) in &singles {
            let composed = t1.compose(t2);
            for u in &short {
                checked += 1;
                let mut want = BTreeSet::new();
                for v in t1.outputs(u, 1 << 16)? {
                    want.extend(t2.outputs(&v, 1 << 16)?);
                }
                if composed.outputs(u, 1 << 16)? != want {
                    failures.push(format!("{} then {} on {}", label(*g1), label(*g2), show(u)));
                }
            }
        }
    }
    checks.push(Check::new("composition = relational composite", checked, failures));
    Ok(checks)
}

fn label(g: Option<Letter>) -> String {
    g.map_or("ε".to_string(), |g| g.to_string())
}

fn multiplier_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (rank, ex) = (cfg.rank, cfg.executor);
    let system = RewritingSystem::generate(rank)?;
    let cols = Column::all(rank);
    let mut checks = Vec::new();

    let k = k_acceptor(rank);
    let short = column_words_up_to(&cols, 3);
    let failures = ex.collect_failures(&short, |u| {
        if k.accepts(u) == system.is_normal(u) {
            vec![]
        } else {
            vec![format!("K acceptor wrong on {}", ColumnWord::from(u.clone()))]
        }
    });
    checks.push(Check::new("K acceptor = normal forms", short.len(), failures));

    let tableaux = tableaux_up_to(rank, cfg.max_len);
    let ks: Vec<Vec<Column>> = tableaux.iter().map(|t| t.columns().to_vec()).collect();
    for side in [Side::Right, Side::Left] {
        let mut failures = Vec::new();
        let mut checked = 0;
        for g in rank.letters() {
            let t = multiplier(rank, side, g)?;
            let per: Vec<Result<Vec<String>>> = ex.map(&ks, |u| {
                let c = Column::singleton(g);
                let product = match side {
                    Side::Right => [u.clone(), vec![c]].concat(),
                    Side::Left => [vec![c], u.clone()].concat(),
                };
                let want = BTreeSet::from([system.normalize(&product).into_symbols()]);
                let got = t.outputs(u, 1 << 16)?;
                Ok(if got == want { vec![] } else { vec![format!("{side} by {g} on {}", ColumnWord::from(u.clone()))] })
            });
            for r in per {
                failures.extend(r?);
            }
            checked += ks.len();
            for u in short.iter().filter(|u| !is_in_k(u)) {
                checked += 1;
                if !t.outputs(u, 1 << 16)?.is_empty() {
                    failures.push(format!("{side} by {g} accepts {} outside K", ColumnWord::from(u.clone())));
                }
            }
        }
        let name = format!("{side} multiplier over C = normalize, domain K");
        checks.push(Check::new(&name, checked, failures));
    }

    let words = words_up_to(rank, cfg.max_len);
    let l = l_acceptor(rank);
    for side in [Side::Right, Side::Left] {
        let mut failures = Vec::new();
        for g in rank.letters() {
            let t = lifted_multiplier(rank, side, Some(g))?;
            let per: Vec<Result<Vec<String>>> = ex.map(&words, |u| {
                let want = if l.accepts(u) {
                    BTreeSet::from([tableau_of_word(&times(side, u, g)).column_reading().into_letters()])
                } else {
                    BTreeSet::new()
                };
                let got = t.outputs(u, 1 << 16)?;
                Ok(if got == want {
                    vec![]
                } else {
                    vec![format!("{side} by {g} on {}: {} vs {}", show(u), show_set(&got), show_set(&want))]
                })
            });
            for r in per {
                failures.extend(r?);
            }
        }
        let name = format!("lifted {side} multiplier over A");
        checks.push(Check::new(&name, words.len() * rank.get(), failures));
    }

    let ls = column_readings_up_to(rank, cfg.max_len);
    let mut failures = Vec::new();
    let mut checked = 0;
    for g in gammas(rank) {
        let automata = multiplier_pair_automata(rank, g, LETTER_DELAY, cfg.state_limit)?;
        for (side, d, p) in automata.all() {
            let per = ex.map(&ls, |u| {
                let product = match g {
                    Some(g) => times(side, u, g),
                    None => u.to_vec(),
                };
                let v = tableau_of_word(&product).column_reading().into_letters();
                let want: BTreeSet<Vec<Letter>> = [v].into_iter().filter(|v| v.len() <= cfg.max_len).collect();
                let got = p.partners(u, cfg.max_len);
                if got == want {
                    vec![]
                } else {
                    vec![format!(
                        "{side} {} δ_{d}, u = {}: {} vs {}",
                        label(g),
                        show(u),
                        show_set(&got),
                        show_set(&want)
                    )]
                }
            });
            checked += ls.len() * ls.len();
            failures.extend(per.into_iter().flatten());
        }
    }
    checks.push(Check::new("padded multiplier automata = P(uγ) = P(v)", checked, failures));

    let accepted = l.accepted_words(cfg.max_len);
    let mut failures = Vec::new();
    let mut seen = HashSet::new();
    for u in &accepted {
        let p = tableau_of_word(u);
        if p.column_reading().letters() != &u[..] || !seen.insert(p) {
            failures.push(format!("{} is not the column reading of its own tableau", show(u)));
        }
    }
    if accepted.len() != tableaux.len() {
        failures.push(format!("{} words in L but {} tableaux", accepted.len(), tableaux.len()));
    }
    checks.push(Check::new("L is a cross-section", accepted.len(), failures));

    let smaller: Vec<&crate::tableau::Tableau> = tableaux.iter().filter(|t| t.len() < cfg.max_len).collect();
    let failures = ex.collect_failures(&smaller, |t| {
        let mut out = Vec::new();
        for g in rank.letters() {
            let (prod, cells) = right_multiply_traced(t.columns(), g);
            let want = t.insert(g);
            let single_pass = cells.windows(2).all(|p| p[1].row == p[0].row + 1 && p[1].column <= p[0].column);
            if prod != want.columns() || !single_pass {
                out.push(format!("inserting {g} into {}", show(&t.column_reading())));
            }
        }
        out
    });
    checks.push(Check::new("column-wise insertion moves weakly left", smaller.len() * rank.get(), failures));

    let two = Rank::new(rank.get().min(2))?;
    let mut failures = Vec::new();
    let mut checked = 0;
    let ls2 = column_readings_up_to(two, cfg.max_len.min(5));
    let factors: Vec<Word> =
        two.letters().flat_map(|a| two.letters().map(move |b| Word::from_letters(vec![a, b]))).collect();
    for b in factors {
        let t = general_multiplier(two, Side::Right, &b)?;
        for u in &ls2 {
            checked += 1;
            let want = BTreeSet::from([tableau_of_word(&u.concat(&b)).column_reading().into_letters()]);
            if t.outputs(u, 1 << 16)? != want {
                failures.push(format!("right by {b} on {}", show(u)));
            }
        }
    }
    checks.push(Check::new("multiplying by a word chains the letters", checked, failures));
    Ok(checks)
}

fn times(side: Side, u: &[Letter], g: Letter) -> Vec<Letter> {
    match side {
        Side::Right => [u, &[g]].concat(),
        Side::Left => [&[g], u].concat(),
    }
}
