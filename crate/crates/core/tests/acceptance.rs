//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Expected values come from the oracles at the top of this file: a
//! row-based Schensted insertion on plain byte vectors, longest subsequences
//! by dynamic programming, breadth-first Knuth classes and a direct column
//! comparison. None of them calls into the library.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use plactic::automata::{delta_l, delta_r, Direction, PairLetter};
use plactic::knuth::{knuth_class, knuth_equivalent, DEFAULT_CLASS_LIMIT};
use plactic::multipliers::{general_multiplier, multiplier, multiplier_pair_automata, Side, LETTER_DELAY};
use plactic::rewriting::{
    decode_word, encode_word, gsb_export, product_columns, ColumnProduct, OrderKey, RewritingSystem,
};
use plactic::{tableau_of_word, Column, Letter, Rank};

type W = Vec<u8>;

fn schensted(w: &[u8]) -> Vec<W> {
    let mut rows: Vec<W> = Vec::new();
    for &x in w {
        let mut x = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(j) => x = std::mem::replace(&mut row[j], x),
                None => {
                    row.push(x);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    rows
}

/// Columns of `P(w)` left to right, each written top to bottom.
fn tableau_columns(w: &[u8]) -> Vec<W> {
    let rows = schensted(w);
    let width = rows.first().map_or(0, Vec::len);
    (0..width).map(|j| rows.iter().filter_map(|r| r.get(j).copied()).rev().collect()).collect()
}

fn column_reading(w: &[u8]) -> W {
    tableau_columns(w).concat()
}

fn lnds(w: &[u8]) -> usize {
    let mut best = vec![1; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] <= w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn lds(w: &[u8]) -> usize {
    let mut best = vec![1; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] > w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn knuth_neighbours(w: &[u8]) -> Vec<W> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
        let mut swap = |p: usize| {
            let mut v = w.to_vec();
            v.swap(i + p, i + p + 1);
            out.push(v);
        };
        // xzy ~ zxy with x <= y < z, seen from either side
        if a <= c && c < b || b <= c && c < a {
            swap(0);
        }
        // yxz ~ yzx with x < y <= z, seen from either side
        if b < a && a <= c || c < a && a <= b {
            swap(1);
        }
    }
    out
}

fn knuth_class_bfs(w: &[u8]) -> BTreeSet<W> {
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for v in knuth_neighbours(&u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

fn words(rank: u8, max_len: usize) -> Vec<W> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|p: &W| (1..=rank).map(move |x| [p.as_slice(), &[x]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Nonempty strictly decreasing words over `1..=rank`.
fn columns(rank: u8) -> Vec<W> {
    (1u32..1 << rank).map(|m| (1..=rank).rev().filter(|x| m >> (x - 1) & 1 == 1).collect()).collect()
}

/// `a ⪰ b`, comparing from the bottom (smallest letters).
fn col_ge(a: &[u8], b: &[u8]) -> bool {
    a.len() >= b.len() && a.iter().rev().zip(b.iter().rev()).all(|(x, y)| x <= y)
}

/// Symbol order for the monomial order: longer columns first, then lex on
/// the written form. `true` if `a` is strictly smaller.
fn symbol_less(a: &[u8], b: &[u8]) -> bool {
    a.len() > b.len() || a.len() == b.len() && a < b
}

fn deglex_less(u: &[W], v: &[W]) -> bool {
    if u.len() != v.len() {
        return u.len() < v.len();
    }
    match u.iter().zip(v).find(|(a, b)| a != b) {
        Some((a, b)) => symbol_less(a, b),
        None => false,
    }
}

fn letters(w: &[u8]) -> Vec<Letter> {
    w.iter().map(|&x| Letter::new(x as usize)).collect()
}

fn bytes(w: &[Letter]) -> W {
    w.iter().map(|l| l.get() as u8).collect()
}

fn lib_column(c: &[u8]) -> Column {
    Column::from_letters(&letters(c)).unwrap()
}

fn own_column(c: Column) -> W {
    bytes(&c.letters().collect::<Vec<_>>())
}

fn rank(n: u8) -> Rank {
    Rank::new(n as usize).unwrap()
}

fn l_set(n: u8, max_len: usize) -> BTreeSet<W> {
    words(n, max_len).iter().map(|w| column_reading(w)).collect()
}

type Outcome = Result<String, String>;

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let w = letters(b"6345511235".map(|c| c - b'0').as_slice());
    let lib = tableau_of_word(&w).column_reading().to_string();
    let own: String = column_reading(&bytes(&w)).iter().map(|x| x.to_string()).collect();
    ensure(own == "6314152535", || format!("oracle gives {own}"))?;
    ensure(lib == "6314152535", || format!("library gives {lib}"))?;
    Ok("C(P(6345511235)) = 6314152535".into())
}

fn criterion_2() -> Outcome {
    let mut n_words = 0;
    for n in 2..=4 {
        for w in words(n, 7) {
            let p = tableau_of_word(&letters(&w));
            let own = schensted(&w);
            ensure(p.num_columns() == lnds(&w) && p.num_rows() == lds(&w), || {
                format!("rank {n}, {w:?}: {}x{} vs lnds {} lds {}", p.num_columns(), p.num_rows(), lnds(&w), lds(&w))
            })?;
            ensure(own.len() == lds(&w) && own.first().map_or(0, Vec::len) == lnds(&w), || {
                format!("oracle Schensted disagrees with subsequences on {w:?}")
            })?;
            n_words += 1;
        }
    }
    Ok(format!("{n_words} words, ranks 2-4, length ≤ 7"))
}

fn criterion_3() -> Outcome {
    let mut pairs = 0;
    for n in 1..=3 {
        for len in 0..=5 {
            let layer: Vec<W> = words(n, len).into_iter().filter(|w| w.len() == len).collect();
            for u in &layer {
                let lib_class: BTreeSet<W> = knuth_class(&letters(u), DEFAULT_CLASS_LIMIT)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|w| bytes(w))
                    .collect();
                let own_class = knuth_class_bfs(u);
                ensure(lib_class == own_class, || format!("Knuth class of {u:?} differs"))?;
                let pu = schensted(u);
                for v in &layer {
                    pairs += 1;
                    let same = pu == schensted(v);
                    ensure(own_class.contains(v) == same, || format!("{u:?} vs {v:?}: oracle cross-section fails"))?;
                    let lib_eq =
                        knuth_equivalent(&letters(u), &letters(v), DEFAULT_CLASS_LIMIT).map_err(|e| e.to_string())?;
                    ensure(lib_eq == same, || format!("knuth_equivalent({u:?}, {v:?}) = {lib_eq}"))?;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, ranks 1-3, length ≤ 5"))
}

fn criterion_4() -> Outcome {
    let golden_rules = [0, 3, 22, 115, 531];
    let mut summary = Vec::new();
    for n in 1..=5u8 {
        let system = RewritingSystem::generate(rank(n)).map_err(|e| e.to_string())?;
        let cols = columns(n);
        let incomparable: BTreeSet<(W, W)> = cols
            .iter()
            .flat_map(|a| cols.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| !col_ge(a, b))
            .collect();
        let lhs: BTreeSet<(W, W)> =
            system.rules().iter().map(|r| (own_column(r.lhs[0]), own_column(r.lhs[1]))).collect();
        ensure(lhs == incomparable, || format!("rank {n}: rule left sides are not the incomparable pairs"))?;
        ensure(system.len() == incomparable.len(), || format!("rank {n}: duplicate rules"))?;
        ensure(system.len() == golden_rules[n as usize - 1], || format!("rank {n}: {} rules", system.len()))?;
        system.check_termination(OrderKey).map_err(|e| format!("rank {n}: {e}"))?;
        for r in system.rules() {
            let l: Vec<W> = r.lhs.iter().map(|&c| own_column(c)).collect();
            let rr: Vec<W> = r.rhs.iter().map(|&c| own_column(c)).collect();
            ensure(deglex_less(&rr, &l), || format!("rank {n}: {r} does not decrease"))?;
        }
        let expected_overlaps: usize = cols
            .iter()
            .map(|b| {
                let before = cols.iter().filter(|a| !col_ge(a, b)).count();
                let after = cols.iter().filter(|c| !col_ge(b, c)).count();
                before * after
            })
            .sum();
        let pairs = system.critical_pairs();
        ensure(pairs.len() == expected_overlaps, || {
            format!("rank {n}: {} overlaps, expected {expected_overlaps}", pairs.len())
        })?;
        if let Some(p) = pairs.iter().find(|p| !p.converged) {
            return Err(format!("rank {n}: overlap {:?} diverges", p.overlap));
        }
        summary.push(format!("{}/{}", system.len(), pairs.len()));
    }
    Ok(format!("rules/critical pairs for ranks 1-5: {}", summary.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut n_words = 0;
    for n in 2..=4 {
        let system = RewritingSystem::generate(rank(n)).map_err(|e| e.to_string())?;
        for w in words(n, 7) {
            let got = bytes(&decode_word(&system.normalize(&encode_word(&letters(&w)))));
            ensure(got == column_reading(&w), || format!("rank {n}, {w:?}: normal form reads {got:?}"))?;
            n_words += 1;
        }
    }
    Ok(format!("{n_words} words, ranks 2-4, length ≤ 7"))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for n in 1..=5 {
        let cols = columns(n);
        for a in &cols {
            for b in cols.iter().filter(|b| !col_ge(a, b)) {
                checked += 1;
                let p = tableau_columns(&[a.as_slice(), b].concat());
                ensure(p.len() <= 2, || format!("P({a:?}{b:?}) has {} columns", p.len()))?;
                if p.len() == 2 {
                    ensure(p[0].len() > a.len(), || format!("P({a:?}{b:?}): left column not longer"))?;
                }
                let lib: Vec<W> = match product_columns(lib_column(a), lib_column(b)) {
                    ColumnProduct::Irreducible => return Err(format!("{a:?}{b:?} reported irreducible")),
                    ColumnProduct::One(c) => vec![own_column(c)],
                    ColumnProduct::Two(c, d) => vec![own_column(c), own_column(d)],
                };
                ensure(lib == p, || format!("product of {a:?} and {b:?}: {lib:?} vs {p:?}"))?;
            }
        }
    }
    Ok(format!("{checked} incomparable pairs, ranks 1-5"))
}

fn criterion_7() -> Outcome {
    let golden = [(2u8, include_str!("golden/gsb_rank2.txt")), (3u8, include_str!("golden/gsb_rank3.txt"))];
    let mut total = 0;
    for (n, text) in golden {
        let system = RewritingSystem::generate(rank(n)).map_err(|e| e.to_string())?;
        let basis = gsb_export(&system, OrderKey).map_err(|e| e.to_string())?;
        let again = gsb_export(&RewritingSystem::generate(rank(n)).unwrap(), OrderKey).unwrap();
        ensure(basis.to_text() == again.to_text(), || format!("rank {n}: export is not deterministic"))?;
        ensure(basis.to_text() == text, || format!("rank {n}: export differs from the golden file"))?;
        let rules = system.rules();
        ensure(basis.elements.len() == rules.len(), || {
            format!("rank {n}: {} binomials, {} rules", basis.elements.len(), rules.len())
        })?;
        let leading: HashSet<_> = basis.elements.iter().map(|b| b.leading.clone()).collect();
        ensure(leading.len() == rules.len(), || format!("rank {n}: repeated leading term"))?;
        for b in &basis.elements {
            let rule = rules
                .iter()
                .find(|r| r.lhs == b.leading)
                .ok_or_else(|| format!("rank {n}: no rule for {}", b.leading))?;
            ensure(rule.rhs == b.trailing, || format!("rank {n}: trailing term of {} is not the rule's", b.leading))?;
            let l: Vec<W> = b.leading.iter().map(|&c| own_column(c)).collect();
            let t: Vec<W> = b.trailing.iter().map(|&c| own_column(c)).collect();
            ensure(deglex_less(&t, &l), || format!("rank {n}: {} is not the leading term", b.leading))?;
            ensure(b.leading_coeff == 1 && b.trailing_coeff == -1, || format!("rank {n}: bad coefficients"))?;
        }
        total += basis.elements.len();
    }
    Ok(format!("{total} binomials over ranks 2 and 3 match the rules and the golden files"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for n in 1..=3u8 {
        let normal_forms: BTreeSet<Vec<W>> = words(n, 6).iter().map(|w| tableau_columns(w)).collect();
        for side in [Side::Right, Side::Left] {
            for g in 1..=n {
                let t = multiplier(rank(n), side, Letter::new(g as usize)).map_err(|e| e.to_string())?;
                for u in &normal_forms {
                    let flat = u.concat();
                    let product = match side {
                        Side::Right => [flat.as_slice(), &[g]].concat(),
                        Side::Left => [&[g], flat.as_slice()].concat(),
                    };
                    let want: Vec<Column> = tableau_columns(&product).iter().map(|c| lib_column(c)).collect();
                    let input: Vec<Column> = u.iter().map(|c| lib_column(c)).collect();
                    let got = t.outputs(&input, 1 << 16).map_err(|e| e.to_string())?;
                    ensure(got == BTreeSet::from([want]), || format!("rank {n}, {side} by {g}, u = {u:?}: {got:?}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (u, γ, side) triples, ranks 1-3, |u| ≤ 6"))
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for n in 1..=3u8 {
        let l: Vec<W> = l_set(n, 6).into_iter().collect();
        let gammas = std::iter::once(None).chain((1..=n).map(Some));
        for g in gammas {
            let automata =
                multiplier_pair_automata(rank(n), g.map(|g| Letter::new(g as usize)), LETTER_DELAY, 1_000_000)
                    .map_err(|e| e.to_string())?;
            for (side, d, p) in automata.all() {
                for u in &l {
                    let target = match (g, side) {
                        (None, _) => u.clone(),
                        (Some(g), Side::Right) => column_reading(&[u.as_slice(), &[g]].concat()),
                        (Some(g), Side::Left) => column_reading(&[&[g], u.as_slice()].concat()),
                    };
                    let lu = letters(u);
                    for v in &l {
                        checked += 1;
                        let accepted = p.accepts(&lu, &letters(v));
                        ensure(accepted == (*v == target), || {
                            format!("rank {n}, γ = {g:?}, {side} δ_{d}: ({u:?}, {v:?}) accepted = {accepted}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (u, v) pairs over 4 automata per generator, ranks 1-3, |u|, |v| ≤ 6"))
}

fn pad(u: &[u8], v: &[u8], direction: Direction) -> Vec<(Option<u8>, Option<u8>)> {
    let n = u.len().max(v.len());
    let at = |w: &[u8], i: usize| match direction {
        Direction::Right => w.get(i).copied(),
        Direction::Left => (i + w.len()).checked_sub(n).map(|j| w[j]),
    };
    (0..n).map(|i| (at(u, i), at(v, i))).collect()
}

fn criterion_10() -> Outcome {
    let ws = words(3, 6);
    let flat = |p: Vec<PairLetter<u8>>| p.into_iter().map(|l| (l.left, l.right)).collect::<Vec<_>>();
    let mut checked = 0;
    for u in &ws {
        let ur: W = u.iter().rev().copied().collect();
        for v in &ws {
            let vr: W = v.iter().rev().copied().collect();
            let mut r = delta_r(u, v);
            let l = delta_l(&ur, &vr);
            ensure(flat(r.clone()) == pad(u, v, Direction::Right), || format!("δ_R({u:?}, {v:?}) is misaligned"))?;
            ensure(flat(l.clone()) == pad(&ur, &vr, Direction::Left), || format!("δ_L({ur:?}, {vr:?}) is misaligned"))?;
            r.reverse();
            ensure(r == l, || format!("duality fails on ({u:?}, {v:?})"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs over a 3-letter alphabet, |u|, |v| ≤ 6"))
}

fn criterion_11() -> Outcome {
    let l = l_set(2, 6);
    let mut checked = 0;
    for b in [[1u8, 2], [2, 1]] {
        let t = general_multiplier(rank(2), Side::Right, &letters(&b)).map_err(|e| e.to_string())?;
        for u in words(2, 5) {
            let want: BTreeSet<Vec<Letter>> = if l.contains(&u) {
                BTreeSet::from([letters(&column_reading(&[u.as_slice(), &b].concat()))])
            } else {
                BTreeSet::new()
            };
            let got = t.outputs(&letters(&u), 1 << 16).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("b = {b:?}, u = {u:?}: {got:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} words u for b ∈ {{12, 21}}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "worked example: column reading of P(6345511235)", Duration::from_secs(1), criterion_1),
        (2, "Schensted shape = (lnds, lds)", Duration::from_secs(10), criterion_2),
        (3, "Knuth equivalence ⇔ equal tableaux", Duration::from_secs(60), criterion_3),
        (4, "rewriting system is complete", Duration::from_secs(30), criterion_4),
        (5, "normal forms = column readings", Duration::from_secs(30), criterion_5),
        (6, "products of incomparable columns", Duration::from_secs(5), criterion_6),
        (7, "Gröbner–Shirshov basis export", Duration::from_secs(1), criterion_7),
        (8, "multiplier transducers over C", Duration::from_secs(60), criterion_8),
        (9, "padded multiplier automata", Duration::from_secs(300), criterion_9),
        (10, "δ_R / δ_L duality", Duration::from_secs(5), criterion_10),
        (11, "multiplication by a word", Duration::from_secs(30), criterion_11),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {id:>2}: {name} ({detail}; {elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {id:>2}: {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
