use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use plactic::automata::{Direction, MachineJson};
use plactic::multipliers::{
    general_multiplier, k_acceptor, l_acceptor, lifted_multiplier, multiplier, multiplier_pair_automata, run, Side,
    LETTER_DELAY,
};
use plactic::rewriting::{decode_word, encode_word, gsb_export, ColumnWord, OrderKey, RewritingSystem};
use plactic::verify::{run_suite, Suite, VerifyConfig};
use plactic::{tableau_of_word, Column, Error, Executor, Letter, Rank, Word};

#[derive(Parser)]
#[command(name = "plactic", version, about = "Tableaux, column rewriting and multiplier automata for plactic monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Rank n of the monoid; the alphabet is 1..=n.
    #[arg(long, global = true)]
    rank: Option<usize>,

    /// Word length bound for verification sweeps.
    #[arg(long, global = true)]
    max_len: Option<usize>,

    /// Verify at rank 4 and length 7 unless given explicitly.
    #[arg(long, global = true)]
    thorough: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout (a directory for `machines`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest Knuth class explored by the brute-force oracle.
    #[arg(long, global = true, env = "PLACTIC_CLASS_LIMIT", default_value_t = plactic::knuth::DEFAULT_CLASS_LIMIT)]
    class_limit: usize,

    /// Largest number of states a synchronized automaton may have.
    #[arg(long, global = true, env = "PLACTIC_STATE_LIMIT", default_value_t = plactic::automata::DEFAULT_STATE_LIMIT)]
    state_limit: usize,

    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print P(w) in planar form and its column reading.
    Tableau { word: String },
    /// Normal form of a word over A (digits) or over C (`c:21,1` or `c_21 c_1`).
    Normalize { word: String },
    /// Multiply a column reading by a letter or word using the transducers.
    Multiply {
        u: String,
        gamma: String,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Cross-check the result against Schensted insertion.
        #[arg(long)]
        check: bool,
    },
    /// The rewriting rules over C.
    Rules,
    /// The Gröbner–Shirshov basis of the plactic algebra over C.
    Gsb,
    /// Export the acceptors, transducers and padded automata for one generator.
    Machines {
        /// A letter, or `e` for the empty word.
        #[arg(long, default_value = "1")]
        gamma: String,
    },
    /// Run the exhaustive verification suites.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Core,
    Rewriting,
    Automata,
    Multipliers,
    All,
}

enum Failure {
    /// A check ran and found a disagreement.
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<()> {
    let default_rank = if cli.thorough { 4 } else { 3 };
    let rank = Rank::new(cli.rank.unwrap_or(default_rank))?;
    match &cli.command {
        Command::Tableau { word } => emit(cli, &tableau(cli, rank, word)?),
        Command::Normalize { word } => emit(cli, &normalize(cli, rank, word)?),
        Command::Multiply { u, gamma, side, check } => emit(cli, &multiply(cli, rank, u, gamma, *side, *check)?),
        Command::Rules => {
            let system = RewritingSystem::generate(rank)?;
            let text = match cli.format {
                Format::Json => json(&system.rules_document()),
                _ => system.rules().iter().map(|r| format!("{r}\n")).collect(),
            };
            emit(cli, &text)
        }
        Command::Gsb => {
            let basis = gsb_export(&RewritingSystem::generate(rank)?, OrderKey)?;
            let text = match cli.format {
                Format::Json => json(&basis),
                _ => basis.to_text(),
            };
            emit(cli, &text)
        }
        Command::Machines { gamma } => machines(cli, rank, gamma),
        Command::Verify { suite } => verify(cli, rank, *suite),
    }
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn show(w: &[Letter]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        Word::from_letters(w.to_vec()).to_string()
    }
}

fn show_columns(w: &[Column]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        ColumnWord::from(w.to_vec()).to_string()
    }
}

fn parse_word(text: &str, rank: Rank) -> CliResult<Word> {
    Ok(Word::parse(text, rank)?)
}

fn tableau(cli: &Cli, rank: Rank, text: &str) -> CliResult<String> {
    let w = parse_word(text, rank)?;
    let p = tableau_of_word(&w);
    Ok(match cli.format {
        Format::Json => json(&serde_json::json!({
            "word": w.to_string(),
            "rows": p.rows().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "columns": p.columns().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "column_reading": p.column_reading().to_string(),
        })),
        _ if p.is_empty() => String::new(),
        _ => format!("{}{}\n", p.planar(), p.column_reading()),
    })
}

fn normalize(cli: &Cli, rank: Rank, text: &str) -> CliResult<String> {
    let trimmed = text.trim();
    let input: ColumnWord = if trimmed.starts_with("c:") || trimmed.starts_with("c_") {
        let cw: ColumnWord = trimmed.parse()?;
        if let Some(c) = cw.iter().find(|c| !c.fits_rank(rank)) {
            return Err(Error::LetterOutOfRange { letter: c.top().get(), rank: rank.get() }.into());
        }
        cw
    } else {
        encode_word(&parse_word(trimmed, rank)?)
    };
    let nf = RewritingSystem::generate(rank)?.normalize(&input);
    let decoded = decode_word(&nf);
    Ok(match cli.format {
        Format::Json => json(&serde_json::json!({
            "input": input.to_string(),
            "normal_form": nf.to_string(),
            "compact": nf.to_compact(),
            "word": decoded.to_string(),
        })),
        _ => format!("{}\n{}\n", show_columns(&nf), show(&decoded)),
    })
}

fn multiply(cli: &Cli, rank: Rank, u: &str, gamma: &str, side: SideArg, check: bool) -> CliResult<String> {
    let u = parse_word(u, rank)?;
    let b = parse_word(gamma, rank)?;
    if !l_acceptor(rank).accepts(&u) {
        return Err(Error::NotInL(show(&u)).into());
    }
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let t = match b.letters() {
        [] => lifted_multiplier(rank, side, None)?,
        [g] => lifted_multiplier(rank, side, Some(*g))?,
        _ => general_multiplier(rank, side, &b)?,
    };
    let v = run(&t, &u, 1 << 20)?;
    if check {
        let product = match side {
            Side::Right => u.concat(&b),
            Side::Left => Word::from_letters(b.letters().to_vec()).concat(&u),
        };
        let want = tableau_of_word(&product).column_reading();
        if want.letters() != v.as_slice() {
            return Err(Failure::Verification(format!(
                "check failed: transducer gives {}, insertion gives {}",
                show(&v),
                show(&want)
            )));
        }
    }
    Ok(match cli.format {
        Format::Json => json(&serde_json::json!({
            "u": u.to_string(),
            "side": side,
            "gamma": b.to_string(),
            "product": Word::from_letters(v).to_string(),
        })),
        _ => format!("{}\n", show(&v)),
    })
}

fn machines(cli: &Cli, rank: Rank, gamma: &str) -> CliResult<()> {
    let gamma = match gamma.trim() {
        "e" | "ε" | "" => None,
        g => match parse_word(g, rank)?.letters() {
            [l] => Some(*l),
            _ => return Err(Failure::Usage(format!("--gamma takes one letter or `e`, got `{g}`"))),
        },
    };
    let tag = gamma.map_or("e".to_string(), |g| g.to_string());

    let mut files: Vec<(String, MachineJson, String)> = Vec::new();
    let k = k_acceptor(rank);
    files.push(("K".into(), k.to_json(), k.to_dot("K")));
    let l = l_acceptor(rank);
    files.push(("L".into(), l.to_json(), l.to_dot("L")));
    for side in [Side::Right, Side::Left] {
        if let Some(g) = gamma {
            let name = format!("{side}_{tag}_columns");
            let t = multiplier(rank, side, g)?;
            files.push((name.clone(), t.to_json(), t.to_dot(&name)));
        }
        let name = format!("{side}_{tag}");
        let t = lifted_multiplier(rank, side, gamma)?;
        files.push((name.clone(), t.to_json(), t.to_dot(&name)));
    }
    let automata = multiplier_pair_automata(rank, gamma, LETTER_DELAY, cli.state_limit)?;
    for (side, d, p) in automata.all() {
        let name = format!("{side}_{tag}_delta_{}", direction_tag(d));
        files.push((name.clone(), p.to_json(), p.to_dot(&name)));
    }

    let render = |m: &MachineJson, dot: &str| match cli.format {
        Format::Json => json(m),
        Format::Dot => dot.to_string(),
        Format::Text => {
            let edges = m.transitions.len();
            format!("{} states, {} transitions\n", m.states, edges)
        }
    };
    match &cli.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let ext = match cli.format {
                Format::Json => "json",
                Format::Dot => "dot",
                Format::Text => "txt",
            };
            for (name, m, dot) in &files {
                write_file(&dir.join(format!("{name}.{ext}")), &render(m, dot))?;
            }
        }
        None => {
            let mut out = String::new();
            for (name, m, dot) in &files {
                match cli.format {
                    Format::Text => {
                        let _ = write!(out, "{name}: {}", render(m, dot));
                    }
                    _ => {
                        let _ = write!(out, "// {name}\n{}", render(m, dot));
                    }
                }
            }
            print!("{out}");
        }
    }
    Ok(())
}

fn direction_tag(d: Direction) -> &'static str {
    match d {
        Direction::Right => "r",
        Direction::Left => "l",
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn verify(cli: &Cli, rank: Rank, suite: SuiteArg) -> CliResult<()> {
    let default_len = if cli.thorough { 7 } else { 6 };
    let cfg = VerifyConfig {
        rank,
        max_len: cli.max_len.unwrap_or(default_len),
        executor: if cli.sequential { Executor::Sequential } else { Executor::Parallel },
        class_limit: cli.class_limit,
        state_limit: cli.state_limit,
    };
    let suites: Vec<Suite> = match suite {
        SuiteArg::Core => vec![Suite::Core],
        SuiteArg::Rewriting => vec![Suite::Rewriting],
        SuiteArg::Automata => vec![Suite::Automata],
        SuiteArg::Multipliers => vec![Suite::Multipliers],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let reports = suites.into_iter().map(|s| run_suite(s, &cfg)).collect::<Result<Vec<_>, _>>()?;
    let text = match cli.format {
        Format::Json => json(&reports),
        _ => reports.iter().map(|r| r.to_text()).collect(),
    };
    emit(cli, &text)?;
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}
