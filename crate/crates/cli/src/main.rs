use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use webbasis::diagrams::{phi_inverse, render_ascii, render_tikz};
use webbasis::export::{
    matrix_to_csv, matrix_to_json, matrix_to_text, resolution_graph_to_dot, sinks_to_json,
    tableau_graph_to_dot,
};
use webbasis::resolution::{build_resolution_graph_with, replay, resolve_full_with};
use webbasis::transition::{
    test_order_conjecture_with, transition_matrix_with, verify_psi_with, TransitionMatrix,
};
use webbasis::young::build_tableau_graph_with;
use webbasis::{
    check_witness, f_matching, verify_positivity, verify_unitriangular, witness_path, Error,
    FirstCrossing, Limits, Matching, RandomStrategy, StandardTableau, Strategy, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "webbasis",
    version,
    about = "Polytabloids, webs and the transition matrix between them"
)]
struct Cli {
    /// Largest accepted n.
    #[arg(long, global = true, default_value_t = 8)]
    max_n: usize,
    /// Node limit for a single crossing resolution.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    node_budget: usize,
    /// Step limit for a single straightening.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    step_budget: usize,
    /// Ignore --max-n.
    #[arg(long, global = true)]
    force: bool,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Ascii,
    Tikz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Unitriangular,
    Positivity,
    Psi,
    Conjecture,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyName {
    First,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux of shape (n,n) with their ranks.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// The tableau graph.
    Graph {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// The transition matrix, rows and columns in the order of `enumerate`.
    Matrix {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// The inverse of the transition matrix.
    Inverse {
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Expand a matching in the web basis by resolving crossings.
    Resolve {
        /// Matching as JSON (`{"n2":6,"arcs":[[1,3],...]}` or a bare arc list), or `@path`.
        matching: String,
        #[arg(long, value_enum, default_value = "first")]
        strategy: StrategyName,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Build and check the resolution script from f(v_T) to phi(S).
    Witness {
        /// T as JSON `{"top":[..],"bottom":[..]}`, or `@path`.
        #[arg(long = "t")]
        t: String,
        /// S as JSON, or `@path`.
        #[arg(long = "s")]
        s: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Run the verification suites.
    Verify {
        #[arg(short)]
        n: usize,
        #[arg(value_enum, default_value = "all")]
        which: Which,
        /// Corrupt one matrix entry first; the run must then fail.
        #[arg(long)]
        self_test: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Draw a matching, its resolution graph, or the tableau graph.
    Render {
        /// Matching as JSON, or `@path`.
        matching: Option<String>,
        /// Render the tableau graph of this size instead (always DOT).
        #[arg(long, conflicts_with = "matching")]
        tableau_graph: Option<usize>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_n: if cli.force { usize::MAX } else { cli.max_n },
        node_budget: cli.node_budget,
        step_budget: cli.step_budget,
    };
    let (text, code) = match run(&cli.command, &limits) {
        Ok(text) => (text, ExitCode::SUCCESS),
        Err(Failure::Verification(text)) => (text, ExitCode::from(1)),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    code
}

fn run(command: &Command, limits: &Limits) -> Outcome {
    match command {
        Command::Enumerate { n, format } => enumerate(*n, *format, limits),
        Command::Graph { n, format } => graph(*n, *format, limits),
        Command::Matrix { n, format } => {
            let m = matrix(*n, limits)?;
            emit_matrix(&m, &m.entries, *format)
        }
        Command::Inverse { n, format } => {
            let m = matrix(*n, limits)?;
            let inv = m.inverse()?;
            emit_matrix(&m, &inv, *format)
        }
        Command::Resolve {
            matching,
            strategy,
            seed,
            format,
        } => resolve(&read_matching(matching)?, *strategy, *seed, *format, limits),
        Command::Witness { t, s, format } => witness(&read_tableau(t)?, &read_tableau(s)?, *format),
        Command::Verify {
            n,
            which,
            self_test,
            format,
        } => verify(*n, *which, *self_test, *format, limits),
        Command::Render {
            matching,
            tableau_graph,
            format,
        } => match (matching, tableau_graph) {
            (_, Some(n)) => Ok(tableau_graph_to_dot(&build_tableau_graph_with(*n, limits)?)),
            (Some(m), None) => render(&read_matching(m)?, *format, limits),
            (None, None) => Err(Failure::Usage("nothing to render".into())),
        },
    }
}

fn require(format: Format, allowed: &[Format]) -> std::result::Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        Err(Failure::Usage(format!(
            "format {name} is not available here"
        )))
    }
}

fn read_arg(arg: &str) -> std::result::Result<Value, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
        }
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed JSON: {e}")))
}

fn read_matching(arg: &str) -> std::result::Result<Matching, Failure> {
    let mut value = read_arg(arg)?;
    if value.is_array() {
        value = json!({ "arcs": value });
    }
    serde_json::from_value(value).map_err(|e| Failure::Usage(format!("malformed matching: {e}")))
}

fn read_tableau(arg: &str) -> std::result::Result<StandardTableau, Failure> {
    serde_json::from_value(read_arg(arg)?)
        .map_err(|e| Failure::Usage(format!("malformed tableau: {e}")))
}

fn json_line(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn enumerate(n: usize, format: Format, limits: &Limits) -> Outcome {
    let g = build_tableau_graph_with(n, limits)?;
    let records: Vec<(usize, &StandardTableau)> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, t)| (g.rank_index(i), t))
        .collect();
    match format {
        Format::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|(r, t)| json!({"rank": r, "top": t.top(), "bottom": t.bottom(), "word": t.row_word()}))
                .collect();
            Ok(json_line(&Value::Array(rows)))
        }
        Format::Csv => {
            let mut out = String::from("rank,top,bottom\n");
            for (r, t) in records {
                out += &format!("{r},{},{}\n", join(t.top(), " "), join(t.bottom(), " "));
            }
            Ok(out)
        }
        Format::Ascii => Ok(records
            .iter()
            .map(|(r, t)| format!("{r}\t{}\n", t.row_word()))
            .collect()),
        _ => require(format, &[Format::Json, Format::Csv, Format::Ascii]).map(|_| String::new()),
    }
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn graph(n: usize, format: Format, limits: &Limits) -> Outcome {
    require(format, &[Format::Dot, Format::Json])?;
    let g = build_tableau_graph_with(n, limits)?;
    if format == Format::Dot {
        return Ok(tableau_graph_to_dot(&g));
    }
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| json!({"source": e.source, "target": e.target, "generator": e.generator}))
        .collect();
    Ok(json_line(
        &json!({"n": n, "vertices": g.vertices(), "edges": edges}),
    ))
}

fn matrix(n: usize, limits: &Limits) -> std::result::Result<TransitionMatrix, Failure> {
    Ok(transition_matrix_with(n, limits)?)
}

fn emit_matrix(m: &TransitionMatrix, entries: &[Vec<BigInt>], format: Format) -> Outcome {
    match format {
        Format::Json => Ok(json_line(&matrix_to_json(m, entries))),
        Format::Csv => Ok(matrix_to_csv(m, entries)),
        Format::Ascii => Ok(matrix_to_text(entries)),
        _ => require(format, &[Format::Json, Format::Csv, Format::Ascii]).map(|_| String::new()),
    }
}

fn resolve(
    m: &Matching,
    strategy: StrategyName,
    seed: u64,
    format: Format,
    limits: &Limits,
) -> Outcome {
    require(format, &[Format::Json, Format::Ascii, Format::Dot])?;
    let mut first = FirstCrossing;
    let mut random = RandomStrategy::new(StdRng::seed_from_u64(seed));
    let chooser: &mut dyn Strategy = match strategy {
        StrategyName::First => &mut first,
        StrategyName::Random => &mut random,
    };
    if format == Format::Dot {
        let g = build_resolution_graph_with(m, chooser, limits.node_budget)?;
        return Ok(resolution_graph_to_dot(&g));
    }
    let sinks = resolve_full_with(m, chooser, limits.node_budget)?;
    if format == Format::Json {
        return Ok(json_line(&sinks_to_json(&sinks)));
    }
    Ok(sinks
        .counts
        .iter()
        .map(|(w, k)| format!("{k}\t{}\n", w.matching()))
        .collect())
}

fn witness(t: &StandardTableau, s: &StandardTableau, format: Format) -> Outcome {
    require(format, &[Format::Json, Format::Ascii])?;
    let script = witness_path(t, s)?;
    let states = replay(&f_matching(&t.columns())?, &script)?;
    let ok = check_witness(t, s, &script);
    let text = if format == Format::Json {
        json_line(&json!({
            "t": t,
            "s": s,
            "script": script,
            "states": states,
            "valid": ok,
        }))
    } else {
        let mut out = format!("start\t{}\n", states[0]);
        for (k, (mv, m)) in script.iter().zip(&states[1..]).enumerate() {
            out += &format!("{}\t{mv}\t{m}\n", k + 1);
        }
        out += if ok { "valid\n" } else { "INVALID\n" };
        out
    };
    if ok {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn verify(n: usize, which: Which, self_test: bool, format: Format, limits: &Limits) -> Outcome {
    require(format, &[Format::Json, Format::Ascii])?;
    let mut m = matrix(n, limits)?;
    if self_test {
        corrupt(&mut m);
    }
    let wanted = |w: Which| which == Which::All || which == w;
    let mut reports: Vec<VerificationReport> = Vec::new();
    if wanted(Which::Unitriangular) {
        reports.push(verify_unitriangular(&m)?);
    }
    if wanted(Which::Positivity) {
        reports.push(verify_positivity(&m)?);
    }
    if wanted(Which::Psi) {
        reports.push(verify_psi_with(&m, limits)?);
    }
    if wanted(Which::Conjecture) {
        reports.push(test_order_conjecture_with(n, limits)?);
    }
    let report = reports
        .into_iter()
        .reduce(VerificationReport::merge)
        .expect("at least one suite");
    let text = if format == Format::Json {
        json_line(&serde_json::to_value(&report).expect("serializable"))
    } else {
        let mut out = String::new();
        for c in &report.checks {
            let status = match (c.passed, c.informational) {
                (true, _) => "PASS",
                (false, true) => "OPEN",
                (false, false) => "FAIL",
            };
            out += &format!("{status}\tn={n}\t{}", c.name);
            if let Some(x) = &c.counterexample {
                out += &format!("\tS={} T={} {}", x.s.row_word(), x.t.row_word(), x.detail);
            }
            out.push('\n');
        }
        out
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

/// Breaks unitriangularity: a one below the diagonal, or a two on it when
/// the matrix is 1x1.
fn corrupt(m: &mut TransitionMatrix) {
    let last = m.size() - 1;
    if last == 0 {
        m.entries[0][0] = BigInt::from(2);
    } else {
        m.entries[last][0] = BigInt::from(1);
    }
}

fn render(m: &Matching, format: Format, limits: &Limits) -> Outcome {
    match format {
        Format::Ascii => Ok(render_ascii(m)),
        Format::Tikz => Ok(render_tikz(m)),
        Format::Dot => {
            let g = build_resolution_graph_with(m, &mut FirstCrossing, limits.node_budget)?;
            Ok(resolution_graph_to_dot(&g))
        }
        Format::Json => {
            let mut value = serde_json::to_value(m).expect("serializable");
            if let Ok(t) = webbasis::CupDiagram::new(m.clone()).map(|w| phi_inverse(&w)) {
                value["tableau"] = serde_json::to_value(t).expect("serializable");
            }
            Ok(json_line(&value))
        }
        Format::Csv => require(format, &[]).map(|_| String::new()),
    }
}
