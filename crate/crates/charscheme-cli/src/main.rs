//! Command-line front end: word reduction, ideal construction, basis
//! computations, and the golden-case verifier, for scripts and CI.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or input error,
//! 3 budget exceeded.

use charscheme::groebner::{self, Budget, GroebnerError};
use charscheme::ideal::{self, Ideal, RelatorMode};
use charscheme::poly::{parse_polynomial, MonomialOrder, Polynomial, TraceRing};
use charscheme::presentation::{parse_presentation, parse_word};
use charscheme::registry::{self, AssertionReport, Status};
use charscheme::trace::TraceReducer;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "charscheme", version, about = "Trace rings and character ideals of finitely presented groups")]
struct Cli {
    /// Monomial order for bases and printed polynomials
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Total degree cap for basis computations
    #[arg(long, global = true, default_value_t = 60)]
    max_degree: u32,
    /// S-pair cap for basis computations
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_pairs: u64,
    /// Wall-clock cap in seconds (overrides CHARSCHEME_TIMEOUT_SECS)
    #[arg(long, global = true)]
    timeout_secs: Option<u64>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a word's trace to a polynomial in the basic trace coordinates
    Reduce {
        /// The word, e.g. "a b a^-1" ("e" for the empty word)
        word: String,
        /// Generator names, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
    },
    /// Build the character ideal of a presentation file
    Ideal {
        file: PathBuf,
        /// Generator scheme: one difference per relator, or lhs/rhs pair
        #[arg(long, value_enum, default_value_t = ModeArg::Relator)]
        mode: ModeArg,
        /// Stop the word tower at stage one (identity and generator words)
        #[arg(long)]
        i1: bool,
    },
    /// Reduced Groebner basis of an ideal file
    Gb { file: PathBuf },
    /// Ideal membership: is the polynomial in the ideal?
    Member { poly: String, file: PathBuf },
    /// Radical membership: does some power of the polynomial lie in the ideal?
    RadicalMember { poly: String, file: PathBuf },
    /// Intersection of two ideals over the same ring
    Intersect { a: PathBuf, b: PathBuf },
    /// Ideal quotient (A : B) over the same ring
    Quotient { a: PathBuf, b: PathBuf },
    /// Dimension of the quotient ring as a rational vector space
    Dim { file: PathBuf },
    /// Fuzz symbolic reduction against direct matrix traces
    Oracle {
        /// Number of random words to check
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Maximum word length
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Number of group generators
        #[arg(long, default_value_t = 3)]
        gens: usize,
    },
    /// Run a golden case (or "all") and report per-assertion results
    Verify {
        case: String,
        /// Skip cases marked slow
        #[arg(long)]
        fast_only: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Relator,
    Pair,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Failure {
        Failure { code: EXIT_BUDGET, message: e.to_string() }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn order_of(cli: &Cli) -> MonomialOrder {
    match cli.order {
        OrderArg::Grevlex => MonomialOrder::grevlex(),
        OrderArg::Lex => MonomialOrder::lex(),
    }
}

fn budget_of(cli: &Cli) -> Budget {
    let mut b = Budget::default();
    b.max_degree = cli.max_degree;
    b.max_pairs = cli.max_pairs;
    if let Some(secs) = cli.timeout_secs {
        b.deadline = Some(Instant::now() + Duration::from_secs(secs));
    }
    b
}

/// Echoed configuration for JSON output headers.
fn flags_json(cli: &Cli) -> Value {
    json!({
        "order": match cli.order { OrderArg::Grevlex => "grevlex", OrderArg::Lex => "lex" },
        "seed": cli.seed,
        "max_degree": cli.max_degree,
        "max_pairs": cli.max_pairs,
        "timeout_secs": cli.timeout_secs,
        "format": match cli.format { FormatArg::Text => "text", FormatArg::Json => "json" },
    })
}

/// Prints one line to stdout, exiting quietly if the reader closed the pipe.
fn print_line(text: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout().lock(), "{text}").is_err() {
        std::process::exit(0);
    }
}

fn emit(cli: &Cli, command: &str, result: Value, text: String) {
    match cli.format {
        FormatArg::Text => print_line(&text),
        FormatArg::Json => {
            let doc = json!({
                "command": command,
                "flags": flags_json(cli),
                "timestamp": std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
                "result": result,
            });
            print_line(&serde_json::to_string_pretty(&doc).unwrap());
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<Ideal, Failure> {
    let text = read_file(path)?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("{}: not valid JSON: {e}", path.display())))?;
    Ideal::from_json(&doc).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<charscheme::Presentation, Failure> {
    let text = read_file(path)?;
    parse_presentation(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Builds the trace ring for user-supplied generator names, turning the
/// ring's duplicate-variable panic into a usage error.
fn ring_for_names(gens: &[String]) -> Result<Arc<TraceRing>, Failure> {
    if gens.is_empty() {
        return Err(Failure::usage("at least one generator name is required"));
    }
    let mut display = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        if a.is_empty() || !a.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(Failure::usage(format!("invalid generator name `{a}`")));
        }
        if gens[..i].contains(a) {
            return Err(Failure::usage(format!("duplicate generator name `{a}`")));
        }
        display.push(format!("t_{a}"));
    }
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            display.push(format!("t_{}{}", gens[i], gens[j]));
            for k in (j + 1)..gens.len() {
                display.push(format!("t_{}{}{}", gens[i], gens[j], gens[k]));
            }
        }
    }
    for (i, name) in display.iter().enumerate() {
        if display[..i].contains(name) {
            return Err(Failure::usage(format!(
                "generator names collide at ring variable `{name}`"
            )));
        }
    }
    Ok(TraceRing::new(gens.to_vec()))
}

fn ideal_lines(ideal: &Ideal, order: &MonomialOrder) -> String {
    let mut out = format!("ring: {}\n", ideal.ring().var_names().join(" "));
    if ideal.is_relative() {
        out.push_str("relative: true\n");
    }
    for g in ideal.gens() {
        out.push_str(&g.to_text(order));
        out.push('\n');
    }
    out.pop();
    out
}

fn polys_json(polys: &[Polynomial], order: &MonomialOrder) -> Value {
    Value::Array(polys.iter().map(|p| Value::String(p.to_text(order))).collect())
}

fn run(cli: &Cli) -> Result<i32, Failure> {
    let order = order_of(cli);
    let budget = budget_of(cli);
    match &cli.cmd {
        Cmd::Reduce { word, gens } => {
            let ring = ring_for_names(gens)?;
            let w = parse_word(word, ring.gen_names())
                .map_err(|e| Failure::usage(format!("bad word: {e}")))?;
            let reduced = TraceReducer::new(&ring).reduce(&w);
            let text = reduced.to_text(&order);
            emit(cli, "reduce", json!({ "trace": text }), text);
            Ok(0)
        }
        Cmd::Ideal { file, mode, i1 } => {
            let p = load_presentation(file)?;
            let result = if *i1 {
                ideal::partial_ideal_i1(&p)
            } else {
                let mode = match mode {
                    ModeArg::Relator => RelatorMode::Relator,
                    ModeArg::Pair => RelatorMode::Pair,
                };
                ideal::character_ideal(&p, mode)
            };
            emit(cli, "ideal", result.to_json(), ideal_lines(&result, &order));
            Ok(0)
        }
        Cmd::Gb { file } => {
            let ideal = load_ideal(file)?;
            let gb = ideal.groebner(&order, &budget)?;
            emit(
                cli,
                "gb",
                json!({
                    "ring": ideal.ring().var_names(),
                    "basis": polys_json(gb.polys(), &order),
                }),
                gb.polys().iter().map(|p| p.to_text(&order)).collect::<Vec<_>>().join("\n"),
            );
            Ok(0)
        }
        Cmd::Member { poly, file } => {
            let ideal = load_ideal(file)?;
            let f = parse_polynomial(poly, ideal.ring())
                .map_err(|e| Failure::usage(format!("bad polynomial: {e}")))?;
            let gb = ideal.groebner(&order, &budget)?;
            let nf = gb.normal_form(&f);
            let inside = nf.is_zero();
            emit(
                cli,
                "member",
                json!({ "member": inside, "normal_form": nf.to_text(&order) }),
                format!("member: {inside}\nnormal form: {}", nf.to_text(&order)),
            );
            Ok(if inside { 0 } else { EXIT_CHECK_FAILED })
        }
        Cmd::RadicalMember { poly, file } => {
            let ideal = load_ideal(file)?;
            let f = parse_polynomial(poly, ideal.ring())
                .map_err(|e| Failure::usage(format!("bad polynomial: {e}")))?;
            let inside = groebner::radical_member(&f, &ideal, &budget)?;
            let nf = ideal.groebner(&order, &budget)?.normal_form(&f);
            emit(
                cli,
                "radical-member",
                json!({ "radical_member": inside, "normal_form": nf.to_text(&order) }),
                format!("radical member: {inside}\nnormal form: {}", nf.to_text(&order)),
            );
            Ok(if inside { 0 } else { EXIT_CHECK_FAILED })
        }
        Cmd::Intersect { a, b } => {
            let (ia, ib) = (load_ideal(a)?, load_ideal(b)?);
            if ia.ring() != ib.ring() {
                return Err(Failure::usage("the two ideals live in different rings"));
            }
            let result = groebner::intersect(&ia, &ib, &budget)?;
            emit(cli, "intersect", result.to_json(), ideal_lines(&result, &order));
            Ok(0)
        }
        Cmd::Quotient { a, b } => {
            let (ia, ib) = (load_ideal(a)?, load_ideal(b)?);
            if ia.ring() != ib.ring() {
                return Err(Failure::usage("the two ideals live in different rings"));
            }
            let result = groebner::quotient(&ia, &ib, &budget)?;
            emit(cli, "quotient", result.to_json(), ideal_lines(&result, &order));
            Ok(0)
        }
        Cmd::Dim { file } => {
            let ideal = load_ideal(file)?;
            let dim = groebner::vector_space_dimension(&ideal, &budget)?;
            let text = match dim {
                Some(d) => format!("dimension: {d}"),
                None => "dimension: infinite".to_string(),
            };
            emit(cli, "dim", json!({ "dimension": dim }), text);
            Ok(0)
        }
        Cmd::Oracle { count, max_len, gens } => {
            if *gens == 0 {
                return Err(Failure::usage("--gens must be at least 1"));
            }
            let failures = charscheme::oracle::fuzz_reduction(cli.seed, *count, *gens, *max_len);
            let names = TraceRing::for_rank(*gens).gen_names().to_vec();
            let text = format!(
                "checked {count} words over {gens} generators (seed {}): {} failures",
                cli.seed,
                failures.len()
            );
            emit(
                cli,
                "oracle",
                json!({
                    "count": count,
                    "failures": failures.iter().map(|w| w.display(&names)).collect::<Vec<_>>(),
                }),
                text,
            );
            Ok(if failures.is_empty() { 0 } else { EXIT_CHECK_FAILED })
        }
        Cmd::Verify { case, fast_only } => {
            let names: Vec<&str> = if case == "all" {
                registry::cases()
                    .iter()
                    .filter(|c| !*fast_only || c.runtime == registry::RuntimeClass::Fast)
                    .map(|c| c.name)
                    .collect()
            } else {
                vec![case.as_str()]
            };
            let mut reports: Vec<AssertionReport> = Vec::new();
            for name in names {
                let mut batch = registry::run_case(name, &budget)
                    .map_err(|e| Failure::usage(e.to_string()))?;
                reports.append(&mut batch);
            }
            let text = reports
                .iter()
                .map(|r| {
                    format!("{:<26} {:<44} {:<16} {:>7} ms", r.case, r.assertion, r.status.as_str(), r.wall_ms)
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(cli, "verify", registry::report_to_json(&reports), text);
            if reports.iter().any(|r| r.status == Status::Fail) {
                Ok(EXIT_CHECK_FAILED)
            } else if reports.iter().any(|r| r.status == Status::BudgetExceeded) {
                Ok(EXIT_BUDGET)
            } else {
                Ok(0)
            }
        }
    }
}
