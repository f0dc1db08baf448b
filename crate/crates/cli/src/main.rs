use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mnqt::exact::{RatFunc, Var};
use mnqt::kostka::{green, green_table, kostka, kostka_table, GreenMethod, KostkaMethod, PairTable};
use mnqt::macdonald::{ExpansionTable, TableBasis};
use mnqt::mn::{mn_dual, mn_expand, mn_skew_expand, mn_tilde, MnExpansion};
use mnqt::partitions::Partition;
use mnqt::pieri::{hl_inverse_pieri, schur_inverse, schur_q_inverse, InversionExpansion};
use mnqt::symfunc::{check_degree, set_truncation, Alphabet, Basis, MAX_DEGREE};
use mnqt::verify::{run_suite, Fault, Suite, VerifyConfig};

/// Macdonald polynomials, Murnaghan–Nakayama rules and (q,t)-Kostka polynomials
/// in exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "mnqt", version)]
struct Cli {
    /// Truncation degree N
    #[arg(long, global = true, env = "MNQT_DEGREE")]
    degree: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for table computations
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for randomized spot checks in `verify`
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate a basis in degree n
    Expand(ExpandArgs),
    /// One step of a Murnaghan–Nakayama rule
    Mn(MnArgs),
    /// (q,t)-Kostka polynomials
    Kostka(KostkaArgs),
    /// (q,t)-Green polynomials
    Green(GreenArgs),
    /// Inverted Hall–Littlewood Pieri rule
    InvertPieri(InvertArgs),
    /// Run an identity suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct ExpandArgs {
    /// P, Q, J, HL-P, HL-Q, schur-P or schur-Q
    #[arg(long, value_parser = parse_table_basis)]
    basis: TableBasis,
    #[arg(long)]
    n: usize,
    /// Basis the functions are written in
    #[arg(long = "in", value_enum, default_value_t = Target::Monomial)]
    target: Target,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Monomial,
    Power,
    Schur,
}

impl From<Target> for Basis {
    fn from(t: Target) -> Basis {
        match t {
            Target::Monomial => Basis::Monomial,
            Target::Power => Basis::Power,
            Target::Schur => Basis::Schur,
        }
    }
}

#[derive(Args, Debug)]
struct MnArgs {
    /// Lower partition μ (upper partition λ with --dual)
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Number of added (or removed) cells
    #[arg(long)]
    k: usize,
    /// a-1, -1, 1, 0, 1/(1-q), 1/(1-t), diff:X,Y or letters:X,Y,...
    #[arg(long, default_value = "a-1", value_parser = parse_alphabet)]
    alphabet: Alphabet,
    /// Expand g_k^⊥ Q_λ instead of g_k P_μ
    #[arg(long, conflicts_with_all = ["tilde", "rho"])]
    dual: bool,
    /// Use (a-1)^{-1} g_k((a-1)X) with closed-form coefficients
    #[arg(long, conflicts_with = "rho")]
    tilde: bool,
    /// Expand g_k Q_{μ/ρ}
    #[arg(long, value_parser = parse_partition)]
    rho: Option<Partition>,
}

#[derive(Args, Debug)]
struct KostkaArgs {
    #[arg(long)]
    n: Option<usize>,
    /// direct, iter1, binomial, iter2 or via-green
    #[arg(long, default_value = "direct", value_parser = parse_kostka_method)]
    method: KostkaMethod,
    /// Single coefficient K_{λμ}; requires --mu
    #[arg(long, value_parser = parse_partition, requires = "mu")]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition, requires = "lambda")]
    mu: Option<Partition>,
}

#[derive(Args, Debug)]
struct GreenArgs {
    #[arg(long)]
    n: Option<usize>,
    /// direct or iterative
    #[arg(long, default_value = "direct", value_parser = parse_green_method)]
    method: GreenMethod,
    /// Single value X^λ_μ; requires --mu
    #[arg(long, value_parser = parse_partition, requires = "mu")]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition, requires = "lambda")]
    mu: Option<Partition>,
}

#[derive(Args, Debug)]
struct InvertArgs {
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    /// Schur case (t = 0)
    #[arg(long, conflicts_with = "tm1")]
    t0: bool,
    /// Schur Q case (t = -1), strict λ only
    #[arg(long)]
    tm1: bool,
    /// Also check the expansion by recomputing both sides
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// orthogonality, mn, specializations, green, kostka, inversion or all
    #[arg(value_parser = parse_suite, default_value = "all")]
    suite: Suite,
    /// Add 1 to the direct Kostka entry at λ;μ before comparing
    #[arg(long, value_parser = parse_cell)]
    inject_kostka: Option<(Partition, Partition)>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("invalid partition '{s}': {e}"))
}

fn parse_cell(s: &str) -> Result<(Partition, Partition), String> {
    let (l, m) = s
        .split_once(';')
        .ok_or_else(|| format!("expected 'λ;μ', got '{s}'"))?;
    Ok((parse_partition(l)?, parse_partition(m)?))
}

fn parse_table_basis(s: &str) -> Result<TableBasis, String> {
    s.parse().map_err(|e: mnqt::MathError| e.to_string())
}

fn parse_kostka_method(s: &str) -> Result<KostkaMethod, String> {
    s.parse().map_err(|e: mnqt::MathError| e.to_string())
}

fn parse_green_method(s: &str) -> Result<GreenMethod, String> {
    s.parse().map_err(|e: mnqt::MathError| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: mnqt::MathError| e.to_string())
}

fn parse_ratfuncs(s: &str) -> Result<Vec<RatFunc>, String> {
    s.split(',')
        .map(|x| x.parse().map_err(|e| format!("invalid rational function '{x}': {e}")))
        .collect()
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    match s {
        "a-1" => return Ok(Alphabet::a_minus_one()),
        "-1" => return Ok(Alphabet::minus_one()),
        "1" => return Ok(Alphabet::unit()),
        "0" => return Ok(Alphabet::zero()),
        "1/(1-q)" => return Ok(Alphabet::geometric(Var::Q)),
        "1/(1-t)" => return Ok(Alphabet::geometric(Var::T)),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("diff:") {
        let xs = parse_ratfuncs(rest)?;
        let [a, b]: [RatFunc; 2] = xs.try_into().map_err(|_| format!("diff needs two entries, got '{rest}'"))?;
        return Ok(Alphabet::difference(a, b));
    }
    if let Some(rest) = s.strip_prefix("letters:") {
        return Ok(Alphabet::letters(parse_ratfuncs(rest)?));
    }
    Err(format!("unknown alphabet '{s}'"))
}

type CliResult<T> = Result<T, String>;

fn err(e: mnqt::MathError) -> String {
    e.to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    if let Some(n) = cli.degree {
        if n == 0 || n > MAX_DEGREE {
            return Err(format!("--degree must be in 1..={MAX_DEGREE}, got {n}"));
        }
        set_truncation(n).map_err(err)?;
    }
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let format = cli.format;
    match cli.command {
        Command::Expand(a) => {
            check_degree(a.n).map_err(err)?;
            let t = ExpansionTable::new(a.basis, a.n, a.target.into()).map_err(err)?;
            match format {
                Format::Json => print_json(&t.to_json()),
                Format::Text => print!("{}", t.to_text()),
                Format::Latex => print!("{}", expansion_latex(&t)),
            }
        }
        Command::Mn(a) => {
            check_degree(a.mu.size() + a.k).map_err(err)?;
            let e = if a.dual {
                mn_dual(&a.mu, a.k, &a.alphabet)
            } else if a.tilde {
                mn_tilde(&a.mu, a.k)
            } else if let Some(rho) = &a.rho {
                mn_skew_expand(&a.mu, rho, a.k, &a.alphabet)
            } else {
                mn_expand(&a.mu, a.k, &a.alphabet)
            }
            .map_err(err)?;
            let basis = if a.dual || a.rho.is_some() { "Q" } else { "P" };
            match format {
                Format::Json => print_json(&e.to_json()),
                Format::Text => print!("{}", mn_text(&e)),
                Format::Latex => println!("{}", mn_latex(&e, basis)),
            }
        }
        Command::Kostka(a) => {
            if let (Some(l), Some(m)) = (&a.lambda, &a.mu) {
                check_degree(l.size()).map_err(err)?;
                let v = kostka(l, m, a.method).map_err(err)?;
                print_value(format, "kostka", a.method.name(), l, m, &v);
            } else {
                let n = a.n.ok_or("kostka needs --n or --lambda/--mu")?;
                check_degree(n).map_err(err)?;
                print_table(format, &kostka_table(n, a.method).map_err(err)?);
            }
        }
        Command::Green(a) => {
            if let (Some(l), Some(m)) = (&a.lambda, &a.mu) {
                check_degree(l.size()).map_err(err)?;
                let v = green(l, m, a.method).map_err(err)?;
                print_value(format, "green", a.method.name(), l, m, &v);
            } else {
                let n = a.n.ok_or("green needs --n or --lambda/--mu")?;
                check_degree(n).map_err(err)?;
                print_table(format, &green_table(n, a.method).map_err(err)?);
            }
        }
        Command::InvertPieri(a) => {
            check_degree(a.lambda.size()).map_err(err)?;
            let e = if a.t0 {
                schur_inverse(&a.lambda)
            } else if a.tm1 {
                schur_q_inverse(&a.lambda)
            } else {
                hl_inverse_pieri(&a.lambda)
            }
            .map_err(err)?;
            if a.check && !e.check().map_err(err)? {
                return Err(format!("expansion of {} does not reconstruct", a.lambda));
            }
            match format {
                Format::Json => print_json(&e.to_json()),
                Format::Text => print!("{}", inversion_text(&e)),
                Format::Latex => println!("{}", inversion_latex(&e)),
            }
        }
        Command::Verify(a) => {
            let config = VerifyConfig {
                fault: a.inject_kostka.map(|(lambda, mu)| Fault::Kostka { lambda, mu }),
                seed: cli.seed,
            };
            let report = run_suite(a.suite, &config);
            match format {
                Format::Json => print_json(&serde_json::to_value(&report).map_err(|e| e.to_string())?),
                _ => print!("{}", report.to_text()),
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value prints"));
}

fn print_table(format: Format, t: &PairTable) {
    match format {
        Format::Json => print_json(&t.to_json()),
        Format::Text => print!("{}", t.to_text()),
        Format::Latex => print!("{}", t.to_latex()),
    }
}

fn print_value(format: Format, kind: &str, method: &str, l: &Partition, m: &Partition, v: &RatFunc) {
    match format {
        Format::Json => print_json(&serde_json::json!({
            "kind": kind,
            "method": method,
            "lambda": l.to_string(),
            "mu": m.to_string(),
            "value": v.to_string(),
        })),
        Format::Text => println!("{v}"),
        Format::Latex => {
            let sym = if kind == "kostka" {
                format!("K_{{({l}),({m})}}(q,t)")
            } else {
                format!("X^{{({l})}}_{{({m})}}(q,t)")
            };
            println!("{sym} = {}", latex(v));
        }
    }
}

fn latex(x: &RatFunc) -> String {
    let s = x.to_string().replace('*', " ");
    match s.split_once(")/(") {
        Some((n, d)) if s.starts_with('(') && s.ends_with(')') => {
            format!("\\frac{{{}}}{{{}}}", &n[1..], &d[..d.len() - 1])
        }
        _ => s,
    }
}

fn mn_text(e: &MnExpansion) -> String {
    e.terms.iter().map(|(l, c)| format!("{l}\t{c}\n")).collect()
}

fn mn_latex(e: &MnExpansion, basis: &str) -> String {
    let terms: Vec<String> = e
        .terms
        .iter()
        .map(|(l, c)| format!("\\left({}\\right) {basis}_{{({l})}}", latex(c)))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn inversion_text(e: &InversionExpansion) -> String {
    e.terms.iter().map(|(k, mu, c)| format!("{k}\t{mu}\t{c}\n")).collect()
}

fn inversion_latex(e: &InversionExpansion) -> String {
    let r = e.lambda.part(0);
    let terms: Vec<String> = e
        .terms
        .iter()
        .map(|(k, mu, c)| format!("\\left({}\\right) q_{{{}}} Q_{{({mu})}}", latex(c), r + k))
        .collect();
    format!("Q_{{({})}} = {}", e.lambda, terms.join(" + "))
}

fn expansion_latex(t: &ExpansionTable) -> String {
    let mut out = String::new();
    for (lam, f) in &t.entries {
        let basis = f.basis().name().chars().next().unwrap_or('?');
        let terms: Vec<String> = f
            .iter_desc()
            .map(|(p, c)| format!("\\left({}\\right) {basis}_{{({p})}}", latex(c)))
            .collect();
        out.push_str(&format!("{}_{{({lam})}} = {} \\\\\n", t.basis, terms.join(" + ")));
    }
    out
}
