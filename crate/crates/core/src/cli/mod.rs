//! Command-line front end.
//!
//! Exit codes: `0` success or the checked property holds, `1` a
//! mathematical failure (check failed, precondition unmet), `2` an I/O,
//! usage or parse error.

mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use format::{
    parse_rational, parse_rational_list, AlgebraFile, Coefficients, Entry, FormatError,
};

use crate::catalog;
use crate::construct::{complete_any, two_generator_lr};
use crate::exec::{self, Execution};
use crate::lie::{series, validate_lie, LieAlgebra};
use crate::linalg::Rational;
use crate::lr::{
    basis_triples, check_complete, check_lr, check_operator_identities, sample_triples,
    two_of_three, Product,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Exact LR-structures on Lie algebras.
#[derive(Debug, Parser)]
#[command(name = "lralg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Source {
    /// Algebra file
    #[arg(required_unless_present = "batch", conflicts_with = "batch")]
    file: Option<PathBuf>,
    /// Process every `*.json` file in a directory, reported in filename order
    #[arg(long, value_name = "DIR")]
    batch: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check antisymmetry and the Jacobi identity
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// Lower central and derived series
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Check the LR identities, compatibility and completeness of the product
    CheckLr {
        #[command(flatten)]
        source: Source,
        /// Also fail unless every right multiplication is nilpotent
        #[arg(long)]
        require_complete: bool,
        #[arg(long)]
        json: bool,
    },
    /// Replace the product by a complete LR-structure
    Complete {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// LR-structure on an algebra generated by two elements
    TwoGen {
        file: PathBuf,
        /// First generator, comma-separated coordinates
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Second generator, comma-separated coordinates
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(short, long)]
        output: PathBuf,
        /// Complete the product before writing it
        #[arg(long)]
        complete: bool,
    },
    /// Emit a named algebra or fixture (`list` shows the names)
    Catalog {
        name: String,
        /// Dimension, generator count or comma-separated weights
        #[arg(allow_hyphen_values = true)]
        param: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the six operator identities of an LR product
    Identities {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = crate::lr::DEFAULT_SAMPLE_SEED)]
        seed: u64,
    },
}

/// Result of one command: report text for stdout, diagnostics for stderr
/// and an exit code.
struct Outcome {
    code: i32,
    text: String,
    diag: String,
}

impl Outcome {
    fn new(code: i32, text: String) -> Self {
        Outcome {
            code,
            text,
            diag: String::new(),
        }
    }

    fn input(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            text: String::new(),
            diag: format!("error: {msg}\n"),
        }
    }

    fn failure(msg: impl std::fmt::Display) -> Self {
        Outcome::new(EXIT_FAILURE, format!("{msg}\n"))
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let outcome = dispatch(cli.command);
    let _ = out.write_all(outcome.text.as_bytes());
    let _ = err.write_all(outcome.diag.as_bytes());
    outcome.code
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Validate { source } => per_file(&source, validate),
        Command::Analyze { source, json } => per_file(&source, |p| analyze(p, json)),
        Command::CheckLr {
            source,
            require_complete,
            json,
        } => per_file(&source, |p| check(p, require_complete, json)),
        Command::Complete { file, output } => complete(&file, &output),
        Command::TwoGen {
            file,
            x,
            y,
            output,
            complete,
        } => two_gen(&file, &x, &y, &output, complete),
        Command::Catalog {
            name,
            param,
            output,
        } => catalog_entry(&name, param.as_deref(), output.as_deref()),
        Command::Identities {
            file,
            samples,
            seed,
        } => identities(&file, samples, seed),
    }
}

/// Single file, or every `*.json` in a directory processed in parallel and
/// merged in filename order. Per-file diagnostics stay inline in the
/// report; the batch exit code is the largest one seen.
fn per_file(source: &Source, f: impl Fn(&Path) -> Outcome + Sync) -> Outcome {
    let Some(dir) = &source.batch else {
        return f(source
            .file
            .as_deref()
            .expect("clap requires FILE or --batch"));
    };
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect(),
        Err(e) => return Outcome::input(format!("{}: {e}", dir.display())),
    };
    files.sort();
    let results = exec::map_slice(Execution::default(), &files, |p| f(p));
    let mut text = String::new();
    let mut code = EXIT_OK;
    for (path, r) in files.iter().zip(results) {
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy())
            .unwrap_or_default();
        let _ = writeln!(text, "== {name} ==");
        text.push_str(&r.text);
        text.push_str(&r.diag);
        code = code.max(r.code);
    }
    Outcome::new(code, text)
}

/// Reads and parses an algebra file.
pub fn load(path: &Path) -> Result<(LieAlgebra, Option<Product>), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file = AlgebraFile::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    file.to_parts()
        .map_err(|e| format!("{}: {e}", path.display()))
}

/// Writes the canonical file for `g` and `p`.
pub fn save(path: &Path, g: &LieAlgebra, p: Option<&Product>) -> Result<(), String> {
    std::fs::write(path, AlgebraFile::from_parts(g, p).to_json())
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn load_with_product(path: &Path) -> Result<(LieAlgebra, Product), Outcome> {
    match load(path) {
        Ok((g, Some(p))) => Ok((g, p)),
        Ok((_, None)) => Err(Outcome::input(format!(
            "{}: field `product` is missing",
            path.display()
        ))),
        Err(e) => Err(Outcome::input(e)),
    }
}

fn indices(ix: &[usize]) -> String {
    let parts: Vec<String> = ix.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn validate(path: &Path) -> Outcome {
    let g = match load(path) {
        Ok((g, _)) => g,
        Err(e) => return Outcome::input(e),
    };
    let violations = validate_lie(&g);
    if violations.is_empty() {
        return Outcome::new(EXIT_OK, format!("valid Lie algebra, dim {}\n", g.dim()));
    }
    let mut text = format!("not a Lie algebra: {} violation(s)\n", violations.len());
    for v in &violations {
        let _ = writeln!(text, "  {} fails at {}", v.axiom, indices(&v.indices));
    }
    Outcome::new(EXIT_FAILURE, text)
}

#[derive(Serialize)]
struct AnalyzeJson {
    dim: usize,
    lower_central_dims: Vec<usize>,
    infinity_index: usize,
    g_infinity_dim: usize,
    derived_dims: Vec<usize>,
    nilpotent: bool,
    solvable_class: Option<usize>,
}

fn analyze(path: &Path, json: bool) -> Outcome {
    let g = match load(path) {
        Ok((g, _)) => g,
        Err(e) => return Outcome::input(e),
    };
    let report = match series(&g) {
        Ok(r) => r,
        Err(e) => return Outcome::failure(e),
    };
    let dims = |v: &[crate::Subspace]| v.iter().map(crate::Subspace::dim).collect::<Vec<_>>();
    if json {
        return Outcome::new(
            EXIT_OK,
            json_line(&AnalyzeJson {
                dim: g.dim(),
                lower_central_dims: dims(&report.lower_central),
                infinity_index: report.infinity_index(),
                g_infinity_dim: report.g_infinity.dim(),
                derived_dims: dims(&report.derived),
                nilpotent: report.nilpotent,
                solvable_class: report.solvable_class,
            }),
        );
    }
    let mut text = format!(
        "g^{} = g^inf, dim {}; {}; {}\n",
        report.infinity_index(),
        report.g_infinity.dim(),
        if report.nilpotent {
            "nilpotent"
        } else {
            "not nilpotent"
        },
        match report.solvable_class {
            Some(c) => format!("solvable class {c}"),
            None => "not solvable".to_string(),
        }
    );
    for (i, s) in report.lower_central.iter().enumerate() {
        let _ = writeln!(text, "  dim g^{} = {}", i + 1, s.dim());
    }
    for (i, s) in report.derived.iter().enumerate() {
        let _ = writeln!(text, "  dim g^({}) = {}", i, s.dim());
    }
    Outcome::new(EXIT_OK, text)
}

#[derive(Serialize)]
struct CheckJson {
    is_lr: bool,
    is_compatible: bool,
    is_complete: bool,
    failing: Vec<&'static str>,
    violation_count: usize,
    two_of_three: Option<[bool; 3]>,
}

/// Violations listed in text reports before truncation.
const SHOWN_VIOLATIONS: usize = 10;

fn check(path: &Path, require_complete: bool, json: bool) -> Outcome {
    let (g, p) = match load_with_product(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let report = match check_lr(&g, &p) {
        Ok(r) => r,
        Err(e) => return Outcome::failure(e),
    };
    let flags = if report.is_structure() {
        match two_of_three(&g, &p) {
            Ok(t) => Some(t),
            Err(e) => return Outcome::failure(e),
        }
    } else {
        None
    };
    let ok = report.is_structure() && (!require_complete || report.is_complete);
    let code = if ok { EXIT_OK } else { EXIT_FAILURE };
    if json {
        return Outcome::new(
            code,
            json_line(&CheckJson {
                is_lr: report.is_lr,
                is_compatible: report.is_compatible,
                is_complete: report.is_complete,
                failing: report
                    .failing_identities()
                    .iter()
                    .map(|i| i.name())
                    .collect(),
                violation_count: report.violations.len(),
                two_of_three: flags.map(|t| {
                    let (a, b, c) = t.flags();
                    [a, b, c]
                }),
            }),
        );
    }
    let mut text = format!(
        "lr: {}\ncompatible: {}\ncomplete: {}\n",
        yes_no(report.is_lr),
        yes_no(report.is_compatible),
        yes_no(report.is_complete)
    );
    if let Some(t) = flags {
        let (a, b, c) = t.flags();
        let _ = writeln!(
            text,
            "left nilpotent: {}, right nilpotent: {}, lie nilpotent: {}",
            yes_no(a),
            yes_no(b),
            yes_no(c)
        );
    }
    for v in report.violations.iter().take(SHOWN_VIOLATIONS) {
        let _ = writeln!(text, "  {} fails at {}", v.identity, indices(&v.indices));
    }
    if report.violations.len() > SHOWN_VIOLATIONS {
        let _ = writeln!(
            text,
            "  … {} more",
            report.violations.len() - SHOWN_VIOLATIONS
        );
    }
    Outcome::new(code, text)
}

fn complete(path: &Path, output: &Path) -> Outcome {
    let (g, p) = match load_with_product(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let cert = match complete_any(&g, &p) {
        Ok(c) => c,
        Err(e) => return Outcome::failure(format!("cannot complete: {e}")),
    };
    if let Err(e) = save(output, &g, Some(&cert.completed)) {
        return Outcome::input(e);
    }
    let entries = AlgebraFile::from_parts(&g, Some(&cert.completed))
        .product
        .map_or(0, |v| v.len());
    Outcome::new(
        EXIT_OK,
        format!(
            "completed product: {entries} nonzero entries\nfitting split of the quotient: dim V_n = {}, dim V_0 = {}\nproducts stay in span(g·g): {}\nunchanged: {}\n",
            cert.fitting.v_n.dim(),
            cert.fitting.v_0.dim(),
            yes_no(cert.containment_witness),
            yes_no(cert.completed == cert.original),
        ),
    )
}

fn parse_vector(name: &str, s: &str, dim: usize) -> Result<Vec<Rational>, Outcome> {
    let v = parse_rational_list(s).map_err(|e| Outcome::input(format!("--{name}: {e}")))?;
    if v.len() != dim {
        return Err(Outcome::input(format!(
            "--{name}: {} coordinates for dimension {dim}",
            v.len()
        )));
    }
    Ok(v)
}

fn two_gen(path: &Path, x: &str, y: &str, output: &Path, finish: bool) -> Outcome {
    let g = match load(path) {
        Ok((g, _)) => g,
        Err(e) => return Outcome::input(e),
    };
    let (x, y) = match (parse_vector("x", x, g.dim()), parse_vector("y", y, g.dim())) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let raw = match two_generator_lr(&g, &x, &y) {
        Ok(p) => p,
        Err(e) => return Outcome::failure(format!("no two-generator product: {e}")),
    };
    let raw_complete = match check_complete(&raw) {
        Ok(c) => c,
        Err(e) => return Outcome::failure(e),
    };
    let mut text = format!("two-generator product complete: {}\n", yes_no(raw_complete));
    let product = if finish {
        match complete_any(&g, &raw) {
            Ok(c) => {
                let _ = writeln!(text, "completed: yes");
                c.completed
            }
            Err(e) => return Outcome::failure(format!("{text}cannot complete: {e}")),
        }
    } else {
        raw
    };
    if let Err(e) = save(output, &g, Some(&product)) {
        return Outcome::input(e);
    }
    Outcome::new(EXIT_OK, text)
}

fn catalog_entry(name: &str, param: Option<&str>, output: Option<&Path>) -> Outcome {
    if name == "list" {
        let mut text = String::from("algebras:\n");
        for (n, p) in catalog::ALGEBRA_NAMES {
            let _ = writeln!(text, "  {n}{}{p}", if p.is_empty() { "" } else { " " });
        }
        text.push_str("fixtures:\n");
        for n in catalog::FIXTURE_NAMES {
            let _ = writeln!(text, "  {n}");
        }
        return Outcome::new(EXIT_OK, text);
    }
    let (g, p) = if catalog::FIXTURE_NAMES.contains(&name) {
        if param.is_some() {
            return Outcome::input(format!("fixture `{name}` takes no parameter"));
        }
        match catalog::known_lr(name) {
            Ok(f) => (f.algebra, Some(f.product)),
            Err(e) => return Outcome::input(e),
        }
    } else {
        match catalog::algebra(name, param) {
            Ok(g) => (g, None),
            Err(e) => return Outcome::input(e),
        }
    };
    let json = AlgebraFile::from_parts(&g, p.as_ref()).to_json();
    match output {
        None => Outcome::new(EXIT_OK, json),
        Some(path) => match std::fs::write(path, json) {
            Ok(()) => Outcome::new(EXIT_OK, String::new()),
            Err(e) => Outcome::input(format!("{}: {e}", path.display())),
        },
    }
}

fn identities(path: &Path, samples: usize, seed: u64) -> Outcome {
    let (_, p) = match load_with_product(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let triples = sample_triples(p.dim(), samples, seed);
    let violations = match check_operator_identities(&p, &triples) {
        Ok(v) => v,
        Err(e) => return Outcome::failure(e),
    };
    let checked = basis_triples(p.dim()).len() + triples.len();
    let mut text = format!("{checked} triples ({samples} sampled, seed {seed}) × 6 identities\n");
    if violations.is_empty() {
        text.push_str("all identities hold\n");
        return Outcome::new(EXIT_OK, text);
    }
    let _ = writeln!(text, "{} violation(s)", violations.len());
    for v in violations.iter().take(SHOWN_VIOLATIONS) {
        let _ = writeln!(text, "  {} fails", v.identity.formula());
    }
    Outcome::new(EXIT_FAILURE, text)
}
