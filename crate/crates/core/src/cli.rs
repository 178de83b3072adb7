//! Command-line front end.
//!
//! Every subcommand prints one report, as text or as JSON (`--format json`).
//! Exit codes: 0 when the computation ran (negative verdicts included), 2 on
//! input errors, 3 when `crosscheck` finds a discrepancy.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::checkers::{
    check_condition, check_si_props, check_two_element, crosscheck_with_threshold, enumerate_small, ConditionId,
    CrossCheckReport, TwoElementVerdict, MAX_ENUMERATION_SIZE,
};
use crate::congruence::{hat_congruence, is_congruence_simple, lambda_rho, monolith, Partition};
use crate::constructions::{apply_transform, generate};
use crate::error::{Error, Result};
use crate::matrix::{extract_constant_pair, Matrix, MatrixSemiring, Mode, DEFAULT_THRESHOLD};
use crate::semiring::{classify, element_profile, natural_order, verify_axioms, FiniteSemiring, Tables};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

/// Blocks of a matrix monolith listed in text reports.
const TEXT_BLOCKS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "idemring",
    version,
    about = "Congruences of finite additively idempotent semirings and their matrix semirings"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest matrix semiring that may be materialized.
    #[arg(long, global = true, default_value_t = DEFAULT_THRESHOLD)]
    threshold: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the semiring axioms of a table file.
    Verify { file: PathBuf },

    /// Simplicity, subdirect irreducibility, monolith and element profile.
    Analyze {
        file: PathBuf,
        /// Also analyze M_N(S) by brute force.
        #[arg(long, value_name = "N")]
        matrix: Option<usize>,
    },

    /// Build a semiring from a generator: l2, bool:K, luk:U, end0:<lattice-file>.
    Gen {
        spec: String,
        /// Transformations applied in order: adjoin-unity, adjoin-least, corner:<label>.
        #[arg(short = 't', long = "transform", value_name = "T")]
        transforms: Vec<String>,
        #[arg(short = 'o', value_name = "PATH")]
        output: Option<PathBuf>,
    },

    /// Apply one transformation to a semiring file.
    Transform {
        file: PathBuf,
        transform: String,
        #[arg(short = 'o', value_name = "PATH")]
        output: Option<PathBuf>,
    },

    /// Materialize M_N(S), or extract a pair of distinct constant matrices.
    Matrix {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        /// Two distinct matrices, e.g. '[["0","u"],["e","0"]]'.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        extract: Option<Vec<String>>,
        #[arg(short = 'o', value_name = "PATH")]
        output: Option<PathBuf>,
    },

    /// Evaluate a condition (or `two-element`, `si-props`) on a semiring.
    Check { what: String, file: PathBuf },

    /// Compare condition verdicts with brute force on one file or on every
    /// semiring with 2..=K elements.
    Crosscheck {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        file: Option<PathBuf>,
    },

    /// Exploratory probes that only report.
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Debug, Subcommand)]
enum Experiment {
    /// Pull the monolith of M_N(S) back to S and compare it with the
    /// monolith of S.
    HatMonolith {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

/// A finished report: its JSON form, its text form and the exit code.
struct Report {
    json: Value,
    text: String,
    code: i32,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            code: EXIT_OK,
        }
    }
}

/// Runs the tool on `argv` (program name first) with the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (stdout, stderr) = (io::stdout(), io::stderr());
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing the report to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = validate(&cli).and_then(|()| execute(&cli));
    match result {
        Ok(report) => {
            let written = match cli.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("reports serialize")
                ),
                Format::Text => write!(out, "{}", report.text),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: writing report: {e}");
                return EXIT_INPUT;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn validate(cli: &Cli) -> Result<()> {
    let positive = |what: &str, n: usize| {
        if n == 0 {
            Err(Error::Input(format!("{what} must be at least 1")))
        } else {
            Ok(())
        }
    };
    positive("--threshold", cli.threshold)?;
    match &cli.command {
        Command::Analyze { matrix: Some(n), .. } => positive("--matrix", *n),
        Command::Matrix { n, .. } => positive("--n", *n),
        Command::Crosscheck { max_size, n, file } => {
            if *n < 2 {
                return Err(Error::Input(format!("--n must be at least 2, got {n}")));
            }
            if file.is_none() && !(1..=MAX_ENUMERATION_SIZE).contains(max_size) {
                return Err(Error::Input(format!(
                    "--max-size must be in 1..={MAX_ENUMERATION_SIZE}, got {max_size}"
                )));
            }
            Ok(())
        }
        Command::Check { what, .. } => {
            if ConditionId::parse(what).is_none() && what != "two-element" && what != "si-props" {
                let names: Vec<&str> = ConditionId::ALL.iter().map(|c| c.name()).collect();
                return Err(Error::Input(format!(
                    "unknown check `{what}` (expected {}, two-element or si-props)",
                    names.join(", ")
                )));
            }
            Ok(())
        }
        Command::Experiment(Experiment::HatMonolith { n, .. }) => positive("--n", *n),
        _ => Ok(()),
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Verify { file } => verify(file),
        Command::Analyze { file, matrix } => analyze(&load(file)?, *matrix, cli.threshold),
        Command::Gen {
            spec,
            transforms,
            output,
        } => {
            let mut s = generate(spec)?;
            for t in transforms {
                s = apply_transform(&s, t)?;
            }
            emit(&s, output.as_deref())
        }
        Command::Transform {
            file,
            transform,
            output,
        } => emit(&apply_transform(&load(file)?, transform)?, output.as_deref()),
        Command::Matrix {
            file,
            n,
            extract,
            output,
        } => {
            let s = load(file)?;
            match extract {
                Some(pair) => extract_pair(&s, *n, &pair[0], &pair[1], cli.threshold),
                None => {
                    let ms = MatrixSemiring::new(&s, *n, Mode::Materialized, cli.threshold)?;
                    emit(ms.require_materialized()?, output.as_deref())
                }
            }
        }
        Command::Check { what, file } => check(what, &load(file)?),
        Command::Crosscheck { max_size, n, file } => match file {
            Some(f) => sweep(vec![load(f)?], None, *n, cli.threshold),
            None => {
                let all: Vec<_> = enumerate_small(*max_size)?
                    .into_iter()
                    .filter(|s| s.size() >= 2)
                    .collect();
                sweep(all, Some(*max_size), *n, cli.threshold)
            }
        },
        Command::Experiment(Experiment::HatMonolith { file, n }) => hat_monolith(&load(file)?, *n, cli.threshold),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Every error from a file names the file.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Io { .. } => e,
        other => Error::Input(format!("{}: {other}", path.display())),
    })
}

fn load(path: &Path) -> Result<FiniteSemiring> {
    let text = read(path)?;
    in_file(path, FiniteSemiring::from_json(&text))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn blocks_text(blocks: &[Vec<String>]) -> String {
    blocks
        .iter()
        .map(|b| format!("{{{}}}", b.join(", ")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit(s: &FiniteSemiring, output: Option<&Path>) -> Result<Report> {
    let tables = serde_json::to_value(s.to_tables()).expect("tables serialize");
    match output {
        None => Ok(Report::ok(tables, format!("{}\n", s.to_json()))),
        Some(path) => {
            fs::write(path, format!("{}\n", s.to_json())).map_err(|source| Error::Io {
                path: path.display().to_string(),
                source,
            })?;
            let json = json!({
                "name": s.name(),
                "size": s.size(),
                "written": path.display().to_string(),
            });
            let text = format!("wrote {} ({} elements) to {}\n", s.name(), s.size(), path.display());
            Ok(Report::ok(json, text))
        }
    }
}

fn verify(path: &Path) -> Result<Report> {
    let text = read(path)?;
    let tables = in_file(path, Tables::from_json(&text))?;
    let report = in_file(path, verify_axioms(&tables))?;
    let label = |i: usize| tables.elements[i].clone();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "axiom": f.axiom.name(),
                "witness": f.witness.iter().map(|&i| label(i)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = String::new();
    for f in &report.failures {
        let [a, b, c] = f.witness;
        text += &format!(
            "{}: axiom {} fails at ({}, {}, {})\n",
            path.display(),
            f.axiom.name(),
            label(a),
            label(b),
            label(c)
        );
    }
    let idempotent = report
        .passed()
        .then(|| (0..tables.elements.len()).all(|a| tables.add[a][a] == a));
    if let Some(idem) = idempotent {
        text = format!(
            "{}: {} is a semiring with {} elements; additively idempotent: {}\n",
            path.display(),
            tables.name,
            tables.elements.len(),
            yes(idem)
        );
    }
    let json = json!({
        "name": tables.name,
        "size": tables.elements.len(),
        "passed": report.passed(),
        "additively_idempotent": idempotent,
        "failures": failures,
    });
    Ok(Report {
        json,
        text,
        code: if report.passed() { EXIT_OK } else { EXIT_INPUT },
    })
}

fn analyze(s: &FiniteSemiring, matrix: Option<usize>, threshold: usize) -> Result<Report> {
    let flags = classify(s);
    let profile = element_profile(s);
    let simple = is_congruence_simple(s)?;
    let mono = monolith(s)?;
    let (lambda, rho) = lambda_rho(s);
    let lab = |x: Option<usize>| x.map(|i| s.label(i).to_owned());
    let covers = natural_order(s).ok().map(|o| {
        o.covering_pairs()
            .into_iter()
            .map(|(a, b)| [s.label(a).to_owned(), s.label(b).to_owned()])
            .collect::<Vec<_>>()
    });
    let mono_blocks = mono.as_ref().map(|m| m.partition.labeled_blocks(s));
    let generator = mono.as_ref().map(|m| {
        [
            s.label(m.generating_pair.0).to_owned(),
            s.label(m.generating_pair.1).to_owned(),
        ]
    });

    let mut text = format!("{}: {} elements\n", s.name(), s.size());
    text += &format!(
        "additively idempotent: {}, commutative: {}, almost integral: {}, integral: {}, downward directed: {}, |SS| = {}\n",
        yes(flags.additively_idempotent),
        yes(flags.commutative),
        yes(flags.almost_integral),
        yes(flags.integral),
        yes(flags.downward_directed),
        flags.ss_size
    );
    let show = |x: Option<usize>| x.map_or_else(|| "none".to_owned(), |i| s.label(i).to_owned());
    text += &format!(
        "zero: {}, unity: {}, bi-absorbing: {}, greatest: {}\n",
        show(profile.zero),
        show(profile.unity),
        show(profile.bi_absorbing),
        show(profile.greatest)
    );
    text += &format!("simple: {}\n", yes(simple));
    text += &format!("subdirectly irreducible: {}\n", yes(mono.is_some()));
    if let (Some(blocks), Some([a, b])) = (&mono_blocks, &generator) {
        text += &format!("monolith: {} = Cg({a}, {b})\n", blocks_text(blocks));
    }
    text += &format!("lambda: {}\n", blocks_text(&lambda.labeled_blocks(s)));
    text += &format!("rho: {}\n", blocks_text(&rho.labeled_blocks(s)));

    let mut json = json!({
        "name": s.name(),
        "size": s.size(),
        "elements": s.labels(),
        "flags": flags,
        "zero": lab(profile.zero),
        "unity": lab(profile.unity),
        "bi_absorbing": lab(profile.bi_absorbing),
        "greatest": lab(profile.greatest),
        "covering_pairs": covers,
        "simple": simple,
        "subdirectly_irreducible": mono.is_some(),
        "monolith": mono_blocks,
        "monolith_generator": generator,
        "lambda": lambda.labeled_blocks(s),
        "rho": rho.labeled_blocks(s),
    });

    if let Some(n) = matrix {
        let ms = MatrixSemiring::new(s, n, Mode::Materialized, threshold)?;
        let m = ms.require_materialized()?;
        let m_simple = is_congruence_simple(m)?;
        let m_mono = monolith(m)?;
        let nontrivial =
            |p: &Partition| -> Vec<Vec<String>> { p.labeled_blocks(m).into_iter().filter(|b| b.len() > 1).collect() };
        let m_blocks = m_mono.as_ref().map(|x| nontrivial(&x.partition));
        let m_gen = m_mono.as_ref().map(|x| {
            [
                m.label(x.generating_pair.0).to_owned(),
                m.label(x.generating_pair.1).to_owned(),
            ]
        });
        text += &format!("M_{n}: {} elements\n", m.size());
        text += &format!("M_{n} simple: {}\n", yes(m_simple));
        text += &format!("M_{n} subdirectly irreducible: {}\n", yes(m_mono.is_some()));
        if let (Some(blocks), Some([a, b])) = (&m_blocks, &m_gen) {
            text += &format!("M_{n} monolith: Cg({a}, {b}), {} non-singleton blocks\n", blocks.len());
            for block in blocks.iter().take(TEXT_BLOCKS) {
                text += &format!("  {}\n", blocks_text(std::slice::from_ref(block)));
            }
            if blocks.len() > TEXT_BLOCKS {
                text += &format!("  ... {} more (see --format json)\n", blocks.len() - TEXT_BLOCKS);
            }
        }
        json["matrix"] = json!({
            "n": n,
            "size": m.size(),
            "simple": m_simple,
            "subdirectly_irreducible": m_mono.is_some(),
            "monolith_nontrivial_blocks": m_blocks,
            "monolith_generator": m_gen,
        });
    }
    Ok(Report::ok(json, text))
}

fn check(what: &str, s: &FiniteSemiring) -> Result<Report> {
    if let Some(id) = ConditionId::parse(what) {
        let v = check_condition(s, id)?;
        let json = serde_json::to_value(v.labeled(s)).expect("verdicts serialize");
        let mut text = format!(
            "{} on {}: {}\n",
            id.name(),
            s.name(),
            if v.holds { "holds" } else { "fails" }
        );
        if !v.holds {
            text += &format!("witness: {}\n", v.describe_witness(s));
        }
        return Ok(Report::ok(json, text));
    }
    if what == "two-element" {
        let v = check_two_element(s)?;
        let (name, element) = match v {
            TwoElementVerdict::IsL2 => ("is-l2", None),
            TwoElementVerdict::BiAbsorbing(b) => ("bi-absorbing", Some(b)),
            TwoElementVerdict::SsSingleton => ("ss-singleton", None),
            TwoElementVerdict::LeftCancellation => ("left-cancellation", None),
            TwoElementVerdict::RightCancellation => ("right-cancellation", None),
        };
        let element = element.map(|b| s.label(b).to_owned());
        let mut text = format!("{}: {name}", s.name());
        if let Some(b) = &element {
            text += &format!(" ({b})");
        }
        text += &format!("\nmatrix semirings can be simple: {}\n", yes(v.is_l2()));
        let json = json!({
            "verdict": name,
            "element": element,
            "matrix_simple_possible": v.is_l2(),
        });
        return Ok(Report::ok(json, text));
    }
    let r = check_si_props(s)?;
    let witnesses: Vec<Value> = r.counterexamples.iter().map(|w| w.to_value(s)).collect();
    let json = json!({
        "zero": s.label(r.zero),
        "least_nonzero": s.label(r.least_nonzero),
        "e_squared_zero": r.e_squared_zero,
        "nonzero_multiple_is_greatest": r.nonzero_multiple_is_greatest,
        "unity_join_irreducible": r.unity_join_irreducible,
        "holds": r.holds(),
        "counterexamples": witnesses,
    });
    let opt = |b: Option<bool>| b.map_or("not applicable", yes);
    let mut text = format!(
        "{}: zero {}, least non-zero e = {}\ne^2 = 0: {}\nae != 0 only for the greatest a: {}\nunity join-irreducible: {}\n",
        s.name(),
        s.label(r.zero),
        s.label(r.least_nonzero),
        yes(r.e_squared_zero),
        opt(r.nonzero_multiple_is_greatest),
        opt(r.unity_join_irreducible)
    );
    for w in &r.counterexamples {
        text += &format!("counterexample: {}\n", w.describe(s));
    }
    Ok(Report::ok(json, text))
}

fn sweep(semirings: Vec<FiniteSemiring>, max_size: Option<usize>, n: usize, threshold: usize) -> Result<Report> {
    let reports: Vec<CrossCheckReport> = semirings
        .par_iter()
        .map(|s| crosscheck_with_threshold(s, n, threshold))
        .collect::<Result<_>>()?;
    let discrepancies: usize = reports.iter().map(|r| r.discrepancies().len()).sum();
    let agreements: usize = reports.iter().map(|r| r.agreements.len()).sum();
    let mut text = String::new();
    for r in &reports {
        let b = &r.brute_force;
        text += &format!(
            "{:<10} simple {:<3} si {:<3} M_{n} simple {:<3} si {:<3} agreements {}/{}\n",
            r.semiring,
            yes(b.simple),
            yes(b.subdirectly_irreducible),
            yes(b.matrix_simple),
            yes(b.matrix_subdirectly_irreducible),
            r.agreements.len() - r.discrepancies().len(),
            r.agreements.len()
        );
        for d in r.discrepancies() {
            text += &format!("  DISCREPANCY {}: {}\n", d.theorem, d.detail);
        }
    }
    text += &format!(
        "{} semirings, {agreements} agreements checked, {discrepancies} discrepancies\n",
        reports.len()
    );
    let json = json!({
        "max_size": max_size,
        "n": n,
        "semirings": reports.len(),
        "agreements_checked": agreements,
        "discrepancies": discrepancies,
        "reports": reports,
    });
    Ok(Report {
        json,
        text,
        code: if discrepancies == 0 { EXIT_OK } else { EXIT_DISCREPANCY },
    })
}

fn extract_pair(s: &FiniteSemiring, n: usize, a: &str, b: &str, threshold: usize) -> Result<Report> {
    let ms = MatrixSemiring::new(s, n, Mode::Lazy, threshold)?;
    let ma = Matrix::parse_literal(s, a)?;
    let mb = Matrix::parse_literal(s, b)?;
    let pair = extract_constant_pair(&ms, &ma, &mb)?;
    let steps: Vec<Value> = pair
        .chain
        .steps
        .iter()
        .map(|st| json!({ "side": st.side, "matrix": st.matrix.to_labels(s) }))
        .collect();
    let mut text = format!(
        "constant pair ({}, {}) reached from\n  A = {}\n  B = {}\n",
        s.label(pair.a),
        s.label(pair.b),
        ma.literal(s),
        mb.literal(s)
    );
    for st in &pair.chain.steps {
        text += &format!("  {:?} by {}\n", st.side, st.matrix.literal(s)).to_lowercase();
    }
    let json = json!({
        "a": s.label(pair.a),
        "b": s.label(pair.b),
        "steps": steps,
    });
    Ok(Report::ok(json, text))
}

fn relation(a: &Partition, b: &Partition) -> &'static str {
    match (a.is_finer_than(b), b.is_finer_than(a)) {
        (true, true) => "equal",
        (true, false) => "finer",
        (false, true) => "coarser",
        (false, false) => "incomparable",
    }
}

fn hat_monolith(s: &FiniteSemiring, n: usize, threshold: usize) -> Result<Report> {
    let ms = MatrixSemiring::new(s, n, Mode::Materialized, threshold)?;
    let m = ms.require_materialized()?;
    let base_mono = monolith(s)?;
    let matrix_mono = monolith(m)?;
    let hat = matrix_mono
        .as_ref()
        .map(|mm| hat_congruence(&ms, &mm.partition))
        .transpose()?;
    let rel = match (&hat, &base_mono) {
        (Some(h), Some(b)) => Some(relation(h, &b.partition)),
        _ => None,
    };
    let base_blocks = base_mono.as_ref().map(|b| b.partition.labeled_blocks(s));
    let hat_blocks = hat.as_ref().map(|h| h.labeled_blocks(s));
    let mut text = format!("{}: subdirectly irreducible: {}\n", s.name(), yes(base_mono.is_some()));
    text += &format!(
        "M_{n}: {} elements, subdirectly irreducible: {}\n",
        m.size(),
        yes(matrix_mono.is_some())
    );
    if let Some(b) = &base_blocks {
        text += &format!("monolith of S: {}\n", blocks_text(b));
    }
    if let Some(h) = &hat_blocks {
        text += &format!("hat of the M_{n} monolith: {}\n", blocks_text(h));
    }
    if let Some(r) = rel {
        text += &format!("hat is {r} compared with the monolith of S\n");
    }
    let json = json!({
        "semiring": s.name(),
        "n": n,
        "matrix_size": m.size(),
        "subdirectly_irreducible": base_mono.is_some(),
        "matrix_subdirectly_irreducible": matrix_mono.is_some(),
        "monolith": base_blocks,
        "hat_of_matrix_monolith": hat_blocks,
        "hat_is_identity": hat.as_ref().map(|h| h.is_identity()),
        "relation": rel,
    });
    Ok(Report::ok(json, text))
}
