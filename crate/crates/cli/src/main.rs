//! `eala`: analyze unit forms, enumerate roots, evaluate bracket words,
//! and run the verification suites, with deterministic JSON on stdout.
//!
//! Exit codes: 0 success (and all checks passed), 1 verification failure,
//! 2 parse/validation errors (a JSON error object is printed on stdout).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use eala_core::gauge::canonical_gauge;
use eala_core::report::{ReportParams, VerificationReport};
use eala_core::roots::{self, RootKind};
use eala_core::unitform::{matrix_json, rows_json};
use eala_core::{eala, equiv, serre, Error, Gauge, UnitForm};

#[derive(Parser)]
#[command(name = "eala", version, about = "Unit forms, root systems, and their Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, radical data, and canonical gauge of a form.
    Analyze { form: PathBuf },
    /// Enumerate the roots of the form up to a height bound.
    Roots {
        form: PathBuf,
        #[arg(long, default_value_t = 3)]
        height: usize,
    },
    /// Evaluate a bracket expression in E(q).
    Bracket { form: PathBuf, expr: String },
    /// Run verification suites; exit 0 iff every check passes.
    Verify {
        form: PathBuf,
        /// Comma-separated subset of
        /// ears,jacobi,form,nilpotent,ideal,irreducible,serre or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, default_value_t = 3)]
        height: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-len", default_value_t = 5)]
        max_len: usize,
    },
    /// Decide equivalence of two forms by their invariants.
    Equiv { form1: PathBuf, form2: PathBuf },
}

const SUITES: [&str; 7] = [
    "ears",
    "jacobi",
    "form",
    "nilpotent",
    "ideal",
    "irreducible",
    "serre",
];

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            let doc = json!({ "error": err.code(), "detail": err.to_string() });
            println!("{}", to_pretty(&doc));
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze { form } => {
            let q = load_form(&form)?;
            let inv = equiv::invariants(&q)?;
            let rd = q.radical_data();
            let gauge = canonical_gauge(&q);
            let mut doc = match inv.to_json() {
                Value::Object(map) => map,
                _ => unreachable!(),
            };
            doc.insert("radical_basis".into(), rows_json(&rd.basis));
            doc.insert("complement".into(), rows_json(&rd.complement));
            doc.insert("quotient_gram".into(), matrix_json(&rd.quotient_gram));
            doc.insert("gauge".into(), gauge.to_json());
            emit(&Value::Object(doc));
            eprintln!(
                "{}: corank {}, Dynkin type {}",
                form.display(),
                inv.corank,
                inv.dynkin
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Roots { form, height } => {
            let q = validated_form(&form)?;
            let roots = roots::enumerate_roots(&q, height);
            let count = |kind: RootKind| roots.iter().filter(|r| r.kind == kind).count();
            let doc = json!({
                "height": height,
                "roots": roots.iter().map(|r| json!({
                    "vec": r.vec,
                    "kind": r.kind.as_str(),
                })).collect::<Vec<_>>(),
                "counts": {
                    "zero": count(RootKind::Zero),
                    "isotropic": count(RootKind::Isotropic),
                    "nonisotropic": count(RootKind::NonIsotropic),
                },
            });
            emit(&doc);
            eprintln!(
                "{} roots within height {height} ({} isotropic, {} non-isotropic)",
                roots.len(),
                count(RootKind::Isotropic),
                count(RootKind::NonIsotropic)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Bracket { form, expr } => {
            let q = validated_form(&form)?;
            let gauge = canonical_gauge(&q);
            let word = serre::parse_word(&expr)?;
            let value = serre::eval_word(&q, &gauge, &word)?;
            emit(&value.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            form,
            suite,
            height,
            samples,
            seed,
            max_len,
        } => {
            let q = validated_form(&form)?;
            let gauge = canonical_gauge(&q);
            let selection = resolve_suites(&suite)?;
            let params = ReportParams {
                height,
                samples,
                seed,
                max_len,
            };
            let mut envelope = VerificationReport::new(
                &suite_label(&selection),
                q.to_json(),
                gauge.to_json(),
                params,
            );
            for name in &selection {
                let sub = run_suite(name, &q, &gauge, height, samples, seed, max_len)?;
                envelope.absorb(sub);
            }
            let ok = envelope.all_passed();
            let failed = envelope.failures().count();
            emit(&envelope.to_json());
            eprintln!(
                "{}: {} checks, {} failed",
                form.display(),
                envelope.results.len(),
                failed
            );
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Equiv { form1, form2 } => {
            let q1 = validated_form(&form1)?;
            let q2 = validated_form(&form2)?;
            let equivalent = equiv::are_equivalent(&q1, &q2)?;
            let doc = json!({
                "equivalent": equivalent,
                "invariants": [
                    equiv::invariants(&q1)?.to_json(),
                    equiv::invariants(&q2)?.to_json(),
                ],
            });
            emit(&doc);
            eprintln!(
                "{} and {} are {}",
                form1.display(),
                form2.display(),
                if equivalent { "equivalent" } else { "not equivalent" }
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_suite(
    name: &str,
    q: &UnitForm,
    gauge: &Gauge,
    height: usize,
    samples: usize,
    seed: u64,
    max_len: usize,
) -> Result<VerificationReport, Error> {
    Ok(match name {
        "ears" => roots::check_ears(q, height),
        "jacobi" => eala::check_jacobi(q, gauge, height, samples, seed),
        "form" => eala::check_form(q, gauge, height),
        "nilpotent" => {
            // One sub-report per non-isotropic direction of height <= 2.
            let mut merged = VerificationReport::new(
                "nilpotent",
                q.to_json(),
                gauge.to_json(),
                ReportParams::new(height),
            );
            for alpha in roots::enumerate_roots(q, height.min(2)) {
                if alpha.kind != RootKind::NonIsotropic {
                    continue;
                }
                merged.absorb(eala::check_ad_nilpotent(q, gauge, &alpha, height)?);
            }
            merged
        }
        "ideal" => eala::check_ideal_witness(q, gauge, height),
        "irreducible" => eala::check_irreducible(q, gauge, height),
        "serre" => serre::check_serre(q, gauge, max_len),
        other => {
            return Err(Error::InvalidDocument(format!(
                "unknown suite `{other}`; expected one of {SUITES:?} or `all`"
            )))
        }
    })
}

fn resolve_suites(requested: &[String]) -> Result<Vec<String>, Error> {
    if requested.is_empty() {
        return Err(Error::InvalidDocument("suite selection is empty".into()));
    }
    for s in requested {
        if s != "all" && !SUITES.contains(&s.as_str()) {
            return Err(Error::InvalidDocument(format!(
                "unknown suite `{s}`; expected one of {SUITES:?} or `all`"
            )));
        }
    }
    if requested.iter().any(|s| s == "all") {
        return Ok(SUITES.iter().map(|s| s.to_string()).collect());
    }
    // Deterministic order regardless of how the user listed them.
    Ok(SUITES
        .iter()
        .filter(|canonical| requested.iter().any(|s| s == *canonical))
        .map(|s| s.to_string())
        .collect())
}

fn suite_label(selection: &[String]) -> String {
    if selection.len() == SUITES.len() {
        "all".to_string()
    } else {
        selection.join(",")
    }
}

fn load_form(path: &Path) -> Result<UnitForm, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidDocument(format!("{}: {e}", path.display())))?;
    UnitForm::from_json_str(&text)
}

/// Load a form and check the preconditions shared by every subcommand
/// that works with R(q) or E(q).
fn validated_form(path: &Path) -> Result<UnitForm, Error> {
    let q = load_form(path)?;
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    if !q.is_nonnegative() {
        return Err(Error::NotNonNegative);
    }
    Ok(q)
}

fn to_pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON serialization cannot fail")
}

fn emit(value: &Value) {
    println!("{}", to_pretty(value));
}
