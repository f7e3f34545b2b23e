use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nelson_core::algebra::{parse_algebra, validate, write_algebra, CheckKind, FiniteAlgebra, ValidationReport};
use nelson_core::bridge::{double, star_quasieq, to_s, to_s_prime};
use nelson_core::calculus::{check_derivation, parse_script, Verdict};
use nelson_core::catalog;
use nelson_core::formula::parse;
use nelson_core::search::{enumerate_with, Constraint, Mode, SearchClass, SearchError, SearchSpec};
use nelson_core::semantics::{find_countermodel, satisfies_quasiequation, Equation, QuasiEquation, Valuation};
use nelson_core::suite;

/// Proof checking, finite-model validation and model search for Nelson's logic S.
#[derive(Parser)]
#[command(name = "nelson", version)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// `∧ ∨ ⇒ ¬ 0 1`
    S,
    /// `∧ ∨ * ⇒ 0 1`
    Sprime,
}

#[derive(Subcommand)]
enum Command {
    /// Check an algebra against a class of structures.
    Validate {
        #[arg(long)]
        class: CheckKind,
        /// Algebra file, or a catalog key.
        algebra: String,
    },
    /// Find a valuation under which a formula is not 1.
    Countermodel { algebra: String, formula: String },
    /// Decide an equation or quasiequation in an algebra.
    Satisfies {
        algebra: String,
        #[arg(long, conflicts_with = "quasieq", required_unless_present = "quasieq")]
        eq: Option<String>,
        #[arg(long)]
        quasieq: Option<String>,
    },
    /// Check a proof script.
    CheckProof { script: PathBuf },
    /// Double a CIRL.
    Double {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Move an S-algebra between its two signatures.
    Translate {
        #[arg(long, value_enum)]
        to: Target,
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relativize a quasiequation to the upper copy of a doubling.
    Star {
        #[arg(long)]
        quasieq: String,
    },
    /// Enumerate small algebras up to isomorphism.
    Search {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        min_size: Option<usize>,
        #[arg(long)]
        class: SearchClass,
        /// Quasiequation every model must satisfy.
        #[arg(long)]
        require: Vec<String>,
        /// Quasiequation every model must fail.
        #[arg(long)]
        forbid: Vec<String>,
        /// Class check every model must pass.
        #[arg(long)]
        require_class: Vec<CheckKind>,
        /// Class check every model must fail.
        #[arg(long)]
        forbid_class: Vec<CheckKind>,
        #[arg(long, default_value = "all")]
        mode: Mode,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Node limit.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Bundled algebras.
    Catalog {
        /// List the keys (the default).
        #[arg(long, conflicts_with = "get")]
        list: bool,
        #[arg(long)]
        get: Option<String>,
        #[arg(long, requires = "get")]
        out: Option<PathBuf>,
    },
    /// Run every reproduction check and print a pass/fail table.
    PaperSuite,
}

/// Exit 1: the input was fine but a check failed or a formula was refuted.
struct Refuted;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Refuted)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(spec: &str) -> Result<FiniteAlgebra> {
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        return parse_algebra(&text).with_context(|| format!("parsing {spec}"));
    }
    catalog::get(spec).map_err(|_| anyhow!("{spec}: no such file or catalog key"))
}

fn emit(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    match format {
        Format::Text => stdout(&format!("{}\n", text())),
        Format::Json => stdout(&format!("{}\n", serde_json::to_string_pretty(&value()).expect("json values serialize"))),
    }
}

/// A closed pipe (`nelson ... | head`) ends the process quietly.
fn stdout(text: &str) {
    if let Err(e) = io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

fn write_or_print(a: &FiniteAlgebra, out: Option<&Path>) -> Result<()> {
    let text = write_algebra(a);
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            stdout(&text);
            Ok(())
        }
    }
}

fn verdict(ok: bool) -> Result<(), Refuted> {
    if ok {
        Ok(())
    } else {
        Err(Refuted)
    }
}

fn report_json(r: &ValidationReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn valuation_json(a: &FiniteAlgebra, v: &Valuation) -> Value {
    v.named(a).into_iter().map(|(k, e)| (k, Value::String(e))).collect::<serde_json::Map<_, _>>().into()
}

fn run(cli: &Cli) -> Result<Result<(), Refuted>> {
    let fmt = cli.format;
    match &cli.command {
        Command::Validate { class, algebra } => {
            let a = load(algebra)?;
            let r = validate(&a, *class);
            emit(fmt, || r.to_string(), || report_json(&r));
            Ok(verdict(r.passed()))
        }
        Command::Countermodel { algebra, formula } => {
            let a = load(algebra)?;
            let f = parse(formula)?;
            let cm = find_countermodel(&a, &f)?;
            emit(
                fmt,
                || match &cm {
                    None => format!("valid: {f} is 1 under every valuation in {}", a.name()),
                    Some(c) => format!("refuted: {} gives {}", c.valuation.display(&a), a.element_name(c.value)),
                },
                || match &cm {
                    None => json!({ "formula": f.to_string(), "valid": true }),
                    Some(c) => json!({
                        "formula": f.to_string(),
                        "valid": false,
                        "valuation": valuation_json(&a, &c.valuation),
                        "value": a.element_name(c.value),
                    }),
                },
            );
            Ok(verdict(cm.is_none()))
        }
        Command::Satisfies { algebra, eq, quasieq } => {
            let a = load(algebra)?;
            let q = match (eq, quasieq) {
                (Some(e), _) => QuasiEquation::equation(Equation::parse(e)?),
                (None, Some(q)) => QuasiEquation::parse(q)?,
                (None, None) => bail!("give --eq or --quasieq"),
            };
            let s = satisfies_quasiequation(&a, &q)?;
            emit(
                fmt,
                || match &s.witness {
                    None => format!("holds: {q}"),
                    Some(w) => format!("fails: {q} at {}", w.display(&a)),
                },
                || {
                    json!({
                        "quasiequation": q.to_string(),
                        "holds": s.holds,
                        "witness": s.witness.as_ref().map(|w| valuation_json(&a, w)),
                    })
                },
            );
            Ok(verdict(s.holds))
        }
        Command::CheckProof { script } => {
            let text = fs::read_to_string(script).with_context(|| format!("reading {}", script.display()))?;
            let d = parse_script(&text)?;
            let v = check_derivation(&d);
            emit(
                fmt,
                || v.to_string(),
                || match &v {
                    Verdict::Accepted { conclusion, .. } => {
                        json!({ "accepted": true, "conclusion": conclusion.to_string(), "steps": d.steps.len() })
                    }
                    Verdict::Rejected { step, reason } => {
                        json!({ "accepted": false, "step": step, "reason": reason, "message": reason.to_string() })
                    }
                },
            );
            Ok(verdict(v.is_accepted()))
        }
        Command::Double { input, out } => {
            let d = double(&load(input)?)?;
            write_or_print(&d, out.as_deref())?;
            Ok(Ok(()))
        }
        Command::Translate { to, algebra, out } => {
            let a = load(algebra)?;
            let t = match to {
                Target::S => to_s(&a)?,
                Target::Sprime => to_s_prime(&a)?,
            };
            write_or_print(&t, out.as_deref())?;
            Ok(Ok(()))
        }
        Command::Star { quasieq } => {
            let s = star_quasieq(&QuasiEquation::parse(quasieq)?)?;
            emit(
                fmt,
                || match &s.equation {
                    Some(e) => format!("{}\n{e}", s.quasi),
                    None => s.quasi.to_string(),
                },
                || json!({ "quasiequation": s.quasi.to_string(), "equation": s.equation.as_ref().map(|e| e.to_string()) }),
            );
            Ok(Ok(()))
        }
        Command::Search { size, min_size, class, require, forbid, require_class, forbid_class, mode, out_dir, budget } => {
            let mut spec = SearchSpec::new(*class, *size).mode(*mode);
            spec.min_size = min_size.unwrap_or(1);
            spec.budget = *budget;
            for r in require {
                spec = spec.with(Constraint::Holds(QuasiEquation::parse(r)?));
            }
            for f in forbid {
                spec = spec.with(Constraint::Fails(QuasiEquation::parse(f)?));
            }
            for k in require_class {
                spec = spec.with(Constraint::Check(*k, true));
            }
            for k in forbid_class {
                spec = spec.with(Constraint::Check(*k, false));
            }
            if let Some(dir) = out_dir {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let mut written = Vec::new();
            let mut io_error = None;
            let outcome = enumerate_with(&spec, &mut |a| {
                if let Some(dir) = out_dir {
                    let path = dir.join(format!("{}.alg", a.name()));
                    if let Err(e) = fs::write(&path, write_algebra(a)) {
                        io_error = Some(e);
                        return false;
                    }
                    written.push(path);
                }
                true
            });
            if let Some(e) = io_error {
                return Err(e).context("writing models");
            }
            let outcome = match outcome {
                Ok(o) => o,
                Err(e @ SearchError::BudgetExceeded { .. }) => {
                    emit(fmt, || e.to_string(), || json!({ "error": "budget_exceeded", "message": e.to_string() }));
                    return Ok(Err(Refuted));
                }
                Err(e) => return Err(e.into()),
            };
            emit(
                fmt,
                || {
                    let mut lines: Vec<String> =
                        outcome.count_by_size.iter().map(|(n, c)| format!("size {n}: {c}")).collect();
                    lines.push(format!("total {} ({} nodes)", outcome.count, outcome.nodes));
                    if out_dir.is_none() && *mode != Mode::Count {
                        for m in &outcome.models {
                            lines.push(write_algebra(m));
                        }
                    }
                    lines.extend(written.iter().map(|p| format!("wrote {}", p.display())));
                    lines.join("\n")
                },
                || {
                    json!({
                        "class": class.name(),
                        "count": outcome.count,
                        "count_by_size": outcome.count_by_size,
                        "nodes": outcome.nodes,
                        "models": outcome.models.iter().map(|m| m.name().to_string()).collect::<Vec<_>>(),
                        "written": written.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
                    })
                },
            );
            Ok(verdict(*mode == Mode::Count || outcome.count > 0))
        }
        Command::Catalog { get, out, .. } => {
            if let Some(key) = get {
                let text = catalog::source_text(key)?;
                match out {
                    Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
                    None => stdout(&text),
                }
                return Ok(Ok(()));
            }
            let entries = catalog::entries();
            emit(
                fmt,
                || entries.iter().map(|e| format!("{:<7} {:>2}  {}", e.key, e.algebra.size(), e.description)).collect::<Vec<_>>().join("\n"),
                || {
                    entries
                        .iter()
                        .map(|e| json!({ "key": e.key, "size": e.algebra.size(), "description": e.description }))
                        .collect()
                },
            );
            Ok(Ok(()))
        }
        Command::PaperSuite => {
            let self_test = catalog::self_test();
            let outcomes = suite::run_all();
            let catalog_ok = self_test.iter().all(|l| l.ok());
            emit(
                fmt,
                || {
                    let mut lines = Vec::new();
                    for l in &self_test {
                        let mark = if l.ok() { "PASS" } else { "FAIL" };
                        let expect = if l.expected { "is" } else { "is not" };
                        lines.push(format!("{mark} catalog  {} {expect} {}", l.key, l.class));
                    }
                    for o in &outcomes {
                        let mark = if o.passed { "PASS" } else { "FAIL" };
                        lines.push(format!("{mark} C{:<2} {:<50} {:>9.2?}  {}", o.id, o.title, o.elapsed, o.detail));
                    }
                    lines.join("\n")
                },
                || json!({ "catalog": self_test, "criteria": outcomes }),
            );
            Ok(verdict(catalog_ok && outcomes.iter().all(|o| o.passed)))
        }
    }
}
