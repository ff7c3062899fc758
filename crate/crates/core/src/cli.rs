//! Batch front end: one JSON document in, one JSON report out.
//!
//! Exit statuses: `0` success, `2` parse or usage failure, `3` invariant
//! violation in the document, `4` solver precondition failure.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Error;
use crate::fixture::{self, rational_to_json, scheme_to_json, time_to_json, Document, LoadError};
use crate::measure::{outer_measure, AtomSet};
use crate::section::{self, SectionResult, Strategy};
use crate::souslin::{self, theta};
use crate::time::SetKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sectionkit", version, about = "Exact sections of stochastic sets on finite filtered spaces")]
pub struct Args {
    /// Seed for randomized probing in `validate`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Predictable,
    Optional,
    Measurable,
    Accessible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Debut,
    Souslin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SouslinOp {
    Eval,
    Union,
    Intersect,
    Monotonize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every invariant of the document and list violations.
    Validate {
        input: Option<String>,
    },
    /// Construct a section of a named set.
    Section {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        set: String,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Debut)]
        strategy: StrategyArg,
        input: Option<String>,
    },
    /// Split a named stopping time into accessible and inaccessible parts.
    ClassifyTime {
        #[arg(long)]
        time: String,
        input: Option<String>,
    },
    /// Souslin-scheme operations on named schemes.
    Souslin {
        #[arg(value_enum)]
        op: SouslinOp,
        #[arg(long = "scheme", required = true, num_args = 1..)]
        schemes: Vec<String>,
        /// Document path. `--scheme` takes every following word, so give
        /// the path before it (or use standard input).
        input: Option<String>,
    },
    /// Print the pairing value for positive integers K and M.
    Theta { k: u64, m: u64 },
}

/// What a run produced: the text for standard output and standard error and
/// the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn report(value: &Value, format: Format, code: i32) -> Self {
        let mut stdout = match format {
            Format::Json => serde_json::to_string(value),
            Format::Pretty => serde_json::to_string_pretty(value),
        }
        .expect("reports serialize");
        stdout.push('\n');
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn failure(message: impl Into<String>, code: i32) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

/// Runs the command line `argv` (program name first). Documents come from
/// the positional path, or from `stdin` when none is given or it is `-`.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            return Outcome {
                stdout: if code == EXIT_OK { e.to_string() } else { String::new() },
                stderr: if code == EXIT_OK { String::new() } else { e.to_string() },
                code,
            };
        }
    };
    let format = args.format;
    match &args.command {
        Command::Theta { k, m } => {
            if *k == 0 || *m == 0 {
                return Outcome::failure("theta: K and M must be positive", EXIT_PARSE);
            }
            Outcome::report(&json!(theta(*k, *m)), format, EXIT_OK)
        }
        Command::Validate { input } => {
            let text = match read_input(input.as_deref(), stdin) {
                Ok(t) => t,
                Err(o) => return o,
            };
            validate(&text, args.seed, format)
        }
        Command::Section {
            kind,
            set,
            epsilon,
            strategy,
            input,
        } => with_document(input.as_deref(), stdin, |doc| {
            run_section(doc, *kind, set, epsilon, *strategy, args.seed, format)
        }),
        Command::ClassifyTime { time, input } => {
            with_document(input.as_deref(), stdin, |doc| run_classify(doc, time, format))
        }
        Command::Souslin { op, schemes, input } => {
            with_document(input.as_deref(), stdin, |doc| run_souslin(doc, *op, schemes, format))
        }
    }
}

fn read_input(path: Option<&str>, stdin: &mut dyn Read) -> Result<String, Outcome> {
    let mut text = String::new();
    match path {
        None | Some("-") => stdin
            .read_to_string(&mut text)
            .map(|_| text)
            .map_err(|e| Outcome::failure(format!("cannot read standard input: {e}"), EXIT_PARSE)),
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Outcome::failure(format!("cannot read {p}: {e}"), EXIT_PARSE)),
    }
}

fn with_document(
    path: Option<&str>,
    stdin: &mut dyn Read,
    body: impl FnOnce(&Document) -> Outcome,
) -> Outcome {
    let text = match read_input(path, stdin) {
        Ok(t) => t,
        Err(o) => return o,
    };
    match fixture::load(&text) {
        Ok(doc) => body(&doc),
        Err(LoadError::Parse(msg)) => Outcome::failure(format!("parse error: {msg}"), EXIT_PARSE),
        Err(LoadError::Invalid(violations)) => {
            let lines: Vec<String> = violations
                .iter()
                .map(|v| format!("invariant violation at {}: {}", v.path, v.message))
                .collect();
            Outcome::failure(lines.join("\n"), EXIT_INVALID)
        }
    }
}

fn precondition(err: Error) -> Outcome {
    Outcome::failure(format!("precondition failed: {err}"), EXIT_PRECONDITION)
}

fn validate(text: &str, seed: u64, format: Format) -> Outcome {
    let raw = match fixture::parse(text) {
        Ok(r) => r,
        Err(LoadError::Parse(msg)) => return Outcome::failure(format!("parse error: {msg}"), EXIT_PARSE),
        Err(LoadError::Invalid(_)) => unreachable!("parse only reports parse errors"),
    };
    match fixture::resolve(&raw) {
        Err(LoadError::Parse(msg)) => Outcome::failure(format!("parse error: {msg}"), EXIT_PARSE),
        Err(LoadError::Invalid(violations)) => {
            let report = json!({
                "command": "validate",
                "seed": seed,
                "valid": false,
                "violations": violations,
            });
            Outcome::report(&report, format, EXIT_INVALID)
        }
        Ok(doc) => {
            let (summary, violations) = summarize(&doc, seed);
            let code = if violations.is_empty() { EXIT_OK } else { EXIT_INVALID };
            let report = json!({
                "command": "validate",
                "seed": seed,
                "valid": violations.is_empty(),
                "violations": violations,
                "summary": summary,
            });
            Outcome::report(&report, format, code)
        }
    }
}

/// Per-object predicates plus seeded outer-measure probes over each
/// σ-algebra of the filtration.
fn summarize(doc: &Document, seed: u64) -> (Value, Vec<fixture::Violation>) {
    let x = &doc.space;
    let mut violations = Vec::new();
    let sets: serde_json::Map<String, Value> = doc
        .sets
        .iter()
        .map(|(name, s)| {
            (
                name.clone(),
                json!({
                    "predictable": x.is_set_of_kind(s, SetKind::Predictable),
                    "optional": x.is_set_of_kind(s, SetKind::Optional),
                }),
            )
        })
        .collect();
    let times: serde_json::Map<String, Value> = doc
        .times
        .iter()
        .map(|(name, t)| {
            (
                name.clone(),
                json!({
                    "stopping": x.is_stopping_time(t),
                    "predictable": x.is_predictable_time(t),
                }),
            )
        })
        .collect();
    let schemes: serde_json::Map<String, Value> = doc
        .schemes
        .iter()
        .map(|(name, s)| {
            let m = s.check_monotone();
            (
                name.clone(),
                json!({
                    "vertical": m.vertical,
                    "horizontal": m.horizontal,
                    "paving_closed": s.paving().is_closed(),
                }),
            )
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = x.atoms();
    let space = x.space();
    let mut probes = 0usize;
    let random_subset = |rng: &mut ChaCha8Rng| -> AtomSet {
        crate::measure::atom_set(n, (0..n).filter(|_| rng.gen_bool(0.5)))
    };
    for (k, sigma) in x.filtration().iter().enumerate() {
        for _ in 0..32 {
            let a = random_subset(&mut rng);
            let b = random_subset(&mut rng);
            let mut union = a.clone();
            union.union_with(&b);
            let (pa, pb, pu) = (
                outer_measure(&a, sigma, space),
                outer_measure(&b, sigma, space),
                outer_measure(&union, sigma, space),
            );
            let cover = sigma.measurable_cover(&a);
            probes += 1;
            if pu > &pa + &pb || pu < pa.clone().max(pb) || !a.is_subset(&cover) || !sigma.is_measurable(&cover) {
                violations.push(fixture::Violation {
                    path: format!("filtration[{k}]"),
                    message: "outer measure probe failed".into(),
                });
            }
        }
    }
    let summary = json!({
        "atoms": n,
        "times": x.times(),
        "sets": sets,
        "times_checked": times,
        "schemes": schemes,
        "probes": probes,
    });
    (summary, violations)
}

fn section_report(doc: &Document, name: &str, r: &SectionResult, seed: u64) -> Value {
    let space = doc.space.space();
    let split = r.trace.split.as_ref().map(|s| {
        json!({
            "predictable_budget": rational_to_json(&s.predictable_budget),
            "predictable_deficit": rational_to_json(&s.predictable_deficit),
            "thin_budget": rational_to_json(&s.thin_budget),
            "thin_residual": rational_to_json(&s.thin_residual),
            "thin_used": s.thin_used,
            "thin_total": s.thin_total,
        })
    });
    json!({
        "command": "section",
        "kind": r.kind.name(),
        "set": name,
        "strategy": r.strategy.name(),
        "epsilon": rational_to_json(&r.epsilon),
        "deficit": rational_to_json(&r.deficit),
        "time": time_to_json(space, &r.time),
        "trace": {
            "m_star": r.trace.chosen_prefix,
            "envelope_measures": r.trace.envelope_measures.iter().map(rational_to_json).collect::<Vec<_>>(),
            "split": split,
        },
        "oracle_deficit": rational_to_json(&r.trace.oracle_deficit),
        "seed": seed,
    })
}

fn run_section(
    doc: &Document,
    kind: KindArg,
    name: &str,
    epsilon: &str,
    strategy: StrategyArg,
    seed: u64,
    format: Format,
) -> Outcome {
    let epsilon = match crate::rational::parse(epsilon) {
        Ok(e) => e,
        Err(e) => return Outcome::failure(format!("--epsilon: {e}"), EXIT_PARSE),
    };
    let Some(set) = doc.sets.get(name) else {
        return Outcome::failure(format!("no set named `{name}`"), EXIT_PARSE);
    };
    let strategy = match strategy {
        StrategyArg::Debut => Strategy::Debut,
        StrategyArg::Souslin => Strategy::Souslin,
    };
    let x = &doc.space;
    let result = match kind {
        KindArg::Predictable => section::predictable_section(set, x, &epsilon, strategy),
        KindArg::Optional => section::optional_section(set, x, &epsilon, strategy),
        KindArg::Accessible => section::accessible_section(set, x, &epsilon, strategy),
        KindArg::Measurable => {
            if num_traits::Signed::is_negative(&epsilon) {
                Err(Error::NegativeEpsilon(epsilon.clone()))
            } else {
                section::measurable_section(set, x.space(), x.grid(), strategy)
            }
        }
    };
    match result {
        Ok(r) => Outcome::report(&section_report(doc, name, &r, seed), format, EXIT_OK),
        Err(e) => precondition(e),
    }
}

fn run_classify(doc: &Document, name: &str, format: Format) -> Outcome {
    let Some(time) = doc.times.get(name) else {
        return Outcome::failure(format!("no time named `{name}`"), EXIT_PARSE);
    };
    let space = doc.space.space();
    match doc.space.classify_time(time) {
        Ok(c) => {
            let report = json!({
                "command": "classify-time",
                "time": name,
                "accessible_cover": c.accessible_cover.iter().map(|t| time_to_json(space, t)).collect::<Vec<_>>(),
                "accessible": time_to_json(space, &c.accessible),
                "totally_inaccessible": time_to_json(space, &c.inaccessible),
                "inaccessible_mass": rational_to_json(&c.inaccessible_mass),
            });
            Outcome::report(&report, format, EXIT_OK)
        }
        Err(e) => precondition(e),
    }
}

fn run_souslin(doc: &Document, op: SouslinOp, names: &[String], format: Format) -> Outcome {
    let mut picked = Vec::with_capacity(names.len());
    for name in names {
        match doc.schemes.get(name) {
            Some(s) => picked.push(s.clone()),
            None => return Outcome::failure(format!("no scheme named `{name}`"), EXIT_PARSE),
        }
    }
    let (op_name, result) = match op {
        SouslinOp::Eval => {
            let evals: Vec<Value> = picked
                .iter()
                .zip(names)
                .map(|(s, name)| {
                    let m = s.check_monotone();
                    json!({
                        "scheme": name,
                        "eval": s.paving().format_set(&s.eval()),
                        "vertical": m.vertical,
                        "horizontal": m.horizontal,
                    })
                })
                .collect();
            let report = json!({"command": "souslin", "op": "eval", "results": evals});
            return Outcome::report(&report, format, EXIT_OK);
        }
        SouslinOp::Union => ("union", souslin::merge_union(&picked)),
        SouslinOp::Intersect => ("intersect", souslin::merge_intersection(&picked)),
        SouslinOp::Monotonize => {
            if picked.len() != 1 {
                return Outcome::failure("monotonize takes exactly one --scheme", EXIT_PARSE);
            }
            ("monotonize", souslin::monotonize(&picked[0]))
        }
    };
    match result {
        Ok(s) => {
            let m = s.check_monotone();
            let report = json!({
                "command": "souslin",
                "op": op_name,
                "schemes": names,
                "eval": s.paving().format_set(&s.eval()),
                "vertical": m.vertical,
                "horizontal": m.horizontal,
                "scheme": scheme_to_json(&s),
            });
            Outcome::report(&report, format, EXIT_OK)
        }
        Err(e) => precondition(e),
    }
}
