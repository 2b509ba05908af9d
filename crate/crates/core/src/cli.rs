//! Command-line front end shared by the `ecalg` binary and the tests.
//!
//! Exit codes: 0 positive verdict or success, 1 negative verdict, 2 parse or
//! usage error (and other recoverable errors), 3 invariant violation.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{StructureMatrix, TransformMatrix};
use crate::classify::{
    classify_field, cross_type_experiment, enumerate_ecs, q_prime_family, type1_classification,
    DEFAULT_BUDGET,
};
use crate::ec::{is_ec_definitional, is_ec_general, is_ec_straight, EcVerdict};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::input::{parse_algebra, AlgebraOver, ParsedAlgebra};
use crate::iso::{are_isomorphic_bruteforce, type_one_iso_decide, IsoWitness};
use crate::report::{OutputFormat, Render, Table};
use crate::suite::{criteria, SuiteOptions, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "ECALG_BUDGET";

#[derive(Debug, Clone, Parser)]
#[command(
    name = "ecalg",
    version,
    about = "Endo-commutative 2-dimensional algebras: tests, isomorphisms and classification"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub verb: Verb,

    /// Output format: json, csv or md.
    #[arg(long, global = true, default_value = "json")]
    pub format: OutputFormat,

    /// Largest p for exhaustive p⁶ sweeps [default: $ECALG_BUDGET or 13].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,

    /// Worker threads for parallel sweeps [default: all cores].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verb {
    /// Decide endo-commutativity of an algebra given as JSON (path, `-`, or inline).
    EcCheck {
        input: String,
        #[arg(long, value_enum, default_value_t = EcMethodArg::General)]
        method: EcMethodArg,
    },
    /// Decide whether two algebras are isomorphic and print a witness.
    Iso { source: String, target: String },
    /// Census plus type I classification over GF(p).
    Classify {
        #[arg(long)]
        field: FieldDescriptor,
    },
    /// Count endo-commutative straight algebras over GF(p) by type.
    Census {
        #[arg(long)]
        field: FieldDescriptor,
    },
    /// Check that distinct primes are pairwise ≉ in Q*.
    Qprimes {
        #[arg(required = true)]
        primes: Vec<u64>,
    },
    /// Search for isomorphisms between type I and type II/III algebras.
    CrossType {
        #[arg(long)]
        field: FieldDescriptor,
    },
    /// Run every acceptance criterion.
    VerifyPaper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EcMethodArg {
    Definitional,
    General,
    Straight,
}

impl CliConfig {
    pub fn effective_budget(&self) -> Result<u64> {
        if let Some(b) = self.budget {
            return Ok(b);
        }
        match std::env::var(BUDGET_ENV) {
            Ok(v) => match v.trim().parse::<u64>() {
                Ok(b) if b > 0 => Ok(b),
                _ => Err(Error::parse(
                    BUDGET_ENV,
                    format!("expected a positive integer, got {v:?}"),
                )),
            },
            Err(_) => Ok(DEFAULT_BUDGET),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct EcCheckReport {
    field: FieldDescriptor,
    algebra: serde_json::Value,
    verdict: EcVerdict<String>,
}

impl Render for EcCheckReport {
    fn summary(&self) -> Vec<String> {
        vec![format!("endo-commutative: {}", self.verdict.is_ec)]
    }

    fn tables(&self) -> Vec<Table> {
        let mut t = Table::new(
            "",
            &[
                "field",
                "endo-commutative",
                "method",
                "failing equation",
                "counterexample",
            ],
        );
        t.push([
            self.field.to_string(),
            self.verdict.is_ec.to_string(),
            format!("{:?}", self.verdict.method),
            self.verdict
                .failing_equation
                .map(|i| i.to_string())
                .unwrap_or_default(),
            self.verdict
                .counterexample
                .as_ref()
                .map(|(x, y)| format!("x=({}, {}), y=({}, {})", x.alpha, x.beta, y.alpha, y.beta))
                .unwrap_or_default(),
        ]);
        vec![t]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct IsoReport {
    field: FieldDescriptor,
    #[serde(flatten)]
    witness: IsoWitness<String>,
}

impl Render for IsoReport {
    fn summary(&self) -> Vec<String> {
        vec![format!("isomorphic: {}", self.witness.found)]
    }

    fn tables(&self) -> Vec<Table> {
        let mut t = Table::new("", &["field", "isomorphic", "method", "transform"]);
        let x = self.witness.transform.as_ref();
        t.push([
            self.field.to_string(),
            self.witness.found.to_string(),
            format!("{:?}", self.witness.method),
            x.map(|x| format!("[[{}, {}], [{}, {}]]", x.x, x.y, x.z, x.w))
                .unwrap_or_default(),
        ]);
        vec![t]
    }
}

fn stringify_verdict<F: Field>(field: &F, v: EcVerdict<F::Elem>) -> EcVerdict<String> {
    let s = |e: crate::algebra::Element<F::Elem>| {
        crate::algebra::Element::new(field.format(&e.alpha), field.format(&e.beta))
    };
    EcVerdict {
        is_ec: v.is_ec,
        method: v.method,
        failing_equation: v.failing_equation,
        counterexample: v.counterexample.map(|(x, y)| (s(x), s(y))),
    }
}

fn stringify_witness<F: Field>(field: &F, w: IsoWitness<F::Elem>) -> IsoWitness<String> {
    IsoWitness {
        found: w.found,
        method: w.method,
        transform: w.transform.map(|x| {
            TransformMatrix::new(
                field.format(&x.x),
                field.format(&x.y),
                field.format(&x.z),
                field.format(&x.w),
            )
        }),
    }
}

fn read_input(arg: &str) -> Result<(String, String)> {
    if arg.trim_start().starts_with('{') {
        return Ok((arg.to_string(), "<inline>".into()));
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::parse("<stdin>", e.to_string()))?;
        return Ok((s, "<stdin>".into()));
    }
    std::fs::read_to_string(arg)
        .map(|s| (s, arg.to_string()))
        .map_err(|e| Error::parse(arg, format!("cannot read input: {e}")))
}

fn load(arg: &str) -> Result<ParsedAlgebra> {
    let (text, source) = read_input(arg)?;
    parse_algebra(&text, &source)
}

fn ec_verdict<F: Field>(a: &AlgebraOver<F>, method: EcMethodArg) -> Result<EcVerdict<F::Elem>> {
    match method {
        EcMethodArg::General => Ok(is_ec_general(&a.matrix)),
        EcMethodArg::Straight => {
            let s = a.straight.as_ref().ok_or_else(|| {
                Error::parse(
                    "--method",
                    "straight method needs an algebra given by \"s\"",
                )
            })?;
            Ok(is_ec_straight(a.matrix.field(), s))
        }
        EcMethodArg::Definitional => unreachable!("handled per field"),
    }
}

fn ec_check(input: &str, method: EcMethodArg) -> Result<(EcCheckReport, bool)> {
    let algebra = load(input)?;
    let field = algebra.descriptor();
    let verdict = match (&algebra, method) {
        (ParsedAlgebra::Gf(a), EcMethodArg::Definitional) => {
            stringify_verdict(a.matrix.field(), is_ec_definitional(&a.matrix))
        }
        (ParsedAlgebra::Q(_), EcMethodArg::Definitional) => {
            return Err(Error::UnsupportedField(
                "the definitional check enumerates elements and needs GF(p)".into(),
            ))
        }
        (ParsedAlgebra::Gf(a), m) => stringify_verdict(a.matrix.field(), ec_verdict(a, m)?),
        (ParsedAlgebra::Q(a), m) => stringify_verdict(a.matrix.field(), ec_verdict(a, m)?),
    };
    let positive = verdict.is_ec;
    Ok((
        EcCheckReport {
            field,
            algebra: algebra.to_json(),
            verdict,
        },
        positive,
    ))
}

fn iso(source: &str, target: &str) -> Result<(IsoReport, bool)> {
    let (a, b) = (load(source)?, load(target)?);
    if a.descriptor() != b.descriptor() {
        return Err(Error::parse(
            target,
            format!("field mismatch: {} vs {}", a.descriptor(), b.descriptor()),
        ));
    }
    let field = a.descriptor();
    let witness = match (&a, &b) {
        (ParsedAlgebra::Gf(a), ParsedAlgebra::Gf(b)) => stringify_witness(
            a.matrix.field(),
            are_isomorphic_bruteforce(&a.matrix, &b.matrix)?,
        ),
        (ParsedAlgebra::Q(a), ParsedAlgebra::Q(b)) => {
            let q = *a.matrix.field();
            let as_type_one = |m: &StructureMatrix<_>| {
                m.as_straight().filter(|s| {
                    !q.is_zero(&s.p) && [&s.q, &s.a, &s.b, &s.c, &s.d].iter().all(|v| q.is_zero(v))
                })
            };
            match (as_type_one(&a.matrix), as_type_one(&b.matrix)) {
                (Some(s), Some(t)) => stringify_witness(&q, type_one_iso_decide(&q, &s.p, &t.p)?),
                _ => {
                    return Err(Error::UnsupportedField(
                        "over Q isomorphism is decided only between algebras S(p,0,0,0,0,0)".into(),
                    ))
                }
            }
        }
        _ => unreachable!("fields compared above"),
    };
    let found = witness.found;
    Ok((IsoReport { field, witness }, found))
}

fn emit<R: Render>(out: &mut (dyn Write + Send), report: &R, format: OutputFormat) -> Result<()> {
    let text = report.render(format)?;
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Resource(format!("cannot write output: {e}")))
}

fn verify_all(
    config: &CliConfig,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    let opts = SuiteOptions {
        seed: config.seed,
        budget: config.effective_budget()?,
    };
    let mut outcomes = Vec::new();
    for c in criteria() {
        let o = c.run(&opts);
        let _ = writeln!(err, "{}", o.summary_line());
        let stop = o.violation;
        outcomes.push(o);
        if stop {
            break;
        }
    }
    let report = SuiteReport::new(&opts, outcomes);
    emit(out, &report, config.format)?;
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn dispatch(
    config: &CliConfig,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    let fmt = config.format;
    let verdict = |positive: bool| if positive { EXIT_OK } else { EXIT_NEGATIVE };
    match &config.verb {
        Verb::EcCheck { input, method } => {
            let (r, ok) = ec_check(input, *method)?;
            emit(out, &r, fmt)?;
            Ok(verdict(ok))
        }
        Verb::Iso { source, target } => {
            let (r, ok) = iso(source, target)?;
            emit(out, &r, fmt)?;
            Ok(verdict(ok))
        }
        Verb::Classify { field } => {
            let gf = field.as_gf()?;
            let budget = config.effective_budget()?;
            let report = if gf.modulus() <= budget {
                classify_field(&gf, budget)?
            } else {
                let mut r = type1_classification(&gf)?;
                r.observations.push(format!(
                    "census skipped: p exceeds the enumeration budget {budget}"
                ));
                r
            };
            emit(out, &report, fmt)?;
            Ok(EXIT_OK)
        }
        Verb::Census { field } => {
            let census = enumerate_ecs(&field.as_gf()?, config.effective_budget()?)?;
            emit(out, &census, fmt)?;
            Ok(EXIT_OK)
        }
        Verb::Qprimes { primes } => {
            let r = q_prime_family(primes)?;
            emit(out, &r, fmt)?;
            if r.pairwise_distinct {
                Ok(EXIT_OK)
            } else {
                Err(Error::InvariantViolation(format!(
                    "prime collisions {:?}",
                    r.collisions
                )))
            }
        }
        Verb::CrossType { field } => {
            let r = cross_type_experiment(&field.as_gf()?, config.effective_budget()?)?;
            emit(out, &r, fmt)?;
            Ok(EXIT_OK)
        }
        Verb::VerifyPaper => verify_all(config, out, err),
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvariantViolation(_) => EXIT_VIOLATION,
        _ => EXIT_ERROR,
    }
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
pub fn run(config: &CliConfig, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32 {
    let result = match config.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))
            .and_then(|pool| pool.install(|| dispatch(config, out, err))),
        None => dispatch(config, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "ecalg: {e}");
            exit_code_for(&e)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_ERROR
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            }
        }
    }
}
