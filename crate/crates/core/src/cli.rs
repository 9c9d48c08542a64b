//! Command-line frontend.
//!
//! Every command prints one JSON document on stdout and exits with
//! 0 (positive answer), 1 (negative answer), 2 (invalid input) or
//! 3 (budget exceeded). Nothing is written to stdout on 2 or 3.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::bounds::{self, CountConstraint, Variant};
use crate::error::Error;
use crate::gf::{ArithOp, Field, FieldSpec};
use crate::mpoly::{MPoly, MPolyJson};
use crate::reduction::{self, SubsetSumInstance, SubsetSumJson};
use crate::rscode::{CodeJson, EvalSet, NamedSet, Oracle, RSCode};
use crate::surface::{self, InstanceJson, MonicTail, PointConstraint, SearchMode};
use crate::upoly::UPoly;

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Result of one invocation: exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "deephole", version, about = "Deep holes of Reed-Solomon codes over finite fields")]
struct Cli {
    /// Worker threads for exhaustive scans; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field description or one arithmetic operation.
    Field(FieldCmd),
    /// Univariate polynomial arithmetic.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Distance to a Reed-Solomon code and deep-hole census.
    #[command(subcommand)]
    Deephole(DeepholeCmd),
    /// Leading-coefficient hypersurface of a monic tail.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Point-count bounds and exact counts.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Subset sum reduced to a deep-hole question.
    #[command(subcommand)]
    Reduce(ReduceCmd),
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Field order q = p^m.
    #[arg(long = "field", value_name = "Q")]
    order: Option<u64>,
    /// Monic irreducible modulus, ascending coefficients, e.g. 1,1,0,1.
    #[arg(long, value_delimiter = ',', requires = "order")]
    modulus: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
struct FieldCmd {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum)]
    op: Option<OpArg>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OpArg {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// Normalize and print a polynomial.
    Show {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        a: String,
    },
    Add(BinaryPoly),
    Sub(BinaryPoly),
    Mul(BinaryPoly),
    /// Quotient and remainder of a by b.
    Divmod(BinaryPoly),
    Eval {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        at: u64,
    },
    /// Roots of a inside a set (default: the whole field).
    Roots {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        a: String,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u64>>,
    },
    /// Lagrange interpolation through x:y pairs.
    Interpolate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
        points: Vec<(u64, u64)>,
    },
}

#[derive(Args, Debug)]
struct BinaryPoly {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// star, full, or a comma-separated list of field elements.
    #[arg(long = "eval", value_parser = parse_eval_set)]
    eval_set: Option<EvalSet>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum DeepholeCmd {
    /// Distance of one word to the code.
    Check {
        #[command(flatten)]
        code: CodeArgs,
        /// Generator of the word, as text or a JSON coefficient list.
        #[arg(long, conflicts_with = "word")]
        poly: Option<String>,
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
        /// {"field", "eval_set", "k", "word" | "poly"}
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Count deep holes over every word.
    Census {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 10)]
        sample: usize,
        /// Also write one row per word to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// {"field", "eval_set", "k"}
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OracleArg {
    /// Whichever exhaustive scan is smaller.
    Auto,
    SubsetInterpolation,
    CodewordEnumeration,
}

#[derive(Args, Debug)]
struct TailArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Tail coefficients f_0..f_{d-1}; zeros when omitted.
    #[arg(long, value_delimiter = ',')]
    coeffs: Option<Vec<u64>>,
    /// {"k", "d", "coeffs", "field"}
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum SurfaceCmd {
    /// Leading-coefficient hypersurface L and its top form.
    #[command(name = "compute-l")]
    ComputeL(TailArgs),
    /// Specialized top form against sum_{i+j<=d} x1^i x2^j.
    Chi {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Top form of random tails against the pure tail.
    TopForm {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Zero of L with distinct coordinates, and the codeword it certifies.
    FindPoint {
        #[command(flatten)]
        tail: TailArgs,
        #[arg(long, value_enum, default_value_t = ConstraintArg::NonzeroDistinct)]
        constraint: ConstraintArg,
        /// Random search with this many tries instead of exhaustive search.
        #[arg(long)]
        tries: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Singular points of sum_{i+j<=d} x^i y^j over F_{p^e}.
    SmoothScan {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConstraintArg {
    NonzeroDistinct,
    DistinctOnly,
}

#[derive(Subcommand, Debug)]
enum BoundsCmd {
    /// Exact margin of the point-count argument for (q, k, d).
    Margin {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
        variant: VariantArg,
    },
    /// Lower bound for an absolutely irreducible hypersurface.
    Lower {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Upper bound on common zeros of two coprime polynomials.
    Upper {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        degree: u64,
    },
    /// Exact number of zeros by evaluation at every point.
    Count {
        #[command(flatten)]
        field: FieldArgs,
        /// Count sum_{i+j<=D} x^i y^j.
        #[arg(long, value_name = "D", conflicts_with = "json")]
        chi: Option<usize>,
        /// Multivariate polynomial {"field", "vars", "terms"}.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CountArg::None)]
        constraint: CountArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    Published,
    Corrected,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CountArg {
    None,
    NonzeroDistinct,
}

#[derive(Subcommand, Debug)]
enum ReduceCmd {
    /// Map a subset-sum instance to a deep-hole question and check both.
    SubsetSum {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u64>>,
        #[arg(long)]
        target: Option<u64>,
        #[arg(long)]
        size: Option<usize>,
        /// {"field", "set", "target", "size"}
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

enum Failure {
    Invalid(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

type Outcome = Result<(Value, bool), Failure>;

fn invalid<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Invalid(msg.into()))
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (x, y) = s.split_once(':').ok_or_else(|| format!("expected x:y, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(x)?, num(y)?))
}

fn parse_eval_set(s: &str) -> Result<EvalSet, String> {
    match s {
        "star" => Ok(EvalSet::Named(NamedSet::Star)),
        "full" => Ok(EvalSet::Named(NamedSet::Full)),
        _ => s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}")))
            .collect::<Result<_, _>>()
            .map(EvalSet::Explicit),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    }
    .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Invalid(format!("missing --{flag} (or --json)")))
}

impl FieldArgs {
    fn build(&self) -> Result<Field, Failure> {
        let q = required(self.order, "field")?;
        match &self.modulus {
            None => Ok(Field::with_order(q)?),
            Some(g) => {
                let (p, m) = crate::gf::prime_power(q)
                    .ok_or_else(|| Failure::Invalid(format!("{q} is not a prime power")))?;
                Ok(Field::new(p, m, Some(g))?)
            }
        }
    }
}

fn upoly_value(p: &UPoly) -> Value {
    json!({ "coeffs": p.coeffs(), "text": p.to_string() })
}

fn mpoly_value(p: &MPoly) -> Value {
    let mut v = serde_json::to_value(p.to_json()).expect("serializable");
    v["text"] = json!(p.to_string());
    v
}

/// Text such as "x^2 + 1", or a JSON coefficient list.
fn parse_poly(field: &Field, value: &Value) -> Result<UPoly, Failure> {
    match value {
        Value::String(s) => Ok(UPoly::parse(field, s)?),
        Value::Array(_) => Ok(UPoly::parse(field, &value.to_string())?),
        _ => invalid("polynomial must be a string or a coefficient list"),
    }
}

pub fn run_command<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult { code: EXIT_INVALID, stdout: String::new(), stderr: text }
            } else {
                CommandResult { code: EXIT_POSITIVE, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli) {
        Ok((payload, positive)) => CommandResult {
            code: if positive { EXIT_POSITIVE } else { EXIT_NEGATIVE },
            stdout: serde_json::to_string_pretty(&payload).expect("serializable") + "\n",
            stderr: String::new(),
        },
        Err(Failure::Invalid(msg)) => {
            CommandResult { code: EXIT_INVALID, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
        Err(Failure::Budget(msg)) => {
            CommandResult { code: EXIT_BUDGET, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let jobs = cli.jobs.max(1);
    match cli.command {
        Command::Field(cmd) => field_cmd(cmd),
        Command::Poly(cmd) => poly_cmd(cmd),
        Command::Deephole(cmd) => deephole_cmd(cmd, jobs),
        Command::Surface(cmd) => surface_cmd(cmd, jobs),
        Command::Bounds(cmd) => bounds_cmd(cmd, jobs),
        Command::Reduce(cmd) => reduce_cmd(cmd, jobs),
    }
}

fn field_cmd(cmd: FieldCmd) -> Outcome {
    let field = cmd.field.build()?;
    let Some(op) = cmd.op else {
        return Ok((
            json!({
                "field": field.spec(),
                "order": field.order(),
                "characteristic": field.characteristic(),
                "degree": field.degree(),
            }),
            true,
        ));
    };
    let (op, binary) = match op {
        OpArg::Add => (ArithOp::Add, true),
        OpArg::Sub => (ArithOp::Sub, true),
        OpArg::Mul => (ArithOp::Mul, true),
        OpArg::Div => (ArithOp::Div, true),
        OpArg::Inv => (ArithOp::Inv, false),
        OpArg::Neg => (ArithOp::Neg, false),
    };
    let a = field.element(required(cmd.a, "a")?)?;
    let b = match (binary, cmd.b) {
        (true, Some(b)) => Some(field.element(b)?),
        (true, None) => return invalid("missing --b"),
        (false, Some(_)) => return invalid("unary operation takes no --b"),
        (false, None) => None,
    };
    let r = crate::gf::FieldElement::apply(op, &a, b.as_ref())?;
    Ok((
        json!({
            "field": field.spec(),
            "op": format!("{op:?}").to_lowercase(),
            "a": a.value(),
            "b": b.map(|b| b.value()),
            "result": r.value(),
        }),
        true,
    ))
}

fn poly_cmd(cmd: PolyCmd) -> Outcome {
    let binary = |args: &BinaryPoly| -> Result<(Field, UPoly, UPoly), Failure> {
        let field = args.field.build()?;
        let a = UPoly::parse(&field, &args.a)?;
        let b = UPoly::parse(&field, &args.b)?;
        Ok((field, a, b))
    };
    let payload = match cmd {
        PolyCmd::Show { field, a } => {
            let field = field.build()?;
            let a = UPoly::parse(&field, &a)?;
            json!({ "field": field.spec(), "poly": upoly_value(&a), "degree": a.degree() })
        }
        PolyCmd::Add(args) => {
            let (field, a, b) = binary(&args)?;
            json!({ "field": field.spec(), "result": upoly_value(&a.add(&b)?) })
        }
        PolyCmd::Sub(args) => {
            let (field, a, b) = binary(&args)?;
            json!({ "field": field.spec(), "result": upoly_value(&a.sub(&b)?) })
        }
        PolyCmd::Mul(args) => {
            let (field, a, b) = binary(&args)?;
            json!({ "field": field.spec(), "result": upoly_value(&a.mul(&b)?) })
        }
        PolyCmd::Divmod(args) => {
            let (field, a, b) = binary(&args)?;
            let (q, r) = a.divmod(&b)?;
            json!({ "field": field.spec(), "quotient": upoly_value(&q), "remainder": upoly_value(&r) })
        }
        PolyCmd::Eval { field, a, at } => {
            let field = field.build()?;
            let a = UPoly::parse(&field, &a)?;
            field.check(at)?;
            json!({ "field": field.spec(), "poly": upoly_value(&a), "at": at, "value": a.eval(at) })
        }
        PolyCmd::Roots { field, a, set } => {
            let field = field.build()?;
            let a = UPoly::parse(&field, &a)?;
            let set = set.unwrap_or_else(|| field.elements(false).collect());
            for &x in &set {
                field.check(x)?;
            }
            json!({ "field": field.spec(), "poly": upoly_value(&a), "roots": a.roots_in_set(&set)? })
        }
        PolyCmd::Interpolate { field, points } => {
            let field = field.build()?;
            let p = UPoly::interpolate(&field, &points)?;
            json!({ "field": field.spec(), "points": points, "result": upoly_value(&p) })
        }
    };
    Ok((payload, true))
}

#[derive(Deserialize)]
struct CheckJson {
    field: FieldSpec,
    eval_set: EvalSet,
    k: usize,
    #[serde(default)]
    word: Option<Vec<u64>>,
    #[serde(default)]
    poly: Option<Value>,
}

impl CodeArgs {
    fn build(&self) -> Result<RSCode, Failure> {
        let field = self.field.build()?;
        let eval = required(self.eval_set.clone(), "eval")?;
        Ok(RSCode::new(&field, &eval, required(self.k, "k")?)?)
    }
}

fn choose_oracle(code: &RSCode, arg: OracleArg) -> Oracle {
    match arg {
        OracleArg::SubsetInterpolation => Oracle::SubsetInterpolation,
        OracleArg::CodewordEnumeration => Oracle::CodewordEnumeration,
        OracleArg::Auto => {
            let enumeration = crate::comb::checked_pow(code.field().order(), code.k() as u64);
            let subsets = crate::comb::binomial(code.n() as u64, code.k() as u64 + 1);
            match (enumeration, subsets) {
                (Some(e), Some(s)) if s < e => Oracle::SubsetInterpolation,
                (None, Some(_)) => Oracle::SubsetInterpolation,
                _ => Oracle::CodewordEnumeration,
            }
        }
    }
}

fn deephole_cmd(cmd: DeepholeCmd, jobs: usize) -> Outcome {
    match cmd {
        DeepholeCmd::Check { code, poly, word, oracle, json } => {
            let (code, poly, word) = match json {
                Some(path) => {
                    let input: CheckJson = read_json(&path)?;
                    let code = RSCode::from_json(&CodeJson {
                        field: input.field,
                        eval_set: input.eval_set,
                        k: input.k,
                    })?;
                    (code, input.poly, input.word)
                }
                None => (code.build()?, poly.map(Value::String), word),
            };
            let (generator, w) = match (poly, word) {
                (Some(p), None) => {
                    let g = parse_poly(code.field(), &p)?;
                    let w = code.word_from_poly(&g)?;
                    (Some(g), w)
                }
                (None, Some(values)) => (None, code.word(values)?),
                _ => return invalid("give exactly one of --poly and --word"),
            };
            let oracle = choose_oracle(&code, oracle);
            let v = code.distance_to_code_jobs(&w, oracle, jobs)?;
            Ok((
                json!({
                    "code": code.to_json(),
                    "flavor": code.flavor(),
                    "generator": generator.as_ref().map(upoly_value),
                    "word": w,
                    "oracle": oracle,
                    "deep_hole": v.is_deep_hole,
                    "distance": v.distance,
                    "max_agreement": v.max_agreement,
                    "covering_radius": code.covering_radius(),
                    "witness": upoly_value(&v.witness),
                }),
                v.is_deep_hole,
            ))
        }
        DeepholeCmd::Census { code, sample, csv, json } => {
            let code = match json {
                Some(path) => RSCode::from_json(&read_json::<CodeJson>(&path)?)?,
                None => code.build()?,
            };
            let census = code.enumerate_deep_holes(sample, jobs)?;
            if let Some(path) = &csv {
                write_census_csv(&code, path, jobs)?;
            }
            Ok((
                json!({
                    "code": code.to_json(),
                    "flavor": code.flavor(),
                    "count": census.count,
                    "total": census.total,
                    "sample": census.sample,
                    "csv": csv,
                }),
                true,
            ))
        }
    }
}

fn write_census_csv(code: &RSCode, path: &Path, jobs: usize) -> Result<(), Failure> {
    let rows = code.census_rows(jobs)?;
    let io = |e: csv::Error| Failure::Invalid(format!("{}: {e}", path.display()));
    let mut out = csv::Writer::from_path(path).map_err(io)?;
    for row in rows {
        out.serialize(row).map_err(io)?;
    }
    out.flush().map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

impl TailArgs {
    fn build(&self) -> Result<(MonicTail, Field), Failure> {
        if let Some(path) = &self.json {
            return Ok(read_json::<InstanceJson>(path)?.parse()?);
        }
        let field = self.field.build()?;
        let k = required(self.k, "k")?;
        let d = required(self.d, "d")?;
        let low = self.coeffs.clone().unwrap_or_else(|| vec![0; d]);
        Ok((MonicTail::new(k, d, low)?, field))
    }
}

fn instance_value(tail: &MonicTail, field: &Field) -> Value {
    json!(InstanceJson { k: tail.k(), d: tail.d(), coeffs: tail.low().to_vec(), field: field.spec().clone() })
}

fn surface_cmd(cmd: SurfaceCmd, jobs: usize) -> Outcome {
    match cmd {
        SurfaceCmd::ComputeL(args) => {
            let (tail, field) = args.build()?;
            let inst = surface::compute_l(&tail, &field)?;
            Ok((
                json!({
                    "instance": instance_value(&tail, &field),
                    "l": mpoly_value(&inst.l),
                    "top_form": mpoly_value(&inst.top_form),
                }),
                true,
            ))
        }
        SurfaceCmd::Chi { field, d, k } => {
            let field = field.build()?;
            let computed = surface::chi_from_pipeline(d, k, &field)?;
            let expected = surface::chi_specialized(d, &field)?;
            let equal = computed == expected;
            Ok((
                json!({
                    "field": field.spec(),
                    "d": d,
                    "k": k,
                    "computed": mpoly_value(&computed),
                    "expected": mpoly_value(&expected),
                    "equal": equal,
                }),
                equal,
            ))
        }
        SurfaceCmd::TopForm { field, k, d, trials, seed } => {
            let field = field.build()?;
            let report = surface::verify_top_form_independence(k, d, trials, &field, seed)?;
            let ok = report.all_equal;
            let mut payload = json!(report);
            payload["field"] = json!(field.spec());
            Ok((payload, ok))
        }
        SurfaceCmd::FindPoint { tail, constraint, tries, seed } => {
            let (tail, field) = tail.build()?;
            let inst = surface::compute_l(&tail, &field)?;
            let constraint = match constraint {
                ConstraintArg::NonzeroDistinct => PointConstraint::NonzeroDistinct,
                ConstraintArg::DistinctOnly => PointConstraint::DistinctOnly,
            };
            let mode = match tries {
                Some(tries) => SearchMode::Random { tries, seed },
                None => SearchMode::Exhaustive,
            };
            let point = inst.find_distinct_point(constraint, mode, jobs)?;
            let witness = match &point {
                Some(point) => {
                    let eval = match constraint {
                        PointConstraint::NonzeroDistinct => EvalSet::star(),
                        PointConstraint::DistinctOnly => EvalSet::full(),
                    };
                    let code = RSCode::new(&field, &eval, tail.k())?;
                    let w = surface::witness_from_point(&tail, point, &code, &UPoly::zero(&field))?;
                    json!({
                        "code": code.to_json(),
                        "generator": upoly_value(&w.generator),
                        "distance": w.distance,
                    })
                }
                None => Value::Null,
            };
            Ok((
                json!({
                    "instance": instance_value(&tail, &field),
                    "constraint": constraint,
                    "mode": match mode {
                        SearchMode::Exhaustive => json!({ "exhaustive": true }),
                        SearchMode::Random { tries, seed } => json!({ "tries": tries, "seed": seed }),
                    },
                    "point": point,
                    "witness": witness,
                }),
                point.is_some(),
            ))
        }
        SurfaceCmd::SmoothScan { d, p, e } => {
            let report = surface::curve_smoothness_scan(d, p, e, jobs)?;
            let smooth = report.smooth;
            Ok((json!(report), smooth))
        }
    }
}

fn bounds_cmd(cmd: BoundsCmd, jobs: usize) -> Outcome {
    match cmd {
        BoundsCmd::Margin { q, k, d, variant } => {
            let variant = match variant {
                VariantArg::Published => Variant::Published,
                VariantArg::Corrected => Variant::Corrected,
            };
            let report = bounds::theorem_margin(q, k, d, variant)?;
            Ok((json!(report), report.applies))
        }
        BoundsCmd::Lower { q, n, d } => {
            let lower = bounds::cafure_matera_lower(q, n, d)?;
            Ok((json!({ "q": q, "n": n, "d": d, "lower": lower }), true))
        }
        BoundsCmd::Upper { q, n, degree } => {
            let upper = bounds::schmidt_upper(q, n, degree)?;
            Ok((json!({ "q": q, "n": n, "degree": degree, "upper": upper }), true))
        }
        BoundsCmd::Count { field, chi, json, constraint } => {
            let poly = match (chi, json) {
                (Some(d), None) => surface::chi_specialized(d, &field.build()?)?,
                (None, Some(path)) => MPoly::from_json(&read_json::<MPolyJson>(&path)?)?,
                _ => return invalid("give exactly one of --chi and --json"),
            };
            let constraint = match constraint {
                CountArg::None => CountConstraint::None,
                CountArg::NonzeroDistinct => CountConstraint::NonzeroDistinct,
            };
            let count = bounds::exact_point_count(&poly, constraint, jobs)?;
            Ok((
                json!({
                    "poly": mpoly_value(&poly),
                    "constraint": constraint,
                    "count": count,
                }),
                true,
            ))
        }
    }
}

fn reduce_cmd(cmd: ReduceCmd, jobs: usize) -> Outcome {
    let ReduceCmd::SubsetSum { field, set, target, size, json } = cmd;
    let inst = match json {
        Some(path) => SubsetSumInstance::from_json(&read_json::<SubsetSumJson>(&path)?)?,
        None => SubsetSumInstance::new(
            &field.build()?,
            required(set, "set")?,
            required(target, "target")?,
            required(size, "size")?,
        )?,
    };
    let reduced = reduction::subset_sum_to_deephole(&inst)?;
    let report = reduction::verify_equivalence_jobs(&inst, jobs)?;
    let holds = report.holds;
    let mut payload = json!(report);
    payload["code"] = json!(reduced.code.to_json());
    payload["generator"] = upoly_value(&reduced.generator);
    payload["word"] = json!(reduced.word);
    Ok((payload, holds))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &str) -> CommandResult {
        run_command(std::iter::once("deephole").chain(args.split_whitespace()))
    }

    fn payload(r: &CommandResult) -> Value {
        serde_json::from_str(&r.stdout).unwrap()
    }

    #[test]
    fn margin_example() {
        let r = run("bounds margin --q 401 --k 2 --d 1 --variant published");
        assert_eq!(r.code, 0);
        let v = payload(&r);
        assert_eq!(v["margin"], 4812);
        assert_eq!(v["applies"], true);
    }

    #[test]
    fn check_example() {
        let r = run_command([
            "deephole", "deephole", "check", "--field", "5", "--eval", "star", "--k", "2", "--poly", "x^2",
        ]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        let v = payload(&r);
        assert_eq!(v["deep_hole"], true);
        assert_eq!(v["distance"], 2);
    }

    #[test]
    fn find_point_example() {
        let r = run("surface find-point --field 5 --k 2 --d 1 --coeffs 0");
        assert_eq!(r.code, 1);
        assert_eq!(payload(&r)["point"], Value::Null);
    }

    #[test]
    fn failures_leave_stdout_empty() {
        for (args, code) in [
            ("bounds margin --q 401 --k 2 --d 1 --bogus", 2),
            ("field --field 6", 2),
            ("deephole census --field 11 --eval star --k 3", 3),
        ] {
            let r = run(args);
            assert_eq!(r.code, code, "{args}: {}", r.stderr);
            assert!(r.stdout.is_empty());
            assert!(!r.stderr.is_empty());
        }
    }
}
