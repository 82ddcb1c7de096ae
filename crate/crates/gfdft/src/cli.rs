//! Argument parsing and subcommands.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 unsupported
//! configuration.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gfdft_core::conjugacy::{enumerate_classes, find_special_class};
use gfdft_core::dft::{build_plan, execute};
use gfdft_core::evaluator::build_evaluator;
use gfdft_core::{Algorithm, ConjugacyClass, Error, FieldCtx, OpCounter};
use serde::Serialize;

use crate::input::{format_vector, parse_m_list, parse_modulus, parse_vector, random_vector};
use crate::schema::{factor_chain, ClassJson, FieldJson, OpReport, PlanSummary, TransformJson};
use crate::{tables, verify};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "gfdft", version, about = "DFTs of length 2^m - 1 over GF(2^m) with exact operation counts")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Extension degree, or a comma-separated list where the command accepts several.
    #[arg(long, global = true, value_name = "M")]
    pub m: Option<String>,
    /// Field modulus: hex (0x13), binary (0b10011), decimal (19) or x^4+x+1.
    #[arg(long, global = true, value_parser = parse_modulus)]
    pub modulus: Option<u32>,
    /// naive, gb, cyclotomic or novel [default: novel for even m, gb for odd m].
    #[arg(long, global = true, value_parser = parse_algo)]
    pub algo: Option<Algorithm>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for `--random` and for the vectors drawn by `verify` and `tables`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Field parameters and divisors.
    Info,
    /// Conjugacy classes and the special class.
    Classes,
    /// Plan summary and operation counts.
    Plan {
        #[command(subcommand)]
        action: Option<PlanAction>,
        /// Schedule binary-stage additions with greedy CSE.
        #[arg(long)]
        cse: bool,
    },
    /// Transform one vector.
    Transform {
        /// Inline vector, or the keywords `delta0` / `zero`.
        #[arg(long, conflicts_with_all = ["file", "random"])]
        input: Option<String>,
        /// File with one element per line.
        #[arg(long, conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Seeded random vector (see `--seed`).
        #[arg(long)]
        random: bool,
        #[arg(long)]
        cse: bool,
    },
    /// Run the invariant suite.
    Verify {
        /// Also compare against the bundled GF(16) reference matrices.
        #[arg(long)]
        golden: bool,
    },
    /// Regenerate the complexity tables.
    Tables,
}

#[derive(Subcommand, Debug)]
pub enum PlanAction {
    /// Factor chain of one class's evaluator as JSON.
    Dump {
        #[arg(long)]
        class: u32,
    },
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|_| format!("unknown algorithm '{s}' (expected naive, gb, cyclotomic or novel)"))
}

/// A failed command: message plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::OddExtensionDegree { .. }
            | Error::UnsupportedDegree { .. }
            | Error::DegreeOutOfRange { .. } => EXIT_UNSUPPORTED,
            Error::ModulusDegree { .. }
            | Error::NonPrimitiveModulus { .. }
            | Error::ParseElement(_)
            | Error::ParsePolynomial(_)
            | Error::LengthMismatch { .. } => EXIT_INPUT,
            _ => EXIT_VERIFY,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        // A closed pipe (e.g. `| head`) is not an error.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure { code: EXIT_OK, message: String::new() };
        }
        Failure { code: EXIT_VERIFY, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

fn ms(g: &Global, default: &str) -> Result<Vec<u32>, Failure> {
    parse_m_list(g.m.as_deref().unwrap_or(default)).map_err(Failure::input)
}

fn single_m(g: &Global) -> Result<u32, Failure> {
    match ms(g, "4")?.as_slice() {
        [m] => Ok(*m),
        _ => Err(Failure::input("this command takes a single --m")),
    }
}

fn field(g: &Global, m: u32) -> Result<FieldCtx, Failure> {
    Ok(FieldCtx::new(m, g.modulus)?)
}

/// The requested algorithm, or the default for the parity of `m`.
pub fn algorithm_for(g: &Global, m: u32) -> Algorithm {
    g.algo.unwrap_or(if m.is_multiple_of(2) { Algorithm::Novel } else { Algorithm::GoertzelBlahut })
}

fn json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), Failure> {
    let s =
        serde_json::to_string_pretty(v).map_err(|e| Failure { code: EXIT_VERIFY, message: e.to_string() })?;
    writeln!(out, "{s}")?;
    Ok(())
}

#[derive(Serialize)]
struct InfoJson {
    field: FieldJson,
    n: u32,
    modulus: String,
    alpha: String,
    divisors: Vec<u32>,
    classes: usize,
}

fn cmd_info(g: &Global, out: &mut dyn Write) -> CmdResult {
    let mut infos = Vec::new();
    for m in ms(g, "4")? {
        let ctx = field(g, m)?;
        let modulus = gfdft_core::BinPoly(ctx.modulus() as u64).to_string();
        infos.push(InfoJson {
            field: FieldJson::of(&ctx),
            n: ctx.n(),
            modulus,
            alpha: ctx.format_element(ctx.alpha()),
            divisors: (1..=m).filter(|d| m % d == 0).collect(),
            classes: enumerate_classes(&ctx).len(),
        });
    }
    if g.format == Format::Json {
        json(out, &infos)?;
    } else {
        for i in &infos {
            writeln!(
                out,
                "GF(2^{}): modulus {} ({:#x}), n = {}, alpha = {}, divisors {:?}, {} classes",
                i.field.m, i.modulus, i.field.modulus_bits, i.n, i.alpha, i.divisors, i.classes
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ClassesJson {
    field: FieldJson,
    classes: Vec<ClassJson>,
    special: Option<ClassJson>,
}

fn cmd_classes(g: &Global, out: &mut dyn Write) -> CmdResult {
    let mut all = Vec::new();
    for m in ms(g, "4")? {
        let ctx = field(g, m)?;
        let classes = enumerate_classes(&ctx);
        let special = if m % 2 == 0 { Some(ClassJson::from(&find_special_class(&ctx)?)) } else { None };
        all.push(ClassesJson {
            field: FieldJson::of(&ctx),
            classes: classes.iter().map(ClassJson::from).collect(),
            special,
        });
    }
    if g.format == Format::Json {
        json(out, &all)?;
        return Ok(EXIT_OK);
    }
    for c in &all {
        writeln!(
            out,
            "GF(2^{}) modulus {:#x}: {} classes",
            c.field.m,
            c.field.modulus_bits,
            c.classes.len()
        )?;
        for k in &c.classes {
            let members: Vec<String> = k.members.iter().map(|e| format!("a^{e}")).collect();
            writeln!(out, "  c={:<4} |C|={:<2} {{{}}}", k.c, k.cardinality, members.join(", "))?;
        }
        match &c.special {
            Some(s) => writeln!(out, "  special class: c={} (generator a^{})", s.c, s.c)?,
            None => writeln!(out, "  special class: none (odd m)")?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_plan(g: &Global, action: &Option<PlanAction>, cse: bool, out: &mut dyn Write) -> CmdResult {
    if let Some(PlanAction::Dump { class }) = action {
        let ctx = field(g, single_m(g)?)?;
        let k = ConjugacyClass::generated_by(&ctx, *class % ctx.n());
        if k.canonical() != *class {
            return Err(Failure::input(format!(
                "{class} is not a class representative (its class is c = {})",
                k.canonical()
            )));
        }
        let ev = build_evaluator(&ctx, &k)?;
        json(out, &factor_chain(&ctx, &ev))?;
        return Ok(EXIT_OK);
    }
    let mut summaries = Vec::new();
    for m in ms(g, "4")? {
        let ctx = field(g, m)?;
        let mut plan = build_plan(&ctx, algorithm_for(g, m))?;
        if cse {
            plan.optimize_additions();
        }
        summaries.push(PlanSummary::of(&ctx, &plan));
    }
    if g.format == Format::Json {
        json(out, &summaries)?;
        return Ok(EXIT_OK);
    }
    for s in &summaries {
        writeln!(out, "{} plan, m = {}, n = {}", s.algorithm, s.field.m, s.n)?;
        let classes: Vec<String> = s.classes.iter().map(|k| format!("{}({})", k.c, k.cardinality)).collect();
        writeln!(out, "  field stage classes: {}", classes.join(" "))?;
        for e in &s.evaluators {
            writeln!(
                out,
                "  evaluator degree {} generator {}: {} mults, {} adds",
                e.degree, e.generator, e.mults, e.field_adds
            )?;
        }
        writeln!(out, "  {}", s.ops)?;
        match s.binary_adds_cse {
            Some(c) => writeln!(out, "  binary-stage adds: {} naive, {} with CSE", s.binary_adds_naive, c)?,
            None => writeln!(out, "  binary-stage adds: {} naive", s.binary_adds_naive)?,
        }
        if g.verbose > 0 {
            writeln!(out, "  output order: {:?}", s.output_order)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_transform(
    g: &Global,
    input: &Option<String>,
    file: &Option<PathBuf>,
    random: bool,
    cse: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let m = single_m(g)?;
    let ctx = field(g, m)?;
    let algo = algorithm_for(g, m);
    let f = if random {
        random_vector(&ctx, g.seed)
    } else if let Some(p) = file {
        let text = std::fs::read_to_string(p)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display())))?;
        parse_vector(&ctx, &text).map_err(Failure::input)?
    } else if let Some(s) = input {
        parse_vector(&ctx, s).map_err(Failure::input)?
    } else {
        return Err(Failure::input("no input: pass --input, --file or --random"));
    };
    let mut plan = build_plan(&ctx, algo)?;
    if cse {
        plan.optimize_additions();
    }
    let mut counter = OpCounter::new();
    let big_f = execute(&ctx, &plan, &f, &mut counter)?;
    let ops = OpReport::from(&counter);
    if g.format == Format::Json {
        json(
            out,
            &TransformJson {
                algorithm: algo.name().to_string(),
                field: FieldJson::of(&ctx),
                output: big_f.iter().map(|&a| ctx.format_element(a)).collect(),
                ops,
            },
        )?;
    } else {
        if g.verbose > 0 {
            writeln!(out, "input: {}", format_vector(&ctx, &f))?;
        }
        writeln!(out, "{}", format_vector(&ctx, &big_f))?;
        writeln!(out, "{} {ops}", algo.name())?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckJson {
    m: u32,
    check: String,
    status: &'static str,
    detail: Option<String>,
}

fn cmd_verify(g: &Global, golden: bool, out: &mut dyn Write) -> CmdResult {
    let cfg = verify::VerifyConfig { modulus: g.modulus, seed: g.seed, golden, ..Default::default() };
    let mut results = Vec::new();
    for m in ms(g, "2,3,4,6,8")? {
        // An invalid field is an input error, not a failed check.
        field(g, m)?;
        results.extend(verify::verify_m(m, &cfg));
    }
    let failed = results.iter().any(verify::CheckResult::failed);
    let rows: Vec<CheckJson> = results
        .iter()
        .map(|r| {
            let (status, detail) = match &r.status {
                verify::Status::Pass => ("pass", None),
                verify::Status::Fail(d) => ("fail", Some(d.clone())),
                verify::Status::Skipped(d) => ("skip", Some(d.clone())),
            };
            CheckJson { m: r.m, check: r.name.clone(), status, detail }
        })
        .collect();
    if g.format == Format::Json {
        json(out, &rows)?;
    } else {
        for r in &rows {
            match &r.detail {
                Some(d) if r.status == "fail" || g.verbose > 0 => {
                    writeln!(out, "{:<4} m={:<2} {}: {d}", r.status.to_uppercase(), r.m, r.check)?
                }
                _ => writeln!(out, "{:<4} m={:<2} {}", r.status.to_uppercase(), r.m, r.check)?,
            }
        }
        let n_fail = rows.iter().filter(|r| r.status == "fail").count();
        writeln!(out, "{} checks, {} failed", rows.len(), n_fail)?;
    }
    Ok(if failed { EXIT_VERIFY } else { EXIT_OK })
}

fn cmd_tables(g: &Global, out: &mut dyn Write) -> CmdResult {
    let t = tables::all(g.seed)?;
    if g.format == Format::Json {
        json(out, &t)?;
    } else {
        write!(out, "{}", tables::render(&t))?;
    }
    Ok(EXIT_OK)
}

/// Runs a parsed command, writing results to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let g = &cli.global;
    let r = match &cli.command {
        Command::Info => cmd_info(g, out),
        Command::Classes => cmd_classes(g, out),
        Command::Plan { action, cse } => cmd_plan(g, action, *cse, out),
        Command::Transform { input, file, random, cse } => cmd_transform(g, input, file, *random, *cse, out),
        Command::Verify { golden } => cmd_verify(g, *golden, out),
        Command::Tables => cmd_tables(g, out),
    };
    match r {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}
