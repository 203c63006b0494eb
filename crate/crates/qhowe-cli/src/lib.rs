//! Command-line front end: builds images, runs suites and reports.
//!
//! Exit codes: 0 when every requested check passes, 1 on a check failure,
//! 2 on usage errors and on requests the engine rejects.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use qhowe::decomposition::{duality_report, sxs_report, DualityReport, PartitionLabel, ReportOptions};
use qhowe::embeddings::{
    build_b_generators, build_l_q, build_lambda_q, build_rho_q, grid_with_bound, named_images, single_column_images,
    ColumnKind, Dressing, EmbeddingKind, EmbeddingSpec,
};
use qhowe::fock::{FockOperator, Grid};
use qhowe::highestweight::{verify_joint_hwv, DualityContext};
use qhowe::presentations::{
    check_clifford_kernel, check_commutation, check_drinfeld_jimbo, check_o_extension, check_q_serre, check_uqprime,
    CheckReport, CliffordImages, GeneratorImages, Symbol,
};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "qhowe", version, about = "Exact checks for the orthogonal quantum skew Howe duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build generator images and run their relation suites.
    Verify(VerifyArgs),
    /// Check that the U_q(so_2n) images and t commute with every B_j.
    Commute(GridArgs),
    /// Print the joint highest weight vector of a label with its verdict.
    Hwv(HwvArgs),
    /// Decompose the n x m Fock space under both actions.
    Decompose(ReportArgs),
    /// Decompose the spin square S x S (m = 2).
    Sxs(SxsArgs),
    /// Print generator images as sparse (state_in, state_out, scalar) triples.
    Dump(DumpArgs),
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, value_enum, default_value_t = DressingArg::Undressed)]
    dressing: DressingArg,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    max_sites: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = FamilyArg::D)]
    family: FamilyArg,
    /// Comma-separated subset of the suites; all applicable ones by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    checks: Vec<CheckArg>,
    /// Add the identity to one generator image (E_i, F_i, K_i or t) before checking.
    #[arg(long)]
    perturb: Option<String>,
}

#[derive(Debug, Args)]
struct HwvArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Partition label, e.g. "(2,1)"; empty for the trivial label.
    #[arg(long, default_value = "")]
    mu: String,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Specialization q^(1/2) = x0 for rank computations, e.g. 2 or 3/2.
    #[arg(long, default_value = "2")]
    x0: String,
}

#[derive(Debug, Args)]
struct SxsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = DressingArg::Undressed)]
    dressing: DressingArg,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value = "2")]
    x0: String,
}

#[derive(Debug, Args)]
struct DumpArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = EmbeddingArg::LQ)]
    embedding: EmbeddingArg,
    /// Accepted for `dump --images`; images are the only dump target.
    #[arg(long)]
    images: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DressingArg {
    Undressed,
    Dressed,
}

impl From<DressingArg> for Dressing {
    fn from(d: DressingArg) -> Self {
        match d {
            DressingArg::Undressed => Dressing::Undressed,
            DressingArg::Dressed => Dressing::Dressed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "gl")]
    Gl,
    #[value(name = "B")]
    B,
    #[value(name = "D")]
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Clifford,
    Dj,
    Serre,
    T,
    Rho,
    Uqprime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmbeddingArg {
    GlColumn,
    DColumn,
    BColumn,
    LambdaQ,
    #[value(name = "l-q")]
    LQ,
    RhoQ,
    BPrime,
    TGlobal,
    ClassicalPhiD,
    ClassicalL,
}

impl From<EmbeddingArg> for EmbeddingKind {
    fn from(e: EmbeddingArg) -> Self {
        match e {
            EmbeddingArg::GlColumn => EmbeddingKind::GlColumn,
            EmbeddingArg::DColumn => EmbeddingKind::DColumn,
            EmbeddingArg::BColumn => EmbeddingKind::BColumn,
            EmbeddingArg::LambdaQ => EmbeddingKind::LambdaQ,
            EmbeddingArg::LQ => EmbeddingKind::LQ,
            EmbeddingArg::RhoQ => EmbeddingKind::RhoQ,
            EmbeddingArg::BPrime => EmbeddingKind::BPrime,
            EmbeddingArg::TGlobal => EmbeddingKind::TGlobal,
            EmbeddingArg::ClassicalPhiD => EmbeddingKind::ClassicalPhiD,
            EmbeddingArg::ClassicalL => EmbeddingKind::ClassicalL,
        }
    }
}

/// A request the engine rejected; reported on standard error with exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

/// Runs one command line, printing to standard output and standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Like [`run`], writing reports to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Verify(a) => verify(&a, out),
        Command::Commute(a) => commute(&a, out),
        Command::Hwv(a) => hwv(&a, out),
        Command::Decompose(a) => decompose(&a, out),
        Command::Sxs(a) => sxs(&a, out),
        Command::Dump(a) => dump(&a, out),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn grid_of(a: &GridArgs) -> Result<Grid, UsageError> {
    Ok(grid_with_bound(a.n, a.m, a.max_sites)?)
}

fn parse_x0(text: &str) -> Result<BigRational, UsageError> {
    text.trim().parse::<BigRational>().map_err(|_| UsageError(format!("cannot parse x0 = {text:?}")))
}

/// Prints reports as one JSON document or as text blocks.
fn emit_reports(reports: &[CheckReport], json: bool, out: &mut dyn Write) -> Outcome {
    let passed = reports.iter().all(CheckReport::passed);
    if json {
        let doc = json!({ "passed": passed, "reports": reports });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        for r in reports {
            writeln!(out, "{r}")?;
        }
        writeln!(out, "verdict: {}", if passed { "pass" } else { "fail" })?;
    }
    Ok(passed)
}

fn relation_suites(
    images: &GeneratorImages,
    checks: &[CheckArg],
    out: &mut Vec<CheckReport>,
) -> Result<(), UsageError> {
    if checks.contains(&CheckArg::Dj) {
        out.push(check_drinfeld_jimbo(images)?);
    }
    if checks.contains(&CheckArg::Serre) {
        out.push(check_q_serre(images)?);
    }
    Ok(())
}

fn parse_symbol(text: &str) -> Result<Symbol, UsageError> {
    let bad = || UsageError(format!("cannot parse generator {text:?}; expected E_i, F_i, K_i or t"));
    if text == "t" {
        return Ok(Symbol::T);
    }
    let (head, idx) = text.split_once('_').ok_or_else(bad)?;
    let i: usize = idx.parse().map_err(|_| bad())?;
    match head {
        "E" if i > 0 => Ok(Symbol::E(i)),
        "F" if i > 0 => Ok(Symbol::F(i)),
        "K" if i > 0 => Ok(Symbol::K(i)),
        _ => Err(bad()),
    }
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let g = grid_of(&a.grid)?;
    let d = a.grid.dressing.into();
    let all = [CheckArg::Clifford, CheckArg::Dj, CheckArg::Serre, CheckArg::T, CheckArg::Rho, CheckArg::Uqprime];
    let explicit = !a.checks.is_empty();
    let checks: &[CheckArg] = if explicit { &a.checks } else { &all };
    let mut reports = Vec::new();
    if checks.contains(&CheckArg::Clifford) {
        reports.push(check_clifford_kernel(&CliffordImages::new(&g)));
    }
    let images = match (a.family, g.m()) {
        (FamilyArg::Gl, 1) => single_column_images(ColumnKind::Gl, g.n(), d)?.materialize(&g)?,
        (FamilyArg::B, 1) => single_column_images(ColumnKind::B, g.n(), d)?.materialize(&g)?,
        (FamilyArg::D, 1) => single_column_images(ColumnKind::D, g.n(), d)?.materialize(&g)?,
        (FamilyArg::Gl, _) => build_lambda_q(&g, d)?,
        (FamilyArg::D, _) => build_l_q(&g, d)?,
        (FamilyArg::B, m) => return Err(UsageError(format!("type B images act on a single column, got m = {m}"))),
    };
    let images = match &a.perturb {
        Some(text) => {
            let s = parse_symbol(text)?;
            let present = images.symbols().iter().any(|(t, _)| *t == s);
            if !present {
                return Err(UsageError(format!("no generator {s} in these images")));
            }
            images.perturbed(s)
        }
        None => images,
    };
    relation_suites(&images, checks, &mut reports)?;
    let joint = a.family == FamilyArg::D && g.m() >= 2;
    let refuse = |what: &str| UsageError(format!("check {what} needs --family D and m >= 2"));
    if checks.contains(&CheckArg::T) {
        if joint {
            reports.push(check_o_extension(&images)?);
        } else if explicit {
            return Err(refuse("t"));
        }
    }
    if checks.contains(&CheckArg::Rho) {
        if joint {
            relation_suites(&build_rho_q(&g, d)?, &[CheckArg::Dj, CheckArg::Serre], &mut reports)?;
        } else if explicit {
            return Err(refuse("rho"));
        }
    }
    if checks.contains(&CheckArg::Uqprime) {
        if joint {
            reports.push(check_uqprime(&g, &build_b_generators(&g, d)?));
        } else if explicit {
            return Err(refuse("uqprime"));
        }
    }
    emit_reports(&reports, a.grid.json, out)
}

fn commute(a: &GridArgs, out: &mut dyn Write) -> Outcome {
    let g = grid_of(a)?;
    let d: Dressing = a.dressing.into();
    let lq = build_l_q(&g, d)?;
    let left: Vec<(String, FockOperator)> =
        lq.symbols().into_iter().map(|(s, op)| (s.to_string(), op.clone())).collect();
    let right = named_images(&EmbeddingSpec { kind: EmbeddingKind::BPrime, grid: g, dressing: d })?;
    if right.is_empty() {
        return Err(UsageError("no coideal generators: m must be at least 2".into()));
    }
    emit_reports(&[check_commutation(&g, &left, &right)], a.json, out)
}

fn hwv(a: &HwvArgs, out: &mut dyn Write) -> Outcome {
    let g = grid_of(&a.grid)?;
    let mu = PartitionLabel::parse(&a.mu)?;
    let ctx = DualityContext::new(&g, a.grid.dressing.into())?;
    let outcomes = verify_joint_hwv(&ctx, &mu)?;
    let passed = outcomes.iter().all(|o| o.passed());
    if a.grid.json {
        let docs: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                let terms: Vec<Value> = o.vector.format(&g).into_iter().map(|(s, c)| json!([s, c])).collect();
                json!({ "outcome": o, "xi": terms })
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "passed": passed, "vectors": docs }))?)?;
    } else {
        for o in &outcomes {
            let filler = o.filler.map_or_else(String::new, |f| format!(" filler {f:?}"));
            writeln!(out, "Xi for mu = {}, p = {:?}{filler}, D-weight {}", o.mu, o.p, o.d_weight)?;
            for (s, c) in o.vector.format(&g) {
                writeln!(out, "  ({s}, {c})")?;
            }
            writeln!(out, "{}", o.report.to_json())?;
        }
        writeln!(out, "verdict: {}", if passed { "pass" } else { "fail" })?;
    }
    Ok(passed)
}

fn emit_duality(rep: &DualityReport, json: bool, out: &mut dyn Write) -> Outcome {
    if json {
        writeln!(out, "{}", rep.to_json())?;
    } else {
        writeln!(out, "{rep}")?;
    }
    Ok(rep.passed())
}

fn decompose(a: &ReportArgs, out: &mut dyn Write) -> Outcome {
    let opts = ReportOptions {
        dressing: a.grid.dressing.into(),
        x0: parse_x0(&a.x0)?,
        max_sites: a.grid.max_sites,
        ..ReportOptions::default()
    };
    emit_duality(&duality_report(a.grid.n, a.grid.m, &opts)?, a.grid.json, out)
}

fn sxs(a: &SxsArgs, out: &mut dyn Write) -> Outcome {
    let opts = ReportOptions { dressing: a.dressing.into(), x0: parse_x0(&a.x0)?, ..ReportOptions::default() };
    emit_duality(&sxs_report(a.n, &opts)?, a.json, out)
}

fn dump(a: &DumpArgs, out: &mut dyn Write) -> Outcome {
    let g = grid_of(&a.grid)?;
    let spec = EmbeddingSpec { kind: a.embedding.into(), grid: g, dressing: a.grid.dressing.into() };
    let images = named_images(&spec)?;
    if a.grid.json {
        let doc: Vec<Value> = images
            .iter()
            .map(|(name, op)| {
                let triples: Vec<Value> =
                    op.entries().map(|(i, o, c)| json!([i.format(&g), o.format(&g), c.to_string()])).collect();
                json!({ "name": name, "entries": triples })
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        for (name, op) in &images {
            writeln!(out, "{name}")?;
            for (i, o, c) in op.entries() {
                writeln!(out, "  ({}, {}, {c})", i.format(&g), o.format(&g))?;
            }
        }
    }
    Ok(true)
}
