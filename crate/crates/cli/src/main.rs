mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fpbetti::parse::parse_field;
use fpbetti::pipeline::{self, fiber_spec, oracle_betti, reduce};
use fpbetti::random::{random_monomial_spec, RandomShape};
use fpbetti::{
    minimal_generators, parse_ideal_spec, poincare_from_betti, verify_functional_equation, Error,
    FiberSpec, Field, IdealSpec, OracleLimits, Polynomial, SplitIdeal, VariableContext,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use report::{CheckRow, Report};

#[derive(Parser)]
#[command(
    name = "fp",
    version,
    about = "Betti numbers and Poincaré series of fiber products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split off the linear parts: p, q and the residual ideals J, J'.
    Reduce(Common),
    /// Betti numbers of the fiber product.
    Betti(WithOracle),
    /// Poincaré polynomial and the functional equation check.
    Poincare(WithOracle),
    /// Ranks of the mapping-cone resolution.
    Ranks(WithOracle),
    /// Run every cross-check; exit 1 if any fails.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    /// Spec file.
    spec: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Coefficient field, overriding the spec: `q` or `gf:<prime>`.
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    /// Generator cap for the monomial oracle.
    #[arg(long = "max-gens", default_value_t = 14)]
    max_gens: usize,
    /// Degree cap for input generators.
    #[arg(long = "max-degree", default_value_t = 50)]
    max_degree: u32,
}

#[derive(Args)]
struct WithOracle {
    #[command(flatten)]
    common: Common,
    /// Also compute the Betti numbers with the monomial oracle and compare.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Additionally check this many random monomial instances.
    #[arg(long, requires = "seed")]
    samples: Option<usize>,
    /// Seed for the random instances.
    #[arg(long)]
    seed: Option<u64>,
}

enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 2,
            Failure::Core(e) => match e {
                Error::Parse { .. }
                | Error::Invalid(_)
                | Error::UnitIdeal(_)
                | Error::MixedVariables { .. } => 2,
                Error::BettiInputRequired(_) => 3,
                Error::OracleUnsupported(_) | Error::TooManyGenerators { .. } => 4,
                Error::Inconsistent(_) => 1,
            },
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => e.fmt(f),
            Failure::Io(s) => f.write_str(s),
        }
    }
}

/// A finished report and whether every comparison in it agreed.
type Outcome = Result<(Report, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, outcome) = match &cli.command {
        Command::Reduce(c) => (c.json, cmd_reduce(c)),
        Command::Betti(a) => (a.common.json, cmd_betti(a)),
        Command::Poincare(a) => (a.common.json, cmd_poincare(a)),
        Command::Ranks(a) => (a.common.json, cmd_ranks(a)),
        Command::Verify(a) => (a.common.json, cmd_verify(a)),
    };
    match outcome {
        Ok((report, ok)) => {
            let out = if json {
                report.render_json()
            } else {
                report.render_text()
            };
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn limits(c: &Common) -> OracleLimits {
    OracleLimits {
        max_generators: c.max_gens,
    }
}

fn load(c: &Common) -> Result<IdealSpec, Failure> {
    let text = std::fs::read_to_string(&c.spec)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", c.spec.display())))?;
    let mut spec = parse_ideal_spec(&text)?;
    if let Some(field) = c.field {
        spec = spec.with_field(field)?;
    }
    for g in spec.gens_i.iter().chain(&spec.gens_iprime) {
        if g.max_degree() > c.max_degree {
            return Err(Error::Invalid(format!(
                "generator `{}` has degree {}, above the cap of {}",
                g.display(&spec.context),
                g.max_degree(),
                c.max_degree
            ))
            .into());
        }
    }
    Ok(spec)
}

fn shown(ctx: &VariableContext, gens: &[Polynomial]) -> Vec<String> {
    gens.iter().map(|g| g.display(ctx).to_string()).collect()
}

fn header(report: &mut Report, spec: &IdealSpec, si: &SplitIdeal, sy: &SplitIdeal) {
    let ctx = &spec.context;
    report.int("n", ctx.n());
    report.int("nprime", ctx.nprime());
    report.text("field", ctx.field().to_string());
    report.lines("I", shown(ctx, &spec.gens_i));
    report.lines("I'", shown(ctx, &spec.gens_iprime));
    report.int("p", si.p());
    report.int("q", sy.p());
}

fn fiber_header(report: &mut Report, spec: &IdealSpec, fiber: &FiberSpec) {
    header(report, spec, &fiber.split_i, &fiber.split_iprime);
    report.lines(
        "minimal_generators",
        shown(&spec.context, &fiber.minimal_defining_ideal()),
    );
}

/// Adds the oracle value and its agreement with `formula`.
fn oracle_entries(
    report: &mut Report,
    fiber: &FiberSpec,
    formula: &fpbetti::BettiSequence,
    c: &Common,
) -> Result<bool, Failure> {
    let oracle = oracle_betti(fiber, limits(c))?;
    let agree = &oracle == formula;
    report.betti("betti_oracle", &oracle);
    report.flag("agreement", agree);
    Ok(agree)
}

fn cmd_reduce(c: &Common) -> Outcome {
    let spec = load(c)?;
    let ctx = &spec.context;
    let (si, sy) = reduce(&spec)?;
    let mut report = Report::default();
    header(&mut report, &spec, &si, &sy);
    let names = |vars: &[usize]| vars.iter().map(|&v| ctx.var_name(v)).collect::<Vec<_>>();
    report.lines("x_order", names(&si.variable_order));
    report.lines("y_order", names(&sy.variable_order));
    report.lines("J", shown(ctx, &si.j_generators));
    report.lines("J'", shown(ctx, &sy.j_generators));
    report.flag("J_exact", si.substitution_exact);
    report.flag("J'_exact", sy.substitution_exact);
    report.lines(
        "minimal_generators",
        shown(ctx, &minimal_generators(ctx, &si, &sy)),
    );
    Ok((report, true))
}

fn cmd_betti(a: &WithOracle) -> Outcome {
    let spec = load(&a.common)?;
    let fiber = fiber_spec(&spec, limits(&a.common))?;
    let formula = fiber.betti()?;
    let mut report = Report::default();
    fiber_header(&mut report, &spec, &fiber);
    report.betti("betti_formula", &formula);
    let ok = if a.oracle {
        oracle_entries(&mut report, &fiber, &formula, &a.common)?
    } else {
        true
    };
    Ok((report, ok))
}

fn cmd_poincare(a: &WithOracle) -> Outcome {
    let spec = load(&a.common)?;
    let fiber = fiber_spec(&spec, limits(&a.common))?;
    let formula = fiber.betti()?;
    let closed = fiber.poincare()?;
    if closed != poincare_from_betti(&formula) {
        return Err(Error::Inconsistent(format!(
            "closed form {closed} differs from the Betti generating polynomial {}",
            poincare_from_betti(&formula)
        ))
        .into());
    }
    let verified = verify_functional_equation(
        fiber.n(),
        fiber.nprime(),
        fiber.p(),
        fiber.q(),
        &poincare_from_betti(&fiber.betti_i()),
        &poincare_from_betti(&fiber.betti_iprime()),
        &closed,
    );
    let mut report = Report::default();
    fiber_header(&mut report, &spec, &fiber);
    report.betti("betti_formula", &formula);
    report.poly("poincare", &closed);
    report.flag("functional_equation", verified);
    let mut ok = verified;
    if a.oracle {
        ok &= oracle_entries(&mut report, &fiber, &formula, &a.common)?;
    }
    Ok((report, ok))
}

fn cmd_ranks(a: &WithOracle) -> Outcome {
    let spec = load(&a.common)?;
    let fiber = fiber_spec(&spec, limits(&a.common))?;
    let formula = fiber.betti()?;
    let cone = fiber.cone_ranks();
    let minimal = fiber.cone_is_minimal();
    let mut report = Report::default();
    fiber_header(&mut report, &spec, &fiber);
    report.ranks("cone_ranks", &cone);
    report.flag("cone_minimal", minimal);
    report.betti("betti_formula", &formula);
    let mut ok = !minimal || cone.ranks() == formula.values();
    if a.oracle {
        ok &= oracle_entries(&mut report, &fiber, &formula, &a.common)?;
    }
    Ok((report, ok))
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let spec = load(&a.common)?;
    let lim = limits(&a.common);
    let fiber = fiber_spec(&spec, lim)?;
    let mut rows: Vec<CheckRow> = pipeline::verify(&spec, lim)?
        .iter()
        .map(CheckRow::from)
        .collect();
    let mut report = Report::default();
    fiber_header(&mut report, &spec, &fiber);
    if let Some(seed) = a.seed {
        let samples = a.samples.unwrap_or(20);
        report.int("seed", seed as usize);
        report.int("samples", samples);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..samples {
            let n = rng.gen_range(1..=3);
            let nprime = rng.gen_range(1..=3);
            let sample = random_monomial_spec(
                &mut rng,
                n,
                nprime,
                spec.context.field(),
                RandomShape::default(),
            );
            let checks = pipeline::verify(&sample, lim)?;
            let failed: Vec<&str> = checks
                .iter()
                .filter(|c| c.failed())
                .map(|c| c.name)
                .collect();
            let ctx = &sample.context;
            let detail = format!(
                "I = ({}), I' = ({})",
                shown(ctx, &sample.gens_i).join(", "),
                shown(ctx, &sample.gens_iprime).join(", ")
            );
            rows.push(CheckRow {
                name: format!("random[{i}]"),
                status: if failed.is_empty() { "pass" } else { "fail" },
                detail: if failed.is_empty() {
                    detail
                } else {
                    format!("{detail}: {}", failed.join(", "))
                },
            });
        }
    }
    let ok = !rows.iter().any(CheckRow::failed);
    report.checks("checks", rows);
    report.flag("all_passed", ok);
    Ok((report, ok))
}
