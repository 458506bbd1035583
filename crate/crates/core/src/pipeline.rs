//! End-to-end orchestration: spec → split → Betti data → formulas, plus the
//! cross-check suite comparing the formulas with the monomial oracle.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fiberprod::{monomial_defining_ideal, FiberSpec};
use crate::formulas::{convolve, BettiSequence};
use crate::monomial::Block;
use crate::parse::IdealSpec;
use crate::reduction::{split_ideal, SplitIdeal};
use crate::resolutions::{betti_monomial, koszul_ranks, koszul_regularity_check, OracleLimits};
use crate::series::{poincare_from_betti, verify_functional_equation};

pub fn reduce(spec: &IdealSpec) -> Result<(SplitIdeal, SplitIdeal)> {
    let ctx = &spec.context;
    Ok((
        split_ideal(ctx, Block::X, &spec.gens_i)?,
        split_ideal(ctx, Block::Y, &spec.gens_iprime)?,
    ))
}

/// Betti numbers of `R/J`: the spec's override if present, otherwise the
/// oracle on `J` when it is monomial.
pub fn residual_betti(
    spec: &IdealSpec,
    split: &SplitIdeal,
    limits: OracleLimits,
) -> Result<BettiSequence> {
    if let Some(b) = spec.betti_override(split.block) {
        return Ok(b.clone());
    }
    match split.j_monomial_ideal() {
        Some(j) => betti_monomial(&j, &spec.context, limits),
        None => Err(Error::BettiInputRequired(split.block)),
    }
}

pub fn fiber_spec(spec: &IdealSpec, limits: OracleLimits) -> Result<FiberSpec> {
    let (si, sy) = reduce(spec)?;
    let bj = residual_betti(spec, &si, limits)?;
    let bjp = residual_betti(spec, &sy, limits)?;
    FiberSpec::new(spec.context, si, sy, bj, bjp)
}

/// Every generator of `I` and `I'` is a single term.
pub fn is_monomial_input(spec: &IdealSpec) -> bool {
    spec.gens_i
        .iter()
        .chain(&spec.gens_iprime)
        .all(|g| g.is_zero() || g.as_monomial().is_some())
}

/// Oracle Betti numbers of the minimal defining ideal.
pub fn oracle_betti(fiber: &FiberSpec, limits: OracleLimits) -> Result<BettiSequence> {
    let ideal = fiber.minimal_monomial_ideal().ok_or_else(|| {
        Error::OracleUnsupported("the minimal defining ideal is not monomial".into())
    })?;
    betti_monomial(&ideal, &fiber.context, limits).map_err(|e| match e {
        Error::TooManyGenerators { .. } => Error::OracleUnsupported(e.to_string()),
        other => other,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl Check {
    fn new(name: &'static str, outcome: Outcome) -> Self {
        Check { name, outcome }
    }

    fn compare<T: PartialEq + fmt::Display>(name: &'static str, got: &T, want: &T) -> Self {
        let outcome = if got == want {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("{got} != {want}"))
        };
        Check::new(name, outcome)
    }

    fn from_result(name: &'static str, r: Result<Outcome>) -> Self {
        Check::new(name, r.unwrap_or_else(|e| Outcome::Fail(e.to_string())))
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }
}

/// Runs the agreement suite on one spec. Errors only when the pipeline
/// cannot start (parse-level problems, missing Betti input).
pub fn verify(spec: &IdealSpec, limits: OracleLimits) -> Result<Vec<Check>> {
    let fiber = fiber_spec(spec, limits)?;
    let ctx = &spec.context;
    let mut checks = Vec::new();

    let formula = match fiber.betti() {
        Ok(b) => b,
        Err(e) => {
            checks.push(Check::new("formula", Outcome::Fail(e.to_string())));
            return Ok(checks);
        }
    };
    checks.push(Check::new("formula", Outcome::Pass));

    let oracle = oracle_betti(&fiber, limits);
    checks.push(match &oracle {
        Ok(o) => Check::compare("formula_vs_oracle", &formula, o),
        Err(e @ Error::OracleUnsupported(_)) => {
            Check::new("formula_vs_oracle", Outcome::Skipped(e.to_string()))
        }
        Err(e) => Check::new("formula_vs_oracle", Outcome::Fail(e.to_string())),
    });

    // Independent of the split: the raw defining ideal, minimalized.
    let raw = if is_monomial_input(spec) {
        monomial_defining_ideal(ctx, &spec.gens_i, &spec.gens_iprime)?
    } else {
        None
    };
    match (&raw, fiber.minimal_monomial_ideal()) {
        (Some(raw), Some(minimal)) => {
            let same = raw == &minimal;
            checks.push(Check::new(
                "minimal_generators",
                if same {
                    Outcome::Pass
                } else {
                    Outcome::Fail(format!(
                        "{} raw vs {} reduced generators",
                        raw.len(),
                        minimal.len()
                    ))
                },
            ));
            checks.push(Check::from_result(
                "defining_ideal_oracle",
                betti_monomial(raw, ctx, limits).map(|o| Check::compare("", &formula, &o).outcome),
            ));
        }
        _ => {
            let why = Outcome::Skipped("input is not monomial".into());
            checks.push(Check::new("minimal_generators", why.clone()));
            checks.push(Check::new("defining_ideal_oracle", why));
        }
    }

    for (split, name) in [
        (&fiber.split_i, "betti_J_input"),
        (&fiber.split_iprime, "betti_J'_input"),
    ] {
        let given = spec.betti_override(split.block);
        let check = match (given, split.j_monomial_ideal()) {
            (Some(given), Some(j)) => Check::from_result(
                name,
                betti_monomial(&j, ctx, limits).map(|o| Check::compare("", given, &o).outcome),
            ),
            (None, Some(_)) => Check::new(name, Outcome::Skipped("computed by the oracle".into())),
            (_, None) => Check::new(
                name,
                Outcome::Skipped("residual ideal is not monomial".into()),
            ),
        };
        checks.push(check);
    }

    let pf = poincare_from_betti(&formula);
    let fe = verify_functional_equation(
        fiber.n(),
        fiber.nprime(),
        fiber.p(),
        fiber.q(),
        &poincare_from_betti(&fiber.betti_i()),
        &poincare_from_betti(&fiber.betti_iprime()),
        &pf,
    );
    checks.push(Check::new(
        "functional_equation",
        if fe {
            Outcome::Pass
        } else {
            Outcome::Fail("identity does not hold".into())
        },
    ));
    checks.push(Check::from_result(
        "poincare_closed_form",
        fiber
            .poincare()
            .map(|p| Check::compare("", &p.to_string(), &pf.to_string()).outcome),
    ));

    checks.push(Check::from_result(
        "decomposition",
        fiber.betti_tilde().and_then(|t| {
            let k = koszul_ranks(fiber.p() + fiber.q());
            let product = BettiSequence::new(convolve(t.values(), k.ranks()))?;
            Ok(Check::compare("", &formula, &product).outcome)
        }),
    ));

    checks.push(match fiber.tilde_monomial_ideal() {
        Some(tilde) => Check::from_result(
            "koszul_regularity",
            koszul_regularity_check(&fiber.decompose().koszul_vars, &tilde, ctx, limits).map(
                |ok| {
                    if ok {
                        Outcome::Pass
                    } else {
                        Outcome::Fail(
                            "pivot variables are not regular on the reduced fiber product".into(),
                        )
                    }
                },
            ),
        ),
        None => Check::new(
            "koszul_regularity",
            Outcome::Skipped("reduced ideal is not monomial".into()),
        ),
    });

    let cone = fiber.cone_ranks();
    checks.push(Check::new(
        "cone_ranks",
        if !cone.dominates(&formula) {
            Outcome::Fail(format!("cone {cone} smaller than Betti numbers {formula}"))
        } else if fiber.cone_is_minimal() && cone.ranks() != formula.values() {
            Outcome::Fail(format!("minimal cone {cone} differs from {formula}"))
        } else {
            Outcome::Pass
        },
    ));

    let trailing = (fiber.n() - fiber.p()) * (fiber.nprime() - fiber.q());
    let expected_b1 =
        fiber.betti_i().get(1) + fiber.betti_iprime().get(1) + BigUint::from(trailing);
    let mut b1 = Check::compare("first_betti_count", &formula.get(1), &expected_b1);
    if let (Outcome::Pass, Some(m)) = (&b1.outcome, fiber.minimal_monomial_ideal()) {
        b1 = Check::compare(
            "first_betti_count",
            &formula.get(1),
            &BigUint::from(m.len()),
        );
    }
    checks.push(b1);

    let alt = formula.alternating_sum();
    checks.push(Check::new(
        "alternating_sum",
        if alt.is_zero() {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("sum is {alt}"))
        },
    ));

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal_spec;

    fn spec(text: &str) -> IdealSpec {
        parse_ideal_spec(text).unwrap()
    }

    fn all_pass(checks: &[Check]) -> bool {
        checks.iter().all(|c| !c.failed())
    }

    #[test]
    fn example_spec_verifies() {
        let s = spec("xvars: 2\nyvars: 2\nI: x1 + x1^3 + x2^2\nI': y1 + y1^3 + y2^2");
        let checks = verify(&s, OracleLimits::default()).unwrap();
        assert!(all_pass(&checks), "{checks:#?}");
        let oracle = checks
            .iter()
            .find(|c| c.name == "formula_vs_oracle")
            .unwrap();
        assert_eq!(oracle.outcome, Outcome::Pass);
        let raw = checks
            .iter()
            .find(|c| c.name == "defining_ideal_oracle")
            .unwrap();
        assert!(matches!(raw.outcome, Outcome::Skipped(_)));
    }

    #[test]
    fn monomial_spec_runs_every_check() {
        let s = spec("xvars: 2\nyvars: 2\nI: x1; x2^2\nI': y1^2");
        let checks = verify(&s, OracleLimits::default()).unwrap();
        assert!(all_pass(&checks), "{checks:#?}");
        let skipped: Vec<_> = checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Skipped(_)))
            .map(|c| c.name)
            .collect();
        assert_eq!(skipped, ["betti_J_input", "betti_J'_input"]);
        let f = fiber_spec(&s, OracleLimits::default()).unwrap();
        assert_eq!(f.betti().unwrap().to_u64s(), [1, 5, 8, 5, 1]);
    }

    #[test]
    fn corrupted_override_fails() {
        let s = spec("xvars: 2\nyvars: 2\nI: x1; x2^2\nI': y1^2\nbetti_J: 1,2,1");
        let checks = verify(&s, OracleLimits::default()).unwrap();
        assert!(checks.iter().any(Check::failed));
    }

    #[test]
    fn missing_betti_input() {
        let s = spec("xvars: 2\nyvars: 1\nI: x1*x2 + x2^3\nI': y1^2");
        assert_eq!(
            fiber_spec(&s, OracleLimits::default()),
            Err(Error::BettiInputRequired(Block::X))
        );
        let s = spec("xvars: 2\nyvars: 1\nI: x1*x2 + x2^3\nI': y1^2\nbetti_J: 1,1");
        let f = fiber_spec(&s, OracleLimits::default()).unwrap();
        assert_eq!(f.betti().unwrap().to_u64s(), [1, 4, 4, 1]);
        assert!(matches!(
            oracle_betti(&f, OracleLimits::default()),
            Err(Error::OracleUnsupported(_))
        ));
    }

    #[test]
    fn inexact_split_requires_betti_input() {
        let s = spec("xvars: 2\nyvars: 1\nI: x1 + x2^2; x1*x2\nI': y1^2");
        assert_eq!(
            fiber_spec(&s, OracleLimits::default()),
            Err(Error::BettiInputRequired(Block::X))
        );
    }

    #[test]
    fn zero_ideals() {
        let s = spec("xvars: 1\nyvars: 1\nI:\nI':");
        let f = fiber_spec(&s, OracleLimits::default()).unwrap();
        assert_eq!(f.betti().unwrap().to_u64s(), [1, 1]);
        assert_eq!(
            oracle_betti(&f, OracleLimits::default()).unwrap().to_u64s(),
            [1, 1]
        );
        assert!(all_pass(&verify(&s, OracleLimits::default()).unwrap()));
    }
}
