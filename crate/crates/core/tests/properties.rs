use fpbetti::pipeline::{fiber_spec, is_monomial_input, oracle_betti, verify};
use fpbetti::random::{random_monomial_spec, random_split_spec, RandomShape};
use fpbetti::{parse_ideal_spec, split_ideal, Block, Field, IdealSpec, OracleLimits};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMITS: OracleLimits = OracleLimits { max_generators: 24 };

fn term_text(prefix: char, (num, den, exps): &(i32, u32, Vec<u32>)) -> String {
    let mut s = format!("{num}/{den}");
    for (i, e) in exps.iter().enumerate() {
        if *e > 0 {
            s.push_str(&format!("*{prefix}{}^{e}", i + 1));
        }
    }
    s
}

fn generator_text(prefix: char, terms: &[(i32, u32, Vec<u32>)]) -> String {
    terms
        .iter()
        .map(|t| term_text(prefix, t))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn poly_strategy(vars: usize) -> impl Strategy<Value = Vec<(i32, u32, Vec<u32>)>> {
    prop::collection::vec(
        (
            (-9i32..=9).prop_filter("nonzero", |c| *c != 0),
            1u32..5,
            prop::collection::vec(0u32..3, vars),
        ),
        1..4,
    )
}

fn swap_blocks(spec: &IdealSpec) -> IdealSpec {
    let ctx = &spec.context;
    let render = |gens: &[fpbetti::Polynomial], from: char, to: char| {
        gens.iter()
            .map(|g| g.display(ctx).to_string().replace(from, &to.to_string()))
            .collect::<Vec<_>>()
            .join("; ")
    };
    let text = format!(
        "xvars: {}\nyvars: {}\nfield: {}\nI: {}\nI': {}\n",
        ctx.nprime(),
        ctx.n(),
        ctx.field(),
        render(&spec.gens_iprime, 'y', 'x'),
        render(&spec.gens_i, 'x', 'y'),
    );
    parse_ideal_spec(&text).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spec_text_round_trips(
        gi in prop::collection::vec(poly_strategy(3), 0..3),
        gy in prop::collection::vec(poly_strategy(2), 0..3),
    ) {
        let join = |prefix, gens: &[Vec<(i32, u32, Vec<u32>)>]| {
            gens.iter().map(|g| generator_text(prefix, g)).collect::<Vec<_>>().join("; ")
        };
        let text = format!("xvars: 3\nyvars: 2\nI: {}\nI': {}\n", join('x', &gi), join('y', &gy));
        let spec = match parse_ideal_spec(&text) {
            Ok(s) => s,
            // Coefficients may cancel to a zero generator; that is rejected consistently.
            Err(_) => return Ok(()),
        };
        let again = parse_ideal_spec(&spec.to_text()).unwrap();
        prop_assert_eq!(again, spec);
    }

    #[test]
    fn formula_matches_oracle_on_random_specs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, nprime) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let spec = random_monomial_spec(&mut rng, n, nprime, Field::Rationals, RandomShape::default());
        let fiber = fiber_spec(&spec, LIMITS).unwrap();
        prop_assert_eq!(fiber.betti().unwrap(), oracle_betti(&fiber, LIMITS).unwrap());
    }

    #[test]
    fn every_check_passes_over_gf2(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, nprime) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let spec = random_monomial_spec(&mut rng, n, nprime, Field::prime(2).unwrap(), RandomShape::default());
        let checks = verify(&spec, LIMITS).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| c.failed()).collect();
        prop_assert!(failed.is_empty(), "{:?}\n{}", failed, spec.to_text());
    }

    #[test]
    fn swapping_blocks_preserves_betti_numbers(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dims = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let pq = (rng.gen_range(0..=dims.0), rng.gen_range(0..=dims.1));
        let spec = random_split_spec(&mut rng, dims, pq, Field::Rationals, RandomShape::default());
        let swapped = swap_blocks(&spec);
        let a = fiber_spec(&spec, LIMITS).unwrap();
        let b = fiber_spec(&swapped, LIMITS).unwrap();
        prop_assert_eq!((a.p(), a.q()), (b.q(), b.p()));
        prop_assert_eq!(a.betti().unwrap(), b.betti().unwrap());
        prop_assert_eq!(a.poincare().unwrap(), b.poincare().unwrap());
    }

    #[test]
    fn perturbed_linear_generators_keep_the_invariants(seed in any::<u64>(), c in 1i32..5) {
        // Replacing a pivot generator x_i by x_i + c*m with m in the trailing
        // variables does not change the quotient up to isomorphism.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=3);
        let p = rng.gen_range(1..n);
        let spec = random_split_spec(&mut rng, (n, 2), (p, 1), Field::Rationals, RandomShape::default());
        let base = fiber_spec(&spec, LIMITS).unwrap();
        let trailing = base.tilde_x()[0];
        let ctx = &spec.context;
        let gens: Vec<String> = spec
            .gens_i
            .iter()
            .map(|g| {
                let shown = g.display(ctx).to_string();
                if g.max_degree() == 1 {
                    format!("{shown} + {c}*{}^2", ctx.var_name(trailing))
                } else {
                    shown
                }
            })
            .collect();
        let text = spec.to_text().replacen(
            &format!("I: {}", spec.gens_i.iter().map(|g| g.display(ctx).to_string()).collect::<Vec<_>>().join("; ")),
            &format!("I: {}", gens.join("; ")),
            1,
        );
        let perturbed = parse_ideal_spec(&text).unwrap();
        prop_assert!(!is_monomial_input(&perturbed));
        let split = split_ideal(ctx, Block::X, &perturbed.gens_i).unwrap();
        prop_assert!(split.substitution_exact);
        let fiber = fiber_spec(&perturbed, LIMITS).unwrap();
        prop_assert_eq!(fiber.p(), p);
        prop_assert_eq!(fiber.betti().unwrap(), base.betti().unwrap());
        prop_assert_eq!(fiber.betti().unwrap(), oracle_betti(&fiber, LIMITS).unwrap());
    }
}

#[test]
fn split_is_idempotent_on_its_own_output() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let spec = random_monomial_spec(&mut rng, 3, 2, Field::Rationals, RandomShape::default());
        let fiber = fiber_spec(&spec, LIMITS).unwrap();
        let ctx = &spec.context;
        let x_part: Vec<_> = fiber
            .minimal_defining_ideal()
            .into_iter()
            .filter(|g| {
                ctx.block_vars(Block::X).any(|v| g.involves(v))
                    && !ctx.block_vars(Block::Y).any(|v| g.involves(v))
            })
            .collect();
        let again = split_ideal(ctx, Block::X, &x_part).unwrap();
        assert_eq!(again.p(), fiber.p());
        assert_eq!(again.j_generators, fiber.split_i.j_generators);
    }
}

#[test]
fn example_over_several_fields() {
    for field in ["Q", "GF 2", "GF 3", "GF 101"] {
        let text = format!(
            "xvars: 2\nyvars: 2\nfield: {field}\nI: x1 + x1^3 + x2^2\nI': y1 + y1^3 + y2^2\n"
        );
        let fiber = fiber_spec(&parse_ideal_spec(&text).unwrap(), LIMITS).unwrap();
        assert_eq!(fiber.betti().unwrap().to_u64s(), [1, 3, 3, 1], "{field}");
        assert_eq!(fiber.cone_ranks().to_u64s(), [1, 6, 8, 3], "{field}");
    }
}

#[test]
fn stanley_reisner_ideal_depends_on_the_characteristic() {
    // The minimal triangulation of RP^2 has torsion in its homology, so its
    // Stanley-Reisner ring has different Betti numbers in characteristic 2.
    // The residual ideal lives in six x-variables; the y side is one variable.
    let faces = [
        "x1*x2*x3", "x1*x2*x4", "x1*x3*x5", "x1*x4*x6", "x1*x5*x6", "x2*x3*x6", "x2*x4*x5",
        "x2*x5*x6", "x3*x4*x5", "x3*x4*x6",
    ];
    let text = |field: &str| {
        format!(
            "xvars: 6\nyvars: 1\nfield: {field}\nI: {}\nI': y1\n",
            faces.join("; ")
        )
    };
    let q = fiber_spec(&parse_ideal_spec(&text("Q")).unwrap(), LIMITS).unwrap();
    let f2 = fiber_spec(&parse_ideal_spec(&text("GF 2")).unwrap(), LIMITS).unwrap();
    assert_ne!(q.betti_j, f2.betti_j);
    assert_ne!(q.betti().unwrap(), f2.betti().unwrap());
}
