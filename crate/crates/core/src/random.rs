//! Seeded random monomial instances for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::field::Field;
use crate::monomial::{minimalize_monomial_generators, Block, Monomial, VariableContext};
use crate::parse::IdealSpec;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy)]
pub struct RandomShape {
    /// Upper bound on minimal generators of each of `I`, `I'`.
    pub max_generators: usize,
    /// Upper bound on the degree of non-linear generators.
    pub max_degree: u32,
    /// Chance that a generator is a bare variable.
    pub variable_probability: f64,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            max_generators: 4,
            max_degree: 3,
            variable_probability: 0.35,
        }
    }
}

/// Minimal monomial generators in the given block variables.
pub fn random_block_ideal<R: Rng>(
    rng: &mut R,
    ctx: &VariableContext,
    vars: &[usize],
    shape: RandomShape,
) -> Vec<Monomial> {
    let count = rng.gen_range(0..=shape.max_generators);
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let mut exps = vec![0u32; ctx.num_vars()];
        if rng.gen_bool(shape.variable_probability) {
            exps[*vars.choose(rng).expect("nonempty block")] = 1;
        } else {
            let degree = rng.gen_range(2..=shape.max_degree.max(2));
            for _ in 0..degree {
                exps[*vars.choose(rng).expect("nonempty block")] += 1;
            }
        }
        gens.push(Monomial::new(exps));
    }
    minimalize_monomial_generators(gens).generators().to_vec()
}

pub fn random_monomial_spec<R: Rng>(
    rng: &mut R,
    n: usize,
    nprime: usize,
    field: Field,
    shape: RandomShape,
) -> IdealSpec {
    let context = VariableContext::new(n, nprime, field).expect("positive block sizes");
    let side = |rng: &mut R, block: Block| -> Vec<Polynomial> {
        let vars: Vec<usize> = context.block_vars(block).collect();
        random_block_ideal(rng, &context, &vars, shape)
            .into_iter()
            .map(|m| Polynomial::monomial(field, m))
            .collect()
    };
    let gens_i = side(rng, Block::X);
    let gens_iprime = side(rng, Block::Y);
    IdealSpec {
        context,
        gens_i,
        gens_iprime,
        betti_j: None,
        betti_jprime: None,
    }
}

/// Minimal monomial generators `x_{v_1}, ..., x_{v_p}` plus up to
/// `max_generators - p` generators of degree at least 2, so that the linear
/// part has dimension exactly `p`. Pivot variables are chosen at random.
pub fn random_split_block<R: Rng>(
    rng: &mut R,
    ctx: &VariableContext,
    block: Block,
    p: usize,
    shape: RandomShape,
) -> Vec<Monomial> {
    let vars: Vec<usize> = ctx.block_vars(block).collect();
    assert!(p <= vars.len(), "p exceeds the block size");
    let pivots: Vec<usize> = vars.choose_multiple(rng, p).copied().collect();
    let mut gens: Vec<Monomial> = pivots.iter().map(|&v| ctx.variable(v)).collect();
    let extra = rng.gen_range(0..=shape.max_generators.saturating_sub(p));
    for _ in 0..extra {
        let mut exps = vec![0u32; ctx.num_vars()];
        for _ in 0..rng.gen_range(2..=shape.max_degree.max(2)) {
            exps[*vars.choose(rng).expect("nonempty block")] += 1;
        }
        gens.push(Monomial::new(exps));
    }
    minimalize_monomial_generators(gens).generators().to_vec()
}

/// A monomial spec whose linear parts have dimensions exactly `p` and `q`.
pub fn random_split_spec<R: Rng>(
    rng: &mut R,
    (n, nprime): (usize, usize),
    (p, q): (usize, usize),
    field: Field,
    shape: RandomShape,
) -> IdealSpec {
    let context = VariableContext::new(n, nprime, field).expect("positive block sizes");
    let mut side = |block: Block, p: usize| -> Vec<Polynomial> {
        random_split_block(rng, &context, block, p, shape)
            .into_iter()
            .map(|m| Polynomial::monomial(field, m))
            .collect()
    };
    let gens_i = side(Block::X, p);
    let gens_iprime = side(Block::Y, q);
    IdealSpec {
        context,
        gens_i,
        gens_iprime,
        betti_j: None,
        betti_jprime: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::reduce;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn split_specs_hit_the_requested_linear_parts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=3 {
            for p in 0..=n {
                let spec = random_split_spec(
                    &mut rng,
                    (n, 2),
                    (p, 1),
                    Field::Rationals,
                    RandomShape::default(),
                );
                let (si, sy) = reduce(&spec).unwrap();
                assert_eq!((si.p(), sy.p()), (p, 1));
                assert!(spec.gens_i.len() <= 4 && spec.gens_iprime.len() <= 4);
            }
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let make = || {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            random_monomial_spec(&mut rng, 3, 2, Field::Rationals, RandomShape::default()).to_text()
        };
        assert_eq!(make(), make());
    }
}
