//! Defining ideals of fiber products and the decomposition into a reduced
//! fiber product tensored with a Koszul part.

use crate::error::{Error, Result};
use crate::formulas::{self, betti_convolution, BettiSequence};
use crate::monomial::{
    minimalize_monomial_generators, Block, Monomial, MonomialIdeal, VariableContext,
};
use crate::poly::Polynomial;
use crate::reduction::SplitIdeal;
use crate::resolutions::{cone_ranks, koszul_ranks, RankSequence};
use crate::series::{poincare_fiber, poincare_from_betti, PoincarePolynomial};

fn cross_term(ctx: &VariableContext, x: usize, y: usize) -> Polynomial {
    Polynomial::monomial(ctx.field(), ctx.variable(x).mul(&ctx.variable(y)))
}

fn check_block(ctx: &VariableContext, block: Block, gens: &[Polynomial]) -> Result<()> {
    for g in gens {
        if g.terms()
            .iter()
            .any(|(_, m)| m.support().any(|v| ctx.block_of(v) != block))
        {
            return Err(Error::MixedVariables {
                generator: g.display(ctx).to_string(),
                block,
            });
        }
    }
    Ok(())
}

/// `I + I' + (x_i y_j)`, not necessarily minimal.
pub fn defining_ideal(
    ctx: &VariableContext,
    gens_i: &[Polynomial],
    gens_iprime: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    check_block(ctx, Block::X, gens_i)?;
    check_block(ctx, Block::Y, gens_iprime)?;
    let mut out: Vec<Polynomial> = gens_i.iter().chain(gens_iprime).cloned().collect();
    for x in ctx.block_vars(Block::X) {
        for y in ctx.block_vars(Block::Y) {
            out.push(cross_term(ctx, x, y));
        }
    }
    Ok(out)
}

/// The defining ideal as a minimal monomial ideal, when every generator of
/// `I` and `I'` is a monomial.
pub fn monomial_defining_ideal(
    ctx: &VariableContext,
    gens_i: &[Polynomial],
    gens_iprime: &[Polynomial],
) -> Result<Option<MonomialIdeal>> {
    let all = defining_ideal(ctx, gens_i, gens_iprime)?;
    let monos: Option<Vec<Monomial>> = all
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.as_monomial().cloned())
        .collect();
    Ok(monos.map(minimalize_monomial_generators))
}

/// Everything the Betti and Poincaré formulas consume: the two splits and
/// the Betti numbers of `R/J`, `R/J'`.
///
/// Pivot variables stand in for `x_1, ..., x_p` (and `y_1, ..., y_q`); the
/// trailing variables are `x~` and `y~`, which cut out the base ring of the
/// reduced fiber product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSpec {
    pub context: VariableContext,
    pub split_i: SplitIdeal,
    pub split_iprime: SplitIdeal,
    pub betti_j: BettiSequence,
    pub betti_jprime: BettiSequence,
}

/// `F ≅ F~ ⊗ R/(x_1..x_p, y_1..y_q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub tilde_generators: Vec<Polynomial>,
    pub koszul_vars: Vec<usize>,
}

pub fn decompose_splits(
    ctx: &VariableContext,
    split_i: &SplitIdeal,
    split_iprime: &SplitIdeal,
) -> Decomposition {
    let mut tilde_generators = split_i.j_generators.clone();
    tilde_generators.extend(split_iprime.j_generators.iter().cloned());
    for &x in split_i.trailing() {
        for &y in split_iprime.trailing() {
            tilde_generators.push(cross_term(ctx, x, y));
        }
    }
    let mut koszul_vars = split_i.leading.clone();
    koszul_vars.extend(&split_iprime.leading);
    Decomposition {
        tilde_generators,
        koszul_vars,
    }
}

/// `J, J', x~·y~, x_1..x_p, y_1..y_q` in that order; the cross terms
/// involving a pivot variable are redundant and left out.
pub fn minimal_generators(
    ctx: &VariableContext,
    split_i: &SplitIdeal,
    split_iprime: &SplitIdeal,
) -> Vec<Polynomial> {
    let Decomposition {
        mut tilde_generators,
        koszul_vars,
    } = decompose_splits(ctx, split_i, split_iprime);
    tilde_generators.extend(
        koszul_vars
            .into_iter()
            .map(|v| Polynomial::monomial(ctx.field(), ctx.variable(v))),
    );
    tilde_generators
}

impl FiberSpec {
    pub fn new(
        context: VariableContext,
        split_i: SplitIdeal,
        split_iprime: SplitIdeal,
        betti_j: BettiSequence,
        betti_jprime: BettiSequence,
    ) -> Result<Self> {
        for (split, block) in [(&split_i, Block::X), (&split_iprime, Block::Y)] {
            if split.block != block || split.variable_order.len() != context.block_len(block) {
                return Err(Error::Invalid(format!(
                    "split does not match the {block} block"
                )));
            }
            for g in &split.j_generators {
                let bad = g.min_degree().is_some_and(|d| d < 2)
                    || split.leading.iter().any(|&v| g.involves(v));
                if bad {
                    return Err(Error::Invalid(format!(
                        "residual generator `{}` is not in the square of the trailing variables",
                        g.display(&context)
                    )));
                }
            }
        }
        Ok(FiberSpec {
            context,
            split_i,
            split_iprime,
            betti_j,
            betti_jprime,
        })
    }

    pub fn n(&self) -> usize {
        self.context.n()
    }

    pub fn nprime(&self) -> usize {
        self.context.nprime()
    }

    pub fn p(&self) -> usize {
        self.split_i.p()
    }

    pub fn q(&self) -> usize {
        self.split_iprime.p()
    }

    pub fn tilde_x(&self) -> &[usize] {
        self.split_i.trailing()
    }

    pub fn tilde_y(&self) -> &[usize] {
        self.split_iprime.trailing()
    }

    pub fn decompose(&self) -> Decomposition {
        decompose_splits(&self.context, &self.split_i, &self.split_iprime)
    }

    pub fn minimal_defining_ideal(&self) -> Vec<Polynomial> {
        minimal_generators(&self.context, &self.split_i, &self.split_iprime)
    }

    fn as_monomial_ideal(gens: &[Polynomial]) -> Option<MonomialIdeal> {
        let monos: Option<Vec<Monomial>> = gens.iter().map(|g| g.as_monomial().cloned()).collect();
        monos.map(minimalize_monomial_generators)
    }

    fn splits_exact(&self) -> bool {
        self.split_i.substitution_exact && self.split_iprime.substitution_exact
    }

    /// The minimal defining ideal as a monomial ideal (in the re-indexed
    /// coordinates), when `J` and `J'` are monomial.
    pub fn minimal_monomial_ideal(&self) -> Option<MonomialIdeal> {
        self.splits_exact()
            .then(|| Self::as_monomial_ideal(&self.minimal_defining_ideal()))
            .flatten()
    }

    /// The defining ideal of `F~` as a monomial ideal, when it is one.
    pub fn tilde_monomial_ideal(&self) -> Option<MonomialIdeal> {
        self.splits_exact()
            .then(|| Self::as_monomial_ideal(&self.decompose().tilde_generators))
            .flatten()
    }

    pub fn betti_i(&self) -> BettiSequence {
        betti_convolution(self.p(), &self.betti_j)
    }

    pub fn betti_iprime(&self) -> BettiSequence {
        betti_convolution(self.q(), &self.betti_jprime)
    }

    pub fn betti(&self) -> Result<BettiSequence> {
        formulas::betti_fiber(
            self.n(),
            self.nprime(),
            self.p(),
            self.q(),
            &self.betti_i(),
            &self.betti_iprime(),
        )
    }

    pub fn betti_tilde(&self) -> Result<BettiSequence> {
        formulas::betti_tilde(
            self.n() - self.p(),
            self.nprime() - self.q(),
            &self.betti_j,
            &self.betti_jprime,
        )
    }

    pub fn poincare(&self) -> Result<PoincarePolynomial> {
        poincare_fiber(
            self.n(),
            self.nprime(),
            self.p(),
            self.q(),
            &poincare_from_betti(&self.betti_i()),
            &poincare_from_betti(&self.betti_iprime()),
        )
    }

    /// Ranks of the (possibly non-minimal) mapping-cone resolution built
    /// from the original `I`, `I'`.
    pub fn cone_ranks(&self) -> RankSequence {
        cone_ranks(
            &RankSequence::from(&self.betti_i()),
            &RankSequence::from(&self.betti_iprime()),
            &koszul_ranks(self.n()),
            &koszul_ranks(self.nprime()),
        )
    }

    /// Whether the cone is minimal: `I ⊆ (x)^2` and `I' ⊆ (y)^2`.
    pub fn cone_is_minimal(&self) -> bool {
        self.p() == 0 && self.q() == 0
    }
}
