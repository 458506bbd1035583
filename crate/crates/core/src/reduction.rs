//! Splitting an ideal `I ⊆ (x)` as `(x_{j_1}, ..., x_{j_p}) + J` with
//! `J` contained in the square of the remaining variables.
//!
//! Gaussian elimination on the degree-one parts of the generators yields
//! `p` generators of the form `x_{j_i} + (higher order or non-pivot terms)`
//! and residual generators in `(x)^2`. The pivot variables play the role of
//! `x_1, ..., x_p` after re-indexing; all outputs keep the original
//! variable labels.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg;
use crate::monomial::{minimalize_monomial_generators, Block, MonomialIdeal, VariableContext};
use crate::poly::{substitute_zero, Polynomial};

/// Coefficients of the degree-one terms: row `i` holds the coefficients of
/// `x_1, ..., x_n` (or `y_1, ...`) in generator `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPart {
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
}

impl LinearPart {
    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.ncols)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }
}

fn check_generators(ctx: &VariableContext, block: Block, gens: &[Polynomial]) -> Result<()> {
    for g in gens {
        if g.constant_term().is_some() {
            return Err(Error::UnitIdeal(g.display(ctx).to_string()));
        }
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

fn linear_row(ctx: &VariableContext, block: Block, g: &Polynomial) -> Vec<Scalar> {
    let field = ctx.field();
    ctx.block_vars(block)
        .map(|v| {
            g.linear_coefficient(v)
                .cloned()
                .unwrap_or_else(|| field.zero())
        })
        .collect()
}

pub fn linear_part(ctx: &VariableContext, block: Block, gens: &[Polynomial]) -> Result<LinearPart> {
    check_generators(ctx, block, gens)?;
    Ok(LinearPart {
        rows: gens.iter().map(|g| linear_row(ctx, block, g)).collect(),
        ncols: ctx.block_len(block),
    })
}

/// `dim_k (I + (x)^2) / (x)^2`, the rank of the linear part.
pub fn compute_p(ctx: &VariableContext, block: Block, gens: &[Polynomial]) -> Result<usize> {
    Ok(linear_part(ctx, block, gens)?.rank())
}

/// Generators after elimination: `leading[i]` pairs with `generators[i]`
/// for `i < p`; the remaining generators lie in `(x)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub generators: Vec<Polynomial>,
    pub leading: Vec<usize>,
}

impl Normalized {
    pub fn p(&self) -> usize {
        self.leading.len()
    }

    pub fn residual(&self) -> &[Polynomial] {
        &self.generators[self.p()..]
    }
}

/// Reduced row echelon form on the linear parts, carrying the full
/// polynomials along. Pivot columns are taken in increasing variable
/// index; the pivot row is the first remaining row with a nonzero entry.
/// Residual generators that become zero are dropped.
pub fn normalize(ctx: &VariableContext, block: Block, gens: &[Polynomial]) -> Result<Normalized> {
    check_generators(ctx, block, gens)?;
    let vars: Vec<usize> = ctx.block_vars(block).collect();
    let mut rows: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut leading = Vec::new();
    let mut r = 0;
    for &var in &vars {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i].linear_coefficient(var).is_some()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = rows[r].linear_coefficient(var).expect("pivot").inv();
        rows[r] = rows[r].scale(&inv);
        for i in 0..rows.len() {
            if i == r {
                continue;
            }
            if let Some(c) = rows[i].linear_coefficient(var).cloned() {
                rows[i] = rows[i].sub_scaled(&c, &rows[r]);
            }
        }
        leading.push(var);
        r += 1;
    }
    let mut generators: Vec<Polynomial> = rows.drain(..r).collect();
    generators.extend(rows.into_iter().filter(|g| !g.is_zero()));
    Ok(Normalized {
        generators,
        leading,
    })
}

pub fn normalize_generators(
    ctx: &VariableContext,
    block: Block,
    gens: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    Ok(normalize(ctx, block, gens)?.generators)
}

/// The pair `(p, J)` together with the re-indexing that realizes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitIdeal {
    pub block: Block,
    /// Pivot variables, in pivot order; `p` is their count.
    pub leading: Vec<usize>,
    /// Block variables listed as `leading` followed by the rest in index order.
    pub variable_order: Vec<usize>,
    pub j_generators: Vec<Polynomial>,
    /// False when a residual generator mentioned a pivot variable whose
    /// normalized generator is not the bare variable. Zero substitution then
    /// does not realize the change of variables, so `J` is only a candidate.
    pub substitution_exact: bool,
}

impl SplitIdeal {
    pub fn p(&self) -> usize {
        self.leading.len()
    }

    /// Non-pivot variables of the block, in index order.
    pub fn trailing(&self) -> &[usize] {
        &self.variable_order[self.p()..]
    }

    pub fn j_is_monomial(&self) -> bool {
        self.j_generators.iter().all(|g| g.as_monomial().is_some())
    }

    /// `J` as a monomial ideal, when it is one and the split is exact.
    pub fn j_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.substitution_exact || !self.j_is_monomial() {
            return None;
        }
        Some(minimalize_monomial_generators(
            self.j_generators
                .iter()
                .filter_map(|g| g.as_monomial().cloned()),
        ))
    }
}

pub fn split_ideal(ctx: &VariableContext, block: Block, gens: &[Polynomial]) -> Result<SplitIdeal> {
    let normalized = normalize(ctx, block, gens)?;
    let leading = normalized.leading.clone();
    let p = leading.len();

    let pure_leading = normalized.generators[..p]
        .iter()
        .zip(&leading)
        .all(|(g, &v)| g.is_variable(v));
    let touches_leading = normalized
        .residual()
        .iter()
        .any(|g| leading.iter().any(|&v| g.involves(v)));

    let mut j: Vec<Polynomial> = Vec::new();
    for g in normalized.residual() {
        let h = substitute_zero(g, &leading);
        if !h.is_zero() && !j.contains(&h) {
            j.push(h);
        }
    }
    // Monomial generators only matter up to units; keep them minimal.
    let field = ctx.field();
    if j.iter().all(|g| g.as_monomial().is_some()) {
        j = minimalize_monomial_generators(j.iter().filter_map(|g| g.as_monomial().cloned()))
            .generators()
            .iter()
            .map(|m| Polynomial::monomial(field, m.clone()))
            .collect();
    }

    let mut variable_order = leading.clone();
    variable_order.extend(ctx.block_vars(block).filter(|v| !leading.contains(v)));

    Ok(SplitIdeal {
        block,
        leading,
        variable_order,
        j_generators: j,
        substitution_exact: pure_leading || !touches_leading,
    })
}
