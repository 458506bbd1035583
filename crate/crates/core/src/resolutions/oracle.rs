//! Betti numbers of `R/I` for a monomial ideal `I` via Koszul homology.
//!
//! `β_i(R/I) = dim_k H_i(K ⊗ R/I)` where `K` is the Koszul complex on all
//! variables. Everything is multigraded: the slice of `K ⊗ R/I` in
//! multidegree `b` has basis `e_σ ⊗ u` with `σ` a squarefree set of
//! variables, `u ∉ I` a monomial, and `σ + u = b`. Nonzero homology only
//! occurs in multidegrees that are lcms of sets of minimal generators.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::formulas::BettiSequence;
use crate::linalg::rank_integer;
use crate::monomial::{Monomial, MonomialIdeal, VariableContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_generators: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_generators: 14 }
    }
}

impl OracleLimits {
    fn check(&self, ideal: &MonomialIdeal) -> Result<()> {
        if ideal.len() > self.max_generators {
            return Err(Error::TooManyGenerators {
                count: ideal.len(),
                limit: self.max_generators,
            });
        }
        if ideal.is_unit() {
            return Err(Error::Invalid(
                "the monomial ideal is the unit ideal".into(),
            ));
        }
        Ok(())
    }
}

/// One multidegree slice of `K(vars) ⊗ R/I`.
#[derive(Debug, Clone)]
pub struct MultidegreeComplex {
    degree: Monomial,
    /// `bases[i]` lists `(σ, u)` with `|σ| = i`; `σ` is a bitmask over
    /// global variable indices.
    bases: Vec<Vec<(u64, Monomial)>>,
    /// `boundaries[i]` is the matrix of `C_i -> C_{i-1}` (rows index
    /// `C_{i-1}`); `boundaries[0]` is empty.
    boundaries: Vec<Vec<Vec<i64>>>,
}

impl MultidegreeComplex {
    /// Builds the slice in multidegree `degree` of the Koszul complex on
    /// `vars` tensored with `R/ideal`.
    pub fn build(degree: &Monomial, vars: &[usize], ideal: &MonomialIdeal) -> Self {
        let active: Vec<usize> = vars
            .iter()
            .copied()
            .filter(|&v| degree.involves(v))
            .collect();
        let mut bases: Vec<Vec<(u64, Monomial)>> = vec![Vec::new(); active.len() + 1];
        for subset in 0u64..(1 << active.len()) {
            let mut exps = degree.exponents().to_vec();
            let mut sigma = 0u64;
            for (k, &v) in active.iter().enumerate() {
                if subset >> k & 1 == 1 {
                    exps[v] -= 1;
                    sigma |= 1 << v;
                }
            }
            let u = Monomial::new(exps);
            if !ideal.contains(&u) {
                bases[subset.count_ones() as usize].push((sigma, u));
            }
        }
        while bases.len() > 1 && bases.last().is_some_and(Vec::is_empty) {
            bases.pop();
        }

        let mut boundaries = vec![Vec::new()];
        for i in 1..bases.len() {
            let mut m = vec![vec![0i64; bases[i].len()]; bases[i - 1].len()];
            for (col, (sigma, _)) in bases[i].iter().enumerate() {
                let mut sign = 1i64;
                for v in 0..64 {
                    if sigma >> v & 1 == 0 {
                        continue;
                    }
                    let face = sigma & !(1 << v);
                    // x_v * u ∉ I exactly when the face appears in the basis.
                    if let Some(row) = bases[i - 1].iter().position(|(s, _)| *s == face) {
                        m[row][col] = sign;
                    }
                    sign = -sign;
                }
            }
            boundaries.push(m);
        }
        MultidegreeComplex {
            degree: degree.clone(),
            bases,
            boundaries,
        }
    }

    pub fn degree(&self) -> &Monomial {
        &self.degree
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn boundary(&self, i: usize) -> &[Vec<i64>] {
        &self.boundaries[i]
    }

    /// `d_{i-1} ∘ d_i = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        (2..self.boundaries.len()).all(|i| {
            let outer = &self.boundaries[i - 1];
            let inner = &self.boundaries[i];
            outer.iter().all(|row| {
                (0..self.bases[i].len()).all(|c| {
                    row.iter()
                        .zip(inner)
                        .map(|(a, inner_row)| a * inner_row[c])
                        .sum::<i64>()
                        == 0
                })
            })
        })
    }

    /// `dim_k H_i` for each homological degree.
    pub fn homology(&self, field: Field) -> Vec<usize> {
        let ranks: Vec<usize> = self
            .boundaries
            .iter()
            .map(|m| {
                if m.is_empty() {
                    0
                } else {
                    rank_integer(m, field)
                }
            })
            .collect();
        (0..self.bases.len())
            .map(|i| {
                let out = ranks[i];
                let inc = ranks.get(i + 1).copied().unwrap_or(0);
                self.bases[i].len() - out - inc
            })
            .collect()
    }
}

/// All lcms of subsets of the generators, including the empty lcm `1`.
pub fn lcm_lattice(ideal: &MonomialIdeal, ctx: &VariableContext) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    seen.insert(ctx.one());
    for g in ideal.generators() {
        let joined: Vec<Monomial> = seen.iter().map(|l| l.lcm(g)).collect();
        seen.extend(joined);
    }
    let mut all: Vec<Monomial> = seen.into_iter().collect();
    all.sort();
    all
}

/// Betti numbers of `R/ideal` over `R = k[[x, y]]`, summed over the
/// multidegrees of the lcm lattice.
pub fn betti_monomial(
    ideal: &MonomialIdeal,
    ctx: &VariableContext,
    limits: OracleLimits,
) -> Result<BettiSequence> {
    limits.check(ideal)?;
    let vars: Vec<usize> = (0..ctx.num_vars()).collect();
    let field = ctx.field();
    let totals = lcm_lattice(ideal, ctx)
        .par_iter()
        .map(|b| MultidegreeComplex::build(b, &vars, ideal).homology(field))
        .reduce(Vec::new, |mut acc, h| {
            if acc.len() < h.len() {
                acc.resize(h.len(), 0);
            }
            for (a, x) in acc.iter_mut().zip(h) {
                *a += x;
            }
            acc
        });
    BettiSequence::new(totals.into_iter().map(BigUint::from).collect())
}

/// Whether `H_i(K(seq) ⊗ R/ideal) = 0` for all `i >= 1`, i.e. whether the
/// distinct variables `seq` form a regular sequence on `R/ideal`.
///
/// Multiplication by `x_v` identifies the slices in degrees `b` and
/// `b + e_v` once `b_v` exceeds the lcm `L` of the generators (by one more
/// when `v` is in `seq`), so only the box below `L + 1_seq` is inspected.
pub fn koszul_regularity_check(
    seq: &[usize],
    ideal: &MonomialIdeal,
    ctx: &VariableContext,
    limits: OracleLimits,
) -> Result<bool> {
    limits.check(ideal)?;
    let mut vars: Vec<usize> = seq.to_vec();
    vars.sort_unstable();
    vars.dedup();
    if vars.len() != seq.len() {
        return Err(Error::Invalid("repeated variable in the sequence".into()));
    }
    if vars.is_empty() {
        return Ok(true);
    }
    let top = ideal
        .generators()
        .iter()
        .fold(ctx.one(), |acc, g| acc.lcm(g));
    let bounds: Vec<u32> = (0..ctx.num_vars())
        .map(|v| top.exponent(v) + u32::from(vars.contains(&v)))
        .collect();
    let count: usize = bounds.iter().map(|&b| b as usize + 1).product();
    let field = ctx.field();

    let nonzero = (0..count).into_par_iter().any(|mut idx| {
        let mut exps = vec![0u32; bounds.len()];
        for (e, &b) in exps.iter_mut().zip(&bounds) {
            let base = b as usize + 1;
            *e = (idx % base) as u32;
            idx /= base;
        }
        let h = MultidegreeComplex::build(&Monomial::new(exps), &vars, ideal).homology(field);
        h.iter().skip(1).any(|&d| d > 0)
    });
    Ok(!nonzero)
}
