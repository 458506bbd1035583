//! Variable contexts, monomials and monomial ideals.
//!
//! A context holds `n` x-variables followed by `n'` y-variables. Monomials
//! are exponent vectors over all `n + n'` variables in that order, so
//! `x_i` has global index `i - 1` and `y_j` has global index `n + j - 1`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// One of the two variable blocks of the ambient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    X,
    Y,
}

impl Block {
    pub fn betti_key(&self) -> &'static str {
        match self {
            Block::X => "betti_J",
            Block::Y => "betti_J'",
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::X => write!(f, "x"),
            Block::Y => write!(f, "y"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariableContext {
    n: usize,
    nprime: usize,
    field: Field,
}

impl VariableContext {
    pub fn new(n: usize, nprime: usize, field: Field) -> Result<Self> {
        if n == 0 || nprime == 0 {
            return Err(Error::Invalid(format!(
                "both variable blocks must be nonempty (got xvars = {n}, yvars = {nprime})"
            )));
        }
        Ok(VariableContext { n, nprime, field })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nprime(&self) -> usize {
        self.nprime
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn with_field(self, field: Field) -> Self {
        VariableContext { field, ..self }
    }

    pub fn num_vars(&self) -> usize {
        self.n + self.nprime
    }

    pub fn block_len(&self, block: Block) -> usize {
        match block {
            Block::X => self.n,
            Block::Y => self.nprime,
        }
    }

    /// Global indices of the variables in `block`, in order.
    pub fn block_vars(&self, block: Block) -> std::ops::Range<usize> {
        match block {
            Block::X => 0..self.n,
            Block::Y => self.n..self.n + self.nprime,
        }
    }

    pub fn block_of(&self, var: usize) -> Block {
        if var < self.n {
            Block::X
        } else {
            Block::Y
        }
    }

    pub fn var_name(&self, var: usize) -> String {
        if var < self.n {
            format!("x{}", var + 1)
        } else {
            format!("y{}", var - self.n + 1)
        }
    }

    pub fn variable(&self, var: usize) -> Monomial {
        let mut exps = vec![0; self.num_vars()];
        exps[var] = 1;
        Monomial::new(exps)
    }

    pub fn one(&self) -> Monomial {
        Monomial::new(vec![0; self.num_vars()])
    }
}

/// Exponent vector over the variables of a context.
///
/// The derived ordering is lexicographic on exponents, which is the
/// monomial order with `x1 > ... > xn > y1 > ... > yn'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.exps[var] > 0
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ctx }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (var, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ctx.var_name(var))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal stored by its minimal generators, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }
}

/// Removes duplicates and every generator divisible by another one.
pub fn minimalize_monomial_generators<I>(gens: I) -> MonomialIdeal
where
    I: IntoIterator<Item = Monomial>,
{
    let unique: HashSet<Monomial> = gens.into_iter().collect();
    let mut sorted: Vec<Monomial> = unique.into_iter().collect();
    // Ascending degree, so divisors are kept before their multiples.
    sorted.sort_by(|a, b| match a.degree().cmp(&b.degree()) {
        Ordering::Equal => b.cmp(a),
        o => o,
    });
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    MonomialIdeal { gens: kept }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx22() -> VariableContext {
        VariableContext::new(2, 2, Field::Rationals).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn empty_blocks_rejected() {
        assert!(VariableContext::new(0, 1, Field::Rationals).is_err());
        assert!(VariableContext::new(1, 0, Field::Rationals).is_err());
    }

    #[test]
    fn names_and_blocks() {
        let c = ctx22();
        assert_eq!(c.var_name(0), "x1");
        assert_eq!(c.var_name(3), "y2");
        assert_eq!(c.block_of(2), Block::Y);
        assert_eq!(m(&[1, 2, 0, 1]).display(&c).to_string(), "x1*x2^2*y2");
    }

    #[test]
    fn lex_order_puts_x1_first() {
        // x1 > x2^5 > y1
        assert!(m(&[1, 0, 0, 0]) > m(&[0, 5, 0, 0]));
        assert!(m(&[0, 5, 0, 0]) > m(&[0, 0, 1, 0]));
    }

    #[test]
    fn divisibility_pruning() {
        let got = minimalize_monomial_generators([m(&[1, 0, 0, 0]), m(&[1, 1, 0, 0])]);
        assert_eq!(got.generators(), &[m(&[1, 0, 0, 0])]);

        let got = minimalize_monomial_generators([m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1])]);
        assert_eq!(got.len(), 2);

        let got = minimalize_monomial_generators([
            m(&[0, 2, 0, 0]),
            m(&[0, 3, 0, 0]),
            m(&[0, 2, 1, 0]),
            m(&[0, 2, 0, 0]),
        ]);
        assert_eq!(got.generators(), &[m(&[0, 2, 0, 0])]);
    }

    fn monomials() -> impl Strategy<Value = Vec<Monomial>> {
        prop::collection::vec(
            prop::collection::vec(0u32..3, 4).prop_map(Monomial::new),
            0..8,
        )
    }

    proptest! {
        #[test]
        fn minimalize_is_idempotent_and_irredundant(gens in monomials()) {
            let once = minimalize_monomial_generators(gens.clone());
            let twice = minimalize_monomial_generators(once.generators().to_vec());
            prop_assert_eq!(&once, &twice);
            for (i, a) in once.generators().iter().enumerate() {
                for (j, b) in once.generators().iter().enumerate() {
                    prop_assert!(i == j || !a.divides(b));
                }
            }
            // Same ideal: every input is a multiple of some kept generator.
            for g in &gens {
                prop_assert!(once.contains(g));
            }
        }
    }
}
