//! Sparse polynomials with exact field coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::{Field, Scalar};
use crate::monomial::{Monomial, VariableContext};

/// A polynomial stored as a term list sorted by descending lex order on
/// monomials, with nonzero coefficients and no repeated monomial. The zero
/// polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Scalar, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Scalar, Monomial)>,
    {
        let mut merged: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (c, m) in terms {
            match merged.get_mut(&m) {
                Some(acc) => *acc = &*acc + &c,
                None => {
                    merged.insert(m, c);
                }
            }
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        Polynomial { terms }
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        Polynomial {
            terms: vec![(field.one(), m)],
        }
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A single term; coefficients are units, so this generates a monomial ideal.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [(_, m)] => Some(m),
            _ => None,
        }
    }

    /// A single term `1 * x_var`.
    pub fn is_variable(&self, var: usize) -> bool {
        match self.terms.as_slice() {
            [(c, m)] => c.is_one() && m.degree() == 1 && m.involves(var),
            _ => false,
        }
    }

    pub fn constant_term(&self) -> Option<&Scalar> {
        self.terms.iter().find(|(_, m)| m.is_one()).map(|(c, _)| c)
    }

    /// Coefficient of the degree-one monomial `x_var`, if present.
    pub fn linear_coefficient(&self, var: usize) -> Option<&Scalar> {
        self.terms
            .iter()
            .find(|(_, m)| m.degree() == 1 && m.involves(var))
            .map(|(c, _)| c)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).min()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, m)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(_, m)| m.involves(var))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect(),
        }
    }

    /// `self - c * other`
    pub fn sub_scaled(&self, c: &Scalar, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-c))
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, ctx }
    }
}

/// Deletes every term whose monomial involves one of `vars`, i.e. sets
/// those variables to zero.
pub fn substitute_zero(g: &Polynomial, vars: &[usize]) -> Polynomial {
    Polynomial {
        terms: g
            .terms
            .iter()
            .filter(|(_, m)| !vars.iter().any(|&v| m.involves(v)))
            .cloned()
            .collect(),
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.poly.terms.iter().enumerate() {
            let (negative, magnitude) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", m.display(self.ctx))?;
            } else {
                write!(f, "{magnitude}*{}", m.display(self.ctx))?;
            }
        }
        Ok(())
    }
}
