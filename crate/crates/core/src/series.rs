//! Poincaré polynomials over the regular ring `R`.
//!
//! Every module here has finite projective dimension over `R`, so Poincaré
//! series are polynomials in `t`. The functional equation relating the
//! fiber product to `R/I` and `R/I'` is handled by clearing the `t` in the
//! denominator and dividing exactly.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formulas::BettiSequence;

/// Integer polynomial in `t`, coefficient `i` multiplying `t^i`, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `(1 + t)^k`
    pub fn one_plus_t_pow(k: usize) -> Self {
        let mut row = vec![BigInt::one()];
        for _ in 0..k {
            let mut next = vec![BigInt::zero(); row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            row = next;
        }
        IntPoly::new(row)
    }

    /// `self / t`, when the constant term vanishes.
    pub fn div_t(&self) -> Option<IntPoly> {
        match self.0.first() {
            None => Some(IntPoly::default()),
            Some(c) if c.is_zero() => Some(IntPoly::new(self.0[1..].to_vec())),
            Some(_) => None,
        }
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &t + c)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_default()
                        + rhs.0.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_default()
                        - rhs.0.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// `Σ β_i t^i` with non-negative coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincarePolynomial(Vec<BigUint>);

impl PoincarePolynomial {
    pub fn from_u64s(coeffs: &[u64]) -> Self {
        let mut v: Vec<BigUint> = coeffs.iter().map(|&c| c.into()).collect();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        PoincarePolynomial(v)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.0.iter().map(|c| BigInt::from(c.clone())).collect())
    }

    fn from_int_poly(p: &IntPoly) -> Result<Self> {
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| match c.sign() {
                Sign::Minus => Err(Error::Inconsistent(format!(
                    "coefficient of t^{i} in the Poincaré polynomial is {c}"
                ))),
                _ => Ok(c.magnitude().clone()),
            })
            .collect::<Result<Vec<_>>>()
            .map(PoincarePolynomial)
    }

    pub fn eval(&self, t: i64) -> BigInt {
        self.to_int_poly().eval(t)
    }

    /// Reads the coefficients back as Betti numbers.
    pub fn to_betti(&self) -> Result<BettiSequence> {
        BettiSequence::new(self.0.clone())
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c.is_one() && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn poincare_from_betti(b: &BettiSequence) -> PoincarePolynomial {
    PoincarePolynomial(b.values().to_vec())
}

/// `(1 + t)^p · P_{R/J}`
pub fn poincare_split(p: usize, pj: &PoincarePolynomial) -> PoincarePolynomial {
    let product = &IntPoly::one_plus_t_pow(p) * &pj.to_int_poly();
    PoincarePolynomial::from_int_poly(&product).expect("product of non-negative polynomials")
}

/// `(1+t) ((1+t)^n - (1+t)^p) ((1+t)^{n'} - (1+t)^q)`, the right side of
/// the equation once the denominator `t` is cleared.
fn correction(n: usize, nprime: usize, p: usize, q: usize) -> IntPoly {
    let u = IntPoly::one_plus_t_pow;
    let left = &u(n) - &u(p);
    let right = &u(nprime) - &u(q);
    &(&u(1) * &left) * &right
}

fn base_terms(
    n: usize,
    nprime: usize,
    pi: &PoincarePolynomial,
    piprime: &PoincarePolynomial,
) -> IntPoly {
    let u = IntPoly::one_plus_t_pow;
    let a = &u(nprime) * &pi.to_int_poly();
    let b = &u(n) * &piprime.to_int_poly();
    &(&a + &b) - &u(n + nprime)
}

fn check_degree(what: &str, p: &PoincarePolynomial, bound: usize) -> Result<()> {
    match p.degree() {
        Some(d) if d > bound => Err(Error::Inconsistent(format!(
            "{what} has degree {d}, above the bound {bound}"
        ))),
        _ => Ok(()),
    }
}

/// Solves the functional equation for `P_F`:
/// `P_F = (1+t)^{n'} P_I + (1+t)^n P_{I'} - (1+t)^{n+n'}
///        + (t+1)/t · ((1+t)^n - (1+t)^p)((1+t)^{n'} - (1+t)^q)`.
pub fn poincare_fiber(
    n: usize,
    nprime: usize,
    p: usize,
    q: usize,
    pi: &PoincarePolynomial,
    piprime: &PoincarePolynomial,
) -> Result<PoincarePolynomial> {
    if p > n || q > nprime {
        return Err(Error::Invalid(format!(
            "need p <= n and q <= n' (got p = {p}, n = {n}, q = {q}, n' = {nprime})"
        )));
    }
    check_degree("P_{R/I}", pi, n)?;
    check_degree("P_{R/I'}", piprime, nprime)?;
    let quotient = correction(n, nprime, p, q)
        .div_t()
        .ok_or_else(|| Error::Inconsistent("correction term is not divisible by t".into()))?;
    let total = &base_terms(n, nprime, pi, piprime) + &quotient;
    let pf = PoincarePolynomial::from_int_poly(&total)?;
    check_degree("P_F", &pf, n + nprime)?;
    Ok(pf)
}

/// Checks the functional equation in cross-multiplied form, as an exact
/// identity of integer polynomials.
pub fn verify_functional_equation(
    n: usize,
    nprime: usize,
    p: usize,
    q: usize,
    pi: &PoincarePolynomial,
    piprime: &PoincarePolynomial,
    pf: &PoincarePolynomial,
) -> bool {
    let t = IntPoly::from_i64s(&[0, 1]);
    let lhs = &t * &(&pf.to_int_poly() - &base_terms(n, nprime, pi, piprime));
    lhs == correction(n, nprime, p, q)
}
