//! Closed-form Betti numbers of fiber products.
//!
//! With `F = k[[x]]/I ×_k k[[y]]/I'` over `R = k[[x, y]]`, `n`/`n'` variables
//! and `p`/`q` the dimensions of the linear parts of `I`/`I'`, the Betti
//! numbers of `F` over `R` are `β_0 = 1` and, for `t >= 1`,
//!
//! ```text
//! β_t(F) = C(n+n', t+1) - C(n'+p+1, t+1) - C(n+q+1, t+1) + C(p+q+1, t+1)
//!          + Σ_{w+z=t} ( β_w(R/I) C(n', z) + C(n, z) β_w(R/I') )
//! ```
//!
//! All arithmetic is arbitrary precision.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Betti numbers `β_0, β_1, ...` of a cyclic module; `β_0 = 1` and no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiSequence(Vec<BigUint>);

impl BettiSequence {
    pub fn new(mut values: Vec<BigUint>) -> Result<Self> {
        while values.len() > 1 && values.last().is_some_and(Zero::is_zero) {
            values.pop();
        }
        if values.first().is_none_or(|b| !b.is_one()) {
            return Err(Error::Inconsistent(
                "a Betti sequence must start with 1".into(),
            ));
        }
        Ok(BettiSequence(values))
    }

    /// Panics unless `values[0] == 1`.
    pub fn from_u64s(values: &[u64]) -> Self {
        Self::new(values.iter().map(|&v| BigUint::from(v)).collect())
            .expect("Betti sequence starting with 1")
    }

    /// The Betti numbers of `R` itself: `(1)`.
    pub fn free() -> Self {
        BettiSequence(vec![BigUint::one()])
    }

    pub fn values(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `β_i`, zero past the end.
    pub fn get(&self, i: usize) -> BigUint {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn to_u64s(&self) -> Vec<u64> {
        self.0
            .iter()
            .map(|v| v.to_u64().expect("Betti number fits in u64"))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// `Σ (-1)^i β_i`
    pub fn alternating_sum(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let b = BigInt::from(b.clone());
                if i % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }
}

impl fmt::Display for BettiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Binomial coefficient, zero when `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn binom_i(n: i64, k: i64) -> BigInt {
    BigInt::from(binom(n, k))
}

/// Plain convolution of two finite sequences.
pub fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `β_l(R/I) = Σ_i C(p, l - i) β_i(R/J)` for `I = (x_1, ..., x_p) + J`.
pub fn betti_convolution(p: usize, betti_j: &BettiSequence) -> BettiSequence {
    let koszul: Vec<BigUint> = (0..=p as i64).map(|i| binom(p as i64, i)).collect();
    BettiSequence::new(convolve(&koszul, betti_j.values())).expect("leading term is 1")
}

/// `Σ_{i+j=l} a_i C(m, j)`, with `a` read as zero past its end.
fn weighted(a: &BettiSequence, m: i64, l: i64) -> BigInt {
    (0..=l)
        .map(|i| BigInt::from(a.get(i as usize)) * binom_i(m, l - i))
        .sum()
}

/// The expression for `β_l` of the reduced fiber product with `n - p`
/// and `n' - q` trailing variables. It evaluates to 0 at `l = 0`.
pub fn tilde_expression(
    n_red: usize,
    nprime_red: usize,
    betti_j: &BettiSequence,
    betti_jprime: &BettiSequence,
    l: usize,
) -> BigInt {
    let (a, b, l) = (n_red as i64, nprime_red as i64, l as i64);
    binom_i(a + b, l + 1) - binom_i(a + 1, l + 1) - binom_i(b + 1, l + 1)
        + weighted(betti_j, b, l)
        + weighted(betti_jprime, a, l)
}

fn check_length(b: &BettiSequence, vars: usize, what: &str) -> Result<()> {
    if b.len() > vars + 1 {
        return Err(Error::Inconsistent(format!(
            "Betti sequence {b} of {what} is longer than {vars} variables allow"
        )));
    }
    Ok(())
}

fn to_natural(v: BigInt, what: impl FnOnce() -> String) -> Result<BigUint> {
    match v.sign() {
        Sign::Minus => Err(Error::Inconsistent(format!("{} is {v}", what()))),
        _ => Ok(v.magnitude().clone()),
    }
}

/// Betti numbers of the reduced fiber product `F~` with `n_red = n - p`,
/// `nprime_red = n' - q` and the Betti numbers of `R/J`, `R/J'`.
pub fn betti_tilde(
    n_red: usize,
    nprime_red: usize,
    betti_j: &BettiSequence,
    betti_jprime: &BettiSequence,
) -> Result<BettiSequence> {
    check_length(betti_j, n_red, "R/J")?;
    check_length(betti_jprime, nprime_red, "R/J'")?;
    let mut out = vec![BigUint::one()];
    for l in 1..=n_red + nprime_red {
        let v = tilde_expression(n_red, nprime_red, betti_j, betti_jprime, l);
        out.push(to_natural(v, || format!("reduced Betti number {l}"))?);
    }
    BettiSequence::new(out)
}

/// The displayed expression for `β_t(F)`, at any `t` (it equals 1 at
/// `t = 0` and vanishes for `t > n + n'`).
pub fn fiber_expression(
    n: usize,
    nprime: usize,
    p: usize,
    q: usize,
    betti_i: &BettiSequence,
    betti_iprime: &BettiSequence,
    t: usize,
) -> BigInt {
    let (n, np, p, q, t) = (n as i64, nprime as i64, p as i64, q as i64, t as i64);
    binom_i(n + np, t + 1) - binom_i(np + p + 1, t + 1) - binom_i(n + q + 1, t + 1)
        + binom_i(p + q + 1, t + 1)
        + weighted(betti_i, np, t)
        + weighted(betti_iprime, n, t)
}

/// Betti numbers of the fiber product over `R`.
pub fn betti_fiber(
    n: usize,
    nprime: usize,
    p: usize,
    q: usize,
    betti_i: &BettiSequence,
    betti_iprime: &BettiSequence,
) -> Result<BettiSequence> {
    if p > n || q > nprime {
        return Err(Error::Invalid(format!(
            "need p <= n and q <= n' (got p = {p}, n = {n}, q = {q}, n' = {nprime})"
        )));
    }
    check_length(betti_i, n, "R/I")?;
    check_length(betti_iprime, nprime, "R/I'")?;
    let mut out = vec![BigUint::one()];
    for t in 1..=n + nprime {
        let v = fiber_expression(n, nprime, p, q, betti_i, betti_iprime, t);
        out.push(to_natural(v, || {
            format!("Betti number {t} of the fiber product")
        })?);
    }
    BettiSequence::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[u64]) -> BettiSequence {
        BettiSequence::from_u64s(v)
    }

    fn koszul(r: usize) -> BettiSequence {
        betti_convolution(r, &BettiSequence::free())
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), 6u32.into());
        assert_eq!(binom(3, 4), BigUint::zero());
        assert_eq!(binom(3, -1), BigUint::zero());
        for p in 0..5 {
            for q in 0..5 {
                assert_eq!(binom(p + q, 0), BigUint::one());
            }
        }
        assert_eq!(binom(64, 32).to_string(), "1832624140942590534");
    }

    #[test]
    fn sequence_trimming_and_validation() {
        let s = BettiSequence::new(vec![1u32.into(), 2u32.into(), 0u32.into()]).unwrap();
        assert_eq!(s.to_u64s(), [1, 2]);
        assert!(BettiSequence::new(vec![2u32.into()]).is_err());
        assert!(BettiSequence::new(vec![]).is_err());
        assert_eq!(b(&[1, 3, 3, 1]).to_string(), "(1, 3, 3, 1)");
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(betti_convolution(1, &b(&[1, 1])), b(&[1, 2, 1]));
        assert_eq!(betti_convolution(0, &b(&[1, 4, 5, 2])), b(&[1, 4, 5, 2]));
        assert_eq!(betti_convolution(2, &b(&[1])), b(&[1, 2, 1]));
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(betti_tilde(1, 1, &b(&[1]), &b(&[1])).unwrap(), b(&[1, 1]));
        assert_eq!(
            betti_tilde(2, 1, &b(&[1]), &b(&[1])).unwrap(),
            b(&[1, 2, 1])
        );
        let t = betti_tilde(2, 2, &b(&[1, 1]), &b(&[1, 1])).unwrap();
        assert_eq!(t.get(1), 6u32.into());
        // The expression vanishes at l = 0.
        assert!(tilde_expression(2, 2, &b(&[1, 1]), &b(&[1, 1]), 0).is_zero());
    }

    #[test]
    fn fiber_examples() {
        assert_eq!(
            betti_fiber(2, 2, 1, 1, &b(&[1, 1]), &b(&[1, 1])).unwrap(),
            b(&[1, 3, 3, 1])
        );
        assert_eq!(
            betti_fiber(1, 1, 1, 1, &b(&[1, 1]), &b(&[1, 1])).unwrap(),
            b(&[1, 2, 1])
        );
        assert_eq!(
            betti_fiber(2, 2, 1, 0, &b(&[1, 2, 1]), &b(&[1, 1])).unwrap(),
            b(&[1, 5, 8, 5, 1])
        );
        // Zero ideals: the defining ideal is the hypersurface x1*y1.
        assert_eq!(
            betti_fiber(1, 1, 0, 0, &b(&[1]), &b(&[1])).unwrap(),
            b(&[1, 1])
        );
    }

    #[test]
    fn inconsistent_inputs_are_errors() {
        assert!(betti_fiber(1, 1, 0, 0, &b(&[1, 2, 1]), &b(&[1])).is_err());
        assert!(betti_fiber(1, 1, 2, 0, &b(&[1]), &b(&[1])).is_err());
        assert!(betti_tilde(1, 1, &b(&[1, 1, 1]), &b(&[1])).is_err());
        // p = 1 forces beta_1(R/I) >= 1; claiming (1) drives beta_2 negative.
        let err = betti_fiber(1, 1, 1, 0, &b(&[1]), &b(&[1])).unwrap_err();
        assert!(err.to_string().contains("is -1"), "{err}");
    }

    #[test]
    fn degenerate_koszul_small() {
        for n in 1..=6 {
            for np in 1..=6 {
                assert_eq!(
                    betti_fiber(n, np, n, np, &koszul(n), &koszul(np)).unwrap(),
                    koszul(n + np),
                    "n = {n}, n' = {np}"
                );
            }
        }
    }

    #[test]
    fn t_zero_evaluates_to_one() {
        for (n, np, p, q) in [(1, 1, 0, 0), (2, 3, 1, 2), (4, 4, 4, 0)] {
            let bi = koszul(p);
            let bip = koszul(q);
            assert!(fiber_expression(n, np, p, q, &bi, &bip, 0).is_one());
        }
    }
}
