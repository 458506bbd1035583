use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::formulas::{binom, BettiSequence};

/// Ranks of the free modules of a complex, indexed by homological degree,
/// with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankSequence(Vec<BigUint>);

impl RankSequence {
    pub fn new(mut ranks: Vec<BigUint>) -> Self {
        while ranks.len() > 1 && ranks.last().is_some_and(Zero::is_zero) {
            ranks.pop();
        }
        RankSequence(ranks)
    }

    pub fn from_u64s(ranks: &[u64]) -> Self {
        Self::new(ranks.iter().map(|&r| BigUint::from(r)).collect())
    }

    pub fn ranks(&self) -> &[BigUint] {
        &self.0
    }

    pub fn get(&self, i: usize) -> BigUint {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_u64s(&self) -> Vec<u64> {
        BettiSequence::new(self.0.clone())
            .map(|b| b.to_u64s())
            .unwrap_or_default()
    }

    /// True when every rank is at least the corresponding Betti number.
    pub fn dominates(&self, betti: &BettiSequence) -> bool {
        (0..self.len().max(betti.len())).all(|i| self.get(i) >= betti.get(i))
    }
}

impl From<&BettiSequence> for RankSequence {
    fn from(b: &BettiSequence) -> Self {
        RankSequence::new(b.values().to_vec())
    }
}

impl fmt::Display for RankSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Ranks `C(r, i)` of the Koszul complex on `r` elements.
pub fn koszul_ranks(r: usize) -> RankSequence {
    RankSequence::new((0..=r as i64).map(|i| binom(r as i64, i)).collect())
}

/// Ranks of the star product: `X_0 Y_0` in degree 0 and
/// `Σ_{i+j=d+1, i,j>=1} X_i Y_j` in degree `d >= 1`.
pub fn star_ranks(x: &RankSequence, y: &RankSequence) -> RankSequence {
    let top = (x.len() + y.len()).saturating_sub(3);
    let mut out = vec![x.get(0) * y.get(0)];
    for d in 1..=top {
        let mut acc = BigUint::zero();
        for i in 1..=d {
            acc += x.get(i) * y.get(d + 1 - i);
        }
        out.push(acc);
    }
    RankSequence::new(out)
}

/// `Σ_{i+j=d, i>=1} S_i Y_j`: the tensor product with the degree-0 part of
/// `S` dropped, after the shift down and the cone's shift back up.
fn truncated_tensor(s: &RankSequence, y: &RankSequence, d: usize) -> BigUint {
    (1..=d).map(|i| s.get(i) * y.get(d - i)).sum()
}

/// Ranks of the mapping cone assembled from the star product of the
/// resolutions `X`, `Y` of `R/(x)`, `R/(y)` and the shifted tensor products
/// built from the resolutions `S`, `T` of `R/I`, `R/I'`.
///
/// These are the Betti numbers of the fiber product only when `I ⊆ (x)^2`
/// and `I' ⊆ (y)^2`; otherwise the cone is a non-minimal resolution.
pub fn cone_ranks(
    s: &RankSequence,
    t: &RankSequence,
    x: &RankSequence,
    y: &RankSequence,
) -> RankSequence {
    let star = star_ranks(x, y);
    let top = star.len().max(s.len() + y.len()).max(x.len() + t.len());
    let mut out = vec![BigUint::one()];
    for d in 1..=top {
        out.push(star.get(d) + truncated_tensor(s, y, d) + truncated_tensor(t, x, d));
    }
    RankSequence::new(out)
}
