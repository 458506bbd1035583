//! Exact rank computations.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::{Field, Scalar};

/// Rank of a dense matrix over its coefficient field by Gaussian elimination.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][col].inv();
        for i in r + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            for j in col..ncols {
                let d = &f * &m[r][j];
                m[i][j] = &m[i][j] - &d;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Rank of an integer matrix, read over `field`.
///
/// Over the rationals this is fraction-free (Bareiss) elimination, first in
/// checked `i128` and on overflow in arbitrary precision. Over `GF(c)` the
/// entries are reduced modulo `c`.
pub fn rank_integer(rows: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Rationals => {
            let wide: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| v as i128).collect())
                .collect();
            bareiss_i128(wide).unwrap_or_else(|| {
                let big: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                    .collect();
                bareiss_big(big)
            })
        }
        Field::Prime(c) => rank_mod(rows, c),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let p = m[r][col];
        for i in r + 1..m.len() {
            let a = m[i][col];
            for j in col..ncols {
                let v = p
                    .checked_mul(m[i][j])?
                    .checked_sub(a.checked_mul(m[r][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = p;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let p = m[r][col].clone();
        for i in r + 1..m.len() {
            let a = m[i][col].clone();
            for j in col..ncols {
                let v = &p * &m[i][j] - &a * &m[r][j];
                m[i][j] = v / &prev;
            }
        }
        prev = p;
        r += 1;
    }
    r
}

fn rank_mod(rows: &[Vec<i64>], c: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(c as i64) as u64).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = Scalar::Fp {
            value: m[r][col],
            modulus: c,
        }
        .inv();
        let Scalar::Fp { value: inv, .. } = inv else {
            unreachable!()
        };
        for i in r + 1..m.len() {
            let f = m[i][col] * inv % c;
            if f == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = f * m[r][j] % c;
                m[i][j] = (m[i][j] + c - sub) % c;
            }
        }
        r += 1;
    }
    r
}
