//! Fraction-free (Bareiss) determinants over the integers.
//!
//! The fast path runs in `i128` with checked arithmetic and falls back to
//! arbitrary precision on overflow. Every intermediate of Bareiss elimination
//! is itself a minor of the input, so the division steps are exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) fn determinant(rows: &[Vec<i64>]) -> BigInt {
    match bareiss_i128(rows) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(rows),
    }
}

fn bareiss_i128(rows: &[Vec<i64>]) -> Option<i128> {
    let n = rows.len();
    if n == 0 {
        return Some(1);
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Some(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    m[n - 1][n - 1].checked_mul(sign)
}

fn bareiss_big(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(swap) => {
                    m.swap(k, swap);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
