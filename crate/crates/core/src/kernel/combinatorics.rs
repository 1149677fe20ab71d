//! Factorials, binomial coefficients and the Beta function at positive integers.
//!
//! Factorials and Pascal rows are memoized in process-wide append-only tables.
//! A fill only ever pushes values that are a pure function of the index, so
//! concurrent callers racing on the same fill observe identical results.

use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

static FACTORIALS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());
static PASCAL_ROWS: RwLock<Vec<Vec<BigUint>>> = RwLock::new(Vec::new());

/// Rows above this index are computed on demand instead of cached.
const PASCAL_CACHE_LIMIT: usize = 512;

pub fn factorial(n: usize) -> BigUint {
    if let Some(v) = FACTORIALS.read().expect("factorial cache poisoned").get(n) {
        return v.clone();
    }
    let mut table = FACTORIALS.write().expect("factorial cache poisoned");
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n {
        let i = table.len();
        let next = &table[i - 1] * BigUint::from(i);
        table.push(next);
    }
    table[n].clone()
}

/// `C(n, k)`, zero outside `0..=n`.
pub fn binomial(n: usize, k: i64) -> BigUint {
    if k < 0 || k as u64 > n as u64 {
        return BigUint::zero();
    }
    let k = k as usize;
    if n > PASCAL_CACHE_LIMIT {
        return binomial_multiplicative(n, k);
    }
    if let Some(row) = PASCAL_ROWS.read().expect("pascal cache poisoned").get(n) {
        return row[k].clone();
    }
    let mut rows = PASCAL_ROWS.write().expect("pascal cache poisoned");
    if rows.is_empty() {
        rows.push(vec![BigUint::one()]);
    }
    while rows.len() <= n {
        let prev = rows.last().expect("non-empty");
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigUint::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(BigUint::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

fn binomial_multiplicative(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(factorial(n)))
}

pub fn binomial_q(n: usize, k: usize) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n, k as i64)))
}

/// `B(p, q) = (p-1)!(q-1)!/(p+q-1)!` for positive integers.
pub fn beta_int(p: usize, q: usize) -> Result<Rational> {
    if p == 0 || q == 0 {
        return Err(Error::BetaPole { p, q });
    }
    Ok(Rational::new(
        BigInt::from(factorial(p - 1) * factorial(q - 1)),
        BigInt::from(factorial(p + q - 1)),
    ))
}
