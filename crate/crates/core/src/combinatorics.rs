//! Binomial coefficients, Catalan numbers and Fibonacci numbers.
//!
//! Fibonacci numbers use the indexing `F_0 = F_1 = 1`, so `F_n` is the value
//! of the q-Fibonacci polynomial `F_n(q)` at `q = 1`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `binomial(a, b)` for `a >= 0`, with value 0 whenever `b < 0` or `b > a`.
///
/// Uses the multiplicative row formula; each partial product
/// `C(a, i) = C(a, i - 1) * (a - i + 1) / i` is itself a binomial, so every
/// division is exact.
pub fn binomial(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::NegativeUpperIndex(a));
    }
    if b < 0 || b > a {
        return Ok(BigInt::zero());
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 1..=b {
        acc *= a - i + 1;
        acc /= i;
    }
    Ok(acc)
}

fn catalan_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// `C_k` from the convolution recurrence `C_{k+1} = sum_i C_i C_{k-i}`.
///
/// Values are memoized in a process-wide table that only ever grows.
pub fn catalan(k: usize) -> BigInt {
    let table = catalan_table();
    {
        let read = table.read().unwrap_or_else(|e| e.into_inner());
        if let Some(c) = read.get(k) {
            return c.clone();
        }
    }
    let mut write = table.write().unwrap_or_else(|e| e.into_inner());
    while write.len() <= k {
        let next = write.len() - 1;
        let c: BigInt = (0..=next).map(|i| &write[i] * &write[next - i]).sum();
        write.push(c);
    }
    write[k].clone()
}

/// `C_k = binomial(2k, k) / (k + 1)`, independent of [`catalan`].
pub fn catalan_closed(k: usize) -> Result<BigInt> {
    let k = k as i64;
    let central = binomial(2 * k, k)?;
    let (quot, rem) = central.div_rem(&BigInt::from(k + 1));
    if !rem.is_zero() {
        return Err(Error::InexactDivision("catalan_closed"));
    }
    Ok(quot)
}

/// `F_n` with `F_0 = F_1 = 1`.
pub fn fibonacci(n: usize) -> BigInt {
    let mut prev = BigInt::one();
    let mut cur = BigInt::one();
    for _ in 1..n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
