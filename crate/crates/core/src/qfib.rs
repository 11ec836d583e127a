//! q-Fibonacci polynomials `F_0 = F_1 = 1`, `F_n = F_{n-1} + q F_{n-2}`.
//!
//! Two independent generators are kept: the recurrence and the binomial
//! closed form `F_n(q) = sum_k binomial(n - k, k) q^k`. Neither calls the
//! other.

use num_bigint::BigInt;

use crate::combinatorics::binomial;
use crate::qseries::{Coeff, Poly};
use crate::report::{Quantity, VerificationReport};
use crate::IntPoly;

/// `F_n(q)` by iterating the recurrence with two rolling polynomials.
///
/// Only ring operations are needed, so this works over any [`Coeff`].
pub fn qfib_recursive<T: Coeff>(n: usize) -> Poly<T> {
    let mut prev = Poly::<T>::one();
    let mut cur = Poly::<T>::one();
    for _ in 1..n {
        let next = &cur + &prev.shift(1);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_n(q)` as `sum_{k=0}^{floor(n/2)} binomial(n - k, k) q^k`.
pub fn qfib_closed(n: usize) -> IntPoly {
    let n = n as i64;
    let coeffs = (0..=n / 2)
        .map(|k| binomial(n - k, k).expect("n - k >= 0 for k <= n/2"))
        .collect();
    Poly::new(coeffs)
}

/// `F_n(1)` from the closed form. Equals [`crate::combinatorics::fibonacci`].
pub fn qfib_at_one(n: usize) -> BigInt {
    qfib_closed(n).eval_at_one()
}

/// Recurrence and closed form produce the same `F_n(q)`.
pub fn check_proposition(n: usize) -> VerificationReport {
    VerificationReport::compare(
        "proposition",
        &[("n", n as u64)],
        Quantity::Coefficients(qfib_recursive::<BigInt>(n).into_coeffs()),
        Quantity::Coefficients(qfib_closed(n).into_coeffs()),
    )
}
