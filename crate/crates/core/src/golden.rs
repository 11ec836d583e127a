//! The q-golden ratio `phi(q) = (1 + sqrt(1 + 4q)) / 2` and its reciprocal
//! as exact integer series, and the checks that successive q-Fibonacci
//! ratios converge to it.
//!
//! `phi(q)` is assembled from Catalan numbers instead of a formal square
//! root: `phi(q) = 1 + q C(-q)` and `1 / phi(q) = C(-q)`, with `C(x)` the
//! Catalan generating function. Both are validated by the quadratic
//! `phi^2 - phi - q = 0` in the tests.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::combinatorics::{catalan, fibonacci};
use crate::error::{Error, Result};
use crate::qfib::qfib_closed;
use crate::report::{Quantity, VerificationReport};
use crate::TruncatedSeries;

fn signed_catalan(k: usize) -> BigInt {
    let c = catalan(k);
    if k.is_multiple_of(2) {
        c
    } else {
        -c
    }
}

/// `phi(q) = 1 + sum_{k>=1} (-1)^(k-1) C_(k-1) q^k` modulo `q^order`.
pub fn phi_series(order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut coeffs = Vec::with_capacity(order);
    coeffs.push(BigInt::from(1));
    coeffs.extend((1..order).map(|k| signed_catalan(k - 1)));
    TruncatedSeries::new(coeffs)
}

/// `1 / phi(q) = sum_k (-1)^k C_k q^k` modulo `q^order`.
pub fn phi_reciprocal_series(order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    TruncatedSeries::new((0..order).map(signed_catalan).collect())
}

/// `F_(n+1)(q) / F_n(q)` modulo `q^order`.
pub fn ratio_series(n: usize, order: usize) -> Result<TruncatedSeries> {
    let num = qfib_closed(n + 1).to_series(order)?;
    let den = qfib_closed(n).to_series(order)?;
    num.try_div(&den)
}

/// `F_n(q) / F_(n+1)(q)` modulo `q^order`.
pub fn reciprocal_ratio_series(n: usize, order: usize) -> Result<TruncatedSeries> {
    let num = qfib_closed(n).to_series(order)?;
    let den = qfib_closed(n + 1).to_series(order)?;
    num.try_div(&den)
}

fn coefficients(s: TruncatedSeries) -> Quantity {
    Quantity::Coefficients(s.into_coeffs())
}

/// Compare `F_(n+1)/F_n` with `phi(q)` modulo `q^order`.
///
/// Agreement is only promised for `order <= n + 1`; at larger orders the
/// report records where the two series part ways.
pub fn check_theorem_at_order(n: usize, order: usize) -> Result<VerificationReport> {
    Ok(VerificationReport::compare(
        "theorem",
        &[("n", n as u64), ("order", order as u64)],
        coefficients(ratio_series(n, order)?),
        coefficients(phi_series(order)?),
    ))
}

/// `F_(n+1)(q) / F_n(q) = phi(q) + O(q^(n+1))`.
pub fn check_theorem(n: usize) -> VerificationReport {
    VerificationReport::compare(
        "theorem",
        &[("n", n as u64)],
        coefficients(ratio_series(n, n + 1).expect("order n + 1 is positive")),
        coefficients(phi_series(n + 1).expect("order n + 1 is positive")),
    )
}

/// `F_n(q) / F_(n+1)(q) = sum_k (-1)^k C_k q^k + O(q^(n+1))`.
pub fn check_reciprocal_form(n: usize) -> VerificationReport {
    VerificationReport::compare(
        "reciprocal",
        &[("n", n as u64)],
        coefficients(reciprocal_ratio_series(n, n + 1).expect("order n + 1 is positive")),
        coefficients(phi_reciprocal_series(n + 1).expect("order n + 1 is positive")),
    )
}

/// First power of `q` at which `F_(n+1)/F_n` and `phi(q)` differ, searched
/// up to `q^(max_order - 1)`.
pub fn first_disagreement(n: usize, max_order: usize) -> Result<Option<usize>> {
    Ok(ratio_series(n, max_order)?.first_difference(&phi_series(max_order)?))
}

/// Fixed-point decimal `mantissa / 10^scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledDecimal {
    pub mantissa: BigInt,
    pub scale: u32,
}

impl ScaledDecimal {
    pub fn unit(&self) -> BigInt {
        BigInt::from(10).pow(self.scale)
    }

    /// `|self - other|` in units of `10^-scale`; both must share a scale.
    pub fn abs_diff_units(&self, other: &ScaledDecimal) -> BigInt {
        assert_eq!(self.scale, other.scale, "scales differ");
        (&self.mantissa - &other.mantissa).abs()
    }
}

impl fmt::Display for ScaledDecimal {
    /// Trailing fractional zeros are dropped, keeping at least one digit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let (int, frac) = self.mantissa.abs().div_rem(&self.unit());
        let mut digits = format!("{:0>width$}", frac.to_string(), width = self.scale as usize);
        while digits.len() > 1 && digits.ends_with('0') {
            digits.pop();
        }
        if digits.is_empty() {
            digits.push('0');
        }
        write!(f, "{sign}{int}.{digits}")
    }
}

/// `F_(n+1) / F_n` truncated to `scale` decimal digits.
pub fn golden_ratio_numeric(n: usize, scale: u32) -> Result<ScaledDecimal> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            min: 1,
            value: 0,
        });
    }
    let unit = BigInt::from(10).pow(scale);
    let mantissa = fibonacci(n + 1) * unit / fibonacci(n);
    Ok(ScaledDecimal { mantissa, scale })
}

/// `(1 + sqrt 5) / 2` truncated to `scale` digits, via an integer square root.
pub fn golden_ratio_reference(scale: u32) -> ScaledDecimal {
    let unit = BigInt::from(10).pow(scale);
    let sqrt5 = (BigInt::from(5) * &unit * &unit).sqrt();
    ScaledDecimal {
        mantissa: (unit + sqrt5) / 2,
        scale,
    }
}
