//! The alternating composition sum
//!
//! ```text
//! sum over compositions (m_1, ..., m_t) of m of
//!     (-1)^t binomial(n - m_1, m_1 - 1) * prod_{i >= 2} binomial(n - m_i, m_i)
//!   = (-1)^m C_(m-1)          for 1 <= m <= n
//! ```
//!
//! computed three ways: directly over all compositions, as the `q^m`
//! coefficient of `-q F_(n-1)(q) / F_n(q)`, and through the truncated
//! geometric expansion `-q F_(n-1) * sum_t (-(F_n - 1))^t`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{binomial, catalan};
use crate::error::{Error, Result};
use crate::qfib::qfib_closed;
use crate::report::{Quantity, VerificationReport};
use crate::{IntPoly, TruncatedSeries};

/// Ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic stream of the compositions of `m`, starting at `(1, ..., 1)`.
///
/// Successor: pop the last part `l`, add one to the new last part, then
/// append `l - 1` ones. The single-part composition `(m)` is last.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        if current.len() > 1 {
            let mut succ = current.clone();
            let last = succ.pop().expect("len > 1");
            *succ.last_mut().expect("len > 1") += 1;
            succ.extend(std::iter::repeat_n(1, last as usize - 1));
            self.next = Some(succ);
        }
        Some(Composition(current))
    }
}

pub fn compositions(m: u32) -> Result<Compositions> {
    if m < 1 {
        return Err(Error::OutOfRange {
            name: "m",
            min: 1,
            value: m as u64,
        });
    }
    Ok(Compositions {
        next: Some(vec![1; m as usize]),
    })
}

fn require_positive(name: &'static str, value: u64) -> Result<()> {
    if value < 1 {
        return Err(Error::OutOfRange {
            name,
            min: 1,
            value,
        });
    }
    Ok(())
}

/// `binomial(n - part, lower)`, taken as 0 when `part > n`.
fn part_factor(n: u64, part: u64, lower: i64) -> BigInt {
    if part > n {
        return BigInt::zero();
    }
    binomial((n - part) as i64, lower).expect("upper index is non-negative")
}

/// Direct alternating sum over every composition of `m`.
///
/// A single-part composition contributes `-binomial(n - m, m - 1)`: the
/// product over the remaining parts is empty. For `m > n` parts larger than
/// `n` contribute a zero factor; nothing is claimed about that regime.
pub fn sw_lhs(n: u64, m: u64) -> Result<BigInt> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let m32 = u32::try_from(m).map_err(|_| Error::OutOfRange {
        name: "m",
        min: 1,
        value: m,
    })?;
    // first[j] = binomial(n - j, j - 1), rest[j] = binomial(n - j, j)
    let first: Vec<BigInt> = (0..=m)
        .map(|j| {
            if j == 0 {
                BigInt::zero()
            } else {
                part_factor(n, j, j as i64 - 1)
            }
        })
        .collect();
    let rest: Vec<BigInt> = (0..=m).map(|j| part_factor(n, j, j as i64)).collect();

    let mut total = BigInt::zero();
    for comp in compositions(m32)? {
        let parts = comp.parts();
        let mut term = first[parts[0] as usize].clone();
        for &p in &parts[1..] {
            if term.is_zero() {
                break;
            }
            term *= &rest[p as usize];
        }
        if parts.len() % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}

/// `(-1)^m C_(m-1)`.
pub fn sw_rhs(m: u64) -> Result<BigInt> {
    require_positive("m", m)?;
    let c = catalan((m - 1) as usize);
    Ok(if m.is_multiple_of(2) { c } else { -c })
}

/// `sum_{k>=1} binomial(n - k, k - 1) q^k`, the generating polynomial of the
/// first factor. Equals `q F_(n-1)(q)`.
pub fn first_factor_poly(n: u64) -> IntPoly {
    let n = n as i64;
    IntPoly::new(
        (0..=(n + 1) / 2)
            .map(|k| {
                if k == 0 {
                    BigInt::zero()
                } else {
                    binomial(n - k, k - 1).unwrap()
                }
            })
            .collect(),
    )
}

/// `F_n(q) - 1`, the generating polynomial of every later factor.
pub fn tail_factor_poly(n: u64) -> IntPoly {
    &qfib_closed(n as usize) - &IntPoly::one()
}

/// Coefficient of `q^m` in `-q F_(n-1)(q) / F_n(q)`.
pub fn sw_gf_coefficient(n: u64, m: u64) -> Result<BigInt> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let order = m as usize + 1;
    let num = qfib_closed(n as usize - 1).to_series(order)?;
    let den = qfib_closed(n as usize).to_series(order)?;
    let g = -num.try_div(&den)?.shift(1);
    Ok(g.coeffs()[m as usize].clone())
}

/// Coefficient of `q^m` in `-q F_(n-1) * sum_{t=0}^{m} (-(F_n - 1))^t`.
///
/// `F_n - 1` has no constant term, so powers beyond `t = m` only reach
/// degrees above `m` and the truncated sum is exact there.
pub fn sw_geometric(n: u64, m: u64) -> Result<BigInt> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let order = m as usize + 1;
    let ratio = -tail_factor_poly(n).to_series(order)?;
    let mut power = TruncatedSeries::one(order)?;
    let mut sum = TruncatedSeries::zero(order)?;
    for _ in 0..=m {
        sum = &sum + &power;
        power = &power * &ratio;
    }
    let prefactor = -qfib_closed(n as usize - 1).shift(1).to_series(order)?;
    let g = &prefactor * &sum;
    Ok(g.coeffs()[m as usize].clone())
}

/// All four routes must agree. Requires `1 <= m <= n`.
pub fn check_sw(n: u64, m: u64) -> Result<VerificationReport> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    if m > n {
        return Err(Error::HypothesisViolated { n, m });
    }
    Ok(VerificationReport::compare(
        "sw",
        &[("n", n), ("m", m)],
        Quantity::Scalar(sw_lhs(n, m)?),
        Quantity::Scalar(sw_rhs(m)?),
    )
    .with_route(
        "generating_function",
        Quantity::Scalar(sw_gf_coefficient(n, m)?),
    )
    .with_route("geometric", Quantity::Scalar(sw_geometric(n, m)?)))
}
