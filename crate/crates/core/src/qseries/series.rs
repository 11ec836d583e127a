use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{convolve, Coeff, Poly};
use crate::error::{Error, Result};

/// Power series known modulo `q^order`.
///
/// Holds exactly `order` coefficients. Binary operations on series of
/// different orders produce a result at the smaller order. The derived
/// `PartialEq` is structural (same order, same coefficients); use
/// [`Series::agrees_with`] for equality modulo the common order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Series<T> {
    /// The order is `coeffs.len()`, which must be positive.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(Series { coeffs })
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::new(vec![T::zero(); order])
    }

    /// `1 + O(q^order)`.
    pub fn one(order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        s.coeffs[0] = T::one();
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^k`, or `None` past the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    /// Drop coefficients at and beyond `q^order`. Orders above the current
    /// one are clamped; the unknown tail is never invented.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let order = order.min(self.order());
        Ok(Series {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    /// Multiply by `q^s`, keeping the order.
    pub fn shift(&self, s: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![T::zero(); s.min(n)];
        coeffs.extend(self.coeffs.iter().take(n.saturating_sub(s)).cloned());
        Series { coeffs }
    }

    /// Multiplicative inverse, for constant term `+1` or `-1`.
    ///
    /// `b_0 = a_0` and `b_k = -a_0 * sum_{j=1..=k} a_j b_{k-j}`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let unit = if a0.is_one() {
            T::one()
        } else if *a0 == -T::one() {
            -T::one()
        } else {
            return Err(Error::NotInvertible);
        };
        let n = self.order();
        let mut inv: Vec<T> = Vec::with_capacity(n);
        inv.push(unit.clone());
        for k in 1..n {
            let mut acc = T::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[j].clone() * inv[k - j].clone();
            }
            inv.push(-(unit.clone() * acc));
        }
        Ok(Series { coeffs: inv })
    }

    /// `self / den` at the common order.
    pub fn try_div(&self, den: &Self) -> Result<Self> {
        Ok(self * &den.inverse()?)
    }

    /// Index of the first coefficient where the two series differ, looking
    /// only below the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Equality modulo `q^min(order)`.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// The retained coefficients as a polynomial.
    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(self.coeffs.clone())
    }
}

impl<T: Coeff> Mul for &Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: &Series<T>) -> Series<T> {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: convolve(&self.coeffs, &rhs.coeffs, order),
        }
    }
}

impl<T: Coeff> Add for &Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: &Series<T>) -> Series<T> {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Sub for &Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: &Series<T>) -> Series<T> {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Neg for &Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        Series {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

impl<T: Coeff> Mul for Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: Series<T>) -> Series<T> {
        &self * &rhs
    }
}

impl<T: Coeff> Add for Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: Series<T>) -> Series<T> {
        &self + &rhs
    }
}

impl<T: Coeff> Sub for Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: Series<T>) -> Series<T> {
        &self - &rhs
    }
}

impl<T: Coeff> Neg for Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        -&self
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({:?} + O(q^{}))", self.coeffs, self.coeffs.len())
    }
}
