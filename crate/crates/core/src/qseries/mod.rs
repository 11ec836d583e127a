//! Dense polynomials and truncated power series in one variable `q`.
//!
//! Both types are generic over the coefficient ring. Only ring operations
//! are ever used, so any exact `num-traits` integer or rational type works;
//! series inversion is restricted to constant term `+1` or `-1` so that it
//! never needs a division.

mod poly;
mod series;

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

pub use poly::Poly;
pub use series::Series;

/// Coefficient ring for [`Poly`] and [`Series`].
pub trait Coeff:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// `sum_{i+j=k} a_i b_j` for every `k < len`.
pub(crate) fn convolve<T: Coeff>(a: &[T], b: &[T], len: usize) -> Vec<T> {
    let mut out = vec![T::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}
