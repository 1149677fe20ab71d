//! The scalar abstraction the polynomial and series containers are written against.
//!
//! Everything in this crate that produces a number for the number-theoretic objects
//! uses [`Rational`](crate::Rational). The containers themselves only need ring
//! operations plus division by small integers (for antiderivatives), so they are
//! generic and work equally with `f64` when an approximate cross-check is handy.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Field-like scalar: ring operations, negation, and exact embedding of small integers.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("small integer must embed in the scalar type")
    }

    fn from_i64_exact(n: i64) -> Self {
        Self::from_i64(n).expect("small integer must embed in the scalar type")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}

/// `base^exp` by repeated squaring, with `0^0 = 1`.
///
/// This is the only power routine used when a zero base can meet a zero
/// exponent, so the convention lives in exactly one place.
pub fn pow_u32<T: Scalar>(base: &T, exp: u32) -> T {
    let mut result = T::one();
    if exp == 0 {
        return result;
    }
    let mut acc = base.clone();
    let mut e = exp;
    loop {
        if e & 1 == 1 {
            result = result * acc.clone();
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        acc = acc.clone() * acc;
    }
    result
}

/// `(-1)^n` as a scalar.
pub fn sign_pow<T: Scalar>(n: usize) -> T {
    if n.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}
