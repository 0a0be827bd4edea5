//! Integer scalar abstraction shared by every group-valued computation.
//!
//! All group elements in this crate carry integer data (linking vectors,
//! matrices, root-indexed vectors). They are generic over [`Scalar`], which
//! is any primitive signed integer. Arithmetic goes through the `*_exact`
//! helpers, which panic on overflow instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, FromPrimitive, PrimInt, Signed};
use serde::Serialize;

/// A bounded signed integer with overflow-checked arithmetic.
pub trait Scalar:
    PrimInt
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedNeg
    + FromPrimitive
    + Hash
    + Debug
    + Display
    + Default
    + Serialize
    + Send
    + Sync
    + 'static
{
    #[inline]
    #[track_caller]
    fn add_exact(self, rhs: Self) -> Self {
        match self.checked_add(&rhs) {
            Some(v) => v,
            None => overflow("addition", self, rhs),
        }
    }

    #[inline]
    #[track_caller]
    fn sub_exact(self, rhs: Self) -> Self {
        match self.checked_sub(&rhs) {
            Some(v) => v,
            None => overflow("subtraction", self, rhs),
        }
    }

    #[inline]
    #[track_caller]
    fn mul_exact(self, rhs: Self) -> Self {
        match self.checked_mul(&rhs) {
            Some(v) => v,
            None => overflow("multiplication", self, rhs),
        }
    }

    #[inline]
    #[track_caller]
    fn neg_exact(self) -> Self {
        match self.checked_neg() {
            Some(v) => v,
            None => overflow("negation", self, Self::zero()),
        }
    }

    /// Converts a small constant, panicking if it does not fit.
    #[inline]
    #[track_caller]
    fn from_i64_exact(v: i64) -> Self {
        match Self::from_i64(v) {
            Some(s) => s,
            None => panic!("integer overflow: {v} does not fit in the scalar type"),
        }
    }

    #[inline]
    fn is_even(self) -> bool {
        (self % (Self::one() + Self::one())).is_zero()
    }
}

impl<T> Scalar for T where
    T: PrimInt
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedNeg
        + FromPrimitive
        + Hash
        + Debug
        + Display
        + Default
        + Serialize
        + Send
        + Sync
        + 'static
{
}

#[cold]
#[track_caller]
fn overflow<S: Display>(op: &str, a: S, b: S) -> ! {
    panic!("integer overflow in {op} ({a}, {b})")
}

/// Exact sum of a slice.
#[track_caller]
pub fn sum_exact<S: Scalar>(xs: &[S]) -> S {
    xs.iter().fold(S::zero(), |acc, &x| acc.add_exact(x))
}
