//! Integer coefficient rings for the sparse algebra elements.
//!
//! Every arithmetic step goes through the checked operations so that
//! overflow surfaces as [`Error::Overflow`](crate::Error::Overflow) instead of
//! wrapping.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, One, Zero};

use crate::error::{Error, Result};

/// Exact integer scalar usable as a coefficient.
///
/// Blanket-implemented for every type with checked ring operations, so
/// `i32`, `i64`, `i128` (and big integers) all qualify.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedNeg
    + Send
    + Sync
{
    fn try_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow)
    }

    fn try_sub(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other).ok_or(Error::Overflow)
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::Overflow)
    }

    fn try_neg(&self) -> Result<Self> {
        self.checked_neg().ok_or(Error::Overflow)
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedNeg
        + Send
        + Sync
{
}
