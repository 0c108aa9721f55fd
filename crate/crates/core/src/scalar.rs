use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Neg, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, One, Zero};

/// Exact coefficient ring for group-ring and Laurent arithmetic.
///
/// Implemented for every type with the listed operations; in practice
/// `BigInt` (the default), `i64` for small fast checks, and `BigRational`
/// when a coefficient field is wanted.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + FromStr
    + Eq
    + Ord
    + Hash
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn is_unit_sign(&self) -> bool {
        *self == Self::one() || *self == -Self::one()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn from_int(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("coefficient ring contains the integers")
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + FromStr
        + Eq
        + Ord
        + Hash
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Send
        + Sync
        + 'static
{
}
