use std::fmt;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Coefficient and count type for every exact computation in this crate.
///
/// The bound collects what the counting formulas actually need: ring and
/// Euclidean operations ([`Integer`]), signs (expansions of `(t-1)^k` go
/// negative), conversions from machine integers, and printing. Everything is
/// integer-like; there is deliberately no floating-point instantiation, since
/// every identity checked here is an exact equality.
///
/// `num_bigint::BigInt` is the canonical choice (see the [`crate::Int`]
/// aliases); `i64`/`i128` work wherever the rank is small enough that no
/// intermediate value overflows.
pub trait Scalar:
    Integer + Signed + FromPrimitive + ToPrimitive + Clone + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Integer + Signed + FromPrimitive + ToPrimitive + Clone + fmt::Debug + fmt::Display
{
}

/// Converts a machine integer into `T`.
///
/// Panics if `T` cannot hold the value; the scalar types this crate is meant
/// for (`BigInt`, `i64`, `i128`) always can.
pub(crate) fn scalar_from_u32<T: Scalar>(v: u32) -> T {
    T::from_u32(v).expect("scalar type too narrow for a u32 count")
}

pub(crate) fn scalar_from_i64<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type too narrow for an i64 value")
}

pub(crate) fn scalar_from_usize<T: Scalar>(v: usize) -> T {
    T::from_usize(v).expect("scalar type too narrow for a usize count")
}
