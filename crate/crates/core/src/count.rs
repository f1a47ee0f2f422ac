//! Exact, overflow-checked counters for index values.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Nonnegative exact integer backed by `u128`.
///
/// Every arithmetic operation is checked; overflow surfaces as
/// [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(u128);

impl BigCount {
    pub const ZERO: BigCount = BigCount(0);

    pub const fn new(value: u128) -> Self {
        BigCount(value)
    }

    pub const fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: impl Into<BigCount>) -> Result<BigCount> {
        self.0
            .checked_add(rhs.into().0)
            .map(BigCount)
            .ok_or(Error::Overflow)
    }

    pub fn checked_mul(self, rhs: impl Into<BigCount>) -> Result<BigCount> {
        self.0
            .checked_mul(rhs.into().0)
            .map(BigCount)
            .ok_or(Error::Overflow)
    }

    /// Signed difference `self - rhs`.
    pub fn delta(self, rhs: BigCount) -> Result<i128> {
        let a = i128::try_from(self.0).map_err(|_| Error::Overflow)?;
        let b = i128::try_from(rhs.0).map_err(|_| Error::Overflow)?;
        a.checked_sub(b).ok_or(Error::Overflow)
    }

    /// Multiplies a list of factors, failing on the first overflow.
    pub fn product<I, T>(factors: I) -> Result<BigCount>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigCount>,
    {
        factors
            .into_iter()
            .try_fold(BigCount(1), |acc, f| acc.checked_mul(f))
    }

    /// Sums fallible terms, stopping on the first error.
    pub fn try_sum<I>(terms: I) -> Result<BigCount>
    where
        I: IntoIterator<Item = Result<BigCount>>,
    {
        terms
            .into_iter()
            .try_fold(BigCount::ZERO, |acc, t| acc.checked_add(t?))
    }
}

macro_rules! from_unsigned {
    ($($t:ty),*) => {
        $(impl From<$t> for BigCount {
            fn from(v: $t) -> Self {
                BigCount(v as u128)
            }
        })*
    };
}

from_unsigned!(u8, u16, u32, u64, usize, u128);

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u128(self.0)
    }
}
