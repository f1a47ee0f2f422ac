use serde::Serialize;

use crate::count::BigCount;
use crate::error::{Error, Result};

/// One named summand of a formula, as stated and as derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Term {
    pub name: &'static str,
    pub stated: BigCount,
    pub exact: BigCount,
}

impl Term {
    pub(crate) fn shared(name: &'static str, value: BigCount) -> Self {
        Term {
            name,
            stated: value,
            exact: value,
        }
    }

    /// `stated - exact`.
    pub fn delta(&self) -> Result<i128> {
        self.stated.delta(self.exact)
    }
}

/// `Σ (stated - exact)` over the terms.
pub fn total_delta(terms: &[Term]) -> Result<i128> {
    terms.iter().try_fold(0i128, |acc, t| {
        acc.checked_add(t.delta()?).ok_or(Error::Overflow)
    })
}
