use crate::error::{Error, Result};

/// Default cap on codeword visits for exhaustive enumeration.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 30;
/// Default cap on syndrome-table entries (one byte each).
pub const DEFAULT_SYNDROME_BUDGET: u64 = 1 << 28;

/// Limits for the exhaustive engines. Every operation that would exceed a
/// budget returns [`Error::BudgetExceeded`] instead of truncating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub enumeration: u64,
    pub syndrome_entries: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            enumeration: DEFAULT_ENUM_BUDGET,
            syndrome_entries: DEFAULT_SYNDROME_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(enumeration: u64, syndrome_entries: u64) -> Result<Self> {
        if enumeration == 0 || syndrome_entries == 0 {
            return Err(Error::InvalidParameter("budgets must be positive".into()));
        }
        Ok(Self {
            enumeration,
            syndrome_entries,
        })
    }

    /// Checks that `2^log2` visits fit in the enumeration budget.
    pub fn check_enum_pow2(&self, log2: usize) -> Result<()> {
        check(pow2(log2), self.enumeration)
    }

    pub fn check_enum(&self, needed: u128) -> Result<()> {
        check(needed, self.enumeration)
    }

    pub fn check_syndromes_pow2(&self, log2: usize) -> Result<()> {
        check(pow2(log2), self.syndrome_entries)
    }

    pub fn allows_enum_pow2(&self, log2: usize) -> bool {
        self.check_enum_pow2(log2).is_ok()
    }

    pub fn allows_syndromes_pow2(&self, log2: usize) -> bool {
        self.check_syndromes_pow2(log2).is_ok()
    }
}

fn pow2(log2: usize) -> u128 {
    if log2 >= 127 {
        u128::MAX
    } else {
        1u128 << log2
    }
}

fn check(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        Err(Error::BudgetExceeded {
            needed,
            budget: budget as u128,
        })
    } else {
        Ok(())
    }
}
