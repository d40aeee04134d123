//! Work budgets for enumerations, overridable through the environment.

use crate::error::{Error, Result};

pub const ENUM_BUDGET_VAR: &str = "CRLAB_ENUM_BUDGET";
pub const SYND_BUDGET_VAR: &str = "CRLAB_SYND_BUDGET";
pub const SEARCH_BUDGET_VAR: &str = "CRLAB_SEARCH_BUDGET";

pub const DEFAULT_ENUM_BUDGET: u128 = 1 << 24;
pub const DEFAULT_SYND_BUDGET: u128 = 1 << 24;
pub const DEFAULT_SEARCH_BUDGET: u128 = 1 << 25;
/// Full-space oracle limit (q^n vectors).
pub const BRUTE_LIMIT: u128 = 1 << 20;

fn from_env(var: &str, default: u128) -> u128 {
    std::env::var(var)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

/// Maximum number of codewords enumerated directly.
pub fn enum_budget() -> u128 {
    from_env(ENUM_BUDGET_VAR, DEFAULT_ENUM_BUDGET)
}

/// Maximum number of syndromes held in a profile.
pub fn synd_budget() -> u128 {
    from_env(SYND_BUDGET_VAR, DEFAULT_SYND_BUDGET)
}

/// Maximum number of column multisets visited by the census.
pub fn search_budget() -> u128 {
    from_env(SEARCH_BUDGET_VAR, DEFAULT_SEARCH_BUDGET)
}

/// `q^e`, saturating.
pub fn power(q: u32, e: usize) -> u128 {
    (q as u128).checked_pow(e as u32).unwrap_or(u128::MAX)
}

pub(crate) fn require(what: &'static str, needed: u128, budget: u128, var: &'static str) -> Result<()> {
    if needed > budget {
        Err(Error::Budget {
            what,
            needed,
            budget,
            var,
        })
    } else {
        Ok(())
    }
}
