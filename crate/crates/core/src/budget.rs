//! Search budgets shared by the exponential kernels.

use std::time::{Duration, Instant};

/// Default node limit for exact searches.
pub const DEFAULT_MAX_NODES: u64 = 200_000_000;

/// Limits for an exhaustive search. A search that runs out reports
/// `BudgetExceeded` instead of a value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: Some(DEFAULT_MAX_NODES),
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self {
            max_nodes: None,
            time_limit: None,
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            time_limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

/// Returned by [`Meter::tick`] once the budget is spent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exhausted;

/// Running node counter for one search.
#[derive(Debug)]
pub struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Meter {
    pub fn new(budget: &Budget) -> Self {
        Self {
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.time_limit.map(|d| Instant::now() + d),
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Exhausted);
        }
        if self.nodes & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Exhausted);
                }
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
