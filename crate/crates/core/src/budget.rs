use serde::{Deserialize, Serialize};

use crate::par::Exec;

/// Per-call resource limits. Every search that can blow up consults one of
/// these caps and reports a budget overrun instead of running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Maximum number of steps in a valuation sweep: symbols evaluated for a
    /// full sweep, nodes visited for a pruned search.
    pub eval_steps: u64,
    /// Maximum number of elements a free algebra closure may reach.
    pub free_cap: usize,
    /// Maximum number of candidate filters inspected by a quotient sweep.
    pub filter_cap: usize,
    /// Largest power of the generator used by the witness search.
    pub power_cap: u32,
    /// Maximum number of elements of any algebra built from tables.
    pub algebra_cap: usize,
    #[serde(skip)]
    pub exec: Exec,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            eval_steps: 100_000_000,
            free_cap: 20_000,
            filter_cap: 1_000_000,
            power_cap: 3,
            algebra_cap: 4_096,
            exec: Exec::default(),
        }
    }
}

impl Budgets {
    /// Tiny limits, handy for exercising the exceeds-budget paths.
    pub fn trivial() -> Self {
        Budgets {
            eval_steps: 1_000,
            free_cap: 8,
            filter_cap: 8,
            power_cap: 1,
            algebra_cap: 64,
            exec: Exec::default(),
        }
    }

    pub fn sequential(mut self) -> Self {
        self.exec = Exec::Sequential;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}
