use crate::error::{Error, Result};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

/// Shared resource budget for the exponential searches.
///
/// Counts search-tree nodes and optionally enforces a wall-clock deadline.
/// The clock is consulted once every `CLOCK_STRIDE` ticks.  Safe to share
/// across worker threads.
pub struct Budget {
    start: Instant,
    time_limit_ms: Option<u64>,
    node_cap: u64,
    nodes: AtomicU64,
}

const CLOCK_STRIDE: u64 = 4096;

impl Budget {
    pub fn new(time_limit_ms: Option<u64>, node_cap: Option<u64>) -> Self {
        Budget {
            start: Instant::now(),
            time_limit_ms,
            node_cap: node_cap.unwrap_or(u64::MAX),
            nodes: AtomicU64::new(0),
        }
    }

    /// A budget that never trips.
    pub fn unlimited() -> Self {
        Budget::new(None, None)
    }

    /// Register one unit of work; errors once the budget is exhausted.
    pub fn tick(&self, what: &str) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.node_cap {
            return Err(Error::BudgetExceeded(format!(
                "{what}: node cap {} reached",
                self.node_cap
            )));
        }
        if n % CLOCK_STRIDE == 0 {
            if let Some(ms) = self.time_limit_ms {
                if self.start.elapsed().as_millis() as u64 > ms {
                    return Err(Error::BudgetExceeded(format!(
                        "{what}: time limit {ms} ms reached after {n} nodes"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
