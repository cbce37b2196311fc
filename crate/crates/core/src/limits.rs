use std::time::{Duration, Instant};

use crate::error::{EngineError, Result};

/// Read-only resource bounds threaded through every operation that can blow up.
///
/// Nothing here changes a mathematical answer. Hitting a limit aborts the
/// operation with a loud error instead of hanging or filling memory.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Maximum number of simplices in any single level, counting degenerate ones.
    pub level_cap: usize,
    /// Wall clock budget for one operation.
    pub timeout: Duration,
    /// Largest n accepted by the universe constructor.
    pub universe_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            level_cap: 100_000,
            timeout: Duration::from_secs(120),
            universe_cap: 4,
        }
    }
}

impl Limits {
    pub fn check_level(&self, dim: usize, count: usize) -> Result<()> {
        if count > self.level_cap {
            Err(EngineError::SizeCapExceeded {
                dim,
                count,
                cap: self.level_cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn budget(&self, operation: &'static str) -> Budget {
        Budget {
            operation,
            started: Instant::now(),
            timeout: self.timeout,
            ticks: 0,
        }
    }
}

/// Per-operation deadline. `tick` is cheap enough for inner search loops;
/// the clock is only consulted every 1024 calls.
pub struct Budget {
    operation: &'static str,
    started: Instant,
    timeout: Duration,
    ticks: u32,
}

impl Budget {
    pub fn tick(&mut self, progress: impl Fn() -> String) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 1024 == 0 && self.started.elapsed() > self.timeout {
            return Err(EngineError::Timeout {
                operation: self.operation,
                elapsed_ms: self.started.elapsed().as_millis(),
                progress: progress(),
            });
        }
        Ok(())
    }
}
