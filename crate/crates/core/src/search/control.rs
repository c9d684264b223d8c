//! Shared bookkeeping for parallel searches: node budget, cancellation, and
//! the deterministic "lowest task index wins" rule.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};

const FLUSH_EVERY: u64 = 1024;

pub(crate) struct Control {
    budget: Option<u64>,
    nodes: AtomicU64,
    exhausted: AtomicBool,
    found: AtomicUsize,
    first_wins: bool,
}

/// Result of one independent subtree.
pub(crate) enum TaskResult {
    Found(Vec<u32>),
    Refuted,
    Aborted,
}

/// Per-worker handle: counts nodes locally and flushes to the shared counter.
pub(crate) struct Meter<'a> {
    ctl: &'a Control,
    task: usize,
    local: u64,
}

impl Meter<'_> {
    /// Counts one node. Returns `false` once the worker must stop.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local >= FLUSH_EVERY {
            self.flush();
            return !self.ctl.should_stop(self.task);
        }
        true
    }

    pub fn flush(&mut self) {
        if self.local == 0 {
            return;
        }
        let total = self.ctl.nodes.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if let Some(b) = self.ctl.budget {
            if total > b {
                self.ctl.exhausted.store(true, Ordering::Relaxed);
            }
        }
    }
}

impl Drop for Meter<'_> {
    fn drop(&mut self) {
        self.flush();
    }
}

impl Control {
    pub fn new(budget: Option<u64>, first_wins: bool) -> Self {
        Control {
            budget,
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            found: AtomicUsize::new(usize::MAX),
            first_wins,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    fn should_stop(&self, task: usize) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return true;
        }
        let found = self.found.load(Ordering::Relaxed);
        if self.first_wins {
            found != usize::MAX
        } else {
            found < task
        }
    }

    pub fn meter(&self, task: usize) -> Meter<'_> {
        Meter { ctl: self, task, local: 0 }
    }

    /// Runs `work` over every task and combines the results.
    ///
    /// With `first_wins == false` the reported witness is the one from the
    /// lowest-indexed successful task, so it does not depend on the number of
    /// workers or on scheduling.
    pub fn run<T, F>(&self, tasks: &[T], width: usize, work: F) -> Result<Option<Vec<u32>>>
    where
        T: Sync,
        F: Fn(&T, &mut Meter<'_>) -> TaskResult + Sync,
    {
        let one = |(i, t): (usize, &T)| -> TaskResult {
            if self.should_stop(i) {
                return TaskResult::Aborted;
            }
            let mut meter = self.meter(i);
            let r = work(t, &mut meter);
            meter.flush();
            if let TaskResult::Found(_) = r {
                self.found.fetch_min(i, Ordering::Relaxed);
            }
            r
        };

        let results: Vec<TaskResult> = if width <= 1 || tasks.len() <= 1 {
            tasks.iter().enumerate().map(one).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(width)
                .build()
                .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
            pool.install(|| tasks.par_iter().enumerate().map(one).collect())
        };

        let mut aborted = false;
        for r in results {
            match r {
                TaskResult::Found(w) if !aborted || self.first_wins => return Ok(Some(w)),
                TaskResult::Found(_) | TaskResult::Aborted => aborted = true,
                TaskResult::Refuted => {}
            }
        }
        if aborted {
            return Err(Error::BudgetExhausted { budget: self.budget.unwrap_or(u64::MAX) });
        }
        Ok(None)
    }
}
