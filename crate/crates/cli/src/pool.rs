//! Fixed-size worker pool for independent checks.

use std::collections::VecDeque;
use std::sync::Mutex;
use std::thread;

use dn_core::report::Report;
use dn_core::Result;

pub const WORKERS_ENV: &str = "DN_WORKERS";

pub type Job<'a> = Box<dyn FnOnce() -> Result<Report> + Send + 'a>;

/// Worker count from DN_WORKERS, else the available parallelism.
pub fn workers() -> std::result::Result<usize, String> {
    match std::env::var(WORKERS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(w),
            _ => Err(format!("{WORKERS_ENV} must be a positive integer, got {s:?}")),
        },
        Err(_) => Ok(thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

/// Runs every job and merges the reports in sorted order, so the result does not depend on scheduling.
/// The first error in submission order wins.
pub fn run(jobs: Vec<Job<'_>>, workers: usize) -> Result<Report> {
    let count = jobs.len();
    let queue = Mutex::new(jobs.into_iter().enumerate().collect::<VecDeque<_>>());
    let done = Mutex::new(Vec::with_capacity(count));
    thread::scope(|s| {
        for _ in 0..workers.clamp(1, count.max(1)) {
            s.spawn(|| loop {
                let next = queue.lock().expect("queue lock").pop_front();
                let Some((i, job)) = next else { break };
                let out = job();
                done.lock().expect("result lock").push((i, out));
            });
        }
    });
    let mut done = done.into_inner().expect("result lock");
    done.sort_by_key(|(i, _)| *i);
    let mut rep = Report::new();
    for (_, r) in done {
        rep.extend(r?);
    }
    rep.sort();
    Ok(rep)
}
