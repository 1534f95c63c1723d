//! Progress lines on stderr for long runs.

use std::io::Write;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

static QUIET: AtomicBool = AtomicBool::new(false);

/// Silences progress output for the rest of the process.
pub fn set_quiet(quiet: bool) {
    QUIET.store(quiet, Ordering::Relaxed);
}

/// Nothing is printed before this much time has passed, and at most one
/// line per interval afterwards.
const INTERVAL: Duration = Duration::from_secs(5);

pub struct Progress {
    label: &'static str,
    total: u64,
    done: AtomicU64,
    start: Instant,
    last: Mutex<Instant>,
}

impl Progress {
    pub fn new(label: &'static str, total: u64) -> Self {
        let now = Instant::now();
        Self { label, total, done: AtomicU64::new(0), start: now, last: Mutex::new(now) }
    }

    pub fn tick(&self) {
        let done = self.done.fetch_add(1, Ordering::Relaxed) + 1;
        if QUIET.load(Ordering::Relaxed) {
            return;
        }
        let now = Instant::now();
        let Ok(mut last) = self.last.try_lock() else { return };
        if now.duration_since(*last) < INTERVAL {
            return;
        }
        *last = now;
        let elapsed = now.duration_since(self.start).as_secs_f64();
        let pct = 100.0 * done as f64 / self.total.max(1) as f64;
        let _ = writeln!(
            std::io::stderr(),
            "{}: {done}/{} segments ({pct:.1}%), {elapsed:.0} s",
            self.label,
            self.total
        );
    }

    pub fn finish(&self) {
        let elapsed = self.start.elapsed();
        log::info!("{}: {} segments in {:.2} s", self.label, self.done.load(Ordering::Relaxed), elapsed.as_secs_f64());
        if elapsed >= INTERVAL && !QUIET.load(Ordering::Relaxed) {
            let _ = writeln!(std::io::stderr(), "{}: done in {:.0} s", self.label, elapsed.as_secs_f64());
        }
    }
}
