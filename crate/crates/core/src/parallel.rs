//! Index-sharded work split over scoped threads. Results come back in index
//! order regardless of which worker finished first.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

/// Machine parallelism, or 1 when it cannot be queried.
pub fn default_threads() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Evaluates `f(0..jobs)` on up to `threads` workers.
pub fn map_indexed<T, F>(jobs: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let threads = threads.max(1).min(jobs.max(1));
    if threads == 1 {
        return (0..jobs).map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..jobs).map(|_| None).collect());
    thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs {
                    break;
                }
                let value = f(i);
                slots.lock().expect("worker panicked")[i] = Some(value);
            });
        }
    });
    slots.into_inner().expect("worker panicked").into_iter().map(|v| v.expect("every index is evaluated")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_independent_of_thread_count() {
        let serial = map_indexed(40, 1, |i| i * i);
        for threads in [2, 3, 8, 64] {
            assert_eq!(map_indexed(40, threads, |i| i * i), serial);
        }
        assert!(map_indexed(0, 4, |i| i).is_empty());
    }
}
