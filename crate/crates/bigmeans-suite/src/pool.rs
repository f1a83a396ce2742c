use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;

use mssc_kernel::CentroidSet;
use thiserror::Error;

/// The shared best-solution cell workers publish to.
///
/// The stored value is only ever replaced by a strictly smaller objective;
/// on an exact tie the earlier writer keeps the slot. Both properties hold
/// under concurrent offers because the compare and the replace happen under
/// one lock.
#[derive(Debug, Default)]
pub struct BestBoard {
    slot: Mutex<Option<BoardEntry>>,
}

/// A published solution with its objective and owner.
#[derive(Debug, Clone)]
pub struct BoardEntry {
    pub objective: f64,
    pub centroids: CentroidSet,
    pub worker: u32,
}

impl BestBoard {
    pub fn new() -> Self {
        Self::default()
    }

    /// Publishes `centroids` if `objective` strictly improves the board.
    /// Returns whether the board changed.
    pub fn offer(&self, worker: u32, objective: f64, centroids: &CentroidSet) -> bool {
        let mut slot = self.slot.lock().expect("board lock");
        let improves = match slot.as_ref() {
            Some(entry) => objective < entry.objective,
            None => true,
        };
        if improves {
            *slot = Some(BoardEntry {
                objective,
                centroids: centroids.clone(),
                worker,
            });
        }
        improves
    }

    pub fn snapshot(&self) -> Option<BoardEntry> {
        self.slot.lock().expect("board lock").clone()
    }

    pub fn objective(&self) -> Option<f64> {
        self.slot.lock().expect("board lock").as_ref().map(|e| e.objective)
    }
}

/// A worker that returned an error or panicked.
#[derive(Debug, Clone, Error)]
#[error("worker {worker} failed: {message}")]
pub struct WorkerFailure {
    pub worker: u32,
    pub message: String,
}

/// Per-worker results of a pool run, in worker order.
pub struct PoolOutcome<R> {
    pub results: Vec<Result<R, WorkerFailure>>,
}

impl<R> PoolOutcome<R> {
    pub fn successes(&self) -> impl Iterator<Item = (u32, &R)> {
        self.results
            .iter()
            .enumerate()
            .filter_map(|(w, r)| r.as_ref().ok().map(|v| (w as u32, v)))
    }

    pub fn failures(&self) -> Vec<WorkerFailure> {
        self.results
            .iter()
            .filter_map(|r| r.as_err())
            .cloned()
            .collect()
    }
}

trait AsErr<E> {
    fn as_err(&self) -> Option<&E>;
}

impl<R, E> AsErr<E> for Result<R, E> {
    fn as_err(&self) -> Option<&E> {
        self.as_ref().err()
    }
}

/// Runs `workers` independent copies of `run`, each with its own index and a
/// handle to the shared board. A panicking worker is recorded as a failure;
/// the board keeps the best of the survivors.
pub fn worker_pool<R, E, F>(workers: u32, board: &BestBoard, run: F) -> PoolOutcome<R>
where
    R: Send,
    E: std::fmt::Display + Send,
    F: Fn(u32, &BestBoard) -> Result<R, E> + Sync,
{
    let capture = |worker: u32| -> Result<R, WorkerFailure> {
        match catch_unwind(AssertUnwindSafe(|| run(worker, board))) {
            Ok(Ok(value)) => Ok(value),
            Ok(Err(err)) => Err(WorkerFailure {
                worker,
                message: err.to_string(),
            }),
            Err(panic) => {
                let message = panic
                    .downcast_ref::<&str>()
                    .map(|s| (*s).to_string())
                    .or_else(|| panic.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "panic".to_string());
                Err(WorkerFailure { worker, message })
            }
        }
    };

    if workers == 1 {
        return PoolOutcome {
            results: vec![capture(0)],
        };
    }
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|worker| scope.spawn(move || capture(worker)))
            .collect();
        handles
            .into_iter()
            .map(|h| match h.join() {
                Ok(result) => result,
                Err(_) => Err(WorkerFailure {
                    worker: u32::MAX,
                    message: "worker thread join failed".into(),
                }),
            })
            .collect()
    });
    PoolOutcome { results }
}
