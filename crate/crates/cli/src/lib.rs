//! Runs named checks of the `bbw-core` engine over a range of `d` and reports
//! computed against expected values.

pub mod checks;
pub mod golden;
pub mod report;

use rayon::prelude::*;

pub use checks::CheckId;
pub use golden::Golden;
pub use report::{CheckResult, Params, Report, Status, Summary};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("d-min must be at least 3, got {0}")]
    DMinTooSmall(usize),
    #[error("d-min ({d_min}) exceeds d-max ({d_max})")]
    EmptyRange { d_min: usize, d_max: usize },
    #[error("--jobs must be positive")]
    NoJobs,
}

/// Runs every requested check at every `d` in `d_min..=d_max`. Results are
/// ordered by catalog position, then by `d`, whatever the thread count.
pub fn run_checks(
    d_min: usize,
    d_max: usize,
    checks: &[CheckId],
    strict_paper: bool,
    jobs: Option<usize>,
    timestamp: Option<String>,
) -> Result<Report, UsageError> {
    if d_min < 3 {
        return Err(UsageError::DMinTooSmall(d_min));
    }
    if d_min > d_max {
        return Err(UsageError::EmptyRange { d_min, d_max });
    }
    let mut selected: Vec<CheckId> = if checks.is_empty() { CheckId::ALL.to_vec() } else { checks.to_vec() };
    selected.sort();
    selected.dedup();

    let golden = Golden::bundled();
    let tasks: Vec<(CheckId, usize)> = selected.iter().flat_map(|&c| (d_min..=d_max).map(move |d| (c, d))).collect();
    let run = || -> Vec<CheckResult> { tasks.par_iter().map(|&(c, d)| c.run(d, &golden)).collect() };
    let results = match jobs {
        Some(0) => return Err(UsageError::NoJobs),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };

    let params = Params {
        d_min,
        d_max,
        checks: selected.iter().map(|c| c.id().to_string()).collect(),
        strict_paper,
    };
    Ok(Report::new(params, results, timestamp))
}
