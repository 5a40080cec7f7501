//! Expands the selected checks into cases and runs them on a worker pool.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use exact_algebra::{QtZero, MAX_X_VARS};
use macdonald_ops::{Config, DEFAULT_CAP};

use crate::catalog::{find, CheckSpec, Profile, Scope, CATALOG};
use crate::context::Context;
use crate::report::{CaseResult, Outcome, Params, Report};
use crate::VerifierError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub scope: Scope,
    /// Check names to run; empty means the whole catalog.
    pub checks: Vec<String>,
    pub cache_dir: Option<PathBuf>,
    /// x-variables for polynomial comparisons; `None` uses `n`.
    pub vars: Option<usize>,
    pub qtint_zero: QtZero,
    /// Print one line per finished case, with its wall time, to stderr.
    pub progress: bool,
    /// Worker count; `None` uses the available parallelism.
    pub threads: Option<usize>,
}

impl Settings {
    pub fn new(profile: Profile) -> Settings {
        Settings {
            scope: Scope::new(profile),
            checks: Vec::new(),
            cache_dir: None,
            vars: None,
            qtint_zero: QtZero::Zero,
            progress: false,
            threads: None,
        }
    }

    fn selected(&self) -> Result<Vec<&'static CheckSpec>, VerifierError> {
        if self.checks.is_empty() {
            return Ok(CATALOG.iter().collect());
        }
        let mut out = self.checks.iter().map(|name| find(name)).collect::<Result<Vec<_>, _>>()?;
        out.sort_by_key(|c| c.name);
        out.dedup_by_key(|c| c.name);
        Ok(out)
    }

    fn validate(&self) -> Result<(), VerifierError> {
        if let Some(v) = self.vars {
            if v == 0 || v > MAX_X_VARS {
                return Err(VerifierError::Config(format!("--vars {v} is outside 1..={MAX_X_VARS}")));
            }
        }
        if self.threads == Some(0) {
            return Err(VerifierError::Config("at least one worker thread is needed".into()));
        }
        Ok(())
    }

    pub fn context(&self) -> Context {
        let config = Config { cap: DEFAULT_CAP, cache_dir: self.cache_dir.clone() };
        Context::new(config, self.vars, self.qtint_zero)
    }
}

/// Runs one case. Errors other than usage and cache problems become an
/// [`Outcome::Error`] for that case.
pub fn run_check(ctx: &Context, spec: &'static CheckSpec, params: Params) -> Result<CaseResult, VerifierError> {
    let outcome = match (spec.run)(ctx, &params) {
        Ok(o) => o,
        Err(e) if e.is_fatal() => return Err(e),
        Err(e) => Outcome::Error(e.to_string()),
    };
    Ok(CaseResult { check: spec.name, status: spec.status, params, outcome })
}

/// Runs every case of the selected checks and returns the sorted report.
pub fn run_suite(settings: &Settings) -> Result<Report, VerifierError> {
    settings.validate()?;
    let specs = settings.selected()?;
    let mut jobs: Vec<(&'static CheckSpec, Params)> =
        specs.iter().flat_map(|spec| (spec.cases)(&settings.scope).into_iter().map(move |p| (*spec, p))).collect();
    // Larger cases first, so the slowest work starts early.
    jobs.sort_by(|a, b| b.1.n.cmp(&a.1.n).then_with(|| (a.0.name, &a.1).cmp(&(b.0.name, &b.1))));
    let ctx = settings.context();
    let workers = settings
        .threads
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
        .min(jobs.len())
        .max(1);
    let next = AtomicUsize::new(0);
    let done = AtomicUsize::new(0);
    let abort = AtomicBool::new(false);
    let results: Mutex<Vec<CaseResult>> = Mutex::new(Vec::with_capacity(jobs.len()));
    let fatal: Mutex<Option<(usize, VerifierError)>> = Mutex::new(None);
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() || abort.load(Ordering::Relaxed) {
                    break;
                }
                let (spec, params) = &jobs[i];
                let start = Instant::now();
                match run_check(&ctx, spec, params.clone()) {
                    Ok(result) => {
                        if settings.progress {
                            let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
                            eprintln!(
                                "[{finished}/{}] {} {}: {} in {:.2?}",
                                jobs.len(),
                                spec.name,
                                params,
                                result.outcome.word(),
                                start.elapsed()
                            );
                        }
                        results.lock().expect("results poisoned").push(result);
                    }
                    Err(e) => {
                        abort.store(true, Ordering::Relaxed);
                        let mut slot = fatal.lock().expect("fatal slot poisoned");
                        if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                            *slot = Some((i, e));
                        }
                    }
                }
            });
        }
    });
    if let Some((_, e)) = fatal.into_inner().expect("fatal slot poisoned") {
        return Err(e);
    }
    Ok(Report::new(results.into_inner().expect("results poisoned")))
}
