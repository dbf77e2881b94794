//! Seeded Monte-Carlo failure-rate campaigns.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{random_instance, CodeSpec};
use crate::decoder::{decode, DecodeOutcome, DecoderParams};
use crate::error::{Error, Result};
use crate::rng::{child_seed, stream};

/// Failure seeds kept per run for replay.
pub const MAX_RECORDED_SEEDS: usize = 64;

/// Trials between wall-clock budget checks.
const BLOCK: u64 = 512;

pub const CSV_HEADER: &str =
    "q,n,k,m,ell,s,tau,errors,trials,failures,miscorrections,fail_rate,master_seed,elapsed_ms";

#[derive(Clone, Debug)]
pub struct TrialConfig {
    pub code: CodeSpec,
    pub params: DecoderParams,
    pub eps: usize,
    pub trials: u64,
    pub master_seed: u64,
    /// Worker threads; 0 uses the global rayon pool.
    pub workers: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialResult {
    Correct,
    /// A decoder failure verdict.
    Failed,
    /// Success verdict with a codeword other than the transmitted one.
    Miscorrected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialStats {
    pub trials: u64,
    /// Failure verdicts plus miscorrections.
    pub failures: u64,
    pub miscorrections: u64,
    pub fail_rate: Ratio<u64>,
    pub elapsed: Duration,
    /// Child seeds of the first failing trials, in trial order.
    pub failure_seeds: Vec<u64>,
    /// Set when a wall-clock budget stopped the run early.
    pub truncated: bool,
}

impl TrialConfig {
    fn validate(&self) -> Result<()> {
        if self.eps > self.code.n() {
            return Err(Error::InvalidParams(format!(
                "error weight {} exceeds length {}",
                self.eps,
                self.code.n()
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidParams("at least one trial is required".into()));
        }
        Ok(())
    }
}

/// Runs one trial from its child seed.
pub fn replay_trial(cfg: &TrialConfig, seed: u64) -> Result<TrialResult> {
    let mut rng = stream(seed);
    let inst = random_instance(&cfg.code, cfg.eps, &mut rng)?;
    Ok(match decode(&inst.received, &cfg.code, &cfg.params)? {
        DecodeOutcome::Success { codeword, .. } if codeword == inst.codeword => TrialResult::Correct,
        DecodeOutcome::Success { .. } => TrialResult::Miscorrected,
        DecodeOutcome::Fail(_) => TrialResult::Failed,
    })
}

fn run_block(cfg: &TrialConfig, range: std::ops::Range<u64>) -> Vec<(u64, TrialResult)> {
    range
        .into_par_iter()
        .map(|t| {
            let seed = child_seed(cfg.master_seed, t);
            let res = replay_trial(cfg, seed).expect("validated configuration");
            (seed, res)
        })
        .collect()
}

fn run_inner(cfg: &TrialConfig, budget: Option<Duration>) -> TrialStats {
    let start = Instant::now();
    let mut stats = TrialStats {
        trials: 0,
        failures: 0,
        miscorrections: 0,
        fail_rate: Ratio::new_raw(0, 1),
        elapsed: Duration::ZERO,
        failure_seeds: Vec::new(),
        truncated: false,
    };
    let mut done = 0u64;
    while done < cfg.trials {
        if budget.is_some_and(|b| start.elapsed() > b) {
            stats.truncated = true;
            break;
        }
        let end = (done + BLOCK).min(cfg.trials);
        for (seed, res) in run_block(cfg, done..end) {
            if res != TrialResult::Correct {
                stats.failures += 1;
                if stats.failure_seeds.len() < MAX_RECORDED_SEEDS {
                    stats.failure_seeds.push(seed);
                }
            }
            if res == TrialResult::Miscorrected {
                stats.miscorrections += 1;
            }
        }
        done = end;
    }
    stats.trials = done;
    stats.fail_rate = Ratio::new(stats.failures, done.max(1));
    stats.elapsed = start.elapsed();
    stats
}

fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return job();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(job)
}

/// Counts are a pure function of the configuration minus `workers`.
pub fn run_trials(cfg: &TrialConfig) -> Result<TrialStats> {
    cfg.validate()?;
    Ok(with_workers(cfg.workers, || run_inner(cfg, None)))
}

/// One run per grid point; a point exceeding `budget` is cut short and
/// marked truncated.
pub fn sweep(grid: &[TrialConfig], budget: Option<Duration>) -> Result<Vec<TrialStats>> {
    grid.iter().try_for_each(TrialConfig::validate)?;
    Ok(grid
        .iter()
        .map(|cfg| with_workers(cfg.workers, || run_inner(cfg, budget)))
        .collect())
}

/// One output row, shared by the CSV and JSON writers.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub ell: u32,
    pub s: u32,
    pub tau: usize,
    pub errors: usize,
    pub trials: u64,
    pub failures: u64,
    pub miscorrections: u64,
    pub fail_rate: f64,
    pub master_seed: u64,
    pub elapsed_ms: u128,
    pub truncated: bool,
    pub failure_seeds: Vec<u64>,
}

impl Record {
    pub fn new(cfg: &TrialConfig, stats: &TrialStats) -> Self {
        Record {
            q: cfg.code.field().order(),
            n: cfg.code.n(),
            k: cfg.code.k(),
            m: cfg.code.m(),
            ell: cfg.params.ell(),
            s: cfg.params.s(),
            tau: cfg.params.tau(),
            errors: cfg.eps,
            trials: stats.trials,
            failures: stats.failures,
            miscorrections: stats.miscorrections,
            fail_rate: *stats.fail_rate.numer() as f64 / *stats.fail_rate.denom() as f64,
            master_seed: cfg.master_seed,
            elapsed_ms: stats.elapsed.as_millis(),
            truncated: stats.truncated,
            failure_seeds: stats.failure_seeds.clone(),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.q,
            self.n,
            self.k,
            self.m,
            self.ell,
            self.s,
            self.tau,
            self.errors,
            self.trials,
            self.failures,
            self.miscorrections,
            self.fail_rate,
            self.master_seed,
            self.elapsed_ms
        )
    }
}

pub fn to_csv(records: &[Record]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

pub fn to_json(records: &[Record]) -> String {
    serde_json::to_string_pretty(records).expect("serializable")
}
