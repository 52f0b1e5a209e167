//! Seeded Monte-Carlo estimation of decoding-failure probability over
//! burst-error channels.
//!
//! Each trial draws a burst error of a prescribed weight, decodes, and is
//! classified as success (planted error recovered), declared failure, or
//! miscorrection (decoded but wrong). The reported failure probability
//! counts declared failures and miscorrections together. Trial `i` of the
//! weight-`t` point uses the ChaCha12 stream seeded by
//! `trial_seed(master_seed, t, i)`, so results are independent of execution
//! order and sweeps can be split and merged by trial ranges.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use rand_core::RngCore;

use crate::decoder::{decode, DecodeOutcome, DecoderError};
use crate::field::FieldContext;
use crate::goppa::{CodeError, GoppaCode};
use crate::matrix::FqMatrix;
use crate::rng::{rng_from_seed, sample_distinct, trial_seed};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimError {
    WeightOutOfRange {
        t: usize,
        n: usize,
    },
    /// Rank `ℓ` is impossible with fewer than `ℓ` nonzero columns.
    FullRankInfeasible {
        ell: usize,
        t: usize,
    },
    Decoder(DecoderError),
    Code(CodeError),
    /// Merging sweeps with different configurations or grids.
    MergeMismatch,
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimError::WeightOutOfRange { t, n } => write!(f, "error weight {t} exceeds n = {n}"),
            SimError::FullRankInfeasible { ell, t } => {
                write!(f, "rank {ell} unreachable with {t} nonzero columns")
            }
            SimError::Decoder(e) => write!(f, "decoder error: {e}"),
            SimError::Code(e) => write!(f, "code error: {e}"),
            SimError::MergeMismatch => write!(f, "sweep configurations do not match"),
        }
    }
}

impl From<DecoderError> for SimError {
    fn from(e: DecoderError) -> Self {
        SimError::Decoder(e)
    }
}

impl From<CodeError> for SimError {
    fn from(e: CodeError) -> Self {
        SimError::Code(e)
    }
}

/// Burst error matrix: exactly `t` nonzero columns at uniform positions,
/// each column uniform over the nonzero vectors of `F_q^ℓ`. With
/// `full_rank` the whole sample is redrawn until its rank over `F_q` is `ℓ`.
pub fn sample_burst_error(
    ell: usize,
    n: usize,
    t: usize,
    ctx: &FieldContext,
    rng: &mut impl RngCore,
    full_rank: bool,
) -> Result<FqMatrix, SimError> {
    if t > n {
        return Err(SimError::WeightOutOfRange { t, n });
    }
    if full_rank && t < ell {
        return Err(SimError::FullRankInfeasible { ell, t });
    }
    loop {
        let support = sample_distinct(rng, n, t);
        let mut e = FqMatrix::zero(ell, n);
        for &j in &support {
            loop {
                let col: Vec<crate::field::Symbol> =
                    (0..ell).map(|_| ctx.random_symbol(rng)).collect();
                if col.iter().any(|&c| c != 0) {
                    for (i, &c) in col.iter().enumerate() {
                        e.set(i, j, c);
                    }
                    break;
                }
            }
        }
        if !full_rank || e.rank(ctx) == ell {
            return Ok(e);
        }
    }
}

/// Sweep configuration; the weight grid is supplied per run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialConfig {
    pub ell: usize,
    pub trials: u64,
    pub master_seed: u64,
    /// Condition every sample on full row rank.
    pub full_rank_only: bool,
    /// Encode a fresh random message matrix per trial instead of decoding
    /// the bare error (the decoder only sees syndromes, so both give the
    /// same statistics; the encoded path is the slower cross-check).
    pub random_codewords: bool,
}

/// Counters for one weight point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub t: usize,
    pub trials: u64,
    pub declared_failures: u64,
    pub miscorrections: u64,
}

impl SweepRecord {
    /// Declared failures and miscorrections together.
    pub fn failure_probability(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        (self.declared_failures + self.miscorrections) as f64 / self.trials as f64
    }

    /// Normal-approximation 95% half-width at the observed rate.
    pub fn ci95_half_width(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        let p = self.failure_probability();
        1.96 * libm::sqrt(p * (1.0 - p) / self.trials as f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub config: TrialConfig,
    pub records: Vec<SweepRecord>,
}

impl SweepResult {
    /// Merges two partial sweeps over the same grid (split trial ranges).
    pub fn merge(mut self, other: &SweepResult) -> Result<SweepResult, SimError> {
        if self.config != other.config || self.records.len() != other.records.len() {
            return Err(SimError::MergeMismatch);
        }
        for (a, b) in self.records.iter_mut().zip(&other.records) {
            if a.t != b.t {
                return Err(SimError::MergeMismatch);
            }
            a.trials += b.trials;
            a.declared_failures += b.declared_failures;
            a.miscorrections += b.miscorrections;
        }
        Ok(self)
    }
}

/// Runs `cfg.trials` trials for every weight in `t_values`.
pub fn run_failure_sweep(
    code: &GoppaCode,
    cfg: &TrialConfig,
    t_values: &[usize],
) -> Result<SweepResult, SimError> {
    run_failure_sweep_range(code, cfg, t_values, 0, cfg.trials)
}

/// Runs the trial-index range `[trial_start, trial_end)` of a sweep; the
/// counts of complementary ranges sum to the full sweep exactly.
pub fn run_failure_sweep_range(
    code: &GoppaCode,
    cfg: &TrialConfig,
    t_values: &[usize],
    trial_start: u64,
    trial_end: u64,
) -> Result<SweepResult, SimError> {
    let ctx = code.ctx().clone();
    let n = code.n();
    let mut records = Vec::with_capacity(t_values.len());
    for &t in t_values {
        let mut declared = 0u64;
        let mut miscorrected = 0u64;
        for trial in trial_start..trial_end {
            let mut rng = rng_from_seed(trial_seed(cfg.master_seed, t as u64, trial));
            let planted = sample_burst_error(cfg.ell, n, t, &ctx, &mut rng, cfg.full_rank_only)?;
            let received = if cfg.random_codewords {
                let msgs = FqMatrix::random(cfg.ell, code.k(), &ctx, &mut rng);
                code.encode_matrix(&msgs)?.add(&planted, &ctx)
            } else {
                planted.clone()
            };
            match decode(&received, code)? {
                DecodeOutcome::Decoded { error, .. } => {
                    if error != planted {
                        miscorrected += 1;
                    }
                }
                DecodeOutcome::Failure(_) => declared += 1,
            }
        }
        records.push(SweepRecord {
            t,
            trials: trial_end - trial_start,
            declared_failures: declared,
            miscorrections: miscorrected,
        });
    }
    Ok(SweepResult {
        config: cfg.clone(),
        records,
    })
}

/// CSV rendering, bitwise deterministic for fixed inputs.
pub fn sweep_to_csv(result: &SweepResult) -> String {
    let mut out = String::from("t,trials,failures,miscorrections,p_f,ci95\n");
    for rec in &result.records {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{:.6}",
            rec.t,
            rec.trials,
            rec.declared_failures,
            rec.miscorrections,
            rec.failure_probability(),
            rec.ci95_half_width()
        );
    }
    out
}
