//! Monte-Carlo sweep over sampled separable states.
//!
//! Row `i` is generated from its own seed, `state_seed(master_seed, i)`,
//! so any row can be recomputed in isolation and rows may be evaluated in
//! parallel without changing the output.

mod csv;

use rayon::prelude::*;

pub use self::csv::{format_real, write_csv_header, write_csv_record, CSV_HEADER};
use crate::correlations::{analyze, IDENTITY_TOL};
use crate::error::{Error, Result};
use crate::matcore::{DensityMatrix, NONNEG_TOL};
use crate::states::{
    counterexample_state, ppt_check, random_bell_diagonal_separable, random_separable, PPT_TOL,
};

/// Largest mixture size accepted for `k_max`.
pub const MAX_TERMS: usize = 8;

/// `l` above this counts as strict superadditivity.
pub const STRICT_L: f64 = 1e-6;

/// Rows analyzed in parallel before being emitted in index order.
const CHUNK: usize = 64;

const K_SALT: u64 = 0x6b5f_7465_726d_735f;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: u64,
    pub master_seed: u64,
    pub k_min: usize,
    pub k_max: usize,
    pub grid_n: usize,
    pub refine: bool,
    /// Odd rows become PPT Bell-diagonal states (recorded with `k = 0`).
    pub include_bell_diagonal: bool,
    /// Appends the built-in counterexample as a final row with seed 0 and `k = 2`.
    pub append_counterexample: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n: 1000,
            master_seed: 1,
            k_min: 1,
            k_max: 4,
            grid_n: 16,
            refine: true,
            include_bell_diagonal: false,
            append_counterexample: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        if !(1 <= self.k_min && self.k_min <= self.k_max && self.k_max <= MAX_TERMS) {
            return Err(Error::InvalidConfig(format!(
                "need 1 <= k_min <= k_max <= {MAX_TERMS}, got k_min={} k_max={}",
                self.k_min, self.k_max
            )));
        }
        if self.grid_n < crate::correlations::MIN_GRID_N {
            return Err(Error::InvalidConfig(format!(
                "grid_n must be at least {}",
                crate::correlations::MIN_GRID_N
            )));
        }
        Ok(())
    }

    fn total_rows(&self) -> u64 {
        self.n + u64::from(self.append_counterexample)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub index: u64,
    pub seed: u64,
    pub k: usize,
    pub t: f64,
    pub q: f64,
    pub c: f64,
    pub l: f64,
    pub identity_residual: f64,
    pub ppt_min_eig: f64,
    pub theta_a: f64,
    pub phi_a: f64,
    pub theta_b: f64,
    pub phi_b: f64,
}

impl SweepRecord {
    /// Subadditive row, negative `l`, broken identity, or non-PPT input.
    pub fn is_violation(&self) -> bool {
        self.t > self.q + self.c + NONNEG_TOL
            || self.l < -NONNEG_TOL
            || self.identity_residual > IDENTITY_TOL
            || self.ppt_min_eig < -PPT_TOL
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub rows: u64,
    pub min_l: f64,
    pub max_l: f64,
    pub mean_l: f64,
    pub max_residual: f64,
    /// Rows with `l > STRICT_L`.
    pub strict: u64,
    /// Indices of rows failing [`SweepRecord::is_violation`].
    pub violations: Vec<u64>,
}

impl SweepSummary {
    fn new() -> Self {
        Self {
            rows: 0,
            min_l: f64::INFINITY,
            max_l: f64::NEG_INFINITY,
            mean_l: 0.0,
            max_residual: 0.0,
            strict: 0,
            violations: Vec::new(),
        }
    }

    fn push(&mut self, r: &SweepRecord) {
        self.rows += 1;
        self.min_l = self.min_l.min(r.l);
        self.max_l = self.max_l.max(r.l);
        self.mean_l += (r.l - self.mean_l) / self.rows as f64;
        self.max_residual = self.max_residual.max(r.identity_residual);
        if r.l > STRICT_L {
            self.strict += 1;
        }
        if r.is_violation() {
            self.violations.push(r.index);
        }
    }

    /// `violations=<int> min_l=<real> max_residual=<real>`
    pub fn summary_line(&self) -> String {
        format!(
            "violations={} min_l={} max_residual={}",
            self.violations.len(),
            format_real(self.min_l),
            format_real(self.max_residual)
        )
    }
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

/// SplitMix64 output function.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-row seed: `splitmix64(master_seed ^ splitmix64(index))`.
pub fn state_seed(master_seed: u64, index: u64) -> u64 {
    splitmix64(master_seed ^ splitmix64(index))
}

/// Mixture size for a row: `k_min + splitmix64(seed ^ K_SALT) mod (k_max - k_min + 1)`.
pub fn term_count(seed: u64, k_min: usize, k_max: usize) -> usize {
    let span = (k_max - k_min + 1) as u64;
    k_min + (splitmix64(seed ^ K_SALT) % span) as usize
}

/// The state and mixture size for row `index`.
pub fn sample_row(cfg: &SweepConfig, index: u64) -> (u64, usize, DensityMatrix) {
    if cfg.append_counterexample && index == cfg.n {
        return (0, 2, counterexample_state());
    }
    let seed = state_seed(cfg.master_seed, index);
    if cfg.include_bell_diagonal && index % 2 == 1 {
        let (rho, _) = random_bell_diagonal_separable(seed);
        return (seed, 0, rho);
    }
    let k = term_count(seed, cfg.k_min, cfg.k_max);
    let (rho, _) = random_separable(seed, k);
    (seed, k, rho)
}

/// Analyzes a single row.
pub fn run_row(cfg: &SweepConfig, index: u64) -> Result<SweepRecord> {
    let (seed, k, rho) = sample_row(cfg, index);
    let wrap = |e: Error| Error::Sweep {
        index,
        seed,
        source: Box::new(e),
    };
    let ppt = ppt_check(&rho).map_err(wrap)?;
    let report = analyze(&rho, cfg.grid_n, cfg.refine).map_err(wrap)?;
    let (a, b) = report.axes;
    Ok(SweepRecord {
        index,
        seed,
        k,
        t: report.t,
        q: report.q,
        c: report.c,
        l: report.l,
        identity_residual: report.identity_residual,
        ppt_min_eig: ppt.min_eigenvalue,
        theta_a: a.theta(),
        phi_a: a.phi(),
        theta_b: b.theta(),
        phi_b: b.phi(),
    })
}

/// Runs the sweep, handing each record to `sink` in index order.
pub fn run_sweep_with<F>(cfg: &SweepConfig, mut sink: F) -> Result<SweepSummary>
where
    F: FnMut(&SweepRecord) -> Result<()>,
{
    cfg.validate()?;
    let mut summary = SweepSummary::new();
    let total = cfg.total_rows();
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK as u64).min(total);
        let chunk: Vec<Result<SweepRecord>> = (start..end)
            .into_par_iter()
            .map(|i| run_row(cfg, i))
            .collect();
        for rec in chunk {
            let rec = rec?;
            summary.push(&rec);
            sink(&rec)?;
        }
        start = end;
    }
    Ok(summary)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    let mut records = Vec::with_capacity(cfg.total_rows() as usize);
    let summary = run_sweep_with(cfg, |r| {
        records.push(r.clone());
        Ok(())
    })?;
    Ok(SweepOutcome { records, summary })
}

/// Runs the sweep and writes the full CSV document to `out`.
pub fn run_sweep_csv<W: std::io::Write>(cfg: &SweepConfig, out: &mut W) -> Result<SweepSummary> {
    write_csv_header(out, cfg)?;
    run_sweep_with(cfg, |r| Ok(write_csv_record(out, r)?))
}
