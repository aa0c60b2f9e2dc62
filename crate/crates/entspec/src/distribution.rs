//! Sweep over all balanced bipartitions of a state, empirical statistics
//! and histograms of the participation number, and the analytic
//! mean/width/density they are compared against.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bipartition::{enumerate_balanced, BipartitionMask};
use crate::error::{Error, Result};
use crate::purity::purity;
use crate::state::PureState;

/// Default qubit cap for sweeps: the cost grows as binomial(n, n/2) · 2^n.
pub const DEFAULT_SWEEP_CAP: u32 = 16;

/// Default bin count for participation histograms.
pub const DEFAULT_HISTOGRAM_BINS: usize = 40;

/// One bipartition's outcome inside a sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepRecord {
    pub mask: BipartitionMask,
    pub purity: f64,
    pub participation: f64,
}

/// Per-bipartition records for one state, ordered by ascending mask.
#[derive(Debug, Clone)]
pub struct SweepResult {
    n: u32,
    n_a: u32,
    records: Vec<SweepRecord>,
}

impl SweepResult {
    pub fn qubit_count(&self) -> u32 {
        self.n
    }

    /// Subsystem-A size ⌊n/2⌋ shared by every record.
    pub fn n_a(&self) -> u32 {
        self.n_a
    }

    pub fn records(&self) -> &[SweepRecord] {
        &self.records
    }

    /// Number of balanced bipartitions swept, binomial(n, ⌊n/2⌋).
    pub fn n_p(&self) -> usize {
        self.records.len()
    }

    /// Largest attainable participation number, 2^⌊n/2⌋.
    pub fn max_participation_bound(&self) -> f64 {
        (1u64 << self.n_a) as f64
    }

    /// CSV with header `mask_hex,n_A,purity,participation`, rows ascending
    /// by mask, floats printed with 17 significant digits.
    pub fn write_csv<W: Write + ?Sized>(&self, writer: &mut W) -> std::io::Result<()> {
        writeln!(writer, "mask_hex,n_A,purity,participation")?;
        for rec in &self.records {
            writeln!(
                writer,
                "{},{},{:.16e},{:.16e}",
                rec.mask.hex_string(),
                rec.mask.n_a(),
                rec.purity,
                rec.participation
            )?;
        }
        Ok(())
    }
}

/// Sweep every balanced bipartition of `state` with the default cap.
///
/// Evaluations fan out across the ambient rayon pool; the result is ordered
/// by mask and bit-identical for any thread count.
pub fn sweep(state: &PureState) -> Result<SweepResult> {
    sweep_with_cap(state, DEFAULT_SWEEP_CAP)
}

/// [`sweep`] with an explicit qubit cap.
pub fn sweep_with_cap(state: &PureState, cap: u32) -> Result<SweepResult> {
    let n = state.qubit_count();
    if n < 2 {
        return Err(Error::invalid(format!(
            "sweep needs at least 2 qubits, got {n}"
        )));
    }
    if n > cap {
        return Err(Error::AboveCap {
            operation: "balanced-bipartition sweep",
            cap,
            n,
        });
    }
    let masks: Vec<BipartitionMask> = enumerate_balanced(n)?.collect();
    let records: Vec<SweepRecord> = masks
        .par_iter()
        .map(|mask| {
            let rec = purity(state, mask)?;
            Ok(SweepRecord {
                mask: *mask,
                purity: rec.purity,
                participation: rec.participation,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SweepResult {
        n,
        n_a: n / 2,
        records,
    })
}

/// Mean, spread, and range of a sweep, uniform weight per bipartition.
#[derive(Debug, Clone, Copy)]
pub struct EmpiricalStats {
    pub n_p: usize,
    pub mean_participation: f64,
    /// Population standard deviation (divide by n_p): the records are the
    /// full population of balanced bipartitions, not a sample.
    pub std_participation: f64,
    pub mean_purity: f64,
    pub min_participation: f64,
    pub max_participation: f64,
}

pub fn empirical_stats(sweep: &SweepResult) -> Result<EmpiricalStats> {
    if sweep.records.is_empty() {
        return Err(Error::invalid("empty sweep"));
    }
    let n_p = sweep.records.len();
    let count = n_p as f64;
    let mean_participation =
        sweep.records.iter().map(|r| r.participation).sum::<f64>() / count;
    let variance = sweep
        .records
        .iter()
        .map(|r| (r.participation - mean_participation).powi(2))
        .sum::<f64>()
        / count;
    let mean_purity = sweep.records.iter().map(|r| r.purity).sum::<f64>() / count;
    let min_participation = sweep
        .records
        .iter()
        .map(|r| r.participation)
        .fold(f64::INFINITY, f64::min);
    let max_participation = sweep
        .records
        .iter()
        .map(|r| r.participation)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(EmpiricalStats {
        n_p,
        mean_participation,
        std_participation: variance.sqrt(),
        mean_purity,
        min_participation,
        max_participation,
    })
}

/// Which mean enters the analytic density: the exact form
/// `(N_A + N_B − 1)/N` or its large-N limit `√(α/N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuMode {
    Exact,
    Asymptotic,
}

/// Analytic parameters of the typical-state purity distribution for a
/// given qubit count.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticParams {
    pub n: u32,
    /// Hilbert-space dimension N = 2^n.
    pub dim: u64,
    pub dim_a: u64,
    pub dim_b: u64,
    /// 4 for even n, 9/2 for odd n.
    pub alpha: f64,
    /// Mean purity over balanced bipartitions, (N_A + N_B − 1)/N.
    pub mu_exact: f64,
    /// Large-N form of the mean purity, √(α/N).
    pub mu_asymptotic: f64,
    /// Variance of the purity, 2/N².
    pub sigma_pi_sq: f64,
    /// Width of the participation-number density, √2/α; depends only on
    /// the parity of n.
    pub sigma_participation: f64,
}

impl AnalyticParams {
    pub fn for_qubit_count(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "analytic parameters need n ≥ 2, got {n}"
            )));
        }
        if n > 63 {
            return Err(Error::invalid(format!("n = {n} exceeds the 63-bit limit")));
        }
        let dim = 1u64 << n;
        let dim_a = 1u64 << (n / 2);
        let dim_b = 1u64 << (n - n / 2);
        let alpha = if n.is_multiple_of(2) { 4.0 } else { 4.5 };
        let dim_f = dim as f64;
        Ok(AnalyticParams {
            n,
            dim,
            dim_a,
            dim_b,
            alpha,
            mu_exact: ((dim_a + dim_b - 1) as f64) / dim_f,
            mu_asymptotic: (alpha / dim_f).sqrt(),
            sigma_pi_sq: 2.0 / (dim_f * dim_f),
            sigma_participation: std::f64::consts::SQRT_2 / alpha,
        })
    }

    pub fn mu(&self, mode: MuMode) -> f64 {
        match mode {
            MuMode::Exact => self.mu_exact,
            MuMode::Asymptotic => self.mu_asymptotic,
        }
    }
}

/// The typical-state probability density of the participation number,
/// `p(x) = exp(−(x⁻¹ − μ)²/(2σ²)) / (x²·√(2πσ²))` with `σ² = 2/N²`.
///
/// A change of variables of a Gaussian in the purity truncated to π > 0;
/// the leaked mass is negligible for n ≥ 2 and no renormalization is
/// applied.
pub fn density(x: f64, params: &AnalyticParams, mode: MuMode) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::invalid(format!(
            "participation value must be positive, got {x}"
        )));
    }
    let mu = params.mu(mode);
    let sigma_sq = params.sigma_pi_sq;
    let arg = (1.0 / x - mu).powi(2) / (2.0 * sigma_sq);
    Ok((-arg).exp() / (x * x * (2.0 * std::f64::consts::PI * sigma_sq).sqrt()))
}

/// Sample the density at `points` equally spaced abscissas over
/// `(1, 2^⌊n/2⌋]`, returning `(x, density)` rows.
pub fn density_table(
    params: &AnalyticParams,
    points: usize,
    mode: MuMode,
) -> Result<Vec<(f64, f64)>> {
    if points < 1 {
        return Err(Error::invalid("density table needs at least one point"));
    }
    let top = params.dim_a as f64;
    let step = (top - 1.0) / points as f64;
    (1..=points)
        .map(|i| {
            let x = 1.0 + step * i as f64;
            Ok((x, density(x, params, mode)?))
        })
        .collect()
}

pub fn write_density_csv<W: Write + ?Sized>(rows: &[(f64, f64)], writer: &mut W) -> std::io::Result<()> {
    writeln!(writer, "x,density")?;
    for (x, d) in rows {
        writeln!(writer, "{x},{d}")?;
    }
    Ok(())
}

/// One equal-width histogram bin; `[lower, upper)` except the last bin,
/// which is closed above.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub lower: f64,
    pub upper: f64,
    pub count: u64,
}

/// Bin the participation numbers of a sweep into `bins` equal-width bins
/// over `range` (default `(1, 2^⌊n/2⌋)`). Values on a boundary go to the
/// upper bin; out-of-range values are clamped into the edge bins, so the
/// counts always sum to n_p.
pub fn histogram(
    sweep: &SweepResult,
    bins: usize,
    range: Option<(f64, f64)>,
) -> Result<Vec<HistogramBin>> {
    if bins < 1 {
        return Err(Error::invalid("histogram needs at least one bin"));
    }
    let (lo, hi) = range.unwrap_or((1.0, sweep.max_participation_bound()));
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(Error::invalid(format!(
            "degenerate histogram range ({lo}, {hi})"
        )));
    }
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0u64; bins];
    for rec in &sweep.records {
        let idx = ((rec.participation - lo) / width).floor();
        let idx = (idx.max(0.0) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| HistogramBin {
            lower: lo + width * i as f64,
            upper: lo + width * (i + 1) as f64,
            count,
        })
        .collect())
}

pub fn write_histogram_csv<W: Write + ?Sized>(bins: &[HistogramBin], writer: &mut W) -> std::io::Result<()> {
    writeln!(writer, "bin_lower,bin_upper,count")?;
    for bin in bins {
        writeln!(writer, "{},{},{}", bin.lower, bin.upper, bin.count)?;
    }
    Ok(())
}

/// Gap diagnostics between a sweep and the analytic distribution. These are
/// reported, not asserted; hard thresholds live in the acceptance tests.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticComparison {
    /// |⟨N_AB⟩ − 1/μ_exact| relative to 1/μ_exact.
    pub mean_gap: f64,
    /// |σ_emp − σ| relative to σ = √2/α.
    pub std_gap: f64,
    /// max over bins of |normalized count − density at bin center|·width.
    pub sup_gap: f64,
}

pub fn compare_to_analytic(
    sweep: &SweepResult,
    params: &AnalyticParams,
) -> Result<AnalyticComparison> {
    let stats = empirical_stats(sweep)?;
    let center = 1.0 / params.mu_exact;
    let mean_gap = (stats.mean_participation - center).abs() / center;
    let std_gap =
        (stats.std_participation - params.sigma_participation).abs() / params.sigma_participation;
    let bins = histogram(sweep, DEFAULT_HISTOGRAM_BINS, None)?;
    let n_p = stats.n_p as f64;
    let mut sup_gap: f64 = 0.0;
    for bin in &bins {
        let width = bin.upper - bin.lower;
        let mid = 0.5 * (bin.lower + bin.upper);
        let normalized = bin.count as f64 / (n_p * width);
        let gap = (normalized - density(mid, params, MuMode::Exact)?).abs() * width;
        sup_gap = sup_gap.max(gap);
    }
    Ok(AnalyticComparison {
        mean_gap,
        std_gap,
        sup_gap,
    })
}

/// Combined empirical + analytic summary, serialized with the exact key
/// set the `stats` subcommand documents.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct StatsReport {
    pub n: u32,
    pub n_p: usize,
    pub mean_participation: f64,
    pub std_participation: f64,
    pub mean_purity: f64,
    pub min: f64,
    pub max: f64,
    pub alpha: f64,
    pub mu_exact: f64,
    pub mu_asymptotic: f64,
    pub sigma_pi2: f64,
    #[serde(rename = "sigma_N")]
    pub sigma_n: f64,
}

impl StatsReport {
    pub fn new(sweep: &SweepResult) -> Result<Self> {
        let stats = empirical_stats(sweep)?;
        let params = AnalyticParams::for_qubit_count(sweep.qubit_count())?;
        Ok(StatsReport {
            n: sweep.qubit_count(),
            n_p: stats.n_p,
            mean_participation: stats.mean_participation,
            std_participation: stats.std_participation,
            mean_purity: stats.mean_purity,
            min: stats.min_participation,
            max: stats.max_participation,
            alpha: params.alpha,
            mu_exact: params.mu_exact,
            mu_asymptotic: params.mu_asymptotic,
            sigma_pi2: params.sigma_pi_sq,
            sigma_n: params.sigma_participation,
        })
    }

    pub fn write_json<W: Write + ?Sized>(&self, writer: &mut W) -> Result<()> {
        serde_json::to_writer_pretty(&mut *writer, self)
            .map_err(|e| Error::format(format!("stats serialization failed: {e}")))?;
        writeln!(writer)?;
        Ok(())
    }
}
