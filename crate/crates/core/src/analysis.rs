//! Empirical eigenvalue distributions: gaps, CDFs, histograms, and distances
//! to the limiting laws.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::binomial::{ratio_to_f64, signed_ratio_to_f64};
use crate::spectrum::{base_spectrum, merge_tolerance, Spectrum, SpectrumKind};
use crate::{Error, Graph, Result};

/// `λ_1 - λ_2` between the largest and second-largest distinct values.
pub fn spectral_gap(spectrum: &Spectrum) -> Result<f64> {
    if let Some(gap) = exact_spectral_gap(spectrum)? {
        return Ok(*gap.numer() as f64 / *gap.denom() as f64);
    }
    let n = spectrum.len();
    Ok(spectrum.value(n - 1).to_f64() - spectrum.value(n - 2).to_f64())
}

/// The gap as a reduced rational, for exact spectra.
pub fn exact_spectral_gap(spectrum: &Spectrum) -> Result<Option<Ratio<i64>>> {
    let n = spectrum.len();
    if n < 2 {
        return Err(Error::DegenerateSpectrum(
            "spectral gap needs at least two distinct eigenvalues".into(),
        ));
    }
    Ok(spectrum
        .exact_entries()
        .map(|(den, entries)| Ratio::new(entries[n - 1].0 - entries[n - 2].0, den)))
}

/// Values closer than this are the same eigenvalue for comparison purposes.
fn value_tolerance(spectrum: &Spectrum) -> f64 {
    if spectrum.is_exact() {
        return 0.0;
    }
    match spectrum.kind() {
        SpectrumKind::Adjacency => merge_tolerance(spectrum.degree()),
        _ => merge_tolerance(1),
    }
}

/// A cumulative distribution function that can be probed on both sides of
/// a point.
pub trait Cdf {
    /// `F(x)`, right-continuous.
    fn at(&self, x: f64) -> f64;
    /// `F(x-)`.
    fn left_limit(&self, x: f64) -> f64;
    /// Every point where `F` jumps or changes slope.
    fn breakpoints(&self) -> Vec<f64>;
}

/// Right-continuous step CDF of a finite multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    points: Vec<(f64, f64)>,
}

impl EmpiricalCdf {
    /// Jump points `(value, F(value))`, ascending in both coordinates and
    /// ending at `F = 1`.
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        let Some(&(_, last)) = points.last() else {
            return Err(Error::DegenerateSpectrum("empty CDF".into()));
        };
        if points.windows(2).any(|w| !(w[0].0 < w[1].0) || w[0].1 > w[1].1) {
            return Err(Error::Validation("CDF points are not increasing".into()));
        }
        if points.iter().any(|&(_, c)| !(0.0..=1.0).contains(&c)) || last != 1.0 {
            return Err(Error::Validation("CDF must rise within [0, 1] and end at 1".into()));
        }
        Ok(EmpiricalCdf { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn jump_count(&self) -> usize {
        self.points.len()
    }
}

impl Cdf for EmpiricalCdf {
    fn at(&self, x: f64) -> f64 {
        let idx = self.points.partition_point(|&(v, _)| v <= x);
        if idx == 0 { 0.0 } else { self.points[idx - 1].1 }
    }

    fn left_limit(&self, x: f64) -> f64 {
        let idx = self.points.partition_point(|&(v, _)| v < x);
        if idx == 0 { 0.0 } else { self.points[idx - 1].1 }
    }

    fn breakpoints(&self) -> Vec<f64> {
        self.points.iter().map(|&(v, _)| v).collect()
    }
}

/// The analytic limits a spectrum is compared against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceCdf {
    /// Point mass at the given value.
    StepAt(f64),
    /// Uniform law on `[lo, hi]`.
    Uniform { lo: f64, hi: f64 },
}

impl Cdf for ReferenceCdf {
    fn at(&self, x: f64) -> f64 {
        match *self {
            ReferenceCdf::StepAt(c) => f64::from(u8::from(x >= c)),
            ReferenceCdf::Uniform { lo, hi } => ((x - lo) / (hi - lo)).clamp(0.0, 1.0),
        }
    }

    fn left_limit(&self, x: f64) -> f64 {
        match *self {
            ReferenceCdf::StepAt(c) => f64::from(u8::from(x > c)),
            uniform => uniform.at(x),
        }
    }

    fn breakpoints(&self) -> Vec<f64> {
        match *self {
            ReferenceCdf::StepAt(c) => vec![c],
            ReferenceCdf::Uniform { lo, hi } => vec![lo, hi],
        }
    }
}

/// Empirical CDF of a spectrum, with cumulative probabilities taken from
/// exact multiplicity ratios.
pub fn ecdf(spectrum: &Spectrum) -> Result<EmpiricalCdf> {
    let total = spectrum.total_multiplicity();
    let mut running = BigUint::zero();
    let points = spectrum
        .iter()
        .map(|(v, m)| {
            running += m;
            (v, ratio_to_f64(&running, &total))
        })
        .collect();
    EmpiricalCdf::new(points)
}

/// `sup_x |F(x) - G(x)|`.
///
/// Between consecutive breakpoints of either function, one side is constant
/// and the other monotone, so the supremum is attained as a one-sided limit
/// at some breakpoint.
pub fn kolmogorov_distance<A: Cdf + ?Sized, B: Cdf + ?Sized>(a: &A, b: &B) -> f64 {
    let mut candidates = a.breakpoints();
    candidates.extend(b.breakpoints());
    candidates
        .into_iter()
        .flat_map(|x| {
            [
                (a.at(x) - b.at(x)).abs(),
                (a.left_limit(x) - b.left_limit(x)).abs(),
            ]
        })
        .fold(0.0, f64::max)
}

/// Kolmogorov distance between the spectrum and its reflection through 0.
/// Zero exactly when the multiset is symmetric.
pub fn symmetry_defect(spectrum: &Spectrum) -> Result<f64> {
    let original = ecdf(spectrum)?;
    let reflected = ecdf(&spectrum.reflected())?;
    let tol = value_tolerance(spectrum);
    if tol == 0.0 {
        return Ok(kolmogorov_distance(&original, &reflected));
    }
    // Floating values and their mirror images may differ in the last bits;
    // move each mirrored value onto its partner before comparing.
    let values = original.breakpoints();
    let snapped: Vec<(f64, f64)> = reflected
        .points()
        .iter()
        .map(|&(v, c)| {
            let idx = values.partition_point(|&u| u < v);
            let nearest = [idx.checked_sub(1), Some(idx)]
                .into_iter()
                .flatten()
                .filter_map(|i| values.get(i).copied())
                .min_by(|a, b| (a - v).abs().total_cmp(&(b - v).abs()));
            match nearest {
                Some(u) if (u - v).abs() <= tol => (u, c),
                _ => (v, c),
            }
        })
        .collect();
    Ok(kolmogorov_distance(&original, &EmpiricalCdf::new(snapped)?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub mass: f64,
}

/// Probability mass in `bins` equal-width bins over `[lo, hi]`: each bin is
/// half-open except the last, which is closed. Mass outside the range is
/// dropped.
pub fn histogram(spectrum: &Spectrum, bins: usize, lo: f64, hi: f64) -> Result<Vec<HistogramBin>> {
    if bins == 0 {
        return Err(Error::InvalidParameter("histogram needs at least one bin".into()));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidParameter(format!("invalid histogram range [{lo}, {hi}]")));
    }
    let width = (hi - lo) / bins as f64;
    let edge = |i: usize| if i == bins { hi } else { lo + i as f64 * width };
    let mut counts = vec![BigUint::zero(); bins];
    for (v, m) in spectrum.iter() {
        if v < lo || v > hi {
            continue;
        }
        let mut i = (((v - lo) / width).floor() as usize).min(bins - 1);
        // Settle rounding at the edges against the reported bin bounds.
        if v < edge(i) {
            i -= 1;
        } else if i + 1 < bins && v >= edge(i + 1) {
            i += 1;
        }
        counts[i] += m;
    }
    let total = spectrum.total_multiplicity();
    Ok(counts
        .iter()
        .enumerate()
        .map(|(i, c)| HistogramBin {
            lo: edge(i),
            hi: edge(i + 1),
            mass: ratio_to_f64(c, &total),
        })
        .collect())
}

/// Fraction of the spectrum strictly outside `[lo, hi]`.
pub fn mass_outside(spectrum: &Spectrum, lo: f64, hi: f64) -> f64 {
    let outside: BigUint = spectrum
        .iter()
        .filter(|&(v, _)| v < lo || v > hi)
        .map(|(_, m)| m)
        .sum();
    ratio_to_f64(&outside, &spectrum.total_multiplicity())
}

/// Multiplicity-weighted mean.
pub fn mean(spectrum: &Spectrum) -> f64 {
    let total = spectrum.total_multiplicity();
    match spectrum.exact_entries() {
        Some((den, entries)) => {
            let sum: BigInt = entries.iter().map(|(v, m)| BigInt::from(*v) * BigInt::from(m.clone())).sum();
            signed_ratio_to_f64(&sum, &(total * den as u64))
        }
        None => spectrum.iter().map(|(v, m)| v * ratio_to_f64(m, &total)).sum(),
    }
}

/// Multiplicity-weighted central variance.
pub fn variance(spectrum: &Spectrum) -> f64 {
    let total = spectrum.total_multiplicity();
    match spectrum.exact_entries() {
        Some((den, entries)) => {
            // (T * sum m v^2 - (sum m v)^2) / (T^2 den^2), all exact.
            let t = BigInt::from(total.clone());
            let (s1, s2) = entries.iter().fold((BigInt::zero(), BigInt::zero()), |(s1, s2), (v, m)| {
                let m = BigInt::from(m.clone());
                let v = BigInt::from(*v);
                (s1 + &m * &v, s2 + &m * &v * &v)
            });
            let numerator = &t * s2 - &s1 * &s1;
            let denominator = &total * &total * (den as u64) * (den as u64);
            signed_ratio_to_f64(&numerator, &denominator)
        }
        None => {
            let mu = mean(spectrum);
            spectrum
                .iter()
                .map(|(v, m)| (v - mu) * (v - mu) * ratio_to_f64(m, &total))
                .sum()
        }
    }
}

/// Mean for `order = 1`, central variance for `order = 2`.
pub fn moments(spectrum: &Spectrum, order: u32) -> Result<f64> {
    match order {
        1 => Ok(mean(spectrum)),
        2 => Ok(variance(spectrum)),
        _ => Err(Error::InvalidParameter(format!("moment order must be 1 or 2, got {order}"))),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapPoint {
    pub iterations: u32,
    pub gap: f64,
    pub exact: Option<Ratio<i64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapCurve {
    pub points: Vec<GapPoint>,
    /// Set when the largest eigenvalue is repeated, i.e. the base graph is
    /// disconnected and the gap is taken between distinct values.
    pub warnings: Vec<String>,
}

/// Walk-spectrum gap for `N = 0..=n_max`, computed symbolically.
pub fn gap_decay_curve(graph: &Graph, n_max: u32) -> Result<GapCurve> {
    gap_decay_curve_from(&base_spectrum(graph)?, n_max)
}

pub fn gap_decay_curve_from(base: &Spectrum, n_max: u32) -> Result<GapCurve> {
    let mut warnings = Vec::new();
    let top = base.multiplicity(base.len() - 1);
    if !top.is_one() {
        warnings.push(format!(
            "largest eigenvalue has multiplicity {top}; base graph is disconnected"
        ));
    }
    let points = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let walk = base.shift_iterate(n)?.normalize_walk()?;
            Ok(GapPoint {
                iterations: n,
                gap: spectral_gap(&walk)?,
                exact: exact_spectral_gap(&walk)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GapCurve { points, warnings })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSummary {
    pub gap: f64,
    /// Gap of the matching walk spectrum.
    pub normalized_gap: f64,
    pub mean: f64,
    pub variance: f64,
    pub symmetry_defect: f64,
    pub kolmogorov_to_step_at_zero: f64,
    /// Laplacian spectra only.
    pub kolmogorov_to_uniform_0_2: Option<f64>,
    /// Laplacian spectra only.
    pub kolmogorov_to_step_at_one: Option<f64>,
}

pub fn summarize(spectrum: &Spectrum) -> Result<DistributionSummary> {
    let gap = spectral_gap(spectrum)?;
    let normalized_gap = match spectrum.kind() {
        SpectrumKind::Adjacency => gap / spectrum.degree() as f64,
        SpectrumKind::Walk => gap,
        // Smallest nonzero gap at the bottom mirrors the walk gap at the top.
        SpectrumKind::Laplacian => spectrum.value(1).to_f64() - spectrum.value(0).to_f64(),
    };
    let cdf = ecdf(spectrum)?;
    let laplacian = spectrum.kind() == SpectrumKind::Laplacian;
    Ok(DistributionSummary {
        gap,
        normalized_gap,
        mean: mean(spectrum),
        variance: variance(spectrum),
        symmetry_defect: symmetry_defect(spectrum)?,
        kolmogorov_to_step_at_zero: kolmogorov_distance(&cdf, &ReferenceCdf::StepAt(0.0)),
        kolmogorov_to_uniform_0_2: laplacian
            .then(|| kolmogorov_distance(&cdf, &ReferenceCdf::Uniform { lo: 0.0, hi: 2.0 })),
        kolmogorov_to_step_at_one: laplacian
            .then(|| kolmogorov_distance(&cdf, &ReferenceCdf::StepAt(1.0))),
    })
}

/// Direction of a sequence of measurements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    StrictlyIncreasing,
    StrictlyDecreasing,
    Constant,
    NonMonotone,
}

impl Trend {
    /// Fewer than two values count as constant.
    pub fn of(values: &[f64]) -> Trend {
        let pairs = || values.windows(2).map(|w| (w[0], w[1]));
        if pairs().all(|(a, b)| a == b) {
            Trend::Constant
        } else if pairs().all(|(a, b)| b > a) {
            Trend::StrictlyIncreasing
        } else if pairs().all(|(a, b)| b < a) {
            Trend::StrictlyDecreasing
        } else {
            Trend::NonMonotone
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Trend::StrictlyIncreasing => "strictly-increasing",
            Trend::StrictlyDecreasing => "strictly-decreasing",
            Trend::Constant => "constant",
            Trend::NonMonotone => "non-monotone",
        }
    }
}

impl std::fmt::Display for Trend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}
