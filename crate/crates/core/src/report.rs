//! One-shot reproduction bundle: two figures, three tables, one summary.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::analysis::{
    ecdf, gap_decay_curve_from, histogram, kolmogorov_distance, mass_outside, symmetry_defect, ReferenceCdf,
    Trend,
};
use crate::io::{emit_gap_csv, emit_histogram_csv, format_significant, write_file};
use crate::plot::{emit_plot_svg, Plot};
use crate::spectrum::{base_spectrum, hypercube_spectrum, Spectrum};
use crate::verify::{fixtures, verify_grid};
use crate::{Graph, Limits, Result};

pub const HISTOGRAM_SVG: &str = "k5_n10_histogram.svg";
pub const CDF_FAMILY_SVG: &str = "q2_walk_cdfs.svg";
pub const HISTOGRAM_CSV: &str = "k5_n10_histogram.csv";
pub const GAP_CSV: &str = "q2_gap.csv";
pub const LAPLACIAN_CSV: &str = "q2_laplacian_distances.csv";
pub const SUMMARY_TXT: &str = "summary.txt";

/// Iteration counts overlaid in the CDF-family figure.
pub const CDF_FAMILY_ITERATIONS: [u32; 4] = [1, 5, 20, 100];
/// Iteration counts of the Laplacian distance table.
pub const LAPLACIAN_ITERATIONS: [u32; 3] = [10, 100, 1000];
pub const GAP_MAX_ITERATIONS: u32 = 20;
/// Iterations and tolerance of the verification grid in the summary.
pub const VERIFY_ITERATIONS: [u32; 5] = [0, 1, 2, 3, 4];
pub const VERIFY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianDistance {
    pub iterations: u32,
    pub to_uniform_0_2: f64,
    pub to_step_at_one: f64,
}

/// Kolmogorov distances of the `Q_2` Laplacian spectrum to uniform-[0, 2]
/// and to a unit step at 1.
pub fn laplacian_distances(iterations: &[u32]) -> Result<Vec<LaplacianDistance>> {
    let q2 = hypercube_spectrum(2)?;
    iterations
        .iter()
        .map(|&n| {
            let cdf = ecdf(&q2.shift_iterate(n)?.laplacian_spectrum()?)?;
            Ok(LaplacianDistance {
                iterations: n,
                to_uniform_0_2: kolmogorov_distance(&cdf, &ReferenceCdf::Uniform { lo: 0.0, hi: 2.0 }),
                to_step_at_one: kolmogorov_distance(&cdf, &ReferenceCdf::StepAt(1.0)),
            })
        })
        .collect()
}

fn k5_iterate() -> Result<Spectrum> {
    base_spectrum(&Graph::complete(5)?)?.shift_iterate(10)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportOutcome {
    pub files: Vec<PathBuf>,
    pub verification_passed: bool,
}

/// Writes the bundle into `out_dir`, creating it if needed. Contents depend
/// only on `limits`.
pub fn write_report(out_dir: &Path, limits: &Limits) -> Result<ReportOutcome> {
    fs::create_dir_all(out_dir)?;
    let path = |name: &str| out_dir.join(name);
    let mut summary = String::new();

    // Asymmetric histogram of a non-bipartite base.
    let k5 = k5_iterate()?;
    let bins = histogram(&k5, 26, -11.5, 14.5)?;
    emit_histogram_csv(&bins, &path(HISTOGRAM_CSV))?;
    emit_plot_svg(
        &Plot::Histogram {
            title: "K5 after 10 cylinder iterations",
            x_label: "adjacency eigenvalue",
            bins: &bins,
        },
        &path(HISTOGRAM_SVG),
    )?;
    let odd_mass: f64 = bins
        .iter()
        .filter(|b| (b.lo + 0.5).rem_euclid(2.0) == 1.0)
        .map(|b| b.mass)
        .sum();
    let _ = writeln!(summary, "k5_n10_distinct_values={}", k5.len());
    let _ = writeln!(summary, "k5_n10_symmetry_defect={}", format_significant(symmetry_defect(&k5)?));
    let _ = writeln!(summary, "k5_n10_mass_odd_support={}", format_significant(odd_mass));
    let _ = writeln!(summary, "k5_n10_mass_even_support={}", format_significant(1.0 - odd_mass));

    // Walk CDFs tightening around zero.
    let q2 = hypercube_spectrum(2)?;
    let family = CDF_FAMILY_ITERATIONS
        .iter()
        .map(|&n| Ok((format!("N = {n}"), ecdf(&q2.shift_iterate(n)?.normalize_walk()?)?)))
        .collect::<Result<Vec<_>>>()?;
    emit_plot_svg(
        &Plot::CdfFamily {
            title: "Q2 walk spectrum CDFs",
            x_label: "walk eigenvalue",
            series: &family,
            overlay: None,
        },
        &path(CDF_FAMILY_SVG),
    )?;
    let walk_n = [10u32, 100, 1000, 2000];
    let mut distances = Vec::new();
    for &n in &walk_n {
        let walk = q2.shift_iterate(n)?.normalize_walk()?;
        let d = kolmogorov_distance(&ecdf(&walk)?, &ReferenceCdf::StepAt(0.0));
        let _ = writeln!(summary, "q2_walk_n{n}_kolmogorov_step_at_0={}", format_significant(d));
        let _ = writeln!(
            summary,
            "q2_walk_n{n}_mass_outside_0.1={}",
            format_significant(mass_outside(&walk, -0.1, 0.1))
        );
        distances.push(d);
    }
    let _ = writeln!(summary, "q2_walk_kolmogorov_step_at_0_trend={}", Trend::of(&distances));

    let curve = gap_decay_curve_from(&q2, GAP_MAX_ITERATIONS)?;
    emit_gap_csv(&curve, &path(GAP_CSV))?;
    for w in &curve.warnings {
        let _ = writeln!(summary, "gap_warning={w}");
    }

    let laplacian = laplacian_distances(&LAPLACIAN_ITERATIONS)?;
    write_file(&path(LAPLACIAN_CSV), |out| {
        use std::io::Write;
        writeln!(out, "N,kolmogorov_uniform_0_2,kolmogorov_step_at_1")?;
        for row in &laplacian {
            writeln!(
                out,
                "{},{},{}",
                row.iterations,
                format_significant(row.to_uniform_0_2),
                format_significant(row.to_step_at_one)
            )?;
        }
        Ok(())
    })?;
    let uniform: Vec<f64> = laplacian.iter().map(|r| r.to_uniform_0_2).collect();
    let step: Vec<f64> = laplacian.iter().map(|r| r.to_step_at_one).collect();
    let _ = writeln!(summary, "q2_laplacian_uniform_0_2_trend={}", Trend::of(&uniform));
    let _ = writeln!(summary, "q2_laplacian_step_at_1_trend={}", Trend::of(&step));

    let reports = verify_grid(&fixtures(), &VERIFY_ITERATIONS, VERIFY_TOLERANCE, limits)?;
    let verification_passed = reports.iter().all(|r| r.passed);
    for r in &reports {
        let _ = writeln!(
            summary,
            "verify base={} n={} eigenvalues={} max_residual={:.1e} passed={}",
            r.base_name, r.iterations, r.eigenvalue_count, r.max_residual, r.passed
        );
    }
    let _ = writeln!(summary, "verification_passed={verification_passed}");
    fs::write(path(SUMMARY_TXT), &summary)?;

    let files = [HISTOGRAM_SVG, CDF_FAMILY_SVG, HISTOGRAM_CSV, GAP_CSV, LAPLACIAN_CSV, SUMMARY_TXT]
        .iter()
        .map(|n| path(n))
        .collect();
    Ok(ReportOutcome {
        files,
        verification_passed,
    })
}
