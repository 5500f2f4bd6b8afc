//! `cylspec`: spectra of iterated graph cylinders from the command line.
//!
//! Every command prints `key=value` lines on stdout. Exit status is 0 on
//! success, 1 for invalid input or a failed check, and 2 for I/O failures
//! and size guards.

mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cylinder_spectra::analysis::{
    ecdf, exact_spectral_gap, gap_decay_curve_from, histogram, kolmogorov_distance, summarize, ReferenceCdf,
};
use cylinder_spectra::io::{self, format_significant as fmt};
use cylinder_spectra::plot::{emit_plot_svg, LogisticOverlay, Plot};
use cylinder_spectra::report::write_report;
use cylinder_spectra::verify::{fixtures, verify_grid};
use cylinder_spectra::{Error, Limits, Result, Spectrum, SpectrumKind};

use source::{parse_iterations, Iterations, Source};

#[derive(Parser)]
#[command(name = "cylspec", version, about = "Spectra of iterated graph cylinders G x K2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Largest matrix handed to the dense eigensolver.
    #[arg(long, default_value_t = 4096)]
    dense_cap: usize,
    /// Largest explicitly constructed graph, in vertices.
    #[arg(long, default_value_t = 1 << 16)]
    explicit_cap: usize,
}

impl LimitArgs {
    fn limits(self) -> Limits {
        Limits {
            explicit_vertices: self.explicit_cap,
            dense_dimension: self.dense_cap,
            ..Limits::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph (optionally its N-th cylinder iterate) as an edge list.
    Gen {
        /// cycle, complete, hypercube, petersen, or a combined name like cycle-6.
        family: String,
        /// Size parameter (vertices for cycle/complete, dimension for hypercube).
        param: Option<String>,
        /// Cylinder iterations applied before writing.
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Edge-list destination.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Compute the spectrum of the N-th iterate symbolically.
    Spectrum {
        /// family-param name or edge-list path.
        source: String,
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// adjacency, walk, or laplacian.
        #[arg(long, default_value = "adjacency")]
        kind: SpectrumKind,
        /// Spectrum document (JSON) destination.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Spectral gap of the walk matrix for N = 0..=n-max.
    Gap {
        source: String,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        /// CSV destination (columns N,gap,gap_exact).
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Histogram and CDF output for one or several iteration counts.
    Dist {
        source: String,
        /// Iteration count, list (1,5,20), or inclusive range (0..4).
        #[arg(long, default_value = "0", value_parser = parse_iterations)]
        n: Iterations,
        #[arg(long, default_value = "adjacency")]
        kind: SpectrumKind,
        /// Histogram bins; defaults to unit bins for integer spectra, else 40.
        #[arg(long)]
        bins: Option<usize>,
        /// Histogram range as lo,hi; defaults to the spectrum's support.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Histogram CSV destination (single N only).
        #[arg(long)]
        out: Option<PathBuf>,
        /// CDF CSV destination (single N only).
        #[arg(long)]
        cdf_out: Option<PathBuf>,
        /// SVG destination: a histogram, or overlaid CDFs with --family.
        #[arg(long)]
        out_svg: Option<PathBuf>,
        /// Plot all requested N as one CDF family.
        #[arg(long)]
        family: bool,
        /// Dashed logistic overlay with this steepness, centered at 0 (CDF family only).
        #[arg(long)]
        logistic: Option<f64>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Cross-check the symbolic spectrum against dense eigensolves.
    Verify {
        /// Sources to check; see --all for the built-in fixtures.
        sources: Vec<String>,
        /// Check every built-in fixture.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = "0..4", value_parser = parse_iterations)]
        n: Iterations,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Write figures, tables, and a verification summary into a directory.
    Report {
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

fn kv(key: &str, value: impl std::fmt::Display) {
    println!("{key}={value}");
}

fn iterate(base: &Spectrum, n: u32, kind: SpectrumKind) -> Result<Spectrum> {
    let adjacency = base.shift_iterate(n)?;
    match kind {
        SpectrumKind::Adjacency => Ok(adjacency),
        SpectrumKind::Walk => adjacency.normalize_walk(),
        SpectrumKind::Laplacian => adjacency.laplacian_spectrum(),
    }
}

fn cmd_gen(family: &str, param: Option<&str>, n: u32, out: Option<PathBuf>, limits: Limits) -> Result<()> {
    let source = match param {
        Some(p) => Source::named(family, Some(p))?,
        None => Source::parse(family)?,
    };
    let graph = source.graph(&limits)?.iterate_cylinder_capped(n, limits.explicit_vertices)?;
    if let Some(path) = &out {
        std::fs::write(path, io::write_edge_list(&graph))?;
        kv("out", path.display());
    }
    kv("source", source.name());
    kv("iterations", n);
    kv("vertices", graph.vertex_count());
    kv("edges", graph.edge_count());
    match graph.check_regular() {
        Ok(k) => kv("k", k),
        Err(_) => kv("k", "irregular"),
    }
    kv("bipartite", graph.is_bipartite());
    kv("connected", graph.is_connected());
    kv("girth", graph.girth());
    Ok(())
}

fn cmd_spectrum(source: &str, n: u32, kind: SpectrumKind, out: Option<PathBuf>, limits: Limits) -> Result<()> {
    let source = Source::parse(source)?;
    let spectrum = iterate(&source.base_spectrum(&limits)?, n, kind)?;
    if let Some(path) = &out {
        std::fs::write(path, io::write_spectrum(&spectrum))?;
        kv("out", path.display());
    }
    let summary = summarize(&spectrum)?;
    kv("source", source.name());
    kv("kind", kind);
    kv("iterations", n);
    kv("distinct_values", spectrum.len());
    kv("total_multiplicity", spectrum.total_multiplicity());
    kv("exact", spectrum.is_exact());
    kv("gap", fmt(summary.gap));
    if let Some(g) = exact_spectral_gap(&spectrum)? {
        kv("gap_exact", g);
    }
    kv("mean", fmt(summary.mean));
    kv("variance", fmt(summary.variance));
    Ok(())
}

fn cmd_gap(source: &str, n_max: u32, out: Option<PathBuf>, limits: Limits) -> Result<()> {
    let source = Source::parse(source)?;
    let curve = gap_decay_curve_from(&source.base_spectrum(&limits)?, n_max)?;
    if let Some(path) = &out {
        io::emit_gap_csv(&curve, path)?;
        kv("out", path.display());
    }
    kv("source", source.name());
    for p in &curve.points {
        let exact = p.exact.map(|r| r.to_string()).unwrap_or_default();
        println!("n={} gap={} gap_exact={}", p.iterations, fmt(p.gap), exact);
    }
    for w in &curve.warnings {
        kv("warning", w);
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<(f64, f64)> {
    let bad = || Error::InvalidParameter(format!("bad range {text:?}, expected lo,hi"));
    let (lo, hi) = text.split_once(',').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

/// Unit bins centered on integers for integer spectra, else 40 bins over
/// the support.
fn default_binning(spectrum: &Spectrum, bins: Option<usize>, range: Option<(f64, f64)>) -> (usize, f64, f64) {
    let lo = spectrum.value(0).to_f64();
    let hi = spectrum.value(spectrum.len() - 1).to_f64();
    let integral = matches!(spectrum.exact_entries(), Some((1, _)));
    let (lo, hi) = match range {
        Some(r) => r,
        None if integral || lo == hi => (lo - 0.5, hi + 0.5),
        None => (lo, hi),
    };
    let bins = bins.unwrap_or(if integral { (hi - lo).round().max(1.0) as usize } else { 40 });
    (bins, lo, hi)
}

#[allow(clippy::too_many_arguments)]
fn cmd_dist(
    source: &str,
    ns: Vec<u32>,
    kind: SpectrumKind,
    bins: Option<usize>,
    range: Option<String>,
    out: Option<PathBuf>,
    cdf_out: Option<PathBuf>,
    out_svg: Option<PathBuf>,
    family: bool,
    logistic: Option<f64>,
    limits: Limits,
) -> Result<()> {
    let source = Source::parse(source)?;
    let base = source.base_spectrum(&limits)?;
    let range = range.as_deref().map(parse_range).transpose()?;
    let single = ns.len() == 1;
    if !single && (out.is_some() || cdf_out.is_some()) {
        return Err(Error::InvalidParameter("--out and --cdf-out need a single --n".into()));
    }
    if !single && out_svg.is_some() && !family {
        return Err(Error::InvalidParameter("several --n values need --family to plot".into()));
    }
    kv("source", source.name());
    kv("kind", kind);
    let mut series = Vec::new();
    for &n in &ns {
        let spectrum = iterate(&base, n, kind)?;
        let cdf = ecdf(&spectrum)?;
        let summary = summarize(&spectrum)?;
        println!(
            "n={n} jumps={} mean={} variance={} symmetry_defect={} kolmogorov_step_at_0={}",
            cdf.jump_count(),
            fmt(summary.mean),
            fmt(summary.variance),
            fmt(summary.symmetry_defect),
            fmt(kolmogorov_distance(&cdf, &ReferenceCdf::StepAt(0.0)))
        );
        if let (Some(u), Some(s)) = (summary.kolmogorov_to_uniform_0_2, summary.kolmogorov_to_step_at_one) {
            println!("n={n} kolmogorov_uniform_0_2={} kolmogorov_step_at_1={}", fmt(u), fmt(s));
        }
        if let Some(path) = &cdf_out {
            io::emit_cdf_csv(&cdf, path)?;
            kv("cdf_out", path.display());
        }
        if single && !family {
            let (bins, lo, hi) = default_binning(&spectrum, bins, range);
            let hist = histogram(&spectrum, bins, lo, hi)?;
            kv("bins", bins);
            kv("range", format!("{},{}", fmt(lo), fmt(hi)));
            if let Some(path) = &out {
                io::emit_histogram_csv(&hist, path)?;
                kv("out", path.display());
            }
            if let Some(path) = &out_svg {
                let title = format!("{} after {n} cylinder iterations", source.name());
                let x_label = format!("{kind} eigenvalue");
                let plot = Plot::Histogram {
                    title: &title,
                    x_label: &x_label,
                    bins: &hist,
                };
                emit_plot_svg(&plot, path)?;
                kv("out_svg", path.display());
            }
        }
        series.push((format!("N = {n}"), cdf));
    }
    if family {
        if let Some(path) = &out_svg {
            let title = format!("{} {kind} spectrum CDFs", source.name());
            let x_label = format!("{kind} eigenvalue");
            let plot = Plot::CdfFamily {
                title: &title,
                x_label: &x_label,
                series: &series,
                overlay: logistic.map(|steepness| LogisticOverlay { center: 0.0, steepness }),
            };
            emit_plot_svg(&plot, path)?;
            kv("out_svg", path.display());
        }
    }
    Ok(())
}

/// Returns whether every check passed.
fn cmd_verify(sources: Vec<String>, all: bool, ns: Vec<u32>, tol: f64, limits: Limits) -> Result<bool> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("--tol must be positive".into()));
    }
    let mut graphs: Vec<(String, cylinder_spectra::Graph)> = Vec::new();
    if all {
        graphs.extend(fixtures().into_iter().map(|(name, g)| (name.to_string(), g)));
    }
    for s in &sources {
        let source = Source::parse(s)?;
        graphs.push((source.name(), source.graph(&limits)?));
    }
    if graphs.is_empty() {
        return Err(Error::InvalidParameter("name at least one source or pass --all".into()));
    }
    let named: Vec<(&str, cylinder_spectra::Graph)> = graphs.iter().map(|(n, g)| (n.as_str(), g.clone())).collect();
    let reports = verify_grid(&named, &ns, tol, &limits)?;
    for r in &reports {
        println!(
            "base={} n={} eigenvalues={} max_residual={:.1e} mismatches={} passed={}",
            r.base_name,
            r.iterations,
            r.eigenvalue_count,
            r.max_residual,
            r.mismatches.len(),
            r.passed
        );
    }
    let passed = reports.iter().all(|r| r.passed);
    kv("checks", reports.len());
    kv("passed", passed);
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            family,
            param,
            n,
            out,
            limits,
        } => cmd_gen(&family, param.as_deref(), n, out, limits.limits()).map(|_| true),
        Command::Spectrum {
            source,
            n,
            kind,
            out,
            limits,
        } => cmd_spectrum(&source, n, kind, out, limits.limits()).map(|_| true),
        Command::Gap {
            source,
            n_max,
            out,
            limits,
        } => cmd_gap(&source, n_max, out, limits.limits()).map(|_| true),
        Command::Dist {
            source,
            n,
            kind,
            bins,
            range,
            out,
            cdf_out,
            out_svg,
            family,
            logistic,
            limits,
        } => cmd_dist(
            &source,
            n.0,
            kind,
            bins,
            range,
            out,
            cdf_out,
            out_svg,
            family,
            logistic,
            limits.limits(),
        )
        .map(|_| true),
        Command::Verify {
            sources,
            all,
            n,
            tol,
            limits,
        } => cmd_verify(sources, all, n.0, tol, limits.limits()),
        Command::Report { out, limits } => {
            let outcome = write_report(&out, &limits.limits())?;
            for f in &outcome.files {
                kv("file", f.display());
            }
            kv("verification_passed", outcome.verification_passed);
            Ok(outcome.verification_passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_environmental() { 2 } else { 1 })
        }
    }
}
