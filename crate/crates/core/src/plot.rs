//! Self-contained SVG charts: histogram bars and overlaid CDF step curves.
//!
//! Output depends only on the input data; numbers are written with fixed
//! precision so identical input gives byte-identical files.

use std::fmt::Write as _;
use std::path::Path;

use crate::analysis::{Cdf, EmpiricalCdf, HistogramBin};
use crate::io::format_significant;
use crate::{Error, Result};

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 760.0;
const TOP: f64 = 60.0;
const BOTTOM: f64 = 530.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

/// `x -> 1 / (1 + exp(-steepness (x - center)))`, drawn dashed over a CDF
/// family for visual comparison only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticOverlay {
    pub center: f64,
    pub steepness: f64,
}

impl LogisticOverlay {
    pub fn at(&self, x: f64) -> f64 {
        1.0 / (1.0 + (-self.steepness * (x - self.center)).exp())
    }
}

#[derive(Debug, Clone)]
pub enum Plot<'a> {
    Histogram {
        title: &'a str,
        x_label: &'a str,
        bins: &'a [HistogramBin],
    },
    CdfFamily {
        title: &'a str,
        x_label: &'a str,
        series: &'a [(String, EmpiricalCdf)],
        overlay: Option<LogisticOverlay>,
    },
}

struct Frame {
    x_lo: f64,
    x_hi: f64,
    y_lo: f64,
    y_hi: f64,
}

impl Frame {
    fn x(&self, v: f64) -> f64 {
        LEFT + (v - self.x_lo) / (self.x_hi - self.x_lo) * (RIGHT - LEFT)
    }

    fn y(&self, v: f64) -> f64 {
        BOTTOM - (v - self.y_lo) / (self.y_hi - self.y_lo) * (BOTTOM - TOP)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Tick positions on a 1-2-5 grid covering `[lo, hi]`.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let raw = (hi - lo) / 6.0;
    let magnitude = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * magnitude)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * magnitude);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|i| i as f64 * step).collect()
}

fn tick_label(v: f64) -> String {
    // Strip representation noise like 0.30000000000000004.
    let rounded: f64 = format!("{v:.10}").parse().expect("finite tick");
    format_significant(if rounded == 0.0 { 0.0 } else { rounded })
}

fn open(svg: &mut String, frame: &Frame, title: &str, x_label: &str, y_label: &str) {
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" width=\"{WIDTH}\" height=\"{HEIGHT}\" font-family=\"sans-serif\" font-size=\"13\">"
    );
    let _ = writeln!(svg, "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
    let _ = writeln!(
        svg,
        "<text x=\"{:.2}\" y=\"32\" text-anchor=\"middle\" font-size=\"17\">{}</text>",
        (LEFT + RIGHT) / 2.0,
        escape(title)
    );
    let _ = writeln!(svg, "<g stroke=\"black\" stroke-width=\"1\">");
    let _ = writeln!(svg, "<line x1=\"{LEFT}\" y1=\"{BOTTOM}\" x2=\"{RIGHT}\" y2=\"{BOTTOM}\"/>");
    let _ = writeln!(svg, "<line x1=\"{LEFT}\" y1=\"{BOTTOM}\" x2=\"{LEFT}\" y2=\"{TOP}\"/>");
    for t in ticks(frame.x_lo, frame.x_hi) {
        let x = frame.x(t);
        let _ = writeln!(svg, "<line x1=\"{x:.2}\" y1=\"{BOTTOM}\" x2=\"{x:.2}\" y2=\"{:.2}\"/>", BOTTOM + 5.0);
    }
    for t in ticks(frame.y_lo, frame.y_hi) {
        let y = frame.y(t);
        let _ = writeln!(svg, "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{LEFT}\" y2=\"{y:.2}\"/>", LEFT - 5.0);
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "<g fill=\"black\">");
    for t in ticks(frame.x_lo, frame.x_hi) {
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>",
            frame.x(t),
            BOTTOM + 20.0,
            tick_label(t)
        );
    }
    for t in ticks(frame.y_lo, frame.y_hi) {
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{}</text>",
            LEFT - 8.0,
            frame.y(t) + 4.0,
            tick_label(t)
        );
    }
    let _ = writeln!(
        svg,
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>",
        (LEFT + RIGHT) / 2.0,
        BOTTOM + 48.0,
        escape(x_label)
    );
    let _ = writeln!(
        svg,
        "<text x=\"20\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2})\">{}</text>",
        (TOP + BOTTOM) / 2.0,
        (TOP + BOTTOM) / 2.0,
        escape(y_label)
    );
    let _ = writeln!(svg, "</g>");
}

fn render_histogram(title: &str, x_label: &str, bins: &[HistogramBin]) -> Result<String> {
    if bins.is_empty() {
        return Err(Error::InvalidParameter("histogram plot needs at least one bin".into()));
    }
    let x_lo = bins.iter().map(|b| b.lo).fold(f64::INFINITY, f64::min);
    let x_hi = bins.iter().map(|b| b.hi).fold(f64::NEG_INFINITY, f64::max);
    let peak = bins.iter().map(|b| b.mass).fold(0.0, f64::max);
    let frame = Frame {
        x_lo,
        x_hi,
        y_lo: 0.0,
        y_hi: if peak > 0.0 { peak * 1.1 } else { 1.0 },
    };
    let mut svg = String::new();
    open(&mut svg, &frame, title, x_label, "probability mass");
    let _ = writeln!(svg, "<g fill=\"{}\" stroke=\"white\" stroke-width=\"0.5\">", PALETTE[0]);
    for b in bins {
        let (x0, x1) = (frame.x(b.lo), frame.x(b.hi));
        let y = frame.y(b.mass);
        let _ = writeln!(
            svg,
            "<rect x=\"{x0:.2}\" y=\"{y:.2}\" width=\"{:.2}\" height=\"{:.2}\"/>",
            x1 - x0,
            BOTTOM - y
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn render_cdf_family(
    title: &str,
    x_label: &str,
    series: &[(String, EmpiricalCdf)],
    overlay: Option<LogisticOverlay>,
) -> Result<String> {
    if series.is_empty() {
        return Err(Error::InvalidParameter("cdf plot needs at least one series".into()));
    }
    let values = series.iter().flat_map(|(_, c)| c.breakpoints());
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let pad = if hi > lo { 0.05 * (hi - lo) } else { 1.0 };
    let frame = Frame {
        x_lo: lo - pad,
        x_hi: hi + pad,
        y_lo: 0.0,
        y_hi: 1.0,
    };
    let mut svg = String::new();
    open(&mut svg, &frame, title, x_label, "cumulative probability");

    for (i, (_, cdf)) in series.iter().enumerate() {
        let mut d = format!("M{:.2},{:.2}", frame.x(frame.x_lo), frame.y(0.0));
        for &(v, c) in cdf.points() {
            let _ = write!(d, " H{:.2} V{:.2}", frame.x(v), frame.y(c));
        }
        let _ = write!(d, " H{:.2}", frame.x(frame.x_hi));
        let _ = writeln!(
            svg,
            "<path d=\"{d}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.8\"/>",
            PALETTE[i % PALETTE.len()]
        );
    }
    if let Some(logistic) = overlay {
        let samples = 200;
        let mut d = String::new();
        for s in 0..=samples {
            let x = frame.x_lo + (frame.x_hi - frame.x_lo) * s as f64 / samples as f64;
            let cmd = if s == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{:.2},{:.2} ", frame.x(x), frame.y(logistic.at(x)));
        }
        let _ = writeln!(
            svg,
            "<path d=\"{}\" fill=\"none\" stroke=\"gray\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"/>",
            d.trim_end()
        );
    }

    let mut labels: Vec<(String, &str, &str)> = series
        .iter()
        .enumerate()
        .map(|(i, (label, _))| (label.clone(), PALETTE[i % PALETTE.len()], ""))
        .collect();
    if overlay.is_some() {
        labels.push(("logistic".into(), "gray", " stroke-dasharray=\"6 4\""));
    }
    let _ = writeln!(svg, "<g>");
    for (i, (label, color, dash)) in labels.iter().enumerate() {
        let y = TOP + 10.0 + 22.0 * i as f64;
        let _ = writeln!(
            svg,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{color}\" stroke-width=\"2\"{dash}/>",
            RIGHT + 20.0,
            RIGHT + 50.0
        );
        let _ = writeln!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.2}\">{}</text>",
            RIGHT + 58.0,
            y + 4.0,
            escape(label)
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    Ok(svg)
}

impl Plot<'_> {
    pub fn render(&self) -> Result<String> {
        match *self {
            Plot::Histogram { title, x_label, bins } => render_histogram(title, x_label, bins),
            Plot::CdfFamily {
                title,
                x_label,
                series,
                overlay,
            } => render_cdf_family(title, x_label, series, overlay),
        }
    }
}

pub fn emit_plot_svg(plot: &Plot<'_>, path: &Path) -> Result<()> {
    let svg = plot.render()?;
    std::fs::write(path, svg)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{ecdf, histogram};
    use crate::spectrum::{base_spectrum, hypercube_spectrum};
    use crate::Graph;

    fn q2_walk_family() -> Vec<(String, EmpiricalCdf)> {
        let q2 = hypercube_spectrum(2).unwrap();
        [1, 5, 20, 100]
            .iter()
            .map(|&n| {
                let s = q2.shift_iterate(n).unwrap().normalize_walk().unwrap();
                (format!("N = {n}"), ecdf(&s).unwrap())
            })
            .collect()
    }

    #[test]
    fn histogram_svg_has_one_rect_per_bin() {
        let k5 = base_spectrum(&Graph::complete(5).unwrap()).unwrap().shift_iterate(10).unwrap();
        let bins = histogram(&k5, 26, -11.5, 14.5).unwrap();
        let svg = Plot::Histogram {
            title: "K5, N = 10",
            x_label: "eigenvalue",
            bins: &bins,
        }
        .render()
        .unwrap();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(svg.contains("viewBox=\"0 0 960 600\""));
        // 26 bars plus the background rect.
        assert_eq!(svg.matches("<rect").count(), 27);
    }

    #[test]
    fn single_bar_and_empty_input() {
        let bins = [HistogramBin {
            lo: 0.0,
            hi: 1.0,
            mass: 1.0,
        }];
        let svg = Plot::Histogram {
            title: "one",
            x_label: "x",
            bins: &bins,
        }
        .render()
        .unwrap();
        assert_eq!(svg.matches("<rect").count(), 2);
        let empty = Plot::Histogram {
            title: "none",
            x_label: "x",
            bins: &[],
        };
        assert!(matches!(empty.render(), Err(Error::InvalidParameter(_))));
        let empty = Plot::CdfFamily {
            title: "none",
            x_label: "x",
            series: &[],
            overlay: None,
        };
        assert!(matches!(empty.render(), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn cdf_family_has_curves_and_legend() {
        let family = q2_walk_family();
        let plot = Plot::CdfFamily {
            title: "Q2 walk CDFs",
            x_label: "eigenvalue",
            series: &family,
            overlay: Some(LogisticOverlay {
                center: 0.0,
                steepness: 10.0,
            }),
        };
        let svg = plot.render().unwrap();
        assert_eq!(svg.matches("<path").count(), 5);
        for n in [1, 5, 20, 100] {
            assert!(svg.contains(&format!(">N = {n}</text>")));
        }
        assert!(svg.contains(">logistic</text>"));
        assert_eq!(svg, plot.render().unwrap());
    }

    #[test]
    fn text_is_escaped() {
        let bins = [HistogramBin {
            lo: 0.0,
            hi: 1.0,
            mass: 0.5,
        }];
        let svg = Plot::Histogram {
            title: "a < b & c",
            x_label: "x",
            bins: &bins,
        }
        .render()
        .unwrap();
        assert!(svg.contains("a &lt; b &amp; c"));
    }

    #[test]
    fn tick_grid() {
        assert_eq!(ticks(0.0, 1.0), vec![0.0, 0.2, 0.4, 0.6000000000000001, 0.8, 1.0]);
        assert_eq!(tick_label(0.6000000000000001), "0.6");
        assert_eq!(ticks(-11.5, 14.5), vec![-10.0, -5.0, 0.0, 5.0, 10.0]);
    }
}
