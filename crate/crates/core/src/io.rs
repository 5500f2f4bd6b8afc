//! Edge lists, spectrum documents, and CSV tables.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! vertices 3
//! 0 1
//! 0 2
//! 1 2
//! ```
//!
//! Spectrum document (JSON): `kind`, `base_regularity`, `iterations`,
//! `base_vertex_count`, and `entries`, each entry holding `value` as a
//! string (`"p/q"` or `"p"` for exact values, a decimal with `.` or an
//! exponent for floating ones) and `multiplicity` as a decimal integer
//! string.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::analysis::{EmpiricalCdf, GapCurve, HistogramBin};
use crate::spectrum::{Spectrum, SpectrumKind};
use crate::{Error, Graph, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = vertex_count else {
            match tokens.as_slice() {
                ["vertices", n] => {
                    let n = n
                        .parse()
                        .map_err(|_| parse_err(format!("bad vertex count {n:?}")))?;
                    vertex_count = Some(n);
                    continue;
                }
                _ => return Err(parse_err("expected header \"vertices <n>\"".into())),
            }
        };
        let [u, v] = tokens.as_slice() else {
            return Err(parse_err(format!("expected \"u v\", got {line:?}")));
        };
        let u: usize = u.parse().map_err(|_| parse_err(format!("bad vertex index {u:?}")))?;
        let v: usize = v.parse().map_err(|_| parse_err(format!("bad vertex index {v:?}")))?;
        if u >= n || v >= n {
            return Err(Error::Validation(format!(
                "line {line_no}: vertex index out of range 0..{n} in edge ({u}, {v})"
            )));
        }
        if u == v {
            return Err(Error::Validation(format!("line {line_no}: self-loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::Validation(format!(
                "line {line_no}: duplicate edge ({}, {})",
                key.0, key.1
            )));
        }
        edges.push(key);
    }
    let n = vertex_count.ok_or(Error::Parse {
        line: 0,
        message: "missing \"vertices <n>\" header".into(),
    })?;
    Graph::new(n, edges)
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("vertices {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpectrumDocument {
    kind: String,
    base_regularity: u32,
    iterations: u32,
    base_vertex_count: u64,
    entries: Vec<EntryDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDocument {
    value: String,
    multiplicity: String,
}

pub fn write_spectrum(spectrum: &Spectrum) -> String {
    let doc = SpectrumDocument {
        kind: spectrum.kind().to_string(),
        base_regularity: spectrum.base_regularity(),
        iterations: spectrum.iterations(),
        base_vertex_count: spectrum.base_vertex_count(),
        entries: (0..spectrum.len())
            .map(|i| EntryDocument {
                value: spectrum.value(i).to_string(),
                multiplicity: spectrum.multiplicity(i).to_string(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

/// Content errors inside a well-formed JSON document carry line 0.
fn document_error(message: String) -> Error {
    Error::Parse { line: 0, message }
}

enum ParsedValue {
    Exact(i64, i64),
    Approx(f64),
}

fn parse_value(text: &str) -> Result<ParsedValue> {
    let bad = || document_error(format!("malformed eigenvalue {text:?}"));
    if text.contains(['.', 'e', 'E']) {
        let x: f64 = text.parse().map_err(|_| bad())?;
        return if x.is_finite() { Ok(ParsedValue::Approx(x)) } else { Err(bad()) };
    }
    let (p, q) = text.split_once('/').unwrap_or((text, "1"));
    if !q.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(ParsedValue::Exact(p, q))
}

pub fn parse_spectrum(text: &str) -> Result<Spectrum> {
    let doc: SpectrumDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let kind: SpectrumKind = doc
        .kind
        .parse()
        .map_err(|_| document_error(format!("unknown spectrum kind {:?}", doc.kind)))?;
    if doc.entries.is_empty() {
        return Err(Error::Validation("spectrum document has no entries".into()));
    }
    let mut exact = Vec::new();
    let mut approx = Vec::new();
    for entry in &doc.entries {
        let m = &entry.multiplicity;
        if m.starts_with('-') {
            return Err(document_error(format!("negative multiplicity {m:?}")));
        }
        let multiplicity: BigUint = m
            .parse()
            .map_err(|_| document_error(format!("malformed multiplicity {m:?}")))?;
        match parse_value(&entry.value)? {
            ParsedValue::Exact(p, q) => exact.push(((p, q), multiplicity)),
            ParsedValue::Approx(x) => approx.push((x, multiplicity)),
        }
    }
    match (exact.is_empty(), approx.is_empty()) {
        (false, true) => {
            let degree = doc.base_regularity as i64 + doc.iterations as i64;
            let denominator = if kind == SpectrumKind::Adjacency { 1 } else { degree.max(1) };
            let entries = exact
                .into_iter()
                .map(|((p, q), m)| {
                    if denominator % q != 0 {
                        return Err(Error::Validation(format!(
                            "value {p}/{q} is not a multiple of 1/{denominator}"
                        )));
                    }
                    Ok((p * (denominator / q), m))
                })
                .collect::<Result<Vec<_>>>()?;
            Spectrum::from_exact(kind, doc.base_regularity, doc.iterations, doc.base_vertex_count, entries)
        }
        (true, false) => Spectrum::from_approx(kind, doc.base_regularity, doc.iterations, doc.base_vertex_count, approx),
        _ => Err(Error::Validation("document mixes exact and floating values".into())),
    }
}

/// `%.15g`-style formatting: 15 significant digits, trailing zeros removed,
/// scientific notation only for very large or small magnitudes.
pub fn format_significant(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.14e}", x);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..15).contains(&exponent) {
        let decimals = (14 - exponent).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa.to_string()), sign, exponent.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn write_cdf_csv<W: Write>(out: &mut W, cdf: &EmpiricalCdf) -> Result<()> {
    writeln!(out, "value,cumulative")?;
    for &(v, c) in cdf.points() {
        writeln!(out, "{},{}", format_significant(v), format_significant(c))?;
    }
    Ok(())
}

pub fn write_histogram_csv<W: Write>(out: &mut W, bins: &[HistogramBin]) -> Result<()> {
    if bins.is_empty() {
        return Err(Error::InvalidParameter("histogram has no bins".into()));
    }
    writeln!(out, "bin_lo,bin_hi,mass")?;
    for b in bins {
        writeln!(
            out,
            "{},{},{}",
            format_significant(b.lo),
            format_significant(b.hi),
            format_significant(b.mass)
        )?;
    }
    Ok(())
}

pub fn write_gap_csv<W: Write>(out: &mut W, curve: &GapCurve) -> Result<()> {
    writeln!(out, "N,gap,gap_exact")?;
    for p in &curve.points {
        let exact = p
            .exact
            .map(|r| format!("{}/{}", r.numer(), r.denom()))
            .unwrap_or_default();
        writeln!(out, "{},{},{}", p.iterations, format_significant(p.gap), exact)?;
    }
    Ok(())
}

/// Writes through `write` into a freshly created file at `path`.
pub fn write_file<F>(path: &Path, write: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> Result<()>,
{
    let mut out = BufWriter::new(File::create(path)?);
    write(&mut out)?;
    out.flush()?;
    Ok(())
}

pub fn emit_cdf_csv(cdf: &EmpiricalCdf, path: &Path) -> Result<()> {
    write_file(path, |out| write_cdf_csv(out, cdf))
}

pub fn emit_histogram_csv(bins: &[HistogramBin], path: &Path) -> Result<()> {
    if bins.is_empty() {
        return Err(Error::InvalidParameter("histogram has no bins".into()));
    }
    write_file(path, |out| write_histogram_csv(out, bins))
}

pub fn emit_gap_csv(curve: &GapCurve, path: &Path) -> Result<()> {
    write_file(path, |out| write_gap_csv(out, curve))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{ecdf, histogram};
    use crate::binomial::binomial;
    use crate::spectrum::hypercube_spectrum;
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("vertices 3\n0 1\n0 2\n1 2").unwrap();
        assert_eq!(g, Graph::cycle(3).unwrap());
        assert!(matches!(parse_edge_list("vertices 2\n0 0"), Err(Error::Validation(_))));
        assert!(matches!(parse_edge_list("vertices 2\n0 5"), Err(Error::Validation(_))));
        assert!(matches!(parse_edge_list("vertices 3\n0 1\n1 0"), Err(Error::Validation(_))));
        assert!(matches!(
            parse_edge_list("vertices 3\n0 1\n1 x"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_edge_list("0 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("# only\n"), Err(Error::Parse { .. })));
        let with_comments = "# triangle\n\nvertices 3\n# edges\n0 1\n1 2\n2 0\n";
        assert_eq!(parse_edge_list(with_comments).unwrap(), Graph::cycle(3).unwrap());
    }

    #[test]
    fn edge_list_round_trip_for_fixtures() {
        for (_, g) in crate::verify::fixtures() {
            let parsed = parse_edge_list(&write_edge_list(&g)).unwrap();
            assert_eq!(parsed.edges(), g.edges());
            assert_eq!(parsed.vertex_count(), g.vertex_count());
        }
    }

    #[test]
    fn spectrum_document_examples() {
        let q2 = hypercube_spectrum(2).unwrap();
        let text = write_spectrum(&q2);
        assert!(text.contains("\"value\": \"-2\""));
        assert_eq!(parse_spectrum(&text).unwrap(), q2);

        let walk = q2.shift_iterate(1).unwrap().normalize_walk().unwrap();
        let text = write_spectrum(&walk);
        assert!(text.contains("\"-1/3\""));
        assert_eq!(parse_spectrum(&text).unwrap(), walk);

        // C(100, 50) survives as an exact decimal string.
        let big = hypercube_spectrum(2).unwrap().shift_iterate(98).unwrap();
        let text = write_spectrum(&big);
        assert!(text.contains(&binomial(100, 50).to_string()));
        assert_eq!(parse_spectrum(&text).unwrap(), big);

        let c5 = crate::spectrum::base_spectrum(&Graph::cycle(5).unwrap()).unwrap();
        let lap = c5.shift_iterate(3).unwrap().laplacian_spectrum().unwrap();
        assert_eq!(parse_spectrum(&write_spectrum(&lap)).unwrap(), lap);
    }

    fn doc(kind: &str, entries: &str) -> String {
        format!(
            "{{\"kind\":\"{kind}\",\"base_regularity\":1,\"iterations\":0,\"base_vertex_count\":2,\"entries\":[{entries}]}}"
        )
    }

    #[test]
    fn spectrum_document_errors() {
        let ok = "{\"value\":\"-1\",\"multiplicity\":\"1\"},{\"value\":\"1\",\"multiplicity\":\"1\"}";
        assert!(parse_spectrum(&doc("adjacency", ok)).is_ok());
        assert!(matches!(parse_spectrum(&doc("adjacency", "")), Err(Error::Validation(_))));
        assert!(matches!(parse_spectrum(&doc("hessian", ok)), Err(Error::Parse { .. })));
        let negative = "{\"value\":\"-1\",\"multiplicity\":\"-1\"},{\"value\":\"1\",\"multiplicity\":\"3\"}";
        assert!(matches!(parse_spectrum(&doc("adjacency", negative)), Err(Error::Parse { .. })));
        for bad in ["1/0", "1/x", "1//2", "abc", "1/-2", "inf.0"] {
            let e = format!("{{\"value\":\"{bad}\",\"multiplicity\":\"1\"}},{{\"value\":\"1\",\"multiplicity\":\"1\"}}");
            assert!(matches!(parse_spectrum(&doc("walk", &e)), Err(Error::Parse { .. })), "{bad}");
        }
        let mixed = "{\"value\":\"-1.0\",\"multiplicity\":\"1\"},{\"value\":\"1\",\"multiplicity\":\"1\"}";
        assert!(parse_spectrum(&doc("adjacency", mixed)).is_err());
        assert!(matches!(parse_spectrum("{\n\"kind\": 3"), Err(Error::Parse { .. })));
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(0.25), "0.25");
        assert_eq!(format_significant(1.0), "1");
        assert_eq!(format_significant(-1.0 / 3.0), "-0.333333333333333");
        assert_eq!(format_significant(2.0 / 3.0), "0.666666666666667");
        assert_eq!(format_significant(-11.5), "-11.5");
        assert_eq!(format_significant(6.929233780690795e-06), "6.92923378069079e-06");
        assert_eq!(format_significant(123456.0), "123456");
        assert_eq!(format_significant(0.0), "0");
        assert_eq!(format_significant(1e20), "1e+20");
        assert_eq!(format_significant(0.0001), "0.0001");
    }

    #[test]
    fn csv_writers() {
        let cdf = ecdf(&hypercube_spectrum(2).unwrap().normalize_walk().unwrap()).unwrap();
        let mut buf = Vec::new();
        write_cdf_csv(&mut buf, &cdf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "value,cumulative\n-1,0.25\n0,0.75\n1,1\n");
        assert!(matches!(write_histogram_csv(&mut Vec::new(), &[]), Err(Error::InvalidParameter(_))));

        let k5 = crate::spectrum::base_spectrum(&Graph::complete(5).unwrap()).unwrap();
        let bins = histogram(&k5.shift_iterate(10).unwrap(), 23, -11.0, 14.0).unwrap();
        let mut buf = Vec::new();
        write_histogram_csv(&mut buf, &bins).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let rows: Vec<&str> = text.lines().skip(1).collect();
        assert_eq!(rows.len(), 23);
        let total: f64 = rows.iter().map(|r| r.rsplit(',').next().unwrap().parse::<f64>().unwrap()).sum();
        assert!((total - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn emit_to_unwritable_path_fails() {
        let cdf = ecdf(&hypercube_spectrum(2).unwrap()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        std::fs::write(&blocker, "x").unwrap();
        assert!(matches!(emit_cdf_csv(&cdf, &blocker.join("cdf.csv")), Err(Error::Io(_))));
    }

    proptest! {
        #[test]
        fn csv_numbers_reparse_closely(x in -1e6f64..1e6) {
            let back: f64 = format_significant(x).parse().unwrap();
            prop_assert!((back - x).abs() <= 1e-14 * x.abs().max(f64::MIN_POSITIVE));
        }

        #[test]
        fn spectrum_documents_round_trip(base in prop::sample::select(vec![3usize, 4, 5, 6]), n in 0u32..40, kind in 0u8..3) {
            let adjacency = crate::spectrum::base_spectrum(&Graph::cycle(base).unwrap())
                .unwrap()
                .shift_iterate(n)
                .unwrap();
            let s = match kind {
                0 => adjacency,
                1 => adjacency.normalize_walk().unwrap(),
                _ => adjacency.laplacian_spectrum().unwrap(),
            };
            prop_assert_eq!(parse_spectrum(&write_spectrum(&s)).unwrap(), s);
        }
    }
}
