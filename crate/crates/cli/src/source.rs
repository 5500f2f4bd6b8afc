//! Graph sources: `family-param` names or edge-list files.

use std::path::Path;

use cylinder_spectra::spectrum::{base_spectrum_capped, hypercube_spectrum};
use cylinder_spectra::{io, Error, Graph, Limits, Result, Spectrum};

#[derive(Debug, Clone)]
pub enum Source {
    Cycle(usize),
    Complete(usize),
    Hypercube(u32),
    Petersen,
    File(String),
}

fn param<T: std::str::FromStr>(family: &str, text: Option<&str>) -> Result<T> {
    let text = text.ok_or_else(|| Error::InvalidParameter(format!("{family} needs a size, e.g. {family}-4")))?;
    text.parse()
        .map_err(|_| Error::InvalidParameter(format!("bad {family} size {text:?}")))
}

impl Source {
    /// Existing files win over generator names.
    pub fn parse(text: &str) -> Result<Source> {
        if Path::new(text).is_file() {
            return Ok(Source::File(text.to_string()));
        }
        let (family, rest) = match text.split_once('-') {
            Some((f, r)) => (f, Some(r)),
            None => (text, None),
        };
        Source::named(family, rest)
    }

    pub fn named(family: &str, size: Option<&str>) -> Result<Source> {
        match family {
            "cycle" => Ok(Source::Cycle(param(family, size)?)),
            "complete" => Ok(Source::Complete(param(family, size)?)),
            "hypercube" => Ok(Source::Hypercube(param(family, size)?)),
            "petersen" if size.is_none() => Ok(Source::Petersen),
            "petersen" => Err(Error::InvalidParameter("petersen takes no size".into())),
            _ => Err(Error::InvalidParameter(format!(
                "unknown graph source {family:?}: expected cycle-n, complete-n, hypercube-d, petersen, or an edge-list file"
            ))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Source::Cycle(n) => format!("cycle-{n}"),
            Source::Complete(n) => format!("complete-{n}"),
            Source::Hypercube(d) => format!("hypercube-{d}"),
            Source::Petersen => "petersen".into(),
            Source::File(p) => p.clone(),
        }
    }

    pub fn graph(&self, limits: &Limits) -> Result<Graph> {
        match *self {
            Source::Cycle(n) => Graph::cycle(n),
            Source::Complete(n) => Graph::complete(n),
            Source::Hypercube(d) => Graph::hypercube_capped(d, limits.hypercube_dimension),
            Source::Petersen => Ok(Graph::petersen()),
            Source::File(ref p) => io::parse_edge_list(&std::fs::read_to_string(p)?),
        }
    }

    /// Hypercubes use the closed form, so large dimensions need no graph.
    pub fn base_spectrum(&self, limits: &Limits) -> Result<Spectrum> {
        match *self {
            Source::Hypercube(d) => hypercube_spectrum(d),
            _ => base_spectrum_capped(&self.graph(limits)?, limits.dense_dimension),
        }
    }
}

/// Iteration counts from one command-line value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iterations(pub Vec<u32>);

/// `5`, `1,5,20`, or the inclusive range `0..4`.
pub fn parse_iterations(text: &str) -> std::result::Result<Iterations, String> {
    let bad = |t: &str| format!("bad iteration count {t:?}");
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let a: u32 = a.parse().map_err(|_| bad(part))?;
            let b: u32 = b.parse().map_err(|_| bad(part))?;
            if a > b {
                return Err(format!("empty range {part:?}"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    Ok(Iterations(out))
}
