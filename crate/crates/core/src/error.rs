use std::io;

use thiserror::Error;

use crate::spectrum::SpectrumKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "graph is not regular: vertex {} has degree {} but vertex {} has degree {}",
        first.0, first.1, second.0, second.1
    )]
    NotRegular {
        /// (vertex, degree)
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("size guard: {what} needs {requested} but the cap is {cap}; {hint}")]
    SizeGuard {
        what: &'static str,
        requested: u128,
        cap: u128,
        hint: &'static str,
    },

    #[error("expected a {expected} spectrum, got {found}")]
    InvalidKind {
        expected: SpectrumKind,
        found: SpectrumKind,
    },

    #[error("degenerate degree: k + N = 0, cannot normalize")]
    DegenerateDegree,

    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),

    #[error("eigensolver did not converge on a {dimension}x{dimension} matrix within {max_iterations} iterations")]
    SolverConvergence {
        dimension: usize,
        max_iterations: usize,
    },

    #[error("eigenpair residual {residual:e} exceeds {bound:e} for eigenvalue {eigenvalue}")]
    SolverResidual {
        eigenvalue: f64,
        residual: f64,
        bound: f64,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl Error {
    /// Size guards and I/O failures are environmental; everything else is a
    /// domain or validation failure.
    pub fn is_environmental(&self) -> bool {
        matches!(self, Error::SizeGuard { .. } | Error::Io(_))
    }
}
