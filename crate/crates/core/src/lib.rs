//! Spectra of iterated graph cylinders.
//!
//! The cylinder of a graph `G` is `G x K_2`: two copies of `G` joined by a
//! perfect matching between corresponding vertices. Its adjacency matrix in
//! layer-block order is `[[A, I], [I, A]]`, so every eigenvalue `λ` of `A`
//! becomes the pair `λ - 1, λ + 1`. Iterating `N` times turns each base
//! eigenvalue into a shifted symmetric binomial: value `λ + N - 2j` with
//! multiplicity `C(N, j)`.
//!
//! The crate is organised as:
//!
//! - [`graph`]: simple undirected graphs, generators, cylinder construction,
//!   and structural checks (regularity, bipartiteness, girth).
//! - [`spectrum`]: base spectra, exact shift iteration, walk and normalized
//!   Laplacian transforms.
//! - [`analysis`]: spectral gap, empirical CDFs, histograms, Kolmogorov
//!   distances, symmetry defect, moments, and gap decay curves.
//! - [`verify`]: the brute-force path (explicit block matrices and a dense
//!   eigensolver) used to check the symbolic engine.
//! - [`io`] and [`plot`]: edge lists, spectrum documents, CSV and SVG output.
//! - [`report`]: the one-shot reproduction bundle.

pub mod analysis;
pub mod binomial;
pub mod eigen;
mod error;
pub mod graph;
pub mod io;
pub mod plot;
pub mod report;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CylinderLabel, Graph};
pub use spectrum::{Eigenvalue, Spectrum, SpectrumKind};

/// Size limits for the explicit (non-symbolic) code paths.
///
/// The symbolic spectrum path has no size limit; these only bound the
/// constructions that exist to cross-check it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum vertex count of an explicitly built cylinder iterate.
    pub explicit_vertices: usize,
    /// Maximum hypercube dimension accepted by the generator.
    pub hypercube_dimension: u32,
    /// Maximum matrix dimension handed to the dense eigensolver.
    pub dense_dimension: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            explicit_vertices: 1 << 16,
            hypercube_dimension: 20,
            dense_dimension: 4096,
        }
    }
}
