//! Dense real-symmetric matrices and their eigenvalues.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::{Error, Graph, Limits, Result};

/// Row-major dense matrix with exact symmetry.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    dimension: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    pub fn zeros(dimension: usize) -> Self {
        DenseSymmetricMatrix {
            dimension,
            entries: vec![0.0; dimension * dimension],
        }
    }

    /// Fails unless the rows form a square, bit-exactly symmetric matrix.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Validation("matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Validation(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(DenseSymmetricMatrix {
            dimension: n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn adjacency(graph: &Graph) -> Self {
        let mut m = Self::zeros(graph.vertex_count());
        for &(u, v) in graph.edges() {
            m.set(u, v, 1.0);
        }
        m
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dimension + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let n = self.dimension;
        self.entries[i * n + j] = value;
        self.entries[j * n + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.dimension).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `P A P^T` where `P` sends index `i` to `permutation[i]`.
    pub fn permuted(&self, permutation: &[usize]) -> Result<Self> {
        let n = self.dimension;
        let mut seen = vec![false; n];
        if permutation.len() != n
            || permutation.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[permutation[i] * n + permutation[j]] = self.get(i, j);
            }
        }
        Ok(out)
    }

    fn to_nalgebra(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.dimension, self.dimension, &self.entries)
    }
}

/// All eigenvalues in ascending order, repeated values listed with
/// repetition, under the default dense cap.
pub fn dense_spectrum(matrix: &DenseSymmetricMatrix) -> Result<Vec<f64>> {
    dense_spectrum_capped(matrix, Limits::default().dense_dimension)
}

/// Eigenvalues by Householder tridiagonalization and implicit QR.
///
/// Every eigenpair is checked against `||Av - λv|| <= 1e-8 ||A||_F`.
pub fn dense_spectrum_capped(matrix: &DenseSymmetricMatrix, cap: usize) -> Result<Vec<f64>> {
    let n = matrix.dimension;
    if n > cap {
        return Err(Error::SizeGuard {
            what: "dense eigensolve",
            requested: n as u128,
            cap: cap as u128,
            hint: "use the symbolic spectrum path for large iterates",
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let a = matrix.to_nalgebra();
    let max_iterations = 100 * n.max(10);
    let eigen = SymmetricEigen::try_new(a.clone(), f64::EPSILON, max_iterations).ok_or(
        Error::SolverConvergence {
            dimension: n,
            max_iterations,
        },
    )?;

    let bound = 1e-8 * matrix.frobenius_norm().max(1.0);
    let residuals = &a * &eigen.eigenvectors - &eigen.eigenvectors * DMatrix::from_diagonal(&eigen.eigenvalues);
    for (col, &lambda) in eigen.eigenvalues.iter().enumerate() {
        let residual = residuals.column(col).norm();
        if !(residual <= bound) {
            return Err(Error::SolverResidual {
                eigenvalue: lambda,
                residual,
                bound,
            });
        }
    }

    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}
