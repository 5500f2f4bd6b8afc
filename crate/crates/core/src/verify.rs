//! Brute-force cross-check of the symbolic engine.
//!
//! The explicit path doubles the adjacency matrix `N` times into
//! `[[A, I], [I, A]]` blocks and hands the result to the dense eigensolver.
//! Nothing here uses the shift rule.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::eigen::{dense_spectrum_capped, DenseSymmetricMatrix};
use crate::graph::scaled_size;
use crate::spectrum::base_spectrum_capped;
use crate::{Error, Graph, Limits, Result};

/// `N`-fold block doubling `A -> [[A, I], [I, A]]`.
pub fn explicit_block_iterate(matrix: &DenseSymmetricMatrix, n: u32, dense_cap: usize) -> Result<DenseSymmetricMatrix> {
    let requested = scaled_size(matrix.dimension(), n);
    if requested > dense_cap as u128 {
        return Err(Error::SizeGuard {
            what: "explicit block matrix",
            requested,
            cap: dense_cap as u128,
            hint: "use the symbolic spectrum path for large iterates",
        });
    }
    let mut current = matrix.clone();
    for _ in 0..n {
        let d = current.dimension();
        let mut next = DenseSymmetricMatrix::zeros(2 * d);
        for i in 0..d {
            for j in i..d {
                let a = current.get(i, j);
                if a != 0.0 {
                    next.set(i, j, a);
                    next.set(i + d, j + d, a);
                }
            }
            next.set(i, i + d, 1.0);
        }
        current = next;
    }
    Ok(current)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityMismatch {
    pub value: f64,
    pub symbolic: BigUint,
    pub dense: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub base_name: String,
    pub iterations: u32,
    pub eigenvalue_count: usize,
    /// Largest `|symbolic - dense|` over the positional pairing.
    pub max_residual: f64,
    pub tolerance: f64,
    pub mismatches: Vec<MultiplicityMismatch>,
    pub passed: bool,
}

/// Compares the symbolic spectrum of the `n`-th iterate with a dense
/// eigensolve of the explicit block matrix.
///
/// Both lists are expanded to ascending order with repetition and paired
/// positionally; every pair must agree within `tol`. Dense values are then
/// merged at `tol` and their cluster sizes must equal the symbolic
/// multiplicities.
pub fn verify_shift_theorem(
    name: &str,
    graph: &Graph,
    n: u32,
    tol: f64,
    limits: &Limits,
) -> Result<VerificationReport> {
    let base = DenseSymmetricMatrix::adjacency(graph);
    let explicit = explicit_block_iterate(&base, n, limits.dense_dimension)?;
    let dense = dense_spectrum_capped(&explicit, limits.dense_dimension)?;
    let symbolic = base_spectrum_capped(graph, limits.dense_dimension)?.shift_iterate(n)?;

    let mut expanded = Vec::with_capacity(dense.len());
    for (v, m) in symbolic.iter() {
        let count: u64 = m.try_into().map_err(|_| {
            Error::Validation("multiplicity too large for an explicit comparison".into())
        })?;
        expanded.extend(std::iter::repeat_n(v, count as usize));
    }
    if expanded.len() != dense.len() {
        return Err(Error::Validation(format!(
            "symbolic mass {} differs from matrix dimension {}",
            expanded.len(),
            dense.len()
        )));
    }
    let max_residual = expanded
        .iter()
        .zip(&dense)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    let clusters = cluster_sorted(&dense, tol);
    let mut mismatches = Vec::new();
    let mut cluster_iter = clusters.iter().peekable();
    for (v, m) in symbolic.iter() {
        let dense_count = match cluster_iter.peek() {
            Some(&&(c, count)) if (c - v).abs() <= tol => {
                cluster_iter.next();
                count
            }
            _ => 0,
        };
        if BigUint::from(dense_count) != *m {
            mismatches.push(MultiplicityMismatch {
                value: v,
                symbolic: m.clone(),
                dense: dense_count,
            });
        }
    }
    for &(c, count) in cluster_iter {
        mismatches.push(MultiplicityMismatch {
            value: c,
            symbolic: BigUint::from(0u32),
            dense: count,
        });
    }

    let passed = max_residual <= tol && mismatches.is_empty();
    Ok(VerificationReport {
        base_name: name.to_string(),
        iterations: n,
        eigenvalue_count: dense.len(),
        max_residual,
        tolerance: tol,
        mismatches,
        passed,
    })
}

/// `(first value, count)` for runs of sorted values with consecutive gaps
/// at most `tol`.
fn cluster_sorted(values: &[f64], tol: f64) -> Vec<(f64, u64)> {
    let mut clusters: Vec<(f64, u64)> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for &v in values {
        match clusters.last_mut() {
            Some((_, count)) if v - last <= tol => *count += 1,
            _ => clusters.push((v, 1)),
        }
        last = v;
    }
    clusters
}

/// Named regular fixtures used across the verification grid.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("cycle-3", Graph::cycle(3).expect("valid")),
        ("cycle-4", Graph::cycle(4).expect("valid")),
        ("cycle-5", Graph::cycle(5).expect("valid")),
        ("cycle-6", Graph::cycle(6).expect("valid")),
        ("complete-4", Graph::complete(4).expect("valid")),
        ("complete-5", Graph::complete(5).expect("valid")),
        ("hypercube-2", Graph::hypercube(2).expect("valid")),
        ("hypercube-3", Graph::hypercube(3).expect("valid")),
        ("petersen", Graph::petersen()),
    ]
}

/// Runs [`verify_shift_theorem`] over every `(fixture, N)` pair; reports
/// come back in fixture-major, then ascending `N`, order.
pub fn verify_grid(
    graphs: &[(&str, Graph)],
    iterations: &[u32],
    tol: f64,
    limits: &Limits,
) -> Result<Vec<VerificationReport>> {
    let jobs: Vec<(&str, &Graph, u32)> = graphs
        .iter()
        .flat_map(|(name, g)| iterations.iter().map(move |&n| (*name, g, n)))
        .collect();
    jobs.into_par_iter()
        .map(|(name, g, n)| verify_shift_theorem(name, g, n, tol, limits))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_iterate_of_triangle() {
        let c3 = DenseSymmetricMatrix::adjacency(&Graph::cycle(3).unwrap());
        let a1 = explicit_block_iterate(&c3, 1, 4096).unwrap();
        let printed = [
            [0., 1., 1., 1., 0., 0.],
            [1., 0., 1., 0., 1., 0.],
            [1., 1., 0., 0., 0., 1.],
            [1., 0., 0., 0., 1., 1.],
            [0., 1., 0., 1., 0., 1.],
            [0., 0., 1., 1., 1., 0.],
        ];
        for (i, row) in printed.iter().enumerate() {
            assert_eq!(a1.row(i), row);
        }
        assert_eq!(explicit_block_iterate(&c3, 0, 4096).unwrap(), c3);
    }

    #[test]
    fn block_iterate_of_square() {
        let q2 = DenseSymmetricMatrix::adjacency(&Graph::hypercube(2).unwrap());
        let a2 = explicit_block_iterate(&q2, 2, 4096).unwrap();
        assert_eq!(a2.dimension(), 16);
        assert!(a2.row_sums().iter().all(|&s| s == 4.0));
        assert!(matches!(
            explicit_block_iterate(&q2, 30, 4096),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn block_iterate_matches_graph_cylinder() {
        for (_, g) in fixtures() {
            let via_graph = DenseSymmetricMatrix::adjacency(&g.iterate_cylinder(3).unwrap());
            let via_blocks = explicit_block_iterate(&DenseSymmetricMatrix::adjacency(&g), 3, 4096).unwrap();
            assert_eq!(via_graph, via_blocks);
        }
    }

    #[test]
    fn dense_spectrum_of_triangle_cylinder() {
        let a1 = explicit_block_iterate(&DenseSymmetricMatrix::adjacency(&Graph::cycle(3).unwrap()), 1, 4096).unwrap();
        let vals = dense_spectrum_capped(&a1, 4096).unwrap();
        for (got, want) in vals.iter().zip([-2.0, -2.0, 0.0, 0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn verification_examples() {
        let limits = Limits::default();
        let r = verify_shift_theorem("cycle-3", &Graph::cycle(3).unwrap(), 1, 1e-8, &limits).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.eigenvalue_count, 6);
        let r = verify_shift_theorem("hypercube-2", &Graph::hypercube(2).unwrap(), 3, 1e-8, &limits).unwrap();
        assert!(r.passed);
        assert_eq!(r.eigenvalue_count, 32);
        let r = verify_shift_theorem("petersen", &Graph::petersen(), 2, 1e-8, &limits).unwrap();
        assert!(r.passed);
        assert_eq!(r.eigenvalue_count, 40);
        assert!(matches!(
            verify_shift_theorem("hypercube-2", &Graph::hypercube(2).unwrap(), 30, 1e-8, &limits),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn clustering() {
        assert_eq!(
            cluster_sorted(&[0.0, 1e-10, 1.0, 1.0, 2.0], 1e-8),
            vec![(0.0, 2), (1.0, 2), (2.0, 1)]
        );
    }
}
