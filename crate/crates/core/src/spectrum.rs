//! Spectra as exact multisets and their propagation through cylinder
//! iterations.
//!
//! A base spectrum comes from a dense eigensolve. When every base eigenvalue
//! is within [`SNAP_TOLERANCE`] of an integer (cycles of length 3, 4, 6,
//! complete graphs, hypercubes, Petersen) the spectrum is held exactly: each
//! value is an integer numerator over a denominator shared by the whole
//! spectrum (`1` for adjacency spectra, `k + N` after normalization). All
//! later steps then stay exact, so identities such as the walk gap
//! `2 / (N + 2)` of the iterated square hold bit for bit. Other bases use
//! `f64` values merged at [`merge_tolerance`].
//!
//! Multiplicities are always exact big integers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::binomial::binomial_row;
use crate::eigen::{dense_spectrum_capped, DenseSymmetricMatrix};
use crate::{Error, Graph, Limits, Result};

/// Eigenvalues within this distance of an integer are snapped to it.
pub const SNAP_TOLERANCE: f64 = 1e-7;

/// Two floating eigenvalues of a spectrum with degree `k + N` coalesce when
/// they differ by at most this much.
pub fn merge_tolerance(degree: u64) -> f64 {
    1e-9 * (degree as f64).max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumKind {
    /// Eigenvalues of `A_N`.
    Adjacency,
    /// Eigenvalues of `W_N = A_N / (k + N)`.
    Walk,
    /// Eigenvalues of `I - W_N`.
    Laplacian,
}

impl SpectrumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumKind::Adjacency => "adjacency",
            SpectrumKind::Walk => "walk",
            SpectrumKind::Laplacian => "laplacian",
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SpectrumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" => Ok(SpectrumKind::Adjacency),
            "walk" => Ok(SpectrumKind::Walk),
            "laplacian" => Ok(SpectrumKind::Laplacian),
            other => Err(Error::InvalidParameter(format!("unknown spectrum kind {other:?}"))),
        }
    }
}

/// A single eigenvalue, exact when the spectrum is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eigenvalue {
    Exact(Ratio<i64>),
    Approx(f64),
}

impl Eigenvalue {
    pub fn to_f64(self) -> f64 {
        match self {
            // Both parts are far below 2^53, so this is the correctly
            // rounded quotient.
            Eigenvalue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Eigenvalue::Approx(x) => x,
        }
    }

    pub fn exact(self) -> Option<Ratio<i64>> {
        match self {
            Eigenvalue::Exact(r) => Some(r),
            Eigenvalue::Approx(_) => None,
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Eigenvalue::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Eigenvalue::Approx(x) => write!(f, "{x:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Values {
    /// Integer numerators over one shared positive denominator, ascending.
    Exact {
        denominator: i64,
        entries: Vec<(i64, BigUint)>,
    },
    /// Ascending, pairwise separated by more than the merge tolerance.
    Approx(Vec<(f64, BigUint)>),
}

/// Multiset of eigenvalues of an iterated cylinder, with provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    kind: SpectrumKind,
    base_regularity: u32,
    iterations: u32,
    base_vertex_count: u64,
    values: Values,
}

impl Spectrum {
    /// Builds an exact spectrum from `(numerator, multiplicity)` pairs over
    /// the denominator implied by `kind` (`1` for adjacency, `k + N`
    /// otherwise). Entries are sorted and checked.
    pub fn from_exact(
        kind: SpectrumKind,
        base_regularity: u32,
        iterations: u32,
        base_vertex_count: u64,
        entries: Vec<(i64, BigUint)>,
    ) -> Result<Self> {
        let degree = base_regularity as i64 + iterations as i64;
        let denominator = match kind {
            SpectrumKind::Adjacency => 1,
            _ if degree == 0 => return Err(Error::DegenerateDegree),
            _ => degree,
        };
        let mut entries = entries;
        entries.sort_by_key(|(v, _)| *v);
        let spectrum = Spectrum {
            kind,
            base_regularity,
            iterations,
            base_vertex_count,
            values: Values::Exact {
                denominator,
                entries,
            },
        };
        spectrum.validate()?;
        Ok(spectrum)
    }

    /// Builds a floating spectrum. Entries are sorted and must already be
    /// separated by more than the merge tolerance.
    pub fn from_approx(
        kind: SpectrumKind,
        base_regularity: u32,
        iterations: u32,
        base_vertex_count: u64,
        entries: Vec<(f64, BigUint)>,
    ) -> Result<Self> {
        if entries.iter().any(|(v, _)| !v.is_finite()) {
            return Err(Error::Validation("non-finite eigenvalue".into()));
        }
        let mut entries = entries;
        entries.sort_by(|a, b| a.0.total_cmp(&b.0));
        let spectrum = Spectrum {
            kind,
            base_regularity,
            iterations,
            base_vertex_count,
            values: Values::Approx(entries),
        };
        spectrum.validate()?;
        Ok(spectrum)
    }

    /// Merges raw eigenvalues of a `k`-regular graph into an adjacency
    /// spectrum, exact if every value snaps to an integer.
    pub fn from_eigenvalues(eigenvalues: &[f64], base_regularity: u32) -> Result<Self> {
        let count = eigenvalues.len() as u64;
        let snapped: Option<Vec<i64>> = eigenvalues
            .iter()
            .map(|&x| {
                let r = x.round();
                ((x - r).abs() <= SNAP_TOLERANCE).then_some(r as i64)
            })
            .collect();
        if let Some(mut ints) = snapped {
            ints.sort_unstable();
            let mut entries: Vec<(i64, BigUint)> = Vec::new();
            for v in ints {
                match entries.last_mut() {
                    Some((last, m)) if *last == v => *m += 1u32,
                    _ => entries.push((v, BigUint::one())),
                }
            }
            return Spectrum::from_exact(SpectrumKind::Adjacency, base_regularity, 0, count, entries);
        }
        let values: Vec<(f64, BigUint)> = eigenvalues
            .iter()
            .map(|&x| {
                let r = x.round();
                let x = if (x - r).abs() <= SNAP_TOLERANCE { r } else { x };
                (x, BigUint::one())
            })
            .collect();
        let merged = merge_approx(values, merge_tolerance(base_regularity as u64));
        Spectrum::from_approx(SpectrumKind::Adjacency, base_regularity, 0, count, merged)
    }

    fn validate(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::Validation("spectrum has no entries".into()));
        }
        if self.multiplicities().any(Zero::is_zero) {
            return Err(Error::Validation("zero multiplicity".into()));
        }
        let expected = BigUint::from(self.base_vertex_count) << self.iterations as u64;
        let total = self.total_multiplicity();
        if total != expected {
            return Err(Error::Validation(format!(
                "total multiplicity {total} differs from base_vertex_count * 2^N = {expected}"
            )));
        }
        let degree = self.degree();
        match &self.values {
            Values::Exact {
                denominator,
                entries,
            } => {
                if entries.windows(2).any(|w| w[0].0 >= w[1].0) {
                    return Err(Error::Validation("eigenvalues are not distinct".into()));
                }
                let (lo, hi) = match self.kind {
                    SpectrumKind::Adjacency => (-(degree as i64), degree as i64),
                    SpectrumKind::Walk => (-denominator, *denominator),
                    SpectrumKind::Laplacian => (0, 2 * denominator),
                };
                let (first, last) = (entries[0].0, entries[entries.len() - 1].0);
                if first < lo || last > hi {
                    return Err(Error::Validation(format!(
                        "{} eigenvalue outside its admissible range",
                        self.kind
                    )));
                }
            }
            Values::Approx(entries) => {
                let tol = merge_tolerance(degree);
                if entries.windows(2).any(|w| w[1].0 - w[0].0 <= tol) {
                    return Err(Error::Validation(
                        "eigenvalues are not separated by the merge tolerance".into(),
                    ));
                }
                let slack = SNAP_TOLERANCE;
                let (lo, hi) = match self.kind {
                    SpectrumKind::Adjacency => (-(degree as f64), degree as f64),
                    SpectrumKind::Walk => (-1.0, 1.0),
                    SpectrumKind::Laplacian => (0.0, 2.0),
                };
                let (first, last) = (entries[0].0, entries[entries.len() - 1].0);
                if first < lo - slack || last > hi + slack {
                    return Err(Error::Validation(format!(
                        "{} eigenvalue outside its admissible range",
                        self.kind
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn base_regularity(&self) -> u32 {
        self.base_regularity
    }

    pub fn iterations(&self) -> u32 {
        self.iterations
    }

    pub fn base_vertex_count(&self) -> u64 {
        self.base_vertex_count
    }

    /// Regularity `k + N` of the iterate.
    pub fn degree(&self) -> u64 {
        self.base_regularity as u64 + self.iterations as u64
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.values, Values::Exact { .. })
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        match &self.values {
            Values::Exact { entries, .. } => entries.len(),
            Values::Approx(entries) => entries.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, i: usize) -> Eigenvalue {
        match &self.values {
            Values::Exact {
                denominator,
                entries,
            } => Eigenvalue::Exact(Ratio::new(entries[i].0, *denominator)),
            Values::Approx(entries) => Eigenvalue::Approx(entries[i].0),
        }
    }

    pub fn multiplicity(&self, i: usize) -> &BigUint {
        match &self.values {
            Values::Exact { entries, .. } => &entries[i].1,
            Values::Approx(entries) => &entries[i].1,
        }
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = &BigUint> + '_ {
        (0..self.len()).map(|i| self.multiplicity(i))
    }

    /// `(value, multiplicity)` in ascending order of value.
    pub fn iter(&self) -> impl Iterator<Item = (f64, &BigUint)> + '_ {
        (0..self.len()).map(|i| (self.value(i).to_f64(), self.multiplicity(i)))
    }

    /// Shared denominator and `(numerator, multiplicity)` pairs of an exact
    /// spectrum.
    pub fn exact_entries(&self) -> Option<(i64, &[(i64, BigUint)])> {
        match &self.values {
            Values::Exact {
                denominator,
                entries,
            } => Some((*denominator, entries)),
            Values::Approx(_) => None,
        }
    }

    pub fn total_multiplicity(&self) -> BigUint {
        self.multiplicities().sum()
    }

    fn require_adjacency(&self) -> Result<()> {
        if self.kind != SpectrumKind::Adjacency {
            return Err(Error::InvalidKind {
                expected: SpectrumKind::Adjacency,
                found: self.kind,
            });
        }
        Ok(())
    }

    /// One cylinder step: every `(λ, m)` becomes `(λ - 1, m)` and
    /// `(λ + 1, m)`, with coincident values merged.
    pub fn shift_once(&self) -> Result<Spectrum> {
        self.require_adjacency()?;
        let mut next = self.clone();
        next.iterations += 1;
        next.values = match &self.values {
            Values::Exact {
                denominator,
                entries,
            } => {
                let doubled = entries
                    .iter()
                    .flat_map(|(v, m)| [(v - 1, m.clone()), (v + 1, m.clone())])
                    .collect();
                Values::Exact {
                    denominator: *denominator,
                    entries: merge_exact(doubled),
                }
            }
            Values::Approx(entries) => {
                let doubled = entries
                    .iter()
                    .flat_map(|(v, m)| [(v - 1.0, m.clone()), (v + 1.0, m.clone())])
                    .collect();
                Values::Approx(merge_approx(doubled, merge_tolerance(next.degree())))
            }
        };
        Ok(next)
    }

    /// `steps` cylinder iterations at once: each `(λ, m)` contributes
    /// `(λ + steps - 2j, C(steps, j) * m)` for `j = 0..=steps`.
    pub fn shift_iterate(&self, steps: u32) -> Result<Spectrum> {
        self.require_adjacency()?;
        if steps == 0 {
            return Ok(self.clone());
        }
        let row = binomial_row(steps);
        let mut next = self.clone();
        next.iterations = self
            .iterations
            .checked_add(steps)
            .ok_or_else(|| Error::InvalidParameter("iteration count overflows".into()))?;
        let offsets = (0..=steps as i64).map(|j| steps as i64 - 2 * j);
        next.values = match &self.values {
            Values::Exact {
                denominator,
                entries,
            } => {
                let mut spread = Vec::with_capacity(entries.len() * row.len());
                for (v, m) in entries {
                    for (offset, c) in offsets.clone().zip(&row) {
                        spread.push((v + offset, c * m));
                    }
                }
                Values::Exact {
                    denominator: *denominator,
                    entries: merge_exact(spread),
                }
            }
            Values::Approx(entries) => {
                let mut spread = Vec::with_capacity(entries.len() * row.len());
                for (v, m) in entries {
                    for (offset, c) in offsets.clone().zip(&row) {
                        spread.push((v + offset as f64, c * m));
                    }
                }
                Values::Approx(merge_approx(spread, merge_tolerance(next.degree())))
            }
        };
        Ok(next)
    }

    /// Eigenvalues of the walking matrix `A_N / (k + N)`.
    pub fn normalize_walk(&self) -> Result<Spectrum> {
        self.require_adjacency()?;
        let degree = self.degree();
        if degree == 0 {
            return Err(Error::DegenerateDegree);
        }
        let mut walk = self.clone();
        walk.kind = SpectrumKind::Walk;
        walk.values = match &self.values {
            Values::Exact { entries, .. } => Values::Exact {
                denominator: degree as i64,
                entries: entries.clone(),
            },
            Values::Approx(entries) => Values::Approx(
                entries
                    .iter()
                    .map(|(v, m)| (v / degree as f64, m.clone()))
                    .collect(),
            ),
        };
        Ok(walk)
    }

    /// Eigenvalues of the normalized Laplacian `I - A_N / (k + N)`.
    pub fn laplacian_spectrum(&self) -> Result<Spectrum> {
        self.require_adjacency()?;
        let degree = self.degree();
        if degree == 0 {
            return Err(Error::DegenerateDegree);
        }
        let mut laplacian = self.clone();
        laplacian.kind = SpectrumKind::Laplacian;
        laplacian.values = match &self.values {
            Values::Exact { entries, .. } => Values::Exact {
                denominator: degree as i64,
                entries: entries
                    .iter()
                    .rev()
                    .map(|(v, m)| (degree as i64 - v, m.clone()))
                    .collect(),
            },
            Values::Approx(entries) => Values::Approx(
                entries
                    .iter()
                    .rev()
                    .map(|(v, m)| (1.0 - v / degree as f64, m.clone()))
                    .collect(),
            ),
        };
        Ok(laplacian)
    }

    /// The multiset `{-λ}`, with provenance kept.
    pub fn reflected(&self) -> Spectrum {
        let mut out = self.clone();
        out.values = match &self.values {
            Values::Exact {
                denominator,
                entries,
            } => Values::Exact {
                denominator: *denominator,
                entries: entries.iter().rev().map(|(v, m)| (-v, m.clone())).collect(),
            },
            Values::Approx(entries) => {
                Values::Approx(entries.iter().rev().map(|(v, m)| (-v, m.clone())).collect())
            }
        };
        out
    }
}

/// Adjacency spectrum of a regular graph by dense eigensolve, under the
/// default dense cap.
pub fn base_spectrum(graph: &Graph) -> Result<Spectrum> {
    base_spectrum_capped(graph, Limits::default().dense_dimension)
}

pub fn base_spectrum_capped(graph: &Graph, dense_cap: usize) -> Result<Spectrum> {
    let k = graph.check_regular()?;
    let eigenvalues = dense_spectrum_capped(&DenseSymmetricMatrix::adjacency(graph), dense_cap)?;
    Spectrum::from_eigenvalues(&eigenvalues, k as u32)
}

/// Spectrum of `Q_d`: value `d - 2j` with multiplicity `C(d, j)`.
pub fn hypercube_spectrum(d: u32) -> Result<Spectrum> {
    if d < 1 {
        return Err(Error::InvalidParameter("hypercube needs d >= 1".into()));
    }
    if d > 63 {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension {d} does not fit a 64-bit vertex count"
        )));
    }
    let entries = binomial_row(d)
        .into_iter()
        .enumerate()
        .map(|(j, c)| (d as i64 - 2 * j as i64, c))
        .collect();
    Spectrum::from_exact(SpectrumKind::Adjacency, d, 0, 1u64 << d, entries)
}

fn merge_exact(mut entries: Vec<(i64, BigUint)>) -> Vec<(i64, BigUint)> {
    entries.sort_by_key(|(v, _)| *v);
    let mut merged: Vec<(i64, BigUint)> = Vec::with_capacity(entries.len());
    for (v, m) in entries {
        match merged.last_mut() {
            Some((last, acc)) if *last == v => *acc += m,
            _ => merged.push((v, m)),
        }
    }
    merged
}

/// Single-linkage clustering of sorted values at `tol`; each cluster keeps
/// its multiplicity-weighted mean.
fn merge_approx(mut entries: Vec<(f64, BigUint)>, tol: f64) -> Vec<(f64, BigUint)> {
    entries.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
    let mut merged: Vec<(f64, BigUint)> = Vec::with_capacity(entries.len());
    let mut cluster: Vec<(f64, BigUint)> = Vec::new();
    let flush = |cluster: &mut Vec<(f64, BigUint)>, merged: &mut Vec<(f64, BigUint)>| {
        if cluster.is_empty() {
            return;
        }
        let total: BigUint = cluster.iter().map(|(_, m)| m).sum();
        let value = if cluster.len() == 1 {
            cluster[0].0
        } else {
            cluster
                .iter()
                .map(|(v, m)| v * crate::binomial::ratio_to_f64(m, &total))
                .sum()
        };
        merged.push((value, total));
        cluster.clear();
    };
    for entry in entries {
        if let Some(last) = cluster.last() {
            if entry.0 - last.0 > tol {
                flush(&mut cluster, &mut merged);
            }
        }
        cluster.push(entry);
    }
    flush(&mut cluster, &mut merged);
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn exact_pairs(s: &Spectrum) -> Vec<(Ratio<i64>, u64)> {
        (0..s.len())
            .map(|i| {
                let m: u64 = s.multiplicity(i).try_into().unwrap();
                (s.value(i).exact().unwrap(), m)
            })
            .collect()
    }

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn ints(pairs: &[(i64, u64)]) -> Vec<(Ratio<i64>, u64)> {
        pairs.iter().map(|&(v, m)| (r(v, 1), m)).collect()
    }

    #[test]
    fn base_spectra_of_fixtures() {
        let q2 = base_spectrum(&Graph::hypercube(2).unwrap()).unwrap();
        assert_eq!(exact_pairs(&q2), ints(&[(-2, 1), (0, 2), (2, 1)]));
        let k5 = base_spectrum(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!(exact_pairs(&k5), ints(&[(-1, 4), (4, 1)]));
        let c3 = base_spectrum(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(exact_pairs(&c3), ints(&[(-1, 2), (2, 1)]));
        assert_eq!(c3.base_vertex_count(), 3);
        assert_eq!(c3.iterations(), 0);
    }

    #[test]
    fn non_integer_base_uses_floats() {
        let c5 = base_spectrum(&Graph::cycle(5).unwrap()).unwrap();
        assert!(!c5.is_exact());
        assert_eq!(c5.len(), 3);
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        let want = [(-golden, 2u32), (golden - 1.0, 2), (2.0, 1)];
        for ((v, m), (wv, wm)) in c5.iter().zip(want) {
            assert_abs_diff_eq!(v, wv, epsilon = 1e-12);
            assert_eq!(*m, BigUint::from(wm));
        }
        // The top eigenvalue snaps to exactly k.
        assert_eq!(c5.value(2), Eigenvalue::Approx(2.0));
    }

    #[test]
    fn base_spectrum_errors() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(base_spectrum(&path), Err(Error::NotRegular { .. })));
        let q3 = Graph::hypercube(3).unwrap();
        assert!(matches!(base_spectrum_capped(&q3, 4), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn shift_once_examples() {
        let q2 = hypercube_spectrum(2).unwrap();
        let q2_1 = q2.shift_once().unwrap();
        assert_eq!(exact_pairs(&q2_1), ints(&[(-3, 1), (-1, 3), (1, 3), (3, 1)]));
        assert_eq!(q2_1.iterations(), 1);

        let c3 = base_spectrum(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(
            exact_pairs(&c3.shift_once().unwrap()),
            ints(&[(-2, 2), (0, 2), (1, 1), (3, 1)])
        );

        let point = Spectrum::from_exact(SpectrumKind::Adjacency, 0, 0, 1, vec![(0, BigUint::one())]).unwrap();
        assert_eq!(exact_pairs(&point.shift_once().unwrap()), ints(&[(-1, 1), (1, 1)]));

        let walk = q2.normalize_walk().unwrap();
        assert!(matches!(walk.shift_once(), Err(Error::InvalidKind { .. })));
        assert!(matches!(walk.shift_iterate(2), Err(Error::InvalidKind { .. })));
    }

    #[test]
    fn shift_iterate_examples() {
        let q2 = hypercube_spectrum(2).unwrap();
        assert_eq!(q2.shift_iterate(1).unwrap(), q2.shift_once().unwrap());
        assert_eq!(q2.shift_iterate(0).unwrap(), q2);
        assert_eq!(
            exact_pairs(&q2.shift_iterate(2).unwrap()),
            ints(&[(-4, 1), (-2, 4), (0, 6), (2, 4), (4, 1)])
        );
        // K_5 after 10 steps: odd support from -1, even support from 4.
        let k5 = base_spectrum(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!(k5.shift_iterate(10).unwrap().len(), 22);
    }

    #[test]
    fn walk_normalization() {
        let q2 = hypercube_spectrum(2).unwrap();
        let w0 = q2.normalize_walk().unwrap();
        assert_eq!(
            exact_pairs(&w0),
            vec![(r(-1, 1), 1), (r(0, 1), 2), (r(1, 1), 1)]
        );
        let w1 = q2.shift_iterate(1).unwrap().normalize_walk().unwrap();
        assert_eq!(
            exact_pairs(&w1),
            vec![(r(-1, 1), 1), (r(-1, 3), 3), (r(1, 3), 3), (r(1, 1), 1)]
        );
        assert_eq!(w1.kind(), SpectrumKind::Walk);
        let k5 = base_spectrum(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!(
            exact_pairs(&k5.normalize_walk().unwrap()),
            vec![(r(-1, 4), 4), (r(1, 1), 1)]
        );
        let point = Spectrum::from_exact(SpectrumKind::Adjacency, 0, 0, 1, vec![(0, BigUint::one())]).unwrap();
        assert!(matches!(point.normalize_walk(), Err(Error::DegenerateDegree)));
        assert!(matches!(point.laplacian_spectrum(), Err(Error::DegenerateDegree)));
    }

    #[test]
    fn laplacian_transform() {
        let q2 = hypercube_spectrum(2).unwrap();
        assert_eq!(
            exact_pairs(&q2.laplacian_spectrum().unwrap()),
            vec![(r(0, 1), 1), (r(1, 1), 2), (r(2, 1), 1)]
        );
        let k5 = base_spectrum(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!(
            exact_pairs(&k5.laplacian_spectrum().unwrap()),
            vec![(r(0, 1), 1), (r(5, 4), 4)]
        );
        let l1 = q2.shift_iterate(1).unwrap().laplacian_spectrum().unwrap();
        assert_eq!(
            exact_pairs(&l1),
            vec![(r(0, 1), 1), (r(2, 3), 3), (r(4, 3), 3), (r(2, 1), 1)]
        );
        // Zero eigenvalue multiplicity counts components.
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let lap = base_spectrum(&two_triangles)
            .unwrap()
            .shift_iterate(3)
            .unwrap()
            .laplacian_spectrum()
            .unwrap();
        assert_eq!(lap.value(0), Eigenvalue::Exact(r(0, 1)));
        assert_eq!(*lap.multiplicity(0), BigUint::from(2u32));
    }

    #[test]
    fn hypercube_closed_form() {
        assert_eq!(
            exact_pairs(&hypercube_spectrum(1).unwrap()),
            ints(&[(-1, 1), (1, 1)])
        );
        assert_eq!(
            exact_pairs(&hypercube_spectrum(3).unwrap()),
            ints(&[(-3, 1), (-1, 3), (1, 3), (3, 1)])
        );
        for d in 1..=6 {
            let dense = base_spectrum(&Graph::hypercube(d).unwrap()).unwrap();
            assert_eq!(dense, hypercube_spectrum(d).unwrap());
        }
        assert!(hypercube_spectrum(0).is_err());
    }

    #[test]
    fn constructor_validation() {
        let one = BigUint::one;
        // Mass law.
        assert!(Spectrum::from_exact(SpectrumKind::Adjacency, 1, 0, 3, vec![(1, one()), (-1, one())]).is_err());
        // Empty.
        assert!(Spectrum::from_exact(SpectrumKind::Adjacency, 1, 0, 0, vec![]).is_err());
        // Duplicates.
        assert!(Spectrum::from_exact(SpectrumKind::Adjacency, 1, 0, 2, vec![(1, one()), (1, one())]).is_err());
        // Out of range for a walk spectrum over denominator 1.
        assert!(Spectrum::from_exact(SpectrumKind::Walk, 1, 0, 2, vec![(-2, one()), (1, one())]).is_err());
        assert!(Spectrum::from_approx(SpectrumKind::Walk, 1, 0, 2, vec![(f64::NAN, one()), (1.0, one())]).is_err());
    }

    #[test]
    fn approx_merge_uses_weighted_mean() {
        let merged = merge_approx(
            vec![
                (1.0, BigUint::from(1u32)),
                (1.0 + 4e-10, BigUint::from(3u32)),
                (2.0, BigUint::from(1u32)),
            ],
            1e-9,
        );
        assert_eq!(merged.len(), 2);
        assert_abs_diff_eq!(merged[0].0, 1.0 + 3e-10, epsilon = 1e-15);
        assert_eq!(merged[0].1, BigUint::from(4u32));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Eigenvalue::Exact(r(-1, 3)).to_string(), "-1/3");
        assert_eq!(Eigenvalue::Exact(r(4, 2)).to_string(), "2");
        assert_eq!(Eigenvalue::Approx(0.5).to_string(), "0.5");
        assert_eq!("walk".parse::<SpectrumKind>().unwrap(), SpectrumKind::Walk);
        assert!("foo".parse::<SpectrumKind>().is_err());
    }
}
