//! Independent oracles for integration tests. None of these call into the
//! spectral engine; they work from first principles on small integers.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use cylinder_spectra::Graph;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Row `n` of Pascal's triangle built by repeated addition.
pub fn pascal_row(n: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::from(1u32));
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::from(1u32));
        row = next;
    }
    row
}

/// Adjacency spectrum of the `n`-th iterate from an integer base multiset:
/// every path of `n` independent `±1` steps, counted via Pascal's triangle.
pub fn iterate_multiset(base: &[(i64, u64)], n: u32) -> BTreeMap<i64, BigUint> {
    let row = pascal_row(n);
    let mut out = BTreeMap::new();
    for &(lambda, m) in base {
        for (j, c) in row.iter().enumerate() {
            let v = lambda + n as i64 - 2 * j as i64;
            *out.entry(v).or_insert_with(BigUint::zero) += c * BigUint::from(m);
        }
    }
    out
}

pub fn q2_base() -> Vec<(i64, u64)> {
    vec![(-2, 1), (0, 2), (2, 1)]
}

pub fn k5_base() -> Vec<(i64, u64)> {
    vec![(-1, 4), (4, 1)]
}

pub fn petersen_base() -> Vec<(i64, u64)> {
    vec![(-2, 4), (1, 5), (3, 1)]
}

/// Exact `sup |F - G|` between a multiset and its mirror image.
pub fn reflection_defect(multiset: &BTreeMap<i64, BigUint>) -> BigRational {
    let total: BigUint = multiset.values().sum();
    let mirrored: BTreeMap<i64, BigUint> = multiset.iter().map(|(v, m)| (-v, m.clone())).collect();
    let points: std::collections::BTreeSet<i64> = multiset.keys().chain(mirrored.keys()).copied().collect();
    let (mut f, mut g) = (BigInt::zero(), BigInt::zero());
    let mut worst = BigInt::zero();
    for p in points {
        if let Some(m) = multiset.get(&p) {
            f += BigInt::from(m.clone());
        }
        if let Some(m) = mirrored.get(&p) {
            g += BigInt::from(m.clone());
        }
        worst = worst.max((&f - &g).abs());
    }
    BigRational::new(worst, BigInt::from(total))
}

/// Exact fraction of `multiset / (k + n)` lying strictly outside
/// `[-eps_num/eps_den, eps_num/eps_den]`.
pub fn walk_tail(multiset: &BTreeMap<i64, BigUint>, degree: i64, eps_num: i64, eps_den: i64) -> BigRational {
    let total: BigUint = multiset.values().sum();
    let outside: BigUint = multiset
        .iter()
        .filter(|(v, _)| v.abs() * eps_den > eps_num * degree)
        .map(|(_, m)| m)
        .sum();
    BigRational::new(BigInt::from(outside), BigInt::from(total))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite ratio")
}

/// Shortest cycle via "remove one edge, BFS between its ends".
pub fn girth_by_edge_removal(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for &(u, v) in g.edges() {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x, y) == (u, v) || (x, y) == (v, u) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if dist[v] != usize::MAX {
            let cycle = dist[v] + 1;
            best = Some(best.map_or(cycle, |b| b.min(cycle)));
        }
    }
    best
}

/// Odd-cycle check by brute force over 2-colorings for tiny graphs.
pub fn bipartite_by_enumeration(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 16, "enumeration oracle is for tiny graphs");
    (0u32..1 << n).any(|mask| g.edges().iter().all(|&(u, v)| ((mask >> u) ^ (mask >> v)) & 1 == 1))
}

/// Named fixtures with their known girths.
pub fn fixture_girths() -> Vec<(&'static str, Graph, usize)> {
    vec![
        ("cycle-3", Graph::cycle(3).unwrap(), 3),
        ("cycle-4", Graph::cycle(4).unwrap(), 4),
        ("cycle-5", Graph::cycle(5).unwrap(), 5),
        ("cycle-6", Graph::cycle(6).unwrap(), 6),
        ("complete-4", Graph::complete(4).unwrap(), 3),
        ("complete-5", Graph::complete(5).unwrap(), 3),
        ("hypercube-2", Graph::hypercube(2).unwrap(), 4),
        ("hypercube-3", Graph::hypercube(3).unwrap(), 4),
        ("petersen", Graph::petersen(), 5),
    ]
}

/// Exact Kolmogorov distance between the empirical law of `points`
/// (value, weight) and a reference CDF given by its right-continuous value
/// and left limit at any rational point. `extra` lists the reference's own
/// breakpoints.
pub fn exact_kolmogorov(
    points: &[(BigRational, BigUint)],
    extra: &[BigRational],
    reference: impl Fn(&BigRational) -> (BigRational, BigRational),
) -> BigRational {
    let total = BigInt::from(points.iter().map(|(_, m)| m).sum::<BigUint>());
    let mut weights: BTreeMap<BigRational, BigInt> = BTreeMap::new();
    for (v, m) in points {
        *weights.entry(v.clone()).or_insert_with(BigInt::zero) += BigInt::from(m.clone());
    }
    for x in extra {
        weights.entry(x.clone()).or_insert_with(BigInt::zero);
    }
    let mut below = BigInt::zero();
    let mut worst = BigRational::zero();
    for (x, w) in weights {
        let (at, left) = reference(&x);
        let f_left = BigRational::new(below.clone(), total.clone());
        below += w;
        let f_at = BigRational::new(below.clone(), total.clone());
        for d in [(f_at - at).abs(), (f_left - left).abs()] {
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Unit step at `c`: (value at x, left limit at x).
pub fn step_at(c: BigRational) -> impl Fn(&BigRational) -> (BigRational, BigRational) {
    move |x| {
        let one = rational(1, 1);
        let zero = rational(0, 1);
        let at = if *x >= c { one.clone() } else { zero.clone() };
        let left = if *x > c { one } else { zero };
        (at, left)
    }
}

/// Uniform law on `[0, 2]`.
pub fn uniform_0_2(x: &BigRational) -> (BigRational, BigRational) {
    let zero = rational(0, 1);
    let one = rational(1, 1);
    let u = (x / rational(2, 1)).clamp(zero, one);
    (u.clone(), u)
}

/// Points `(transform(v), m)` of an integer multiset.
pub fn mapped_points(
    multiset: &BTreeMap<i64, BigUint>,
    transform: impl Fn(i64) -> BigRational,
) -> Vec<(BigRational, BigUint)> {
    multiset.iter().map(|(&v, m)| (transform(v), m.clone())).collect()
}
