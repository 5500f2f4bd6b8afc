//! Undirected simple graphs and the cylinder construction.

use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Limits, Result};

mod generators;

/// An undirected simple graph on vertices `0..vertex_count`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Values are
/// immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Position of a cylinder vertex: which base vertex it copies and which layer
/// it lives in.
///
/// Cylinder vertices are ordered with all of layer 0 first, then layer 1,
/// each layer in base order. That ordering is what makes the adjacency matrix
/// exactly `[[A, I], [I, A]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylinderLabel {
    pub base_vertex: usize,
    pub layer: u8,
}

impl CylinderLabel {
    pub fn of(index: usize, base_count: usize) -> Self {
        assert!(index < 2 * base_count, "cylinder index out of range");
        CylinderLabel {
            base_vertex: index % base_count,
            layer: (index / base_count) as u8,
        }
    }

    pub fn index(self, base_count: usize) -> usize {
        self.layer as usize * base_count + self.base_vertex
    }
}

/// Length of the shortest cycle, or `Infinite` for a forest.
///
/// Ordered so that every finite girth is below `Infinite`, which lets
/// `min(g, Girth::Finite(4))` express the cylinder girth rule directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation), and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Validation(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_edges(vertex_count, normalized))
    }

    /// Caller guarantees edges are valid, normalized, sorted and unique.
    fn from_sorted_edges(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges,
            neighbors,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::Validation(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut rows = vec![vec![0u8; self.vertex_count]; self.vertex_count];
        for &(u, v) in &self.edges {
            rows[u][v] = 1;
            rows[v][u] = 1;
        }
        rows
    }

    /// Returns the common degree `k`, or a not-regular error naming vertex 0
    /// and the first vertex whose degree differs from it.
    pub fn check_regular(&self) -> Result<usize> {
        if self.vertex_count == 0 {
            return Err(Error::InvalidParameter(
                "regularity of the empty graph is undefined".into(),
            ));
        }
        let k = self.degree(0);
        match (1..self.vertex_count).find(|&v| self.degree(v) != k) {
            None => Ok(k),
            Some(v) => Err(Error::NotRegular {
                first: (0, k),
                second: (v, self.degree(v)),
            }),
        }
    }

    /// A proper 2-coloring (0/1 per vertex) if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color: Vec<Option<u8>> = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are colored");
                for &w in &self.neighbors[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all vertices visited")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Shortest cycle length by breadth-first search from every vertex.
    ///
    /// A non-tree edge `(u, w)` met during the search from `root` closes a
    /// closed walk of length `dist[u] + dist[w] + 1` through `root`; the
    /// minimum over all roots is the girth.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if best == 3 {
                break;
            }
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // Nothing shorter than `best` can close beyond this depth.
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.neighbors[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// The cylinder `G x K_2`: two copies of the graph plus the matching
    /// `(i, i + n)`, with layer 0 occupying indices `0..n` and layer 1
    /// `n..2n`.
    pub fn cylinder(&self) -> Graph {
        let n = self.vertex_count;
        // Matching edges (i, i + n) sort after every layer-0 edge (i, j < n)
        // with the same first endpoint, and before every layer-1 edge.
        let mut merged = Vec::with_capacity(2 * self.edges.len() + n);
        let mut layer0 = self.edges.iter().peekable();
        for i in 0..n {
            while let Some(&&(u, v)) = layer0.peek() {
                if u != i {
                    break;
                }
                merged.push((u, v));
                layer0.next();
            }
            merged.push((i, i + n));
        }
        merged.extend(self.edges.iter().map(|&(u, v)| (u + n, v + n)));
        debug_assert!(merged.windows(2).all(|w| w[0] < w[1]));

        let mut cylinder = Graph::from_sorted_edges(2 * n, merged);
        if let Some(labels) = &self.labels {
            cylinder.labels = Some(
                (0..2)
                    .flat_map(|layer| labels.iter().map(move |l| format!("{l}.{layer}")))
                    .collect(),
            );
        }
        cylinder
    }

    /// Applies [`Graph::cylinder`] `n` times under the default explicit-size
    /// cap.
    pub fn iterate_cylinder(&self, n: u32) -> Result<Graph> {
        self.iterate_cylinder_capped(n, Limits::default().explicit_vertices)
    }

    pub fn iterate_cylinder_capped(&self, n: u32, vertex_cap: usize) -> Result<Graph> {
        let requested = scaled_size(self.vertex_count, n);
        if requested > vertex_cap as u128 {
            return Err(Error::SizeGuard {
                what: "explicit cylinder iterate",
                requested,
                cap: vertex_cap as u128,
                hint: "use the symbolic spectrum path (shift iteration) instead",
            });
        }
        let mut g = self.clone();
        for _ in 0..n {
            g = g.cylinder();
        }
        Ok(g)
    }
}

/// `base * 2^n`, saturating at `u128::MAX`.
pub(crate) fn scaled_size(base: usize, n: u32) -> u128 {
    if base == 0 {
        return 0;
    }
    let base = base as u128;
    if n >= 128 || base.leading_zeros() <= n {
        u128::MAX
    } else {
        base << n
    }
}
