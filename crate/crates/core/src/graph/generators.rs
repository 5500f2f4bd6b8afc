use super::Graph;
use crate::{Error, Limits, Result};

impl Graph {
    /// The cycle `C_n` with edges `(i, i + 1 mod n)`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "complete graph needs n >= 2, got {n}"
            )));
        }
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn hypercube(d: u32) -> Result<Graph> {
        Graph::hypercube_capped(d, Limits::default().hypercube_dimension)
    }

    /// The hypercube `Q_d` on `{0,1}^d`.
    ///
    /// Vertex `i` carries the reflected Gray code of `i` as its bit-string
    /// label, so `Q_2` comes out as the 4-cycle `00, 01, 11, 10` with
    /// adjacency `[[0,1,0,1],[1,0,1,0],[0,1,0,1],[1,0,1,0]]`.
    pub fn hypercube_capped(d: u32, max_dimension: u32) -> Result<Graph> {
        if d < 1 {
            return Err(Error::InvalidParameter("hypercube needs d >= 1".into()));
        }
        if d > max_dimension {
            return Err(Error::SizeGuard {
                what: "hypercube dimension",
                requested: d as u128,
                cap: max_dimension as u128,
                hint: "use the closed-form hypercube spectrum instead",
            });
        }
        let n = 1usize << d;
        let gray = |i: usize| i ^ (i >> 1);
        let mut position = vec![0usize; n];
        for i in 0..n {
            position[gray(i)] = i;
        }
        let edges = (0..n).flat_map(|i| {
            let code = gray(i);
            let position = &position;
            (0..d).filter_map(move |bit| {
                let j = position[code ^ (1 << bit)];
                (i < j).then_some((i, j))
            })
        });
        let graph = Graph::new(n, edges.collect::<Vec<_>>())?;
        let labels = (0..n)
            .map(|i| format!("{:0width$b}", gray(i), width = d as usize))
            .collect();
        graph.with_labels(labels)
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i + 5`, and the
    /// inner pentagram `5 + i -- 5 + (i + 2) mod 5`.
    pub fn petersen() -> Graph {
        let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
        Graph::new(10, edges).expect("the Petersen construction is simple")
    }
}
