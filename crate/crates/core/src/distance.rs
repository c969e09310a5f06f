use std::collections::VecDeque;

use crate::graph::{Graph, VertexId};

/// Hop distances between every pair of vertices, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Sentinel for pairs in different components.
    pub const INFINITY: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&x| x != Self::INFINITY)
            .max()
            .unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&Self::INFINITY)
    }

    /// Largest finite distance from `u`.
    pub fn eccentricity(&self, u: VertexId) -> u32 {
        self.row(u)
            .iter()
            .copied()
            .filter(|&x| x != Self::INFINITY)
            .max()
            .unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![DistanceMatrix::INFINITY; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == DistanceMatrix::INFINITY {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}
