use std::collections::HashMap;

use crate::error::GraphError;
use crate::label::VertexLabel;

/// Dense vertex index; a graph on `n` vertices uses exactly `0..n`.
pub type VertexId = usize;

/// Immutable simple undirected graph with one label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    name: String,
    adjacency: Vec<Vec<VertexId>>,
    labels: Vec<VertexLabel>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges, out-of-range ids and
    /// repeated labels. Without labels, vertex `i` is named `u_{i+1}`.
    pub fn build(
        n: usize,
        edges: &[(VertexId, VertexId)],
        labels: Option<Vec<VertexLabel>>,
    ) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::IdOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }

        let labels = match labels {
            Some(l) if l.len() != n => return Err(GraphError::LabelCount { got: l.len(), n }),
            Some(l) => l,
            None => (1..=n as u32).map(VertexLabel::Original).collect(),
        };
        let mut seen = HashMap::with_capacity(n);
        for (id, l) in labels.iter().enumerate() {
            if let Some(prev) = seen.insert(*l, id) {
                return Err(GraphError::DuplicateLabel(*l, prev, id));
            }
        }

        Ok(Graph {
            name: String::new(),
            adjacency,
            labels,
            edge_count: edges.len(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: VertexId) -> VertexLabel {
        self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// The unique vertex carrying `label`.
    pub fn locate(&self, label: VertexLabel) -> Result<VertexId, GraphError> {
        self.labels
            .iter()
            .position(|l| *l == label)
            .ok_or(GraphError::LabelAbsent(label))
    }

    /// Subgraph induced on `keep`. Returns the subgraph and, for each of its
    /// vertices, the id it had in `self`.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<(Graph, Vec<VertexId>), GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let n = self.n();
        let mut old_ids: Vec<VertexId> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in old_ids.iter().enumerate() {
            if v >= n {
                return Err(GraphError::IdOutOfRange { id: v, n });
            }
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|(u, v)| (new_id[u], new_id[v]))
            .collect();
        let labels = old_ids.iter().map(|&v| self.labels[v]).collect();
        let g = Graph::build(old_ids.len(), &edges, Some(labels))?.with_name(format!("{}[induced]", self.name));
        Ok((g, old_ids))
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (2, 0)], None).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.neighbors(2), &[0, 1]);
        assert_eq!(g.label(0), VertexLabel::Original(1));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::build(1, &[], None).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::build(4, &[(0, 1), (0, 1)], None),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::build(4, &[(1, 0), (0, 1)], None),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::build(2, &[(1, 1)], None), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::build(2, &[(0, 2)], None),
            Err(GraphError::IdOutOfRange { id: 2, n: 2 })
        );
        let labels = vec![VertexLabel::Original(1), VertexLabel::Original(1)];
        assert!(matches!(
            Graph::build(2, &[], Some(labels)),
            Err(GraphError::DuplicateLabel(..))
        ));
    }

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)], None).unwrap();
        let deg_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(deg_sum, 2 * g.edge_count());
        assert_eq!(g.edges().count(), g.edge_count());
    }

    #[test]
    fn induced_subgraph_of_k4_is_k3() {
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], None).unwrap();
        let (h, map) = k4.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!((h.n(), h.edge_count()), (3, 3));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.label(0), VertexLabel::Original(2));
        assert_eq!(k4.induced_subgraph(&[]), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn induced_alternate_vertices_of_c6_are_isolated() {
        let c6 = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], None).unwrap();
        let (h, _) = c6.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!((h.n(), h.edge_count()), (3, 0));
        assert_eq!(h.components().len(), 3);
    }
}
