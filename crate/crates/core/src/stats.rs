use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::graph::{Graph, VertexId};

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    /// `None` when the graph is disconnected.
    pub diameter: Option<u32>,
    pub clique_number: usize,
    pub min_degree: usize,
    /// Two-part partition `(side_a, side_b)` when the graph is bipartite.
    pub bipartition: Option<(Vec<VertexId>, Vec<VertexId>)>,
    pub is_connected: bool,
}

impl GraphStats {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

pub fn stats(g: &Graph) -> GraphStats {
    let d = all_pairs_distances(g);
    stats_with(g, &d)
}

pub fn stats_with(g: &Graph, d: &DistanceMatrix) -> GraphStats {
    let is_connected = d.is_connected();
    GraphStats {
        diameter: is_connected.then(|| d.max_finite()),
        clique_number: clique_number(g),
        min_degree: g.vertices().map(|v| g.degree(v)).min().unwrap_or(0),
        bipartition: bipartition(g),
        is_connected,
    }
}

/// Two-colors every component by BFS; `None` on an odd cycle.
pub fn bipartition(g: &Graph) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    let (a, b): (Vec<_>, Vec<_>) = (0..n).partition(|&v| side[v] == 0);
    Some((a, b))
}

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn empty(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }
    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn and(&self, o: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn and_not_count(&self, o: &BitSet) -> usize {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Size of a largest clique, by Bron–Kerbosch with Tomita pivoting.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let nbr: Vec<BitSet> = g
        .vertices()
        .map(|v| {
            let mut s = BitSet::empty(n);
            g.neighbors(v).iter().for_each(|&w| s.insert(w));
            s
        })
        .collect();
    let mut best = 0;
    expand(&nbr, 0, BitSet::full(n), BitSet::empty(n), &mut best);
    best
}

fn expand(nbr: &[BitSet], size: usize, mut p: BitSet, mut x: BitSet, best: &mut usize) {
    if p.is_empty() {
        if x.is_empty() {
            *best = (*best).max(size);
        }
        return;
    }
    if size + p.len() <= *best {
        return;
    }
    // Pivot maximizing |P ∩ N(u)| over P ∪ X.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.len() - p.and_not_count(&nbr[u]))
        .expect("P is non-empty");
    let candidates: Vec<usize> = p.iter().filter(|&v| !nbr[pivot].contains(v)).collect();
    for v in candidates {
        expand(nbr, size + 1, p.and(&nbr[v]), x.and(&nbr[v]), best);
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::build(n, &e, None).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges, None).unwrap()
    }

    #[test]
    fn k5() {
        let s = stats(&complete(5));
        assert_eq!((s.clique_number, s.min_degree, s.diameter), (5, 4, Some(1)));
        assert!(!s.is_bipartite());
    }

    #[test]
    fn c7() {
        let s = stats(&cycle(7));
        assert_eq!((s.clique_number, s.diameter), (2, Some(3)));
        assert!(!s.is_bipartite());
    }

    #[test]
    fn complete_graphs_clique_number() {
        for n in 1..=8 {
            assert_eq!(clique_number(&complete(n)), n);
        }
    }

    #[test]
    fn edgeless_and_empty() {
        let g = Graph::build(3, &[], None).unwrap();
        let s = stats(&g);
        assert_eq!(s.clique_number, 1);
        assert_eq!(s.diameter, None);
        assert!(s.is_bipartite());
    }

    #[test]
    fn clique_number_on_larger_graph() {
        // K4 on {0,1,2,3} glued to a C5 on {3..7} plus a pendant triangle
        let mut e = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        e.extend([(3, 4), (4, 5), (5, 6), (6, 7), (7, 3), (7, 8), (8, 9), (9, 7)]);
        let g = Graph::build(70, &e, None).unwrap();
        assert_eq!(clique_number(&g), 4);
    }

    #[test]
    fn even_cycle_partition() {
        let (a, b) = bipartition(&cycle(6)).unwrap();
        assert_eq!(a, vec![0, 2, 4]);
        assert_eq!(b, vec![1, 3, 5]);
    }
}
