//! Reference oracle: exhaustive enumeration, sharing nothing with the search
//! beyond the graph type. Distances come from Floyd–Warshall, vertices are
//! colored in id order, and a prefix is abandoned only once it already
//! contains a conflicting pair.

use crate::coloring::{verify, PackingColoring};
use crate::error::SolveError;
use crate::graph::Graph;

pub const BRUTE_FORCE_LIMIT: usize = 12;

fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.n();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][w] + d[w][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

/// Exact packing chromatic number by enumeration over colors `1..=cap`
/// (default `|V|`). Limited to [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force_chi(g: &Graph, cap: Option<u32>) -> Result<u32, SolveError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let cap = cap.unwrap_or(n as u32);
    let d = floyd_warshall(g);
    for k in 1..=cap {
        let mut colors = vec![0u32; n];
        if extend(&d, k, &mut colors, 0) {
            let c = PackingColoring::new(colors).expect("all colors positive");
            assert!(
                verify(g, &c).expect("total coloring").valid,
                "oracle produced an invalid coloring"
            );
            return Ok(k);
        }
    }
    Err(SolveError::CapTooSmall(cap))
}

fn extend(d: &[Vec<u64>], k: u32, colors: &mut [u32], v: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    for c in 1..=k {
        if (0..v).all(|w| colors[w] != c || d[v][w] > u64::from(c)) {
            colors[v] = c;
            if extend(d, k, colors, v + 1) {
                return true;
            }
        }
    }
    colors[v] = 0;
    false
}
