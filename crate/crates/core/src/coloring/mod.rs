//! Packing colorings and the verifier every other result is checked against.

mod patterns;

pub use patterns::*;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::ColoringError;
use crate::families::fssd;
use crate::graph::{Graph, VertexId};

/// Total assignment of positive colors, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingColoring {
    colors: Vec<u32>,
}

impl PackingColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self, ColoringError> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor(v));
        }
        Ok(PackingColoring { colors })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color used.
    pub fn k(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn colors_used(&self) -> BTreeSet<u32> {
        self.colors.iter().copied().collect()
    }

    /// Vertices carrying color `i`.
    pub fn class(&self, i: u32) -> Vec<VertexId> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == i).collect()
    }
}

/// A pair of same-colored vertices that are too close.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub color: u32,
    pub distance: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub colors_used: BTreeSet<u32>,
}

/// Checks that equal colors `i` sit at distance greater than `i`.
pub fn verify(g: &Graph, c: &PackingColoring) -> Result<VerificationReport, ColoringError> {
    verify_with(&all_pairs_distances(g), c)
}

pub fn verify_with(d: &DistanceMatrix, c: &PackingColoring) -> Result<VerificationReport, ColoringError> {
    let n = d.n();
    if c.len() != n {
        return Err(ColoringError::Partial { got: c.len(), n });
    }
    let mut violations = Vec::new();
    for u in 0..n {
        let cu = c.color(u);
        for v in u + 1..n {
            if c.color(v) == cu && d.get(u, v) <= cu {
                violations.push(Violation {
                    u,
                    v,
                    color: cu,
                    distance: d.get(u, v),
                });
            }
        }
    }
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
        colors_used: c.colors_used(),
    })
}

/// Colors of `fssd(base, m)` from a packing coloring of `base`: every new
/// vertex gets 1 and every original `u_i` gets `c(u_i) + 1`.
pub fn lift_to_fssd(base: &Graph, c: &PackingColoring, m: u32) -> Result<PackingColoring, ColoringError> {
    let report = verify(base, c)?;
    if !report.valid {
        return Err(ColoringError::InvalidInput(report.violations.len()));
    }
    let mut colors: Vec<u32> = c.colors().iter().map(|&x| x + 1).collect();
    colors.resize(base.n() + m as usize * base.edge_count(), 1);
    PackingColoring::new(colors)
}

/// Same as [`lift_to_fssd`], returning the subdivided graph alongside.
pub fn lift_with_graph(base: &Graph, c: &PackingColoring, m: u32) -> Result<(Graph, PackingColoring), ColoringError> {
    let lifted = lift_to_fssd(base, c, m)?;
    Ok((fssd(base, m), lifted))
}

/// First-fit: each vertex in `order` takes the smallest color that keeps the
/// already-colored vertices valid.
pub fn greedy_coloring(g: &Graph, order: &[VertexId]) -> PackingColoring {
    greedy_with(&all_pairs_distances(g), order)
}

pub fn greedy_with(d: &DistanceMatrix, order: &[VertexId]) -> PackingColoring {
    let n = d.n();
    assert_eq!(order.len(), n, "order must be a permutation of the vertices");
    let mut colors = vec![0u32; n];
    let mut done: Vec<VertexId> = Vec::with_capacity(n);
    for &v in order {
        let row = d.row(v);
        let mut c = 1;
        while done.iter().any(|&w| colors[w] == c && row[w] <= c) {
            c += 1;
        }
        colors[v] = c;
        done.push(v);
    }
    PackingColoring { colors }
}
