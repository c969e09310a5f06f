//! Vertex names for the generated families.
//!
//! All indices are 1-based. Rendering follows the usual subscript/superscript
//! notation: `u_1`, `u_{1,2}^3`, `v_{2,1}`, `v_{2,1,2}^1`, `s_{3,2,1}^1`,
//! `v_4`, `s_{1,4}^2`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "LabelRepr", into = "LabelRepr")]
pub enum VertexLabel {
    /// `u_i`, a vertex of the base graph.
    Original(u32),
    /// `u_{i,j}^k`, stored with `i < j`.
    SubdividedEdge(u32, u32, u32),
    /// `v_{i,g}`, vertex `g` of the copy attached to `u_i`.
    CopyVertex(u32, u32),
    /// `v_{i,g,h}^k`, stored with `g < h`.
    CopyEdgeSubdivided(u32, u32, u32, u32),
    /// `s_{j,i,g}^k`, between `u_j` and `v_{i,g}`.
    Connector(u32, u32, u32, u32),
    /// `v_i`, the single copy vertex of a splitting graph.
    SplitCopy(u32),
    /// `s_{i,j}^k`, between `u_i` and `v_j` in a splitting graph.
    SplitConnector(u32, u32, u32),
}

impl VertexLabel {
    /// Canonicalizing constructor for `u_{i,j}^k`.
    pub fn subdivided(i: u32, j: u32, k: u32) -> Self {
        VertexLabel::SubdividedEdge(i.min(j), i.max(j), k)
    }

    /// Canonicalizing constructor for `v_{i,g,h}^k`.
    pub fn copy_edge(i: u32, g: u32, h: u32, k: u32) -> Self {
        VertexLabel::CopyEdgeSubdivided(i, g.min(h), g.max(h), k)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            VertexLabel::Original(..) => "original",
            VertexLabel::SubdividedEdge(..) => "subdivided_edge",
            VertexLabel::CopyVertex(..) => "copy_vertex",
            VertexLabel::CopyEdgeSubdivided(..) => "copy_edge_subdivided",
            VertexLabel::Connector(..) => "connector",
            VertexLabel::SplitCopy(..) => "split_copy",
            VertexLabel::SplitConnector(..) => "split_connector",
        }
    }

    pub fn indices(&self) -> Vec<u32> {
        match *self {
            VertexLabel::Original(i) | VertexLabel::SplitCopy(i) => vec![i],
            VertexLabel::CopyVertex(i, g) => vec![i, g],
            VertexLabel::SubdividedEdge(i, j, k) | VertexLabel::SplitConnector(i, j, k) => {
                vec![i, j, k]
            }
            VertexLabel::CopyEdgeSubdivided(a, b, c, d) | VertexLabel::Connector(a, b, c, d) => {
                vec![a, b, c, d]
            }
        }
    }

    /// True for vertices introduced by a super subdivision.
    pub fn is_subdivided(&self) -> bool {
        matches!(
            self,
            VertexLabel::SubdividedEdge(..)
                | VertexLabel::CopyEdgeSubdivided(..)
                | VertexLabel::Connector(..)
                | VertexLabel::SplitConnector(..)
        )
    }

    fn from_parts(kind: &str, idx: &[u32]) -> Result<Self, String> {
        if idx.contains(&0) {
            return Err(format!("label indices are 1-based, got {idx:?}"));
        }
        let arity = |want: usize| {
            if idx.len() == want {
                Ok(())
            } else {
                Err(format!("label kind {kind} takes {want} indices, got {}", idx.len()))
            }
        };
        let label = match kind {
            "original" => {
                arity(1)?;
                VertexLabel::Original(idx[0])
            }
            "subdivided_edge" => {
                arity(3)?;
                VertexLabel::subdivided(idx[0], idx[1], idx[2])
            }
            "copy_vertex" => {
                arity(2)?;
                VertexLabel::CopyVertex(idx[0], idx[1])
            }
            "copy_edge_subdivided" => {
                arity(4)?;
                VertexLabel::copy_edge(idx[0], idx[1], idx[2], idx[3])
            }
            "connector" => {
                arity(4)?;
                VertexLabel::Connector(idx[0], idx[1], idx[2], idx[3])
            }
            "split_copy" => {
                arity(1)?;
                VertexLabel::SplitCopy(idx[0])
            }
            "split_connector" => {
                arity(3)?;
                VertexLabel::SplitConnector(idx[0], idx[1], idx[2])
            }
            other => return Err(format!("unknown label kind {other:?}")),
        };
        Ok(label)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexLabel::Original(i) => write!(f, "u_{i}"),
            VertexLabel::SubdividedEdge(i, j, k) => write!(f, "u_{{{i},{j}}}^{k}"),
            VertexLabel::CopyVertex(i, g) => write!(f, "v_{{{i},{g}}}"),
            VertexLabel::CopyEdgeSubdivided(i, g, h, k) => write!(f, "v_{{{i},{g},{h}}}^{k}"),
            VertexLabel::Connector(j, i, g, k) => write!(f, "s_{{{j},{i},{g}}}^{k}"),
            VertexLabel::SplitCopy(i) => write!(f, "v_{i}"),
            VertexLabel::SplitConnector(i, j, k) => write!(f, "s_{{{i},{j}}}^{k}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LabelRepr {
    kind: String,
    indices: Vec<u32>,
}

impl TryFrom<LabelRepr> for VertexLabel {
    type Error = String;

    fn try_from(r: LabelRepr) -> Result<Self, Self::Error> {
        VertexLabel::from_parts(&r.kind, &r.indices)
    }
}

impl From<VertexLabel> for LabelRepr {
    fn from(l: VertexLabel) -> Self {
        LabelRepr {
            kind: l.kind().to_string(),
            indices: l.indices(),
        }
    }
}
