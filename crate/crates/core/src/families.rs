//! Graph families with their canonical vertex names.
//!
//! Specs have a small text form used by the command line:
//! `complete:4`, `cycle:7`, `path:5`, `star:6`, `petersen`, `bipartite:2,3`,
//! `corona(<spec>,<spec>)`, `split(<spec>)`, `fssd(<spec>,m=2)`.
//! Parsing ignores case and whitespace.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::FamilyError;
use crate::graph::{Graph, VertexId};
use crate::label::VertexLabel;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(u32),
    Cycle(u32),
    Complete(u32),
    /// `K_{1,n}`: one center and `n` leaves.
    Star(u32),
    Petersen,
    CompleteBipartite(u32, u32),
    NeighborhoodCorona(Box<FamilySpec>, Box<FamilySpec>),
    Splitting(Box<FamilySpec>),
    Fssd(Box<FamilySpec>, u32),
}

/// Vertex and edge counts predicted by closed formulas, checked against the
/// built graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMeta {
    pub vertices: usize,
    pub edges: usize,
    pub note: String,
}

impl FamilySpec {
    pub fn corona(g: FamilySpec, h: FamilySpec) -> Self {
        FamilySpec::NeighborhoodCorona(Box::new(g), Box::new(h))
    }

    pub fn splitting(g: FamilySpec) -> Self {
        FamilySpec::Splitting(Box::new(g))
    }

    pub fn fssd(g: FamilySpec, m: u32) -> Self {
        FamilySpec::Fssd(Box::new(g), m)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |msg: String| Err(FamilyError::InvalidParameters(msg));
        match self {
            FamilySpec::Path(0) => bad("path needs n >= 1".into()),
            FamilySpec::Cycle(n) if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Complete(0) => bad("complete graph needs n >= 1".into()),
            FamilySpec::Star(0) => bad("star needs at least one leaf".into()),
            FamilySpec::CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                bad(format!("complete bipartite needs positive sides, got {a},{b}"))
            }
            FamilySpec::NeighborhoodCorona(g, h) => {
                g.validate()?;
                h.validate()
            }
            FamilySpec::Splitting(g) => g.validate(),
            FamilySpec::Fssd(_, 0) => bad("fssd needs m >= 1".into()),
            FamilySpec::Fssd(g, _) => g.validate(),
            _ => Ok(()),
        }
    }

    /// Counts from closed formulas, without building anything.
    pub fn expected_counts(&self) -> (usize, usize) {
        match self {
            FamilySpec::Path(n) => (*n as usize, *n as usize - 1),
            FamilySpec::Cycle(n) => (*n as usize, *n as usize),
            FamilySpec::Complete(n) => {
                let n = *n as usize;
                (n, n * (n - 1) / 2)
            }
            FamilySpec::Star(n) => (*n as usize + 1, *n as usize),
            FamilySpec::Petersen => (10, 15),
            FamilySpec::CompleteBipartite(a, b) => ((a + b) as usize, (a * b) as usize),
            FamilySpec::NeighborhoodCorona(g, h) => {
                let (n1, m1) = g.expected_counts();
                let (n2, m2) = h.expected_counts();
                corona_counts(n1, m1, n2, m2)
            }
            FamilySpec::Splitting(g) => {
                let (n1, m1) = g.expected_counts();
                corona_counts(n1, m1, 1, 0)
            }
            FamilySpec::Fssd(g, m) => {
                let (n, e) = g.expected_counts();
                let m = *m as usize;
                (n + m * e, 2 * m * e)
            }
        }
    }
}

fn corona_counts(n1: usize, m1: usize, n2: usize, m2: usize) -> (usize, usize) {
    (n1 + n1 * n2, m1 * (2 * n2 + 1) + n1 * m2)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            FamilySpec::NeighborhoodCorona(g, h) => write!(f, "corona({g},{h})"),
            FamilySpec::Splitting(g) => write!(f, "split({g})"),
            FamilySpec::Fssd(g, m) => write!(f, "fssd({g},m={m})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: Vec<u8> = s
            .bytes()
            .filter(|b| !b.is_ascii_whitespace())
            .map(|b| b.to_ascii_lowercase())
            .collect();
        let mut p = Parser { s: &text, pos: 0 };
        let spec = p.spec()?;
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> FamilyError {
        FamilyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), FamilyError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(b'a'..=b'z' | b'_' | b'-')) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<u32, FamilyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| FamilyError::Parse {
                pos: start,
                msg: "expected an integer".into(),
            })
    }

    fn spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let start = self.pos;
        let name = self.ident();
        let spec = match name.as_str() {
            "complete" | "cycle" | "path" | "star" => {
                self.expect(b':')?;
                let n = self.int()?;
                match name.as_str() {
                    "complete" => FamilySpec::Complete(n),
                    "cycle" => FamilySpec::Cycle(n),
                    "path" => FamilySpec::Path(n),
                    _ => FamilySpec::Star(n),
                }
            }
            "bipartite" => {
                self.expect(b':')?;
                let a = self.int()?;
                self.expect(b',')?;
                FamilySpec::CompleteBipartite(a, self.int()?)
            }
            "petersen" => FamilySpec::Petersen,
            "corona" => {
                self.expect(b'(')?;
                let g = self.spec()?;
                self.expect(b',')?;
                let h = self.spec()?;
                self.expect(b')')?;
                FamilySpec::corona(g, h)
            }
            "split" => {
                self.expect(b'(')?;
                let g = self.spec()?;
                self.expect(b')')?;
                FamilySpec::splitting(g)
            }
            "fssd" => {
                self.expect(b'(')?;
                let g = self.spec()?;
                self.expect(b',')?;
                if self.s[self.pos..].starts_with(b"m=") {
                    self.pos += 2;
                }
                let m = self.int()?;
                self.expect(b')')?;
                FamilySpec::fssd(g, m)
            }
            "" => return Err(self.error("expected a family name")),
            other => {
                return Err(FamilyError::Parse {
                    pos: start,
                    msg: format!("unknown family {other:?}"),
                })
            }
        };
        Ok(spec)
    }
}

/// Builds the graph described by `spec`, named by its canonical text form.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, FamilyMeta), FamilyError> {
    spec.validate()?;
    let g = build(spec)?.with_name(spec.to_string());
    let (vertices, edges) = spec.expected_counts();
    assert_eq!(
        (g.n(), g.edge_count()),
        (vertices, edges),
        "closed-form counts disagree with the built graph for {spec}"
    );
    let note = match spec {
        FamilySpec::NeighborhoodCorona(..) | FamilySpec::Splitting(_) => {
            "|V| = n1 + n1*n2, |E| = m1*(2*n2 + 1) + n1*m2"
        }
        FamilySpec::Fssd(..) => "|V| = n + m*|E(G)|, |E| = 2*m*|E(G)|",
        _ => "standard family",
    };
    Ok((
        g,
        FamilyMeta {
            vertices,
            edges,
            note: note.to_string(),
        },
    ))
}

fn build(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let g = match *spec {
        FamilySpec::Path(n) => {
            let n = n as usize;
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::build(n, &e, None)?
        }
        FamilySpec::Cycle(n) => cycle(n as usize),
        FamilySpec::Complete(n) => complete(n as usize),
        FamilySpec::Star(n) => {
            let e: Vec<_> = (1..=n as usize).map(|i| (0, i)).collect();
            Graph::build(n as usize + 1, &e, None)?
        }
        FamilySpec::Petersen => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((i + 5, (i + 2) % 5 + 5));
            }
            Graph::build(10, &e, None)?
        }
        FamilySpec::CompleteBipartite(a, b) => {
            let (a, b) = (a as usize, b as usize);
            let e: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
            Graph::build(a + b, &e, None)?
        }
        FamilySpec::NeighborhoodCorona(ref g, ref h) => neighborhood_corona(&build(g)?, &build(h)?),
        FamilySpec::Splitting(ref g) => splitting(&build(g)?),
        FamilySpec::Fssd(ref g, m) => fssd(&build(g)?, m),
    };
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::build(n, &e, None).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &e, None).expect("cycle needs n >= 3")
}

/// Name for a vertex placed on the edge `a`-`b`, if the endpoint names fit one
/// of the corona naming schemes.
fn subdivided_label(a: VertexLabel, b: VertexLabel, k: u32) -> Option<VertexLabel> {
    use VertexLabel::*;
    match (a, b) {
        (Original(i), Original(j)) => Some(VertexLabel::subdivided(i, j, k)),
        (CopyVertex(i, g), CopyVertex(i2, h)) if i == i2 => Some(VertexLabel::copy_edge(i, g, h, k)),
        (Original(j), CopyVertex(i, g)) | (CopyVertex(i, g), Original(j)) => Some(Connector(j, i, g, k)),
        (Original(i), SplitCopy(j)) | (SplitCopy(j), Original(i)) => Some(SplitConnector(i, j, k)),
        _ => None,
    }
}

/// Finite super subdivision: every edge `u_i u_j` becomes `m` new vertices,
/// each adjacent to exactly `u_i` and `u_j`.
///
/// Originals keep their ids and names. New vertices follow, grouped by edge
/// in sorted `(u, v)` order, then by `k`. If `g`'s names do not fit the
/// `u`/`v` scheme (e.g. `g` is itself a super subdivision), its vertices are
/// renamed `u_{id+1}` first.
pub fn fssd(g: &Graph, m: u32) -> Graph {
    assert!(m >= 1, "fssd needs m >= 1");
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let n = g.n();
    let total = n + m as usize * edges.len();

    let scheme_labels = || -> Option<Vec<VertexLabel>> {
        let mut labels = g.labels().to_vec();
        for &(u, v) in &edges {
            for k in 1..=m {
                labels.push(subdivided_label(g.label(u), g.label(v), k)?);
            }
        }
        Some(labels)
    };
    let labels = scheme_labels().unwrap_or_else(|| {
        let mut labels: Vec<_> = (1..=n as u32).map(VertexLabel::Original).collect();
        for &(u, v) in &edges {
            for k in 1..=m {
                labels.push(VertexLabel::subdivided(u as u32 + 1, v as u32 + 1, k));
            }
        }
        labels
    });

    let mut new_edges = Vec::with_capacity(2 * m as usize * edges.len());
    let mut next = n;
    for &(u, v) in &edges {
        for _ in 0..m {
            new_edges.push((u, next));
            new_edges.push((v, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, total);
    Graph::build(total, &new_edges, Some(labels))
        .expect("super subdivision of a simple graph is simple")
        .with_name(format!("fssd({},m={m})", g.name()))
}

/// `G ⋆ H`: `G` plus one copy of `H` per vertex of `G`; every vertex of copy
/// `i` is joined to the neighbors of `u_i`.
///
/// Base vertex `i` is named `u_{i+1}` (ids `0..n1`); copy `i` occupies ids
/// `n1 + i*n2 ..` with names `v_{i+1,g+1}`, or `v_{i+1}` when `H` has a
/// single vertex.
pub fn neighborhood_corona(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.n(), h.n());
    let copy_id = |i: usize, x: usize| n1 + i * n2 + x;

    let mut labels: Vec<VertexLabel> = (1..=n1 as u32).map(VertexLabel::Original).collect();
    for i in 0..n1 {
        for x in 0..n2 {
            labels.push(if n2 == 1 {
                VertexLabel::SplitCopy(i as u32 + 1)
            } else {
                VertexLabel::CopyVertex(i as u32 + 1, x as u32 + 1)
            });
        }
    }

    let mut edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    for i in 0..n1 {
        edges.extend(h.edges().map(|(a, b)| (copy_id(i, a), copy_id(i, b))));
        for &w in g.neighbors(i) {
            edges.extend((0..n2).map(|x| (w, copy_id(i, x))));
        }
    }
    Graph::build(n1 + n1 * n2, &edges, Some(labels))
        .expect("neighborhood corona is simple")
        .with_name(format!("corona({},{})", g.name(), h.name()))
}

/// Splitting graph `S'(G) = G ⋆ K_1`.
pub fn splitting(g: &Graph) -> Graph {
    let k1 = Graph::build(1, &[], None).expect("K_1");
    let s = neighborhood_corona(g, &k1);
    let name = format!("split({})", g.name());
    s.with_name(name)
}

/// Seeded Erdős–Rényi `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    Graph::build(n, &e, None)
        .expect("G(n,p) is simple")
        .with_name(format!("gnp({n},{p},seed={seed})"))
}

/// First connected `G(n, p)` drawn from the seeded stream `seed, seed+1, ...`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    (seed..)
        .map(|s| erdos_renyi(n, p, s))
        .find(|g| g.components().len() == 1)
        .expect("some draw is connected")
}
