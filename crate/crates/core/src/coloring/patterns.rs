//! Explicit packing colorings of super-subdivided families.
//!
//! Each builder constructs the graph, colors it by vertex name, and runs the
//! verifier. A coloring that fails verification is still returned together
//! with its report, so a bad digit pattern surfaces as data instead of a panic.

use crate::error::ColoringError;
use crate::families::{generate, FamilySpec};
use crate::graph::Graph;
use crate::label::VertexLabel;
use crate::stats::bipartition;

use super::{verify, PackingColoring, VerificationReport};

#[derive(Debug, Clone)]
pub struct PatternOutcome {
    pub graph: Graph,
    pub coloring: PackingColoring,
    pub report: VerificationReport,
    /// Which construction produced the colors of the originals.
    pub note: String,
}

impl PatternOutcome {
    fn finish(graph: Graph, colors: Vec<u32>, note: impl Into<String>) -> Result<Self, ColoringError> {
        let coloring = PackingColoring::new(colors)?;
        let report = verify(&graph, &coloring)?;
        Ok(PatternOutcome {
            graph,
            coloring,
            report,
            note: note.into(),
        })
    }

    pub fn is_valid(&self) -> bool {
        self.report.valid
    }

    pub fn colors_used(&self) -> u32 {
        self.coloring.k()
    }
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ColoringError> {
    if cond {
        Ok(())
    } else {
        Err(ColoringError::InvalidParameters(msg()))
    }
}

fn build(spec: FamilySpec) -> Result<Graph, ColoringError> {
    Ok(generate(&spec)?.0)
}

/// Alternation along a copy path: 2 at `g = 1`, then 3, 2, 3, ...
fn alternating(g: u32) -> u32 {
    if g % 2 == 1 {
        2
    } else {
        3
    }
}

/// `FSSD_m(K_n)` with `n + 1` colors: new vertices 1, `u_i` gets `i + 1`.
pub fn pattern_fssd_complete(n: u32, m: u32) -> Result<PatternOutcome, ColoringError> {
    need(n >= 1 && m >= 1, || format!("need n >= 1, m >= 1; got n={n}, m={m}"))?;
    let graph = build(FamilySpec::fssd(FamilySpec::Complete(n), m))?;
    let colors = graph
        .labels()
        .iter()
        .map(|l| match *l {
            VertexLabel::Original(i) => i + 1,
            _ => 1,
        })
        .collect();
    PatternOutcome::finish(graph, colors, "originals 2..=n+1")
}

/// `FSSD_m(G)` for bipartite `G`: new vertices 1, one side 2, the other 3.
pub fn pattern_fssd_bipartite(base: &Graph, m: u32) -> Result<PatternOutcome, ColoringError> {
    need(m >= 1, || "m must be >= 1".into())?;
    let (side_a, _) = bipartition(base).ok_or(ColoringError::NotBipartite)?;
    let graph = crate::families::fssd(base, m);
    let mut colors = vec![1; graph.n()];
    colors[..base.n()].fill(3);
    for v in side_a {
        colors[v] = 2;
    }
    PatternOutcome::finish(graph, colors, "bipartite sides 2/3, subdivided 1")
}

/// `FSSD_m(C_n)`: bipartite pattern for even `n`; for odd `n` the originals
/// read 2, 3, ..., 2, 3, 4.
pub fn pattern_fssd_cycle(n: u32, m: u32) -> Result<PatternOutcome, ColoringError> {
    need(n >= 3 && m >= 1, || format!("need n >= 3, m >= 1; got n={n}, m={m}"))?;
    if n.is_multiple_of(2) {
        return pattern_fssd_bipartite(&build(FamilySpec::Cycle(n))?, m);
    }
    let graph = build(FamilySpec::fssd(FamilySpec::Cycle(n), m))?;
    let colors = graph
        .labels()
        .iter()
        .map(|l| match *l {
            VertexLabel::Original(i) if i == n => 4,
            VertexLabel::Original(i) => alternating(i),
            _ => 1,
        })
        .collect();
    PatternOutcome::finish(graph, colors, "originals 2,3,...,2,3,4")
}

/// `FSSD_m(K_n ⋆ P_p)` with `n + 3` colors: copies alternate 2, 3 and each
/// original gets its own color from 4..=n+3.
pub fn pattern_fssd_kn_corona(n: u32, p: u32, m: u32) -> Result<PatternOutcome, ColoringError> {
    need(n >= 3 && p >= 2 && m >= 1, || {
        format!("need n >= 3, p >= 2, m >= 1; got n={n}, p={p}, m={m}")
    })?;
    let spec = FamilySpec::fssd(FamilySpec::corona(FamilySpec::Complete(n), FamilySpec::Path(p)), m);
    let graph = build(spec)?;
    let colors = corona_colors(&graph, |i| i + 3);
    PatternOutcome::finish(graph, colors, "originals 4..=n+3")
}

fn corona_colors(graph: &Graph, original: impl Fn(u32) -> u32) -> Vec<u32> {
    graph
        .labels()
        .iter()
        .map(|l| match *l {
            VertexLabel::Original(i) => original(i),
            VertexLabel::CopyVertex(_, g) => alternating(g),
            _ => 1,
        })
        .collect()
}

/// Digit pattern for the originals of `FSSD_m(C_n ⋆ P_p)`, `n >= 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePattern {
    pub case: &'static str,
    pub prefix: &'static str,
    pub block: &'static str,
    pub suffix: &'static str,
    pub repeats: usize,
}

impl CyclePattern {
    pub fn for_n(n: u32) -> Option<CyclePattern> {
        let whole = |case, digits| (case, digits, "", "");
        let (case, prefix, block, suffix) = match n {
            0..=3 => return None,
            4 => whole("case 1 (n=4)", "4567"),
            5 => whole("case 1 (n=5)", "45678"),
            7 => whole("case 3 (n=7)", "4564578"),
            8 => whole("case 4 (n=8)", "75467456"),
            11 => whole("case 7 (n=11)", "75465745648"),
            _ => match n % 6 {
                0 => ("case 2 (n = 0 mod 6)", "", "456457", ""),
                1 => ("case 3 (n = 1 mod 6)", "7546574567456", "457456", ""),
                2 => ("case 4 (n = 2 mod 6)", "75465745674564", "754654", ""),
                3 => ("case 5 (n = 3 mod 6)", "4657", "456457", "45675"),
                4 => ("case 6 (n = 4 mod 6)", "", "456457", "4567"),
                _ => ("case 7 (n = 5 mod 6)", "754657456", "457456", "75467546"),
            },
        };
        let fixed = prefix.len() + suffix.len();
        let n = n as usize;
        let repeats = if block.is_empty() {
            (fixed == n).then_some(0)?
        } else if n >= fixed && (n - fixed).is_multiple_of(block.len()) {
            (n - fixed) / block.len()
        } else {
            return None;
        };
        Some(CyclePattern {
            case,
            prefix,
            block,
            suffix,
            repeats,
        })
    }

    /// Colors of `u_1, ..., u_n`.
    pub fn colors(&self) -> Vec<u32> {
        let digits = |s: &str| s.bytes().map(|b| u32::from(b - b'0')).collect::<Vec<_>>();
        let mut out = digits(self.prefix);
        for _ in 0..self.repeats {
            out.extend(digits(self.block));
        }
        out.extend(digits(self.suffix));
        out
    }
}

/// `FSSD_m(C_n ⋆ P_p)`: copies alternate 2, 3; the originals follow the
/// case-selected digit pattern (`n = 3` reuses the complete-graph coloring).
pub fn pattern_fssd_cn_corona(n: u32, p: u32, m: u32) -> Result<PatternOutcome, ColoringError> {
    need(n >= 3 && p >= 2 && m >= 1, || {
        format!("need n >= 3, p >= 2, m >= 1; got n={n}, p={p}, m={m}")
    })?;
    let spec = FamilySpec::fssd(FamilySpec::corona(FamilySpec::Cycle(n), FamilySpec::Path(p)), m);
    let graph = build(spec)?;
    if n == 3 {
        let colors = corona_colors(&graph, |i| i + 3);
        return PatternOutcome::finish(graph, colors, "n=3: originals 4,5,6");
    }
    let pattern = CyclePattern::for_n(n).expect("every n >= 4 has a pattern of matching length");
    let digits = pattern.colors();
    assert_eq!(digits.len(), n as usize);
    let colors = corona_colors(&graph, |i| digits[i as usize - 1]);
    let rendered: String = digits.iter().map(|d| char::from_digit(*d, 10).unwrap_or('?')).collect();
    PatternOutcome::finish(graph, colors, format!("{}: {rendered}", pattern.case))
}

/// Upper bound on colors for `FSSD_m(C_n ⋆ P_p)` by `n`.
pub fn cn_corona_bound(n: u32) -> u32 {
    match n {
        3 => 6,
        5 | 7 | 11 => 8,
        _ => 7,
    }
}

/// `FSSD_m(S'(C_n))`: `v_i` copies the color of `u_i`; even `n` alternates
/// 2, 3 (3 colors); odd `n` alternates on `u_1..u_{n-1}` and uses 4 on `u_n`,
/// 5 on `v_n`.
pub fn pattern_fssd_splitting_cycle(n: u32, m: u32) -> Result<PatternOutcome, ColoringError> {
    need(n >= 3 && m >= 1, || format!("need n >= 3, m >= 1; got n={n}, m={m}"))?;
    let graph = build(FamilySpec::fssd(FamilySpec::splitting(FamilySpec::Cycle(n)), m))?;
    let odd = n % 2 == 1;
    let colors = graph
        .labels()
        .iter()
        .map(|l| match *l {
            VertexLabel::Original(i) if odd && i == n => 4,
            VertexLabel::SplitCopy(i) if odd && i == n => 5,
            VertexLabel::Original(i) | VertexLabel::SplitCopy(i) => alternating(i),
            _ => 1,
        })
        .collect();
    let note = if odd {
        "u_i, v_i alternate 2,3; u_n=4, v_n=5"
    } else {
        "u_i, v_i alternate 2,3"
    };
    PatternOutcome::finish(graph, colors, note)
}

/// `FSSD_m(S'(K_n))` with `n + 2` colors: every `v_i` gets 2, originals get
/// 3..=n+2.
pub fn pattern_fssd_splitting_complete(n: u32, m: u32) -> Result<PatternOutcome, ColoringError> {
    need(n >= 3 && m >= 1, || format!("need n >= 3, m >= 1; got n={n}, m={m}"))?;
    let graph = build(FamilySpec::fssd(FamilySpec::splitting(FamilySpec::Complete(n)), m))?;
    let colors = graph
        .labels()
        .iter()
        .map(|l| match *l {
            VertexLabel::Original(i) => i + 2,
            VertexLabel::SplitCopy(_) => 2,
            _ => 1,
        })
        .collect();
    PatternOutcome::finish(graph, colors, "v_i=2, originals 3..=n+2")
}
