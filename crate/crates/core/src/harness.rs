//! Claim checks over parameter grids.
//!
//! A pass is only ever granted on certificates computed here: a coloring that
//! passed [`verify`] for an upper side, an exhausted search for a lower side.
//! A fail carries a counterexample that can be re-checked from the report
//! alone (graph plus coloring, or graph plus the color count the search
//! ruled out). A solver timeout gives `skipped-budget`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{
    cn_corona_bound, pattern_fssd_bipartite, pattern_fssd_cn_corona, pattern_fssd_complete, pattern_fssd_cycle,
    pattern_fssd_kn_corona, pattern_fssd_splitting_complete, pattern_fssd_splitting_cycle, verify, PackingColoring,
    PatternOutcome, Violation,
};
use crate::distance::all_pairs_distances;
use crate::error::HarnessError;
use crate::families::{fssd, generate, random_connected, FamilySpec};
use crate::graph::Graph;
use crate::io::{ColoringDoc, GraphDoc};
use crate::label::VertexLabel;
use crate::solver::{decide_k, packing_chromatic_number, Decision, OrderStrategy, SolveOptions};
use crate::stats::stats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedBudget,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::SkippedBudget => "skipped-budget",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph: GraphDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    pub note: String,
}

impl Counterexample {
    fn new(g: &Graph, c: Option<&PackingColoring>, note: impl Into<String>) -> Self {
        let violations = c
            .map(|c| verify(g, c).expect("coloring matches graph").violations)
            .unwrap_or_default();
        Counterexample {
            graph: GraphDoc::from_graph(g),
            coloring: c.map(|c| ColoringDoc::new(g.name(), c)),
            violations,
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub instance: String,
    pub expected: String,
    pub observed: String,
    pub verdict: Verdict,
    /// What was actually established.
    #[serde(default)]
    pub certificates: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl ClaimResult {
    fn new(claim: &str, instance: impl Into<String>, expected: impl Into<String>) -> Self {
        ClaimResult {
            claim: claim.to_string(),
            instance: instance.into(),
            expected: expected.into(),
            observed: String::new(),
            verdict: Verdict::Pass,
            certificates: Vec::new(),
            counterexample: None,
        }
    }

    fn observed(mut self, s: impl Into<String>) -> Self {
        self.observed = s.into();
        self
    }

    fn pass(mut self) -> Self {
        self.verdict = Verdict::Pass;
        self
    }

    fn skipped(mut self) -> Self {
        self.verdict = Verdict::SkippedBudget;
        self
    }

    fn fail(mut self, cx: Counterexample) -> Self {
        self.verdict = Verdict::Fail;
        self.counterexample = Some(cx);
        self
    }

    fn cert(mut self, s: impl Into<String>) -> Self {
        self.certificates.push(s.into());
        self
    }
}

/// Exact value with its witness, or bounds after a timeout.
enum Chi {
    Exact(u32, PackingColoring),
    Bounds(u32, u32),
}

fn chi(g: &Graph, opts: &SolveOptions) -> Result<Chi, HarnessError> {
    let r = packing_chromatic_number(g, opts)?;
    assert!(
        verify(g, &r.witness)?.valid,
        "solver witness for {} failed verification",
        g.name()
    );
    Ok(match r.exact() {
        Some(k) => Chi::Exact(k, r.witness),
        None => {
            let (lo, hi) = r.bounds();
            Chi::Bounds(lo, hi)
        }
    })
}

fn chi_cert(g: &Graph, k: u32) -> String {
    if k > 1 {
        format!("{}: verified {k}-coloring; {} colors ruled out", g.name(), k - 1)
    } else {
        format!("{}: verified 1-coloring", g.name())
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), HarnessError> {
    if cond {
        Ok(())
    } else {
        Err(HarnessError::Precondition(msg()))
    }
}

fn build(spec: &FamilySpec) -> Result<Graph, HarnessError> {
    Ok(generate(spec)?.0)
}

/// `chi(g) == expected`, certified by the solver.
pub fn check_value(claim: &str, g: &Graph, expected: u32, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    let r = ClaimResult::new(claim, g.name(), format!("chi = {expected}"));
    Ok(match chi(g, opts)? {
        Chi::Bounds(lo, hi) => r.observed(format!("bounds [{lo}, {hi}]")).skipped(),
        Chi::Exact(k, w) => {
            let r = r.observed(format!("chi = {k}")).cert(chi_cert(g, k));
            if k == expected {
                r.pass()
            } else if k < expected {
                let note = format!("valid packing coloring with {k} colors");
                r.fail(Counterexample::new(g, Some(&w), note))
            } else {
                let note = format!("no packing coloring with {} colors (search exhausted)", k - 1);
                r.fail(Counterexample::new(g, None, note))
            }
        }
    })
}

/// `chi(g) >= bound`, certified by an exhausted search at `bound - 1`.
pub fn check_lower_bound(claim: &str, g: &Graph, bound: u32, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    let r = ClaimResult::new(claim, g.name(), format!("chi >= {bound}"));
    if bound <= 1 {
        return Ok(r.observed("trivial").pass());
    }
    let k = bound - 1;
    Ok(match decide_k(g, &all_pairs_distances(g), k, opts)? {
        Decision::Infeasible => r
            .observed(format!("{k} colors infeasible"))
            .cert(format!("{}: {k} colors ruled out", g.name()))
            .pass(),
        Decision::Feasible(w) => {
            let note = format!("valid packing coloring with {k} colors");
            r.observed(format!("{k} colors feasible"))
                .fail(Counterexample::new(g, Some(&w), note))
        }
        Decision::Timeout => r.observed(format!("k = {k} undecided")).skipped(),
    })
}

/// `chi(FSSD_m(K_2))` is 2 at `m = 1` and 3 afterwards.
pub fn k2_expected(m: u32) -> u32 {
    if m == 1 {
        2
    } else {
        3
    }
}

/// `chi(C_n)`: 3 when `n = 3` or `4 | n`, else 4.
pub fn cycle_expected(n: u32) -> u32 {
    if n == 3 || n.is_multiple_of(4) {
        3
    } else {
        4
    }
}

/// `omega(G) + 1 <= chi(FSSD_m(G)) <= chi(G) + 1` for connected `G` on at
/// least three vertices.
pub fn check_bounds(base: &FamilySpec, m: u32, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    check_bounds_graph(&build(base)?, m, opts)
}

pub fn check_bounds_graph(g: &Graph, m: u32, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    let st = stats(g);
    require(st.is_connected && g.n() >= 3, || {
        format!("{} must be connected with at least 3 vertices", g.name())
    })?;
    require(m >= 1, || "m must be at least 1".into())?;
    let f = fssd(g, m);
    let low = st.clique_number as u32 + 1;
    let r = ClaimResult::new(
        "prop-bounds",
        f.name(),
        format!("omega+1 = {low} <= chi <= chi(base)+1"),
    );
    let (Chi::Exact(cb, wb), Chi::Exact(cf, wf)) = (chi(g, opts)?, chi(&f, opts)?) else {
        return Ok(r.observed("solver timed out").skipped());
    };
    let r = r
        .observed(format!("chi(base) = {cb}, chi = {cf}"))
        .cert(chi_cert(g, cb))
        .cert(chi_cert(&f, cf))
        .cert(format!("{}: clique of size {}", g.name(), st.clique_number));
    Ok(if cf < low {
        let note = format!("valid packing coloring with {cf} < omega+1 colors");
        r.fail(Counterexample::new(&f, Some(&wf), note))
    } else if cf > cb + 1 {
        let lifted = crate::coloring::lift_to_fssd(g, &wb, m)?;
        let note = format!(
            "lifted coloring uses {} colors but the search ruled out {}",
            cb + 1,
            cf - 1
        );
        r.fail(Counterexample::new(&f, Some(&lifted), note))
    } else {
        r.pass()
    })
}

/// Above `m0 = floor(chi/delta) + 1` the value stops changing, and it is
/// non-decreasing in `m` before that.
pub fn check_stabilization(base: &FamilySpec, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    check_stabilization_graph(&build(base)?, opts)
}

pub fn check_stabilization_graph(g: &Graph, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    let st = stats(g);
    require(st.is_connected && g.n() >= 2, || {
        format!("{} must be connected with an edge", g.name())
    })?;
    let delta = st.min_degree as u32;
    let instance = g.name().to_string();
    let Chi::Exact(cb, _) = chi(g, opts)? else {
        let r = ClaimResult::new("prop-stabilization", instance, "stabilizes above chi/delta");
        return Ok(r.observed("solver timed out on the base").skipped());
    };
    let m0 = cb / delta + 1;
    let r = ClaimResult::new(
        "prop-stabilization",
        instance,
        format!("chi(FSSD_{m0}) = chi(FSSD_{}), non-decreasing below", m0 + 1),
    )
    .cert(chi_cert(g, cb));

    let mut values = Vec::new();
    let mut graphs = Vec::new();
    for m in 1..=m0 + 1 {
        let f = fssd(g, m);
        match chi(&f, opts)? {
            Chi::Exact(k, w) => {
                values.push(k);
                graphs.push((f, w));
            }
            Chi::Bounds(lo, hi) => {
                let seen = render_values(&values);
                return Ok(r.observed(format!("{seen} m={m}:[{lo},{hi}]")).skipped());
            }
        }
    }
    let mut r = r.observed(format!("m0 = {m0}; {}", render_values(&values)));
    for ((f, _), &k) in graphs.iter().zip(&values) {
        r = r.cert(chi_cert(f, k));
    }
    if let Some(i) = (0..values.len() - 1).find(|&i| values[i] > values[i + 1]) {
        let (f, w) = &graphs[i + 1];
        let note = format!(
            "valid packing coloring with {} colors, below chi at m = {}",
            values[i + 1],
            i + 1
        );
        return Ok(r.fail(Counterexample::new(f, Some(w), note)));
    }
    let (a, b) = (values[m0 as usize - 1], values[m0 as usize]);
    if a != b {
        let (f, _) = &graphs[m0 as usize];
        let note = format!("no packing coloring with {} colors (search exhausted)", b - 1);
        return Ok(r.fail(Counterexample::new(f, None, note)));
    }
    Ok(r.pass())
}

fn render_values(values: &[u32]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| format!("m={}:{v}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Closed-form values certified by an explicit coloring from above and an
/// exhausted search from below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactClaim {
    /// `n + 1`
    FssdComplete { n: u32, m: u32 },
    /// 3 for even `n`, 4 for odd.
    FssdCycle { n: u32, m: u32 },
    /// 3 for connected bipartite bases on at least three vertices.
    FssdBipartite { base: FamilySpec, m: u32 },
    /// `n + 3`
    KnCorona { n: u32, p: u32, m: u32 },
    /// 3 for even `n`, 5 for odd.
    SplitCycle { n: u32, m: u32 },
    /// `n + 2`
    SplitComplete { n: u32, m: u32 },
}

impl ExactClaim {
    pub fn id(&self) -> &'static str {
        match self {
            ExactClaim::FssdComplete { .. } => "fssd-complete",
            ExactClaim::FssdCycle { .. } => "fssd-cycle",
            ExactClaim::FssdBipartite { .. } => "fssd-bipartite",
            ExactClaim::KnCorona { .. } => "kn-corona",
            ExactClaim::SplitCycle { .. } => "split-cycle",
            ExactClaim::SplitComplete { .. } => "split-complete",
        }
    }

    pub fn expected(&self) -> u32 {
        match *self {
            ExactClaim::FssdComplete { n, .. } => n + 1,
            ExactClaim::FssdCycle { n, .. } => 3 + n % 2,
            ExactClaim::FssdBipartite { .. } => 3,
            ExactClaim::KnCorona { n, .. } => n + 3,
            ExactClaim::SplitCycle { n, .. } => 3 + 2 * (n % 2),
            ExactClaim::SplitComplete { n, .. } => n + 2,
        }
    }

    pub fn pattern(&self) -> Result<PatternOutcome, HarnessError> {
        Ok(match *self {
            ExactClaim::FssdComplete { n, m } => {
                require(n >= 1, || "n must be at least 1".into())?;
                pattern_fssd_complete(n, m)?
            }
            ExactClaim::FssdCycle { n, m } => pattern_fssd_cycle(n, m)?,
            ExactClaim::FssdBipartite { ref base, m } => {
                let g = build(base)?;
                let st = stats(&g);
                require(st.is_connected && st.is_bipartite() && g.n() >= 3, || {
                    format!("{base} must be connected, bipartite, with at least 3 vertices")
                })?;
                let mut out = pattern_fssd_bipartite(&g, m)?;
                out.graph = out.graph.with_name(FamilySpec::fssd(base.clone(), m).to_string());
                out
            }
            ExactClaim::KnCorona { n, p, m } => pattern_fssd_kn_corona(n, p, m)?,
            ExactClaim::SplitCycle { n, m } => pattern_fssd_splitting_cycle(n, m)?,
            ExactClaim::SplitComplete { n, m } => pattern_fssd_splitting_complete(n, m)?,
        })
    }
}

pub fn check_exact_value(claim: &ExactClaim, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    let out = claim.pattern()?;
    let g = &out.graph;
    let expected = claim.expected();
    let r = ClaimResult::new(claim.id(), g.name(), format!("chi = {expected}"));
    let used = out.colors_used();
    if !out.is_valid() {
        let note = format!("pattern ({}) is not a packing coloring", out.note);
        return Ok(r
            .observed(format!("pattern invalid ({} violations)", out.report.violations.len()))
            .fail(Counterexample::new(g, Some(&out.coloring), note)));
    }
    if used > expected {
        let note = format!("pattern ({}) uses {used} colors", out.note);
        return Ok(r
            .observed(format!("pattern uses {used} colors"))
            .fail(Counterexample::new(g, Some(&out.coloring), note)));
    }
    let r = r.cert(format!("{}: pattern {used}-coloring verified", g.name()));
    let k = expected - 1;
    Ok(match decide_k(g, &all_pairs_distances(g), k, opts)? {
        Decision::Infeasible => r
            .observed(format!("chi = {expected}"))
            .cert(format!("{}: {k} colors ruled out", g.name()))
            .pass(),
        Decision::Feasible(w) => {
            let note = format!("valid packing coloring with {k} colors");
            r.observed(format!("{k} colors feasible"))
                .fail(Counterexample::new(g, Some(&w), note))
        }
        Decision::Timeout => r
            .observed(format!("upper side only: pattern uses {used}; k = {k} undecided"))
            .skipped(),
    })
}

/// Verifies the digit-pattern coloring of `FSSD_m(C_n * P_p)` against the
/// bound table. No solver involved.
pub fn check_upper_bound_cn_corona(n: u32, p: u32, m: u32) -> Result<ClaimResult, HarnessError> {
    let out = pattern_fssd_cn_corona(n, p, m)?;
    let bound = cn_corona_bound(n);
    let g = &out.graph;
    let used = out.colors_used();
    let r = ClaimResult::new("cn-corona-upper", g.name(), format!("chi <= {bound}"));
    if !out.is_valid() {
        let v = &out.report.violations[0];
        let obs = format!(
            "pattern invalid: {} violations, e.g. {} and {} both {} at distance {}",
            out.report.violations.len(),
            g.label(v.u),
            g.label(v.v),
            v.color,
            v.distance
        );
        let note = format!("pattern ({}) is not a packing coloring", out.note);
        return Ok(r.observed(obs).fail(Counterexample::new(g, Some(&out.coloring), note)));
    }
    let r = r.observed(format!("pattern uses {used} colors"));
    Ok(if used <= bound {
        r.cert(format!("{}: pattern {used}-coloring verified ({})", g.name(), out.note))
            .pass()
    } else {
        let note = format!("pattern ({}) exceeds the bound", out.note);
        r.fail(Counterexample::new(g, Some(&out.coloring), note))
    })
}

/// On `FSSD_m(K_n * P_p)`, solver witnesses for each feasible `k <= n + 3`
/// (one per vertex order) never put color 1 on an original or a copy vertex.
/// A check on produced witnesses only, not an exhaustive proof.
pub fn check_lemma_witnesses(n: u32, p: u32, m: u32, opts: &SolveOptions) -> Result<ClaimResult, HarnessError> {
    require(n >= 3 && p >= 2 && m >= 1, || {
        format!("need n >= 3, p >= 2, m >= 1; got n={n}, p={p}, m={m}")
    })?;
    let g = build(&FamilySpec::fssd(
        FamilySpec::corona(FamilySpec::Complete(n), FamilySpec::Path(p)),
        m,
    ))?;
    let dist = all_pairs_distances(&g);
    let r = ClaimResult::new("lemma-color1", g.name(), "no witness colors u_i or v_{i,g} with 1");
    let mut notes = Vec::new();
    let mut certs = Vec::new();
    let mut witnesses = 0;
    let mut timed_out = false;
    for k in 1..=n + 3 {
        let mut feasible = false;
        for order in [
            OrderStrategy::DegreeDesc,
            OrderStrategy::EccentricityAsc,
            OrderStrategy::Input,
        ] {
            let o = SolveOptions { order, ..opts.clone() };
            match decide_k(&g, &dist, k, &o)? {
                Decision::Infeasible => {
                    notes.push(format!("k={k}: infeasible"));
                    certs.push(format!("{}: {k} colors ruled out", g.name()));
                    break;
                }
                Decision::Timeout => {
                    notes.push(format!("k={k}: undecided"));
                    timed_out = true;
                    break;
                }
                Decision::Feasible(w) => {
                    feasible = true;
                    witnesses += 1;
                    let bad: Vec<String> = g
                        .vertices()
                        .filter(|&v| {
                            w.color(v) == 1
                                && matches!(g.label(v), VertexLabel::Original(_) | VertexLabel::CopyVertex(..))
                        })
                        .map(|v| g.label(v).to_string())
                        .collect();
                    if !bad.is_empty() {
                        let note = format!("{k}-coloring colors {} with 1", bad.join(", "));
                        return Ok(r
                            .observed(format!("k={k}: witness colors {} with 1", bad[0]))
                            .fail(Counterexample::new(&g, Some(&w), note)));
                    }
                }
            }
        }
        if feasible {
            notes.push(format!("k={k}: witnesses ok"));
        }
    }
    let mut r = r.observed(format!("{}; {witnesses} witnesses checked", notes.join(", ")));
    r.certificates = certs;
    Ok(if timed_out {
        r.skipped()
    } else if witnesses == 0 {
        let note = format!("no packing coloring with {} colors (search exhausted)", n + 3);
        r.fail(Counterexample::new(&g, None, note))
    } else {
        r.pass()
    })
}

/// `chi(H) <= chi(G)` for `samples` random induced subgraphs `H`.
pub fn check_hereditary(
    g: &Graph,
    samples: usize,
    seed: u64,
    opts: &SolveOptions,
) -> Result<ClaimResult, HarnessError> {
    let instance = format!("{} (subgraph seed {seed})", g.name());
    let r = ClaimResult::new("hereditary", instance, "chi(H) <= chi(G)");
    let Chi::Exact(cg, _) = chi(g, opts)? else {
        return Ok(r.observed("solver timed out").skipped());
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = Vec::new();
    let mut r = r.cert(chi_cert(g, cg));
    for _ in 0..samples {
        let keep: Vec<usize> = loop {
            let keep: Vec<usize> = g.vertices().filter(|_| rng.gen_bool(0.6)).collect();
            if !keep.is_empty() {
                break keep;
            }
        };
        let (h, _) = g.induced_subgraph(&keep)?;
        let h = h.with_name(format!("{}[{keep:?}]", g.name()));
        match chi(&h, opts)? {
            Chi::Exact(ch, wh) => {
                seen.push(ch);
                if ch > cg {
                    let note = format!("induced subgraph needs {ch} colors but the whole graph needs {cg}");
                    return Ok(r
                        .observed(format!("chi(G) = {cg}, chi(H) = {ch}"))
                        .fail(Counterexample::new(&h, Some(&wh), note)));
                }
                r = r.cert(chi_cert(&h, ch));
            }
            Chi::Bounds(..) => return Ok(r.observed("solver timed out on a subgraph").skipped()),
        }
    }
    Ok(r.observed(format!("chi(G) = {cg}, subgraphs {seen:?}")).pass())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub m: u32,
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub base: String,
    pub vertices: usize,
    pub values: Vec<ScanEntry>,
    /// Each `m` with `chi(FSSD_m) < chi(FSSD_{m+1})`, both exact.
    pub increases: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub m_max: u32,
    pub rows: Vec<ScanRow>,
}

/// Largest base the scan accepts.
pub const SCAN_MAX_VERTICES: usize = 8;

/// Tabulates `chi(FSSD_m(G))` for `m = 1..=m_max` and flags strict
/// increases. Timeouts are recorded as bounds and the scan moves on.
pub fn scan_fssd_gap(bases: &[Graph], m_max: u32, opts: &SolveOptions) -> Result<ScanReport, HarnessError> {
    require(m_max >= 1, || "m_max must be at least 1".into())?;
    if let Some(g) = bases.iter().find(|g| g.n() > SCAN_MAX_VERTICES) {
        return Err(HarnessError::Precondition(format!(
            "{} has {} vertices; the scan takes at most {SCAN_MAX_VERTICES}",
            g.name(),
            g.n()
        )));
    }
    let mut rows = Vec::new();
    for g in bases {
        let mut values = Vec::new();
        for m in 1..=m_max {
            let r = packing_chromatic_number(&fssd(g, m), opts)?;
            let (lower, upper) = r.bounds();
            values.push(ScanEntry {
                m,
                lower,
                upper,
                exact: r.exact().is_some(),
            });
        }
        let increases = values
            .windows(2)
            .filter(|w| w[0].exact && w[1].exact && w[0].upper < w[1].upper)
            .map(|w| w[0].m)
            .collect();
        rows.push(ScanRow {
            base: g.name().to_string(),
            vertices: g.n(),
            values,
            increases,
        });
    }
    Ok(ScanReport { m_max, rows })
}

impl ScanRow {
    pub fn to_claim(&self) -> ClaimResult {
        let values: Vec<String> = self
            .values
            .iter()
            .map(|e| {
                if e.exact {
                    e.upper.to_string()
                } else {
                    format!("[{},{}]", e.lower, e.upper)
                }
            })
            .collect();
        let inc: Vec<String> = self.increases.iter().map(|m| format!("{m}->{}", m + 1)).collect();
        let observed = format!(
            "chi by m: {}; increases: {}",
            values.join(","),
            if inc.is_empty() {
                "none".to_string()
            } else {
                inc.join(",")
            }
        );
        let r = ClaimResult::new("scan-gap", self.base.clone(), "tabulation only").observed(observed);
        if self.values.iter().all(|e| e.exact) {
            r.pass()
        } else {
            r.skipped()
        }
    }
}

pub const CLAIM_IDS: &[&str] = &[
    "cycle-values",
    "hereditary",
    "prop-bounds",
    "prop-stabilization",
    "k2-increase",
    "petersen",
    "fssd-complete",
    "fssd-cycle",
    "fssd-bipartite",
    "kn-corona",
    "split-cycle",
    "split-complete",
    "cn-corona-upper",
    "lemma-color1",
    "scan-gap",
];

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Parameter ranges for [`run_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    /// Upper end of `n` for pattern-only claims.
    pub max_n: u32,
    /// Upper end of `n` for claims that need the solver on corona-sized graphs.
    pub max_exact_n: u32,
    pub max_p: u32,
    pub max_m: u32,
    /// Seed for every random sample; instance names carry the derived seeds.
    pub seed: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            max_n: 23,
            max_exact_n: 6,
            max_p: 3,
            max_m: 3,
            seed: DEFAULT_SEED,
        }
    }
}

impl Grid {
    /// `max_n` for pattern claims; exact claims are capped at 6 as well.
    pub fn with_max_n(mut self, n: u32) -> Self {
        self.max_n = n;
        self.max_exact_n = n.min(6);
        self
    }

    pub fn with_max_m(mut self, m: u32) -> Self {
        self.max_m = m;
        self
    }

    /// Connected random bases: `count` graphs on 3..=`max_vertices` vertices.
    pub fn random_bases(&self, count: u64, max_vertices: usize, offset: u64) -> Vec<Graph> {
        (0..count)
            .map(|i| {
                let n = 3 + (i as usize % (max_vertices - 2));
                random_connected(n, 0.4, self.seed.wrapping_add(offset + 1000 * i))
            })
            .collect()
    }
}

fn spec(s: &str) -> FamilySpec {
    s.parse().expect("built-in family spec")
}

/// Runs `suite` (`"all"` or one id from [`CLAIM_IDS`]), reporting each result
/// to `progress` as soon as it is known.
pub fn run_suite(
    suite: &str,
    grid: &Grid,
    opts: &SolveOptions,
    progress: &mut dyn FnMut(&ClaimResult),
) -> Result<Vec<ClaimResult>, HarnessError> {
    let ids: Vec<&str> = if suite == "all" {
        CLAIM_IDS.to_vec()
    } else if let Some(id) = CLAIM_IDS.iter().find(|&&id| id == suite) {
        vec![id]
    } else {
        return Err(HarnessError::UnknownClaim(suite.to_string()));
    };
    let mut out = Vec::new();
    let mut emit = |r: ClaimResult| {
        progress(&r);
        out.push(r);
    };
    for id in ids {
        run_claim(id, grid, opts, &mut emit)?;
    }
    Ok(out)
}

fn run_claim(
    id: &str,
    grid: &Grid,
    opts: &SolveOptions,
    emit: &mut dyn FnMut(ClaimResult),
) -> Result<(), HarnessError> {
    let ms = 1..=grid.max_m;
    let exact_n = 3..=grid.max_exact_n;
    match id {
        "cycle-values" => {
            for n in 3..=grid.max_n.min(12) {
                emit(check_value(
                    id,
                    &build(&FamilySpec::Cycle(n))?,
                    cycle_expected(n),
                    opts,
                )?);
            }
        }
        "hereditary" => {
            let mut graphs = grid.random_bases(5, 8, 1);
            graphs.push(build(&spec("cycle:9"))?);
            graphs.push(build(&spec("fssd(complete:3,m=1)"))?);
            for (i, g) in graphs.iter().enumerate() {
                emit(check_hereditary(g, 4, grid.seed.wrapping_add(i as u64), opts)?);
            }
        }
        "prop-bounds" => {
            let mut bases = Vec::new();
            for s in [
                "complete:3",
                "complete:4",
                "complete:5",
                "path:3",
                "path:4",
                "path:5",
                "star:3",
            ] {
                bases.push(build(&spec(s))?);
            }
            for n in 3..=8 {
                bases.push(build(&FamilySpec::Cycle(n))?);
            }
            bases.extend(grid.random_bases(20, 8, 2));
            for m in 1..=grid.max_m.min(2) {
                for g in &bases {
                    emit(check_bounds_graph(g, m, opts)?);
                }
            }
            emit(check_bounds(&FamilySpec::Petersen, 1, opts)?);
        }
        "prop-stabilization" => {
            for s in [
                "complete:2",
                "complete:3",
                "cycle:4",
                "path:4",
                "cycle:5",
                "star:3",
                "complete:4",
            ] {
                emit(check_stabilization(&spec(s), opts)?);
            }
        }
        "k2-increase" => {
            for m in 1..=grid.max_m.max(4) {
                let g = build(&FamilySpec::fssd(FamilySpec::Complete(2), m))?;
                emit(check_value(id, &g, k2_expected(m), opts)?);
            }
        }
        "petersen" => {
            emit(check_value(id, &build(&spec("fssd(petersen,m=1)"))?, 5, opts)?);
            for m in 2..=grid.max_m.max(2) {
                emit(check_lower_bound(
                    id,
                    &build(&FamilySpec::fssd(FamilySpec::Petersen, m))?,
                    6,
                    opts,
                )?);
            }
        }
        "fssd-complete" => {
            for n in exact_n.clone() {
                for m in ms.clone() {
                    emit(check_exact_value(&ExactClaim::FssdComplete { n, m }, opts)?);
                }
            }
        }
        "fssd-cycle" => {
            for n in 3..=grid.max_n.min(10) {
                for m in ms.clone() {
                    emit(check_exact_value(&ExactClaim::FssdCycle { n, m }, opts)?);
                }
            }
        }
        "fssd-bipartite" => {
            let bases = [
                "path:3",
                "path:4",
                "path:5",
                "path:6",
                "cycle:4",
                "cycle:6",
                "star:3",
                "bipartite:2,3",
                "bipartite:3,3",
            ];
            for s in bases {
                for m in ms.clone() {
                    emit(check_exact_value(
                        &ExactClaim::FssdBipartite { base: spec(s), m },
                        opts,
                    )?);
                }
            }
        }
        "kn-corona" => {
            for n in exact_n.clone() {
                for p in 2..=grid.max_p {
                    for m in ms.clone() {
                        emit(check_exact_value(&ExactClaim::KnCorona { n, p, m }, opts)?);
                    }
                }
            }
        }
        "split-cycle" => {
            for n in 3..=grid.max_n.min(8) {
                for m in ms.clone() {
                    emit(check_exact_value(&ExactClaim::SplitCycle { n, m }, opts)?);
                }
            }
        }
        "split-complete" => {
            for n in exact_n.clone() {
                for m in ms.clone() {
                    emit(check_exact_value(&ExactClaim::SplitComplete { n, m }, opts)?);
                }
            }
        }
        "cn-corona-upper" => {
            for n in 3..=grid.max_n {
                for p in 2..=grid.max_p {
                    for m in ms.clone() {
                        emit(check_upper_bound_cn_corona(n, p, m)?);
                    }
                }
            }
        }
        "lemma-color1" => {
            for (n, p, m) in [(3, 2, 1), (3, 2, 2), (3, 3, 1), (4, 2, 1)] {
                if n <= grid.max_exact_n && p <= grid.max_p && m <= grid.max_m {
                    emit(check_lemma_witnesses(n, p, m, opts)?);
                }
            }
        }
        "scan-gap" => {
            let mut bases = Vec::new();
            for s in [
                "complete:2",
                "complete:3",
                "path:3",
                "path:4",
                "cycle:4",
                "cycle:5",
                "star:3",
            ] {
                bases.push(build(&spec(s))?);
            }
            bases.extend(grid.random_bases(10, 7, 3));
            for row in scan_fssd_gap(&bases, grid.max_m, opts)?.rows {
                emit(row.to_claim());
            }
        }
        other => return Err(HarnessError::UnknownClaim(other.to_string())),
    }
    Ok(())
}

/// Verdict counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn summarize(results: &[ClaimResult]) -> Summary {
    let mut s = Summary::default();
    for r in results {
        match r.verdict {
            Verdict::Pass => s.pass += 1,
            Verdict::Fail => s.fail += 1,
            Verdict::SkippedBudget => s.skipped += 1,
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unlimited() -> SolveOptions {
        SolveOptions::default()
    }

    #[test]
    fn bounds_examples() {
        for (s, m) in [("complete:4", 2), ("cycle:5", 1), ("path:3", 1)] {
            let r = check_bounds(&spec(s), m, &unlimited()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
        let r = check_bounds(&spec("complete:4"), 2, &unlimited()).unwrap();
        assert_eq!(r.observed, "chi(base) = 4, chi = 5");
        assert!(check_bounds(&spec("path:2"), 1, &unlimited()).is_err());
    }

    #[test]
    fn stabilization_examples() {
        let r = check_stabilization(&spec("complete:2"), &unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.observed, "m0 = 3; m=1:2 m=2:3 m=3:3 m=4:3");
        let r = check_stabilization(&spec("complete:3"), &unlimited()).unwrap();
        assert_eq!(r.observed, "m0 = 2; m=1:4 m=2:4 m=3:4");
        assert_eq!(
            check_stabilization(&spec("cycle:4"), &unlimited()).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn exact_examples() {
        for c in [
            ExactClaim::FssdComplete { n: 5, m: 1 },
            ExactClaim::KnCorona { n: 3, p: 2, m: 1 },
            ExactClaim::SplitCycle { n: 5, m: 1 },
            ExactClaim::FssdBipartite {
                base: spec("path:4"),
                m: 2,
            },
        ] {
            let r = check_exact_value(&c, &unlimited()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
            assert_eq!(r.certificates.len(), 2);
        }
    }

    #[test]
    fn wrong_expectation_fails_with_witness() {
        let g = build(&spec("cycle:5")).unwrap();
        let r = check_value("t", &g, 5, &unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let cx = r.counterexample.unwrap();
        let c = cx.coloring.unwrap().to_coloring().unwrap();
        let g2 = cx.graph.to_graph().unwrap();
        assert!(verify(&g2, &c).unwrap().valid);
        assert_eq!(c.k(), 4);
        let r = check_value("t", &g, 3, &unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.counterexample.unwrap().coloring.is_none());
    }

    #[test]
    fn timeouts_become_skips() {
        let opts = SolveOptions {
            time_budget: Some(std::time::Duration::from_nanos(1)),
            ..Default::default()
        };
        let g = build(&spec("fssd(corona(complete:5,path:2),m=1)")).unwrap();
        std::thread::sleep(std::time::Duration::from_millis(1));
        let r = check_lower_bound("t", &g, 8, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::SkippedBudget, "{r:?}");
    }

    #[test]
    fn cn_corona_upper_examples() {
        for (n, p, m) in [(9, 2, 2), (5, 2, 1), (12, 2, 1)] {
            let r = check_upper_bound_cn_corona(n, p, m).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        }
    }

    #[test]
    fn lemma_examples() {
        let r = check_lemma_witnesses(3, 2, 1, &unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!(r.observed.contains("k=5: infeasible"));
        assert!(r.observed.contains("k=6: witnesses ok"));
    }

    #[test]
    fn scan_flags_k2_increase() {
        let bases = vec![build(&spec("complete:2")).unwrap(), build(&spec("cycle:5")).unwrap()];
        let rep = scan_fssd_gap(&bases, 3, &unlimited()).unwrap();
        assert_eq!(rep.rows[0].increases, vec![1]);
        let k2: Vec<u32> = rep.rows[0].values.iter().map(|e| e.upper).collect();
        assert_eq!(k2, vec![2, 3, 3]);
        assert!(rep.rows[1].increases.is_empty());
        assert!(rep.rows[1].values.iter().all(|e| e.upper == 4 && e.exact));
        assert!(scan_fssd_gap(&[build(&spec("cycle:9")).unwrap()], 2, &unlimited()).is_err());
    }

    #[test]
    fn suite_ids() {
        let mut n = 0;
        let r = run_suite("k2-increase", &Grid::default(), &unlimited(), &mut |_| n += 1).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(n, 4);
        assert!(matches!(
            run_suite("nope", &Grid::default(), &unlimited(), &mut |_| {}),
            Err(HarnessError::UnknownClaim(_))
        ));
    }

    #[test]
    fn report_serializes_verdicts_in_kebab_case() {
        let r = check_upper_bound_cn_corona(4, 2, 1).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["verdict"], "pass");
        assert_eq!(serde_json::to_value(Verdict::SkippedBudget).unwrap(), "skipped-budget");
    }
}
