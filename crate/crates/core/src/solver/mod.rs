//! Exact packing chromatic number.
//!
//! `packing_chromatic_number` probes `k = lower, lower + 1, ...` with the
//! k-decision search until one succeeds, so an exact answer always comes with
//! a witness at `chi` and an exhausted search (or the trivial bound) at
//! `chi - 1`. `brute_force_chi` is an independent oracle for small graphs.

mod brute;
mod search;

pub use brute::{brute_force_chi, BRUTE_FORCE_LIMIT};

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{greedy_with, verify_with, PackingColoring};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::SolveError;
use crate::graph::{Graph, VertexId};

use search::{Limits, Outcome, Search, Tables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderStrategy {
    /// Highest degree first.
    #[default]
    DegreeDesc,
    /// Most central first.
    EccentricityAsc,
    /// Vertex id order.
    Input,
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Wall-clock budget; `None` means unlimited.
    pub time_budget: Option<Duration>,
    pub order: OrderStrategy,
    pub parallel: bool,
    /// Never probe more than this many colors.
    pub k_upper_cap: Option<u32>,
}

impl SolveOptions {
    pub fn with_budget_secs(secs: f64) -> Self {
        SolveOptions {
            time_budget: (secs > 0.0).then(|| Duration::from_secs_f64(secs)),
            ..Default::default()
        }
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.time_budget.map(|b| start + b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Feasible(PackingColoring),
    /// The search space was exhausted.
    Infeasible,
    /// The budget ran out first; nothing is known.
    Timeout,
}

impl Decision {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Decision::Feasible(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ChiValue {
    Exact { chi: u32 },
    TimeoutWithBounds { lower: u32, upper: u32 },
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub value: ChiValue,
    /// Achieves `chi`, or the upper bound when inexact.
    pub witness: PackingColoring,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn exact(&self) -> Option<u32> {
        match self.value {
            ChiValue::Exact { chi } => Some(chi),
            ChiValue::TimeoutWithBounds { .. } => None,
        }
    }

    pub fn bounds(&self) -> (u32, u32) {
        match self.value {
            ChiValue::Exact { chi } => (chi, chi),
            ChiValue::TimeoutWithBounds { lower, upper } => (lower, upper),
        }
    }
}

/// Static vertex order used to break ties in the search and to seed greedy.
pub fn vertex_order(g: &Graph, d: &DistanceMatrix, strategy: OrderStrategy) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    match strategy {
        OrderStrategy::DegreeDesc => order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v)),
        OrderStrategy::EccentricityAsc => order.sort_by_key(|&v| (d.eccentricity(v), v)),
        OrderStrategy::Input => {}
    }
    order
}

/// Sound lower bound for a connected graph: 1 for `K_1`, 2 for a star, else
/// 3 (any other connected graph contains a triangle or a `P_4`).
pub fn trivial_lower_bound(g: &Graph) -> u32 {
    match g.n() {
        0 => 0,
        1 => 1,
        n => {
            let is_star = g.edge_count() == n - 1 && g.vertices().any(|v| g.degree(v) == n - 1);
            if is_star {
                2
            } else {
                3
            }
        }
    }
}

struct Component {
    graph: Graph,
    dist: DistanceMatrix,
    ids: Vec<VertexId>,
}

fn split_components(g: &Graph) -> Vec<Component> {
    g.components()
        .into_iter()
        .map(|ids| {
            let (graph, ids) = g.induced_subgraph(&ids).expect("components are non-empty");
            let dist = all_pairs_distances(&graph);
            Component { graph, dist, ids }
        })
        .collect()
}

/// Is there a packing coloring of `g` using colors in `1..=k`?
pub fn decide_k(g: &Graph, dist: &DistanceMatrix, k: u32, opts: &SolveOptions) -> Result<Decision, SolveError> {
    let start = Instant::now();
    let (decision, _) = decide_until(g, dist, k, opts, opts.deadline(start))?;
    Ok(decision)
}

/// Like [`decide_k`], also returning the number of search nodes.
pub fn decide_k_counted(
    g: &Graph,
    dist: &DistanceMatrix,
    k: u32,
    opts: &SolveOptions,
) -> Result<(Decision, u64), SolveError> {
    let start = Instant::now();
    decide_until(g, dist, k, opts, opts.deadline(start))
}

fn decide_until(
    g: &Graph,
    dist: &DistanceMatrix,
    k: u32,
    opts: &SolveOptions,
    deadline: Option<Instant>,
) -> Result<(Decision, u64), SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroBudget);
    }
    if dist.is_connected() {
        return decide_connected(g, dist, k, opts, deadline);
    }
    let mut colors = vec![0; g.n()];
    let mut nodes = 0;
    for comp in split_components(g) {
        let (decision, used) = decide_connected(&comp.graph, &comp.dist, k, opts, deadline)?;
        nodes += used;
        match decision {
            Decision::Feasible(c) => {
                for (local, &id) in comp.ids.iter().enumerate() {
                    colors[id] = c.color(local);
                }
            }
            other => return Ok((other, nodes)),
        }
    }
    let witness = PackingColoring::new(colors).expect("components cover every vertex");
    Ok((Decision::Feasible(witness), nodes))
}

fn decide_connected(
    g: &Graph,
    dist: &DistanceMatrix,
    k: u32,
    opts: &SolveOptions,
    deadline: Option<Instant>,
) -> Result<(Decision, u64), SolveError> {
    let n = g.n();
    if n == 0 {
        return Ok((Decision::Feasible(PackingColoring::new(vec![]).expect("empty")), 0));
    }
    let diameter = dist.max_finite();
    let small = k.min(diameter.saturating_sub(1));
    if small > 64 {
        return Err(SolveError::TooManyColors(small));
    }
    let tables = Tables::new(dist, small);
    let order = vertex_order(g, dist, opts.order);
    let mut rank = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i as u32;
    }

    let mut root = Search::new(dist, &tables, &rank, k);
    let (outcome, colors, nodes) = if opts.parallel {
        run_parallel(&root, deadline)
    } else {
        let limits = Limits { deadline, stop: None };
        let outcome = root.run(&limits);
        (outcome, root.colors().to_vec(), root.nodes)
    };

    let decision = match outcome {
        Outcome::Found => {
            let witness = PackingColoring::new(colors).expect("search colors every vertex");
            debug_assert!(verify_with(dist, &witness).expect("total").valid);
            Decision::Feasible(witness)
        }
        Outcome::Exhausted => Decision::Infeasible,
        Outcome::Stopped => Decision::Timeout,
    };
    Ok((decision, nodes))
}

/// One thread per color choice of the first vertex; the first witness found
/// cancels the rest.
fn run_parallel(root: &Search, deadline: Option<Instant>) -> (Outcome, Vec<u32>, u64) {
    let Some(v) = root.first_vertex() else {
        return (Outcome::Found, root.colors().to_vec(), 1);
    };
    let stop = AtomicBool::new(false);
    let found: Mutex<Option<Vec<u32>>> = Mutex::new(None);
    let mut total_nodes = 1;
    let mut any_timeout = false;
    std::thread::scope(|scope| {
        let handles: Vec<_> = root
            .choices(v)
            .into_iter()
            .map(|c| {
                let mut branch = root.clone();
                let (stop, found) = (&stop, &found);
                scope.spawn(move || {
                    if !branch.assign(v, c) {
                        return (Outcome::Exhausted, branch.nodes);
                    }
                    let limits = Limits {
                        deadline,
                        stop: Some(stop),
                    };
                    let outcome = branch.run(&limits);
                    if outcome == Outcome::Found {
                        stop.store(true, Ordering::Relaxed);
                        found
                            .lock()
                            .expect("lock")
                            .get_or_insert_with(|| branch.colors().to_vec());
                    }
                    (outcome, branch.nodes)
                })
            })
            .collect();
        for h in handles {
            let (outcome, nodes) = h.join().expect("search thread panicked");
            total_nodes += nodes;
            any_timeout |= outcome == Outcome::Stopped;
        }
    });
    match found.into_inner().expect("lock") {
        Some(colors) => (Outcome::Found, colors, total_nodes),
        None if any_timeout => (Outcome::Stopped, Vec::new(), total_nodes),
        None => (Outcome::Exhausted, Vec::new(), total_nodes),
    }
}

/// Smallest `k` admitting a packing coloring, solved per component.
pub fn packing_chromatic_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let deadline = opts.deadline(start);
    let mut colors = vec![0; g.n()];
    let (mut lower, mut upper, mut exact, mut nodes) = (0, 0, true, 0);

    for comp in split_components(g) {
        let r = solve_connected(&comp, opts, deadline)?;
        nodes += r.nodes;
        lower = lower.max(r.lower);
        upper = upper.max(r.upper);
        exact &= r.exact;
        for (local, &id) in comp.ids.iter().enumerate() {
            colors[id] = r.witness.color(local);
        }
    }

    let value = if exact {
        ChiValue::Exact { chi: upper }
    } else {
        ChiValue::TimeoutWithBounds { lower, upper }
    };
    Ok(SolveResult {
        value,
        witness: PackingColoring::new(colors).expect("every vertex colored"),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

struct ComponentResult {
    lower: u32,
    upper: u32,
    exact: bool,
    witness: PackingColoring,
    nodes: u64,
}

fn solve_connected(
    comp: &Component,
    opts: &SolveOptions,
    deadline: Option<Instant>,
) -> Result<ComponentResult, SolveError> {
    let order = vertex_order(&comp.graph, &comp.dist, opts.order);
    let greedy = greedy_with(&comp.dist, &order);
    let upper = greedy.k();
    let lower = trivial_lower_bound(&comp.graph).min(upper);
    let mut nodes = 0;

    for k in lower..upper {
        if opts.k_upper_cap.is_some_and(|cap| k > cap) {
            return Ok(ComponentResult {
                lower: k,
                upper,
                exact: false,
                witness: greedy,
                nodes,
            });
        }
        let expired = deadline.is_some_and(|d| Instant::now() >= d);
        let (decision, used) = if expired {
            (Decision::Timeout, 0)
        } else {
            decide_until(&comp.graph, &comp.dist, k, opts, deadline)?
        };
        nodes += used;
        match decision {
            Decision::Feasible(witness) => {
                return Ok(ComponentResult {
                    lower: k,
                    upper: k,
                    exact: true,
                    witness,
                    nodes,
                })
            }
            Decision::Infeasible => {}
            Decision::Timeout => {
                return Ok(ComponentResult {
                    lower: k,
                    upper,
                    exact: false,
                    witness: greedy,
                    nodes,
                })
            }
        }
    }
    Ok(ComponentResult {
        lower: upper,
        upper,
        exact: true,
        witness: greedy,
        nodes,
    })
}
