use std::fmt;
use std::path::Path;

use pcn_core::coloring::{
    pattern_fssd_bipartite, pattern_fssd_cn_corona, pattern_fssd_complete, pattern_fssd_cycle, pattern_fssd_kn_corona,
    pattern_fssd_splitting_complete, pattern_fssd_splitting_cycle, PatternOutcome, VerificationReport,
};
use pcn_core::error::IoError;
use pcn_core::harness::{run_suite, summarize, ClaimResult, Grid};
use pcn_core::io::{load_coloring, load_graph, save_coloring, save_graph, to_dot, write_atomic, write_json};
use pcn_core::solver::{ChiValue, OrderStrategy};
use pcn_core::{generate, verify, FamilySpec, Graph, SolveOptions};

use crate::{exit, Budget, Command, Order, PatternName};

/// Per-solver-call budget for `check` when neither the flag nor the
/// environment sets one.
const CHECK_DEFAULT_BUDGET_SECS: f64 = 60.0;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(IoError),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io(_) => exit::IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Io(e)
    }
}

fn usage(e: impl fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn solve_options(budget: &Budget, default_secs: f64) -> Result<SolveOptions, CliError> {
    let secs = budget.time_budget.unwrap_or(default_secs);
    if !secs.is_finite() || secs < 0.0 {
        return Err(usage(format!(
            "time budget must be a non-negative number of seconds, got {secs}"
        )));
    }
    Ok(SolveOptions::with_budget_secs(secs))
}

pub fn run(cmd: Command) -> Result<u8, CliError> {
    match cmd {
        Command::Construct { spec, out } => construct(&spec, &out),
        Command::Chi {
            graph,
            budget,
            order,
            parallel,
            witness,
        } => {
            let mut opts = solve_options(&budget, 0.0)?;
            opts.order = match order {
                Order::Degree => OrderStrategy::DegreeDesc,
                Order::Ecc => OrderStrategy::EccentricityAsc,
                Order::Input => OrderStrategy::Input,
            };
            opts.parallel = parallel;
            chi(&graph, &opts, witness.as_deref())
        }
        Command::Verify { graph, coloring } => verify_cmd(&graph, &coloring),
        Command::Pattern {
            name,
            n,
            p,
            m,
            base,
            out,
            graph_out,
        } => {
            let outcome = build_pattern(name, n, p, m, base.as_deref())?;
            pattern(&outcome, &out, graph_out.as_deref())
        }
        Command::Check {
            suite,
            max_n,
            max_m,
            budget,
            seed,
            report,
        } => {
            let opts = solve_options(&budget, CHECK_DEFAULT_BUDGET_SECS)?;
            let mut grid = Grid::default();
            if let Some(n) = max_n {
                grid = grid.with_max_n(n);
            }
            if let Some(m) = max_m {
                grid = grid.with_max_m(m);
            }
            if let Some(s) = seed {
                grid.seed = s;
            }
            check(&suite, &grid, &opts, report.as_deref())
        }
        Command::ExportDot { graph, coloring, out } => {
            let g = load_graph(&graph)?;
            let c = coloring.map(|p| load_coloring(&p)).transpose()?;
            if let Some(c) = &c {
                if c.len() != g.n() {
                    return Err(usage(format!("coloring has {} colors for {} vertices", c.len(), g.n())));
                }
            }
            write_atomic(&out, to_dot(&g, c.as_ref()).as_bytes())?;
            Ok(exit::OK)
        }
    }
}

fn construct(spec: &str, out: &Path) -> Result<u8, CliError> {
    let spec: FamilySpec = spec.parse().map_err(usage)?;
    let (g, meta) = generate(&spec).map_err(usage)?;
    save_graph(out, &g)?;
    println!("name={}", g.name());
    println!("n={} edges={}", meta.vertices, meta.edges);
    Ok(exit::OK)
}

fn chi(path: &Path, opts: &SolveOptions, witness: Option<&Path>) -> Result<u8, CliError> {
    let g = load_graph(path)?;
    let r = pcn_core::packing_chromatic_number(&g, opts).map_err(usage)?;
    if let Some(w) = witness {
        save_coloring(w, g.name(), &r.witness)?;
    }
    eprintln!("nodes={} elapsed_ms={}", r.nodes_explored, r.elapsed.as_millis());
    Ok(match r.value {
        ChiValue::Exact { chi } => {
            println!("chi={chi}");
            exit::OK
        }
        ChiValue::TimeoutWithBounds { lower, upper } => {
            println!("bounds=[{lower},{upper}]");
            exit::TIMEOUT
        }
    })
}

fn print_report(report: &VerificationReport) {
    println!("valid={}", report.valid);
    for v in &report.violations {
        println!("{} {} {} {}", v.u, v.v, v.color, v.distance);
    }
}

fn verify_cmd(graph: &Path, coloring: &Path) -> Result<u8, CliError> {
    let g = load_graph(graph)?;
    let c = load_coloring(coloring)?;
    let report = match verify(&g, &c) {
        Ok(r) => r,
        Err(e) => {
            println!("valid=false");
            eprintln!("error: {e}");
            return Ok(exit::INVALID);
        }
    };
    print_report(&report);
    if report.valid {
        println!("colors={}", c.k());
        Ok(exit::OK)
    } else {
        Ok(exit::INVALID)
    }
}

fn build_pattern(
    name: PatternName,
    n: Option<u32>,
    p: Option<u32>,
    m: u32,
    base: Option<&str>,
) -> Result<PatternOutcome, CliError> {
    let need_n = || n.ok_or_else(|| usage(format!("pattern {name:?} needs --n")));
    let need_p = || p.ok_or_else(|| usage(format!("pattern {name:?} needs --p")));
    let out = match name {
        PatternName::FssdComplete => pattern_fssd_complete(need_n()?, m),
        PatternName::FssdCycle => pattern_fssd_cycle(need_n()?, m),
        PatternName::FssdBipartite => {
            let spec: FamilySpec = base
                .ok_or_else(|| usage("pattern fssd-bipartite needs --base"))?
                .parse()
                .map_err(usage)?;
            let (g, _) = generate(&spec).map_err(usage)?;
            pattern_fssd_bipartite(&g, m).map(|mut o| {
                o.graph = o.graph.with_name(FamilySpec::fssd(spec, m).to_string());
                o
            })
        }
        PatternName::KnCorona => pattern_fssd_kn_corona(need_n()?, need_p()?, m),
        PatternName::CnCorona => pattern_fssd_cn_corona(need_n()?, need_p()?, m),
        PatternName::SplitCycle => pattern_fssd_splitting_cycle(need_n()?, m),
        PatternName::SplitComplete => pattern_fssd_splitting_complete(need_n()?, m),
    };
    out.map_err(usage)
}

fn pattern(outcome: &PatternOutcome, out: &Path, graph_out: Option<&Path>) -> Result<u8, CliError> {
    let g: &Graph = &outcome.graph;
    save_coloring(out, g.name(), &outcome.coloring)?;
    if let Some(path) = graph_out {
        save_graph(path, g)?;
    }
    println!("graph={}", g.name());
    println!("pattern={}", outcome.note);
    print_report(&outcome.report);
    println!("colors={}", outcome.colors_used());
    Ok(if outcome.is_valid() { exit::OK } else { exit::INVALID })
}

fn row(r: &ClaimResult) -> String {
    format!(
        "{:<15} {:<20} {:<45} {}",
        r.verdict.to_string(),
        r.claim,
        r.instance,
        r.observed
    )
}

fn check(suite: &str, grid: &Grid, opts: &SolveOptions, report: Option<&Path>) -> Result<u8, CliError> {
    println!("{:<15} {:<20} {:<45} observed", "verdict", "claim", "instance");
    let results = run_suite(suite, grid, opts, &mut |r| println!("{}", row(r))).map_err(usage)?;
    if let Some(path) = report {
        write_json(path, &results)?;
    }
    let s = summarize(&results);
    println!("seed={}", grid.seed);
    println!("verdicts=pass:{} fail:{} skipped-budget:{}", s.pass, s.fail, s.skipped);
    Ok(if s.fail > 0 {
        exit::CLAIM_FAIL
    } else if s.skipped > 0 {
        exit::ONLY_SKIPS
    } else {
        exit::OK
    })
}
