//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Values are exact; the only tolerances are the wall-clock
//! limits below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pcn_core::coloring::{pattern_fssd_kn_corona, verify};
use pcn_core::distance::all_pairs_distances;
use pcn_core::families::{erdos_renyi, fssd, generate, random_connected, FamilySpec};
use pcn_core::harness::{
    check_bounds_graph, check_exact_value, check_stabilization, check_upper_bound_cn_corona, k2_expected, ExactClaim,
    Verdict,
};
use pcn_core::io::GraphDoc;
use pcn_core::solver::{brute_force_chi, decide_k, Decision};
use pcn_core::{packing_chromatic_number, Graph, SolveOptions};

const CYCLES_LIMIT: Duration = Duration::from_secs(1);
const FSSD_COMPLETE_LIMIT: Duration = Duration::from_secs(120);
const FSSD_CYCLE_LIMIT: Duration = Duration::from_secs(120);
const K2_LIMIT: Duration = Duration::from_secs(1);
const PETERSEN_BUDGET: Duration = Duration::from_secs(600);
const CORONA_BUDGET: Duration = Duration::from_secs(900);
const CORONA_PATTERN_LIMIT: Duration = Duration::from_secs(1);
const CN_CORONA_LIMIT: Duration = Duration::from_secs(60);
const SPLITTING_LIMIT: Duration = Duration::from_secs(600);
const PROPERTY_LIMIT: Duration = Duration::from_secs(600);
const ROUND_TRIP_LIMIT: Duration = Duration::from_secs(120);

/// Outcome of one criterion: a detail line, or the reason it failed.
type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn gen(spec: &FamilySpec) -> Graph {
    generate(spec).expect("valid family").0
}

fn spec(s: &str) -> FamilySpec {
    s.parse().expect("valid spec")
}

fn budget(d: Duration) -> SolveOptions {
    SolveOptions {
        time_budget: Some(d),
        ..Default::default()
    }
}

/// Exact value with a verified witness, or an error message.
fn exact_chi(g: &Graph, opts: &SolveOptions) -> Result<u32, String> {
    let r = packing_chromatic_number(g, opts).map_err(|e| e.to_string())?;
    if !verify(g, &r.witness).map_err(|e| e.to_string())?.valid {
        return Err(format!("{}: witness failed verification", g.name()));
    }
    r.exact()
        .ok_or_else(|| format!("{}: timed out with bounds {:?}", g.name(), r.bounds()))
}

fn expect_chi(g: &Graph, expected: u32, opts: &SolveOptions) -> Result<(), String> {
    let got = exact_chi(g, opts)?;
    if got == expected {
        Ok(())
    } else {
        Err(format!("{}: chi = {got}, expected {expected}", g.name()))
    }
}

fn expect_pass(claim: &ExactClaim, opts: &SolveOptions) -> Result<(), String> {
    let r = check_exact_value(claim, opts).map_err(|e| e.to_string())?;
    if r.verdict == Verdict::Pass {
        Ok(())
    } else {
        Err(format!("{} {}: {} ({})", r.claim, r.instance, r.verdict, r.observed))
    }
}

fn cycles() -> Outcome {
    let opts = SolveOptions::default();
    for (n, chi) in [(3, 3), (4, 3), (8, 3), (5, 4), (6, 4), (7, 4), (9, 4)] {
        expect_chi(&gen(&FamilySpec::Cycle(n)), chi, &opts)?;
    }
    Ok("C_3,C_4,C_8 -> 3; C_5,C_6,C_7,C_9 -> 4".into())
}

fn fssd_complete() -> Outcome {
    let opts = SolveOptions::default();
    for n in 3..=5 {
        for m in 1..=2 {
            expect_chi(&gen(&FamilySpec::fssd(FamilySpec::Complete(n), m)), n + 1, &opts)?;
            expect_pass(&ExactClaim::FssdComplete { n, m }, &opts)?;
        }
    }
    Ok("n+1 for n in 3..=5, m in 1..=2; witness at n+1, n ruled out".into())
}

fn fssd_cycles() -> Outcome {
    let opts = SolveOptions::default();
    for n in 3..=8 {
        for m in 1..=2 {
            let expected = if n % 2 == 0 { 3 } else { 4 };
            expect_chi(&gen(&FamilySpec::fssd(FamilySpec::Cycle(n), m)), expected, &opts)?;
            expect_pass(&ExactClaim::FssdCycle { n, m }, &opts)?;
        }
    }
    Ok("3 for even n, 4 for odd n, n in 3..=8, m in 1..=2".into())
}

fn k2_increase() -> Outcome {
    let opts = SolveOptions::default();
    let mut seen = Vec::new();
    for m in 1..=4 {
        let g = gen(&FamilySpec::fssd(FamilySpec::Complete(2), m));
        expect_chi(&g, k2_expected(m), &opts)?;
        seen.push(k2_expected(m));
    }
    Ok(format!("chi by m = 1..4: {seen:?}"))
}

fn petersen() -> Outcome {
    let g = gen(&spec("fssd(petersen,m=1)"));
    expect_chi(&g, 5, &budget(PETERSEN_BUDGET))?;
    Ok("chi(FSSD_1(P)) = 5".into())
}

fn corona() -> Outcome {
    let opts = budget(CORONA_BUDGET);
    expect_pass(&ExactClaim::KnCorona { n: 3, p: 2, m: 1 }, &opts)?;

    let start = Instant::now();
    let out = pattern_fssd_kn_corona(4, 2, 1).map_err(|e| e.to_string())?;
    if !out.is_valid() || out.colors_used() != 7 {
        return Err(format!(
            "n=4 pattern: valid={} colors={}",
            out.is_valid(),
            out.colors_used()
        ));
    }
    if start.elapsed() > CORONA_PATTERN_LIMIT {
        return Err(format!("n=4 pattern took {:?}", start.elapsed()));
    }
    let g = &out.graph;
    let lower = match decide_k(g, &all_pairs_distances(g), 6, &opts).map_err(|e| e.to_string())? {
        Decision::Infeasible => "6 ruled out",
        Decision::Timeout => "k=6 skipped-budget",
        Decision::Feasible(_) => return Err("n=4: a 6-coloring exists".into()),
    };
    Ok(format!(
        "n=3: pattern 6 verified, 5 ruled out; n=4: pattern 7 verified, {lower}"
    ))
}

fn cn_corona() -> Outcome {
    let mut discrepancies = Vec::new();
    let mut count = 0;
    for n in 3..=23 {
        for p in 2..=3 {
            for m in 1..=2 {
                let r = check_upper_bound_cn_corona(n, p, m).map_err(|e| e.to_string())?;
                count += 1;
                if r.verdict != Verdict::Pass {
                    let pair = r
                        .counterexample
                        .as_ref()
                        .and_then(|cx| cx.violations.first())
                        .map(|v| format!(" pair ({}, {}) color {} distance {}", v.u, v.v, v.color, v.distance))
                        .unwrap_or_default();
                    discrepancies.push(format!("{}: {}{pair}", r.instance, r.observed));
                }
            }
        }
    }
    if discrepancies.is_empty() {
        Ok(format!("{count} patterns verified within the bound table"))
    } else {
        Err(format!("pattern discrepancies: {}", discrepancies.join("; ")))
    }
}

fn splitting() -> Outcome {
    let opts = SolveOptions::default();
    for n in 3..=6 {
        for m in 1..=2 {
            let expected = if n % 2 == 0 { 3 } else { 5 };
            expect_chi(
                &gen(&FamilySpec::fssd(FamilySpec::splitting(FamilySpec::Cycle(n)), m)),
                expected,
                &opts,
            )?;
            expect_pass(&ExactClaim::SplitCycle { n, m }, &opts)?;
        }
    }
    for n in 3..=4 {
        expect_chi(
            &gen(&FamilySpec::fssd(FamilySpec::splitting(FamilySpec::Complete(n)), 1)),
            n + 2,
            &opts,
        )?;
        expect_pass(&ExactClaim::SplitComplete { n, m: 1 }, &opts)?;
    }
    Ok("S'(C_n): 3 for n in {4,6}, 5 for n in {3,5}; S'(K_n): n+2 for n in {3,4}".into())
}

/// Connected members of the generator families with at most 7 vertices.
fn small_family_graphs() -> Vec<Graph> {
    let mut specs = Vec::new();
    for n in 1..=7 {
        specs.push(FamilySpec::Path(n));
        specs.push(FamilySpec::Complete(n));
    }
    for n in 3..=7 {
        specs.push(FamilySpec::Cycle(n));
    }
    for n in 1..=6 {
        specs.push(FamilySpec::Star(n));
    }
    for a in 1..=3 {
        for b in a..=7 - a {
            specs.push(FamilySpec::CompleteBipartite(a, b));
        }
    }
    for m in 1..=5 {
        specs.push(FamilySpec::fssd(FamilySpec::Complete(2), m));
    }
    for s in [
        "fssd(complete:3,m=1)",
        "fssd(path:3,m=1)",
        "fssd(path:3,m=2)",
        "fssd(star:2,m=1)",
        "split(complete:2)",
        "split(complete:3)",
        "split(path:3)",
        "corona(complete:2,path:2)",
        "corona(path:2,complete:2)",
    ] {
        specs.push(spec(s));
    }
    specs.iter().map(gen).filter(|g| g.n() <= 7).collect()
}

fn properties() -> Outcome {
    let opts = SolveOptions::default();
    let family = small_family_graphs();
    let random: Vec<Graph> = (0..50)
        .map(|s| erdos_renyi(4 + (s as usize % 6), 0.4, 1_000 + s))
        .collect();
    for g in family.iter().chain(&random) {
        let oracle = brute_force_chi(g, None).map_err(|e| e.to_string())?;
        let solved = exact_chi(g, &opts)?;
        if oracle != solved {
            return Err(format!("{}: solver {solved}, brute force {oracle}", g.name()));
        }
    }
    let oracle_count = family.len() + random.len();

    for (i, g) in random.iter().take(20).enumerate() {
        let whole = exact_chi(g, &opts)?;
        let keep: Vec<usize> = g.vertices().filter(|v| (v + i) % 3 != 0).collect();
        if keep.is_empty() {
            continue;
        }
        let (h, _) = g.induced_subgraph(&keep).map_err(|e| e.to_string())?;
        let part = exact_chi(&h, &opts)?;
        if part > whole {
            return Err(format!("{}: induced subgraph needs {part} > {whole}", g.name()));
        }
    }

    let bases: Vec<Graph> = (0..20)
        .map(|i| random_connected(3 + (i % 6) as usize, 0.4, 500 + 100 * i))
        .collect();
    for g in bases.iter().take(8) {
        let chain: Vec<u32> = (1..=3)
            .map(|m| exact_chi(&fssd(g, m), &opts))
            .collect::<Result<_, _>>()?;
        if chain.windows(2).any(|w| w[0] > w[1]) {
            return Err(format!("{}: chi over m = 1..3 is {chain:?}", g.name()));
        }
    }

    for g in &bases {
        for m in 1..=2 {
            let r = check_bounds_graph(g, m, &opts).map_err(|e| e.to_string())?;
            if r.verdict != Verdict::Pass {
                return Err(format!("bounds {}: {} ({})", r.instance, r.verdict, r.observed));
            }
        }
    }

    for s in ["complete:2", "complete:3", "cycle:4", "path:4"] {
        let r = check_stabilization(&spec(s), &opts).map_err(|e| e.to_string())?;
        if r.verdict != Verdict::Pass {
            return Err(format!("stabilization {s}: {} ({})", r.verdict, r.observed));
        }
    }
    Ok(format!(
        "oracle agreement on {oracle_count} graphs; hereditary 20, monotone 8, bounds 40, stabilization 4"
    ))
}

fn round_trip() -> Outcome {
    let specs = [
        "path:5",
        "cycle:6",
        "complete:4",
        "star:3",
        "petersen",
        "bipartite:2,3",
        "corona(cycle:4,path:3)",
        "split(complete:4)",
        "fssd(complete:3,m=2)",
        "fssd(corona(complete:3,path:2),m=1)",
        "fssd(split(cycle:5),m=2)",
        "fssd(fssd(complete:3,m=1),m=1)",
    ];
    for s in specs {
        let g = gen(&spec(s));
        let text = serde_json::to_string(&GraphDoc::from_graph(&g)).map_err(|e| e.to_string())?;
        let back = serde_json::from_str::<GraphDoc>(&text)
            .map_err(|e| e.to_string())?
            .to_graph()?;
        if back != g {
            return Err(format!("{s}: JSON round trip changed the graph"));
        }
        if spec(&spec(s).to_string()) != spec(s) {
            return Err(format!("{s}: spec rendering does not parse back"));
        }
    }
    let opts = SolveOptions::default();
    for s in [
        "fssd(petersen,m=1)",
        "fssd(corona(complete:3,path:2),m=1)",
        "fssd(split(cycle:5),m=1)",
    ] {
        let g = gen(&spec(s));
        let a = packing_chromatic_number(&g, &opts).map_err(|e| e.to_string())?;
        let b = packing_chromatic_number(&g, &opts).map_err(|e| e.to_string())?;
        if a.value != b.value || a.witness != b.witness {
            return Err(format!("{s}: two sequential runs differ"));
        }
    }
    Ok(format!(
        "{} families round-trip; 3 instances deterministic",
        specs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cycle baselines", cycles, CYCLES_LIMIT),
        ("FSSD of complete graphs", fssd_complete, FSSD_COMPLETE_LIMIT),
        ("FSSD of cycles", fssd_cycles, FSSD_CYCLE_LIMIT),
        ("K_2 strict increase", k2_increase, K2_LIMIT),
        ("Petersen subdivision", petersen, PETERSEN_BUDGET),
        ("corona with complete graphs", corona, CORONA_BUDGET),
        ("corona with cycles, upper bounds", cn_corona, CN_CORONA_LIMIT),
        ("splitting graphs", splitting, SPLITTING_LIMIT),
        ("property suites", properties, PROPERTY_LIMIT),
        ("round trip and determinism", round_trip, ROUND_TRIP_LIMIT),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:.3}s]", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{:.3}s]", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
