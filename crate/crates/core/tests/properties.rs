use proptest::prelude::*;

use pcn_core::coloring::{greedy_coloring, lift_to_fssd, verify};
use pcn_core::distance::{all_pairs_distances, DistanceMatrix};
use pcn_core::families::{erdos_renyi, fssd, generate, random_connected, FamilySpec};
use pcn_core::io::GraphDoc;
use pcn_core::label::VertexLabel;
use pcn_core::solver::{brute_force_chi, decide_k, Decision};
use pcn_core::stats::stats;
use pcn_core::{packing_chromatic_number, Graph, PackingColoring, SolveOptions};

fn chi(g: &Graph) -> u32 {
    let r = packing_chromatic_number(g, &SolveOptions::default()).unwrap();
    assert!(verify(g, &r.witness).unwrap().valid);
    r.exact().unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.1f64..0.8, any::<u64>()).prop_map(|(n, p, seed)| erdos_renyi(n, p, seed))
}

fn connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0.2f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| random_connected(n, p, seed))
}

fn leaf_spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1u32..6).prop_map(FamilySpec::Path),
        (3u32..7).prop_map(FamilySpec::Cycle),
        (1u32..5).prop_map(FamilySpec::Complete),
        (1u32..5).prop_map(FamilySpec::Star),
        (1u32..4, 1u32..4).prop_map(|(a, b)| FamilySpec::CompleteBipartite(a, b)),
        Just(FamilySpec::Petersen),
    ]
}

fn family_spec() -> impl Strategy<Value = FamilySpec> {
    leaf_spec().prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), 1u32..3).prop_map(|(g, m)| FamilySpec::fssd(g, m)),
            inner.clone().prop_map(FamilySpec::splitting),
            (inner, (1u32..4).prop_map(FamilySpec::Path)).prop_map(|(g, h)| FamilySpec::corona(g, h)),
        ]
    })
}

fn check_metric(g: &Graph, d: &DistanceMatrix) {
    for u in g.vertices() {
        assert_eq!(d.get(u, u), 0);
        for v in g.vertices() {
            assert_eq!(d.get(u, v), d.get(v, u));
            if g.has_edge(u, v) {
                assert_eq!(d.get(u, v), 1);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_form_a_graph_metric(g in graph(14)) {
        let d = all_pairs_distances(&g);
        check_metric(&g, &d);
        for u in g.vertices() {
            for v in g.vertices() {
                for w in g.vertices() {
                    let (a, b) = (d.get(u, w), d.get(w, v));
                    if a != u32::MAX && b != u32::MAX {
                        prop_assert!(d.get(u, v) <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn fssd_shape(g in graph(9), m in 1u32..4) {
        let f = fssd(&g, m);
        prop_assert_eq!(f.n(), g.n() + m as usize * g.edge_count());
        prop_assert_eq!(f.edge_count(), 2 * m as usize * g.edge_count());
        for v in g.vertices() {
            prop_assert_eq!(f.degree(v), m as usize * g.degree(v));
        }
        for v in g.n()..f.n() {
            prop_assert_eq!(f.degree(v), 2);
        }
        prop_assert!(stats(&f).is_bipartite());
        let (dg, df) = (all_pairs_distances(&g), all_pairs_distances(&f));
        for u in g.vertices() {
            for v in g.vertices() {
                let want = dg.get(u, v).saturating_mul(2);
                prop_assert_eq!(df.get(u, v), want);
            }
        }
    }

    #[test]
    fn generated_families_match_formulas_and_round_trip(spec in family_spec()) {
        let (g, meta) = generate(&spec).unwrap();
        prop_assert_eq!((g.n(), g.edge_count()), (meta.vertices, meta.edges));
        prop_assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec.clone());
        let text = serde_json::to_string(&GraphDoc::from_graph(&g)).unwrap();
        let back = serde_json::from_str::<GraphDoc>(&text).unwrap().to_graph().unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn solver_agrees_with_brute_force(g in graph(8)) {
        prop_assert_eq!(chi(&g), brute_force_chi(&g, None).unwrap());
    }

    #[test]
    fn decisions_bracket_chi(g in connected(2, 12)) {
        let k = chi(&g);
        let d = all_pairs_distances(&g);
        let opts = SolveOptions::default();
        if k > 1 {
            prop_assert_eq!(decide_k(&g, &d, k - 1, &opts).unwrap(), Decision::Infeasible);
        }
        match decide_k(&g, &d, k + 1, &opts).unwrap() {
            Decision::Feasible(c) => prop_assert!(verify(&g, &c).unwrap().valid && c.k() <= k + 1),
            other => prop_assert!(false, "k+1 not feasible: {:?}", other),
        }
    }

    #[test]
    fn parallel_matches_serial(g in connected(3, 14)) {
        let opts = SolveOptions { parallel: true, ..Default::default() };
        let r = packing_chromatic_number(&g, &opts).unwrap();
        prop_assert!(verify(&g, &r.witness).unwrap().valid);
        prop_assert_eq!(r.exact(), Some(chi(&g)));
    }

    #[test]
    fn greedy_is_valid_and_above_chi(g in graph(10)) {
        let order: Vec<usize> = g.vertices().collect();
        let c = greedy_coloring(&g, &order);
        prop_assert!(verify(&g, &c).unwrap().valid);
        prop_assert!(c.k() >= chi(&g));
    }

    #[test]
    fn lifting_an_optimal_coloring(g in graph(10), m in 1u32..4) {
        let best = packing_chromatic_number(&g, &SolveOptions::default()).unwrap().witness;
        let lifted = lift_to_fssd(&g, &best, m).unwrap();
        let f = fssd(&g, m);
        prop_assert!(verify(&f, &lifted).unwrap().valid);
        prop_assert!(chi(&f) <= best.k() + 1);
    }

    #[test]
    fn hereditary(g in connected(2, 10), mask in any::<u16>()) {
        let keep: Vec<usize> = g.vertices().filter(|&v| mask & (1 << v) != 0).collect();
        prop_assume!(!keep.is_empty());
        let (h, _) = g.induced_subgraph(&keep).unwrap();
        prop_assert!(chi(&h) <= chi(&g));
    }

    #[test]
    fn monotone_in_m(g in connected(2, 7)) {
        let values: Vec<u32> = (1..=3).map(|m| chi(&fssd(&g, m))).collect();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]), "{:?}", values);
    }

    #[test]
    fn bounds_sandwich(g in connected(3, 8), m in 1u32..3) {
        let f = fssd(&g, m);
        let omega = stats(&g).clique_number as u32;
        let value = chi(&f);
        prop_assert!(omega < value && value <= chi(&g) + 1);
    }

    #[test]
    fn verify_flags_every_close_pair(g in graph(10), colors in proptest::collection::vec(1u32..4, 10)) {
        let c = PackingColoring::new(colors[..g.n()].to_vec()).unwrap();
        let d = all_pairs_distances(&g);
        let report = verify(&g, &c).unwrap();
        let mut expected = 0;
        for u in g.vertices() {
            for v in u + 1..g.n() {
                if c.color(u) == c.color(v) && d.get(u, v) <= c.color(u) {
                    expected += 1;
                }
            }
        }
        prop_assert_eq!(report.violations.len(), expected);
        prop_assert_eq!(report.valid, expected == 0);
    }

    #[test]
    fn labels_survive_serde(i in 1u32..50, j in 1u32..50, k in 1u32..5) {
        prop_assume!(i != j);
        let l = VertexLabel::subdivided(i, j, k);
        let text = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<VertexLabel>(&text).unwrap(), l);
    }
}
