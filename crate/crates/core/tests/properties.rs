use std::collections::BTreeSet;

use proptest::prelude::*;

use dyncc::bcd::decompose;
use dyncc::closeness::closeness_all;
use dyncc::io::{parse_edge_list, parse_event_stream, write_edge_list, write_event_stream};
use dyncc::level::filter_sources;
use dyncc::oracle::{oracle_bcd, oracle_closeness, oracle_identical};
use dyncc::{
    build_classes, build_representatives, sssp_distances, DynamicGraph, EdgeEvent, Engine, EngineConfig,
    IdentityKind, SsspMode, VertexId, UNREACHABLE,
};

fn graph_from(n: usize, pairs: &[(usize, usize)]) -> DynamicGraph {
    let mut g = DynamicGraph::new(n);
    for &(a, b) in pairs {
        let (a, b) = ((a % n) as VertexId, (b % n) as VertexId);
        if a != b && !g.has_edge(a, b) {
            g.add_edge(a, b).unwrap();
        }
    }
    g
}

fn small_graph(max_n: usize) -> impl Strategy<Value = DynamicGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| graph_from(n, &pairs))
    })
}

/// A graph plus raw vertex pairs; each pair toggles that edge when replayed.
fn graph_and_toggles(max_n: usize, max_events: usize) -> impl Strategy<Value = (DynamicGraph, Vec<(VertexId, VertexId)>)> {
    (2..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| graph_from(n, &pairs)),
            prop::collection::vec((0..n as VertexId, 0..n as VertexId), 1..max_events),
        )
    })
}

fn toggle(g: &DynamicGraph, a: VertexId, b: VertexId) -> Option<EdgeEvent> {
    if a == b {
        None
    } else if g.has_edge(a, b) {
        Some(EdgeEvent::delete(a, b))
    } else {
        Some(EdgeEvent::insert(a, b))
    }
}

fn apply(g: &mut DynamicGraph, e: &EdgeEvent) {
    match e.op {
        dyncc::EdgeOp::Insert => g.add_edge(e.u, e.v).unwrap(),
        dyncc::EdgeOp::Delete => g.remove_edge(e.u, e.v).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hybrid_and_bottom_up_match_top_down(g in small_graph(40), s in 0usize..40, alpha in prop::sample::select(vec![0.25, 1.0, 4.0, 15.0])) {
        let s = (s % g.vertex_count()) as VertexId;
        let csr = g.to_csr();
        let top = sssp_distances(&csr, s, SsspMode::TopDown);
        let mut ws = dyncc::graph::BfsWorkspace::new(g.vertex_count());
        for mode in [SsspMode::BottomUp, SsspMode::Hybrid] {
            ws.run(&csr, s, mode, alpha);
            prop_assert_eq!(ws.distances(), &top[..]);
        }
    }

    #[test]
    fn scratch_closeness_matches_oracle(g in small_graph(25)) {
        let oracle = oracle_closeness(&g);
        prop_assert_eq!(&closeness_all(&g, SsspMode::TopDown), &oracle);
        prop_assert_eq!(&closeness_all(&g, SsspMode::Hybrid), &oracle);
        for (v, &far) in oracle.far().iter().enumerate() {
            let cc = oracle.closeness(v as VertexId);
            if far == 0 { prop_assert_eq!(cc, 0.0) } else { prop_assert!((cc * far as f64 - 1.0).abs() < 1e-12) }
        }
    }

    #[test]
    fn closeness_is_permutation_equivariant(g in small_graph(15), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let n = g.vertex_count();
        let mut perm: Vec<VertexId> = (0..n as VertexId).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = DynamicGraph::from_edges(n, g.edges().map(|(a, b)| (perm[a as usize], perm[b as usize]))).unwrap();
        let fg = closeness_all(&g, SsspMode::TopDown);
        let fh = closeness_all(&h, SsspMode::TopDown);
        for (v, &p) in perm.iter().enumerate() {
            prop_assert_eq!(fg.far()[v], fh.far()[p as usize]);
        }
    }

    #[test]
    fn every_configuration_stays_exact((g, pairs) in graph_and_toggles(14, 25)) {
        let configs = ["cc", "b", "l", "bl", "bli", "blih", "bi", "li"];
        let mut engines: Vec<Engine> = configs.iter().map(|c| Engine::new(g.clone(), c.parse().unwrap())).collect();
        let mut current = g;
        for (a, b) in pairs {
            let Some(e) = toggle(&current, a, b) else { continue };
            apply(&mut current, &e);
            let expected = oracle_closeness(&current);
            for engine in &mut engines {
                let report = engine.apply(&e).unwrap();
                prop_assert_eq!(engine.state(), &expected, "config {} after {}", engine.config(), e);
                prop_assert_eq!(
                    report.sources_total,
                    report.sources_skipped_level + report.sources_skipped_identical + report.sssp_count
                );
            }
        }
    }

    #[test]
    fn parallel_updates_are_deterministic((g, pairs) in graph_and_toggles(14, 10)) {
        let mut one = Engine::new(g.clone(), EngineConfig::blih());
        let mut many = Engine::new(g.clone(), EngineConfig::blih().with_threads(3));
        let mut current = g;
        for (a, b) in pairs {
            let Some(e) = toggle(&current, a, b) else { continue };
            apply(&mut current, &e);
            let (ra, rb) = (one.apply(&e).unwrap(), many.apply(&e).unwrap());
            prop_assert_eq!(ra.sssp_count, rb.sssp_count);
            prop_assert_eq!(one.state(), many.state());
        }
    }

    #[test]
    fn decomposition_matches_definition(g in small_graph(12)) {
        let pi = decompose(&g);
        let naive = oracle_bcd(&g);
        prop_assert_eq!(pi.canonical(&g), naive.components);
        prop_assert_eq!(pi.articulation_points(), naive.articulation);
    }

    #[test]
    fn maintained_decomposition_matches_definition((g, pairs) in graph_and_toggles(12, 12)) {
        let mut current = g;
        let mut pi = decompose(&current);
        for (a, b) in pairs {
            let Some(e) = toggle(&current, a, b) else { continue };
            apply(&mut current, &e);
            match e.op {
                dyncc::EdgeOp::Insert => { pi.maintain_on_insert(&current, e.u, e.v); }
                dyncc::EdgeOp::Delete => { pi.maintain_on_delete(&current, e.u, e.v).unwrap(); }
            }
            let naive = oracle_bcd(&current);
            prop_assert_eq!(pi.canonical(&current), naive.components);
            prop_assert_eq!(pi.articulation_points(), naive.articulation);
        }
    }

    #[test]
    fn representatives_recover_farness(g in small_graph(14)) {
        let pi = decompose(&g);
        let oracle = oracle_closeness(&g);
        for cid in 0..pi.component_count() as u32 {
            let reps = build_representatives(&g, &pi, cid);
            let local = pi.component_subgraph(&g, cid, None);
            for (i, &s) in reps.vertices().iter().enumerate() {
                let d = sssp_distances(&local, i as VertexId, SsspMode::TopDown);
                let far: u64 = reps.vertices().iter().enumerate()
                    .filter(|&(j, _)| d[j] != UNREACHABLE)
                    .map(|(j, &w)| d[j] as u64 * reps.represented_count(w) as u64 + reps.represented_farness(w))
                    .sum();
                prop_assert_eq!(far, oracle.far()[s as usize]);
            }
        }
    }

    #[test]
    fn identical_classes_match_definition((g, pairs) in graph_and_toggles(12, 12)) {
        let mut current = g;
        let kinds = [IdentityKind::Open, IdentityKind::Closed];
        let mut classes: Vec<_> = kinds.iter().map(|&k| build_classes(&current, k)).collect();
        for (a, b) in pairs {
            let Some(e) = toggle(&current, a, b) else { continue };
            apply(&mut current, &e);
            let far = oracle_closeness(&current);
            for (c, &kind) in classes.iter_mut().zip(&kinds) {
                c.maintain_on_edge_change(&current, e.u, e.v);
                prop_assert_eq!(c.partition(), oracle_identical(&current, kind));
                prop_assert_eq!(c.partition(), build_classes(&current, kind).partition());
                for class in c.partition() {
                    prop_assert!(class.iter().all(|&v| far.far()[v as usize] == far.far()[class[0] as usize]));
                }
            }
        }
    }

    #[test]
    fn level_filter_is_exact((g, pairs) in graph_and_toggles(10, 2)) {
        let (a, b) = pairs[0];
        let Some(e) = toggle(&g, a, b) else { return Ok(()) };
        let mut after = g.clone();
        apply(&mut after, &e);
        let without = if g.has_edge(e.u, e.v) { &after } else { &g };
        let all: Vec<VertexId> = (0..g.vertex_count() as VertexId).collect();
        let flagged: BTreeSet<VertexId> = filter_sources(without, e.u, e.v, &all).into_iter().collect();
        let (before, after) = (oracle_closeness(&g), oracle_closeness(&after));
        let changed: BTreeSet<VertexId> = all.iter().copied()
            .filter(|&v| before.far()[v as usize] != after.far()[v as usize] || before.reach()[v as usize] != after.reach()[v as usize])
            .collect();
        prop_assert_eq!(flagged, changed);
    }

    #[test]
    fn edge_lists_round_trip(g in small_graph(30)) {
        let mut text = Vec::new();
        write_edge_list(&g, &mut text).unwrap();
        let (parsed, stats) = parse_edge_list(&text[..]).unwrap();
        prop_assert_eq!(stats.warnings(), 0);
        prop_assert_eq!(parsed.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn event_streams_round_trip(raw in prop::collection::vec((any::<bool>(), 0u32..50, 1u32..50, prop::option::of(0u64..5)), 0..40)) {
        let mut t = 0;
        let events: Vec<EdgeEvent> = raw.into_iter().map(|(ins, u, d, step)| {
            let v = (u + d) % 50;
            let v = if v == u { u + 50 } else { v };
            let e = if ins { EdgeEvent::insert(u, v) } else { EdgeEvent::delete(u, v) };
            match step {
                Some(s) => { t += s; e.at(t) }
                None => e,
            }
        }).collect();
        let mut text = Vec::new();
        write_event_stream(&events, &mut text).unwrap();
        prop_assert_eq!(parse_event_stream(&text[..]).unwrap(), events);
    }
}
