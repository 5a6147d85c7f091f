mod common;

use chi_lab::bounds::{
    bound_cor5, bound_cor9, bound_prop1, bound_prop3, bound_prop4, eps_bound, prop12_threshold, ramsey_upper,
    validate_complement_cut, BoundId, InducedPart, Q4,
};
use chi_lab::graph::{encode_graph6, enumerate_labeled, gen_gnp, parse_graph6};
use chi_lab::harness::{
    read_jsonl, scan_eps_graph, verify_all, verify_graph, write_records, Engine, RecordFormat, StrategyKind,
    VerifyOptions,
};
use chi_lab::invariants::{clique_number, independence_number, invariant_report};
use chi_lab::{Graph, VertexSet};
use num_rational::Rational64;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn mask(n: usize) -> impl Strategy<Value = VertexSet> {
    (1u64..1 << n).prop_map(VertexSet::from_bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(62)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(&parse_graph6(&s).unwrap(), &g);
        prop_assert_eq!(encode_graph6(&parse_graph6(&format!("{s}\n")).unwrap()).unwrap(), s);
    }

    #[test]
    fn complement_is_an_involution(g in graph(20)) {
        let c = g.complement();
        let n = g.order();
        prop_assert_eq!(c.order(), n);
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_subgraph_keeps_exactly_the_inner_edges((g, s) in graph(12).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), mask(n))
    })) {
        let h = g.induced_subgraph(s).unwrap();
        let members = s.to_vec();
        prop_assert_eq!(h.order(), members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                prop_assert_eq!(h.has_edge(i, j), i != j && g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn clique_of_complement_is_independence(g in graph(14)) {
        prop_assert_eq!(clique_number(&g.complement()).0, independence_number(&g).0);
    }

    #[test]
    fn report_relations_and_excess_lemmas(g in graph(9)) {
        let r = invariant_report(&g, true);
        r.certify(&g).map_err(TestCaseError::fail)?;
        let (n, alpha, chi) = (r.n as i64, r.independence as i64, r.chromatic as i64);
        let eta = r.excess.unwrap();
        prop_assert!(alpha - 3 <= eta);
        prop_assert!(eta >= n - 3 * chi);
        if alpha >= 3 {
            prop_assert!(eta * alpha <= (alpha - 3) * n);
        }
    }

    #[test]
    fn heuristic_verification_finds_nothing(g in graph(10)) {
        let opts = VerifyOptions { with_excess: true, ..Default::default() };
        let v = verify_graph(&g, &opts);
        prop_assert!(v.violations.is_empty(), "{:?}", v.violations);
    }

    #[test]
    fn excess_bound_is_minimal_local_bound(g in graph(7)) {
        let r = invariant_report(&g, true);
        let min = g
            .vertices()
            .subsets()
            .skip(1)
            .map(|h| bound_prop3(&r, &InducedPart::of(&g, h).unwrap()))
            .min()
            .unwrap();
        prop_assert_eq!(bound_cor9(&r).unwrap(), min);
    }

    #[test]
    fn minimum_cut_bound_beats_connectivity_bound((g, h) in graph(8).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), mask(n))
    })) {
        let r = invariant_report(&g, false);
        let Some(k) = r.witnesses.complement_cut else { return Ok(()) };
        if validate_complement_cut(&g, k).is_err() || h.difference(k).is_empty() {
            return Ok(());
        }
        let prop4 = bound_prop4(&g, &r, k, h).unwrap();
        let cor5 = bound_cor5(&r, &InducedPart::of(&g, h).unwrap());
        prop_assert!(prop4 <= cor5, "{prop4} > {cor5}");
    }

    #[test]
    fn adding_a_singleton_costs_half(g in graph(10)) {
        let r = invariant_report(&g, false);
        let alpha_set = r.witnesses.independent;
        let Some(v) = g.vertices().difference(alpha_set).first() else { return Ok(()) };
        let base = bound_prop1(&g, &r, &[alpha_set]).unwrap();
        let more = bound_prop1(&g, &r, &[alpha_set, VertexSet::singleton(v)]).unwrap();
        prop_assert_eq!(more, base + Q4::from_quarters(2));
    }

    #[test]
    fn eps_bound_is_monotone(g in graph(10), a in 1i64..40, b in 1i64..40) {
        let r = invariant_report(&g, false);
        let (lo, hi) = (Rational64::new(a.min(b), 40), Rational64::new(a.max(b), 40));
        prop_assert!(eps_bound(&r, lo).unwrap() <= eps_bound(&r, hi).unwrap());
        let rec = scan_eps_graph(&g, &[lo, hi]).unwrap();
        prop_assert!(rec.eps_verdicts[0].bound_holds <= rec.eps_verdicts[1].bound_holds);
    }

    // Any parameters passing the chain and Ramsey premises clear the threshold,
    // whether or not a graph realizes them.
    #[test]
    fn threshold_follows_from_its_premises(
        alpha in 1u32..25,
        omega in 1u32..25,
        kappa in 0i64..40,
        e in 1i64..60,
        frac in 0.0f64..1.0,
    ) {
        let eps = Rational64::new(e, 60);
        let chain = eps * omega as i64 + Rational64::new(alpha as i64, 4) < Rational64::new(2 * kappa + 1, 2);
        let cap = ramsey_upper(alpha + 1, omega + 1).min(1 << 50) as f64;
        let n = ((cap - 1.0) * frac).max(1.0) as usize;
        if chain {
            prop_assert!(kappa as f64 > prop12_threshold(n, eps) || prop12_threshold(n, eps) == 0.0);
        }
    }
}

#[test]
fn enumeration_is_complete_and_distinct() {
    for n in 1..=5 {
        let mut seen: Vec<String> = enumerate_labeled(n)
            .unwrap()
            .map(|g| encode_graph6(&g).unwrap())
            .collect();
        let total = seen.len();
        assert_eq!(total, 1 << (n * (n - 1) / 2));
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), total);
    }
}

#[test]
fn generator_is_deterministic() {
    let half = Rational64::new(1, 2);
    let a = encode_graph6(&gen_gnp(10, half, 42).unwrap()).unwrap();
    assert_eq!(a, encode_graph6(&gen_gnp(10, half, 42).unwrap()).unwrap());
    assert_eq!(
        gen_gnp(5, Rational64::from_integer(0), 3).unwrap(),
        Graph::empty(5).unwrap()
    );
    assert_eq!(
        gen_gnp(5, Rational64::from_integer(1), 3).unwrap(),
        Graph::complete(5).unwrap()
    );
    assert!(gen_gnp(5, Rational64::new(3, 2), 3).is_err());
}

fn records_with(threads: usize, graphs: &[Graph]) -> Vec<String> {
    let opts = VerifyOptions {
        with_excess: true,
        strategy: StrategyKind::Exhaustive,
        ..Default::default()
    };
    let mut out = Vec::new();
    let s = verify_all(graphs.iter().cloned().map(Ok), &opts, &Engine::new(threads), |rec| {
        out.push(serde_json::to_string(rec).unwrap());
        Ok(())
    })
    .unwrap();
    assert!(s.passed());
    out
}

#[test]
fn parallel_and_serial_runs_agree() {
    let mut rng = common::SplitMix(5);
    let graphs: Vec<Graph> = (0..300).map(|i| rng.graph(1 + i % 8)).collect();
    let serial = records_with(1, &graphs);
    assert_eq!(serial.len(), graphs.len());
    assert_eq!(serial, records_with(4, &graphs));
    for (rec, g) in serial.iter().zip(&graphs) {
        assert!(rec.contains(&format!(
            "\"graph6\":{}",
            serde_json::to_string(&encode_graph6(g).unwrap()).unwrap()
        )));
    }
}

#[test]
fn jsonl_records_round_trip() {
    let graphs = [Graph::cycle(5).unwrap(), Graph::petersen(), Graph::empty(1).unwrap()];
    let records: Vec<_> = graphs
        .iter()
        .map(|g| {
            verify_graph(
                g,
                &VerifyOptions {
                    with_excess: true,
                    ..Default::default()
                },
            )
            .record
        })
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.jsonl");
    write_records(&records, RecordFormat::Jsonl, &path).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 3);
    assert_eq!(read_jsonl(&path).unwrap(), records);
    assert!(records[0].evaluation(BoundId::Cor9).is_some());

    let csv_path = dir.path().join("r.csv");
    write_records(&records, RecordFormat::Csv, &csv_path).unwrap();
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), chi_lab::harness::CSV_HEADER.join(","));
    assert_eq!(lines.count(), 3);
}
