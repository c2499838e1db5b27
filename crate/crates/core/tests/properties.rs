mod common;

use std::collections::HashSet;
use std::sync::Mutex;

use proptest::prelude::*;

use stc_cluster::algorithms::{
    derived_graph, mfp_cd, mfp_cd_det, mfp_ce, mfp_ce_det, mfp_instance, RunConfig,
};
use stc_cluster::io::{parse_clustering, parse_edge_list, parse_fractional, write_clustering, write_edge_list, write_fractional};
use stc_cluster::objective::disagreements;
use stc_cluster::oracle::{opt_clustering, opt_labeling};
use stc_cluster::pivot::{check_thm31, pivot_deterministic, pivot_random};
use stc_cluster::stc::{check_stc_feasible, match_cd, match_ce};
use stc_cluster::wedge::{
    build_gallai, build_wedge_hypergraph, enumerate_wedges, par_enumerate_wedges, wedge_count,
};
use stc_cluster::{eval_objective, Clustering, Flavor, FractionalSolution, Graph, ObjectiveKind};

fn graph_strategy(max_n: usize, max_e: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_e)
            .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

fn edge_lines(max_label: u32, max_lines: usize) -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::vec((0..max_label, 0..max_label), 1..=max_lines)
}

fn to_text(lines: &[(u32, u32)]) -> String {
    lines.iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}

/// Brute-force disagreement count over all pairs.
fn brute_cost(g: &Graph, c: &Clustering, kind: ObjectiveKind) -> Option<u64> {
    let mut cost = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let same = c.cluster_of(u) == c.cluster_of(v);
            match (g.has_edge(u, v), same) {
                (true, false) => cost += 1,
                (false, true) if kind == ObjectiveKind::ClusterDeletion => return None,
                (false, true) => cost += 1,
                _ => {}
            }
        }
    }
    Some(cost)
}

/// Each cluster is a pivot plus some of its neighbors in `d`.
fn is_pivot_clustering(d: &Graph, c: &Clustering) -> bool {
    c.clusters()
        .iter()
        .all(|members| members.iter().any(|&p| members.iter().all(|&v| v == p || d.has_edge(p, v))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn adjacency_is_sorted_and_symmetric(g in graph_strategy(30, 120)) {
        let mut degree_sum = 0;
        for u in 0..g.n() {
            let nb = g.neighbors(u);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            for &v in nb {
                prop_assert!(v != u);
                prop_assert!(g.neighbors(v).binary_search(&u).is_ok());
            }
            degree_sum += nb.len();
        }
        prop_assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn loading_ignores_line_order(lines in edge_lines(40, 60), seed in any::<u64>()) {
        let a = parse_edge_list(to_text(&lines).as_bytes()).unwrap();
        let mut shuffled = lines.clone();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut rng);
        let b = parse_edge_list(to_text(&shuffled).as_bytes()).unwrap();
        let labeled = |g: &Graph| -> HashSet<(String, String)> {
            g.edges().iter().map(|&(u, v)| {
                let (x, y) = (g.label(u).to_string(), g.label(v).to_string());
                if x < y { (x, y) } else { (y, x) }
            }).collect()
        };
        prop_assert_eq!(a.n(), b.n());
        prop_assert_eq!(labeled(&a), labeled(&b));
    }

    #[test]
    fn edge_list_round_trip(lines in edge_lines(40, 60)) {
        let g = parse_edge_list(to_text(&lines).as_bytes()).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let h = parse_edge_list(buf.as_slice()).unwrap();
        prop_assert_eq!(g, h);
    }

    #[test]
    fn edge_list_round_trip_with_isolated_nodes(g in graph_strategy(30, 40)) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        prop_assert_eq!(parse_edge_list(buf.as_slice()).unwrap(), g);
    }

    #[test]
    fn wedges_match_brute_force(g in graph_strategy(12, 40)) {
        let mut seen = Vec::new();
        let count = enumerate_wedges(&g, |w| seen.push((w.i, w.j, w.k)));
        prop_assert_eq!(&seen, &common::brute_wedges(&g));
        for &(i, j, k) in &seen {
            prop_assert!(i < j && i != k && j != k);
            prop_assert!(g.has_edge(i, k) && g.has_edge(j, k) && !g.has_edge(i, j));
        }
        prop_assert_eq!(count, wedge_count(&g));
        prop_assert_eq!(build_gallai(&g).unwrap().edges.len() as u64, count);
        let h = build_wedge_hypergraph(&g).unwrap();
        prop_assert_eq!(h.hyperedges.len() as u64, count);
        for he in &h.hyperedges {
            prop_assert!(he[0] != he[1] && he[0] != he[2] && he[1] != he[2]);
        }
        let par = Mutex::new(Vec::new());
        par_enumerate_wedges(&g, |w| par.lock().unwrap().push((w.i, w.j, w.k)));
        let mut par = par.into_inner().unwrap();
        par.sort_by_key(|&(i, j, k)| (k, i, j));
        prop_assert_eq!(par, seen);
    }

    #[test]
    fn matchings_are_maximal_covers(g in graph_strategy(25, 80), seed in 0u64..4) {
        let cd = match_cd(&g, seed);
        prop_assert!(check_stc_feasible(&g, &cd));
        prop_assert_eq!(cd.weak_edges.len() as u64, 2 * cd.matching_size);
        prop_assert!(cd.added_pairs.is_empty());
        prop_assert_eq!(&cd, &match_cd(&g, seed));

        let ce = match_ce(&g, seed);
        prop_assert!(check_stc_feasible(&g, &ce));
        prop_assert_eq!(ce.cover_size() as u64, 3 * ce.matching_size);
        prop_assert_eq!(&ce, &match_ce(&g, seed));
        for w in &cd.matching {
            prop_assert!(g.has_edge(w.i, w.k) && g.has_edge(w.j, w.k) && !g.has_edge(w.i, w.j));
        }
    }

    #[test]
    fn objective_matches_pair_scan(g in graph_strategy(15, 50), labels in prop::collection::vec(0usize..5, 15)) {
        let c = Clustering::from_assignment(labels[..g.n()].iter().copied());
        for kind in [ObjectiveKind::ClusterEditing, ObjectiveKind::ClusterDeletion] {
            prop_assert_eq!(eval_objective(&g, &c, kind).unwrap(), brute_cost(&g, &c, kind));
        }
        let d = disagreements(&g, &c).unwrap();
        prop_assert_eq!(d.cut_edges + d.missing_pairs, brute_cost(&g, &c, ObjectiveKind::ClusterEditing).unwrap());
    }

    #[test]
    fn pivots_build_stars_of_the_derived_graph(g in graph_strategy(25, 80), seed in any::<u64>()) {
        let c = pivot_random(&g, seed);
        prop_assert_eq!(c.len(), g.n());
        prop_assert!(is_pivot_clustering(&g, &c));
        prop_assert_eq!(&c, &pivot_random(&g, seed));
        for kind in [ObjectiveKind::ClusterDeletion, ObjectiveKind::ClusterEditing] {
            let lab = if kind == ObjectiveKind::ClusterDeletion { match_cd(&g, 0) } else { match_ce(&g, 0) };
            let inst = mfp_instance(&g, &lab, kind);
            let det = pivot_deterministic(&inst).unwrap();
            prop_assert!(is_pivot_clustering(inst.derived(), &det));
            prop_assert_eq!(&det, &pivot_deterministic(&inst).unwrap());
        }
    }

    #[test]
    fn mfp_guarantees(g in graph_strategy(20, 70), seed in 0u64..1000) {
        let cfg = RunConfig { reps: 5, seed, ..RunConfig::default() };
        let cd = mfp_cd(&g, &cfg).unwrap();
        let lab = cd.labeling.as_ref().unwrap();
        prop_assert!(eval_objective(&g, &cd.clustering, ObjectiveKind::ClusterDeletion).unwrap().is_some());
        prop_assert!(cd.report.lb <= cd.report.ub as f64);
        prop_assert!(check_thm31(&mfp_instance(&g, lab, ObjectiveKind::ClusterDeletion), 2.0).passed);

        let det = mfp_cd_det(&g, &cfg).unwrap();
        let ew = det.labeling.as_ref().unwrap().weak_edges.len() as u64;
        prop_assert!(det.report.ub <= 2 * ew);

        let ce = mfp_ce(&g, &cfg, stc_cluster::RoundOn::Derived).unwrap();
        let lab = ce.labeling.as_ref().unwrap();
        prop_assert!(check_thm31(&mfp_instance(&g, lab, ObjectiveKind::ClusterEditing), 2.0).passed);
        prop_assert!(is_pivot_clustering(&derived_graph(&g, lab), &ce.clustering));
        let det = mfp_ce_det(&g, &cfg).unwrap();
        let cover = det.labeling.as_ref().unwrap().cover_size() as u64;
        prop_assert!(det.report.ub <= 2 * cover);
    }

    #[test]
    fn lower_bounds_below_optima(g in graph_strategy(7, 21)) {
        let cd = opt_clustering(&g, ObjectiveKind::ClusterDeletion).unwrap().opt_value;
        let ce = opt_clustering(&g, ObjectiveKind::ClusterEditing).unwrap().opt_value;
        let stc = opt_labeling(&g, Flavor::Stc).unwrap().opt_value;
        let plus = opt_labeling(&g, Flavor::StcPlus).unwrap().opt_value;
        prop_assert!(match_cd(&g, 0).matching_size <= stc);
        prop_assert!(match_ce(&g, 0).matching_size <= plus);
        prop_assert!(stc <= cd && cd <= 2 * stc);
        prop_assert!(plus <= ce && ce <= 2 * plus);
        prop_assert!(ce <= cd);
        prop_assert!(match_cd(&g, 0).weak_edges.len() as u64 <= 2 * stc);
        prop_assert!(match_ce(&g, 0).cover_size() as u64 <= 3 * plus);
    }

    #[test]
    fn clustering_file_round_trip(labels in prop::collection::vec(0usize..50, 1..100)) {
        let c = Clustering::from_assignment(labels);
        let mut buf = Vec::new();
        write_clustering(&c, &mut buf).unwrap();
        prop_assert_eq!(parse_clustering(buf.as_slice()).unwrap(), c);
    }

    #[test]
    fn fractional_file_round_trip(g in graph_strategy(12, 30), xs in prop::collection::vec(0u32..=4, 30)) {
        let entries: Vec<_> = g.edges().iter().zip(&xs).map(|(&(u, v), &x)| (u, v, x as f64 / 4.0)).collect();
        let sol = FractionalSolution::new(&g, Flavor::Stc, entries).unwrap();
        let mut buf = Vec::new();
        write_fractional(&g, &sol, &mut buf).unwrap();
        prop_assert_eq!(parse_fractional(&g, buf.as_slice()).unwrap(), sol);
    }
}
