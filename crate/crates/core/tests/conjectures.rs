mod common;

use common::{alpha2_graphs, brute_alpha, brute_clique_number, brute_is_cdm, triangle_free_graphs};
use hadwiger2::conjectures::*;
use hadwiger2::constructions::{complete, cycle, eberhard, hoffman_singleton, petersen};
use hadwiger2::graph::iso::is_isomorphic;
use hadwiger2::graph::{graph6, inflate, InflationSpec};
use hadwiger2::matching::{chromatic_number_alpha2, Matching};
use hadwiger2::Graph;
use proptest::prelude::*;

fn connected_alpha2(lo: usize, hi: usize) -> Vec<Graph> {
    alpha2_graphs(lo, hi)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// Every matching of `g`, by branching on the smallest unused vertex.
fn all_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        g: &Graph,
        v: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if v == g.n() {
            out.push(cur.clone());
            return;
        }
        rec(g, v + 1, used, cur, out);
        if used[v] {
            return;
        }
        for u in v + 1..g.n() {
            if !used[u] && g.has_edge(u, v) {
                used[u] = true;
                cur.push((v, u));
                rec(g, v + 1, used, cur, out);
                cur.pop();
                used[u] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(g, 0, &mut vec![false; g.n()], &mut Vec::new(), &mut out);
    out
}

fn brute_cm(g: &Graph) -> usize {
    all_matchings(g)
        .into_iter()
        .filter(|m| {
            m.iter().enumerate().all(|(i, &(a, b))| {
                m[i + 1..].iter().all(|&(c, d)| {
                    g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
                })
            })
        })
        .map(|m| m.len())
        .max()
        .unwrap_or(0)
}

/// Largest complete model whose branch sets are single vertices or edges.
fn brute_had2(g: &Graph) -> usize {
    fn adjacent(g: &Graph, a: &[usize], b: &[usize]) -> bool {
        a.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y)))
    }
    fn rec(g: &Graph, v: usize, used: &mut Vec<bool>, sets: &mut Vec<Vec<usize>>) -> usize {
        if v == g.n() {
            return sets.len();
        }
        let mut best = rec(g, v + 1, used, sets);
        if used[v] {
            return best;
        }
        let mut options = vec![vec![v]];
        options.extend(
            (v + 1..g.n())
                .filter(|&u| !used[u] && g.has_edge(u, v))
                .map(|u| vec![v, u]),
        );
        for b in options {
            if sets.iter().all(|s| adjacent(g, s, &b)) {
                for &x in &b {
                    used[x] = true;
                }
                sets.push(b.clone());
                best = best.max(rec(g, v + 1, used, sets));
                sets.pop();
                for &x in &b {
                    used[x] = false;
                }
            }
        }
        best
    }
    rec(g, 0, &mut vec![false; g.n()], &mut Vec::new())
}

/// Are there `k` disjoint induced three-vertex paths?
fn brute_seagulls(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let mut paths = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let edges = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)];
                if edges.iter().filter(|&&e| e).count() == 2 {
                    paths.push(1u32 << a | 1 << b | 1 << c);
                }
            }
        }
    }
    fn rec(paths: &[u32], used: u32, k: usize) -> bool {
        k == 0
            || paths
                .iter()
                .enumerate()
                .any(|(i, &p)| p & used == 0 && rec(&paths[i + 1..], used | p, k - 1))
    }
    rec(&paths, 0, k)
}

fn brute_has_induced_c5(g: &Graph) -> bool {
    let c5 = cycle(5).unwrap();
    let n = g.n();
    (0u32..1 << n).filter(|m| m.count_ones() == 5).any(|m| {
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        is_isomorphic(&g.induced_subgraph(&vs).unwrap(), &c5)
    })
}

#[test]
fn cdm_exists_for_every_connected_alpha2_graph_to_nine() {
    let graphs = connected_alpha2(2, 9);
    assert_eq!(graphs.len(), 1 + 2 + 5 + 12 + 35 + 104 + 406 + 1893);
    for g in &graphs {
        let m = connected_dominating_matching(g)
            .unwrap()
            .unwrap_or_else(|| panic!("no CDM in {}", graph6::encode(g)));
        assert!(brute_is_cdm(g, &m.edges.edges), "{}", graph6::encode(g));
    }
}

#[test]
fn cdm_search_agrees_with_exhaustive_search_to_seven() {
    for g in connected_alpha2(2, 7) {
        let brute = all_matchings(&g).iter().any(|m| brute_is_cdm(&g, m));
        let found = connected_dominating_matching(&g).unwrap();
        assert_eq!(found.is_some(), brute);
        assert!(brute);
    }
}

#[test]
fn cdm_rejects_bad_inputs() {
    let two_triangles =
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert!(connected_dominating_matching(&two_triangles).is_err());
    assert!(connected_dominating_matching(&cycle(6).unwrap()).is_err());
    let c5 = cycle(5).unwrap();
    let m = connected_dominating_matching(&c5).unwrap().unwrap();
    assert!(brute_is_cdm(&c5, &m.edges.edges));
}

#[test]
fn connected_matching_number_matches_brute_force_to_eight() {
    for g in alpha2_graphs(1, 8) {
        let found = connected_matching_max(&g, None);
        assert!(found.exact);
        assert!(is_connected_matching(&g, &found.value.edges));
        assert_eq!(found.value.size(), brute_cm(&g), "{}", graph6::encode(&g));
    }
}

#[test]
fn had2_matches_brute_force_to_eight() {
    for g in alpha2_graphs(1, 8) {
        let found = k_model_size2_max(&g, None);
        assert!(found.exact);
        assert!(verify_k_model(&g, &found.value));
        assert_eq!(
            found.value.order(),
            brute_had2(&g),
            "{}",
            graph6::encode(&g)
        );
    }
    assert_eq!(brute_had2(&cycle(7).unwrap()), 2);
    assert_eq!(brute_had2(&cycle(5).unwrap()), 3);
    assert_eq!(k_model_size2_max(&complete(3), None).value.order(), 3);
}

/// Edge-maximal triangle-free, diameter two, edge-minimal with `α = 2` in
/// the complement, and no dominating edge in the complement all coincide.
#[test]
fn triangle_free_four_way_equivalence() {
    for g in triangle_free_graphs(3, 9) {
        let n = g.n();
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .filter(|&(x, y)| !g.has_edge(x, y))
            .collect();
        let common = |x: usize, y: usize| (0..n).any(|u| g.has_edge(u, x) && g.has_edge(u, y));
        let edge_maximal = non_edges.iter().all(|&(x, y)| common(x, y));
        let diameter_two = g.is_connected()
            && !non_edges.is_empty()
            && non_edges.iter().all(|&(x, y)| common(x, y));
        let co = g.complement();
        let edge_minimal = brute_alpha(&co) == 2
            && non_edges
                .iter()
                .all(|&(x, y)| brute_alpha(&co.remove_edge(x, y)) == 3);
        let no_dominating = dominating_edge(&co).is_none();
        let all = [edge_maximal, diameter_two, edge_minimal, no_dominating];
        assert!(
            all.iter().all(|&b| b == all[0]),
            "{}: {all:?}",
            graph6::encode(&g)
        );
    }
}

#[test]
fn low_connectivity_gives_cdm() {
    let mut checked = 0;
    for g in connected_alpha2(2, 9) {
        if g.vertex_connectivity().unwrap() * 2 <= g.n() {
            checked += 1;
            let m = connected_dominating_matching(&g).unwrap().unwrap();
            assert!(brute_is_cdm(&g, &m.edges.edges));
        }
    }
    assert!(checked > 100);
}

#[test]
fn c5_free_iff_dominating_edges_everywhere() {
    for g in connected_alpha2(2, 9) {
        if brute_alpha(&g) != 2 {
            continue;
        }
        let n = g.n();
        let everywhere = (1u32..1 << n).all(|m| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            let h = g.induced_subgraph(&vs).unwrap();
            !(h.is_connected() && brute_alpha(&h) == 2) || dominating_edge(&h).is_some()
        });
        assert_eq!(
            !brute_has_induced_c5(&g),
            everywhere,
            "{}",
            graph6::encode(&g)
        );
    }
}

#[test]
fn seagull_equivalence_on_ten_vertices() {
    for g in alpha2_graphs(10, 10) {
        if g.clique_number() == g.n() {
            continue;
        }
        for k in 1..=3 {
            let r = seagull_conditions(&g, k).unwrap();
            let packing = seagull_pack_exact(&g, k).unwrap();
            assert_eq!(
                r.all_hold(),
                packing.is_some(),
                "{} k = {k}",
                graph6::encode(&g)
            );
        }
    }
}

#[test]
fn seagull_equivalence_to_nine() {
    let w5 = wheel5();
    let mut exempt = 0;
    for g in alpha2_graphs(1, 9) {
        if brute_alpha(&g) != 2 {
            continue;
        }
        for k in 1..=3 {
            let r = seagull_conditions(&g, k).unwrap();
            let packing = seagull_pack_exact(&g, k).unwrap();
            if let Some(p) = &packing {
                assert_eq!(p.len(), k);
                assert!(p.iter().all(|&s| is_seagull(&g, s)));
            }
            if g.n() <= 8 {
                assert_eq!(packing.is_some(), brute_seagulls(&g, k));
            }
            if is_isomorphic(&g, &w5) {
                assert!(r.is_w5);
                exempt += 1;
                continue;
            }
            assert_eq!(
                r.all_hold(),
                packing.is_some(),
                "{} k = {k}",
                graph6::encode(&g)
            );
        }
    }
    assert_eq!(exempt, 3);
    let w = seagull_conditions(&w5, 2).unwrap();
    assert!(w.all_hold());
    assert!(seagull_pack_exact(&w5, 2).unwrap().is_none());
}

#[test]
fn matching_and_model_bounds_to_nine() {
    for g in alpha2_graphs(1, 9) {
        let cm = connected_matching_max(&g, None);
        let had2 = k_model_size2_max(&g, None);
        assert!(cm.exact && had2.exact);
        let (cm, had2) = (cm.value.size(), had2.value.order());
        assert!(cm <= had2);
        assert!(brute_clique_number(&g) <= had2);
        let n = g.n();
        for t in 1..=2 {
            if n + 1 >= 4 * t {
                assert!(cm >= t, "{}", graph6::encode(&g));
            }
        }
        // When the order is 4t − 1 and cm ≤ t − 1, both ω and had₂ are at most cm.
        if n % 4 == 3 && cm < n.div_ceil(4) {
            assert!(g.clique_number() <= cm);
            assert!(had2 <= cm);
        }
    }
}

#[test]
fn two_disjoint_cliques_have_small_connected_matchings() {
    for t in 1..=3 {
        let k = complete(2 * t - 1);
        let n = k.n();
        let g = Graph::from_fn(2 * n, |a, b| (a < n) == (b < n));
        assert_eq!(connected_matching_max(&g, None).value.size(), t - 1);
    }
}

fn girth5_bases() -> Vec<Graph> {
    vec![cycle(5).unwrap().complement(), petersen().complement()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn girth5_construction_verifies(which in 0usize..2, mult in proptest::collection::vec(1usize..=3, 10)) {
        let base = girth5_bases().swap_remove(which);
        let spec = InflationSpec::new(base.clone(), mult[..base.n()].to_vec()).unwrap();
        let g = inflate(&spec);
        let m = girth5_cdm_construct(&spec).unwrap();
        prop_assert!(brute_is_cdm(&g, &m.edges.edges));
    }
}

#[test]
fn girth5_construction_examples() {
    let spec = InflationSpec::uniform(cycle(5).unwrap().complement(), 2);
    let m = girth5_cdm_construct(&spec).unwrap();
    assert_eq!(m.size(), 4);
    let hs = InflationSpec::uniform(hoffman_singleton().complement(), 1);
    let m = girth5_cdm_construct(&hs).unwrap();
    assert!(brute_is_cdm(&inflate(&hs), &m.edges.edges));
    let bad = InflationSpec::uniform(cycle(4).unwrap().complement(), 1);
    assert!(girth5_cdm_construct(&bad).is_err());
}

#[test]
fn connected_perfect_matchings_on_small_graphs() {
    let k4 = complete(4);
    let m = connected_perfect_matching_search(&k4, 0, 1000)
        .unwrap()
        .unwrap();
    assert!(verify_k_model(&k4, &m));
    assert_eq!(m.order(), 2);
    let two_triangles = Graph::from_fn(6, |a, b| (a < 3) == (b < 3));
    assert!(
        connected_perfect_matching_search(&two_triangles, 0, 1000).is_err()
            || connected_perfect_matching_search(&two_triangles, 0, 1000)
                .unwrap()
                .is_none()
    );
    assert!(connected_perfect_matching_search(&complete(5), 0, 1000).is_err());
}

#[test]
fn eberhard_model_for_eleven() {
    let g = eberhard(11).unwrap().complement();
    let m = eberhard_model(11).unwrap();
    assert_eq!(m.order(), eberhard_model_order(11));
    assert_eq!(m.order(), 65);
    assert!(verify_k_model(&g, &m));
    assert_eq!(chromatic_number_alpha2(&g).unwrap(), 61);
}

#[test]
fn model_verification_rejects_broken_models() {
    let c5 = cycle(5).unwrap();
    assert!(verify_k_model(
        &c5,
        &KModel::new(vec![vec![0, 1], vec![2, 3], vec![4]])
    ));
    assert!(!verify_k_model(&c5, &KModel::new(vec![vec![0], vec![2]])));
    assert!(!verify_k_model(
        &c5,
        &KModel::new(vec![vec![0, 2], vec![1]])
    ));
    assert!(!verify_k_model(
        &c5,
        &KModel::new(vec![vec![0, 1], vec![1, 2]])
    ));
}

#[test]
fn dominating_edges_and_patterns() {
    assert_eq!(dominating_edge(&complete(3)), Some((0, 1)));
    assert_eq!(dominating_edge(&cycle(5).unwrap()), None);
    let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    assert!(dominating_edge(&star).is_some());
    let hits = unavoidable_scan(&petersen(), &[cycle(5).unwrap(), cycle(4).unwrap()]);
    assert_eq!(hits, vec![true, false]);
    assert_eq!(builtin_patterns().len(), 5);
}

/// Small graphs never survive the minimal-HC block, and `C5` is rejected
/// early; its first failing property is the pair-deletion one.
#[test]
fn screener_on_small_graphs() {
    let mut screened = 0;
    for g in connected_alpha2(2, 9) {
        if !g.alpha_at_most_two() || brute_alpha(&g) != 2 {
            continue;
        }
        let r = table1_screen(&g).unwrap();
        screened += 1;
        assert!(
            matches!(r.survival(Block::MinimalHc), Survival::Fails(_)),
            "{}",
            graph6::encode(&g)
        );
    }
    assert!(screened > 2000);
    let r = table1_screen(&cycle(5).unwrap()).unwrap();
    assert_eq!(r.failing(8), vec![4, 6, 8]);
    assert!(!is_pair_deletion_critical(&cycle(5).unwrap()).unwrap());
    let clebsch_co = hadwiger2::constructions::clebsch().complement();
    let r = table1_screen(&clebsch_co).unwrap();
    assert_eq!(r.verdict(3).status, Status::Fail);
    assert!(table1_screen(&complete(4)).is_err());
}

#[test]
fn enumeration_is_worker_independent() {
    use std::sync::Mutex;
    let collect = |workers| {
        let out = Mutex::new(Vec::new());
        let counts = enumerate_alpha2(
            EnumerateOptions {
                min_n: 1,
                max_n: 8,
                workers,
            },
            |g| out.lock().unwrap().push(graph6::encode(g)),
        )
        .unwrap();
        let mut v = out.into_inner().unwrap();
        v.sort();
        (counts, v)
    };
    assert_eq!(collect(1), collect(3));
    assert!(enumerate_alpha2(
        EnumerateOptions {
            min_n: 1,
            max_n: MAX_ENUMERATION_ORDER + 1,
            workers: 1
        },
        |_| {}
    )
    .is_err());
}

#[test]
fn matchings_from_edges_are_checked() {
    let c5 = cycle(5).unwrap();
    assert!(is_connected_dominating_matching(
        &c5,
        &Matching::new([(0, 1), (2, 3)])
    ));
    assert!(!is_connected_dominating_matching(
        &c5,
        &Matching::new([(0, 1)])
    ));
    assert!(!is_connected_dominating_matching(&c5, &Matching::new([])));
}
