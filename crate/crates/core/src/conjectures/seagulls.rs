//! Seagulls (induced three-vertex paths) and the criterion for `k`
//! vertex-disjoint ones in graphs with independence number two.

use crate::error::{domain, Result};
use crate::graph::clique::{for_each_clique, maximal_cliques};
use crate::graph::iso::is_isomorphic;
use crate::graph::{Bitset, Graph};
use crate::matching::matching_number;

/// Above this order condition 3 is checked on maximal cliques only.
const ALL_CLIQUES_ORDER: usize = 16;

/// The 5-wheel: a 5-cycle `0..5` plus hub `5`.
pub fn wheel5() -> Graph {
    Graph::from_edges(6, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5)])).expect("valid edges")
}

/// `[a, b, c]` with `ab, bc ∈ E` and `ac ∉ E`.
pub fn is_seagull(g: &Graph, [a, b, c]: [usize; 3]) -> bool {
    a != c && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c)
}

/// The four conditions for `k` disjoint seagulls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeagullReport {
    pub k: usize,
    /// (1) `|V| ≥ 3k`.
    pub order: bool,
    /// (2) `κ(G) ≥ k`.
    pub connectivity: bool,
    pub kappa: usize,
    /// (3) for each clique `C`, `|D| + |V ∖ C| ≥ 2k`, where `D` is the set of
    /// vertices outside `C` with both a neighbour and a non-neighbour in `C`.
    pub cliques: bool,
    /// A clique violating (3), if any was found.
    pub violating_clique: Option<Vec<usize>>,
    /// False when (3) was only checked on maximal cliques.
    pub cliques_exhaustive: bool,
    /// (4) `μ(Ḡ) ≥ k`.
    pub matching: bool,
    pub complement_matching: usize,
    /// `G ≅ W5`, where the criterion does not apply.
    pub is_w5: bool,
}

impl SeagullReport {
    pub fn all_hold(&self) -> bool {
        self.order && self.connectivity && self.cliques && self.matching
    }
}

fn require_alpha2(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    if !g.alpha_at_most_two() || g.n() == g.clique_number() {
        return Err(domain(
            "seagull criterion needs independence number exactly 2",
        ));
    }
    Ok(())
}

fn clique_condition_holds(g: &Graph, c: &[usize], k: usize) -> bool {
    let inside = Bitset::from_iter_with_capacity(g.n(), c.iter().copied());
    let d = (0..g.n())
        .filter(|&v| !inside.contains(v))
        .filter(|&v| {
            let hits = inside.intersection_len(g.row(v));
            hits > 0 && hits < c.len()
        })
        .count();
    d + (g.n() - c.len()) >= 2 * k
}

pub fn seagull_conditions(g: &Graph, k: usize) -> Result<SeagullReport> {
    require_alpha2(g, k)?;
    let kappa = g.vertex_connectivity()?;
    let mu = matching_number(&g.complement());
    let exhaustive = g.n() <= ALL_CLIQUES_ORDER;
    let mut violating = (!clique_condition_holds(g, &[], k)).then(Vec::new);
    if violating.is_none() {
        if exhaustive {
            for_each_clique(g, |c| {
                if clique_condition_holds(g, c, k) {
                    true
                } else {
                    violating = Some(c.to_vec());
                    false
                }
            });
        } else {
            violating = maximal_cliques(g)
                .into_iter()
                .find(|c| !clique_condition_holds(g, c, k));
        }
    }
    Ok(SeagullReport {
        k,
        order: g.n() >= 3 * k,
        connectivity: kappa >= k,
        kappa,
        cliques: violating.is_none(),
        violating_clique: violating,
        cliques_exhaustive: exhaustive,
        matching: mu >= k,
        complement_matching: mu,
        is_w5: g.n() == 6 && is_isomorphic(g, &wheel5()),
    })
}

/// `k` vertex-disjoint seagulls, each as `[end, middle, end]`, by
/// backtracking: the smallest unused vertex is either left out or put in a
/// seagull with two larger unused vertices.
pub fn seagull_pack_exact(g: &Graph, k: usize) -> Result<Option<Vec<[usize; 3]>>> {
    require_alpha2(g, k)?;
    fn rec(g: &Graph, k: usize, from: usize, used: &mut Bitset, out: &mut Vec<[usize; 3]>) -> bool {
        if out.len() == k {
            return true;
        }
        let free = (from..g.n()).filter(|&v| !used.contains(v)).count();
        if free < 3 * (k - out.len()) {
            return false;
        }
        let v = (from..g.n())
            .find(|&v| !used.contains(v))
            .expect("free vertices remain");
        used.insert(v);
        let others: Vec<usize> = (v + 1..g.n()).filter(|&u| !used.contains(u)).collect();
        for (i, &x) in others.iter().enumerate() {
            for &y in &others[i + 1..] {
                let gull = [[x, v, y], [v, x, y], [v, y, x]]
                    .into_iter()
                    .find(|&s| is_seagull(g, s));
                if let Some(s) = gull {
                    used.insert(x);
                    used.insert(y);
                    out.push(s);
                    if rec(g, k, v + 1, used, out) {
                        return true;
                    }
                    out.pop();
                    used.remove(x);
                    used.remove(y);
                }
            }
        }
        used.remove(v);
        // Leave v out of every seagull.
        used.insert(v);
        let found = rec(g, k, v + 1, used, out);
        used.remove(v);
        found
    }
    let mut out = Vec::new();
    Ok(rec(g, k, 0, &mut Bitset::new(g.n()), &mut out).then_some(out))
}
