//! Good/bad edge partitions from clique certificates with bound below 3.

use super::{verify_certificate, CliqueFamilyCertificate};
use crate::error::{precondition, self_check, Result};
use crate::graph::clique::maximum_clique;
use crate::graph::Graph;
use crate::matching::Matching;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodBadPartition {
    pub good: Vec<(usize, usize)>,
    pub bad: Vec<(usize, usize)>,
    pub source: CliqueFamilyCertificate,
}

/// Edge `uv` is good when more than half of the `r` cliques contain `u` or
/// `v`, bad otherwise. The two partition properties are checked on return:
/// disjoint good edges are joined by an edge, and bad edges `uv`, `vw`
/// force `uw ∈ E`.
pub fn good_bad_partition(g: &Graph, c: &CliqueFamilyCertificate) -> Result<GoodBadPartition> {
    if c.bound >= Rational::from(3) {
        return Err(precondition(
            "good/bad partitions need a certificate bound below 3",
        ));
    }
    if !g.alpha_at_most_two() {
        return Err(precondition("good/bad partitions need α ≤ 2"));
    }
    if !verify_certificate(g, c)? {
        return Err(precondition("certificate does not verify"));
    }
    let r = c.r();
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for (u, v) in g.edges() {
        let n_uv = c
            .cliques
            .iter()
            .filter(|x| x.binary_search(&u).is_ok() || x.binary_search(&v).is_ok())
            .count();
        if 2 * n_uv > r {
            good.push((u, v));
        } else {
            bad.push((u, v));
        }
    }
    let p = GoodBadPartition {
        good,
        bad,
        source: c.clone(),
    };
    let (one, two) = partition_properties(g, &p);
    if !(one && two) {
        return Err(self_check(
            "good/bad partition violates its defining properties",
        ));
    }
    Ok(p)
}

fn edges_adjacent(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
}

/// Returns whether (1) any two vertex-disjoint good edges are adjacent and
/// (2) any two bad edges `uv`, `vw` have `uw ∈ E`.
pub fn partition_properties(g: &Graph, p: &GoodBadPartition) -> (bool, bool) {
    let one = p.good.iter().enumerate().all(|(i, &e)| {
        p.good[i + 1..].iter().all(|&f| {
            let disjoint = e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
            !disjoint || edges_adjacent(g, e, f)
        })
    });
    let two = p.bad.iter().enumerate().all(|(i, &(a, b))| {
        p.bad[i + 1..].iter().all(|&(c, d)| {
            let (x, y) = match () {
                _ if a == c => (b, d),
                _ if a == d => (b, c),
                _ if b == c => (a, d),
                _ if b == d => (a, c),
                _ => return true,
            };
            g.has_edge(x, y)
        })
    });
    (one, two)
}

/// The first of the four alternatives that holds for an even-order graph
/// with a good/bad partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoodBadOutcome {
    /// (a) a dominating edge.
    DominatingEdge(usize, usize),
    /// (b) `κ(G) ≤ |V|/2`.
    LowConnectivity(usize),
    /// (c) a clique of size at least `|V|/2`.
    LargeClique(Vec<usize>),
    /// (d) a connected perfect matching of good edges.
    GoodConnectedMatching(Matching),
    /// None found; for `n > 16` the matching search is budgeted.
    Undetermined,
}

impl GoodBadOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            GoodBadOutcome::DominatingEdge(..) => "a",
            GoodBadOutcome::LowConnectivity(_) => "b",
            GoodBadOutcome::LargeClique(_) => "c",
            GoodBadOutcome::GoodConnectedMatching(_) => "d",
            GoodBadOutcome::Undetermined => "none",
        }
    }
}

const MATCHING_BUDGET: u64 = 5_000_000;

pub fn classify_good_bad_outcome(g: &Graph, p: &GoodBadPartition) -> Result<GoodBadOutcome> {
    let n = g.n();
    if n % 2 == 1 || n == 0 {
        return Err(precondition(
            "outcome classification needs a non-empty graph of even order",
        ));
    }
    if !g.alpha_at_most_two() {
        return Err(precondition("outcome classification needs α ≤ 2"));
    }
    if let Some((x, y)) = g
        .edges()
        .into_iter()
        .find(|&(x, y)| g.is_dominating_edge(x, y))
    {
        return Ok(GoodBadOutcome::DominatingEdge(x, y));
    }
    let kappa = g.vertex_connectivity()?;
    if 2 * kappa <= n {
        return Ok(GoodBadOutcome::LowConnectivity(kappa));
    }
    let omega = maximum_clique(g);
    if 2 * omega.len() >= n {
        return Ok(GoodBadOutcome::LargeClique(omega));
    }
    let budget = if n <= 16 { None } else { Some(MATCHING_BUDGET) };
    Ok(match connected_perfect_matching_in(g, &p.good, budget) {
        Some(m) => GoodBadOutcome::GoodConnectedMatching(m),
        None => GoodBadOutcome::Undetermined,
    })
}

/// Backtracking over the lowest unmatched vertex for a perfect matching
/// using only `allowed` edges whose edges are pairwise adjacent.
fn connected_perfect_matching_in(
    g: &Graph,
    allowed: &[(usize, usize)],
    budget: Option<u64>,
) -> Option<Matching> {
    let n = g.n();
    let mut ok = vec![vec![false; n]; n];
    for &(u, v) in allowed {
        ok[u][v] = true;
        ok[v][u] = true;
    }
    struct St<'a> {
        g: &'a Graph,
        ok: Vec<Vec<bool>>,
        mate: Vec<usize>,
        chosen: Vec<(usize, usize)>,
        nodes: u64,
        budget: Option<u64>,
    }
    fn rec(s: &mut St) -> bool {
        s.nodes += 1;
        if s.budget.is_some_and(|b| s.nodes > b) {
            return false;
        }
        let Some(v) = (0..s.g.n()).find(|&v| s.mate[v] == usize::MAX) else {
            return true;
        };
        for u in v + 1..s.g.n() {
            if s.mate[u] != usize::MAX || !s.ok[v][u] {
                continue;
            }
            if !s.chosen.iter().all(|&f| edges_adjacent(s.g, (v, u), f)) {
                continue;
            }
            s.mate[v] = u;
            s.mate[u] = v;
            s.chosen.push((v, u));
            if rec(s) {
                return true;
            }
            s.chosen.pop();
            s.mate[v] = usize::MAX;
            s.mate[u] = usize::MAX;
        }
        false
    }
    let mut s = St {
        g,
        ok,
        mate: vec![usize::MAX; n],
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    rec(&mut s).then(|| Matching::new(s.chosen))
}
