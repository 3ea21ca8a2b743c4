//! Connected matchings: maximum size, connected dominating matchings, the
//! girth-five construction for inflations, and a local search for connected
//! perfect matchings.

use rand::seq::SliceRandom;
use rand::Rng as _;

use super::{
    dominating_edge, is_connected_dominating_matching, is_connected_matching, ConnectedMatching,
    KModel, Searched,
};
use crate::constructions::cycle;
use crate::error::{precondition, self_check, Result};
use crate::graph::clique::maximum_clique_budgeted;
use crate::graph::iso::find_induced_subgraph;
use crate::graph::{inflate, Bitset, Distance, Graph, InflationSpec};
use crate::matching::{maximum_matching, Matching};
use crate::rng::seeded;

/// Graphs up to this order are searched without a budget.
const EXACT_ORDER: usize = 16;

fn edges_adjacent(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
}

/// Largest connected matching.
///
/// Connected matchings are the cliques of the graph on `E(G)` joining two
/// edges when they are disjoint and adjacent, so this is a maximum clique
/// search there. Exact for `n ≤ 16`; above that `budget` caps the number of
/// search nodes.
pub fn connected_matching_max(g: &Graph, budget: Option<u64>) -> Searched<ConnectedMatching> {
    let edges = g.edges();
    let compat = Graph::from_fn(edges.len(), |i, j| {
        let (e, f) = (edges[i], edges[j]);
        e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 && edges_adjacent(g, e, f)
    });
    let budget = if g.n() <= EXACT_ORDER { None } else { budget };
    let found = maximum_clique_budgeted(&compat, budget);
    let edges = Matching::new(found.clique.iter().map(|&i| edges[i]));
    Searched {
        value: ConnectedMatching { edges },
        exact: found.exact,
    }
}

/// A non-empty connected dominating matching, or `None` if there is none.
/// For `n ≤ 16` the matching has minimum size.
pub fn connected_dominating_matching(g: &Graph) -> Result<Option<ConnectedMatching>> {
    Ok(connected_dominating_matching_budgeted(g, None)?.value)
}

/// As [`connected_dominating_matching`], giving up after `budget` search
/// nodes. When `exact` is false a `None` answer proves nothing.
///
/// Iterative deepening on the matching size `t`. Vertices outside `V(M)`
/// that miss some edge of the partial matching `M` must themselves be
/// matched later, so the search always branches on the smallest such
/// vertex and prunes when more than `2·(t − |M|)` of them remain.
///
/// Above 16 vertices a local search for a connected matching that leaves
/// at most one vertex uncovered runs first; the budget does not count it.
pub fn connected_dominating_matching_budgeted(
    g: &Graph,
    budget: Option<u64>,
) -> Result<Searched<Option<ConnectedMatching>>> {
    if g.n() < 2 || !g.is_connected() {
        return Err(precondition("connected dominating matchings are sought in connected graphs with at least two vertices"));
    }
    if !g.alpha_at_most_two() {
        return Err(precondition(
            "connected dominating matchings are sought in graphs with α ≤ 2",
        ));
    }
    if let Some(e) = dominating_edge(g) {
        return Ok(Searched {
            value: Some(ConnectedMatching {
                edges: Matching::new([e]),
            }),
            exact: true,
        });
    }
    if g.n() > EXACT_ORDER {
        if let Some(pairs) = near_perfect_cdm(g) {
            let edges = Matching::new(pairs);
            if !is_connected_dominating_matching(g, &edges) {
                return Err(self_check(
                    "near-perfect matching search returned an invalid witness",
                ));
            }
            return Ok(Searched {
                value: Some(ConnectedMatching { edges }),
                exact: true,
            });
        }
    }
    let mut s = CdmSearch {
        g,
        chosen: Vec::new(),
        nodes: 0,
        budget,
        aborted: false,
    };
    for t in 2..=g.n() / 2 {
        if s.first_edge(t) {
            let edges = Matching::new(s.chosen.clone());
            if !is_connected_dominating_matching(g, &edges) {
                return Err(self_check(
                    "connected dominating matching search returned an invalid witness",
                ));
            }
            return Ok(Searched {
                value: Some(ConnectedMatching { edges }),
                exact: true,
            });
        }
        if s.aborted {
            return Ok(Searched {
                value: None,
                exact: false,
            });
        }
    }
    Ok(Searched {
        value: None,
        exact: true,
    })
}

struct CdmSearch<'g> {
    g: &'g Graph,
    chosen: Vec<(usize, usize)>,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
}

impl CdmSearch<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.aborted = true;
        }
        !self.aborted
    }

    fn first_edge(&mut self, t: usize) -> bool {
        let g = self.g;
        for (u, v) in g.edges() {
            let mut used = Bitset::new(g.n());
            used.insert(u);
            used.insert(v);
            let mut dominated = g.neighbor_set(u);
            dominated.union_with(g.row(v));
            self.chosen.push((u, v));
            if self.extend(t, &used, &dominated) {
                return true;
            }
            self.chosen.pop();
            if self.aborted {
                return false;
            }
        }
        false
    }

    /// `dominated` holds the vertices adjacent to every chosen edge.
    fn extend(&mut self, t: usize, used: &Bitset, dominated: &Bitset) -> bool {
        if !self.tick() {
            return false;
        }
        let g = self.g;
        let mut need = g.vertex_set();
        need.difference_with(used.words());
        need.difference_with(dominated.words());
        let Some(v) = need.first() else { return true };
        if need.len() > 2 * (t - self.chosen.len()) {
            return false;
        }
        for u in g.neighbors(v) {
            if used.contains(u) || !self.chosen.iter().all(|&f| edges_adjacent(g, (v, u), f)) {
                continue;
            }
            let mut used2 = used.clone();
            used2.insert(u);
            used2.insert(v);
            let mut cover = g.neighbor_set(u);
            cover.union_with(g.row(v));
            let mut dominated2 = dominated.clone();
            dominated2.intersect_with(cover.words());
            self.chosen.push((v.min(u), v.max(u)));
            if self.extend(t, &used2, &dominated2) {
                return true;
            }
            self.chosen.pop();
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Builds a connected dominating matching of `inflate(spec)` when the
/// complement of the base graph has girth at least five.
///
/// If the support of the inflation has no induced 5-cycle, the inflation
/// has none either and a dominating edge exists. Otherwise take an induced
/// 5-cycle `a b c d e` of the support with `|C_a|` smallest and
/// `|C_c| ≤ |C_d|`; every other support vertex sees at least four cycle
/// vertices, so matching `C_a` into `C_e` and `C_c` into `C_d` gives a
/// connected dominating matching. The result is verified before returning.
pub fn girth5_cdm_construct(spec: &InflationSpec) -> Result<ConnectedMatching> {
    let base = spec.base();
    match base.complement().girth() {
        Distance::Finite(g) if g < 5 => {
            return Err(precondition(format!(
                "complement of the base graph has girth {g} < 5"
            )))
        }
        _ => {}
    }
    let g = inflate(spec);
    if g.n() < 2 || !g.is_connected() {
        return Err(precondition(
            "the inflation must be connected with at least two vertices",
        ));
    }
    let support: Vec<usize> = (0..base.n()).filter(|&x| spec.mult()[x] > 0).collect();
    let h = base.induced_subgraph(&support)?;
    let edges = match find_induced_subgraph(&h, &cycle(5)?) {
        None => {
            let e = dominating_edge(&g)
                .ok_or_else(|| self_check("5-cycle-free inflation without a dominating edge"))?;
            Matching::new([e])
        }
        Some(map) => {
            let c: Vec<usize> = map.iter().map(|&i| support[i]).collect();
            let size = |x: usize| spec.mult()[x];
            let start = (0..5)
                .min_by_key(|&i| (size(c[i]), i))
                .expect("five vertices");
            let forward = |k: usize| c[(start + k) % 5];
            let backward = |k: usize| c[(start + 5 - k) % 5];
            let [a, _, cc, d, e] = if size(forward(2)) <= size(forward(3)) {
                [0, 1, 2, 3, 4].map(forward)
            } else {
                [0, 1, 2, 3, 4].map(backward)
            };
            let pair = |x: usize, y: usize| spec.copies(x).zip(spec.copies(y)).collect::<Vec<_>>();
            Matching::new(pair(a, e).into_iter().chain(pair(cc, d)))
        }
    };
    if !is_connected_dominating_matching(&g, &edges) {
        return Err(self_check(
            "constructed matching is not a connected dominating matching",
        ));
    }
    Ok(ConnectedMatching { edges })
}

/// Local-search moves spent on each uncovered-vertex choice in
/// [`near_perfect_cdm`].
const NEAR_PERFECT_MOVES: u64 = 100_000;

/// A connected matching covering all vertices but at most one, `u`, with
/// every matching edge having an endpoint adjacent to `u`; such a matching
/// is dominating. Tries each `u` in turn when `n` is odd. Seeded with 0.
fn near_perfect_cdm(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    let mut rng = seeded(0);
    if n % 2 == 0 {
        return connected_perfect_matching_core(g, g, &mut rng, NEAR_PERFECT_MOVES);
    }
    for u in 0..n {
        let keep: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        let sub = g.remove_vertices(&[u]);
        let allowed = Graph::from_fn(n - 1, |i, j| {
            sub.has_edge(i, j) && (g.has_edge(u, keep[i]) || g.has_edge(u, keep[j]))
        });
        if let Some(pairs) =
            connected_perfect_matching_core(&sub, &allowed, &mut rng, NEAR_PERFECT_MOVES)
        {
            return Some(pairs.into_iter().map(|(a, b)| (keep[a], keep[b])).collect());
        }
    }
    None
}

/// Local-search moves without improvement before a restart.
const RESTART_STALL: u64 = 200_000;

/// Looks for a perfect matching whose edges are pairwise adjacent, which is
/// a complete-graph model with `n/2` branch sets of size two.
///
/// Each run starts from a maximum matching of a randomly relabelled copy of
/// `g` and repeatedly swaps the partners of two matched pairs, preferring
/// pairs that conflict (are not joined by an edge), accepting a swap when
/// the number of conflicting pairs does not increase. A run restarts after
/// 200000 moves without a new best. `budget` bounds the total number of
/// moves. The witness is verified before it is returned.
pub fn connected_perfect_matching_search(
    g: &Graph,
    seed: u64,
    budget: u64,
) -> Result<Option<KModel>> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(precondition(
            "connected perfect matchings need an even number of vertices",
        ));
    }
    if !g.alpha_at_most_two() {
        return Err(precondition(
            "connected perfect matching search expects α ≤ 2",
        ));
    }
    if n == 0 || !g.is_connected() {
        return Ok(None);
    }
    let Some(pairs) = connected_perfect_matching_core(g, g, &mut seeded(seed), budget) else {
        return Ok(None);
    };
    if !is_connected_matching(g, &Matching::new(pairs.iter().copied())) {
        return Err(self_check("local search produced a disconnected matching"));
    }
    Ok(Some(KModel::new(
        pairs.iter().map(|&(a, b)| vec![a, b]).collect(),
    )))
}

/// The local search behind [`connected_perfect_matching_search`]: matching
/// edges come from `allowed`, a spanning subgraph of `g`, while adjacency
/// between pairs is measured in `g`.
fn connected_perfect_matching_core(
    g: &Graph,
    allowed: &Graph,
    rng: &mut crate::rng::Rng,
    budget: u64,
) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    let mut moves = 0u64;
    while moves < budget {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut inv = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let m = maximum_matching(&allowed.permute(&perm));
        if 2 * m.size() < n {
            return None;
        }
        let pairs: Vec<(usize, usize)> = m.edges.iter().map(|&(a, b)| (inv[a], inv[b])).collect();
        let mut run = LocalSearch::new(g, allowed, pairs);
        let mut best = run.total;
        let mut stall = 0;
        while run.total > 0 && moves < budget && stall < RESTART_STALL {
            moves += 1;
            stall += 1;
            run.step(rng);
            if run.total < best {
                best = run.total;
                stall = 0;
            }
        }
        if run.total == 0 {
            return Some(run.pairs);
        }
    }
    None
}

struct LocalSearch<'g> {
    g: &'g Graph,
    allowed: &'g Graph,
    pairs: Vec<(usize, usize)>,
    /// `conflicts[i]`: pairs not joined to pair `i` by an edge.
    conflicts: Vec<usize>,
    total: usize,
}

impl<'g> LocalSearch<'g> {
    fn new(g: &'g Graph, allowed: &'g Graph, pairs: Vec<(usize, usize)>) -> LocalSearch<'g> {
        let m = pairs.len();
        let mut conflicts = vec![0; m];
        for i in 0..m {
            for j in i + 1..m {
                if !edges_adjacent(g, pairs[i], pairs[j]) {
                    conflicts[i] += 1;
                    conflicts[j] += 1;
                }
            }
        }
        let total = conflicts.iter().sum::<usize>() / 2;
        LocalSearch {
            g,
            allowed,
            pairs,
            conflicts,
            total,
        }
    }

    fn conflicts_with_rest(&self, e: (usize, usize), skip: [usize; 2]) -> usize {
        (0..self.pairs.len())
            .filter(|k| !skip.contains(k) && !edges_adjacent(self.g, e, self.pairs[*k]))
            .count()
    }

    fn step(&mut self, rng: &mut crate::rng::Rng) {
        let m = self.pairs.len();
        if m < 2 {
            return;
        }
        let bad: Vec<usize> = (0..m).filter(|&i| self.conflicts[i] > 0).collect();
        let i = bad[rng.gen_range(0..bad.len())];
        let mut j = rng.gen_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let ((a, b), (c, d)) = (self.pairs[i], self.pairs[j]);
        let (e, f) = if rng.gen_bool(0.5) {
            ((a, c), (b, d))
        } else {
            ((a, d), (b, c))
        };
        if !self.allowed.has_edge(e.0, e.1) || !self.allowed.has_edge(f.0, f.1) {
            return;
        }
        let before = self.conflicts[i] + self.conflicts[j]
            - usize::from(!edges_adjacent(self.g, self.pairs[i], self.pairs[j]));
        let after = self.conflicts_with_rest(e, [i, j])
            + self.conflicts_with_rest(f, [i, j])
            + usize::from(!edges_adjacent(self.g, e, f));
        if after > before {
            return;
        }
        self.replace(i, j, e, f);
    }

    fn replace(&mut self, i: usize, j: usize, e: (usize, usize), f: (usize, usize)) {
        let g = self.g;
        for k in 0..self.pairs.len() {
            if k == i || k == j {
                continue;
            }
            for (idx, new) in [(i, e), (j, f)] {
                let old_bad = !edges_adjacent(g, self.pairs[idx], self.pairs[k]);
                let new_bad = !edges_adjacent(g, new, self.pairs[k]);
                if old_bad != new_bad {
                    if new_bad {
                        self.conflicts[k] += 1;
                    } else {
                        self.conflicts[k] -= 1;
                    }
                }
            }
        }
        self.pairs[i] = e;
        self.pairs[j] = f;
        let mutual = usize::from(!edges_adjacent(g, e, f));
        self.conflicts[i] = self.conflicts_with_rest(e, [i, j]) + mutual;
        self.conflicts[j] = self.conflicts_with_rest(f, [i, j]) + mutual;
        self.total = self.conflicts.iter().sum::<usize>() / 2;
    }
}
