//! Maximum matchings (Edmonds' blossom algorithm) and the chromatic number
//! of graphs with independence number at most two.
//!
//! If `α(G) ≤ 2`, every colour class has at most two vertices, and a
//! colouring with `χ` classes is exactly a matching of size `n − χ` in the
//! complement; hence `χ(G) = n − μ(Ḡ)`.

use std::collections::VecDeque;

use crate::error::{domain, Result};
use crate::graph::{Bitset, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, stored as sorted pairs `(u, v)`, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Matching {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `V(M)`.
    pub fn vertices(&self, n: usize) -> Bitset {
        Bitset::from_iter_with_capacity(n, self.edges.iter().flat_map(|&(u, v)| [u, v]))
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = Bitset::new(g.n());
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used.contains(u) || used.contains(v)
            {
                return false;
            }
            used.insert(u);
            used.insert(v);
        }
        true
    }
}

/// Edmonds' algorithm on the subgraph induced by `active`.
pub(crate) struct Blossom<'g> {
    g: &'g Graph,
    active: Bitset,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'g> Blossom<'g> {
    pub(crate) fn new(g: &'g Graph, active: Bitset) -> Blossom<'g> {
        let n = g.n();
        Blossom {
            g,
            active,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    /// Greedy start followed by one augmenting search per exposed vertex.
    pub(crate) fn solve(&mut self) -> usize {
        let verts = self.active.to_vec();
        for &v in &verts {
            if self.mate[v] == NONE {
                let free = self.active_neighbors(v).find(|&u| self.mate[u] == NONE);
                if let Some(u) = free {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for &v in &verts {
            if self.mate[v] == NONE {
                self.augment_from(v);
            }
        }
        self.size()
    }

    pub(crate) fn size(&self) -> usize {
        self.active.iter().filter(|&v| self.mate[v] != NONE).count() / 2
    }

    pub(crate) fn mate(&self) -> &[usize] {
        &self.mate
    }

    pub(crate) fn matching(&self) -> Matching {
        Matching::new(
            self.active
                .iter()
                .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
                .map(|v| (v, self.mate[v])),
        )
    }

    /// Removes `v` from the active set, unmatching its partner.
    pub(crate) fn deactivate(&mut self, v: usize) {
        let u = self.mate[v];
        if u != NONE {
            self.mate[u] = NONE;
            self.mate[v] = NONE;
        }
        self.active.remove(v);
    }

    fn active_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .neighbors(v)
            .filter(move |&u| self.active.contains(u))
    }

    /// Augments along an alternating path from the exposed vertex `root`.
    pub(crate) fn augment_from(&mut self, root: usize) -> bool {
        let Some(mut v) = self.find_path(root) else {
            return false;
        };
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
        true
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let nbrs: Vec<usize> = self.active_neighbors(v).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }
}

pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g, g.vertex_set());
    b.solve();
    b.matching()
}

/// `μ(G)`.
pub fn matching_number(g: &Graph) -> usize {
    Blossom::new(g, g.vertex_set()).solve()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n() % 2 == 0 && 2 * matching_number(g) == g.n()
}

/// `μ(G − v)` for every vertex `v`, from one maximum matching plus one
/// augmenting search per matched vertex.
pub fn deletion_matching_numbers(g: &Graph) -> Vec<usize> {
    let mut b = Blossom::new(g, g.vertex_set());
    let mu = b.solve();
    let mate = b.mate().to_vec();
    (0..g.n())
        .map(|v| {
            let u = mate[v];
            if u == NONE {
                return mu;
            }
            let mut local = Blossom::new(g, g.vertex_set());
            local.mate.copy_from_slice(&mate);
            local.deactivate(v);
            if local.augment_from(u) {
                mu
            } else {
                mu - 1
            }
        })
        .collect()
}

/// Every vertex-deleted subgraph has a perfect matching.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.n();
    n % 2 == 1 && deletion_matching_numbers(g).iter().all(|&m| 2 * m == n - 1)
}

fn require_alpha2(g: &Graph) -> Result<()> {
    if g.alpha_at_most_two() {
        Ok(())
    } else {
        Err(domain("graph has independence number at least 3"))
    }
}

/// `χ(G) = |V| − μ(Ḡ)`, valid when `α(G) ≤ 2`.
pub fn chromatic_number_alpha2(g: &Graph) -> Result<usize> {
    require_alpha2(g)?;
    Ok(g.n() - matching_number(&g.complement()))
}

/// Whether `χ(G − v) < χ(G)` for every vertex, for `α(G) ≤ 2`.
///
/// With the matching formula this says every vertex is missed by some
/// maximum matching of the complement.
pub fn is_vertex_critical_alpha2(g: &Graph) -> Result<bool> {
    require_alpha2(g)?;
    let h = g.complement();
    let mu = matching_number(&h);
    Ok(deletion_matching_numbers(&h).iter().all(|&m| m == mu))
}
