//! Cliques: exact maximum-clique branch and bound, maximal-clique and
//! all-clique enumeration.

use super::{Bitset, Graph};

/// Result of a (possibly budget-limited) maximum clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSearch {
    /// Largest clique found, sorted.
    pub clique: Vec<usize>,
    /// True when the search finished, so `clique` is maximum.
    pub exact: bool,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

/// Exact maximum clique (sorted vertex list).
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    maximum_clique_budgeted(g, None).clique
}

/// Maximum clique search that gives up after `budget` search-tree nodes.
///
/// Branch and bound in the style of Tomita's MCQ: vertices are relabelled in
/// degeneracy order, and a greedy colouring of the candidate set bounds the
/// size of any extension.
pub fn maximum_clique_budgeted(g: &Graph, budget: Option<u64>) -> CliqueSearch {
    let n = g.n();
    if n == 0 {
        return CliqueSearch {
            clique: Vec::new(),
            exact: true,
            nodes: 0,
        };
    }
    let order = degeneracy_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let h = g.permute(&pos);
    let mut search = Search {
        g: &h,
        best: greedy_clique(&h),
        nodes: 0,
        budget,
        aborted: false,
    };
    let mut current = Vec::new();
    search.expand(&mut current, h.vertex_set());
    let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    CliqueSearch {
        clique,
        exact: !search.aborted,
        nodes: search.nodes,
    }
}

/// Colours used by a first-fit colouring in degeneracy order, an upper
/// bound on the clique number.
pub fn colouring_bound(g: &Graph) -> usize {
    let order = degeneracy_order(g);
    let mut classes: Vec<Bitset> = Vec::new();
    for &v in order.iter().rev() {
        match classes
            .iter_mut()
            .find(|c| c.intersection_len(g.row(v)) == 0)
        {
            Some(c) => c.insert(v),
            None => {
                let mut c = Bitset::new(g.n());
                c.insert(v);
                classes.push(c);
            }
        }
    }
    classes.len()
}

/// Vertices ordered so that each has maximum degree among those remaining
/// after deleting the later ones (reverse of repeated min-degree removal).
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut rev = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
            .unwrap();
        removed[v] = true;
        rev.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    rev.reverse();
    rev
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut cand = g.vertex_set();
    let mut clique = Vec::new();
    while let Some(v) = cand
        .iter()
        .max_by_key(|&v| (cand.intersection_len(g.row(v)), std::cmp::Reverse(v)))
    {
        clique.push(v);
        cand.intersect_with(g.row(v));
    }
    clique
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
}

impl Search<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut cand: Bitset) {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.aborted = true;
            return;
        }
        let kmin = (self.best.len() + 1).saturating_sub(current.len());
        let (order, colors) = color_sort(self.g, &cand, kmin);
        for i in (0..order.len()).rev() {
            if current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(self.g.row(v));
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.remove(v);
            if self.aborted {
                return;
            }
        }
    }
}

/// Greedy colouring of `cand`, one maximal class at a time, followed by
/// re-numbering: a vertex in a class `≥ kmin` moves into a lower class
/// when its single conflicting neighbour there can move to another low
/// class. Returns the vertices left in classes `≥ kmin` in colour order with
/// their colours (starting at 1); lower classes cannot beat the incumbent.
fn color_sort(g: &Graph, cand: &Bitset, kmin: usize) -> (Vec<usize>, Vec<usize>) {
    let w = g.words();
    // Colour classes packed `w` words each.
    let mut classes: Vec<u64> = Vec::with_capacity(w * 8);
    let mut uncolored = cand.clone();
    while !uncolored.is_empty() {
        let k = classes.len() / w;
        classes.resize(classes.len() + w, 0);
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(g.row(v));
            uncolored.remove(v);
            classes[k * w + v / 64] |= 1 << (v % 64);
        }
    }
    let count = classes.len() / w;
    let low = kmin.saturating_sub(1).min(count);
    let hits = |classes: &[u64], k: usize, row: &[u64]| -> usize {
        classes[k * w..(k + 1) * w]
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    };
    let mut order = Vec::with_capacity(cand.len());
    let mut colors = Vec::with_capacity(cand.len());
    for k in low..count {
        let members: Vec<usize> = super::Ones::new(&classes[k * w..(k + 1) * w]).collect();
        'vertex: for v in members {
            let row = g.row(v);
            for k1 in 0..low {
                if hits(&classes, k1, row) != 1 {
                    continue;
                }
                let u = (0..w)
                    .find_map(|i| {
                        let x = classes[k1 * w + i] & row[i];
                        (x != 0).then(|| i * 64 + x.trailing_zeros() as usize)
                    })
                    .unwrap();
                if let Some(k2) = (k1 + 1..low).find(|&k2| hits(&classes, k2, g.row(u)) == 0) {
                    classes[k1 * w + u / 64] ^= 1 << (u % 64);
                    classes[k2 * w + u / 64] |= 1 << (u % 64);
                    classes[k1 * w + v / 64] |= 1 << (v % 64);
                    continue 'vertex;
                }
            }
            order.push(v);
            colors.push(k + 1);
        }
    }
    // Classes may have emptied; renumber the survivors densely.
    let mut dense = Vec::with_capacity(colors.len());
    let (mut last, mut next) = (usize::MAX, low);
    for &c in &colors {
        if c != last {
            last = c;
            next += 1;
        }
        dense.push(next);
    }
    (order, dense)
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, g.vertex_set(), Bitset::new(g.n()), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Bitset,
    mut x: Bitset,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_len(g.row(u)))
        .unwrap();
    let mut branch = p.clone();
    branch.difference_with(g.row(pivot));
    for v in branch.iter() {
        r.push(v);
        let mut np = p.clone();
        np.intersect_with(g.row(v));
        let mut nx = x.clone();
        nx.intersect_with(g.row(v));
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Calls `f` on every non-empty clique (sorted) until it returns `false`.
/// Returns whether the enumeration ran to completion.
pub fn for_each_clique(g: &Graph, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        g: &Graph,
        current: &mut Vec<usize>,
        cand: Bitset,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        for v in cand.iter() {
            current.push(v);
            if !f(current) {
                return false;
            }
            let mut next = cand.clone();
            next.intersect_with(g.row(v));
            // Only extend with larger vertices so each clique appears once.
            for u in 0..=v {
                next.remove(u);
            }
            if !rec(g, current, next, f) {
                return false;
            }
            current.pop();
        }
        true
    }
    rec(g, &mut Vec::new(), g.vertex_set(), &mut f)
}

pub fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && g.has_edge(u, v)))
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

impl Graph {
    pub fn clique_number(&self) -> usize {
        maximum_clique(self).len()
    }

    pub fn independence_number(&self) -> usize {
        maximum_clique(&self.complement()).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_omega(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| {
                let s: Vec<usize> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
                is_clique(g, &s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn pseudo_random_graph(seed: u64, n: usize, density: u64) -> Graph {
        let mut s = seed;
        Graph::from_fn(n, |_, _| {
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (s >> 33) % 100 < density
        })
    }

    #[test]
    fn matches_brute_force() {
        for seed in 0..150 {
            let g = pseudo_random_graph(seed, 3 + (seed as usize % 11), 20 + seed % 70);
            let c = maximum_clique(&g);
            assert!(is_clique(&g, &c));
            assert_eq!(c.len(), brute_omega(&g), "{g:?}");
        }
    }

    #[test]
    fn budget_flag() {
        let g = pseudo_random_graph(7, 60, 50);
        let r = maximum_clique_budgeted(&g, Some(1));
        assert!(!r.exact);
        assert!(is_clique(&g, &r.clique));
        assert!(maximum_clique_budgeted(&g, None).exact);
    }

    #[test]
    fn maximal_cliques_of_c5_and_k4_minus_edge() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(
            maximal_cliques(&c5),
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        let g = Graph::complete(4).remove_edge(0, 1);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn all_cliques_count() {
        let mut count = 0;
        assert!(for_each_clique(&Graph::complete(5), |_| {
            count += 1;
            true
        }));
        assert_eq!(count, 31);
        let mut seen = 0;
        assert!(!for_each_clique(&Graph::complete(5), |_| {
            seen += 1;
            seen < 3
        }));
    }
}
