//! Induced-subgraph and graph isomorphism by backtracking.

use super::{Bitset, Graph};

/// An injective map `pattern vertex -> host vertex` preserving both
/// adjacency and non-adjacency, if one exists.
pub fn find_induced_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    Matcher::new(host, pattern, false).run()
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced_subgraph(host, pattern).is_some()
}

/// A bijection `a vertex -> b vertex` that is an isomorphism, if any.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    Matcher::new(b, a, true).run()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    exact_degree: bool,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Bitset,
    host_degree: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, exact_degree: bool) -> Self {
        Matcher {
            host,
            pattern,
            exact_degree,
            order: search_order(pattern),
            map: vec![usize::MAX; pattern.n()],
            used: Bitset::new(host.n()),
            host_degree: host.degrees(),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.pattern.n() > self.host.n() {
            return None;
        }
        self.extend(0).then_some(self.map)
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = Bitset::full(self.host.n());
        cand.difference_with(self.used.words());
        for &q in &self.order[..depth] {
            let hq = self.map[q];
            if self.pattern.has_edge(p, q) {
                cand.intersect_with(self.host.row(hq));
            } else {
                cand.difference_with(self.host.row(hq));
            }
        }
        let dp = self.pattern.degree(p);
        for h in cand.iter() {
            let dh = self.host_degree[h];
            if dh < dp || (self.exact_degree && dh != dp) {
                continue;
            }
            self.map[p] = h;
            self.used.insert(h);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(h);
            self.map[p] = usize::MAX;
        }
        false
    }
}

/// Pattern vertices ordered so each one has as many already-placed
/// neighbours as possible (ties: higher degree, then lower index).
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            links[u] += 1;
        }
    }
    order
}
