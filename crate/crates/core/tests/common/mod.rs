//! Brute-force oracles shared by the integration tests. Each one is written
//! independently of the library routine it checks.
#![allow(dead_code)]

use std::sync::Mutex;

use hadwiger2::conjectures::{enumerate_triangle_free, EnumerateOptions};
use hadwiger2::Graph;

/// Smallest `k` admitting a proper `k`-colouring, by backtracking.
pub fn brute_chromatic(g: &Graph) -> usize {
    fn colour(g: &Graph, v: usize, k: usize, used: usize, cols: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        // Symmetry breaking: a new colour may only be the next unused one.
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| !(g.has_edge(u, v) && cols[u] == c)) {
                cols[v] = c;
                if colour(g, v + 1, k, used.max(c + 1), cols) {
                    return true;
                }
            }
        }
        false
    }
    (0..=g.n())
        .find(|&k| colour(g, 0, k, 0, &mut vec![0; g.n()]))
        .expect("n colours always suffice")
}

/// Largest matching by trying every edge at the smallest free vertex.
pub fn brute_matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, free: &mut Vec<bool>) -> usize {
        let Some(v) = (0..g.n()).find(|&v| free[v]) else {
            return 0;
        };
        free[v] = false;
        let mut best = rec(g, free);
        for u in v + 1..g.n() {
            if free[u] && g.has_edge(u, v) {
                free[u] = false;
                best = best.max(1 + rec(g, free));
                free[u] = true;
            }
        }
        free[v] = true;
        best
    }
    rec(g, &mut vec![true; g.n()])
}

/// Largest independent set size, by exhaustive recursion.
pub fn brute_alpha(g: &Graph) -> usize {
    fn rec(g: &Graph, cand: Vec<usize>) -> usize {
        let Some((&v, rest)) = cand.split_first() else {
            return 0;
        };
        let with = rec(
            g,
            rest.iter()
                .copied()
                .filter(|&u| !g.has_edge(u, v))
                .collect(),
        );
        let without = rec(g, rest.to_vec());
        (1 + with).max(without)
    }
    rec(g, (0..g.n()).collect())
}

/// Largest clique, by branch and bound with a greedy colouring bound.
pub fn brute_clique_number(g: &Graph) -> usize {
    /// Number of colours in a first-fit colouring of `cand`.
    fn colours(g: &Graph, cand: &[usize]) -> usize {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cand {
            match classes
                .iter_mut()
                .find(|c| c.iter().all(|&u| !g.has_edge(u, v)))
            {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        classes.len()
    }
    fn rec(g: &Graph, size: usize, cand: &[usize], best: &mut usize) {
        if size > *best {
            *best = size;
        }
        if size + colours(g, cand) <= *best {
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if size + cand.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&u| g.has_edge(u, v))
                .collect();
            rec(g, size + 1, &next, best);
        }
    }
    let mut best = 0;
    rec(g, 0, &(0..g.n()).collect::<Vec<_>>(), &mut best);
    best
}

/// Shortest odd closed walk (equal to the odd girth), from walk-reachability
/// matrix powers; `None` if the graph is bipartite.
pub fn brute_odd_girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let words = n.div_ceil(64).max(1);
    let adj: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let mut row = vec![0u64; words];
            for u in 0..n {
                if g.has_edge(u, v) {
                    row[u / 64] |= 1 << (u % 64);
                }
            }
            row
        })
        .collect();
    let step = |reach: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
        reach
            .iter()
            .map(|r| {
                let mut out = vec![0u64; words];
                for u in 0..n {
                    if r[u / 64] >> (u % 64) & 1 == 1 {
                        for (o, a) in out.iter_mut().zip(&adj[u]) {
                            *o |= a;
                        }
                    }
                }
                out
            })
            .collect()
    };
    let mut reach = adj.clone();
    for len in (1..=2 * n + 1).step_by(2) {
        if len >= 3 && (0..n).any(|v| reach[v][v / 64] >> (v % 64) & 1 == 1) {
            return Some(len);
        }
        reach = step(&step(&reach));
    }
    None
}

/// Connected, dominating and a matching, checked straight from the
/// definitions.
pub fn brute_is_cdm(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; g.n()];
    for &(a, b) in edges {
        if !g.has_edge(a, b) || seen[a] || seen[b] {
            return false;
        }
        seen[a] = true;
        seen[b] = true;
    }
    let touches = |v: usize, (a, b): (usize, usize)| g.has_edge(v, a) || g.has_edge(v, b);
    let connected = edges.iter().enumerate().all(|(i, &e)| {
        edges[i + 1..]
            .iter()
            .all(|&(c, d)| touches(c, e) || touches(d, e))
    });
    let dominating = (0..g.n())
        .filter(|&v| !seen[v])
        .all(|v| edges.iter().all(|&e| touches(v, e)));
    !edges.is_empty() && connected && dominating
}

/// Every triangle-free graph with `lo ≤ n ≤ hi` vertices, up to isomorphism.
pub fn triangle_free_graphs(lo: usize, hi: usize) -> Vec<Graph> {
    let out = Mutex::new(Vec::new());
    enumerate_triangle_free(
        EnumerateOptions {
            min_n: lo,
            max_n: hi,
            workers: 1,
        },
        |g| out.lock().unwrap().push(g.clone()),
    )
    .unwrap();
    out.into_inner().unwrap()
}

/// Every graph with `α ≤ 2` (connected or not) on `lo ≤ n ≤ hi` vertices.
pub fn alpha2_graphs(lo: usize, hi: usize) -> Vec<Graph> {
    triangle_free_graphs(lo, hi)
        .iter()
        .map(Graph::complement)
        .collect()
}

/// Graph on `n` vertices from the bits of `code` (pairs in colex order).
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut i = 0;
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if code >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
