//! Vertex connectivity via unit-capacity max-flow on the split-vertex network.

use std::collections::VecDeque;

use super::Graph;
use crate::error::{precondition, Result};

/// Residual network where every vertex `v` is split into `v_in = 2v` and
/// `v_out = 2v + 1` joined by a unit-capacity arc.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> SplitNetwork {
        let n = g.n();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, 1);
            net.arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u8) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Number of internally disjoint `s`–`t` paths, stopping once `limit` is
    /// reached. Restores capacities before returning.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let original = self.cap.clone();
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([source]);
            pred[source] = usize::MAX - 1;
            'bfs: while let Some(x) = queue.pop_front() {
                for &e in &self.adj[x] {
                    let y = self.head[e];
                    if self.cap[e] > 0 && pred[y] == usize::MAX {
                        pred[y] = e;
                        if y == sink {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if pred[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let e = pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.head[e ^ 1];
            }
            flow += 1;
        }
        self.cap = original;
        flow
    }
}

impl Graph {
    /// Minimum number of vertices whose removal disconnects the graph
    /// (`n − 1` for complete graphs).
    ///
    /// Uses Even's scheme: a minimum separator misses one of the first
    /// `κ + 1` vertices, so only those need to act as flow sources.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        let n = self.n();
        if n < 2 {
            return Err(precondition(
                "vertex connectivity needs at least 2 vertices",
            ));
        }
        let mut best = n - 1;
        let mut net = SplitNetwork::new(self);
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    best = best.min(net.local_connectivity(i, j, best));
                }
            }
            i += 1;
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Smallest separating set found by trying every subset.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.n();
        let mut best = n - 1;
        for mask in 0u32..1 << n {
            let k = mask.count_ones() as usize;
            if k >= best || k + 2 > n {
                continue;
            }
            let removed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !g.remove_vertices(&removed).is_connected() {
                best = k;
            }
        }
        best
    }

    #[test]
    fn small_cases() {
        assert_eq!(cycle(5).vertex_connectivity().unwrap(), 2);
        assert_eq!(Graph::complete(5).vertex_connectivity().unwrap(), 4);
        assert_eq!(Graph::empty(3).vertex_connectivity().unwrap(), 0);
        assert!(Graph::empty(1).vertex_connectivity().is_err());
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(two_k3.vertex_connectivity().unwrap(), 0);
    }

    #[test]
    fn matches_subset_search() {
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let n = 2 + (state >> 60) as usize % 8;
            let bits = state.rotate_left(17);
            let mut k = 0;
            let g = Graph::from_fn(n, |_, _| {
                k += 1;
                (bits >> (k % 64)) & 1 == 1 || (bits >> ((3 * k) % 64)) & 1 == 1
            });
            assert_eq!(
                g.vertex_connectivity().unwrap(),
                brute_connectivity(&g),
                "{g:?}"
            );
        }
    }
}
