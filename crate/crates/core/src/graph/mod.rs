//! The immutable graph type and everything computed directly from it.

mod bitset;
pub mod canon;
pub mod clique;
mod flow;
pub mod graph6;
mod inflation;
mod invariants;
pub mod iso;

pub use bitset::{Bitset, Ones};
pub use inflation::{blow_up, inflate, InflationSpec};
pub use invariants::{Distance, SrgParams};

use crate::error::{Error, Result};
use bitset::words_for;

/// Simple undirected graph on vertices `0..n` with bitset adjacency rows.
///
/// Values are immutable once built; every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    /// Builds a graph from an edge list. Self-loops are rejected; repeated
    /// edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph whose edge set is `{uv : u < v, f(u, v)}`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if f(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.adj[v * self.words + (u >> 6)] |= 1 << (u & 63);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + (v >> 6)] &= !(1 << (v & 63));
        self.adj[v * self.words + (u >> 6)] &= !(1 << (u & 63));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words in each adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    /// Adjacency row of `v` as raw words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> Bitset {
        Bitset::from_words(self.row(v).to_vec())
    }

    /// Closed neighbourhood `N(v) ∪ {v}`.
    pub fn closed_neighbor_set(&self, v: usize) -> Bitset {
        let mut s = self.neighbor_set(v);
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// The common degree if the graph is regular (`None` for `n = 0` or
    /// irregular graphs).
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn vertex_set(&self) -> Bitset {
        Bitset::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let full = Bitset::full(self.n);
        for v in 0..self.n {
            let row = &mut g.adj[v * self.words..(v + 1) * self.words];
            for (i, w) in row.iter_mut().enumerate() {
                *w = !self.adj[v * self.words + i] & full.words()[i];
            }
            row[v >> 6] &= !(1 << (v & 63));
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let mut seen = Bitset::new(self.n);
        for &v in vertices {
            if seen.contains(v) {
                return Err(Error::Domain(format!("vertex {v} listed twice")));
            }
            seen.insert(v);
        }
        Ok(Graph::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        }))
    }

    /// `G − S`: deletes the given vertices, keeping the others in order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Graph {
        let mut gone = Bitset::new(self.n);
        for &v in removed {
            gone.insert(v);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone.contains(v)).collect();
        Graph::from_fn(keep.len(), |i, j| self.has_edge(keep[i], keep[j]))
    }

    /// `G − uv`.
    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.clear_edge(u, v);
        g
    }

    /// `G + uv` (no-op if the edge exists).
    pub fn add_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.set_edge(u, v);
        g
    }

    /// Relabels the graph so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        Graph::from_fn(n, |u, v| {
            if v < self.n {
                self.has_edge(u, v)
            } else if u >= self.n {
                other.has_edge(u - self.n, v - self.n)
            } else {
                false
            }
        })
    }

    /// Join: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        self.complement()
            .disjoint_union(&other.complement())
            .complement()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, vs: &[usize]) -> Result<()> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
