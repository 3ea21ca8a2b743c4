use std::collections::VecDeque;
use std::fmt;

use super::{Bitset, Graph};
use crate::error::{precondition, Result};

/// A length that may be infinite (disconnected graph, no cycle, ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub const fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { n, k, lambda, mu }
    }

    /// The counting identity `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        if self.k >= self.n {
            return false;
        }
        let lhs = match self.k {
            0 => 0,
            k if self.lambda < k => k * (k - self.lambda - 1),
            _ => return false,
        };
        lhs == (self.n - self.k - 1) * self.mu
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

const UNSEEN: usize = usize::MAX;

impl Graph {
    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![UNSEEN; self.n()];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == UNSEEN {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = Bitset::new(self.n());
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component (the null graph is not
    /// connected).
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Whether the vertex set `set` induces a connected subgraph.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let allowed = Bitset::from_iter_with_capacity(self.n(), set.iter().copied());
        let mut seen = Bitset::new(self.n());
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if allowed.contains(v) && !seen.contains(v) {
                    seen.insert(v);
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == allowed.len()
    }

    pub fn diameter(&self) -> Result<Distance> {
        if self.n() == 0 {
            return Err(precondition("diameter of the null graph is undefined"));
        }
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.distances_from(s) {
                if d == UNSEEN {
                    return Ok(Distance::Infinite);
                }
                best = best.max(d);
            }
        }
        Ok(Distance::Finite(best))
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Distance {
        self.shortest_cycle(false)
    }

    /// Length of a shortest odd cycle.
    pub fn odd_girth(&self) -> Distance {
        self.shortest_cycle(true)
    }

    fn shortest_cycle(&self, odd_only: bool) -> Distance {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![UNSEEN; n];
        let mut parent = vec![UNSEEN; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = UNSEEN);
            dist[s] = 0;
            parent[s] = UNSEEN;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for v in self.neighbors(u) {
                    if dist[v] == UNSEEN {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] {
                        // Non-tree edge: closes a walk of this length through s.
                        let len = dist[u] + dist[v] + 1;
                        if (!odd_only || len % 2 == 1) && len < best {
                            best = len;
                        }
                    }
                }
            }
        }
        if best == usize::MAX {
            Distance::Infinite
        } else {
            Distance::Finite(best)
        }
    }

    /// Unordered non-adjacent pairs `u < v` with `N(u) = N(v)`.
    pub fn twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) && self.row(u) == self.row(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Unordered adjacent pairs `u < v` with `N(u) − v = N(v) − u`.
    pub fn adjacent_twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.has_edge(u, v) && self.closed_neighbor_set(u) == self.closed_neighbor_set(v)
                {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Some triangle `(a, b, c)` with `a < b < c`, if any.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (a, b) in self.edges() {
            let mut common = self.neighbor_set(a);
            common.intersect_with(self.row(b));
            if let Some(c) = common.iter().find(|&c| c > b) {
                return Some((a, b, c));
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// `α(G) ≤ 2`, i.e. the complement is triangle-free.
    pub fn alpha_at_most_two(&self) -> bool {
        self.complement().is_triangle_free()
    }

    /// Strongly regular parameters, if the graph is strongly regular.
    pub fn srg_parameters(&self) -> Option<SrgParams> {
        let k = self.regular_degree()?;
        let (mut lambda, mut mu) = (None, None);
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                let c = self.common_neighbor_count(u, v);
                let slot = if self.has_edge(u, v) {
                    &mut lambda
                } else {
                    &mut mu
                };
                match *slot {
                    None => *slot = Some(c),
                    Some(x) if x != c => return None,
                    _ => {}
                }
            }
        }
        Some(SrgParams {
            n: self.n(),
            k,
            lambda: lambda.unwrap_or(0),
            mu: mu.unwrap_or(0),
        })
    }

    /// Whether some edge `xy` has `N(x) ∪ N(y) = V`.
    pub fn is_dominating_edge(&self, x: usize, y: usize) -> bool {
        if !self.has_edge(x, y) {
            return false;
        }
        let mut s = self.neighbor_set(x);
        s.union_with(self.row(y));
        s.len() == self.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cycle_metrics() {
        let c5 = cycle(5);
        assert_eq!(c5.diameter().unwrap(), Distance::Finite(2));
        assert_eq!(c5.girth(), Distance::Finite(5));
        assert_eq!(c5.odd_girth(), Distance::Finite(5));
        let c4 = cycle(4);
        assert_eq!(c4.odd_girth(), Distance::Infinite);
        assert_eq!(c4.girth(), Distance::Finite(4));
        assert_eq!(cycle(7).odd_girth(), Distance::Finite(7));
    }

    #[test]
    fn disconnected_and_null() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(g.diameter().unwrap(), Distance::Infinite);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).diameter().is_err());
        assert_eq!(Graph::empty(1).diameter().unwrap(), Distance::Finite(0));
        assert_eq!(
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)])
                .unwrap()
                .girth(),
            Distance::Infinite
        );
    }

    #[test]
    fn twin_lists() {
        assert_eq!(
            Graph::complete(3).adjacent_twins(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert_eq!(cycle(4).twins(), vec![(0, 2), (1, 3)]);
        assert!(cycle(5).adjacent_twins().is_empty());
        assert!(cycle(5).twins().is_empty());
    }

    #[test]
    fn srg_of_c5() {
        assert_eq!(cycle(5).srg_parameters(), Some(SrgParams::new(5, 2, 0, 1)));
        assert_eq!(cycle(6).srg_parameters(), None);
        assert!(SrgParams::new(5, 2, 0, 1).is_feasible());
        assert!(!SrgParams::new(5, 2, 0, 2).is_feasible());
    }

    #[test]
    fn connected_sets() {
        let c5 = cycle(5);
        assert!(c5.is_connected_set(&[0, 1, 2]));
        assert!(!c5.is_connected_set(&[0, 2]));
        assert!(!c5.is_connected_set(&[]));
    }
}
