//! Canonical labelling by individualisation and refinement.
//!
//! Intended for small graphs (the enumerator works up to ten vertices). The
//! search keeps the lexicographically largest relabelled adjacency matrix
//! among the leaves of the search tree, prunes children that are equivalent
//! under automorphisms found so far, and returns generators of the full
//! automorphism group as a by-product.

use super::Graph;

#[derive(Clone, Debug)]
pub struct Canonical {
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
    /// Generators of the automorphism group (each a permutation `v -> image`).
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    /// The canonically relabelled graph; equal for isomorphic inputs.
    pub fn graph(&self, g: &Graph) -> Graph {
        g.permute(&self.label)
    }

    /// `orbit[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub fn orbits(&self) -> Vec<usize> {
        orbits(self.label.len(), &self.generators)
    }
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.n();
    let mut search = CanonSearch {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    if n > 0 {
        search.descend(vec![(0..n).collect()], &mut Vec::new());
    }
    let label = search.best.map(|(l, _)| l).unwrap_or_default();
    Canonical {
        label,
        generators: search.generators,
    }
}

/// Orbit representatives (smallest element) under the group generated by
/// `generators`.
pub fn orbits(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for gen in generators {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, gen[v]));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

type Leaf = (Vec<usize>, Vec<u64>);

struct CanonSearch<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if !tried.is_empty() {
                let fixing: Vec<Vec<usize>> = self
                    .generators
                    .iter()
                    .filter(|gen| prefix.iter().all(|&p| gen[p] == p))
                    .cloned()
                    .collect();
                let orb = orbits(self.g.n(), &fixing);
                if tried.iter().any(|&w| orb[w] == orb[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&w| w != v).collect();
            child.splice(t..=t, [vec![v], rest]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.n();
        let mut label = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            label[c[0]] = i;
        }
        let cert = certificate(self.g, &label);
        let Some((first_label, first_cert)) = &self.first else {
            self.first = Some((label.clone(), cert.clone()));
            self.best = Some((label, cert));
            return;
        };
        if *first_cert == cert {
            self.generators.push(automorphism(first_label, &label));
            return;
        }
        let (best_label, best_cert) = self.best.as_ref().unwrap();
        if *best_cert == cert {
            self.generators.push(automorphism(best_label, &label));
        } else if cert > *best_cert {
            self.best = Some((label, cert));
        }
    }
}

/// Two labellings giving the same relabelled graph differ by the
/// automorphism `v -> l2⁻¹(l1(v))`.
fn automorphism(l1: &[usize], l2: &[usize]) -> Vec<usize> {
    let mut inv2 = vec![0; l2.len()];
    for (v, &p) in l2.iter().enumerate() {
        inv2[p] = v;
    }
    l1.iter().map(|&p| inv2[p]).collect()
}

/// Upper triangle of the relabelled adjacency matrix, packed row by row.
fn certificate(g: &Graph, label: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &p) in label.iter().enumerate() {
        inv[p] = v;
    }
    let mut out = Vec::with_capacity((n * n).div_ceil(128));
    let (mut acc, mut bits) = (0u64, 0);
    for i in 0..n {
        for j in i + 1..n {
            acc = acc << 1 | g.has_edge(inv[i], inv[j]) as u64;
            bits += 1;
            if bits == 64 {
                out.push(acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(acc << (64 - bits));
    }
    out
}

/// Refines an ordered partition until it is equitable: every vertex of a
/// cell has the same number of neighbours in each cell. Split cells are
/// ordered by that count, so the result is labelling-independent.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let mut splitter = super::Bitset::new(g.n());
            for &v in &cells[s] {
                splitter.insert(v);
            }
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cells[c]
                    .iter()
                    .map(|&v| (splitter.intersection_len(g.row(v)), v))
                    .collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        groups.push(Vec::new());
                        last = k;
                    }
                    groups.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, groups);
                continue 'restart;
            }
        }
        return;
    }
}
