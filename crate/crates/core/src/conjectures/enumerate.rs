//! Isomorph-free generation of triangle-free graphs by canonical
//! augmentation, and through complements of connected graphs with
//! independence number at most two.
//!
//! A child is a parent plus one new vertex joined to an independent set of
//! the parent. It is kept only if the new vertex lies in the automorphism
//! orbit of the vertex placed last by the canonical labelling, so each
//! isomorphism class has exactly one parent; children of one parent are
//! then deduplicated by canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::graph::canon::canonical_form;
use crate::graph::Graph;

/// Largest order accepted by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Smallest order passed to the sink (at least 1).
    pub min_n: usize,
    pub max_n: usize,
    /// Worker threads; 1 gives a deterministic sink order.
    pub workers: usize,
}

impl EnumerateOptions {
    pub fn up_to(max_n: usize) -> EnumerateOptions {
        EnumerateOptions {
            min_n: 1,
            max_n,
            workers: 1,
        }
    }
}

fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for v in from..g.n() {
            if cur.iter().all(|&u| !g.has_edge(u, v)) {
                cur.push(v);
                rec(g, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, 0, &mut Vec::new(), &mut out);
    out
}

fn children(parent: &Graph) -> Vec<Graph> {
    let n = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in independent_sets(parent) {
        let child = Graph::from_fn(n + 1, |u, v| {
            if v == n {
                s.contains(&u)
            } else if u == n {
                s.contains(&v)
            } else {
                parent.has_edge(u, v)
            }
        });
        let canon = canonical_form(&child);
        let last = canon
            .label
            .iter()
            .position(|&l| l == n)
            .expect("labels are a permutation");
        let orbit = canon.orbits();
        if orbit[last] != orbit[n] {
            continue;
        }
        let form = canon.graph(&child);
        if seen.insert(form.clone()) {
            out.push(form);
        }
    }
    out
}

fn check_options(opts: &EnumerateOptions) -> Result<()> {
    if opts.max_n > MAX_ENUMERATION_ORDER {
        return Err(domain(format!(
            "enumeration is limited to {MAX_ENUMERATION_ORDER} vertices, got {}",
            opts.max_n
        )));
    }
    if opts.min_n == 0 || opts.workers == 0 {
        return Err(domain("min_n and workers must be at least 1"));
    }
    Ok(())
}

fn run<F>(opts: &EnumerateOptions, keep: F) -> Result<Vec<u64>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    check_options(opts)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| domain(format!("cannot start worker pool: {e}")))?;
    let mut counts = vec![0u64; opts.max_n + 1];
    pool.install(|| {
        let mut level = vec![Graph::empty(1)];
        for n in 1..=opts.max_n {
            if n > 1 {
                level = level.par_iter().flat_map_iter(children).collect();
            }
            if n >= opts.min_n {
                counts[n] = level.par_iter().filter(|g| keep(g)).count() as u64;
            }
        }
    });
    Ok(counts)
}

/// Calls `sink` on one representative of every triangle-free graph with
/// `min_n ≤ n ≤ max_n` vertices. Returns the number of graphs per order
/// (indexed by `n`).
pub fn enumerate_triangle_free<F>(opts: EnumerateOptions, sink: F) -> Result<Vec<u64>>
where
    F: Fn(&Graph) + Sync,
{
    run(&opts, |g| {
        sink(g);
        true
    })
}

/// Calls `sink` on one representative of every connected graph with
/// `α ≤ 2` and `min_n ≤ n ≤ max_n` vertices (the connected complements of
/// triangle-free graphs). Returns the number of graphs per order.
pub fn enumerate_alpha2<F>(opts: EnumerateOptions, sink: F) -> Result<Vec<u64>>
where
    F: Fn(&Graph) + Sync,
{
    run(&opts, |t| {
        let g = t.complement();
        if g.is_connected() {
            sink(&g);
            true
        } else {
            false
        }
    })
}
