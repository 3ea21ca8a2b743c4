//! Kneser and generalised Kneser graphs.
//!
//! Vertices are the `k`-subsets of `{0, .., n−1}` in colexicographic order,
//! which is the increasing order of their bitmasks. Label tables print the
//! elements 1-based, e.g. `{1,2}` for the first 2-subset.

use crate::error::{domain, Result};
use crate::graph::Graph;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn check(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(domain(format!("need 1 ≤ k ≤ n, got n = {n}, k = {k}")));
    }
    if n > 63 {
        return Err(domain(format!("ground set size {n} exceeds 63")));
    }
    if binomial(n as u64, k as u64) > 100_000 {
        return Err(domain(format!("C({n},{k}) vertices is too many")));
    }
    Ok(())
}

/// All `k`-subsets of `{0..n}` as bitmasks, in colex (increasing) order.
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n || n > 63 {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    let mut x: u64 = (1 << k) - 1;
    while x < 1 << n {
        out.push(x);
        // Gosper's hack: next larger integer with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// `{1,3,4}`-style label of a subset bitmask (1-based elements).
pub fn subset_label(mask: u64) -> String {
    let elems: Vec<String> = (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

/// `K(n, k, ≥ t)`: `k`-subsets adjacent when they share at least `t`
/// elements.
pub fn generalized_kneser_geq(n: usize, k: usize, t: usize) -> Result<Graph> {
    check(n, k)?;
    let sets = k_subsets_colex(n, k);
    Ok(Graph::from_fn(sets.len(), |a, b| {
        (sets[a] & sets[b]).count_ones() as usize >= t
    }))
}

/// `K(n, k, ≤ t)`, the complement of `K(n, k, ≥ t+1)`.
pub fn generalized_kneser_leq(n: usize, k: usize, t: usize) -> Result<Graph> {
    Ok(generalized_kneser_geq(n, k, t + 1)?.complement())
}

/// Kneser graph `K(n, k) = K(n, k, ≤ 0)`: disjoint `k`-subsets adjacent.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    generalized_kneser_leq(n, k, 0)
}

/// Odd girth of `K(n, k, ≤ t)` by the closed formula
/// `2⌈(k−t)/(n−2(k−t))⌉ + 1`.
///
/// Returns `None` outside `t < k ≤ n`, `n ≥ 2k − t`, and for the perfect
/// matching `K(2k, k)`: there the graph is complete (`t ≥ k`), bipartite, or
/// has no edges, and the formula does not apply.
pub fn generalized_kneser_odd_girth(n: usize, k: usize, t: usize) -> Option<usize> {
    if t >= k || k > n || n + t < 2 * k {
        return None;
    }
    let d = k - t;
    if n == 2 * d {
        return None;
    }
    Some(2 * d.div_ceil(n - 2 * d) + 1)
}
