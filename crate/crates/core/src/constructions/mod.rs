//! Named graph families. Every constructor checks the structural
//! parameters its family is known for before returning.

mod cayley;
mod kneser;
mod steiner;

pub use cayley::{
    cayley_abelian, eberhard, eberhard_connection_set, sum_free_checks, AbelianGroup, SumFreeReport,
};
pub use kneser::{
    binomial, generalized_kneser_geq, generalized_kneser_leq, generalized_kneser_odd_girth,
    k_subsets_colex, kneser, subset_label,
};
pub use steiner::{gewirtz, higman_sims, mesner, steiner_3_6_22, SteinerSystem};

use rand::seq::SliceRandom;

use crate::error::{domain, self_check, Result};
use crate::graph::{Distance, Graph, SrgParams};

pub const CLEBSCH_SRG: SrgParams = SrgParams::new(16, 5, 0, 2);
pub const MESNER_SRG: SrgParams = SrgParams::new(77, 16, 0, 4);
pub const GEWIRTZ_SRG: SrgParams = SrgParams::new(56, 10, 0, 2);
pub const HIGMAN_SIMS_SRG: SrgParams = SrgParams::new(100, 22, 0, 6);
pub const HOFFMAN_SINGLETON_SRG: SrgParams = SrgParams::new(50, 7, 0, 1);

pub(crate) fn expect_srg(g: &Graph, want: SrgParams, name: &str) -> Result<()> {
    match g.srg_parameters() {
        Some(p) if p == want => Ok(()),
        got => Err(self_check(format!("{name}: expected {want}, got {got:?}"))),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("cycle needs n ≥ 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("valid edges")
}

/// The `d`-cube: vertices `0..2^d`, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 20 {
        return Err(domain(format!("hypercube dimension {d} too large")));
    }
    Ok(Graph::from_fn(1 << d, |u, v| (u ^ v).is_power_of_two()))
}

/// The 4-cube plus the eight antipodal edges `x - (x ^ 15)`.
pub fn clebsch() -> Graph {
    let g = Graph::from_fn(16, |u, v| (u ^ v).is_power_of_two() || u ^ v == 15);
    expect_srg(&g, CLEBSCH_SRG, "Clebsch").expect("Clebsch construction");
    g
}

/// Andrásfai graph: vertices `0..3d−1`, `i ~ j` iff `|i − j| ≡ 1 (mod 3)`.
pub fn andrasfai(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(domain("Andrásfai graph needs d ≥ 1"));
    }
    let g = Graph::from_fn(3 * d - 1, |i, j| (j - i) % 3 == 1);
    if g.regular_degree() != Some(d) || !g.is_triangle_free() {
        return Err(self_check(format!(
            "Andrásfai({d}) is not {d}-regular and triangle-free"
        )));
    }
    if d >= 2 && g.diameter()? != Distance::Finite(2) {
        return Err(self_check(format!(
            "Andrásfai({d}) does not have diameter 2"
        )));
    }
    Ok(g)
}

/// Hoffman–Singleton graph from five pentagons `P_h` (vertex `5h + j`,
/// `j ~ j ± 1`) and five pentagrams `Q_i` (vertex `25 + 5i + j`,
/// `j ~ j ± 2`), with vertex `j` of `P_h` joined to vertex `h·i + j` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for a in 0..5 {
        for j in 0..5 {
            edges.push((p(a, j), p(a, j + 1)));
            edges.push((q(a, j), q(a, j + 2)));
            for i in 0..5 {
                edges.push((p(a, j), q(i, a * i + j)));
            }
        }
    }
    let g = Graph::from_edges(50, edges).expect("valid edges");
    expect_srg(&g, HOFFMAN_SINGLETON_SRG, "Hoffman–Singleton")
        .expect("Hoffman–Singleton construction");
    g
}

/// Random edge-maximal triangle-free graph.
///
/// All vertex pairs are shuffled once (ChaCha8 seeded with `seed`) and added
/// in that order whenever they have no common neighbour. Since a pair that
/// gains a common neighbour never loses it, each added edge is uniform among
/// the pairs still available, as in the sequential process.
pub fn triangle_free_process(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(domain("triangle-free process needs n ≥ 1"));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    pairs.shuffle(&mut crate::rng::seeded(seed));
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if g.common_neighbor_count(u, v) == 0 {
            g.set_edge(u, v);
        }
    }
    verify_triangle_free_maximal(&g)?;
    Ok(g)
}

fn verify_triangle_free_maximal(g: &Graph) -> Result<()> {
    if !g.is_triangle_free() {
        return Err(self_check("triangle-free process produced a triangle"));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) && g.common_neighbor_count(u, v) == 0 {
                return Err(self_check(format!("pair {u}{v} could still be added")));
            }
        }
    }
    if g.n() >= 3 {
        let h = g.complement();
        if h.independence_number() != 2 {
            return Err(self_check(
                "complement of the process graph does not have α = 2",
            ));
        }
        if h.edges().iter().any(|&(x, y)| h.is_dominating_edge(x, y)) {
            return Err(self_check(
                "complement of the process graph has a dominating edge",
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::is_isomorphic;

    #[test]
    fn small_families() {
        let q4 = hypercube(4).unwrap();
        assert_eq!(q4.n(), 16);
        assert_eq!(q4.regular_degree(), Some(4));
        assert_eq!(q4.odd_girth(), Distance::Infinite);
        assert_eq!(cycle(5).unwrap().girth(), Distance::Finite(5));
        assert!(cycle(2).is_err());
        let p = petersen();
        assert_eq!(p.srg_parameters(), Some(SrgParams::new(10, 3, 0, 1)));
        assert_eq!(p.girth(), Distance::Finite(5));
        assert_eq!(p.diameter().unwrap(), Distance::Finite(2));
    }

    #[test]
    fn clebsch_properties() {
        let g = clebsch();
        assert_eq!(g.srg_parameters(), Some(CLEBSCH_SRG));
        assert!(g.is_triangle_free());
        assert_eq!(g.diameter().unwrap(), Distance::Finite(2));
    }

    #[test]
    fn andrasfai_family() {
        assert!(is_isomorphic(&andrasfai(2).unwrap(), &cycle(5).unwrap()));
        let a3 = andrasfai(3).unwrap();
        assert_eq!((a3.n(), a3.regular_degree()), (8, Some(3)));
        for d in 1..=6 {
            assert!(andrasfai(d).unwrap().is_triangle_free());
        }
        assert!(andrasfai(0).is_err());
    }

    #[test]
    fn hoffman_singleton_properties() {
        let g = hoffman_singleton();
        assert_eq!(g.n(), 50);
        assert_eq!(g.regular_degree(), Some(7));
        assert_eq!(g.girth(), Distance::Finite(5));
        assert_eq!(g.diameter().unwrap(), Distance::Finite(2));
    }

    #[test]
    fn process_is_reproducible() {
        for n in 1..25 {
            let a = triangle_free_process(n, 42).unwrap();
            assert_eq!(a, triangle_free_process(n, 42).unwrap());
        }
        assert_ne!(
            triangle_free_process(30, 1).unwrap(),
            triangle_free_process(30, 2).unwrap()
        );
    }
}
