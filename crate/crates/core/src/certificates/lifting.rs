//! Clique covers and certificates under inflation, and the four-clique
//! cover search.

use super::CliqueFamilyCertificate;
use crate::error::{precondition, Result};
use crate::graph::clique::{is_clique, maximal_cliques, maximum_clique, maximum_clique_budgeted};
use crate::graph::{Bitset, Graph, InflationSpec};

/// Lifts a covering family of cliques of the base graph to the inflation.
///
/// The first copy of every base vertex joins each lifted clique containing
/// that vertex; the remaining `c_x − 1` copies join only the first clique
/// containing `x`. Hence the sizes grow by exactly `|V'| − |V|` in total.
pub fn lift_cover(spec: &InflationSpec, cover: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let base = spec.base();
    if !spec.is_proper() {
        return Err(precondition("inflation is not proper"));
    }
    for q in cover {
        base.check_set(q)?;
        if !is_clique(base, q) {
            return Err(precondition(format!(
                "{q:?} is not a clique of the base graph"
            )));
        }
    }
    let mut first = vec![usize::MAX; base.n()];
    for (i, q) in cover.iter().enumerate() {
        for &x in q {
            if first[x] == usize::MAX {
                first[x] = i;
            }
        }
    }
    if let Some(x) = first.iter().position(|&i| i == usize::MAX) {
        return Err(precondition(format!("base vertex {x} is not covered")));
    }
    Ok(cover
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let mut lifted: Vec<usize> = Vec::new();
            for &x in q {
                let copies = spec.copies(x);
                if first[x] == i {
                    lifted.extend(copies);
                } else {
                    lifted.push(copies.start);
                }
            }
            lifted.sort_unstable();
            lifted.dedup();
            lifted
        })
        .collect())
}

/// Replaces every clique `X` by `⋃_{x ∈ X} C_x`; the bound is unchanged.
pub fn lift_certificate(
    spec: &InflationSpec,
    c: &CliqueFamilyCertificate,
) -> Result<CliqueFamilyCertificate> {
    if !spec.is_proper() {
        return Err(precondition("inflation is not proper"));
    }
    for x in &c.cliques {
        spec.base().check_set(x)?;
    }
    let cliques = c
        .cliques
        .iter()
        .map(|x| x.iter().flat_map(|&v| spec.copies(v)).collect())
        .collect();
    Ok(CliqueFamilyCertificate::new(cliques, c.bound))
}

/// Outcome of [`four_cover_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCover {
    /// Four cliques covering `V` with total size at least `|V| + 2`.
    pub cover: Option<Vec<Vec<usize>>>,
    /// True when the answer is exact, so `cover == None` proves that no such
    /// cliques exist.
    pub exhaustive: bool,
}

/// Sizes at or below this use the exact search.
const EXACT_LIMIT: usize = 20;

/// Looks for cliques `Q_1..Q_4` (repetition allowed) covering `V(G)` with
/// `Σ |Q_i| ≥ |V(G)| + 2`.
///
/// If `4ω < |V| + 2` there is none. Otherwise graphs with at most 20
/// vertices get an exact search over covers by maximal cliques padded with
/// maximum cliques; larger graphs get a greedy cover seeded by a maximum
/// clique and improved by re-choosing one clique at a time.
pub fn four_cover_check(g: &Graph) -> Result<FourCover> {
    if g.n() == 0 || !g.alpha_at_most_two() {
        return Err(precondition(
            "four-clique covers are checked for non-empty graphs with α ≤ 2",
        ));
    }
    let need = g.n() + 2;
    let omega = maximum_clique(g);
    if 4 * omega.len() < need {
        return Ok(FourCover {
            cover: None,
            exhaustive: true,
        });
    }
    if g.n() <= EXACT_LIMIT {
        return Ok(FourCover {
            cover: exact_cover(g, &omega, need),
            exhaustive: true,
        });
    }
    let cover = greedy_cover(g, &omega).filter(|c| c.iter().map(Vec::len).sum::<usize>() >= need);
    Ok(FourCover {
        cover,
        exhaustive: false,
    })
}

/// Covers by at most four maximal cliques, found by branching on the first
/// uncovered vertex; free slots are filled with a maximum clique, which is
/// optimal since only the total size matters.
fn exact_cover(g: &Graph, omega: &[usize], need: usize) -> Option<Vec<Vec<usize>>> {
    let cliques = maximal_cliques(g);
    fn rec<'a>(
        g: &Graph,
        cliques: &'a [Vec<usize>],
        omega: &'a [usize],
        chosen: &mut Vec<&'a [usize]>,
        covered: &Bitset,
        need: usize,
    ) -> Option<Vec<Vec<usize>>> {
        let sum: usize = chosen.iter().map(|c| c.len()).sum();
        let Some(v) = (0..g.n()).find(|&v| !covered.contains(v)) else {
            let total = sum + (4 - chosen.len()) * omega.len();
            if total < need {
                return None;
            }
            let mut out: Vec<Vec<usize>> = chosen.iter().map(|c| c.to_vec()).collect();
            out.resize(4, omega.to_vec());
            return Some(out);
        };
        if chosen.len() == 4 || sum + (4 - chosen.len()) * omega.len() < need {
            return None;
        }
        for c in cliques.iter().filter(|c| c.binary_search(&v).is_ok()) {
            let mut next = covered.clone();
            for &u in c {
                next.insert(u);
            }
            chosen.push(c);
            if let Some(found) = rec(g, cliques, omega, chosen, &next, need) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    rec(
        g,
        &cliques,
        omega,
        &mut Vec::new(),
        &Bitset::new(g.n()),
        need,
    )
}

/// Largest clique of `g` containing all of `core` whose extra vertices come
/// from `pool`, extended greedily to a maximal clique of `g`.
fn best_clique_through(g: &Graph, core: &[usize], pool: &Bitset) -> Vec<usize> {
    let mut cand = pool.clone();
    for &v in core {
        cand.intersect_with(g.row(v));
    }
    let sub: Vec<usize> = cand.to_vec();
    let h = g.induced_subgraph(&sub).expect("in range");
    let mut q: Vec<usize> = core.to_vec();
    q.extend(
        maximum_clique_budgeted(&h, Some(200_000))
            .clique
            .iter()
            .map(|&i| sub[i]),
    );
    extend_to_maximal(g, &mut q);
    q
}

fn extend_to_maximal(g: &Graph, q: &mut Vec<usize>) {
    let mut cand = g.vertex_set();
    for &v in q.iter() {
        cand.intersect_with(g.row(v));
    }
    while let Some(v) = cand.first() {
        q.push(v);
        cand.intersect_with(g.row(v));
    }
    q.sort_unstable();
}

fn greedy_cover(g: &Graph, omega: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut cover: Vec<Vec<usize>> = vec![omega.to_vec()];
    let mut uncovered = g.vertex_set();
    uncovered
        .difference_with(Bitset::from_iter_with_capacity(g.n(), omega.iter().copied()).words());
    while !uncovered.is_empty() {
        if cover.len() == 4 {
            return None;
        }
        let q = best_clique_through(g, &[], &uncovered);
        for &v in &q {
            uncovered.remove(v);
        }
        cover.push(q);
    }
    cover.resize(4, omega.to_vec());
    // Re-choose each clique as the largest one containing the vertices only
    // it covers, until no total-size gain remains.
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..4 {
            let mut others = Bitset::new(g.n());
            for (j, q) in cover.iter().enumerate() {
                if j != i {
                    for &v in q {
                        others.insert(v);
                    }
                }
            }
            let private: Vec<usize> = cover[i]
                .iter()
                .copied()
                .filter(|&v| !others.contains(v))
                .collect();
            let q = best_clique_through(g, &private, &g.vertex_set());
            if q.len() > cover[i].len() {
                cover[i] = q;
                improved = true;
            }
        }
    }
    Some(cover)
}
