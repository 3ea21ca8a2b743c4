//! Complete-graph models with branch sets of size one or two.

use super::{sets_adjacent, verify_k_model, KModel, Searched};
use crate::constructions::{eberhard, eberhard_connection_set};
use crate::error::{self_check, Result};
use crate::graph::clique::maximum_clique_budgeted;
use crate::graph::Graph;

/// Graphs up to this order are searched without a budget.
const EXACT_ORDER: usize = 14;

/// Largest complete model whose branch sets are single vertices or edges.
///
/// Candidate branch sets are the vertices and edges of `g`; two are
/// compatible when disjoint and joined by an edge, and a model is a clique
/// of compatible candidates. Exact for `n ≤ 14`; above that `budget` caps
/// the clique search.
pub fn k_model_size2_max(g: &Graph, budget: Option<u64>) -> Searched<KModel> {
    let mut cands: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    cands.extend(g.edges().into_iter().map(|(u, v)| vec![u, v]));
    let compat = Graph::from_fn(cands.len(), |i, j| {
        let (a, b) = (&cands[i], &cands[j]);
        a.iter().all(|v| !b.contains(v)) && sets_adjacent(g, a, b)
    });
    let budget = if g.n() <= EXACT_ORDER { None } else { budget };
    let found = maximum_clique_budgeted(&compat, budget);
    let model = KModel::new(found.clique.iter().map(|&i| cands[i].clone()).collect());
    Searched {
        value: model,
        exact: found.exact,
    }
}

/// `(p² + p − 2) / 2`.
pub fn eberhard_model_order(p: usize) -> usize {
    (p * p + p - 2) / 2
}

/// The explicit model of the complement of the Eberhard graph for
/// `p ≡ 11 (mod 12)`, with vertex `(a, b)` at index `a·p + b`:
///
/// * singletons `{(i, 0)}` for `i ∉ {(p−1)/2, p−1}`;
/// * the pair `{((p−1)/2, 0), (p−1, 0)}`;
/// * pairs `{(j, i), (j, p−1−i)}` for every `j` and `1 ≤ i < (p−1)/2`;
/// * pairs `{(j, (p−1)/2), (j, p−1)}` for every `j`.
///
/// The model is checked against the complement graph before returning.
pub fn eberhard_model(p: usize) -> Result<KModel> {
    eberhard_connection_set(p)?;
    let h = (p - 1) / 2;
    let at = |a: usize, b: usize| a * p + b;
    let mut sets: Vec<Vec<usize>> = (0..p)
        .filter(|&i| i != h && i != p - 1)
        .map(|i| vec![at(i, 0)])
        .collect();
    sets.push(vec![at(h, 0), at(p - 1, 0)]);
    for j in 0..p {
        for i in 1..h {
            sets.push(vec![at(j, i), at(j, p - 1 - i)]);
        }
    }
    for j in 0..p {
        sets.push(vec![at(j, h), at(j, p - 1)]);
    }
    let expected = (p - 2) + 1 + p * (h - 1) + p;
    if sets.len() != expected || expected != eberhard_model_order(p) {
        return Err(self_check(format!(
            "model has {} sets, expected {}",
            sets.len(),
            eberhard_model_order(p)
        )));
    }
    let model = KModel::new(sets);
    let g = eberhard(p)?.complement();
    if !verify_k_model(&g, &model) {
        return Err(self_check(format!(
            "Eberhard model for p = {p} does not verify"
        )));
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cycle;

    #[test]
    fn had2_examples() {
        assert_eq!(k_model_size2_max(&cycle(7).unwrap(), None).value.order(), 2);
        assert_eq!(
            k_model_size2_max(&Graph::complete(3), None).value.order(),
            3
        );
        let c5 = k_model_size2_max(&cycle(5).unwrap(), None);
        assert!(c5.exact);
        // {0,1}, {2,3}, {4} is a K3 model of C5.
        assert_eq!(c5.value.order(), 3);
        assert_eq!(k_model_size2_max(&Graph::empty(0), None).value.order(), 0);
        let pc = crate::constructions::petersen().complement();
        let m = k_model_size2_max(&pc, None).value;
        assert!(verify_k_model(&pc, &m));
        assert!(m.order() >= 5);
    }

    #[test]
    fn eberhard_11() {
        let m = eberhard_model(11).unwrap();
        assert_eq!(m.order(), 65);
        assert!(eberhard_model(13).is_err());
    }
}
