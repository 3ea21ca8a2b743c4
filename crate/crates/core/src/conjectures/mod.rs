//! Checkers and searchers for complete-minor conjectures on graphs with
//! independence number two: connected (dominating) matchings, complete
//! models with branch sets of size at most two, seagull packings,
//! unavoidable induced subgraphs, the counterexample-property screener and
//! an isomorph-free enumerator.

mod enumerate;
mod matchings;
mod models;
mod screen;
mod seagulls;
mod unavoidable;

pub use enumerate::{
    enumerate_alpha2, enumerate_triangle_free, EnumerateOptions, MAX_ENUMERATION_ORDER,
};
pub use matchings::{
    connected_dominating_matching, connected_dominating_matching_budgeted, connected_matching_max,
    connected_perfect_matching_search, girth5_cdm_construct,
};
pub use models::{eberhard_model, eberhard_model_order, k_model_size2_max};
pub use screen::{
    chromatic_number_edge_deleted, hamiltonian_cycle, is_pair_deletion_critical, table1_screen,
    Block, PropertyVerdict, ScreeningReport, Status, Survival,
};
pub use seagulls::{is_seagull, seagull_conditions, seagull_pack_exact, wheel5, SeagullReport};
pub use unavoidable::{builtin_patterns, unavoidable_scan};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Bitset, Graph};
use crate::matching::Matching;

/// A search answer together with whether it is provably optimal (or, for
/// existence searches, whether a negative answer is a proof).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Searched<T> {
    pub value: T,
    pub exact: bool,
}

/// Branch sets of a complete-graph minor model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KModel {
    pub branch_sets: Vec<Vec<usize>>,
    pub target_order: usize,
}

impl KModel {
    /// Sorts each branch set; the order is the number of sets.
    pub fn new(branch_sets: Vec<Vec<usize>>) -> KModel {
        let branch_sets: Vec<Vec<usize>> = branch_sets
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        let target_order = branch_sets.len();
        KModel {
            branch_sets,
            target_order,
        }
    }

    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }
}

fn sets_adjacent(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)))
}

/// Disjoint non-empty connected branch sets, pairwise joined by an edge, as
/// many as the target order.
pub fn verify_k_model(g: &Graph, m: &KModel) -> bool {
    if m.branch_sets.len() != m.target_order {
        return false;
    }
    let mut used = Bitset::new(g.n());
    for b in &m.branch_sets {
        if b.is_empty() {
            return false;
        }
        for &v in b {
            if v >= g.n() || used.contains(v) {
                return false;
            }
            used.insert(v);
        }
        if !g.is_connected_set(b) {
            return false;
        }
    }
    m.branch_sets.iter().enumerate().all(|(i, a)| {
        m.branch_sets[i + 1..]
            .iter()
            .all(|b| sets_adjacent(g, a, b))
    })
}

/// `model <order>` then one `B v1 [v2 …]` line per branch set.
impl fmt::Display for KModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model {}", self.target_order)?;
        for b in &self.branch_sets {
            write!(f, "B")?;
            for v in b {
                write!(f, " {v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for KModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<KModel> {
        let mut lines = s
            .lines()
            .filter(|l| !l.starts_with('#') && !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty model".into()))?;
        let target_order = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["model", k] => k
                .parse()
                .map_err(|_| Error::Parse(format!("bad model order {k:?}")))?,
            _ => {
                return Err(Error::Parse(format!(
                    "expected \"model <order>\", got {header:?}"
                )))
            }
        };
        let mut branch_sets = Vec::new();
        for l in lines {
            let mut it = l.split_whitespace();
            if it.next() != Some("B") {
                return Err(Error::Parse(format!(
                    "expected a branch-set line \"B v1 ...\", got {l:?}"
                )));
            }
            let mut set: Vec<usize> = it
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad vertex {t:?}")))
                })
                .collect::<Result<_>>()?;
            set.sort_unstable();
            branch_sets.push(set);
        }
        Ok(KModel {
            branch_sets,
            target_order,
        })
    }
}

/// A matching whose edges are pairwise joined by an edge of the graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConnectedMatching {
    pub edges: Matching,
}

impl ConnectedMatching {
    pub fn size(&self) -> usize {
        self.edges.size()
    }

    /// Each matching edge as a two-vertex branch set.
    pub fn to_model(&self) -> KModel {
        KModel::new(self.edges.edges.iter().map(|&(u, v)| vec![u, v]).collect())
    }
}

/// Valid matching of `g` whose edges are pairwise adjacent.
pub fn is_connected_matching(g: &Graph, m: &Matching) -> bool {
    m.is_valid_in(g)
        && m.edges.iter().enumerate().all(|(i, &(a, b))| {
            m.edges[i + 1..]
                .iter()
                .all(|&(c, d)| sets_adjacent(g, &[a, b], &[c, d]))
        })
}

/// Every vertex outside `V(M)` has a neighbour in every edge of `M`.
pub fn is_dominating_matching(g: &Graph, m: &Matching) -> bool {
    let covered = m.vertices(g.n());
    (0..g.n()).filter(|&v| !covered.contains(v)).all(|v| {
        m.edges
            .iter()
            .all(|&(a, b)| g.has_edge(v, a) || g.has_edge(v, b))
    })
}

/// Non-empty, connected and dominating.
pub fn is_connected_dominating_matching(g: &Graph, m: &Matching) -> bool {
    !m.is_empty() && is_connected_matching(g, m) && is_dominating_matching(g, m)
}

/// First edge `xy` (lexicographically) with `N(x) ∪ N(y) = V`.
pub fn dominating_edge(g: &Graph) -> Option<(usize, usize)> {
    g.edges()
        .into_iter()
        .find(|&(x, y)| g.is_dominating_edge(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cycle;

    #[test]
    fn dominating_edge_examples() {
        assert_eq!(dominating_edge(&Graph::complete(3)), Some((0, 1)));
        assert_eq!(dominating_edge(&cycle(5).unwrap()), None);
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(dominating_edge(&star), Some((0, 1)));
    }

    #[test]
    fn model_checks() {
        let c5 = cycle(5).unwrap();
        let m = KModel::new(vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(verify_k_model(&c5, &m));
        let text = m.to_string();
        assert_eq!(text, "model 3\nB 0 1\nB 2 3\nB 4\n");
        assert_eq!(text.parse::<KModel>().unwrap(), m);
        assert!(!verify_k_model(&c5, &KModel::new(vec![vec![0], vec![2]])));
        assert!(!verify_k_model(
            &c5,
            &KModel::new(vec![vec![0, 2], vec![1]])
        ));
        assert!(!verify_k_model(
            &c5,
            &KModel::new(vec![vec![0, 1], vec![1, 2]])
        ));
        let mut wrong_order = m.clone();
        wrong_order.target_order = 4;
        assert!(!verify_k_model(&c5, &wrong_order));
        assert!("modl 3".parse::<KModel>().is_err());
    }

    #[test]
    fn cdm_predicates() {
        let c5 = cycle(5).unwrap();
        let m = Matching::new([(0, 1), (2, 3)]);
        assert!(is_connected_dominating_matching(&c5, &m));
        assert!(!is_dominating_matching(&c5, &Matching::new([(0, 1)])));
        assert!(!is_connected_dominating_matching(&c5, &Matching::default()));
    }
}
