use super::Graph;
use crate::error::{domain, Result};

/// A base graph together with a multiplicity `c_x ≥ 0` for every vertex.
///
/// Expanded vertices are numbered block by block: the `c_0` copies of base
/// vertex 0 first, then the copies of vertex 1, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationSpec {
    base: Graph,
    mult: Vec<usize>,
    projection: Vec<usize>,
}

impl InflationSpec {
    pub fn new(base: Graph, mult: Vec<usize>) -> Result<InflationSpec> {
        if mult.len() != base.n() {
            return Err(domain(format!(
                "{} multiplicities given for a base graph on {} vertices",
                mult.len(),
                base.n()
            )));
        }
        let projection = mult
            .iter()
            .enumerate()
            .flat_map(|(x, &c)| std::iter::repeat(x).take(c))
            .collect();
        Ok(InflationSpec {
            base,
            mult,
            projection,
        })
    }

    pub fn uniform(base: Graph, c: usize) -> InflationSpec {
        let n = base.n();
        InflationSpec::new(base, vec![c; n]).expect("lengths agree")
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    /// `p(u)`: the base vertex each expanded vertex came from.
    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn expanded_n(&self) -> usize {
        self.projection.len()
    }

    /// All multiplicities are at least one.
    pub fn is_proper(&self) -> bool {
        self.mult.iter().all(|&c| c >= 1)
    }

    /// The expanded vertices replacing base vertex `x` (the set `C_x`).
    pub fn copies(&self, x: usize) -> std::ops::Range<usize> {
        let start: usize = self.mult[..x].iter().sum();
        start..start + self.mult[x]
    }

    /// The same multiplicities over the complement of the base graph.
    pub fn complement_base(&self) -> InflationSpec {
        InflationSpec::new(self.base.complement(), self.mult.clone()).expect("lengths agree")
    }
}

/// Replaces each base vertex `x` by a clique `C_x` of size `c_x`; copies of
/// adjacent base vertices are fully joined.
pub fn inflate(spec: &InflationSpec) -> Graph {
    let p = spec.projection();
    Graph::from_fn(p.len(), |u, v| {
        p[u] == p[v] || spec.base().has_edge(p[u], p[v])
    })
}

/// Replaces each base vertex `x` by an independent set `A_x` of size `c_x`;
/// copies of adjacent base vertices are fully joined.
pub fn blow_up(spec: &InflationSpec) -> Graph {
    let p = spec.projection();
    Graph::from_fn(p.len(), |u, v| spec.base().has_edge(p[u], p[v]))
}
