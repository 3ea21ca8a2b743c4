//! Cayley graphs on finite abelian groups `Z_{m1} × … × Z_{mr}`.

use crate::error::{domain, precondition, self_check, Result};
use crate::graph::{Distance, Graph};

/// A product of cyclic groups. Elements are indexed in mixed radix with the
/// first coordinate most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    orders: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(orders: &[usize]) -> Result<AbelianGroup> {
        if orders.iter().any(|&m| m == 0) {
            return Err(domain("cyclic factor of order 0"));
        }
        let size = orders.iter().try_fold(1usize, |acc, &m| acc.checked_mul(m));
        match size {
            Some(s) if s <= 1 << 16 => Ok(AbelianGroup {
                orders: orders.to_vec(),
            }),
            _ => Err(domain("group too large")),
        }
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn coords(&self, mut x: usize) -> Vec<usize> {
        let mut c = vec![0; self.orders.len()];
        for (i, &m) in self.orders.iter().enumerate().rev() {
            c[i] = x % m;
            x /= m;
        }
        c
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .fold(0, |acc, (&c, &m)| acc * m + c % m)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<usize> = ca
            .iter()
            .zip(&cb)
            .zip(&self.orders)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        self.index(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<usize> = self
            .coords(a)
            .iter()
            .zip(&self.orders)
            .map(|(x, m)| (m - x) % m)
            .collect();
        self.index(&c)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }
}

fn connection_mask(group: &AbelianGroup, connection: &[usize]) -> Result<Vec<bool>> {
    let mut in_s = vec![false; group.size()];
    for &s in connection {
        if s >= group.size() {
            return Err(precondition(format!("element {s} is outside the group")));
        }
        in_s[s] = true;
    }
    if in_s[0] {
        return Err(precondition("connection set contains the identity"));
    }
    if let Some(s) = (0..group.size()).find(|&s| in_s[s] && !in_s[group.neg(s)]) {
        return Err(precondition(format!(
            "connection set is not inverse-closed at {s}"
        )));
    }
    Ok(in_s)
}

/// `Cay(Γ, S)`: `a ~ b` iff `a − b ∈ S`.
pub fn cayley_abelian(orders: &[usize], connection: &[usize]) -> Result<Graph> {
    let group = AbelianGroup::new(orders)?;
    let in_s = connection_mask(&group, connection)?;
    Ok(Graph::from_fn(group.size(), |a, b| in_s[group.sub(a, b)]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumFreeReport {
    pub sum_free: bool,
    pub sum_free_maximal: bool,
}

/// Sum-freeness of an inverse-closed `S ⊆ Γ∖{0}`: no `x, y, z ∈ S` with
/// `x + y = z`. Maximal means sum-free and no non-zero `z ∉ S` can be added
/// (together with `−z`) keeping it sum-free.
pub fn sum_free_checks(orders: &[usize], connection: &[usize]) -> Result<SumFreeReport> {
    let group = AbelianGroup::new(orders)?;
    let in_s = connection_mask(&group, connection)?;
    let sum_free = |mask: &[bool]| {
        let elems: Vec<usize> = (0..mask.len()).filter(|&x| mask[x]).collect();
        elems
            .iter()
            .all(|&x| elems.iter().all(|&y| !mask[group.add(x, y)]))
    };
    let sf = sum_free(&in_s);
    let maximal = sf
        && (1..group.size()).filter(|&z| !in_s[z]).all(|z| {
            let mut ext = in_s.clone();
            ext[z] = true;
            ext[group.neg(z)] = true;
            !sum_free(&ext)
        });
    Ok(SumFreeReport {
        sum_free: sf,
        sum_free_maximal: maximal,
    })
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `{(x, ±x²) : x ≠ 0}` in `F_p × F_p`, as mixed-radix indices `a·p + b`.
pub fn eberhard_connection_set(p: usize) -> Result<Vec<usize>> {
    if !is_prime(p) || p % 12 != 11 {
        return Err(domain(format!("need a prime p ≡ 11 (mod 12), got {p}")));
    }
    let mut s: Vec<usize> = (1..p)
        .flat_map(|x| {
            let sq = x * x % p;
            [x * p + sq, x * p + (p - sq) % p]
        })
        .collect();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// Cayley graph of `F_p × F_p` on the parabola pair `{(x, ±x²)}`.
///
/// Self-checks: `2(p−1)`-regular, triangle-free, diameter 2, and no two
/// vertices with seven common neighbours (no `K_{2,7}` subgraph).
pub fn eberhard(p: usize) -> Result<Graph> {
    let s = eberhard_connection_set(p)?;
    let g = cayley_abelian(&[p, p], &s)?;
    if g.regular_degree() != Some(2 * (p - 1)) {
        return Err(self_check(format!(
            "Eberhard graph for p = {p} is not {}-regular",
            2 * (p - 1)
        )));
    }
    if !g.is_triangle_free() {
        return Err(self_check("Eberhard graph has a triangle"));
    }
    if g.diameter()? != Distance::Finite(2) {
        return Err(self_check("Eberhard graph does not have diameter 2"));
    }
    // Vertex transitivity: checking pairs through vertex 0 suffices.
    if (1..g.n()).any(|v| g.common_neighbor_count(0, v) >= 7) {
        return Err(self_check("Eberhard graph contains K_{2,7}"));
    }
    Ok(g)
}
