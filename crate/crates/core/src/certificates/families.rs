//! Certificates for the Clebsch, Mesner and generalised Kneser families.

use super::{verify_certificate, CliqueFamilyCertificate};
use crate::constructions::{binomial, k_subsets_colex, mesner, SteinerSystem, CLEBSCH_SRG};
use crate::error::{domain, precondition, self_check, Result};
use crate::graph::Graph;
use crate::Rational;

fn checked(g: &Graph, c: CliqueFamilyCertificate, name: &str) -> Result<CliqueFamilyCertificate> {
    if verify_certificate(g, &c)? {
        Ok(c)
    } else {
        Err(self_check(format!("{name} certificate does not verify")))
    }
}

/// For the complement of the Clebsch graph: the 16 non-neighbourhoods
/// `V ∖ (N(v) ∪ {v})`, each a 5-clique, with bound 16/5.
pub fn clebsch_certificate(g: &Graph) -> Result<CliqueFamilyCertificate> {
    if g.n() != 16 || g.complement().srg_parameters() != Some(CLEBSCH_SRG) {
        return Err(precondition(
            "input is not the complement of the Clebsch graph",
        ));
    }
    let cliques = (0..16)
        .map(|v| (0..16).filter(|&w| w != v && !g.has_edge(v, w)).collect())
        .collect();
    checked(
        g,
        CliqueFamilyCertificate::new(cliques, Rational::new(16, 5)),
        "Clebsch",
    )
}

/// For the complement of the Mesner graph of `sys`: one clique per point
/// (the 21 blocks through it), each block in 6 of them, bound 22/6.
pub fn mesner_certificate(g: &Graph, sys: &SteinerSystem) -> Result<CliqueFamilyCertificate> {
    if *g != mesner(sys)?.complement() {
        return Err(precondition(
            "input is not the complement of the Mesner graph of this Steiner system",
        ));
    }
    let cliques = (0..SteinerSystem::POINTS)
        .map(|p| sys.blocks_through(p))
        .collect();
    checked(
        g,
        CliqueFamilyCertificate::new(cliques, Rational::new(22, 6)),
        "Mesner",
    )
}

/// `|F_{n,k,t,r}| = Σ_{i=t+r}^{t+2r} C(t+2r, i)·C(n−t−2r, k−i)`: the
/// `k`-sets meeting a fixed `(t+2r)`-set in at least `t+r` points.
pub fn intersecting_family_size(n: usize, k: usize, t: usize, r: usize) -> u64 {
    let s = t + 2 * r;
    if s > n {
        return 0;
    }
    (t + r..=s.min(k))
        .map(|i| binomial(s as u64, i as u64) * binomial((n - s) as u64, (k - i) as u64))
        .sum()
}

/// `f_{n,k,t} = max_{r : t+2r ≤ n} |F_{n,k,t,r}|`.
pub fn aktf_bound(n: usize, k: usize, t: usize) -> Result<u64> {
    if t == 0 || t > k || k > n {
        return Err(domain(format!(
            "need 1 ≤ t ≤ k ≤ n, got n = {n}, k = {k}, t = {t}"
        )));
    }
    Ok((0..)
        .take_while(|r| t + 2 * r <= n)
        .map(|r| intersecting_family_size(n, k, t, r))
        .max()
        .unwrap_or(0))
}

/// Certificate for `K(n, k, ≥ t)` (vertices: `k`-subsets in colex order).
///
/// With `s = t + 2r`, each `s`-subset `S` contributes the clique of
/// `k`-sets `A` with `|A ∩ S| ≥ t + r`. Every vertex lies in
/// `Σ_{i ≥ t+r} C(k,i)·C(n−k,s−i)` of the `C(n,s)` cliques, so the bound is
/// `C(n,s)` over that count, which equals `C(n,k) / |F_{n,k,t,r}|`.
pub fn kneser_certificate(
    n: usize,
    k: usize,
    t: usize,
    r: usize,
) -> Result<CliqueFamilyCertificate> {
    let s = t + 2 * r;
    if t == 0 || k == 0 || k > n || s > n {
        return Err(domain(format!(
            "need t ≥ 1, 1 ≤ k ≤ n, t + 2r ≤ n; got n = {n}, k = {k}, t = {t}, r = {r}"
        )));
    }
    if binomial(n as u64, k as u64) > 100_000 || binomial(n as u64, s as u64) > 100_000 {
        return Err(domain("certificate too large"));
    }
    let mult: u64 = (t + r..=s.min(k))
        .map(|i| binomial(k as u64, i as u64) * binomial((n - k) as u64, (s - i) as u64))
        .sum();
    if mult == 0 {
        return Err(domain(format!(
            "no {k}-set meets an {s}-set in {} points",
            t + r
        )));
    }
    let vertices = k_subsets_colex(n, k);
    let cliques: Vec<Vec<usize>> = k_subsets_colex(n, s)
        .into_iter()
        .map(|set| {
            (0..vertices.len())
                .filter(|&a| (vertices[a] & set).count_ones() as usize >= t + r)
                .collect()
        })
        .collect();
    let bound = Rational::new(cliques.len() as u64, mult);
    let g = crate::constructions::generalized_kneser_geq(n, k, t)?;
    checked(&g, CliqueFamilyCertificate::new(cliques, bound), "Kneser")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{clebsch, generalized_kneser_geq, steiner_3_6_22};

    /// Largest pairwise `t`-intersecting family of `k`-subsets of `[n]`.
    fn brute_max_family(n: usize, k: usize, t: usize) -> usize {
        let g = generalized_kneser_geq(n, k, t).unwrap();
        let mut best = 0;
        crate::graph::clique::for_each_clique(&g, |c| {
            best = best.max(c.len());
            true
        });
        best
    }

    #[test]
    fn clebsch_and_mesner() {
        let g = clebsch().complement();
        let c = clebsch_certificate(&g).unwrap();
        assert_eq!((c.r(), c.bound), (16, Rational::new(16, 5)));
        assert!(c.cliques.iter().all(|x| x.len() == 5));
        assert!(c.multiplicities(16).iter().all(|&m| m == 5));
        assert!(clebsch_certificate(&clebsch()).is_err());
        let sys = steiner_3_6_22();
        let m = mesner(&sys).unwrap().complement();
        let c = mesner_certificate(&m, &sys).unwrap();
        assert_eq!((c.r(), c.bound), (22, Rational::new(22, 6)));
        assert!(c.cliques.iter().all(|x| x.len() == 21));
        assert!(c.multiplicities(77).iter().all(|&m| m == 6));
    }

    #[test]
    fn kneser_examples() {
        let c = kneser_certificate(5, 2, 1, 0).unwrap();
        assert_eq!(c.r(), 5);
        assert!(c.cliques.iter().all(|x| x.len() == 4));
        assert_eq!(c.bound, Rational::new(5, 2));
        assert!(kneser_certificate(7, 3, 1, 0).is_ok());
        // Multiplicity formula against a direct count of qualifying S.
        let (n, k, t, r) = (7, 3, 2, 1);
        let c = kneser_certificate(n, k, t, r).unwrap();
        let verts = k_subsets_colex(n, k);
        let subsets = k_subsets_colex(n, t + 2 * r);
        for (a, m) in c.multiplicities(verts.len()).into_iter().enumerate() {
            let direct = subsets
                .iter()
                .filter(|&&s| (verts[a] & s).count_ones() as usize >= t + r)
                .count();
            assert_eq!(m, direct);
        }
        assert!(kneser_certificate(5, 2, 0, 0).is_err());
        assert!(kneser_certificate(5, 2, 1, 3).is_err());
    }

    #[test]
    fn aktf_matches_brute_force() {
        assert_eq!(aktf_bound(5, 2, 1).unwrap(), 4);
        assert_eq!(aktf_bound(6, 3, 3).unwrap(), 1);
        for n in 1..=6 {
            for k in 1..=n {
                for t in 1..=k {
                    assert_eq!(
                        aktf_bound(n, k, t).unwrap() as usize,
                        brute_max_family(n, k, t),
                        "n={n} k={k} t={t}"
                    );
                }
            }
        }
        assert!(aktf_bound(4, 2, 3).is_err());
    }
}
