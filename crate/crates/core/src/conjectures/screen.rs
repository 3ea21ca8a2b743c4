//! Screening a graph against the properties forced on minimal and minimum
//! counterexamples to the chromatic and strong (branch sets of size at most
//! two) versions of Hadwiger's conjecture for independence number two.

use std::fmt;

use super::{connected_dominating_matching_budgeted, dominating_edge, Searched};
use crate::error::{precondition, Result};
use crate::graph::{Bitset, Distance, Graph};
use crate::matching::{
    chromatic_number_alpha2, is_factor_critical, is_vertex_critical_alpha2, matching_number,
};

/// Nodes allowed to the connected dominating matching search.
const CDM_BUDGET: u64 = 5_000_000;
/// Largest order for which Hamiltonicity is decided.
const HAMILTONIAN_ORDER: usize = 30;
const HAMILTONIAN_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotEvaluated,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotEvaluated => "not-evaluated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVerdict {
    /// Property number, 1 to 22.
    pub id: u8,
    pub statement: &'static str,
    pub status: Status,
    /// Witness or reason.
    pub detail: String,
    /// Known to hold only for minimum counterexamples to the chromatic version.
    pub advisory: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    MinimumHc,
    MinimalHc,
    MinimumShc,
    MinimalShc,
}

impl Block {
    pub const ALL: [Block; 4] = [
        Block::MinimumHc,
        Block::MinimalHc,
        Block::MinimumShc,
        Block::MinimalShc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Block::MinimumHc => "minimum-hc",
            Block::MinimalHc => "minimal-hc",
            Block::MinimumShc => "minimum-shc",
            Block::MinimalShc => "minimal-shc",
        }
    }

    /// Properties `1..=last` are required.
    pub fn last_property(self) -> u8 {
        match self {
            Block::MinimumHc => 22,
            Block::MinimalHc => 21,
            Block::MinimumShc | Block::MinimalShc => 16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Survival {
    Survives,
    /// The first required property that fails.
    Fails(u8),
    /// Nothing fails but some required property was not evaluated.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreeningReport {
    pub n: usize,
    pub chi: usize,
    pub omega: usize,
    pub kappa: usize,
    pub min_degree: usize,
    pub verdicts: Vec<PropertyVerdict>,
}

impl ScreeningReport {
    pub fn verdict(&self, id: u8) -> &PropertyVerdict {
        &self.verdicts[usize::from(id) - 1]
    }

    pub fn survival(&self, block: Block) -> Survival {
        let required = &self.verdicts[..usize::from(block.last_property())];
        if let Some(v) = required.iter().find(|v| v.status == Status::Fail) {
            Survival::Fails(v.id)
        } else if required.iter().any(|v| v.status == Status::NotEvaluated) {
            Survival::Undetermined
        } else {
            Survival::Survives
        }
    }

    /// Ids of failing properties among `1..=last`.
    pub fn failing(&self, last: u8) -> Vec<u8> {
        self.verdicts
            .iter()
            .filter(|v| v.id <= last && v.status == Status::Fail)
            .map(|v| v.id)
            .collect()
    }

    /// Survives (or may survive) at least one block.
    pub fn is_candidate(&self) -> bool {
        Block::ALL
            .iter()
            .any(|&b| !matches!(self.survival(b), Survival::Fails(_)))
    }
}

const STATEMENTS: [&str; 22] = [
    "G is chi(G)-critical",
    "G is not decomposable",
    "|V(G)| = 2 chi(G) - 1",
    "for all xy in E(co-G), G - x - y is (chi(G)-1)-critical",
    "for all v, co-G - v has a perfect matching",
    "G has no non-empty connected dominating matching",
    "for all xy in E(G), alpha(G - xy) = 3",
    "kappa(G) >= chi(G)",
    "delta(G) >= chi(G)",
    "G is Hamiltonian",
    "for all v, G - v has a perfect matching",
    "diam(co-G) = 2",
    "for all xy in E(co-G), N(x) and N(y) meet",
    "for all xy in E(co-G), each b in N(x)∩N(y) has a non-neighbour in N(x)∖N(y) and in N(y)∖N(x)",
    "for all xy in E(co-G), a in N(x)∖N(y), c in N(y)∖N(x): ac in E iff a, c have a common non-neighbour in N(x)∩N(y)",
    "any two non-adjacent vertices lie in an induced C5",
    "chi(G) >= 7",
    "kappa(G) >= 7",
    "omega(G) <= chi(G) - 3",
    "delta(G) >= chi(G) + 1",
    "for all xy in E(co-G), 2 <= |N(x)∖N(y)|, |N(y)∖N(x)| <= chi(G) - 4 and 5 <= |N(x)∩N(y)| <= 2 chi(G) - 7",
    "for all xy in E(G), chi(G - xy) < chi(G)",
];

fn verdict(id: u8, status: Status, detail: impl Into<String>) -> PropertyVerdict {
    PropertyVerdict {
        id,
        statement: STATEMENTS[usize::from(id) - 1],
        status,
        detail: detail.into(),
        advisory: id == 22,
    }
}

fn check(id: u8, ok: bool, detail: impl Into<String>) -> PropertyVerdict {
    verdict(id, if ok { Status::Pass } else { Status::Fail }, detail)
}

/// For a non-adjacent pair `x, y`: `A = N(x) ∖ N(y)`, `B = N(x) ∩ N(y)`,
/// `C = N(y) ∖ N(x)`.
fn abc(g: &Graph, x: usize, y: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let (nx, ny) = (g.neighbor_set(x), g.neighbor_set(y));
    let a = nx.iter().filter(|&v| !ny.contains(v)).collect();
    let b = nx.iter().filter(|&v| ny.contains(v)).collect();
    let c = ny.iter().filter(|&v| !nx.contains(v)).collect();
    (a, b, c)
}

/// First non-adjacent pair `x, y` for which `G − x − y` is not
/// `(χ(G) − 1)`-critical.
fn pair_deletion_violation(g: &Graph, chi: usize) -> Result<Option<(usize, usize)>> {
    for (x, y) in g.complement().edges() {
        let rest = g.remove_vertices(&[x, y]);
        if chromatic_number_alpha2(&rest)? + 1 != chi || !is_vertex_critical_alpha2(&rest)? {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

/// Whether `G − x − y` is `(χ(G) − 1)`-critical for every non-adjacent
/// pair `x, y` (`α(G) ≤ 2`).
pub fn is_pair_deletion_critical(g: &Graph) -> Result<bool> {
    let chi = chromatic_number_alpha2(g)?;
    Ok(pair_deletion_violation(g, chi)?.is_none())
}

/// Exact `χ(G − xy)` for an edge `xy` of a graph with `α(G) ≤ 2`.
///
/// `G − xy` has independence number at most three, and only triples
/// `{x, y, w}` with `w` adjacent to neither can be independent. A colouring
/// either uses only classes of size at most two, a matching in `Ḡ + xy`, or
/// colours some such triple alike and the rest optimally.
pub fn chromatic_number_edge_deleted(g: &Graph, x: usize, y: usize) -> Result<usize> {
    g.check_set(&[x, y])?;
    if !g.has_edge(x, y) {
        return Err(precondition(format!("{x}{y} is not an edge")));
    }
    if !g.alpha_at_most_two() {
        return Err(precondition("edge-deleted chromatic number needs α ≤ 2"));
    }
    let n = g.n();
    let mut best = n - matching_number(&g.complement().add_edge(x, y));
    for w in 0..n {
        if w != x && w != y && !g.has_edge(w, x) && !g.has_edge(w, y) {
            best = best.min(1 + chromatic_number_alpha2(&g.remove_vertices(&[x, y, w]))?);
        }
    }
    Ok(best)
}

/// A Hamiltonian cycle as a vertex sequence, by depth-first extension of a
/// path from vertex 0 that tries the neighbour with fewest free neighbours
/// first and prunes when a free vertex has fewer than two usable
/// neighbours. `exact` is false if the node budget ran out.
pub fn hamiltonian_cycle(g: &Graph, budget: Option<u64>) -> Searched<Option<Vec<usize>>> {
    let n = g.n();
    if n < 3 || !g.is_connected() || g.min_degree().unwrap_or(0) < 2 {
        return Searched {
            value: None,
            exact: true,
        };
    }
    struct St<'a> {
        g: &'a Graph,
        free: Bitset,
        path: Vec<usize>,
        nodes: u64,
        budget: Option<u64>,
        aborted: bool,
    }
    fn viable(s: &St) -> bool {
        let last = *s.path.last().expect("non-empty path");
        s.free.iter().all(|v| {
            let mut usable = s.free.intersection_len(s.g.row(v));
            usable += usize::from(s.g.has_edge(v, last)) + usize::from(s.g.has_edge(v, 0));
            usable >= 2
        })
    }
    fn rec(s: &mut St) -> bool {
        s.nodes += 1;
        if s.budget.is_some_and(|b| s.nodes > b) {
            s.aborted = true;
            return false;
        }
        let last = *s.path.last().expect("non-empty path");
        if s.free.is_empty() {
            return s.g.has_edge(last, 0);
        }
        if !viable(s) {
            return false;
        }
        let mut next: Vec<usize> = s.free.iter().filter(|&v| s.g.has_edge(last, v)).collect();
        next.sort_by_key(|&v| (s.free.intersection_len(s.g.row(v)), v));
        for v in next {
            s.free.remove(v);
            s.path.push(v);
            if rec(s) {
                return true;
            }
            s.path.pop();
            s.free.insert(v);
            if s.aborted {
                return false;
            }
        }
        false
    }
    let mut free = g.vertex_set();
    free.remove(0);
    let mut s = St {
        g,
        free,
        path: vec![0],
        nodes: 0,
        budget,
        aborted: false,
    };
    let found = rec(&mut s);
    Searched {
        value: found.then_some(s.path),
        exact: !s.aborted,
    }
}

/// Evaluates properties 1 to 22 on a connected graph with `α(G) = 2`.
pub fn table1_screen(g: &Graph) -> Result<ScreeningReport> {
    if !g.is_connected() {
        return Err(precondition("screening needs a connected graph"));
    }
    let omega = g.clique_number();
    if !g.alpha_at_most_two() || omega == g.n() {
        return Err(precondition(
            "screening needs independence number exactly 2",
        ));
    }
    let n = g.n();
    let h = g.complement();
    let chi = chromatic_number_alpha2(g)?;
    let kappa = g.vertex_connectivity()?;
    let delta = g.min_degree().unwrap_or(0);
    let non_edges = h.edges();
    let mut v = Vec::with_capacity(22);

    v.push(check(
        1,
        is_vertex_critical_alpha2(g)?,
        format!("chi = {chi}"),
    ));
    v.push(check(
        2,
        h.is_connected(),
        if h.is_connected() {
            "complement connected"
        } else {
            "complement disconnected"
        },
    ));
    v.push(check(
        3,
        n + 1 == 2 * chi,
        format!("|V| = {n}, 2 chi - 1 = {}", 2 * chi - 1),
    ));
    v.push(match pair_deletion_violation(g, chi)? {
        None => check(4, true, ""),
        Some((x, y)) => check(
            4,
            false,
            format!("G - {x} - {y} is not {}-critical", chi - 1),
        ),
    });
    v.push(check(5, is_factor_critical(&h), ""));
    let cdm = connected_dominating_matching_budgeted(g, Some(CDM_BUDGET))?;
    v.push(match cdm.value {
        Some(m) => check(
            6,
            false,
            format!("connected dominating matching {:?}", m.edges.edges),
        ),
        None if cdm.exact => check(6, true, ""),
        None => verdict(6, Status::NotEvaluated, "search budget exhausted"),
    });
    v.push(match dominating_edge(g) {
        None => check(7, true, ""),
        Some((x, y)) => check(7, false, format!("dominating edge {x}{y}")),
    });
    v.push(check(
        8,
        kappa >= chi,
        format!("kappa = {kappa}, chi = {chi}"),
    ));
    v.push(check(
        9,
        delta >= chi,
        format!("delta = {delta}, chi = {chi}"),
    ));
    v.push(if n > HAMILTONIAN_ORDER {
        verdict(
            10,
            Status::NotEvaluated,
            format!("order {n} above {HAMILTONIAN_ORDER}"),
        )
    } else {
        let r = hamiltonian_cycle(g, Some(HAMILTONIAN_BUDGET));
        match r.value {
            Some(c) => check(10, true, format!("cycle {c:?}")),
            None if r.exact => check(10, false, "no Hamiltonian cycle"),
            None => verdict(10, Status::NotEvaluated, "search budget exhausted"),
        }
    });
    v.push(check(11, is_factor_critical(g), ""));
    let diam = h.diameter()?;
    v.push(check(
        12,
        diam == Distance::Finite(2),
        format!("diam(co-G) = {diam}"),
    ));

    let mut p13 = None;
    let mut p14 = None;
    let mut p15 = None;
    let mut p16 = None;
    let mut p21 = None;
    for &(x, y) in &non_edges {
        let (a, b, c) = abc(g, x, y);
        if p13.is_none() && b.is_empty() {
            p13 = Some(format!("N({x}) and N({y}) are disjoint"));
        }
        if p14.is_none() {
            let misses = |bv: usize, side: &[usize]| side.iter().any(|&s| !g.has_edge(bv, s));
            if let Some(&bv) = b.iter().find(|&&bv| !misses(bv, &a) || !misses(bv, &c)) {
                p14 = Some(format!("pair {x},{y}: b = {bv}"));
            }
        }
        if p15.is_none() {
            'outer: for &av in &a {
                for &cv in &c {
                    let common = b
                        .iter()
                        .any(|&bv| !g.has_edge(av, bv) && !g.has_edge(cv, bv));
                    if g.has_edge(av, cv) != common {
                        p15 = Some(format!("pair {x},{y}: a = {av}, c = {cv}"));
                        break 'outer;
                    }
                }
            }
        }
        if p16.is_none() {
            let in_c5 = b.iter().any(|&bv| {
                a.iter().any(|&av| {
                    c.iter()
                        .any(|&cv| g.has_edge(av, cv) && !g.has_edge(bv, av) && !g.has_edge(bv, cv))
                })
            });
            if !in_c5 {
                p16 = Some(format!("{x},{y} lie in no induced C5"));
            }
        }
        if p21.is_none() {
            let side_ok = |s: usize| 2 <= s && s + 4 <= chi;
            let mid_ok = 5 <= b.len() && b.len() + 7 <= 2 * chi;
            if !(side_ok(a.len()) && side_ok(c.len()) && mid_ok) {
                p21 = Some(format!(
                    "pair {x},{y}: |A| = {}, |B| = {}, |C| = {}",
                    a.len(),
                    b.len(),
                    c.len()
                ));
            }
        }
    }
    for (id, found) in [(13, p13), (14, p14), (15, p15), (16, p16)] {
        v.push(match found {
            None => check(id, true, ""),
            Some(d) => check(id, false, d),
        });
    }
    v.push(check(17, chi >= 7, format!("chi = {chi}")));
    v.push(check(18, kappa >= 7, format!("kappa = {kappa}")));
    v.push(check(
        19,
        omega + 3 <= chi,
        format!("omega = {omega}, chi = {chi}"),
    ));
    v.push(check(
        20,
        delta > chi,
        format!("delta = {delta}, chi = {chi}"),
    ));
    v.push(match p21 {
        None => check(21, true, ""),
        Some(d) => check(21, false, d),
    });
    let mut p22 = None;
    for (x, y) in g.edges() {
        if chromatic_number_edge_deleted(g, x, y)? >= chi {
            p22 = Some(format!("chi(G - {x}{y}) = chi"));
            break;
        }
    }
    v.push(match p22 {
        None => check(22, true, ""),
        Some(d) => check(22, false, d),
    });
    Ok(ScreeningReport {
        n,
        chi,
        omega,
        kappa,
        min_degree: delta,
        verdicts: v,
    })
}
