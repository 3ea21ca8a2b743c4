//! Fractional clique-cover certificates.
//!
//! A multiset of cliques `X_1, …, X_r` in which every vertex lies in at
//! least `r/k` members shows `θ_f(G) ≤ k`. Together with `θ_f(G) ≥ |V|/ω(G)`
//! this pins `θ_f` for the families built here.

mod families;
mod good_bad;
mod lifting;

pub use families::{
    aktf_bound, clebsch_certificate, intersecting_family_size, kneser_certificate,
    mesner_certificate,
};
pub use good_bad::{
    classify_good_bad_outcome, good_bad_partition, partition_properties, GoodBadOutcome,
    GoodBadPartition,
};
pub use lifting::{four_cover_check, lift_certificate, lift_cover, FourCover};

use std::fmt;
use std::str::FromStr;

use crate::error::{precondition, Error, Result};
use crate::graph::clique::{colouring_bound, is_clique, maximum_clique_budgeted};
use crate::graph::Graph;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamilyCertificate {
    /// The cliques, repetition allowed; each sorted.
    pub cliques: Vec<Vec<usize>>,
    /// The claimed upper bound `k` on `θ_f`.
    pub bound: Rational,
}

impl CliqueFamilyCertificate {
    pub fn new(cliques: Vec<Vec<usize>>, bound: Rational) -> CliqueFamilyCertificate {
        let cliques = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        CliqueFamilyCertificate { cliques, bound }
    }

    /// `r`, the number of cliques counted with repetition.
    pub fn r(&self) -> usize {
        self.cliques.len()
    }

    /// How many cliques contain each vertex of a graph on `n` vertices.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for c in &self.cliques {
            for &v in c {
                if v < n {
                    m[v] += 1;
                }
            }
        }
        m
    }
}

/// True iff every member is a clique of `g` and every vertex lies in at
/// least `r/k` members, compared exactly.
pub fn verify_certificate(g: &Graph, c: &CliqueFamilyCertificate) -> Result<bool> {
    for x in &c.cliques {
        g.check_set(x)?;
    }
    if *c.bound.numer() == 0 {
        return Ok(false);
    }
    if !c
        .cliques
        .iter()
        .all(|x| is_clique(g, x) && !has_duplicate(x))
    {
        return Ok(false);
    }
    let (num, den) = (*c.bound.numer() as u128, *c.bound.denom() as u128);
    let r = c.r() as u128;
    // mult ≥ r / (num/den)  ⇔  mult·num ≥ r·den
    Ok(c.multiplicities(g.n())
        .iter()
        .all(|&m| m as u128 * num >= r * den))
}

fn has_duplicate(sorted: &[usize]) -> bool {
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// The certified upper bound on `θ_f(g)`; errors if the certificate fails.
pub fn theta_f_upper(g: &Graph, c: &CliqueFamilyCertificate) -> Result<Rational> {
    if verify_certificate(g, c)? {
        Ok(c.bound)
    } else {
        Err(precondition("certificate does not verify"))
    }
}

/// `|V| / ω(G)`, a lower bound on `θ_f(G)` (exact clique search).
pub fn theta_f_lower_via_omega(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Err(precondition("θ_f lower bound needs a non-empty graph"));
    }
    let omega = maximum_clique_budgeted(g, None).clique.len();
    Ok(Rational::new(g.n() as u64, omega as u64))
}

/// `|V| / ω(G)` if the clique search finishes within `budget` nodes,
/// otherwise the weaker `|V| / U` for a colouring bound `U ≥ ω`. The flag
/// is true when ω was found exactly.
pub fn theta_f_lower_budgeted(g: &Graph, budget: Option<u64>) -> Result<(Rational, bool)> {
    if g.n() == 0 {
        return Err(precondition("θ_f lower bound needs a non-empty graph"));
    }
    let search = maximum_clique_budgeted(g, budget);
    let omega = if search.exact {
        search.clique.len()
    } else {
        colouring_bound(g)
    };
    Ok((Rational::new(g.n() as u64, omega as u64), search.exact))
}

/// Known bounds `lower ≤ θ_f ≤ upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaInterval {
    pub lower: Rational,
    pub upper: Rational,
    /// Whether `lower` comes from the exact clique number.
    pub omega_exact: bool,
}

impl ThetaInterval {
    pub fn of(g: &Graph, c: &CliqueFamilyCertificate) -> Result<ThetaInterval> {
        ThetaInterval::of_budgeted(g, c, None)
    }

    /// As [`ThetaInterval::of`], with the clique search capped at `budget`
    /// nodes.
    pub fn of_budgeted(
        g: &Graph,
        c: &CliqueFamilyCertificate,
        budget: Option<u64>,
    ) -> Result<ThetaInterval> {
        let upper = theta_f_upper(g, c)?;
        let (lower, omega_exact) = theta_f_lower_budgeted(g, budget)?;
        Ok(ThetaInterval {
            lower,
            upper,
            omega_exact,
        })
    }

    pub fn is_pinned(&self) -> bool {
        self.lower == self.upper
    }
}

impl fmt::Display for ThetaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pinned() {
            write!(f, "{}", fmt_rational(self.upper))
        } else {
            write!(
                f,
                "[{}, {}]",
                fmt_rational(self.lower),
                fmt_rational(self.upper)
            )
        }
    }
}

/// `a/b` even when the denominator is 1.
pub fn fmt_rational(q: Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if b == 0 {
        return Err(bad());
    }
    Ok(Rational::new(a, b))
}

fn clique_line(c: &[usize]) -> String {
    let mut s = String::from("X");
    for v in c {
        s.push(' ');
        s.push_str(&v.to_string());
    }
    s
}

fn parse_clique_lines<'a>(lines: impl Iterator<Item = &'a str>) -> Result<Vec<Vec<usize>>> {
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            if it.next() != Some("X") {
                return Err(Error::Parse(format!(
                    "expected a clique line \"X v1 v2 ...\", got {l:?}"
                )));
            }
            it.map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad vertex {t:?}")))
            })
            .collect()
        })
        .collect()
}

/// `theta_f a/b` followed by one `X v1 v2 …` line per clique.
impl fmt::Display for CliqueFamilyCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theta_f {}", fmt_rational(self.bound))?;
        for c in &self.cliques {
            writeln!(f, "{}", clique_line(c))?;
        }
        Ok(())
    }
}

impl FromStr for CliqueFamilyCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty certificate".into()))?;
        let bound = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["theta_f", q] => parse_rational(q)?,
            _ => {
                return Err(Error::Parse(format!(
                    "expected \"theta_f <num>/<den>\", got {header:?}"
                )))
            }
        };
        Ok(CliqueFamilyCertificate::new(
            parse_clique_lines(lines)?,
            bound,
        ))
    }
}

/// `cover4` then one `X v1 v2 …` line per clique.
pub fn format_cover(cover: &[Vec<usize>]) -> String {
    let mut s = String::from("cover4\n");
    for c in cover {
        s.push_str(&clique_line(c));
        s.push('\n');
    }
    s
}

pub fn parse_cover(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = s.lines().filter(|l| !l.starts_with('#'));
    if lines.next().map(str::trim) != Some("cover4") {
        return Err(Error::Parse("expected header \"cover4\"".into()));
    }
    parse_clique_lines(lines)
}
