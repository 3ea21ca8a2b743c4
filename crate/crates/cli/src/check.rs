use hadwiger2::conjectures::{
    builtin_patterns, connected_dominating_matching_budgeted, connected_matching_max,
    connected_perfect_matching_search, dominating_edge, is_connected_dominating_matching,
    k_model_size2_max, seagull_conditions, seagull_pack_exact, unavoidable_scan, verify_k_model,
    KModel,
};
use hadwiger2::graph::graph6;
use hadwiger2::matching::{chromatic_number_alpha2, Matching};
use hadwiger2::Graph;

use crate::io::{fail, read_graphs, read_text, write_file, Failure, Outcome, Report};
use crate::{CheckArgs, Cli};

pub const CONJECTURES: &[&str] = &[
    "cdm",
    "dominating-edge",
    "4cm",
    "shc-half",
    "shc-chi",
    "seagulls",
    "unavoidable",
];

/// Moves for the connected perfect matching search when `--budget` is unset.
const DEFAULT_MOVES: u64 = 10_000_000;

/// Result of one check on one graph.
pub struct Verdict {
    pub outcome: Outcome,
    pub facts: Vec<(&'static str, String)>,
    pub witness: Option<KModel>,
    pub summary: String,
}

impl Verdict {
    fn new(outcome: Outcome, summary: impl Into<String>) -> Verdict {
        Verdict {
            outcome,
            facts: Vec::new(),
            witness: None,
            summary: summary.into(),
        }
    }

    fn fact(mut self, key: &'static str, value: impl ToString) -> Verdict {
        self.facts.push((key, value.to_string()));
        self
    }

    fn with_witness(mut self, m: KModel) -> Verdict {
        self.witness = Some(m);
        self
    }
}

pub struct CheckContext {
    pub seed: u64,
    pub budget: Option<u64>,
    pub k: Option<usize>,
    pub patterns: Vec<(String, Graph)>,
}

fn require_alpha2(g: &Graph) -> Result<(), Failure> {
    if g.alpha_at_most_two() {
        Ok(())
    } else {
        fail("input has an independent set of size 3")
    }
}

/// Largest model found with branch sets of size at most two, searched
/// until one of order `target` appears.
fn small_branch_model(
    g: &Graph,
    target: usize,
    cx: &CheckContext,
) -> Result<(KModel, bool), Failure> {
    let n = g.n();
    if n > 14 && n % 2 == 0 && 2 * target <= n {
        let moves = cx.budget.unwrap_or(DEFAULT_MOVES);
        if let Some(m) = connected_perfect_matching_search(g, cx.seed, moves)? {
            return Ok((m, false));
        }
    }
    let found = k_model_size2_max(g, cx.budget.or(Some(DEFAULT_MOVES)));
    Ok((found.value, found.exact))
}

fn model_verdict(
    g: &Graph,
    target: usize,
    cx: &CheckContext,
    name: &str,
) -> Result<Verdict, Failure> {
    let (m, exact) = small_branch_model(g, target, cx)?;
    let order = m.order();
    let outcome = if order >= target {
        Outcome::Holds
    } else if exact {
        Outcome::Fails
    } else {
        Outcome::Budget
    };
    let summary = match outcome {
        Outcome::Holds => format!("{name} holds: K{order} model with branch sets of size ≤ 2"),
        Outcome::Fails => format!("{name} fails: had2 = {order} < {target}"),
        Outcome::Budget => format!("{name} undecided: best model has order {order} < {target}"),
    };
    Ok(Verdict::new(outcome, summary)
        .fact("target", target)
        .fact("model_order", order)
        .fact("exact", exact)
        .with_witness(m))
}

pub fn evaluate(name: &str, g: &Graph, cx: &CheckContext) -> Result<Verdict, Failure> {
    let n = g.n();
    match name {
        "cdm" => {
            require_alpha2(g)?;
            let found = connected_dominating_matching_budgeted(g, cx.budget)?;
            Ok(match found.value {
                Some(m) => {
                    let size = m.size();
                    Verdict::new(
                        Outcome::Holds,
                        format!("connected dominating matching of size {size}"),
                    )
                    .fact("size", size)
                    .with_witness(m.to_model())
                }
                None if found.exact => {
                    Verdict::new(Outcome::Fails, "no connected dominating matching")
                }
                None => Verdict::new(
                    Outcome::Budget,
                    "budget exhausted before a matching was found",
                ),
            }
            .fact("exact", found.exact))
        }
        "dominating-edge" => Ok(match dominating_edge(g) {
            Some((x, y)) => Verdict::new(Outcome::Holds, format!("dominating edge {x} {y}"))
                .with_witness(KModel::new(vec![vec![x, y]])),
            None => Verdict::new(Outcome::Fails, "no dominating edge"),
        }),
        "4cm" => {
            require_alpha2(g)?;
            let t = (n + 1) / 4;
            let found = connected_matching_max(g, cx.budget);
            let cm = found.value.size();
            let outcome = if cm >= t {
                Outcome::Holds
            } else if found.exact {
                Outcome::Fails
            } else {
                Outcome::Budget
            };
            Ok(Verdict::new(outcome, format!("cm = {cm}, needed {t}"))
                .fact("t", t)
                .fact("cm", cm)
                .fact("exact", found.exact)
                .with_witness(found.value.to_model()))
        }
        "shc-half" => {
            require_alpha2(g)?;
            model_verdict(g, n.div_ceil(2), cx, "shc-half")
        }
        "shc-chi" => {
            require_alpha2(g)?;
            let chi = chromatic_number_alpha2(g)?;
            Ok(model_verdict(g, chi, cx, "shc-chi")?.fact("chi", chi))
        }
        "seagulls" => {
            let Some(k) = cx.k else {
                return fail("seagulls needs --k");
            };
            let r = seagull_conditions(g, k)?;
            let packing = seagull_pack_exact(g, k)?;
            let agree = r.all_hold() == packing.is_some();
            let equivalence = match (agree, r.is_w5) {
                (_, true) => "exempt-w5",
                (true, false) => "consistent",
                (false, false) => "mismatch",
            };
            let mut v = match &packing {
                Some(p) => Verdict::new(Outcome::Holds, format!("{k} disjoint seagulls"))
                    .with_witness(KModel::new(p.iter().map(|s| s.to_vec()).collect())),
                None => Verdict::new(Outcome::Fails, format!("no {k} disjoint seagulls")),
            };
            v = v
                .fact("k", k)
                .fact("order", r.order)
                .fact("connectivity", r.connectivity)
                .fact("kappa", r.kappa)
                .fact("cliques", r.cliques)
                .fact("cliques_exhaustive", r.cliques_exhaustive)
                .fact("matching", r.matching)
                .fact("complement_matching", r.complement_matching)
                .fact("conditions", r.all_hold())
                .fact("equivalence", equivalence);
            if let Some(c) = r.violating_clique {
                v = v.fact("violating_clique", join(&c));
            }
            Ok(v)
        }
        "unavoidable" => {
            let graphs: Vec<Graph> = cx.patterns.iter().map(|(_, h)| h.clone()).collect();
            let hits = unavoidable_scan(g, &graphs);
            let missing: Vec<&str> = cx
                .patterns
                .iter()
                .zip(&hits)
                .filter(|(_, &h)| !h)
                .map(|((name, _), _)| name.as_str())
                .collect();
            let mut v = if missing.is_empty() {
                Verdict::new(Outcome::Holds, "contains every pattern")
            } else {
                Verdict::new(Outcome::Fails, format!("missing {}", missing.join(", ")))
            };
            for ((pname, _), hit) in cx.patterns.iter().zip(hits) {
                v.facts.push(("contains", format!("{pname}:{hit}")));
            }
            Ok(v)
        }
        _ => fail(format!(
            "unknown conjecture {name:?}; expected one of {}",
            CONJECTURES.join(", ")
        )),
    }
}

/// Re-checks a witness from scratch.
pub fn witness_ok(name: &str, g: &Graph, m: &KModel) -> bool {
    if !verify_k_model(g, m) {
        return false;
    }
    match name {
        "cdm" | "dominating-edge" => {
            if m.branch_sets.iter().any(|b| b.len() != 2) {
                return false;
            }
            let edges = m.branch_sets.iter().map(|b| (b[0], b[1]));
            is_connected_dominating_matching(g, &Matching::new(edges))
        }
        "4cm" => m.branch_sets.iter().all(|b| b.len() == 2),
        "seagulls" => m.branch_sets.iter().all(|b| b.len() == 3),
        _ => m.branch_sets.iter().all(|b| b.len() <= 2),
    }
}

pub fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(cli: &Cli, a: &CheckArgs) -> Result<Outcome, Failure> {
    if !CONJECTURES.contains(&a.conjecture.as_str()) {
        return fail(format!(
            "unknown conjecture {:?}; expected one of {}",
            a.conjecture,
            CONJECTURES.join(", ")
        ));
    }
    let mut patterns: Vec<(String, Graph)> = builtin_patterns()
        .into_iter()
        .map(|(name, h)| (name.to_string(), h))
        .collect();
    if let Some(path) = &a.patterns {
        let extra = graph6::decode_all(&read_text(Some(path))?)?;
        patterns.extend(
            extra
                .into_iter()
                .enumerate()
                .map(|(i, h)| (format!("file{i}"), h)),
        );
    }
    let cx = CheckContext {
        seed: cli.seed,
        budget: cli.budget,
        k: a.k,
        patterns,
    };
    let graphs = read_graphs(cli)?;
    let mut report = Report::new(cli);
    report.kv("conjecture", &a.conjecture);
    let mut witnesses = String::new();
    let mut outcome = Outcome::Holds;
    for (i, g) in graphs.iter().enumerate() {
        let v = evaluate(&a.conjecture, g, &cx)?;
        report.kv("graph", i);
        report.kv("n", g.n());
        report.kv("graph6", graph6::encode(g));
        for (key, value) in &v.facts {
            report.kv(key, value);
        }
        if let Some(m) = &v.witness {
            if !witness_ok(&a.conjecture, g, m) {
                return fail(format!("witness for graph {i} does not verify"));
            }
            report.kv("witness_verified", true);
            if a.witness.is_some() {
                witnesses.push_str(&format!("# graph {i}\n{m}"));
            } else {
                for b in &m.branch_sets {
                    report.kv("branch_set", join(b));
                }
            }
        }
        let word = match v.outcome {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Budget => "undecided",
        };
        report.kv("verdict", word);
        report.summary(format!("graph {i}: {}", v.summary));
        outcome = outcome.combine(v.outcome);
    }
    if let Some(path) = &a.witness {
        write_file(path, &witnesses)?;
    }
    report.finish(cli)?;
    Ok(outcome)
}
