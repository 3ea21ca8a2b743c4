use std::sync::Mutex;

use hadwiger2::conjectures::{
    builtin_patterns, connected_matching_max, enumerate_alpha2, k_model_size2_max, table1_screen,
    Block, EnumerateOptions, Survival,
};
use hadwiger2::graph::graph6;
use hadwiger2::Graph;

use crate::check::{evaluate, witness_ok, CheckContext};
use crate::io::{fail, Failure, Outcome, Report};
use crate::{Cli, EnumerateArgs};

pub const CHECKS: &[&str] = &[
    "none", "cdm", "4cm", "shc-chi", "had2", "seagulls", "screen",
];

#[derive(Clone, Copy, Default)]
struct Tally {
    graphs: u64,
    violations: u64,
    undecided: u64,
    skipped: u64,
}

enum GraphResult {
    Ok,
    Violation,
    Undecided,
    Skipped,
}

fn check_graph(name: &str, g: &Graph, cx: &CheckContext) -> GraphResult {
    match name {
        "none" => GraphResult::Ok,
        "had2" => {
            let cm = connected_matching_max(g, cx.budget);
            let h = k_model_size2_max(g, cx.budget);
            if !cm.exact || !h.exact {
                GraphResult::Undecided
            } else if cm.value.size() > h.value.order() || g.clique_number() > h.value.order() {
                GraphResult::Violation
            } else {
                GraphResult::Ok
            }
        }
        "seagulls" => {
            if g.clique_number() == g.n() {
                return GraphResult::Skipped;
            }
            let mut any = false;
            for k in 1..=3 {
                let cx = CheckContext {
                    k: Some(k),
                    patterns: Vec::new(),
                    ..*cx
                };
                match evaluate("seagulls", g, &cx) {
                    Ok(v) => {
                        let fact = |key: &str| {
                            v.facts
                                .iter()
                                .find(|(k, _)| *k == key)
                                .map(|(_, v)| v.as_str())
                        };
                        if fact("equivalence") == Some("mismatch") {
                            return GraphResult::Violation;
                        }
                        any = true;
                    }
                    Err(_) => return GraphResult::Skipped,
                }
            }
            if any {
                GraphResult::Ok
            } else {
                GraphResult::Skipped
            }
        }
        "screen" => {
            if g.clique_number() == g.n() {
                return GraphResult::Skipped;
            }
            match table1_screen(g) {
                Ok(r) => match r.survival(Block::MinimalHc) {
                    Survival::Fails(_) => GraphResult::Ok,
                    Survival::Survives => GraphResult::Violation,
                    Survival::Undetermined => GraphResult::Undecided,
                },
                Err(_) => GraphResult::Skipped,
            }
        }
        _ => match evaluate(name, g, cx) {
            Err(_) => GraphResult::Skipped,
            Ok(v) => {
                if let Some(m) = &v.witness {
                    if !witness_ok(name, g, m) {
                        return GraphResult::Violation;
                    }
                }
                match v.outcome {
                    Outcome::Holds => GraphResult::Ok,
                    Outcome::Fails => GraphResult::Violation,
                    Outcome::Budget => GraphResult::Undecided,
                }
            }
        },
    }
}

struct State {
    tally: Vec<Tally>,
    violating: Vec<String>,
}

pub fn run(cli: &Cli, a: &EnumerateArgs) -> Result<Outcome, Failure> {
    if !CHECKS.contains(&a.check.as_str()) {
        return fail(format!(
            "unknown check {:?}; expected one of {}",
            a.check,
            CHECKS.join(", ")
        ));
    }
    if a.min_n > a.max_n {
        return fail("--min-n exceeds --max-n");
    }
    let cx = CheckContext {
        seed: cli.seed,
        budget: cli.budget,
        k: None,
        patterns: builtin_patterns()
            .into_iter()
            .map(|(n, h)| (n.to_string(), h))
            .collect(),
    };
    let state = Mutex::new(State {
        tally: vec![Tally::default(); a.max_n + 1],
        violating: Vec::new(),
    });
    let opts = EnumerateOptions {
        min_n: a.min_n,
        max_n: a.max_n,
        workers: a.workers,
    };
    enumerate_alpha2(opts, |g| {
        let r = check_graph(&a.check, g, &cx);
        let mut s = state.lock().expect("no panics while locked");
        let t = &mut s.tally[g.n()];
        t.graphs += 1;
        match r {
            GraphResult::Ok => {}
            GraphResult::Violation => {
                t.violations += 1;
                s.violating.push(graph6::encode(g));
            }
            GraphResult::Undecided => t.undecided += 1,
            GraphResult::Skipped => t.skipped += 1,
        }
    })?;
    let mut s = state.into_inner().expect("no panics while locked");
    s.violating.sort();
    let mut report = Report::new(cli);
    report.kv("check", &a.check);
    let mut total = Tally::default();
    for n in a.min_n..=a.max_n {
        let t = s.tally[n];
        report.line(format!(
            "n={n} graphs={} violations={} undecided={} skipped={}",
            t.graphs, t.violations, t.undecided, t.skipped
        ));
        total.graphs += t.graphs;
        total.violations += t.violations;
        total.undecided += t.undecided;
        total.skipped += t.skipped;
    }
    for g6 in &s.violating {
        report.kv("violation", g6);
    }
    report.kv("total_graphs", total.graphs);
    report.kv("total_violations", total.violations);
    report.kv("total_undecided", total.undecided);
    report.kv("total_skipped", total.skipped);
    report.summary(format!(
        "{} graphs checked with {}: {} violations, {} undecided",
        total.graphs, a.check, total.violations, total.undecided
    ));
    report.finish(cli)?;
    Ok(if total.violations > 0 {
        Outcome::Fails
    } else if total.undecided > 0 {
        Outcome::Budget
    } else {
        Outcome::Holds
    })
}
