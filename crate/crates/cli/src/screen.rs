use hadwiger2::conjectures::{table1_screen, Block, Status, Survival};
use hadwiger2::graph::graph6;

use crate::io::{fail, read_graphs, Failure, Outcome, Report};
use crate::Cli;

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let mut report = Report::new(cli);
    for (i, g) in read_graphs(cli)?.iter().enumerate() {
        if !g.alpha_at_most_two() || g.clique_number() == g.n() {
            return fail(format!("graph {i} does not have independence number 2"));
        }
        let r = table1_screen(g)?;
        report.kv("graph", i);
        report.kv("graph6", graph6::encode(g));
        report.kv("n", r.n);
        report.kv("chi", r.chi);
        report.kv("omega", r.omega);
        report.kv("kappa", r.kappa);
        report.kv("min_degree", r.min_degree);
        for v in &r.verdicts {
            let tag = if v.advisory { " advisory" } else { "" };
            report.line(format!("P{}={}{tag}", v.id, v.status));
            if !v.detail.is_empty() {
                report.line(format!("P{}.detail={}", v.id, v.detail));
            }
        }
        let mut first_failure = None;
        for b in Block::ALL {
            let s = match r.survival(b) {
                Survival::Survives => "survives".to_string(),
                Survival::Undetermined => "undetermined".to_string(),
                Survival::Fails(id) => {
                    first_failure = Some(first_failure.map_or(id, |f: u8| f.min(id)));
                    format!("fails:P{id}")
                }
            };
            report.kv(&format!("block.{}", b.name()), s);
        }
        report.kv("candidate", r.is_candidate());
        let evaluated = r
            .verdicts
            .iter()
            .filter(|v| v.status != Status::NotEvaluated)
            .count();
        match (r.is_candidate(), first_failure) {
            (false, Some(id)) => report.summary(format!("graph {i}: not a candidate (fails P{id})")),
            _ => report.summary(format!(
                "graph {i}: candidate for at least one block ({evaluated} of 22 properties evaluated)"
            )),
        }
    }
    report.finish(cli)?;
    Ok(Outcome::Holds)
}
