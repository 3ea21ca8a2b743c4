use hadwiger2::certificates::{
    clebsch_certificate, format_cover, four_cover_check, kneser_certificate, mesner_certificate,
    verify_certificate, CliqueFamilyCertificate, ThetaInterval,
};
use hadwiger2::constructions::{clebsch, generalized_kneser_geq, mesner, steiner_3_6_22};
use hadwiger2::Graph;

use crate::io::{emit, fail, header, read_graphs, read_text, Failure, Outcome};
use crate::{CertifyArgs, Cli};

pub const KINDS: &[&str] = &["clebsch", "mesner", "kneser", "cover4", "verify"];

/// Clique-search nodes for the lower bound when `--budget` is unset.
const DEFAULT_CLIQUE_NODES: u64 = 1_000_000;

/// Certificate text preceded by `#` lines with the header and the bounds.
fn emit_certificate(cli: &Cli, g: &Graph, c: &CliqueFamilyCertificate) -> Result<Outcome, Failure> {
    if !verify_certificate(g, c)? {
        eprintln!("error: certificate does not verify");
        return Ok(Outcome::Fails);
    }
    let budget = cli.budget.unwrap_or(DEFAULT_CLIQUE_NODES);
    let interval = ThetaInterval::of_budgeted(g, c, Some(budget))?;
    let text = format!(
        "{}\n# n={} cliques={}\n# theta_f={}\n# pinned={}\n# omega_exact={}\n{c}",
        header(cli),
        g.n(),
        c.cliques.len(),
        interval,
        interval.is_pinned(),
        interval.omega_exact
    );
    emit(cli, &text)?;
    Ok(Outcome::Holds)
}

pub fn run(cli: &Cli, a: &CertifyArgs) -> Result<Outcome, Failure> {
    let p = &a.params;
    match a.kind.as_str() {
        "clebsch" => {
            let g = clebsch().complement();
            let c = clebsch_certificate(&g)?;
            emit_certificate(cli, &g, &c)
        }
        "mesner" => {
            let sys = steiner_3_6_22();
            let g = mesner(&sys)?.complement();
            let c = mesner_certificate(&g, &sys)?;
            emit_certificate(cli, &g, &c)
        }
        "kneser" => {
            let (Some(n), Some(k)) = (p.n, p.k) else {
                return fail("kneser certificates need --n and --k");
            };
            let (t, r) = (p.t.unwrap_or(1), p.r.unwrap_or(0));
            let g = generalized_kneser_geq(n, k, t)?;
            let c = kneser_certificate(n, k, t, r)?;
            emit_certificate(cli, &g, &c)
        }
        "cover4" => {
            let mut text = header(cli) + "\n";
            let mut outcome = Outcome::Holds;
            for (i, g) in read_graphs(cli)?.iter().enumerate() {
                let r = four_cover_check(g)?;
                text.push_str(&format!("# graph={i} exhaustive={}\n", r.exhaustive));
                match &r.cover {
                    Some(cover) => text.push_str(&format_cover(cover)),
                    None => {
                        text.push_str("# no cover found\n");
                        let missing = if r.exhaustive {
                            Outcome::Fails
                        } else {
                            Outcome::Budget
                        };
                        outcome = outcome.combine(missing);
                    }
                }
            }
            emit(cli, &text)?;
            Ok(outcome)
        }
        "verify" => {
            let Some(path) = &a.cert else {
                return fail("--kind verify needs --cert");
            };
            let c: CliqueFamilyCertificate = read_text(Some(path))?.parse()?;
            let graphs = read_graphs(cli)?;
            let [g] = graphs.as_slice() else {
                return fail("--kind verify expects exactly one input graph");
            };
            emit_certificate(cli, g, &c)
        }
        other => fail(format!(
            "unknown kind {other:?}; expected one of {}",
            KINDS.join(", ")
        )),
    }
}
