use hadwiger2::conjectures::wheel5;
use hadwiger2::constructions::{
    andrasfai, cayley_abelian, clebsch, cycle, eberhard, generalized_kneser_geq,
    generalized_kneser_leq, gewirtz, higman_sims, hoffman_singleton, hypercube, k_subsets_colex,
    kneser, mesner, petersen, steiner_3_6_22, subset_label, triangle_free_process, AbelianGroup,
};
use hadwiger2::graph::{graph6, inflate, InflationSpec};
use hadwiger2::Graph;

use crate::io::{fail, header, read_text, write_file, Failure, Outcome};
use crate::{BuildArgs, Cli, Params};

pub const FAMILIES: &[&str] = &[
    "cycle",
    "complete",
    "petersen",
    "hypercube",
    "clebsch",
    "andrasfai",
    "hoffman-singleton",
    "triangle-free-process",
    "kneser",
    "kneser-geq",
    "kneser-leq",
    "eberhard",
    "mesner",
    "gewirtz",
    "higman-sims",
    "wheel5",
    "cayley",
    "inflate",
    "file",
];

fn need(v: Option<usize>, name: &str, family: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure(format!("family {family} needs --{name}")))
}

fn indices(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}

fn group_labels(orders: &[usize]) -> Result<Vec<String>, Failure> {
    let group = AbelianGroup::new(orders)?;
    Ok((0..group.size())
        .map(|x| {
            let c: Vec<String> = group.coords(x).iter().map(|v| v.to_string()).collect();
            format!("({})", c.join(","))
        })
        .collect())
}

fn kneser_labels(n: usize, k: usize) -> Vec<String> {
    k_subsets_colex(n, k)
        .into_iter()
        .map(subset_label)
        .collect()
}

fn input_graph(cli: &Cli) -> Result<Graph, Failure> {
    let graphs = graph6::decode_all(&read_text(cli.input.as_deref())?)?;
    match graphs.as_slice() {
        [g] => Ok(g.clone()),
        _ => fail(format!("expected one input graph, got {}", graphs.len())),
    }
}

/// The graph of `family` and one label per vertex.
pub fn construct(cli: &Cli, family: &str, p: &Params) -> Result<(Graph, Vec<String>), Failure> {
    let need = |v: Option<usize>, name: &str| need(v, name, family);
    let plain = |g: Graph| {
        let labels = indices(g.n());
        (g, labels)
    };
    Ok(match family {
        "cycle" => plain(cycle(need(p.n, "n")?)?),
        "complete" => plain(Graph::complete(need(p.n, "n")?)),
        "petersen" => plain(petersen()),
        "hypercube" => {
            let d = need(p.d, "d")?;
            let g = hypercube(d)?;
            let labels = (0..g.n()).map(|v| format!("{v:0d$b}")).collect();
            (g, labels)
        }
        "clebsch" => plain(clebsch()),
        "andrasfai" => plain(andrasfai(need(p.d, "d")?)?),
        "hoffman-singleton" => plain(hoffman_singleton()),
        "triangle-free-process" => plain(triangle_free_process(need(p.n, "n")?, cli.seed)?),
        "kneser" => {
            let (n, k) = (need(p.n, "n")?, need(p.k, "k")?);
            (kneser(n, k)?, kneser_labels(n, k))
        }
        "kneser-geq" | "kneser-leq" => {
            let (n, k, t) = (need(p.n, "n")?, need(p.k, "k")?, need(p.t, "t")?);
            let g = if family == "kneser-geq" {
                generalized_kneser_geq(n, k, t)?
            } else {
                generalized_kneser_leq(n, k, t)?
            };
            (g, kneser_labels(n, k))
        }
        "eberhard" => {
            let q = need(p.p, "p")?;
            (eberhard(q)?, group_labels(&[q, q])?)
        }
        "mesner" => plain(mesner(&steiner_3_6_22())?),
        "gewirtz" => plain(gewirtz(&steiner_3_6_22(), p.point.unwrap_or(0))?),
        "higman-sims" => plain(higman_sims(&steiner_3_6_22())?),
        "wheel5" => plain(wheel5()),
        "cayley" => {
            if p.orders.is_empty() {
                return fail("family cayley needs --orders");
            }
            (
                cayley_abelian(&p.orders, &p.connection)?,
                group_labels(&p.orders)?,
            )
        }
        "inflate" => {
            let base = input_graph(cli)?;
            let spec = match (p.uniform, p.mult.is_empty()) {
                (Some(c), true) => InflationSpec::uniform(base, c),
                (None, false) => InflationSpec::new(base, p.mult.clone())?,
                _ => return fail("family inflate needs exactly one of --mult and --uniform"),
            };
            let mut copy = vec![0; spec.base().n()];
            let labels = spec
                .projection()
                .iter()
                .map(|&x| {
                    copy[x] += 1;
                    format!("{x}.{}", copy[x] - 1)
                })
                .collect();
            (inflate(&spec), labels)
        }
        "file" => plain(input_graph(cli)?),
        _ => {
            return fail(format!(
                "unknown family {family:?}; expected one of {}",
                FAMILIES.join(", ")
            ))
        }
    })
}

pub fn run(cli: &Cli, a: &BuildArgs) -> Result<Outcome, Failure> {
    let (mut g, labels) = construct(cli, &a.family, &a.params)?;
    if a.complement {
        g = g.complement();
    }
    eprintln!("{}", header(cli));
    eprintln!(
        "# {}: {} vertices, {} edges",
        a.family,
        g.n(),
        g.edge_count()
    );
    if let Some(path) = &a.labels {
        write_file(path, &(labels.join("\n") + "\n"))?;
    }
    crate::io::emit(cli, &(graph6::encode(&g) + "\n"))?;
    Ok(Outcome::Holds)
}
