use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use hadwiger2::constructions::{higman_sims, steiner_3_6_22};
use hadwiger2::graph::graph6;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hadwiger2"))
        .args(args)
        .env_remove("HADWIGER2_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// The graph6 lines of a command's output.
fn graph6_lines(o: &Output) -> Vec<String> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

fn values<'a>(text: &'a str, key: &str) -> Vec<&'a str> {
    text.lines()
        .filter_map(|l| l.strip_prefix(key)?.strip_prefix('='))
        .collect()
}

const TWO_TRIANGLES: &str = "EQhO\n";

#[test]
fn build_examples() {
    let o = run(&["build", "--family", "cycle", "--n", "5"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(graph6_lines(&o), ["Dhc"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("# hadwiger2 "));
    assert!(err.contains("seed=0"));

    let o = run(&["build", "--family", "kneser", "--n", "5", "--k", "2"], "");
    let g = graph6::decode(&graph6_lines(&o)[0]).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(g.regular_degree(), Some(3));
    assert_eq!(g.girth(), hadwiger2::graph::Distance::Finite(5));

    let o = run(&["build", "--family", "eberhard", "--p", "11"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(graph6::decode(&graph6_lines(&o)[0]).unwrap().n(), 121);
}

#[test]
fn build_errors_exit_two() {
    assert_eq!(code(&run(&["build", "--family", "nope"], "")), 2);
    assert_eq!(
        code(&run(&["build", "--family", "eberhard", "--p", "13"], "")),
        2
    );
    assert_eq!(code(&run(&["build", "--family", "cycle"], "")), 2);
}

#[test]
fn build_writes_labels_and_complements() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("labels.txt");
    let out = dir.path().join("g.g6");
    let o = run(
        &[
            "build",
            "--family",
            "kneser",
            "--n",
            "5",
            "--k",
            "2",
            "--complement",
            "--labels",
            labels.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    let table = std::fs::read_to_string(&labels).unwrap();
    assert_eq!(table.lines().count(), 10);
    assert!(table.lines().next().unwrap().contains("{1,2}"));
    let text = std::fs::read_to_string(&out).unwrap();
    let g = graph6::decode_all(&text).unwrap().remove(0);
    assert_eq!(g.regular_degree(), Some(6));
}

#[test]
fn graph6_round_trips_through_file_family() {
    for input in ["Dhc", "I@Q@YiWw?", "EQhO", "@"] {
        let o = run(&["build", "--family", "file"], &format!("{input}\n"));
        assert_eq!(code(&o), 0);
        assert_eq!(graph6_lines(&o), [input]);
    }
    assert_eq!(code(&run(&["build", "--family", "file"], "Dhc\nDhc\n")), 2);
}

#[test]
fn check_cdm_examples() {
    let o = run(&["check", "--conjecture", "cdm"], "Dhc\n");
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(values(&text, "verdict"), ["holds"]);
    assert_eq!(values(&text, "witness_verified"), ["true"]);
    assert_eq!(values(&text, "branch_set").len(), 2);

    let o = run(&["check", "--conjecture", "cdm"], TWO_TRIANGLES);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("connected"));
}

#[test]
fn check_writes_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let o = run(
        &[
            "check",
            "--conjecture",
            "dominating-edge",
            "--witness",
            w.to_str().unwrap(),
        ],
        "Bw\n",
    );
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&w).unwrap();
    assert!(text.contains("model 1"));
    assert!(text.contains("B 0 1"));
    let o = run(&["check", "--conjecture", "dominating-edge"], "Dhc\n");
    assert_eq!(code(&o), 1);
}

#[test]
fn check_shc_half_on_higman_sims_complement() {
    let g = higman_sims(&steiner_3_6_22()).unwrap().complement();
    let o = run(
        &["check", "--conjecture", "shc-half"],
        &(graph6::encode(&g) + "\n"),
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(values(&text, "verdict"), ["holds"]);
    assert_eq!(values(&text, "model_order"), ["50"]);
    assert_eq!(values(&text, "branch_set").len(), 50);
}

#[test]
fn check_other_conjectures() {
    let o = run(&["check", "--conjecture", "seagulls", "--k", "1"], "Dhc\n");
    assert_eq!(code(&o), 0);
    assert_eq!(values(&stdout(&o), "equivalence"), ["consistent"]);
    assert_eq!(
        code(&run(&["check", "--conjecture", "seagulls"], "Dhc\n")),
        2
    );
    let o = run(&["check", "--conjecture", "4cm"], "Dhc\n");
    assert_eq!(code(&o), 0);
    let o = run(&["check", "--conjecture", "shc-chi"], "Dhc\n");
    assert_eq!(code(&o), 0);
    let o = run(&["check", "--conjecture", "unavoidable"], "Dhc\n");
    assert_eq!(code(&o), 1);
    assert_eq!(code(&run(&["check", "--conjecture", "bogus"], "Dhc\n")), 2);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(
        code(&run(&["check", "--conjecture", "cdm"], "not graph6!\n")),
        2
    );
    assert_eq!(code(&run(&["check", "--conjecture", "cdm"], "")), 2);
    assert_eq!(
        code(&run(
            &["--budget", "0", "check", "--conjecture", "cdm"],
            "Dhc\n"
        )),
        2
    );
}

#[test]
fn enumerate_examples() {
    let o = run(&["enumerate", "--max-n", "3", "--check", "cdm"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(
        values(&stdout(&o), "n=3 graphs"),
        ["2 violations=0 undecided=0 skipped=0"]
    );

    for check in ["cdm", "4cm"] {
        let o = run(&["enumerate", "--max-n", "7", "--check", check], "");
        assert_eq!(code(&o), 0);
        assert_eq!(values(&stdout(&o), "total_violations"), ["0"]);
    }
    assert_eq!(code(&run(&["enumerate", "--max-n", "11"], "")), 2);
}

#[test]
fn enumerate_workers_agree() {
    let a = run(&["enumerate", "--max-n", "7", "--check", "had2"], "");
    let b = run(
        &[
            "enumerate",
            "--max-n",
            "7",
            "--check",
            "had2",
            "--workers",
            "2",
        ],
        "",
    );
    let strip = |o: &Output| {
        stdout(o)
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn certify_examples() {
    let o = run(
        &[
            "certify", "--kind", "kneser", "--n", "5", "--k", "2", "--t", "1", "--r", "0",
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("# theta_f=5/2"));
    assert!(text.contains("theta_f 5/2"));

    let o = run(&["certify", "--kind", "clebsch"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("theta_f 16/5"));

    let k8 = graph6::encode(&hadwiger2::constructions::complete(8));
    let o = run(&["certify", "--kind", "cover4"], &(k8 + "\n"));
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("X ")).count(),
        4
    );
    for n in [20, 40] {
        let g = hadwiger2::constructions::triangle_free_process(n, 0)
            .unwrap()
            .complement();
        let r = hadwiger2::certificates::four_cover_check(&g).unwrap();
        let expected = match (&r.cover, r.exhaustive) {
            (Some(_), _) => 0,
            (None, true) => 1,
            (None, false) => 3,
        };
        let o = run(
            &["certify", "--kind", "cover4"],
            &(graph6::encode(&g) + "\n"),
        );
        assert_eq!(code(&o), expected, "n = {n}");
    }
}

#[test]
fn certify_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.txt");
    let graph = dir.path().join("g.g6");
    let o = run(
        &[
            "build",
            "--family",
            "kneser-geq",
            "--n",
            "7",
            "--k",
            "3",
            "--t",
            "1",
            "--out",
            graph.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    let o = run(
        &[
            "certify",
            "--kind",
            "kneser",
            "--n",
            "7",
            "--k",
            "3",
            "--out",
            cert.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    let verify = |g: &Path| {
        run(
            &[
                "certify",
                "--kind",
                "verify",
                "--cert",
                cert.to_str().unwrap(),
                "--in",
                g.to_str().unwrap(),
            ],
            "",
        )
    };
    let o = verify(&graph);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("theta_f 7/3"));
    let other = dir.path().join("other.g6");
    std::fs::write(
        &other,
        graph6::encode(&hadwiger2::graph::Graph::empty(35)) + "\n",
    )
    .unwrap();
    assert_eq!(code(&verify(&other)), 1);
}

#[test]
fn screen_examples() {
    let o = run(&["screen"], "Dhc\n");
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("not a candidate (fails P4)"));
    assert_eq!(values(&text, "P8"), ["fail"]);
    assert_eq!(values(&text, "candidate"), ["false"]);
    assert_eq!(code(&run(&["screen"], "C~\n")), 2);
}

#[test]
fn outputs_are_deterministic_and_seeded() {
    let args = ["build", "--family", "triangle-free-process", "--n", "40"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.stdout, b.stdout);
    let mut seeded = args.to_vec();
    seeded.extend(["--seed", "9"]);
    let c = run(&seeded, "");
    assert_ne!(a.stdout, c.stdout);
    let d = Command::new(env!("CARGO_BIN_EXE_hadwiger2"))
        .args(args)
        .env("HADWIGER2_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(c.stdout, d.stdout);
    assert!(String::from_utf8(d.stderr).unwrap().contains("seed=9"));
}
