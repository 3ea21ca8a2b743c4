use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use hadwiger2::graph::graph6;
use hadwiger2::Graph;

use crate::Cli;

/// Any error that ends the run with exit code 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<hadwiger2::Error> for Failure {
    fn from(e: hadwiger2::Error) -> Failure {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure(e.to_string())
    }
}

pub fn fail<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Holds,
    /// The search ran out of budget without deciding.
    Budget,
    Fails,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Holds => 0,
            Outcome::Fails => 1,
            Outcome::Budget => 3,
        }
    }

    /// A definite failure beats an undecided run, which beats success.
    pub fn combine(self, other: Outcome) -> Outcome {
        self.max(other)
    }
}

/// Version, seed and the command line, as one `#` line.
pub fn header(cli: &Cli) -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!(
        "# hadwiger2 {} seed={} args={}",
        env!("CARGO_PKG_VERSION"),
        cli.seed,
        args.join(" ")
    )
}

pub fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Failure(format!("cannot read {}: {e}", p.display())))
        }
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Every graph6 graph in `--in` (or stdin); at least one is required.
pub fn read_graphs(cli: &Cli) -> Result<Vec<Graph>, Failure> {
    let graphs = graph6::decode_all(&read_text(cli.input.as_deref())?)?;
    if graphs.is_empty() {
        return fail("no graph6 input");
    }
    Ok(graphs)
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))
}

/// Line-oriented output sent to `--out` or stdout when finished.
pub struct Report {
    text: String,
}

impl Report {
    pub fn new(cli: &Cli) -> Report {
        let mut r = Report {
            text: String::new(),
        };
        r.line(header(cli));
        r
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn kv(&mut self, key: &str, value: impl fmt::Display) {
        self.line(format!("{key}={value}"));
    }

    /// Human-readable summary, kept as a comment so the report stays
    /// machine-parsable.
    pub fn summary(&mut self, s: impl AsRef<str>) {
        self.line(format!("# {}", s.as_ref()));
    }

    pub fn finish(self, cli: &Cli) -> Result<(), Failure> {
        emit(cli, &self.text)
    }
}

pub fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(p) => write_file(p, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
