//! Subcommand implementations. Each returns the text to print and the exit
//! status; `main` only does argument parsing and I/O.
//!
//! Exit statuses: 0 success, 1 failed verification, 2 structural or input
//! errors, 3 an oracle search space over its cap.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use multitour::census::DEFAULT_ARBORESCENCE_CAP;
use multitour::tour::DEFAULT_BRUTEFORCE_CAP;
use multitour::{
    check_settles, construct_tour_with, count_tours, count_tours_bruteforce,
    enumerate_arborescences, kappa, summarize, validate_tour, DirectedMultigraph, Tour,
    TourOptions,
};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::format::{dump_graph, parse_graph_file, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Graph(#[from] multitour::Error),
    #[error("{0}")]
    Argument(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Graph(multitour::Error::SearchSpaceTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

/// Rendered command output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn load_graph(path: &Path) -> Result<DirectedMultigraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_graph_file(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

/// Which multiplier vector a command should use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiChoice {
    Primitive,
    Explicit(Vec<BigUint>),
}

impl std::str::FromStr for PiChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "primitive" {
            return Ok(PiChoice::Primitive);
        }
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<BigUint>()
                    .map_err(|_| format!("`{x}` is not a nonnegative integer"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PiChoice::Explicit)
    }
}

impl PiChoice {
    fn resolve(&self, g: &DirectedMultigraph) -> Result<Vec<BigUint>, CliError> {
        match self {
            PiChoice::Primitive => Ok(summarize(g)?.primitive_period.into_entries()),
            PiChoice::Explicit(entries) => Ok(entries.clone()),
        }
    }
}

fn by_vertex(g: &DirectedMultigraph, values: &[BigUint]) -> Value {
    let map: Map<String, Value> = g
        .vertex_names()
        .iter()
        .zip(values)
        .map(|(name, x)| (name.clone(), Value::String(x.to_string())))
        .collect();
    Value::Object(map)
}

fn by_vertex_text(g: &DirectedMultigraph, values: &[BigUint]) -> String {
    g.vertex_names()
        .iter()
        .zip(values)
        .map(|(name, x)| format!("{name}={x}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values always serialise");
    text.push('\n');
    text
}

pub fn analyze(g: &DirectedMultigraph, as_json: bool) -> Result<Output, CliError> {
    let s = summarize(g)?;
    let period = s.primitive_period.entries();
    if as_json {
        return Ok(Output::ok(pretty(&json!({
            "kappa": by_vertex(g, s.kappa.counts()),
            "pham_index": s.pham_index.to_string(),
            "period_vector": by_vertex(g, period),
            "unicycles": s.unicycles.to_string(),
            "min_tour_length": s.minimal_tour_length.to_string(),
            "eulerian": s.eulerian,
        }))));
    }
    let mut text = String::new();
    writeln!(text, "kappa: {}", by_vertex_text(g, s.kappa.counts())).unwrap();
    writeln!(text, "pham_index: {}", s.pham_index).unwrap();
    writeln!(text, "period_vector: {}", by_vertex_text(g, period)).unwrap();
    writeln!(text, "unicycles: {}", s.unicycles).unwrap();
    writeln!(text, "min_tour_length: {}", s.minimal_tour_length).unwrap();
    writeln!(text, "eulerian: {}", s.eulerian).unwrap();
    Ok(Output::ok(text))
}

pub fn tour(
    g: &DirectedMultigraph,
    pi: &PiChoice,
    start_vertex: Option<&str>,
    as_json: bool,
) -> Result<Output, CliError> {
    let pi = pi.resolve(g)?;
    let start_vertex = start_vertex.map(|name| g.vertex_index(name)).transpose()?;
    let options = TourOptions {
        start_vertex,
        start_edge: None,
    };
    let t = construct_tour_with(g, &pi, options)?;
    if as_json {
        return Ok(Output::ok(pretty(&json!({
            "pi": by_vertex(g, &pi),
            "length": t.len().to_string(),
            "tour": t.edge_ids(),
        }))));
    }
    Ok(Output::ok(format!(
        "pi: {}\nlength: {}\ntour: {}\n",
        by_vertex_text(g, &pi),
        t.len(),
        t
    )))
}

pub fn count(
    g: &DirectedMultigraph,
    pi: &PiChoice,
    start_edge: usize,
    oracle_cap: Option<u64>,
    as_json: bool,
) -> Result<Output, CliError> {
    let pi = pi.resolve(g)?;
    let formula = count_tours(g, &pi, start_edge)?.value;
    let oracle = oracle_cap
        .map(|cap| count_tours_bruteforce(g, &pi, start_edge, cap))
        .transpose()?
        .map(|c| c.value);
    let agree = oracle.as_ref().is_none_or(|o| *o == formula);
    let code = if agree { 0 } else { 1 };
    if as_json {
        let mut value = json!({
            "start_edge": start_edge,
            "pi": by_vertex(g, &pi),
            "count": formula.to_string(),
        });
        if let Some(oracle) = &oracle {
            value["oracle"] = Value::String(oracle.to_string());
            value["agree"] = Value::Bool(agree);
        }
        return Ok(Output {
            text: pretty(&value),
            code,
        });
    }
    let text = match &oracle {
        None => format!("{formula}\n"),
        Some(o) => format!(
            "{formula} (oracle: {o}, {})\n",
            if agree { "agree" } else { "disagree" }
        ),
    };
    Ok(Output { text, code })
}

pub fn rotor(
    g: &DirectedMultigraph,
    trials: usize,
    seed: u64,
    as_json: bool,
) -> Result<Output, CliError> {
    let summary = check_settles(g, trials, seed)?;
    let code = if summary.all_passed() { 0 } else { 1 };
    if as_json {
        let outcomes: Vec<Value> = summary
            .outcomes
            .iter()
            .map(|o| {
                json!({
                    "walker": g.vertex_name(o.walker),
                    "transient": o.transient_length.to_string(),
                    "period": o.period.to_string(),
                    "multi_eulerian": o.is_multi_eulerian,
                    "pass": o.passed,
                })
            })
            .collect();
        let value = json!({
            "seed": seed.to_string(),
            "expected_period": summary.expected_period.to_string(),
            "trials": outcomes,
            "passed": summary.passed,
            "failed": summary.failed,
            "max_transient": summary.max_transient.to_string(),
        });
        return Ok(Output {
            text: pretty(&value),
            code,
        });
    }
    let mut text = String::new();
    writeln!(text, "expected_period: {}", summary.expected_period).unwrap();
    for (i, o) in summary.outcomes.iter().enumerate() {
        writeln!(
            text,
            "trial {i}: walker {}, transient {}, period {}, multi_eulerian {}, {}",
            g.vertex_name(o.walker),
            o.transient_length,
            o.period,
            o.is_multi_eulerian,
            if o.passed { "pass" } else { "FAIL" }
        )
        .unwrap();
    }
    writeln!(
        text,
        "passed: {}/{}, max_transient: {}",
        summary.passed,
        summary.outcomes.len(),
        summary.max_transient
    )
    .unwrap();
    Ok(Output { text, code })
}

/// Parses a comma-separated list of edge ids.
pub fn parse_tour(text: &str) -> Result<Tour, CliError> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Argument(format!("`{x}` is not an edge id")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Tour::new)
}

pub fn verify(
    g: &DirectedMultigraph,
    pi: &PiChoice,
    t: &Tour,
    as_json: bool,
) -> Result<Output, CliError> {
    let pi = pi.resolve(g)?;
    let report = validate_tour(g, &pi, t)?;
    let code = if report.is_valid() { 0 } else { 1 };
    let text = if as_json {
        pretty(&json!({
            "valid": report.is_valid(),
            "violation": report.violation.as_ref().map(|v| v.to_string()),
        }))
    } else {
        match &report.violation {
            None => "valid\n".to_owned(),
            Some(v) => format!("invalid: {v}\n"),
        }
    };
    Ok(Output { text, code })
}

pub fn trees(
    g: &DirectedMultigraph,
    root: &str,
    cap: Option<u64>,
    as_json: bool,
) -> Result<Output, CliError> {
    let w = g.vertex_index(root)?;
    let count = kappa(g, w)?;
    let list = enumerate_arborescences(g, w, cap.unwrap_or(DEFAULT_ARBORESCENCE_CAP))?;
    let agree = count == BigUint::from(list.len());
    let code = if agree { 0 } else { 1 };
    if as_json {
        let value = json!({
            "root": root,
            "kappa": count.to_string(),
            "arborescences": list,
            "agree": agree,
        });
        return Ok(Output {
            text: pretty(&value),
            code,
        });
    }
    let mut text = format!(
        "root: {root}\nkappa: {count}\narborescences: {}\n",
        list.len()
    );
    for tree in &list {
        let ids: Vec<String> = tree.iter().map(usize::to_string).collect();
        writeln!(text, "{{{}}}", ids.join(",")).unwrap();
    }
    Ok(Output { text, code })
}

pub fn dump(g: &DirectedMultigraph) -> Output {
    Output::ok(dump_graph(g))
}

/// Oracle cap used by `count --oracle` when none is given.
pub const DEFAULT_ORACLE_CAP: u64 = DEFAULT_BRUTEFORCE_CAP;
