//! The plain-text graph file format.
//!
//! One edge record per line, `TAIL HEAD [MULT]`, separated by whitespace.
//! Vertex tokens are ASCII alphanumerics and `_`; `MULT` is a positive
//! integer and expands to that many parallel edges with consecutive ids.
//! Blank lines and lines whose first non-space character is `#` are ignored.
//! Vertices are numbered in order of first appearance.

use std::collections::HashMap;

use multitour::DirectedMultigraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: bad multiplicity `{value}` (expected a positive integer)")]
    BadMultiplicity { line: usize, value: String },
    #[error("graph file contains no edges")]
    EmptyGraph,
}

fn is_vertex_token(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_graph_file(text: &str) -> Result<DirectedMultigraph, ParseError> {
    let mut names: Vec<&str> = Vec::new();
    let mut seen: HashMap<&str, ()> = HashMap::new();
    let mut edges: Vec<(&str, &str)> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let syntax = |reason: String| ParseError::Syntax { line, reason };
        let (tail, head, mult) = match fields.as_slice() {
            [tail, head] => (*tail, *head, None),
            [tail, head, mult] => (*tail, *head, Some(*mult)),
            _ => {
                return Err(syntax(format!(
                    "expected `TAIL HEAD [MULT]`, found {} field(s)",
                    fields.len()
                )))
            }
        };
        for token in [tail, head] {
            if !is_vertex_token(token) {
                return Err(syntax(format!("invalid vertex name `{token}`")));
            }
        }
        let count = match mult {
            None => 1,
            Some(value) => match value.parse::<usize>() {
                Ok(n) if n > 0 => n,
                _ => {
                    return Err(ParseError::BadMultiplicity {
                        line,
                        value: value.to_owned(),
                    })
                }
            },
        };
        for token in [tail, head] {
            if seen.insert(token, ()).is_none() {
                names.push(token);
            }
        }
        edges.extend(std::iter::repeat_n((tail, head), count));
    }
    if edges.is_empty() {
        return Err(ParseError::EmptyGraph);
    }
    Ok(DirectedMultigraph::build(&names, &edges).expect("every edge endpoint was registered"))
}

/// Renders `g` in the file format, folding runs of identical consecutive
/// edges into one record with a multiplicity. Isolated vertices cannot be
/// represented and are dropped.
pub fn dump_graph(g: &DirectedMultigraph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let mut i = 0;
    while i < edges.len() {
        let run = edges[i..].iter().take_while(|e| **e == edges[i]).count();
        let (tail, head) = (g.vertex_name(edges[i].tail), g.vertex_name(edges[i].head));
        if run == 1 {
            out.push_str(&format!("{tail} {head}\n"));
        } else {
            out.push_str(&format!("{tail} {head} {run}\n"));
        }
        i += run;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> DirectedMultigraph {
        DirectedMultigraph::build(&["a", "b"], &[("a", "b"), ("b", "a"), ("b", "a")]).unwrap()
    }

    #[test]
    fn parses_records() {
        assert_eq!(parse_graph_file("a b\nb a\nb a\n").unwrap(), g2());
        assert_eq!(parse_graph_file("a b 1\nb a 2\n").unwrap(), g2());
        assert_eq!(
            parse_graph_file("# comment\n\n   # indented comment\na b\n  b   a 2  \n").unwrap(),
            g2()
        );
    }

    #[test]
    fn vertices_follow_first_appearance() {
        let g = parse_graph_file("z y\ny x\nx z\n").unwrap();
        assert_eq!(g.vertex_names(), &["z", "y", "x"]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            parse_graph_file("a\n").unwrap_err(),
            ParseError::Syntax {
                line: 1,
                reason: "expected `TAIL HEAD [MULT]`, found 1 field(s)".into()
            }
        );
        assert!(matches!(
            parse_graph_file("a b\na b c d\n").unwrap_err(),
            ParseError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph_file("a b-c\n").unwrap_err(),
            ParseError::Syntax { line: 1, .. }
        ));
        for bad in ["0", "-1", "x", "1.5"] {
            assert_eq!(
                parse_graph_file(&format!("a b\nb a {bad}\n")).unwrap_err(),
                ParseError::BadMultiplicity {
                    line: 2,
                    value: bad.into()
                }
            );
        }
        assert_eq!(
            parse_graph_file("# nothing\n\n").unwrap_err(),
            ParseError::EmptyGraph
        );
        assert_eq!(parse_graph_file("").unwrap_err(), ParseError::EmptyGraph);
    }

    #[test]
    fn dump_round_trips() {
        let text = "a b\nb a 2\n";
        assert_eq!(dump_graph(&g2()), text);
        for source in ["a b\nb c\nc a\n", "x x 3\nx y\ny x\nx y\n", "a a\n"] {
            let g = parse_graph_file(source).unwrap();
            assert_eq!(parse_graph_file(&dump_graph(&g)).unwrap(), g);
        }
    }
}
