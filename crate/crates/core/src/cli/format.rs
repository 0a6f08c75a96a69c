use std::fmt::Write as _;

use thiserror::Error;

use crate::error::Error;
use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> InputError {
    InputError::Parse {
        line,
        msg: msg.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub g: Graph,
    pub k: usize,
}

fn vertex(tok: Option<&str>, n: usize, line: usize) -> Result<Vertex, InputError> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing vertex"))?;
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("bad vertex `{tok}`")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parses `p contract <n> <m> <k>` followed by `e <u> <v>` lines (1-based).
/// Lines starting with `c` are comments.
pub fn parse_instance(text: &str) -> Result<Instance, InputError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if toks.next() != Some("contract") {
                    return Err(parse_err(line, "expected `p contract <n> <m> <k>`"));
                }
                let nums: Vec<usize> = toks
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| parse_err(line, "header values must be non-negative integers"))?;
                let [n, m, k] = nums[..] else {
                    return Err(parse_err(line, "expected `p contract <n> <m> <k>`"));
                };
                if n == 0 {
                    return Err(parse_err(line, "graph needs at least one vertex"));
                }
                header = Some((n, m, k));
            }
            Some("e") => {
                let (n, _, _) = header.ok_or_else(|| parse_err(line, "edge before header"))?;
                let u = vertex(toks.next(), n, line)?;
                let v = vertex(toks.next(), n, line)?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens"));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m, k) = header.ok_or_else(|| parse_err(0, "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, edges)?;
    if !g.is_connected() {
        return Err(Error::Disconnected.into());
    }
    Ok(Instance { g, k })
}

/// Parses a list of `e <u> <v>` lines (1-based) and checks they are edges.
pub fn parse_edge_list(text: &str, g: &Graph) -> Result<Vec<Edge>, InputError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("e") => {
                let u = vertex(toks.next(), g.n(), line)?;
                let v = vertex(toks.next(), g.n(), line)?;
                if !g.has_edge(u, v) {
                    return Err(Error::EdgeNotInGraph(u + 1, v + 1).into());
                }
                out.push(Edge::new(u, v));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    Ok(out)
}

pub fn write_instance(g: &Graph, k: usize, comment: &str) -> String {
    let mut s = String::new();
    if !comment.is_empty() {
        let _ = writeln!(s, "c {comment}");
    }
    let _ = writeln!(s, "p contract {} {} {}", g.n(), g.m(), k);
    for Edge(u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn write_edge_list(edges: &[Edge]) -> String {
    edges
        .iter()
        .map(|Edge(u, v)| format!("e {} {}\n", u + 1, v + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "c K4\np contract 4 6 1\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

    #[test]
    fn round_trip() {
        let inst = parse_instance(K4).unwrap();
        assert_eq!(inst.k, 1);
        assert_eq!(inst.g.m(), 6);
        let again = parse_instance(&write_instance(&inst.g, 1, "")).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn malformed() {
        assert!(parse_instance("p graph 3 2 1\n").is_err());
        assert!(parse_instance("p contract 3 2\n").is_err());
        assert!(parse_instance("p contract 2 1 0\ne 1 3\n").is_err());
        assert!(parse_instance("p contract 3 1 0\ne 1 2\n").is_err());
        assert!(parse_instance("e 1 2\n").is_err());
        assert!(parse_instance("p contract 2 1 0\ne 1 1\n").is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_instance("p contract 3 2 0\ne 1 2\ne 2 3\n").unwrap().g;
        assert_eq!(parse_edge_list("e 2 1\n", &g).unwrap(), vec![Edge(0, 1)]);
        assert!(parse_edge_list("e 1 3\n", &g).is_err());
    }
}
