//! Line-oriented text formats.
//!
//! Hypergraph: header `p cf <n> <m>`, then m lines of vertex indices.
//! Graph: header `p gr <n> <m>`, then m lines `u v`.
//! Lists: header `p la <n>`, then n lines of color ids.
//! Coloring: n lines, each a color id or `-` for uncolored.
//!
//! Writers emit canonical, newline-terminated ASCII so that parse/write
//! round-trips are byte-identical.

use std::fmt::Write as _;

use crate::coloring::PartialColoring;
use crate::error::{CoreError, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::lists::{Color, ListAssignment};

fn parse_err(line: usize, message: impl Into<String>) -> CoreError {
    CoreError::Parse { line, message: message.into() }
}

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()))
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    tag: &str,
    fields: usize,
) -> Result<Vec<usize>> {
    let (lineno, line) = lines
        .next()
        .ok_or_else(|| parse_err(1, format!("missing `p {tag}` header")))?;
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 + fields || parts[0] != "p" || parts[1] != tag {
        return Err(parse_err(lineno, format!("expected header `p {tag}` with {fields} counts")));
    }
    parts[2..]
        .iter()
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("bad count `{s}`")))
        })
        .collect()
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cf {} {}", h.n(), h.edge_count());
    for edge in h.edges() {
        let line = edge.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "{line}");
    }
    out
}

pub fn read_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = numbered_lines(text).filter(|(_, l)| !l.is_empty());
    let counts = parse_header(&mut lines, "cf", 2)?;
    let (n, m) = (counts[0], counts[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {m} edge lines")))?;
        let edge = line
            .split_whitespace()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(lineno, format!("bad vertex `{s}`")))
            })
            .collect::<Result<Vec<usize>>>()?;
        edges.push(edge);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(parse_err(lineno, "trailing content after last edge"));
    }
    Hypergraph::new(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p gr {} {}", g.n(), g.edge_count());
    for (u, v) in g.edge_list() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = numbered_lines(text).filter(|(_, l)| !l.is_empty());
    let counts = parse_header(&mut lines, "gr", 2)?;
    let (n, m) = (counts[0], counts[1]);
    let mut g = Graph::new(n);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {m} edge lines")))?;
        let ends = line
            .split_whitespace()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(lineno, format!("bad vertex `{s}`")))
            })
            .collect::<Result<Vec<usize>>>()?;
        if ends.len() != 2 {
            return Err(parse_err(lineno, "expected exactly two endpoints"));
        }
        g.add_edge(ends[0], ends[1])
            .map_err(|e| parse_err(lineno, e.to_string()))?;
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(parse_err(lineno, "trailing content after last edge"));
    }
    Ok(g)
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p la {}", lists.n());
    for v in 0..lists.n() {
        let line = lists
            .list(v)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "{line}");
    }
    out
}

pub fn read_lists(text: &str) -> Result<ListAssignment> {
    let mut lines = numbered_lines(text).filter(|(_, l)| !l.is_empty());
    let counts = parse_header(&mut lines, "la", 1)?;
    let n = counts[0];
    let mut lists = Vec::with_capacity(n);
    for _ in 0..n {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {n} list lines")))?;
        let list = line
            .split_whitespace()
            .map(|s| {
                s.parse::<Color>()
                    .map_err(|_| parse_err(lineno, format!("bad color `{s}`")))
            })
            .collect::<Result<Vec<Color>>>()?;
        lists.push(list);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(parse_err(lineno, "trailing content after last list"));
    }
    ListAssignment::new(lists)
}

pub fn write_coloring(coloring: &PartialColoring) -> String {
    let mut out = String::new();
    for slot in coloring.slots() {
        match slot {
            Some(c) => {
                let _ = writeln!(out, "{c}");
            }
            None => {
                let _ = writeln!(out, "-");
            }
        }
    }
    out
}

pub fn read_coloring(text: &str) -> Result<PartialColoring> {
    let mut slots = Vec::new();
    for (lineno, line) in numbered_lines(text) {
        let token = line.trim();
        if token.is_empty() {
            continue;
        }
        if token == "-" {
            slots.push(None);
        } else {
            let c = token
                .parse::<Color>()
                .map_err(|_| parse_err(lineno, format!("bad color `{token}`")))?;
            slots.push(Some(c));
        }
    }
    Ok(PartialColoring::from_slots(slots))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_round_trip() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![3]]).unwrap();
        let text = write_hypergraph(&h);
        assert_eq!(text, "p cf 4 2\n0 1 2\n3\n");
        let back = read_hypergraph(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(write_hypergraph(&back), text);
    }

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p gr 3 2\n0 1\n0 2\n");
        assert_eq!(write_graph(&read_graph(&text).unwrap()), text);
    }

    #[test]
    fn lists_round_trip() {
        let la = ListAssignment::new(vec![vec![5, 1], vec![2]]).unwrap();
        let text = write_lists(&la);
        assert_eq!(text, "p la 2\n1 5\n2\n");
        assert_eq!(read_lists(&text).unwrap(), la);
    }

    #[test]
    fn coloring_round_trip_with_gaps() {
        let mut c = PartialColoring::empty(3);
        c.set(0, 7);
        c.set(2, 0);
        let text = write_coloring(&c);
        assert_eq!(text, "7\n-\n0\n");
        assert_eq!(read_coloring(&text).unwrap(), c);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = read_hypergraph("p cf 2 1\n0 x\n").unwrap_err();
        assert!(matches!(err, CoreError::Parse { line: 2, .. }));
        let err = read_graph("p gr 2 1\n1 1\n").unwrap_err();
        assert!(matches!(err, CoreError::Parse { line: 2, .. }));
        let err = read_lists("p la 1\n").unwrap_err();
        assert!(matches!(err, CoreError::Parse { .. }));
    }
}
