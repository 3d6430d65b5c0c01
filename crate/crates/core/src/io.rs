//! Plain-text graph exchange formats.
//!
//! Edge lists: the first non-comment line is the vertex count, then one
//! `u v` arc per line. `#` starts a comment. Patterns carry their role
//! assignment in a `# roles: A A B C ...` comment line.

use crate::digraph::{OrientedGraph, Tripartition};
use crate::error::{Error, Result};
use crate::patterns::Role;
use std::fmt::Write as _;

/// Parses an edge list, returning the graph and the role line if one was
/// present.
pub fn parse_edge_list(text: &str) -> Result<(OrientedGraph, Option<Vec<Role>>)> {
    let mut order: Option<usize> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut roles: Option<Vec<Role>> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(spec) = comment.trim().strip_prefix("roles:") {
                let parsed: Option<Vec<Role>> = spec
                    .split_whitespace()
                    .map(|tok| {
                        let mut chars = tok.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) => Role::from_label(c),
                            _ => None,
                        }
                    })
                    .collect();
                roles = Some(parsed.ok_or_else(|| {
                    Error::Parse(format!("line {}: bad role label", lineno + 1))
                })?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match order {
            None => {
                if fields.len() != 1 {
                    return Err(Error::Parse(format!(
                        "line {}: expected the vertex count first",
                        lineno + 1
                    )));
                }
                order = Some(fields[0].parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad vertex count", lineno + 1))
                })?);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(Error::Parse(format!(
                        "line {}: expected `u v`",
                        lineno + 1
                    )));
                }
                let u = fields[0].parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad vertex id", lineno + 1))
                })?;
                let v = fields[1].parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad vertex id", lineno + 1))
                })?;
                arcs.push((u, v));
            }
        }
    }

    let n = order.ok_or_else(|| Error::Parse("empty input".into()))?;
    if let Some(r) = &roles {
        if r.len() != n {
            return Err(Error::Parse(format!(
                "{} roles for {} vertices",
                r.len(),
                n
            )));
        }
    }
    Ok((OrientedGraph::build(n, &arcs)?, roles))
}

/// Writes a graph as an edge list; arcs appear in ascending order, so equal
/// graphs serialize identically.
pub fn write_edge_list(g: &OrientedGraph, roles: Option<&[Role]>) -> String {
    let mut out = String::new();
    if let Some(roles) = roles {
        let labels: Vec<String> = roles.iter().map(|r| r.label().to_string()).collect();
        let _ = writeln!(out, "# roles: {}", labels.join(" "));
    }
    let _ = writeln!(out, "{}", g.order());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const PART_COLORS: [&str; 3] = ["#e41a1c", "#377eb8", "#4daf4a"];

/// Graphviz rendering; when a tripartition is supplied each part gets its
/// own fill color.
pub fn to_dot(g: &OrientedGraph, tri: Option<&Tripartition>) -> String {
    let mut out = String::from("digraph G {\n");
    let _ = writeln!(out, "  node [shape=circle];");
    for v in g.vertices() {
        match tri {
            Some(t) => {
                let _ = writeln!(
                    out,
                    "  {v} [style=filled, fillcolor=\"{}\"];",
                    PART_COLORS[t.part_of(v)]
                );
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write_round_trip() {
        let text = "# a triangle\n3\n0 1\n1 2\n2 0\n";
        let (g, roles) = parse_edge_list(text).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.arc_count(), 3);
        assert!(roles.is_none());
        let written = write_edge_list(&g, None);
        let (g2, _) = parse_edge_list(&written).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn roles_comment_round_trip() {
        let text = "# roles: A B C C\n4\n0 1\n1 2\n1 3\n2 0\n2 3\n3 0\n";
        let (g, roles) = parse_edge_list(text).unwrap();
        let roles = roles.unwrap();
        assert_eq!(roles.len(), 4);
        assert_eq!(roles[3], Role::C);
        let written = write_edge_list(&g, Some(&roles));
        assert!(written.starts_with("# roles: A B C C\n"));
        let (_, roles2) = parse_edge_list(&written).unwrap();
        assert_eq!(roles2.unwrap(), roles);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("3\n0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("# roles: A Q\n2\n0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("x\n"), Err(Error::Parse(_))));
        // Structural errors come from the graph builder.
        assert!(matches!(parse_edge_list("2\n0 1\n1 0\n"), Err(Error::TwoCycle(0, 1))));
    }

    #[test]
    fn dot_marks_parts() {
        let (g, _) = parse_edge_list("3\n0 1\n1 2\n2 0\n").unwrap();
        let tri = Tripartition::blocks([1, 1, 1]);
        let dot = to_dot(&g, Some(&tri));
        assert!(dot.contains("0 [style=filled"));
        assert!(dot.contains("0 -> 1;"));
        assert!(to_dot(&g, None).contains("  1;"));
    }
}
