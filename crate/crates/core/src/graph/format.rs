//! The labeled-graph file format.
//!
//! Line-oriented UTF-8: `# comment` and blank lines are ignored,
//! `vertex <name> <abelian-expr>` declares a labeled vertex,
//! `edge <u> <v>` joins two previously declared distinct vertices.
//! Serialization is the `Display` impl on `LabeledGraph`.

use crate::abelian::AbelianLabel;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

impl LabeledGraph {
    /// Parse a graph from file text. Errors carry 1-based line/column.
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = LabeledGraph::empty();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.trim_end();
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = split_fields(line);
            let (keyword, _) = fields.remove(0);
            match keyword {
                "vertex" => {
                    if fields.len() != 2 {
                        return Err(Error::parse(
                            lineno,
                            1,
                            format!("expected `vertex <name> <label>`, got {} fields", fields.len() + 1),
                        ));
                    }
                    let (name, name_col) = fields[0];
                    let (label_text, label_col) = fields[1];
                    let label = AbelianLabel::parse_at(label_text, lineno, label_col)?;
                    g.push_vertex(name.to_string(), label)
                        .map_err(|e| match e {
                            Error::Parse { .. } => e,
                            other => Error::parse(lineno, name_col, other.to_string()),
                        })?;
                }
                "edge" => {
                    if fields.len() != 2 {
                        return Err(Error::parse(
                            lineno,
                            1,
                            format!("expected `edge <u> <v>`, got {} fields", fields.len() + 1),
                        ));
                    }
                    let (u, u_col) = fields[0];
                    let (v, _) = fields[1];
                    g.push_edge(u, v).map_err(|e| e.at_line(lineno).reposition(u_col))?;
                }
                other => {
                    return Err(Error::parse(
                        lineno,
                        1,
                        format!("unknown directive `{other}`"),
                    ));
                }
            }
        }
        if g.is_empty() {
            return Err(Error::parse(1, 1, "graph declares no vertices"));
        }
        Ok(g)
    }
}

impl Error {
    fn reposition(self, col: usize) -> Self {
        match self {
            Error::Parse { line, msg, .. } => Error::Parse { line, col, msg },
            other => other,
        }
    }
}

/// Whitespace-separated fields with their 1-based starting columns.
fn split_fields(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((&line[s..i], s + 1));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], s + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# a three-vertex path\nvertex a Z\nvertex b Z/6\nvertex c Z^2xZ/4\nedge a b\nedge b c\n";
        let g = LabeledGraph::parse(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.label("b").unwrap().to_string(), "Z/6");
        let reparsed = LabeledGraph::parse(&g.to_string()).unwrap();
        assert_eq!(reparsed.to_string(), g.to_string());
    }

    #[test]
    fn diagnostics_carry_positions() {
        match LabeledGraph::parse("vertex a Z\nvertex a Z\n") {
            Err(Error::Parse { line: 2, msg, .. }) => assert!(msg.contains("duplicate vertex")),
            other => panic!("expected duplicate vertex diagnostic, got {other:?}"),
        }
        match LabeledGraph::parse("vertex a Z\nedge a b\n") {
            Err(Error::Parse { line: 2, msg, .. }) => assert!(msg.contains("unknown vertex")),
            other => panic!("unexpected {other:?}"),
        }
        match LabeledGraph::parse("vertex a Zx\n") {
            Err(Error::Parse { line: 1, col, .. }) => assert!(col > 1),
            other => panic!("unexpected {other:?}"),
        }
        // edges must refer to previously declared vertices
        assert!(LabeledGraph::parse("edge a b\nvertex a Z\nvertex b Z\n").is_err());
        assert!(LabeledGraph::parse("").is_err());
        assert!(LabeledGraph::parse("node a Z\n").is_err());
    }
}
