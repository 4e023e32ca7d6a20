//! Graphviz export of cluster graphs.
//!
//! One node per cluster, one edge per label. Plain edges whose twin is
//! also present are drawn `bold`, compressed edges `dashed`, and members
//! of an optional highlighted family blue and `dashed`.

use std::fmt::Write as _;

use crate::cluster::{ClusterGraph, EdgeLabel, GlueFamily};
use crate::error::{Error, Result};
use crate::perm::{twin_of, Letter, Permutation};

fn is_highlighted(label: &EdgeLabel, family: Option<&GlueFamily>) -> bool {
    family.is_some_and(|f| label.covered().iter().any(|p| f.contains(p)))
}

/// Renders `graph`; `highlight` marks the edges standing for family members.
pub fn to_dot(graph: &ClusterGraph, highlight: Option<&GlueFamily>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph cluster_graph {{").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for c in graph.clusters() {
        writeln!(out, "  \"{c}\" [label=\"{c}\"];").unwrap();
    }
    for e in graph.edges() {
        let mut styles = Vec::new();
        let mut extra = String::new();
        if e.label.is_compressed() {
            styles.push("dashed");
        } else {
            let p = Permutation::new(e.label.letters().to_vec()).expect("plain label");
            if twin_of(&p).is_some_and(|t| graph.has_plain_edge(&t)) {
                styles.push("bold");
            }
        }
        if is_highlighted(&e.label, highlight) {
            if !styles.contains(&"dashed") {
                styles.push("dashed");
            }
            extra.push_str(", color=blue");
        }
        let style = if styles.is_empty() {
            String::new()
        } else {
            format!(", style=\"{}\"", styles.join(","))
        };
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"{style}{extra}];",
            graph.cluster(e.source),
            graph.cluster(e.target),
            e.label
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn parse_label(text: &str) -> Result<EdgeLabel> {
    let letters: Vec<Letter> = if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        inner
            .split(',')
            .map(|t| t.trim().parse::<Letter>().map_err(|_| Error::Parse(format!("bad label {text:?}"))))
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Letter)
                    .ok_or_else(|| Error::Parse(format!("bad label {text:?}")))
            })
            .collect::<Result<_>>()?
    };
    EdgeLabel::from_letters(&letters)
}

/// Reads the edge labels back from a document written by [`to_dot`].
pub fn parse_dot_labels(dot: &str) -> Result<Vec<EdgeLabel>> {
    let mut labels = Vec::new();
    for line in dot.lines().filter(|l| l.contains("->")) {
        let start = line
            .find("label=\"")
            .ok_or_else(|| Error::Parse(format!("edge without label: {line}")))?
            + "label=\"".len();
        let end = line[start..]
            .find('"')
            .ok_or_else(|| Error::Parse(format!("unterminated label: {line}")))?;
        labels.push(parse_label(&line[start..start + end])?);
    }
    Ok(labels)
}
