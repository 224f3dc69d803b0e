use alloc::string::String;
use core::fmt::Write;

use super::Graph;
use crate::error::GraphError;

/// Renders `g` as a DOT `graph` block: one node statement per vertex, then
/// one edge statement per edge in sorted order.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> Result<String, GraphError> {
    if let Some(labels) = labels {
        if labels.len() != g.vertex_count() {
            return Err(GraphError::LabelCount { expected: g.vertex_count(), found: labels.len() });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(labels) => {
                let escaped = labels[v].replace('\\', "\\\\").replace('"', "\\\"");
                writeln!(out, "  {v} [label=\"{escaped}\"];").unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
