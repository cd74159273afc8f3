//! Graphviz export.

use std::fmt::Write;

use crate::error::Result;
use crate::graph::{EdgeColoring, Graph};

/// Edge colors for color classes `1, 2, ...`, cycled.
pub const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324",
    "#800000", "#469990", "#000075", "#808000",
];

/// Renders `g` as an undirected DOT graph. With a coloring, every edge
/// gets a `color` from [`PALETTE`] and its color number as `label`.
pub fn export_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> Result<String> {
    if let Some(c) = coloring {
        c.check_len(g)?;
        c.check_total()?;
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let label = g.label(v).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  {v} [label=\"{label}\"];").expect("writing to a String");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let k = c.colors[e];
                let hue = PALETTE[(k as usize - 1) % PALETTE.len()];
                writeln!(out, "  {u} -- {v} [color=\"{hue}\", label=\"{k}\"];")
            }
            None => writeln!(out, "  {u} -- {v};"),
        }
        .expect("writing to a String");
    }
    out.push_str("}\n");
    Ok(out)
}
