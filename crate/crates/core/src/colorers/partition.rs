use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};
use crate::verify;

/// A split of a host graph's edges into `F` and `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub f_edges: Vec<usize>,
    pub h_edges: Vec<usize>,
}

impl PartitionSpec {
    /// Checks that the two sets are disjoint and cover every edge of `host`.
    pub fn new(host: &Graph, f_edges: Vec<usize>, h_edges: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; host.size()];
        for &e in f_edges.iter().chain(&h_edges) {
            if e >= host.size() {
                return Err(Error::EdgeOutOfRange {
                    edge: e,
                    size: host.size(),
                });
            }
            if seen[e] {
                return Err(Error::BadParams(format!("edge {e} is in both parts or listed twice")));
            }
            seen[e] = true;
        }
        if let Some(e) = seen.iter().position(|&s| !s) {
            return Err(Error::BadParams(format!("edge {e} is in neither part")));
        }
        Ok(PartitionSpec { f_edges, h_edges })
    }
}

/// Merges a star coloring of `F` with a coloring of `H` that is strong when
/// distances are measured in `host`. The two colorings are aligned with
/// `spec.f_edges` and `spec.h_edges` respectively and must use disjoint
/// palettes. The merged coloring is a star coloring of `host`.
pub fn compose_partition(
    host: &Graph,
    spec: &PartitionSpec,
    f_coloring: &EdgeColoring,
    h_coloring: &EdgeColoring,
) -> Result<EdgeColoring> {
    let spec = PartitionSpec::new(host, spec.f_edges.clone(), spec.h_edges.clone())?;
    if h_coloring.len() != spec.h_edges.len() {
        return Err(Error::ColoringSizeMismatch {
            expected: spec.h_edges.len(),
            got: h_coloring.len(),
        });
    }
    let f_palette: BTreeSet<u32> = f_coloring.colors.iter().copied().collect();
    if let Some(&c) = h_coloring.colors.iter().filter(|c| f_palette.contains(c)).min() {
        return Err(Error::PalettesOverlap(c));
    }
    let (f_graph, _) = host.edge_subgraph(&spec.f_edges)?;
    if let Some(v) = verify::check_star(&f_graph, f_coloring)? {
        return Err(Error::SubcoloringInvalid {
            part: "F",
            violation: Box::new(v),
        });
    }
    if let Some(v) = verify::check_restricted_strong(host, &spec.h_edges, h_coloring)? {
        return Err(Error::SubcoloringInvalid {
            part: "H",
            violation: Box::new(v),
        });
    }
    let mut colors = vec![0; host.size()];
    for (i, &e) in spec.f_edges.iter().enumerate() {
        colors[e] = f_coloring.colors[i];
    }
    for (i, &e) in spec.h_edges.iter().enumerate() {
        colors[e] = h_coloring.colors[i];
    }
    Ok(EdgeColoring::new(colors))
}
