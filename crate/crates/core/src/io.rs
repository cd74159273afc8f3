//! JSON interchange for graphs, colorings and edge lists.
//!
//! A graph file is `{"order": n, "edges": [[u, v], ...], "labels": {...}?}`
//! and may carry the generating `family` and, for Halin graphs, the
//! `halin` decomposition. A coloring file is `{"colors": [...]}`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, CompleteHalinSpec, Named};
use crate::graph::{Graph, HalinGraph};

/// Parameters of the generator that produced a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Grid { rows: usize, cols: usize },
    Tree { n: usize, seed: u64 },
    PathSquare { n: usize },
    CycleSquare { n: usize },
    Petersen { m: usize, n: usize },
    #[serde(rename = "petersen3n")]
    Petersen3n { n: usize },
    Necklace { h: usize },
    CubicHalin { leaves: usize, seed: u64 },
    CompleteHalin { spec: CompleteHalinSpec },
    Named { which: String },
}

impl Family {
    /// Runs the generator; Halin families also return the decomposition.
    pub fn build(&self) -> Result<(Graph, Option<HalinGraph>)> {
        let plain = |g: Graph| Ok((g, None));
        let halin = |hg: HalinGraph| Ok((hg.graph().clone(), Some(hg)));
        match self {
            Family::Path { n } => plain(families::path(*n)?),
            Family::Cycle { n } => plain(families::cycle(*n)?),
            Family::Grid { rows, cols } => plain(families::grid(*rows, *cols)?),
            Family::Tree { n, seed } => plain(families::random_tree(*n, *seed)?),
            Family::PathSquare { n } => plain(families::path_square(*n)?),
            Family::CycleSquare { n } => plain(families::cycle_square(*n)?),
            Family::Petersen { m, n } => plain(families::generalized_petersen(*m, *n)?),
            Family::Petersen3n { n } => plain(families::petersen_3n(*n)?),
            Family::Necklace { h } => halin(families::necklace(*h)?),
            Family::CubicHalin { leaves, seed } => halin(families::random_cubic_halin(*leaves, *seed)?),
            Family::CompleteHalin { spec } => halin(families::complete_halin(spec)?),
            Family::Named { which } => plain(families::named(which.parse::<Named>()?)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalinParts {
    pub tree_edges: Vec<usize>,
    pub root: usize,
    pub cycle_order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<usize, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halin: Option<HalinParts>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            order: g.order(),
            edges: g.edges().to_vec(),
            labels: g
                .labels()
                .map(|ls| ls.iter().cloned().enumerate().collect()),
            family: None,
            halin: None,
        }
    }

    pub fn from_halin(hg: &HalinGraph) -> Self {
        let mut file = GraphFile::from_graph(hg.graph());
        file.halin = Some(HalinParts {
            tree_edges: hg.tree_edges().to_vec(),
            root: hg.root(),
            cycle_order: hg.cycle_order().to_vec(),
        });
        file
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = Some(family);
        self
    }

    /// The graph, validated. Labels missing from a partial table are
    /// filled with the vertex number.
    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::new(self.order, self.edges.iter().copied())?;
        match &self.labels {
            None => Ok(g),
            Some(map) => {
                if let Some(&v) = map.keys().find(|&&v| v >= self.order) {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: self.order,
                    });
                }
                let labels = (0..self.order)
                    .map(|v| map.get(&v).cloned().unwrap_or_else(|| v.to_string()))
                    .collect();
                g.with_labels(labels)
            }
        }
    }

    pub fn to_halin(&self) -> Result<Option<HalinGraph>> {
        match &self.halin {
            None => Ok(None),
            Some(parts) => HalinGraph::new(
                self.to_graph()?,
                parts.tree_edges.clone(),
                parts.root,
                parts.cycle_order.clone(),
            )
            .map(Some),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Pretty-printed JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = families::petersen_3n(3).unwrap();
        let file = GraphFile::from_graph(&g).with_family(Family::Petersen3n { n: 3 });
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.contains("\"name\":\"petersen3n\""));
        assert!(text.contains("\"0\":\"u_0\""));
        let back: GraphFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn halin_round_trip() {
        let hg = families::necklace(3).unwrap();
        let file = GraphFile::from_halin(&hg);
        let back: GraphFile = serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(back.to_halin().unwrap().unwrap(), hg);
    }

    #[test]
    fn minimal_graph_file() {
        let file: GraphFile = serde_json::from_str(r#"{"edges": [[0, 1], [1, 2]], "order": 3}"#).unwrap();
        let g = file.to_graph().unwrap();
        assert_eq!(g.size(), 2);
        assert!(file.to_halin().unwrap().is_none());
    }

    #[test]
    fn family_build_matches_generators() {
        let f: Family = serde_json::from_str(r#"{"name": "complete-halin", "spec": [[[], []], [[], []], [[], []]]}"#).unwrap();
        let (g, hg) = f.build().unwrap();
        assert_eq!(g.order(), 10);
        assert!(hg.is_some());
        let f: Family = serde_json::from_str(r#"{"name": "named", "which": "wheel(5)"}"#).unwrap();
        assert_eq!(f.build().unwrap().0.size(), 10);
    }
}
