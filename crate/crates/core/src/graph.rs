//! Simple undirected graphs with dense vertex ids and stable edge indices.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..order`.
///
/// Edges are stored as `(min, max)` pairs in insertion order; the position
/// of a pair is its edge index. Every vertex keeps a list of
/// `(neighbor, edge index)` entries in the order the edges were added.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    lookup: HashMap<(usize, usize), usize>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate pairs and out-of-range
    /// endpoints.
    pub fn new<I>(order: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut graph = Graph::empty(order);
        for (u, v) in pairs {
            graph.push_edge(u, v)?;
        }
        Ok(graph)
    }

    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); order],
            lookup: HashMap::new(),
            labels: None,
        }
    }

    fn push_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for w in [u, v] {
            if w >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let key = (u.min(v), u.max(v));
        if self.lookup.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.lookup.insert(key, id);
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    /// Attaches a human-readable name to every vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::BadParams(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbor, edge index)` pairs around `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == d)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The endpoint of `edge` that is not `v`.
    pub fn other_end(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &(w, _) in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Length of a shortest `u`-`v` path, or `None` if `v` is unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        Ok(self.distances_from(u)?[v])
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        self.distances_from(0)
            .map(|d| d.iter().all(Option::is_some))
            .unwrap_or(false)
    }

    pub fn is_tree(&self) -> bool {
        self.order > 0 && self.size() + 1 == self.order && self.is_connected()
    }

    /// The graph on the same vertex set spanned by `edge_ids`, plus the map
    /// from the new edge indices back to indices of `self`.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut sub = Graph::empty(self.order);
        for &e in edge_ids {
            if e >= self.size() {
                return Err(Error::EdgeOutOfRange {
                    edge: e,
                    size: self.size(),
                });
            }
            let (u, v) = self.edges[e];
            sub.push_edge(u, v)?;
        }
        sub.labels = self.labels.clone();
        Ok((sub, edge_ids.to_vec()))
    }
}

/// Assignment of a color to every edge, aligned with edge indices.
///
/// Color `0` means "uncolored" and only appears inside search code; a
/// coloring that leaves this crate is total.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>) -> Self {
        EdgeColoring { colors }
    }

    pub fn uncolored(size: usize) -> Self {
        EdgeColoring {
            colors: vec![0; size],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c > 0)
    }

    /// Number of distinct nonzero colors.
    pub fn color_count(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().copied().filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.size() {
            return Err(Error::ColoringSizeMismatch {
                expected: g.size(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_total(&self) -> Result<()> {
        match self.colors.iter().position(|&c| c == 0) {
            Some(e) => Err(Error::UncoloredEdge(e)),
            None => Ok(()),
        }
    }
}

impl From<Vec<u32>> for EdgeColoring {
    fn from(colors: Vec<u32>) -> Self {
        EdgeColoring { colors }
    }
}

/// A Halin graph `T ∪ C`: a plane tree whose internal vertices have degree
/// at least three, plus the cycle through its leaves in planar order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinGraph {
    graph: Graph,
    tree_edges: Vec<usize>,
    root: usize,
    cycle_order: Vec<usize>,
}

impl HalinGraph {
    /// Validates the Halin invariants and wraps the parts.
    pub fn new(
        graph: Graph,
        tree_edges: Vec<usize>,
        root: usize,
        cycle_order: Vec<usize>,
    ) -> Result<Self> {
        let n = graph.order();
        let bad = |msg: String| Err(Error::InvalidHalin(msg));
        if root >= n {
            return bad(format!("root {root} out of range"));
        }
        let mut in_tree = vec![false; graph.size()];
        let mut tree_degree = vec![0usize; n];
        for &e in &tree_edges {
            if e >= graph.size() {
                return bad(format!("tree edge {e} out of range"));
            }
            if in_tree[e] {
                return bad(format!("tree edge {e} listed twice"));
            }
            in_tree[e] = true;
            let (u, v) = graph.edge(e);
            tree_degree[u] += 1;
            tree_degree[v] += 1;
        }
        let (tree, _) = graph.edge_subgraph(&tree_edges)?;
        if !tree.is_tree() {
            return bad("tree edges do not form a spanning tree".into());
        }
        if cycle_order.len() < 3 {
            return bad("adjoint cycle needs at least three leaves".into());
        }
        let mut on_cycle = vec![false; n];
        for &v in &cycle_order {
            if v >= n || on_cycle[v] {
                return bad(format!("cycle vertex {v} invalid or repeated"));
            }
            on_cycle[v] = true;
        }
        for v in 0..n {
            if on_cycle[v] && tree_degree[v] != 1 {
                return bad(format!("cycle vertex {v} is not a leaf of the tree"));
            }
            if !on_cycle[v] && tree_degree[v] < 3 {
                return bad(format!("internal vertex {v} has tree degree {}", tree_degree[v]));
            }
        }
        let mut cycle_edges = vec![false; graph.size()];
        let k = cycle_order.len();
        for i in 0..k {
            let (a, b) = (cycle_order[i], cycle_order[(i + 1) % k]);
            match graph.edge_between(a, b) {
                Some(e) if !in_tree[e] => cycle_edges[e] = true,
                _ => return bad(format!("missing cycle edge {{{a}, {b}}}")),
            }
        }
        if (0..graph.size()).any(|e| !in_tree[e] && !cycle_edges[e]) {
            return bad("graph has an edge outside T ∪ C".into());
        }
        Ok(HalinGraph {
            graph,
            tree_edges,
            root,
            cycle_order,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn cycle_order(&self) -> &[usize] {
        &self.cycle_order
    }

    /// The characteristic tree as a standalone graph, with the map from its
    /// edge indices to edge indices of the Halin graph.
    pub fn tree(&self) -> (Graph, Vec<usize>) {
        self.graph
            .edge_subgraph(&self.tree_edges)
            .expect("tree edges validated at construction")
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.cycle_order.contains(&v)
    }

    /// Parent of every vertex when the tree is rooted at [`Self::root`];
    /// the root maps to itself.
    pub fn tree_parents(&self) -> Vec<usize> {
        let (tree, _) = self.tree();
        let mut parent = vec![usize::MAX; tree.order()];
        parent[self.root] = self.root;
        let mut queue = VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in tree.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        parent
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn complete_graph_k4() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Graph::new(4, pairs).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.max_degree(), 3);
        assert!(g.is_regular(3));
    }

    #[test]
    fn path_p5_and_distances() {
        let g = path(5);
        assert_eq!(g.size(), 4);
        assert_eq!(g.distance(0, 4).unwrap(), Some(4));
        assert_eq!(g.distance(2, 2).unwrap(), Some(0));
        assert_eq!(cycle(6).distance(0, 3).unwrap(), Some(3));
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::LoopEdge(1))));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(matches!(
            path(3).distance(0, 7),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn edgeless_and_unreachable() {
        let g = Graph::empty(3);
        assert_eq!(g.max_degree(), 0);
        assert_eq!(g.distance(0, 2).unwrap(), None);
    }

    #[test]
    fn canonical_edge_form() {
        let g = Graph::new(3, [(2, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(g.edge_between(2, 1), Some(1));
        assert_eq!(g.other_end(0, 2), 0);
    }

    #[test]
    fn color_count_ignores_zero() {
        let c = EdgeColoring::new(vec![3, 0, 3, 1]);
        assert_eq!(c.color_count(), 2);
        assert!(!c.is_total());
    }

    #[test]
    fn halin_rejects_non_leaf_on_cycle() {
        // K4 as a wheel: hub 0, rim 1,2,3.
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(HalinGraph::new(g.clone(), vec![0, 1, 2], 0, vec![1, 2, 3]).is_ok());
        assert!(HalinGraph::new(g.clone(), vec![0, 1, 2], 0, vec![0, 2, 3]).is_err());
        assert!(HalinGraph::new(g, vec![0, 1, 3], 0, vec![1, 2, 3]).is_err());
    }
}
