//! Generators for the graph families and small gadget graphs.
//!
//! Every generator numbers vertices densely and attaches a label table
//! that names vertices the way they are usually drawn (`u_3`, `v_0`, `2'`).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, HalinGraph};

fn labelled(graph: Graph, labels: Vec<String>) -> Graph {
    graph
        .with_labels(labels)
        .expect("generator emits one label per vertex")
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("path needs at least one vertex".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!("cycle C_{n} needs n >= 3")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The grid `P_rows □ P_cols`; vertex `(r, c)` is `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::BadParams("grid sides must be positive".into()));
    }
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                pairs.push((v, v + 1));
            }
            if r + 1 < rows {
                pairs.push((v, v + cols));
            }
        }
    }
    Graph::new(rows * cols, pairs)
}

/// The generalized Petersen graph `P(m, n)`: outer vertices `u_i = i`,
/// inner vertices `v_i = m + i`.
///
/// Edges are emitted as the outer cycle `u_i u_{i+1}`, then inner edges
/// `v_i v_{i+n}` (a repeated pair is kept once), then spokes `u_i v_i`.
pub fn generalized_petersen(m: usize, n: usize) -> Result<Graph> {
    if m < 3 || n == 0 || n >= m {
        return Err(Error::BadParams(format!(
            "P({m}, {n}) needs m >= 3 and 1 <= n < m"
        )));
    }
    let mut pairs: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    let mut inner = std::collections::HashSet::new();
    for i in 0..m {
        let (a, b) = (m + i, m + (i + n) % m);
        if inner.insert((a.min(b), a.max(b))) {
            pairs.push((a, b));
        }
    }
    pairs.extend((0..m).map(|i| (i, m + i)));
    let graph = Graph::new(2 * m, pairs)?;
    let labels = (0..m)
        .map(|i| format!("u_{i}"))
        .chain((0..m).map(|i| format!("v_{i}")))
        .collect();
    Ok(labelled(graph, labels))
}

/// `P(3n, n)`, the family whose inner edges form `n` triangles.
pub fn petersen_3n(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParams("P(3n, n) needs n >= 1".into()));
    }
    generalized_petersen(3 * n, n)
}

/// The `k`-th power of `g`: `uv` is an edge iff `1 <= dist(u, v) <= k`.
///
/// The edges of `g` keep their indices; the added pairs follow in
/// lexicographic order, so `power_graph(g, 1) == g`.
pub fn power_graph(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadParams("power radius must be >= 1".into()));
    }
    let mut pairs: Vec<(usize, usize)> = g.edges().to_vec();
    for u in 0..g.order() {
        let dist = g.distances_from(u)?;
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            if let Some(d) = *d {
                if d >= 2 && d <= k {
                    pairs.push((u, v));
                }
            }
        }
    }
    let power = Graph::new(g.order(), pairs)?;
    Ok(match g.labels() {
        Some(labels) => labelled(power, labels.to_vec()),
        None => power,
    })
}

/// `P_n²` on vertices `0..n` (drawn as `v_1 .. v_n`).
pub fn path_square(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!("P_{n}^2 needs n >= 3")));
    }
    let g = power_graph(&path(n)?, 2)?;
    Ok(labelled(g, (1..=n).map(|i| format!("v_{i}")).collect()))
}

/// `C_n²` on vertices `0..n`.
pub fn cycle_square(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!("C_{n}^2 needs n >= 3")));
    }
    let g = power_graph(&cycle(n)?, 2)?;
    Ok(labelled(g, (0..n).map(|i| i.to_string()).collect()))
}

/// Vertex ids used by [`necklace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NecklaceIds {
    pub h: usize,
}

impl NecklaceIds {
    /// Spine vertex `i` (`1..=h`); also valid for the end leaves `0` and `h+1`.
    pub fn spine(&self, i: usize) -> usize {
        i
    }

    /// The leaf `i'` hanging from spine vertex `i`.
    pub fn prime(&self, i: usize) -> usize {
        self.h + 1 + i
    }

    pub fn end(&self) -> usize {
        self.h + 1
    }
}

/// The necklace `N_h`: a caterpillar with spine `1..h`, one leaf `i'` per
/// spine vertex, end leaves `0` (at `1`) and `h+1` (at `h`), and the adjoint
/// cycle `0, 1', 2', ..., h', h+1`.
///
/// Vertex `i` for `0 <= i <= h+1` is itself; `i'` is `h + 1 + i`.
pub fn necklace(h: usize) -> Result<HalinGraph> {
    if h == 0 {
        return Err(Error::BadParams("necklace needs h >= 1".into()));
    }
    let ids = NecklaceIds { h };
    let mut pairs = vec![(0, 1)];
    pairs.extend((1..h).map(|i| (i, i + 1)));
    pairs.extend((1..=h).map(|i| (i, ids.prime(i))));
    pairs.push((h, h + 1));
    let tree_count = pairs.len();
    let mut cycle_order = vec![0];
    cycle_order.extend((1..=h).map(|i| ids.prime(i)));
    cycle_order.push(ids.end());
    let k = cycle_order.len();
    for i in 0..k {
        pairs.push((cycle_order[i], cycle_order[(i + 1) % k]));
    }
    let graph = Graph::new(2 * h + 2, pairs)?;
    let labels = (0..=h + 1)
        .map(|i| i.to_string())
        .chain((1..=h).map(|i| format!("{i}'")))
        .collect();
    HalinGraph::new(labelled(graph, labels), (0..tree_count).collect(), 1, cycle_order)
}

/// Rooted plane tree whose leaves all lie at the same depth, written as
/// nested JSON arrays: a vertex is the array of its children, a leaf is `[]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CompleteHalinSpec {
    pub children: Vec<CompleteHalinSpec>,
}

impl CompleteHalinSpec {
    pub fn leaf() -> Self {
        CompleteHalinSpec {
            children: Vec::new(),
        }
    }

    pub fn node(children: Vec<CompleteHalinSpec>) -> Self {
        CompleteHalinSpec { children }
    }

    /// Every vertex at depth `d` has `branching[d]` children.
    pub fn uniform(branching: &[usize]) -> Self {
        match branching.split_first() {
            None => CompleteHalinSpec::leaf(),
            Some((&k, rest)) => CompleteHalinSpec::node(vec![CompleteHalinSpec::uniform(rest); k]),
        }
    }

    /// Root with one child per entry of `groups`, child `i` carrying
    /// `groups[i]` leaves.
    pub fn two_level(groups: &[usize]) -> Self {
        CompleteHalinSpec::node(
            groups
                .iter()
                .map(|&j| CompleteHalinSpec::node(vec![CompleteHalinSpec::leaf(); j]))
                .collect(),
        )
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    fn leaf_depths(&self, depth: usize, out: &mut Vec<usize>) {
        if self.is_leaf() {
            out.push(depth);
        }
        for c in &self.children {
            c.leaf_depths(depth + 1, out);
        }
    }

    fn check_degrees(&self, is_root: bool) -> Result<()> {
        if self.is_leaf() {
            return Ok(());
        }
        let need = if is_root { 3 } else { 2 };
        if self.children.len() < need {
            return Err(Error::InvalidSpec(format!(
                "{} has {} children, needs at least {need}",
                if is_root { "root" } else { "internal vertex" },
                self.children.len()
            )));
        }
        self.children.iter().try_for_each(|c| c.check_degrees(false))
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_leaf() {
            return Err(Error::InvalidSpec("root must have children".into()));
        }
        self.check_degrees(true)?;
        let mut depths = Vec::new();
        self.leaf_depths(0, &mut depths);
        if depths.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::InvalidSpec("leaves at unequal depths".into()));
        }
        Ok(())
    }

    pub fn depth(&self) -> usize {
        let mut depths = Vec::new();
        self.leaf_depths(0, &mut depths);
        depths.into_iter().max().unwrap_or(0)
    }
}

/// Builds the complete Halin graph whose characteristic tree realizes
/// `spec`. Vertices are numbered in BFS order from the root (`0`); the
/// adjoint cycle visits leaves left to right.
pub fn complete_halin(spec: &CompleteHalinSpec) -> Result<HalinGraph> {
    spec.validate()?;
    let mut pairs = Vec::new();
    let mut labels = vec!["r".to_string()];
    // BFS over the spec, assigning ids level by level.
    let mut queue: VecDeque<(&CompleteHalinSpec, usize)> = VecDeque::from([(spec, 0)]);
    let mut children_ids: Vec<Vec<usize>> = vec![Vec::new()];
    let mut next = 1;
    while let Some((node, id)) = queue.pop_front() {
        for (k, child) in node.children.iter().enumerate() {
            let cid = next;
            next += 1;
            pairs.push((id, cid));
            labels.push(format!("{}.{}", labels[id], k + 1));
            children_ids.push(Vec::new());
            children_ids[id].push(cid);
            queue.push_back((child, cid));
        }
    }
    let tree_count = pairs.len();
    let mut cycle_order = Vec::new();
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        if children_ids[v].is_empty() {
            cycle_order.push(v);
        } else {
            stack.extend(children_ids[v].iter().rev());
        }
    }
    let k = cycle_order.len();
    for i in 0..k {
        pairs.push((cycle_order[i], cycle_order[(i + 1) % k]));
    }
    let graph = Graph::new(next, pairs)?;
    HalinGraph::new(labelled(graph, labels), (0..tree_count).collect(), 0, cycle_order)
}

/// A seeded random 3-regular Halin graph with `leaf_count` leaves.
///
/// Starts from `K_{1,3}` and repeatedly turns a uniformly chosen leaf into
/// an internal vertex with two new leaves, keeping the planar leaf order.
pub fn random_cubic_halin(leaf_count: usize, seed: u64) -> Result<HalinGraph> {
    if leaf_count < 3 {
        return Err(Error::BadParams(format!(
            "cubic Halin graph needs >= 3 leaves, got {leaf_count}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tree = vec![(0, 1), (0, 2), (0, 3)];
    let mut leaves = vec![1, 2, 3];
    let mut next = 4;
    while leaves.len() < leaf_count {
        let at = rng.gen_range(0..leaves.len());
        let parent = leaves[at];
        let (a, b) = (next, next + 1);
        next += 2;
        tree.push((parent, a));
        tree.push((parent, b));
        leaves.splice(at..=at, [a, b]);
    }
    let tree_count = tree.len();
    let mut pairs = tree;
    let k = leaves.len();
    for i in 0..k {
        pairs.push((leaves[i], leaves[(i + 1) % k]));
    }
    let graph = Graph::new(next, pairs)?;
    let labels = (0..next).map(|v| v.to_string()).collect();
    HalinGraph::new(labelled(graph, labels), (0..tree_count).collect(), 0, leaves)
}

/// A seeded random tree on `n` vertices: vertex `i > 0` hangs from a
/// uniformly chosen earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("tree needs at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, pairs)
}

/// Small named gadget graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    K4,
    /// Triangle with one pendant edge at each corner.
    Net,
    /// The fan `F_3`: hub `v_3` joined to `v_1, v_2, v_4, v_5` plus the path
    /// `v_1 v_2 v_4 v_5`.
    Fan3,
    /// The closed trail `v_1 v_2 v_3 v_4 v_5 v_1` with the chord `v_2 v_4`,
    /// taken literally from the usual drawing of `F_3`.
    Fan3Drawn,
    /// Triangle, one pendant vertex per corner, two leaves per pendant vertex.
    H0,
    K5,
    Wheel(usize),
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let simple = match lower.as_str() {
            "k4" => Some(Named::K4),
            "net" => Some(Named::Net),
            "fan3" | "f3" => Some(Named::Fan3),
            "fan3-drawn" => Some(Named::Fan3Drawn),
            "h0" => Some(Named::H0),
            "k5" => Some(Named::K5),
            _ => None,
        };
        if let Some(named) = simple {
            return Ok(named);
        }
        let arg = lower
            .strip_prefix("wheel(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| lower.strip_prefix("wheel:"));
        match arg.and_then(|a| a.parse::<usize>().ok()) {
            Some(n) => Ok(Named::Wheel(n)),
            None => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::K4 => write!(f, "k4"),
            Named::Net => write!(f, "net"),
            Named::Fan3 => write!(f, "fan3"),
            Named::Fan3Drawn => write!(f, "fan3-drawn"),
            Named::H0 => write!(f, "h0"),
            Named::K5 => write!(f, "k5"),
            Named::Wheel(n) => write!(f, "wheel({n})"),
        }
    }
}

fn complete(n: usize) -> Result<Graph> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Graph::new(n, pairs)
}

pub fn named(which: Named) -> Result<Graph> {
    let num = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
    Ok(match which {
        Named::K4 => labelled(complete(4)?, num(4)),
        Named::K5 => labelled(complete(5)?, num(5)),
        Named::Net => labelled(
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])?,
            num(6),
        ),
        Named::Fan3 => {
            // v_1..v_5 -> 0..4
            let g = Graph::new(5, [(0, 2), (1, 2), (2, 3), (2, 4), (0, 1), (1, 3), (3, 4)])?;
            labelled(g, (1..=5).map(|i| format!("v_{i}")).collect())
        }
        Named::Fan3Drawn => {
            let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])?;
            labelled(g, (1..=5).map(|i| format!("v_{i}")).collect())
        }
        Named::H0 => {
            let mut pairs = vec![(0, 1), (1, 2), (0, 2)];
            pairs.extend((0..3).map(|i| (i, 3 + i)));
            for i in 0..3 {
                pairs.push((3 + i, 6 + 2 * i));
                pairs.push((3 + i, 7 + 2 * i));
            }
            labelled(Graph::new(12, pairs)?, num(12))
        }
        Named::Wheel(n) => {
            if n < 3 {
                return Err(Error::BadParams(format!("wheel W_{n} needs n >= 3")));
            }
            let mut pairs: Vec<_> = (1..=n).map(|i| (0, i)).collect();
            pairs.extend((0..n).map(|i| (1 + i, 1 + (i + 1) % n)));
            let mut labels = vec!["hub".to_string()];
            labels.extend((1..=n).map(|i| i.to_string()));
            labelled(Graph::new(n + 1, pairs)?, labels)
        }
    })
}
