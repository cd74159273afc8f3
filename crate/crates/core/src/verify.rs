//! Proper, star and restricted-strong edge-coloring checks.
//!
//! A star edge-coloring is proper and leaves no path with four edges (five
//! distinct vertices) and no 4-cycle colored with only two colors.
//!
//! [`check_star`] scans around every vertex: for incident edges `v1 v2`
//! (color `a`) and `v2 v3` (color `b`) of a proper coloring, the walk
//! `v0 v1 v2 v3 v4` is bicolored exactly when `v1` has a `b`-edge and `v3`
//! has an `a`-edge. Among all violations the one with the lexicographically
//! smallest normalized vertex sequence is reported, so witnesses do not
//! depend on scan order.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ViolationKind {
    ImproperAdjacent,
    BicoloredPath4,
    BicoloredCycle4,
    StrongConflict,
}

/// A concrete witness that a coloring is not proper / star / strong.
///
/// * `ImproperAdjacent`: vertices `[a, v, b]`, edges `[av, vb]`, one color.
/// * `BicoloredPath4`: five vertices, four edges in walk order, two colors.
/// * `BicoloredCycle4`: four vertices, four edges (the last closes the
///   cycle), two colors.
/// * `StrongConflict`: `[a, v, b]` with edges `[e, f]` when the two equally
///   colored edges share `v`, otherwise `[a, x, y, b]` with edges
///   `[e, xy, f]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarViolation {
    pub kind: ViolationKind,
    pub vertices: Vec<usize>,
    pub edge_ids: Vec<usize>,
    pub colors: Vec<u32>,
}

impl fmt::Display for StarViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} on vertices {:?} (edges {:?}, colors {:?})",
            self.kind, self.vertices, self.edge_ids, self.colors
        )
    }
}

impl StarViolation {
    /// Re-checks the witness against `g` and a coloring aligned with `g`'s
    /// edges. Strong conflicts are re-checked with [`Self::holds_strong`].
    pub fn holds(&self, g: &Graph, colors: &[u32]) -> bool {
        let edges_match = |closed: bool| -> bool {
            let vs = &self.vertices;
            let steps = if closed { vs.len() } else { vs.len() - 1 };
            self.edge_ids.len() == steps
                && (0..steps).all(|i| {
                    let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                    a < g.order()
                        && b < g.order()
                        && g.edge_between(a, b) == Some(self.edge_ids[i])
                })
        };
        let distinct = |vs: &[usize]| {
            let mut s = vs.to_vec();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        };
        let color = |i: usize| colors.get(self.edge_ids[i]).copied();
        match self.kind {
            ViolationKind::ImproperAdjacent => {
                self.vertices.len() == 3
                    && distinct(&self.vertices)
                    && edges_match(false)
                    && color(0).is_some()
                    && color(0) == color(1)
                    && self.colors == [color(0).unwrap()]
            }
            ViolationKind::BicoloredPath4 | ViolationKind::BicoloredCycle4 => {
                let closed = self.kind == ViolationKind::BicoloredCycle4;
                let want = if closed { 4 } else { 5 };
                self.vertices.len() == want
                    && distinct(&self.vertices)
                    && edges_match(closed)
                    && (0..4).all(|i| color(i).is_some())
                    && color(0) == color(2)
                    && color(1) == color(3)
                    && color(0) != color(1)
                    && self.colors == [color(0).unwrap(), color(1).unwrap()]
            }
            ViolationKind::StrongConflict => false,
        }
    }

    /// Re-checks a strong-conflict witness; `sub_colors` is aligned with
    /// `sub_edges`.
    pub fn holds_strong(&self, host: &Graph, sub_edges: &[usize], sub_colors: &[u32]) -> bool {
        if self.kind != ViolationKind::StrongConflict || sub_edges.len() != sub_colors.len() {
            return false;
        }
        let color_of = |e: usize| {
            sub_edges
                .iter()
                .position(|&s| s == e)
                .map(|i| sub_colors[i])
        };
        let (first, last) = match (self.edge_ids.first(), self.edge_ids.last()) {
            (Some(&a), Some(&b)) if a != b => (a, b),
            _ => return false,
        };
        let (ca, cb) = match (color_of(first), color_of(last)) {
            (Some(a), Some(b)) => (a, b),
            _ => return false,
        };
        if ca != cb || self.colors != [ca] {
            return false;
        }
        let vs = &self.vertices;
        match vs.len() {
            3 => {
                host.edge_between(vs[0], vs[1]) == Some(first)
                    && host.edge_between(vs[1], vs[2]) == Some(last)
            }
            4 => {
                host.edge_between(vs[0], vs[1]) == Some(first)
                    && host.edge_between(vs[1], vs[2]) == Some(self.edge_ids[1])
                    && host.edge_between(vs[2], vs[3]) == Some(last)
            }
            _ => false,
        }
    }
}

fn check_sizes(g: &Graph, c: &EdgeColoring) -> Result<()> {
    c.check_len(g)?;
    c.check_total()
}

/// `None` when no two adjacent edges share a color.
pub fn check_proper(g: &Graph, c: &EdgeColoring) -> Result<Option<StarViolation>> {
    check_sizes(g, c)?;
    Ok(first_improper(g, &c.colors))
}

fn first_improper(g: &Graph, colors: &[u32]) -> Option<StarViolation> {
    for v in 0..g.order() {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let ((a, ea), (b, eb)) = (nb[i], nb[j]);
                if colors[ea] != colors[eb] {
                    continue;
                }
                let cand = if a < b { (a, ea, b, eb) } else { (b, eb, a, ea) };
                if best.is_none_or(|bst| (cand.0, cand.2) < (bst.0, bst.2)) {
                    best = Some(cand);
                }
            }
        }
        if let Some((a, ea, b, eb)) = best {
            return Some(StarViolation {
                kind: ViolationKind::ImproperAdjacent,
                vertices: vec![a, v, b],
                edge_ids: vec![ea, eb],
                colors: vec![colors[ea]],
            });
        }
    }
    None
}

/// `None` when `c` is a star edge-coloring of `g`.
pub fn check_star(g: &Graph, c: &EdgeColoring) -> Result<Option<StarViolation>> {
    check_sizes(g, c)?;
    if let Some(v) = first_improper(g, &c.colors) {
        return Ok(Some(v));
    }
    Ok(first_bicolored(g, &c.colors))
}

/// Convenience: `true` iff `c` is a total star coloring of `g`.
pub fn is_star(g: &Graph, c: &EdgeColoring) -> bool {
    matches!(check_star(g, c), Ok(None))
}

fn first_bicolored(g: &Graph, colors: &[u32]) -> Option<StarViolation> {
    let mut by_color: HashMap<(usize, u32), usize> = HashMap::with_capacity(2 * g.size());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        by_color.insert((u, colors[e]), e);
        by_color.insert((v, colors[e]), e);
    }
    let mut best: Option<StarViolation> = None;
    for v2 in 0..g.order() {
        let nb = g.neighbors(v2);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let ((v1, e1), (v3, e2)) = (nb[i], nb[j]);
                let (a, b) = (colors[e1], colors[e2]);
                let (Some(&e0), Some(&e3)) = (by_color.get(&(v1, b)), by_color.get(&(v3, a)))
                else {
                    continue;
                };
                let v0 = g.other_end(e0, v1);
                let v4 = g.other_end(e3, v3);
                let found = if v0 == v4 {
                    normalized_cycle(g, colors, [v0, v1, v2, v3])
                } else {
                    normalized_path(g, colors, [v0, v1, v2, v3, v4])
                };
                if best.as_ref().is_none_or(|b| found.vertices < b.vertices) {
                    best = Some(found);
                }
            }
        }
    }
    best
}

fn walk_edges(g: &Graph, vs: &[usize], closed: bool) -> Vec<usize> {
    let steps = if closed { vs.len() } else { vs.len() - 1 };
    (0..steps)
        .map(|i| {
            g.edge_between(vs[i], vs[(i + 1) % vs.len()])
                .expect("walk follows graph edges")
        })
        .collect()
}

fn normalized_path(g: &Graph, colors: &[u32], mut vs: [usize; 5]) -> StarViolation {
    if vs[0] > vs[4] {
        vs.reverse();
    }
    let edge_ids = walk_edges(g, &vs, false);
    StarViolation {
        kind: ViolationKind::BicoloredPath4,
        colors: vec![colors[edge_ids[0]], colors[edge_ids[1]]],
        vertices: vs.to_vec(),
        edge_ids,
    }
}

fn canonical_cycle(vs: [usize; 4]) -> [usize; 4] {
    let start = (0..4).min_by_key(|&i| vs[i]).unwrap_or(0);
    let fwd = [vs[start], vs[(start + 1) % 4], vs[(start + 2) % 4], vs[(start + 3) % 4]];
    if fwd[1] < fwd[3] {
        fwd
    } else {
        [fwd[0], fwd[3], fwd[2], fwd[1]]
    }
}

fn normalized_cycle(g: &Graph, colors: &[u32], vs: [usize; 4]) -> StarViolation {
    let vs = canonical_cycle(vs);
    let edge_ids = walk_edges(g, &vs, true);
    StarViolation {
        kind: ViolationKind::BicoloredCycle4,
        colors: vec![colors[edge_ids[0]], colors[edge_ids[1]]],
        vertices: vs.to_vec(),
        edge_ids,
    }
}

/// Checks that equally colored edges of `sub_edges` are at distance at
/// least three in `host`: they share no vertex and no host edge joins them.
/// `c` is aligned with `sub_edges`.
pub fn check_restricted_strong(
    host: &Graph,
    sub_edges: &[usize],
    c: &EdgeColoring,
) -> Result<Option<StarViolation>> {
    if c.len() != sub_edges.len() {
        return Err(Error::ColoringSizeMismatch {
            expected: sub_edges.len(),
            got: c.len(),
        });
    }
    c.check_total()?;
    for &e in sub_edges {
        if e >= host.size() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                size: host.size(),
            });
        }
    }
    for i in 0..sub_edges.len() {
        for j in i + 1..sub_edges.len() {
            if c.colors[i] != c.colors[j] {
                continue;
            }
            let (e, f) = (sub_edges[i], sub_edges[j]);
            if let Some(w) = strong_witness(host, e, f) {
                return Ok(Some(StarViolation {
                    kind: ViolationKind::StrongConflict,
                    colors: vec![c.colors[i]],
                    ..w
                }));
            }
        }
    }
    Ok(None)
}

fn strong_witness(host: &Graph, e: usize, f: usize) -> Option<StarViolation> {
    let (a1, a2) = host.edge(e);
    let (b1, b2) = host.edge(f);
    for &x in &[a1, a2] {
        for &y in &[b1, b2] {
            if x == y {
                return Some(StarViolation {
                    kind: ViolationKind::StrongConflict,
                    vertices: vec![host.other_end(e, x), x, host.other_end(f, y)],
                    edge_ids: vec![e, f],
                    colors: Vec::new(),
                });
            }
        }
    }
    for &x in &[a1, a2] {
        for &y in &[b1, b2] {
            if let Some(join) = host.edge_between(x, y) {
                return Some(StarViolation {
                    kind: ViolationKind::StrongConflict,
                    vertices: vec![host.other_end(e, x), x, y, host.other_end(f, y)],
                    edge_ids: vec![e, join, f],
                    colors: Vec::new(),
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WindowKind {
    Path,
    Cycle,
}

/// A path with four edges or a 4-cycle, as vertices and edges in walk
/// order. Paths start at the smaller end vertex; cycles start at their
/// smallest vertex and continue towards the smaller neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Window {
    pub kind: WindowKind,
    pub vertices: Vec<usize>,
    pub edge_ids: Vec<usize>,
}

/// Every 4-edge path (once per direction pair) and every 4-cycle (once per
/// rotation/reflection class), by exhaustive search.
pub fn four_windows(g: &Graph) -> Vec<Window> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(5);
    for start in 0..g.order() {
        stack.clear();
        stack.push(start);
        extend_walks(g, &mut stack, &mut out);
    }
    out
}

fn extend_walks(g: &Graph, stack: &mut Vec<usize>, out: &mut Vec<Window>) {
    let last = *stack.last().expect("walk is never empty");
    if stack.len() == 4 {
        let first = stack[0];
        if first == *stack.iter().min().unwrap_or(&first)
            && stack[1] < stack[3]
            && g.has_edge(last, first)
        {
            out.push(Window {
                kind: WindowKind::Cycle,
                vertices: stack.clone(),
                edge_ids: walk_edges(g, stack, true),
            });
        }
    }
    if stack.len() == 5 {
        if stack[0] < stack[4] {
            out.push(Window {
                kind: WindowKind::Path,
                vertices: stack.clone(),
                edge_ids: walk_edges(g, stack, false),
            });
        }
        return;
    }
    for &(w, _) in g.neighbors(last) {
        if !stack.contains(&w) {
            stack.push(w);
            extend_walks(g, stack, out);
            stack.pop();
        }
    }
}

/// A coloring under construction with constant-time lookup of the edge of
/// a given color at a vertex. Color `0` is "uncolored".
#[derive(Debug, Clone)]
pub struct PartialColoring<'g> {
    g: &'g Graph,
    colors: Vec<u32>,
    at: Vec<u32>,
    stride: usize,
}

impl<'g> PartialColoring<'g> {
    /// An empty coloring that accepts colors `1..=max_color`.
    pub fn new(g: &'g Graph, max_color: u32) -> Self {
        let stride = max_color as usize + 1;
        PartialColoring {
            g,
            colors: vec![0; g.size()],
            at: vec![0; g.order() * stride],
            stride,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn max_color(&self) -> u32 {
        (self.stride - 1) as u32
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> u32 {
        self.colors[e]
    }

    pub fn is_colored(&self, e: usize) -> bool {
        self.colors[e] != 0
    }

    fn edge_at(&self, v: usize, c: u32) -> Option<usize> {
        match self.at[v * self.stride + c as usize] {
            0 => None,
            e => Some(e as usize - 1),
        }
    }

    /// Assigns `c` to `e` without checking.
    pub fn set(&mut self, e: usize, c: u32) {
        assert!(c >= 1 && (c as usize) < self.stride, "color {c} outside palette");
        self.unset(e);
        let (u, v) = self.g.edge(e);
        self.colors[e] = c;
        self.at[u * self.stride + c as usize] = e as u32 + 1;
        self.at[v * self.stride + c as usize] = e as u32 + 1;
    }

    pub fn unset(&mut self, e: usize) {
        let c = self.colors[e];
        if c == 0 {
            return;
        }
        let (u, v) = self.g.edge(e);
        for w in [u, v] {
            let slot = &mut self.at[w * self.stride + c as usize];
            if *slot == e as u32 + 1 {
                *slot = 0;
            }
        }
        self.colors[e] = 0;
    }

    /// Whether coloring the uncolored edge `e` with `c` keeps the colored
    /// part a star coloring, assuming it is one now.
    ///
    /// With a proper coloring every two-colored component is a path or an
    /// even cycle, and it contains a bicolored 4-path or 4-cycle exactly
    /// when it has at least four edges. Only the `(c, d)` components
    /// through `e` can grow, so each is measured by walking out from both
    /// ends, stopping after three steps.
    pub fn admits(&self, e: usize, c: u32) -> bool {
        if c == 0 || c as usize >= self.stride {
            return false;
        }
        let (x, y) = self.g.edge(e);
        if self.edge_at(x, c).is_some() || self.edge_at(y, c).is_some() {
            return false;
        }
        for end in [x, y] {
            for &(_, f) in self.g.neighbors(end) {
                let d = self.colors[f];
                if d == 0 || f == e {
                    continue;
                }
                let Some(from_x) = self.alternating_run(x, y, d, c) else {
                    return false;
                };
                let Some(from_y) = self.alternating_run(y, x, d, c) else {
                    return false;
                };
                if 1 + from_x + from_y >= 4 {
                    return false;
                }
            }
        }
        true
    }

    /// Steps taken from `start` alternating `first`, `second`, ... (at most
    /// three), or `None` if the walk reaches `target`, closing a cycle.
    fn alternating_run(&self, start: usize, target: usize, first: u32, second: u32) -> Option<usize> {
        let mut cur = start;
        let mut col = first;
        let mut steps = 0;
        while steps < 3 {
            let Some(f) = self.edge_at(cur, col) else {
                break;
            };
            cur = self.g.other_end(f, cur);
            steps += 1;
            if cur == target {
                return None;
            }
            col = if col == first { second } else { first };
        }
        Some(steps)
    }

    /// Smallest color in `1..=limit` that [`Self::admits`] `e`.
    pub fn smallest_admissible(&self, e: usize, limit: u32) -> Option<u32> {
        (1..=limit.min(self.max_color())).find(|&c| self.admits(e, c))
    }

    pub fn to_coloring(&self) -> EdgeColoring {
        EdgeColoring::new(self.colors.clone())
    }
}
