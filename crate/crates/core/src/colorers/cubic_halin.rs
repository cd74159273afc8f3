//! Star 6-coloring of 3-regular Halin graphs by reduction.
//!
//! Let `y_0 ... y_s` be a longest path of the tree, `u = y_1`, `w = y_2`,
//! `x = y_3`. The leaves `u_1, u_2` of `u` and the third branch of `w` end
//! in a run of consecutive cycle vertices. Either that branch is a vertex
//! `v` with leaves `v_1, v_2` (the run is `z_1 u_1 u_2 v_1 v_2 z_2`), or it
//! is a single leaf `v_1` (the run is `z_1 u_1 u_2 v_1 v_2`). The run is
//! contracted onto `w`, which becomes a leaf, the smaller graph is colored
//! recursively, and the coloring is lifted back with prescribed colors
//! followed by greedy choices. Graphs with at most five leaves are solved
//! exactly.

use std::collections::HashMap;

use super::{exact_table, finish, force, greedy};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph, HalinGraph};
use crate::verify::PartialColoring;

const PALETTE: u32 = 6;

/// Star coloring of a 3-regular Halin graph with at most six colors.
pub fn color_cubic_halin(hg: &HalinGraph) -> Result<EdgeColoring> {
    if !hg.graph().is_regular(3) {
        return Err(Error::NotCubic);
    }
    reduce(hg)
}

enum Shape {
    /// `w v` is a tree edge and `v` has leaves `v_1, v_2`.
    Branch { v: usize, v1: usize, v2: usize, z2: usize },
    /// `w` itself has the leaf `v_1`; `v_2` is the next cycle vertex.
    Leaf { v1: usize, v2: usize },
}

struct Local {
    u: usize,
    w: usize,
    x: usize,
    u1: usize,
    u2: usize,
    z1: usize,
    shape: Shape,
}

fn reduce(hg: &HalinGraph) -> Result<EdgeColoring> {
    let g = hg.graph();
    let leaves = hg.cycle_order();
    if leaves.len() <= 5 {
        return exact_table(g, PALETTE as usize, &format!("cubic-halin base, {} leaves", leaves.len()));
    }
    let loc = locate(hg)?;
    let (smaller, back) = contract(hg, &loc)?;
    let phi = reduce(&smaller)?;

    let mut pc = PartialColoring::new(g, PALETTE);
    let mut added: HashMap<usize, u32> = HashMap::new();
    for (e2, &(a2, b2)) in smaller.graph().edges().iter().enumerate() {
        let (a, b) = (back[a2], back[b2]);
        let c = phi.colors[e2];
        match g.edge_between(a, b) {
            Some(e) => pc.set(e, c),
            None => {
                // one of the two edges added at w
                let other = if a == loc.w { b } else { a };
                added.insert(other, c);
            }
        }
    }
    let xw = pc.color(super::edge(g, loc.x, loc.w));
    let at = |a: usize, b: usize| super::edge(g, a, b);
    let Local { u, w, u1, u2, z1, .. } = loc;
    let wz1 = added[&z1];
    match loc.shape {
        Shape::Branch { v, v1, v2, z2 } => {
            let case = "cubic-halin case wv in T";
            let wz2 = added[&z2];
            force(&mut pc, at(u2, v1), xw, case)?;
            for (a, b) in [(w, v), (v1, v2), (z1, u1)] {
                force(&mut pc, at(a, b), wz1, case)?;
            }
            for (a, b) in [(w, u), (u1, u2), (v2, z2)] {
                force(&mut pc, at(a, b), wz2, case)?;
            }
            for (a, b) in [(v, v2), (u, u1), (u, u2), (v, v1)] {
                greedy(&mut pc, at(a, b), PALETTE, case)?;
            }
            finish(g, pc.colors().to_vec(), case)
        }
        Shape::Leaf { v1, v2 } => {
            let case = "cubic-halin case w = v";
            let wv2 = added[&v2];
            force(&mut pc, at(u1, u2), xw, case)?;
            for (a, b) in [(w, v1), (z1, u1)] {
                force(&mut pc, at(a, b), wz1, case)?;
            }
            for (a, b) in [(u, u1), (v1, v2)] {
                force(&mut pc, at(a, b), wv2, case)?;
            }
            for (a, b) in [(u, w), (u2, v1), (u, u2)] {
                greedy(&mut pc, at(a, b), PALETTE, case)?;
            }
            finish(g, pc.colors().to_vec(), case)
        }
    }
}

fn farthest(t: &Graph, from: usize) -> (usize, Vec<usize>) {
    let dist = t.distances_from(from).expect("vertex in range");
    let mut best = from;
    for (v, d) in dist.iter().enumerate() {
        if let (Some(d), Some(b)) = (d, dist[best]) {
            if *d > b {
                best = v;
            }
        }
    }
    // walk back along decreasing distance
    let mut path = vec![best];
    let mut cur = best;
    while cur != from {
        let dc = dist[cur].expect("reachable");
        cur = t
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| dist[w] == Some(dc - 1))
            .expect("BFS predecessor");
        path.push(cur);
    }
    path.reverse();
    (best, path)
}

fn locate(hg: &HalinGraph) -> Result<Local> {
    let bad = |msg: &str| Error::InvalidHalin(msg.to_string());
    let (t, _) = hg.tree();
    let (y0, _) = farthest(&t, hg.root());
    let (_, back_path) = farthest(&t, y0);
    // back_path runs from y0 to the far end
    if back_path.len() < 5 {
        return Err(bad("tree too shallow for reduction"));
    }
    let (u, w, x) = (back_path[1], back_path[2], back_path[3]);
    let tree_nbrs = |v: usize| -> Vec<usize> { t.neighbors(v).iter().map(|&(a, _)| a).collect() };
    let u_leaves: Vec<usize> = tree_nbrs(u).into_iter().filter(|&a| a != w).collect();
    let third: Vec<usize> = tree_nbrs(w).into_iter().filter(|&a| a != u && a != x).collect();
    if u_leaves.len() != 2 || third.len() != 1 || u_leaves.iter().any(|&l| !hg.is_leaf(l)) {
        return Err(bad("unexpected structure at the end of a longest path"));
    }

    let order = hg.cycle_order();
    let n = order.len();
    let mut pos = vec![usize::MAX; hg.graph().order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let cyc = |v: usize| [order[(pos[v] + n - 1) % n], order[(pos[v] + 1) % n]];
    let other_cyc = |v: usize, not: usize| -> Result<usize> {
        let [a, b] = cyc(v);
        match (a == not, b == not) {
            (true, false) => Ok(b),
            (false, true) => Ok(a),
            _ => Err(bad("cycle neighbors inconsistent")),
        }
    };
    let w1 = third[0];
    let branch_leaves: Vec<usize> = if hg.is_leaf(w1) {
        vec![w1]
    } else {
        let ls: Vec<usize> = tree_nbrs(w1).into_iter().filter(|&a| a != w).collect();
        if ls.len() != 2 || ls.iter().any(|&l| !hg.is_leaf(l)) {
            return Err(bad("third branch of w is not a cherry"));
        }
        ls
    };
    // u2 is the leaf of u next to the third branch on the cycle
    let (u2, v1) = u_leaves
        .iter()
        .find_map(|&l| {
            let [a, b] = cyc(l);
            [a, b].into_iter().find(|c| branch_leaves.contains(c)).map(|c| (l, c))
        })
        .ok_or_else(|| bad("leaves of u and of the third branch are not consecutive"))?;
    let u1 = if u_leaves[0] == u2 { u_leaves[1] } else { u_leaves[0] };
    if !cyc(u1).contains(&u2) {
        return Err(bad("leaves of u are not consecutive"));
    }
    let z1 = other_cyc(u1, u2)?;
    let shape = if hg.is_leaf(w1) {
        Shape::Leaf {
            v1,
            v2: other_cyc(v1, u2)?,
        }
    } else {
        let v2 = if branch_leaves[0] == v1 { branch_leaves[1] } else { branch_leaves[0] };
        if !cyc(v2).contains(&v1) {
            return Err(bad("leaves of v are not consecutive"));
        }
        Shape::Branch {
            v: w1,
            v1,
            v2,
            z2: other_cyc(v2, v1)?,
        }
    };
    Ok(Local {
        u,
        w,
        x,
        u1,
        u2,
        z1,
        shape,
    })
}

/// The reduced Halin graph and the map from its vertices to ours.
fn contract(hg: &HalinGraph, loc: &Local) -> Result<(HalinGraph, Vec<usize>)> {
    let g = hg.graph();
    let mut gone = vec![loc.u, loc.u1, loc.u2];
    match loc.shape {
        Shape::Branch { v, v1, v2, .. } => gone.extend([v, v1, v2]),
        Shape::Leaf { v1, .. } => gone.push(v1),
    }
    let mut new_id = vec![usize::MAX; g.order()];
    let mut back = Vec::new();
    for v in 0..g.order() {
        if !gone.contains(&v) {
            new_id[v] = back.len();
            back.push(v);
        }
    }
    let mut pairs = Vec::new();
    for &e in hg.tree_edges() {
        let (a, b) = g.edge(e);
        if new_id[a] != usize::MAX && new_id[b] != usize::MAX {
            pairs.push((new_id[a], new_id[b]));
        }
    }
    let tree_count = pairs.len();
    let mut cycle = Vec::new();
    for &v in hg.cycle_order() {
        if v == loc.u1 {
            cycle.push(new_id[loc.w]);
        } else if new_id[v] != usize::MAX {
            cycle.push(new_id[v]);
        }
    }
    let k = cycle.len();
    for i in 0..k {
        pairs.push((cycle[i], cycle[(i + 1) % k]));
    }
    let smaller = Graph::new(back.len(), pairs)?;
    let root = if new_id[hg.root()] == usize::MAX || hg.root() == loc.w {
        new_id[loc.x]
    } else {
        new_id[hg.root()]
    };
    let hg2 = HalinGraph::new(smaller, (0..tree_count).collect(), root, cycle)?;
    Ok((hg2, back))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn small_necklaces() {
        let k4 = families::necklace(1).unwrap();
        assert_eq!(color_cubic_halin(&k4).unwrap().color_count(), 5);
        let n2 = families::necklace(2).unwrap();
        assert_eq!(color_cubic_halin(&n2).unwrap().color_count(), 6);
    }

    #[test]
    fn necklaces_all_h() {
        for h in 1..=30 {
            let hg = families::necklace(h).unwrap();
            let c = color_cubic_halin(&hg).unwrap_or_else(|e| panic!("h = {h}: {e}"));
            assert!(c.color_count() <= 6, "h = {h}");
        }
    }

    #[test]
    fn random_graphs() {
        for seed in 0..60 {
            for leaves in [6, 7, 9, 13, 30] {
                let hg = families::random_cubic_halin(leaves, seed).unwrap();
                let c = color_cubic_halin(&hg)
                    .unwrap_or_else(|e| panic!("leaves {leaves}, seed {seed}: {e}"));
                assert!(c.color_count() <= 6);
            }
        }
    }

    #[test]
    fn rejects_non_cubic() {
        let hg = families::complete_halin(&families::CompleteHalinSpec::uniform(&[4])).unwrap();
        assert!(matches!(color_cubic_halin(&hg), Err(Error::NotCubic)));
    }
}
