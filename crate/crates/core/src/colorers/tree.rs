//! Star coloring of trees with `⌊3Δ/2⌋` colors.
//!
//! The tree is rooted and colored top-down. When the child edges of `v`
//! (parent `u`) are colored, a color may come from
//!
//! * `P \ A(u)`, colors not present at `u` ("fresh"), or
//! * the color of a sibling edge `uy` when `v → y` in a balanced tournament
//!   on the children of `u`, or
//! * the color of `u`'s own parent edge, if `uv` itself is fresh with
//!   respect to `u`'s parent.
//!
//! Each rule blocks every bicolored path of four edges: two siblings cannot
//! borrow from each other, and a borrowed parent color never stacks with a
//! second borrowed parent color one level lower. Counting shows the
//! palette suffices once children with the largest demand are placed on the
//! tournament vertices of largest out-degree and children that still fall
//! one short receive fresh colors, which entitles them to the parent rule.

use std::collections::VecDeque;

use super::finish;
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};

/// Star edge-coloring of a tree using at most `⌊3Δ/2⌋` colors.
pub fn tree_star_coloring(t: &Graph) -> Result<EdgeColoring> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.size() == 0 {
        return Ok(EdgeColoring::new(Vec::new()));
    }
    let delta = t.max_degree();
    let root = (0..t.order()).find(|&v| t.degree(v) == delta).unwrap_or(0);
    let colors = color_rooted(t, root, (3 * delta / 2) as u32)?;
    finish(t, colors, "tree")
}

/// Children of `p` (out of `m`) whose colors the child at position `p` may
/// reuse: a rotational tournament, with the antipodal pairs of an even `m`
/// pointing from the first half to the second.
fn out_positions(p: usize, m: usize) -> impl Iterator<Item = usize> {
    (0..m).filter(move |&q| {
        let d = (q + m - p) % m;
        (d >= 1 && d <= (m - 1) / 2) || (m.is_multiple_of(2) && d == m / 2 && p < m / 2)
    })
}

/// Colors `t` top-down from `root` with colors `1..=palette`; entries are
/// aligned with `t`'s edges.
pub(crate) fn color_rooted(t: &Graph, root: usize, palette: u32) -> Result<Vec<u32>> {
    let case = "tree";
    let k = palette as usize;
    let n = t.order();
    let mut parent_edge = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(w, e) in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }

    let mut colors = vec![0u32; t.size()];
    // colors `v` may borrow from outside P \ A(parent)
    let mut borrow: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &v in &order {
        let children: Vec<(usize, usize)> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&(w, _)| w != parent[v])
            .collect();
        if children.is_empty() {
            continue;
        }
        let d_v = t.degree(v);
        let need = |x: usize| (t.degree(x) - 1).saturating_sub(k.saturating_sub(d_v));
        let mut ranked = children.clone();
        ranked.sort_by_key(|&(x, _)| std::cmp::Reverse(need(x)));
        let m = ranked.len();
        let out_degree = |p: usize| out_positions(p, m).count();

        // colors already at the parent of v (all of its edges are colored)
        let mut at_parent = vec![false; k + 1];
        let grandparent_color = if v == root {
            None
        } else {
            let u = parent[v];
            for &(_, f) in t.neighbors(u) {
                at_parent[colors[f] as usize] = true;
            }
            Some(colors[parent_edge[v]])
        };
        let fresh: Vec<u32> = (1..=palette).filter(|&c| !at_parent[c as usize]).collect();
        let mut allowed = fresh.clone();
        allowed.extend(&borrow[v]);
        allowed.sort_unstable();
        allowed.dedup();

        let mut used = vec![false; k + 1];
        let mut assigned = vec![0u32; m];
        // children one short of their demand take fresh colors first
        for p in 0..m {
            let (x, _) = ranked[p];
            let (req, out) = (need(x), out_degree(p));
            if req <= out {
                continue;
            }
            if req > out + 1 || v == root {
                return Err(Error::construction(
                    case,
                    format!("vertex {x} needs {req} borrowed colors but only {out} are available"),
                ));
            }
            let c = fresh.iter().copied().find(|&c| !used[c as usize]).ok_or_else(|| {
                Error::construction(case, format!("fresh colors at vertex {v} exhausted"))
            })?;
            used[c as usize] = true;
            assigned[p] = c;
        }
        for p in 0..m {
            if assigned[p] != 0 {
                continue;
            }
            let c = allowed.iter().copied().find(|&c| !used[c as usize]).ok_or_else(|| {
                Error::construction(
                    case,
                    format!("vertex {v} has {m} child edges but too few allowed colors"),
                )
            })?;
            used[c as usize] = true;
            assigned[p] = c;
        }
        for p in 0..m {
            let (x, e) = ranked[p];
            colors[e] = assigned[p];
            let mut b: Vec<u32> = out_positions(p, m).map(|q| assigned[q]).collect();
            if let Some(pc) = grandparent_color {
                if !at_parent[assigned[p] as usize] {
                    // v's parent edge color, available because vx is fresh
                    b.push(pc);
                }
            }
            borrow[x] = b;
        }
    }
    Ok(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact;
    use crate::verify::is_star;

    fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn tournament_is_balanced() {
        for m in 1..=12 {
            let mut outs: Vec<usize> = (0..m).map(|p| out_positions(p, m).count()).collect();
            let arcs: usize = outs.iter().sum();
            assert_eq!(arcs, m * (m - 1) / 2, "m = {m}");
            outs.sort_unstable();
            assert!(outs[m - 1] - outs[0] <= 1);
            for p in 0..m {
                for q in out_positions(p, m) {
                    assert!(!out_positions(q, m).any(|r| r == p));
                }
            }
        }
    }

    #[test]
    fn stars_and_paths() {
        let c = tree_star_coloring(&star(6)).unwrap();
        assert_eq!(c.color_count(), 6);
        let p5 = crate::families::path(5).unwrap();
        let c = tree_star_coloring(&p5).unwrap();
        assert!(c.color_count() <= 3);
        assert_eq!(exact::star_index(&p5).unwrap(), 3);
    }

    #[test]
    fn spider_within_bound() {
        // three legs of length two
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let c = tree_star_coloring(&g).unwrap();
        assert!(c.color_count() <= 4);
        assert!(exact::star_index(&g).unwrap() <= 4);
    }

    #[test]
    fn complete_trees_within_bound() {
        for d in 2..=7 {
            for depth in 1..=3 {
                let spec = crate::families::CompleteHalinSpec::uniform(&vec![d; depth]);
                let hg = match crate::families::complete_halin(&spec) {
                    Ok(hg) => hg,
                    Err(_) => continue,
                };
                let (t, _) = hg.tree();
                let c = tree_star_coloring(&t).unwrap();
                assert!(is_star(&t, &c));
                assert!(c.max_color() as usize <= 3 * t.max_degree() / 2);
            }
        }
    }

    #[test]
    fn rejects_non_trees() {
        let c4 = crate::families::cycle(4).unwrap();
        assert!(matches!(tree_star_coloring(&c4), Err(Error::NotATree)));
    }
}
