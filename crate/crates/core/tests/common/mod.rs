//! Brute-force oracles shared by the integration tests. Nothing here uses
//! the checker or solver under test.

#![allow(dead_code)]

use rand::Rng;
use starcolor_core::Graph;

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, pairs).unwrap()
}

fn color_of(g: &Graph, colors: &[u32], a: usize, b: usize) -> Option<u32> {
    let e = g.edges().iter().position(|&(x, y)| (x, y) == (a.min(b), a.max(b)))?;
    Some(colors[e]).filter(|&c| c != 0)
}

/// Every walk `v_0 ... v_{len}` through distinct vertices, with the edge
/// colors along it (uncolored edges end the walk).
fn colored_walks(g: &Graph, colors: &[u32], len: usize) -> Vec<(Vec<usize>, Vec<u32>)> {
    let n = g.order();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<u32>)> = (0..n).map(|v| (vec![v], vec![])).collect();
    while let Some((vs, cs)) = stack.pop() {
        if cs.len() == len {
            out.push((vs, cs));
            continue;
        }
        let last = *vs.last().unwrap();
        for w in 0..n {
            if vs.contains(&w) {
                continue;
            }
            if let Some(c) = color_of(g, colors, last, w) {
                let mut vs2 = vs.clone();
                vs2.push(w);
                let mut cs2 = cs.clone();
                cs2.push(c);
                stack.push((vs2, cs2));
            }
        }
    }
    out
}

fn alternating(cs: &[u32]) -> bool {
    cs[0] != cs[1] && cs.iter().enumerate().all(|(i, &c)| c == cs[i % 2])
}

/// True when the colored edges (color 0 = absent) form a star coloring:
/// proper, with no bicolored path on four edges and no bicolored 4-cycle.
pub fn brute_is_star(g: &Graph, colors: &[u32]) -> bool {
    for (_, cs) in colored_walks(g, colors, 2) {
        if cs[0] == cs[1] {
            return false;
        }
    }
    for (_, cs) in colored_walks(g, colors, 4) {
        if alternating(&cs) {
            return false;
        }
    }
    for (vs, cs) in colored_walks(g, colors, 3) {
        if let Some(c) = color_of(g, colors, vs[3], vs[0]) {
            let mut all = cs.clone();
            all.push(c);
            if alternating(&all) {
                return false;
            }
        }
    }
    true
}

/// Numbers of 4-edge paths and 4-cycles, counted as subgraphs.
pub fn brute_window_counts(g: &Graph) -> (usize, usize) {
    let all = vec![1; g.size()];
    let paths = colored_walks(g, &all, 4).len() / 2;
    let cycles = colored_walks(g, &all, 3)
        .iter()
        .filter(|(vs, _)| g.has_edge(vs[3], vs[0]))
        .count()
        / 8;
    (paths, cycles)
}

/// Smallest `k` admitting a star coloring, by enumerating every
/// assignment of `1..=k` to the edges.
pub fn naive_star_index(g: &Graph) -> usize {
    let m = g.size();
    if m == 0 {
        return 0;
    }
    let edges = g.edges();
    let proper = |colors: &[u32]| {
        (0..m).all(|i| {
            (i + 1..m).all(|j| {
                let ((a, b), (c, d)) = (edges[i], edges[j]);
                colors[i] != colors[j] || (a != c && a != d && b != c && b != d)
            })
        })
    };
    for k in 1..=m {
        let mut colors = vec![1u32; m];
        loop {
            if proper(&colors) && brute_is_star(g, &colors) {
                return k;
            }
            let mut i = 0;
            while i < m && colors[i] == k as u32 {
                colors[i] = 1;
                i += 1;
            }
            if i == m {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("a rainbow coloring is always a star coloring")
}

/// All-pairs distances by Floyd–Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether some injection of `small`'s vertices into `big` maps every edge
/// of `small` onto an edge of `big`.
pub fn contains_subgraph(big: &Graph, small: &Graph) -> bool {
    fn place(big: &Graph, small: &Graph, map: &mut Vec<usize>) -> bool {
        let v = map.len();
        if v == small.order() {
            return true;
        }
        for target in 0..big.order() {
            if map.contains(&target) {
                continue;
            }
            let fits = small
                .neighbors(v)
                .iter()
                .filter(|&&(w, _)| w < v)
                .all(|&(w, _)| big.has_edge(map[w], target));
            if fits {
                map.push(target);
                if place(big, small, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    place(big, small, &mut Vec::new())
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && permutations(a.order())
            .iter()
            .any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}
