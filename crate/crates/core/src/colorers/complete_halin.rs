use super::{finish, force, greedy, tree::color_rooted};
use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, HalinGraph};
use crate::verify::PartialColoring;

/// Star coloring of a complete Halin graph with `Δ >= 6` (not a wheel)
/// using at most `⌊3Δ/2⌋ + 1` colors.
///
/// The tree takes colors `1..=⌊3Δ/2⌋`. Cycle edges between leaf groups of
/// different parents take `c0 = ⌊3Δ/2⌋ + 1`; the path inside each group
/// `u_1, ..., u_j` is colored in the order the degree of its parent `w`
/// dictates, each edge getting the smallest color that keeps the colored
/// part a star coloring. When `d(w) >= 6`, `u_{j-3} u_{j-2}` is colored
/// `c0` first.
pub fn color_complete_halin(hg: &HalinGraph) -> Result<EdgeColoring> {
    let case = "complete-halin";
    let g = hg.graph();
    let parent = hg.tree_parents();
    let depth = |mut v: usize| {
        let mut d = 0;
        while v != hg.root() {
            v = parent[v];
            d += 1;
        }
        d
    };
    let leaves = hg.cycle_order();
    let leaf_depth = depth(leaves[0]);
    if leaves.iter().any(|&l| depth(l) != leaf_depth) {
        return Err(Error::NotComplete);
    }
    if leaf_depth == 1 {
        return Err(Error::IsWheel);
    }
    let delta = g.max_degree();
    if delta < 6 {
        return Err(Error::DeltaTooSmall(delta));
    }
    let k = (3 * delta / 2) as u32;
    let c0 = k + 1;

    let (t, to_host) = hg.tree();
    let tree_colors = color_rooted(&t, hg.root(), k)?;
    let tree_colors = finish(&t, tree_colors, "complete-halin tree")?;
    let mut pc = PartialColoring::new(g, c0);
    for (i, &e) in to_host.iter().enumerate() {
        pc.set(e, tree_colors.colors[i]);
    }

    // maximal runs of consecutive leaves sharing a parent
    let n = leaves.len();
    let start = (0..n)
        .find(|&s| parent[leaves[s]] != parent[leaves[(s + n - 1) % n]])
        .ok_or(Error::IsWheel)?;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let v = leaves[(start + i) % n];
        match groups.last_mut() {
            Some(grp) if parent[grp[0]] == parent[v] => grp.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let edge = |a: usize, b: usize| super::edge(g, a, b);
    for i in 0..groups.len() {
        let next = &groups[(i + 1) % groups.len()];
        let last = *groups[i].last().expect("groups are nonempty");
        force(&mut pc, edge(last, next[0]), c0, case)?;
    }

    for grp in &groups {
        let j = grp.len();
        // path edge (a, a+1) in 1-based group positions
        let path = |a: usize| edge(grp[a - 1], grp[a]);
        let order: Vec<usize> = match j {
            0..=1 => {
                return Err(Error::construction(case, "leaf group of size one"));
            }
            2 => vec![1],
            3 => vec![1, 2],
            4 => vec![1, 3, 2],
            _ => {
                force(&mut pc, path(j - 3), c0, case)?;
                let mut o = vec![1, j - 1, 2];
                o.extend(3..=j - 2);
                o
            }
        };
        for a in order {
            let e = path(a);
            if !pc.is_colored(e) {
                greedy(&mut pc, e, c0, case)?;
            }
        }
    }
    finish(g, pc.colors().to_vec(), case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, CompleteHalinSpec};

    fn bound(hg: &HalinGraph) -> usize {
        3 * hg.graph().max_degree() / 2 + 1
    }

    #[test]
    fn three_groups_of_five() {
        let hg = families::complete_halin(&CompleteHalinSpec::uniform(&[3, 5])).unwrap();
        assert_eq!(hg.graph().max_degree(), 6);
        let c = color_complete_halin(&hg).unwrap();
        assert!(c.color_count() <= 10);
    }

    #[test]
    fn mixed_group_sizes() {
        for groups in [&[2, 5, 3, 4][..], &[6, 2, 2], &[9, 4, 5, 2, 3], &[5, 5, 5, 5, 5, 5]] {
            let hg = families::complete_halin(&CompleteHalinSpec::two_level(groups)).unwrap();
            let c = color_complete_halin(&hg).unwrap_or_else(|e| panic!("{groups:?}: {e}"));
            assert!(c.color_count() <= bound(&hg), "{groups:?}");
        }
    }

    #[test]
    fn deeper_trees() {
        let hg = families::complete_halin(&CompleteHalinSpec::uniform(&[3, 3, 6])).unwrap();
        let c = color_complete_halin(&hg).unwrap();
        assert!(c.color_count() <= bound(&hg));
    }

    #[test]
    fn preconditions() {
        let wheel = families::complete_halin(&CompleteHalinSpec::uniform(&[7])).unwrap();
        assert!(matches!(color_complete_halin(&wheel), Err(Error::IsWheel)));
        let small = families::complete_halin(&CompleteHalinSpec::uniform(&[3, 3])).unwrap();
        assert!(matches!(color_complete_halin(&small), Err(Error::DeltaTooSmall(4))));
        let necklace = families::necklace(4).unwrap();
        assert!(matches!(color_complete_halin(&necklace), Err(Error::NotComplete)));
    }
}
