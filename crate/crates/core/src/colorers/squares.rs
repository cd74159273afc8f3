//! Cycles, squares of paths and squares of cycles.

use super::{edge, exact_table, figures, finish, PartitionSpec};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{EdgeColoring, Graph};

/// Star 4-coloring of the ladder `P_2 □ P_m` with period four, indexed by
/// column `k mod 4`. Rungs join `2k, 2k+1`, the top rail `2k, 2k+2` and the
/// bottom rail `2k+1, 2k+3`.
///
/// Generated by exhaustive search over periodic patterns (none exist with
/// period at most three) and re-checked by the tests below.
pub const LADDER_RUNG: [u32; 4] = [1, 2, 3, 4];
pub const LADDER_TOP: [u32; 4] = [3, 4, 1, 2];
pub const LADDER_BOTTOM: [u32; 4] = [4, 1, 2, 3];

/// Star 3-coloring of the cycle `0, 1, ..., n-1` (edge `i` joins `i` and
/// `i+1`) with colors `offset+1..=offset+3`.
///
/// `123` repeats; lengths `1` and `2` mod 3 end with the suffixes `1213`
/// and `12131213`, found by exact search on `C_4`, `C_8` and frozen.
pub fn star_color_cycle(n: usize, offset: u32) -> Result<EdgeColoring> {
    if n < 3 {
        return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
    }
    if n == 5 {
        return Err(Error::NIsFive);
    }
    let (blocks, suffix): (usize, &[u32]) = match n % 3 {
        0 => (n / 3, &[]),
        1 => (n / 3 - 1, &[1, 2, 1, 3]),
        _ => (n / 3 - 2, &[1, 2, 1, 3, 1, 2, 1, 3]),
    };
    let colors = [1, 2, 3]
        .iter()
        .cycle()
        .take(3 * blocks)
        .chain(suffix)
        .map(|c| c + offset)
        .collect();
    Ok(EdgeColoring::new(colors))
}

/// `P_n²` split into the ladder `F` and the matching
/// `H = {v_i v_{i+1} : i odd}` (0-based), the edges no ladder contains.
pub fn path_square_partition(n: usize) -> Result<(Graph, PartitionSpec)> {
    let g = families::path_square(n)?;
    let (h, f): (Vec<usize>, Vec<usize>) = (0..g.size()).partition(|&e| {
        let (a, b) = g.edge(e);
        b == a + 1 && a % 2 == 1
    });
    let spec = PartitionSpec::new(&g, f, h)?;
    Ok((g, spec))
}

/// Star coloring of `P_n²`: 3 colors for `n = 3`, 4 for `n = 4` and 6 for
/// `n >= 5` (ladder pattern on `F`, colors 5 and 6 alternating on `H`).
pub fn color_path_square(n: usize) -> Result<EdgeColoring> {
    let case = "path-square";
    match n {
        0..=2 => Err(Error::BadParams(format!("path square needs n >= 3, got {n}"))),
        3 => finish(&families::path_square(3)?, vec![1, 2, 3], case),
        4 => {
            let g = families::path_square(4)?;
            let mut colors = vec![0; g.size()];
            for (u, v, c) in [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 2, 3), (1, 3, 4)] {
                colors[edge(&g, u, v)] = c;
            }
            finish(&g, colors, case)
        }
        _ => {
            let (g, spec) = path_square_partition(n)?;
            let f = spec
                .f_edges
                .iter()
                .map(|&e| {
                    let (a, b) = g.edge(e);
                    let k = (a / 2) % 4;
                    match (b - a, a % 2) {
                        (1, _) => LADDER_RUNG[k],
                        (_, 0) => LADDER_TOP[k],
                        _ => LADDER_BOTTOM[k],
                    }
                })
                .collect();
            let h = spec
                .h_edges
                .iter()
                .map(|&e| 5 + ((g.edge(e).0 / 2) % 2) as u32)
                .collect();
            let merged = super::compose_partition(
                &g,
                &spec,
                &EdgeColoring::new(f),
                &EdgeColoring::new(h),
            )?;
            finish(&g, merged.colors, case)
        }
    }
}

/// Restricted-strong 5-coloring of the Hamiltonian cycle of `C_n²`: blocks
/// `12345` followed by blocks `1234`, so equal colors sit at least four
/// edges apart. `None` when `n` is not a sum of 5s and 4s.
fn outer_strong_pattern(n: usize) -> Option<Vec<u32>> {
    let fours = (0..5).find(|&b| 4 * b <= n && (n - 4 * b).is_multiple_of(5))?;
    let fives = (n - 4 * fours) / 5;
    let mut out = Vec::with_capacity(n);
    for _ in 0..fives {
        out.extend([1, 2, 3, 4, 5]);
    }
    for _ in 0..fours {
        out.extend([1, 2, 3, 4]);
    }
    Some(out)
}

/// Star coloring of `C_n²` for `n >= 5`.
///
/// * `n = 5`: `K_5`, nine colors from the exact solver.
/// * `n = 7, 10, 11`: the hand-drawn colorings in [`figures`].
/// * other even `n`: the Hamiltonian cycle with `{1,2,3}` and the two inner
///   `n/2`-cycles with `{4,5,6}` and `{7,8,9}`.
/// * other odd `n`: the Hamiltonian cycle restricted-strong with `{1..5}`
///   and the inner `n`-cycle `0, 2, 4, ...` star colored with `{6,7,8}`.
pub fn color_cycle_square(n: usize) -> Result<EdgeColoring> {
    match n {
        0..=4 => Err(Error::BadParams(format!("cycle square needs n >= 5, got {n}"))),
        5 => exact_table(&families::cycle_square(5)?, 9, "cycle-square n=5"),
        7 => figure(figures::cycle_square_7(), "cycle-square figure n=7"),
        10 => figure(figures::cycle_square_10(), "cycle-square figure n=10"),
        11 => figure(figures::cycle_square_11(), "cycle-square figure n=11"),
        _ if n.is_multiple_of(2) => cycle_square_even(n),
        _ => cycle_square_odd(n),
    }
}

fn figure(fixture: Result<(Graph, EdgeColoring)>, case: &str) -> Result<EdgeColoring> {
    let (g, c) = fixture?;
    finish(&g, c.colors, case)
}

fn cycle_square_even(n: usize) -> Result<EdgeColoring> {
    let g = families::cycle_square(n)?;
    let mut colors = vec![0; g.size()];
    let outer = star_color_cycle(n, 0)?;
    for i in 0..n {
        colors[edge(&g, i, (i + 1) % n)] = outer.colors[i];
    }
    let half = n / 2;
    for (start, offset) in [(0, 3), (1, 6)] {
        let inner = star_color_cycle(half, offset)?;
        for j in 0..half {
            let a = start + 2 * j;
            colors[edge(&g, a, (a + 2) % n)] = inner.colors[j];
        }
    }
    super::finish(&g, colors, "cycle-square even")
}

fn cycle_square_odd(n: usize) -> Result<EdgeColoring> {
    let case = "cycle-square odd";
    let g = families::cycle_square(n)?;
    let outer = outer_strong_pattern(n)
        .ok_or_else(|| Error::construction(case, format!("{n} is not a sum of 5s and 4s")))?;
    let h_edges: Vec<usize> = (0..n).map(|i| edge(&g, i, (i + 1) % n)).collect();
    let f_edges: Vec<usize> = (0..n).map(|j| edge(&g, 2 * j % n, (2 * j + 2) % n)).collect();
    let inner = star_color_cycle(n, 5)?;
    let spec = PartitionSpec::new(&g, f_edges, h_edges)?;
    let merged = super::compose_partition(&g, &spec, &inner, &EdgeColoring::new(outer))?;
    finish(&g, merged.colors, case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact;
    use crate::verify::{self, is_star};

    #[test]
    fn cycle_patterns_are_star_3_colorings() {
        for n in (3..=60).filter(|&n| n != 5) {
            let g = families::cycle(n).unwrap();
            let c = star_color_cycle(n, 0).unwrap();
            assert_eq!(c.len(), n);
            assert!(is_star(&g, &c), "C_{n}");
            assert_eq!(c.color_count(), 3);
        }
        assert_eq!(star_color_cycle(4, 0).unwrap().colors, vec![1, 2, 1, 3]);
        assert_eq!(star_color_cycle(6, 2).unwrap().colors, vec![3, 4, 5, 3, 4, 5]);
        assert!(matches!(star_color_cycle(5, 0), Err(Error::NIsFive)));
    }

    #[test]
    fn suffix_lengths_need_three_colors() {
        // the suffix tables cannot be shortened to two colors
        for n in [4, 7, 8] {
            let g = families::cycle(n).unwrap();
            assert_eq!(exact::star_index(&g).unwrap(), 3, "C_{n}");
        }
        assert_eq!(exact::star_index(&families::cycle(5).unwrap()).unwrap(), 4);
    }

    #[test]
    fn ladder_pattern_on_grids() {
        for m in 2..=40 {
            let g = families::grid(2, m).unwrap();
            // grid vertex (r, c) is r * m + c
            let mut colors = vec![0; g.size()];
            for k in 0..m {
                colors[edge(&g, k, m + k)] = LADDER_RUNG[k % 4];
                if k + 1 < m {
                    colors[edge(&g, k, k + 1)] = LADDER_TOP[k % 4];
                    colors[edge(&g, m + k, m + k + 1)] = LADDER_BOTTOM[k % 4];
                }
            }
            let c = EdgeColoring::new(colors);
            assert_eq!(verify::check_star(&g, &c).unwrap(), None, "P_2 x P_{m}");
        }
        // 4 colors are needed once the ladder has a 4-cycle and a long path
        for m in 3..=5 {
            assert_eq!(exact::star_index(&families::grid(2, m).unwrap()).unwrap(), 4);
        }
    }

    #[test]
    fn path_square_small_and_counts() {
        assert_eq!(color_path_square(3).unwrap().color_count(), 3);
        assert_eq!(color_path_square(4).unwrap().color_count(), 4);
        for n in 5..=80 {
            let c = color_path_square(n).unwrap();
            assert_eq!(c.color_count(), 6, "n = {n}");
        }
        assert!(color_path_square(2).is_err());
    }

    #[test]
    fn path_square_partition_shape() {
        let (g, spec) = path_square_partition(12).unwrap();
        assert_eq!(spec.h_edges.len(), 5);
        for &e in &spec.h_edges {
            let (a, b) = g.edge(e);
            assert_eq!((b - a, a % 2), (1, 1));
        }
    }

    #[test]
    fn outer_strong_pattern_sizes() {
        for n in (9..=99).step_by(2).filter(|&n| n != 11) {
            let p = outer_strong_pattern(n).unwrap();
            assert_eq!(p.len(), n);
        }
        assert_eq!(outer_strong_pattern(7), None);
        assert_eq!(outer_strong_pattern(11), None);
    }

    #[test]
    fn cycle_square_bounds() {
        for n in (6..=40).step_by(2) {
            let c = color_cycle_square(n).unwrap();
            assert!(c.color_count() <= 9, "n = {n}");
        }
        for n in (9..=41).step_by(2).filter(|&n| n != 11) {
            let c = color_cycle_square(n).unwrap();
            assert!(c.color_count() <= 8, "n = {n}");
        }
        assert_eq!(color_cycle_square(7).unwrap().color_count(), 7);
        assert_eq!(color_cycle_square(11).unwrap().color_count(), 9);
    }
}
