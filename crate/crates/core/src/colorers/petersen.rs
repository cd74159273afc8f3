//! Star 5-coloring of `P(3n, n)` built from the partition of its edges into
//! the outer cycle `E1`, the inner triangles `E2` and the spokes `E3`.

use super::{exact_table, finish};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{EdgeColoring, Graph};

/// Edge ids of `P(3n, n)` by class, each indexed by `i = 0..3n-1`:
/// `e1[i] = u_i u_{i+1}`, `e2[i] = v_i v_{i+n}`, `e3[i] = u_i v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetersenPartition {
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
    pub e3: Vec<usize>,
}

impl PetersenPartition {
    pub fn new(g: &Graph, n: usize) -> Result<Self> {
        let m = 3 * n;
        if g.order() != 2 * m || g.size() != 3 * m {
            return Err(Error::FamilyMismatch(format!("P({m}, {n})")));
        }
        let find = |a: usize, b: usize| {
            g.edge_between(a, b)
                .ok_or_else(|| Error::FamilyMismatch(format!("P({m}, {n})")))
        };
        let mut part = PetersenPartition {
            e1: Vec::with_capacity(m),
            e2: Vec::with_capacity(m),
            e3: Vec::with_capacity(m),
        };
        for i in 0..m {
            part.e1.push(find(i, (i + 1) % m)?);
            part.e2.push(find(m + i, m + (i + n) % m)?);
            part.e3.push(find(i, m + i)?);
        }
        Ok(part)
    }
}

/// How the spokes `u_i v_i` with `i < 2n` alternate 5, 4 when `n` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpokeScheme {
    /// The alternation restarts at `i = n`.
    #[default]
    Restart,
    /// One alternation runs over `0..2n`.
    Continuous,
}

/// Star 5-coloring of `P(3n, n)`, `n >= 2`.
pub fn color_petersen_3n(n: usize) -> Result<EdgeColoring> {
    color_petersen_3n_with(n, SpokeScheme::default())
}

pub fn color_petersen_3n_with(n: usize, scheme: SpokeScheme) -> Result<EdgeColoring> {
    if n < 2 {
        return Err(Error::BadParams(format!("P(3n, n) needs n >= 2, got {n}")));
    }
    let g = families::petersen_3n(n)?;
    if n == 2 {
        return exact_table(&g, 5, "petersen n=2");
    }
    let part = PetersenPartition::new(&g, n)?;
    let mut colors = vec![0; g.size()];
    for (i, &e) in part.e2.iter().enumerate() {
        colors[e] = triangle_color(n, i);
    }
    for (i, &e) in part.e3.iter().enumerate() {
        colors[e] = spoke_color(n, i, scheme);
    }
    let (case, outer) = outer_colors(n);
    for (i, &e) in part.e1.iter().enumerate() {
        colors[e] = outer[i];
    }
    finish(&g, colors, &format!("petersen case {case}"))
}

/// `v_i v_{i+n}`: the triangle through `v_{i mod n}` reads 4, 3, 2 (even)
/// or 5, 2, 1 (odd) in increasing subscript order.
fn triangle_color(n: usize, i: usize) -> u32 {
    let pattern = if (i % n).is_multiple_of(2) { [4, 3, 2] } else { [5, 2, 1] };
    pattern[i / n]
}

fn spoke_color(n: usize, i: usize, scheme: SpokeScheme) -> u32 {
    let block = i / n;
    let step = match (block, scheme) {
        (2, _) => return [1, 3][(i - 2 * n) % 2],
        (_, SpokeScheme::Restart) => i % n,
        (_, SpokeScheme::Continuous) => i,
    };
    [5, 4][step % 2]
}

/// Colors of `u_i u_{i+1}` for the six cases on `n mod 3` and parity.
/// Returns the case number with the colors.
fn outer_colors(n: usize) -> (u8, Vec<u32>) {
    let m = 3 * n;
    let mut f = vec![0; m];
    let mut fill = |from: usize, to: usize, pattern: &[u32]| {
        for i in from..=to {
            f[i] = pattern[(i - from) % pattern.len()];
        }
    };
    let case = match (n % 3, n % 2) {
        (0, 1) => {
            fill(0, 2 * n - 4, &[3, 2, 1]);
            fill(2 * n - 3, 2 * n - 3, &[2]);
            fill(2 * n - 2, 2 * n - 2, &[3]);
            fill(2 * n - 1, 2 * n - 1, &[2]);
            fill(2 * n, 3 * n - 1, &[5, 4, 2]);
            1
        }
        (0, _) => {
            fill(0, 2 * n - 1, &[1, 3, 2, 3]);
            fill(2 * n, 3 * n - 1, &[5, 4, 2]);
            2
        }
        (1, 1) => {
            fill(0, n - 2, &[2, 1, 3]);
            fill(n - 1, n - 1, &[1]);
            fill(n, 2 * n - 3, &[2, 1, 3]);
            fill(2 * n - 2, 2 * n - 2, &[2]);
            fill(2 * n - 1, 2 * n - 1, &[3]);
            fill(2 * n, 3 * n - 3, &[4, 5, 2]);
            fill(3 * n - 2, 3 * n - 2, &[4]);
            fill(3 * n - 1, 3 * n - 1, &[3]);
            3
        }
        (1, _) => {
            fill(0, 2 * n - 1, &[2, 3, 1]);
            fill(2 * n, 3 * n - 2, &[5, 2, 4]);
            fill(3 * n - 1, 3 * n - 1, &[1]);
            4
        }
        (_, 1) => {
            fill(0, 2 * n - 1, &[3, 1, 2]);
            fill(2 * n, 3 * n - 1, &[4, 2, 5]);
            5
        }
        _ => {
            fill(0, 2 * n - 2, &[1, 3, 2]);
            fill(2 * n - 1, 2 * n - 1, &[3]);
            fill(2 * n, 3 * n - 4, &[5, 2, 4]);
            fill(3 * n - 3, 3 * n - 3, &[5]);
            fill(3 * n - 2, 3 * n - 2, &[4]);
            fill(3 * n - 1, 3 * n - 1, &[2]);
            6
        }
    };
    (case, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact;

    #[test]
    fn partition_covers_edges() {
        for n in 2..=6 {
            let g = families::petersen_3n(n).unwrap();
            let p = PetersenPartition::new(&g, n).unwrap();
            let mut all: Vec<usize> = p.e1.iter().chain(&p.e2).chain(&p.e3).copied().collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), g.size());
        }
    }

    #[test]
    fn five_colors_for_small_n() {
        for n in 2..=20 {
            let c = color_petersen_3n(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
            assert_eq!(c.color_count(), 5, "n = {n}");
        }
    }

    #[test]
    fn exact_agrees_for_n_2_and_3() {
        for n in [2, 3] {
            let g = families::petersen_3n(n).unwrap();
            assert_eq!(exact::star_index(&g).unwrap(), 5);
        }
    }

    #[test]
    fn every_case_reached() {
        let mut seen: Vec<u8> = (3..=8).map(|n| outer_colors(n).0).collect();
        seen.sort_unstable();
        assert_eq!(seen, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn spoke_schemes_differ_only_for_odd_n() {
        for n in 3..=8 {
            let same = (0..3 * n)
                .all(|i| spoke_color(n, i, SpokeScheme::Restart) == spoke_color(n, i, SpokeScheme::Continuous));
            assert_eq!(same, n % 2 == 0, "n = {n}");
        }
    }

    #[test]
    fn continuous_spokes_fail_for_odd_n() {
        for n in [3, 5, 7, 9] {
            let err = color_petersen_3n_with(n, SpokeScheme::Continuous).unwrap_err();
            assert!(matches!(err, Error::ConstructionFailed { .. }), "n = {n}");
        }
        assert!(color_petersen_3n_with(4, SpokeScheme::Continuous).is_ok());
    }
}
