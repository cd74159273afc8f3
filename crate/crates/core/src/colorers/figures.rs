//! Hand-drawn colorings of small instances, transcribed edge by edge.
//!
//! Each fixture is a list of `(u, v, color)` triples over the vertex ids of
//! the matching generator, turned into an [`EdgeColoring`] aligned with the
//! generator's edge order.

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{EdgeColoring, Graph};

/// A transcribed figure: the graph and its drawn coloring.
pub type Fixture = fn() -> Result<(Graph, EdgeColoring)>;

fn assemble(g: &Graph, triples: &[(usize, usize, u32)]) -> Result<EdgeColoring> {
    let mut colors = vec![0; g.size()];
    for &(u, v, c) in triples {
        let e = g.edge_between(u, v).ok_or_else(|| {
            Error::BadParams(format!("fixture edge {{{u}, {v}}} missing from graph"))
        })?;
        colors[e] = c;
    }
    if let Some(e) = colors.iter().position(|&c| c == 0) {
        return Err(Error::BadParams(format!("fixture leaves edge {e} uncolored")));
    }
    Ok(EdgeColoring::new(colors))
}

/// `N_1 = K_4`: triangle `0, 1', 2` colored 1, 2, 3 and spokes from the
/// spine vertex colored 4, 5, 1.
pub fn necklace_1() -> Result<(Graph, EdgeColoring)> {
    let g = families::necklace(1)?.into_graph();
    let c = assemble(&g, &[(0, 3, 1), (3, 2, 2), (2, 0, 3), (1, 0, 4), (1, 3, 5), (1, 2, 1)])?;
    Ok((g, c))
}

/// `N_2`: outer cycle 5, 4, 6, 4; spine path 1, 3, 1; remaining spokes 2, 2.
pub fn necklace_2() -> Result<(Graph, EdgeColoring)> {
    let g = families::necklace(2)?.into_graph();
    // 0 -> A1, 4 (1') -> A2, 5 (2') -> B2, 3 -> B1, spine 1 -> A3, 2 -> B3
    let c = assemble(
        &g,
        &[
            (0, 3, 5),
            (3, 5, 4),
            (5, 4, 6),
            (4, 0, 4),
            (0, 1, 1),
            (1, 2, 3),
            (2, 3, 1),
            (4, 1, 2),
            (5, 2, 2),
        ],
    )?;
    Ok((g, c))
}

/// `N_3` with five colors.
pub fn necklace_3() -> Result<(Graph, EdgeColoring)> {
    let g = families::necklace(3)?.into_graph();
    // spine 1, 2, 3; leaves 0, 1' = 5, 2' = 6, 3' = 7, 4
    let c = assemble(
        &g,
        &[
            (0, 1, 5),
            (1, 2, 2),
            (2, 3, 3),
            (3, 4, 4),
            (4, 7, 2),
            (7, 6, 5),
            (6, 5, 4),
            (5, 0, 3),
            (1, 5, 1),
            (2, 6, 1),
            (3, 7, 1),
            (0, 4, 1),
        ],
    )?;
    Ok((g, c))
}

fn cycle_square_fixture(n: usize, outer: &[u32], inner: &[(usize, usize, u32)]) -> Result<(Graph, EdgeColoring)> {
    let g = families::cycle_square(n)?;
    let mut triples: Vec<(usize, usize, u32)> = outer
        .iter()
        .enumerate()
        .map(|(i, &c)| (i, (i + 1) % n, c))
        .collect();
    triples.extend_from_slice(inner);
    let c = assemble(&g, &triples)?;
    Ok((g, c))
}

/// `C_7²` with seven colors.
pub fn cycle_square_7() -> Result<(Graph, EdgeColoring)> {
    cycle_square_fixture(
        7,
        &[1, 2, 3, 4, 5, 6, 7],
        &[(0, 2, 4), (2, 4, 6), (4, 6, 1), (6, 1, 3), (1, 3, 5), (3, 5, 7), (5, 0, 2)],
    )
}

/// `C_10²` as drawn; uses colors 1 through 8.
pub fn cycle_square_10() -> Result<(Graph, EdgeColoring)> {
    cycle_square_fixture(
        10,
        &[1, 2, 3, 1, 2, 3, 1, 2, 3, 2],
        &[
            (0, 2, 4),
            (2, 4, 5),
            (4, 6, 6),
            (6, 8, 7),
            (8, 0, 5),
            (1, 3, 7),
            (3, 5, 8),
            (5, 7, 4),
            (7, 9, 8),
            (9, 1, 6),
        ],
    )
}

/// `C_11²` with nine colors.
pub fn cycle_square_11() -> Result<(Graph, EdgeColoring)> {
    cycle_square_fixture(
        11,
        &[1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 4],
        &[
            (0, 2, 5),
            (2, 4, 4),
            (4, 6, 6),
            (6, 8, 4),
            (8, 10, 7),
            (10, 1, 6),
            (1, 3, 7),
            (3, 5, 8),
            (5, 7, 5),
            (7, 9, 8),
            (9, 0, 9),
        ],
    )
}
