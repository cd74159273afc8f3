//! Constructive star edge-colorings, one per family.
//!
//! Every colorer validates its own output with [`verify::check_star`]
//! before returning it; an invalid result surfaces as
//! [`Error::ConstructionFailed`] carrying the witness.

mod complete_halin;
mod cubic_halin;
pub mod figures;
mod necklace;
mod partition;
mod petersen;
mod squares;
mod tree;

pub use complete_halin::color_complete_halin;
pub use cubic_halin::color_cubic_halin;
pub use necklace::color_necklace_odd;
pub use partition::{compose_partition, PartitionSpec};
pub use petersen::{color_petersen_3n, color_petersen_3n_with, PetersenPartition, SpokeScheme};
pub use squares::{
    color_cycle_square, color_path_square, path_square_partition, star_color_cycle, LADDER_BOTTOM,
    LADDER_RUNG, LADDER_TOP,
};
pub use tree::tree_star_coloring;

use crate::error::{Error, Result};
use crate::exact::{self, Decision};
use crate::graph::{EdgeColoring, Graph};
use crate::verify::{self, PartialColoring};

/// Final gate shared by all colorers.
fn finish(g: &Graph, colors: Vec<u32>, case: &str) -> Result<EdgeColoring> {
    if let Some(e) = colors.iter().position(|&c| c == 0) {
        return Err(Error::construction(case, format!("edge {e} left uncolored")));
    }
    let c = EdgeColoring::new(colors);
    match verify::check_star(g, &c)? {
        None => Ok(c),
        Some(v) => Err(Error::construction_witness(case, v, c)),
    }
}

/// A star coloring with at most `k` colors found by the exact solver; used
/// for the small base cases the proofs settle by hand.
fn exact_table(g: &Graph, k: usize, case: &str) -> Result<EdgeColoring> {
    let s = exact::exists_star_k_coloring(g, k, exact::DEFAULT_BUDGET)?;
    match s.decision {
        Decision::Colorable(c) => finish(g, c.colors, case),
        Decision::Infeasible => Err(Error::construction(case, format!("no star {k}-coloring exists"))),
        Decision::BudgetExhausted => Err(Error::construction(case, "exact search ran out of budget")),
    }
}

/// Assigns a color the construction dictates, refusing it if it already
/// breaks the star condition on the colored part.
fn force(pc: &mut PartialColoring<'_>, e: usize, c: u32, case: &str) -> Result<()> {
    if !pc.admits(e, c) {
        let (a, b) = pc.graph().edge(e);
        return Err(Error::construction(
            case,
            format!("prescribed color {c} on edge {{{a}, {b}}} is not admissible"),
        ));
    }
    pc.set(e, c);
    Ok(())
}

/// Colors `e` with the smallest admissible color in `1..=limit`.
fn greedy(pc: &mut PartialColoring<'_>, e: usize, limit: u32, case: &str) -> Result<u32> {
    match pc.smallest_admissible(e, limit) {
        Some(c) => {
            pc.set(e, c);
            Ok(c)
        }
        None => {
            let (a, b) = pc.graph().edge(e);
            Err(Error::construction(
                case,
                format!("no color in 1..={limit} is admissible for edge {{{a}, {b}}}"),
            ))
        }
    }
}

fn edge(g: &Graph, u: usize, v: usize) -> usize {
    g.edge_between(u, v)
        .unwrap_or_else(|| panic!("generator invariant: edge {{{u}, {v}}} exists"))
}
