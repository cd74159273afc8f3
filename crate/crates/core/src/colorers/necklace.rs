use super::{exact_table, finish};
use crate::error::{Error, Result};
use crate::families::{self, NecklaceIds};
use crate::graph::EdgeColoring;

// letters a, b, c, d, f
const A: u32 = 1;
const B: u32 = 2;
const C: u32 = 3;
const D: u32 = 4;
const F: u32 = 5;

/// Star 5-coloring of the necklace `N_h` for odd `h`.
///
/// `h = 1, 3` come from the exact solver. For `h >= 5` every rung
/// `{i, i'}` and `{0, h+1}` is `a`, `{0, 1} = f`, `{0, 1'} = c`, the spine
/// reads `bcdf...` and the opposite path `dfbc...`; the two edges at `h+1`
/// depend on `h - 1 mod 4`.
pub fn color_necklace_odd(h: usize) -> Result<EdgeColoring> {
    if h == 0 {
        return Err(Error::BadParams("necklace needs h >= 1".into()));
    }
    if h.is_multiple_of(2) {
        return Err(Error::EvenH(h));
    }
    let g = families::necklace(h)?.into_graph();
    if h <= 3 {
        return exact_table(&g, 5, &format!("necklace h={h}"));
    }
    let id = NecklaceIds { h };
    let at = |u: usize, v: usize| super::edge(&g, u, v);
    let mut colors = vec![0; g.size()];
    colors[at(0, 1)] = F;
    colors[at(0, id.prime(1))] = C;
    for i in 1..=h {
        colors[at(i, id.prime(i))] = A;
    }
    colors[at(0, id.end())] = A;
    for i in 1..h {
        colors[at(i, i + 1)] = [B, C, D, F][(i - 1) % 4];
        colors[at(id.prime(i), id.prime(i + 1))] = [D, F, B, C][(i - 1) % 4];
    }
    let (spine_end, opposite_end) = if (h - 1).is_multiple_of(4) { (B, D) } else { (D, B) };
    colors[at(h, id.end())] = spine_end;
    colors[at(id.prime(h), id.end())] = opposite_end;
    finish(&g, colors, &format!("necklace h={h}"))
}
