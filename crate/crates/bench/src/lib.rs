//! Shared instances for the criterion benches.

use starcolor_core::families::{self, CompleteHalinSpec, Named};
use starcolor_core::{EdgeColoring, Graph, HalinGraph};

/// Small graphs whose exact star chromatic index takes real search.
pub fn exact_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("k4", families::named(Named::K4).unwrap()),
        ("net", families::named(Named::Net).unwrap()),
        ("fan3", families::named(Named::Fan3).unwrap()),
        ("necklace-2", families::necklace(2).unwrap().into_graph()),
        ("k5", families::named(Named::K5).unwrap()),
        ("petersen-6-2", families::petersen_3n(2).unwrap()),
    ]
}

/// Large graphs with a valid star coloring, for the checker.
pub fn check_instances() -> Vec<(String, Graph, EdgeColoring)> {
    let mut out = Vec::new();
    for n in [1_000, 10_000] {
        let g = families::cycle_square(n).unwrap();
        let c = starcolor_core::colorers::color_cycle_square(n).unwrap();
        out.push((format!("cycle-square-{n}"), g, c));
    }
    for n in [300, 3_000] {
        let g = families::petersen_3n(n).unwrap();
        let c = starcolor_core::colorers::color_petersen_3n(n).unwrap();
        out.push((format!("petersen-3n-{n}"), g, c));
    }
    out
}

pub fn cubic_halin(leaves: usize) -> HalinGraph {
    families::random_cubic_halin(leaves, 7).unwrap()
}

pub fn complete_halin() -> HalinGraph {
    families::complete_halin(&CompleteHalinSpec::uniform(&[6, 5, 5])).unwrap()
}
