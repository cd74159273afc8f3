mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use starcolor_core::colorers::tree_star_coloring;
use starcolor_core::families::{self, Named};
use starcolor_core::verify::{self, PartialColoring};
use starcolor_core::{EdgeColoring, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.1f64..0.7).prop_map(|(n, seed, p)| {
        common::random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

fn colored_graph(max_n: usize, max_color: u32) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let m = g.size();
        (Just(g), prop::collection::vec(1..=max_color, m))
    })
}

proptest! {
    #[test]
    fn adjacency_lists_each_edge_twice(g in graph_strategy(12)) {
        let mut seen = vec![0; g.size()];
        for v in 0..g.order() {
            for &(w, e) in g.neighbors(v) {
                prop_assert_eq!(g.other_end(e, v), w);
                seen[e] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 2));
    }

    #[test]
    fn distances_match_floyd(g in graph_strategy(10)) {
        let d = common::floyd(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(g.distance(u, v).unwrap(), d[u][v]);
                prop_assert_eq!(g.distance(u, v).unwrap(), g.distance(v, u).unwrap());
                for w in 0..g.order() {
                    if let (Some(a), Some(b), Some(c)) = (d[u][v], d[v][w], d[u][w]) {
                        prop_assert!(c <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn powers_are_monotone(g in graph_strategy(10), k in 1usize..4) {
        let small = families::power_graph(&g, k).unwrap();
        let big = families::power_graph(&g, k + 1).unwrap();
        for &(u, v) in small.edges() {
            prop_assert!(big.has_edge(u, v));
        }
        let d = common::floyd(&g);
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let near = d[u][v].is_some_and(|x| x <= k);
                prop_assert_eq!(small.has_edge(u, v), near);
            }
        }
    }

    #[test]
    fn rainbow_colorings_are_star(g in graph_strategy(12)) {
        let c = EdgeColoring::new((1..=g.size() as u32).collect());
        prop_assert_eq!(verify::check_star(&g, &c).unwrap(), None);
    }

    #[test]
    fn palette_permutation_keeps_verdict((g, colors) in colored_graph(9, 4), shift in 1u32..4) {
        let permuted: Vec<u32> = colors.iter().map(|&c| (c - 1 + shift) % 4 + 1).collect();
        let a = verify::is_star(&g, &EdgeColoring::new(colors));
        let b = verify::is_star(&g, &EdgeColoring::new(permuted));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn witnesses_hold((g, colors) in colored_graph(9, 3)) {
        if let Some(v) = verify::check_star(&g, &EdgeColoring::new(colors.clone())).unwrap() {
            prop_assert!(v.holds(&g, &colors), "{}", v);
        }
    }

    #[test]
    fn admits_agrees_with_brute_force(
        (g, colors) in colored_graph(8, 4),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut order: Vec<usize> = (0..g.size()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut pc = PartialColoring::new(&g, 4);
        for e in order {
            let mut trial = pc.colors().to_vec();
            trial[e] = colors[e];
            let ok = common::brute_is_star(&g, &trial);
            prop_assert_eq!(pc.admits(e, colors[e]), ok, "edge {} color {}", e, colors[e]);
            if ok {
                pc.set(e, colors[e]);
            }
        }
    }

    #[test]
    fn tree_colorer_within_bound(n in 2usize..120, seed in any::<u64>()) {
        let t = families::random_tree(n, seed).unwrap();
        let c = tree_star_coloring(&t).unwrap();
        prop_assert!(verify::is_star(&t, &c));
        prop_assert!(c.color_count() <= 3 * t.max_degree() / 2);
    }
}

#[test]
fn path_squares_contain_fan3() {
    let fan = families::named(Named::Fan3).unwrap();
    for n in 5..=8 {
        assert!(common::contains_subgraph(&families::path_square(n).unwrap(), &fan), "n = {n}");
    }
    assert!(!common::contains_subgraph(&families::path_square(4).unwrap(), &fan));
    assert!(common::isomorphic(&fan, &families::path_square(5).unwrap()));
}

#[test]
fn four_leaf_cubic_halin_is_necklace_2() {
    let n2 = families::necklace(2).unwrap().into_graph();
    for seed in 0..10 {
        let hg = families::random_cubic_halin(4, seed).unwrap();
        assert!(common::isomorphic(hg.graph(), &n2), "seed {seed}");
    }
}
