//! Exact star chromatic index by exhaustive backtracking.
//!
//! Edges are colored in BFS order from a maximum-degree vertex. A color
//! value may only be introduced after every smaller value has been used,
//! which removes palette-permutation symmetry. Each assignment is checked
//! incrementally with [`PartialColoring::admits`].

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};
use crate::verify::{self, PartialColoring};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Colorable(EdgeColoring),
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search {
    pub decision: Decision,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub k: usize,
    pub certificate: EdgeColoring,
    pub nodes_explored: u64,
    /// Largest palette size proven infeasible (`k - 1`; `0` when `k == 0`).
    pub infeasible_below: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    pub lower_hint: Option<usize>,
    pub upper_hint: Option<usize>,
    pub budget: u64,
    pub parallel: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            lower_hint: None,
            upper_hint: None,
            budget: DEFAULT_BUDGET,
            parallel: false,
        }
    }
}

/// Edges in the order the search colors them.
pub fn search_order(g: &Graph) -> Vec<usize> {
    let mut placed = vec![false; g.size()];
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.size());
    let mut by_degree: Vec<usize> = (0..g.order()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for start in by_degree {
        if seen[start] || g.degree(start) == 0 {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if !placed[e] {
                    placed[e] = true;
                    order.push(e);
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Solver<'a, 'g> {
    pc: PartialColoring<'g>,
    order: &'a [usize],
    k: u32,
    budget: u64,
    nodes: &'a AtomicU64,
    stop: Option<&'a AtomicBool>,
}

impl Solver<'_, '_> {
    fn dfs(&mut self, depth: usize, max_used: u32) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Step::OutOfBudget;
        }
        if self.stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
            return Step::Exhausted;
        }
        let e = self.order[depth];
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            if !self.pc.admits(e, c) {
                continue;
            }
            self.pc.set(e, c);
            match self.dfs(depth + 1, max_used.max(c)) {
                Step::Found => return Step::Found,
                Step::OutOfBudget => return Step::OutOfBudget,
                Step::Exhausted => {}
            }
            self.pc.unset(e);
        }
        Step::Exhausted
    }
}

/// Decides whether `g` has a star edge-coloring with colors `1..=k`,
/// exploring at most `budget` search nodes.
pub fn exists_star_k_coloring(g: &Graph, k: usize, budget: u64) -> Result<Search> {
    exists_with(g, k, budget, false)
}

/// As [`exists_star_k_coloring`], splitting the search over the colorings
/// of the first few edges. The decision matches sequential mode; the
/// certificate may differ.
pub fn exists_star_k_coloring_parallel(g: &Graph, k: usize, budget: u64) -> Result<Search> {
    exists_with(g, k, budget, true)
}

fn exists_with(g: &Graph, k: usize, budget: u64, parallel: bool) -> Result<Search> {
    if k == 0 {
        return Err(Error::BadParams("palette size must be >= 1".into()));
    }
    let k = u32::try_from(k).map_err(|_| Error::BadParams("palette too large".into()))?;
    let order = search_order(g);
    let nodes = AtomicU64::new(0);
    let decision = if parallel {
        parallel_search(g, &order, k, budget, &nodes)
    } else {
        let mut solver = Solver {
            pc: PartialColoring::new(g, k),
            order: &order,
            k,
            budget,
            nodes: &nodes,
            stop: None,
        };
        match solver.dfs(0, 0) {
            Step::Found => Decision::Colorable(solver.pc.to_coloring()),
            Step::Exhausted => Decision::Infeasible,
            Step::OutOfBudget => Decision::BudgetExhausted,
        }
    };
    if let Decision::Colorable(c) = &decision {
        assert!(
            verify::is_star(g, c),
            "search returned an invalid certificate"
        );
    }
    Ok(Search {
        decision,
        nodes: nodes.load(Ordering::Relaxed).min(budget),
    })
}

/// Partial assignments of the first edges, in search order.
fn prefixes(g: &Graph, order: &[usize], k: u32, want: usize) -> Vec<(Vec<u32>, u32)> {
    let mut frontier: Vec<(Vec<u32>, u32)> = vec![(Vec::new(), 0)];
    let mut depth = 0;
    while frontier.len() < want && depth < order.len() {
        let mut next = Vec::new();
        for (prefix, max_used) in &frontier {
            let mut pc = PartialColoring::new(g, k);
            for (i, &c) in prefix.iter().enumerate() {
                pc.set(order[i], c);
            }
            let e = order[depth];
            for c in 1..=k.min(max_used + 1) {
                if pc.admits(e, c) {
                    let mut p = prefix.clone();
                    p.push(c);
                    next.push((p, (*max_used).max(c)));
                }
            }
        }
        frontier = next;
        depth += 1;
        if frontier.is_empty() {
            break;
        }
    }
    frontier
}

fn parallel_search(g: &Graph, order: &[usize], k: u32, budget: u64, nodes: &AtomicU64) -> Decision {
    let want = 4 * rayon::current_num_threads().max(1);
    let starts = prefixes(g, order, k, want);
    if starts.is_empty() {
        return Decision::Infeasible;
    }
    let stop = AtomicBool::new(false);
    let outcomes: Vec<(Step, Option<EdgeColoring>)> = starts
        .par_iter()
        .map(|(prefix, max_used)| {
            let mut pc = PartialColoring::new(g, k);
            for (i, &c) in prefix.iter().enumerate() {
                pc.set(order[i], c);
            }
            let mut solver = Solver {
                pc,
                order,
                k,
                budget,
                nodes,
                stop: Some(&stop),
            };
            // Skip the already-assigned prefix.
            let step = solver.dfs(prefix.len(), *max_used);
            match step {
                Step::Found => {
                    stop.store(true, Ordering::Relaxed);
                    let c = solver.pc.to_coloring();
                    (Step::Found, Some(c))
                }
                other => (other, None),
            }
        })
        .collect();
    if let Some(c) = outcomes.iter().find_map(|(_, c)| c.clone()) {
        return Decision::Colorable(c);
    }
    if outcomes
        .iter()
        .any(|(s, _)| matches!(s, Step::OutOfBudget))
    {
        Decision::BudgetExhausted
    } else {
        Decision::Infeasible
    }
}

/// The star chromatic index of `g` with a certificate coloring.
///
/// Palette sizes are tried upwards from `max(Δ, lower_hint)`. A lower hint
/// above `Δ` is not trusted: if it is already feasible the search walks
/// down until a size is proven infeasible.
pub fn star_chromatic_index(g: &Graph, opts: ExactOptions) -> Result<ExactResult> {
    if g.size() == 0 {
        return Ok(ExactResult {
            k: 0,
            certificate: EdgeColoring::new(Vec::new()),
            nodes_explored: 0,
            infeasible_below: 0,
        });
    }
    let delta = g.max_degree();
    let lo = opts.lower_hint.unwrap_or(delta).max(delta);
    let hi = opts.upper_hint.unwrap_or(g.size());
    if hi < lo {
        return Err(Error::BadParams(format!(
            "upper hint {hi} is below lower bound {lo}"
        )));
    }
    let mut spent = 0u64;
    let query = |k: usize, spent: &mut u64| -> Result<Decision> {
        let remaining = opts.budget.saturating_sub(*spent);
        let s = exists_with(g, k, remaining, opts.parallel)?;
        *spent += s.nodes;
        Ok(s.decision)
    };
    let mut k = lo;
    let mut found = loop {
        match query(k, &mut spent)? {
            Decision::Colorable(c) => break (k, c),
            Decision::Infeasible if k == hi => return Err(Error::UpperBoundTooLow(hi)),
            Decision::Infeasible => k += 1,
            Decision::BudgetExhausted => {
                return Err(Error::BudgetExhausted { lower: k, upper: hi })
            }
        }
    };
    if found.0 == lo {
        let mut down = lo;
        while down > delta {
            match query(down - 1, &mut spent)? {
                Decision::Colorable(c) => {
                    found = (down - 1, c);
                    down -= 1;
                }
                Decision::Infeasible => break,
                Decision::BudgetExhausted => {
                    return Err(Error::BudgetExhausted {
                        lower: delta,
                        upper: found.0,
                    })
                }
            }
        }
    }
    let (k, certificate) = found;
    debug_assert_eq!(certificate.color_count(), k);
    Ok(ExactResult {
        k,
        certificate,
        nodes_explored: spent,
        infeasible_below: k - 1,
    })
}

/// [`star_chromatic_index`] with default options.
pub fn star_index(g: &Graph) -> Result<usize> {
    star_chromatic_index(g, ExactOptions::default()).map(|r| r.k)
}
