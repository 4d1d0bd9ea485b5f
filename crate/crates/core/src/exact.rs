//! Exact isolation numbers.
//!
//! [`exact_isolation_number`] searches by iterative deepening: every
//! isolating set meets `N[u] ∪ N[v]` for each edge `uv`, so the search picks
//! the first edge not yet covered and branches on that neighborhood. The
//! greedy supplies an upper bound; failing to find a smaller set certifies
//! the greedy set optimal.
//!
//! [`path_cycle_min_isolating`] handles the special case of paths and cycles
//! in linear time.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::greedy::greedy_set;

/// Default node budget for [`exact_isolation_number`].
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub iota: usize,
    /// A minimum isolating set, sorted.
    pub witness: Vec<usize>,
    /// Search nodes visited.
    pub explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SearchOutcome {
    Optimal(ExactResult),
    /// No isolating set of size at most `cap` exists.
    ExceedsCap {
        cap: usize,
        explored: u64,
    },
}

impl SearchOutcome {
    pub fn optimal(&self) -> Option<&ExactResult> {
        match self {
            SearchOutcome::Optimal(r) => Some(r),
            SearchOutcome::ExceedsCap { .. } => None,
        }
    }

    /// Certified lower bound on the isolation number.
    pub fn lower_bound(&self) -> usize {
        match self {
            SearchOutcome::Optimal(r) => r.iota,
            SearchOutcome::ExceedsCap { cap, .. } => cap + 1,
        }
    }
}

/// Minimum isolating set of `g`. With `size_cap = Some(k)` the search stops
/// after size `k`, answering "no isolating set of size at most `k`" when
/// none exists; sizes are tried in increasing order, so any witness found is
/// minimum.
pub fn exact_isolation_number(g: &Graph, size_cap: Option<usize>) -> Result<SearchOutcome> {
    exact_isolation_number_with_budget(g, size_cap, DEFAULT_NODE_BUDGET)
}

pub fn exact_isolation_number_with_budget(
    g: &Graph,
    size_cap: Option<usize>,
    budget: u64,
) -> Result<SearchOutcome> {
    if g.n() > MAX_VERTICES {
        return Err(invalid(format!("exact search supports at most {MAX_VERTICES} vertices, got {}", g.n())));
    }
    let upper = greedy_set(g);
    let mut search = Search::new(g, budget);
    let limit = match size_cap {
        Some(cap) => cap.min(upper.len().saturating_sub(1)),
        None => upper.len().saturating_sub(1),
    };
    for k in 0..=limit {
        if upper.is_empty() {
            break;
        }
        if search.run(k)? {
            return Ok(SearchOutcome::Optimal(ExactResult {
                iota: k,
                witness: search.witness(),
                explored: search.explored,
            }));
        }
    }
    match size_cap {
        Some(cap) if cap < upper.len() => Ok(SearchOutcome::ExceedsCap { cap, explored: search.explored }),
        _ => Ok(SearchOutcome::Optimal(ExactResult {
            iota: upper.len(),
            witness: upper,
            explored: search.explored,
        })),
    }
}

/// Convenience wrapper returning the full optimum.
pub fn isolation_number(g: &Graph) -> Result<ExactResult> {
    match exact_isolation_number(g, None)? {
        SearchOutcome::Optimal(r) => Ok(r),
        SearchOutcome::ExceedsCap { .. } => unreachable!("uncapped search always reaches the optimum"),
    }
}

struct Search<'g> {
    graph: &'g Graph,
    closed: Vec<u128>,
    budget: u64,
    explored: u64,
    chosen: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph, budget: u64) -> Self {
        let closed = (0..graph.n())
            .map(|v| graph.neighbors(v).iter().fold(1u128 << v, |m, &u| m | (1u128 << u)))
            .collect();
        Search { graph, closed, budget, explored: 0, chosen: Vec::new() }
    }

    fn witness(&self) -> Vec<usize> {
        let mut w = self.chosen.clone();
        w.sort_unstable();
        w
    }

    fn run(&mut self, k: usize) -> Result<bool> {
        self.chosen.clear();
        self.descend(0, k)
    }

    fn uncovered_edge(&self, covered: u128) -> Option<(usize, usize)> {
        self.graph.edges().find(|&(u, v)| covered & (1u128 << u) == 0 && covered & (1u128 << v) == 0)
    }

    fn descend(&mut self, covered: u128, remaining: usize) -> Result<bool> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(Error::SearchBudget { budget: self.budget });
        }
        let Some((u, v)) = self.uncovered_edge(covered) else {
            return Ok(true);
        };
        if remaining == 0 {
            return Ok(false);
        }
        let mut candidates = self.closed[u] | self.closed[v];
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.chosen.push(w);
            if self.descend(covered | self.closed[w], remaining - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

/// Minimum isolating set of a path or cycle.
///
/// Along the vertex sequence, edge `i` (between positions `i` and `i+1`) is
/// covered exactly when a chosen vertex lies in positions `i-1..=i+2`, so
/// the problem is hitting a family of windows of length at most four. Paths
/// are solved by a left-to-right dynamic program whose state is the distance
/// back to the last chosen position. For cycles, each vertex of the window of
/// one edge is tried as a forced choice, which cuts the cycle into a path.
pub fn path_cycle_min_isolating(f: &Graph) -> Result<Vec<usize>> {
    let n = f.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    if f.max_degree() > 2 || !f.is_connected() {
        return Err(invalid("graph is not a path or a cycle"));
    }
    let m = f.edge_count();
    if m + 1 == n {
        let start = (0..n).find(|&v| f.degree(v) <= 1).expect("paths have an end");
        let order = walk(f, start);
        let windows: Vec<(usize, usize)> =
            (0..n - 1).map(|i| (i.saturating_sub(1), (i + 2).min(n - 1))).collect();
        let picks = min_window_hitting(n, &windows);
        let mut set: Vec<usize> = picks.into_iter().map(|p| order[p]).collect();
        set.sort_unstable();
        return Ok(set);
    }
    debug_assert_eq!(m, n);
    let order = walk(f, 0);
    let mut best: Option<Vec<usize>> = None;
    // window of the edge order[0]–order[1]: positions n-1, 0, 1, 2
    for forced in [n - 1, 0, 1, 2] {
        let forced = forced % n;
        // line position j (0-based) is cycle position forced + 1 + j
        let mut windows = Vec::new();
        for i in 0..n {
            let offsets: Vec<usize> = (0..4).map(|k| (i + n - 1 + k) % n).collect();
            let rel: Vec<usize> = offsets.iter().map(|&p| (p + n - forced) % n).collect();
            if rel.contains(&0) {
                continue;
            }
            let lo = *rel.iter().min().unwrap();
            let hi = *rel.iter().max().unwrap();
            windows.push((lo - 1, hi - 1));
        }
        let picks = min_window_hitting(n - 1, &windows);
        let mut set: Vec<usize> = std::iter::once(order[forced])
            .chain(picks.into_iter().map(|p| order[(forced + 1 + p) % n]))
            .collect();
        set.sort_unstable();
        if best.as_ref().is_none_or(|b| set.len() < b.len()) {
            best = Some(set);
        }
    }
    Ok(best.expect("four candidates tried"))
}

/// Vertex sequence of a path (from an end) or cycle (from `start` toward its
/// smaller neighbor).
fn walk(f: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = f.neighbors(cur).iter().copied().find(|&u| u != prev && u != start);
        match next {
            Some(u) if order.len() < f.n() => {
                order.push(u);
                prev = cur;
                cur = u;
            }
            _ => return order,
        }
    }
}

/// Least set of positions in `0..len` meeting every inclusive window
/// `(lo, hi)`; windows span at most four positions.
fn min_window_hitting(len: usize, windows: &[(usize, usize)]) -> Vec<usize> {
    const NONE: usize = 4;
    if len == 0 {
        return Vec::new();
    }
    let mut ending_at: Vec<Vec<usize>> = vec![Vec::new(); len];
    for &(lo, hi) in windows {
        debug_assert!(hi - lo < NONE);
        ending_at[hi].push(lo);
    }
    let inf = usize::MAX;
    // cost[p][gap]; gap = p - last chosen (NONE = none within reach)
    let mut cost = vec![[inf; NONE + 1]; len];
    let mut from = vec![[0usize; NONE + 1]; len];
    for p in 0..len {
        for gap_prev in 0..=NONE {
            let base = if p == 0 {
                if gap_prev == NONE {
                    0
                } else {
                    continue;
                }
            } else {
                cost[p - 1][gap_prev]
            };
            if base == inf {
                continue;
            }
            for take in [true, false] {
                let gap = if take { 0 } else { (gap_prev + 1).min(NONE) };
                let ok = ending_at[p].iter().all(|&lo| gap < NONE && p - gap >= lo);
                let c = base + usize::from(take);
                if ok && c < cost[p][gap] {
                    cost[p][gap] = c;
                    from[p][gap] = gap_prev;
                }
            }
        }
    }
    let (mut gap, _) =
        cost[len - 1].iter().enumerate().min_by_key(|&(_, &c)| c).expect("NONE state always reachable");
    let mut picks = Vec::new();
    for p in (0..len).rev() {
        if gap == 0 {
            picks.push(p);
        }
        gap = from[p][gap];
    }
    picks.reverse();
    picks
}
