//! Rule-driven greedy construction of isolating sets.
//!
//! Starting from `D = ∅`, each step picks the first applicable rule in the
//! order `R1 < R2 < ... < R7`, adds its set `A` to `D`, and records the
//! exact weight decrease `xi(A)`. When the weights are feasible for the
//! constraint system matching the graph class, every step has
//! `xi(A) >= |A|`, so the total weight `omega·n` pays for the whole set.
//!
//! | rule | applies when | `A` |
//! |------|--------------|-----|
//! | R1 | a white vertex has >= 4 white neighbors | one such vertex with the most white neighbors |
//! | R2 | a blue vertex has residual degree >= 5 | that vertex |
//! | R3 | a white vertex has exactly 3 white neighbors | that vertex |
//! | R4 | a blue vertex has residual degree 4 | that vertex |
//! | R5 | a white component is neither `K2` nor `C5` | a minimum isolating set of it |
//! | R6 | a blue vertex touches two white components | it, plus one far cycle vertex per `C5` |
//! | R7 | otherwise (first component is `K2` or `C5`) | one endpoint, or the two cycle neighbors of the least vertex |

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact::path_cycle_min_isolating;
use crate::graph::{structural_profile, Graph};
use crate::rational::{floor_to_u64, int, pq, Rational};
use crate::residual::{compute_residual, is_isolating, total_weight, xi, Color, ResidualState, WeightVector};

pub use crate::lpweights::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GreedyRule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
}

impl fmt::Display for GreedyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A rule together with the set it adds to `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub rule: GreedyRule,
    /// Sorted.
    pub set: Vec<usize>,
}

/// First applicable rule for the current residual state.
///
/// `variant` does not change which rule fires; it is accepted so callers can
/// thread the graph class through unchanged.
pub fn select_desirable(state: &ResidualState<'_>, _variant: Variant) -> Result<Selection> {
    let g = state.graph();
    let n = g.n();
    let whites: Vec<usize> = (0..n).filter(|&v| state.is_white(v)).collect();
    if whites.is_empty() {
        return Err(Error::Precondition("already isolating: no white vertex".into()));
    }
    let white_nbrs: Vec<usize> = (0..n).map(|v| state.white_neighbors(v)).collect();
    let blues: Vec<usize> = (0..n).filter(|&v| state.color(v) == Color::Blue).collect();
    let single = |rule, v| Ok(Selection { rule, set: vec![v] });

    let delta_w = whites.iter().map(|&v| white_nbrs[v]).max().unwrap_or(0);
    if delta_w >= 4 {
        let v = *whites.iter().find(|&&v| white_nbrs[v] == delta_w).unwrap();
        return single(GreedyRule::R1, v);
    }
    if let Some(&w) = blues.iter().find(|&&w| state.residual_degree(w) >= 5) {
        return single(GreedyRule::R2, w);
    }
    if delta_w == 3 {
        let v = *whites.iter().find(|&&v| white_nbrs[v] == 3).unwrap();
        debug_assert!(state.delta_b() <= 4);
        return single(GreedyRule::R3, v);
    }
    if let Some(&w) = blues.iter().find(|&&w| state.residual_degree(w) == 4) {
        return single(GreedyRule::R4, w);
    }
    debug_assert!(state.delta_w() <= 2 && state.delta_b() <= 3);

    let components = state.white_components();
    for comp in &components {
        if shape_of(g, comp) == ComponentShape::Other {
            let sub = g.induced(comp)?;
            let local = path_cycle_min_isolating(&sub.graph)?;
            debug_assert!(
                3 * local.len() <= comp.len(),
                "component of order {} needs {}",
                comp.len(),
                local.len()
            );
            return Ok(Selection { rule: GreedyRule::R5, set: sub.lift(&local) });
        }
    }

    let mut component_of = vec![usize::MAX; n];
    for (i, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = i;
        }
    }
    for &x in &blues {
        let mut touched: Vec<usize> =
            g.neighbors(x).iter().filter(|&&u| state.is_white(u)).map(|&u| component_of[u]).collect();
        touched.sort_unstable();
        touched.dedup();
        if touched.len() < 2 {
            continue;
        }
        let mut set = vec![x];
        for &ci in &touched[..2] {
            let comp = &components[ci];
            if shape_of(g, comp) == ComponentShape::C5 {
                let y = *g.neighbors(x).iter().find(|&&u| component_of[u] == ci).unwrap();
                set.push(far_cycle_vertex(g, comp, y));
            }
        }
        set.sort_unstable();
        return Ok(Selection { rule: GreedyRule::R6, set });
    }

    let comp = &components[0];
    let set = match shape_of(g, comp) {
        ComponentShape::K2 => vec![comp[0]],
        ComponentShape::C5 => {
            let v1 = comp[0];
            let mut nbrs: Vec<usize> = g.neighbors(v1).iter().copied().filter(|u| comp.contains(u)).collect();
            nbrs.sort_unstable();
            nbrs
        }
        ComponentShape::Other => unreachable!("R5 handles every other component"),
    };
    Ok(Selection { rule: GreedyRule::R7, set })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ComponentShape {
    K2,
    C5,
    Other,
}

/// Shape of a white component when every white vertex has at most two white neighbors.
fn shape_of(g: &Graph, comp: &[usize]) -> ComponentShape {
    match comp.len() {
        2 => ComponentShape::K2,
        5 => {
            let inner_degree =
                |v: usize| g.neighbors(v).iter().filter(|u| comp.binary_search(u).is_ok()).count();
            if comp.iter().all(|&v| inner_degree(v) == 2) {
                ComponentShape::C5
            } else {
                ComponentShape::Other
            }
        }
        _ => ComponentShape::Other,
    }
}

/// Least-index vertex of the 5-cycle `comp` at distance two from `y`.
fn far_cycle_vertex(g: &Graph, comp: &[usize], y: usize) -> usize {
    let on_cycle = |v: &usize| comp.binary_search(v).is_ok();
    let near: Vec<usize> = g.neighbors(y).iter().copied().filter(on_cycle).collect();
    *comp
        .iter()
        .filter(|&&v| v != y && !near.contains(&v))
        .min()
        .expect("a 5-cycle has two vertices at distance two")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: GreedyRule,
    /// Sorted vertex indices added in this step.
    pub set: Vec<usize>,
    #[serde(with = "pq")]
    pub xi: Rational,
    pub size: usize,
}

impl TraceStep {
    /// `xi(A) >= |A|`.
    pub fn is_desirable(&self) -> bool {
        self.xi >= int(self.size as i64)
    }
}

/// Audit trail of one greedy run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub n: usize,
    pub variant: Variant,
    pub steps: Vec<TraceStep>,
    /// Union of the step sets, sorted.
    pub final_set: Vec<usize>,
    #[serde(with = "pq")]
    pub initial_weight: Rational,
    #[serde(with = "pq")]
    pub final_weight: Rational,
}

impl GreedyTrace {
    pub fn all_desirable(&self) -> bool {
        self.steps.iter().all(TraceStep::is_desirable)
    }

    pub fn rule_counts(&self) -> Vec<(GreedyRule, usize)> {
        let mut counts: Vec<(GreedyRule, usize)> = Vec::new();
        for step in &self.steps {
            match counts.iter_mut().find(|(r, _)| *r == step.rule) {
                Some((_, c)) => *c += 1,
                None => counts.push((step.rule, 1)),
            }
        }
        counts.sort();
        counts
    }
}

#[derive(Debug, Clone)]
pub struct GreedyRun {
    pub set: Vec<usize>,
    pub trace: GreedyTrace,
}

impl GreedyRun {
    /// `⌊omega·n⌋`.
    pub fn bound(&self, wv: &WeightVector) -> u64 {
        floor_to_u64(&(&wv.omega * int(self.trace.n as i64)))
    }
}

/// Whether the weight certificate is meaningful for `g`: minimum degree at
/// least `delta` and membership in the variant's graph class.
pub fn certificate_applies(g: &Graph, delta: usize, variant: Variant) -> bool {
    let profile = structural_profile(g);
    profile.min_degree >= delta && variant.admits(&profile)
}

/// Runs the greedy to completion. The result is always isolating; the
/// per-step `xi(A) >= |A|` flags are only guaranteed under the certificate's
/// preconditions.
pub fn greedy_isolating_set(g: &Graph, wv: &WeightVector, variant: Variant) -> GreedyRun {
    let mut d: Vec<usize> = Vec::new();
    let mut steps = Vec::new();
    let initial = compute_residual(g, &d).expect("empty D is in range");
    let initial_weight = total_weight(&initial, wv);
    let mut state = initial;
    let mut weight = initial_weight.clone();
    while state.white_count() > 0 {
        let sel = select_desirable(&state, variant).expect("white vertices remain");
        d.extend_from_slice(&sel.set);
        let next = compute_residual(g, &d).expect("selected vertices are in range");
        assert!(next.white_count() < state.white_count(), "{} did not reduce the white vertices", sel.rule);
        let next_weight = total_weight(&next, wv);
        steps.push(TraceStep {
            rule: sel.rule,
            size: sel.set.len(),
            set: sel.set,
            xi: &weight - &next_weight,
        });
        state = next;
        weight = next_weight;
    }
    d.sort_unstable();
    debug_assert!(is_isolating(g, &d));
    GreedyRun {
        set: d.clone(),
        trace: GreedyTrace { n: g.n(), variant, steps, final_set: d, initial_weight, final_weight: weight },
    }
}

/// Isolating set from the rule engine alone (no weights).
pub fn greedy_set(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = Vec::new();
    loop {
        let state = compute_residual(g, &d).expect("in range");
        match select_desirable(&state, Variant::General) {
            Ok(sel) => d.extend(sel.set),
            Err(_) => break,
        }
    }
    d.sort_unstable();
    d
}

/// Outcome of replaying a trace against the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceVerification {
    /// Every recorded `xi` equals the recomputed one.
    pub xi_consistent: bool,
    /// Every recomputed `xi(A) >= |A|`.
    pub desirable: bool,
    /// The union of the steps isolates the graph.
    pub isolating: bool,
    /// Step sets are pairwise disjoint, sizes match and the union equals `final_set`.
    pub disjoint: bool,
    /// Recorded initial/final weights match `omega·n` and the final state,
    /// and the chain `initial - Σ xi = final` holds.
    pub telescopes: bool,
    pub mismatched_steps: Vec<usize>,
    pub undesirable_steps: Vec<usize>,
}

impl TraceVerification {
    pub fn is_valid(&self) -> bool {
        self.xi_consistent && self.desirable && self.isolating && self.disjoint && self.telescopes
    }
}

/// Replays `trace` step by step with from-scratch residual recomputation.
pub fn verify_trace(g: &Graph, trace: &GreedyTrace, wv: &WeightVector) -> Result<TraceVerification> {
    let n = g.n();
    if trace.n != n {
        return Err(invalid(format!("trace is for {} vertices, graph has {n}", trace.n)));
    }
    let referenced = trace.steps.iter().flat_map(|s| s.set.iter()).chain(&trace.final_set);
    if let Some(&bad) = referenced.clone().find(|&&v| v >= n) {
        return Err(invalid(format!("trace references vertex {bad} outside 0..{n}")));
    }

    let mut d: Vec<usize> = Vec::new();
    let mut disjoint = true;
    let mut mismatched_steps = Vec::new();
    let mut undesirable_steps = Vec::new();
    let mut recorded_sum = Rational::zero();
    for (i, step) in trace.steps.iter().enumerate() {
        recorded_sum += &step.xi;
        let mut set = step.set.clone();
        set.sort_unstable();
        set.dedup();
        if set.len() != step.set.len() || step.size != step.set.len() || set.iter().any(|v| d.contains(v)) {
            disjoint = false;
            mismatched_steps.push(i);
            set.retain(|v| !d.contains(v));
        }
        let actual = xi(g, &d, &set, wv)?;
        if actual != step.xi {
            mismatched_steps.push(i);
        }
        if actual < int(step.size as i64) {
            undesirable_steps.push(i);
        }
        d.extend(set);
    }
    mismatched_steps.dedup();
    d.sort_unstable();
    let mut final_set = trace.final_set.clone();
    final_set.sort_unstable();
    if final_set != d {
        disjoint = false;
    }

    let initial = total_weight(&compute_residual(g, &[])?, wv);
    let end = total_weight(&compute_residual(g, &d)?, wv);
    let telescopes = initial == trace.initial_weight
        && end == trace.final_weight
        && &trace.initial_weight - &recorded_sum == trace.final_weight;

    Ok(TraceVerification {
        xi_consistent: mismatched_steps.is_empty(),
        desirable: undesirable_steps.is_empty(),
        isolating: is_isolating(g, &d),
        disjoint,
        telescopes,
        mismatched_steps,
        undesirable_steps,
    })
}
