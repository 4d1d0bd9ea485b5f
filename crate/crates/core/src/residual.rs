//! The isolation residual graph of a partial solution `D`.
//!
//! Vertices outside `N[D]` that still have a neighbor outside `N[D]` are
//! white; vertices of `N[D]` with a white neighbor are blue; everything else
//! is red. The residual edges are the edges with a white endpoint. Blue
//! vertices are weighted by their residual degree (capped at four), white
//! vertices by `omega`, red vertices by zero.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::rational::{int, pq, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Blue,
    Red,
}

/// Vertex weights `omega` (white) and `beta_1..beta_4` (blue by residual degree).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector {
    #[serde(with = "pq")]
    pub omega: Rational,
    #[serde(with = "pq")]
    pub beta1: Rational,
    #[serde(with = "pq")]
    pub beta2: Rational,
    #[serde(with = "pq")]
    pub beta3: Rational,
    #[serde(with = "pq")]
    pub beta4: Rational,
}

impl WeightVector {
    pub fn new(omega: Rational, beta: [Rational; 4]) -> Self {
        let [beta1, beta2, beta3, beta4] = beta;
        WeightVector { omega, beta1, beta2, beta3, beta4 }
    }

    /// `beta_i` for `i` in `1..=4`.
    pub fn beta(&self, i: usize) -> &Rational {
        match i {
            1 => &self.beta1,
            2 => &self.beta2,
            3 => &self.beta3,
            4 => &self.beta4,
            _ => panic!("beta index {i} outside 1..=4"),
        }
    }

    /// `eps_i = beta_i - beta_{i-1}` for `i` in `2..=4`.
    pub fn eps(&self, i: usize) -> Rational {
        assert!((2..=4).contains(&i), "eps index {i} outside 2..=4");
        self.beta(i) - self.beta(i - 1)
    }

    /// Weight of a blue vertex with the given residual degree (at least one).
    pub fn blue_weight(&self, residual_degree: usize) -> &Rational {
        self.beta(residual_degree.clamp(1, 4))
    }

    /// `(omega, beta1, ..., beta4)`.
    pub fn as_array(&self) -> [&Rational; 5] {
        [&self.omega, &self.beta1, &self.beta2, &self.beta3, &self.beta4]
    }

    /// Human-readable list of broken ordering conditions:
    /// `omega >= beta4 >= beta3 >= beta2 >= beta1 > 0` and
    /// `eps4 <= eps3 <= eps2 <= beta1`.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.omega < self.beta4 {
            out.push("omega < beta4".to_string());
        }
        for i in (2..=4).rev() {
            if self.beta(i) < self.beta(i - 1) {
                out.push(format!("beta{i} < beta{}", i - 1));
            }
        }
        if self.beta1 <= Rational::zero() {
            out.push("beta1 <= 0".to_string());
        }
        if self.eps(4) > self.eps(3) {
            out.push("eps4 > eps3".to_string());
        }
        if self.eps(3) > self.eps(2) {
            out.push("eps3 > eps2".to_string());
        }
        if self.eps(2) > self.beta1 {
            out.push("eps2 > beta1".to_string());
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.invariant_violations().is_empty()
    }
}

/// Coloring and residual degrees of `G` relative to a partial set `D`.
#[derive(Debug, Clone)]
pub struct ResidualState<'g> {
    graph: &'g Graph,
    d: Vec<usize>,
    color: Vec<Color>,
    residual_degree: Vec<usize>,
}

/// Recomputes the residual coloring of `G` for `D` from scratch.
pub fn compute_residual<'g>(g: &'g Graph, d: &[usize]) -> Result<ResidualState<'g>> {
    let n = g.n();
    if let Some(&bad) = d.iter().find(|&&v| v >= n) {
        return Err(invalid(format!("vertex {bad} of D outside 0..{n}")));
    }
    let mut d = d.to_vec();
    d.sort_unstable();
    d.dedup();

    let dominated = g.closed_neighborhood_mask(&d);
    let white: Vec<bool> =
        (0..n).map(|v| !dominated[v] && g.neighbors(v).iter().any(|&u| !dominated[u])).collect();
    let mut color = Vec::with_capacity(n);
    let mut residual_degree = Vec::with_capacity(n);
    for v in 0..n {
        let white_nbrs = g.neighbors(v).iter().filter(|&&u| white[u]).count();
        if white[v] {
            color.push(Color::White);
            residual_degree.push(g.degree(v));
        } else {
            // A non-white vertex with a white neighbor lies in N[D]: the
            // neighbor would otherwise make it white.
            color.push(if white_nbrs > 0 { Color::Blue } else { Color::Red });
            residual_degree.push(white_nbrs);
        }
    }
    Ok(ResidualState { graph: g, d, color, residual_degree })
}

impl<'g> ResidualState<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// `D`, sorted.
    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn color(&self, v: usize) -> Color {
        self.color[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    pub fn residual_degree(&self, v: usize) -> usize {
        self.residual_degree[v]
    }

    pub fn is_white(&self, v: usize) -> bool {
        self.color[v] == Color::White
    }

    pub fn vertices_with(&self, c: Color) -> Vec<usize> {
        (0..self.color.len()).filter(|&v| self.color[v] == c).collect()
    }

    pub fn white_count(&self) -> usize {
        self.color.iter().filter(|&&c| c == Color::White).count()
    }

    /// Number of white neighbors of `v`.
    pub fn white_neighbors(&self, v: usize) -> usize {
        self.graph.neighbors(v).iter().filter(|&&u| self.is_white(u)).count()
    }

    /// `B_i`: blue vertices of residual degree exactly `i` (`i < 4`) or at least four (`i = 4`).
    pub fn blue_class(&self, i: usize) -> Vec<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == Color::Blue && self.residual_degree[v].min(4) == i)
            .collect()
    }

    /// `[|B_1|, |B_2|, |B_3|, |B_4|]`.
    pub fn blue_census(&self) -> [usize; 4] {
        let mut census = [0; 4];
        for v in 0..self.color.len() {
            if self.color[v] == Color::Blue {
                census[self.residual_degree[v].min(4) - 1] += 1;
            }
        }
        census
    }

    /// Largest number of white neighbors of a white vertex (0 if none).
    pub fn delta_w(&self) -> usize {
        (0..self.color.len())
            .filter(|&v| self.is_white(v))
            .map(|v| self.white_neighbors(v))
            .max()
            .unwrap_or(0)
    }

    /// Largest residual degree of a blue vertex (0 if none).
    pub fn delta_b(&self) -> usize {
        (0..self.color.len())
            .filter(|&v| self.color[v] == Color::Blue)
            .map(|v| self.residual_degree[v])
            .max()
            .unwrap_or(0)
    }

    /// Components of the subgraph induced by the white vertices, each sorted,
    /// ordered by smallest member.
    pub fn white_components(&self) -> Vec<Vec<usize>> {
        let n = self.color.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if !self.is_white(start) || seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in self.graph.neighbors(v) {
                    if self.is_white(u) && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn report(&self) -> ResidualReport {
        ResidualReport {
            n: self.color.len(),
            d: self.d.clone(),
            colors: self.color.clone(),
            residual_degree: self.residual_degree.clone(),
            white: self.white_count(),
            blue_census: self.blue_census(),
            red: self.color.iter().filter(|&&c| c == Color::Red).count(),
            delta_w: self.delta_w(),
            delta_b: self.delta_b(),
        }
    }
}

/// Serializable snapshot of a residual state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub n: usize,
    pub d: Vec<usize>,
    pub colors: Vec<Color>,
    pub residual_degree: Vec<usize>,
    pub white: usize,
    /// `[|B_1|, |B_2|, |B_3|, |B_4|]`
    pub blue_census: [usize; 4],
    pub red: usize,
    pub delta_w: usize,
    pub delta_b: usize,
}

/// Sum of vertex weights of the residual graph.
pub fn total_weight(state: &ResidualState<'_>, wv: &WeightVector) -> Rational {
    let census = state.blue_census();
    let mut total = &wv.omega * int(state.white_count() as i64);
    for (i, &count) in census.iter().enumerate() {
        total += wv.beta(i + 1) * int(count as i64);
    }
    total
}

/// Weight decrease `w(G_D) - w(G_{D ∪ A})`, both sides recomputed from scratch.
pub fn xi(g: &Graph, d: &[usize], a: &[usize], wv: &WeightVector) -> Result<Rational> {
    if let Some(&bad) = a.iter().find(|&&v| v >= g.n()) {
        return Err(invalid(format!("vertex {bad} of A outside 0..{}", g.n())));
    }
    if let Some(&shared) = a.iter().find(|v| d.contains(v)) {
        return Err(invalid(format!("vertex {shared} is in both A and D")));
    }
    let before = compute_residual(g, d)?;
    let extended: Vec<usize> = d.iter().chain(a).copied().collect();
    let after = compute_residual(g, &extended)?;
    Ok(total_weight(&before, wv) - total_weight(&after, wv))
}

/// Whether `G - N[S]` has no edge. Every member of `S` must be a vertex of `G`.
pub fn is_isolating(g: &Graph, s: &[usize]) -> bool {
    let covered = g.closed_neighborhood_mask(s);
    g.edges().all(|(u, v)| covered[u] || covered[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};
    use crate::rational::ratio;

    fn reference_delta4() -> WeightVector {
        WeightVector::new(ratio(26, 82), [ratio(5, 82), ratio(10, 82), ratio(12, 82), ratio(14, 82)])
    }

    #[test]
    fn empty_d_is_all_white() {
        let g = cycle_graph(7);
        let s = compute_residual(&g, &[]).unwrap();
        assert!(s.colors().iter().all(|&c| c == Color::White));
        assert_eq!(total_weight(&s, &reference_delta4()), ratio(26 * 7, 82));
    }

    #[test]
    fn p3_center_makes_all_red() {
        let g = path_graph(3);
        let s = compute_residual(&g, &[1]).unwrap();
        assert_eq!(s.colors(), &[Color::Red; 3]);
        assert_eq!(total_weight(&s, &reference_delta4()), Rational::zero());
    }

    #[test]
    fn p4_with_endpoint() {
        let g = path_graph(4);
        let s = compute_residual(&g, &[0]).unwrap();
        assert_eq!(s.colors(), &[Color::Red, Color::Blue, Color::White, Color::White]);
        assert_eq!(s.residual_degree(1), 1);
        assert_eq!(s.residual_degree(2), 2);
        assert_eq!(s.blue_class(1), vec![1]);
        let wv = reference_delta4();
        assert_eq!(total_weight(&s, &wv), &wv.omega * int(2) + &wv.beta1);
    }

    #[test]
    fn out_of_range_d() {
        assert!(compute_residual(&path_graph(3), &[3]).is_err());
    }

    #[test]
    fn xi_examples() {
        let wv = reference_delta4();
        assert_eq!(xi(&path_graph(2), &[], &[0], &wv).unwrap(), ratio(52, 82));
        assert_eq!(xi(&cycle_graph(5), &[], &[0], &wv).unwrap(), ratio(68, 82));
        assert_eq!(xi(&Graph::empty(4), &[], &[2], &wv).unwrap(), Rational::zero());
        assert!(xi(&cycle_graph(5), &[1], &[1, 2], &wv).is_err());
    }

    #[test]
    fn isolating_examples() {
        let c5 = cycle_graph(5);
        // v2, v5 in one-based labels
        assert!(is_isolating(&c5, &[1, 4]));
        assert!(!is_isolating(&c5, &[0]));
        assert!(is_isolating(&path_graph(2), &[1]));
        assert!(is_isolating(&complete_graph(4), &[3]));
    }

    #[test]
    fn derived_accessors() {
        // star K_{1,5} with a pendant path: center 0, leaves 1..=5, 5-6-7
        let g = Graph::from_edge_list(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (5, 6), (6, 7)]).unwrap();
        let s = compute_residual(&g, &[]).unwrap();
        assert_eq!(s.delta_w(), 5);
        assert_eq!(s.delta_b(), 0);
        let s = compute_residual(&g, &[7]).unwrap();
        // N[7] = {6, 7}; 6 has white neighbor 5
        assert_eq!(s.color(6), Color::Blue);
        assert_eq!(s.delta_b(), 1);
        assert_eq!(s.white_components(), vec![vec![0, 1, 2, 3, 4, 5]]);
        assert_eq!(s.blue_census(), [1, 0, 0, 0]);
    }

    #[test]
    fn weight_invariants() {
        assert!(reference_delta4().is_valid());
        let bad = WeightVector::new(ratio(1, 10), [ratio(1, 5), ratio(1, 5), ratio(1, 5), ratio(1, 5)]);
        assert!(bad.invariant_violations().contains(&"omega < beta4".to_string()));
        let eps_bad = WeightVector::new(int(1), [ratio(1, 10), ratio(2, 10), ratio(3, 10), ratio(5, 10)]);
        assert_eq!(eps_bad.invariant_violations(), vec!["eps4 > eps3".to_string()]);
    }

    #[test]
    fn weights_json_uses_pq_strings() {
        let json = serde_json::to_string(&reference_delta4()).unwrap();
        assert!(json.contains("\"omega\":\"13/41\""));
        let back: WeightVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, reference_delta4());
    }
}
