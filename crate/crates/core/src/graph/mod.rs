//! Simple undirected graphs over dense vertex indices `0..n`.

mod edgelist;
mod generate;
mod graph6;
mod profile;

pub use edgelist::{parse_edge_list, to_edge_list};
pub use generate::{
    complete_graph, cycle_graph, path_graph, random_bipartite_min_degree, random_gnp,
    random_min_degree_graph, random_regular_graph,
};
pub use graph6::{parse_graph6, to_graph6};
pub use profile::{structural_profile, StructuralProfile};

use crate::error::{invalid, Result};

/// Immutable simple graph. Neighbor lists are sorted and symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// An induced subgraph together with the parent index of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `parent[i]` is the index in the parent graph of subgraph vertex `i`.
    pub parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn lift(&self, vertices: &[usize]) -> Vec<usize> {
        let mut lifted: Vec<usize> = vertices.iter().map(|&v| self.parent[v]).collect();
        lifted.sort_unstable();
        lifted
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list; duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `G[S]`. Subgraph vertex `i` corresponds to the `i`-th smallest member of `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut parent: Vec<usize> = vertices.to_vec();
        parent.sort_unstable();
        parent.dedup();
        if let Some(&bad) = parent.iter().find(|&&v| v >= self.n()) {
            return Err(invalid(format!("vertex {bad} outside 0..{}", self.n())));
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in parent.iter().enumerate() {
            index[v] = i;
        }
        let adj = parent
            .iter()
            .map(|&v| {
                self.adj[v].iter().filter_map(|&u| (index[u] != usize::MAX).then_some(index[u])).collect()
            })
            .collect();
        Ok(InducedSubgraph { graph: Graph { adj }, parent })
    }

    /// `G - X`: the subgraph induced by the vertices outside `removed`.
    pub fn without_vertices(&self, removed: &[usize]) -> Result<InducedSubgraph> {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            if v >= self.n() {
                return Err(invalid(format!("vertex {v} outside 0..{}", self.n())));
            }
            keep[v] = false;
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        self.induced(&kept)
    }

    /// Copy of the graph with edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        if u < adj.len() && v < adj.len() {
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        Graph { adj }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
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

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// `N[S]` as a membership mask.
    pub fn closed_neighborhood_mask(&self, set: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for &v in set {
            mask[v] = true;
            for &u in &self.adj[v] {
                mask[u] = true;
            }
        }
        mask
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_from_edge_list() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn c5_from_edge_list() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn bad_edges_are_rejected() {
        let err = Graph::from_edge_list(3, &[(0, 3)]).unwrap_err();
        assert!(err.to_string().contains("(0, 3)"));
        assert!(Graph::from_edge_list(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn induced_maps_back_to_parent() {
        let g = cycle_graph(6);
        let sub = g.induced(&[4, 0, 5]).unwrap();
        assert_eq!(sub.parent, vec![0, 4, 5]);
        // 0-5 and 4-5 survive
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert_eq!(sub.lift(&[2, 0]), vec![0, 5]);
        let rest = g.without_vertices(&[0]).unwrap();
        assert_eq!(rest.graph.n(), 5);
        assert_eq!(rest.graph.edge_count(), 4);
    }

    #[test]
    fn components_sorted_by_least_vertex() {
        let g = Graph::from_edge_list(6, &[(4, 5), (0, 3), (1, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 3], vec![2], vec![4, 5]]);
        assert!(!g.is_connected());
    }
}
