use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Degree, connectivity and cycle facts used to decide which bound applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_connected: bool,
    pub triangle_free: bool,
    /// `None` for forests.
    pub girth: Option<usize>,
    /// `Some(r)` iff every vertex has degree `r`.
    pub regular_degree: Option<usize>,
}

pub fn structural_profile(g: &Graph) -> StructuralProfile {
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    let girth = girth(g);
    StructuralProfile {
        min_degree,
        max_degree,
        is_connected: g.is_connected(),
        triangle_free: girth.is_none_or(|c| c >= 4),
        girth,
        regular_degree: (min_degree == max_degree).then_some(min_degree),
    }
}

/// Shortest cycle length. A BFS from every root sees each shortest cycle
/// through that root as a non-tree edge closing two equal-or-adjacent layers.
fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[v] + 1 >= b) {
                break;
            }
            for &u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn c5_profile() {
        let p = structural_profile(&cycle_graph(5));
        assert_eq!(
            p,
            StructuralProfile {
                min_degree: 2,
                max_degree: 2,
                is_connected: true,
                triangle_free: true,
                girth: Some(5),
                regular_degree: Some(2),
            }
        );
    }

    #[test]
    fn cycle_girths() {
        for n in 3..=12 {
            assert_eq!(structural_profile(&cycle_graph(n)).girth, Some(n), "C{n}");
        }
    }

    #[test]
    fn forests_have_no_girth() {
        let p = structural_profile(&path_graph(6));
        assert_eq!(p.girth, None);
        assert!(p.triangle_free);
        assert_eq!(p.regular_degree, None);
    }

    #[test]
    fn complete_graph_profile() {
        let p = structural_profile(&complete_graph(4));
        assert_eq!(p.girth, Some(3));
        assert!(!p.triangle_free);
        assert_eq!(p.regular_degree, Some(3));
    }

    #[test]
    fn petersen_girth_five() {
        let g = Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(structural_profile(&g).girth, Some(5));
    }

    #[test]
    fn disconnected_profile() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 4)]).unwrap();
        let p = structural_profile(&g);
        assert!(!p.is_connected);
        assert_eq!(p.girth, Some(3));
    }
}
