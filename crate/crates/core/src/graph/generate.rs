//! Deterministic named graphs and seeded random test instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{invalid, Error, Result};

const RESTARTS: usize = 10_000;
const PAIR_TRIES: usize = 200;

pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// `P_n`: vertices `0..n` in order.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// `C_n` for `n >= 3`; smaller `n` degenerate to `P_n`.
pub fn cycle_graph(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// Random graph with minimum degree at least `delta`: a `delta`-regular-ish
/// random pairing (loops and repeats dropped), then random edges from each
/// deficient vertex until the bound holds.
pub fn random_min_degree_graph(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if delta >= n && !(n == 0 && delta == 0) {
        return Err(invalid(format!("minimum degree {delta} impossible on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![Vec::<usize>::new(); n];
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, delta)).collect();
    stubs.shuffle(&mut rng);
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u != v && !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for v in 0..n {
        while adj[v].len() < delta {
            let candidates: Vec<usize> = (0..n).filter(|&u| u != v && !adj[v].contains(&u)).collect();
            let u = *candidates.choose(&mut rng).expect("delta < n leaves a non-neighbor");
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    Ok(from_adjacency(adj))
}

/// Uniform-ish random `r`-regular graph: the pairing model with rejection of
/// loops and repeated pairs, restarting when the remaining stubs cannot be
/// paired.
pub fn random_regular_graph(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if (n * r) % 2 != 0 {
        return Err(invalid(format!("n·r = {n}·{r} is odd; no {r}-regular graph exists")));
    }
    if r >= n && !(n == 0 && r == 0) {
        return Err(invalid(format!("degree {r} impossible on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'restart: for _ in 0..RESTARTS {
        let mut adj = vec![Vec::<usize>::new(); n];
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        while !stubs.is_empty() {
            let mut paired = false;
            for _ in 0..PAIR_TRIES {
                let i = rng.gen_range(0..stubs.len());
                let j = rng.gen_range(0..stubs.len());
                let (u, v) = (stubs[i], stubs[j]);
                if u == v || adj[u].contains(&v) {
                    continue;
                }
                adj[u].push(v);
                adj[v].push(u);
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                paired = true;
                break;
            }
            if !paired {
                continue 'restart;
            }
        }
        return Ok(from_adjacency(adj));
    }
    Err(Error::Generation(format!("no simple {r}-regular pairing on {n} vertices after {RESTARTS} restarts")))
}

/// Random bipartite graph with parts `0..left` and `left..left+right` and
/// minimum degree at least `delta`. Bipartite graphs are triangle-free.
pub fn random_bipartite_min_degree(left: usize, right: usize, delta: usize, seed: u64) -> Result<Graph> {
    if delta > left.min(right) {
        return Err(invalid(format!(
            "minimum degree {delta} impossible with parts of size {left} and {right}"
        )));
    }
    let n = left + right;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![Vec::<usize>::new(); n];
    for v in 0..n {
        let other = if v < left { left..n } else { 0..left };
        while adj[v].len() < delta {
            let candidates: Vec<usize> = other.clone().filter(|u| !adj[v].contains(u)).collect();
            let u = *candidates.choose(&mut rng).expect("delta bounded by part size");
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    Ok(from_adjacency(adj))
}

fn from_adjacency(adj: Vec<Vec<usize>>) -> Graph {
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    Graph::from_edge_list(adj.len(), &edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::structural_profile;

    #[test]
    fn min_degree_forced_complete() {
        for seed in 0..5 {
            assert_eq!(random_min_degree_graph(5, 4, seed).unwrap(), complete_graph(5));
        }
    }

    #[test]
    fn min_degree_deterministic() {
        let a = random_min_degree_graph(50, 4, 17).unwrap();
        let b = random_min_degree_graph(50, 4, 17).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_min_degree_graph(50, 4, 18).unwrap());
    }

    #[test]
    fn min_degree_postcondition_on_many_seeds() {
        for seed in 0..100 {
            let g = random_min_degree_graph(50, 4, seed).unwrap();
            assert!(structural_profile(&g).min_degree >= 4);
        }
    }

    #[test]
    fn regular_k4() {
        assert_eq!(random_regular_graph(4, 3, 9).unwrap(), complete_graph(4));
    }

    #[test]
    fn regular_postcondition_on_many_seeds() {
        for seed in 0..100 {
            let g = random_regular_graph(14, 4, seed).unwrap();
            assert_eq!(structural_profile(&g).regular_degree, Some(4));
        }
    }

    #[test]
    fn regular_parity_error() {
        assert!(matches!(random_regular_graph(5, 3, 0), Err(Error::InvalidInput(_))));
        assert!(random_regular_graph(4, 4, 0).is_err());
    }

    #[test]
    fn bipartite_is_triangle_free() {
        for seed in 0..100 {
            let g = random_bipartite_min_degree(15, 17, 4, seed).unwrap();
            let p = structural_profile(&g);
            assert!(p.min_degree >= 4 && p.triangle_free);
            assert!(g.edges().all(|(u, v)| u < 15 && v >= 15));
        }
    }

    #[test]
    fn named_graphs() {
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(path_graph(1).edge_count(), 0);
        assert_eq!(cycle_graph(3), complete_graph(3));
    }
}
