//! Fixed benchmark inputs, shared so every run measures the same graphs.

use isolation_core::families::{chain, metacirculant_14, prism_k4};
use isolation_core::graph::random_min_degree_graph;
use isolation_core::Graph;

pub const GREEDY_SIZES: [usize; 3] = [100, 400, 1600];

/// Connected graph of minimum degree 4 on `n` vertices, from a fixed seed.
pub fn min_degree_four(n: usize) -> Graph {
    (0..)
        .map(|seed| random_min_degree_graph(n, 4, seed).expect("n > 4"))
        .find(Graph::is_connected)
        .expect("some seed gives a connected graph")
}

pub fn prism_chain(s: usize) -> Graph {
    chain(&prism_k4(), s).expect("s >= 2")
}

pub fn meta_chain(s: usize) -> Graph {
    chain(&metacirculant_14(), s).expect("s >= 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_have_expected_shape() {
        for n in GREEDY_SIZES {
            let g = min_degree_four(n);
            assert_eq!(g.n(), n);
            assert!(g.min_degree() >= 4 && g.is_connected());
        }
        assert_eq!(prism_chain(3).n(), 24);
        assert_eq!(meta_chain(2).n(), 28);
    }
}
