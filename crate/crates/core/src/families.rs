//! Regular graphs with large isolation number, glued from gadgets.
//!
//! A gadget is a regular graph `F` with a special edge `xy` such that `F`,
//! `F - x`, `F - y` and `F - {x, y}` all have isolation number at least `b`.
//! Chaining `s` copies of `F - xy` in a ring (`x_i` joined to `y_{i+1}`)
//! gives a connected regular graph in which every isolating set spends at
//! least `b` vertices inside each copy: whichever of `x_i`, `y_i` it
//! contains, its restriction to the copy isolates one of the four graphs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exact::isolation_number;
use crate::graph::{structural_profile, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    pub special_edge: (usize, usize),
    /// Claimed isolation requirement per copy.
    pub b: usize,
}

impl Gadget {
    pub fn new(graph: Graph, special_edge: (usize, usize), b: usize) -> Result<Self> {
        let (x, y) = special_edge;
        if !graph.has_edge(x, y) {
            return Err(invalid(format!("({x}, {y}) is not an edge of the gadget")));
        }
        if structural_profile(&graph).regular_degree.is_none() {
            return Err(invalid("gadget graph is not regular"));
        }
        Ok(Gadget { graph, special_edge, b })
    }

    /// Order of the gadget graph.
    pub fn c(&self) -> usize {
        self.graph.n()
    }
}

/// Two copies of `K4` on `0..4` and `4..8` joined by the matching `i ~ i+4`;
/// special edge `(0, 4)`, `b = 2`.
pub fn prism_k4() -> Gadget {
    let mut edges = Vec::new();
    for base in [0, 4] {
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((base + u, base + v));
            }
        }
    }
    edges.extend((0..4).map(|i| (i, i + 4)));
    let graph = Graph::from_edge_list(8, &edges).expect("valid edges");
    Gadget::new(graph, (0, 4), 2).expect("prism is a 4-regular gadget")
}

/// Two 7-cycles `u_1..u_7` (indices `0..7`) and `v_1..v_7` (indices `7..14`)
/// with `u_i` joined to `v_{2i}` and `v_{2i+3}`, subscripts mod 7; special
/// edge `u_1 u_2 = (0, 1)`, `b = 3`.
pub fn metacirculant_14() -> Gadget {
    let u = |i: i64| (i - 1).rem_euclid(7) as usize;
    let v = |j: i64| 7 + (j - 1).rem_euclid(7) as usize;
    let mut edges = Vec::new();
    for i in 1..=7 {
        edges.push((u(i), u(i + 1)));
        edges.push((v(i), v(i + 1)));
        edges.push((u(i), v(2 * i)));
        edges.push((u(i), v(2 * i + 3)));
    }
    let graph = Graph::from_edge_list(14, &edges).expect("valid edges");
    Gadget::new(graph, (0, 1), 3).expect("metacirculant is a 4-regular gadget")
}

/// `s >= 2` copies of `F - xy` on consecutive index blocks of size `c`, plus
/// the edges `x_i y_{i+1 mod s}`.
pub fn chain(gadget: &Gadget, s: usize) -> Result<Graph> {
    if s < 2 {
        return Err(invalid(format!("chain needs at least 2 copies, got {s}")));
    }
    let c = gadget.c();
    let (x, y) = gadget.special_edge;
    let base = gadget.graph.without_edge(x, y);
    let mut edges = Vec::with_capacity(s * (base.edge_count() + 1));
    for copy in 0..s {
        let off = copy * c;
        edges.extend(base.edges().map(|(a, b)| (a + off, b + off)));
        edges.push((off + x, ((copy + 1) % s) * c + y));
    }
    Graph::from_edge_list(s * c, &edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCertificate {
    pub special_edge: (usize, usize),
    pub b: usize,
    pub iota_f: usize,
    pub iota_minus_x: usize,
    pub iota_minus_y: usize,
    pub iota_minus_xy: usize,
    /// All four values are at least `b`.
    pub valid: bool,
}

impl GadgetCertificate {
    pub fn min_value(&self) -> usize {
        self.iota_f.min(self.iota_minus_x).min(self.iota_minus_y).min(self.iota_minus_xy)
    }

    /// Certified lower bound `s·b` on the isolation number of `chain(gadget, s)`.
    pub fn chain_lower_bound(&self, s: usize) -> Option<usize> {
        self.valid.then_some(s * self.b)
    }
}

/// Exact isolation numbers of `F`, `F - x`, `F - y` and `F - {x, y}`.
pub fn certify_special_edge(gadget: &Gadget) -> Result<GadgetCertificate> {
    let (x, y) = gadget.special_edge;
    let f = &gadget.graph;
    let iota_f = isolation_number(f)?.iota;
    let iota_minus_x = isolation_number(&f.without_vertices(&[x])?.graph)?.iota;
    let iota_minus_y = isolation_number(&f.without_vertices(&[y])?.graph)?.iota;
    let iota_minus_xy = isolation_number(&f.without_vertices(&[x, y])?.graph)?.iota;
    let valid = [iota_f, iota_minus_x, iota_minus_y, iota_minus_xy].iter().all(|&v| v >= gadget.b);
    Ok(GadgetCertificate {
        special_edge: (x, y),
        b: gadget.b,
        iota_f,
        iota_minus_x,
        iota_minus_y,
        iota_minus_xy,
        valid,
    })
}

/// Every `(graph, edge)` of the corpus that certifies as a gadget with the
/// given degree, order and `b`, in corpus then edge order. Graphs of the
/// wrong order or degree are skipped, as are candidates the exact search
/// cannot settle.
pub fn search_gadgets(corpus: &[Graph], r: usize, b: usize, c: usize) -> Vec<Gadget> {
    let candidates: Vec<(usize, (usize, usize))> = corpus
        .iter()
        .enumerate()
        .filter(|(_, g)| g.n() == c && structural_profile(g).regular_degree == Some(r))
        .flat_map(|(i, g)| g.edges().map(move |e| (i, e)))
        .collect();
    candidates
        .par_iter()
        .filter_map(|&(i, edge)| {
            let gadget = Gadget::new(corpus[i].clone(), edge, b).ok()?;
            let cert = certify_special_edge(&gadget).ok()?;
            cert.valid.then_some(gadget)
        })
        .collect()
}
