//! Isolating sets and certified upper bounds on the isolation number.
//!
//! A set `S` of vertices is *isolating* when deleting `S` together with its
//! neighbors leaves no edge; the isolation number is the least size of such
//! a set. The crate provides:
//!
//! * [`graph`]: the graph type, graph6 and edge-list I/O, generators;
//! * [`residual`]: the white/blue/red residual coloring for a partial set and
//!   its exact weight;
//! * [`greedy`]: the rule-driven greedy whose every step is certified to pay
//!   for itself in weight, giving `|S| <= omega * n`;
//! * [`exact`]: exact isolation numbers by branch and bound, and a linear
//!   dynamic program for paths and cycles;
//! * [`lpweights`]: the linear systems the weights must satisfy, solved
//!   exactly over the rationals;
//! * [`families`]: regular lower-bound constructions glued from gadgets.

pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod greedy;
pub mod lpweights;
pub mod rational;
pub mod residual;

pub use error::{Error, Result};
pub use exact::{exact_isolation_number, path_cycle_min_isolating, ExactResult, SearchOutcome};
pub use families::{Gadget, GadgetCertificate};
pub use graph::{Graph, InducedSubgraph, StructuralProfile};
pub use greedy::{greedy_isolating_set, verify_trace, GreedyRule, GreedyTrace, TraceVerification, Variant};
pub use lpweights::{build_constraints, check_feasible, solve_min_omega, ConstraintSystem, LpSolution};
pub use rational::Rational;
pub use residual::{compute_residual, is_isolating, total_weight, xi, Color, ResidualState, WeightVector};
