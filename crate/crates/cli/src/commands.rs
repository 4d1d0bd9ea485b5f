use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use isolation_core::exact::{exact_isolation_number_with_budget, SearchOutcome};
use isolation_core::families::{certify_special_edge, chain, metacirculant_14, prism_k4, Gadget};
use isolation_core::graph::{random_min_degree_graph, random_regular_graph, structural_profile, to_graph6};
use isolation_core::greedy::{certificate_applies, GreedyTrace};
use isolation_core::lpweights::{LpSolution, LpStatus};
use isolation_core::rational::to_pq;
use isolation_core::{
    build_constraints, check_feasible, compute_residual, greedy_isolating_set, solve_min_omega, verify_trace,
    Graph, Variant, WeightVector,
};
use serde_json::json;

use crate::io::{
    format_graph, read_graph, read_json, read_weights, write_json, write_text, CliResult, GraphFormat,
};
use crate::report::{Fingerprint, Outcome};

fn graph_fingerprint(g: &Graph) -> Fingerprint {
    Fingerprint::Graph6(to_graph6(g))
}

fn lp_witness(delta: usize, variant: Variant) -> CliResult<WeightVector> {
    let sol = solve_min_omega(&build_constraints(delta, variant)?);
    Ok(sol.witness.expect("every constraint system has a feasible point"))
}

fn write_weights(text: &mut String, wv: &WeightVector) {
    for (name, value) in ["omega", "beta1", "beta2", "beta3", "beta4"].iter().zip(wv.as_array()) {
        writeln!(text, "{name} = {value}").unwrap();
    }
}

pub struct GreedyArgs<'a> {
    pub input: &'a Path,
    pub delta: usize,
    pub variant: Variant,
    pub weights: Option<&'a Path>,
    pub trace_out: Option<&'a Path>,
}

pub fn greedy(args: GreedyArgs<'_>) -> CliResult<Outcome> {
    let g = read_graph(args.input)?;
    let wv = match args.weights {
        Some(path) => read_weights(path)?,
        None => lp_witness(args.delta, args.variant)?,
    };
    let run = greedy_isolating_set(&g, &wv, args.variant);
    let isolating = isolation_core::is_isolating(&g, &run.set);
    let bound = run.bound(&wv);
    let applies = certificate_applies(&g, args.delta, args.variant);
    let bound_met = run.set.len() as u64 <= bound;
    let ok = isolating && (!applies || bound_met);
    if let Some(path) = args.trace_out {
        write_json(path, &run.trace)?;
    }

    let profile = structural_profile(&g);
    let undesirable = run.trace.steps.iter().filter(|s| !s.is_desirable()).count();
    let mut text = String::new();
    writeln!(text, "n = {}", g.n()).unwrap();
    writeln!(text, "|S| = {}", run.set.len()).unwrap();
    writeln!(text, "S = {:?}", run.set).unwrap();
    writeln!(text, "isolating = {isolating}").unwrap();
    writeln!(text, "omega = {}", wv.omega).unwrap();
    writeln!(text, "bound = {bound}").unwrap();
    writeln!(text, "bound met = {bound_met}").unwrap();
    if applies {
        writeln!(text, "precondition = holds").unwrap();
    } else {
        writeln!(
            text,
            "precondition = does not hold (min degree {}, delta {}, variant {})",
            profile.min_degree, args.delta, args.variant
        )
        .unwrap();
    }
    let counts: Vec<String> = run.trace.rule_counts().iter().map(|(r, c)| format!("{r}x{c}")).collect();
    writeln!(text, "steps = {} ({})", run.trace.steps.len(), counts.join(" ")).unwrap();
    writeln!(text, "undesirable steps = {undesirable}").unwrap();

    let results = json!({
        "n": g.n(),
        "delta": args.delta,
        "variant": args.variant,
        "weights": wv,
        "set": run.set,
        "size": run.set.len(),
        "isolating": isolating,
        "bound": bound,
        "bound_met": bound_met,
        "precondition_holds": applies,
        "undesirable_steps": undesirable,
        "trace": run.trace,
    });
    Ok(Outcome { input: graph_fingerprint(&g), results, text, ok })
}

pub fn exact(input: &Path, cap: Option<usize>, budget: u64) -> CliResult<Outcome> {
    let g = read_graph(input)?;
    let outcome = exact_isolation_number_with_budget(&g, cap, budget)?;
    let mut text = String::new();
    match &outcome {
        SearchOutcome::Optimal(r) => {
            writeln!(text, "iota = {}", r.iota).unwrap();
            writeln!(text, "witness = {:?}", r.witness).unwrap();
            writeln!(text, "nodes = {}", r.explored).unwrap();
        }
        SearchOutcome::ExceedsCap { cap, explored } => {
            writeln!(text, "iota > {cap}").unwrap();
            writeln!(text, "nodes = {explored}").unwrap();
        }
    }
    Ok(Outcome {
        input: graph_fingerprint(&g),
        results: json!({ "n": g.n(), "outcome": outcome }),
        text,
        ok: true,
    })
}

pub fn lp_weights(delta: usize, variant: Variant, out: Option<&Path>) -> CliResult<Outcome> {
    let cs = build_constraints(delta, variant)?;
    let sol: LpSolution = solve_min_omega(&cs);
    if let Some(path) = out {
        write_json(path, &sol)?;
    }
    let mut text = String::new();
    writeln!(text, "delta = {delta}").unwrap();
    writeln!(text, "variant = {variant}").unwrap();
    writeln!(text, "rows = {}", cs.rows.len()).unwrap();
    match &sol.witness {
        Some(wv) => {
            write_weights(&mut text, wv);
            writeln!(text, "tight rows:").unwrap();
            for &i in &sol.tight_rows {
                let row = &cs.rows[i];
                writeln!(text, "  [{i}] {}: {row}", row.label).unwrap();
            }
        }
        None => writeln!(text, "status = infeasible").unwrap(),
    }
    Ok(Outcome {
        input: Fingerprint::Parameters(json!({ "delta": delta, "variant": variant })),
        ok: sol.status == LpStatus::Optimal,
        results: serde_json::to_value(&sol).expect("solutions serialize"),
        text,
    })
}

pub fn check_weights(delta: usize, variant: Variant, weights: &Path) -> CliResult<Outcome> {
    let cs = build_constraints(delta, variant)?;
    let wv = read_weights(weights)?;
    let feas = check_feasible(&cs, &wv);
    let ordering = wv.invariant_violations();
    let mut text = String::new();
    write_weights(&mut text, &wv);
    writeln!(text, "feasible = {}", feas.feasible).unwrap();
    writeln!(text, "beta1 positive = {}", feas.beta1_positive).unwrap();
    writeln!(text, "violated rows = {}", feas.violated.len()).unwrap();
    for v in &feas.violated {
        writeln!(text, "  [{}] {}: {} (slack {})", v.index, v.label, v.row, v.slack).unwrap();
    }
    for problem in &ordering {
        writeln!(text, "weight ordering: {problem}").unwrap();
    }
    Ok(Outcome {
        input: Fingerprint::Parameters(json!({ "delta": delta, "variant": variant, "weights": wv })),
        ok: feas.feasible,
        results: json!({ "feasibility": feas, "weight_ordering_violations": ordering }),
        text,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    PrismChain,
    MetaChain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RandomKind {
    MinDegree,
    Regular,
}

pub enum GenSpec {
    Family { family: Family, s: usize },
    Random { kind: RandomKind, n: usize, param: usize, seed: u64 },
}

pub fn gen(spec: GenSpec, out: Option<&Path>, format: GraphFormat) -> CliResult<Outcome> {
    let (g, input) = match spec {
        GenSpec::Family { family, s } => {
            let gadget = match family {
                Family::PrismChain => prism_k4(),
                Family::MetaChain => metacirculant_14(),
            };
            let name = match family {
                Family::PrismChain => "prism-chain",
                Family::MetaChain => "meta-chain",
            };
            let g = chain(&gadget, s)?;
            let fp = Fingerprint::Generator { kind: name.into(), params: json!({ "s": s }), seed: None };
            (g, fp)
        }
        GenSpec::Random { kind, n, param, seed } => {
            let (g, name) = match kind {
                RandomKind::MinDegree => (random_min_degree_graph(n, param, seed)?, "min-degree"),
                RandomKind::Regular => (random_regular_graph(n, param, seed)?, "regular"),
            };
            let fp = Fingerprint::Generator {
                kind: name.into(),
                params: json!({ "n": n, "param": param }),
                seed: Some(seed),
            };
            (g, fp)
        }
    };
    let encoded = format_graph(&g, format);
    let profile = structural_profile(&g);
    let mut text = String::new();
    match out {
        Some(path) => {
            write_text(path, &encoded)?;
            writeln!(text, "n = {}", g.n()).unwrap();
            writeln!(text, "m = {}", g.edge_count()).unwrap();
            writeln!(text, "min degree = {}", profile.min_degree).unwrap();
            writeln!(text, "max degree = {}", profile.max_degree).unwrap();
            writeln!(text, "wrote {}", path.display()).unwrap();
        }
        None => text.push_str(&encoded),
    }
    Ok(Outcome {
        input,
        results: json!({
            "n": g.n(),
            "m": g.edge_count(),
            "graph6": to_graph6(&g),
            "profile": profile,
            "out": out.map(PathBuf::from),
        }),
        text,
        ok: true,
    })
}

pub fn certify_edge(input: &Path, x: usize, y: usize, b: usize) -> CliResult<Outcome> {
    let g = read_graph(input)?;
    let fingerprint = graph_fingerprint(&g);
    let gadget = Gadget::new(g, (x, y), b)?;
    let cert = certify_special_edge(&gadget)?;
    let mut text = String::new();
    writeln!(text, "special edge = ({x}, {y})").unwrap();
    writeln!(text, "iota(F) = {}", cert.iota_f).unwrap();
    writeln!(text, "iota(F - x) = {}", cert.iota_minus_x).unwrap();
    writeln!(text, "iota(F - y) = {}", cert.iota_minus_y).unwrap();
    writeln!(text, "iota(F - x - y) = {}", cert.iota_minus_xy).unwrap();
    writeln!(text, "b = {b}").unwrap();
    writeln!(text, "valid = {}", cert.valid).unwrap();
    Ok(Outcome {
        input: fingerprint,
        ok: cert.valid,
        results: json!({ "order": gadget.c(), "certificate": cert }),
        text,
    })
}

pub fn verify_bound(trace_path: &Path, input: &Path, weights: &Path) -> CliResult<Outcome> {
    let g = read_graph(input)?;
    let trace: GreedyTrace = read_json(trace_path)?;
    let wv = read_weights(weights)?;
    let check = verify_trace(&g, &trace, &wv)?;
    let residual = compute_residual(&g, &trace.final_set)?.report();
    let mut text = String::new();
    writeln!(text, "steps = {}", trace.steps.len()).unwrap();
    writeln!(text, "|S| = {}", trace.final_set.len()).unwrap();
    writeln!(text, "xi consistent = {}", check.xi_consistent).unwrap();
    writeln!(text, "desirable = {}", check.desirable).unwrap();
    writeln!(text, "isolating = {}", check.isolating).unwrap();
    writeln!(text, "disjoint = {}", check.disjoint).unwrap();
    writeln!(text, "telescopes = {}", check.telescopes).unwrap();
    writeln!(text, "initial weight = {}", to_pq(&trace.initial_weight)).unwrap();
    writeln!(text, "final weight = {}", to_pq(&trace.final_weight)).unwrap();
    if !check.mismatched_steps.is_empty() {
        writeln!(text, "mismatched steps = {:?}", check.mismatched_steps).unwrap();
    }
    if !check.undesirable_steps.is_empty() {
        writeln!(text, "undesirable steps = {:?}", check.undesirable_steps).unwrap();
    }
    writeln!(text, "valid = {}", check.is_valid()).unwrap();
    Ok(Outcome {
        input: graph_fingerprint(&g),
        ok: check.is_valid(),
        results: json!({ "verification": check, "final_residual": residual }),
        text,
    })
}
