//! Linear systems over `(omega, beta1, beta2, beta3, beta4)` whose feasible
//! points make every greedy rule pay for itself, and an exact solver for the
//! least feasible `omega`.
//!
//! Each row reads `c0·omega + c1·beta1 + ... + c4·beta4 >= rhs`. Terms of the
//! form `k·min(a_1, ..., a_m)` with `k > 0` are expanded into one row per
//! argument. The solver enumerates basic points (five linearly independent
//! tight rows), keeps the feasible ones and returns the one with least
//! `omega`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::StructuralProfile;
use crate::greedy::GreedyRule;
use crate::rational::{int, pq, ratio, to_pq, Rational};
use crate::residual::WeightVector;

const VARS: usize = 5;
const VAR_NAMES: [&str; VARS] = ["omega", "beta1", "beta2", "beta3", "beta4"];

/// Graph class a bound is claimed for. The rule engine is shared; only the
/// final-step accounting (and hence the constraint system) differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    General,
    TriangleFree,
    Girth5,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::General, Variant::TriangleFree, Variant::Girth5];

    pub fn name(self) -> &'static str {
        match self {
            Variant::General => "general",
            Variant::TriangleFree => "triangle-free",
            Variant::Girth5 => "girth5",
        }
    }

    /// Whether a graph with this profile belongs to the class (degree aside).
    pub fn admits(self, profile: &StructuralProfile) -> bool {
        match self {
            Variant::General => true,
            Variant::TriangleFree => profile.triangle_free,
            Variant::Girth5 => profile.girth.is_none_or(|g| g >= 5),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Variant::General),
            "triangle-free" | "trianglefree" => Ok(Variant::TriangleFree),
            "girth5" | "girth-5" => Ok(Variant::Girth5),
            other => {
                Err(invalid(format!("unknown variant {other:?} (expected general, triangle-free or girth5)")))
            }
        }
    }
}

/// Where a row comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowOrigin {
    /// Lower bound on the weight decrease of a greedy rule.
    Rule(GreedyRule),
    /// `omega >= beta4 >= ... >= beta1 >= 0`.
    BetaChain,
    /// `eps4 <= eps3 <= eps2 <= beta1`.
    EpsilonChain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearRow {
    #[serde(with = "crate::rational::pq_seq")]
    pub coeffs: Vec<Rational>,
    #[serde(with = "pq")]
    pub rhs: Rational,
    pub origin: RowOrigin,
    pub label: String,
}

impl LinearRow {
    fn new(coeffs: [Rational; VARS], rhs: Rational, origin: RowOrigin, label: impl Into<String>) -> Self {
        LinearRow { coeffs: coeffs.to_vec(), rhs, origin, label: label.into() }
    }

    pub fn lhs(&self, point: [&Rational; VARS]) -> Rational {
        self.coeffs.iter().zip(point).map(|(c, x)| c * x).sum()
    }

    /// `lhs - rhs`; the row holds iff this is non-negative.
    pub fn slack(&self, wv: &WeightVector) -> Rational {
        self.lhs(wv.as_array()) - &self.rhs
    }
}

impl fmt::Display for LinearRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(VAR_NAMES) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, false) => {}
                (true, true) => f.write_str("-")?,
                (false, _) => write!(f, " {sign} ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            f.write_str(name)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " >= {}", self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub delta: usize,
    pub variant: Variant,
    pub rows: Vec<LinearRow>,
}

fn coeffs(c: [i64; VARS]) -> [Rational; VARS] {
    c.map(int)
}

/// Builds the expanded row list for minimum degree `delta >= 3`.
pub fn build_constraints(delta: usize, variant: Variant) -> Result<ConstraintSystem> {
    if delta < 3 {
        return Err(invalid(format!("minimum degree {delta} below 3 has no weight system")));
    }
    let d = delta as i64;
    let k = 4 * (d - 3);
    let one = || int(1);
    let rule = RowOrigin::Rule;
    let mut rows = vec![
        // omega + 5(omega - beta4) >= 1
        LinearRow::new(
            coeffs([6, 0, 0, 0, -5]),
            one(),
            rule(GreedyRule::R1),
            "white vertex with >= 5 white neighbors",
        ),
        // omega + 4(omega - beta3) >= 1
        LinearRow::new(
            coeffs([5, 0, 0, -4, 0]),
            one(),
            rule(GreedyRule::R1),
            "white vertex with 4 white neighbors",
        ),
        // beta4 + 5(omega - beta3) >= 1
        LinearRow::new(
            coeffs([5, 0, 0, -5, 1]),
            one(),
            rule(GreedyRule::R2),
            "blue vertex of residual degree >= 5",
        ),
        // omega + 3(omega - beta2) + 4(delta-3) eps4 >= 1
        LinearRow::new(
            coeffs([4, 0, -3, -k, k]),
            one(),
            rule(GreedyRule::R3),
            "white vertex with 3 white neighbors",
        ),
        // beta4 + 4(omega - beta2) + 4(delta-3) eps4 >= 1
        LinearRow::new(
            coeffs([4, 0, -4, -k, 1 + k]),
            one(),
            rule(GreedyRule::R4),
            "blue vertex of residual degree 4",
        ),
        // omega + (delta-2) eps3 >= 1/3
        LinearRow::new(
            coeffs([1, 0, -(d - 2), d - 2, 0]),
            ratio(1, 3),
            rule(GreedyRule::R5),
            "white path or cycle component",
        ),
        LinearRow::new(
            coeffs([4, 0, 1, 0, 0]),
            one(),
            rule(GreedyRule::R6),
            "blue vertex joining two K2 components",
        ),
        LinearRow::new(
            coeffs([7, 0, 1, 0, 0]),
            int(2),
            rule(GreedyRule::R6),
            "blue vertex joining a K2 and a C5 component",
        ),
        LinearRow::new(
            coeffs([10, 0, 1, 0, 0]),
            int(3),
            rule(GreedyRule::R6),
            "blue vertex joining two C5 components",
        ),
    ];

    let r7 = rule(GreedyRule::R7);
    // 2 omega + 2(delta-1) beta1 >= 1 is shared by every variant.
    rows.push(LinearRow::new(
        coeffs([2, 2 * (d - 1), 0, 0, 0]),
        one(),
        r7,
        "K2 component, blue neighbors in B1",
    ));
    match variant {
        Variant::General => {
            // 2 omega + 2(delta-1) beta2/2 >= 1
            rows.push(LinearRow::new(
                coeffs([2, 0, d - 1, 0, 0]),
                one(),
                r7,
                "K2 component, blue neighbors in B2",
            ));
            rows.push(LinearRow::new(
                coeffs([5, 5 * (d - 2), 0, 0, 0]),
                int(2),
                r7,
                "C5 component, blue neighbors in B1",
            ));
            rows.push(LinearRow::new(
                [int(5), int(0), ratio(5 * (d - 2), 2), int(0), int(0)],
                int(2),
                r7,
                "C5 component, blue neighbors in B2",
            ));
            rows.push(LinearRow::new(
                [int(5), int(0), int(0), ratio(5 * (d - 2), 3), int(0)],
                int(2),
                r7,
                "C5 component, blue neighbors in B3",
            ));
        }
        Variant::TriangleFree => {
            rows.push(LinearRow::new(
                coeffs([5, 5 * (d - 2), 0, 0, 0]),
                int(2),
                r7,
                "C5 component, blue neighbors in B1",
            ));
            rows.push(LinearRow::new(
                [int(5), int(0), ratio(5 * (d - 2), 2), int(0), int(0)],
                int(2),
                r7,
                "C5 component, blue neighbors in B2",
            ));
        }
        Variant::Girth5 => {
            rows.push(LinearRow::new(
                coeffs([5, 5 * (d - 2), 0, 0, 0]),
                int(2),
                r7,
                "C5 component, blue neighbors in B1",
            ));
        }
    }

    let zero = || int(0);
    rows.extend([
        LinearRow::new(coeffs([1, 0, 0, 0, -1]), zero(), RowOrigin::BetaChain, "omega >= beta4"),
        LinearRow::new(coeffs([0, 0, 0, -1, 1]), zero(), RowOrigin::BetaChain, "beta4 >= beta3"),
        LinearRow::new(coeffs([0, 0, -1, 1, 0]), zero(), RowOrigin::BetaChain, "beta3 >= beta2"),
        LinearRow::new(coeffs([0, -1, 1, 0, 0]), zero(), RowOrigin::BetaChain, "beta2 >= beta1"),
        LinearRow::new(coeffs([0, 1, 0, 0, 0]), zero(), RowOrigin::BetaChain, "beta1 >= 0"),
        LinearRow::new(coeffs([0, 0, -1, 2, -1]), zero(), RowOrigin::EpsilonChain, "eps3 >= eps4"),
        LinearRow::new(coeffs([0, -1, 2, -1, 0]), zero(), RowOrigin::EpsilonChain, "eps2 >= eps3"),
        LinearRow::new(coeffs([0, 2, -1, 0, 0]), zero(), RowOrigin::EpsilonChain, "beta1 >= eps2"),
    ]);

    Ok(ConstraintSystem { delta, variant, rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolatedRow {
    pub index: usize,
    pub label: String,
    pub row: String,
    #[serde(with = "pq")]
    pub slack: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Feasibility {
    /// All rows hold and `beta1 > 0`.
    pub feasible: bool,
    pub beta1_positive: bool,
    pub violated: Vec<ViolatedRow>,
}

/// Evaluates every row exactly at `wv`.
pub fn check_feasible(cs: &ConstraintSystem, wv: &WeightVector) -> Feasibility {
    let violated: Vec<ViolatedRow> = cs
        .rows
        .iter()
        .enumerate()
        .filter_map(|(index, row)| {
            let slack = row.slack(wv);
            slack.is_negative().then(|| ViolatedRow {
                index,
                label: row.label.clone(),
                row: row.to_string(),
                slack,
            })
        })
        .collect();
    let beta1_positive = wv.beta1.is_positive();
    Feasibility { feasible: violated.is_empty() && beta1_positive, beta1_positive, violated }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpSolution {
    pub delta: usize,
    pub variant: Variant,
    pub status: LpStatus,
    #[serde(with = "opt_pq", default)]
    pub optimal_omega: Option<Rational>,
    pub witness: Option<WeightVector>,
    /// Rows holding with equality at the witness.
    pub tight_rows: Vec<usize>,
    /// `false` flags an optimum that only exists on the `beta1 = 0` face.
    pub beta1_positive: bool,
    pub bases_examined: usize,
    pub bases_nonsingular: usize,
}

mod opt_pq {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_some(&to_pq(v)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| crate::rational::parse_pq(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Least `omega` over the system, by exhaustive basic-point enumeration.
pub fn solve_min_omega(cs: &ConstraintSystem) -> LpSolution {
    let m = cs.rows.len();
    let bases = combinations(m, VARS);
    let bases_examined = bases.len();
    let scaled = integer_rows(cs);

    let candidates: Vec<Candidate> = bases
        .par_iter()
        .map(|basis| {
            scaled
                .as_deref()
                .and_then(|rows| integer_candidate(rows, basis))
                .unwrap_or_else(|| rational_candidate(cs, basis))
        })
        .collect();
    let bases_nonsingular = candidates.iter().filter(|c| !matches!(c, Candidate::Singular)).count();

    let best = candidates
        .into_iter()
        .filter_map(|c| match c {
            Candidate::Feasible(p) => Some(*p),
            _ => None,
        })
        .min_by(|a, b| point_key(a).cmp(&point_key(b)));

    match best {
        Some(point) => {
            let [omega, b1, b2, b3, b4] = point;
            let witness = WeightVector::new(omega.clone(), [b1, b2, b3, b4]);
            let tight_rows = (0..m).filter(|&i| cs.rows[i].slack(&witness).is_zero()).collect();
            LpSolution {
                delta: cs.delta,
                variant: cs.variant,
                status: LpStatus::Optimal,
                optimal_omega: Some(omega),
                beta1_positive: witness.beta1.is_positive(),
                witness: Some(witness),
                tight_rows,
                bases_examined,
                bases_nonsingular,
            }
        }
        None => LpSolution {
            delta: cs.delta,
            variant: cs.variant,
            status: LpStatus::Infeasible,
            optimal_omega: None,
            witness: None,
            tight_rows: Vec::new(),
            beta1_positive: false,
            bases_examined,
            bases_nonsingular,
        },
    }
}

enum Candidate {
    Singular,
    Infeasible,
    Feasible(Box<[Rational; VARS]>),
}

fn rational_candidate(cs: &ConstraintSystem, basis: &[usize]) -> Candidate {
    match solve_basis(cs, basis) {
        None => Candidate::Singular,
        Some(p) if cs.rows.iter().all(|row| row.lhs(refs(&p)) >= row.rhs) => Candidate::Feasible(Box::new(p)),
        Some(_) => Candidate::Infeasible,
    }
}

/// Each row `(c, rhs)` scaled by the positive lcm of its denominators to
/// integers `[c0..c4, rhs]`; `None` if some entry does not fit in `i128`.
fn integer_rows(cs: &ConstraintSystem) -> Option<Vec<[i128; VARS + 1]>> {
    use num_integer::Integer;
    cs.rows
        .iter()
        .map(|row| {
            let entries: Vec<&Rational> = row.coeffs.iter().chain(std::iter::once(&row.rhs)).collect();
            let lcm = entries.iter().fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let mut out = [0i128; VARS + 1];
            for (slot, r) in out.iter_mut().zip(entries) {
                let scaled = r.numer() * (&lcm / r.denom());
                *slot = i128::try_from(scaled).ok()?;
            }
            Some(out)
        })
        .collect()
}

/// Basic point by Cramer's rule over the integers, with feasibility checked
/// exactly against every row. `None` means some intermediate overflowed.
fn integer_candidate(rows: &[[i128; VARS + 1]], basis: &[usize]) -> Option<Candidate> {
    let a: [[i128; VARS]; VARS] = std::array::from_fn(|i| std::array::from_fn(|j| rows[basis[i]][j]));
    let mut det = bareiss_det(a)?;
    if det == 0 {
        return Some(Candidate::Singular);
    }
    let mut nums = [0i128; VARS];
    for (col, num) in nums.iter_mut().enumerate() {
        let mut ai = a;
        for (i, row) in ai.iter_mut().enumerate() {
            row[col] = rows[basis[i]][VARS];
        }
        *num = bareiss_det(ai)?;
    }
    if det < 0 {
        det = det.checked_neg()?;
        for x in &mut nums {
            *x = x.checked_neg()?;
        }
    }
    // x = nums / det with det > 0: row holds iff  c·nums - rhs·det >= 0
    for row in rows {
        let mut acc = row[VARS].checked_mul(det)?.checked_neg()?;
        for j in 0..VARS {
            acc = acc.checked_add(row[j].checked_mul(nums[j])?)?;
        }
        if acc < 0 {
            return Some(Candidate::Infeasible);
        }
    }
    let det = Rational::from_integer(det.into());
    Some(Candidate::Feasible(Box::new(nums.map(|x| Rational::from_integer(x.into()) / &det))))
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_det(mut m: [[i128; VARS]; VARS]) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..VARS - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..VARS).find(|&r| m[r][k] != 0) else {
                return Some(0);
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..VARS {
            for j in k + 1..VARS {
                let t = m[i][j].checked_mul(m[k][k])?.checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = t / prev;
            }
        }
        prev = m[k][k];
    }
    m[VARS - 1][VARS - 1].checked_mul(sign)
}

fn refs(p: &[Rational; VARS]) -> [&Rational; VARS] {
    [&p[0], &p[1], &p[2], &p[3], &p[4]]
}

/// Least omega first; among equal omega prefer `beta1 > 0`, then lexicographic.
fn point_key(p: &[Rational; VARS]) -> (Rational, bool, [Rational; 4]) {
    (p[0].clone(), !p[1].is_positive(), [p[1].clone(), p[2].clone(), p[3].clone(), p[4].clone()])
}

/// The unique point where all rows of `basis` hold with equality, if any.
fn solve_basis(cs: &ConstraintSystem, basis: &[usize]) -> Option<[Rational; VARS]> {
    let mut a: Vec<Vec<Rational>> = basis
        .iter()
        .map(|&i| {
            let row = &cs.rows[i];
            let mut r = row.coeffs.clone();
            r.push(row.rhs.clone());
            r
        })
        .collect();
    for col in 0..VARS {
        let pivot = (col..VARS).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in &mut a[col][col..] {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| a[i][VARS].clone()))
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(omega: Rational, b: [Rational; 4]) -> WeightVector {
        WeightVector::new(omega, b)
    }

    fn delta4_general_witness() -> WeightVector {
        wv(ratio(26, 82), [ratio(5, 82), ratio(10, 82), ratio(12, 82), ratio(14, 82)])
    }

    fn delta4_triangle_free_witness() -> WeightVector {
        wv(ratio(3, 10), [ratio(1, 15), ratio(1, 10), ratio(1, 8), ratio(3, 20)])
    }

    #[test]
    fn row_census() {
        assert_eq!(build_constraints(4, Variant::General).unwrap().rows.len(), 22);
        assert_eq!(build_constraints(4, Variant::TriangleFree).unwrap().rows.len(), 20);
        assert_eq!(build_constraints(3, Variant::Girth5).unwrap().rows.len(), 19);
        assert!(build_constraints(2, Variant::General).is_err());
    }

    #[test]
    fn census_by_origin() {
        let cs = build_constraints(4, Variant::General).unwrap();
        let count = |o: RowOrigin| cs.rows.iter().filter(|r| r.origin == o).count();
        assert_eq!(count(RowOrigin::Rule(GreedyRule::R1)) + count(RowOrigin::Rule(GreedyRule::R2)), 3);
        assert_eq!(count(RowOrigin::Rule(GreedyRule::R3)) + count(RowOrigin::Rule(GreedyRule::R4)), 2);
        assert_eq!(count(RowOrigin::Rule(GreedyRule::R5)), 1);
        assert_eq!(count(RowOrigin::Rule(GreedyRule::R6)), 3);
        assert_eq!(count(RowOrigin::Rule(GreedyRule::R7)), 5);
        assert_eq!(count(RowOrigin::BetaChain), 5);
        assert_eq!(count(RowOrigin::EpsilonChain), 3);
    }

    #[test]
    fn triangle_free_final_rows() {
        let cs = build_constraints(4, Variant::TriangleFree).unwrap();
        let finals: Vec<String> = cs
            .rows
            .iter()
            .filter(|r| r.origin == RowOrigin::Rule(GreedyRule::R7))
            .map(|r| r.to_string())
            .collect();
        assert_eq!(
            finals,
            vec!["2·omega + 6·beta1 >= 1", "5·omega + 10·beta1 >= 2", "5·omega + 5·beta2 >= 2",]
        );
    }

    #[test]
    fn girth5_substitutes_delta() {
        let cs = build_constraints(3, Variant::Girth5).unwrap();
        let finals: Vec<String> = cs
            .rows
            .iter()
            .filter(|r| r.origin == RowOrigin::Rule(GreedyRule::R7))
            .map(|r| r.to_string())
            .collect();
        assert_eq!(finals, vec!["2·omega + 4·beta1 >= 1", "5·omega + 5·beta1 >= 2"]);
    }

    #[test]
    fn row_display() {
        let cs = build_constraints(4, Variant::General).unwrap();
        assert_eq!(cs.rows[0].to_string(), "6·omega - 5·beta4 >= 1");
        assert_eq!(cs.rows[5].to_string(), "omega - 2·beta2 + 2·beta3 >= 1/3");
    }

    #[test]
    fn reference_witnesses_feasible() {
        let general = build_constraints(4, Variant::General).unwrap();
        let f = check_feasible(&general, &delta4_general_witness());
        assert!(f.feasible, "{:?}", f.violated);
        let tf = build_constraints(4, Variant::TriangleFree).unwrap();
        let f = check_feasible(&tf, &delta4_triangle_free_witness());
        assert!(f.feasible, "{:?}", f.violated);
    }

    #[test]
    fn triangle_free_witness_fails_general_system() {
        let general = build_constraints(4, Variant::General).unwrap();
        let f = check_feasible(&general, &delta4_triangle_free_witness());
        assert!(!f.feasible);
        let labels: Vec<(&str, Rational)> =
            f.violated.iter().map(|v| (v.label.as_str(), v.slack.clone())).collect();
        // 2·(3/10) + 3·(1/10) = 9/10 and 5·(3/10) + (10/3)·(1/8) = 23/12
        assert_eq!(
            labels,
            vec![
                ("K2 component, blue neighbors in B2", ratio(-1, 10)),
                ("C5 component, blue neighbors in B3", ratio(-1, 12)),
            ]
        );
    }

    #[test]
    fn nonpositive_beta1_is_infeasible() {
        let cs = build_constraints(4, Variant::General).unwrap();
        let w = wv(int(1), [int(0), int(0), int(0), int(0)]);
        let f = check_feasible(&cs, &w);
        assert!(!f.beta1_positive && !f.feasible);
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(22, 5).len(), 26_334);
        assert_eq!(combinations(5, 5), vec![vec![0, 1, 2, 3, 4]]);
        assert!(combinations(3, 5).is_empty());
    }

    #[test]
    fn delta4_general_optimum() {
        let sol = solve_min_omega(&build_constraints(4, Variant::General).unwrap());
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.optimal_omega, Some(ratio(13, 41)));
        assert!(sol.beta1_positive);
        assert!(!sol.tight_rows.is_empty());
    }

    #[test]
    fn integer_and_rational_paths_agree() {
        let cs = build_constraints(5, Variant::General).unwrap();
        let rows = integer_rows(&cs).unwrap();
        for basis in combinations(cs.rows.len(), VARS).iter().step_by(97) {
            let fast = integer_candidate(&rows, basis).unwrap();
            let slow = rational_candidate(&cs, basis);
            match (fast, slow) {
                (Candidate::Singular, Candidate::Singular)
                | (Candidate::Infeasible, Candidate::Infeasible) => {}
                (Candidate::Feasible(a), Candidate::Feasible(b)) => assert_eq!(a, b),
                _ => panic!("paths disagree on basis {basis:?}"),
            }
        }
    }

    #[test]
    fn bareiss_matches_known_determinants() {
        let mut id = [[0i128; VARS]; VARS];
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = 2;
        }
        assert_eq!(bareiss_det(id), Some(32));
        id.swap(0, 1);
        assert_eq!(bareiss_det(id), Some(-32));
        id[0] = id[1];
        assert_eq!(bareiss_det(id), Some(0));
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("triangle-free".parse::<Variant>().unwrap(), Variant::TriangleFree);
        assert_eq!("girth5".parse::<Variant>().unwrap(), Variant::Girth5);
        assert!("bipartite".parse::<Variant>().is_err());
    }
}
