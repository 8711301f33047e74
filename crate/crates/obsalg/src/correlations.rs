//! States, correlations, and their classical decompositions.
//!
//! Everything is exact: probabilities are arbitrary-precision rationals,
//! membership in the classical polytope is decided by a phase-1 simplex
//! with Bland's rule over valuation indicator columns, and returned models
//! reproduce their targets with rational equality.

use crate::algebra_core::{compatibility_graph, Atom, Scenario};
use crate::extension::ExtendedScenario;
use crate::ortho_graph::{Colouring, GraphError, OrthoGraph, Valuation};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorrError {
    #[error("state is malformed: {0}")]
    MalformedState(String),
    #[error("state marginals disagree on shared atoms")]
    NotNoDisturbance,
    #[error("colouring is not a proper resolution colouring")]
    InvalidColouring,
    #[error("valuation enumeration exceeded cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
}

impl From<GraphError> for CorrError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::CapExceeded { cap } => CorrError::CapExceeded { cap },
            other => CorrError::MalformedState(other.to_string()),
        }
    }
}

#[cfg(test)]
fn rat_u(n: u64) -> Rat {
    Rat::from(BigInt::from(n))
}

fn ratio(n: u64, d: u64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// One probability distribution per maximal context, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    /// context key -> atom label -> probability
    probs: BTreeMap<String, BTreeMap<String, Rat>>,
}

impl State {
    /// Validates context coverage, nonnegativity, and unit sums.
    pub fn new(
        s: &Scenario,
        probs: BTreeMap<String, BTreeMap<String, Rat>>,
    ) -> Result<State, CorrError> {
        for c in s.max_contexts() {
            let key = c.key();
            let Some(dist) = probs.get(&key) else {
                return Err(CorrError::MalformedState(format!(
                    "missing context {key:?}"
                )));
            };
            let labels: BTreeSet<String> = c.labels().into_iter().collect();
            let given: BTreeSet<String> = dist.keys().cloned().collect();
            if labels != given {
                return Err(CorrError::MalformedState(format!(
                    "context {key:?} atoms do not match"
                )));
            }
            if dist.values().any(|p| p < &Rat::zero()) {
                return Err(CorrError::MalformedState(format!(
                    "negative probability in {key:?}"
                )));
            }
            let total: Rat = dist.values().cloned().sum();
            if !total.is_one() {
                return Err(CorrError::MalformedState(format!(
                    "context {key:?} sums to {total}, not 1"
                )));
            }
        }
        if probs.len() != s.max_contexts().len() {
            return Err(CorrError::MalformedState(
                "extra context keys in state".to_string(),
            ));
        }
        Ok(State { probs })
    }

    pub fn contexts(&self) -> impl Iterator<Item = (&String, &BTreeMap<String, Rat>)> {
        self.probs.iter()
    }

    pub fn value(&self, context_key: &str, atom: &str) -> Option<&Rat> {
        self.probs.get(context_key)?.get(atom)
    }

    /// The atom's probability in the first context listing it. Unambiguous
    /// exactly when the state is no-disturbance.
    pub fn atom_value(&self, atom: &str) -> Option<&Rat> {
        self.probs.values().find_map(|dist| dist.get(atom))
    }
}

/// True iff every shared atom carries the same probability in all of its
/// contexts.
pub fn check_no_disturbance(st: &State, s: &Scenario) -> bool {
    let contexts = s.max_contexts();
    for (i, ca) in contexts.iter().enumerate() {
        for cb in contexts.iter().skip(i + 1) {
            let shared = ca.intersection(cb);
            for a in shared.atoms() {
                let pa = st.value(&ca.key(), a.label());
                let pb = st.value(&cb.key(), a.label());
                if pa != pb {
                    return false;
                }
            }
        }
    }
    true
}

/// A weight per graph vertex; unnormalised by design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correlation {
    pub weights: BTreeMap<String, Rat>,
}

impl Correlation {
    pub fn new(weights: BTreeMap<String, Rat>) -> Result<Correlation, CorrError> {
        for (v, w) in &weights {
            if w < &Rat::zero() || w > &Rat::one() {
                return Err(CorrError::MalformedState(format!(
                    "weight of {v:?} outside [0,1]"
                )));
            }
        }
        Ok(Correlation { weights })
    }

    pub fn weight(&self, v: &str) -> Rat {
        self.weights.get(v).cloned().unwrap_or_else(Rat::zero)
    }
}

/// Convex weights over valuations that reproduce a target exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalModel {
    pub valuations: Vec<Valuation>,
    pub weights: Vec<Rat>,
}

impl ClassicalModel {
    pub fn atom_weight(&self, atom: &str) -> Rat {
        self.valuations
            .iter()
            .zip(&self.weights)
            .filter(|(v, _)| v.contains(atom))
            .map(|(_, w)| w.clone())
            .sum()
    }

    pub fn is_convex(&self) -> bool {
        self.weights.iter().all(|w| w >= &Rat::zero())
            && self.weights.iter().cloned().sum::<Rat>().is_one()
    }

    pub fn reproduces_correlation(&self, c: &Correlation) -> bool {
        c.weights.iter().all(|(v, w)| &self.atom_weight(v) == w)
    }

    pub fn reproduces_state(&self, st: &State, s: &Scenario) -> bool {
        s.max_contexts().iter().all(|c| {
            c.labels().iter().all(|a| {
                st.value(&c.key(), a)
                    .map(|p| p == &self.atom_weight(a))
                    .unwrap_or(false)
            })
        })
    }
}

/// Finds x >= 0 with `columns * x = rhs` by a phase-1 simplex with
/// Bland's rule; exact rationals throughout, so termination is guaranteed
/// and the answer is certified by substitution.
fn exact_feasible_point(columns: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let m = rhs.len();
    let n = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == m));
    debug_assert!(rhs.iter().all(|b| b >= &Rat::zero()));
    // tableau: real columns, artificial identity, rhs
    let mut t: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rat> = columns.iter().map(|c| c[i].clone()).collect();
            for j in 0..m {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let width = n + m + 1;
    // objective: minimize sum of artificials; with the artificial basis the
    // reduced cost of column j is the column sum over constraint rows
    let mut obj: Vec<Rat> = (0..width)
        .map(|j| {
            if j < n {
                (0..m).map(|i| t[i][j].clone()).sum()
            } else {
                Rat::zero()
            }
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        // Bland: smallest-index column with positive reduced cost
        let Some(enter) = (0..n + m).find(|&j| obj[j] > Rat::zero()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if t[i][enter] <= Rat::zero() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            let better = match &best {
                None => true,
                Some(b) => {
                    ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                }
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        let leave = leave?; // unbounded cannot happen in phase 1
        let pivot = t[leave][enter].clone();
        for x in t[leave].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..m {
            if i != leave && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let sub = &f * &t[leave][j];
                    t[i][j] -= sub;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..width {
                let sub = &f * &t[leave][j];
                obj[j] -= sub;
            }
        }
        basis[leave] = enter;
    }
    // objective value is -sum of artificial basics; feasible iff all
    // artificial contributions vanished
    let infeasibility: Rat = (0..m)
        .filter(|&i| basis[i] >= n)
        .map(|i| t[i][width - 1].clone())
        .sum();
    if !infeasibility.is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][width - 1].clone();
        }
    }
    debug_assert!({
        (0..m).all(|i| {
            let lhs: Rat = (0..n).map(|j| &columns[j][i] * &x[j]).sum();
            lhs == rhs[i]
        })
    });
    Some(x)
}

/// Exact membership in the classical (valuation) polytope: a convex
/// decomposition over valuations reproducing the correlation, or None.
pub fn stab_membership(
    c: &Correlation,
    g: &OrthoGraph,
    max_cliques: &[Vec<String>],
    cap: Option<usize>,
) -> Result<Option<ClassicalModel>, CorrError> {
    let valuations = g.enumerate_valuations(max_cliques, cap)?;
    if valuations.is_empty() {
        return Ok(None);
    }
    let vertices = g.vertices();
    let m = vertices.len() + 1;
    let columns: Vec<Vec<Rat>> = valuations
        .iter()
        .map(|v| {
            let mut col: Vec<Rat> = vertices
                .iter()
                .map(|a| {
                    if v.contains(a) {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            col.push(Rat::one()); // convexity row
            col
        })
        .collect();
    let mut rhs: Vec<Rat> = vertices.iter().map(|a| c.weight(a)).collect();
    rhs.push(Rat::one());
    debug_assert_eq!(columns.first().map(|c| c.len()).unwrap_or(m), m);
    let Some(x) = exact_feasible_point(&columns, &rhs) else {
        return Ok(None);
    };
    let mut kept_vals = Vec::new();
    let mut kept_weights = Vec::new();
    for (v, w) in valuations.into_iter().zip(x) {
        if !w.is_zero() {
            kept_vals.push(v);
            kept_weights.push(w);
        }
    }
    let model = ClassicalModel {
        valuations: kept_vals,
        weights: kept_weights,
    };
    debug_assert!(model.is_convex());
    debug_assert!(model.reproduces_correlation(c));
    Ok(Some(model))
}

/// State-level wrapper: atom probabilities become vertex weights of the
/// compatibility graph, with contexts as the cliques.
pub fn stab_membership_state(
    st: &State,
    s: &Scenario,
    cap: Option<usize>,
) -> Result<Option<ClassicalModel>, CorrError> {
    if !check_no_disturbance(st, s) {
        return Err(CorrError::NotNoDisturbance);
    }
    let g = compatibility_graph(s);
    let cliques: Vec<Vec<String>> = s
        .max_contexts()
        .iter()
        .map(|c| c.labels().into_iter().collect())
        .collect();
    let weights: BTreeMap<String, Rat> = s
        .atoms()
        .iter()
        .map(|a| {
            let w = st
                .atom_value(a.label())
                .cloned()
                .unwrap_or_else(Rat::zero);
            (a.label().to_string(), w)
        })
        .collect();
    let c = Correlation::new(weights)?;
    let model = stab_membership(&c, &g, &cliques, cap)?;
    if let Some(m) = &model {
        debug_assert!(m.reproduces_state(st, s));
    }
    Ok(model)
}

/// Clique-inequality membership: every maximal clique sums to at most 1.
pub fn qstab_membership(c: &Correlation, g: &OrthoGraph) -> bool {
    if c.weights.values().any(|w| w < &Rat::zero() || w > &Rat::one()) {
        return false;
    }
    g.maximal_cliques().iter().all(|clique| {
        let total: Rat = clique.iter().map(|v| c.weight(v)).sum();
        total <= Rat::one()
    })
}

/// Uniform mixture of the colour-class valuations of a resolution
/// colouring; the induced base state is the maximally mixed one with
/// atom probabilities dim/d.
pub fn classical_state_from_colouring(
    ext: &ExtendedScenario,
    col: &Colouring,
) -> Result<(State, ClassicalModel), CorrError> {
    let extended = ext.extended();
    let d = extended.d().expect("extensions carry d");
    if col.k != d as usize {
        return Err(CorrError::InvalidColouring);
    }
    let atoms: BTreeSet<String> = extended
        .atoms()
        .iter()
        .map(|a| a.label().to_string())
        .collect();
    let coloured: BTreeSet<String> = col.map.keys().cloned().collect();
    if atoms != coloured {
        return Err(CorrError::InvalidColouring);
    }
    let mut classes: Vec<Valuation> = Vec::new();
    for c in 0..col.k {
        let class = col.colour_class(c);
        for ctx in extended.max_contexts() {
            let hits = ctx.labels().iter().filter(|l| class.contains(*l)).count();
            if hits != 1 {
                return Err(CorrError::InvalidColouring);
            }
        }
        classes.push(class);
    }
    let weights = vec![ratio(1, d); col.k];
    let model = ClassicalModel {
        valuations: classes,
        weights,
    };
    let base = ext.base();
    let dims = base.dim_fn().cloned().unwrap_or_else(|| {
        base.atoms().iter().map(|a| (a.clone(), 1)).collect()
    });
    let mut probs: BTreeMap<String, BTreeMap<String, Rat>> = BTreeMap::new();
    for c in base.max_contexts() {
        let dist = c
            .labels()
            .into_iter()
            .map(|l| {
                let dim = dims.get(&Atom::new(&l)).copied().unwrap_or(1);
                (l, ratio(dim, d))
            })
            .collect();
        probs.insert(c.key(), dist);
    }
    let st = State::new(base, probs)?;
    debug_assert!(check_no_disturbance(&st, base));
    Ok((st, model))
}

const FIRST_PRIMES: [u64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
    89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

fn nth_prime(k: usize) -> BigInt {
    if k < FIRST_PRIMES.len() {
        return BigInt::from(FIRST_PRIMES[k]);
    }
    // extend by trial division; valuation counts stay desk-sized
    let mut candidate = *FIRST_PRIMES.last().unwrap();
    let mut found = FIRST_PRIMES.len() - 1;
    while found < k {
        candidate += 2;
        let mut j = 3;
        let mut prime = candidate % 2 != 0;
        while prime && j * j <= candidate {
            if candidate % j == 0 {
                prime = false;
            }
            j += 2;
        }
        if prime {
            found += 1;
        }
    }
    BigInt::from(candidate)
}

/// A classical state giving every atom a nonzero probability, pairwise
/// distinct across atoms; exists iff every atom lies in some valuation
/// and no two atoms lie in exactly the same valuations.
pub fn separating_classical_state(
    s: &Scenario,
    cap: Option<usize>,
) -> Result<Option<(State, ClassicalModel)>, CorrError> {
    let g = compatibility_graph(s);
    let cliques: Vec<Vec<String>> = s
        .max_contexts()
        .iter()
        .map(|c| c.labels().into_iter().collect())
        .collect();
    let valuations = g.enumerate_valuations(&cliques, cap)?;
    if valuations.is_empty() {
        return Ok(None);
    }
    let atoms: Vec<String> = s.atoms().iter().map(|a| a.label().to_string()).collect();
    let mut support: BTreeMap<&String, BTreeSet<usize>> = BTreeMap::new();
    for a in &atoms {
        let in_vals: BTreeSet<usize> = valuations
            .iter()
            .enumerate()
            .filter(|(_, v)| v.contains(a))
            .map(|(i, _)| i)
            .collect();
        if in_vals.is_empty() {
            return Ok(None); // atom never selected: probability forced to 0
        }
        support.insert(a, in_vals);
    }
    for (i, a) in atoms.iter().enumerate() {
        for b in atoms.iter().skip(i + 1) {
            if support[a] == support[b] {
                return Ok(None); // no mixture can tell the two apart
            }
        }
    }
    // prime-power weights: distinct supports eventually give distinct
    // values because the largest differing prime dominates
    for exponent in 1..=8u32 {
        let raw: Vec<BigInt> = (0..valuations.len())
            .map(|k| nth_prime(k).pow(exponent))
            .collect();
        let total: BigInt = raw.iter().cloned().sum();
        let weights: Vec<Rat> = raw
            .into_iter()
            .map(|w| Rat::new(w, total.clone()))
            .collect();
        let model = ClassicalModel {
            valuations: valuations.clone(),
            weights,
        };
        let values: Vec<Rat> = atoms.iter().map(|a| model.atom_weight(a)).collect();
        let distinct: BTreeSet<&Rat> = values.iter().collect();
        let all_nonzero = values.iter().all(|v| !v.is_zero());
        if distinct.len() == atoms.len() && all_nonzero {
            let mut probs: BTreeMap<String, BTreeMap<String, Rat>> = BTreeMap::new();
            for c in s.max_contexts() {
                let dist = c
                    .labels()
                    .into_iter()
                    .map(|l| {
                        let w = model.atom_weight(&l);
                        (l, w)
                    })
                    .collect();
                probs.insert(c.key(), dist);
            }
            let st = State::new(s, probs)?;
            debug_assert!(check_no_disturbance(&st, s));
            return Ok(Some((st, model)));
        }
    }
    unreachable!("distinct supports separate at a bounded prime power");
}

/// Linear functional with rational coefficients keyed by context then
/// atom; the context key "*" applies to the atom in any context.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Functional {
    pub coeffs: BTreeMap<String, BTreeMap<String, Rat>>,
    /// marks demo inputs that stand in for irrational quantum values
    pub approx: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalEvaluation {
    pub value: Rat,
    pub classical_max: Rat,
    pub approx: bool,
}

/// Evaluates the functional on the state and reports the exact classical
/// maximum over valuations (the vertices of the classical polytope).
pub fn evaluate_functional(
    st: &State,
    s: &Scenario,
    f: &Functional,
    cap: Option<usize>,
) -> Result<FunctionalEvaluation, CorrError> {
    let mut value = Rat::zero();
    for (ctx_key, per_atom) in &f.coeffs {
        for (atom, coeff) in per_atom {
            let p = if ctx_key == "*" {
                st.atom_value(atom)
            } else {
                st.value(ctx_key, atom)
            };
            let Some(p) = p else {
                return Err(CorrError::UnknownAtom(atom.clone()));
            };
            value += coeff * p;
        }
    }
    let g = compatibility_graph(s);
    let cliques: Vec<Vec<String>> = s
        .max_contexts()
        .iter()
        .map(|c| c.labels().into_iter().collect())
        .collect();
    let valuations = g.enumerate_valuations(&cliques, cap)?;
    let mut classical_max = Rat::zero();
    let mut first = true;
    for v in &valuations {
        let mut total = Rat::zero();
        for per_atom in f.coeffs.values() {
            for (atom, coeff) in per_atom {
                if v.contains(atom) {
                    total += coeff;
                }
            }
        }
        if first || total > classical_max {
            classical_max = total;
            first = false;
        }
    }
    Ok(FunctionalEvaluation {
        value,
        classical_max,
        approx: f.approx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::Context;
    use crate::extension::maximal_extension;
    use crate::ks_decision::{is_ks_contextual, KsWitness};

    fn half() -> Rat {
        ratio(1, 2)
    }

    fn path_scenario() -> Scenario {
        Scenario::new(
            vec![
                Context::from_labels(&["a", "b"]),
                Context::from_labels(&["b", "c"]),
            ],
            None,
            None,
        )
        .unwrap()
    }

    fn uniform_state(s: &Scenario) -> State {
        let probs = s
            .max_contexts()
            .iter()
            .map(|c| {
                let n = c.len() as u64;
                (
                    c.key(),
                    c.labels().into_iter().map(|l| (l, ratio(1, n))).collect(),
                )
            })
            .collect();
        State::new(s, probs).unwrap()
    }

    #[test]
    fn state_validation() {
        let s = path_scenario();
        let st = uniform_state(&s);
        assert!(check_no_disturbance(&st, &s));
        // missing context
        assert!(State::new(&s, BTreeMap::new()).is_err());
        // disturbing state: b gets 1/2 in one context, 1/3 in the other
        let mut probs: BTreeMap<String, BTreeMap<String, Rat>> = BTreeMap::new();
        probs.insert(
            "a,b".to_string(),
            [("a".to_string(), half()), ("b".to_string(), half())]
                .into_iter()
                .collect(),
        );
        probs.insert(
            "b,c".to_string(),
            [
                ("b".to_string(), ratio(1, 3)),
                ("c".to_string(), ratio(2, 3)),
            ]
            .into_iter()
            .collect(),
        );
        let st = State::new(&s, probs).unwrap();
        assert!(!check_no_disturbance(&st, &s));
        assert_eq!(
            stab_membership_state(&st, &s, None).unwrap_err(),
            CorrError::NotNoDisturbance
        );
    }

    #[test]
    fn path_state_has_exact_classical_model() {
        let s = path_scenario();
        let st = uniform_state(&s);
        let model = stab_membership_state(&st, &s, None).unwrap().unwrap();
        assert!(model.is_convex());
        assert!(model.reproduces_state(&st, &s));
        // the two valuations are {b} and {a,c}
        assert_eq!(model.valuations.len(), 2);
    }

    #[test]
    fn single_valuation_is_its_own_model() {
        let s = path_scenario();
        let g = compatibility_graph(&s);
        let cliques: Vec<Vec<String>> = s
            .max_contexts()
            .iter()
            .map(|c| c.labels().into_iter().collect())
            .collect();
        let vals = g.enumerate_valuations(&cliques, None).unwrap();
        for v in vals {
            let weights = g
                .vertices()
                .iter()
                .map(|a| {
                    let w = if v.contains(a) { Rat::one() } else { Rat::zero() };
                    (a.clone(), w)
                })
                .collect();
            let c = Correlation::new(weights).unwrap();
            let model = stab_membership(&c, &g, &cliques, None).unwrap().unwrap();
            assert!(model.reproduces_correlation(&c));
            assert_eq!(model.valuations, vec![v]);
        }
    }

    #[test]
    fn specker_triangle_box_is_not_classical() {
        // three pairwise-overlapping 2-atom contexts admit no valuation,
        // yet the all-1/2 box is a valid no-disturbance state
        let s = Scenario::new(
            vec![
                Context::from_labels(&["a", "b"]),
                Context::from_labels(&["b", "c"]),
                Context::from_labels(&["a", "c"]),
            ],
            None,
            None,
        )
        .unwrap();
        let st = uniform_state(&s);
        assert!(check_no_disturbance(&st, &s));
        assert!(stab_membership_state(&st, &s, None).unwrap().is_none());
    }

    #[test]
    fn clique_sum_above_one_is_rejected_by_qstab_and_stab() {
        let g = OrthoGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let cliques = g.maximal_cliques();
        let mut weights = BTreeMap::new();
        weights.insert("a".to_string(), Rat::one());
        weights.insert("b".to_string(), Rat::one());
        weights.insert("c".to_string(), Rat::zero());
        let c = Correlation::new(weights).unwrap();
        assert!(!qstab_membership(&c, &g));
        assert!(stab_membership(&c, &g, &cliques, None).unwrap().is_none());
        // uniform 1/2 respects every clique
        let mut weights = BTreeMap::new();
        for v in ["a", "b", "c"] {
            weights.insert(v.to_string(), half());
        }
        let c = Correlation::new(weights).unwrap();
        assert!(qstab_membership(&c, &g));
    }

    #[test]
    fn colouring_gives_maximally_mixed_state() {
        // one context {p, q} with dim p = 2: base probabilities 2/3, 1/3
        let dims: BTreeMap<Atom, u64> =
            [(Atom::new("p"), 2), (Atom::new("q"), 1)].into_iter().collect();
        let s = Scenario::new(
            vec![Context::from_labels(&["p", "q"])],
            Some(dims),
            Some(3),
        )
        .unwrap();
        let e = maximal_extension(&s).unwrap();
        let v = is_ks_contextual(&s).unwrap();
        let Some(KsWitness::DColouring(col)) = v.witness else {
            panic!("expected colouring witness");
        };
        let (st, model) = classical_state_from_colouring(&e, &col).unwrap();
        assert!(model.is_convex());
        assert_eq!(st.value("p,q", "p"), Some(&ratio(2, 3)));
        assert_eq!(st.value("p,q", "q"), Some(&ratio(1, 3)));
        assert!(check_no_disturbance(&st, &s));
    }

    #[test]
    fn bad_colourings_are_rejected()  {
        let s = Scenario::new(vec![Context::from_labels(&["a", "b", "c"])], None, None).unwrap();
        let e = maximal_extension(&s).unwrap();
        let col = Colouring {
            k: 2,
            map: [("a".to_string(), 0), ("b".to_string(), 1), ("c".to_string(), 0)]
                .into_iter()
                .collect(),
        };
        assert_eq!(
            classical_state_from_colouring(&e, &col).unwrap_err(),
            CorrError::InvalidColouring
        );
    }

    #[test]
    fn separating_state_for_one_context_uses_prime_weights() {
        let s = Scenario::new(vec![Context::from_labels(&["a", "b"])], None, None).unwrap();
        let (st, model) = separating_classical_state(&s, None).unwrap().unwrap();
        assert!(model.is_convex());
        assert_eq!(st.value("a,b", "a"), Some(&ratio(2, 5)));
        assert_eq!(st.value("a,b", "b"), Some(&ratio(3, 5)));
    }

    #[test]
    fn separating_state_absent_without_valuations() {
        let s = Scenario::new(
            vec![
                Context::from_labels(&["a", "b"]),
                Context::from_labels(&["b", "c"]),
                Context::from_labels(&["a", "c"]),
            ],
            None,
            None,
        )
        .unwrap();
        assert!(separating_classical_state(&s, None).unwrap().is_none());
    }

    #[test]
    fn separating_state_absent_with_twin_atoms() {
        // a and b lie in exactly the same valuations
        let s = Scenario::new(
            vec![
                Context::from_labels(&["a", "x"]),
                Context::from_labels(&["b", "x"]),
            ],
            None,
            None,
        )
        .unwrap();
        assert!(separating_classical_state(&s, None).unwrap().is_none());
    }

    #[test]
    fn separating_state_separates_a_ring() {
        let s = Scenario::new(
            vec![
                Context::from_labels(&["b0", "b1", "u0"]),
                Context::from_labels(&["b1", "b2", "u1"]),
                Context::from_labels(&["b2", "b3", "u2"]),
                Context::from_labels(&["b3", "b0", "u3"]),
            ],
            None,
            None,
        )
        .unwrap();
        let (st, model) = separating_classical_state(&s, None).unwrap().unwrap();
        assert!(check_no_disturbance(&st, &s));
        let mut seen = BTreeSet::new();
        for a in s.atoms() {
            let v = model.atom_weight(a.label());
            assert!(!v.is_zero());
            assert!(seen.insert(v), "values must be pairwise distinct");
        }
    }

    #[test]
    fn functional_evaluation_and_classical_max() {
        let s = path_scenario();
        let st = uniform_state(&s);
        let mut coeffs: BTreeMap<String, BTreeMap<String, Rat>> = BTreeMap::new();
        coeffs.insert(
            "*".to_string(),
            [("a".to_string(), Rat::one()), ("c".to_string(), Rat::one())]
                .into_iter()
                .collect(),
        );
        let f = Functional {
            coeffs,
            approx: false,
        };
        let eval = evaluate_functional(&st, &s, &f, None).unwrap();
        assert_eq!(eval.value, Rat::one()); // 1/2 + 1/2
        assert_eq!(eval.classical_max, rat_u(2)); // valuation {a,c}
        assert!(!eval.approx);
        // zero functional
        let zero = Functional::default();
        let eval = evaluate_functional(&st, &s, &zero, None).unwrap();
        assert!(eval.value.is_zero());
        assert!(eval.classical_max.is_zero());
    }

    #[test]
    fn classical_max_bounds_every_mixture() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let s = Scenario::new(
            vec![
                Context::from_labels(&["b0", "b1", "u0"]),
                Context::from_labels(&["b1", "b2", "u1"]),
                Context::from_labels(&["b2", "b0", "u2"]),
            ],
            None,
            None,
        )
        .unwrap();
        let g = compatibility_graph(&s);
        let cliques: Vec<Vec<String>> = s
            .max_contexts()
            .iter()
            .map(|c| c.labels().into_iter().collect())
            .collect();
        let valuations = g.enumerate_valuations(&cliques, None).unwrap();
        let mut coeffs: BTreeMap<String, Rat> = BTreeMap::new();
        for a in s.atoms() {
            coeffs.insert(a.label().to_string(), rat_u(rng.gen_range(0..4)));
        }
        let f = Functional {
            coeffs: [("*".to_string(), coeffs)].into_iter().collect(),
            approx: false,
        };
        for _ in 0..20 {
            // random convex mixture of valuations
            let raw: Vec<u64> = (0..valuations.len()).map(|_| rng.gen_range(1..5)).collect();
            let total: u64 = raw.iter().sum();
            let model = ClassicalModel {
                valuations: valuations.clone(),
                weights: raw.into_iter().map(|w| ratio(w, total)).collect(),
            };
            let probs = s
                .max_contexts()
                .iter()
                .map(|c| {
                    (
                        c.key(),
                        c.labels()
                            .into_iter()
                            .map(|l| {
                                let w = model.atom_weight(&l);
                                (l, w)
                            })
                            .collect(),
                    )
                })
                .collect();
            let st = State::new(&s, probs).unwrap();
            let eval = evaluate_functional(&st, &s, &f, None).unwrap();
            assert!(eval.value <= eval.classical_max);
        }
    }
}
