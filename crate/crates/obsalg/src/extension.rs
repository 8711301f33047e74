//! Atom-splitting extensions that turn a finite-dimensional scenario into
//! one where every maximal context is a full resolution into unit atoms.
//!
//! An atom of dimension k inside a context is replaced by k fresh unit
//! atoms local to that context; dimension-one atoms are kept verbatim, so
//! overlaps between contexts made of unit atoms survive unchanged.

use crate::algebra_core::{compatibility_graph, short_hash, Atom, Context, Scenario};
use crate::diophantine::{solve_dimension_function, DiophantineError};
use crate::ortho_graph::OrthoGraph;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("scenario admits no dimension function with d <= {0}")]
    NoDimensionFunction(u64),
}

/// A scenario together with its unit-atom extension.
#[derive(Debug, Clone)]
pub struct ExtendedScenario {
    base: Scenario,
    /// base atom -> the unit atoms standing in for it (itself if dim 1)
    split_map: BTreeMap<Atom, Vec<Atom>>,
    extended: Scenario,
}

impl ExtendedScenario {
    pub fn base(&self) -> &Scenario {
        &self.base
    }

    pub fn split_map(&self) -> &BTreeMap<Atom, Vec<Atom>> {
        &self.split_map
    }

    pub fn extended(&self) -> &Scenario {
        &self.extended
    }
}

/// Resolves the scenario's dimension data, solving for it when absent.
fn dimension_data(s: &Scenario) -> Result<(BTreeMap<Atom, u64>, u64), ExtensionError> {
    if let (Some(dims), Some(d)) = (s.dim_fn(), s.d()) {
        return Ok((dims.clone(), d));
    }
    let g = compatibility_graph(s);
    let cliques: Vec<Vec<String>> = s
        .max_contexts()
        .iter()
        .map(|c| c.labels().into_iter().collect())
        .collect();
    let largest = cliques.iter().map(|c| c.len() as u64).max().unwrap_or(1);
    let d_max = s.d().unwrap_or_else(|| largest.max(s.atoms().len() as u64));
    match solve_dimension_function(&g, &cliques, d_max) {
        Ok(sol) => {
            let dims = sol
                .dims
                .into_iter()
                .map(|(l, k)| (Atom::new(&l), k))
                .collect();
            Ok((dims, sol.d))
        }
        Err(DiophantineError::NoSolutionUpTo(d)) => Err(ExtensionError::NoDimensionFunction(d)),
        Err(DiophantineError::CapExceeded { .. }) => unreachable!("no cap in solve"),
    }
}

/// Splits every atom of dimension k >= 2 into k fresh unit atoms local to
/// its context. The result has all atoms of dimension one and each maximal
/// context of size d.
///
/// Fresh labels are `<atom>#<i>@<context hash>`, so reruns are
/// deterministic and fresh atoms are never shared across base contexts.
pub fn maximal_extension(s: &Scenario) -> Result<ExtendedScenario, ExtensionError> {
    let (dims, d) = dimension_data(s)?;
    let mut split_map: BTreeMap<Atom, Vec<Atom>> = BTreeMap::new();
    let mut contexts = Vec::new();
    for c in s.max_contexts() {
        let h = short_hash(&c.key());
        let mut atoms = Vec::new();
        for a in c.atoms() {
            let k = dims[a];
            if k == 1 {
                atoms.push(a.clone());
                split_map.entry(a.clone()).or_insert_with(|| vec![a.clone()]);
            } else {
                for i in 1..=k {
                    let fresh = Atom::new(&format!("{}#{}@{}", a.label(), i, h));
                    atoms.push(fresh.clone());
                    split_map.entry(a.clone()).or_default().push(fresh);
                }
            }
        }
        contexts.push(Context::new(atoms));
    }
    let unit_dims: BTreeMap<Atom, u64> = contexts
        .iter()
        .flat_map(|c| c.atoms().iter().cloned())
        .map(|a| (a, 1))
        .collect();
    let extended = Scenario::new(contexts, Some(unit_dims), Some(d))
        .expect("splitting preserves scenario validity");
    Ok(ExtendedScenario {
        base: s.clone(),
        split_map,
        extended,
    })
}

/// Orthogonality graph of the extended atoms (edge iff co-context).
pub fn extended_graph(e: &ExtendedScenario) -> OrthoGraph {
    compatibility_graph(e.extended())
}
