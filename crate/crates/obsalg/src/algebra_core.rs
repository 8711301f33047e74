//! Finite observable algebras: atoms, contexts, scenarios, context
//! categories and structural reductions.
//!
//! A scenario lists the maximal contexts (jointly measurable families of
//! atomic events). The context category is the intersection closure of the
//! maximal contexts together with a least element, represented by the empty
//! atom set. Acyclicity of a scenario is chordality of its compatibility
//! graph; an exhaustive cycle search is available as a test oracle.

use crate::ortho_graph::OrthoGraph;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// An atomic event, identified by its label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Atom(pub String);

impl Atom {
    pub fn new(label: impl Into<String>) -> Self {
        Atom(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A context, identified with its set of atoms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Context {
    atoms: BTreeSet<Atom>,
}

impl Context {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        Context {
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Self {
        Context {
            atoms: labels.iter().map(|s| Atom::new(s.as_ref())).collect(),
        }
    }

    /// The empty context (the least element of every context category).
    pub fn least() -> Self {
        Context::default()
    }

    pub fn atoms(&self) -> &BTreeSet<Atom> {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.atoms.contains(a)
    }

    pub fn is_subset(&self, other: &Context) -> bool {
        self.atoms.is_subset(&other.atoms)
    }

    pub fn intersection(&self, other: &Context) -> Context {
        Context {
            atoms: self.atoms.intersection(&other.atoms).cloned().collect(),
        }
    }

    pub fn union(&self, other: &Context) -> Context {
        Context {
            atoms: self.atoms.union(&other.atoms).cloned().collect(),
        }
    }

    /// Atom labels in sorted order.
    pub fn labels(&self) -> Vec<String> {
        self.atoms.iter().map(|a| a.0.clone()).collect()
    }

    /// Canonical string key: sorted labels joined with commas.
    pub fn key(&self) -> String {
        self.labels().join(",")
    }
}

impl Serialize for Context {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Context {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let labels: Vec<String> = Vec::deserialize(de)?;
        Ok(Context::from_labels(&labels))
    }
}

/// Construction errors for [`Scenario`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MalformedScenario {
    #[error("scenario has no maximal contexts")]
    NoContexts,
    #[error("maximal context is empty")]
    EmptyContext,
    #[error("atom label {0:?} is empty or contains a comma")]
    BadAtomLabel(String),
    #[error("maximal contexts are not an antichain: {small:?} is contained in {large:?}")]
    NotAntichain { small: String, large: String },
    #[error("dimension map does not cover atom {0:?} exactly")]
    DimDomainMismatch(String),
    #[error("atom {0:?} has dimension 0")]
    ZeroDim(String),
    #[error("context {context:?} has dimension sum {sum}, expected {expected}")]
    DimSumMismatch {
        context: String,
        sum: u64,
        expected: u64,
    },
}

/// A finite scenario: atoms, maximal contexts, and optional dimension data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    atoms: BTreeSet<Atom>,
    max_contexts: Vec<Context>,
    dim_fn: Option<BTreeMap<Atom, u64>>,
    d: Option<u64>,
}

impl Scenario {
    /// Validates and canonicalises a scenario.
    ///
    /// Atoms are derived as the union of the contexts, so coverage holds by
    /// construction. Contexts are sorted by their sorted atom lists; exact
    /// duplicates are merged, proper containments are errors. When a
    /// dimension map is given it must assign a positive dimension to exactly
    /// the atoms, with equal per-context sums (equal to `d` when given).
    pub fn new(
        max_contexts: Vec<Context>,
        dim_fn: Option<BTreeMap<Atom, u64>>,
        d: Option<u64>,
    ) -> Result<Self, MalformedScenario> {
        let mut contexts: Vec<Context> = max_contexts;
        contexts.sort_by(|a, b| a.labels().cmp(&b.labels()));
        contexts.dedup();
        if contexts.is_empty() {
            return Err(MalformedScenario::NoContexts);
        }
        let mut atoms = BTreeSet::new();
        for c in &contexts {
            if c.is_empty() {
                return Err(MalformedScenario::EmptyContext);
            }
            for a in c.atoms() {
                if a.0.is_empty() || a.0.contains(',') {
                    return Err(MalformedScenario::BadAtomLabel(a.0.clone()));
                }
                atoms.insert(a.clone());
            }
        }
        for (i, c) in contexts.iter().enumerate() {
            for c2 in contexts.iter().skip(i + 1) {
                if c.is_subset(c2) {
                    return Err(MalformedScenario::NotAntichain {
                        small: c.key(),
                        large: c2.key(),
                    });
                }
                if c2.is_subset(c) {
                    return Err(MalformedScenario::NotAntichain {
                        small: c2.key(),
                        large: c.key(),
                    });
                }
            }
        }
        let mut d = d;
        if let Some(dims) = &dim_fn {
            for a in dims.keys() {
                if !atoms.contains(a) {
                    return Err(MalformedScenario::DimDomainMismatch(a.0.clone()));
                }
            }
            for a in &atoms {
                match dims.get(a) {
                    None => return Err(MalformedScenario::DimDomainMismatch(a.0.clone())),
                    Some(0) => return Err(MalformedScenario::ZeroDim(a.0.clone())),
                    Some(_) => {}
                }
            }
            for c in &contexts {
                let sum: u64 = c.atoms().iter().map(|a| dims[a]).sum();
                match d {
                    None => d = Some(sum),
                    Some(expected) if sum != expected => {
                        return Err(MalformedScenario::DimSumMismatch {
                            context: c.key(),
                            sum,
                            expected,
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(Scenario {
            atoms,
            max_contexts: contexts,
            dim_fn,
            d,
        })
    }

    pub fn atoms(&self) -> &BTreeSet<Atom> {
        &self.atoms
    }

    pub fn atom_labels(&self) -> Vec<String> {
        self.atoms.iter().map(|a| a.0.clone()).collect()
    }

    pub fn max_contexts(&self) -> &[Context] {
        &self.max_contexts
    }

    pub fn dim_fn(&self) -> Option<&BTreeMap<Atom, u64>> {
        self.dim_fn.as_ref()
    }

    pub fn d(&self) -> Option<u64> {
        self.d
    }

    pub fn dim_of(&self, a: &Atom) -> Option<u64> {
        self.dim_fn.as_ref().and_then(|m| m.get(a)).copied()
    }

    /// Replaces the dimension data, re-running validation.
    pub fn with_dims(
        &self,
        dim_fn: BTreeMap<Atom, u64>,
        d: u64,
    ) -> Result<Scenario, MalformedScenario> {
        Scenario::new(self.max_contexts.clone(), Some(dim_fn), Some(d))
    }
}

/// A set of contexts ordered by inclusion.
///
/// [`build_context_category`] produces intersection-closed categories with
/// the empty context as least element. Reduction operations return
/// sub-posets through the same type; those need not be closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextCategory {
    elements: Vec<Context>,
}

impl ContextCategory {
    /// Builds a category from raw elements (sorted, deduplicated).
    pub fn from_elements(elements: impl IntoIterator<Item = Context>) -> Self {
        let mut v: Vec<Context> = elements.into_iter().collect();
        v.sort_by(|a, b| a.labels().cmp(&b.labels()));
        v.dedup();
        ContextCategory { elements: v }
    }

    pub fn elements(&self) -> &[Context] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, c: &Context) -> bool {
        self.elements.iter().any(|e| e == c)
    }

    pub fn has_least(&self) -> bool {
        self.elements.iter().any(|e| e.is_empty())
    }

    /// Maximal elements (no proper superset in the category).
    pub fn maximal_elements(&self) -> Vec<&Context> {
        self.elements
            .iter()
            .filter(|c| {
                !self
                    .elements
                    .iter()
                    .any(|c2| **c != *c2 && c.is_subset(c2))
            })
            .collect()
    }

    /// Minimal elements among the non-empty ones.
    pub fn minimal_elements(&self) -> Vec<&Context> {
        self.elements
            .iter()
            .filter(|c| !c.is_empty())
            .filter(|c| {
                !self
                    .elements
                    .iter()
                    .any(|c2| !c2.is_empty() && **c != *c2 && c2.is_subset(c))
            })
            .collect()
    }

    /// Least element of the category containing both arguments, if unique.
    pub fn join(&self, a: &Context, b: &Context) -> Option<&Context> {
        let u = a.union(b);
        let mut candidates: Vec<&Context> = self
            .elements
            .iter()
            .filter(|c| u.is_subset(c))
            .collect();
        candidates.sort_by_key(|c| c.len());
        let least = *candidates.first()?;
        if candidates.iter().all(|c| least.is_subset(c)) {
            Some(least)
        } else {
            None
        }
    }

    /// True when every pairwise intersection of elements is an element.
    pub fn is_intersection_closed(&self) -> bool {
        for (i, a) in self.elements.iter().enumerate() {
            for b in self.elements.iter().skip(i) {
                if !self.contains(&a.intersection(b)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Intersection closure of the maximal contexts, with least element.
///
/// Iterates pairwise intersections to a fixpoint, then adjoins the empty
/// context.
pub fn build_context_category(s: &Scenario) -> ContextCategory {
    let mut elements: BTreeSet<Context> = s.max_contexts().iter().cloned().collect();
    loop {
        let snapshot: Vec<Context> = elements.iter().cloned().collect();
        let before = elements.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in snapshot.iter().skip(i + 1) {
                elements.insert(a.intersection(b));
            }
        }
        if elements.len() == before {
            break;
        }
    }
    elements.insert(Context::least());
    ContextCategory::from_elements(elements)
}

/// Compatibility graph: atoms as vertices, co-measurability as edges.
pub fn compatibility_graph(s: &Scenario) -> OrthoGraph {
    graph_of_contexts(&s.atom_labels(), s.max_contexts())
}

fn graph_of_contexts(atom_labels: &[String], contexts: &[Context]) -> OrthoGraph {
    let mut edges: BTreeSet<(String, String)> = BTreeSet::new();
    for c in contexts {
        let ls = c.labels();
        for (i, a) in ls.iter().enumerate() {
            for b in ls.iter().skip(i + 1) {
                edges.insert((a.clone(), b.clone()));
            }
        }
    }
    let edges: Vec<(String, String)> = edges.into_iter().collect();
    OrthoGraph::new(atom_labels, &edges).expect("scenario atoms cover context atoms")
}

fn category_graph(cc: &ContextCategory) -> OrthoGraph {
    let max: Vec<Context> = cc.maximal_elements().into_iter().cloned().collect();
    let mut atoms: BTreeSet<String> = BTreeSet::new();
    for c in &max {
        atoms.extend(c.labels());
    }
    let atoms: Vec<String> = atoms.into_iter().collect();
    graph_of_contexts(&atoms, &max)
}

/// True iff the compatibility graph of the category's maximal elements is
/// chordal.
pub fn is_acyclic(cc: &ContextCategory) -> bool {
    category_graph(cc).is_chordal()
}

/// Exhaustive witness search for non-acyclicity (test oracle).
///
/// Finds an induced cycle of length at least four in the compatibility
/// graph and lifts it to a cyclic tuple of maximal contexts with pairwise
/// nontrivial consecutive overlaps. Exponential in the worst case.
pub fn nontrivial_context_cycle(cc: &ContextCategory) -> Option<Vec<Context>> {
    let g = category_graph(cc);
    let cycle = g.find_chordless_cycle()?;
    let max = cc.maximal_elements();
    let mut out = Vec::with_capacity(cycle.len());
    for (i, &u) in cycle.iter().enumerate() {
        let v = cycle[(i + 1) % cycle.len()];
        let a = Atom::new(g.label(u));
        let b = Atom::new(g.label(v));
        let ctx = max
            .iter()
            .find(|c| c.contains(&a) && c.contains(&b))
            .expect("edge atoms share a maximal context");
        out.push((*ctx).clone());
    }
    Some(out)
}

/// Removes the least element; all other relations are preserved.
pub fn truncate(cc: &ContextCategory) -> ContextCategory {
    ContextCategory::from_elements(cc.elements().iter().filter(|c| !c.is_empty()).cloned())
}

/// Elements expressible as an intersection of two maximal elements.
///
/// Contains every maximal element (take both factors equal). The least
/// element is kept if present in the input.
pub fn downward_generated(cc: &ContextCategory) -> ContextCategory {
    let max = cc.maximal_elements();
    let mut out: BTreeSet<Context> = BTreeSet::new();
    for (i, a) in max.iter().enumerate() {
        for b in max.iter().skip(i) {
            let m = a.intersection(b);
            if cc.contains(&m) && !m.is_empty() {
                out.insert(m);
            }
        }
    }
    if cc.has_least() {
        out.insert(Context::least());
    }
    ContextCategory::from_elements(out)
}

/// Join-closure of the minimal elements.
///
/// Starts from the minimal non-empty elements and adds joins (least
/// elements of the input category above a pairwise union) until a fixpoint;
/// when a union of two minimals is itself an element, the join is that
/// union. The least element is kept if present in the input.
pub fn upward_generated(cc: &ContextCategory) -> ContextCategory {
    let mut out: BTreeSet<Context> = cc
        .minimal_elements()
        .into_iter()
        .cloned()
        .collect();
    loop {
        let snapshot: Vec<Context> = out.iter().cloned().collect();
        let before = out.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in snapshot.iter().skip(i + 1) {
                if let Some(j) = cc.join(a, b) {
                    out.insert(j.clone());
                }
            }
        }
        if out.len() == before {
            break;
        }
    }
    if cc.has_least() {
        out.insert(Context::least());
    }
    ContextCategory::from_elements(out)
}

/// Coarse-grains a scenario: every minimal element of the context category
/// becomes one atom, and the uncovered part of each maximal context becomes
/// one per-context remainder atom.
///
/// Minimal elements of an intersection-closed category are pairwise
/// disjoint, so the coarse atoms are well defined. A singleton minimal
/// element keeps its atom's label; larger ones are labelled
/// `cg:<labels joined with |>`. Remainder atoms are labelled by a short
/// hash of their context. Dimensions, when present, are summed; the
/// remainder atom receives the missing dimension.
pub fn coarse_grain(s: &Scenario) -> Result<Scenario, MalformedScenario> {
    let cc = build_context_category(s);
    let minimals: Vec<Context> = cc.minimal_elements().into_iter().cloned().collect();
    let coarse_label = |m: &Context| -> String {
        if m.len() == 1 {
            m.labels().remove(0)
        } else {
            format!("cg:{}", m.labels().join("|"))
        }
    };
    let mut contexts = Vec::new();
    let mut dims: BTreeMap<Atom, u64> = BTreeMap::new();
    for c in s.max_contexts() {
        let mut atoms: Vec<Atom> = Vec::new();
        let mut covered: BTreeSet<Atom> = BTreeSet::new();
        for m in &minimals {
            if m.is_subset(c) {
                let label = coarse_label(m);
                if let Some(df) = s.dim_fn() {
                    let sum = m.atoms().iter().map(|a| df[a]).sum();
                    dims.insert(Atom::new(&label), sum);
                }
                atoms.push(Atom::new(label));
                covered.extend(m.atoms().iter().cloned());
            }
        }
        if covered.len() < c.len() {
            let label = format!("rest:{}", short_hash(&c.key()));
            if let Some(df) = s.dim_fn() {
                let missing: u64 = c
                    .atoms()
                    .iter()
                    .filter(|a| !covered.contains(a))
                    .map(|a| df[a])
                    .sum();
                dims.insert(Atom::new(&label), missing);
            }
            atoms.push(Atom::new(label));
        }
        contexts.push(Context::new(atoms));
    }
    let dim_fn = s.dim_fn().map(|_| dims);
    Scenario::new(contexts, dim_fn, s.d())
}

/// First 12 hex digits of the SHA-256 of the input.
pub fn short_hash(input: &str) -> String {
    use sha2::{Digest, Sha256};
    let digest = Sha256::digest(input.as_bytes());
    digest.iter().take(6).map(|b| format!("{b:02x}")).collect()
}

/// Rebuilds a scenario from a reduced category, relative to a base scenario.
///
/// The maximal elements become the contexts. When the base has dimension
/// data and a context's dimension sum falls short of `d`, a fresh remainder
/// atom with the missing dimension is added (the implicit complement of the
/// context within the algebra).
pub fn scenario_from_poset(
    cc: &ContextCategory,
    base: &Scenario,
) -> Result<Scenario, MalformedScenario> {
    let mut contexts = Vec::new();
    let mut dims: BTreeMap<Atom, u64> = BTreeMap::new();
    if let Some(df) = base.dim_fn() {
        for a in df.keys() {
            dims.insert(a.clone(), df[a]);
        }
    }
    let d = base.d();
    for c in cc.maximal_elements() {
        if c.is_empty() {
            continue;
        }
        let mut atoms: Vec<Atom> = c.atoms().iter().cloned().collect();
        if let (Some(df), Some(d)) = (base.dim_fn(), d) {
            let sum: u64 = c.atoms().iter().map(|a| df[a]).sum();
            if sum < d {
                let label = format!("rest:{}", short_hash(&c.key()));
                dims.insert(Atom::new(&label), d - sum);
                atoms.push(Atom::new(label));
            }
        }
        contexts.push(Context::new(atoms));
    }
    let dim_fn = if base.dim_fn().is_some() {
        // restrict to atoms that actually occur
        let used: BTreeSet<Atom> = contexts
            .iter()
            .flat_map(|c| c.atoms().iter().cloned())
            .collect();
        dims.retain(|a, _| used.contains(a));
        Some(dims)
    } else {
        None
    };
    Scenario::new(contexts, dim_fn, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scenario(contexts: &[&[&str]]) -> Scenario {
        Scenario::new(
            contexts.iter().map(|c| Context::from_labels(c)).collect(),
            None,
            None,
        )
        .unwrap()
    }

    #[test]
    fn construction_validations() {
        let err = Scenario::new(vec![], None, None).unwrap_err();
        assert_eq!(err, MalformedScenario::NoContexts);
        let err = Scenario::new(
            vec![Context::from_labels(&["a", "b"]), Context::from_labels(&["a"])],
            None,
            None,
        )
        .unwrap_err();
        assert!(matches!(err, MalformedScenario::NotAntichain { .. }));
        let err = Scenario::new(vec![Context::from_labels(&["a,b"])], None, None).unwrap_err();
        assert!(matches!(err, MalformedScenario::BadAtomLabel(_)));
        // duplicate contexts merge
        let s = Scenario::new(
            vec![Context::from_labels(&["a", "b"]), Context::from_labels(&["b", "a"])],
            None,
            None,
        )
        .unwrap();
        assert_eq!(s.max_contexts().len(), 1);
    }

    #[test]
    fn dim_validations() {
        let ctx = vec![Context::from_labels(&["a", "b"]), Context::from_labels(&["b", "c"])];
        let dims: BTreeMap<Atom, u64> =
            [("a", 2u64), ("b", 1), ("c", 2)].iter().map(|(l, d)| (Atom::new(*l), *d)).collect();
        let s = Scenario::new(ctx.clone(), Some(dims.clone()), None).unwrap();
        assert_eq!(s.d(), Some(3));
        let err = Scenario::new(ctx.clone(), Some(dims.clone()), Some(4)).unwrap_err();
        assert!(matches!(err, MalformedScenario::DimSumMismatch { .. }));
        let bad: BTreeMap<Atom, u64> =
            [("a", 2u64), ("b", 1)].iter().map(|(l, d)| (Atom::new(*l), *d)).collect();
        let err = Scenario::new(ctx.clone(), Some(bad), None).unwrap_err();
        assert!(matches!(err, MalformedScenario::DimDomainMismatch(_)));
        let mismatch: BTreeMap<Atom, u64> =
            [("a", 2u64), ("b", 1), ("c", 1)].iter().map(|(l, d)| (Atom::new(*l), *d)).collect();
        let err = Scenario::new(ctx, Some(mismatch), None).unwrap_err();
        assert!(matches!(err, MalformedScenario::DimSumMismatch { .. }));
    }

    #[test]
    fn single_context_category_is_a_chain() {
        let s = scenario(&[&["a", "b", "c"]]);
        let cc = build_context_category(&s);
        assert_eq!(cc.len(), 2);
        assert!(cc.has_least());
        assert_eq!(cc.maximal_elements().len(), 1);
    }

    #[test]
    fn five_cycle_category_counts() {
        // 5 contexts in a ring, consecutive overlaps of one shared atom
        let s = scenario(&[
            &["s0", "m0", "s1"],
            &["s1", "m1", "s2"],
            &["s2", "m2", "s3"],
            &["s3", "m3", "s4"],
            &["s4", "m4", "s0"],
        ]);
        let cc = build_context_category(&s);
        // 5 maximal + 5 singleton overlaps + least
        assert_eq!(cc.len(), 11);
        assert_eq!(cc.maximal_elements().len(), 5);
        assert_eq!(cc.minimal_elements().len(), 5);
        assert!(cc.is_intersection_closed());
        assert!(!is_acyclic(&cc));
        let cycle = nontrivial_context_cycle(&cc).unwrap();
        assert!(cycle.len() >= 4);
        for (i, c) in cycle.iter().enumerate() {
            let next = &cycle[(i + 1) % cycle.len()];
            assert!(!c.intersection(next).is_empty());
        }
    }

    #[test]
    fn closure_is_iterated_not_just_pairwise() {
        // deep chain: the common atom x only appears via iterated meets
        let s = scenario(&[&["a2", "b", "q", "x"], &["b", "c", "w", "x"], &["a2", "c", "t", "x"]]);
        let cc = build_context_category(&s);
        assert!(cc.contains(&Context::from_labels(&["x"])));
        assert!(cc.is_intersection_closed());
        let down = downward_generated(&cc);
        assert!(!down.contains(&Context::from_labels(&["x"])));
        // maximal elements survive the downward reduction
        assert_eq!(down.maximal_elements().len(), 3);
    }

    #[test]
    fn acyclicity_cases() {
        // single context
        let s = scenario(&[&["a", "b", "c"]]);
        assert!(is_acyclic(&build_context_category(&s)));
        // disjoint contexts
        let s = scenario(&[&["a", "b"], &["c", "d"]]);
        assert!(is_acyclic(&build_context_category(&s)));
        // three contexts sharing one atom: a star, chordal
        let s = scenario(&[&["x", "a"], &["x", "b"], &["x", "c"]]);
        assert!(is_acyclic(&build_context_category(&s)));
        // three contexts in a triangle with distinct overlaps: still chordal
        let s = scenario(&[&["s0", "m0", "s1"], &["s1", "m1", "s2"], &["s2", "m2", "s0"]]);
        let cc = build_context_category(&s);
        assert!(is_acyclic(&cc));
        assert!(nontrivial_context_cycle(&cc).is_none());
        // four contexts in a ring: not chordal
        let s = scenario(&[
            &["s0", "m0", "s1"],
            &["s1", "m1", "s2"],
            &["s2", "m2", "s3"],
            &["s3", "m3", "s0"],
        ]);
        assert!(!is_acyclic(&build_context_category(&s)));
    }

    #[test]
    fn truncate_removes_least_only() {
        let s = scenario(&[&["a", "b"], &["b", "c"]]);
        let cc = build_context_category(&s);
        assert_eq!(cc.len(), 4);
        let t = truncate(&cc);
        assert_eq!(t.len(), 3);
        assert!(!t.has_least());
        assert_eq!(t.maximal_elements().len(), 2);
    }

    #[test]
    fn upward_recovers_contexts_through_joins() {
        // two contexts overlapping in one atom: minimals are {b}; joins stop
        let s = scenario(&[&["a", "b"], &["b", "c"]]);
        let cc = build_context_category(&s);
        let up = upward_generated(&cc);
        assert_eq!(
            up.elements().iter().filter(|c| !c.is_empty()).count(),
            1,
            "unique minimum collapses the upward reduction"
        );
        // ring of four: minimals are the four shared atoms; joins rebuild
        // each maximal context from its two endpoints
        let s = scenario(&[
            &["s0", "m0", "s1"],
            &["s1", "m1", "s2"],
            &["s2", "m2", "s3"],
            &["s3", "m3", "s0"],
        ]);
        let cc = build_context_category(&s);
        let up = upward_generated(&cc);
        assert_eq!(up.maximal_elements().len(), 4);
        assert_eq!(up.len(), cc.len());
    }

    #[test]
    fn min_max_identity_on_ring() {
        let s = scenario(&[
            &["s0", "m0", "s1"],
            &["s1", "m1", "s2"],
            &["s2", "m2", "s3"],
            &["s3", "m3", "s0"],
        ]);
        let cc = build_context_category(&s);
        let a = upward_generated(&downward_generated(&cc));
        let b = downward_generated(&upward_generated(&cc));
        let c = upward_generated(&b);
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn coarse_grain_identity_when_minimals_are_single_atoms() {
        let s = scenario(&[
            &["s0", "m0", "s1"],
            &["s1", "m1", "s2"],
            &["s2", "m2", "s3"],
            &["s3", "m3", "s0"],
        ]);
        let cg = coarse_grain(&s).unwrap();
        // shared atoms are singleton minimals and keep their labels; the
        // private atoms m_i are each context's remainder
        assert_eq!(cg.max_contexts().len(), 4);
        for c in cg.max_contexts() {
            assert_eq!(c.len(), 3);
            assert_eq!(
                c.labels().iter().filter(|l| l.starts_with("rest:")).count(),
                1
            );
        }
        // with dims, sums are preserved
        let dims: BTreeMap<Atom, u64> = s.atoms().iter().map(|a| (a.clone(), 1)).collect();
        let s = s.with_dims(dims, 3).unwrap();
        let cg = coarse_grain(&s).unwrap();
        assert_eq!(cg.d(), Some(3));
    }

    #[test]
    fn coarse_grain_keeps_full_single_context() {
        let s = scenario(&[&["a", "b", "c"]]);
        let cg = coarse_grain(&s).unwrap();
        // the whole context is its own minimal element
        assert_eq!(cg.max_contexts().len(), 1);
        assert_eq!(cg.max_contexts()[0].len(), 1);
        assert!(cg.max_contexts()[0].labels()[0].starts_with("cg:"));
    }

    #[test]
    fn scenario_from_poset_pads_missing_dimension() {
        let dims: BTreeMap<Atom, u64> = [("a", 1u64), ("b", 2), ("c", 1), ("x", 1)]
            .iter()
            .map(|(l, d)| (Atom::new(*l), *d))
            .collect();
        let s = Scenario::new(
            vec![Context::from_labels(&["a", "b", "x"]), Context::from_labels(&["c", "b", "x"])],
            Some(dims),
            Some(4),
        )
        .unwrap();
        let reduced = ContextCategory::from_elements([
            Context::from_labels(&["b", "x"]),
            Context::least(),
        ]);
        let out = scenario_from_poset(&reduced, &s).unwrap();
        assert_eq!(out.max_contexts().len(), 1);
        let c = &out.max_contexts()[0];
        assert_eq!(c.len(), 3);
        assert_eq!(out.d(), Some(4));
        let rest = c
            .labels()
            .into_iter()
            .find(|l| l.starts_with("rest:"))
            .unwrap();
        assert_eq!(out.dim_of(&Atom::new(rest)), Some(1));
    }

    #[test]
    fn compatibility_graph_shapes() {
        let s = scenario(&[&["a", "b", "c"]]);
        let g = compatibility_graph(&s);
        assert_eq!(g.edge_indices().len(), 3);
        let s = scenario(&[&["a", "b"], &["c", "d"]]);
        let g = compatibility_graph(&s);
        assert_eq!(g.edge_indices().len(), 2);
        assert!(!g.has_edge_labels("a", "c"));
    }

    #[test]
    fn join_is_unique_on_closed_categories() {
        let s = scenario(&[&["a", "b", "x"], &["b", "c", "x"], &["c", "d", "x"]]);
        let cc = build_context_category(&s);
        let bx = Context::from_labels(&["b", "x"]);
        let cx = Context::from_labels(&["c", "x"]);
        let j = cc.join(&bx, &cx).unwrap();
        assert_eq!(j, &Context::from_labels(&["b", "c", "x"]));
        // no element contains both outer contexts
        let ab = Context::from_labels(&["a", "b", "x"]);
        let cd = Context::from_labels(&["c", "d", "x"]);
        assert!(cc.join(&ab, &cd).is_none());
    }
}
