//! The contextuality verdict and its cross-checking oracles.
//!
//! The primary decision route colours the extended orthogonality graph
//! with d colours; a bounded search for a flat context connection serves
//! as an independent oracle on small instances, and the acyclicity
//! shortcut feeds the three-way classification.

use crate::algebra_core::{build_context_category, is_acyclic, Atom, Context, ContextCategory, Scenario};
use crate::extension::{extended_graph, maximal_extension, ExtensionError};
use crate::ortho_graph::{Colouring, OrthoGraph};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KsError {
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error("connection search bound exceeded ({0})")]
    TooLarge(String),
    #[error("maximal contexts do not all have the same size")]
    NotExtended,
}

/// Bijections between the atoms of every pair of maximal contexts,
/// inverse-symmetric and fixing shared atoms pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextConnection {
    maps: BTreeMap<(String, String), BTreeMap<Atom, Atom>>,
}

impl ContextConnection {
    fn empty() -> Self {
        ContextConnection {
            maps: BTreeMap::new(),
        }
    }

    fn insert_pair(&mut self, from: &Context, to: &Context, map: BTreeMap<Atom, Atom>) {
        let inverse: BTreeMap<Atom, Atom> =
            map.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        self.maps.insert((from.key(), to.key()), map);
        self.maps.insert((to.key(), from.key()), inverse);
    }

    pub fn transport(&self, from: &Context, to: &Context) -> Option<&BTreeMap<Atom, Atom>> {
        self.maps.get(&(from.key(), to.key()))
    }

    pub fn pair_count(&self) -> usize {
        self.maps.len() / 2
    }

    /// Replays the defining invariants: a bijection for every pair,
    /// inverse symmetry, identity on shared atoms.
    pub fn verify(&self, contexts: &[Context]) -> bool {
        for (i, ca) in contexts.iter().enumerate() {
            for cb in contexts.iter().skip(i + 1) {
                let Some(fwd) = self.transport(ca, cb) else {
                    return false;
                };
                let Some(bwd) = self.transport(cb, ca) else {
                    return false;
                };
                if fwd.len() != ca.len() || !fwd.keys().all(|a| ca.contains(a)) {
                    return false;
                }
                let mut image: Vec<&Atom> = fwd.values().collect();
                image.sort();
                image.dedup();
                if image.len() != cb.len() || !image.iter().all(|a| cb.contains(a)) {
                    return false;
                }
                if !fwd.iter().all(|(a, b)| bwd.get(b) == Some(a)) {
                    return false;
                }
                let shared = ca.intersection(cb);
                if !shared.atoms().iter().all(|a| fwd.get(a) == Some(a)) {
                    return false;
                }
            }
        }
        true
    }

    /// Composes the transports around a closed tuple of contexts.
    pub fn holonomy(&self, cycle: &[Context]) -> Option<BTreeMap<Atom, Atom>> {
        let first = cycle.first()?;
        let mut acc: BTreeMap<Atom, Atom> = first
            .atoms()
            .iter()
            .map(|a| (a.clone(), a.clone()))
            .collect();
        for i in 0..cycle.len() {
            let from = &cycle[i];
            let to = &cycle[(i + 1) % cycle.len()];
            let step = self.transport(from, to)?;
            for v in acc.values_mut() {
                *v = step.get(v)?.clone();
            }
        }
        Some(acc)
    }

    pub fn is_flat_on(&self, cycle: &[Context]) -> bool {
        match self.holonomy(cycle) {
            Some(h) => h.iter().all(|(a, b)| a == b),
            None => false,
        }
    }

    /// Rebuilds a connection from its exported witness form; the result
    /// still has to pass `verify` against the scenario's contexts.
    pub fn from_witness_maps(
        maps: &BTreeMap<String, BTreeMap<String, String>>,
    ) -> Option<ContextConnection> {
        let mut out = BTreeMap::new();
        for (k, m) in maps {
            let (f, t) = k.split_once(" => ")?;
            let parsed: BTreeMap<Atom, Atom> = m
                .iter()
                .map(|(a, b)| (Atom::new(a.clone()), Atom::new(b.clone())))
                .collect();
            out.insert((f.to_string(), t.to_string()), parsed);
        }
        Some(ContextConnection { maps: out })
    }
}

/// A noncontextuality witness, checkable by replaying its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KsWitness {
    DColouring(Colouring),
    FlatConnection {
        /// pairs as "from => to" over context keys
        maps: BTreeMap<String, BTreeMap<String, String>>,
    },
    ClassicalEmbedding {
        valuations: Vec<Vec<String>>,
        atom_to_valuations: BTreeMap<String, Vec<usize>>,
    },
}

impl KsWitness {
    pub fn from_connection(c: &ContextConnection) -> Self {
        let maps = c
            .maps
            .iter()
            .map(|((f, t), m)| {
                (
                    format!("{f} => {t}"),
                    m.iter()
                        .map(|(a, b)| (a.label().to_string(), b.label().to_string()))
                        .collect(),
                )
            })
            .collect();
        KsWitness::FlatConnection { maps }
    }
}

/// Certificate that no d-colouring exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsObstruction {
    /// chromatic number of the extended graph, strictly above d
    pub chi_gstar: usize,
    pub d: u64,
    /// hash of the exhausted colouring search instance
    pub trace_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsVerdict {
    pub contextual: bool,
    pub d: u64,
    pub chi_gstar: usize,
    pub witness: Option<KsWitness>,
    pub obstruction: Option<KsObstruction>,
}

/// Verdict for a bare orthogonality graph of rank-one events at ambient
/// dimension d: colourable means noncontextual.
pub fn graph_verdict(gs: &OrthoGraph, d: u64) -> KsVerdict {
    match gs.k_colouring(d as usize) {
        Some(col) => KsVerdict {
            contextual: false,
            d,
            chi_gstar: d as usize,
            witness: Some(KsWitness::DColouring(col)),
            obstruction: None,
        },
        None => {
            let (chi, _) = gs.chromatic_number();
            let mut hasher = Sha256::new();
            hasher.update(gs.to_dimacs());
            hasher.update(format!(":d={d}:chi={chi}"));
            let trace_hash = hasher
                .finalize()
                .iter()
                .map(|b| format!("{b:02x}"))
                .collect::<String>();
            KsVerdict {
                contextual: true,
                d,
                chi_gstar: chi,
                witness: None,
                obstruction: Some(KsObstruction {
                    chi_gstar: chi,
                    d,
                    trace_hash,
                }),
            }
        }
    }
}

/// Decides contextuality by colouring the extended orthogonality graph
/// with d colours.
pub fn is_ks_contextual(s: &Scenario) -> Result<KsVerdict, KsError> {
    let e = maximal_extension(s)?;
    let gs = extended_graph(&e);
    let d = e.extended().d().expect("extension fixes d");
    Ok(graph_verdict(&gs, d))
}

const MAX_CONNECTION_CONTEXTS: usize = 12;
const MAX_CONNECTION_BRANCHES: u128 = 5_000_000;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

struct ConnectionSearch {
    contexts: Vec<Context>,
    /// BFS tree edges (parent, child) in discovery order
    tree: Vec<(usize, usize)>,
    /// edges of the overlap graph outside the tree
    chords: Vec<(usize, usize)>,
    /// candidate bijections per tree edge
    choices: Vec<Vec<BTreeMap<Atom, Atom>>>,
}

impl ConnectionSearch {
    /// transports[i]: atoms of the component root -> atoms of context i
    fn solve(&self) -> Option<Vec<Option<BTreeMap<Atom, Atom>>>> {
        let mut transports: Vec<Option<BTreeMap<Atom, Atom>>> =
            vec![None; self.contexts.len()];
        for (i, c) in self.contexts.iter().enumerate() {
            let settled = self.tree.iter().any(|&(_, ch)| ch == i);
            if !settled {
                // component roots transport identically to themselves
                transports[i] = Some(
                    c.atoms()
                        .iter()
                        .map(|a| (a.clone(), a.clone()))
                        .collect(),
                );
            }
        }
        // roots persist; clear non-roots before search
        let roots: Vec<usize> = (0..self.contexts.len())
            .filter(|i| transports[*i].is_some())
            .collect();
        let mut state = vec![None; self.contexts.len()];
        for r in roots {
            state[r] = transports[r].take();
        }
        if self.descend(0, &mut state) {
            Some(state)
        } else {
            None
        }
    }

    fn descend(&self, edge: usize, state: &mut Vec<Option<BTreeMap<Atom, Atom>>>) -> bool {
        if edge == self.tree.len() {
            return true;
        }
        let (parent, child) = self.tree[edge];
        for choice in &self.choices[edge] {
            let parent_t = state[parent].as_ref().expect("BFS order settles parents");
            let t: BTreeMap<Atom, Atom> = parent_t
                .iter()
                .map(|(root_atom, pa)| (root_atom.clone(), choice[pa].clone()))
                .collect();
            state[child] = Some(t);
            if self.chords_ok(child, state) && self.descend(edge + 1, state) {
                return true;
            }
            state[child] = None;
        }
        false
    }

    /// Every chord between the fresh context and an already settled one
    /// must transport shared atoms identically.
    fn chords_ok(&self, fresh: usize, state: &[Option<BTreeMap<Atom, Atom>>]) -> bool {
        for &(i, j) in &self.chords {
            let other = if i == fresh {
                j
            } else if j == fresh {
                i
            } else {
                continue;
            };
            let Some(to) = state[other].as_ref() else {
                continue;
            };
            let from = state[fresh].as_ref().unwrap();
            let shared = self.contexts[fresh].intersection(&self.contexts[other]);
            // forced map is to . from^-1; identity on shared atoms means
            // both transports take the same root atom there
            let inverse: BTreeMap<&Atom, &Atom> =
                from.iter().map(|(r, a)| (a, r)).collect();
            for a in shared.atoms() {
                let root = inverse[a];
                if to[root] != *a {
                    return false;
                }
            }
        }
        true
    }
}

/// Searches for a context connection that is flat around every cycle of
/// the overlap graph, by free choice on a spanning forest and forced
/// transports across chords.
///
/// Returns None when the exhaustive search proves no flat connection
/// exists. Instances beyond the configured bounds are rejected instead of
/// silently truncated.
pub fn flat_connection_search(
    cc: &ContextCategory,
) -> Result<Option<ContextConnection>, KsError> {
    let contexts: Vec<Context> = cc.maximal_elements().into_iter().cloned().collect();
    let m = contexts.len();
    if m == 0 {
        return Ok(Some(ContextConnection::empty()));
    }
    if m > MAX_CONNECTION_CONTEXTS {
        return Err(KsError::TooLarge(format!(
            "{m} maximal contexts (limit {MAX_CONNECTION_CONTEXTS})"
        )));
    }
    let d = contexts[0].len();
    if contexts.iter().any(|c| c.len() != d) {
        return Err(KsError::NotExtended);
    }
    // overlap graph: edge iff shared atoms exist
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            if !contexts[i].intersection(&contexts[j]).is_empty() {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    // BFS spanning forest
    let mut seen = vec![false; m];
    let mut tree = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..m {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    tree.push((u, v));
                    queue.push_back(v);
                }
            }
        }
    }
    let tree_set: std::collections::BTreeSet<(usize, usize)> = tree
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();
    let mut chords = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            if adj[i][j] && !tree_set.contains(&(i, j)) {
                chords.push((i, j));
            }
        }
    }
    // candidate bijections per tree edge: fix the overlap, permute the rest
    let mut branches: u128 = 1;
    let mut choices = Vec::with_capacity(tree.len());
    for &(parent, child) in &tree {
        let shared = contexts[parent].intersection(&contexts[child]);
        let free_from: Vec<Atom> = contexts[parent]
            .atoms()
            .iter()
            .filter(|a| !shared.contains(a))
            .cloned()
            .collect();
        let free_to: Vec<Atom> = contexts[child]
            .atoms()
            .iter()
            .filter(|a| !shared.contains(a))
            .cloned()
            .collect();
        branches = branches.saturating_mul(factorial(free_from.len()));
        if branches > MAX_CONNECTION_BRANCHES {
            return Err(KsError::TooLarge(format!(
                "branch product exceeds {MAX_CONNECTION_BRANCHES}"
            )));
        }
        let maps = permutations(&free_to)
            .into_iter()
            .map(|perm| {
                let mut map: BTreeMap<Atom, Atom> = shared
                    .atoms()
                    .iter()
                    .map(|a| (a.clone(), a.clone()))
                    .collect();
                for (a, b) in free_from.iter().zip(perm) {
                    map.insert(a.clone(), b);
                }
                map
            })
            .collect();
        choices.push(maps);
    }
    let search = ConnectionSearch {
        contexts: contexts.clone(),
        tree,
        chords,
        choices,
    };
    let Some(transports) = search.solve() else {
        return Ok(None);
    };
    // component id per context, to separate transported pairs from free ones
    let mut comp = vec![usize::MAX; m];
    for i in 0..m {
        if comp[i] != usize::MAX {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([i]);
        comp[i] = i;
        while let Some(u) = queue.pop_front() {
            for v in 0..m {
                if adj[u][v] && comp[v] == usize::MAX {
                    comp[v] = i;
                    queue.push_back(v);
                }
            }
        }
    }
    let mut conn = ContextConnection::empty();
    for i in 0..m {
        for j in (i + 1)..m {
            let map: BTreeMap<Atom, Atom> = if comp[i] == comp[j] {
                let ti = transports[i].as_ref().unwrap();
                let tj = transports[j].as_ref().unwrap();
                ti.iter().map(|(r, a)| (a.clone(), tj[r].clone())).collect()
            } else {
                // no cycle crosses components; match atoms positionally
                contexts[i]
                    .atoms()
                    .iter()
                    .cloned()
                    .zip(contexts[j].atoms().iter().cloned())
                    .collect()
            };
            conn.insert_pair(&contexts[i], &contexts[j], map);
        }
    }
    debug_assert!(conn.verify(&contexts));
    Ok(Some(conn))
}

/// Enumerates the simple cycles (length >= 3) of the overlap graph and
/// checks the connection's holonomy around each. Test oracle; exponential.
pub fn flat_on_all_simple_cycles(conn: &ContextConnection, contexts: &[Context]) -> bool {
    let m = contexts.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            if !contexts[i].intersection(&contexts[j]).is_empty() {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    fn dfs(
        adj: &[Vec<bool>],
        start: usize,
        path: &mut Vec<usize>,
        contexts: &[Context],
        conn: &ContextConnection,
    ) -> bool {
        let last = *path.last().unwrap();
        for next in (start + 1)..adj.len() {
            if !adj[last][next] || path.contains(&next) {
                continue;
            }
            path.push(next);
            if path.len() >= 3 && adj[next][start] {
                let cycle: Vec<Context> = path.iter().map(|&i| contexts[i].clone()).collect();
                if !conn.is_flat_on(&cycle) {
                    return false;
                }
            }
            if !dfs(adj, start, path, contexts, conn) {
                return false;
            }
            path.pop();
        }
        true
    }
    for start in 0..m {
        let mut path = vec![start];
        if !dfs(&adj, start, &mut path, contexts, conn) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassicalityLabel {
    #[serde(rename = "FULLY_CLASSICAL")]
    FullyClassical,
    #[serde(rename = "KS_NONCONTEXTUAL_WITH_NONCLASSICAL_CORRELATIONS")]
    KsNoncontextualWithNonclassicalCorrelations,
    #[serde(rename = "KS_CONTEXTUAL")]
    KsContextual,
}

impl std::fmt::Display for ClassicalityLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassicalityLabel::FullyClassical => "FULLY_CLASSICAL",
            ClassicalityLabel::KsNoncontextualWithNonclassicalCorrelations => {
                "KS_NONCONTEXTUAL_WITH_NONCLASSICAL_CORRELATIONS"
            }
            ClassicalityLabel::KsContextual => "KS_CONTEXTUAL",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalityReport {
    pub label: ClassicalityLabel,
    pub acyclic: bool,
    #[serde(rename = "chi_Gstar")]
    pub chi_gstar: usize,
    pub d: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<KsWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<KsObstruction>,
}

/// Three-way classification: acyclic scenarios are fully classical,
/// cyclic but d-colourable ones keep nonclassical correlations, and the
/// rest are contextual.
pub fn classify(s: &Scenario) -> Result<ClassicalityReport, KsError> {
    let cc = build_context_category(s);
    let acyclic = is_acyclic(&cc);
    let v = is_ks_contextual(s)?;
    let label = if v.contextual {
        ClassicalityLabel::KsContextual
    } else if acyclic {
        ClassicalityLabel::FullyClassical
    } else {
        ClassicalityLabel::KsNoncontextualWithNonclassicalCorrelations
    };
    Ok(ClassicalityReport {
        label,
        acyclic,
        chi_gstar: v.chi_gstar,
        d: v.d,
        witness: v.witness,
        obstruction: v.obstruction,
    })
}

/// Classification for a bare rank-one orthogonality graph: contexts are
/// its maximal cliques, so acyclicity is chordality of the graph itself.
pub fn classify_graph(g: &OrthoGraph, d: u64) -> ClassicalityReport {
    let acyclic = g.is_chordal();
    let v = graph_verdict(g, d);
    let label = if v.contextual {
        ClassicalityLabel::KsContextual
    } else if acyclic {
        ClassicalityLabel::FullyClassical
    } else {
        ClassicalityLabel::KsNoncontextualWithNonclassicalCorrelations
    };
    ClassicalityReport {
        label,
        acyclic,
        chi_gstar: v.chi_gstar,
        d: v.d,
        witness: v.witness,
        obstruction: v.obstruction,
    }
}
