//! Exact vector and subspace realisations of orthogonality graphs.
//!
//! Vectors are canonical primitive integer tuples (gcd one, first nonzero
//! coordinate positive), so distinct values mean distinct rays. Projections
//! of rank above one are represented by subspaces in reduced row echelon
//! form over the rationals. Orthogonality is decided by exact integer and
//! rational arithmetic only.

use crate::algebra_core::Scenario;
use crate::ortho_graph::OrthoGraph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Errors for realisation construction and checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizationError {
    #[error("vectors {0:?} and {1:?} are the same ray")]
    DuplicateRay(String, String),
    #[error("vector {label:?} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        label: String,
        expected: usize,
        got: usize,
    },
    #[error("vector {0:?} is zero")]
    ZeroVector(String),
    #[error("vertices {0:?} and {1:?} map to the same subspace")]
    NotFaithful(String, String),
    #[error("orthogonality of {0:?} and {1:?} disagrees with the edge set")]
    NotConstraintPreserving(String, String),
    #[error("completion did not close after {0} rounds")]
    NonClosing(usize),
    #[error("vertex {0:?} missing from the realisation")]
    MissingVertex(String),
}

/// A ray, stored as the canonical primitive integer vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector {
    coords: Vec<BigInt>,
}

impl RationalVector {
    /// Canonicalises an integer vector; `None` for the zero vector.
    pub fn new(coords: Vec<BigInt>) -> Option<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return None;
        }
        let mut g = BigInt::zero();
        for c in &coords {
            g = g.gcd(c);
        }
        let mut coords: Vec<BigInt> = coords.into_iter().map(|c| c / &g).collect();
        let first = coords.iter().find(|c| !c.is_zero()).unwrap();
        if first.is_negative() {
            for c in &mut coords {
                *c = -c.clone();
            }
        }
        Some(RationalVector { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Option<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Canonicalises a rational vector by clearing denominators.
    pub fn from_rationals(coords: &[BigRational]) -> Option<Self> {
        let mut lcm = BigInt::one();
        for c in coords {
            lcm = lcm.lcm(c.denom());
        }
        Self::new(coords.iter().map(|c| (c * &lcm).to_integer()).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &RationalVector) -> BigInt {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn is_orthogonal(&self, other: &RationalVector) -> bool {
        self.dot(other).is_zero()
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_rows(
            self.dim(),
            vec![self.coords.iter().map(|c| BigRational::from(c.clone())).collect()],
        )
    }
}

/// A linear subspace of rational d-space in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Vec<BigRational>>,
}

impl Subspace {
    /// Builds the row space of the given rows (canonicalised by RREF).
    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<BigRational>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ambient_dim));
        Subspace {
            ambient_dim,
            rows: rref(ambient_dim, rows),
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[&RationalVector]) -> Self {
        let rows = vectors
            .iter()
            .map(|v| v.coords().iter().map(|c| BigRational::from(c.clone())).collect())
            .collect();
        Subspace::from_rows(ambient_dim, rows)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Basis rows scaled to canonical primitive integer vectors.
    pub fn integer_rows(&self) -> Vec<RationalVector> {
        self.rows
            .iter()
            .map(|r| RationalVector::from_rationals(r).expect("RREF rows are nonzero"))
            .collect()
    }

    /// Every vector of `self` orthogonal to every vector of `other`.
    pub fn is_orthogonal(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|a| {
            other
                .rows
                .iter()
                .all(|b| dot_rat(a, b).is_zero())
        })
    }

    pub fn contains_vector(&self, v: &RationalVector) -> bool {
        let mut r: Vec<BigRational> = v
            .coords()
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        reduce_row(&mut r, &self.rows);
        r.iter().all(|c| c.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.integer_rows().iter().all(|v| self.contains_vector(v))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.clone());
        Subspace::from_rows(self.ambient_dim, rows)
    }

    /// Orthogonal complement within the ambient space.
    pub fn orthogonal_complement(&self) -> Subspace {
        // nullspace of the RREF matrix: one basis vector per free column
        let n = self.ambient_dim;
        let pivots: Vec<usize> = self
            .rows
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); n];
            v[free] = BigRational::one();
            for (ri, &p) in pivots.iter().enumerate() {
                v[p] = -self.rows[ri][free].clone();
            }
            basis.push(v);
        }
        Subspace::from_rows(n, basis)
    }
}

fn dot_rat(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Subtracts multiples of the RREF rows to reduce `r`.
fn reduce_row(r: &mut [BigRational], rows: &[Vec<BigRational>]) {
    for row in rows {
        let p = row.iter().position(|c| !c.is_zero()).unwrap();
        if !r[p].is_zero() {
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
    }
}

/// Reduced row echelon form; the result is the unique canonical basis of
/// the row space, so equality of outputs is equality of subspaces.
fn rref(ncols: usize, mut rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let lead = rows[pivot_row][col].clone();
        for c in rows[pivot_row].iter_mut() {
            *c /= &lead;
        }
        for r2 in 0..rows.len() {
            if r2 != pivot_row && !rows[r2][col].is_zero() {
                let f = rows[r2][col].clone();
                for c2 in 0..ncols {
                    let sub = &f * &rows[pivot_row][c2];
                    rows[r2][c2] -= sub;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    rows
}

/// A vertex-to-subspace assignment; distinct vertices map to distinct
/// subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realisation {
    ambient_dim: usize,
    map: BTreeMap<String, Subspace>,
}

impl Realisation {
    pub fn new(
        ambient_dim: usize,
        map: BTreeMap<String, Subspace>,
    ) -> Result<Self, RealizationError> {
        let entries: Vec<(&String, &Subspace)> = map.iter().collect();
        for (i, (la, sa)) in entries.iter().enumerate() {
            for (lb, sb) in entries.iter().skip(i + 1) {
                if sa == sb {
                    return Err(RealizationError::NotFaithful(
                        (*la).clone(),
                        (*lb).clone(),
                    ));
                }
            }
        }
        Ok(Realisation { ambient_dim, map })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn get(&self, label: &str) -> Option<&Subspace> {
        self.map.get(label)
    }

    pub fn labels(&self) -> Vec<String> {
        self.map.keys().cloned().collect()
    }

    pub fn subspaces(&self) -> &BTreeMap<String, Subspace> {
        &self.map
    }

    pub fn is_rank_one(&self) -> bool {
        self.map.values().all(|s| s.dim() == 1)
    }
}

/// Builds the orthogonality graph of a family of rays.
///
/// Vertices are the given labels; edges are exact zero dot products.
/// Duplicate rays and dimension mismatches are rejected.
pub fn graph_from_vectors(
    d: usize,
    vectors: &[(String, RationalVector)],
) -> Result<(OrthoGraph, Realisation), RealizationError> {
    for (label, v) in vectors {
        if v.dim() != d {
            return Err(RealizationError::DimensionMismatch {
                label: label.clone(),
                expected: d,
                got: v.dim(),
            });
        }
    }
    let mut by_ray: BTreeMap<&RationalVector, &String> = BTreeMap::new();
    for (label, v) in vectors {
        if let Some(prev) = by_ray.insert(v, label) {
            return Err(RealizationError::DuplicateRay(prev.clone(), label.clone()));
        }
    }
    let mut labels: Vec<String> = vectors.iter().map(|(l, _)| l.clone()).collect();
    labels.sort();
    let lookup: BTreeMap<&String, &RationalVector> =
        vectors.iter().map(|(l, v)| (l, v)).collect();
    let mut edges = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in labels.iter().skip(i + 1) {
            if lookup[a].is_orthogonal(lookup[b]) {
                edges.push((a.clone(), b.clone()));
            }
        }
    }
    let g = OrthoGraph::new(&labels, &edges).expect("labels are unique");
    let map: BTreeMap<String, Subspace> = vectors
        .iter()
        .map(|(l, v)| (l.clone(), v.to_subspace()))
        .collect();
    let r = Realisation::new(d, map)?;
    Ok((g, r))
}

/// Checks that subspace orthogonality coincides with the edge set.
pub fn validate_realisation(r: &Realisation, g: &OrthoGraph) -> Result<(), RealizationError> {
    for v in g.vertices() {
        if r.get(v).is_none() {
            return Err(RealizationError::MissingVertex(v.clone()));
        }
    }
    let vs = g.vertices();
    for (i, a) in vs.iter().enumerate() {
        for b in vs.iter().skip(i + 1) {
            let ortho = r.get(a).unwrap().is_orthogonal(r.get(b).unwrap());
            if ortho != g.has_edge_labels(a, b) {
                return Err(RealizationError::NotConstraintPreserving(
                    a.clone(),
                    b.clone(),
                ));
            }
        }
    }
    Ok(())
}

/// True iff every listed clique consists of pairwise orthogonal subspaces
/// whose dimensions sum to the ambient dimension.
pub fn is_unital(r: &Realisation, max_cliques: &[Vec<String>]) -> bool {
    for clique in max_cliques {
        let Some(subs): Option<Vec<&Subspace>> =
            clique.iter().map(|v| r.get(v)).collect()
        else {
            return false;
        };
        for (i, a) in subs.iter().enumerate() {
            for b in subs.iter().skip(i + 1) {
                if !a.is_orthogonal(b) {
                    return false;
                }
            }
        }
        let total: usize = subs.iter().map(|s| s.dim()).sum();
        if total != r.ambient_dim() {
            return false;
        }
    }
    true
}

/// What `complete` did: fresh vertices and complements that merged with an
/// existing subspace.
#[derive(Debug, Clone, Default)]
pub struct CompletionLog {
    /// (new vertex label, clique it completes)
    pub added: Vec<(String, Vec<String>)>,
    /// (existing label the complement collided with, clique)
    pub aliased: Vec<(String, Vec<String>)>,
}

const COMPLETION_ROUNDS: usize = 32;

/// Adjoins complement vertices to deficient maximal cliques until every
/// maximal clique sums to the identity.
///
/// New vertices are labelled `cmpl:<sorted clique labels joined with |>`;
/// complements equal to an existing subspace are recorded as aliases
/// instead of being added twice. Edges are recomputed exactly each round.
pub fn complete(
    r: &Realisation,
    g: &OrthoGraph,
) -> Result<(OrthoGraph, Realisation, CompletionLog), RealizationError> {
    validate_realisation(r, g)?;
    let d = r.ambient_dim();
    let mut map = r.subspaces().clone();
    let mut log = CompletionLog::default();
    for _round in 0..COMPLETION_ROUNDS {
        let g = graph_of_subspaces(&map);
        let cliques = g.maximal_cliques();
        let mut fresh: Vec<(String, Vec<String>, Subspace)> = Vec::new();
        for clique in &cliques {
            let span = clique
                .iter()
                .fold(Subspace::zero(d), |acc, v| acc.sum(&map[v]));
            if span.dim() == d {
                continue;
            }
            let cmpl = span.orthogonal_complement();
            if let Some(existing) = map.iter().find(|(_, s)| **s == cmpl) {
                log.aliased.push((existing.0.clone(), clique.clone()));
                continue;
            }
            if let Some(pending) = fresh.iter().find(|(_, _, s)| *s == cmpl) {
                log.aliased.push((pending.0.clone(), clique.clone()));
                continue;
            }
            let label = format!("cmpl:{}", clique.join("|"));
            fresh.push((label, clique.clone(), cmpl));
        }
        if fresh.is_empty() {
            let r = Realisation::new(d, map)?;
            return Ok((g, r, log));
        }
        for (label, clique, s) in fresh {
            map.insert(label.clone(), s);
            log.added.push((label, clique));
        }
    }
    Err(RealizationError::NonClosing(COMPLETION_ROUNDS))
}

fn graph_of_subspaces(map: &BTreeMap<String, Subspace>) -> OrthoGraph {
    let labels: Vec<String> = map.keys().cloned().collect();
    let mut edges = Vec::new();
    for (i, a) in labels.iter().enumerate() {
        for b in labels.iter().skip(i + 1) {
            if map[a].is_orthogonal(&map[b]) {
                edges.push((a.clone(), b.clone()));
            }
        }
    }
    OrthoGraph::new(&labels, &edges).expect("labels are unique")
}

/// Outcome of the free-completability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeCompletionReport {
    pub free: bool,
    /// Two deficient cliques whose complements coincide.
    pub alias_pair: Option<(Vec<String>, Vec<String>)>,
    /// A deficient clique whose complement is orthogonal to the named
    /// vertex outside the clique.
    pub outside_orthogonal: Option<(Vec<String>, String)>,
}

/// Checks that deficient cliques have pairwise distinct complements and
/// that each complement is orthogonal only to its own clique.
pub fn is_freely_completable(r: &Realisation, g: &OrthoGraph) -> FreeCompletionReport {
    let d = r.ambient_dim();
    let cliques = g.maximal_cliques();
    let mut deficient: Vec<(Vec<String>, Subspace)> = Vec::new();
    for clique in &cliques {
        let span = clique
            .iter()
            .fold(Subspace::zero(d), |acc, v| acc.sum(r.get(v).expect("validated")));
        if span.dim() < d {
            deficient.push((clique.clone(), span.orthogonal_complement()));
        }
    }
    for (i, (ca, sa)) in deficient.iter().enumerate() {
        for (cb, sb) in deficient.iter().skip(i + 1) {
            if sa == sb {
                return FreeCompletionReport {
                    free: false,
                    alias_pair: Some((ca.clone(), cb.clone())),
                    outside_orthogonal: None,
                };
            }
        }
    }
    for (clique, cmpl) in &deficient {
        let members: BTreeSet<&String> = clique.iter().collect();
        for v in g.vertices() {
            if members.contains(v) {
                continue;
            }
            if cmpl.is_orthogonal(r.get(v).expect("validated")) {
                return FreeCompletionReport {
                    free: false,
                    alias_pair: None,
                    outside_orthogonal: Some((clique.clone(), v.clone())),
                };
            }
        }
    }
    FreeCompletionReport {
        free: true,
        alias_pair: None,
        outside_orthogonal: None,
    }
}

/// True iff every triangle of the compatibility graph lies inside one
/// maximal context.
pub fn check_specker(s: &Scenario) -> bool {
    let g = crate::algebra_core::compatibility_graph(s);
    let n = g.vertex_count();
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.has_edge(i, j) {
                continue;
            }
            for k in (j + 1)..n {
                if !g.has_edge(i, k) || !g.has_edge(j, k) {
                    continue;
                }
                let (a, b, c) = (g.label(i), g.label(j), g.label(k));
                let inside = s.max_contexts().iter().any(|ctx| {
                    ctx.contains(&crate::algebra_core::Atom::new(a))
                        && ctx.contains(&crate::algebra_core::Atom::new(b))
                        && ctx.contains(&crate::algebra_core::Atom::new(c))
                });
                if !inside {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::Context;

    fn rv(coords: &[i64]) -> RationalVector {
        RationalVector::from_i64(coords).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(rv(&[2, 4, 6]), rv(&[1, 2, 3]));
        assert_eq!(rv(&[-1, 2, 0]), rv(&[1, -2, 0]));
        assert_eq!(rv(&[0, -3, 3]), rv(&[0, 1, -1]));
        assert!(RationalVector::from_i64(&[0, 0, 0]).is_none());
        // idempotent
        let v = rv(&[-6, 9, -3]);
        let w = RationalVector::new(v.coords().to_vec()).unwrap();
        assert_eq!(v, w);
        // first nonzero positive
        assert!(v.coords()[0] > num_bigint::BigInt::from(0));
    }

    #[test]
    fn standard_basis_gives_complete_graph() {
        let vecs = vec![
            ("e1".to_string(), rv(&[1, 0, 0])),
            ("e2".to_string(), rv(&[0, 1, 0])),
            ("e3".to_string(), rv(&[0, 0, 1])),
        ];
        let (g, r) = graph_from_vectors(3, &vecs).unwrap();
        assert_eq!(g.edge_indices().len(), 3);
        assert!(is_unital(&r, &g.maximal_cliques()));
        assert!(validate_realisation(&r, &g).is_ok());
    }

    #[test]
    fn duplicate_ray_rejected() {
        let vecs = vec![
            ("a".to_string(), rv(&[1, 0, 0])),
            ("b".to_string(), rv(&[2, 0, 0])),
        ];
        let err = graph_from_vectors(3, &vecs).unwrap_err();
        assert_eq!(
            err,
            RealizationError::DuplicateRay("a".into(), "b".into())
        );
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let vecs = vec![
            ("a".to_string(), rv(&[1, 0, 0])),
            ("b".to_string(), rv(&[0, 1])),
        ];
        let err = graph_from_vectors(3, &vecs).unwrap_err();
        assert!(matches!(err, RealizationError::DimensionMismatch { .. }));
    }

    #[test]
    fn subspace_rref_is_canonical() {
        let a = Subspace::from_vectors(3, &[&rv(&[1, 1, 0]), &rv(&[0, 1, 1])]);
        let b = Subspace::from_vectors(3, &[&rv(&[1, 0, -1]), &rv(&[1, 2, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        let c = a.orthogonal_complement();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.integer_rows()[0], rv(&[1, -1, 1]));
        assert!(a.is_orthogonal(&c));
        assert!(a.sum(&c).dim() == 3);
    }

    #[test]
    fn complement_of_two_orthogonal_vectors_is_cross_product() {
        let vecs = vec![
            ("a".to_string(), rv(&[1, 0, 1])),
            ("b".to_string(), rv(&[1, 0, -1])),
        ];
        let (g, r) = graph_from_vectors(3, &vecs).unwrap();
        let (cg, cr, log) = complete(&r, &g).unwrap();
        assert_eq!(cg.vertex_count(), 3);
        assert_eq!(log.added.len(), 1);
        let (label, clique) = &log.added[0];
        assert_eq!(label, "cmpl:a|b");
        assert_eq!(clique, &vec!["a".to_string(), "b".to_string()]);
        // cross product of (1,0,1) and (1,0,-1) is the y axis
        assert_eq!(cr.get(label).unwrap().integer_rows()[0], rv(&[0, 1, 0]));
        assert!(is_unital(&cr, &cg.maximal_cliques()));
    }

    #[test]
    fn complete_is_identity_on_unital_input() {
        let vecs = vec![
            ("e1".to_string(), rv(&[1, 0, 0])),
            ("e2".to_string(), rv(&[0, 1, 0])),
            ("e3".to_string(), rv(&[0, 0, 1])),
        ];
        let (g, r) = graph_from_vectors(3, &vecs).unwrap();
        let (cg, cr, log) = complete(&r, &g).unwrap();
        assert_eq!(cg.vertex_count(), 3);
        assert!(log.added.is_empty());
        assert_eq!(cr.subspaces().len(), r.subspaces().len());
    }

    #[test]
    fn shared_plane_blocks_free_completion() {
        // two 2-cliques spanning the same plane share a complement
        let vecs = vec![
            ("a".to_string(), rv(&[1, 0, 0])),
            ("b".to_string(), rv(&[0, 1, 0])),
            ("c".to_string(), rv(&[1, 1, 0])),
            ("e".to_string(), rv(&[1, -1, 0])),
        ];
        let (g, r) = graph_from_vectors(3, &vecs).unwrap();
        let report = is_freely_completable(&r, &g);
        assert!(!report.free);
        assert!(report.alias_pair.is_some());
        // completion still works, recording the alias
        let (cg, cr, log) = complete(&r, &g).unwrap();
        assert_eq!(log.added.len(), 1);
        assert_eq!(log.aliased.len(), 1);
        assert_eq!(cg.vertex_count(), 5);
        assert!(is_unital(&cr, &cg.maximal_cliques()));
    }

    #[test]
    fn outside_orthogonality_blocks_free_completion() {
        let vecs = vec![
            ("a".to_string(), rv(&[1, 0, 0])),
            ("b".to_string(), rv(&[0, 1, 0])),
            ("v".to_string(), rv(&[1, 1, 0])),
        ];
        let (g, r) = graph_from_vectors(3, &vecs).unwrap();
        // cliques: {a,b} and {v}; complement of {a,b} is the z axis, which
        // is orthogonal to v
        let report = is_freely_completable(&r, &g);
        assert!(!report.free);
        let (clique, vertex) = report.outside_orthogonal.unwrap();
        assert_eq!(clique, vec!["a".to_string(), "b".to_string()]);
        assert_eq!(vertex, "v");
    }

    #[test]
    fn specker_check() {
        let one = Scenario::new(
            vec![Context::from_labels(&["a", "b", "c"])],
            None,
            None,
        )
        .unwrap();
        assert!(check_specker(&one));
        // triangle of pairwise overlaps with no common context
        let tri = Scenario::new(
            vec![
                Context::from_labels(&["a", "b", "p"]),
                Context::from_labels(&["b", "c", "q"]),
                Context::from_labels(&["a", "c", "r"]),
            ],
            None,
            None,
        )
        .unwrap();
        assert!(!check_specker(&tri));
    }

    #[test]
    fn rank_two_subspace_realisation_is_supported() {
        let plane = Subspace::from_vectors(3, &[&rv(&[1, 0, 0]), &rv(&[0, 1, 0])]);
        let axis = rv(&[0, 0, 1]).to_subspace();
        let map: BTreeMap<String, Subspace> =
            [("plane".to_string(), plane), ("z".to_string(), axis)]
                .into_iter()
                .collect();
        let r = Realisation::new(3, map).unwrap();
        assert!(!r.is_rank_one());
        let g = OrthoGraph::new(&["plane", "z"], &[("plane", "z")]).unwrap();
        assert!(validate_realisation(&r, &g).is_ok());
        assert!(is_unital(&r, &g.maximal_cliques()));
    }
}
