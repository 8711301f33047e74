//! Dimension functions for orthogonality graphs.
//!
//! A dimension function assigns a positive integer to every vertex so that
//! each maximal clique sums to a common total d. Existence is decided and
//! minimized exactly: the clique incidence system is analysed once over the
//! rationals, each candidate d is screened with a Hermite normal form
//! solvability check over arbitrary-precision integers, and surviving
//! candidates go to a clique-pruned backtracking search that returns the
//! lexicographically smallest assignment.

use crate::ortho_graph::OrthoGraph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiophantineError {
    #[error("no dimension function exists with d <= {0}")]
    NoSolutionUpTo(u64),
    #[error("more than {cap} solutions")]
    CapExceeded { cap: usize },
}

/// A dimension assignment: every listed clique sums to `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimSolution {
    pub d: u64,
    pub dims: BTreeMap<String, u64>,
}

impl DimSolution {
    /// Exact check of every clique equation.
    pub fn satisfies(&self, max_cliques: &[Vec<String>]) -> bool {
        self.dims.values().all(|&v| v >= 1)
            && max_cliques.iter().all(|c| {
                c.iter()
                    .map(|v| self.dims.get(v).copied().unwrap_or(0))
                    .sum::<u64>()
                    == self.d
            })
    }
}

/// Outcome of the one-time rational analysis of the clique system.
enum RationalAnalysis {
    /// Inconsistent over the rationals, so over the integers too, for
    /// every d.
    Infeasible,
    /// Some coordinate is forced to a nonpositive multiple of d.
    ForcedNonpositive,
    /// Solvable; `forced` lists coordinates whose value must equal
    /// d times the given rational.
    Solvable { forced: Vec<(usize, BigRational)> },
}

/// Row-reduces the system (clique sums = 1) and extracts forced
/// coordinates: a coordinate is forced when its column is a pivot and the
/// pivot row touches no free column.
fn rational_analysis(incidence: &[Vec<u8>], n: usize) -> RationalAnalysis {
    let mut rows: Vec<Vec<BigRational>> = incidence
        .iter()
        .map(|r| {
            r.iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .chain(std::iter::once(BigRational::one()))
                .collect()
        })
        .collect();
    let ncols = n + 1;
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut pivot_row = 0;
    for col in 0..n {
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
        pivots.push((pivot_row, col));
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    for r in rows.iter().skip(pivot_row) {
        if !r[n].is_zero() {
            return RationalAnalysis::Infeasible;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut forced = Vec::new();
    for &(r, c) in &pivots {
        let touches_free = (0..n)
            .any(|c2| c2 != c && !pivot_cols.contains(&c2) && !rows[r][c2].is_zero());
        if touches_free {
            continue;
        }
        let value = rows[r][n].clone();
        if value <= BigRational::zero() {
            return RationalAnalysis::ForcedNonpositive;
        }
        forced.push((c, value));
    }
    RationalAnalysis::Solvable { forced }
}

/// Column Hermite normal form over arbitrary-precision integers.
///
/// Column operations are unimodular, so `H y = b` is integer-solvable iff
/// the original system is.
fn column_hnf(mut h: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let nrows = h.len();
    let mut pivot_col = 0;
    for row in 0..nrows {
        if pivot_col >= ncols {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in pivot_col..ncols {
                if h[row][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(b) if h[row][j].abs() < h[row][b].abs() => best = Some(j),
                    _ => {}
                }
            }
            let Some(b) = best else { break };
            if b != pivot_col {
                for r in 0..nrows {
                    h[r].swap(pivot_col, b);
                }
            }
            let mut done = true;
            for j in (pivot_col + 1)..ncols {
                if h[row][j].is_zero() {
                    continue;
                }
                let q = h[row][j].div_floor(&h[row][pivot_col]);
                for r in 0..nrows {
                    let sub = &q * &h[r][pivot_col];
                    h[r][j] -= sub;
                }
                if !h[row][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[row][pivot_col].is_zero() {
            continue;
        }
        if h[row][pivot_col].is_negative() {
            for r in 0..nrows {
                h[r][pivot_col] = -h[r][pivot_col].clone();
            }
        }
        // normalize entries left of the pivot into [0, pivot)
        for j in 0..pivot_col {
            if h[row][j].is_zero() {
                continue;
            }
            let q = h[row][j].div_floor(&h[row][pivot_col]);
            if !q.is_zero() {
                for r in 0..nrows {
                    let sub = &q * &h[r][pivot_col];
                    h[r][j] -= sub;
                }
            }
        }
        pivot_col += 1;
    }
    h
}

/// Whether the clique system has any integer solution at this d
/// (signs unconstrained). Sound as a pruning step: a positive solution is
/// in particular an integer one.
fn integer_feasible(hnf: &[Vec<BigInt>], ncols: usize, d: u64) -> bool {
    let nrows = hnf.len();
    let b = BigInt::from(d);
    let mut y = vec![BigInt::zero(); ncols];
    let mut assigned = vec![false; ncols];
    let mut next_col = 0;
    for row in 0..nrows {
        let mut acc = BigInt::zero();
        for (j, yj) in y.iter().enumerate() {
            if assigned[j] && !hnf[row][j].is_zero() {
                acc += &hnf[row][j] * yj;
            }
        }
        let pivot = (next_col..ncols).find(|&j| !hnf[row][j].is_zero());
        match pivot {
            Some(j) => {
                let rem = &b - &acc;
                let (q, r) = rem.div_rem(&hnf[row][j]);
                if !r.is_zero() {
                    return false;
                }
                y[j] = q;
                assigned[j] = true;
                next_col = j + 1;
            }
            None => {
                if acc != b {
                    return false;
                }
            }
        }
    }
    true
}

struct Search<'a> {
    vertices: &'a [String],
    d: u64,
    /// clique -> member vertex indices
    cliques: Vec<Vec<usize>>,
    /// vertex -> indices of cliques containing it
    member_of: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn run(
        &self,
        cap: Option<usize>,
        out: &mut Vec<DimSolution>,
    ) -> Result<(), DiophantineError> {
        if self.cliques.iter().any(|c| c.is_empty()) {
            // an empty clique sums to 0 < d
            return Ok(());
        }
        let mut dims = vec![0u64; self.vertices.len()];
        let mut sums = vec![0u64; self.cliques.len()];
        let mut left: Vec<u64> = self.cliques.iter().map(|c| c.len() as u64).collect();
        self.step(0, &mut dims, &mut sums, &mut left, cap, out)
    }

    fn step(
        &self,
        v: usize,
        dims: &mut Vec<u64>,
        sums: &mut Vec<u64>,
        left: &mut Vec<u64>,
        cap: Option<usize>,
        out: &mut Vec<DimSolution>,
    ) -> Result<(), DiophantineError> {
        if v == self.vertices.len() {
            // clique equality was enforced when each last member was set
            let dims_map = self
                .vertices
                .iter()
                .cloned()
                .zip(dims.iter().copied())
                .collect();
            out.push(DimSolution {
                d: self.d,
                dims: dims_map,
            });
            if let Some(cap) = cap {
                if out.len() > cap {
                    return Err(DiophantineError::CapExceeded { cap });
                }
            }
            return Ok(());
        }
        // each unassigned clique member needs at least 1, so the value of
        // this vertex is capped by every clique it belongs to
        let mut ub = self.d;
        for &ci in &self.member_of[v] {
            let room = self.d.saturating_sub(sums[ci] + (left[ci] - 1));
            ub = ub.min(room);
        }
        if ub < 1 {
            return Ok(());
        }
        for value in 1..=ub {
            let mut ok = true;
            for &ci in &self.member_of[v] {
                let s = sums[ci] + value;
                let l = left[ci] - 1;
                if s + l > self.d || (l == 0 && s != self.d) {
                    ok = false;
                    break;
                }
            }
            if ok {
                dims[v] = value;
                for &ci in &self.member_of[v] {
                    sums[ci] += value;
                    left[ci] -= 1;
                }
                let res = self.step(v + 1, dims, sums, left, cap, out);
                for &ci in &self.member_of[v] {
                    sums[ci] -= value;
                    left[ci] += 1;
                }
                dims[v] = 0;
                res?;
                if cap.is_none() && !out.is_empty() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

fn prepare<'a>(
    g: &'a OrthoGraph,
    max_cliques: &[Vec<String>],
) -> (Vec<String>, Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<Vec<u8>>) {
    let vertices: Vec<String> = g.vertices().to_vec();
    let index: BTreeMap<&String, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let cliques: Vec<Vec<usize>> = max_cliques
        .iter()
        .map(|c| c.iter().map(|v| index[v]).collect())
        .collect();
    let mut member_of = vec![Vec::new(); vertices.len()];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            member_of[v].push(ci);
        }
    }
    let incidence: Vec<Vec<u8>> = cliques
        .iter()
        .map(|c| {
            let mut row = vec![0u8; vertices.len()];
            for &v in c {
                row[v] = 1;
            }
            row
        })
        .collect();
    (vertices, cliques, member_of, incidence)
}

/// A forced coordinate must land on a positive integer at this d.
fn forced_ok(forced: &[(usize, BigRational)], d: u64) -> bool {
    let d = BigRational::from(BigInt::from(d));
    forced.iter().all(|(_, v)| {
        let scaled = v * &d;
        scaled.is_integer() && scaled >= BigRational::one()
    })
}

/// Finds the dimension function with minimal total d, searching
/// d from the largest clique size up to `d_max`. Ties at the minimal d are
/// broken by the lexicographically smallest assignment in vertex order.
pub fn solve_dimension_function(
    g: &OrthoGraph,
    max_cliques: &[Vec<String>],
    d_max: u64,
) -> Result<DimSolution, DiophantineError> {
    let (vertices, cliques, member_of, incidence) = prepare(g, max_cliques);
    if vertices.is_empty() {
        return Ok(DimSolution {
            d: 1,
            dims: BTreeMap::new(),
        });
    }
    let analysis = rational_analysis(&incidence, vertices.len());
    let forced = match analysis {
        RationalAnalysis::Infeasible | RationalAnalysis::ForcedNonpositive => {
            return Err(DiophantineError::NoSolutionUpTo(d_max))
        }
        RationalAnalysis::Solvable { forced } => forced,
    };
    let hnf_input: Vec<Vec<BigInt>> = incidence
        .iter()
        .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let hnf = column_hnf(hnf_input, vertices.len());
    let omega = max_cliques.iter().map(|c| c.len() as u64).max().unwrap_or(1);
    for d in omega..=d_max {
        if !forced_ok(&forced, d) {
            continue;
        }
        if !cliques.is_empty() && !integer_feasible(&hnf, vertices.len(), d) {
            continue;
        }
        let search = Search {
            vertices: &vertices,
            d,
            cliques: cliques.clone(),
            member_of: member_of.clone(),
        };
        let mut out = Vec::new();
        search.run(None, &mut out)?;
        if let Some(sol) = out.into_iter().next() {
            debug_assert!(sol.satisfies(max_cliques));
            return Ok(sol);
        }
    }
    Err(DiophantineError::NoSolutionUpTo(d_max))
}

/// Exhaustively enumerates dimension functions at a fixed d, in
/// lexicographic order of the assignment. Errors out past `cap` solutions.
pub fn all_dimension_functions(
    g: &OrthoGraph,
    max_cliques: &[Vec<String>],
    d: u64,
    cap: usize,
) -> Result<Vec<DimSolution>, DiophantineError> {
    let (vertices, cliques, member_of, _) = prepare(g, max_cliques);
    if vertices.is_empty() {
        return Ok(vec![DimSolution {
            d,
            dims: BTreeMap::new(),
        }]);
    }
    let search = Search {
        vertices: &vertices,
        d,
        cliques,
        member_of,
    };
    let mut out = Vec::new();
    search.run(Some(cap), &mut out)?;
    debug_assert!(out.iter().all(|s| s.satisfies(max_cliques)));
    Ok(out)
}
