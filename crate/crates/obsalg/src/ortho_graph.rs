//! Finite orthogonality graphs with exact combinatorial algorithms.
//!
//! Vertices carry string labels and keep a fixed order (the order given at
//! construction, typically lexicographic). All algorithms are deterministic:
//! the same graph always yields the same cliques, the same chromatic witness
//! and the same valuation enumeration order.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Errors for graph construction and colouring queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("self loop on vertex {0:?}")]
    SelfLoop(String),
    #[error("clique {clique:?} has size {} but colour count is {expected}", clique.len())]
    CliqueSizeMismatch { clique: Vec<String>, expected: usize },
    #[error("enumeration exceeded cap of {cap}")]
    CapExceeded { cap: usize },
}

/// A vertex colouring using colours `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    /// Number of colours used (colours range over `0..k`).
    pub k: usize,
    /// Vertex label to colour.
    pub map: BTreeMap<String, usize>,
}

impl Colouring {
    /// The vertices of one colour, sorted.
    pub fn colour_class(&self, c: usize) -> BTreeSet<String> {
        self.map
            .iter()
            .filter(|(_, col)| **col == c)
            .map(|(v, _)| v.clone())
            .collect()
    }
}

/// A valuation: an independent set meeting every maximal clique exactly once.
pub type Valuation = BTreeSet<String>;

/// An undirected graph with ordered, labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoGraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
}

impl OrthoGraph {
    /// Builds a graph from vertex labels (order preserved) and label pairs.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in edges {
            let a = a.as_ref();
            let b = b.as_ref();
            let &i = index
                .get(a)
                .ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
            let &j = index
                .get(b)
                .ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
            if i == j {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            adj[i][j] = true;
            adj[j][i] = true;
        }
        let neighbors = (0..n)
            .map(|i| (0..n).filter(|&j| adj[i][j]).collect())
            .collect();
        Ok(OrthoGraph {
            labels,
            index,
            adj,
            neighbors,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn has_edge_labels(&self, a: &str, b: &str) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.adj[i][j],
            _ => false,
        }
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.adj[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Edges as label pairs, ordered like [`Self::edge_indices`].
    pub fn edges(&self) -> Vec<(String, String)> {
        self.edge_indices()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// All maximal cliques in canonical order.
    ///
    /// Each clique is sorted by vertex index; the list is sorted
    /// lexicographically by those index sequences. Isolated vertices appear
    /// as singleton cliques. Bron-Kerbosch with pivoting.
    pub fn maximal_cliques(&self) -> Vec<Vec<String>> {
        self.maximal_clique_indices()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.labels[i].clone()).collect())
            .collect()
    }

    /// Index form of [`Self::maximal_cliques`].
    pub fn maximal_clique_indices(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        if n == 0 {
            return Vec::new();
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..n).collect();
        let x = Vec::new();
        self.bron_kerbosch(&mut r, p, x, &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        // pivot: vertex of P union X with most neighbours in P
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| (p.iter().filter(|&&v| self.adj[u][v]).count(), usize::MAX - u))
            .unwrap();
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !self.adj[pivot][v]).collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let np: Vec<usize> = p.iter().copied().filter(|&w| self.adj[v][w]).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&w| self.adj[v][w]).collect();
            r.push(v);
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        self.maximal_clique_indices()
            .iter()
            .map(|c| c.len())
            .max()
            .unwrap_or(0)
    }

    /// Exact chromatic number together with a canonical witness colouring.
    ///
    /// Sweeps k upward from the clique number; each k is decided by
    /// backtracking with a pre-coloured maximum clique and forward pruning.
    /// The witness colours are relabelled so that colour numbers appear in
    /// first-use order along the vertex order.
    pub fn chromatic_number(&self) -> (usize, Colouring) {
        let n = self.vertex_count();
        if n == 0 {
            return (
                0,
                Colouring {
                    k: 0,
                    map: BTreeMap::new(),
                },
            );
        }
        let omega = self.clique_number();
        let mut k = omega.max(1);
        loop {
            if let Some(cols) = self.k_colouring_indices(k) {
                return (k, self.canonical_colouring(&cols, k));
            }
            k += 1;
            assert!(k <= n, "colouring sweep exceeded vertex count");
        }
    }

    /// Proper colouring with colours `0..k`, if one exists.
    pub fn k_colouring(&self, k: usize) -> Option<Colouring> {
        self.k_colouring_indices(k)
            .map(|cols| self.canonical_colouring(&cols, k))
    }

    fn canonical_colouring(&self, cols: &[usize], k: usize) -> Colouring {
        // relabel colours in order of first use so witnesses are canonical
        let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = 0usize;
        let mut map = BTreeMap::new();
        for (i, &c) in cols.iter().enumerate() {
            let nc = *relabel.entry(c).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            });
            map.insert(self.labels[i].clone(), nc);
        }
        Colouring { k, map }
    }

    fn k_colouring_indices(&self, k: usize) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n == 0 {
            return Some(Vec::new());
        }
        if k == 0 {
            return None;
        }
        // pre-colour one maximum clique to cut colour symmetry
        let cliques = self.maximal_clique_indices();
        let best = cliques.iter().max_by_key(|c| c.len()).cloned().unwrap_or_default();
        if best.len() > k {
            return None;
        }
        let mut cols: Vec<Option<usize>> = vec![None; n];
        for (c, &v) in best.iter().enumerate() {
            cols[v] = Some(c);
        }
        // static order: pre-coloured clique first, then by degree (desc), index (asc)
        let mut rest: Vec<usize> = (0..n).filter(|v| cols[*v].is_none()).collect();
        rest.sort_by_key(|&v| (usize::MAX - self.neighbors[v].len(), v));
        let order: Vec<usize> = best.iter().copied().chain(rest).collect();
        let start = best.len();
        let mut used_max = best.len(); // colours 0..used_max are in use
        if self.colour_backtrack(&order, start, k, &mut cols, &mut used_max) {
            Some(cols.into_iter().map(|c| c.unwrap()).collect())
        } else {
            None
        }
    }

    fn colour_backtrack(
        &self,
        order: &[usize],
        pos: usize,
        k: usize,
        cols: &mut Vec<Option<usize>>,
        used_max: &mut usize,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // a fresh colour beyond used_max is equivalent to colour used_max
        let limit = k.min(*used_max + 1);
        for c in 0..limit {
            if self.neighbors[v].iter().any(|&w| cols[w] == Some(c)) {
                continue;
            }
            cols[v] = Some(c);
            let bumped = c == *used_max;
            if bumped {
                *used_max += 1;
            }
            if self.colour_backtrack(order, pos + 1, k, cols, used_max) {
                return true;
            }
            if bumped {
                *used_max -= 1;
            }
            cols[v] = None;
        }
        false
    }

    /// Proper colouring with colours `0..d` such that every clique in
    /// `max_cliques` receives each colour exactly once.
    ///
    /// Every listed clique must have exactly `d` vertices
    /// ([`GraphError::CliqueSizeMismatch`] otherwise); injectivity on a
    /// size-`d` clique then forces full colour coverage.
    pub fn d_colouring(
        &self,
        max_cliques: &[Vec<String>],
        d: usize,
    ) -> Result<Option<Colouring>, GraphError> {
        for c in max_cliques {
            if c.len() != d {
                return Err(GraphError::CliqueSizeMismatch {
                    clique: c.clone(),
                    expected: d,
                });
            }
            for v in c {
                if !self.index.contains_key(v) {
                    return Err(GraphError::UnknownVertex(v.clone()));
                }
            }
        }
        Ok(self.k_colouring(d))
    }

    /// One valuation with respect to the given maximal cliques, if any.
    pub fn ks_colouring(
        &self,
        max_cliques: &[Vec<String>],
    ) -> Result<Option<Valuation>, GraphError> {
        let cliques = self.resolve_cliques(max_cliques)?;
        let mut chosen = Vec::new();
        let mut out = Vec::new();
        self.valuation_backtrack(&cliques, 0, &mut chosen, &mut out, 1);
        Ok(out.pop().map(|ix| self.to_valuation(&ix)))
    }

    /// All valuations, in a canonical order, unless more than `cap` exist.
    ///
    /// `cap` defaults to 1,000,000. Exceeding it is an error rather than a
    /// silent truncation. Valuations only contain vertices that appear in at
    /// least one of the given cliques.
    pub fn enumerate_valuations(
        &self,
        max_cliques: &[Vec<String>],
        cap: Option<usize>,
    ) -> Result<Vec<Valuation>, GraphError> {
        let cap = cap.unwrap_or(1_000_000);
        let cliques = self.resolve_cliques(max_cliques)?;
        let mut chosen = Vec::new();
        let mut out = Vec::new();
        let overflow =
            self.valuation_backtrack(&cliques, 0, &mut chosen, &mut out, cap.saturating_add(1));
        if overflow && out.len() > cap {
            return Err(GraphError::CapExceeded { cap });
        }
        let mut vals: Vec<Valuation> = out.iter().map(|ix| self.to_valuation(ix)).collect();
        vals.sort();
        Ok(vals)
    }

    fn resolve_cliques(&self, max_cliques: &[Vec<String>]) -> Result<Vec<Vec<usize>>, GraphError> {
        let mut cliques = Vec::with_capacity(max_cliques.len());
        for c in max_cliques {
            let mut ix = Vec::with_capacity(c.len());
            for v in c {
                ix.push(
                    self.vertex_index(v)
                        .ok_or_else(|| GraphError::UnknownVertex(v.clone()))?,
                );
            }
            ix.sort_unstable();
            cliques.push(ix);
        }
        cliques.sort();
        Ok(cliques)
    }

    fn to_valuation(&self, ix: &[usize]) -> Valuation {
        ix.iter().map(|&i| self.labels[i].to_string()).collect()
    }

    /// Picks one vertex per clique, keeping the picks independent; cliques
    /// are complete, so independence already caps each clique at one pick.
    /// Returns true when `limit` valuations were collected (stop signal).
    fn valuation_backtrack(
        &self,
        cliques: &[Vec<usize>],
        ci: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        if ci == cliques.len() {
            let mut v = chosen.clone();
            v.sort_unstable();
            out.push(v);
            return out.len() >= limit;
        }
        if cliques[ci].iter().any(|v| chosen.contains(v)) {
            return self.valuation_backtrack(cliques, ci + 1, chosen, out, limit);
        }
        for &v in &cliques[ci] {
            if chosen.iter().any(|&u| self.adj[u][v]) {
                continue;
            }
            chosen.push(v);
            if self.valuation_backtrack(cliques, ci + 1, chosen, out, limit) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Chordality via Lex-BFS and a perfect elimination ordering check.
    pub fn is_chordal(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let order = self.lex_bfs();
        self.is_peo(&order)
    }

    /// Lex-BFS visit order (ties broken by smallest vertex index).
    fn lex_bfs(&self) -> Vec<usize> {
        let n = self.vertex_count();
        // partition refinement over a list of buckets
        let mut buckets: Vec<Vec<usize>> = vec![(0..n).collect()];
        let mut order = Vec::with_capacity(n);
        while let Some(first) = buckets.first_mut() {
            let v = first.remove(0);
            order.push(v);
            let mut next: Vec<Vec<usize>> = Vec::new();
            for b in buckets.into_iter() {
                let (hit, miss): (Vec<usize>, Vec<usize>) =
                    b.into_iter().partition(|&w| self.adj[v][w]);
                if !hit.is_empty() {
                    next.push(hit);
                }
                if !miss.is_empty() {
                    next.push(miss);
                }
            }
            buckets = next;
        }
        order
    }

    /// Checks that the reverse of `order` is a perfect elimination ordering.
    fn is_peo(&self, order: &[usize]) -> bool {
        let n = self.vertex_count();
        let mut pos = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        // reverse Lex-BFS order: eliminate order[n-1], then order[n-2], ...
        // v's parent = earlier-ordered neighbour closest to v; all earlier
        // neighbours of v must be adjacent to the parent
        for (p, &v) in order.iter().enumerate().rev() {
            let earlier: Vec<usize> = self.neighbors[v]
                .iter()
                .copied()
                .filter(|&w| pos[w] < p)
                .collect();
            if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
                for &w in &earlier {
                    if w != parent && !self.adj[parent][w] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exhaustive search for an induced cycle of length at least four.
    ///
    /// Returns the cycle's vertex indices in path order. Exponential; meant
    /// as an independent cross-check for [`Self::is_chordal`] on small
    /// graphs.
    pub fn find_chordless_cycle(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        // grow induced paths whose minimum vertex is the start, closing when
        // the last vertex is adjacent to the start and the path length is >= 4
        for s in 0..n {
            let mut path = vec![s];
            let mut on_path = vec![false; n];
            on_path[s] = true;
            if let Some(cycle) = self.chordless_dfs(s, &mut path, &mut on_path) {
                return Some(cycle);
            }
        }
        None
    }

    fn chordless_dfs(
        &self,
        s: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
    ) -> Option<Vec<usize>> {
        let last = *path.last().unwrap();
        for &w in &self.neighbors[last] {
            if w <= s || on_path[w] {
                continue;
            }
            // interior path vertices (all but the first and last) must not
            // touch w, otherwise the final cycle would have a chord
            let interior: &[usize] = if path.len() >= 2 {
                &path[1..path.len() - 1]
            } else {
                &[]
            };
            if interior.iter().any(|&u| self.adj[u][w]) {
                continue;
            }
            if path.len() >= 2 && self.adj[s][w] {
                if path.len() + 1 >= 4 {
                    let mut c = path.clone();
                    c.push(w);
                    return Some(c);
                }
                // closing too early; extending past w would leave the chord w-s
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if let Some(c) = self.chordless_dfs(s, path, on_path) {
                return Some(c);
            }
            on_path[w] = false;
            path.pop();
        }
        None
    }

    /// DIMACS colouring format; 1-indexed vertices, labels in comments.
    pub fn to_dimacs(&self) -> String {
        let n = self.vertex_count();
        let edges = self.edge_indices();
        let mut s = String::new();
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("c vertex {} = {}\n", i + 1, l));
        }
        s.push_str(&format!("p edge {} {}\n", n, edges.len()));
        for (i, j) in edges {
            s.push_str(&format!("e {} {}\n", i + 1, j + 1));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> OrthoGraph {
        let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .map(|i| (format!("v{i}"), format!("v{}", (i + 1) % n)))
            .collect();
        OrthoGraph::new(&verts, &edges).unwrap()
    }

    fn complete_graph(n: usize) -> OrthoGraph {
        let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((format!("v{i}"), format!("v{j}")));
            }
        }
        OrthoGraph::new(&verts, &edges).unwrap()
    }

    #[test]
    fn construction_errors() {
        let e = OrthoGraph::new(&["a", "a"], &[]).unwrap_err();
        assert_eq!(e, GraphError::DuplicateVertex("a".into()));
        let e = OrthoGraph::new(&["a", "b"], &[("a", "c")]).unwrap_err();
        assert_eq!(e, GraphError::UnknownVertex("c".into()));
        let e = OrthoGraph::new(&["a"], &[("a", "a")]).unwrap_err();
        assert_eq!(e, GraphError::SelfLoop("a".into()));
    }

    #[test]
    fn cliques_of_small_graphs() {
        let g = complete_graph(4);
        assert_eq!(g.maximal_cliques(), vec![vec!["v0", "v1", "v2", "v3"]]);
        let g = cycle_graph(5);
        assert_eq!(g.maximal_cliques().len(), 5);
        // isolated vertex shows up as a singleton clique
        let g = OrthoGraph::new(&["a", "b", "c"], &[("a", "b")]).unwrap();
        assert_eq!(g.maximal_cliques(), vec![vec!["a", "b"], vec!["c"]]);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(complete_graph(4).chromatic_number().0, 4);
        assert_eq!(cycle_graph(4).chromatic_number().0, 2);
        assert_eq!(cycle_graph(5).chromatic_number().0, 3);
        assert_eq!(cycle_graph(7).chromatic_number().0, 3);
        let (k, w) = cycle_graph(6).chromatic_number();
        assert_eq!(k, 2);
        // witness is proper
        let g = cycle_graph(6);
        for (a, b) in g.edges() {
            assert_ne!(w.map[&a], w.map[&b]);
        }
        // canonical: first vertex has colour 0
        assert_eq!(w.map["v0"], 0);
    }

    #[test]
    fn chromatic_matches_brute_force_on_random_graphs() {
        // 300 seeded graphs, up to 12 vertices
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for case in 0..300 {
            let n = rng.gen_range(1..=12usize);
            let p = rng.gen_range(10..=80u32);
            let verts: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_range(0..100u32) < p {
                        edges.push((verts[i].clone(), verts[j].clone()));
                    }
                }
            }
            let g = OrthoGraph::new(&verts, &edges).unwrap();
            let (chi, wit) = g.chromatic_number();
            for (a, b) in g.edges() {
                assert_ne!(wit.map[&a], wit.map[&b], "case {case}");
            }
            let brute = brute_force_chromatic(&g);
            assert_eq!(chi, brute, "case {case}: chi mismatch");
            assert!(chi >= g.clique_number(), "case {case}");
        }
    }

    // exhaustive DFS in natural vertex order; no clique seeding, no static
    // reordering, only the canonical first-use colour bound
    fn brute_force_chromatic(g: &OrthoGraph) -> usize {
        fn dfs(g: &OrthoGraph, v: usize, k: usize, used: usize, cols: &mut Vec<usize>) -> bool {
            if v == g.vertex_count() {
                return true;
            }
            let top = k.min(used + 1);
            for c in 0..top {
                if (0..v).any(|u| g.has_edge(u, v) && cols[u] == c) {
                    continue;
                }
                cols[v] = c;
                if dfs(g, v + 1, k, used.max(c + 1), cols) {
                    return true;
                }
            }
            false
        }
        let n = g.vertex_count();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut cols = vec![0usize; n];
            if dfs(g, 0, k, 0, &mut cols) {
                return k;
            }
        }
        unreachable!()
    }

    #[test]
    fn brute_force_chromatic_helper_is_sound() {
        assert_eq!(brute_force_chromatic(&cycle_graph(5)), 3);
        assert_eq!(brute_force_chromatic(&complete_graph(3)), 3);
    }

    #[test]
    fn d_colouring_clique_size_checked() {
        let g = complete_graph(3);
        let cliques = g.maximal_cliques();
        let err = g.d_colouring(&cliques, 4).unwrap_err();
        assert!(matches!(err, GraphError::CliqueSizeMismatch { .. }));
        let ok = g.d_colouring(&cliques, 3).unwrap().unwrap();
        assert_eq!(ok.map.values().collect::<BTreeSet<_>>().len(), 3);
    }

    #[test]
    fn valuations_of_a_triangle() {
        let g = complete_graph(3);
        let cliques = g.maximal_cliques();
        let vals = g.enumerate_valuations(&cliques, None).unwrap();
        assert_eq!(vals.len(), 3);
        for v in &vals {
            assert_eq!(v.len(), 1);
        }
    }

    #[test]
    fn valuations_of_two_disjoint_edges() {
        let g = OrthoGraph::new(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let cliques = g.maximal_cliques();
        let vals = g.enumerate_valuations(&cliques, None).unwrap();
        assert_eq!(vals.len(), 4);
    }

    #[test]
    fn valuation_cap_is_an_error() {
        let g = OrthoGraph::new(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let cliques = g.maximal_cliques();
        let err = g.enumerate_valuations(&cliques, Some(3)).unwrap_err();
        assert_eq!(err, GraphError::CapExceeded { cap: 3 });
    }

    #[test]
    fn odd_cycle_has_no_valuation() {
        // exactly-one-per-edge on an odd cycle is impossible
        let g = cycle_graph(5);
        let cliques = g.maximal_cliques();
        assert_eq!(g.ks_colouring(&cliques).unwrap(), None);
        let g = cycle_graph(6);
        let cliques = g.maximal_cliques();
        assert!(g.ks_colouring(&cliques).unwrap().is_some());
        assert_eq!(g.enumerate_valuations(&cliques, None).unwrap().len(), 2);
    }

    #[test]
    fn chordality_basics() {
        assert!(complete_graph(5).is_chordal());
        assert!(cycle_graph(3).is_chordal());
        assert!(!cycle_graph(4).is_chordal());
        assert!(!cycle_graph(6).is_chordal());
        // a tree is chordal
        let g = OrthoGraph::new(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d")])
            .unwrap();
        assert!(g.is_chordal());
        // C4 plus a chord is chordal
        let g = OrthoGraph::new(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")],
        )
        .unwrap();
        assert!(g.is_chordal());
    }

    #[test]
    fn chordality_matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for case in 0..300 {
            let n = rng.gen_range(1..=10usize);
            let p = rng.gen_range(10..=90u32);
            let verts: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_range(0..100u32) < p {
                        edges.push((verts[i].clone(), verts[j].clone()));
                    }
                }
            }
            let g = OrthoGraph::new(&verts, &edges).unwrap();
            let cycle = g.find_chordless_cycle();
            assert_eq!(
                g.is_chordal(),
                cycle.is_none(),
                "case {case}: n={n} edges={:?} cycle={cycle:?}",
                g.edge_indices()
            );
            if let Some(c) = cycle {
                assert!(c.len() >= 4, "case {case}");
                for (pos, &u) in c.iter().enumerate() {
                    for (qos, &v) in c.iter().enumerate().skip(pos + 1) {
                        let consecutive = qos == pos + 1 || (pos == 0 && qos == c.len() - 1);
                        assert_eq!(g.has_edge(u, v), consecutive, "case {case}");
                    }
                }
            }
        }
    }

    #[test]
    fn dimacs_shape() {
        let g = cycle_graph(4);
        let s = g.to_dimacs();
        assert!(s.contains("p edge 4 4"));
        assert!(s.contains("e 1 2"));
        assert!(s.contains("c vertex 1 = v0"));
    }
}
