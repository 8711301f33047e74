//! Built-in scenarios, vector sets, embeddings, and seeded generators.
//!
//! Vector tables are stored as the printed integer tuples and only
//! canonicalised when a graph is built from them, so exports stay
//! bit-identical to the source tables.

use crate::algebra_core::{Atom, Context, Scenario};
use crate::correlations::{Functional, Rat, State};
use crate::realization::RationalVector;
use num_bigint::BigInt;
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid overlap layout: {0}")]
    InvalidOverlap(String),
    #[error("bad vector table: {0}")]
    BadVector(String),
}

/// A classical embedding presented as a table: a finite point set and one
/// support per event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingTable {
    pub lambda_points: Vec<String>,
    pub event_supports: BTreeMap<String, BTreeSet<String>>,
}

/// Checks that the table is a faithful embedding: supports are keyed by
/// exactly the scenario's atoms, every context's supports partition the
/// point set, and distinct atoms have distinct supports.
pub fn verify_embedding(s: &Scenario, e: &EmbeddingTable) -> bool {
    let atoms: BTreeSet<String> = s.atoms().iter().map(|a| a.label().to_string()).collect();
    let keyed: BTreeSet<String> = e.event_supports.keys().cloned().collect();
    if atoms != keyed {
        return false;
    }
    let lambda: BTreeSet<&String> = e.lambda_points.iter().collect();
    if lambda.len() != e.lambda_points.len() {
        return false;
    }
    for support in e.event_supports.values() {
        if !support.iter().all(|p| lambda.contains(p)) {
            return false;
        }
    }
    for c in s.max_contexts() {
        let mut seen: BTreeSet<&String> = BTreeSet::new();
        let mut total = 0;
        for a in c.labels() {
            let support = &e.event_supports[&a];
            total += support.len();
            seen.extend(support.iter());
        }
        if total != e.lambda_points.len() || seen.len() != total {
            return false;
        }
    }
    let supports: Vec<&BTreeSet<String>> = e.event_supports.values().collect();
    for (i, a) in supports.iter().enumerate() {
        for b in supports.iter().skip(i + 1) {
            if a == b {
                return false;
            }
        }
    }
    true
}

const SIGNS: [char; 2] = ['+', '-'];

/// Measurement pair names and the atom label for a joint outcome.
fn chsh_atom(pair: &str, sa: char, sb: char) -> String {
    format!("{pair}:{sa}{sb}")
}

/// The four measurement contexts are glued pairwise along their shared
/// marginal: the `+` block of one with the `-` block of the other, and
/// vice versa, giving 12 four-atom contexts over 16 joint-outcome atoms.
pub fn chsh() -> (Scenario, EmbeddingTable) {
    let pairs = ["ab", "ab2", "a2b", "a2b2"];
    let mut contexts = Vec::new();
    for pair in pairs {
        let atoms: Vec<String> = SIGNS
            .iter()
            .flat_map(|&sa| SIGNS.iter().map(move |&sb| chsh_atom(pair, sa, sb)))
            .collect();
        contexts.push(Context::from_labels(&atoms));
    }
    // (pair_x, pair_y, shared measurement is the first party?)
    let gluings = [
        ("ab", "ab2", true),
        ("a2b", "a2b2", true),
        ("ab", "a2b", false),
        ("ab2", "a2b2", false),
    ];
    for (px, py, first_party) in gluings {
        for &sign in &SIGNS {
            let other = if sign == '+' { '-' } else { '+' };
            let mut atoms = Vec::new();
            for &t in &SIGNS {
                if first_party {
                    atoms.push(chsh_atom(px, sign, t));
                    atoms.push(chsh_atom(py, other, t));
                } else {
                    atoms.push(chsh_atom(px, t, sign));
                    atoms.push(chsh_atom(py, t, other));
                }
            }
            contexts.push(Context::from_labels(&atoms));
        }
    }
    let dims: BTreeMap<Atom, u64> = contexts
        .iter()
        .flat_map(|c| c.atoms().iter().cloned())
        .map(|a| (a, 1))
        .collect();
    let s = Scenario::new(contexts, Some(dims), Some(4)).expect("catalog scenario is valid");

    // hidden-variable points: one sign per measurement, order a,a2,b,b2
    let mut lambda_points = Vec::new();
    for &a in &SIGNS {
        for &a2 in &SIGNS {
            for &b in &SIGNS {
                for &b2 in &SIGNS {
                    lambda_points.push(format!("{a}{a2}{b}{b2}"));
                }
            }
        }
    }
    let measurement_of = |pair: &str| -> (usize, usize) {
        match pair {
            "ab" => (0, 2),
            "ab2" => (0, 3),
            "a2b" => (1, 2),
            "a2b2" => (1, 3),
            _ => unreachable!(),
        }
    };
    let mut event_supports: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for pair in pairs {
        let (ia, ib) = measurement_of(pair);
        for &sa in &SIGNS {
            for &sb in &SIGNS {
                let support = lambda_points
                    .iter()
                    .filter(|p| {
                        let cs: Vec<char> = p.chars().collect();
                        cs[ia] == sa && cs[ib] == sb
                    })
                    .cloned()
                    .collect();
                event_supports.insert(chsh_atom(pair, sa, sb), support);
            }
        }
    }
    let table = EmbeddingTable {
        lambda_points,
        event_supports,
    };
    (s, table)
}

/// The four correlation events: equal signs for ab, ab2, a2b and opposite
/// signs for a2b2, one unit coefficient each.
pub fn chsh_functional() -> Functional {
    let mut atoms: BTreeMap<String, Rat> = BTreeMap::new();
    for pair in ["ab", "ab2", "a2b"] {
        atoms.insert(chsh_atom(pair, '+', '+'), Rat::from(BigInt::from(1)));
        atoms.insert(chsh_atom(pair, '-', '-'), Rat::from(BigInt::from(1)));
    }
    atoms.insert(chsh_atom("a2b2", '+', '-'), Rat::from(BigInt::from(1)));
    atoms.insert(chsh_atom("a2b2", '-', '+'), Rat::from(BigInt::from(1)));
    Functional {
        coeffs: [("*".to_string(), atoms)].into_iter().collect(),
        approx: false,
    }
}

fn state_from_measurement_probs(
    s: &Scenario,
    per_pair: &dyn Fn(&str, char, char) -> Rat,
) -> State {
    let mut probs: BTreeMap<String, BTreeMap<String, Rat>> = BTreeMap::new();
    for c in s.max_contexts() {
        let dist = c
            .labels()
            .into_iter()
            .map(|l| {
                let (pair, signs) = l.split_once(':').expect("atom label shape");
                let mut cs = signs.chars();
                let (sa, sb) = (cs.next().unwrap(), cs.next().unwrap());
                let p = per_pair(pair, sa, sb);
                (l, p)
            })
            .collect();
        probs.insert(c.key(), dist);
    }
    State::new(s, probs).expect("catalog state is well formed")
}

/// The no-signalling box saturating the functional at 4: perfectly
/// correlated on ab, ab2, a2b and anticorrelated on a2b2.
pub fn pr_box_state(s: &Scenario) -> State {
    state_from_measurement_probs(s, &|pair, sa, sb| {
        let correlated = pair != "a2b2";
        let equal = sa == sb;
        if correlated == equal {
            Rat::new(BigInt::from(1), BigInt::from(2))
        } else {
            Rat::from(BigInt::from(0))
        }
    })
}

/// Rational stand-in for the quantum-optimal box; each winning event gets
/// 853/1000, so the functional evaluates to 853/250. Marked approximate.
pub fn tsirelson_demo_state(s: &Scenario) -> State {
    state_from_measurement_probs(s, &|pair, sa, sb| {
        let correlated = pair != "a2b2";
        let equal = sa == sb;
        if correlated == equal {
            Rat::new(BigInt::from(853), BigInt::from(2000))
        } else {
            Rat::new(BigInt::from(147), BigInt::from(2000))
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YuOhVariant {
    Thirteen,
    Fifteen,
}

/// The printed three-dimensional vector table (13 rays, or the 15-ray
/// variant where h0 is replaced by x01, x02, x03). Tuples are verbatim.
pub fn yu_oh_raw(variant: YuOhVariant) -> (usize, Vec<(String, Vec<i64>)>) {
    let mut v: Vec<(&str, Vec<i64>)> = vec![
        ("z1", vec![1, 0, 0]),
        ("z2", vec![0, 1, 0]),
        ("z3", vec![0, 0, 1]),
        ("y1+", vec![0, 1, 1]),
        ("y2+", vec![1, 0, 1]),
        ("y3+", vec![1, 1, 0]),
        ("y1-", vec![0, 1, -1]),
        ("y2-", vec![1, 0, -1]),
        ("y3-", vec![1, -1, 0]),
        ("h1", vec![-1, 1, 1]),
        ("h2", vec![1, -1, 1]),
        ("h3", vec![1, 1, -1]),
    ];
    match variant {
        YuOhVariant::Thirteen => {
            v.insert(9, ("h0", vec![1, 1, 1]));
        }
        YuOhVariant::Fifteen => {
            v.push(("x01", vec![-2, 1, 1]));
            v.push(("x02", vec![1, -2, 1]));
            v.push(("x03", vec![1, 1, -2]));
        }
    }
    (3, v.into_iter().map(|(l, c)| (l.to_string(), c)).collect())
}

/// Canonicalised rays for computation.
pub fn yu_oh(variant: YuOhVariant) -> (usize, Vec<(String, RationalVector)>) {
    let (d, raw) = yu_oh_raw(variant);
    let vectors = raw
        .into_iter()
        .map(|(l, c)| {
            let v = RationalVector::from_i64(&c).expect("table vectors are nonzero");
            (l, v)
        })
        .collect();
    (d, vectors)
}

/// The completed 25-ray set and its 16 three-ray contexts, under the
/// conventional x-ray names (third ray of each h-context).
pub fn yu_oh_completed() -> (Scenario, BTreeMap<String, RationalVector>) {
    let (_, base) = yu_oh(YuOhVariant::Thirteen);
    let mut rays: BTreeMap<String, RationalVector> =
        base.into_iter().collect();
    let xs: [(&str, [i64; 3]); 12] = [
        ("x01", [2, -1, -1]),
        ("x02", [1, -2, 1]),
        ("x03", [1, 1, -2]),
        ("x11", [2, 1, 1]),
        ("x12", [1, 2, -1]),
        ("x13", [1, -1, 2]),
        ("x21", [2, 1, -1]),
        ("x22", [1, 2, 1]),
        ("x23", [1, -1, -2]),
        ("x31", [2, -1, 1]),
        ("x32", [1, -2, -1]),
        ("x33", [1, 1, 2]),
    ];
    for (l, c) in xs {
        rays.insert(l.to_string(), RationalVector::from_i64(&c).unwrap());
    }
    let triples: [[&str; 3]; 16] = [
        ["z1", "z2", "z3"],
        ["z1", "y1+", "y1-"],
        ["z2", "y2+", "y2-"],
        ["z3", "y3+", "y3-"],
        ["h0", "y1-", "x01"],
        ["h1", "y1-", "x11"],
        ["h2", "y1+", "x21"],
        ["h3", "y1+", "x31"],
        ["h0", "y2-", "x02"],
        ["h1", "y2+", "x12"],
        ["h2", "y2-", "x22"],
        ["h3", "y2+", "x32"],
        ["h0", "y3-", "x03"],
        ["h1", "y3+", "x13"],
        ["h2", "y3+", "x23"],
        ["h3", "y3-", "x33"],
    ];
    let contexts: Vec<Context> = triples.iter().map(|t| Context::from_labels(t)).collect();
    let dims: BTreeMap<Atom, u64> = rays.keys().map(|l| (Atom::new(l.clone()), 1)).collect();
    let s = Scenario::new(contexts, Some(dims), Some(3)).expect("completion table is valid");
    (s, rays)
}

/// A ring of n maximal contexts with d atoms each; consecutive contexts
/// share `overlap_sizes[i]` fresh atoms and nothing else.
pub fn n_cycle(n: usize, d: usize, overlap_sizes: &[usize]) -> Result<Scenario, CatalogError> {
    if n < 3 {
        return Err(CatalogError::InvalidOverlap(format!(
            "need at least 3 contexts, got {n}"
        )));
    }
    if overlap_sizes.len() != n {
        return Err(CatalogError::InvalidOverlap(format!(
            "expected {n} overlap sizes, got {}",
            overlap_sizes.len()
        )));
    }
    if overlap_sizes.iter().any(|&o| o == 0) {
        return Err(CatalogError::InvalidOverlap(
            "overlaps must be nontrivial".to_string(),
        ));
    }
    for i in 0..n {
        let prev = overlap_sizes[(i + n - 1) % n];
        let next = overlap_sizes[i];
        if prev + next > d {
            return Err(CatalogError::InvalidOverlap(format!(
                "context {i} needs {prev}+{next} shared atoms but only has {d} slots"
            )));
        }
    }
    let mut contexts = Vec::new();
    for i in 0..n {
        let prev = (i + n - 1) % n;
        let mut atoms: Vec<String> = Vec::new();
        for j in 0..overlap_sizes[prev] {
            atoms.push(format!("s{prev}x{j}"));
        }
        for j in 0..overlap_sizes[i] {
            atoms.push(format!("s{i}x{j}"));
        }
        let private = d - atoms.len();
        for j in 0..private {
            atoms.push(format!("c{i}p{j}"));
        }
        contexts.push(Context::from_labels(&atoms));
    }
    Scenario::new(contexts, None, None)
        .map_err(|e| CatalogError::InvalidOverlap(e.to_string()))
}

/// The all-1/2 ring box on a shared-atom n-cycle: shared atoms get 1/2,
/// private atoms share the remainder equally.
pub fn ring_half_state(s: &Scenario) -> State {
    let mut probs: BTreeMap<String, BTreeMap<String, Rat>> = BTreeMap::new();
    for c in s.max_contexts() {
        let labels = c.labels();
        let shared: Vec<&String> = labels.iter().filter(|l| l.starts_with('s')).collect();
        let private: Vec<&String> = labels.iter().filter(|l| !l.starts_with('s')).collect();
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let mut rest = Rat::from(BigInt::from(1));
        for _ in &shared {
            rest -= &half;
        }
        let dist: BTreeMap<String, Rat> = labels
            .iter()
            .map(|l| {
                let p = if l.starts_with('s') {
                    half.clone()
                } else {
                    &rest / BigInt::from(private.len() as i64)
                };
                (l.clone(), p)
            })
            .collect();
        probs.insert(c.key(), dist);
    }
    State::new(s, probs).expect("ring box is well formed")
}

/// k maximal contexts of d fresh atoms each; overlaps are all trivial.
/// The seed only shuffles the fresh labels.
pub fn acyclic_random(k: usize, d: usize, seed: u64) -> Scenario {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<usize> = (0..k * d).collect();
    ids.shuffle(&mut rng);
    let contexts: Vec<Context> = (0..k)
        .map(|i| {
            let atoms: Vec<String> = (0..d)
                .map(|j| format!("m{}", ids[i * d + j]))
                .collect();
            Context::from_labels(&atoms)
        })
        .collect();
    Scenario::new(contexts, None, None).expect("disjoint contexts are valid")
}

/// Random maximal scenario: up to `max_contexts` contexts of exactly d
/// unit atoms, overlapping pairwise in at most one shared atom.
pub fn random_maximal_scenario<R: Rng>(
    rng: &mut R,
    max_contexts: usize,
    d_max: usize,
) -> Scenario {
    loop {
        let n = rng.gen_range(1..=max_contexts);
        let d = rng.gen_range(2..=d_max);
        // decide which pairs share an atom, respecting capacity
        let mut slots = vec![d; n];
        let mut shared: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if slots[i] > 0 && slots[j] > 0 && rng.gen_range(0..100) < 45 {
                    shared.push((i, j));
                    slots[i] -= 1;
                    slots[j] -= 1;
                }
            }
        }
        let mut atoms: Vec<Vec<String>> = vec![Vec::new(); n];
        for (k, &(i, j)) in shared.iter().enumerate() {
            let label = format!("s{k}");
            atoms[i].push(label.clone());
            atoms[j].push(label);
        }
        for (i, slot) in slots.iter().enumerate() {
            for j in 0..*slot {
                atoms[i].push(format!("c{i}f{j}"));
            }
        }
        let contexts: Vec<Context> = atoms
            .iter()
            .map(|a| Context::from_labels(a))
            .collect();
        let dims: BTreeMap<Atom, u64> = contexts
            .iter()
            .flat_map(|c| c.atoms().iter().cloned())
            .map(|a| (a, 1))
            .collect();
        if let Ok(s) = Scenario::new(contexts, Some(dims), Some(d as u64)) {
            return s;
        }
        // duplicate contexts are possible when d == 2; just redraw
    }
}

/// A chordal scenario built along a clique tree, plus the construction
/// order needed to sample no-disturbance states on it.
#[derive(Debug, Clone)]
pub struct ChordalSample {
    pub scenario: Scenario,
    /// context keys in clique-tree order; each context's shared atoms all
    /// come from its single parent
    pub order: Vec<String>,
}

/// Random clique-tree scenario: each new context borrows a proper subset
/// of one earlier context and adds fresh atoms. Contexts are exactly the
/// maximal cliques of a chordal compatibility graph.
pub fn random_chordal_scenario<R: Rng>(rng: &mut R, max_contexts: usize) -> ChordalSample {
    let n = rng.gen_range(1..=max_contexts);
    let mut contexts: Vec<Vec<String>> = Vec::new();
    let mut fresh = 0..;
    let first_size = rng.gen_range(2..=4usize);
    contexts.push(
        (0..first_size)
            .map(|_| format!("g{}", fresh.next().unwrap()))
            .collect(),
    );
    for _ in 1..n {
        let parent = rng.gen_range(0..contexts.len());
        let parent_atoms = contexts[parent].clone();
        let take = rng.gen_range(1..parent_atoms.len().max(2)).min(parent_atoms.len() - 1);
        let mut borrowed: Vec<String> = Vec::new();
        let mut pool = parent_atoms.clone();
        for _ in 0..take {
            let k = rng.gen_range(0..pool.len());
            borrowed.push(pool.swap_remove(k));
        }
        let fresh_count = rng.gen_range(1..=3usize);
        for _ in 0..fresh_count {
            borrowed.push(format!("g{}", fresh.next().unwrap()));
        }
        contexts.push(borrowed);
    }
    let ctxs: Vec<Context> = contexts.iter().map(|a| Context::from_labels(a)).collect();
    let order: Vec<String> = ctxs.iter().map(|c| c.key()).collect();
    let scenario = Scenario::new(ctxs, None, None).expect("clique tree contexts are valid");
    ChordalSample { scenario, order }
}

/// Random exact-rational no-disturbance state on a clique-tree scenario:
/// walk the construction order, pin shared atoms, split the remaining
/// mass over fresh atoms with random rational proportions.
pub fn random_nd_state<R: Rng>(rng: &mut R, sample: &ChordalSample) -> State {
    let s = &sample.scenario;
    let by_key: BTreeMap<String, &Context> =
        s.max_contexts().iter().map(|c| (c.key(), c)).collect();
    let mut pinned: BTreeMap<String, Rat> = BTreeMap::new();
    let mut probs: BTreeMap<String, BTreeMap<String, Rat>> = BTreeMap::new();
    for key in &sample.order {
        let c = by_key[key];
        let labels = c.labels();
        let mut rest = Rat::from(BigInt::from(1));
        let mut free: Vec<&String> = Vec::new();
        let mut dist: BTreeMap<String, Rat> = BTreeMap::new();
        for l in &labels {
            if let Some(p) = pinned.get(l) {
                dist.insert(l.clone(), p.clone());
                rest -= p;
            } else {
                free.push(l);
            }
        }
        debug_assert!(rest >= Rat::from(BigInt::from(0)));
        // random positive integer shares of the remaining mass
        let shares: Vec<u64> = free.iter().map(|_| rng.gen_range(0..10)).collect();
        let total: u64 = shares.iter().sum::<u64>().max(1);
        let mut assigned = Rat::from(BigInt::from(0));
        for (idx, l) in free.iter().enumerate() {
            let p = if idx + 1 == free.len() {
                &rest - &assigned
            } else {
                &rest * Rat::new(BigInt::from(shares[idx]), BigInt::from(total))
            };
            assigned += &p;
            dist.insert((*l).clone(), p);
        }
        for (l, p) in &dist {
            pinned.entry(l.clone()).or_insert_with(|| p.clone());
        }
        probs.insert(key.clone(), dist);
    }
    State::new(s, probs).expect("tree walk preserves state validity")
}

/// Slot for externally supplied ray tables; none beyond the built-ins are
/// bundled. Labels must be unique and tuples nonzero.
pub fn load_vectors(
    d: usize,
    raw: &[(String, Vec<i64>)],
) -> Result<Vec<(String, RationalVector)>, CatalogError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (label, coords) in raw {
        if !seen.insert(label.clone()) {
            return Err(CatalogError::BadVector(format!("duplicate label {label:?}")));
        }
        if coords.len() != d {
            return Err(CatalogError::BadVector(format!(
                "{label:?} has {} coordinates, expected {d}",
                coords.len()
            )));
        }
        let v = RationalVector::from_i64(coords)
            .ok_or_else(|| CatalogError::BadVector(format!("{label:?} is the zero vector")))?;
        out.push((label.clone(), v));
    }
    Ok(out)
}

/// A named catalog entry, ready for export.
#[derive(Debug, Clone)]
pub enum CatalogItem {
    Scenario(Scenario),
    ScenarioWithEmbedding(Scenario, EmbeddingTable),
    Vectors {
        d: usize,
        raw: Vec<(String, Vec<i64>)>,
    },
    State {
        scenario: Scenario,
        state: State,
        /// rational stand-in for an irrational target value
        approx: bool,
    },
    Functional(Functional),
}

pub fn names() -> Vec<&'static str> {
    vec![
        "chsh",
        "chsh_functional",
        "pr_box",
        "tsirelson_demo",
        "yu_oh_13",
        "yu_oh_15",
        "yu_oh_completed",
        "n_cycle_3_3",
        "n_cycle_4_3",
        "n_cycle_5_3",
        "n_cycle_6_3",
        "n_cycle_7_3",
        "n_cycle_4_4_2",
        "five_cycle_box",
        "acyclic_4_3",
    ]
}

pub fn get(name: &str) -> Option<CatalogItem> {
    let ring = |n: usize| n_cycle(n, 3, &vec![1; n]).unwrap();
    Some(match name {
        "chsh" => {
            let (s, t) = chsh();
            CatalogItem::ScenarioWithEmbedding(s, t)
        }
        "chsh_functional" => CatalogItem::Functional(chsh_functional()),
        "pr_box" => {
            let (s, _) = chsh();
            let state = pr_box_state(&s);
            CatalogItem::State {
                scenario: s,
                state,
                approx: false,
            }
        }
        "tsirelson_demo" => {
            let (s, _) = chsh();
            let state = tsirelson_demo_state(&s);
            CatalogItem::State {
                scenario: s,
                state,
                approx: true,
            }
        }
        "yu_oh_13" => {
            let (d, raw) = yu_oh_raw(YuOhVariant::Thirteen);
            CatalogItem::Vectors { d, raw }
        }
        "yu_oh_15" => {
            let (d, raw) = yu_oh_raw(YuOhVariant::Fifteen);
            CatalogItem::Vectors { d, raw }
        }
        "yu_oh_completed" => CatalogItem::Scenario(yu_oh_completed().0),
        "n_cycle_3_3" => CatalogItem::Scenario(ring(3)),
        "n_cycle_4_3" => CatalogItem::Scenario(ring(4)),
        "n_cycle_5_3" => CatalogItem::Scenario(ring(5)),
        "n_cycle_6_3" => CatalogItem::Scenario(ring(6)),
        "n_cycle_7_3" => CatalogItem::Scenario(ring(7)),
        "n_cycle_4_4_2" => CatalogItem::Scenario(n_cycle(4, 4, &[2; 4]).unwrap()),
        "five_cycle_box" => {
            let scenario = ring(5);
            let state = ring_half_state(&scenario);
            CatalogItem::State {
                scenario,
                state,
                approx: false,
            }
        }
        "acyclic_4_3" => CatalogItem::Scenario(acyclic_random(4, 3, 0)),
        _ => return None,
    })
}
