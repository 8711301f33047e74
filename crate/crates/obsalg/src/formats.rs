//! JSON interchange for every artifact the tool reads or writes.
//!
//! Serialization is deterministic: atoms sorted lexicographically,
//! contexts sorted by their sorted atom lists, map keys ordered.
//! Probabilities and coefficients travel as exact rational strings
//! like "1/2" or "3".

use crate::algebra_core::{Atom, Context, Scenario};
use crate::correlations::{ClassicalModel, Functional, Rat, State};
use crate::extension::ExtendedScenario;
use crate::ortho_graph::OrthoGraph;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational {0:?}")]
    BadRational(String),
    #[error("bad scenario: {0}")]
    BadScenario(String),
    #[error("bad graph: {0}")]
    BadGraph(String),
    #[error("bad state: {0}")]
    BadState(String),
    #[error("bad model: {0}")]
    BadModel(String),
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_str(s: &str) -> Result<Rat, FormatError> {
    let bad = || FormatError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(Rat::from(n))
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ScenarioDoc {
    pub atoms: Vec<String>,
    pub max_contexts: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<BTreeMap<String, u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
}

pub fn scenario_to_doc(s: &Scenario) -> ScenarioDoc {
    let mut max_contexts: Vec<Vec<String>> =
        s.max_contexts().iter().map(|c| c.labels()).collect();
    max_contexts.sort();
    ScenarioDoc {
        atoms: s.atoms().iter().map(|a| a.label().to_string()).collect(),
        max_contexts,
        dim: s
            .dim_fn()
            .map(|m| m.iter().map(|(a, v)| (a.label().to_string(), *v)).collect()),
        d: s.d(),
    }
}

pub fn scenario_from_doc(doc: &ScenarioDoc) -> Result<Scenario, FormatError> {
    let contexts: Vec<Context> = doc
        .max_contexts
        .iter()
        .map(|c| Context::from_labels(c))
        .collect();
    let mut seen: Vec<String> = contexts
        .iter()
        .flat_map(|c| c.labels())
        .collect();
    seen.sort();
    seen.dedup();
    let mut declared = doc.atoms.clone();
    declared.sort();
    let had_dupes = {
        let mut d = declared.clone();
        d.dedup();
        d.len() != declared.len()
    };
    if had_dupes {
        return Err(FormatError::BadScenario("duplicate atom names".to_string()));
    }
    if seen != declared {
        return Err(FormatError::BadScenario(
            "atom list does not match the atoms used in contexts".to_string(),
        ));
    }
    let dims = doc.dim.as_ref().map(|m| {
        m.iter()
            .map(|(l, v)| (Atom::new(l.clone()), *v))
            .collect::<BTreeMap<Atom, u64>>()
    });
    Scenario::new(contexts, dims, doc.d).map_err(|e| FormatError::BadScenario(e.to_string()))
}

pub fn scenario_to_json(s: &Scenario) -> serde_json::Value {
    serde_json::to_value(scenario_to_doc(s)).expect("scenario serializes")
}

pub fn scenario_from_json(v: &serde_json::Value) -> Result<Scenario, FormatError> {
    let doc: ScenarioDoc = serde_json::from_value(v.clone())?;
    scenario_from_doc(&doc)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

pub fn graph_to_doc(g: &OrthoGraph) -> GraphDoc {
    let mut edges: Vec<(String, String)> = g
        .edge_indices()
        .into_iter()
        .map(|(i, j)| (g.label(i).to_string(), g.label(j).to_string()))
        .collect();
    edges.sort();
    let mut vertices: Vec<String> = g.vertices().to_vec();
    vertices.sort();
    GraphDoc { vertices, edges }
}

pub fn graph_from_doc(doc: &GraphDoc) -> Result<OrthoGraph, FormatError> {
    OrthoGraph::new(&doc.vertices, &doc.edges).map_err(|e| FormatError::BadGraph(e.to_string()))
}

pub fn graph_to_json(g: &OrthoGraph) -> serde_json::Value {
    serde_json::to_value(graph_to_doc(g)).expect("graph serializes")
}

pub fn graph_from_json(v: &serde_json::Value) -> Result<OrthoGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_value(v.clone())?;
    graph_from_doc(&doc)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VectorsDoc {
    pub d: usize,
    pub vectors: BTreeMap<String, Vec<i64>>,
}

pub fn vectors_to_json(d: usize, raw: &[(String, Vec<i64>)]) -> serde_json::Value {
    let doc = VectorsDoc {
        d,
        vectors: raw.iter().cloned().collect(),
    };
    serde_json::to_value(doc).expect("vectors serialize")
}

pub fn vectors_from_json(v: &serde_json::Value) -> Result<(usize, Vec<(String, Vec<i64>)>), FormatError> {
    let doc: VectorsDoc = serde_json::from_value(v.clone())?;
    Ok((doc.d, doc.vectors.into_iter().collect()))
}

/// State documents map context keys (sorted atom labels joined with ",")
/// to per-atom rational strings.
pub fn state_to_json(st: &State) -> serde_json::Value {
    let doc: BTreeMap<String, BTreeMap<String, String>> = st
        .contexts()
        .map(|(k, dist)| {
            (
                k.clone(),
                dist.iter()
                    .map(|(a, p)| (a.clone(), rat_to_string(p)))
                    .collect(),
            )
        })
        .collect();
    serde_json::to_value(doc).expect("state serializes")
}

pub fn state_from_json(v: &serde_json::Value, s: &Scenario) -> Result<State, FormatError> {
    let doc: BTreeMap<String, BTreeMap<String, String>> = serde_json::from_value(v.clone())?;
    let mut probs = BTreeMap::new();
    for (k, dist) in doc {
        let parsed: Result<BTreeMap<String, Rat>, FormatError> = dist
            .into_iter()
            .map(|(a, p)| Ok((a, rat_from_str(&p)?)))
            .collect();
        probs.insert(k, parsed?);
    }
    State::new(s, probs).map_err(|e| FormatError::BadState(e.to_string()))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ModelDoc {
    pub valuations: Vec<Vec<String>>,
    /// weight per valuation index, as a rational string
    pub weights: BTreeMap<usize, String>,
}

pub fn model_to_json(m: &ClassicalModel) -> serde_json::Value {
    let doc = ModelDoc {
        valuations: m
            .valuations
            .iter()
            .map(|v| v.iter().cloned().collect())
            .collect(),
        weights: m
            .weights
            .iter()
            .enumerate()
            .map(|(i, w)| (i, rat_to_string(w)))
            .collect(),
    };
    serde_json::to_value(doc).expect("model serializes")
}

pub fn model_from_json(v: &serde_json::Value) -> Result<ClassicalModel, FormatError> {
    let doc: ModelDoc = serde_json::from_value(v.clone())?;
    let n = doc.valuations.len();
    let mut weights = vec![Rat::from(BigInt::from(0)); n];
    for (i, w) in &doc.weights {
        if *i >= n {
            return Err(FormatError::BadModel(format!(
                "weight index {i} out of range"
            )));
        }
        weights[*i] = rat_from_str(w)?;
    }
    Ok(ClassicalModel {
        valuations: doc
            .valuations
            .into_iter()
            .map(|v| v.into_iter().collect())
            .collect(),
        weights,
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FunctionalDoc {
    pub coeffs: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub approx: bool,
}

pub fn functional_to_json(f: &Functional) -> serde_json::Value {
    let doc = FunctionalDoc {
        coeffs: f
            .coeffs
            .iter()
            .map(|(k, m)| {
                (
                    k.clone(),
                    m.iter().map(|(a, c)| (a.clone(), rat_to_string(c))).collect(),
                )
            })
            .collect(),
        approx: f.approx,
    };
    serde_json::to_value(doc).expect("functional serializes")
}

pub fn functional_from_json(v: &serde_json::Value) -> Result<Functional, FormatError> {
    let doc: FunctionalDoc = serde_json::from_value(v.clone())?;
    let mut coeffs = BTreeMap::new();
    for (k, m) in doc.coeffs {
        let parsed: Result<BTreeMap<String, Rat>, FormatError> = m
            .into_iter()
            .map(|(a, c)| Ok((a, rat_from_str(&c)?)))
            .collect();
        coeffs.insert(k, parsed?);
    }
    Ok(Functional {
        coeffs,
        approx: doc.approx,
    })
}

/// Extended scenarios round-trip as the extended Scenario document plus a
/// split-map sidecar from base atoms to their replacement atoms.
pub fn extended_to_json(e: &ExtendedScenario) -> serde_json::Value {
    let split: BTreeMap<String, Vec<String>> = e
        .split_map()
        .iter()
        .map(|(a, parts)| {
            (
                a.label().to_string(),
                parts.iter().map(|p| p.label().to_string()).collect(),
            )
        })
        .collect();
    serde_json::json!({
        "scenario": scenario_to_json(e.extended()),
        "split_map": split,
    })
}

/// Embedding tables for export: the point list plus per-atom supports.
pub fn embedding_to_json(t: &crate::catalog::EmbeddingTable) -> serde_json::Value {
    let supports: BTreeMap<String, Vec<String>> = t
        .event_supports
        .iter()
        .map(|(a, s)| (a.clone(), s.iter().cloned().collect()))
        .collect();
    serde_json::json!({
        "lambda_points": t.lambda_points,
        "event_supports": supports,
    })
}

/// Minimal JSON Schema documents for each interchange format.
pub fn schema(kind: &str) -> Option<serde_json::Value> {
    use serde_json::json;
    let rational = json!({"type": "string", "pattern": "^-?[0-9]+(/-?[0-9]+)?$"});
    let v = match kind {
        "scenario" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "scenario",
            "type": "object",
            "required": ["atoms", "max_contexts"],
            "properties": {
                "atoms": {"type": "array", "items": {"type": "string"}},
                "max_contexts": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "string"}}
                },
                "dim": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
                "d": {"type": "integer", "minimum": 1}
            }
        }),
        "graph" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "graph",
            "type": "object",
            "required": ["vertices", "edges"],
            "properties": {
                "vertices": {"type": "array", "items": {"type": "string"}},
                "edges": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "items": {"type": "string"},
                        "minItems": 2,
                        "maxItems": 2
                    }
                }
            }
        }),
        "vectors" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "vectors",
            "type": "object",
            "required": ["d", "vectors"],
            "properties": {
                "d": {"type": "integer", "minimum": 1},
                "vectors": {
                    "type": "object",
                    "additionalProperties": {"type": "array", "items": {"type": "integer"}}
                }
            }
        }),
        "state" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "state",
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "additionalProperties": rational
            }
        }),
        "model" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "model",
            "type": "object",
            "required": ["valuations", "weights"],
            "properties": {
                "valuations": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "string"}}
                },
                "weights": {"type": "object", "additionalProperties": rational}
            }
        }),
        "functional" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "functional",
            "type": "object",
            "required": ["coeffs"],
            "properties": {
                "coeffs": {
                    "type": "object",
                    "additionalProperties": {
                        "type": "object",
                        "additionalProperties": rational
                    }
                },
                "approx": {"type": "boolean"}
            }
        }),
        "dim_solution" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "dim_solution",
            "type": "object",
            "required": ["d", "dims"],
            "properties": {
                "d": {"type": "integer", "minimum": 1},
                "dims": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}}
            }
        }),
        "report" => json!({
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": "report",
            "type": "object",
            "required": ["label", "acyclic", "chi_Gstar", "d"],
            "properties": {
                "label": {"enum": [
                    "FULLY_CLASSICAL",
                    "KS_NONCONTEXTUAL_WITH_NONCLASSICAL_CORRELATIONS",
                    "KS_CONTEXTUAL"
                ]},
                "acyclic": {"type": "boolean"},
                "chi_Gstar": {"type": "integer"},
                "d": {"type": "integer"},
                "witness": {"type": "object"},
                "obstruction": {"type": "object"}
            }
        }),
        _ => return None,
    };
    Some(v)
}

pub fn schema_kinds() -> Vec<&'static str> {
    vec![
        "scenario",
        "graph",
        "vectors",
        "state",
        "model",
        "functional",
        "dim_solution",
        "report",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::correlations::stab_membership_state;
    use crate::extension::maximal_extension;

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "1", "-3", "1/2", "-7/3", "853/2000"] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert_eq!(rat_to_string(&rat_from_str("2/4").unwrap()), "1/2");
        assert_eq!(rat_to_string(&rat_from_str("3/1").unwrap()), "3");
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
        assert!(rat_from_str("1.5").is_err());
    }

    #[test]
    fn scenario_round_trips_and_validates() {
        let (s, _) = catalog::chsh();
        let v = scenario_to_json(&s);
        let back = scenario_from_json(&v).unwrap();
        assert_eq!(scenario_to_json(&back), v);
        // atom list must match the contexts exactly
        let mut doc = scenario_to_doc(&s);
        doc.atoms.pop();
        assert!(scenario_from_doc(&doc).is_err());
        let mut doc = scenario_to_doc(&s);
        doc.atoms.push("ghost".to_string());
        assert!(scenario_from_doc(&doc).is_err());
    }

    #[test]
    fn serialization_is_deterministic() {
        let (s, _) = catalog::chsh();
        let a = serde_json::to_string(&scenario_to_json(&s)).unwrap();
        let b = serde_json::to_string(&scenario_to_json(&catalog::chsh().0)).unwrap();
        assert_eq!(a, b);
        let doc = scenario_to_doc(&s);
        let mut sorted = doc.atoms.clone();
        sorted.sort();
        assert_eq!(doc.atoms, sorted);
        let mut ctx_sorted = doc.max_contexts.clone();
        ctx_sorted.sort();
        assert_eq!(doc.max_contexts, ctx_sorted);
    }

    #[test]
    fn graph_round_trips() {
        let (d, vectors) = catalog::yu_oh(catalog::YuOhVariant::Thirteen);
        let (g, _) = crate::realization::graph_from_vectors(d, &vectors).unwrap();
        let v = graph_to_json(&g);
        let back = graph_from_json(&v).unwrap();
        assert_eq!(graph_to_json(&back), v);
        assert_eq!(back.vertex_count(), 13);
        assert_eq!(back.chromatic_number().0, 4);
    }

    #[test]
    fn vectors_round_trip_bit_identically() {
        let (d, raw) = catalog::yu_oh_raw(catalog::YuOhVariant::Fifteen);
        let v = vectors_to_json(d, &raw);
        let (d2, raw2) = vectors_from_json(&v).unwrap();
        assert_eq!(d, d2);
        let m: BTreeMap<_, _> = raw.iter().cloned().collect();
        let m2: BTreeMap<_, _> = raw2.into_iter().collect();
        assert_eq!(m, m2);
        assert_eq!(m2["x01"], vec![-2, 1, 1]);
        assert_eq!(m2["h1"], vec![-1, 1, 1]);
    }

    #[test]
    fn state_and_model_round_trip() {
        let (s, _) = catalog::chsh();
        let st = catalog::pr_box_state(&s);
        let v = state_to_json(&st);
        let back = state_from_json(&v, &s).unwrap();
        assert_eq!(state_to_json(&back), v);
        // a classical state's model survives the trip too
        let sample = {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
            catalog::random_chordal_scenario(&mut rng, 3)
        };
        let st = {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
            catalog::random_nd_state(&mut rng, &sample)
        };
        let model = stab_membership_state(&st, &sample.scenario, None)
            .unwrap()
            .unwrap();
        let mv = model_to_json(&model);
        let back = model_from_json(&mv).unwrap();
        assert!(back.reproduces_state(&st, &sample.scenario));
        assert!(model_from_json(&serde_json::json!({
            "valuations": [["a"]],
            "weights": {"4": "1"}
        }))
        .is_err());
    }

    #[test]
    fn functional_round_trips() {
        let f = catalog::chsh_functional();
        let v = functional_to_json(&f);
        let back = functional_from_json(&v).unwrap();
        assert_eq!(functional_to_json(&back), v);
        assert!(!back.approx);
    }

    #[test]
    fn extended_scenarios_carry_their_split_map() {
        let s = scenario_from_json(&serde_json::json!({
            "atoms": ["p", "q"],
            "max_contexts": [["p", "q"]],
            "dim": {"p": 2, "q": 1},
            "d": 3
        }))
        .unwrap();
        let e = maximal_extension(&s).unwrap();
        let v = extended_to_json(&e);
        let split = v.get("split_map").unwrap().as_object().unwrap();
        assert_eq!(split["p"].as_array().unwrap().len(), 2);
        assert_eq!(split["q"].as_array().unwrap().len(), 1);
        let inner = scenario_from_json(v.get("scenario").unwrap()).unwrap();
        assert_eq!(inner.atoms().len(), 3);
    }

    #[test]
    fn every_schema_kind_is_served() {
        for kind in schema_kinds() {
            let s = schema(kind).expect("schema exists");
            assert_eq!(s["title"], kind);
        }
        assert!(schema("nope").is_none());
    }
}
