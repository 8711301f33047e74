//! Command-line front end with stable JSON input and output.
//!
//! Exit codes: 0 success, 2 negative verdict (contextual, infeasible, or
//! not a member), 1 runtime error, 64 usage error. Output is compact JSON
//! on one line unless `--pretty` asks for a key: value table. Any input
//! path may be `-` for stdin.

use crate::algebra_core::{
    build_context_category, compatibility_graph, is_acyclic, nontrivial_context_cycle, Scenario,
};
use crate::catalog::{self, CatalogItem};
use crate::correlations::{
    check_no_disturbance, evaluate_functional, qstab_membership, stab_membership_state,
    Correlation, Rat, State,
};
use crate::diophantine::{all_dimension_functions, solve_dimension_function, DiophantineError};
use crate::extension::{extended_graph, maximal_extension, ExtensionError};
use crate::formats::{
    self, functional_from_json, graph_from_json, model_from_json, rat_to_string,
    scenario_from_json, state_from_json, vectors_from_json, vectors_to_json,
};
use crate::ks_decision::{
    classify, classify_graph, flat_connection_search, flat_on_all_simple_cycles,
    ClassicalityLabel, ContextConnection, KsError, KsWitness,
};
use crate::ortho_graph::{Colouring, OrthoGraph};
use crate::realization::{complete, graph_from_vectors, is_freely_completable, is_unital};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "obsalg", version, about = "Exact contextuality analysis for finite observable algebras")]
struct Cli {
    /// Print the JSON schema for a format kind and exit (see `--schema list`)
    #[arg(long, value_name = "KIND", global = true)]
    schema: Option<String>,
    /// Render output as a key: value table instead of compact JSON
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "PATH", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Args)]
struct StateArgs {
    /// State file (or catalog export bundle with scenario + state), `-` for stdin
    state: String,
    /// Scenario file; optional when the state file bundles one
    #[arg(long)]
    scenario: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full classification of a scenario, bundle, or vector file
    Analyze { input: String },
    /// Chromatic number and an optimal colouring of a graph or vector file
    Chromatic {
        input: String,
        /// Emit DIMACS col format instead of JSON
        #[arg(long)]
        dimacs: bool,
    },
    /// Context-uniform colouring with exactly d colours per maximal clique
    Color {
        #[arg(long)]
        d: u64,
        input: String,
    },
    /// Contextuality verdict with witness or obstruction
    KsCheck { input: String },
    /// Bounded search for a flat connection on the context category
    ConnectionCheck { input: String },
    /// Acyclicity of the context category, with a witness cycle if not
    Acyclic { input: String },
    /// Complete a rational vector set until every context is full
    Complete { input: String },
    /// Split higher-dimensional atoms into fresh rank-one atoms
    Extend { input: String },
    /// Solve for a dimension function on a graph or vector file
    Dimfn {
        input: String,
        /// Largest ambient dimension to try (default: vertex count)
        #[arg(long)]
        d_max: Option<u64>,
        /// Enumerate all solutions at a fixed dimension instead
        #[arg(long, requires = "d")]
        all: bool,
        /// Ambient dimension for --all
        #[arg(long)]
        d: Option<u64>,
        /// Enumeration cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Exact classical-polytope membership for a no-disturbance state
    StabCheck {
        #[command(flatten)]
        state: StateArgs,
        /// Valuation enumeration cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Outer-polytope membership (clique inequalities only)
    QstabCheck {
        #[command(flatten)]
        state: StateArgs,
    },
    /// Evaluate a linear functional on a state and bound it classically
    Functional {
        /// Functional file, `-` for stdin
        functional: String,
        #[arg(long)]
        state: String,
        #[arg(long)]
        scenario: Option<String>,
        /// Valuation enumeration cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Built-in scenarios, vector sets, states, and functionals
    Catalog {
        #[command(subcommand)]
        which: CatalogCmd,
    },
    /// Replay the invariants behind an emitted witness or report
    Verify {
        /// Artifact produced by another subcommand, `-` for stdin
        artifact: String,
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        state: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List catalog entry names
    List,
    /// Write one catalog entry as JSON
    Export { name: String },
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

enum Payload {
    Json(Value),
    Text(String),
}

struct Outcome {
    payload: Payload,
    negative: bool,
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Outcome {
            payload: Payload::Json(v),
            negative: false,
        }
    }
    fn verdict(v: Value, negative: bool) -> Self {
        Outcome {
            payload: Payload::Json(v),
            negative,
        }
    }
    fn text(s: String) -> Self {
        Outcome {
            payload: Payload::Text(s),
            negative: false,
        }
    }
}

pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(64)
                }
            }
        }
    };
    if let Some(kind) = &cli.schema {
        let v = if kind == "list" {
            json!({ "kinds": formats::schema_kinds() })
        } else {
            match formats::schema(kind) {
                Some(v) => v,
                None => {
                    eprintln!(
                        "unknown schema kind {kind:?}; try one of {:?}",
                        formats::schema_kinds()
                    );
                    return ExitCode::from(64);
                }
            }
        };
        return emit(&cli, Outcome::ok(v));
    }
    let Some(cmd) = &cli.cmd else {
        eprintln!("a subcommand is required; see --help");
        return ExitCode::from(64);
    };
    match dispatch(cmd) {
        Ok(outcome) => emit(&cli, outcome),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn emit(cli: &Cli, outcome: Outcome) -> ExitCode {
    let rendered = match &outcome.payload {
        Payload::Json(v) => {
            if cli.pretty {
                render_table(v)
            } else {
                serde_json::to_string(v).expect("value renders")
            }
        }
        Payload::Text(s) => s.clone(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{rendered}\n")) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => {
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = writeln!(lock, "{rendered}") {
                // a closed pipe (e.g. `obsalg ... | head`) is not a failure
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("error: writing stdout: {e}");
                return ExitCode::FAILURE;
            }
        }
    }
    if outcome.negative {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

/// Key: value lines for top-level objects; everything nested stays JSON.
fn render_table(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, val)| match val {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {}", serde_json::to_string(other).unwrap()),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => serde_json::to_string(other).expect("value renders"),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError(format!("reading {path}: {e}")))
    }
}

fn load_json(path: &str) -> Result<Value, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError(format!("parsing {path}: {e}")))
}

/// Accepts a scenario document or a catalog bundle wrapping one.
fn scenario_from_any(v: &Value) -> Result<Scenario, CliError> {
    if v.get("max_contexts").is_some() {
        return Ok(scenario_from_json(v)?);
    }
    if let Some(inner) = v.get("scenario") {
        return Ok(scenario_from_json(inner)?);
    }
    Err(CliError(
        "expected a scenario document (max_contexts) or a bundle with one".to_string(),
    ))
}

/// Accepts a graph document, a vector file (orthogonality graph), or a
/// scenario (compatibility graph).
fn graph_from_any(v: &Value) -> Result<(OrthoGraph, Option<usize>), CliError> {
    if v.get("vectors").is_some() {
        let (d, raw) = vectors_from_json(v)?;
        let vectors = catalog::load_vectors(d, &raw)?;
        let (g, _) = graph_from_vectors(d, &vectors)?;
        return Ok((g, Some(d)));
    }
    if v.get("vertices").is_some() {
        return Ok((graph_from_json(v)?, None));
    }
    if v.get("max_contexts").is_some() || v.get("scenario").is_some() {
        let s = scenario_from_any(v)?;
        let d = s.d().map(|d| d as usize);
        return Ok((compatibility_graph(&s), d));
    }
    Err(CliError(
        "expected a graph document (vertices/edges), a vector file, or a scenario".to_string(),
    ))
}

/// Loads a state and its scenario; the bool is the bundle's approximation
/// flag (rational stand-ins for irrational target values).
fn state_and_scenario(args: &StateArgs) -> Result<(State, Scenario, bool), CliError> {
    let v = load_json(&args.state)?;
    let scenario = match &args.scenario {
        Some(path) => scenario_from_any(&load_json(path)?)?,
        None => scenario_from_any(&v)
            .map_err(|_| CliError("no --scenario given and none bundled with the state".to_string()))?,
    };
    let state_part = v.get("state").unwrap_or(&v);
    let state = state_from_json(state_part, &scenario)?;
    let approx = v.get("approx").and_then(Value::as_bool).unwrap_or(false);
    Ok((state, scenario, approx))
}

fn ks_error(e: KsError) -> CliError {
    CliError(e.to_string())
}

fn dispatch(cmd: &Cmd) -> Result<Outcome, CliError> {
    match cmd {
        Cmd::Analyze { input } => {
            let v = load_json(input)?;
            let report = if v.get("vectors").is_some() {
                let (g, d) = graph_from_any(&v)?;
                classify_graph(&g, d.expect("vector path fixes d") as u64)
            } else {
                let s = scenario_from_any(&v)?;
                classify(&s).map_err(ks_error)?
            };
            let negative = report.label == ClassicalityLabel::KsContextual;
            Ok(Outcome::verdict(serde_json::to_value(&report)?, negative))
        }
        Cmd::Chromatic { input, dimacs } => {
            let (g, _) = graph_from_any(&load_json(input)?)?;
            if *dimacs {
                return Ok(Outcome::text(g.to_dimacs()));
            }
            let (chi, col) = g.chromatic_number();
            Ok(Outcome::ok(json!({
                "chromatic_number": chi,
                "colouring": serde_json::to_value(&col)?,
            })))
        }
        Cmd::Color { d, input } => {
            let (g, _) = graph_from_any(&load_json(input)?)?;
            let cliques = g.maximal_cliques();
            let col = g.d_colouring(&cliques, *d as usize)?;
            let found = col.is_some();
            Ok(Outcome::verdict(
                json!({
                    "d": d,
                    "colouring": col.map(|c| serde_json::to_value(&c).unwrap()),
                }),
                !found,
            ))
        }
        Cmd::KsCheck { input } => {
            let v = load_json(input)?;
            let verdict = if v.get("vectors").is_some() {
                let (g, d) = graph_from_any(&v)?;
                crate::ks_decision::graph_verdict(&g, d.expect("vector path fixes d") as u64)
            } else {
                let s = scenario_from_any(&v)?;
                crate::ks_decision::is_ks_contextual(&s).map_err(ks_error)?
            };
            let negative = verdict.contextual;
            Ok(Outcome::verdict(serde_json::to_value(&verdict)?, negative))
        }
        Cmd::ConnectionCheck { input } => {
            let s = scenario_from_any(&load_json(input)?)?;
            let cc = build_context_category(&s);
            let conn = flat_connection_search(&cc).map_err(ks_error)?;
            match conn {
                Some(c) => Ok(Outcome::ok(json!({
                    "found": true,
                    "witness": serde_json::to_value(KsWitness::from_connection(&c))?,
                }))),
                None => Ok(Outcome::verdict(
                    json!({ "found": false, "witness": null }),
                    true,
                )),
            }
        }
        Cmd::Acyclic { input } => {
            let s = scenario_from_any(&load_json(input)?)?;
            let cc = build_context_category(&s);
            let acyclic = is_acyclic(&cc);
            let cycle = nontrivial_context_cycle(&cc)
                .map(|cs| cs.iter().map(|c| c.key()).collect::<Vec<_>>());
            Ok(Outcome::ok(json!({ "acyclic": acyclic, "cycle": cycle })))
        }
        Cmd::Complete { input } => {
            let v = load_json(input)?;
            let (d, raw) = vectors_from_json(&v)?;
            let vectors = catalog::load_vectors(d, &raw)?;
            let (g, r) = graph_from_vectors(d, &vectors)?;
            let free = is_freely_completable(&r, &g);
            let (cg, cr, log) = complete(&r, &g)?;
            let mut out: Vec<(String, Vec<i64>)> = Vec::new();
            for (label, sub) in cr.subspaces() {
                let coords: Result<Vec<i64>, _> = sub.integer_rows()[0]
                    .coords()
                    .iter()
                    .map(|c| i64::try_from(c.clone()))
                    .collect();
                out.push((
                    label.clone(),
                    coords.map_err(|_| CliError("completed coordinates exceed i64".to_string()))?,
                ));
            }
            let contexts = cg.maximal_cliques();
            Ok(Outcome::ok(json!({
                "completed": vectors_to_json(d, &out),
                "contexts": contexts,
                "added": log.added,
                "aliased": log.aliased,
                "freely_completable": free.free,
                "unital": is_unital(&cr, &cg.maximal_cliques()),
            })))
        }
        Cmd::Extend { input } => {
            let s = scenario_from_any(&load_json(input)?)?;
            match maximal_extension(&s) {
                Ok(e) => Ok(Outcome::ok(formats::extended_to_json(&e))),
                Err(ExtensionError::NoDimensionFunction(d_max)) => Ok(Outcome::verdict(
                    json!({
                        "extended": null,
                        "no_dimension_function_up_to": d_max,
                    }),
                    true,
                )),
            }
        }
        Cmd::Dimfn {
            input,
            d_max,
            all,
            d,
            cap,
        } => {
            let (g, _) = graph_from_any(&load_json(input)?)?;
            let cliques = g.maximal_cliques();
            if *all {
                let d = d.expect("clap enforces --d with --all");
                let solutions =
                    all_dimension_functions(&g, &cliques, d, cap.unwrap_or(10_000))?;
                let empty = solutions.is_empty();
                Ok(Outcome::verdict(
                    json!({
                        "d": d,
                        "solutions": serde_json::to_value(&solutions)?,
                    }),
                    empty,
                ))
            } else {
                let bound = d_max.unwrap_or(g.vertex_count().max(1) as u64);
                match solve_dimension_function(&g, &cliques, bound) {
                    Ok(sol) => Ok(Outcome::ok(serde_json::to_value(&sol)?)),
                    Err(DiophantineError::NoSolutionUpTo(n)) => Ok(Outcome::verdict(
                        json!({ "solution": null, "no_solution_up_to": n }),
                        true,
                    )),
                    Err(e) => Err(e.into()),
                }
            }
        }
        Cmd::StabCheck { state, cap } => {
            let (st, s, _) = state_and_scenario(state)?;
            let model = stab_membership_state(&st, &s, *cap)?;
            match model {
                Some(m) => Ok(Outcome::ok(json!({
                    "member": true,
                    "model": formats::model_to_json(&m),
                }))),
                None => Ok(Outcome::verdict(
                    json!({ "member": false, "model": null }),
                    true,
                )),
            }
        }
        Cmd::QstabCheck { state } => {
            let (st, s, _) = state_and_scenario(state)?;
            if !check_no_disturbance(&st, &s) {
                return Err(CliError("state violates no-disturbance".to_string()));
            }
            let weights: BTreeMap<String, Rat> = s
                .atoms()
                .iter()
                .map(|a| {
                    let w = st
                        .atom_value(a.label())
                        .expect("valid states cover every atom")
                        .clone();
                    (a.label().to_string(), w)
                })
                .collect();
            let c = Correlation::new(weights)?;
            let g = compatibility_graph(&s);
            let member = qstab_membership(&c, &g);
            Ok(Outcome::verdict(json!({ "member": member }), !member))
        }
        Cmd::Functional {
            functional,
            state,
            scenario,
            cap,
        } => {
            let f = functional_from_json(&load_json(functional)?)?;
            let args = StateArgs {
                state: state.clone(),
                scenario: scenario.clone(),
            };
            let (st, s, state_approx) = state_and_scenario(&args)?;
            let eval = evaluate_functional(&st, &s, &f, *cap)?;
            let exceeds = eval.value > eval.classical_max;
            Ok(Outcome::ok(json!({
                "value": rat_to_string(&eval.value),
                "classical_max": rat_to_string(&eval.classical_max),
                "approx": eval.approx || state_approx,
                "exceeds_classical_max": exceeds,
            })))
        }
        Cmd::Catalog { which } => match which {
            CatalogCmd::List => Ok(Outcome::ok(json!({ "names": catalog::names() }))),
            CatalogCmd::Export { name } => {
                let item = catalog::get(name).ok_or_else(|| {
                    CliError(format!(
                        "unknown catalog entry {name:?}; names: {:?}",
                        catalog::names()
                    ))
                })?;
                let v = match item {
                    CatalogItem::Scenario(s) => formats::scenario_to_json(&s),
                    CatalogItem::ScenarioWithEmbedding(s, t) => json!({
                        "scenario": formats::scenario_to_json(&s),
                        "embedding": formats::embedding_to_json(&t),
                    }),
                    CatalogItem::Vectors { d, raw } => vectors_to_json(d, &raw),
                    CatalogItem::State {
                        scenario,
                        state,
                        approx,
                    } => json!({
                        "scenario": formats::scenario_to_json(&scenario),
                        "state": formats::state_to_json(&state),
                        "approx": approx,
                    }),
                    CatalogItem::Functional(f) => formats::functional_to_json(&f),
                };
                Ok(Outcome::ok(v))
            }
        },
        Cmd::Verify {
            artifact,
            scenario,
            graph,
            state,
        } => verify_artifact(artifact, scenario.as_deref(), graph.as_deref(), state.as_deref()),
    }
}

fn proper_colouring(col: &Colouring, g: &OrthoGraph, max_colours: usize) -> bool {
    if !g.vertices().iter().all(|v| col.map.contains_key(v)) {
        return false;
    }
    if col.map.values().any(|&c| c >= max_colours) {
        return false;
    }
    g.edge_indices()
        .iter()
        .all(|&(i, j)| col.map[g.label(i)] != col.map[g.label(j)])
}

/// The extended graph, ambient dimension, and maximal contexts backing a
/// scenario-based witness.
fn scenario_backing(path: &str) -> Result<(OrthoGraph, u64, Scenario), CliError> {
    let s = scenario_from_any(&load_json(path)?)?;
    let e = maximal_extension(&s).map_err(|e| CliError(e.to_string()))?;
    let g = extended_graph(&e);
    let d = e.extended().d().expect("extension fixes d");
    Ok((g, d, s))
}

fn graph_backing(path: &str) -> Result<(OrthoGraph, Option<u64>), CliError> {
    let (g, d) = graph_from_any(&load_json(path)?)?;
    Ok((g, d.map(|d| d as u64)))
}

fn verdictish(
    v: &Value,
    scenario: Option<&str>,
    graph: Option<&str>,
) -> Result<(bool, String), CliError> {
    let (gstar, d, cat_acyclic) = match (scenario, graph) {
        (Some(path), _) => {
            let (g, d, s) = scenario_backing(path)?;
            let cc = build_context_category(&s);
            (g, d, Some(is_acyclic(&cc)))
        }
        (None, Some(path)) => {
            let (g, d) = graph_backing(path)?;
            let d = d.or_else(|| v.get("d").and_then(Value::as_u64)).ok_or_else(|| {
                CliError("graph input carries no dimension; pass a vector file".to_string())
            })?;
            let chordal = g.is_chordal();
            (g, d, Some(chordal))
        }
        (None, None) => {
            return Err(CliError(
                "verifying a verdict needs --scenario or --graph".to_string(),
            ))
        }
    };
    if v.get("d").and_then(Value::as_u64) != Some(d) {
        return Ok((false, "d mismatch".to_string()));
    }
    let claimed_chi = v
        .get("chi_Gstar")
        .or_else(|| v.get("chi_gstar"))
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError("missing chi_Gstar".to_string()))? as usize;
    if let Some(label) = v.get("label") {
        let label: ClassicalityLabel = serde_json::from_value(label.clone())?;
        let acyclic = v.get("acyclic").and_then(Value::as_bool).unwrap_or(false);
        if let Some(expected) = cat_acyclic {
            if acyclic != expected {
                return Ok((false, "acyclicity flag mismatch".to_string()));
            }
        }
        let contextual = label == ClassicalityLabel::KsContextual;
        if !contextual && acyclic != (label == ClassicalityLabel::FullyClassical) {
            return Ok((false, "label inconsistent with acyclicity".to_string()));
        }
        return verify_verdict_core(v, contextual, claimed_chi, &gstar, d);
    }
    let contextual = v
        .get("contextual")
        .and_then(Value::as_bool)
        .ok_or_else(|| CliError("missing contextual flag".to_string()))?;
    verify_verdict_core(v, contextual, claimed_chi, &gstar, d)
}

fn verify_verdict_core(
    v: &Value,
    contextual: bool,
    claimed_chi: usize,
    gstar: &OrthoGraph,
    d: u64,
) -> Result<(bool, String), CliError> {
    if contextual {
        let Some(obs) = v.get("obstruction") else {
            return Ok((false, "contextual verdict lacks an obstruction".to_string()));
        };
        let obs: crate::ks_decision::KsObstruction = serde_json::from_value(obs.clone())?;
        if obs.d != d || obs.chi_gstar != claimed_chi || claimed_chi <= d as usize {
            return Ok((false, "obstruction does not dominate d".to_string()));
        }
        // integrity of the exhausted search instance
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(gstar.to_dimacs());
        hasher.update(format!(":d={d}:chi={}", obs.chi_gstar));
        let expected: String = hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        if expected != obs.trace_hash {
            return Ok((false, "trace hash mismatch".to_string()));
        }
        Ok((true, "obstruction".to_string()))
    } else {
        if claimed_chi != d as usize {
            return Ok((false, "noncontextual verdict must report chi = d".to_string()));
        }
        let Some(witness) = v.get("witness") else {
            return Ok((false, "noncontextual verdict lacks a witness".to_string()));
        };
        let w: KsWitness = serde_json::from_value(witness.clone())?;
        match w {
            KsWitness::DColouring(col) => Ok((
                proper_colouring(&col, gstar, d as usize),
                "colouring".to_string(),
            )),
            _ => Ok((false, "unexpected witness kind for a verdict".to_string())),
        }
    }
}

fn verify_witness(
    w: &KsWitness,
    scenario: Option<&str>,
    graph: Option<&str>,
) -> Result<(bool, String), CliError> {
    match w {
        KsWitness::DColouring(col) => {
            let (g, d) = match (scenario, graph) {
                (Some(path), _) => {
                    let (g, d, _) = scenario_backing(path)?;
                    (g, d)
                }
                (None, Some(path)) => {
                    let (g, d) = graph_backing(path)?;
                    let d = d.unwrap_or(col.k as u64);
                    (g, d)
                }
                _ => return Err(CliError("colouring witness needs --scenario or --graph".to_string())),
            };
            Ok((proper_colouring(col, &g, d as usize), "colouring".to_string()))
        }
        KsWitness::FlatConnection { maps } => {
            let path = scenario
                .ok_or_else(|| CliError("connection witness needs --scenario".to_string()))?;
            let s = scenario_from_any(&load_json(path)?)?;
            let conn = ContextConnection::from_witness_maps(maps)
                .ok_or_else(|| CliError("malformed connection maps".to_string()))?;
            let contexts = s.max_contexts().to_vec();
            let ok = conn.verify(&contexts) && flat_on_all_simple_cycles(&conn, &contexts);
            Ok((ok, "flat_connection".to_string()))
        }
        KsWitness::ClassicalEmbedding {
            valuations,
            atom_to_valuations,
        } => {
            let path = scenario
                .ok_or_else(|| CliError("embedding witness needs --scenario".to_string()))?;
            let s = scenario_from_any(&load_json(path)?)?;
            for val in valuations {
                let set: std::collections::BTreeSet<&String> = val.iter().collect();
                for c in s.max_contexts() {
                    let hits = c.labels().iter().filter(|l| set.contains(l)).count();
                    if hits != 1 {
                        return Ok((false, "valuation misses a context".to_string()));
                    }
                }
            }
            for (atom, ixs) in atom_to_valuations {
                for i in ixs {
                    if *i >= valuations.len() || !valuations[*i].contains(atom) {
                        return Ok((false, "support table mismatch".to_string()));
                    }
                }
            }
            Ok((true, "classical_embedding".to_string()))
        }
    }
}

fn verify_artifact(
    artifact: &str,
    scenario: Option<&str>,
    graph: Option<&str>,
    state: Option<&str>,
) -> Result<Outcome, CliError> {
    let a = load_json(artifact)?;
    let (verified, kind): (bool, String) = if a.get("label").is_some()
        || a.get("contextual").is_some()
    {
        verdictish(&a, scenario, graph)?
    } else if a.get("kind").is_some() {
        let w: KsWitness = serde_json::from_value(a.clone())?;
        verify_witness(&w, scenario, graph)?
    } else if let (Some(found), witness) = (a.get("found"), a.get("witness")) {
        // connection-check output
        if found == &Value::Bool(true) {
            let w: KsWitness =
                serde_json::from_value(witness.cloned().unwrap_or(Value::Null))?;
            verify_witness(&w, scenario, graph)?
        } else {
            (false, "negative result carries no witness".to_string())
        }
    } else if a.get("valuations").is_some() && a.get("weights").is_some() {
        let m = model_from_json(&a)?;
        let (s, st) = model_backing(scenario, state)?;
        let ok = m.is_convex() && m.reproduces_state(&st, &s);
        (ok, "classical_model".to_string())
    } else if a.get("member").is_some() && a.get("model").is_some() {
        // stab-check output
        match a.get("model") {
            Some(Value::Null) => (false, "negative result carries no witness".to_string()),
            Some(mv) => {
                let m = model_from_json(mv)?;
                let (s, st) = model_backing(scenario, state)?;
                let ok = m.is_convex() && m.reproduces_state(&st, &s);
                (ok, "classical_model".to_string())
            }
            None => unreachable!(),
        }
    } else if a.get("embedding").is_some() && a.get("scenario").is_some() {
        // catalog export bundle: scenario plus a two-valued embedding table
        let s = scenario_from_any(&a)?;
        let t = embedding_from_value(a.get("embedding").unwrap())?;
        (catalog::verify_embedding(&s, &t), "embedding_table".to_string())
    } else if a.get("lambda_points").is_some() && a.get("event_supports").is_some() {
        let spath = scenario
            .ok_or_else(|| CliError("embedding tables verify against --scenario".to_string()))?;
        let s = scenario_from_any(&load_json(spath)?)?;
        let t = embedding_from_value(&a)?;
        (catalog::verify_embedding(&s, &t), "embedding_table".to_string())
    } else if a.get("dims").is_some() && a.get("d").is_some() {
        let sol: crate::diophantine::DimSolution = serde_json::from_value(a.clone())?;
        let gpath = scenario.or(graph).ok_or_else(|| {
            CliError("dimension solutions verify against --graph".to_string())
        })?;
        let (g, _) = graph_backing(gpath)?;
        let cliques = g.maximal_cliques();
        let covers = g
            .vertices()
            .iter()
            .all(|v| sol.dims.contains_key(v));
        (covers && sol.satisfies(&cliques), "dim_solution".to_string())
    } else if a.get("colouring").is_some() {
        // color output wrapper
        match a.get("colouring") {
            Some(Value::Null) => (false, "negative result carries no witness".to_string()),
            Some(cv) => {
                let col: Colouring = serde_json::from_value(cv.clone())?;
                let d = a
                    .get("d")
                    .and_then(Value::as_u64)
                    .unwrap_or(col.k as u64);
                let gpath = graph.or(scenario).ok_or_else(|| {
                    CliError("colouring verification needs --graph".to_string())
                })?;
                let (g, _) = graph_backing(gpath)?;
                let proper = proper_colouring(&col, &g, d as usize);
                let uniform = g
                    .maximal_cliques()
                    .iter()
                    .all(|c| c.len() == d as usize);
                (proper && uniform, "context_uniform_colouring".to_string())
            }
            None => unreachable!(),
        }
    } else {
        return Err(CliError(
            "unrecognised artifact; expected a report, verdict, witness, model, colouring, embedding, or dimension solution".to_string(),
        ));
    };
    Ok(Outcome::verdict(
        json!({ "verified": verified, "kind": kind }),
        !verified,
    ))
}

/// Scenario and state for model replay. Either flag may point at a bundle
/// holding both; whichever is present backs the missing one.
fn model_backing(
    scenario: Option<&str>,
    state: Option<&str>,
) -> Result<(Scenario, State), CliError> {
    let spath = scenario
        .or(state)
        .ok_or_else(|| CliError("model verification needs --scenario or --state".to_string()))?;
    let s = scenario_from_any(&load_json(spath)?)?;
    let stpath = state
        .or(scenario)
        .ok_or_else(|| CliError("model verification needs --state".to_string()))?;
    let sv = load_json(stpath)?;
    let st = state_from_json(sv.get("state").unwrap_or(&sv), &s)?;
    Ok((s, st))
}

fn embedding_from_value(v: &Value) -> Result<catalog::EmbeddingTable, CliError> {
    let lambda_points: Vec<String> =
        serde_json::from_value(v.get("lambda_points").cloned().unwrap_or(Value::Null))?;
    let event_supports: BTreeMap<String, std::collections::BTreeSet<String>> =
        serde_json::from_value(v.get("event_supports").cloned().unwrap_or(Value::Null))?;
    Ok(catalog::EmbeddingTable {
        lambda_points,
        event_supports,
    })
}
