//! Exact decision procedures for Kochen-Specker (KS) contextuality of finite
//! observable algebras.
//!
//! An observable algebra is presented as a *scenario*: a finite set of atomic
//! events together with its maximal contexts (the maximal sets of atoms that
//! can be measured jointly). Everything downstream is computed with exact
//! integer and rational arithmetic; there is no floating point in any
//! decision path.
//!
//! The crate is organised bottom-up:
//!
//! - [`ortho_graph`]: finite graphs with exact clique, colouring and
//!   chordality algorithms.
//! - [`algebra_core`]: scenarios, their context categories (intersection
//!   closures), compatibility graphs, acyclicity, and the reduction
//!   operations (truncation, downward / upward generation, coarse-graining).
//! - [`realization`]: rational vector realisations, orthogonality graphs from
//!   vectors, completion to a unital algebra, free completability.
//! - [`extension`]: the maximal extension of a scenario (splitting
//!   higher-dimensional atoms into fresh rank-1 atoms per context).
//! - [`ks_decision`]: the KS colourability decision, flat context connection
//!   search, and the three-way classification of scenarios.
//! - [`correlations`]: exact no-disturbance states, membership in the
//!   classical (STAB) and clique-constrained (QSTAB) polytopes, separating
//!   classical states, and linear functionals with exact classical bounds.
//! - [`diophantine`]: dimension-function solving over the positive integers.
//! - [`catalog`]: built-in scenarios (CHSH, Yu-Oh, n-cycles, random
//!   families) and the CHSH embedding table.
//! - [`formats`]: serde types and JSON schemas for every artefact.
//! - [`cli`]: the command-line front end used by the `obsalg` binary.
//!
//! Runnable walkthroughs live in `examples/`; each major capability has one,
//! e.g. `cargo run -p obsalg --example chsh_analysis`.

pub mod algebra_core;
pub mod catalog;
pub mod cli;
pub mod correlations;
pub mod diophantine;
pub mod extension;
pub mod formats;
pub mod ks_decision;
pub mod ortho_graph;
pub mod realization;
