//! Flattening coarse outcomes: an atom of dimension k splits into k unit
//! atoms local to its context, after which every maximal context has
//! exactly d unit slots. Colouring the extended graph is the test that
//! matters, and splitting never makes it easier.

use obsalg::algebra_core::{compatibility_graph, Scenario};
use obsalg::extension::{extended_graph, maximal_extension};
use obsalg::formats::scenario_from_json;
use serde_json::json;

fn fat_scenario() -> Scenario {
    scenario_from_json(&json!({
        "atoms": ["a", "b", "c"],
        "max_contexts": [["a", "b"], ["a", "c"]],
        "dim": {"a": 2, "b": 1, "c": 1},
        "d": 3
    }))
    .unwrap()
}

fn main() {
    let s = fat_scenario();
    let e = maximal_extension(&s).unwrap();
    println!(
        "base: {} atoms, extended: {} atoms, every context now has {} slots",
        s.atoms().len(),
        e.extended().atoms().len(),
        e.extended().d().unwrap()
    );
    for (atom, parts) in e.split_map() {
        let labels: Vec<&str> = parts.iter().map(|p| p.label()).collect();
        println!("  {} -> {:?}", atom.label(), labels);
    }
    // Unit atoms keep their own label. Fat atoms get fresh names stamped
    // with their context, so a shared fat atom splits separately in each
    // context it occurs in: two contexts give four replacements here.
    let shared = s.atoms().iter().find(|a| a.label() == "a").unwrap();
    assert_eq!(e.split_map()[shared].len(), 4);

    let g = compatibility_graph(&s);
    let gx = extended_graph(&e);
    let (chi, _) = g.chromatic_number();
    let (chi_x, _) = gx.chromatic_number();
    println!("chromatic number: base {chi}, extended {chi_x} (never smaller)");

    // When the dimension data is left off, the extension solves for it
    // first; a bare triangle of unit atoms extends to itself.
    let bare = scenario_from_json(&json!({
        "atoms": ["x", "y", "z"],
        "max_contexts": [["x", "y", "z"]]
    }))
    .unwrap();
    let e = maximal_extension(&bare).unwrap();
    println!(
        "bare triple: solved d = {}, atoms unchanged = {}",
        e.extended().d().unwrap(),
        e.extended().atoms().len() == bare.atoms().len()
    );
}
