//! The Bell scenario as a measurement hypergraph: four two-outcome pair
//! measurements glued along shared marginals. The pipeline finds no
//! outcome-assignment obstruction, yet the no-disturbance polytope still
//! contains boxes no classical mixture reproduces.

use obsalg::algebra_core::{build_context_category, compatibility_graph, is_acyclic};
use obsalg::catalog::{
    chsh, chsh_functional, pr_box_state, tsirelson_demo_state, verify_embedding,
};
use obsalg::correlations::{
    check_no_disturbance, evaluate_functional, qstab_membership, stab_membership_state,
    Correlation,
};
use obsalg::ks_decision::classify;

fn main() {
    let (s, table) = chsh();
    println!(
        "scenario: {} atoms in {} contexts, total dimension {}",
        s.atoms().len(),
        s.max_contexts().len(),
        s.d().unwrap()
    );

    let cc = build_context_category(&s);
    println!("context cycles present: {}", !is_acyclic(&cc));

    let report = classify(&s).unwrap();
    println!("label: {:?}", report.label);
    println!(
        "extended graph colourable with d = {} colours (chi = {})",
        report.d, report.chi_gstar
    );
    println!(
        "explicit classical embedding on {} hidden states verifies: {}",
        table.lambda_points.len(),
        verify_embedding(&s, &table)
    );

    // The colouring verdict speaks about sharp outcome assignments only.
    // Probabilistic boxes on the same scenario can still be non-classical.
    let pr = pr_box_state(&s);
    println!(
        "PR box respects no-disturbance: {}",
        check_no_disturbance(&pr, &s)
    );
    let model = stab_membership_state(&pr, &s, None).unwrap();
    println!("PR box has a classical model: {}", model.is_some());

    let g = compatibility_graph(&s);
    let weights = s
        .atoms()
        .iter()
        .map(|a| {
            let w = pr.atom_value(a.label()).unwrap().clone();
            (a.label().to_string(), w)
        })
        .collect();
    let c = Correlation::new(weights).unwrap();
    println!(
        "PR box inside the quantum relaxation: {}",
        qstab_membership(&c, &g)
    );

    let f = chsh_functional();
    let on_pr = evaluate_functional(&pr, &s, &f, None).unwrap();
    println!(
        "correlation functional on the PR box: {} (classical max {})",
        on_pr.value, on_pr.classical_max
    );
    // The demo state replaces the irrational quantum optimum with a
    // nearby rational box, so this value is a stand-in, not the optimum.
    let ts = tsirelson_demo_state(&s);
    let on_ts = evaluate_functional(&ts, &s, &f, None).unwrap();
    println!(
        "on the near-quantum demo box: {} (still above {})",
        on_ts.value, on_ts.classical_max
    );
}
