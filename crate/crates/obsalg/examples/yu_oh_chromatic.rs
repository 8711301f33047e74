//! Thirteen rays in dimension three whose orthogonality graph needs four
//! colours. Since a sharp outcome assignment is exactly a colouring with
//! as many colours as the dimension, the chromatic excess rules every
//! assignment out at once, with no state involved.

use obsalg::catalog::{yu_oh, YuOhVariant};
use obsalg::ks_decision::graph_verdict;
use obsalg::realization::graph_from_vectors;

fn main() {
    let (d, rays) = yu_oh(YuOhVariant::Thirteen);
    let (g, _) = graph_from_vectors(d, &rays).unwrap();
    println!(
        "13-ray set: {} vertices, {} orthogonal pairs, {} maximal cliques",
        g.vertex_count(),
        g.edge_indices().len(),
        g.maximal_cliques().len()
    );

    let (chi, witness) = g.chromatic_number();
    println!("chromatic number {chi} vs dimension {d}");
    assert!(witness.map.len() == g.vertex_count());

    let verdict = graph_verdict(&g, d as u64);
    println!(
        "graph-level verdict: contextual = {} (chi(G*) = {})",
        verdict.contextual, verdict.chi_gstar
    );

    // Swapping one ray for three others keeps every orthogonality argument
    // intact but drops the chromatic number to three: this variant cannot
    // be refuted by counting colours alone.
    let (d, rays) = yu_oh(YuOhVariant::Fifteen);
    let (g15, _) = graph_from_vectors(d, &rays).unwrap();
    let (chi15, _) = g15.chromatic_number();
    println!(
        "15-ray variant: {} vertices, chromatic number {chi15}",
        g15.vertex_count()
    );
    let verdict15 = graph_verdict(&g15, d as u64);
    println!(
        "graph-level verdict: contextual = {} (a 3-colouring exists)",
        verdict15.contextual
    );
}
