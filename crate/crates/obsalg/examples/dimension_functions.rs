//! Assigning an outcome-space dimension to every vertex so that each
//! maximal clique sums to the same total. The solver works over the
//! integers, enumerates all solutions on request, and reports the exact
//! bound when no assignment exists.

use obsalg::catalog::{yu_oh, YuOhVariant};
use obsalg::diophantine::{all_dimension_functions, solve_dimension_function, DiophantineError};
use obsalg::ortho_graph::OrthoGraph;
use obsalg::realization::graph_from_vectors;

fn main() {
    let edge = OrthoGraph::new(&["u", "v"], &[("u", "v")]).unwrap();
    let cliques = edge.maximal_cliques();
    let sols = all_dimension_functions(&edge, &cliques, 3, 100).unwrap();
    println!("single edge, total 3: {} assignments", sols.len());
    for s in &sols {
        println!("  {:?}", s.dims);
    }

    // A triangle is one clique of size three, so nothing fits below 3.
    let k3 = OrthoGraph::new(
        &["a", "b", "c"],
        &[("a", "b"), ("a", "c"), ("b", "c")],
    )
    .unwrap();
    let cliques = k3.maximal_cliques();
    match solve_dimension_function(&k3, &cliques, 2) {
        Err(DiophantineError::NoSolutionUpTo(d)) => {
            println!("triangle: no assignment with total <= {d}")
        }
        other => println!("triangle: unexpected {other:?}"),
    }
    let sol = solve_dimension_function(&k3, &cliques, 3).unwrap();
    println!("triangle at total {}: {:?}", sol.d, sol.dims);

    // Feasibility of the dimension equations says nothing about
    // colourability: the odd 5-cycle solves at total 2 per edge, yet it
    // has no 2-colouring.
    let c5 = OrthoGraph::new(
        &["v0", "v1", "v2", "v3", "v4"],
        &[
            ("v0", "v1"),
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v4", "v0"),
        ],
    )
    .unwrap();
    let cliques = c5.maximal_cliques();
    let sol = solve_dimension_function(&c5, &cliques, 2).unwrap();
    println!(
        "odd 5-cycle: dims {:?} at total {}, 2-colourable: {}",
        sol.dims,
        sol.d,
        c5.k_colouring(2).is_some()
    );

    let (d, rays) = yu_oh(YuOhVariant::Thirteen);
    let (g, _) = graph_from_vectors(d, &rays).unwrap();
    let sol = solve_dimension_function(&g, &g.maximal_cliques(), d as u64).unwrap();
    println!(
        "13-ray graph: every vertex rank one, clique total {} (as realised)",
        sol.d
    );
}
