//! Probabilistic boxes on a measurement ring: the all-1/2 box on the odd
//! 5-ring respects no-disturbance and the quantum relaxation, yet no
//! convex mixture of sharp assignments reproduces it. On the even ring
//! the same recipe is harmless.

use obsalg::algebra_core::compatibility_graph;
use obsalg::catalog::{n_cycle, ring_half_state};
use obsalg::correlations::{
    check_no_disturbance, qstab_membership, separating_classical_state, stab_membership_state,
    Correlation,
};

fn ring_box_report(n: usize) {
    let s = n_cycle(n, 3, &vec![1; n]).unwrap();
    let st = ring_half_state(&s);
    let nd = check_no_disturbance(&st, &s);
    let model = stab_membership_state(&st, &s, None).unwrap();
    let g = compatibility_graph(&s);
    let weights = s
        .atoms()
        .iter()
        .map(|a| {
            let w = st.atom_value(a.label()).unwrap().clone();
            (a.label().to_string(), w)
        })
        .collect();
    let c = Correlation::new(weights).unwrap();
    println!(
        "half box on the {n}-ring: no-disturbance {}, classical {}, quantum relaxation {}",
        nd,
        model.is_some(),
        qstab_membership(&c, &g)
    );
    if let Some(m) = model {
        println!("  classical model on {} valuations", m.valuations.len());
    }
}

fn main() {
    ring_box_report(5);
    ring_box_report(4);

    // Classical states can do more than reproduce a box: on a classical
    // scenario a single state can give every atom a distinct nonzero
    // probability, pinning each atom down observationally.
    let s = n_cycle(6, 3, &[1; 6]).unwrap();
    match separating_classical_state(&s, None).unwrap() {
        Some((st, model)) => {
            let mut values: Vec<String> = s
                .atoms()
                .iter()
                .map(|a| st.atom_value(a.label()).unwrap().to_string())
                .collect();
            println!(
                "separating state on the 6-ring: {} distinct atom weights from {} valuations",
                values.len(),
                model.valuations.len()
            );
            values.truncate(3);
            println!("  first atom weights: {}", values.join(", "));
        }
        None => println!("6-ring: no separating classical state"),
    }
}
