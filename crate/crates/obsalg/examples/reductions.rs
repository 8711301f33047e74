//! Shrinking a context poset four ways: dropping the bottom element,
//! regenerating from maximal or from minimal elements, and merging the
//! finest contexts into coarse atoms. Each move can forget structure,
//! but none of them flips the contextuality verdict.

use obsalg::algebra_core::{
    build_context_category, coarse_grain, downward_generated, scenario_from_poset, truncate,
    upward_generated,
};
use obsalg::catalog::n_cycle;
use obsalg::ks_decision::is_ks_contextual;

fn main() {
    let s = n_cycle(5, 3, &[1; 5]).unwrap();
    let base = is_ks_contextual(&s).unwrap().contextual;
    let cc = build_context_category(&s);
    println!(
        "5-ring poset: {} elements ({} maximal), contextual = {base}",
        cc.len(),
        cc.maximal_elements().len()
    );

    for (name, reduced) in [
        ("truncate", truncate(&cc)),
        ("downward closure of maximal elements", downward_generated(&cc)),
        ("upward closure of minimal elements", upward_generated(&cc)),
    ] {
        let rs = scenario_from_poset(&reduced, &s).unwrap();
        let v = is_ks_contextual(&rs).unwrap().contextual;
        println!(
            "{name}: {} elements, verdict preserved = {}",
            reduced.len(),
            v == base
        );
    }

    let cg = coarse_grain(&s).unwrap();
    let v = is_ks_contextual(&cg).unwrap().contextual;
    println!(
        "coarse grain: {} atoms -> {} atoms, verdict preserved = {}",
        s.atoms().len(),
        cg.atoms().len(),
        v == base
    );
    for a in cg.atoms().iter().take(4) {
        println!("  coarse atom {}", a.label());
    }

    // On this poset the two regenerations commute and their composite is
    // a fixpoint. That is a property of the instance, not of the
    // operations: posets with dangling contexts break the exchange.
    let du = downward_generated(&upward_generated(&cc));
    let ud = upward_generated(&downward_generated(&cc));
    println!(
        "composite agreement on this instance: {}",
        du.elements() == ud.elements() && upward_generated(&du).elements() == du.elements()
    );
}
