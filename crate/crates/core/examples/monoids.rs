//! Building finite monoids from tables and from the standard constructions.
//!
//! cargo run --example monoids

use actforge::act::right_regular_act;
use actforge::monoid::{
    adjoin_zero, attach_act_monoid, direct_product_monoid, full_transformation_monoid, validate_monoid,
    FiniteMonoid,
};
use std::sync::Arc;

fn show(name: &str, m: &FiniteMonoid) {
    println!("{name}: order {}, identity {}", m.order(), m.label(m.identity()));
    for a in m.elements() {
        let row: Vec<String> = m.elements().map(|b| m.label(m.mul(a, b))).collect();
        println!("  {:>4} | {}", m.label(a), row.join(" "));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A table typed in by hand: {1, a, 0} with a^2 = 0.
    let m = validate_monoid(3, &[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]], 0)?;
    show("nilpotent", &m);

    // Associativity failures name the offending triple.
    let bad = validate_monoid(3, &[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 1]], 0);
    println!("broken table: {}", bad.unwrap_err());

    let z2 = FiniteMonoid::cyclic_group(2)?;
    let e2 = FiniteMonoid::semilattice_chain(2)?;
    show("Z2 x E2", &direct_product_monoid(&z2, &e2)?);
    show("E2^0", &adjoin_zero(&e2));

    let z2 = Arc::new(z2);
    show("U(Z2, Z2)", &attach_act_monoid(&z2, &right_regular_act(&z2))?);

    let t2 = full_transformation_monoid(2)?;
    println!("T2 monoid generators: {:?}", t2.greedy_generators());
    println!("left zeros of the 2-element left-zero band: {:?}", FiniteMonoid::left_zero_band(2)?.left_zeros());
    Ok(())
}
