//! Diagonal acts M x M: generating sets, zero extensions, products and the
//! attached-act monoid.
//!
//! cargo run --example diagonal_acts

use actforge::diagonal::{
    attach_act_generators, diagonal_act, product_diagonal_presentation, rectangular_generating_set,
    square_generating_set, zero_extension_generators, zero_extension_presentation,
};
use actforge::family::{monoid_by_name, small_acts, small_monoids};
use actforge::monoid::{adjoin_zero, direct_product_monoid};
use actforge::presentation::{kernel_presentation, reduce_presentation};
use actforge::suite::diagonal_presentation;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<10} {:>4} {:>10} {:>12}", "monoid", "|M|", "square U", "rect U x V");
    for m in small_monoids() {
        let sq = square_generating_set(&m.value);
        let rect = rectangular_generating_set(&m.value);
        println!(
            "{:<10} {:>4} {:>10} {:>12}",
            m.name,
            m.value.order(),
            sq.u.len(),
            format!("{} x {}", rect.u.len(), rect.v.len())
        );
    }

    let e2 = monoid_by_name("E2").expect("family monoid");
    let u = square_generating_set(&e2).u;
    let z = zero_extension_generators(&e2, &u)?;
    println!("E2^0 diagonal generators: {} pairs, generating: {}", z.pairs.len(), z.generates()?);

    let pd = diagonal_presentation(&e2, &u, &u)?;
    let rr = actforge::act::right_regular_act(&e2);
    let pm = reduce_presentation(&kernel_presentation(&rr, &u)?, &rr)?;
    let p0 = zero_extension_presentation(&e2, &pd, &pm)?;
    let diag0 = diagonal_act(&Arc::new(adjoin_zero(&e2)))?;
    println!("E2^0 diagonal presentation: {} relations, holds: {}", p0.relations().len(), p0.verify(&diag0).holds());

    let z2 = monoid_by_name("Z2").expect("family monoid");
    let v = square_generating_set(&z2).u;
    let pz = diagonal_presentation(&z2, &v, &v)?;
    let prod = product_diagonal_presentation(&e2, &z2, &pd, &pz)?;
    let diag = diagonal_act(&Arc::new(direct_product_monoid(&e2, &z2)?))?;
    println!(
        "E2 x Z2 diagonal: blocks {} + {} + {} relations, holds: {}",
        prod.t1.len(),
        prod.t2.len(),
        prod.generator_sides.len(),
        prod.bound.verify(&diag).holds()
    );

    let act = &small_acts(&z2, 2)[2].value;
    let gens = attach_act_generators(&z2, act, &[0], &[z2.identity(), 1])?;
    println!("U(Z2, Z2) diagonal generated by {} pairs", gens.pairs.len());
    Ok(())
}
