//! Wreath products A wr B: generators, presentations, and the smaller first
//! block available when maps are (U, a)-connected.
//!
//! cargo run --example wreath_products

use actforge::family::{monoid_by_name, small_acts};
use actforge::suite::small_presentation;
use actforge::wreath::{
    check_connectedness_hypothesis, left_zero_u, reduce_t1, wreath_act, wreath_factor_presentations,
    wreath_generating_set, wreath_presentation,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = monoid_by_name("Z2").expect("family monoid");
    let e2 = monoid_by_name("E2").expect("family monoid");
    let a = small_acts(&z2, 2)[2].value.clone();
    let b = small_acts(&e2, 2)[2].value.clone();

    let wa = wreath_act(&a, &b)?;
    println!("W(Z2, E2 | Z2) has {} elements; A wr B has {}", wa.w.monoid.order(), wa.act.size());

    let (pa, pb) = (small_presentation(&a)?, small_presentation(&b)?);
    let gens = wreath_generating_set(&wa, &pa.assign, &pb.assign)?;
    println!("generated by {:?}", gens.iter().map(|&g| wa.act.label(g)).collect::<Vec<_>>());

    let full = wreath_presentation(&wa, &pa, &pb)?;
    println!("presentation: T1 {}, T2 {}, T3 {} relations", full.t1.len(), full.t2.len(), full.t3.len());
    let (fa, fb) = wreath_factor_presentations(&wa, &full.bound)?;
    println!("factor presentations hold: {} {}", fa.verify(&a).holds(), fb.verify(&b).holds());

    // E2's zero is a left zero, so U = {phi_x} suffices for the first block.
    let z = e2.left_zeros()[0];
    let u = left_zero_u(&wa.w, &full.x, z)?;
    for (theta, x, cert) in check_connectedness_hypothesis(&wa.w, &u, &full.x)? {
        let target = wa.w.constant(theta.at(x));
        cert.replay(&wa.w.n, &u, x, &theta, &target).expect("chain replays");
        println!("  {theta} ~ {target} at {x} in {} steps", cert.len());
    }
    let reduced = reduce_t1(&wa, &full, &u)?;
    println!(
        "reduced first block: {} -> {} relations, holds: {}",
        full.t1.len(),
        reduced.t1.len(),
        reduced.bound.verify(&wa.act).holds()
    );
    Ok(())
}
