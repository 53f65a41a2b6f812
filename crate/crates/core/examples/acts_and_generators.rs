//! Acts over a monoid, their generating sets, and free acts.
//!
//! cargo run --example acts_and_generators

use actforge::act::{direct_product_act, free_act, is_free, is_generating_set, minimal_generating_set};
use actforge::family::{monoid_by_name, small_acts};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t2 = monoid_by_name("T2").expect("family monoid");
    for a in small_acts(&t2, 4) {
        let gens = minimal_generating_set(&a.value).elems;
        let labels: Vec<String> = gens.iter().map(|&g| a.value.label(g)).collect();
        println!("T2/{:<14} size {}  generated by {{{}}}", a.name, a.value.size(), labels.join(", "));
    }

    let z2 = monoid_by_name("Z2").expect("family monoid");
    let acts = small_acts(&z2, 2);
    let (reg, triv) = (&acts[2].value, &acts[0].value);
    let prod = direct_product_act(reg, triv)?;
    println!("Z2: regular x trivial has {} elements, rank {}", prod.size(), minimal_generating_set(&prod).elems.len());
    println!("  is {{(1,0)}} generating? {}", is_generating_set(&prod, &[0]));

    let f = free_act(2, &z2)?;
    println!("free Z2-act on 2 generators: {} elements, basis {:?}", f.act().size(), f.basis());
    println!("  recognised as free with basis {:?}", is_free(f.act()));
    Ok(())
}
