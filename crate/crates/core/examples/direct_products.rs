//! Generating sets and presentations of A x B from those of A, B and the
//! diagonal act.
//!
//! cargo run --example direct_products

use actforge::act::direct_product_act;
use actforge::diagonal::square_generating_set;
use actforge::family::{monoid_by_name, small_acts};
use actforge::product::{crucial_identity_check, dp_factor_presentation, dp_presentation, DiagonalDecomposition};
use actforge::suite::{diagonal_presentation, small_presentation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = monoid_by_name("T2").expect("family monoid");
    let sq = square_generating_set(&m);
    let d = DiagonalDecomposition::build(&m, &sq.u, &sq.v)?;
    println!("T2: U = {:?}, V = {:?}, identity check: {}", d.u, d.v, crucial_identity_check(&m, &d));
    let pdiag = diagonal_presentation(&m, &d.u, &d.v)?;

    let acts = small_acts(&m, 3);
    for a in &acts {
        for b in &acts {
            let (pa, pb) = (small_presentation(&a.value)?, small_presentation(&b.value)?);
            let p = dp_presentation(&a.value, &b.value, &pa, &pb, &pdiag, &d)?;
            let target = direct_product_act(&a.value, &b.value)?;
            let factor = dp_factor_presentation(&p.bound, &a.value, &b.value, &pa.assign, &d.u)?;
            println!(
                "{:>12} x {:<12} |Z| = {:>2}, relations {:>4} (T1 {}, T2 {}, T3 {}, bare {}), holds {}, factor holds {}",
                a.name,
                b.name,
                p.generators.z.len(),
                p.bound.relations().len(),
                p.t1.len(),
                p.t2.len(),
                p.t3.len(),
                p.generator_sides.len(),
                p.bound.verify(&target).holds(),
                factor.bound.verify(&a.value).holds()
            );
        }
    }
    Ok(())
}
