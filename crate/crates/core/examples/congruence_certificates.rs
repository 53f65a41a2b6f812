//! Congruences generated by pairs, with derivations that replay step by step.
//!
//! cargo run --example congruence_certificates

use actforge::act::right_regular_act;
use actforge::congruence::{congruence_closure, connect_sequence, quotient_act, Direction};
use actforge::family::monoid_by_name;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t2 = monoid_by_name("T2").expect("family monoid");
    let act = right_regular_act(&t2);
    let seeds = [(0, 1)];
    let cong = congruence_closure(&act, &seeds);
    println!("T2 acting on itself, seed (1, {}):", act.label(1));
    println!("  {} classes: {:?}", cong.num_classes(), cong.classes());

    for b in 0..act.size() {
        let Some(cert) = connect_sequence(&act, &seeds, 0, b) else {
            println!("  1 and {} are not related", act.label(b));
            continue;
        };
        let chain = cert.trace(&act, &seeds, 0).expect("certificate replays");
        let steps: Vec<String> = cert
            .steps
            .iter()
            .map(|s| {
                let arrow = if s.direction == Direction::Forward { "->" } else { "<-" };
                format!("pair{}{arrow}*{}", s.pair, t2.label(s.multiplier))
            })
            .collect();
        let path: Vec<String> = chain.iter().map(|&e| act.label(e)).collect();
        println!("  1 ~ {}: {} via [{}]", act.label(b), path.join(" = "), steps.join(", "));
        cert.replay(&act, &seeds, 0, b).expect("replays");
    }

    let (q, proj) = quotient_act(&act, &cong)?;
    println!("quotient has {} elements; projection {:?}", q.size(), proj);
    Ok(())
}
