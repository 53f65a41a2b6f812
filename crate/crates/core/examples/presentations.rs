//! Presentations of acts: build, verify against the target, reduce.
//!
//! cargo run --example presentations

use actforge::act::minimal_generating_set;
use actforge::family::{monoid_by_name, small_acts};
use actforge::presentation::{
    canonical_presentation, is_consequence, is_irredundant, kernel_presentation, reduce_presentation,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t2 = monoid_by_name("T2").expect("family monoid");
    for a in small_acts(&t2, 4) {
        let act = &a.value;
        let gens = minimal_generating_set(act).elems;
        let full = kernel_presentation(act, &gens)?;
        let reduced = reduce_presentation(&full, act)?;
        let canonical = canonical_presentation(act, &t2.greedy_generators())?;
        println!(
            "T2/{:<14} kernel {:>3} relations, reduced {:>2} (irredundant: {}), canonical {:>3}",
            a.name,
            full.relations().len(),
            reduced.relations().len(),
            is_irredundant(&reduced, act)?,
            canonical.relations().len()
        );
        for r in reduced.relations() {
            println!("    {} = {}", r.lhs, r.rhs);
        }
        let report = reduced.verify(act);
        assert!(report.holds());

        // Dropping a relation breaks the kernel match, and the report says where.
        if let Some((_, rest)) = reduced.relations().split_first() {
            let weaker = actforge::presentation::BoundPresentation {
                presentation: reduced.presentation.with_relations(rest.to_vec()),
                assign: reduced.assign.clone(),
            };
            if let Some(w) = weaker.verify(act).witness {
                println!("    without the first relation: {w}");
            }
            let first = reduced.relations()[0];
            let derived = is_consequence(&weaker.presentation, first.lhs, first.rhs)?;
            println!("    first relation derivable from the rest: {}", derived.is_some());
        }
    }
    Ok(())
}
