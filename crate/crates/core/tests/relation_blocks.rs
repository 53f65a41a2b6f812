//! The product presentations need relations against bare generators as well
//! as against relation sides; these instances break without them.

use std::sync::Arc;

use actforge::act::direct_product_act;
use actforge::diagonal::{diagonal_act, product_diagonal_presentation, square_generating_set};
use actforge::family::{monoid_by_name, small_acts};
use actforge::monoid::direct_product_monoid;
use actforge::presentation::{ActRelation, BoundPresentation};
use actforge::product::{dp_presentation, DiagonalDecomposition};
use actforge::suite::{diagonal_presentation, small_presentation};

fn with_only(p: &BoundPresentation, relations: Vec<ActRelation>) -> BoundPresentation {
    BoundPresentation {
        presentation: p.presentation.with_relations(relations),
        assign: p.assign.clone(),
    }
}

#[test]
fn product_diagonal_needs_generator_sides() {
    for (m, n) in [("trivial", "Z2"), ("Z3", "Z3"), ("E2", "E2")] {
        let (mv, nv) = (monoid_by_name(m).unwrap(), monoid_by_name(n).unwrap());
        let (u, v) = (square_generating_set(&mv).u, square_generating_set(&nv).u);
        let pm = diagonal_presentation(&mv, &u, &u).unwrap();
        let pn = diagonal_presentation(&nv, &v, &v).unwrap();
        let pd = product_diagonal_presentation(&mv, &nv, &pm, &pn).unwrap();
        let mn = Arc::new(direct_product_monoid(&mv, &nv).unwrap());
        let diag = diagonal_act(&mn).unwrap();
        assert!(pd.bound.verify(&diag).holds());
        let literal = pd.t1.iter().chain(&pd.t2).copied().collect();
        let report = with_only(&pd.bound, literal).verify(&diag);
        assert!(report.satisfied, "{m} x {n}");
        assert!(!report.kernel_matches, "{m} x {n}");
    }
}

#[test]
fn direct_product_needs_generator_sides() {
    let m = monoid_by_name("Z2xE2").unwrap();
    let acts = small_acts(&m, 3);
    let a = acts
        .iter()
        .find(|a| a.name == "regular/((1,z),(g,z))")
        .expect("quotient act present");
    let u = square_generating_set(&m).u;
    let d = DiagonalDecomposition::build(&m, &u, &u).unwrap();
    let pdiag = diagonal_presentation(&m, &d.u, &d.v).unwrap();
    let pa = small_presentation(&a.value).unwrap();
    let p = dp_presentation(&a.value, &a.value, &pa, &pa, &pdiag, &d).unwrap();
    let product = direct_product_act(&a.value, &a.value).unwrap();
    let literal = p.t1.iter().chain(&p.t2).chain(&p.t3).copied().collect();
    let report = with_only(&p.bound, literal).verify(&product);
    assert!(report.satisfied);
    assert!(!report.kernel_matches);
    assert!(p.bound.verify(&product).holds());
}
