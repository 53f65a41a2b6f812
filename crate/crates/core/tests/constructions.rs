use std::sync::Arc;

use actforge::act::{direct_product_act, is_generating_set, minimal_generating_set};
use actforge::diagonal::{
    diagonal_act, restrict_presentation_to_submonoid, square_generating_set, zero_extension_generators,
};
use actforge::family::{monoid_by_name, small_acts, small_monoids};
use actforge::monoid::attach_act_monoid;
use actforge::product::{
    dp_factor_presentation, dp_presentation, free_square_is_diagonal_copies, DiagonalDecomposition,
};
use actforge::suite::{diagonal_presentation, small_presentation};
use actforge::wreath::{wreath_act, wreath_generating_set, wreath_projections};

/// Wreath generators from factor generators, and factor generators back
/// from any generating set of the wreath product.
#[test]
fn wreath_generation_both_directions() {
    let mut instances = 0;
    for m in ["trivial", "Z2", "E2"] {
        for n in ["trivial", "Z2", "E2", "Z3"] {
            let (mv, nv) = (monoid_by_name(m).unwrap(), monoid_by_name(n).unwrap());
            for a in small_acts(&mv, 2) {
                for b in small_acts(&nv, 3) {
                    let wa = wreath_act(&a.value, &b.value).unwrap();
                    let x = minimal_generating_set(&a.value).elems;
                    let y = minimal_generating_set(&b.value).elems;
                    let z = wreath_generating_set(&wa, &x, &y).unwrap();
                    assert!(is_generating_set(&wa.act, &z));
                    let u = minimal_generating_set(&wa.act).elems;
                    let (xs, ys) = wreath_projections(&wa, &u).unwrap();
                    assert!(is_generating_set(&a.value, &xs), "{m}:{} wr {n}:{}", a.name, b.name);
                    assert!(is_generating_set(&b.value, &ys), "{m}:{} wr {n}:{}", a.name, b.name);
                    instances += 1;
                }
            }
        }
    }
    assert!(instances > 20);
}

/// `N` sits in `U(N, A)` with complement `A` an ideal, so a presentation of
/// the larger diagonal act restricts to one of the smaller.
#[test]
fn restriction_to_the_acting_monoid() {
    for n in ["trivial", "Z2", "E2"] {
        let nv = monoid_by_name(n).unwrap();
        for a in small_acts(&nv, 2) {
            let big = Arc::new(attach_act_monoid(&nv, &a.value).unwrap());
            let u = square_generating_set(&big).u;
            let p = diagonal_presentation(&big, &u, &u).unwrap();
            let inner: Vec<usize> = nv.elements().collect();
            let r = restrict_presentation_to_submonoid(&big, &p, &inner).unwrap();
            assert!(r.verify(&diagonal_act(&nv).unwrap()).holds(), "{n}:{}", a.name);
        }
    }
}

#[test]
fn zero_extension_generator_count() {
    for m in small_monoids() {
        let u = square_generating_set(&m.value).u;
        let z = zero_extension_generators(&m.value, &u).unwrap();
        assert_eq!(z.pairs.len(), (u.len() + 1).pow(2) - 1, "{}", m.name);
        assert!(z.generates().unwrap());
    }
}

#[test]
fn product_presentation_projects_to_factor() {
    for name in ["Z2", "E2", "T2"] {
        let m = monoid_by_name(name).unwrap();
        let sq = square_generating_set(&m);
        let d = DiagonalDecomposition::build(&m, &sq.u, &sq.v).unwrap();
        let pdiag = diagonal_presentation(&m, &d.u, &d.v).unwrap();
        let acts = small_acts(&m, 3);
        for a in &acts {
            for b in &acts {
                let (pa, pb) = (small_presentation(&a.value).unwrap(), small_presentation(&b.value).unwrap());
                let pp = dp_presentation(&a.value, &b.value, &pa, &pb, &pdiag, &d).unwrap();
                assert!(pp.bound.verify(&direct_product_act(&a.value, &b.value).unwrap()).holds());
                let f = dp_factor_presentation(&pp.bound, &a.value, &b.value, &pa.assign, &d.u).unwrap();
                assert!(f.bound.verify(&a.value).holds(), "{name}: {} x {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn free_squares_split_into_diagonal_copies() {
    for m in small_monoids().into_iter().filter(|m| m.value.order() <= 4) {
        assert!(free_square_is_diagonal_copies(&m.value, 2, 2).unwrap(), "{}", m.name);
    }
}
