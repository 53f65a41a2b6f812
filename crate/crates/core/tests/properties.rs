use std::sync::Arc;

use proptest::prelude::*;

use actforge::act::{direct_product_act, free_act, FiniteAct};
use actforge::congruence::{congruence_closure, connect_sequence, quotient_act};
use actforge::family::{extended_monoids, small_acts};
use actforge::monoid::FiniteMonoid;
use actforge::presentation::{
    is_consequence, satisfies, ActPresentation, ActRelation, BoundPresentation, FreeActElem, GenLabel,
};

fn family_act(mi: usize, ai: usize, square: bool) -> FiniteAct {
    let ms = extended_monoids();
    let m = &ms[mi % ms.len()].value;
    let acts = small_acts(m, 4);
    let a = acts[ai % acts.len()].value.clone();
    if square && a.size() <= 3 {
        direct_product_act(&a, &a).unwrap()
    } else {
        a
    }
}

/// Equivalence generated by the seeds, closed under the action by repeated
/// relabelling until nothing changes.
fn fixpoint(act: &FiniteAct, pairs: &[(usize, usize)]) -> Vec<usize> {
    let n = act.size();
    let mut label: Vec<usize> = (0..n).collect();
    let mut edges: Vec<(usize, usize)> = pairs.to_vec();
    loop {
        let mut changed = false;
        for &(a, b) in &edges {
            let (la, lb) = (label[a], label[b]);
            if la != lb {
                let (keep, drop) = (la.min(lb), la.max(lb));
                for l in label.iter_mut() {
                    if *l == drop {
                        *l = keep;
                    }
                }
                changed = true;
            }
        }
        let mut next = edges.clone();
        for a in 0..n {
            for b in 0..n {
                if label[a] == label[b] {
                    for m in act.base().elements() {
                        let e = (act.act(a, m), act.act(b, m));
                        if label[e.0] != label[e.1] {
                            next.push(e);
                        }
                    }
                }
            }
        }
        if !changed && next.len() == edges.len() {
            return label;
        }
        edges = next;
    }
}

fn same_partition(x: &[usize], y: &[usize]) -> bool {
    (0..x.len()).all(|i| (0..x.len()).all(|j| (x[i] == x[j]) == (y[i] == y[j])))
}

fn pairs_strategy() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..64, 0usize..64), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_matches_fixpoint(mi in 0usize..12, ai in 0usize..8, square: bool, raw in pairs_strategy()) {
        let act = family_act(mi, ai, square);
        let pairs: Vec<_> = raw.iter().map(|&(a, b)| (a % act.size(), b % act.size())).collect();
        let cong = congruence_closure(&act, &pairs);
        prop_assert!(same_partition(cong.classes(), &fixpoint(&act, &pairs)));
        prop_assert!(cong.is_congruence_on(&act));
    }

    #[test]
    fn certificates_replay(mi in 0usize..12, ai in 0usize..8, square: bool, raw in pairs_strategy()) {
        let act = family_act(mi, ai, square);
        let pairs: Vec<_> = raw.iter().map(|&(a, b)| (a % act.size(), b % act.size())).collect();
        let cong = congruence_closure(&act, &pairs);
        for a in 0..act.size() {
            for b in 0..act.size() {
                let cert = cong.certificate(a, b);
                prop_assert_eq!(cert.is_some(), cong.same_class(a, b));
                if let Some(c) = cert {
                    prop_assert!(c.replay(&act, &pairs, a, b).is_ok());
                }
                let seq = connect_sequence(&act, &pairs, a, b);
                prop_assert_eq!(seq.is_some(), cong.same_class(a, b));
                if let Some(c) = seq {
                    prop_assert!(c.replay(&act, &pairs, a, b).is_ok());
                }
            }
        }
    }

    /// Any relation set presents the quotient of the free act it defines.
    #[test]
    fn relations_present_their_quotient(
        mi in 0usize..12,
        gens in 1usize..3,
        raw in prop::collection::vec((0usize..2, 0usize..8, 0usize..2, 0usize..8), 0..4),
    ) {
        let ms = extended_monoids();
        let m: Arc<FiniteMonoid> = ms[mi % ms.len()].value.clone();
        let k = m.order();
        let relations: Vec<ActRelation> = raw
            .iter()
            .map(|&(g, x, h, y)| ActRelation::new(FreeActElem::new(g % gens, x % k), FreeActElem::new(h % gens, y % k)))
            .collect();
        let free = free_act(gens, &m).unwrap();
        let pairs: Vec<_> = relations.iter().map(|r| (free.encode(r.lhs.gen, r.lhs.elem), free.encode(r.rhs.gen, r.rhs.elem))).collect();
        let cong = congruence_closure(free.act(), &pairs);
        let (q, proj) = quotient_act(free.act(), &cong).unwrap();
        let assign: Vec<usize> = free.basis().iter().map(|&b| proj[b]).collect();
        prop_assert!(satisfies(&q, &assign, &relations));
        let labels = (0..gens).map(GenLabel::Index).collect();
        let bound = BoundPresentation {
            presentation: ActPresentation::new(labels, m.clone(), relations.clone()).unwrap(),
            assign,
        };
        let report = bound.verify(&q);
        prop_assert!(report.holds(), "{:?}", report.witness);
        // Every relation is a consequence of the whole set.
        for r in &relations {
            prop_assert!(is_consequence(&bound.presentation, r.lhs, r.rhs).unwrap().is_some());
        }
    }
}
