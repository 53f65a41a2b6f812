//! A fixed family of small monoids and acts used by the acceptance suite,
//! the examples and the CLI `--family small` option.

use std::sync::Arc;

use crate::act::{act_isomorphic, right_regular_act, FiniteAct};
use crate::congruence::{congruence_closure, quotient_act};
use crate::error::Result;
use crate::monoid::{
    adjoin_zero, attach_act_monoid, direct_product_monoid, full_transformation_monoid,
    FiniteMonoid,
};

#[derive(Debug, Clone)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

impl<T> Named<T> {
    pub fn new(name: impl Into<String>, value: T) -> Self {
        Named {
            name: name.into(),
            value,
        }
    }
}

pub type NamedMonoid = Named<Arc<FiniteMonoid>>;
pub type NamedAct = Named<FiniteAct>;

/// trivial, Z2, Z3, E2, T2, E2^0, Z2^0, Z2xE2, U(Z2,Z2), S3.
pub fn small_monoids() -> Vec<NamedMonoid> {
    build_small().expect("family monoids are valid")
}

fn build_small() -> Result<Vec<NamedMonoid>> {
    let z2 = FiniteMonoid::cyclic_group(2)?;
    let e2 = FiniteMonoid::semilattice_chain(2)?;
    let z2a = Arc::new(z2.clone());
    let list = vec![
        ("trivial", FiniteMonoid::trivial()),
        ("Z2", z2.clone()),
        ("Z3", FiniteMonoid::cyclic_group(3)?),
        ("E2", e2.clone()),
        ("T2", full_transformation_monoid(2)?),
        ("E2^0", adjoin_zero(&e2)),
        ("Z2^0", adjoin_zero(&z2)),
        ("Z2xE2", direct_product_monoid(&z2, &e2)?),
        ("U(Z2,Z2)", attach_act_monoid(&z2, &right_regular_act(&z2a))?),
        ("S3", FiniteMonoid::symmetric_group(3)?),
    ];
    Ok(list
        .into_iter()
        .map(|(n, m)| Named::new(n, Arc::new(m)))
        .collect())
}

/// The family plus the three-element chain semilattice and the two-element
/// left-zero band with identity.
pub fn extended_monoids() -> Vec<NamedMonoid> {
    let mut out = small_monoids();
    out.push(Named::new(
        "C3",
        Arc::new(FiniteMonoid::semilattice_chain(3).expect("valid")),
    ));
    out.push(Named::new(
        "L2",
        Arc::new(FiniteMonoid::left_zero_band(2).expect("valid")),
    ));
    out
}

pub fn monoid_by_name(name: &str) -> Option<Arc<FiniteMonoid>> {
    extended_monoids()
        .into_iter()
        .find(|m| m.name == name)
        .map(|m| m.value)
}

/// Pairwise non-isomorphic acts of size at most `max_size`: the one- and
/// two-point trivial acts, the right regular act and its quotients by
/// single-pair congruences.
pub fn small_acts(m: &Arc<FiniteMonoid>, max_size: usize) -> Vec<NamedAct> {
    let mut candidates: Vec<NamedAct> = Vec::new();
    for k in 1..=2.min(max_size) {
        candidates.push(Named::new(
            format!("trivial{k}"),
            FiniteAct::trivial(m.clone(), k).expect("valid"),
        ));
    }
    let rr = right_regular_act(m);
    candidates.push(Named::new("regular", rr.clone()));
    for a in 0..rr.size() {
        for b in a + 1..rr.size() {
            let cong = congruence_closure(&rr, &[(a, b)]);
            let (q, _) = quotient_act(&rr, &cong).expect("quotient of a valid act");
            candidates.push(Named::new(
                format!("regular/({},{})", m.label(a), m.label(b)),
                q,
            ));
        }
    }
    let mut out: Vec<NamedAct> = Vec::new();
    for c in candidates {
        if c.value.size() > max_size {
            continue;
        }
        let duplicate = out.iter().any(|o| {
            act_isomorphic(&o.value, &c.value)
                .map(|iso| iso.is_some())
                .unwrap_or(false)
        });
        if !duplicate {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        let orders: Vec<usize> = small_monoids().iter().map(|m| m.value.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 2, 4, 3, 3, 4, 4, 6]);
        for m in extended_monoids() {
            m.value.validate().unwrap();
        }
    }

    #[test]
    fn acts_are_distinct_and_small() {
        let z2 = monoid_by_name("Z2").unwrap();
        let acts = small_acts(&z2, 4);
        assert_eq!(acts.len(), 3);
        for a in &acts {
            a.value.validate().unwrap();
        }
        let t = monoid_by_name("trivial").unwrap();
        assert_eq!(small_acts(&t, 4).len(), 2);
    }
}
