//! Act congruences generated by pairs, with replayable derivations.
//!
//! A derivation from `a` to `b` over pairs `X` is a chain
//! `a = p1 m1, q1 m1 = p2 m2, ..., qk mk = b` with each `(pi, qi)` taken from
//! `X` or its reverse. [`Step`] records one link of the chain.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::act::{ActElem, FiniteAct};
use crate::error::{Error, Result};
use crate::monoid::MonoidElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// One application of pair `pair` (oriented by `direction`) scaled by `multiplier`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub pair: usize,
    pub direction: Direction,
    pub multiplier: MonoidElem,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationCertificate {
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplayError {
    PairOutOfRange { step: usize },
    Mismatch { step: usize, expected: ActElem, found: ActElem },
    WrongEnd { expected: ActElem, found: ActElem },
}

impl DerivationCertificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The chain of intermediate elements, starting at `a`.
    pub fn trace(
        &self,
        act: &FiniteAct,
        pairs: &[(ActElem, ActElem)],
        a: ActElem,
    ) -> Result<Vec<ActElem>, ReplayError> {
        let mut chain = vec![a];
        let mut cur = a;
        for (i, step) in self.steps.iter().enumerate() {
            let &(p, q) = pairs
                .get(step.pair)
                .ok_or(ReplayError::PairOutOfRange { step: i })?;
            let (from, to) = match step.direction {
                Direction::Forward => (p, q),
                Direction::Backward => (q, p),
            };
            let start = act.act(from, step.multiplier);
            if start != cur {
                return Err(ReplayError::Mismatch {
                    step: i,
                    expected: cur,
                    found: start,
                });
            }
            cur = act.act(to, step.multiplier);
            chain.push(cur);
        }
        Ok(chain)
    }

    /// Checks the chain link by link and that it ends at `b`.
    pub fn replay(
        &self,
        act: &FiniteAct,
        pairs: &[(ActElem, ActElem)],
        a: ActElem,
        b: ActElem,
    ) -> Result<(), ReplayError> {
        let chain = self.trace(act, pairs, a)?;
        let end = *chain.last().expect("chain starts at a");
        if end == b {
            Ok(())
        } else {
            Err(ReplayError::WrongEnd {
                expected: b,
                found: end,
            })
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// A partition of an act's elements. Congruences produced by
/// [`congruence_closure`] also keep the spanning forest of merges they were
/// built from, independent of union-find compression, so certificates can be
/// read off later.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActCongruence {
    class_of: Vec<usize>,
    num_classes: usize,
    /// `(from, to, step)` where `step` rewrites `from` into `to`.
    merges: Vec<(ActElem, ActElem, Step)>,
}

impl ActCongruence {
    /// Wraps an arbitrary labelling; class ids are renumbered by first occurrence.
    pub fn from_labels(labels: &[usize]) -> Self {
        let (class_of, num_classes) = normalize(labels);
        ActCongruence {
            class_of,
            num_classes,
            merges: Vec::new(),
        }
    }

    pub fn identity(size: usize) -> Self {
        ActCongruence::from_labels(&(0..size).collect::<Vec<_>>())
    }

    pub fn class_of(&self, a: ActElem) -> usize {
        self.class_of[a]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn same_class(&self, a: ActElem, b: ActElem) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_congruence_on(&self, act: &FiniteAct) -> bool {
        if self.class_of.len() != act.size() {
            return false;
        }
        // Compare each element against its class representative.
        let mut rep = vec![usize::MAX; self.num_classes];
        for a in 0..act.size() {
            let c = self.class_of[a];
            if rep[c] == usize::MAX {
                rep[c] = a;
                continue;
            }
            let r = rep[c];
            if act
                .base()
                .elements()
                .any(|m| self.class_of[act.act(a, m)] != self.class_of[act.act(r, m)])
            {
                return false;
            }
        }
        true
    }

    /// A derivation read off the merge forest, or `None` across classes.
    pub fn certificate(&self, a: ActElem, b: ActElem) -> Option<DerivationCertificate> {
        if !self.same_class(a, b) {
            return None;
        }
        if a == b {
            return Some(DerivationCertificate::default());
        }
        let n = self.class_of.len();
        let mut adj: Vec<Vec<(ActElem, Step)>> = vec![Vec::new(); n];
        for &(from, to, step) in &self.merges {
            if self.class_of[from] != self.class_of[a] {
                continue;
            }
            adj[from].push((to, step));
            adj[to].push((
                from,
                Step {
                    direction: step.direction.reversed(),
                    ..step
                },
            ));
        }
        bfs_path(&adj, a, b)
    }
}

fn normalize(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut remap = std::collections::HashMap::new();
    let class_of = labels
        .iter()
        .map(|l| {
            let next = remap.len();
            *remap.entry(*l).or_insert(next)
        })
        .collect();
    (class_of, remap.len())
}

fn bfs_path(adj: &[Vec<(ActElem, Step)>], a: ActElem, b: ActElem) -> Option<DerivationCertificate> {
    let mut prev: Vec<Option<(ActElem, Step)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([a]);
    seen[a] = true;
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &(y, step) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, step));
                queue.push_back(y);
            }
        }
    }
    if !seen[b] {
        return None;
    }
    let mut steps = Vec::new();
    let mut cur = b;
    while cur != a {
        let (p, step) = prev[cur].expect("path to b");
        steps.push(step);
        cur = p;
    }
    steps.reverse();
    Some(DerivationCertificate { steps })
}

/// The smallest congruence containing `pairs`.
///
/// The set `{(pm, qm)}` is already closed under the action, so its
/// equivalence closure is a congruence; union-find over those seeds is the
/// whole fixpoint.
pub fn congruence_closure(act: &FiniteAct, pairs: &[(ActElem, ActElem)]) -> ActCongruence {
    let mut uf = UnionFind::new(act.size());
    let mut merges = Vec::new();
    for (i, &(p, q)) in pairs.iter().enumerate() {
        for m in act.base().elements() {
            let (pm, qm) = (act.act(p, m), act.act(q, m));
            if uf.union(pm, qm) {
                merges.push((
                    pm,
                    qm,
                    Step {
                        pair: i,
                        direction: Direction::Forward,
                        multiplier: m,
                    },
                ));
            }
        }
    }
    let roots: Vec<usize> = (0..act.size()).map(|a| uf.find(a)).collect();
    let (class_of, num_classes) = normalize(&roots);
    ActCongruence {
        class_of,
        num_classes,
        merges,
    }
}

/// Shortest derivation from `a` to `b` in the single-application graph.
pub fn connect_sequence(
    act: &FiniteAct,
    pairs: &[(ActElem, ActElem)],
    a: ActElem,
    b: ActElem,
) -> Option<DerivationCertificate> {
    if a == b {
        return Some(DerivationCertificate::default());
    }
    let mut adj: Vec<Vec<(ActElem, Step)>> = vec![Vec::new(); act.size()];
    for (i, &(p, q)) in pairs.iter().enumerate() {
        for m in act.base().elements() {
            let (pm, qm) = (act.act(p, m), act.act(q, m));
            if pm == qm {
                continue;
            }
            adj[pm].push((
                qm,
                Step {
                    pair: i,
                    direction: Direction::Forward,
                    multiplier: m,
                },
            ));
            adj[qm].push((
                pm,
                Step {
                    pair: i,
                    direction: Direction::Backward,
                    multiplier: m,
                },
            ));
        }
    }
    bfs_path(&adj, a, b)
}

/// The factor act `A/c` and the projection `A -> A/c`.
pub fn quotient_act(act: &FiniteAct, cong: &ActCongruence) -> Result<(FiniteAct, Vec<usize>)> {
    if !cong.is_congruence_on(act) {
        return Err(Error::NotACongruence);
    }
    let k = act.base().order();
    let classes = cong.num_classes();
    let mut rep = vec![usize::MAX; classes];
    for a in 0..act.size() {
        let c = cong.class_of(a);
        if rep[c] == usize::MAX {
            rep[c] = a;
        }
    }
    let mut action = Vec::with_capacity(classes * k);
    for &r in &rep {
        for m in 0..k {
            action.push(cong.class_of(act.act(r, m)));
        }
    }
    let labels = rep.iter().map(|&r| format!("[{}]", act.label(r))).collect();
    let quotient = FiniteAct::from_flat(act.base_arc().clone(), classes, action).with_labels(labels);
    Ok((quotient, cong.classes().to_vec()))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::act::{free_act, right_regular_act};
    use crate::monoid::FiniteMonoid;

    fn z2() -> Arc<FiniteMonoid> {
        Arc::new(FiniteMonoid::cyclic_group(2).unwrap())
    }

    #[test]
    fn empty_pairs_give_identity_partition() {
        let rr = right_regular_act(&z2());
        let c = congruence_closure(&rr, &[]);
        assert_eq!(c.num_classes(), 2);
        assert_eq!(c, {
            let mut id = ActCongruence::identity(2);
            id.merges.clear();
            id
        });
    }

    #[test]
    fn regular_z2_collapses() {
        let rr = right_regular_act(&z2());
        let pairs = [(0, 1)];
        let c = congruence_closure(&rr, &pairs);
        assert_eq!(c.num_classes(), 1);
        let cert = connect_sequence(&rr, &pairs, 0, 1).unwrap();
        assert_eq!(
            cert.steps,
            vec![Step {
                pair: 0,
                direction: Direction::Forward,
                multiplier: 0
            }]
        );
        cert.replay(&rr, &pairs, 0, 1).unwrap();
        c.certificate(0, 1).unwrap().replay(&rr, &pairs, 0, 1).unwrap();
    }

    #[test]
    fn free_act_two_classes() {
        let m = z2();
        let fa = free_act(2, &m).unwrap();
        let (x1, xg, y1, yg) = (fa.encode(0, 0), fa.encode(0, 1), fa.encode(1, 0), fa.encode(1, 1));
        let pairs = [(x1, yg)];
        let c = congruence_closure(fa.act(), &pairs);
        assert_eq!(c.num_classes(), 2);
        assert!(c.same_class(x1, yg));
        assert!(c.same_class(xg, y1));
        assert!(!c.same_class(x1, y1));
        assert_eq!(connect_sequence(fa.act(), &pairs, x1, y1), None);
        assert_eq!(c.certificate(x1, y1), None);
    }

    #[test]
    fn trivial_goal_has_empty_certificate() {
        let rr = right_regular_act(&z2());
        assert_eq!(connect_sequence(&rr, &[], 1, 1), Some(DerivationCertificate::default()));
    }

    #[test]
    fn quotients() {
        let m = z2();
        let fa = free_act(1, &m).unwrap();
        let c = congruence_closure(fa.act(), &[(0, 1)]);
        let (q, proj) = quotient_act(fa.act(), &c).unwrap();
        assert_eq!(q.size(), 1);
        assert_eq!(proj, vec![0, 0]);

        let rr = right_regular_act(&m);
        let (q, _) = quotient_act(&rr, &ActCongruence::identity(2)).unwrap();
        assert_eq!(q, rr);

        let bad = ActCongruence::from_labels(&[0, 1, 1, 1]);
        let fa2 = free_act(2, &m).unwrap();
        assert_eq!(quotient_act(fa2.act(), &bad).unwrap_err(), Error::NotACongruence);
    }

    #[test]
    fn broken_certificates_are_rejected() {
        let rr = right_regular_act(&z2());
        let pairs = [(0, 1)];
        let cert = DerivationCertificate {
            steps: vec![Step {
                pair: 0,
                direction: Direction::Backward,
                multiplier: 0,
            }],
        };
        assert!(matches!(
            cert.replay(&rr, &pairs, 0, 1),
            Err(ReplayError::Mismatch { step: 0, .. })
        ));
        let out_of_range = DerivationCertificate {
            steps: vec![Step {
                pair: 3,
                direction: Direction::Forward,
                multiplier: 0,
            }],
        };
        assert_eq!(
            out_of_range.replay(&rr, &pairs, 0, 1),
            Err(ReplayError::PairOutOfRange { step: 0 })
        );
    }
}
