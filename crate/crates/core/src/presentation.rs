//! Act presentations `⟨X | R⟩` over free acts.
//!
//! A presentation is checked against a target act by comparing two
//! partitions of the free act `F_X`: the congruence generated by the
//! relations, and the fibres of the evaluation map `F_X -> A` induced by the
//! generator assignment. They coincide exactly when the presentation defines
//! the act (given that the assignment is onto and the relations hold).

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::act::{ActElem, FiniteAct, FreeAct};
use crate::congruence::{
    congruence_closure, connect_sequence, quotient_act, ActCongruence, DerivationCertificate,
};
use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, MonoidElem};

/// The free act element `x·m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeActElem {
    pub gen: usize,
    pub elem: MonoidElem,
}

impl FreeActElem {
    pub fn new(gen: usize, elem: MonoidElem) -> Self {
        FreeActElem { gen, elem }
    }

    /// `(x·m)s = x·(ms)`.
    pub fn scale(self, monoid: &FiniteMonoid, s: MonoidElem) -> Self {
        FreeActElem {
            gen: self.gen,
            elem: monoid.mul(self.elem, s),
        }
    }
}

impl fmt::Display for FreeActElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.gen, self.elem)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ActRelation {
    pub lhs: FreeActElem,
    pub rhs: FreeActElem,
}

impl ActRelation {
    pub fn new(lhs: FreeActElem, rhs: FreeActElem) -> Self {
        ActRelation { lhs, rhs }
    }

    pub fn reversed(self) -> Self {
        ActRelation {
            lhs: self.rhs,
            rhs: self.lhs,
        }
    }
}

/// Structured generator names, so composite constructions can label a
/// generator by the tuple it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GenLabel {
    Index(usize),
    Name(String),
    Tuple(Vec<GenLabel>),
}

impl GenLabel {
    pub fn pair(a: GenLabel, b: GenLabel) -> Self {
        GenLabel::Tuple(vec![a, b])
    }
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenLabel::Index(i) => write!(f, "{i}"),
            GenLabel::Name(s) => write!(f, "{s}"),
            GenLabel::Tuple(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActPresentation {
    gen_labels: Vec<GenLabel>,
    monoid: Arc<FiniteMonoid>,
    relations: Vec<ActRelation>,
}

impl ActPresentation {
    pub fn new(
        gen_labels: Vec<GenLabel>,
        monoid: Arc<FiniteMonoid>,
        relations: Vec<ActRelation>,
    ) -> Result<Self> {
        if gen_labels.is_empty() {
            return Err(Error::invalid("a presentation needs at least one generator"));
        }
        let (g, k) = (gen_labels.len(), monoid.order());
        let in_range = |w: &FreeActElem| w.gen < g && w.elem < k;
        if let Some(r) = relations
            .iter()
            .find(|r| !in_range(&r.lhs) || !in_range(&r.rhs))
        {
            return Err(Error::OutOfRange(format!(
                "relation {} = {} out of range",
                r.lhs, r.rhs
            )));
        }
        Ok(ActPresentation {
            gen_labels,
            monoid,
            relations,
        })
    }

    pub fn gen_labels(&self) -> &[GenLabel] {
        &self.gen_labels
    }

    pub fn num_generators(&self) -> usize {
        self.gen_labels.len()
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn relations(&self) -> &[ActRelation] {
        &self.relations
    }

    pub fn with_relations(&self, relations: Vec<ActRelation>) -> Self {
        ActPresentation {
            gen_labels: self.gen_labels.clone(),
            monoid: self.monoid.clone(),
            relations,
        }
    }

    pub fn free_act(&self) -> Result<FreeAct> {
        FreeAct::new(self.num_generators(), &self.monoid)
    }

    /// The relations as index pairs in `free`.
    pub fn relation_pairs(&self, free: &FreeAct) -> Vec<(ActElem, ActElem)> {
        self.relations
            .iter()
            .map(|r| {
                (
                    free.encode(r.lhs.gen, r.lhs.elem),
                    free.encode(r.rhs.gen, r.rhs.elem),
                )
            })
            .collect()
    }
}

/// A presentation together with the images of its generators in a target act.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPresentation {
    pub presentation: ActPresentation,
    pub assign: Vec<ActElem>,
}

impl BoundPresentation {
    pub fn relations(&self) -> &[ActRelation] {
        self.presentation.relations()
    }

    pub fn verify(&self, target: &FiniteAct) -> PresentationReport {
        is_presentation_of(&self.presentation, target, &self.assign)
    }

    /// Verifies and converts a failure into [`Error::VerificationFailed`].
    pub fn verified(self, target: &FiniteAct) -> Result<Self> {
        let report = self.verify(target);
        match report.witness {
            None => Ok(self),
            Some(w) => Err(Error::VerificationFailed(Box::new(w))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrizedRelation {
    pub relation: ActRelation,
    /// Index of the input relation this entry came from.
    pub origin: usize,
    pub reversed: bool,
}

/// `R ∪ R⁻¹` with duplicates removed; each relation is followed by its reverse.
pub fn symmetrize(relations: &[ActRelation]) -> Vec<SymmetrizedRelation> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (origin, &r) in relations.iter().enumerate() {
        for (relation, reversed) in [(r, false), (r.reversed(), true)] {
            if seen.insert(relation) {
                out.push(SymmetrizedRelation {
                    relation,
                    origin,
                    reversed,
                });
            }
        }
    }
    out
}

/// Left components of `symmetrize(R)`: every side of every relation.
pub fn relation_sides(relations: &[ActRelation]) -> Vec<FreeActElem> {
    symmetrize(relations)
        .into_iter()
        .map(|s| s.relation.lhs)
        .collect()
}

/// The act defined by a presentation.
#[derive(Debug, Clone)]
pub struct DefinedAct {
    pub free: FreeAct,
    pub congruence: ActCongruence,
    pub act: FiniteAct,
    /// Class of each free act element.
    pub projection: Vec<ActElem>,
}

impl DefinedAct {
    pub fn eval(&self, w: FreeActElem) -> ActElem {
        self.projection[self.free.encode(w.gen, w.elem)]
    }

    /// Images of the generators `x·1`.
    pub fn generator_images(&self) -> Vec<ActElem> {
        self.free.basis().iter().map(|&b| self.projection[b]).collect()
    }
}

pub fn defined_act(p: &ActPresentation) -> Result<DefinedAct> {
    let free = p.free_act()?;
    let pairs = p.relation_pairs(&free);
    let congruence = congruence_closure(free.act(), &pairs);
    let (act, projection) = quotient_act(free.act(), &congruence)?;
    Ok(DefinedAct {
        free,
        congruence,
        act,
        projection,
    })
}

fn eval_in(target: &FiniteAct, assign: &[ActElem], w: FreeActElem) -> ActElem {
    target.act(assign[w.gen], w.elem)
}

/// True iff `assign(x)m = assign(y)n` for every relation `x·m = y·n`.
pub fn satisfies(target: &FiniteAct, assign: &[ActElem], relations: &[ActRelation]) -> bool {
    relations
        .iter()
        .all(|r| eval_in(target, assign, r.lhs) == eval_in(target, assign, r.rhs))
}

/// A derivation of `w1 = w2` from the relations, or `None`.
pub fn is_consequence(
    p: &ActPresentation,
    w1: FreeActElem,
    w2: FreeActElem,
) -> Result<Option<DerivationCertificate>> {
    let free = p.free_act()?;
    let pairs = p.relation_pairs(&free);
    Ok(connect_sequence(
        free.act(),
        &pairs,
        free.encode(w1.gen, w1.elem),
        free.encode(w2.gen, w2.elem),
    ))
}

/// Why a presentation fails to define the target act.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    MonoidMismatch,
    AssignmentOutOfRange { generator: usize },
    NotSurjective { missing: ActElem },
    Unsatisfied { relation: usize, lhs_value: ActElem, rhs_value: ActElem },
    /// Equal in the target but not a consequence of the relations.
    NotDerivable { lhs: FreeActElem, rhs: FreeActElem, value: ActElem },
    Other { message: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::MonoidMismatch => write!(f, "presentation and act have different monoids"),
            Witness::AssignmentOutOfRange { generator } => {
                write!(f, "generator {generator} is assigned outside the act")
            }
            Witness::NotSurjective { missing } => {
                write!(f, "element {missing} is not reached by the generators")
            }
            Witness::Unsatisfied {
                relation,
                lhs_value,
                rhs_value,
            } => write!(
                f,
                "relation {relation} fails in the act ({lhs_value} != {rhs_value})"
            ),
            Witness::NotDerivable { lhs, rhs, value } => write!(
                f,
                "{lhs} and {rhs} both evaluate to {value} but are not connected by the relations"
            ),
            Witness::Other { message } => write!(f, "{message}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub surjective: bool,
    pub satisfied: bool,
    pub kernel_matches: bool,
    pub closure_classes: usize,
    pub kernel_classes: usize,
    pub witness: Option<Witness>,
}

impl PresentationReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    fn failed(witness: Witness) -> Self {
        PresentationReport {
            surjective: false,
            satisfied: false,
            kernel_matches: false,
            closure_classes: 0,
            kernel_classes: 0,
            witness: Some(witness),
        }
    }
}

/// Evaluation of a free act into a target, reused across kernel checks.
struct KernelCheck {
    free: FreeAct,
    eval: Vec<ActElem>,
    kernel_classes: usize,
}

impl KernelCheck {
    fn new(p: &ActPresentation, target: &FiniteAct, assign: &[ActElem]) -> Result<Self> {
        let free = p.free_act()?;
        let eval: Vec<ActElem> = (0..free.act().size())
            .map(|i| {
                let (x, m) = free.decode(i);
                target.act(assign[x], m)
            })
            .collect();
        let mut hit = vec![false; target.size()];
        for &v in &eval {
            hit[v] = true;
        }
        let kernel_classes = hit.iter().filter(|&&h| h).count();
        Ok(KernelCheck {
            free,
            eval,
            kernel_classes,
        })
    }

    /// Given that the relations hold, closure refines the kernel, so the two
    /// agree iff they have the same number of classes.
    fn closure_classes(&self, pairs: &[(ActElem, ActElem)]) -> usize {
        congruence_closure(self.free.act(), pairs).num_classes()
    }

    fn witness(&self, cong: &ActCongruence) -> Option<Witness> {
        let mut first_free = std::collections::HashMap::new();
        for (i, &v) in self.eval.iter().enumerate() {
            match first_free.get(&v) {
                None => {
                    first_free.insert(v, i);
                }
                Some(&j) if !cong.same_class(i, j) => {
                    let (xj, mj) = self.free.decode(j);
                    let (xi, mi) = self.free.decode(i);
                    return Some(Witness::NotDerivable {
                        lhs: FreeActElem::new(xj, mj),
                        rhs: FreeActElem::new(xi, mi),
                        value: v,
                    });
                }
                Some(_) => {}
            }
        }
        None
    }
}

/// Decides whether `⟨X | R⟩` with generator images `assign` defines `target`.
pub fn is_presentation_of(
    p: &ActPresentation,
    target: &FiniteAct,
    assign: &[ActElem],
) -> PresentationReport {
    if p.monoid().as_ref() != target.base() {
        return PresentationReport::failed(Witness::MonoidMismatch);
    }
    if assign.len() != p.num_generators() {
        return PresentationReport::failed(Witness::Other {
            message: format!(
                "{} generators but {} assigned images",
                p.num_generators(),
                assign.len()
            ),
        });
    }
    if let Some(g) = assign.iter().position(|&a| a >= target.size()) {
        return PresentationReport::failed(Witness::AssignmentOutOfRange { generator: g });
    }
    let reach = target.reach(assign);
    let missing = reach.iter().position(|&r| !r);
    let unsatisfied = p.relations().iter().enumerate().find_map(|(i, r)| {
        let (l, rv) = (eval_in(target, assign, r.lhs), eval_in(target, assign, r.rhs));
        (l != rv).then_some(Witness::Unsatisfied {
            relation: i,
            lhs_value: l,
            rhs_value: rv,
        })
    });
    let check = match KernelCheck::new(p, target, assign) {
        Ok(c) => c,
        Err(e) => {
            return PresentationReport::failed(Witness::Other {
                message: e.to_string(),
            })
        }
    };
    let pairs = p.relation_pairs(&check.free);
    let cong = congruence_closure(check.free.act(), &pairs);
    let derivable_gap = if unsatisfied.is_none() {
        check.witness(&cong)
    } else {
        None
    };
    let kernel_matches = unsatisfied.is_none() && derivable_gap.is_none();
    let witness = missing
        .map(|m| Witness::NotSurjective { missing: m })
        .or_else(|| unsatisfied.clone())
        .or(derivable_gap);
    PresentationReport {
        surjective: missing.is_none(),
        satisfied: unsatisfied.is_none(),
        kernel_matches,
        closure_classes: cong.num_classes(),
        kernel_classes: check.kernel_classes,
        witness,
    }
}

fn elem_labels(act: &FiniteAct, elems: &[ActElem]) -> Vec<GenLabel> {
    elems
        .iter()
        .map(|&a| match act.labels() {
            Some(_) => GenLabel::Name(act.label(a)),
            None => GenLabel::Index(a),
        })
        .collect()
}

/// `⟨A | a·x = (ax)·1 (a ∈ A, x ∈ Xm)⟩` for a monoid generating set `Xm`.
pub fn canonical_presentation(target: &FiniteAct, monoid_gens: &[MonoidElem]) -> Result<BoundPresentation> {
    let m = target.base_arc();
    if !m.generates(monoid_gens) {
        return Err(Error::NotMonoidGeneratingSet);
    }
    let id = m.identity();
    let relations = (0..target.size())
        .flat_map(|a| {
            monoid_gens.iter().map(move |&x| {
                ActRelation::new(FreeActElem::new(a, x), FreeActElem::new(target.act(a, x), id))
            })
        })
        .collect();
    let all: Vec<ActElem> = (0..target.size()).collect();
    let presentation = ActPresentation::new(elem_labels(target, &all), m.clone(), relations)?;
    Ok(BoundPresentation {
        presentation,
        assign: all,
    })
}

/// Presentation on an arbitrary generating set: every free element is
/// related to the least free element in its evaluation fibre.
pub fn kernel_presentation(target: &FiniteAct, gens: &[ActElem]) -> Result<BoundPresentation> {
    if gens.is_empty() || !crate::act::is_generating_set(target, gens) {
        return Err(Error::NotGenerating(format!("{gens:?}")));
    }
    let m = target.base_arc();
    let free = FreeAct::new(gens.len(), m)?;
    let mut rep: Vec<Option<FreeActElem>> = vec![None; target.size()];
    let mut relations = Vec::new();
    for i in 0..free.act().size() {
        let (x, e) = free.decode(i);
        let w = FreeActElem::new(x, e);
        let v = target.act(gens[x], e);
        match rep[v] {
            None => rep[v] = Some(w),
            Some(r) => relations.push(ActRelation::new(w, r)),
        }
    }
    let presentation = ActPresentation::new(elem_labels(target, gens), m.clone(), relations)?;
    Ok(BoundPresentation {
        presentation,
        assign: gens.to_vec(),
    })
}

/// Greedily drops relations, last index first, while the presentation still
/// defines `target`. The result is irredundant.
pub fn reduce_presentation(bp: &BoundPresentation, target: &FiniteAct) -> Result<BoundPresentation> {
    if !bp.verify(target).holds() {
        return Err(Error::NotAPresentation);
    }
    let check = KernelCheck::new(&bp.presentation, target, &bp.assign)?;
    let pairs = bp.presentation.relation_pairs(&check.free);
    let mut keep = vec![true; pairs.len()];
    for i in (0..pairs.len()).rev() {
        keep[i] = false;
        let trial: Vec<(ActElem, ActElem)> = pairs
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(&p, _)| p)
            .collect();
        if check.closure_classes(&trial) != check.kernel_classes {
            keep[i] = true;
        }
    }
    let relations = bp
        .relations()
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(&r, _)| r)
        .collect();
    Ok(BoundPresentation {
        presentation: bp.presentation.with_relations(relations),
        assign: bp.assign.clone(),
    })
}

/// True iff removing any single relation breaks the presentation.
pub fn is_irredundant(bp: &BoundPresentation, target: &FiniteAct) -> Result<bool> {
    let check = KernelCheck::new(&bp.presentation, target, &bp.assign)?;
    let pairs = bp.presentation.relation_pairs(&check.free);
    Ok((0..pairs.len()).all(|i| {
        let trial: Vec<(ActElem, ActElem)> = pairs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &p)| p)
            .collect();
        check.closure_classes(&trial) != check.kernel_classes
    }))
}

/// Drops exact duplicate relations, keeping first occurrences.
pub(crate) fn dedup_relations(relations: Vec<ActRelation>) -> Vec<ActRelation> {
    let mut seen = HashSet::new();
    relations.into_iter().filter(|r| seen.insert(*r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::act::{act_isomorphic, right_regular_act};

    fn z2() -> Arc<FiniteMonoid> {
        Arc::new(FiniteMonoid::cyclic_group(2).unwrap())
    }

    fn w(g: usize, e: usize) -> FreeActElem {
        FreeActElem::new(g, e)
    }

    fn rel(a: FreeActElem, b: FreeActElem) -> ActRelation {
        ActRelation::new(a, b)
    }

    fn pres(gens: usize, m: &Arc<FiniteMonoid>, rels: Vec<ActRelation>) -> ActPresentation {
        ActPresentation::new((0..gens).map(GenLabel::Index).collect(), m.clone(), rels).unwrap()
    }

    #[test]
    fn symmetrize_and_sides() {
        let (u, v, x) = (w(0, 0), w(0, 1), w(1, 0));
        assert!(symmetrize(&[]).is_empty());
        let s: Vec<ActRelation> = symmetrize(&[rel(u, v)]).iter().map(|s| s.relation).collect();
        assert_eq!(s, vec![rel(u, v), rel(v, u)]);
        let s2: Vec<ActRelation> = symmetrize(&[rel(u, v), rel(v, u)])
            .iter()
            .map(|s| s.relation)
            .collect();
        assert_eq!(s2, vec![rel(u, v), rel(v, u)]);
        assert_eq!(relation_sides(&[]), vec![]);
        assert_eq!(relation_sides(&[rel(u, v)]), vec![u, v]);
        assert_eq!(relation_sides(&[rel(u, v), rel(u, x)]), vec![u, v, u, x]);
    }

    #[test]
    fn defined_acts() {
        let m = z2();
        let free_one = defined_act(&pres(1, &m, vec![])).unwrap();
        assert!(act_isomorphic(&free_one.act, &right_regular_act(&m))
            .unwrap()
            .is_some());
        let collapsed = defined_act(&pres(1, &m, vec![rel(w(0, 0), w(0, 1))])).unwrap();
        assert_eq!(collapsed.act.size(), 1);
    }

    #[test]
    fn satisfies_cases() {
        let m = z2();
        let rr = right_regular_act(&m);
        assert!(satisfies(&rr, &[0], &[]));
        assert!(satisfies(&rr, &[0], &[rel(w(0, 1), w(0, 1))]));
        assert!(!satisfies(&rr, &[0], &[rel(w(0, 0), w(0, 1))]));
    }

    #[test]
    fn consequences() {
        let m = z2();
        let p = pres(1, &m, vec![rel(w(0, 0), w(0, 1))]);
        assert_eq!(is_consequence(&p, w(0, 1), w(0, 1)).unwrap(), Some(DerivationCertificate::default()));
        let cert = is_consequence(&p, w(0, 0), w(0, 1)).unwrap().unwrap();
        assert_eq!(cert.len(), 1);
        let free = p.free_act().unwrap();
        cert.replay(free.act(), &p.relation_pairs(&free), 0, 1).unwrap();

        let p2 = pres(2, &m, vec![]);
        assert_eq!(is_consequence(&p2, w(0, 0), w(1, 0)).unwrap(), None);
    }

    #[test]
    fn presentation_oracle() {
        let m = z2();
        let rr = right_regular_act(&m);
        let canon = canonical_presentation(&rr, &[1]).unwrap();
        assert_eq!(canon.relations().len(), 2);
        assert!(canon.verify(&rr).holds());

        let single = FiniteAct::trivial(m.clone(), 1).unwrap();
        let report = is_presentation_of(&pres(1, &m, vec![]), &single, &[0]);
        assert!(!report.holds());
        assert_eq!((report.closure_classes, report.kernel_classes), (2, 1));
        assert!(matches!(report.witness, Some(Witness::NotDerivable { .. })));

        let report = is_presentation_of(&pres(1, &m, vec![rel(w(0, 0), w(0, 1))]), &rr, &[0]);
        assert!(!report.satisfied);
        assert!(matches!(report.witness, Some(Witness::Unsatisfied { relation: 0, .. })));
    }

    #[test]
    fn canonical_relation_count_for_singleton() {
        let m = Arc::new(crate::monoid::full_transformation_monoid(2).unwrap());
        let single = FiniteAct::trivial(m.clone(), 1).unwrap();
        let all: Vec<usize> = m.elements().collect();
        let canon = canonical_presentation(&single, &all).unwrap();
        assert_eq!(canon.relations().len(), m.order());
        assert!(canon.verify(&single).holds());
        assert_eq!(
            canonical_presentation(&single, &[]).unwrap_err(),
            Error::NotMonoidGeneratingSet
        );
    }

    #[test]
    fn reduction() {
        let m = z2();
        let rr = right_regular_act(&m);
        // Xm = {g, 1}: relations a·1 = a·1 are redundant.
        let canon = canonical_presentation(&rr, &[1, 0]).unwrap();
        assert_eq!(canon.relations().len(), 4);
        let reduced = reduce_presentation(&canon, &rr).unwrap();
        assert!(reduced.verify(&rr).holds());
        assert!(reduced.relations().iter().all(|r| r.lhs.elem != m.identity()));
        assert!(is_irredundant(&reduced, &rr).unwrap());

        // duplicates
        let mut rels = canon.relations().to_vec();
        rels.push(rels[0]);
        let dup = BoundPresentation {
            presentation: canon.presentation.with_relations(rels),
            assign: canon.assign.clone(),
        };
        let r = reduce_presentation(&dup, &rr).unwrap();
        assert!(r.relations().len() <= 2);

        // already irredundant: unchanged
        let again = reduce_presentation(&reduced, &rr).unwrap();
        assert_eq!(again, reduced);

        let bad = BoundPresentation {
            presentation: pres(1, &m, vec![]),
            assign: vec![0],
        };
        let single = FiniteAct::trivial(m.clone(), 1).unwrap();
        assert_eq!(reduce_presentation(&bad, &single).unwrap_err(), Error::NotAPresentation);
    }

    #[test]
    fn kernel_presentation_verifies() {
        let m = Arc::new(FiniteMonoid::semilattice_chain(2).unwrap());
        let rr = right_regular_act(&m);
        let diag = crate::act::direct_product_act(&rr, &rr).unwrap();
        let gens = crate::act::minimal_generating_set(&diag).elems;
        let kp = kernel_presentation(&diag, &gens).unwrap();
        assert!(kp.verify(&diag).holds());
        assert!(kernel_presentation(&diag, &[3]).is_err());
    }
}
