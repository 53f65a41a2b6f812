//! Direct products `A × B` of acts over the same monoid: generating sets,
//! presentations assembled from the factors and the diagonal act, and the
//! converse extraction of a factor presentation.

use std::sync::Arc;

use crate::act::{direct_product_act, free_act, is_generating_set, ActElem, FiniteAct};
use crate::diagonal::{coincidence_relations, diagonal_act, diagonal_generates, pair_index, pair_of};
use crate::error::{Error, Result};
use crate::limits::check_size;
use crate::monoid::{FiniteMonoid, MonoidElem};
use crate::presentation::{
    dedup_relations, relation_sides, ActPresentation, ActRelation, BoundPresentation, FreeActElem,
    GenLabel,
};

pub use crate::diagonal::GeneratorDecomposition;

/// `(m, n) = (α(m, n)γ(m, n), β(m, n)γ(m, n))` with `α ∈ U`, `β ∈ V`.
/// Tables are indexed by `m|M| + n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalDecomposition {
    pub u: Vec<MonoidElem>,
    pub v: Vec<MonoidElem>,
    order: usize,
    alpha: Vec<MonoidElem>,
    beta: Vec<MonoidElem>,
    gamma: Vec<MonoidElem>,
}

impl DiagonalDecomposition {
    /// Scans `(u, v)` in index order, then `s`; the first hit wins.
    pub fn build(m: &FiniteMonoid, u: &[MonoidElem], v: &[MonoidElem]) -> Result<Self> {
        let mut u = u.to_vec();
        let mut v = v.to_vec();
        u.sort_unstable();
        u.dedup();
        v.sort_unstable();
        v.dedup();
        if !diagonal_generates(m, &u, &v) {
            return Err(Error::NotGenerating("U x V does not generate M x M".into()));
        }
        let k = m.order();
        let mut alpha = vec![usize::MAX; k * k];
        let mut beta = vec![0; k * k];
        let mut gamma = vec![0; k * k];
        for &a in &u {
            for &b in &v {
                for s in m.elements() {
                    let i = m.mul(a, s) * k + m.mul(b, s);
                    if alpha[i] == usize::MAX {
                        alpha[i] = a;
                        beta[i] = b;
                        gamma[i] = s;
                    }
                }
            }
        }
        Ok(DiagonalDecomposition {
            u,
            v,
            order: k,
            alpha,
            beta,
            gamma,
        })
    }

    pub fn alpha(&self, m: MonoidElem, n: MonoidElem) -> MonoidElem {
        self.alpha[m * self.order + n]
    }

    pub fn beta(&self, m: MonoidElem, n: MonoidElem) -> MonoidElem {
        self.beta[m * self.order + n]
    }

    pub fn gamma(&self, m: MonoidElem, n: MonoidElem) -> MonoidElem {
        self.gamma[m * self.order + n]
    }

    pub fn delta(&self, m: MonoidElem, n: MonoidElem) -> (MonoidElem, MonoidElem) {
        (self.alpha(m, n), self.beta(m, n))
    }

    pub fn holds(&self, monoid: &FiniteMonoid) -> bool {
        monoid.elements().all(|m| {
            monoid.elements().all(|n| {
                let g = self.gamma(m, n);
                monoid.mul(self.alpha(m, n), g) == m && monoid.mul(self.beta(m, n), g) == n
            })
        })
    }
}

/// Checks, for all `m₁, m₂, n₁, n₂` with `u = α(m₂, n₂)`, `v = β(m₂, n₂)`:
/// `(m₁m₂, n₁n₂) = (m₁u, n₁v)γ(m₂, n₂) = δ(m₁u, n₁v)·γ(m₁u, n₁v)γ(m₂, n₂)`.
pub fn crucial_identity_check(m: &FiniteMonoid, d: &DiagonalDecomposition) -> bool {
    for m2 in m.elements() {
        for n2 in m.elements() {
            let (u, v) = d.delta(m2, n2);
            let g2 = d.gamma(m2, n2);
            for m1 in m.elements() {
                for n1 in m.elements() {
                    let target = (m.mul(m1, m2), m.mul(n1, n2));
                    let (p, q) = (m.mul(m1, u), m.mul(n1, v));
                    if (m.mul(p, g2), m.mul(q, g2)) != target {
                        return false;
                    }
                    let (a, b) = d.delta(p, q);
                    let g = m.mul(d.gamma(p, q), g2);
                    if (m.mul(a, g), m.mul(b, g)) != target {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `Z = XU × YV` with the provenance of each factor element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGenerators {
    /// `XU`, ascending, with a witnessing `(position in X, u)`.
    pub xu: Vec<ActElem>,
    pub xu_from: Vec<(usize, MonoidElem)>,
    pub yv: Vec<ActElem>,
    pub yv_from: Vec<(usize, MonoidElem)>,
    /// Elements of `A × B`; generator `i|YV| + j` is `(xu[i], yv[j])`.
    pub z: Vec<ActElem>,
}

impl ProductGenerators {
    pub fn index(&self, a: ActElem, b: ActElem) -> Option<usize> {
        let i = self.xu.binary_search(&a).ok()?;
        let j = self.yv.binary_search(&b).ok()?;
        Some(i * self.yv.len() + j)
    }
}

fn translates(act: &FiniteAct, x: &[ActElem], u: &[MonoidElem]) -> (Vec<ActElem>, Vec<(usize, MonoidElem)>) {
    let d = GeneratorDecomposition::build(act, x, u);
    let from = d.chi.iter().zip(&d.alpha).map(|(&c, &a)| (c, a)).collect();
    (d.xu, from)
}

pub fn dp_generating_set(
    a: &FiniteAct,
    x: &[ActElem],
    b: &FiniteAct,
    y: &[ActElem],
    u: &[MonoidElem],
    v: &[MonoidElem],
) -> Result<ProductGenerators> {
    if !is_generating_set(a, x) {
        return Err(Error::NotGenerating("X does not generate A".into()));
    }
    if !is_generating_set(b, y) {
        return Err(Error::NotGenerating("Y does not generate B".into()));
    }
    if !diagonal_generates(a.base(), u, v) {
        return Err(Error::NotGenerating("U x V does not generate M x M".into()));
    }
    let (xu, xu_from) = translates(a, x, u);
    let (yv, yv_from) = translates(b, y, v);
    let q = b.size();
    let z = xu
        .iter()
        .flat_map(|&p| yv.iter().map(move |&r| p * q + r))
        .collect::<Vec<_>>();
    let product = direct_product_act(a, b)?;
    if !is_generating_set(&product, &z) {
        return Err(Error::NotGenerating("XU x YV".into()));
    }
    Ok(ProductGenerators {
        xu,
        xu_from,
        yv,
        yv_from,
        z,
    })
}

/// `(x·m, y·n) ↦ (xα(m, n), yβ(m, n))·γ(m, n)` as an element of `F_Z`.
/// `x` and `y` index into the generator lists `xs` and `ys`.
#[allow(clippy::too_many_arguments)]
pub fn rho_pair(
    a: &FiniteAct,
    b: &FiniteAct,
    xs: &[ActElem],
    ys: &[ActElem],
    gens: &ProductGenerators,
    d: &DiagonalDecomposition,
    wa: FreeActElem,
    wb: FreeActElem,
) -> FreeActElem {
    let (m, n) = (wa.elem, wb.elem);
    let p = a.act(xs[wa.gen], d.alpha(m, n));
    let q = b.act(ys[wb.gen], d.beta(m, n));
    let g = gens
        .index(p, q)
        .expect("decomposition and generators built from the same U, V");
    FreeActElem::new(g, d.gamma(m, n))
}

/// The assembled product presentation with its relation blocks.
#[derive(Debug, Clone)]
pub struct ProductPresentation {
    pub generators: ProductGenerators,
    pub t1: Vec<ActRelation>,
    pub t2: Vec<ActRelation>,
    pub t3: Vec<ActRelation>,
    /// `T₂`/`T₃` instances whose free side is a bare generator `x·1`.
    pub generator_sides: Vec<ActRelation>,
    pub bound: BoundPresentation,
}

/// Presentation of `A × B` on `XU × YV` from presentations `⟨X | R⟩` of `A`,
/// `⟨Y | S⟩` of `B` and `⟨U × V | P⟩` of the diagonal act.
pub fn dp_presentation(
    a: &FiniteAct,
    b: &FiniteAct,
    pa: &BoundPresentation,
    pb: &BoundPresentation,
    pdiag: &BoundPresentation,
    d: &DiagonalDecomposition,
) -> Result<ProductPresentation> {
    let m = a.base_arc();
    pa.clone().verified(a)?;
    pb.clone().verified(b)?;
    let diag = diagonal_act(m)?;
    pdiag.clone().verified(&diag)?;
    let (xs, ys) = (&pa.assign, &pb.assign);
    let gens = dp_generating_set(a, xs, b, ys, &d.u, &d.v)?;

    // Diagonal generators as (u, v) pairs.
    let uv: Vec<(MonoidElem, MonoidElem)> = pdiag.assign.iter().map(|&e| pair_of(m, e)).collect();
    if uv.iter().any(|(p, q)| !d.u.contains(p) || !d.v.contains(q)) {
        return Err(Error::invalid("diagonal presentation generators must lie in U x V"));
    }

    let mut t1 = Vec::new();
    for &x in xs.iter() {
        for &y in ys.iter() {
            let gen = |g: usize| {
                let (p, q) = uv[g];
                gens.index(a.act(x, p), b.act(y, q)).expect("in XU x YV")
            };
            for r in pdiag.relations() {
                t1.push(ActRelation::new(
                    FreeActElem::new(gen(r.lhs.gen), r.lhs.elem),
                    FreeActElem::new(gen(r.rhs.gen), r.rhs.elem),
                ));
            }
        }
    }

    let rho = |wa: FreeActElem, wb: FreeActElem| rho_pair(a, b, xs, ys, &gens, d, wa, wb);
    let left = |rels: &[ActRelation], sides: &[FreeActElem]| -> Vec<ActRelation> {
        let mut out = Vec::new();
        for r in rels {
            for &w in sides {
                for &u in &d.u {
                    for &v in &d.v {
                        out.push(ActRelation::new(
                            rho(r.lhs.scale(m, u), w.scale(m, v)),
                            rho(r.rhs.scale(m, u), w.scale(m, v)),
                        ));
                    }
                }
            }
        }
        out
    };
    let right = |rels: &[ActRelation], sides: &[FreeActElem]| -> Vec<ActRelation> {
        let mut out = Vec::new();
        for r in rels {
            for &w in sides {
                for &u in &d.u {
                    for &v in &d.v {
                        out.push(ActRelation::new(
                            rho(w.scale(m, u), r.lhs.scale(m, v)),
                            rho(w.scale(m, u), r.rhs.scale(m, v)),
                        ));
                    }
                }
            }
        }
        out
    };
    let bare = |count: usize| -> Vec<FreeActElem> {
        (0..count).map(|g| FreeActElem::new(g, m.identity())).collect()
    };
    let t2 = left(pa.relations(), &relation_sides(pb.relations()));
    let t3 = right(pb.relations(), &relation_sides(pa.relations()));
    let mut generator_sides = left(pa.relations(), &bare(ys.len()));
    generator_sides.extend(right(pb.relations(), &bare(xs.len())));

    let relations = dedup_relations(
        t1.iter()
            .chain(&t2)
            .chain(&t3)
            .chain(&generator_sides)
            .copied()
            .collect(),
    );
    let q = b.size();
    let labels = gens
        .z
        .iter()
        .map(|&e| GenLabel::pair(GenLabel::Name(a.label(e / q)), GenLabel::Name(b.label(e % q))))
        .collect();
    let product = direct_product_act(a, b)?;
    let bound = BoundPresentation {
        presentation: ActPresentation::new(labels, m.clone(), relations)?,
        assign: gens.z.clone(),
    }
    .verified(&product)?;
    Ok(ProductPresentation {
        generators: gens,
        t1,
        t2,
        t3,
        generator_sides,
        bound,
    })
}

/// Presentation of the factor `A` from a presentation of `A × B` whose
/// generators have first components in `XU`.
#[derive(Debug, Clone)]
pub struct FactorPresentation {
    pub images: Vec<ActRelation>,
    pub coincidences: Vec<ActRelation>,
    pub bound: BoundPresentation,
}

pub fn dp_factor_presentation(
    p: &BoundPresentation,
    a: &FiniteAct,
    b: &FiniteAct,
    x: &[ActElem],
    u: &[MonoidElem],
) -> Result<FactorPresentation> {
    let m = a.base_arc();
    if !diagonal_generates(m, u, u) {
        return Err(Error::NotGenerating("U x U does not generate M x M".into()));
    }
    if !is_generating_set(a, x) {
        return Err(Error::NotGenerating("X does not generate A".into()));
    }
    let product = direct_product_act(a, b)?;
    p.clone().verified(&product)?;
    let g = GeneratorDecomposition::build(a, x, u);
    let q = b.size();
    let gen_image: Vec<(usize, MonoidElem)> = p
        .assign
        .iter()
        .map(|&e| {
            let i = g
                .position(e / q)
                .ok_or_else(|| Error::invalid("generator outside XU x B"))?;
            Ok((g.chi[i], g.alpha[i]))
        })
        .collect::<Result<_>>()?;
    let rho = |w: &FreeActElem| {
        let (c, al) = gen_image[w.gen];
        FreeActElem::new(c, m.mul(al, w.elem))
    };
    let images = dedup_relations(
        p.relations()
            .iter()
            .map(|r| ActRelation::new(rho(&r.lhs), rho(&r.rhs)))
            .collect(),
    );
    let coincidences = coincidence_relations(a, x, u);
    let relations = dedup_relations(images.iter().chain(&coincidences).copied().collect());
    let labels = x.iter().map(|&e| GenLabel::Name(a.label(e))).collect();
    let bound = BoundPresentation {
        presentation: ActPresentation::new(labels, m.clone(), relations)?,
        assign: x.to_vec(),
    }
    .verified(a)?;
    Ok(FactorPresentation {
        images,
        coincidences,
        bound,
    })
}

/// Disjoint union of acts over one monoid, blocks in order.
pub fn disjoint_union(acts: &[FiniteAct]) -> Result<FiniteAct> {
    let first = acts.first().ok_or_else(|| Error::invalid("empty union"))?;
    if acts.iter().any(|x| !x.same_base(first)) {
        return Err(Error::BaseMismatch);
    }
    let size: usize = acts.iter().map(FiniteAct::size).sum();
    check_size(size)?;
    let base = first.base_arc();
    let k = base.order();
    let mut rows = Vec::with_capacity(size);
    let mut offset = 0;
    for act in acts {
        for e in 0..act.size() {
            rows.push((0..k).map(|s| offset + act.act(e, s)).collect::<Vec<_>>());
        }
        offset += act.size();
    }
    crate::act::validate_act(base.clone(), size, &rows)
}

/// Whether `F_k × F_l` is isomorphic to `kl` disjoint copies of the diagonal act.
pub fn free_square_is_diagonal_copies(m: &Arc<FiniteMonoid>, k: usize, l: usize) -> Result<bool> {
    let fk = free_act(k, m)?;
    let fl = free_act(l, m)?;
    let product = direct_product_act(fk.act(), fl.act())?;
    let diag = diagonal_act(m)?;
    let copies = disjoint_union(&vec![diag; k * l])?;
    Ok(crate::act::act_isomorphic(&product, &copies)?.is_some())
}

/// The pair `(u, v)` of the diagonal act as an element index.
pub fn diagonal_pairs(m: &FiniteMonoid, u: &[MonoidElem], v: &[MonoidElem]) -> Vec<ActElem> {
    u.iter()
        .flat_map(|&p| v.iter().map(move |&q| pair_index(m, p, q)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::act::right_regular_act;
    use crate::congruence::{congruence_closure, quotient_act};
    use crate::presentation::{canonical_presentation, kernel_presentation, reduce_presentation, satisfies};

    fn arc(m: FiniteMonoid) -> Arc<FiniteMonoid> {
        Arc::new(m)
    }

    fn canon(act: &FiniteAct) -> BoundPresentation {
        let all: Vec<MonoidElem> = act.base().elements().collect();
        canonical_presentation(act, &all).unwrap()
    }

    fn diag_pres(m: &Arc<FiniteMonoid>, d: &DiagonalDecomposition) -> BoundPresentation {
        let diag = diagonal_act(m).unwrap();
        let kp = kernel_presentation(&diag, &diagonal_pairs(m, &d.u, &d.v)).unwrap();
        reduce_presentation(&kp, &diag).unwrap()
    }

    #[test]
    fn decomposition_tables() {
        let t = arc(FiniteMonoid::trivial());
        let d = DiagonalDecomposition::build(&t, &[0], &[0]).unwrap();
        assert!(d.holds(&t) && crucial_identity_check(&t, &d));

        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let d = DiagonalDecomposition::build(&z2, &[0, 1], &[0, 1]).unwrap();
        assert_eq!((d.delta(0, 1), d.gamma(0, 1)), ((0, 1), 0));
        assert!(d.holds(&z2) && crucial_identity_check(&z2, &d));
        assert!(DiagonalDecomposition::build(&z2, &[0], &[0]).is_err());

        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        let d = DiagonalDecomposition::build(&e2, &[0, 1], &[0, 1]).unwrap();
        assert!(d.holds(&e2) && crucial_identity_check(&e2, &d));
    }

    #[test]
    fn generating_sets() {
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let rr = right_regular_act(&z2);
        let g = dp_generating_set(&rr, &[0], &rr, &[0], &[0], &[0, 1]).unwrap();
        assert_eq!(g.z, vec![0, 1]);
        assert!(dp_generating_set(&rr, &[0], &rr, &[0], &[0], &[0]).is_err());
    }

    #[test]
    fn rho_pair_commutes_with_evaluation() {
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let rr = right_regular_act(&z2);
        let d = DiagonalDecomposition::build(&z2, &[0, 1], &[0, 1]).unwrap();
        let g = dp_generating_set(&rr, &[0], &rr, &[0], &d.u, &d.v).unwrap();
        let prod = direct_product_act(&rr, &rr).unwrap();
        for m in 0..2 {
            for n in 0..2 {
                let w = rho_pair(&rr, &rr, &[0], &[0], &g, &d, FreeActElem::new(0, m), FreeActElem::new(0, n));
                assert_eq!(prod.act(g.z[w.gen], w.elem), m * 2 + n);
            }
        }
    }

    #[test]
    fn presentations_of_products() {
        let t = arc(FiniteMonoid::trivial());
        let one = FiniteAct::trivial(t.clone(), 1).unwrap();
        let d = DiagonalDecomposition::build(&t, &[0], &[0]).unwrap();
        let p = dp_presentation(&one, &one, &canon(&one), &canon(&one), &diag_pres(&t, &d), &d).unwrap();
        assert_eq!(p.bound.assign.len(), 1);

        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let rr = right_regular_act(&z2);
        let d = DiagonalDecomposition::build(&z2, &[0, 1], &[0, 1]).unwrap();
        let p = dp_presentation(&rr, &rr, &canon(&rr), &canon(&rr), &diag_pres(&z2, &d), &d).unwrap();
        let prod = direct_product_act(&rr, &rr).unwrap();
        assert!(satisfies(&prod, &p.bound.assign, p.bound.relations()));

        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        let rr = right_regular_act(&e2);
        let cong = congruence_closure(&rr, &[(0, 1)]);
        let (single, _) = quotient_act(&rr, &cong).unwrap();
        let d = DiagonalDecomposition::build(&e2, &[0, 1], &[0, 1]).unwrap();
        dp_presentation(&rr, &single, &canon(&rr), &canon(&single), &diag_pres(&e2, &d), &d).unwrap();
    }

    #[test]
    fn factor_extraction() {
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let rr = right_regular_act(&z2);
        let one = FiniteAct::trivial(z2.clone(), 1).unwrap();
        let prod = direct_product_act(&rr, &one).unwrap();
        let p = canon(&prod);
        let f = dp_factor_presentation(&p, &rr, &one, &[0, 1], &[0, 1]).unwrap();
        assert!(f.images.len() <= p.relations().len());

        let prod = direct_product_act(&rr, &rr).unwrap();
        let p = canon(&prod);
        dp_factor_presentation(&p, &rr, &rr, &[0, 1], &[0, 1]).unwrap();
    }

    #[test]
    fn free_squares() {
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        assert!(free_square_is_diagonal_copies(&z2, 1, 1).unwrap());
        assert!(free_square_is_diagonal_copies(&z2, 2, 1).unwrap());
        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        assert!(free_square_is_diagonal_copies(&e2, 2, 2).unwrap());
    }
}
