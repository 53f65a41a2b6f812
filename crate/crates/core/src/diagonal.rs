//! Diagonal acts `M × M` with `(a, b)c = (ac, bc)`, and generating sets and
//! presentations for the diagonal acts of `M^0`, `M × N` and `U(M, A)`.
//!
//! Pair `(a, b)` of the diagonal act has index `a|M| + b`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::act::{direct_product_act, is_generating_set, right_regular_act, ActElem, FiniteAct};
use crate::error::{Error, Result};
use crate::limits::{check_size, Limits};
use crate::monoid::{adjoin_zero, attach_act_monoid, direct_product_monoid, FiniteMonoid, MonoidElem};
use crate::presentation::{
    dedup_relations, relation_sides, ActPresentation, ActRelation, BoundPresentation, FreeActElem,
    GenLabel,
};

pub fn diagonal_act(m: &Arc<FiniteMonoid>) -> Result<FiniteAct> {
    check_size(m.order().saturating_mul(m.order()))?;
    let rr = right_regular_act(m);
    direct_product_act(&rr, &rr)
}

#[inline]
pub fn pair_index(m: &FiniteMonoid, a: MonoidElem, b: MonoidElem) -> ActElem {
    a * m.order() + b
}

#[inline]
pub fn pair_of(m: &FiniteMonoid, i: ActElem) -> (MonoidElem, MonoidElem) {
    (i / m.order(), i % m.order())
}

/// True iff `U × V` generates the diagonal act of `m`.
pub fn diagonal_generates(m: &FiniteMonoid, u: &[MonoidElem], v: &[MonoidElem]) -> bool {
    let k = m.order();
    let mut seen = vec![false; k * k];
    for &a in u {
        for &b in v {
            for s in m.elements() {
                seen[m.mul(a, s) * k + m.mul(b, s)] = true;
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// `U × V ⊆ M` generating the diagonal act.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalGenerators {
    pub u: Vec<MonoidElem>,
    pub v: Vec<MonoidElem>,
}

impl DiagonalGenerators {
    pub fn square(u: Vec<MonoidElem>) -> Self {
        DiagonalGenerators { v: u.clone(), u }
    }

    /// The pairs `(u, v)` in `u`-major order, as diagonal act indices.
    pub fn pairs(&self, m: &FiniteMonoid) -> Vec<ActElem> {
        self.u
            .iter()
            .flat_map(|&a| self.v.iter().map(move |&b| pair_index(m, a, b)))
            .collect()
    }
}

/// Smallest `U` (ties broken lexicographically) with `U × U` generating
/// `M × M`. Above the exhaustive cap this falls back to `U = M`.
pub fn square_generating_set(m: &FiniteMonoid) -> DiagonalGenerators {
    let k = m.order();
    if k > Limits::global().exhaustive_cap {
        return DiagonalGenerators::square(m.elements().collect());
    }
    for size in 1..=k {
        let mut found = None;
        for_each_combination(k, size, |combo| {
            if diagonal_generates(m, combo, combo) {
                found = Some(combo.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(u) = found {
            return DiagonalGenerators::square(u);
        }
    }
    unreachable!("U = M always generates the diagonal act")
}

/// Smallest `(U, V)` by `|U| + |V|`, then `|U|`, then lexicographically,
/// with `U × V` generating `M × M`.
pub fn rectangular_generating_set(m: &FiniteMonoid) -> DiagonalGenerators {
    let k = m.order();
    if k > Limits::global().exhaustive_cap.min(10) {
        return square_generating_set(m);
    }
    let subsets: Vec<Vec<MonoidElem>> = (1u32..(1 << k))
        .map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    let mut best: Option<(usize, usize, Vec<MonoidElem>, Vec<MonoidElem>)> = None;
    for u in &subsets {
        for v in &subsets {
            let key = (u.len() + v.len(), u.len());
            if let Some((t, s, bu, bv)) = &best {
                if (key.0, key.1) > (*t, *s)
                    || ((key.0, key.1) == (*t, *s) && (u, v) >= (bu, bv))
                {
                    continue;
                }
            }
            if diagonal_generates(m, u, v) {
                best = Some((key.0, key.1, u.clone(), v.clone()));
            }
        }
    }
    let (_, _, u, v) = best.expect("U = V = M generates");
    DiagonalGenerators { u, v }
}

/// Calls `f` on each `size`-subset of `0..n` in lexicographic order until it
/// returns true.
pub(crate) fn for_each_combination(n: usize, size: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        if f(&combo) {
            return;
        }
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        if combo[i] == i + n - size {
            return;
        }
        combo[i] += 1;
        for j in i + 1..size {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// A set of pairs in the diagonal act of `monoid`.
#[derive(Debug, Clone)]
pub struct DiagonalPairs {
    pub monoid: Arc<FiniteMonoid>,
    pub pairs: Vec<(MonoidElem, MonoidElem)>,
}

impl DiagonalPairs {
    pub fn act_elems(&self) -> Vec<ActElem> {
        self.pairs
            .iter()
            .map(|&(a, b)| pair_index(&self.monoid, a, b))
            .collect()
    }

    pub fn generates(&self) -> Result<bool> {
        let diag = diagonal_act(&self.monoid)?;
        Ok(is_generating_set(&diag, &self.act_elems()))
    }

    fn verified(self) -> Result<Self> {
        if self.generates()? {
            Ok(self)
        } else {
            Err(Error::NotGenerating("diagonal generators".into()))
        }
    }
}

/// `((U ∪ {0}) × (U ∪ {0})) \ {(0, 0)}` inside the diagonal act of `M^0`,
/// listed as `U × U`, then `U × {0}`, then `{0} × U`.
pub fn zero_extension_generators(m: &FiniteMonoid, u: &[MonoidElem]) -> Result<DiagonalPairs> {
    if !diagonal_generates(m, u, u) {
        return Err(Error::NotGenerating("U x U does not generate M x M".into()));
    }
    let m0 = Arc::new(adjoin_zero(m));
    let zero = m.order();
    let mut pairs: Vec<(MonoidElem, MonoidElem)> = u
        .iter()
        .flat_map(|&a| u.iter().map(move |&b| (a, b)))
        .collect();
    pairs.extend(u.iter().map(|&a| (a, zero)));
    pairs.extend(u.iter().map(|&b| (zero, b)));
    DiagonalPairs { monoid: m0, pairs }.verified()
}

/// `(U × V) × (U × V)` in the diagonal act of `M × N`, listed with the
/// `U × U` index major: generator `i |V|² + j` pairs the `i`-th element of
/// `U × U` with the `j`-th element of `V × V`.
pub fn product_diagonal_generators(
    m: &FiniteMonoid,
    n: &FiniteMonoid,
    u: &[MonoidElem],
    v: &[MonoidElem],
) -> Result<DiagonalPairs> {
    if !diagonal_generates(m, u, u) || !diagonal_generates(n, v, v) {
        return Err(Error::NotGenerating("factor diagonal generators".into()));
    }
    let mn = Arc::new(direct_product_monoid(m, n)?);
    let q = n.order();
    let mut pairs = Vec::new();
    for &u1 in u {
        for &u2 in u {
            for &v1 in v {
                for &v2 in v {
                    pairs.push((u1 * q + v1, u2 * q + v2));
                }
            }
        }
    }
    DiagonalPairs { monoid: mn, pairs }.verified()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Left,
    Right,
}

/// Projection of `U ⊆ M × N` to one factor, ascending and deduplicated.
/// The result `U'` satisfies: `U' × U'` generates that factor's diagonal act
/// whenever `U × U` generates the diagonal act of `M × N`.
pub fn project_diagonal_generators(
    m: &FiniteMonoid,
    n: &FiniteMonoid,
    u: &[MonoidElem],
    factor: Factor,
) -> Result<Vec<MonoidElem>> {
    let q = n.order();
    let mut out: Vec<MonoidElem> = u
        .iter()
        .map(|&e| match factor {
            Factor::Left => e / q,
            Factor::Right => e % q,
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    let target = match factor {
        Factor::Left => m,
        Factor::Right => n,
    };
    if diagonal_generates(target, &out, &out) {
        Ok(out)
    } else {
        Err(Error::NotGenerating("projected diagonal generators".into()))
    }
}

fn bound(
    labels: Vec<GenLabel>,
    monoid: Arc<FiniteMonoid>,
    relations: Vec<ActRelation>,
    assign: Vec<ActElem>,
) -> Result<BoundPresentation> {
    Ok(BoundPresentation {
        presentation: ActPresentation::new(labels, monoid, relations)?,
        assign,
    })
}

/// Keeps the generators in `N × N` and the relations that only mention those
/// generators and multipliers from `N`. Requires `N` to be a submonoid whose
/// complement is an ideal.
pub fn restrict_presentation_to_submonoid(
    m: &Arc<FiniteMonoid>,
    p: &BoundPresentation,
    n_elems: &[MonoidElem],
) -> Result<BoundPresentation> {
    if !m.is_submonoid(n_elems) {
        return Err(Error::NotSubmonoid);
    }
    let complement: Vec<MonoidElem> = m.elements().filter(|e| !n_elems.contains(e)).collect();
    if !m.is_ideal(&complement) {
        return Err(Error::ComplementNotIdeal);
    }
    let diag_m = diagonal_act(m)?;
    p.clone().verified(&diag_m)?;

    let (n, embed) = m.submonoid(n_elems)?;
    let n = Arc::new(n);
    let mut index = vec![usize::MAX; m.order()];
    for (i, &e) in embed.iter().enumerate() {
        index[e] = i;
    }
    let mut gen_map = vec![usize::MAX; p.assign.len()];
    let mut labels = Vec::new();
    let mut assign = Vec::new();
    for (g, &a) in p.assign.iter().enumerate() {
        let (x, y) = pair_of(m, a);
        if index[x] != usize::MAX && index[y] != usize::MAX {
            gen_map[g] = labels.len();
            labels.push(p.presentation.gen_labels()[g].clone());
            assign.push(pair_index(&n, index[x], index[y]));
        }
    }
    if labels.is_empty() {
        return Err(Error::NotGenerating("no generators lie in N x N".into()));
    }
    let keep = |w: &FreeActElem| gen_map[w.gen] != usize::MAX && index[w.elem] != usize::MAX;
    let map = |w: &FreeActElem| FreeActElem::new(gen_map[w.gen], index[w.elem]);
    let relations = p
        .relations()
        .iter()
        .filter(|r| keep(&r.lhs) && keep(&r.rhs))
        .map(|r| ActRelation::new(map(&r.lhs), map(&r.rhs)))
        .collect();
    let diag_n = diagonal_act(&n)?;
    bound(labels, n, relations, assign)?.verified(&diag_n)
}

/// Presentation of the diagonal `M^0`-act from presentations of the
/// diagonal `M`-act (`⟨U × U | R⟩`) and of `M` itself (`⟨U | S⟩`).
///
/// Generators: those of `p_diag`, then `(u, 0)`, then `(0, u)` for the
/// generators `u` of `p_monoid`. Relations: `R`, the two copies of `S`, and
/// `x·0 = y·0` for every ordered pair of generators.
pub fn zero_extension_presentation(
    m: &Arc<FiniteMonoid>,
    p_diag: &BoundPresentation,
    p_monoid: &BoundPresentation,
) -> Result<BoundPresentation> {
    let m0 = Arc::new(adjoin_zero(m));
    let zero = m.order();
    let k0 = m0.order();
    let d = p_diag.assign.len();
    let s = p_monoid.assign.len();

    let mut labels: Vec<GenLabel> = p_diag.presentation.gen_labels().to_vec();
    let mut assign: Vec<ActElem> = p_diag
        .assign
        .iter()
        .map(|&a| {
            let (x, y) = pair_of(m, a);
            x * k0 + y
        })
        .collect();
    for &u in &p_monoid.assign {
        labels.push(GenLabel::pair(GenLabel::Name(m.label(u)), GenLabel::Name("0".into())));
        assign.push(u * k0 + zero);
    }
    for &u in &p_monoid.assign {
        labels.push(GenLabel::pair(GenLabel::Name("0".into()), GenLabel::Name(m.label(u))));
        assign.push(zero * k0 + u);
    }

    let mut relations: Vec<ActRelation> = p_diag.relations().to_vec();
    let shift = |w: FreeActElem, off: usize| FreeActElem::new(w.gen + off, w.elem);
    for r in p_monoid.relations() {
        relations.push(ActRelation::new(shift(r.lhs, d), shift(r.rhs, d)));
    }
    for r in p_monoid.relations() {
        relations.push(ActRelation::new(shift(r.lhs, d + s), shift(r.rhs, d + s)));
    }
    let z = labels.len();
    for x in 0..z {
        for y in 0..z {
            relations.push(ActRelation::new(
                FreeActElem::new(x, zero),
                FreeActElem::new(y, zero),
            ));
        }
    }
    let diag0 = diagonal_act(&m0)?;
    bound(labels, m0, relations, assign)?.verified(&diag0)
}

/// The product-diagonal presentation with its relation blocks kept apart.
#[derive(Debug, Clone)]
pub struct ProductDiagonalPresentation {
    /// `R`-relations paired with sides of `S̄`.
    pub t1: Vec<ActRelation>,
    /// `S`-relations paired with sides of `R̄`.
    pub t2: Vec<ActRelation>,
    /// `R`- and `S`-relations paired with bare generators `x·1`.
    pub generator_sides: Vec<ActRelation>,
    pub bound: BoundPresentation,
}

/// Presentation of the diagonal `(M × N)`-act from presentations of the
/// diagonal `M`- and `N`-acts. Generator `i |Gn| + j` combines generator `i`
/// of `p_m` with generator `j` of `p_n`; multiplier `(m, n)` has index
/// `m|N| + n`.
pub fn product_diagonal_presentation(
    m: &Arc<FiniteMonoid>,
    n: &Arc<FiniteMonoid>,
    p_m: &BoundPresentation,
    p_n: &BoundPresentation,
) -> Result<ProductDiagonalPresentation> {
    let mn = Arc::new(direct_product_monoid(m, n)?);
    let q = n.order();
    let gn = p_n.assign.len();
    let gen = |i: usize, j: usize| i * gn + j;
    let mul = |a: MonoidElem, b: MonoidElem| a * q + b;

    let mut labels = Vec::new();
    let mut assign = Vec::new();
    for (i, &a) in p_m.assign.iter().enumerate() {
        let (a1, a2) = pair_of(m, a);
        for (j, &b) in p_n.assign.iter().enumerate() {
            let (b1, b2) = pair_of(n, b);
            labels.push(GenLabel::pair(
                p_m.presentation.gen_labels()[i].clone(),
                p_n.presentation.gen_labels()[j].clone(),
            ));
            assign.push(pair_index(&mn, mul(a1, b1), mul(a2, b2)));
        }
    }

    let r = p_m.relations();
    let s = p_n.relations();
    let gen_sides = |count: usize, id: MonoidElem| -> Vec<FreeActElem> {
        (0..count).map(|g| FreeActElem::new(g, id)).collect()
    };
    let lift_m = |rel: &ActRelation, w: &FreeActElem| {
        ActRelation::new(
            FreeActElem::new(gen(rel.lhs.gen, w.gen), mul(rel.lhs.elem, w.elem)),
            FreeActElem::new(gen(rel.rhs.gen, w.gen), mul(rel.rhs.elem, w.elem)),
        )
    };
    let lift_n = |rel: &ActRelation, w: &FreeActElem| {
        ActRelation::new(
            FreeActElem::new(gen(w.gen, rel.lhs.gen), mul(w.elem, rel.lhs.elem)),
            FreeActElem::new(gen(w.gen, rel.rhs.gen), mul(w.elem, rel.rhs.elem)),
        )
    };

    let s_sides = relation_sides(s);
    let r_sides = relation_sides(r);
    let t1: Vec<ActRelation> = r
        .iter()
        .flat_map(|rel| s_sides.iter().map(move |w| lift_m(rel, w)))
        .collect();
    let t2: Vec<ActRelation> = s
        .iter()
        .flat_map(|rel| r_sides.iter().map(move |w| lift_n(rel, w)))
        .collect();
    let n_gens = gen_sides(gn, n.identity());
    let m_gens = gen_sides(p_m.assign.len(), m.identity());
    let mut generator_sides: Vec<ActRelation> = r
        .iter()
        .flat_map(|rel| n_gens.iter().map(move |w| lift_m(rel, w)))
        .collect();
    generator_sides.extend(
        s.iter()
            .flat_map(|rel| m_gens.iter().map(move |w| lift_n(rel, w))),
    );

    let relations = dedup_relations(
        t1.iter()
            .chain(&t2)
            .chain(&generator_sides)
            .copied()
            .collect(),
    );
    let diag = diagonal_act(&mn)?;
    let bound = bound(labels, mn, relations, assign)?.verified(&diag)?;
    Ok(ProductDiagonalPresentation {
        t1,
        t2,
        generator_sides,
        bound,
    })
}

/// Pushes a presentation of the diagonal `(M × N)`-act down to one factor:
/// generators are projected, multipliers `(m, n)` become `m` (or `n`).
pub fn product_diagonal_factor_presentation(
    m: &Arc<FiniteMonoid>,
    n: &Arc<FiniteMonoid>,
    p: &BoundPresentation,
    factor: Factor,
) -> Result<BoundPresentation> {
    let mn = direct_product_monoid(m, n)?;
    let q = n.order();
    let (target_monoid, proj): (&Arc<FiniteMonoid>, Box<dyn Fn(MonoidElem) -> MonoidElem>) =
        match factor {
            Factor::Left => (m, Box::new(move |e| e / q)),
            Factor::Right => (n, Box::new(move |e| e % q)),
        };
    let mut gen_index: HashMap<ActElem, usize> = HashMap::new();
    let mut gen_map = Vec::with_capacity(p.assign.len());
    let mut assign = Vec::new();
    let mut labels = Vec::new();
    for &a in &p.assign {
        let (x, y) = pair_of(&mn, a);
        let image = pair_index(target_monoid, proj(x), proj(y));
        let next = gen_index.len();
        let g = *gen_index.entry(image).or_insert_with(|| {
            assign.push(image);
            labels.push(GenLabel::pair(
                GenLabel::Name(target_monoid.label(proj(x))),
                GenLabel::Name(target_monoid.label(proj(y))),
            ));
            next
        });
        gen_map.push(g);
    }
    let rho = |w: &FreeActElem| FreeActElem::new(gen_map[w.gen], proj(w.elem));
    let relations = dedup_relations(
        p.relations()
            .iter()
            .map(|r| ActRelation::new(rho(&r.lhs), rho(&r.rhs)))
            .collect(),
    );
    let diag = diagonal_act(target_monoid)?;
    bound(labels, target_monoid.clone(), relations, assign)?.verified(&diag)
}

/// `V = XU ∪ U` inside `U(M, A)`; `V × V` generates its diagonal act.
/// Act element `a` is the monoid element `|M| + a`.
pub fn attach_act_generators(
    m: &Arc<FiniteMonoid>,
    act: &FiniteAct,
    x: &[ActElem],
    u: &[MonoidElem],
) -> Result<DiagonalPairs> {
    if !u.contains(&m.identity()) {
        return Err(Error::IdentityNotInU);
    }
    if !is_generating_set(act, x) {
        return Err(Error::NotGenerating("X does not generate A".into()));
    }
    if !diagonal_generates(m, u, u) {
        return Err(Error::NotGenerating("U x U does not generate M x M".into()));
    }
    let big = Arc::new(attach_act_monoid(m, act)?);
    let v = attach_generator_set(m, act, x, u);
    let pairs = v
        .iter()
        .flat_map(|&a| v.iter().map(move |&b| (a, b)))
        .collect();
    DiagonalPairs { monoid: big, pairs }.verified()
}

/// `XU ∪ U` as ascending `U(M, A)` indices.
pub fn attach_generator_set(
    m: &FiniteMonoid,
    act: &FiniteAct,
    x: &[ActElem],
    u: &[MonoidElem],
) -> Vec<MonoidElem> {
    let k = m.order();
    let mut v: Vec<MonoidElem> = u.to_vec();
    v.extend(x.iter().flat_map(|&a| u.iter().map(move |&s| k + act.act(a, s))));
    v.sort_unstable();
    v.dedup();
    v
}

/// Splits `U ⊆ U(M, A)` into `U ∩ A` (as act elements) and `U ∩ M`, and
/// checks that they generate `A` and the diagonal `M`-act respectively.
pub fn project_attach_generators(
    m: &FiniteMonoid,
    act: &FiniteAct,
    u: &[MonoidElem],
) -> Result<(Vec<ActElem>, Vec<MonoidElem>)> {
    let k = m.order();
    let in_a: Vec<ActElem> = u.iter().filter(|&&e| e >= k).map(|&e| e - k).collect();
    let in_m: Vec<MonoidElem> = u.iter().filter(|&&e| e < k).copied().collect();
    if !is_generating_set(act, &in_a) {
        return Err(Error::NotGenerating("U ∩ A does not generate A".into()));
    }
    if !diagonal_generates(m, &in_m, &in_m) {
        return Err(Error::NotGenerating("(U ∩ M)² does not generate M x M".into()));
    }
    Ok((in_a, in_m))
}

/// Choice of `χ(x') ∈ X`, `α(x') ∈ U` with `x' = χ(x')α(x')` for each
/// `x' ∈ XU`, smallest `(x, u)` position first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDecomposition {
    /// `XU`, ascending.
    pub xu: Vec<ActElem>,
    /// Position in `X` of `χ(x')`.
    pub chi: Vec<usize>,
    pub alpha: Vec<MonoidElem>,
}

impl GeneratorDecomposition {
    pub fn build(act: &FiniteAct, x: &[ActElem], u: &[MonoidElem]) -> Self {
        let mut choice: HashMap<ActElem, (usize, MonoidElem)> = HashMap::new();
        for (i, &g) in x.iter().enumerate() {
            for &s in u {
                choice.entry(act.act(g, s)).or_insert((i, s));
            }
        }
        let mut xu: Vec<ActElem> = choice.keys().copied().collect();
        xu.sort_unstable();
        let chi = xu.iter().map(|a| choice[a].0).collect();
        let alpha = xu.iter().map(|a| choice[a].1).collect();
        GeneratorDecomposition { xu, chi, alpha }
    }

    pub fn position(&self, a: ActElem) -> Option<usize> {
        self.xu.binary_search(&a).ok()
    }

    /// `x' ↦ χ(x')·α(x')`, scaled by `s`.
    pub fn rho(&self, monoid: &FiniteMonoid, a: ActElem, s: MonoidElem) -> Option<FreeActElem> {
        self.position(a)
            .map(|i| FreeActElem::new(self.chi[i], monoid.mul(self.alpha[i], s)))
    }
}

/// Relations `x·u = y·v` for all `x, y ∈ X`, `u, v ∈ U` with `xu = yv`.
pub fn coincidence_relations(act: &FiniteAct, x: &[ActElem], u: &[MonoidElem]) -> Vec<ActRelation> {
    let mut out = Vec::new();
    for (i, &a) in x.iter().enumerate() {
        for &s in u {
            for (j, &b) in x.iter().enumerate() {
                for &t in u {
                    if act.act(a, s) == act.act(b, t) {
                        out.push(ActRelation::new(FreeActElem::new(i, s), FreeActElem::new(j, t)));
                    }
                }
            }
        }
    }
    out
}

/// A presentation of `A` over `M` extracted from a presentation of the
/// diagonal `U(M, A)`-act with generators in `V × V`, `V = XU ∪ U`.
#[derive(Debug, Clone)]
pub struct AttachFactorPresentation {
    /// Images of the applicable relations under `ρ`.
    pub images: Vec<ActRelation>,
    pub coincidences: Vec<ActRelation>,
    pub decomposition: GeneratorDecomposition,
    pub bound: BoundPresentation,
}

pub fn attach_act_factor_presentation(
    m: &Arc<FiniteMonoid>,
    act: &FiniteAct,
    p: &BoundPresentation,
    x: &[ActElem],
    u: &[MonoidElem],
) -> Result<AttachFactorPresentation> {
    let big = attach_act_monoid(m, act)?;
    let k = m.order();
    let dec = GeneratorDecomposition::build(act, x, u);
    // (x', u) generators with x' ∈ XU and u ∈ U map to χ(x')·α(x').
    let gen_image: Vec<Option<(usize, MonoidElem)>> = p
        .assign
        .iter()
        .map(|&a| {
            let (first, second) = pair_of(&big, a);
            if first >= k && second < k && u.contains(&second) {
                dec.position(first - k).map(|i| (dec.chi[i], dec.alpha[i]))
            } else {
                None
            }
        })
        .collect();
    let rho = |w: &FreeActElem| -> Option<FreeActElem> {
        if w.elem >= k {
            return None;
        }
        gen_image[w.gen].map(|(g, alpha)| FreeActElem::new(g, m.mul(alpha, w.elem)))
    };
    let images: Vec<ActRelation> = p
        .relations()
        .iter()
        .filter_map(|r| Some(ActRelation::new(rho(&r.lhs)?, rho(&r.rhs)?)))
        .collect();
    let coincidences = coincidence_relations(act, x, u);
    let relations = dedup_relations(images.iter().chain(&coincidences).copied().collect());
    let labels = x
        .iter()
        .map(|&a| GenLabel::Name(act.label(a)))
        .collect();
    let bound = bound(labels, m.clone(), relations, x.to_vec())?.verified(act)?;
    Ok(AttachFactorPresentation {
        images,
        coincidences,
        decomposition: dec,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{canonical_presentation, kernel_presentation, reduce_presentation};

    fn arc(m: FiniteMonoid) -> Arc<FiniteMonoid> {
        Arc::new(m)
    }

    fn z2() -> Arc<FiniteMonoid> {
        arc(FiniteMonoid::cyclic_group(2).unwrap())
    }

    fn e2() -> Arc<FiniteMonoid> {
        arc(FiniteMonoid::semilattice_chain(2).unwrap())
    }

    /// Reduced kernel presentation on the generators `U × U`.
    fn diag_presentation(m: &Arc<FiniteMonoid>, u: &[MonoidElem]) -> BoundPresentation {
        let diag = diagonal_act(m).unwrap();
        let gens = DiagonalGenerators::square(u.to_vec()).pairs(m);
        let kp = kernel_presentation(&diag, &gens).unwrap();
        reduce_presentation(&kp, &diag).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut count = 0;
        for_each_combination(3, 3, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn square_sets() {
        let t = arc(FiniteMonoid::trivial());
        assert_eq!(square_generating_set(&t).u, vec![0]);
        assert_eq!(square_generating_set(&z2()).u, vec![0, 1]);
        assert!(!diagonal_generates(&z2(), &[0], &[0]));
        assert_eq!(square_generating_set(&e2()).u, vec![0, 1]);
        assert_eq!(diagonal_act(&z2()).unwrap().size(), 4);
    }

    #[test]
    fn rectangular_set_for_z2() {
        let g = rectangular_generating_set(&z2());
        assert_eq!((g.u, g.v), (vec![0], vec![0, 1]));
    }

    #[test]
    fn zero_extension_generator_counts() {
        let t = arc(FiniteMonoid::trivial());
        let z = zero_extension_generators(&t, &[0]).unwrap();
        assert_eq!(z.pairs, vec![(0, 0), (0, 1), (1, 0)]);
        let z = zero_extension_generators(&z2(), &[0, 1]).unwrap();
        assert_eq!(z.pairs.len(), 8);
        assert!(zero_extension_generators(&z2(), &[0]).is_err());
    }

    #[test]
    fn product_generators_both_directions() {
        let (m, n) = (z2(), z2());
        let g = product_diagonal_generators(&m, &n, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(g.pairs.len(), 16);
        let mn = direct_product_monoid(&m, &n).unwrap();
        let sq = square_generating_set(&mn);
        let proj = project_diagonal_generators(&m, &n, &sq.u, Factor::Left).unwrap();
        assert!(diagonal_generates(&m, &proj, &proj));
        let t = arc(FiniteMonoid::trivial());
        let g = product_diagonal_generators(&t, &t, &[0], &[0]).unwrap();
        assert_eq!(g.pairs.len(), 1);
    }

    #[test]
    fn restriction_to_submonoid() {
        let e = e2();
        let p = diag_presentation(&e, &[0, 1]);
        let r = restrict_presentation_to_submonoid(&e, &p, &[0]).unwrap();
        assert_eq!(r.presentation.monoid().order(), 1);
        let same = restrict_presentation_to_submonoid(&e, &p, &[0, 1]).unwrap();
        assert_eq!(same.relations(), p.relations());
        let z = z2();
        let pz = diag_presentation(&z, &[0, 1]);
        assert_eq!(
            restrict_presentation_to_submonoid(&z, &pz, &[0]).unwrap_err(),
            Error::ComplementNotIdeal
        );
        assert_eq!(
            restrict_presentation_to_submonoid(&e, &p, &[1]).unwrap_err(),
            Error::NotSubmonoid
        );
    }

    #[test]
    fn zero_extension_presentations() {
        for m in [arc(FiniteMonoid::trivial()), z2(), e2()] {
            let u = square_generating_set(&m).u;
            let pd = diag_presentation(&m, &u);
            let rr = right_regular_act(&m);
            let pm = reduce_presentation(&kernel_presentation(&rr, &u).unwrap(), &rr).unwrap();
            let z = zero_extension_presentation(&m, &pd, &pm).unwrap();
            let zc = z.assign.len();
            assert_eq!(zc, (u.len() + 1).pow(2) - 1);
            assert_eq!(
                z.relations().len(),
                pd.relations().len() + 2 * pm.relations().len() + zc * zc
            );
        }
    }

    #[test]
    fn product_diagonal_presentations() {
        let t = arc(FiniteMonoid::trivial());
        let pt = diag_presentation(&t, &[0]);
        let both_trivial = product_diagonal_presentation(&t, &t, &pt, &pt).unwrap();
        assert_eq!(both_trivial.bound.assign.len(), 1);

        let (m, n) = (z2(), z2());
        let pm = diag_presentation(&m, &[0, 1]);
        let pn = diag_presentation(&n, &[0, 1]);
        let pd = product_diagonal_presentation(&m, &n, &pm, &pn).unwrap();
        assert_eq!(pd.bound.assign.len(), 16);
        assert_eq!(pd.t1.len(), pm.relations().len() * relation_sides(pn.relations()).len());
    }

    #[test]
    fn factor_presentations() {
        let (m, n) = (z2(), e2());
        let mn = arc(direct_product_monoid(&m, &n).unwrap());
        let diag = diagonal_act(&mn).unwrap();
        let all: Vec<MonoidElem> = mn.elements().collect();
        let canon = canonical_presentation(&diag, &all).unwrap();
        product_diagonal_factor_presentation(&m, &n, &canon, Factor::Left).unwrap();
        product_diagonal_factor_presentation(&m, &n, &canon, Factor::Right).unwrap();
    }

    #[test]
    fn attach_generators_and_factor() {
        let t = arc(FiniteMonoid::trivial());
        let single = FiniteAct::trivial(t.clone(), 1).unwrap();
        let v = attach_act_generators(&t, &single, &[0], &[0]).unwrap();
        let vs: Vec<MonoidElem> = attach_generator_set(&t, &single, &[0], &[0]);
        assert_eq!(vs, vec![0, 1]);
        assert_eq!(v.pairs.len(), 4);
        assert_eq!(
            attach_act_generators(&t, &single, &[0], &[]).unwrap_err(),
            Error::IdentityNotInU
        );

        let m = z2();
        let rr = right_regular_act(&m);
        let v = attach_generator_set(&m, &rr, &[0], &[0, 1]);
        assert!(v.len() <= 2 + 2);
        let gens = attach_act_generators(&m, &rr, &[0], &[0, 1]).unwrap();
        let big = gens.monoid.clone();
        let (in_a, in_m) = project_attach_generators(&m, &rr, &v).unwrap();
        assert_eq!((in_a, in_m), (vec![0, 1], vec![0, 1]));

        let diag = diagonal_act(&big).unwrap();
        let all: Vec<MonoidElem> = big.elements().collect();
        let canon = canonical_presentation(&diag, &all).unwrap();
        let allm: Vec<MonoidElem> = m.elements().collect();
        let f = attach_act_factor_presentation(&m, &rr, &canon, &[0, 1], &allm).unwrap();
        let expected = coincidence_relations(&rr, &[0, 1], &allm).len();
        assert_eq!(f.coincidences.len(), expected);
        // x·u = y·v pairs: every (x, u) has exactly |X| partners here.
        assert_eq!(expected, 2 * 2 * 2);
    }
}
