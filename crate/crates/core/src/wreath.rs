//! Wreath products `A ≀ B` of an `M`-act `A` and an `N`-act `B`, acted on by
//! `W(M, N | A) = M × N^A` with `(m, θ)(n, φ) = (mn, θ·ᵐφ)`, `ᵐφ(a) = φ(am)`.
//!
//! A map `θ ∈ N^A` has index `Σ θ(a)|N|^a`; the monoid element `(m, θ)` has
//! index `m|N|^|A| + index(θ)`; the act element `(a, b)` has index `a|B| + b`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::act::{is_generating_set, validate_act, ActElem, FiniteAct};
use crate::error::{Error, Result};
use crate::limits::{check_size, saturating_pow, Limits};
use crate::monoid::{FiniteMonoid, MonoidElem};
use crate::presentation::{
    dedup_relations, ActPresentation, ActRelation, BoundPresentation, FreeActElem, GenLabel,
};

/// A map `θ: A -> N`, stored as `[θ(0), θ(1), ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NAMap(pub Vec<MonoidElem>);

impl NAMap {
    pub fn constant(n: MonoidElem, a_size: usize) -> Self {
        NAMap(vec![n; a_size])
    }

    /// Pointwise product `a(θφ) = (aθ)(aφ)`.
    pub fn product(&self, other: &NAMap, n: &FiniteMonoid) -> NAMap {
        NAMap(self.0.iter().zip(&other.0).map(|(&x, &y)| n.mul(x, y)).collect())
    }

    /// `ᵐφ` with `a(ᵐφ) = (am)φ`.
    pub fn shift(&self, m: MonoidElem, act: &FiniteAct) -> NAMap {
        NAMap((0..self.0.len()).map(|a| self.0[act.act(a, m)]).collect())
    }

    pub fn at(&self, a: ActElem) -> MonoidElem {
        self.0[a]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NAMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Index codec for `N^A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapSpace {
    pub n_order: usize,
    pub a_size: usize,
    pub count: usize,
}

impl MapSpace {
    pub fn new(n_order: usize, a_size: usize) -> Result<Self> {
        let count = saturating_pow(n_order, a_size);
        let cap = Limits::global().namap_cap;
        if count > cap {
            return Err(Error::SizeLimitExceeded {
                requested: count,
                cap,
            });
        }
        Ok(MapSpace {
            n_order,
            a_size,
            count,
        })
    }

    pub fn encode(&self, theta: &NAMap) -> usize {
        theta.0.iter().rev().fold(0, |acc, &x| acc * self.n_order + x)
    }

    pub fn decode(&self, mut i: usize) -> NAMap {
        let mut out = Vec::with_capacity(self.a_size);
        for _ in 0..self.a_size {
            out.push(i % self.n_order);
            i /= self.n_order;
        }
        NAMap(out)
    }

    pub fn all(&self) -> impl Iterator<Item = NAMap> + '_ {
        (0..self.count).map(|i| self.decode(i))
    }
}

/// `W(M, N | A)` with its codec.
#[derive(Debug, Clone)]
pub struct WreathMonoid {
    pub m: Arc<FiniteMonoid>,
    pub n: Arc<FiniteMonoid>,
    pub a: FiniteAct,
    pub maps: MapSpace,
    pub monoid: Arc<FiniteMonoid>,
}

impl WreathMonoid {
    pub fn encode(&self, m: MonoidElem, theta: &NAMap) -> MonoidElem {
        m * self.maps.count + self.maps.encode(theta)
    }

    pub fn decode(&self, w: MonoidElem) -> (MonoidElem, NAMap) {
        (w / self.maps.count, self.maps.decode(w % self.maps.count))
    }

    pub fn constant(&self, n: MonoidElem) -> NAMap {
        NAMap::constant(n, self.a.size())
    }
}

pub fn wreath_monoid(m: &Arc<FiniteMonoid>, n: &Arc<FiniteMonoid>, a: &FiniteAct) -> Result<WreathMonoid> {
    if a.base() != m.as_ref() {
        return Err(Error::BaseMismatch);
    }
    let maps = MapSpace::new(n.order(), a.size())?;
    let order = m.order().saturating_mul(maps.count);
    check_size(order)?;
    let decoded: Vec<NAMap> = maps.all().collect();
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (mx, tx) = (x / maps.count, &decoded[x % maps.count]);
        for y in 0..order {
            let (my, ty) = (y / maps.count, &decoded[y % maps.count]);
            table.push(m.mul(mx, my) * maps.count + maps.encode(&tx.product(&ty.shift(mx, a), n)));
        }
    }
    let identity = m.identity() * maps.count + maps.encode(&NAMap::constant(n.identity(), a.size()));
    let labels = (0..order)
        .map(|x| {
            let t = &decoded[x % maps.count];
            let vals: Vec<String> = t.0.iter().map(|&v| n.label(v)).collect();
            format!("({},[{}])", m.label(x / maps.count), vals.join(","))
        })
        .collect();
    let monoid = FiniteMonoid::from_flat(order, table, identity)
        .checked()?
        .with_labels(labels);
    Ok(WreathMonoid {
        m: m.clone(),
        n: n.clone(),
        a: a.clone(),
        maps,
        monoid: Arc::new(monoid),
    })
}

/// `A ≀ B` with `(a, b)(m, θ) = (am, b(aθ))`.
#[derive(Debug, Clone)]
pub struct WreathAct {
    pub w: WreathMonoid,
    pub b: FiniteAct,
    pub act: FiniteAct,
}

pub fn wreath_act(a: &FiniteAct, b: &FiniteAct) -> Result<WreathAct> {
    let w = wreath_monoid(a.base_arc(), b.base_arc(), a)?;
    let (p, q) = (a.size(), b.size());
    let size = p.saturating_mul(q);
    check_size(size)?;
    let rows: Vec<Vec<ActElem>> = (0..size)
        .map(|e| {
            let (x, y) = (e / q, e % q);
            w.monoid
                .elements()
                .map(|s| {
                    let (m, theta) = w.decode(s);
                    a.act(x, m) * q + b.act(y, theta.at(x))
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|e| format!("({},{})", a.label(e / q), b.label(e % q)))
        .collect();
    let act = validate_act(w.monoid.clone(), size, &rows)?.with_labels(labels);
    Ok(WreathAct {
        w,
        b: b.clone(),
        act,
    })
}

impl WreathAct {
    pub fn a(&self) -> &FiniteAct {
        &self.w.a
    }

    pub fn pair(&self, e: ActElem) -> (ActElem, ActElem) {
        (e / self.b.size(), e % self.b.size())
    }
}

/// `X × Y`; generator `i|Y| + j` is `(X[i], Y[j])`.
pub fn wreath_generating_set(wa: &WreathAct, x: &[ActElem], y: &[ActElem]) -> Result<Vec<ActElem>> {
    if !is_generating_set(wa.a(), x) {
        return Err(Error::NotGenerating("X does not generate A".into()));
    }
    if !is_generating_set(&wa.b, y) {
        return Err(Error::NotGenerating("Y does not generate B".into()));
    }
    let q = wa.b.size();
    let gens: Vec<ActElem> = x
        .iter()
        .flat_map(|&a| y.iter().map(move |&b| a * q + b))
        .collect();
    if !is_generating_set(&wa.act, &gens) {
        return Err(Error::NotGenerating("X x Y".into()));
    }
    Ok(gens)
}

/// Projections of a generating set of `A ≀ B` to `A` and `B`, each verified.
pub fn wreath_projections(wa: &WreathAct, u: &[ActElem]) -> Result<(Vec<ActElem>, Vec<ActElem>)> {
    if !is_generating_set(&wa.act, u) {
        return Err(Error::NotGenerating("U does not generate the wreath product".into()));
    }
    let mut xs: Vec<ActElem> = u.iter().map(|&e| wa.pair(e).0).collect();
    let mut ys: Vec<ActElem> = u.iter().map(|&e| wa.pair(e).1).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    if !is_generating_set(wa.a(), &xs) || !is_generating_set(&wa.b, &ys) {
        return Err(Error::NotGenerating("projections".into()));
    }
    Ok((xs, ys))
}

/// The wreath presentation with its relation blocks.
#[derive(Debug, Clone)]
pub struct WreathPresentation {
    pub x: Vec<ActElem>,
    pub y: Vec<ActElem>,
    pub t1: Vec<ActRelation>,
    pub t2: Vec<ActRelation>,
    pub t3: Vec<ActRelation>,
    pub bound: BoundPresentation,
}

fn wreath_bound(
    wa: &WreathAct,
    x: &[ActElem],
    y: &[ActElem],
    blocks: &[&[ActRelation]],
) -> Result<BoundPresentation> {
    let free_size = x.len() * y.len() * wa.w.monoid.order();
    check_size(free_size)?;
    let q = wa.b.size();
    let labels = x
        .iter()
        .flat_map(|&a| {
            y.iter().map(move |&b| {
                GenLabel::pair(GenLabel::Name(wa.a().label(a)), GenLabel::Name(wa.b.label(b)))
            })
        })
        .collect();
    let assign = x
        .iter()
        .flat_map(|&a| y.iter().map(move |&b| a * q + b))
        .collect();
    let relations = dedup_relations(blocks.iter().flat_map(|b| b.iter().copied()).collect());
    BoundPresentation {
        presentation: ActPresentation::new(labels, wa.w.monoid.clone(), relations)?,
        assign,
    }
    .verified(&wa.act)
}

/// `T₁` restricted to maps in `thetas`.
fn t1_block(wa: &WreathAct, x: &[ActElem], ny: usize, thetas: &[NAMap]) -> Vec<ActRelation> {
    let w = &wa.w;
    let one = w.m.identity();
    let mut out = Vec::new();
    for (i, &a) in x.iter().enumerate() {
        for j in 0..ny {
            let g = i * ny + j;
            for theta in thetas {
                out.push(ActRelation::new(
                    FreeActElem::new(g, w.encode(one, theta)),
                    FreeActElem::new(g, w.encode(one, &w.constant(theta.at(a)))),
                ));
            }
        }
    }
    out
}

/// `⟨X × Y | T₁, T₂, T₃⟩` from `⟨X | R⟩` for `A` and `⟨Y | S⟩` for `B`.
pub fn wreath_presentation(
    wa: &WreathAct,
    pa: &BoundPresentation,
    pb: &BoundPresentation,
) -> Result<WreathPresentation> {
    pa.clone().verified(wa.a())?;
    pb.clone().verified(&wa.b)?;
    let w = &wa.w;
    let (x, y) = (pa.assign.clone(), pb.assign.clone());
    let ny = y.len();
    let c1 = w.constant(w.n.identity());

    let all: Vec<NAMap> = w.maps.all().collect();
    let t1 = t1_block(wa, &x, ny, &all);
    let mut t2 = Vec::new();
    for r in pa.relations() {
        for j in 0..ny {
            t2.push(ActRelation::new(
                FreeActElem::new(r.lhs.gen * ny + j, w.encode(r.lhs.elem, &c1)),
                FreeActElem::new(r.rhs.gen * ny + j, w.encode(r.rhs.elem, &c1)),
            ));
        }
    }
    let one = w.m.identity();
    let mut t3 = Vec::new();
    for i in 0..x.len() {
        for r in pb.relations() {
            t3.push(ActRelation::new(
                FreeActElem::new(i * ny + r.lhs.gen, w.encode(one, &w.constant(r.lhs.elem))),
                FreeActElem::new(i * ny + r.rhs.gen, w.encode(one, &w.constant(r.rhs.elem))),
            ));
        }
    }
    let bound = wreath_bound(wa, &x, &y, &[&t1, &t2, &t3])?;
    Ok(WreathPresentation { x, y, t1, t2, t3, bound })
}

/// Presentations of `A` and `B` pushed down from a presentation of `A ≀ B`
/// on a generating set of the form `X × Y`.
pub fn wreath_factor_presentations(
    wa: &WreathAct,
    p: &BoundPresentation,
) -> Result<(BoundPresentation, BoundPresentation)> {
    p.clone().verified(&wa.act)?;
    let pairs: Vec<(ActElem, ActElem)> = p.assign.iter().map(|&e| wa.pair(e)).collect();
    let mut xs: Vec<ActElem> = pairs.iter().map(|p| p.0).collect();
    let mut ys: Vec<ActElem> = pairs.iter().map(|p| p.1).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let mut grid: Vec<(ActElem, ActElem)> = xs
        .iter()
        .flat_map(|&a| ys.iter().map(move |&b| (a, b)))
        .collect();
    let mut sorted = pairs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    grid.sort_unstable();
    if sorted != grid {
        return Err(Error::invalid("generators are not of the form X x Y"));
    }
    let xi = |a: ActElem| xs.binary_search(&a).unwrap();
    let yi = |b: ActElem| ys.binary_search(&b).unwrap();
    let w = &wa.w;
    let rho_x = |f: &FreeActElem| FreeActElem::new(xi(pairs[f.gen].0), w.decode(f.elem).0);
    let rho_y = |f: &FreeActElem| {
        let (a, b) = pairs[f.gen];
        FreeActElem::new(yi(b), w.decode(f.elem).1.at(a))
    };
    let rx = dedup_relations(
        p.relations()
            .iter()
            .map(|r| ActRelation::new(rho_x(&r.lhs), rho_x(&r.rhs)))
            .collect(),
    );
    let ry = dedup_relations(
        p.relations()
            .iter()
            .map(|r| ActRelation::new(rho_y(&r.lhs), rho_y(&r.rhs)))
            .collect(),
    );
    let pa = BoundPresentation {
        presentation: ActPresentation::new(
            xs.iter().map(|&a| GenLabel::Name(wa.a().label(a))).collect(),
            w.m.clone(),
            rx,
        )?,
        assign: xs.clone(),
    }
    .verified(wa.a())?;
    let pb = BoundPresentation {
        presentation: ActPresentation::new(
            ys.iter().map(|&b| GenLabel::Name(wa.b.label(b))).collect(),
            w.n.clone(),
            ry,
        )?,
        assign: ys.clone(),
    }
    .verified(&wa.b)?;
    Ok((pa, pb))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectMode {
    /// `σ = uψ`, moving to `c_{au}ψ`.
    FromU,
    /// `σ = c_{au}ψ`, moving to `uψ`.
    ToU,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectStep {
    pub mode: ConnectMode,
    pub u_index: usize,
    pub psi: NAMap,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectednessCertificate {
    pub steps: Vec<ConnectStep>,
}

impl ConnectednessCertificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the chain pointwise; `Err(i)` names the first failing step,
    /// `Err(len)` a wrong endpoint.
    pub fn replay(
        &self,
        n: &FiniteMonoid,
        u: &[NAMap],
        a: ActElem,
        theta: &NAMap,
        phi: &NAMap,
    ) -> std::result::Result<(), usize> {
        let mut current = theta.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let chosen = u.get(step.u_index).ok_or(i)?;
            if step.psi.len() != current.len() {
                return Err(i);
            }
            let constant = NAMap::constant(chosen.at(a), current.len());
            let (from, to) = match step.mode {
                ConnectMode::FromU => (chosen, &constant),
                ConnectMode::ToU => (&constant, chosen),
            };
            if from.product(&step.psi, n) != current {
                return Err(i);
            }
            current = to.product(&step.psi, n);
        }
        if &current == phi {
            Ok(())
        } else {
            Err(self.steps.len())
        }
    }
}

/// Shortest `(U, a)`-connecting chain from `theta` to `phi`, or `None`.
pub fn is_u_connected(
    n: &FiniteMonoid,
    maps: &MapSpace,
    u: &[NAMap],
    a: ActElem,
    theta: &NAMap,
    phi: &NAMap,
) -> Option<ConnectednessCertificate> {
    let start = maps.encode(theta);
    let goal = maps.encode(phi);
    let mut prev: Vec<Option<(usize, ConnectStep)>> = vec![None; maps.count];
    let mut seen = vec![false; maps.count];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            let mut steps = Vec::new();
            let mut at = cur;
            while at != start {
                let (from, step) = prev[at].clone().expect("BFS parent");
                steps.push(step);
                at = from;
            }
            steps.reverse();
            return Some(ConnectednessCertificate { steps });
        }
        let sigma = maps.decode(cur);
        for (ui, um) in u.iter().enumerate() {
            let constant = NAMap::constant(um.at(a), maps.a_size);
            for mode in [ConnectMode::FromU, ConnectMode::ToU] {
                let (from, to) = match mode {
                    ConnectMode::FromU => (um, &constant),
                    ConnectMode::ToU => (&constant, um),
                };
                // Per coordinate: ψ(b) with from(b)ψ(b) = σ(b), grouped by to(b)ψ(b).
                let mut options: Vec<Vec<(MonoidElem, MonoidElem)>> = Vec::with_capacity(maps.a_size);
                for b in 0..maps.a_size {
                    let mut opts: Vec<(MonoidElem, MonoidElem)> = Vec::new();
                    for p in n.elements() {
                        if n.mul(from.at(b), p) == sigma.at(b) {
                            let t = n.mul(to.at(b), p);
                            if !opts.iter().any(|&(v, _)| v == t) {
                                opts.push((t, p));
                            }
                        }
                    }
                    options.push(opts);
                }
                if options.iter().any(Vec::is_empty) {
                    continue;
                }
                let mut idx = vec![0usize; maps.a_size];
                loop {
                    let tau = NAMap(idx.iter().enumerate().map(|(b, &i)| options[b][i].0).collect());
                    let t = maps.encode(&tau);
                    if !seen[t] {
                        seen[t] = true;
                        let psi = NAMap(idx.iter().enumerate().map(|(b, &i)| options[b][i].1).collect());
                        prev[t] = Some((cur, ConnectStep { mode, u_index: ui, psi }));
                        queue.push_back(t);
                    }
                    let mut b = 0;
                    loop {
                        if b == maps.a_size {
                            break;
                        }
                        idx[b] += 1;
                        if idx[b] < options[b].len() {
                            break;
                        }
                        idx[b] = 0;
                        b += 1;
                    }
                    if b == maps.a_size {
                        break;
                    }
                }
            }
        }
    }
    None
}

/// Checks that every `θ` is `c_{xθ}` or `(U, x)`-connected to it, for all
/// `x ∈ X`; returns one certificate per non-constant case.
pub fn check_connectedness_hypothesis(
    w: &WreathMonoid,
    u: &[NAMap],
    x: &[ActElem],
) -> Result<Vec<(NAMap, ActElem, ConnectednessCertificate)>> {
    let mut certs = Vec::new();
    for theta in w.maps.all() {
        for &a in x {
            let target = w.constant(theta.at(a));
            if theta == target {
                continue;
            }
            match is_u_connected(&w.n, &w.maps, u, a, &theta, &target) {
                Some(c) => certs.push((theta.clone(), a, c)),
                None => {
                    return Err(Error::HypothesisFails {
                        theta: theta.0.clone(),
                        x: a,
                    })
                }
            }
        }
    }
    Ok(certs)
}

/// `⟨X × Y | T₁′, T₂, T₃⟩` where `T₁′` keeps only the maps in `U`.
pub fn reduce_t1(wa: &WreathAct, wp: &WreathPresentation, u: &[NAMap]) -> Result<WreathPresentation> {
    if u.iter().any(|t| t.len() != wa.a().size() || t.0.iter().any(|&v| v >= wa.w.n.order())) {
        return Err(Error::OutOfRange("map in U".into()));
    }
    check_connectedness_hypothesis(&wa.w, u, &wp.x)?;
    let t1 = t1_block(wa, &wp.x, wp.y.len(), u);
    let bound = wreath_bound(wa, &wp.x, &wp.y, &[&t1, &wp.t2, &wp.t3])?;
    Ok(WreathPresentation {
        x: wp.x.clone(),
        y: wp.y.clone(),
        t1,
        t2: wp.t2.clone(),
        t3: wp.t3.clone(),
        bound,
    })
}

/// `{φ_x : x ∈ X}` with `xφ_x = 1` and `aφ_x = z` elsewhere.
pub fn left_zero_u(w: &WreathMonoid, x: &[ActElem], z: MonoidElem) -> Result<Vec<NAMap>> {
    if z >= w.n.order() || !w.n.is_left_zero(z) {
        return Err(Error::NotLeftZero(z));
    }
    let one = w.n.identity();
    let u: Vec<NAMap> = x
        .iter()
        .map(|&g| NAMap((0..w.a.size()).map(|a| if a == g { one } else { z }).collect()))
        .collect();
    check_connectedness_hypothesis(w, &u, x)?;
    Ok(u)
}

/// `{θ(a, g) : a ∈ A, g ∈ Xn}` with `bθ(a, g) = g` if `b = a`, else `1`.
pub fn finite_a_fg_n_u(w: &WreathMonoid, x: &[ActElem], xn: &[MonoidElem]) -> Result<Vec<NAMap>> {
    if !w.n.generates(xn) {
        return Err(Error::NotMonoidGeneratingSet);
    }
    let one = w.n.identity();
    let mut u = Vec::new();
    for a in 0..w.a.size() {
        for &g in xn {
            let t = NAMap((0..w.a.size()).map(|b| if b == a { g } else { one }).collect());
            if !u.contains(&t) {
                u.push(t);
            }
        }
    }
    check_connectedness_hypothesis(w, &u, x)?;
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::act::right_regular_act;
    use crate::monoid::direct_product_monoid;
    use crate::presentation::canonical_presentation;

    fn arc(m: FiniteMonoid) -> Arc<FiniteMonoid> {
        Arc::new(m)
    }

    fn canon(act: &FiniteAct) -> BoundPresentation {
        let all: Vec<MonoidElem> = act.base().elements().collect();
        canonical_presentation(act, &all).unwrap()
    }

    #[test]
    fn map_primitives() {
        let z2 = FiniteMonoid::cyclic_group(2).unwrap();
        let theta = NAMap(vec![0, 1]);
        assert_eq!(theta.product(&NAMap::constant(0, 2), &z2), theta);
        assert_eq!(theta.product(&NAMap(vec![1, 1]), &z2), NAMap(vec![1, 0]));
        let rr = right_regular_act(&arc(z2));
        assert_eq!(theta.shift(0, &rr), theta);
        assert_eq!(theta.shift(1, &rr), NAMap(vec![1, 0]));
        let space = MapSpace::new(3, 2).unwrap();
        for i in 0..space.count {
            assert_eq!(space.encode(&space.decode(i)), i);
        }
    }

    #[test]
    fn wreath_monoid_shapes() {
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let rr = right_regular_act(&z2);
        assert_eq!(wreath_monoid(&z2, &z2, &rr).unwrap().monoid.order(), 8);
        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        wreath_monoid(&z2, &e2, &rr).unwrap().monoid.validate().unwrap();
        let one = FiniteAct::trivial(z2.clone(), 1).unwrap();
        let w = wreath_monoid(&z2, &e2, &one).unwrap();
        assert_eq!(*w.monoid, direct_product_monoid(&z2, &e2).unwrap());
    }

    #[test]
    fn wreath_act_and_generators() {
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        let (a, b) = (right_regular_act(&z2), right_regular_act(&e2));
        let wa = wreath_act(&a, &b).unwrap();
        assert_eq!(wa.act.size(), 4);
        let s = wa.w.encode(0, &wa.w.constant(1));
        assert_eq!(wa.act.act(0, s), 1);
        assert_eq!(wreath_generating_set(&wa, &[0], &[0]).unwrap(), vec![0]);
        assert!(wreath_generating_set(&wa, &[0], &[1]).is_err());
        assert_eq!(wreath_projections(&wa, &[0]).unwrap(), (vec![0], vec![0]));
    }

    #[test]
    fn presentations() {
        let t = arc(FiniteMonoid::trivial());
        let one = FiniteAct::trivial(t.clone(), 1).unwrap();
        let wa = wreath_act(&one, &one).unwrap();
        let p = wreath_presentation(&wa, &canon(&one), &canon(&one)).unwrap();
        assert_eq!(p.bound.assign.len(), 1);

        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        let (a, b) = (right_regular_act(&z2), right_regular_act(&e2));
        let wa = wreath_act(&a, &b).unwrap();
        let p = wreath_presentation(&wa, &canon(&a), &canon(&b)).unwrap();
        assert_eq!(p.t1.len(), 2 * 2 * 4);
        let (fa, fb) = wreath_factor_presentations(&wa, &p.bound).unwrap();
        assert!(fa.relations().len() <= p.bound.relations().len());
        assert_eq!((fa.assign.len(), fb.assign.len()), (2, 2));
    }

    #[test]
    fn connectedness() {
        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let a = right_regular_act(&z2);
        let w = wreath_monoid(&z2, &e2, &a).unwrap();
        let theta = NAMap(vec![0, 1]);
        assert_eq!(
            is_u_connected(&e2, &w.maps, &[], 0, &theta, &theta),
            Some(ConnectednessCertificate::default())
        );
        assert_eq!(is_u_connected(&e2, &w.maps, &[], 0, &theta, &NAMap(vec![0, 0])), None);

        let u = left_zero_u(&w, &[0], 1).unwrap();
        assert_eq!(u, vec![NAMap(vec![0, 1])]);
        let target = NAMap::constant(theta.at(0), 2);
        let manual = ConnectednessCertificate {
            steps: vec![
                ConnectStep { mode: ConnectMode::ToU, u_index: 0, psi: theta.clone() },
                ConnectStep { mode: ConnectMode::FromU, u_index: 0, psi: target.clone() },
            ],
        };
        manual.replay(&e2, &u, 0, &theta, &target).unwrap();
        let found = is_u_connected(&e2, &w.maps, &u, 0, &theta, &target).unwrap();
        found.replay(&e2, &u, 0, &theta, &target).unwrap();
        assert!(found.len() <= 2);
        assert_eq!(left_zero_u(&w, &[0], 0).unwrap_err(), Error::NotLeftZero(0));
    }

    #[test]
    fn reductions() {
        let z2 = arc(FiniteMonoid::cyclic_group(2).unwrap());
        let e2 = arc(FiniteMonoid::semilattice_chain(2).unwrap());
        let (a, b) = (right_regular_act(&z2), right_regular_act(&e2));
        let wa = wreath_act(&a, &b).unwrap();
        let p = wreath_presentation(&wa, &canon(&a), &canon(&b)).unwrap();
        let u = left_zero_u(&wa.w, &p.x, 1).unwrap();
        let r = reduce_t1(&wa, &p, &u).unwrap();
        assert_eq!(r.t1.len(), p.x.len() * p.y.len() * u.len());
        assert!(r.t1.len() < p.t1.len());
        assert!(matches!(reduce_t1(&wa, &p, &[]), Err(Error::HypothesisFails { .. })));

        let z3 = arc(FiniteMonoid::cyclic_group(3).unwrap());
        let b3 = right_regular_act(&z3);
        let wa = wreath_act(&a, &b3).unwrap();
        let u = finite_a_fg_n_u(&wa.w, &[0, 1], &[1]).unwrap();
        assert_eq!(u.len(), 2);
        let p = wreath_presentation(&wa, &canon(&a), &canon(&b3)).unwrap();
        reduce_t1(&wa, &p, &u).unwrap();
    }
}
