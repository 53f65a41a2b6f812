//! Finite right acts over a [`FiniteMonoid`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::check_size;
use crate::monoid::{FiniteMonoid, MonoidElem};

pub type ActElem = usize;

#[derive(Clone)]
pub struct FiniteAct {
    base: Arc<FiniteMonoid>,
    size: usize,
    action: Vec<ActElem>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteAct {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.action == other.action && self.base == other.base
    }
}

impl Eq for FiniteAct {}

impl fmt::Debug for FiniteAct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAct")
            .field("size", &self.size)
            .field("monoid_order", &self.base.order())
            .finish_non_exhaustive()
    }
}

/// Checks `a1 = a` and `a(mn) = (am)n` and builds the act.
pub fn validate_act(
    base: Arc<FiniteMonoid>,
    size: usize,
    action: &[Vec<ActElem>],
) -> Result<FiniteAct> {
    if size == 0 {
        return Err(Error::OutOfRange("acts are non-empty".into()));
    }
    check_size(size)?;
    let k = base.order();
    if action.len() != size || action.iter().any(|row| row.len() != k) {
        return Err(Error::OutOfRange(format!("action must be {size}x{k}")));
    }
    if action.iter().flatten().any(|&v| v >= size) {
        return Err(Error::OutOfRange("action entry".into()));
    }
    let act = FiniteAct {
        base,
        size,
        action: action.iter().flatten().copied().collect(),
        labels: None,
    };
    act.validate()?;
    Ok(act)
}

impl FiniteAct {
    pub(crate) fn from_flat(base: Arc<FiniteMonoid>, size: usize, action: Vec<ActElem>) -> Self {
        debug_assert_eq!(action.len(), size * base.order());
        FiniteAct {
            base,
            size,
            action,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size, "one label per element");
        self.labels = Some(labels);
        self
    }

    /// `k` points, every element of the monoid acting as the identity.
    pub fn trivial(base: Arc<FiniteMonoid>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("acts are non-empty".into()));
        }
        check_size(k)?;
        let order = base.order();
        let action = (0..k).flat_map(|a| std::iter::repeat_n(a, order)).collect();
        Ok(FiniteAct::from_flat(base, k, action))
    }

    pub fn validate(&self) -> Result<()> {
        let m = &*self.base;
        for a in 0..self.size {
            if self.act(a, m.identity()) != a {
                return Err(Error::IdentityLawFails(a));
            }
        }
        for a in 0..self.size {
            for x in m.elements() {
                let ax = self.act(a, x);
                for y in m.elements() {
                    if self.act(a, m.mul(x, y)) != self.act(ax, y) {
                        return Err(Error::AssociativityFails(a, x, y));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<FiniteMonoid> {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, a: ActElem, m: MonoidElem) -> ActElem {
        self.action[a * self.base.order() + m]
    }

    pub fn rows(&self) -> Vec<Vec<ActElem>> {
        self.action.chunks(self.base.order()).map(<[_]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: ActElem) -> String {
        match &self.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn same_base(&self, other: &FiniteAct) -> bool {
        Arc::ptr_eq(&self.base, &other.base) || self.base == other.base
    }

    /// The cyclic subact `aM`, ascending.
    pub fn orbit(&self, a: ActElem) -> Vec<ActElem> {
        let mut seen = vec![false; self.size];
        for m in self.base.elements() {
            seen[self.act(a, m)] = true;
        }
        (0..self.size).filter(|&b| seen[b]).collect()
    }

    /// Elements reachable from `gens`, as a membership vector.
    pub fn reach(&self, gens: &[ActElem]) -> Vec<bool> {
        let mut seen = vec![false; self.size];
        for &g in gens {
            for m in self.base.elements() {
                seen[self.act(g, m)] = true;
            }
        }
        seen
    }

    /// The top classes of the preorder `a <= b iff a ∈ bM`: classes of
    /// mutually reachable elements that are not reachable from outside.
    /// Each class is ascending; classes are ordered by their least element.
    pub fn top_classes(&self) -> Vec<Vec<ActElem>> {
        let orbits: Vec<Vec<bool>> = (0..self.size)
            .map(|a| {
                let mut row = vec![false; self.size];
                for b in self.orbit(a) {
                    row[b] = true;
                }
                row
            })
            .collect();
        let mut assigned = vec![false; self.size];
        let mut classes = Vec::new();
        for a in 0..self.size {
            if assigned[a] {
                continue;
            }
            let class: Vec<ActElem> = (0..self.size)
                .filter(|&b| orbits[a][b] && orbits[b][a])
                .collect();
            for &b in &class {
                assigned[b] = true;
            }
            let is_top = (0..self.size).all(|c| !orbits[c][a] || orbits[a][c]);
            if is_top {
                classes.push(class);
            }
        }
        classes
    }
}

/// `M` acting on itself by right multiplication.
pub fn right_regular_act(m: &Arc<FiniteMonoid>) -> FiniteAct {
    let k = m.order();
    let action = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).map(|(a, b)| m.mul(a, b)).collect();
    let labels = (0..k).map(|i| m.label(i)).collect();
    FiniteAct::from_flat(m.clone(), k, action).with_labels(labels)
}

/// The free act `X × M` with `(x, m)n = (x, mn)`; `(x, m)` has index `x|M| + m`.
#[derive(Clone, Debug)]
pub struct FreeAct {
    generators: usize,
    act: FiniteAct,
}

impl FreeAct {
    pub fn new(generators: usize, m: &Arc<FiniteMonoid>) -> Result<Self> {
        if generators == 0 {
            return Err(Error::invalid("free acts need at least one generator"));
        }
        let k = m.order();
        let size = generators.saturating_mul(k);
        check_size(size)?;
        let mut action = Vec::with_capacity(size * k);
        for x in 0..generators {
            for a in 0..k {
                for b in 0..k {
                    action.push(x * k + m.mul(a, b));
                }
            }
        }
        let labels = (0..size)
            .map(|i| format!("x{}.{}", i / k, m.label(i % k)))
            .collect();
        Ok(FreeAct {
            generators,
            act: FiniteAct::from_flat(m.clone(), size, action).with_labels(labels),
        })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn act(&self) -> &FiniteAct {
        &self.act
    }

    pub fn into_act(self) -> FiniteAct {
        self.act
    }

    #[inline]
    pub fn encode(&self, x: usize, m: MonoidElem) -> ActElem {
        x * self.act.base().order() + m
    }

    #[inline]
    pub fn decode(&self, a: ActElem) -> (usize, MonoidElem) {
        let k = self.act.base().order();
        (a / k, a % k)
    }

    pub fn basis(&self) -> Vec<ActElem> {
        let id = self.act.base().identity();
        (0..self.generators).map(|x| self.encode(x, id)).collect()
    }
}

pub fn free_act(generators: usize, m: &Arc<FiniteMonoid>) -> Result<FreeAct> {
    FreeAct::new(generators, m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub elems: Vec<ActElem>,
    /// False when the set is only known to generate, not to be minimum.
    pub optimal: bool,
}

/// True iff `⋃ uM = A`.
pub fn is_generating_set(act: &FiniteAct, gens: &[ActElem]) -> bool {
    gens.iter().all(|&g| g < act.size()) && act.reach(gens).into_iter().all(|b| b)
}

/// A generating set of minimum size, lexicographically least among those.
///
/// Every generating set meets each top class of the reachability preorder,
/// and one element per top class generates, so picking the least element of
/// each top class is exact.
pub fn minimal_generating_set(act: &FiniteAct) -> GeneratingSet {
    let mut elems: Vec<ActElem> = act.top_classes().iter().map(|c| c[0]).collect();
    elems.sort_unstable();
    GeneratingSet {
        elems,
        optimal: true,
    }
}

/// Componentwise action on `A × B`; `(a, b)` has index `a|B| + b`.
pub fn direct_product_act(a: &FiniteAct, b: &FiniteAct) -> Result<FiniteAct> {
    if !a.same_base(b) {
        return Err(Error::BaseMismatch);
    }
    let (p, q) = (a.size(), b.size());
    let size = p.saturating_mul(q);
    check_size(size)?;
    let k = a.base().order();
    let mut action = Vec::with_capacity(size * k);
    for x in 0..p {
        for y in 0..q {
            for m in 0..k {
                action.push(a.act(x, m) * q + b.act(y, m));
            }
        }
    }
    let labels = (0..size)
        .map(|i| format!("({},{})", a.label(i / q), b.label(i % q)))
        .collect();
    Ok(FiniteAct::from_flat(a.base_arc().clone(), size, action).with_labels(labels))
}

fn orbit_size_profile(act: &FiniteAct) -> Vec<usize> {
    let mut sizes: Vec<usize> = (0..act.size()).map(|a| act.orbit(a).len()).collect();
    sizes.sort_unstable();
    sizes
}

/// An `M`-isomorphism `A -> B` as a table, or `None`.
pub fn act_isomorphic(a: &FiniteAct, b: &FiniteAct) -> Result<Option<Vec<ActElem>>> {
    if !a.same_base(b) {
        return Err(Error::BaseMismatch);
    }
    if a.size() != b.size() || orbit_size_profile(a) != orbit_size_profile(b) {
        return Ok(None);
    }
    let gens = minimal_generating_set(a).elems;
    let b_orbit_sizes: Vec<usize> = (0..b.size()).map(|y| b.orbit(y).len()).collect();
    let mut phi = vec![usize::MAX; a.size()];
    let mut used = vec![false; b.size()];
    if extend_iso(a, b, &gens, 0, &b_orbit_sizes, &mut phi, &mut used) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

fn extend_iso(
    a: &FiniteAct,
    b: &FiniteAct,
    gens: &[ActElem],
    depth: usize,
    b_orbit_sizes: &[usize],
    phi: &mut Vec<ActElem>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(&g) = gens.get(depth) else {
        return phi.iter().all(|&v| v != usize::MAX);
    };
    let g_orbit = a.orbit(g).len();
    for target in 0..b.size() {
        if b_orbit_sizes[target] != g_orbit {
            continue;
        }
        // Assign phi(g m) = target m for all m, undoing on conflict.
        let mut assigned = Vec::new();
        let mut ok = true;
        for m in a.base().elements() {
            let (x, y) = (a.act(g, m), b.act(target, m));
            if phi[x] == usize::MAX {
                if used[y] {
                    ok = false;
                    break;
                }
                phi[x] = y;
                used[y] = true;
                assigned.push(x);
            } else if phi[x] != y {
                ok = false;
                break;
            }
        }
        if ok && extend_iso(a, b, gens, depth + 1, b_orbit_sizes, phi, used) {
            return true;
        }
        for x in assigned {
            used[phi[x]] = false;
            phi[x] = usize::MAX;
        }
    }
    false
}

/// A basis (every element is `um` for exactly one pair), or `None`.
///
/// A basis must consist of one element from each top class, and in a free
/// act any such choice works, so only the least elements are tested.
pub fn is_free(act: &FiniteAct) -> Option<Vec<ActElem>> {
    let basis = minimal_generating_set(act).elems;
    let mut count = vec![0usize; act.size()];
    for &u in &basis {
        for m in act.base().elements() {
            count[act.act(u, m)] += 1;
        }
    }
    count.iter().all(|&c| c == 1).then_some(basis)
}
