//! Finite monoids stored as multiplication tables.
//!
//! Elements are positional indices. `mul(a, b)` is the product `ab`, and all
//! transformation monoids compose left-to-right (`fg` applies `f` first), so
//! that right actions satisfy `a(mn) = (am)n`.

use std::fmt;

use crate::act::FiniteAct;
use crate::error::{Error, Result};
use crate::limits::check_size;

pub type MonoidElem = usize;

/// Constructions re-check associativity only below this many triples.
const VALIDATION_BUDGET: usize = 1 << 24;

#[derive(Clone)]
pub struct FiniteMonoid {
    order: usize,
    table: Vec<MonoidElem>,
    identity: MonoidElem,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.table == other.table
    }
}

impl Eq for FiniteMonoid {}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

/// Checks both monoid axioms and builds the monoid.
pub fn validate_monoid(
    order: usize,
    table: &[Vec<MonoidElem>],
    identity: MonoidElem,
) -> Result<FiniteMonoid> {
    if order == 0 {
        return Err(Error::OutOfRange("monoid order must be positive".into()));
    }
    check_size(order)?;
    if table.len() != order || table.iter().any(|row| row.len() != order) {
        return Err(Error::OutOfRange(format!(
            "table must be {order}x{order}"
        )));
    }
    if identity >= order {
        return Err(Error::OutOfRange(format!("identity {identity} >= {order}")));
    }
    if let Some((r, c)) = table
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)))
        .find(|&(_, _, v)| v >= order)
        .map(|(r, c, _)| (r, c))
    {
        return Err(Error::OutOfRange(format!("table[{r}][{c}]")));
    }
    let monoid = FiniteMonoid {
        order,
        table: table.iter().flatten().copied().collect(),
        identity,
        labels: None,
    };
    monoid.check_identity()?;
    monoid.check_associative()?;
    Ok(monoid)
}

impl FiniteMonoid {
    pub(crate) fn from_flat(order: usize, table: Vec<MonoidElem>, identity: MonoidElem) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteMonoid {
            order,
            table,
            identity,
            labels: None,
        }
    }

    /// Re-validates a constructed table when doing so is cheap.
    pub(crate) fn checked(self) -> Result<Self> {
        self.check_identity()?;
        if self.order.saturating_pow(3) <= VALIDATION_BUDGET {
            self.check_associative()?;
        }
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> MonoidElem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: MonoidElem, b: MonoidElem) -> MonoidElem {
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<MonoidElem> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<MonoidElem>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, m: MonoidElem) -> String {
        match &self.labels {
            Some(labels) => labels[m].clone(),
            None => m.to_string(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.check_identity()?;
        self.check_associative()
    }

    fn check_identity(&self) -> Result<()> {
        let e = self.identity;
        match (0..self.order).find(|&a| self.mul(e, a) != a || self.mul(a, e) != a) {
            Some(a) => Err(Error::BadIdentity(a)),
            None => Ok(()),
        }
    }

    fn check_associative(&self) -> Result<()> {
        for a in 0..self.order {
            for b in 0..self.order {
                let ab = self.mul(a, b);
                for c in 0..self.order {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// The submonoid generated by `gens` (always contains the identity).
    pub fn submonoid_closure(&self, gens: &[MonoidElem]) -> Vec<MonoidElem> {
        let mut seen = vec![false; self.order];
        let mut stack = vec![self.identity];
        seen[self.identity] = true;
        while let Some(m) = stack.pop() {
            for &g in gens {
                let p = self.mul(m, g);
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        (0..self.order).filter(|&m| seen[m]).collect()
    }

    pub fn generates(&self, gens: &[MonoidElem]) -> bool {
        gens.iter().all(|&g| g < self.order) && self.submonoid_closure(gens).len() == self.order
    }

    /// A monoid generating set: elements in index order, each kept unless
    /// already generated by the ones before it.
    pub fn greedy_generators(&self) -> Vec<MonoidElem> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order];
        reached[self.identity] = true;
        for m in 0..self.order {
            if !reached[m] {
                gens.push(m);
                for e in self.submonoid_closure(&gens) {
                    reached[e] = true;
                }
            }
        }
        gens
    }

    pub fn left_zeros(&self) -> Vec<MonoidElem> {
        (0..self.order).filter(|&z| self.is_left_zero(z)).collect()
    }

    pub fn is_left_zero(&self, z: MonoidElem) -> bool {
        (0..self.order).all(|n| self.mul(z, n) == z)
    }

    pub fn is_submonoid(&self, elems: &[MonoidElem]) -> bool {
        let mut member = vec![false; self.order];
        for &e in elems {
            if e >= self.order {
                return false;
            }
            member[e] = true;
        }
        member[self.identity]
            && elems
                .iter()
                .all(|&a| elems.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Two-sided ideal test by table scan.
    pub fn is_ideal(&self, elems: &[MonoidElem]) -> bool {
        let mut member = vec![false; self.order];
        for &e in elems {
            if e >= self.order {
                return false;
            }
            member[e] = true;
        }
        elems
            .iter()
            .all(|&i| (0..self.order).all(|m| member[self.mul(i, m)] && member[self.mul(m, i)]))
    }

    /// Restricts the table to a submonoid, re-indexed in ascending order.
    /// Returns the submonoid and the embedding (new index -> old index).
    pub fn submonoid(&self, elems: &[MonoidElem]) -> Result<(FiniteMonoid, Vec<MonoidElem>)> {
        let mut embed: Vec<MonoidElem> = elems.to_vec();
        embed.sort_unstable();
        embed.dedup();
        if !self.is_submonoid(&embed) {
            return Err(Error::NotSubmonoid);
        }
        let mut index = vec![usize::MAX; self.order];
        for (i, &e) in embed.iter().enumerate() {
            index[e] = i;
        }
        let k = embed.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &embed {
            for &b in &embed {
                table.push(index[self.mul(a, b)]);
            }
        }
        let mut sub = FiniteMonoid::from_flat(k, table, index[self.identity]);
        if let Some(labels) = &self.labels {
            sub.labels = Some(embed.iter().map(|&e| labels[e].clone()).collect());
        }
        Ok((sub, embed))
    }

    pub fn trivial() -> Self {
        FiniteMonoid::from_flat(1, vec![0], 0).with_labels(vec!["1".into()])
    }

    /// The cyclic group of order `n`; element `i` is `g^i`.
    pub fn cyclic_group(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cyclic group order must be positive"));
        }
        check_size(n)?;
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Ok(FiniteMonoid::from_flat(n, table, 0).with_labels(labels))
    }

    /// The chain semilattice `1 > e_1 > ... > e_{n-1}` under meet; `n = 2`
    /// gives the two-element semilattice `{1, z}`.
    pub fn semilattice_chain(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("chain length must be positive"));
        }
        check_size(n)?;
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| a.max(b)))
            .collect();
        let labels = (0..n)
            .map(|i| match (i, n) {
                (0, _) => "1".to_string(),
                (1, 2) => "z".to_string(),
                _ => format!("e{i}"),
            })
            .collect();
        Ok(FiniteMonoid::from_flat(n, table, 0).with_labels(labels))
    }

    /// `k` left zeros `l_i` (`l_i x = l_i`) with an identity adjoined.
    pub fn left_zero_band(k: usize) -> Result<Self> {
        check_size(k + 1)?;
        let n = k + 1;
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| if a == 0 { b } else { a }))
            .collect();
        let labels = (0..n)
            .map(|i| if i == 0 { "1".to_string() } else { format!("l{i}") })
            .collect();
        Ok(FiniteMonoid::from_flat(n, table, 0).with_labels(labels))
    }

    /// The symmetric group on `n` points, permutations listed lexicographically.
    pub fn symmetric_group(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX);
        check_size(order)?;
        let perms = permutations(n);
        transformation_table(n, perms)
    }
}

/// Componentwise product; `(i, j)` has index `i * |N| + j`.
pub fn direct_product_monoid(m: &FiniteMonoid, n: &FiniteMonoid) -> Result<FiniteMonoid> {
    let (p, q) = (m.order(), n.order());
    check_size(p.saturating_mul(q))?;
    let mut table = Vec::with_capacity(p * q * p * q);
    for a in 0..p * q {
        let (a1, a2) = (a / q, a % q);
        for b in 0..p * q {
            let (b1, b2) = (b / q, b % q);
            table.push(m.mul(a1, b1) * q + n.mul(a2, b2));
        }
    }
    let labels = (0..p * q)
        .map(|i| format!("({},{})", m.label(i / q), n.label(i % q)))
        .collect();
    FiniteMonoid::from_flat(p * q, table, m.identity() * q + n.identity())
        .with_labels(labels)
        .checked()
}

/// `M^0`: a new absorbing zero with index `|M|`.
pub fn adjoin_zero(m: &FiniteMonoid) -> FiniteMonoid {
    let k = m.order();
    let zero = k;
    let mut table = Vec::with_capacity((k + 1) * (k + 1));
    for a in 0..=k {
        for b in 0..=k {
            table.push(if a == zero || b == zero { zero } else { m.mul(a, b) });
        }
    }
    let mut labels: Vec<String> = (0..k).map(|i| m.label(i)).collect();
    labels.push("0".into());
    FiniteMonoid::from_flat(k + 1, table, m.identity()).with_labels(labels)
}

/// The monoid on `M ∪ A`: products in `M` are kept, `a∘m` is the action,
/// and `x∘a = a` for every `a ∈ A`. Element `a` of the act has index `|M| + a`.
pub fn attach_act_monoid(m: &FiniteMonoid, act: &FiniteAct) -> Result<FiniteMonoid> {
    if act.base() != m {
        return Err(Error::BaseMismatch);
    }
    let (k, s) = (m.order(), act.size());
    check_size(k + s)?;
    let mut table = Vec::with_capacity((k + s) * (k + s));
    for x in 0..k + s {
        for y in 0..k + s {
            let v = if y >= k {
                y
            } else if x >= k {
                k + act.act(x - k, y)
            } else {
                m.mul(x, y)
            };
            table.push(v);
        }
    }
    let labels = (0..k)
        .map(|i| m.label(i))
        .chain((0..s).map(|a| format!("[{}]", act.label(a))))
        .collect();
    FiniteMonoid::from_flat(k + s, table, m.identity())
        .with_labels(labels)
        .checked()
}

/// All maps `{0..n-1} -> {0..n-1}` in lexicographic order of their image
/// sequences, composed left-to-right.
pub fn full_transformation_monoid(n: usize) -> Result<FiniteMonoid> {
    if n == 0 {
        return Err(Error::invalid("degree must be positive"));
    }
    let order = crate::limits::saturating_pow(n, n);
    check_size(order)?;
    let maps: Vec<Vec<usize>> = (0..order)
        .map(|mut idx| {
            let mut f = vec![0; n];
            for slot in f.iter_mut().rev() {
                *slot = idx % n;
                idx /= n;
            }
            f
        })
        .collect();
    transformation_table(n, maps)
}

fn transformation_table(n: usize, maps: Vec<Vec<usize>>) -> Result<FiniteMonoid> {
    let index: std::collections::HashMap<&[usize], usize> = maps
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let identity_map: Vec<usize> = (0..n).collect();
    let identity = index[identity_map.as_slice()];
    let k = maps.len();
    let mut table = Vec::with_capacity(k * k);
    let mut scratch = vec![0; n];
    for f in &maps {
        for g in &maps {
            for (slot, &fi) in scratch.iter_mut().zip(f) {
                *slot = g[fi];
            }
            table.push(index[scratch.as_slice()]);
        }
    }
    let labels = maps
        .iter()
        .map(|f| {
            let parts: Vec<String> = f.iter().map(usize::to_string).collect();
            format!("[{}]", parts.join(""))
        })
        .collect();
    FiniteMonoid::from_flat(k, table, identity)
        .with_labels(labels)
        .checked()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_rows() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    #[test]
    fn trivial_and_z2_validate() {
        assert!(validate_monoid(1, &[vec![0]], 0).is_ok());
        assert!(validate_monoid(2, &z2_rows(), 0).is_ok());
    }

    #[test]
    fn bad_identity_is_reported() {
        let rows = vec![vec![0, 1], vec![0, 0]];
        assert_eq!(validate_monoid(2, &rows, 0), Err(Error::BadIdentity(1)));
    }

    #[test]
    fn non_associative_table_gives_witness() {
        // identity 0; 1*1 = 2, 1*2 = 1, 2*1 = 2, 2*2 = 2
        let rows = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]];
        match validate_monoid(3, &rows, 0) {
            Err(Error::NotAssociative(a, b, c)) => {
                let m = |x: usize, y: usize| rows[x][y];
                assert_ne!(m(m(a, b), c), m(a, m(b, c)));
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_entries() {
        assert!(matches!(
            validate_monoid(2, &[vec![0, 1], vec![1, 2]], 0),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            validate_monoid(2, &[vec![0, 1]], 0),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn generators_and_left_zeros() {
        let z3 = FiniteMonoid::cyclic_group(3).unwrap();
        assert_eq!(z3.greedy_generators(), vec![1]);
        let e2 = FiniteMonoid::semilattice_chain(2).unwrap();
        assert_eq!(e2.left_zeros(), vec![1]);
        let l2 = FiniteMonoid::left_zero_band(2).unwrap();
        l2.validate().unwrap();
        assert_eq!(l2.left_zeros(), vec![1, 2]);
        assert_eq!(FiniteMonoid::trivial().greedy_generators(), Vec::<usize>::new());
        let s3 = FiniteMonoid::symmetric_group(3).unwrap();
        assert!(s3.generates(&s3.greedy_generators()));
    }

    #[test]
    fn products_and_zero() {
        let t = FiniteMonoid::trivial();
        assert_eq!(direct_product_monoid(&t, &t).unwrap().order(), 1);

        let z2 = FiniteMonoid::cyclic_group(2).unwrap();
        let e2 = FiniteMonoid::semilattice_chain(2).unwrap();
        let zz = direct_product_monoid(&z2, &z2).unwrap();
        assert_eq!(zz.order(), 4);
        zz.validate().unwrap();

        let ez = direct_product_monoid(&e2, &z2).unwrap();
        assert_eq!(ez.order(), 4);
        assert_eq!(ez.identity(), 0);
        ez.validate().unwrap();

        let t0 = adjoin_zero(&t);
        assert_eq!(t0.order(), 2);
        assert_eq!(t0.mul(0, 1), 1);
        assert_eq!(t0.mul(1, 0), 1);

        let z20 = adjoin_zero(&z2);
        z20.validate().unwrap();
        assert_eq!(z20.order(), 3);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(z20.mul(a, b), z2.mul(a, b));
            }
        }

        // (M^0)^0: the outer zero absorbs the inner one.
        let z200 = adjoin_zero(&z20);
        z200.validate().unwrap();
        assert_eq!(z200.mul(2, 3), 3);
        assert_eq!(z200.mul(3, 2), 3);
        assert_eq!(z200.mul(2, 0), 2);
    }

    #[test]
    fn transformation_monoids() {
        assert_eq!(full_transformation_monoid(1).unwrap().order(), 1);
        let t2 = full_transformation_monoid(2).unwrap();
        assert_eq!(t2.order(), 4);
        let t3 = full_transformation_monoid(3).unwrap();
        assert_eq!(t3.order(), 27);
        t3.validate().unwrap();

        // Constants: kappa_i f = kappa_{f(i)} and f kappa_i = kappa_i.
        let n = 3;
        let decode = |idx: usize| -> Vec<usize> {
            let mut f = vec![0; n];
            let mut x = idx;
            for slot in f.iter_mut().rev() {
                *slot = x % n;
                x /= n;
            }
            f
        };
        let encode = |f: &[usize]| f.iter().fold(0, |acc, &v| acc * n + v);
        for i in 0..n {
            let kappa = encode(&vec![i; n]);
            for f in 0..t3.order() {
                let fi = decode(f)[i];
                assert_eq!(t3.mul(kappa, f), encode(&vec![fi; n]));
                assert_eq!(t3.mul(f, kappa), kappa);
            }
        }
    }

    #[test]
    fn symmetric_group_s3() {
        let s3 = FiniteMonoid::symmetric_group(3).unwrap();
        assert_eq!(s3.order(), 6);
        s3.validate().unwrap();
        for a in s3.elements() {
            assert!(s3.elements().any(|b| s3.mul(a, b) == s3.identity()));
        }
    }

    #[test]
    fn submonoid_and_ideals() {
        let e2 = FiniteMonoid::semilattice_chain(2).unwrap();
        assert!(e2.is_submonoid(&[0]));
        assert!(e2.is_ideal(&[1]));
        let (sub, embed) = e2.submonoid(&[0]).unwrap();
        assert_eq!(sub.order(), 1);
        assert_eq!(embed, vec![0]);
        let z2 = FiniteMonoid::cyclic_group(2).unwrap();
        assert!(z2.generates(&[1]));
        assert!(!z2.generates(&[]));
        assert!(e2.is_left_zero(1));
        assert!(!e2.is_left_zero(0));
    }

    #[test]
    fn size_cap_is_enforced() {
        assert!(matches!(
            full_transformation_monoid(6),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
