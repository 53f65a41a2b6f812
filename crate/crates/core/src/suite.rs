//! The acceptance suite: eleven property checks over the small family, each
//! with a time bound. Every check counts its instances and collects failure
//! descriptions; a criterion passes when nothing failed within its bound.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::act::{direct_product_act, is_generating_set, minimal_generating_set, right_regular_act, ActElem, FiniteAct};
use crate::congruence::{congruence_closure, connect_sequence, ActCongruence};
use crate::diagonal::{
    attach_act_factor_presentation, attach_act_generators, attach_generator_set, diagonal_act,
    diagonal_generates, pair_index, product_diagonal_factor_presentation,
    product_diagonal_generators, product_diagonal_presentation, project_attach_generators,
    project_diagonal_generators, rectangular_generating_set, restrict_presentation_to_submonoid,
    square_generating_set, zero_extension_generators, zero_extension_presentation, Factor,
};
use crate::error::Result;
use crate::limits::Limits;
use crate::family::{extended_monoids, monoid_by_name, small_acts, small_monoids, NamedAct, NamedMonoid};
use crate::monoid::{attach_act_monoid, direct_product_monoid, FiniteMonoid, MonoidElem};
use crate::presentation::{
    canonical_presentation, is_consequence, is_irredundant, kernel_presentation,
    reduce_presentation, BoundPresentation, FreeActElem,
};
use crate::product::{
    crucial_identity_check, diagonal_pairs, dp_generating_set, dp_presentation,
    DiagonalDecomposition,
};
use crate::wreath::{
    check_connectedness_hypothesis, finite_a_fg_n_u, left_zero_u, reduce_t1, wreath_act,
    wreath_factor_presentations, wreath_generating_set, wreath_presentation, WreathAct,
};

/// Largest free act verified by the product and wreath checks.
pub const FREE_LIMIT: usize = 2000;
/// Largest wreath monoid used by the wreath checks.
pub const WREATH_MONOID_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub limit: Duration,
    run: fn() -> Outcome,
}

#[derive(Debug, Default, Clone)]
pub struct Outcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn expect<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        self.checked += 1;
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{verdict} [{:>2}] {} ({} checks, {} ms of {} ms)",
            self.id, self.name, self.checked, self.elapsed_ms, self.limit_ms
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(" first failure: {f}"));
        }
        s
    }
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, name: "congruence closure matches naive fixpoint", limit: Duration::from_secs(5), run: closure_oracle },
    Criterion { id: 2, name: "certificates replay", limit: Duration::from_secs(60), run: certificate_soundness },
    Criterion { id: 3, name: "direct product generating sets", limit: Duration::from_secs(10), run: dp_generation },
    Criterion { id: 4, name: "direct product presentations", limit: Duration::from_secs(60), run: dp_presentations },
    Criterion { id: 5, name: "decomposition identity", limit: Duration::from_secs(1), run: decomposition_identity },
    Criterion { id: 6, name: "wreath generating sets and presentations", limit: Duration::from_secs(60), run: wreath_checks },
    Criterion { id: 7, name: "reduced wreath presentations", limit: Duration::from_secs(30), run: wreath_reductions },
    Criterion { id: 8, name: "diagonal act constructions", limit: Duration::from_secs(60), run: diagonal_checks },
    Criterion { id: 9, name: "generating sets of M x M contain {1} x M", limit: Duration::from_secs(60), run: identity_column },
    Criterion { id: 10, name: "wreath factor presentations", limit: Duration::from_secs(60), run: wreath_factors },
    Criterion { id: 11, name: "reduced presentations are irredundant", limit: Duration::from_secs(60), run: reductions },
];

pub fn criterion(id: u8) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.id == id)
}

impl Criterion {
    pub fn run(&self) -> CriterionReport {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed = start.elapsed();
        CriterionReport {
            id: self.id,
            name: self.name.to_string(),
            passed: outcome.failures.is_empty() && elapsed <= self.limit,
            checked: outcome.checked,
            failures: outcome.failures,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: self.limit.as_millis(),
        }
    }
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(Criterion::run).collect()
}

/// Presentation on the minimal generating set, reduced.
pub fn small_presentation(act: &FiniteAct) -> Result<BoundPresentation> {
    let gens = minimal_generating_set(act).elems;
    reduce_presentation(&kernel_presentation(act, &gens)?, act)
}

/// Reduced presentation of the diagonal act on the generators `U × V`.
pub fn diagonal_presentation(m: &Arc<FiniteMonoid>, u: &[MonoidElem], v: &[MonoidElem]) -> Result<BoundPresentation> {
    let diag = diagonal_act(m)?;
    reduce_presentation(&kernel_presentation(&diag, &diagonal_pairs(m, u, v))?, &diag)
}

/// Partition by brute-force fixpoint: symmetric, transitive and
/// action-compatible closure of the seed pairs on a boolean matrix.
fn naive_partition(act: &FiniteAct, pairs: &[(ActElem, ActElem)]) -> Vec<usize> {
    let n = act.size();
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in pairs {
        rel[a][b] = true;
        rel[b][a] = true;
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if !rel[a][b] {
                    continue;
                }
                for m in act.base().elements() {
                    let (x, y) = (act.act(a, m), act.act(b, m));
                    if !rel[x][y] {
                        rel[x][y] = true;
                        rel[y][x] = true;
                        changed = true;
                    }
                }
                #[allow(clippy::needless_range_loop)]
                for c in 0..n {
                    if rel[b][c] && !rel[a][c] {
                        rel[a][c] = true;
                        rel[c][a] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if label[a] == usize::MAX {
            for b in 0..n {
                if rel[a][b] {
                    label[b] = next;
                }
            }
            next += 1;
        }
    }
    label
}

fn same_partition(cong: &ActCongruence, labels: &[usize]) -> bool {
    (0..labels.len()).all(|a| {
        (0..labels.len()).all(|b| cong.same_class(a, b) == (labels[a] == labels[b]))
    })
}

fn closure_instances() -> Vec<(String, FiniteAct)> {
    let mut out = Vec::new();
    for m in small_monoids() {
        for a in small_acts(&m.value, 6) {
            out.push((format!("{}:{}", m.name, a.name), a.value));
        }
        if let Ok(d) = direct_product_act(&right_regular_act(&m.value), &FiniteAct::trivial(m.value.clone(), 2).expect("valid")) {
            if d.size() <= 6 {
                out.push((format!("{}:regular x 2", m.name), d));
            }
        }
    }
    out
}

fn random_pairs(rng: &mut StdRng, n: usize) -> Vec<(ActElem, ActElem)> {
    let k = rng.gen_range(0..=3);
    (0..k).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
}

fn closure_oracle() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (name, act) in closure_instances() {
        for trial in 0..100 {
            let pairs = random_pairs(&mut rng, act.size());
            let cong = congruence_closure(&act, &pairs);
            let naive = naive_partition(&act, &pairs);
            out.check(same_partition(&cong, &naive), || format!("{name} trial {trial} pairs {pairs:?}"));
        }
    }
    out
}

fn certificate_soundness() -> Outcome {
    let mut out = Outcome::default();
    let mut rng = StdRng::seed_from_u64(0xce27);
    for (name, act) in closure_instances() {
        for _ in 0..10 {
            let pairs = random_pairs(&mut rng, act.size());
            let cong = congruence_closure(&act, &pairs);
            for a in 0..act.size() {
                for b in 0..act.size() {
                    if !cong.same_class(a, b) {
                        continue;
                    }
                    let forest = cong.certificate(a, b);
                    out.check(
                        forest.is_some_and(|c| c.replay(&act, &pairs, a, b).is_ok()),
                        || format!("{name}: merge-forest certificate {a}~{b}"),
                    );
                    let shortest = connect_sequence(&act, &pairs, a, b);
                    out.check(
                        shortest.is_some_and(|c| c.replay(&act, &pairs, a, b).is_ok()),
                        || format!("{name}: shortest certificate {a}~{b}"),
                    );
                }
            }
        }
    }
    for m in small_monoids() {
        for a in small_acts(&m.value, 4) {
            let Ok(p) = small_presentation(&a.value) else {
                out.check(false, || format!("{}:{} presentation", m.name, a.name));
                continue;
            };
            let Ok(free) = p.presentation.free_act() else { continue };
            let pairs = p.presentation.relation_pairs(&free);
            for i in 0..free.act().size() {
                for j in 0..free.act().size() {
                    let (x, s) = free.decode(i);
                    let (y, t) = free.decode(j);
                    if a.value.act(p.assign[x], s) != a.value.act(p.assign[y], t) {
                        continue;
                    }
                    let cert = is_consequence(&p.presentation, FreeActElem::new(x, s), FreeActElem::new(y, t));
                    out.check(
                        matches!(&cert, Ok(Some(c)) if c.replay(free.act(), &pairs, i, j).is_ok()),
                        || format!("{}:{} consequence {i}={j}", m.name, a.name),
                    );
                }
            }
        }
    }
    for inst in wreath_reduction_instances() {
        let Ok(certs) = check_connectedness_hypothesis(&inst.wa.w, &inst.u, &inst.x) else {
            out.check(false, || format!("{}: hypothesis", inst.name));
            continue;
        };
        for (theta, a, c) in certs {
            let target = inst.wa.w.constant(theta.at(a));
            out.check(c.replay(&inst.wa.w.n, &inst.u, a, &theta, &target).is_ok(), || {
                format!("{}: connectedness {theta} -> {target}", inst.name)
            });
        }
    }
    out
}

/// Candidate `(U, V)` for the diagonal act of `m`.
fn diagonal_choices(m: &FiniteMonoid) -> Vec<(Vec<MonoidElem>, Vec<MonoidElem>)> {
    let sq = square_generating_set(m);
    let rect = rectangular_generating_set(m);
    let all: Vec<MonoidElem> = m.elements().collect();
    let mut out = vec![(sq.u.clone(), sq.v.clone()), (rect.u, rect.v), (all.clone(), all)];
    out.dedup();
    out
}

fn generator_choices(act: &FiniteAct) -> Vec<Vec<ActElem>> {
    let min = minimal_generating_set(act).elems;
    let all: Vec<ActElem> = (0..act.size()).collect();
    if min == all {
        vec![min]
    } else {
        vec![min, all]
    }
}

fn dp_generation() -> Outcome {
    let mut out = Outcome::default();
    for m in small_monoids() {
        let acts = small_acts(&m.value, 3);
        let choices = diagonal_choices(&m.value);
        for a in &acts {
            for b in &acts {
                let product = direct_product_act(&a.value, &b.value).expect("small");
                for x in generator_choices(&a.value) {
                    for y in generator_choices(&b.value) {
                        for (u, v) in &choices {
                            let what = || format!("{}: {} x {} X={x:?} Y={y:?} U={u:?} V={v:?}", m.name, a.name, b.name);
                            if let Some(g) = out.expect(dp_generating_set(&a.value, &x, &b.value, &y, u, v), what) {
                                out.check(
                                    is_generating_set(&product, &g.z)
                                        && g.z.len() <= x.len() * u.len() * y.len() * v.len(),
                                    what,
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn dp_presentations() -> Outcome {
    let mut out = Outcome::default();
    for m in small_monoids() {
        let acts = small_acts(&m.value, 3);
        let presentations: Vec<Option<BoundPresentation>> =
            acts.iter().map(|a| small_presentation(&a.value).ok()).collect();
        for (u, v) in diagonal_choices(&m.value) {
            let Some(d) = out.expect(DiagonalDecomposition::build(&m.value, &u, &v), || format!("{} decomposition", m.name)) else { continue };
            let Some(pdiag) = out.expect(diagonal_presentation(&m.value, &d.u, &d.v), || format!("{} diagonal presentation", m.name)) else { continue };
            for (i, a) in acts.iter().enumerate() {
                for (j, b) in acts.iter().enumerate() {
                    let (Some(pa), Some(pb)) = (&presentations[i], &presentations[j]) else {
                        out.check(false, || format!("{}: factor presentation", m.name));
                        continue;
                    };
                    let Ok(g) = dp_generating_set(&a.value, &pa.assign, &b.value, &pb.assign, &d.u, &d.v) else {
                        out.check(false, || format!("{}: generators", m.name));
                        continue;
                    };
                    if g.z.len() * m.value.order() > FREE_LIMIT {
                        continue;
                    }
                    let what = || format!("{}: {} x {} U={:?} V={:?}", m.name, a.name, b.name, d.u, d.v);
                    out.expect(dp_presentation(&a.value, &b.value, pa, pb, &pdiag, &d), what);
                }
            }
        }
    }
    out
}

fn decomposition_identity() -> Outcome {
    let mut out = Outcome::default();
    for m in small_monoids() {
        for (u, v) in diagonal_choices(&m.value) {
            match DiagonalDecomposition::build(&m.value, &u, &v) {
                Ok(d) => out.check(d.holds(&m.value) && crucial_identity_check(&m.value, &d), || {
                    format!("{} U={u:?} V={v:?}", m.name)
                }),
                Err(e) => out.check(false, || format!("{}: {e}", m.name)),
            }
        }
    }
    out
}

struct WreathInstance {
    name: String,
    wa: WreathAct,
    pa: BoundPresentation,
    pb: BoundPresentation,
}

fn wreath_instances() -> Vec<WreathInstance> {
    let mut out = Vec::new();
    let monoids = small_monoids();
    for m in &monoids {
        for n in &monoids {
            for a in small_acts(&m.value, 3) {
                let maps = (n.value.order() as f64).powi(a.value.size() as i32);
                if m.value.order() as f64 * maps > WREATH_MONOID_LIMIT as f64 {
                    continue;
                }
                for b in small_acts(&n.value, 3) {
                    let (Ok(pa), Ok(pb)) = (small_presentation(&a.value), small_presentation(&b.value)) else { continue };
                    let Ok(wa) = wreath_act(&a.value, &b.value) else { continue };
                    if pa.assign.len() * pb.assign.len() * wa.w.monoid.order() > FREE_LIMIT {
                        continue;
                    }
                    out.push(WreathInstance {
                        name: format!("{}:{} wr {}:{}", m.name, a.name, n.name, b.name),
                        wa,
                        pa,
                        pb,
                    });
                }
            }
        }
    }
    out
}

fn wreath_checks() -> Outcome {
    let mut out = Outcome::default();
    for inst in wreath_instances() {
        let what = || inst.name.clone();
        out.expect(wreath_generating_set(&inst.wa, &inst.pa.assign, &inst.pb.assign), what);
        out.expect(wreath_presentation(&inst.wa, &inst.pa, &inst.pb), what);
    }
    out
}

fn wreath_factors() -> Outcome {
    let mut out = Outcome::default();
    for inst in wreath_instances() {
        let Ok(p) = wreath_presentation(&inst.wa, &inst.pa, &inst.pb) else {
            out.check(false, || format!("{}: presentation", inst.name));
            continue;
        };
        out.expect(wreath_factor_presentations(&inst.wa, &p.bound), || inst.name.clone());
    }
    out
}

struct ReductionInstance {
    name: String,
    wa: WreathAct,
    pa: BoundPresentation,
    pb: BoundPresentation,
    x: Vec<ActElem>,
    u: Vec<crate::wreath::NAMap>,
}

fn wreath_reduction_instances() -> Vec<ReductionInstance> {
    let mut out = Vec::new();
    let ms: Vec<NamedMonoid> = small_monoids().into_iter().filter(|m| m.value.order() <= 3).collect();
    for n in extended_monoids() {
        let zeros = n.value.left_zeros();
        for m in &ms {
            for a in small_acts(&m.value, 2) {
                for b in small_acts(&n.value, 2) {
                    let Ok(wa) = wreath_act(&a.value, &b.value) else { continue };
                    if wa.w.monoid.order() > WREATH_MONOID_LIMIT {
                        continue;
                    }
                    let (Ok(pa), Ok(pb)) = (small_presentation(&a.value), small_presentation(&b.value)) else { continue };
                    if pa.assign.len() * pb.assign.len() * wa.w.monoid.order() > FREE_LIMIT {
                        continue;
                    }
                    let x = pa.assign.clone();
                    let base = format!("{}:{} wr {}:{}", m.name, a.name, n.name, b.name);
                    if let Some(&z) = zeros.first() {
                        if let Ok(u) = left_zero_u(&wa.w, &x, z) {
                            out.push(ReductionInstance { name: format!("{base} left zero"), wa: wa.clone(), pa: pa.clone(), pb: pb.clone(), x: x.clone(), u });
                        }
                    }
                    if let Ok(u) = finite_a_fg_n_u(&wa.w, &x, &n.value.greedy_generators()) {
                        out.push(ReductionInstance { name: format!("{base} generators"), wa, pa, pb, x, u });
                    }
                }
            }
        }
    }
    out
}

fn wreath_reductions() -> Outcome {
    let mut out = Outcome::default();
    let instances = wreath_reduction_instances();
    out.check(instances.len() >= 20, || format!("only {} reduction instances", instances.len()));
    for inst in instances {
        let what = || inst.name.clone();
        let Some(full) = out.expect(wreath_presentation(&inst.wa, &inst.pa, &inst.pb), what) else { continue };
        let Some(red) = out.expect(reduce_t1(&inst.wa, &full, &inst.u), what) else { continue };
        if inst.wa.w.maps.count > inst.u.len() {
            out.check(red.t1.len() < full.t1.len(), || format!("{}: T1 not smaller", inst.name));
        }
    }
    out
}

fn diagonal_checks() -> Outcome {
    let mut out = Outcome::default();
    let family = small_monoids();

    for m in &family {
        let u = square_generating_set(&m.value).u;
        if let Some(z) = out.expect(zero_extension_generators(&m.value, &u), || format!("{} zero gens", m.name)) {
            out.check(z.pairs.len() == (u.len() + 1).pow(2) - 1, || format!("{}: |Z|", m.name));
        }
    }

    for m in &family {
        for n in &family {
            let (mv, nv) = (&m.value, &n.value);
            let u = square_generating_set(mv).u;
            let v = square_generating_set(nv).u;
            let name = || format!("{} x {}", m.name, n.name);
            out.expect(product_diagonal_generators(mv, nv, &u, &v), name);
            let Ok(mn) = direct_product_monoid(mv, nv) else { continue };
            let mn = Arc::new(mn);
            let Ok(diag) = diagonal_act(&mn) else { continue };
            let gens = minimal_generating_set(&diag).elems;
            let mut coords: Vec<MonoidElem> = gens.iter().flat_map(|&g| [g / mn.order(), g % mn.order()]).collect();
            coords.sort_unstable();
            coords.dedup();
            out.check(diagonal_generates(&mn, &coords, &coords), name);
            out.expect(project_diagonal_generators(mv, nv, &coords, Factor::Left), name);
            out.expect(project_diagonal_generators(mv, nv, &coords, Factor::Right), name);
        }
    }

    let mut restriction_cases: Vec<(String, Arc<FiniteMonoid>)> =
        family.iter().map(|m| (m.name.clone(), m.value.clone())).collect();
    for n in ["trivial", "Z2", "E2"] {
        let nm = monoid_by_name(n).expect("family member");
        for a in small_acts(&nm, 2) {
            if let Ok(u) = attach_act_monoid(&nm, &a.value) {
                restriction_cases.push((format!("U({n},{})", a.name), Arc::new(u)));
            }
        }
    }
    for (name, m) in &restriction_cases {
        let u = square_generating_set(m).u;
        let Some(p) = out.expect(diagonal_presentation(m, &u, &u), || format!("{name} diagonal")) else { continue };
        let k = m.order();
        for mask in 1u32..(1 << k) {
            let sub: Vec<MonoidElem> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
            let rest: Vec<MonoidElem> = (0..k).filter(|&i| mask >> i & 1 == 0).collect();
            if !m.is_submonoid(&sub) || !m.is_ideal(&rest) {
                continue;
            }
            if let Some(r) = out.expect(restrict_presentation_to_submonoid(m, &p, &sub), || format!("{name} restricted to {sub:?}")) {
                out.check(r.relations().len() <= p.relations().len(), || format!("{name}: restriction grew"));
            }
        }
    }

    for m in &family {
        let mv = &m.value;
        let u = square_generating_set(mv).u;
        let rr = right_regular_act(mv);
        let pd = diagonal_presentation(mv, &u, &u);
        let pm = kernel_presentation(&rr, &u).and_then(|p| reduce_presentation(&p, &rr));
        if let (Ok(pd), Ok(pm)) = (pd, pm) {
            if let Some(z) = out.expect(zero_extension_presentation(mv, &pd, &pm), || format!("{} zero extension", m.name)) {
                let zc = z.assign.len();
                out.check(
                    z.relations().len() == pd.relations().len() + 2 * pm.relations().len() + zc * zc,
                    || format!("{}: zero extension relation count", m.name),
                );
            }
        } else {
            out.check(false, || format!("{}: inputs", m.name));
        }
    }

    for m in &family {
        for n in &family {
            let (mv, nv) = (&m.value, &n.value);
            let (u, v) = (square_generating_set(mv).u, square_generating_set(nv).u);
            let name = || format!("{} x {}", m.name, n.name);
            let (Ok(pm), Ok(pn)) = (diagonal_presentation(mv, &u, &u), diagonal_presentation(nv, &v, &v)) else {
                out.check(false, name);
                continue;
            };
            let gens = pm.assign.len() * pn.assign.len();
            if gens * mv.order() * nv.order() > Limits::global().size_cap {
                continue;
            }
            let Some(pd) = out.expect(product_diagonal_presentation(mv, nv, &pm, &pn), name) else { continue };
            if gens * mv.order() * nv.order() <= FREE_LIMIT {
                out.expect(product_diagonal_factor_presentation(mv, nv, &pd.bound, Factor::Left), name);
                out.expect(product_diagonal_factor_presentation(mv, nv, &pd.bound, Factor::Right), name);
            }
        }
    }

    for m in &family {
        let mv = &m.value;
        let mut u = square_generating_set(mv).u;
        if !u.contains(&mv.identity()) {
            u.push(mv.identity());
            u.sort_unstable();
        }
        for a in small_acts(mv, 3) {
            if mv.order() + a.value.size() > 9 {
                continue;
            }
            let name = || format!("U({}, {})", m.name, a.name);
            let x = minimal_generating_set(&a.value).elems;
            let Some(gens) = out.expect(attach_act_generators(mv, &a.value, &x, &u), name) else { continue };
            let v = attach_generator_set(mv, &a.value, &x, &u);
            out.expect(project_attach_generators(mv, &a.value, &v), name);
            let big = gens.monoid.clone();
            let Some(p) = out.expect(diagonal_presentation(&big, &v, &v), name) else { continue };
            out.expect(attach_act_factor_presentation(mv, &a.value, &p, &x, &u), name);
        }
    }
    out
}

fn identity_column() -> Outcome {
    let mut out = Outcome::default();
    for name in ["E2", "C3"] {
        let m = monoid_by_name(name).expect("family member");
        let diag = diagonal_act(&m).expect("small");
        let k = m.order();
        let column: Vec<ActElem> = m.elements().map(|s| pair_index(&m, m.identity(), s)).collect();
        let mut generating = 0;
        for mask in 1u64..(1 << (k * k)) {
            let set: Vec<ActElem> = (0..k * k).filter(|&i| mask >> i & 1 == 1).collect();
            if !is_generating_set(&diag, &set) {
                continue;
            }
            generating += 1;
            out.check(column.iter().all(|c| set.contains(c)), || format!("{name}: {set:?}"));
        }
        out.check(generating > 0, || format!("{name}: no generating sets"));
    }
    out
}

fn presentation_targets() -> Vec<(String, NamedAct)> {
    let mut out = Vec::new();
    for m in small_monoids() {
        for a in small_acts(&m.value, 4) {
            out.push((m.name.clone(), a));
        }
        if let Ok(d) = diagonal_act(&m.value) {
            if d.size() <= 16 {
                out.push((m.name.clone(), NamedAct::new("diagonal", d)));
            }
        }
    }
    out
}

fn reductions() -> Outcome {
    let mut out = Outcome::default();
    for (mname, a) in presentation_targets() {
        let all: Vec<MonoidElem> = a.value.base().elements().collect();
        let mut inputs = Vec::new();
        if let Ok(p) = canonical_presentation(&a.value, &all) {
            inputs.push(p);
        }
        if let Ok(p) = kernel_presentation(&a.value, &minimal_generating_set(&a.value).elems) {
            inputs.push(p);
        }
        for p in inputs {
            let what = || format!("{mname}:{}", a.name);
            let Some(r) = out.expect(reduce_presentation(&p, &a.value), what) else { continue };
            out.check(r.verify(&a.value).holds(), what);
            out.check(matches!(is_irredundant(&r, &a.value), Ok(true)), what);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_partition_on_regular_z2() {
        let z2 = Arc::new(FiniteMonoid::cyclic_group(2).unwrap());
        let rr = right_regular_act(&z2);
        assert_eq!(naive_partition(&rr, &[]), vec![0, 1]);
        assert_eq!(naive_partition(&rr, &[(0, 1)]), vec![0, 0]);
    }

    #[test]
    fn criteria_are_numbered() {
        let ids: Vec<u8> = CRITERIA.iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=11).collect::<Vec<_>>());
        assert!(criterion(5).is_some() && criterion(12).is_none());
    }
}
