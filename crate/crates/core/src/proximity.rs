//! De Vries proximities on finite boolean algebras and their lift to the
//! step-function representation.
//!
//! Axioms checked for a relation `≺` (all exhaustive on finite algebras):
//!
//! | name | statement |
//! |------|-----------|
//! | D1 | `0 ≺ 0` and `1 ≺ 1` |
//! | D2 | `e ≺ f ⟹ e ≤ f` |
//! | D3 | `e ≤ f ≺ g ≤ h ⟹ e ≺ h` |
//! | D4 | `e ≺ f, e ≺ g ⟹ e ≺ f ∧ g` |
//! | D5 | `e ≺ f ⟹ ¬f ≺ ¬e` |
//! | D6 | `e ≺ f ⟹ ∃g. e ≺ g ≺ f` |
//! | D7 | `e ≠ 0 ⟹ ∃f ≠ 0. f ≺ e` |
//!
//! The lift relates step functions `s ≺ t` when `s(a) ≺ t(a)` for every `a`.
//! Both sides are constant between consecutive thresholds and `≺` is
//! monotone by D3, so only the merged thresholds need to be inspected.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::boolalg::{Algebra, IdElem};
use crate::error::{Error, Result};
use crate::flat::{compatible_decreasing, FlatElem};
use crate::sample::{self, SampleConfig, SampleRng};
use crate::scalar::{Int, Scalar};

/// Largest algebra (in elements) handled by the exhaustive checks.
pub const EXHAUSTIVE_BOUND: usize = 32;

/// Largest algebra (in elements) handled by [`enumerate_devries`].
pub const ENUMERATION_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
enum RelKind {
    Leq,
    Pairs(Arc<BTreeSet<(u64, u64)>>),
}

/// A binary relation on a finite boolean algebra.
#[derive(Clone)]
pub struct ProxRel {
    alg: Algebra,
    kind: RelKind,
}

fn size_checked(alg: &Algebra, bound: usize) -> Result<usize> {
    let n = alg.atom_count();
    if n >= usize::BITS as usize - 1 || (1usize << n) > bound {
        return Err(Error::TooLarge {
            elements: if n < 63 { 1usize << n } else { usize::MAX },
            bound,
        });
    }
    Ok(1usize << n)
}

impl ProxRel {
    /// The order `≤` itself, which is a de Vries proximity on every algebra.
    pub fn leq(alg: &Algebra) -> Self {
        ProxRel {
            alg: alg.clone(),
            kind: RelKind::Leq,
        }
    }

    pub fn from_pairs(
        alg: &Algebra,
        pairs: impl IntoIterator<Item = (IdElem, IdElem)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (e, f) in pairs {
            alg.ensure_same(e.algebra())?;
            alg.ensure_same(f.algebra())?;
            set.insert((e.bits(), f.bits()));
        }
        Ok(Self::from_bit_pairs(alg, set))
    }

    fn from_bit_pairs(alg: &Algebra, set: BTreeSet<(u64, u64)>) -> Self {
        ProxRel {
            alg: alg.clone(),
            kind: RelKind::Pairs(Arc::new(set)),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// Whether this is the built-in order relation (as opposed to an
    /// explicit pair list, which may happen to equal it).
    pub fn is_order(&self) -> bool {
        self.kind == RelKind::Leq
    }

    pub fn related_bits(&self, e: u64, f: u64) -> bool {
        match &self.kind {
            RelKind::Leq => e & !f == 0,
            RelKind::Pairs(set) => set.contains(&(e, f)),
        }
    }

    /// `e ≺ f`. Panics on elements of another algebra.
    pub fn related(&self, e: &IdElem, f: &IdElem) -> bool {
        assert!(self.alg.same_as(e.algebra()) && self.alg.same_as(f.algebra()));
        self.related_bits(e.bits(), f.bits())
    }

    /// All related pairs in ascending mask order.
    pub fn pairs(&self) -> Result<Vec<(IdElem, IdElem)>> {
        let size = size_checked(&self.alg, EXHAUSTIVE_BOUND)? as u64;
        Ok(match &self.kind {
            RelKind::Leq => (0..size)
                .flat_map(|e| (0..size).filter(move |f| e & !f == 0).map(move |f| (e, f)))
                .map(|(e, f)| (self.alg.element(e), self.alg.element(f)))
                .collect(),
            RelKind::Pairs(set) => set
                .iter()
                .map(|&(e, f)| (self.alg.element(e), self.alg.element(f)))
                .collect(),
        })
    }

    /// Every `g` with `g ≺ f`, ascending by mask.
    pub fn below(&self, f: &IdElem) -> Vec<IdElem> {
        match &self.kind {
            RelKind::Leq => {
                let mut out = Vec::new();
                let top = f.bits();
                let mut sub = top;
                loop {
                    out.push(self.alg.element(sub));
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & top;
                }
                out.reverse();
                out
            }
            RelKind::Pairs(set) => set
                .iter()
                .filter(|&&(_, b)| b == f.bits())
                .map(|&(a, _)| self.alg.element(a))
                .collect(),
        }
    }

    fn pair_set(&self) -> Result<BTreeSet<(u64, u64)>> {
        Ok(self
            .pairs()?
            .into_iter()
            .map(|(e, f)| (e.bits(), f.bits()))
            .collect())
    }
}

impl PartialEq for ProxRel {
    fn eq(&self, other: &Self) -> bool {
        if !self.alg.same_as(&other.alg) {
            return false;
        }
        match (&self.kind, &other.kind) {
            (RelKind::Leq, RelKind::Leq) => true,
            (RelKind::Pairs(a), RelKind::Pairs(b)) => a == b,
            _ => matches!((self.pair_set(), other.pair_set()), (Ok(a), Ok(b)) if a == b),
        }
    }
}

impl fmt::Display for ProxRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pairs() {
            Ok(pairs) => {
                let body: Vec<String> = pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
                write!(f, "{{{}}}", body.join(", "))
            }
            Err(_) => write!(f, "≤"),
        }
    }
}

impl fmt::Debug for ProxRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProxRel{self}")
    }
}

/// Result of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomOutcome {
    pub axiom: String,
    pub passed: bool,
    /// Number of tuples examined.
    pub checked: usize,
    /// Text form of the first violating tuple.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

/// Per-axiom outcomes of an exhaustive or sampled check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProxReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl ProxReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, axiom: &str) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| !o.passed)
    }

    /// `PASS (n axioms)` or `FAIL <axiom>: (<tuple>)`, one line per failure.
    pub fn summary(&self) -> String {
        if self.passed() {
            return format!("PASS ({} axioms)", self.outcomes.len());
        }
        self.outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| {
                let tuple = o.counterexample.as_deref().unwrap_or_default().join(", ");
                format!("FAIL {}: ({tuple})", o.axiom)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub(crate) fn record(
        &mut self,
        axiom: &str,
        checked: usize,
        counterexample: Option<Vec<String>>,
    ) {
        self.outcomes.push(AxiomOutcome {
            axiom: axiom.to_string(),
            passed: counterexample.is_none(),
            checked,
            counterexample,
        });
    }
}

fn texts(elems: &[&IdElem]) -> Vec<String> {
    elems.iter().map(|e| e.to_string()).collect()
}

/// Whether `tuple` violates `axiom` under `rel`. Tuples are laid out as in
/// the counterexamples of [`check_devries`]: D1 takes none, D2/D5/D6 take
/// `(e, f)`, D3 takes `(e, f, g, h)`, D4 takes `(e, f, g)` and D7 takes `(e)`.
pub fn recheck_devries(rel: &ProxRel, axiom: &str, tuple: &[IdElem]) -> Result<bool> {
    let alg = rel.algebra();
    for e in tuple {
        alg.ensure_same(e.algebra())?;
    }
    let arity = match axiom {
        "D1" => 0,
        "D7" => 1,
        "D2" | "D5" | "D6" => 2,
        "D4" => 3,
        "D3" => 4,
        _ => return Err(Error::NotDeVries(format!("unknown axiom {axiom}"))),
    };
    if tuple.len() != arity {
        return Err(Error::Arity {
            connective: "axiom tuple",
            expected: arity,
            got: tuple.len(),
        });
    }
    let r = |a: &IdElem, b: &IdElem| rel.related(a, b);
    let t = tuple;
    Ok(match axiom {
        "D1" => !(r(&alg.zero(), &alg.zero()) && r(&alg.one(), &alg.one())),
        "D2" => r(&t[0], &t[1]) && !t[0].leq(&t[1]),
        "D3" => t[0].leq(&t[1]) && r(&t[1], &t[2]) && t[2].leq(&t[3]) && !r(&t[0], &t[3]),
        "D4" => r(&t[0], &t[1]) && r(&t[0], &t[2]) && !r(&t[0], &t[1].meet(&t[2])),
        "D5" => r(&t[0], &t[1]) && !r(&t[1].not(), &t[0].not()),
        "D6" => r(&t[0], &t[1]) && !alg.elements().any(|g| r(&t[0], &g) && r(&g, &t[1])),
        _ => !t[0].is_zero() && !alg.elements().any(|f| !f.is_zero() && r(&f, &t[0])),
    })
}

/// Exhaustive check of D1–D7.
pub fn check_devries(rel: &ProxRel) -> Result<ProxReport> {
    let alg = rel.algebra();
    size_checked(alg, EXHAUSTIVE_BOUND)?;
    let elems: Vec<IdElem> = alg.elements().collect();
    let r = |a: &IdElem, b: &IdElem| rel.related_bits(a.bits(), b.bits());
    let related: Vec<(&IdElem, &IdElem)> = elems
        .iter()
        .flat_map(|e| elems.iter().map(move |f| (e, f)))
        .filter(|(e, f)| r(e, f))
        .collect();
    let mut report = ProxReport::default();

    let (zero, one) = (alg.zero(), alg.one());
    let d1 = if !r(&zero, &zero) {
        Some(texts(&[&zero, &zero]))
    } else if !r(&one, &one) {
        Some(texts(&[&one, &one]))
    } else {
        None
    };
    report.record("D1", 2, d1);

    let d2 = related.iter().find(|(e, f)| !e.leq(f));
    report.record("D2", related.len(), d2.map(|(e, f)| texts(&[e, f])));

    // Scan unrelated (e, h) and look for f ⊇ e, g ⊆ h with f ≺ g, taking
    // the largest such f and g so the reported chain is the widest one.
    let mut d3 = None;
    let mut checked = 0;
    'outer: for e in &elems {
        for h in &elems {
            if r(e, h) {
                continue;
            }
            checked += 1;
            for f in elems.iter().rev().filter(|f| e.leq(f)) {
                if let Some(g) = elems.iter().rev().find(|g| g.leq(h) && r(f, g)) {
                    d3 = Some(texts(&[e, f, g, h]));
                    break 'outer;
                }
            }
        }
    }
    report.record("D3", checked, d3);

    let mut d4 = None;
    let mut checked = 0;
    'outer: for (e, f) in &related {
        for (e2, g) in &related {
            if e2 != e {
                continue;
            }
            checked += 1;
            if !r(e, &f.meet(g)) {
                d4 = Some(texts(&[e, f, g]));
                break 'outer;
            }
        }
    }
    report.record("D4", checked, d4);

    let d5 = related.iter().find(|(e, f)| !r(&f.not(), &e.not()));
    report.record("D5", related.len(), d5.map(|(e, f)| texts(&[e, f])));

    let d6 = related
        .iter()
        .find(|(e, f)| !elems.iter().any(|g| r(e, g) && r(g, f)));
    report.record("D6", related.len(), d6.map(|(e, f)| texts(&[e, f])));

    let d7 = elems
        .iter()
        .filter(|e| !e.is_zero())
        .find(|e| !elems.iter().any(|f| !f.is_zero() && r(f, e)));
    report.record("D7", elems.len() - 1, d7.map(|e| texts(&[e])));

    debug_assert!(report.outcomes.iter().all(|o| {
        o.counterexample.as_ref().is_none_or(|cx| {
            let tuple: Vec<IdElem> = cx.iter().map(|t| alg.parse_element(t).unwrap()).collect();
            // D1 is reported with the failing pair for readability.
            let tuple = if o.axiom == "D1" { vec![] } else { tuple };
            recheck_devries(rel, &o.axiom, &tuple).unwrap()
        })
    }));
    Ok(report)
}

/// Every de Vries proximity on `alg`, by brute force over all relations.
pub fn enumerate_devries(alg: &Algebra) -> Result<Vec<ProxRel>> {
    let n = size_checked(alg, ENUMERATION_BOUND)?;
    let mut out = Vec::new();
    for code in 0u64..(1u64 << (n * n)) {
        let set = (0..n * n)
            .filter(|k| code >> k & 1 == 1)
            .map(|k| ((k / n) as u64, (k % n) as u64))
            .collect();
        let rel = ProxRel::from_bit_pairs(alg, set);
        if check_devries(&rel)?.passed() {
            out.push(rel);
        }
    }
    Ok(out)
}

/// A relation that has passed [`check_devries`].
#[derive(Clone, Debug, PartialEq)]
pub struct DeVriesAlgebra {
    rel: ProxRel,
}

impl DeVriesAlgebra {
    pub fn new(rel: ProxRel) -> Result<Self> {
        if !rel.is_order() {
            let report = check_devries(&rel)?;
            if let Some(bad) = report.first_failure() {
                return Err(Error::NotDeVries(bad.axiom.clone()));
            }
        }
        Ok(DeVriesAlgebra { rel })
    }

    /// `(B, ≤)`, valid on algebras of any size.
    pub fn leq(alg: &Algebra) -> Self {
        DeVriesAlgebra {
            rel: ProxRel::leq(alg),
        }
    }

    pub fn rel(&self) -> &ProxRel {
        &self.rel
    }

    pub fn algebra(&self) -> &Algebra {
        self.rel.algebra()
    }

    pub fn related(&self, e: &IdElem, f: &IdElem) -> bool {
        self.rel.related(e, f)
    }
}

/// Some `g` with `e ≺ g ≺ f`: the first in [`IdElem::witness_order`].
pub fn interpolant(rel: &ProxRel, e: &IdElem, f: &IdElem) -> Result<IdElem> {
    if !rel.related(e, f) {
        return Err(Error::NotRelated(e.to_string(), f.to_string()));
    }
    if rel.is_order() {
        // e is the smallest element of [e, f].
        return Ok(e.clone());
    }
    let mut candidates: Vec<IdElem> = rel.algebra().elements().collect();
    candidates.sort_by(|a, b| a.witness_order(b));
    candidates
        .into_iter()
        .find(|g| rel.related(e, g) && rel.related(g, f))
        .ok_or_else(|| Error::NoWitness(e.to_string(), f.to_string()))
}

/// Some nonzero `f ≺ e` for nonzero `e`, first in witness order.
pub fn nonzero_below(rel: &ProxRel, e: &IdElem) -> Result<IdElem> {
    let mut candidates: Vec<IdElem> = rel.below(e).into_iter().filter(|g| !g.is_zero()).collect();
    candidates.sort_by(|a, b| a.witness_order(b));
    candidates
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoWitness(rel.algebra().zero().to_string(), e.to_string()))
}

/// `s ≺ t` in the lift: `s(b) ≺ t(b)` at every merged threshold `b`.
pub fn lift_check<D: Scalar>(
    dv: &DeVriesAlgebra,
    s: &FlatElem<D>,
    t: &FlatElem<D>,
) -> Result<bool> {
    dv.algebra().ensure_same(s.algebra())?;
    s.algebra().ensure_same(t.algebra())?;
    Ok(s.merged_grid(t)
        .iter()
        .all(|b| dv.related(&s.eval(b), &t.eval(b))))
}

/// The relation `{(e, f) : e^♭ ≺ f^♭}` read back from the lift.
pub fn restrict_lift(dv: &DeVriesAlgebra) -> Result<ProxRel> {
    let alg = dv.algebra();
    size_checked(alg, EXHAUSTIVE_BOUND)?;
    let mut set = BTreeSet::new();
    for e in alg.elements() {
        // Restriction does not depend on the scalar domain.
        let lifted_e = FlatElem::<Int>::idempotent(&e);
        for f in alg.elements() {
            if lift_check(dv, &lifted_e, &FlatElem::idempotent(&f))? {
                set.insert((e.bits(), f.bits()));
            }
        }
    }
    let out = ProxRel::from_bit_pairs(alg, set);
    debug_assert_eq!(&out, dv.rel());
    Ok(out)
}

fn random_related_below(rng: &mut SampleRng, rel: &ProxRel, f: &IdElem) -> IdElem {
    if rel.is_order() {
        if rng.random_ratio(1, 3) {
            f.clone()
        } else {
            sample::random_subset(rng, f)
        }
    } else {
        rel.below(f)
            .choose(rng)
            .cloned()
            .unwrap_or_else(|| rel.algebra().zero())
    }
}

/// A random `s` with `s ≺ t`, built step by step on a grid refining the
/// thresholds of `t`.
pub fn random_below<D: Scalar>(
    rng: &mut SampleRng,
    dv: &DeVriesAlgebra,
    t: &FlatElem<D>,
    bound: i64,
) -> FlatElem<D> {
    let alg = t.algebra();
    let (lo, hi) = t.bounds();
    let mut grid: Vec<D> = t.thresholds().cloned().collect();
    grid.push(lo.clone() - D::from_i64(rng.random_range(0..=2)));
    for _ in 0..rng.random_range(0..=2) {
        let x = sample::random_scalar::<D>(rng, bound);
        if x <= *hi {
            grid.push(x);
        }
    }
    grid.sort();
    grid.dedup();
    let mut points = Vec::with_capacity(grid.len());
    let mut prev = alg.one();
    for (i, a) in grid.into_iter().enumerate() {
        let value = if i == 0 {
            alg.one()
        } else {
            random_related_below(rng, dv.rel(), &t.eval(&a)).meet(&prev)
        };
        prev = value.clone();
        points.push((a, value));
    }
    let s = FlatElem::from_decreasing_grid(alg, points).expect("decreasing by construction");
    debug_assert!(lift_check(dv, &s, t).unwrap());
    s
}

/// A random `t` with `s ≺ t`, through `s ≺ t ⟺ −t ≺ −s`.
pub fn random_above<D: Scalar>(
    rng: &mut SampleRng,
    dv: &DeVriesAlgebra,
    s: &FlatElem<D>,
    bound: i64,
) -> FlatElem<D> {
    random_below(rng, dv, &s.neg(), bound).neg()
}

/// The interpolating element built from step-wise interpolants on a common
/// grid. Requires `s ≺ t`.
pub fn interpolate<D: Scalar>(
    dv: &DeVriesAlgebra,
    s: &FlatElem<D>,
    t: &FlatElem<D>,
) -> Result<FlatElem<D>> {
    let cd = compatible_decreasing(s, t)?;
    let alg = s.algebra();
    let mut prev = alg.one();
    let mut points = Vec::with_capacity(cd.grid.len());
    for (i, a) in cd.grid.iter().enumerate() {
        // Meeting with the previous value keeps the sequence decreasing;
        // s_i ≤ s_{i−1} ≺ prev and s_i ≺ g give s_i ≺ g ∧ prev.
        let g = interpolant(dv.rel(), &cd.left[i], &cd.right[i])?.meet(&prev);
        prev = g.clone();
        points.push((a.clone(), g));
    }
    FlatElem::from_decreasing_grid(alg, points)
}

/// For `s > 0`: the element `1` on `(−∞, 0]`, `e` on `(0, a_n]` and 0
/// after, where `a_n` is the top threshold of `s` and `e ≺ s(a_n)` is
/// nonzero.
pub fn positive_below<D: Scalar>(dv: &DeVriesAlgebra, s: &FlatElem<D>) -> Result<FlatElem<D>> {
    let alg = s.algebra();
    let (_, top) = s.bounds();
    if !s.is_nonneg() || !top.is_positive() {
        return Err(Error::InvalidSteps(
            "expected a strictly positive element".into(),
        ));
    }
    let e = nonzero_below(dv.rel(), &s.eval(top))?;
    FlatElem::from_decreasing_grid(alg, vec![(D::zero(), alg.one()), (top.clone(), e)])
}

fn positive<D: Scalar>(f: &FlatElem<D>) -> bool {
    f.is_nonneg() && *f != FlatElem::zero(f.algebra())
}

/// Sampled check of P1–P10 for the lift of a de Vries proximity.
pub fn prox_axiom_sample<D: Scalar>(dv: &DeVriesAlgebra, config: &SampleConfig) -> ProxReport {
    let alg = dv.algebra();
    let k = config.coeff_bound;
    let mut rng = sample::rng(config.seed);
    let lift = |s: &FlatElem<D>, t: &FlatElem<D>| lift_check(dv, s, t).expect("same algebra");
    let show = |xs: &[&FlatElem<D>]| xs.iter().map(|x| x.to_text()).collect::<Vec<_>>();
    let n = config.samples;
    let mut report = ProxReport::default();

    let (zero, one) = (FlatElem::<D>::zero(alg), FlatElem::<D>::one(alg));
    let p1 = (!(lift(&zero, &zero) && lift(&one, &one))).then(|| show(&[&zero, &one]));
    report.record("P1", 2, p1);

    let related = |rng: &mut SampleRng| {
        let t = sample::random_flat::<D>(rng, alg, k);
        (random_below(rng, dv, &t, k), t)
    };

    let mut fail = None;
    for _ in 0..n {
        let (s, t) = related(&mut rng);
        if !s.leq(&t).unwrap() {
            fail = Some(show(&[&s, &t]));
            break;
        }
    }
    report.record("P2", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let (t, r) = related(&mut rng);
        let s = t
            .sub(&sample::random_nonneg_flat(&mut rng, alg, k))
            .unwrap();
        let u = r
            .add(&sample::random_nonneg_flat(&mut rng, alg, k))
            .unwrap();
        if !lift(&s, &u) {
            fail = Some(show(&[&s, &t, &r, &u]));
            break;
        }
    }
    report.record("P3", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let s = sample::random_flat::<D>(&mut rng, alg, k);
        let t = random_above(&mut rng, dv, &s, k);
        let r = random_above(&mut rng, dv, &s, k);
        if !lift(&s, &t.meet(&r).unwrap()) {
            fail = Some(show(&[&s, &t, &r]));
            break;
        }
    }
    report.record("P4", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let (s, t) = related(&mut rng);
        if !lift(&t.neg(), &s.neg()) {
            fail = Some(show(&[&s, &t]));
            break;
        }
    }
    report.record("P5", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let (s, t) = related(&mut rng);
        let (r, u) = related(&mut rng);
        if !lift(&s.add(&r).unwrap(), &t.add(&u).unwrap()) {
            fail = Some(show(&[&s, &t, &r, &u]));
            break;
        }
    }
    report.record("P6", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let a: D = sample::random_positive(&mut rng, k);
        let (s, t) = related(&mut rng);
        let scaled = |f: &FlatElem<D>| f.scalar_pos(&a).unwrap();
        // Forward direction on a related pair, and both directions agree on
        // an arbitrary pair.
        let x = sample::random_flat::<D>(&mut rng, alg, k);
        let y = sample::random_flat::<D>(&mut rng, alg, k);
        if !lift(&scaled(&s), &scaled(&t)) || lift(&scaled(&x), &scaled(&y)) != lift(&x, &y) {
            fail = Some(show(&[&s, &t, &x, &y, &FlatElem::constant(alg, a)]));
            break;
        }
    }
    report.record("P7", n, fail);

    let mut fail = None;
    let zero_flat = FlatElem::<D>::zero(alg);
    for _ in 0..n {
        let t = sample::random_nonneg_flat::<D>(&mut rng, alg, k);
        let u = sample::random_nonneg_flat::<D>(&mut rng, alg, k);
        let s = random_below(&mut rng, dv, &t, k).join(&zero_flat).unwrap();
        let r = random_below(&mut rng, dv, &u, k).join(&zero_flat).unwrap();
        if !lift(&s, &t) || !lift(&r, &u) {
            fail = Some(show(&[&s, &t, &r, &u]));
            break;
        }
        if !lift(&s.mul_nonneg(&r).unwrap(), &t.mul_nonneg(&u).unwrap()) {
            fail = Some(show(&[&s, &t, &r, &u]));
            break;
        }
    }
    report.record("P8", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let (s, t) = related(&mut rng);
        match interpolate(dv, &s, &t) {
            Ok(r) if lift(&s, &r) && lift(&r, &t) => {}
            _ => {
                fail = Some(show(&[&s, &t]));
                break;
            }
        }
    }
    report.record("P9", n, fail);

    let mut fail = None;
    let mut checked = 0;
    for _ in 0..n {
        let s = sample::random_nonneg_flat::<D>(&mut rng, alg, k);
        if !positive(&s) {
            continue;
        }
        checked += 1;
        match positive_below(dv, &s) {
            Ok(t) if positive(&t) && lift(&t, &s) => {}
            _ => {
                fail = Some(show(&[&s]));
                break;
            }
        }
    }
    report.record("P10", checked, fail);

    report
}
