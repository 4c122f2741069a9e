//! Morphisms between de Vries algebras and between their powers.
//!
//! A de Vries morphism is stored as a full table over the source algebra so
//! that checking it never assumes any homomorphism structure:
//!
//! | name | statement |
//! |------|-----------|
//! | M1 | `σ(0) = 0` |
//! | M2 | `σ(e ∧ f) = σ(e) ∧ σ(f)` |
//! | M3 | `e ≺ f ⟹ ¬σ(¬e) ≺ σ(f)` |
//! | M4 | `σ(f) = ⋁ { σ(e) : e ≺ f }` |
//!
//! Morphisms between powers add M5 `α(s + a) = α(s) + a`, M6 `α(as) = aα(s)`
//! for `a ≥ 0` and M7 `α(s ∨ a) = α(s) ∨ a`, with M1–M4 read over step
//! functions. Morphisms compose with `⋆`, not with plain composition.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::boolalg::{big_join, Algebra, IdElem};
use crate::error::{Error, Result};
use crate::flat::FlatElem;
use crate::proximity::{
    lift_check, random_below, restrict_lift, DeVriesAlgebra, ProxReport, EXHAUSTIVE_BOUND,
};
use crate::sample::{self, SampleConfig};
use crate::scalar::Scalar;

fn ensure_small(alg: &Algebra) -> Result<()> {
    let n = alg.atom_count();
    if n >= 63 || (1usize << n) > EXHAUSTIVE_BOUND {
        return Err(Error::TooLarge {
            elements: if n < 63 { 1usize << n } else { usize::MAX },
            bound: EXHAUSTIVE_BOUND,
        });
    }
    Ok(())
}

/// A map between de Vries algebras given by its full table, indexed by the
/// source mask.
#[derive(Clone, PartialEq)]
pub struct DVMorphism {
    source: DeVriesAlgebra,
    target: DeVriesAlgebra,
    table: Vec<IdElem>,
}

impl DVMorphism {
    pub fn new(source: DeVriesAlgebra, target: DeVriesAlgebra, table: Vec<IdElem>) -> Result<Self> {
        ensure_small(source.algebra())?;
        let size = 1usize << source.algebra().atom_count();
        if table.len() != size {
            return Err(Error::InvalidMorphism(format!(
                "table has {} entries, expected {size}",
                table.len()
            )));
        }
        for e in &table {
            target.algebra().ensure_same(e.algebra())?;
        }
        Ok(DVMorphism {
            source,
            target,
            table,
        })
    }

    pub fn from_fn(
        source: DeVriesAlgebra,
        target: DeVriesAlgebra,
        f: impl Fn(&IdElem) -> IdElem,
    ) -> Result<Self> {
        ensure_small(source.algebra())?;
        let table = source.algebra().elements().map(|e| f(&e)).collect();
        Self::new(source, target, table)
    }

    pub fn identity(dv: &DeVriesAlgebra) -> Result<Self> {
        Self::from_fn(dv.clone(), dv.clone(), |e| e.clone())
    }

    pub fn source(&self) -> &DeVriesAlgebra {
        &self.source
    }

    pub fn target(&self) -> &DeVriesAlgebra {
        &self.target
    }

    pub fn table(&self) -> &[IdElem] {
        &self.table
    }

    /// `σ(e)`. Panics on elements of another algebra.
    pub fn apply(&self, e: &IdElem) -> IdElem {
        assert!(self.source.algebra().same_as(e.algebra()));
        self.table[e.bits() as usize].clone()
    }
}

impl fmt::Debug for DVMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .source
            .algebra()
            .elements()
            .map(|e| format!("{e}↦{}", self.apply(&e)))
            .collect();
        write!(f, "DVMorphism{{{}}}", body.join(", "))
    }
}

fn texts(elems: &[&IdElem]) -> Vec<String> {
    elems.iter().map(|e| e.to_string()).collect()
}

/// Exhaustive check of M1–M4.
pub fn check_dv_morphism(m: &DVMorphism) -> ProxReport {
    let src = m.source.algebra();
    let elems: Vec<IdElem> = src.elements().collect();
    let s = |e: &IdElem| m.apply(e);
    let mut report = ProxReport::default();

    let zero = src.zero();
    report.record("M1", 1, (!s(&zero).is_zero()).then(|| texts(&[&zero])));

    let m2 = elems
        .iter()
        .flat_map(|e| elems.iter().map(move |f| (e, f)))
        .find(|(e, f)| s(&e.meet(f)) != s(e).meet(&s(f)));
    report.record(
        "M2",
        elems.len() * elems.len(),
        m2.map(|(e, f)| texts(&[e, f])),
    );

    let related: Vec<(&IdElem, &IdElem)> = elems
        .iter()
        .flat_map(|e| elems.iter().map(move |f| (e, f)))
        .filter(|(e, f)| m.source.related(e, f))
        .collect();
    let m3 = related
        .iter()
        .find(|(e, f)| !m.target.related(&s(&e.not()).not(), &s(f)));
    report.record("M3", related.len(), m3.map(|(e, f)| texts(&[e, f])));

    let m4 = elems.iter().find(|f| {
        let below: Vec<IdElem> = m.source.rel().below(f).iter().map(s).collect();
        big_join(m.target.algebra(), &below) != s(f)
    });
    report.record("M4", elems.len(), m4.map(|f| texts(&[f])));
    report
}

/// Every boolean homomorphism `a → b`, each wrapped with `≤` on both
/// sides. A homomorphism is determined by where it sends the atoms of `b`
/// back into the atoms of `a`; the enumeration follows that dual map in
/// lexicographic order.
pub fn enumerate_boolean_homs(a: &Algebra, b: &Algebra) -> Result<Vec<DVMorphism>> {
    ensure_small(a)?;
    ensure_small(b)?;
    let (na, nb) = (a.atom_count(), b.atom_count());
    let count = na.pow(nb as u32);
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        // dual[y] = atom of a that atom y of b maps to.
        let dual: Vec<usize> = (0..nb)
            .map(|y| code / na.pow((nb - 1 - y) as u32) % na)
            .collect();
        let m = DVMorphism::from_fn(DeVriesAlgebra::leq(a), DeVriesAlgebra::leq(b), |e| {
            let bits = (0..nb)
                .filter(|&y| e.contains_atom(dual[y]))
                .fold(0u64, |m, y| m | 1 << y);
            b.element(bits)
        })?;
        out.push(m);
    }
    Ok(out)
}

type ActionFn<D> = dyn Fn(&FlatElem<D>) -> FlatElem<D> + Send + Sync;

#[derive(Clone)]
enum Action<D: Scalar> {
    Lift(DVMorphism),
    Custom(Arc<ActionFn<D>>),
}

/// A map between de Vries powers.
#[derive(Clone)]
pub struct ProxMorphism<D: Scalar> {
    source: DeVriesAlgebra,
    target: DeVriesAlgebra,
    action: Action<D>,
}

impl<D: Scalar> ProxMorphism<D> {
    /// An arbitrary action, e.g. for testing that the checks catch faults.
    pub fn custom(
        source: DeVriesAlgebra,
        target: DeVriesAlgebra,
        action: impl Fn(&FlatElem<D>) -> FlatElem<D> + Send + Sync + 'static,
    ) -> Self {
        ProxMorphism {
            source,
            target,
            action: Action::Custom(Arc::new(action)),
        }
    }

    pub fn source(&self) -> &DeVriesAlgebra {
        &self.source
    }

    pub fn target(&self) -> &DeVriesAlgebra {
        &self.target
    }

    /// The boolean morphism this one was lifted from, if any.
    pub fn lifted_from(&self) -> Option<&DVMorphism> {
        match &self.action {
            Action::Lift(m) => Some(m),
            Action::Custom(_) => None,
        }
    }

    pub fn apply(&self, f: &FlatElem<D>) -> Result<FlatElem<D>> {
        self.source.algebra().ensure_same(f.algebra())?;
        Ok(match &self.action {
            Action::Lift(m) => apply_by_decomposition(m, f),
            Action::Custom(act) => act(f),
        })
    }
}

impl<D: Scalar> fmt::Debug for ProxMorphism<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.action {
            Action::Lift(m) => write!(f, "ProxMorphism::Lift({m:?})"),
            Action::Custom(_) => write!(f, "ProxMorphism::Custom"),
        }
    }
}

/// `σ ∘ f`, renormalized: equal consecutive values merge and trailing
/// zeros are dropped.
pub fn lift_pointwise<D: Scalar>(m: &DVMorphism, f: &FlatElem<D>) -> FlatElem<D> {
    let points = f
        .steps()
        .iter()
        .map(|(a, e)| (a.clone(), m.apply(e)))
        .collect();
    FlatElem::from_decreasing_grid(m.target.algebra(), points)
        .expect("a de Vries morphism is monotone and sends 1 to 1")
}

/// `a_0 + Σ b_i σ(e_i)^♭` over the decreasing decomposition of `f`.
fn apply_by_decomposition<D: Scalar>(m: &DVMorphism, f: &FlatElem<D>) -> FlatElem<D> {
    let dec = f.decreasing_decomposition();
    let tgt = m.target.algebra();
    let out = dec
        .pairs
        .iter()
        .fold(FlatElem::constant(tgt, dec.base.clone()), |acc, (b, e)| {
            let term = FlatElem::idempotent(&m.apply(e))
                .scalar_pos(b)
                .expect("decomposition widths are positive");
            acc.add(&term).expect("same algebra")
        });
    debug_assert_eq!(out, lift_pointwise(m, f));
    out
}

/// The unique extension of a de Vries morphism to the powers.
pub fn lift_morphism<D: Scalar>(m: &DVMorphism) -> Result<ProxMorphism<D>> {
    let report = check_dv_morphism(m);
    if let Some(bad) = report.first_failure() {
        return Err(Error::InvalidMorphism(format!(
            "{} fails at ({})",
            bad.axiom,
            bad.counterexample.as_deref().unwrap_or_default().join(", ")
        )));
    }
    Ok(ProxMorphism {
        source: m.source.clone(),
        target: m.target.clone(),
        action: Action::Lift(m.clone()),
    })
}

/// Applies `pm` to `f`; same as [`ProxMorphism::apply`].
pub fn apply_prox_morphism<D: Scalar>(
    pm: &ProxMorphism<D>,
    f: &FlatElem<D>,
) -> Result<FlatElem<D>> {
    pm.apply(f)
}

/// The restriction to idempotents: `σ(e)` is read off `α(e^♭)`.
pub fn restrict<D: Scalar>(pm: &ProxMorphism<D>) -> Result<DVMorphism> {
    if let Some(m) = pm.lifted_from() {
        return Ok(m.clone());
    }
    ensure_small(pm.source.algebra())?;
    let mut table = Vec::new();
    for e in pm.source.algebra().elements() {
        let image = pm.apply(&FlatElem::idempotent(&e))?;
        let idem = image.as_idempotent().ok_or_else(|| {
            Error::InvalidMorphism(format!("image of {e} is not idempotent: {image}"))
        })?;
        table.push(idem);
    }
    DVMorphism::new(pm.source.clone(), pm.target.clone(), table)
}

/// The `σ(e)` entry of the restriction without requiring the image of
/// `e^♭` to be canonical: its value on `(0, 1]`.
fn restricted_value<D: Scalar>(pm: &ProxMorphism<D>, e: &IdElem) -> Result<IdElem> {
    Ok(pm.apply(&FlatElem::idempotent(e))?.eval(&D::one()))
}

/// Sampled check of M1–M7.
pub fn check_prox_morphism_sample<D: Scalar>(
    pm: &ProxMorphism<D>,
    config: &SampleConfig,
) -> Result<ProxReport> {
    let src = pm.source.algebra().clone();
    let tgt = pm.target.algebra().clone();
    let k = config.coeff_bound;
    let n = config.samples;
    let mut rng = sample::rng(config.seed);
    let act = |f: &FlatElem<D>| pm.apply(f);
    let show = |xs: &[&FlatElem<D>]| xs.iter().map(|x| x.to_text()).collect::<Vec<_>>();
    let mut report = ProxReport::default();

    let zero = FlatElem::<D>::zero(&src);
    report.record(
        "M1",
        1,
        (act(&zero)? != FlatElem::zero(&tgt)).then(|| show(&[&zero])),
    );

    let mut fail = None;
    for _ in 0..n {
        let s = sample::random_flat::<D>(&mut rng, &src, k);
        let t = sample::random_flat::<D>(&mut rng, &src, k);
        if act(&s.meet(&t)?)? != act(&s)?.meet(&act(&t)?)? {
            fail = Some(show(&[&s, &t]));
            break;
        }
    }
    report.record("M2", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let t = sample::random_flat::<D>(&mut rng, &src, k);
        let s = random_below(&mut rng, &pm.source, &t, k);
        let lhs = act(&s.neg())?.neg();
        if !lift_check(&pm.target, &lhs, &act(&t)?)? {
            fail = Some(show(&[&s, &t]));
            break;
        }
    }
    report.record("M3", n, fail);

    // α(t) must be an upper bound of α(s) over sampled s ≺ t, and must equal
    // a_0 + Σ b_i ⋁{σ(g) : g ≺ e_i}, the least one.
    let mut fail = None;
    for _ in 0..n {
        let t = sample::random_flat::<D>(&mut rng, &src, k);
        let s = random_below(&mut rng, &pm.source, &t, k);
        let image = act(&t)?;
        if !act(&s)?.leq(&image)? {
            fail = Some(show(&[&s, &t]));
            break;
        }
        let dec = t.decreasing_decomposition();
        let mut least = FlatElem::constant(&tgt, dec.base.clone());
        for (b, e) in &dec.pairs {
            let below = pm
                .source
                .rel()
                .below(e)
                .iter()
                .map(|g| restricted_value(pm, g))
                .collect::<Result<Vec<_>>>()?;
            let join = big_join(&tgt, &below);
            least = least.add(&FlatElem::idempotent(&join).scalar_pos(b)?)?;
        }
        if image != least {
            fail = Some(show(&[&t]));
            break;
        }
    }
    report.record("M4", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let s = sample::random_flat::<D>(&mut rng, &src, k);
        let a: D = sample::random_scalar(&mut rng, k);
        if act(&s.add_scalar(&a))? != act(&s)?.add_scalar(&a) {
            fail = Some(show(&[&s, &FlatElem::constant(&src, a)]));
            break;
        }
    }
    report.record("M5", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let s = sample::random_flat::<D>(&mut rng, &src, k);
        let a: D = sample::random_scalar::<D>(&mut rng, k).abs();
        if act(&s.scalar_mul(&a))? != act(&s)?.scalar_mul(&a) {
            fail = Some(show(&[&s, &FlatElem::constant(&src, a)]));
            break;
        }
    }
    report.record("M6", n, fail);

    let mut fail = None;
    for _ in 0..n {
        let s = sample::random_flat::<D>(&mut rng, &src, k);
        let a: D = sample::random_scalar(&mut rng, k);
        let lhs = act(&s.join(&FlatElem::constant(&src, a.clone()))?)?;
        if lhs != act(&s)?.join(&FlatElem::constant(&tgt, a.clone()))? {
            fail = Some(show(&[&s, &FlatElem::constant(&src, a)]));
            break;
        }
    }
    report.record("M7", n, fail);

    Ok(report)
}

/// `(σ₂ ⋆ σ₁)(e) = ⋁ { σ₂σ₁(f) : f ≺ e }`.
pub fn star_compose_dv(m2: &DVMorphism, m1: &DVMorphism) -> Result<DVMorphism> {
    if m1.target != m2.source {
        return Err(Error::EndpointMismatch);
    }
    DVMorphism::from_fn(m1.source.clone(), m2.target.clone(), |e| {
        let images: Vec<IdElem> = m1
            .source
            .rel()
            .below(e)
            .iter()
            .map(|f| m2.apply(&m1.apply(f)))
            .collect();
        big_join(m2.target.algebra(), &images)
    })
}

/// The lift of the `⋆`-composite of the restrictions.
pub fn star_compose_prox<D: Scalar>(
    p2: &ProxMorphism<D>,
    p1: &ProxMorphism<D>,
) -> Result<ProxMorphism<D>> {
    if p1.target != p2.source {
        return Err(Error::EndpointMismatch);
    }
    lift_morphism(&star_compose_dv(&restrict(p2)?, &restrict(p1)?)?)
}

/// The de Vries power of a de Vries algebra: step functions with the
/// lifted proximity.
#[derive(Clone, Debug, PartialEq)]
pub struct DeVriesPower {
    base: DeVriesAlgebra,
}

impl DeVriesPower {
    pub fn base(&self) -> &DeVriesAlgebra {
        &self.base
    }

    pub fn algebra(&self) -> &Algebra {
        self.base.algebra()
    }

    pub fn related<D: Scalar>(&self, s: &FlatElem<D>, t: &FlatElem<D>) -> Result<bool> {
        lift_check(&self.base, s, t)
    }
}

/// Sends a de Vries algebra to its power.
pub fn functor_sp(dv: &DeVriesAlgebra) -> DeVriesPower {
    DeVriesPower { base: dv.clone() }
}

pub fn functor_sp_morphism<D: Scalar>(m: &DVMorphism) -> Result<ProxMorphism<D>> {
    lift_morphism(m)
}

/// The idempotents of a power with the restricted proximity, identified
/// with the base algebra through [`tau`].
pub fn functor_id(power: &DeVriesPower) -> Result<DeVriesAlgebra> {
    DeVriesAlgebra::new(restrict_lift(&power.base)?)
}

pub fn functor_id_morphism<D: Scalar>(pm: &ProxMorphism<D>) -> Result<DVMorphism> {
    restrict(pm)
}

/// `τ(e) = e^♭`.
pub fn tau<D: Scalar>(e: &IdElem) -> FlatElem<D> {
    FlatElem::idempotent(e)
}

pub fn tau_inverse<D: Scalar>(f: &FlatElem<D>) -> Option<IdElem> {
    f.as_idempotent()
}

/// `η(s) = s`: elements are already stored as step functions, so the
/// comparison map into the power of the idempotents is the identity.
pub fn eta<D: Scalar>(_power: &DeVriesPower, s: &FlatElem<D>) -> FlatElem<D> {
    s.clone()
}

/// Both naturality squares for `pm : S → T`:
/// `σ^♭ ∘ τ = τ ∘ σ` on every idempotent and
/// `Sp(Id(pm)) ∘ η = η ∘ pm` on sampled elements.
pub fn naturality_check<D: Scalar>(
    pm: &ProxMorphism<D>,
    config: &SampleConfig,
) -> Result<ProxReport> {
    let sigma = functor_id_morphism(pm)?;
    let lifted: ProxMorphism<D> = functor_sp_morphism(&sigma)?;
    let (src, tgt) = (functor_sp(&pm.source), functor_sp(&pm.target));
    let mut report = ProxReport::default();

    let elems: Vec<IdElem> = pm.source.algebra().elements().collect();
    let mut fail = None;
    for e in &elems {
        if lifted.apply(&tau(e))? != tau::<D>(&sigma.apply(e)) {
            fail = Some(vec![e.to_string()]);
            break;
        }
    }
    report.record("tau", elems.len(), fail);

    let mut rng = sample::rng(config.seed);
    let mut fail = None;
    for _ in 0..config.samples {
        let s = sample::random_flat::<D>(&mut rng, src.algebra(), config.coeff_bound);
        if lifted.apply(&eta(&src, &s))? != eta(&tgt, &pm.apply(&s)?) {
            fail = Some(vec![s.to_text()]);
            break;
        }
    }
    report.record("eta", config.samples, fail);
    Ok(report)
}

/// `Id(Sp(B)) ≅ B` through `τ`, checked exhaustively: `τ` is injective,
/// inverted by [`tau_inverse`], preserves the boolean operations, and
/// preserves and reflects the proximity.
pub fn id_sp_roundtrip<D: Scalar>(dv: &DeVriesAlgebra) -> Result<ProxReport> {
    ensure_small(dv.algebra())?;
    let alg = dv.algebra();
    let power = functor_sp(dv);
    let elems: Vec<IdElem> = alg.elements().collect();
    let lifted: Vec<FlatElem<D>> = elems.iter().map(tau).collect();
    let one = FlatElem::<D>::one(alg);
    let mut report = ProxReport::default();

    let bad = elems.iter().zip(&lifted).find(|(e, f)| {
        tau_inverse(*f).as_ref() != Some(*e) || lifted.iter().filter(|g| g == f).count() != 1
    });
    report.record(
        "bijective",
        elems.len(),
        bad.map(|(e, _)| vec![e.to_string()]),
    );

    let mut fail = None;
    'outer: for e in &elems {
        for f in &elems {
            let (te, tf) = (&lifted[e.bits() as usize], &lifted[f.bits() as usize]);
            let meet_ok = te.meet(tf)? == tau(&e.meet(f));
            let join_ok = te.join(tf)? == tau(&e.join(f));
            let not_ok = one.sub(te)? == tau(&e.not());
            let prox_ok = dv.related(e, f) == power.related(te, tf)?;
            if !(meet_ok && join_ok && not_ok && prox_ok) {
                fail = Some(vec![e.to_string(), f.to_string()]);
                break 'outer;
            }
        }
    }
    report.record("operations", elems.len() * elems.len(), fail);

    let back = functor_id(&power)?;
    report.record(
        "relation",
        1,
        (back != *dv).then(|| vec![back.rel().to_string(), dv.rel().to_string()]),
    );
    Ok(report)
}

/// `Sp(Id(S)) ≅ S` through `η`, sampled: `η` is injective, preserves the
/// ring and lattice operations, and preserves and reflects the proximity.
pub fn sp_id_roundtrip<D: Scalar>(
    power: &DeVriesPower,
    config: &SampleConfig,
) -> Result<ProxReport> {
    let back = functor_sp(&functor_id(power)?);
    let alg = power.algebra();
    let k = config.coeff_bound;
    let mut rng = sample::rng(config.seed);
    let mut report = ProxReport::default();
    let e = |s: &FlatElem<D>| eta(power, s);

    let mut fail = None;
    for _ in 0..config.samples {
        let s = sample::random_flat::<D>(&mut rng, alg, k);
        let t = if rng.random_ratio(1, 2) {
            random_below(&mut rng, power.base(), &s, k)
        } else {
            sample::random_flat::<D>(&mut rng, alg, k)
        };
        let ok = (e(&s) == e(&t)) == (s == t)
            && e(&s.add(&t)?) == e(&s).add(&e(&t))?
            && e(&s.mul(&t)?) == e(&s).mul(&e(&t))?
            && e(&s.meet(&t)?) == e(&s).meet(&e(&t))?
            && power.related(&t, &s)? == back.related(&e(&t), &e(&s))?
            && power.related(&s, &t)? == back.related(&e(&s), &e(&t))?;
        if !ok {
            fail = Some(vec![s.to_text(), t.to_text()]);
            break;
        }
    }
    report.record("eta", config.samples, fail);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Int;

    fn b2() -> Algebra {
        Algebra::new(&["a"]).unwrap()
    }

    fn b4() -> Algebra {
        Algebra::new(&["p", "q"]).unwrap()
    }

    fn el(alg: &Algebra, text: &str) -> IdElem {
        alg.parse_element(text).unwrap()
    }

    fn flat(alg: &Algebra, steps: &[(i64, &str)]) -> FlatElem<Int> {
        FlatElem::from_steps(
            alg,
            steps
                .iter()
                .map(|&(a, e)| (Int::from(a), el(alg, e)))
                .collect(),
        )
        .unwrap()
    }

    /// σ: B4 → B2 evaluating at the atom p.
    fn eval_at_p() -> DVMorphism {
        let (a, b) = (b4(), b2());
        let p = el(&a, "[p]");
        DVMorphism::from_fn(DeVriesAlgebra::leq(&a), DeVriesAlgebra::leq(&b), |e| {
            if p.leq(e) {
                b.one()
            } else {
                b.zero()
            }
        })
        .unwrap()
    }

    fn config(samples: usize) -> SampleConfig {
        SampleConfig {
            samples,
            coeff_bound: 10,
            seed: 5,
        }
    }

    #[test]
    fn dv_morphism_checks() {
        assert!(check_dv_morphism(&eval_at_p()).passed());
        let id = DVMorphism::identity(&DeVriesAlgebra::leq(&b4())).unwrap();
        assert!(check_dv_morphism(&id).passed());

        let (a, b) = (b4(), b2());
        let constant = DVMorphism::from_fn(DeVriesAlgebra::leq(&a), DeVriesAlgebra::leq(&b), |e| {
            if e.is_zero() {
                b.zero()
            } else {
                b.one()
            }
        })
        .unwrap();
        let report = check_dv_morphism(&constant);
        let m2 = report.outcome("M2").unwrap();
        assert!(!m2.passed);
        assert_eq!(
            m2.counterexample.as_deref().unwrap(),
            ["[p]", "[q]"].map(String::from)
        );
    }

    #[test]
    fn boolean_hom_counts() {
        assert_eq!(enumerate_boolean_homs(&b4(), &b2()).unwrap().len(), 2);
        assert_eq!(enumerate_boolean_homs(&b2(), &b4()).unwrap().len(), 1);
        let homs = enumerate_boolean_homs(&b4(), &b4()).unwrap();
        assert_eq!(homs.len(), 4);
        assert!(homs.contains(&DVMorphism::identity(&DeVriesAlgebra::leq(&b4())).unwrap()));
        let to_b2 = enumerate_boolean_homs(&b4(), &b2()).unwrap();
        assert_eq!(to_b2[0], eval_at_p());
        for m in homs.iter().chain(&to_b2) {
            assert!(check_dv_morphism(m).passed());
        }
    }

    #[test]
    fn lifting_examples() {
        let (a, b) = (b4(), b2());
        let pm: ProxMorphism<Int> = lift_morphism(&eval_at_p()).unwrap();
        let s = flat(&a, &[(0, "1"), (2, "[p]")]);
        let t = flat(&a, &[(1, "1"), (3, "[p]")]);
        assert_eq!(pm.apply(&s).unwrap(), FlatElem::constant(&b, Int::from(2)));
        assert_eq!(pm.apply(&t).unwrap(), FlatElem::constant(&b, Int::from(3)));
        let c = FlatElem::constant(&a, Int::from(-4));
        assert_eq!(pm.apply(&c).unwrap(), FlatElem::constant(&b, Int::from(-4)));
        assert_eq!(pm.apply(&tau(&el(&a, "[p]"))).unwrap(), tau(&b.one()));

        let id: ProxMorphism<Int> =
            lift_morphism(&DVMorphism::identity(&DeVriesAlgebra::leq(&a)).unwrap()).unwrap();
        assert_eq!(id.apply(&t).unwrap(), t);
    }

    #[test]
    fn sampled_morphism_axioms() {
        let pm: ProxMorphism<Int> = lift_morphism(&eval_at_p()).unwrap();
        let report = check_prox_morphism_sample(&pm, &config(60)).unwrap();
        assert!(report.passed(), "{}", report.summary());
        assert_eq!(report.outcomes.len(), 7);

        // Dropping the renormalization leaves repeated step values.
        let m = eval_at_p();
        let tgt = m.target().algebra().clone();
        let corrupted =
            ProxMorphism::<Int>::custom(m.source().clone(), m.target().clone(), move |f| {
                let steps = f
                    .steps()
                    .iter()
                    .map(|(a, e)| (a.clone(), m.apply(e)))
                    .collect();
                FlatElem::from_steps_unchecked(&tgt, steps)
            });
        let report = check_prox_morphism_sample(&corrupted, &config(60)).unwrap();
        let m2 = report.outcome("M2").unwrap();
        assert!(!m2.passed && m2.counterexample.is_some());
    }

    #[test]
    fn star_composition() {
        let dv4 = DeVriesAlgebra::leq(&b4());
        let id4 = DVMorphism::identity(&dv4).unwrap();
        let id2 = DVMorphism::identity(&DeVriesAlgebra::leq(&b2())).unwrap();
        let m = eval_at_p();
        assert_eq!(star_compose_dv(&m, &id4).unwrap(), m);
        assert_eq!(star_compose_dv(&id2, &m).unwrap(), m);
        assert_eq!(star_compose_dv(&id4, &m), Err(Error::EndpointMismatch));

        let homs = enumerate_boolean_homs(&b4(), &b4()).unwrap();
        for h in &homs {
            let composite = star_compose_dv(&m, h).unwrap();
            for e in b4().elements() {
                assert_eq!(composite.apply(&e), m.apply(&h.apply(&e)));
            }
        }

        let p: ProxMorphism<Int> = lift_morphism(&m).unwrap();
        let q: ProxMorphism<Int> = lift_morphism(&homs[1]).unwrap();
        let s = flat(&b4(), &[(0, "1"), (2, "[p]")]);
        let both = star_compose_prox(&p, &q).unwrap();
        assert_eq!(
            both.apply(&s).unwrap(),
            p.apply(&q.apply(&s).unwrap()).unwrap()
        );
        let with_id = star_compose_prox(&p, &lift_morphism(&id4).unwrap()).unwrap();
        let t = flat(&b4(), &[(1, "1"), (3, "[p]")]);
        assert_eq!(with_id.apply(&t).unwrap(), p.apply(&t).unwrap());
    }

    #[test]
    fn functors_and_round_trips() {
        let dv = DeVriesAlgebra::leq(&b4());
        assert_eq!(functor_id(&functor_sp(&dv)).unwrap(), dv);
        assert!(id_sp_roundtrip::<Int>(&dv).unwrap().passed());
        assert!(sp_id_roundtrip::<Int>(&functor_sp(&dv), &config(40))
            .unwrap()
            .passed());

        let pm: ProxMorphism<Int> = lift_morphism(&eval_at_p()).unwrap();
        let report = naturality_check(&pm, &config(40)).unwrap();
        assert!(report.passed(), "{}", report.summary());
        assert_eq!(restrict(&pm).unwrap(), eval_at_p());

        let b = b2();
        assert_eq!(tau::<Int>(&b.one()), flat(&b, &[(1, "1")]));
    }

    #[test]
    fn restriction_of_custom_actions() {
        let m = eval_at_p();
        let inner = m.clone();
        let pm = ProxMorphism::<Int>::custom(m.source().clone(), m.target().clone(), move |f| {
            lift_pointwise(&inner, f)
        });
        assert_eq!(restrict(&pm).unwrap(), m);
        assert!(check_prox_morphism_sample(&pm, &config(30))
            .unwrap()
            .passed());
    }
}
