//! The boolean power in orthogonal form.
//!
//! An element is a finite map from distinct scalars to pairwise disjoint,
//! nonzero idempotents whose join is 1. The canonical form always carries a
//! class for every value, including the class of 0 when it is nonempty, so
//! equality is plain map equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::boolalg::{Algebra, IdElem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct PerpElem<D: Scalar> {
    alg: Algebra,
    /// Ascending by value.
    entries: Vec<(D, IdElem)>,
}

impl<D: Scalar> PerpElem<D> {
    /// Builds the canonical element from an orthogonal family.
    ///
    /// Entries with equal values are merged by join, zero idempotents are
    /// dropped and any part of 1 left uncovered is assigned the value 0.
    pub fn normalize(
        alg: &Algebra,
        entries: impl IntoIterator<Item = (D, IdElem)>,
    ) -> Result<Self> {
        let mut merged: BTreeMap<D, IdElem> = BTreeMap::new();
        for (value, idem) in entries {
            alg.ensure_same(idem.algebra())?;
            if idem.is_zero() {
                continue;
            }
            merged
                .entry(value)
                .and_modify(|e| *e = e.join(&idem))
                .or_insert(idem);
        }
        let mut covered = alg.zero();
        let mut seen: Vec<(&D, &IdElem)> = Vec::with_capacity(merged.len());
        for (value, idem) in &merged {
            if let Some((other, _)) = seen.iter().find(|(_, e)| !e.disjoint(idem)) {
                return Err(Error::NotOrthogonal {
                    first: other.to_string(),
                    second: value.to_string(),
                });
            }
            covered = covered.join(idem);
            seen.push((value, idem));
        }
        let rest = covered.not();
        if !rest.is_zero() {
            merged
                .entry(D::zero())
                .and_modify(|e| *e = e.join(&rest))
                .or_insert(rest);
        }
        Ok(Self::from_sorted(alg.clone(), merged.into_iter().collect()))
    }

    /// Trusted constructor for families already known to be canonical.
    pub(crate) fn from_sorted(alg: Algebra, entries: Vec<(D, IdElem)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, e)| !e.is_zero()));
        debug_assert_eq!(
            entries.iter().fold(0u64, |m, (_, e)| {
                debug_assert_eq!(m & e.bits(), 0);
                m | e.bits()
            }),
            alg.full_mask()
        );
        PerpElem { alg, entries }
    }

    /// Merges a family whose idempotents are already pairwise disjoint and
    /// cover 1, as produced by the arithmetic below.
    fn collect_disjoint(alg: &Algebra, cells: impl IntoIterator<Item = (D, u64)>) -> Self {
        let mut merged: BTreeMap<D, u64> = BTreeMap::new();
        for (value, bits) in cells {
            if bits != 0 {
                *merged.entry(value).or_insert(0) |= bits;
            }
        }
        let entries = merged
            .into_iter()
            .map(|(v, b)| (v, alg.element(b)))
            .collect();
        Self::from_sorted(alg.clone(), entries)
    }

    pub fn constant(alg: &Algebra, value: D) -> Self {
        Self::from_sorted(alg.clone(), vec![(value, alg.one())])
    }

    pub fn zero(alg: &Algebra) -> Self {
        Self::constant(alg, D::zero())
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::constant(alg, D::one())
    }

    /// The idempotent `e` viewed as the element `{1 ↦ e, 0 ↦ ¬e}`.
    pub fn idempotent(e: &IdElem) -> Self {
        let alg = e.algebra();
        Self::collect_disjoint(alg, [(D::one(), e.bits()), (D::zero(), e.not().bits())])
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn entries(&self) -> &[(D, IdElem)] {
        &self.entries
    }

    pub fn values(&self) -> impl Iterator<Item = &D> {
        self.entries.iter().map(|(v, _)| v)
    }

    /// The idempotent `f(a)`, zero when `a` is not a value.
    pub fn at(&self, value: &D) -> IdElem {
        self.entries
            .iter()
            .find(|(v, _)| v == value)
            .map(|(_, e)| e.clone())
            .unwrap_or_else(|| self.alg.zero())
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        self.alg.ensure_same(&other.alg)
    }

    /// `(f+g)(a) = ⋁ { f(b) ∧ g(c) : b + c = a }`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.clone() + b.clone())
    }

    /// `(fg)(a) = ⋁ { f(b) ∧ g(c) : bc = a }`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.clone() * b.clone())
    }

    fn combine(&self, other: &Self, op: impl Fn(&D, &D) -> D) -> Result<Self> {
        self.ensure_same(other)?;
        let cells = self.entries.iter().flat_map(|(a, e)| {
            other
                .entries
                .iter()
                .map(move |(b, f)| (a, b, e.bits() & f.bits()))
        });
        Ok(Self::collect_disjoint(
            &self.alg,
            cells.filter(|c| c.2 != 0).map(|(a, b, m)| (op(a, b), m)),
        ))
    }

    /// `(bf)(a) = ⋁ { f(c) : bc = a }`.
    pub fn scalar_mul(&self, b: &D) -> Self {
        Self::collect_disjoint(
            &self.alg,
            self.entries
                .iter()
                .map(|(a, e)| (b.clone() * a.clone(), e.bits())),
        )
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&-D::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn add_scalar(&self, a: &D) -> Self {
        Self::collect_disjoint(
            &self.alg,
            self.entries
                .iter()
                .map(|(v, e)| (v.clone() + a.clone(), e.bits())),
        )
    }

    /// True when no value class below 0 is occupied.
    pub fn is_nonneg(&self) -> bool {
        self.entries.iter().all(|(v, _)| !v.is_negative())
    }

    /// `f ≤ g` iff `(g − f)(a) = 0` for each `a < 0`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        Ok(other.sub(self)?.is_nonneg())
    }

    /// Meet by common refinement: `Σ min(a_i, b_j) (e_i ∧ f_j)`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        let out = self.combine(other, D::min_of)?;
        debug_assert_eq!(out, self.lattice_by_formula(other, D::min_of)?);
        Ok(out)
    }

    /// Join by common refinement: `Σ max(a_i, b_j) (e_i ∧ f_j)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let out = self.combine(other, D::max_of)?;
        debug_assert_eq!(out, self.lattice_by_formula(other, D::max_of)?);
        Ok(out)
    }

    /// `(f ∧ g)(a) = ⋁ { f(b) ∧ g(c) : min(b, c) = a }`, evaluated for every
    /// candidate output value. Kept as an independent route to [`Self::meet`].
    pub fn meet_by_formula(&self, other: &Self) -> Result<Self> {
        self.lattice_by_formula(other, D::min_of)
    }

    pub fn join_by_formula(&self, other: &Self) -> Result<Self> {
        self.lattice_by_formula(other, D::max_of)
    }

    fn lattice_by_formula(&self, other: &Self, pick: impl Fn(&D, &D) -> D) -> Result<Self> {
        self.ensure_same(other)?;
        let mut candidates: Vec<&D> = self.values().chain(other.values()).collect();
        candidates.sort();
        candidates.dedup();
        let mut out = Vec::new();
        for a in candidates {
            let mut bits = 0u64;
            for (b, e) in &self.entries {
                for (c, f) in &other.entries {
                    if pick(b, c) == *a {
                        bits |= e.bits() & f.bits();
                    }
                }
            }
            out.push((a.clone(), bits));
        }
        Ok(Self::collect_disjoint(&self.alg, out))
    }

    /// `supp(f) = ⋁ { f(a) : a ≠ 0 }`.
    pub fn support(&self) -> IdElem {
        self.alg.element(
            self.entries
                .iter()
                .filter(|(v, _)| !v.is_zero())
                .fold(0, |m, (_, e)| m | e.bits()),
        )
    }

    /// True when the element squares to itself.
    pub fn is_idempotent(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_zero() || v.is_one())
    }

    /// The boolean element `f(1)` when `f` is idempotent.
    pub fn as_idempotent(&self) -> Option<IdElem> {
        self.is_idempotent().then(|| self.at(&D::one()))
    }

    /// Canonical text, entries by descending value: `2·[p] + 0·[q]`.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .rev()
            .map(|(v, e)| format!("{v}·{e}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<D: Scalar> fmt::Display for PerpElem<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<D: Scalar> fmt::Debug for PerpElem<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perp({})", self.to_text())
    }
}

/// The idempotent generating the annihilator of the ideal spanned by `gens`:
/// `¬ ⋁ supp(g_i)`.
pub fn annihilator_idempotent<D: Scalar>(gens: &[PerpElem<D>]) -> Result<IdElem> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let alg = first.algebra();
    let mut support = alg.zero();
    for g in gens {
        alg.ensure_same(g.algebra())?;
        support = support.join(&g.support());
    }
    let e = support.not();
    if cfg!(debug_assertions) {
        let e_perp = PerpElem::<D>::idempotent(&e);
        for g in gens {
            debug_assert_eq!(e_perp.mul(g)?, PerpElem::zero(alg));
        }
        // Maximality: an atom outside e meets the support of some generator,
        // so no h with h·g_i = 0 can live there.
        for i in 0..alg.atom_count() {
            if !e.contains_atom(i) {
                let atom = PerpElem::<D>::idempotent(&alg.atom(i));
                debug_assert!(gens.iter().any(|g| atom
                    .mul(g)
                    .map(|p| p != PerpElem::zero(alg))
                    .unwrap_or(true)));
            }
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Int;

    fn b4() -> Algebra {
        Algebra::new(&["p", "q"]).unwrap()
    }

    fn elem(alg: &Algebra, pairs: &[(i64, &str)]) -> PerpElem<Int> {
        PerpElem::normalize(
            alg,
            pairs
                .iter()
                .map(|&(v, e)| (Int::from(v), alg.parse_element(e).unwrap())),
        )
        .unwrap()
    }

    /// Pointwise values at atoms, read straight off the entries.
    fn at_atoms(f: &PerpElem<Int>) -> Vec<Int> {
        (0..f.algebra().atom_count())
            .map(|i| {
                f.entries()
                    .iter()
                    .find(|(_, e)| e.contains_atom(i))
                    .unwrap()
                    .0
                    .clone()
            })
            .collect()
    }

    #[test]
    fn normalize_examples() {
        let b4 = b4();
        let s = elem(&b4, &[(2, "[p]"), (0, "[q]")]);
        assert_eq!(s.to_text(), "2·[p] + 0·[q]");
        assert_eq!(elem(&b4, &[(2, "[p]")]), s);
        assert_eq!(elem(&b4, &[(1, "[p]"), (1, "[q]")]), PerpElem::one(&b4));
        assert_eq!(elem(&b4, &[(0, "0"), (3, "0")]), PerpElem::zero(&b4));
    }

    #[test]
    fn normalize_rejects_overlap() {
        let b4 = b4();
        let err =
            PerpElem::<Int>::normalize(&b4, [(Int::from(1), b4.one()), (Int::from(2), b4.atom(0))])
                .unwrap_err();
        assert!(matches!(err, Error::NotOrthogonal { .. }));
    }

    #[test]
    fn normalize_rejects_foreign_idempotents() {
        let b4 = b4();
        let b2 = Algebra::new(&["x"]).unwrap();
        assert_eq!(
            PerpElem::<Int>::normalize(&b4, [(Int::from(1), b2.one())]).unwrap_err(),
            Error::AlgebraMismatch
        );
    }

    #[test]
    fn arithmetic_examples() {
        let b4 = b4();
        let s = elem(&b4, &[(2, "[p]"), (0, "[q]")]);
        let t = elem(&b4, &[(3, "[p]"), (1, "[q]")]);
        assert_eq!(s.add(&t).unwrap(), elem(&b4, &[(5, "[p]"), (1, "[q]")]));
        assert_eq!(s.add(&PerpElem::zero(&b4)).unwrap(), s);
        assert_eq!(s.add(&s.neg()).unwrap(), PerpElem::zero(&b4));
        assert_eq!(s.mul(&t).unwrap(), elem(&b4, &[(6, "[p]"), (0, "[q]")]));
        assert_eq!(s.mul(&PerpElem::one(&b4)).unwrap(), s);
        assert_eq!(s.mul(&PerpElem::zero(&b4)).unwrap(), PerpElem::zero(&b4));
        assert_eq!(s.scalar_mul(&Int::from(3)), elem(&b4, &[(6, "[p]")]));
        assert_eq!(t.scalar_mul(&Int::from(0)), PerpElem::zero(&b4));
        assert_eq!(s.neg(), elem(&b4, &[(-2, "[p]"), (0, "[q]")]));
        assert_eq!(at_atoms(&s.neg()), [Int::from(-2), Int::from(0)]);
    }

    #[test]
    fn mixed_algebras_are_rejected() {
        let b4 = b4();
        let b2 = Algebra::new(&["x"]).unwrap();
        let s = PerpElem::<Int>::one(&b4);
        let u = PerpElem::<Int>::one(&b2);
        assert_eq!(s.add(&u).unwrap_err(), Error::AlgebraMismatch);
        assert_eq!(s.mul(&u).unwrap_err(), Error::AlgebraMismatch);
        assert_eq!(s.meet(&u).unwrap_err(), Error::AlgebraMismatch);
        assert_eq!(s.leq(&u).unwrap_err(), Error::AlgebraMismatch);
    }

    #[test]
    fn idempotent_embedding() {
        let b4 = b4();
        let p = b4.atom(0);
        assert_eq!(
            PerpElem::<Int>::idempotent(&p),
            elem(&b4, &[(1, "[p]"), (0, "[q]")])
        );
        assert_eq!(PerpElem::<Int>::idempotent(&b4.one()), PerpElem::one(&b4));
        assert_eq!(PerpElem::<Int>::idempotent(&b4.zero()), PerpElem::zero(&b4));
        for e in b4.elements() {
            let x = PerpElem::<Int>::idempotent(&e);
            assert_eq!(x.mul(&x).unwrap(), x);
            assert_eq!(x.as_idempotent(), Some(e));
        }
    }

    #[test]
    fn order_examples() {
        let b4 = b4();
        let s = elem(&b4, &[(2, "[p]"), (0, "[q]")]);
        let t = elem(&b4, &[(3, "[p]"), (1, "[q]")]);
        assert!(s.is_nonneg());
        assert!(!s.neg().is_nonneg());
        assert!(PerpElem::<Int>::zero(&b4).is_nonneg());
        assert!(s.leq(&t).unwrap());
        assert!(!t.leq(&s).unwrap());
        assert!(s.leq(&s).unwrap());
        // 0 ≤ 1 although 0^⊥(0) = 1 is not below 1^⊥(0) = 0.
        assert!(PerpElem::<Int>::zero(&b4).leq(&PerpElem::one(&b4)).unwrap());
    }

    #[test]
    fn lattice_examples() {
        let b4 = b4();
        let s = elem(&b4, &[(2, "[p]"), (0, "[q]")]);
        let t = elem(&b4, &[(3, "[p]"), (1, "[q]")]);
        assert_eq!(s.meet(&t).unwrap(), s);
        assert_eq!(s.join(&t).unwrap(), t);
        assert_eq!(s.meet(&s).unwrap(), s);
        let u = elem(&b4, &[(-1, "[p]"), (4, "[q]")]);
        assert_eq!(s.meet(&u).unwrap(), elem(&b4, &[(-1, "[p]"), (0, "[q]")]));
        assert_eq!(s.join(&u).unwrap(), elem(&b4, &[(2, "[p]"), (4, "[q]")]));
        assert_eq!(s.meet_by_formula(&u).unwrap(), s.meet(&u).unwrap());
        assert_eq!(s.join_by_formula(&u).unwrap(), s.join(&u).unwrap());
    }

    #[test]
    fn annihilator_examples() {
        let b4 = b4();
        let s = elem(&b4, &[(2, "[p]"), (0, "[q]")]);
        assert_eq!(annihilator_idempotent(&[s]).unwrap(), b4.atom(1));
        assert!(annihilator_idempotent(&[PerpElem::<Int>::one(&b4)])
            .unwrap()
            .is_zero());
        assert!(annihilator_idempotent(&[PerpElem::<Int>::zero(&b4)])
            .unwrap()
            .is_one());
        assert_eq!(
            annihilator_idempotent::<Int>(&[]).unwrap_err(),
            Error::EmptyGenerators
        );
    }

    #[test]
    fn text_form() {
        let b4 = b4();
        assert_eq!(PerpElem::<Int>::one(&b4).to_text(), "1·1");
        assert_eq!(
            elem(&b4, &[(3, "[q]"), (0, "[p]")]).to_text(),
            "3·[q] + 0·[p]"
        );
    }
}
