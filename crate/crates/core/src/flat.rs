//! The boolean power in decreasing form.
//!
//! An element is a decreasing step function `f : D → B` described by
//! thresholds `a_0 < … < a_n` and idempotents `1 = e_0 > e_1 > … > e_n > 0`:
//! `f(a) = 1` for `a ≤ a_0`, `f(a) = e_i` on `(a_{i-1}, a_i]` and `f(a) = 0`
//! above `a_n`. Each `a_i` is the largest point where `f` takes the value
//! `e_i`.
//!
//! The arithmetic below evaluates the join/meet formulas for the operations
//! only at candidate thresholds (sums, products or negations of input
//! thresholds). Both sides are step functions whose breakpoints lie in those
//! candidate sets, so this is exact. Every direct formula is cross-checked in
//! debug builds against the same operation transported through [`alpha`].

use std::fmt;

use crate::boolalg::{Algebra, IdElem};
use crate::error::{Error, Result};
use crate::perp::PerpElem;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct FlatElem<D: Scalar> {
    alg: Algebra,
    steps: Vec<(D, IdElem)>,
}

impl<D: Scalar> FlatElem<D> {
    /// Validating constructor from `(a_i, e_i)` pairs.
    pub fn from_steps(alg: &Algebra, steps: Vec<(D, IdElem)>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidSteps(msg.to_string()));
        let Some((_, first)) = steps.first() else {
            return bad("at least one step is required");
        };
        for (_, e) in &steps {
            alg.ensure_same(e.algebra())?;
        }
        if !first.is_one() {
            return bad("the first step must have idempotent 1");
        }
        for w in steps.windows(2) {
            if w[0].0 >= w[1].0 {
                return bad("thresholds must strictly increase");
            }
            if !(w[1].1.leq(&w[0].1) && w[1].1 != w[0].1) {
                return bad("idempotents must strictly decrease");
            }
        }
        if steps.last().is_some_and(|(_, e)| e.is_zero()) {
            return bad("the last idempotent must be nonzero");
        }
        Ok(FlatElem {
            alg: alg.clone(),
            steps,
        })
    }

    /// Skips every invariant check. Only useful for fault injection: the
    /// result may violate canonical form, so equality with canonical values
    /// of the same function fails.
    #[doc(hidden)]
    pub fn from_steps_unchecked(alg: &Algebra, steps: Vec<(D, IdElem)>) -> Self {
        FlatElem {
            alg: alg.clone(),
            steps,
        }
    }

    /// Canonicalizes a step function sampled on a sorted grid that contains
    /// every breakpoint. The value at the first grid point must be 1.
    fn from_grid(alg: &Algebra, grid: Vec<(D, u64)>) -> Self {
        debug_assert!(grid.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(grid.windows(2).all(|w| w[1].1 & !w[0].1 == 0));
        assert_eq!(
            grid.first().map(|p| p.1),
            Some(alg.full_mask()),
            "grid must start inside the 1-step"
        );
        let mut steps = Vec::new();
        for (i, (a, bits)) in grid.iter().enumerate() {
            if *bits == 0 {
                break;
            }
            if grid.get(i + 1).is_some_and(|next| next.1 == *bits) {
                continue;
            }
            steps.push((a.clone(), alg.element(*bits)));
        }
        FlatElem {
            alg: alg.clone(),
            steps,
        }
    }

    /// Builds the step function that is `v_i` on `(a_{i−1}, a_i]` from a
    /// weakly decreasing list of points `(a_i, v_i)` with `v_0 = 1`. Repeated
    /// values are merged and trailing zeros dropped.
    pub fn from_decreasing_grid(alg: &Algebra, points: Vec<(D, IdElem)>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidSteps(msg.to_string()));
        if points.first().is_none_or(|(_, e)| !e.is_one()) {
            return bad("the first value must be 1");
        }
        for (_, e) in &points {
            alg.ensure_same(e.algebra())?;
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return bad("thresholds must strictly increase");
            }
            if !w[1].1.leq(&w[0].1) {
                return bad("values must decrease");
            }
        }
        Ok(Self::from_grid(
            alg,
            points.into_iter().map(|(a, e)| (a, e.bits())).collect(),
        ))
    }

    fn on_candidates(alg: &Algebra, mut candidates: Vec<D>, value: impl Fn(&D) -> u64) -> Self {
        candidates.sort();
        candidates.dedup();
        let grid = candidates
            .into_iter()
            .map(|c| {
                let v = value(&c);
                (c, v)
            })
            .collect();
        Self::from_grid(alg, grid)
    }

    /// The constant `a`: `1` up to `a`, `0` after.
    pub fn constant(alg: &Algebra, a: D) -> Self {
        FlatElem {
            alg: alg.clone(),
            steps: vec![(a, alg.one())],
        }
    }

    pub fn zero(alg: &Algebra) -> Self {
        Self::constant(alg, D::zero())
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::constant(alg, D::one())
    }

    /// `e^♭`: 1 on `(−∞, 0]`, `e` on `(0, 1]`, 0 after.
    pub fn idempotent(e: &IdElem) -> Self {
        let alg = e.algebra();
        if e.is_zero() {
            Self::zero(alg)
        } else if e.is_one() {
            Self::one(alg)
        } else {
            FlatElem {
                alg: alg.clone(),
                steps: vec![(D::zero(), alg.one()), (D::one(), e.clone())],
            }
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn steps(&self) -> &[(D, IdElem)] {
        &self.steps
    }

    pub fn thresholds(&self) -> impl Iterator<Item = &D> {
        self.steps.iter().map(|(a, _)| a)
    }

    /// Smallest and largest threshold: `a_0 ≤ f ≤ a_n`.
    pub fn bounds(&self) -> (&D, &D) {
        (&self.steps[0].0, &self.steps[self.steps.len() - 1].0)
    }

    /// `f(a)`.
    pub fn eval(&self, a: &D) -> IdElem {
        self.steps
            .iter()
            .find(|(t, _)| a <= t)
            .map(|(_, e)| e.clone())
            .unwrap_or_else(|| self.alg.zero())
    }

    fn eval_bits(&self, a: &D) -> u64 {
        self.steps
            .iter()
            .find(|(t, _)| a <= t)
            .map_or(0, |(_, e)| e.bits())
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        self.alg.ensure_same(&other.alg)
    }

    /// `(f+g)(a) = ⋁ { f(b₁) ∧ g(b₂) : b₁ + b₂ ≥ a }`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let pairs: Vec<(D, u64)> = self
            .steps
            .iter()
            .flat_map(|(a, e)| {
                other
                    .steps
                    .iter()
                    .map(move |(b, f)| (a.clone() + b.clone(), e.bits() & f.bits()))
            })
            .collect();
        let out = Self::on_candidates(
            &self.alg,
            pairs.iter().map(|(s, _)| s.clone()).collect(),
            |c| {
                pairs
                    .iter()
                    .filter(|(s, _)| s >= c)
                    .fold(0, |m, (_, bits)| m | bits)
            },
        );
        debug_assert_eq!(out, transport2(self, other, PerpElem::add)?);
        Ok(out)
    }

    /// `(bf)(a) = ⋁ { f(c) : bc ≥ a }` for `b > 0`.
    pub fn scalar_pos(&self, b: &D) -> Result<Self> {
        if !b.is_positive() {
            return Err(Error::NonPositiveScalar(b.to_string()));
        }
        let scaled: Vec<(D, u64)> = self
            .steps
            .iter()
            .map(|(a, e)| (b.clone() * a.clone(), e.bits()))
            .collect();
        let out = Self::on_candidates(
            &self.alg,
            scaled.iter().map(|(s, _)| s.clone()).collect(),
            |c| {
                scaled
                    .iter()
                    .filter(|(s, _)| s >= c)
                    .fold(0, |m, (_, bits)| m | bits)
            },
        );
        debug_assert_eq!(out, alpha(&alpha_inv(self).scalar_mul(b)));
        Ok(out)
    }

    /// `(fg)(a) = ⋁ { f(b₁) ∧ g(b₂) : b₁, b₂ ≥ 0, b₁b₂ ≥ a }` for `f, g ≥ 0`.
    pub fn mul_nonneg(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        if !self.is_nonneg() || !other.is_nonneg() {
            return Err(Error::NegativeArgument);
        }
        let full = self.alg.full_mask();
        let pairs: Vec<(D, u64)> = self
            .steps
            .iter()
            .flat_map(|(a, e)| {
                other
                    .steps
                    .iter()
                    .map(move |(b, f)| (a.clone() * b.clone(), e.bits() & f.bits()))
            })
            .chain(std::iter::once((D::zero(), full)))
            .collect();
        let out = Self::on_candidates(
            &self.alg,
            pairs.iter().map(|(s, _)| s.clone()).collect(),
            |c| {
                pairs
                    .iter()
                    .filter(|(s, _)| s >= c)
                    .fold(0, |m, (_, bits)| m | bits)
            },
        );
        debug_assert_eq!(out, transport2(self, other, PerpElem::mul)?);
        Ok(out)
    }

    /// `(−f)(a) = ⋀ { ¬f(b) : b > −a }`.
    pub fn neg(&self) -> Self {
        let full = self.alg.full_mask();
        let out = Self::on_candidates(
            &self.alg,
            self.steps.iter().map(|(a, _)| -a.clone()).collect(),
            |c| {
                let bound = -c.clone();
                self.steps
                    .iter()
                    .filter(|(a, _)| *a > bound)
                    .fold(full, |m, (_, e)| m & !e.bits())
                    & full
            },
        );
        debug_assert_eq!(out, alpha(&alpha_inv(self).neg()));
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// General product, defined by transport through [`alpha`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let out = transport2(self, other, PerpElem::mul)?;
        if cfg!(debug_assertions) && self.is_nonneg() && other.is_nonneg() {
            debug_assert_eq!(out, self.mul_nonneg(other)?);
        }
        Ok(out)
    }

    /// General scalar action, defined by transport through [`alpha`].
    pub fn scalar_mul(&self, b: &D) -> Self {
        let out = alpha(&alpha_inv(self).scalar_mul(b));
        if cfg!(debug_assertions) {
            if b.is_positive() {
                debug_assert_eq!(Ok(&out), self.scalar_pos(b).as_ref());
            } else if *b == -D::one() {
                debug_assert_eq!(out, self.neg());
            }
        }
        out
    }

    /// `f + a` for a scalar `a`: shifts every threshold.
    pub fn add_scalar(&self, a: &D) -> Self {
        FlatElem {
            alg: self.alg.clone(),
            steps: self
                .steps
                .iter()
                .map(|(t, e)| (t.clone() + a.clone(), e.clone()))
                .collect(),
        }
    }

    pub(crate) fn merged_grid(&self, other: &Self) -> Vec<D> {
        let mut grid: Vec<D> = self
            .thresholds()
            .chain(other.thresholds())
            .cloned()
            .collect();
        grid.sort();
        grid.dedup();
        grid
    }

    /// Pointwise meet `(f ∧ g)(a) = f(a) ∧ g(a)`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        Ok(Self::on_candidates(
            &self.alg,
            self.merged_grid(other),
            |c| self.eval_bits(c) & other.eval_bits(c),
        ))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        Ok(Self::on_candidates(
            &self.alg,
            self.merged_grid(other),
            |c| self.eval_bits(c) | other.eval_bits(c),
        ))
    }

    /// `f ≤ g` iff `f(a) ≤ g(a)` at every merged threshold.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.ensure_same(other)?;
        Ok(self
            .merged_grid(other)
            .iter()
            .all(|c| self.eval_bits(c) & !other.eval_bits(c) == 0))
    }

    pub fn is_nonneg(&self) -> bool {
        !self.steps[0].0.is_negative()
    }

    /// `f = 2f ∧ 1`, the order-theoretic idempotent test.
    pub fn is_idempotent_order(&self) -> bool {
        let two = D::one() + D::one();
        let doubled = self.scalar_pos(&two).expect("2 > 0");
        let verdict = doubled.meet(&Self::one(&self.alg)).expect("same algebra") == *self;
        debug_assert_eq!(verdict, alpha_inv(self).is_idempotent());
        verdict
    }

    /// The boolean element `e` with `f = e^♭`, when `f` is idempotent.
    pub fn as_idempotent(&self) -> Option<IdElem> {
        self.is_idempotent_order().then(|| self.eval(&D::one()))
    }

    /// `a_0 + Σ (a_i − a_{i−1}) f(a_i)`, read off the steps.
    pub fn decreasing_decomposition(&self) -> DecreasingDecomposition<D> {
        let base = self.steps[0].0.clone();
        let pairs = self
            .steps
            .windows(2)
            .map(|w| (w[1].0.clone() - w[0].0.clone(), w[1].1.clone()))
            .collect();
        let out = DecreasingDecomposition {
            alg: self.alg.clone(),
            base,
            pairs,
        };
        debug_assert_eq!(out.reconstruct(), *self);
        out
    }

    /// Text form `[1 | 0] [p | 2]`: each step as `[idempotent | threshold]`.
    pub fn to_text(&self) -> String {
        self.steps
            .iter()
            .map(|(a, e)| format!("[{} | {a}]", e.bare_text()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<D: Scalar> fmt::Display for FlatElem<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<D: Scalar> fmt::Debug for FlatElem<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Flat({})", self.to_text())
    }
}

fn transport2<D: Scalar>(
    f: &FlatElem<D>,
    g: &FlatElem<D>,
    op: impl Fn(&PerpElem<D>, &PerpElem<D>) -> Result<PerpElem<D>>,
) -> Result<FlatElem<D>> {
    Ok(alpha(&op(&alpha_inv(f), &alpha_inv(g))?))
}

/// `α(f)(a) = ⋁ { f(b) : b ≥ a }`: upper-tail joins of the value classes.
pub fn alpha<D: Scalar>(f: &PerpElem<D>) -> FlatElem<D> {
    let alg = f.algebra();
    let mut tail = 0u64;
    let mut steps: Vec<(D, IdElem)> = f
        .entries()
        .iter()
        .rev()
        .map(|(a, e)| {
            tail |= e.bits();
            (a.clone(), alg.element(tail))
        })
        .collect();
    steps.reverse();
    FlatElem {
        alg: alg.clone(),
        steps,
    }
}

/// Inverse of [`alpha`]: `a_i ↦ e_i ∧ ¬e_{i+1}`, `a_n ↦ e_n`.
pub fn alpha_inv<D: Scalar>(g: &FlatElem<D>) -> PerpElem<D> {
    let alg = g.algebra();
    let steps = g.steps();
    let entries = steps
        .iter()
        .enumerate()
        .map(|(i, (a, e))| {
            let cell = match steps.get(i + 1) {
                Some((_, next)) => e.meet(&next.not()),
                None => e.clone(),
            };
            (a.clone(), cell)
        })
        .collect::<Vec<_>>();
    // Normalizing (rather than trusting the chain) keeps this total on
    // hand-built, non-canonical step lists.
    PerpElem::normalize(alg, entries).expect("cells of a decreasing chain are disjoint")
}

/// A full decreasing decomposition `a_0 + Σ b_i e_i` with `b_i > 0` and
/// strictly decreasing `e_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecreasingDecomposition<D: Scalar> {
    alg: Algebra,
    pub base: D,
    pub pairs: Vec<(D, IdElem)>,
}

impl<D: Scalar> DecreasingDecomposition<D> {
    /// Evaluates the sum with orthogonal-form arithmetic.
    pub fn reconstruct_perp(&self) -> PerpElem<D> {
        self.pairs.iter().fold(
            PerpElem::constant(&self.alg, self.base.clone()),
            |acc, (b, e)| {
                acc.add(&PerpElem::idempotent(e).scalar_mul(b))
                    .expect("same algebra")
            },
        )
    }

    pub fn reconstruct(&self) -> FlatElem<D> {
        alpha(&self.reconstruct_perp())
    }
}

/// Converts a full orthogonal decomposition to decreasing form:
/// `b_i = a_i − a_{i−1}` and `e_i = ⋁_{j ≥ i} f_j`.
pub fn orth_to_decreasing<D: Scalar>(f: &PerpElem<D>) -> DecreasingDecomposition<D> {
    let alg = f.algebra();
    let entries = f.entries();
    let mut tails = vec![0u64; entries.len()];
    let mut acc = 0u64;
    for (i, (_, e)) in entries.iter().enumerate().rev() {
        acc |= e.bits();
        tails[i] = acc;
    }
    let pairs = (1..entries.len())
        .map(|i| {
            (
                entries[i].0.clone() - entries[i - 1].0.clone(),
                alg.element(tails[i]),
            )
        })
        .collect();
    let out = DecreasingDecomposition {
        alg: alg.clone(),
        base: entries[0].0.clone(),
        pairs,
    };
    debug_assert_eq!(out, alpha(f).decreasing_decomposition());
    out
}

/// Two elements written over one threshold grid `a_0 < … < a_n` with
/// `a_0 ≤ s, t ≤ a_n`; `left[i] = s(a_i)` and `right[i] = t(a_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompatibleDecomposition<D: Scalar> {
    alg: Algebra,
    pub grid: Vec<D>,
    pub left: Vec<IdElem>,
    pub right: Vec<IdElem>,
}

impl<D: Scalar> CompatibleDecomposition<D> {
    /// `a_0 + Σ_{i≥1} (a_i − a_{i−1}) v_i^♭` computed with flat arithmetic.
    pub fn reconstruct(&self, values: &[IdElem]) -> FlatElem<D> {
        let mut acc = FlatElem::constant(&self.alg, self.grid[0].clone());
        for (i, value) in values.iter().enumerate().skip(1) {
            let width = self.grid[i].clone() - self.grid[i - 1].clone();
            let term = FlatElem::idempotent(value)
                .scalar_pos(&width)
                .expect("grid is strictly increasing");
            acc = acc.add(&term).expect("same algebra");
        }
        acc
    }

    pub fn reconstruct_left(&self) -> FlatElem<D> {
        self.reconstruct(&self.left)
    }

    pub fn reconstruct_right(&self) -> FlatElem<D> {
        self.reconstruct(&self.right)
    }
}

/// Common decreasing decompositions of `s` and `t`. When both are
/// nonnegative the grid starts at 0.
pub fn compatible_decreasing<D: Scalar>(
    s: &FlatElem<D>,
    t: &FlatElem<D>,
) -> Result<CompatibleDecomposition<D>> {
    s.ensure_same(t)?;
    let mut grid = s.merged_grid(t);
    if s.is_nonneg() && t.is_nonneg() && !grid[0].is_zero() {
        grid.insert(0, D::zero());
    }
    let out = CompatibleDecomposition {
        alg: s.alg.clone(),
        left: grid.iter().map(|a| s.eval(a)).collect(),
        right: grid.iter().map(|a| t.eval(a)).collect(),
        grid,
    };
    debug_assert_eq!(out.reconstruct_left(), *s);
    debug_assert_eq!(out.reconstruct_right(), *t);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Int, Rat};

    fn b4() -> Algebra {
        Algebra::new(&["p", "q"]).unwrap()
    }

    fn i(v: i64) -> Int {
        Int::from(v)
    }

    fn flat(alg: &Algebra, steps: &[(i64, &str)]) -> FlatElem<Int> {
        FlatElem::from_steps(
            alg,
            steps
                .iter()
                .map(|&(a, e)| (i(a), alg.parse_element(e).unwrap()))
                .collect(),
        )
        .unwrap()
    }

    fn perp(alg: &Algebra, pairs: &[(i64, &str)]) -> PerpElem<Int> {
        PerpElem::normalize(
            alg,
            pairs
                .iter()
                .map(|&(v, e)| (i(v), alg.parse_element(e).unwrap())),
        )
        .unwrap()
    }

    struct Fixture {
        alg: Algebra,
        s: PerpElem<Int>,
        t: PerpElem<Int>,
        s_flat: FlatElem<Int>,
        t_flat: FlatElem<Int>,
    }

    fn fixture() -> Fixture {
        let alg = b4();
        Fixture {
            s: perp(&alg, &[(2, "[p]"), (0, "[q]")]),
            t: perp(&alg, &[(3, "[p]"), (1, "[q]")]),
            s_flat: flat(&alg, &[(0, "1"), (2, "[p]")]),
            t_flat: flat(&alg, &[(1, "1"), (3, "[p]")]),
            alg,
        }
    }

    #[test]
    fn step_validation() {
        let alg = b4();
        let p = alg.atom(0);
        let bad = [
            vec![],
            vec![(i(0), p.clone())],
            vec![(i(0), alg.one()), (i(0), p.clone())],
            vec![(i(0), alg.one()), (i(1), alg.one())],
            vec![(i(0), alg.one()), (i(1), alg.zero())],
            vec![(i(0), alg.one()), (i(1), p.clone()), (i(2), alg.atom(1))],
        ];
        for steps in bad {
            assert!(FlatElem::from_steps(&alg, steps).is_err());
        }
    }

    #[test]
    fn evaluation_uses_half_open_steps() {
        let fx = fixture();
        let p = fx.alg.atom(0);
        assert!(fx.s_flat.eval(&i(-5)).is_one());
        assert!(fx.s_flat.eval(&i(0)).is_one());
        assert_eq!(fx.s_flat.eval(&i(1)), p);
        assert_eq!(fx.s_flat.eval(&i(2)), p);
        assert!(fx.s_flat.eval(&i(3)).is_zero());
    }

    #[test]
    fn alpha_examples() {
        let fx = fixture();
        assert_eq!(alpha(&fx.s), fx.s_flat);
        assert_eq!(
            alpha(&PerpElem::<Int>::zero(&fx.alg)),
            flat(&fx.alg, &[(0, "1")])
        );
        let p = fx.alg.atom(0);
        assert_eq!(
            alpha(&PerpElem::<Int>::idempotent(&p)),
            flat(&fx.alg, &[(0, "1"), (1, "[p]")])
        );
        assert_eq!(
            FlatElem::<Int>::idempotent(&p),
            alpha(&PerpElem::idempotent(&p))
        );
        assert_eq!(alpha_inv(&fx.s_flat), fx.s);
        assert_eq!(alpha_inv(&fx.t_flat), fx.t);
        assert_eq!(
            alpha_inv(&FlatElem::<Int>::zero(&fx.alg)),
            PerpElem::zero(&fx.alg)
        );
    }

    #[test]
    fn addition_examples() {
        let fx = fixture();
        let sum = fx.s_flat.add(&fx.t_flat).unwrap();
        assert_eq!(sum, flat(&fx.alg, &[(1, "1"), (5, "[p]")]));
        assert_eq!(fx.s_flat.add(&FlatElem::zero(&fx.alg)).unwrap(), fx.s_flat);
        assert_eq!(
            fx.s_flat.add(&fx.s_flat.neg()).unwrap(),
            FlatElem::zero(&fx.alg)
        );
    }

    #[test]
    fn positive_scalar_examples() {
        let fx = fixture();
        assert_eq!(
            fx.s_flat.scalar_pos(&i(3)).unwrap(),
            flat(&fx.alg, &[(0, "1"), (6, "[p]")])
        );
        assert_eq!(fx.s_flat.scalar_pos(&i(1)).unwrap(), fx.s_flat);
        assert_eq!(
            fx.t_flat.scalar_pos(&i(2)).unwrap(),
            flat(&fx.alg, &[(2, "1"), (6, "[p]")])
        );
        assert_eq!(
            fx.s_flat.scalar_pos(&i(0)).unwrap_err(),
            Error::NonPositiveScalar("0".into())
        );
        assert!(fx.s_flat.scalar_pos(&i(-1)).is_err());
    }

    #[test]
    fn nonnegative_product_examples() {
        let fx = fixture();
        assert_eq!(
            fx.s_flat.mul_nonneg(&fx.t_flat).unwrap(),
            flat(&fx.alg, &[(0, "1"), (6, "[p]")])
        );
        assert_eq!(
            fx.s_flat.mul_nonneg(&FlatElem::one(&fx.alg)).unwrap(),
            fx.s_flat
        );
        assert_eq!(
            fx.s_flat.mul_nonneg(&FlatElem::zero(&fx.alg)).unwrap(),
            FlatElem::zero(&fx.alg)
        );
        assert_eq!(
            fx.s_flat.neg().mul_nonneg(&fx.t_flat).unwrap_err(),
            Error::NegativeArgument
        );
    }

    #[test]
    fn negation_examples() {
        let fx = fixture();
        assert_eq!(fx.s_flat.neg(), flat(&fx.alg, &[(-2, "1"), (0, "[q]")]));
        assert_eq!(
            FlatElem::<Int>::zero(&fx.alg).neg(),
            FlatElem::zero(&fx.alg)
        );
        assert_eq!(fx.t_flat.neg().neg(), fx.t_flat);
    }

    #[test]
    fn general_operations() {
        let fx = fixture();
        assert_eq!(fx.s_flat.scalar_mul(&i(-1)), fx.s_flat.neg());
        assert_eq!(
            fx.s_flat.mul(&fx.t_flat).unwrap(),
            fx.s_flat.mul_nonneg(&fx.t_flat).unwrap()
        );
        assert_eq!(
            FlatElem::<Int>::one(&fx.alg).scalar_mul(&i(-2)),
            flat(&fx.alg, &[(-2, "1")])
        );
        let neg_s = fx.s_flat.neg();
        assert_eq!(
            neg_s.mul(&fx.t_flat).unwrap(),
            alpha(&fx.s.neg().mul(&fx.t).unwrap())
        );
        assert_eq!(fx.s_flat.scalar_mul(&i(0)), FlatElem::zero(&fx.alg));
    }

    #[test]
    fn lattice_and_order_examples() {
        let fx = fixture();
        assert_eq!(fx.s_flat.meet(&fx.t_flat).unwrap(), fx.s_flat);
        assert_eq!(fx.s_flat.join(&fx.t_flat).unwrap(), fx.t_flat);
        assert!(fx.s_flat.leq(&fx.t_flat).unwrap());
        assert!(!fx.t_flat.leq(&fx.s_flat).unwrap());
        let u = alpha(&perp(&fx.alg, &[(-1, "[p]"), (4, "[q]")]));
        assert_eq!(
            fx.s_flat.meet(&u).unwrap(),
            alpha(&fx.s.meet(&alpha_inv(&u)).unwrap())
        );
        assert_eq!(
            fx.s_flat.join(&u).unwrap(),
            alpha(&fx.s.join(&alpha_inv(&u)).unwrap())
        );
    }

    #[test]
    fn decomposition_examples() {
        let fx = fixture();
        let p = fx.alg.atom(0);
        let d = fx.s_flat.decreasing_decomposition();
        assert_eq!(
            (d.base.clone(), d.pairs.clone()),
            (i(0), vec![(i(2), p.clone())])
        );
        assert_eq!(d.reconstruct(), fx.s_flat);
        let d = fx.t_flat.decreasing_decomposition();
        assert_eq!(
            (d.base.clone(), d.pairs.clone()),
            (i(1), vec![(i(2), p.clone())])
        );
        let d = FlatElem::<Int>::zero(&fx.alg).decreasing_decomposition();
        assert_eq!((d.base, d.pairs), (i(0), vec![]));

        let d = orth_to_decreasing(&fx.s);
        assert_eq!(
            (d.base.clone(), d.pairs.clone()),
            (i(0), vec![(i(2), p.clone())])
        );
        let d = orth_to_decreasing(&fx.t);
        assert_eq!((d.base.clone(), d.pairs.clone()), (i(1), vec![(i(2), p)]));
        let d = orth_to_decreasing(&PerpElem::constant(&fx.alg, i(5)));
        assert_eq!((d.base, d.pairs), (i(5), vec![]));
    }

    #[test]
    fn compatible_decomposition_examples() {
        let fx = fixture();
        let p = fx.alg.atom(0);
        let one = fx.alg.one();
        let c = compatible_decreasing(&fx.s_flat, &fx.t_flat).unwrap();
        assert_eq!(c.grid, [i(0), i(1), i(2), i(3)]);
        assert_eq!(c.left, [one.clone(), p.clone(), p.clone(), fx.alg.zero()]);
        assert_eq!(c.right, [one.clone(), one.clone(), p.clone(), p.clone()]);
        assert_eq!(c.reconstruct_left(), fx.s_flat);
        assert_eq!(c.reconstruct_right(), fx.t_flat);

        let c = compatible_decreasing(&fx.s_flat, &fx.s_flat).unwrap();
        assert_eq!(c.grid, [i(0), i(2)]);
        let c = compatible_decreasing(&FlatElem::<Int>::zero(&fx.alg), &FlatElem::one(&fx.alg))
            .unwrap();
        assert_eq!(c.grid, [i(0), i(1)]);

        // Both nonnegative with no threshold at 0: the grid is extended.
        let c = compatible_decreasing(&FlatElem::constant(&fx.alg, i(2)), &fx.t_flat).unwrap();
        assert_eq!(c.grid[0], i(0));
        assert_eq!(c.reconstruct_left(), FlatElem::constant(&fx.alg, i(2)));

        // Negative elements keep their own lower bound.
        let c = compatible_decreasing(&fx.s_flat.neg(), &fx.t_flat).unwrap();
        assert_eq!(c.grid[0], i(-2));
    }

    #[test]
    fn idempotent_order_test() {
        let fx = fixture();
        let p = fx.alg.atom(0);
        assert!(FlatElem::<Int>::idempotent(&p).is_idempotent_order());
        assert!(!fx.s_flat.is_idempotent_order());
        assert!(FlatElem::<Int>::one(&fx.alg).is_idempotent_order());
        assert!(FlatElem::<Int>::zero(&fx.alg).is_idempotent_order());
        assert!(!FlatElem::<Int>::one(&fx.alg).neg().is_idempotent_order());
        assert_eq!(FlatElem::<Int>::idempotent(&p).as_idempotent(), Some(p));
    }

    #[test]
    fn text_form() {
        let fx = fixture();
        assert_eq!(fx.s_flat.to_text(), "[1 | 0] [p | 2]");
    }

    #[test]
    fn rational_thresholds() {
        let alg = b4();
        let p = alg.atom(0);
        let half = Rat::new(1.into(), 2.into());
        let f = FlatElem::<Rat>::idempotent(&p).scalar_pos(&half).unwrap();
        assert_eq!(f.steps()[1].0, half);
        assert_eq!(f.add(&f).unwrap(), FlatElem::idempotent(&p));
    }
}
