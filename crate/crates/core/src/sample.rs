//! Seeded random generators for elements, idempotents and terms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolalg::{Algebra, IdElem};
use crate::flat::{alpha, FlatElem};
use crate::perp::PerpElem;
use crate::presentation::Term;
use crate::scalar::Scalar;

pub type SampleRng = ChaCha8Rng;

/// Knobs shared by every sampled check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub samples: usize,
    /// Coefficients are drawn from `[−coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: 200,
            coeff_bound: 10,
            seed: 0,
        }
    }
}

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An integer in `[−bound, bound]`. Over the rationals, one draw in four
/// gets a small denominator so non-integral thresholds are exercised too.
pub fn random_scalar<D: Scalar>(rng: &mut SampleRng, bound: i64) -> D {
    let bound = bound.max(0);
    let n = rng.random_range(-bound..=bound);
    if D::DOMAIN == "rat" && rng.random_ratio(1, 4) {
        let d = rng.random_range(2..=4);
        D::parse(&format!("{n}/{d}")).expect("well-formed literal")
    } else {
        D::from_i64(n)
    }
}

/// A scalar in `[1, bound]` (at least 1).
pub fn random_positive<D: Scalar>(rng: &mut SampleRng, bound: i64) -> D {
    D::from_i64(rng.random_range(1..=bound.max(1)))
}

pub fn random_idem(rng: &mut SampleRng, alg: &Algebra) -> IdElem {
    alg.element(rng.random::<u64>() & alg.full_mask())
}

/// A uniformly random subset of `e`.
pub fn random_subset(rng: &mut SampleRng, e: &IdElem) -> IdElem {
    e.algebra().element(rng.random::<u64>() & e.bits())
}

/// Independent atom values drawn from `[−bound, bound]`.
pub fn random_perp<D: Scalar>(rng: &mut SampleRng, alg: &Algebra, bound: i64) -> PerpElem<D> {
    let cells = (0..alg.atom_count()).map(|i| (random_scalar::<D>(rng, bound), alg.atom(i)));
    PerpElem::normalize(alg, cells).expect("atoms are disjoint")
}

pub fn random_flat<D: Scalar>(rng: &mut SampleRng, alg: &Algebra, bound: i64) -> FlatElem<D> {
    alpha(&random_perp(rng, alg, bound))
}

/// Atom values drawn from `[0, bound]`.
pub fn random_nonneg_flat<D: Scalar>(
    rng: &mut SampleRng,
    alg: &Algebra,
    bound: i64,
) -> FlatElem<D> {
    let cells = (0..alg.atom_count()).map(|i| {
        let v = random_scalar::<D>(rng, bound).abs();
        (v, alg.atom(i))
    });
    alpha(&PerpElem::normalize(alg, cells).expect("atoms are disjoint"))
}

/// A random term of depth at most `depth` over the generator names given.
pub fn random_term<D: Scalar>(
    rng: &mut SampleRng,
    names: &[String],
    depth: usize,
    bound: i64,
) -> Term<D> {
    if depth == 0 || rng.random_ratio(1, 4) {
        return if names.is_empty() || rng.random_ratio(1, 3) {
            Term::Scalar(random_scalar(rng, bound))
        } else {
            Term::Gen(names[rng.random_range(0..names.len())].clone())
        };
    }
    let sub = |rng: &mut SampleRng| Box::new(random_term(rng, names, depth - 1, bound));
    match rng.random_range(0..8) {
        0 => Term::Add(sub(rng), sub(rng)),
        1 => Term::Sub(sub(rng), sub(rng)),
        2 => Term::Mul(sub(rng), sub(rng)),
        3 => Term::Neg(sub(rng)),
        4 => Term::Meet(sub(rng), sub(rng)),
        5 => Term::Join(sub(rng), sub(rng)),
        6 => {
            let n = rng.random_range(0..=3);
            Term::Pow(sub(rng), n)
        }
        _ => Term::Add(sub(rng), Box::new(Term::Scalar(random_scalar(rng, bound)))),
    }
}
