//! Exact computation in Specker algebras over totally ordered domains.
//!
//! Elements of the boolean power `D[B]` of a totally ordered domain `D` by a
//! finite boolean algebra `B` are available in two representations:
//! orthogonal form ([`PerpElem`]) and decreasing step-function form
//! ([`FlatElem`]), related by the bijection [`alpha`]. On top of those the
//! crate provides the term language for the presentation of `D[B]`, de Vries
//! proximities and their lift to the step-function form, proximity
//! morphisms with `⋆` composition, and an independent pointwise oracle used
//! to validate all of the above.

pub mod boolalg;
pub mod error;
pub mod flat;
pub mod json;
pub mod morphisms;
pub mod oracle;
pub mod perp;
pub mod presentation;
pub mod proximity;
pub mod sample;
pub mod scalar;

pub use boolalg::{ba_apply, Algebra, Connective, IdElem};
pub use error::{Error, Result};
pub use flat::{
    alpha, alpha_inv, compatible_decreasing, orth_to_decreasing, CompatibleDecomposition,
    DecreasingDecomposition, FlatElem,
};
pub use json::Element;
pub use morphisms::{
    check_dv_morphism, check_prox_morphism_sample, enumerate_boolean_homs, lift_morphism,
    star_compose_dv, star_compose_prox, DVMorphism, DeVriesPower, ProxMorphism,
};
pub use oracle::{oracle_apply, oracle_diff, stone_eval_flat, stone_eval_perp, OracleOp, PointFn};
pub use perp::{annihilator_idempotent, PerpElem};
pub use presentation::{normalize_term, parse_term, Binding, Term};
pub use proximity::{
    check_devries, enumerate_devries, interpolant, lift_check, prox_axiom_sample, restrict_lift,
    DeVriesAlgebra, ProxRel, ProxReport,
};
pub use sample::SampleConfig;
pub use scalar::{parse_scalar, Int, Rat, Scalar};
