//! Pointwise reference semantics.
//!
//! A finite boolean algebra is the powerset of its atoms, so every element
//! of the boolean power is just a function from atoms to scalars. This
//! module evaluates both representations into that model with its own
//! naive code and compares every public operation against it. Nothing here
//! reuses the arithmetic of `perp` or `flat`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::boolalg::Algebra;
use crate::error::{Error, Result};
use crate::flat::{alpha, alpha_inv, FlatElem};
use crate::perp::PerpElem;
use crate::presentation::{Binding, Term};
use crate::sample::{self, SampleConfig};
use crate::scalar::Scalar;

/// A scalar for every atom, indexed by atom position.
#[derive(Clone, PartialEq, Eq)]
pub struct PointFn<D: Scalar> {
    alg: Algebra,
    values: Vec<D>,
}

impl<D: Scalar> PointFn<D> {
    pub fn new(alg: &Algebra, values: Vec<D>) -> Result<Self> {
        if values.len() != alg.atom_count() {
            return Err(Error::Arity {
                connective: "point function",
                expected: alg.atom_count(),
                got: values.len(),
            });
        }
        Ok(PointFn {
            alg: alg.clone(),
            values,
        })
    }

    pub fn constant(alg: &Algebra, a: D) -> Self {
        PointFn {
            alg: alg.clone(),
            values: vec![a; alg.atom_count()],
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn values(&self) -> &[D] {
        &self.values
    }

    /// Groups atoms by value.
    pub fn to_perp(&self) -> PerpElem<D> {
        let cells = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), self.alg.atom(i)));
        PerpElem::normalize(&self.alg, cells).expect("atoms are disjoint")
    }

    fn map2(&self, other: &Self, f: impl Fn(&D, &D) -> D) -> Result<Self> {
        self.alg.ensure_same(&other.alg)?;
        Ok(PointFn {
            alg: self.alg.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    fn map(&self, f: impl Fn(&D) -> D) -> Self {
        PointFn {
            alg: self.alg.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// `self ≤ other` at every atom.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.alg.ensure_same(&other.alg)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }
}

impl<D: Scalar> fmt::Display for PointFn<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}↦{v}", self.alg.atom_name(i))?;
        }
        write!(f, "}}")
    }
}

impl<D: Scalar> fmt::Debug for PointFn<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Each atom gets the value whose class contains it.
pub fn stone_eval_perp<D: Scalar>(f: &PerpElem<D>) -> PointFn<D> {
    let alg = f.algebra();
    let values = (0..alg.atom_count())
        .map(|x| {
            f.entries()
                .iter()
                .find(|(_, e)| e.contains_atom(x))
                .map(|(v, _)| v.clone())
                .expect("classes cover every atom")
        })
        .collect();
    PointFn {
        alg: alg.clone(),
        values,
    }
}

/// Each atom gets the largest threshold whose step still contains it.
pub fn stone_eval_flat<D: Scalar>(f: &FlatElem<D>) -> PointFn<D> {
    let alg = f.algebra();
    let values = (0..alg.atom_count())
        .map(|x| {
            f.steps()
                .iter()
                .rev()
                .find(|(_, e)| e.contains_atom(x))
                .map(|(a, _)| a.clone())
                .expect("the first step is 1")
        })
        .collect();
    PointFn {
        alg: alg.clone(),
        values,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleOp {
    Add,
    Sub,
    Mul,
    Neg,
    ScalarMul,
    AddScalar,
    Min,
    Max,
}

impl OracleOp {
    fn arity(self) -> usize {
        match self {
            OracleOp::Neg | OracleOp::ScalarMul | OracleOp::AddScalar => 1,
            _ => 2,
        }
    }

    fn needs_scalar(self) -> bool {
        matches!(self, OracleOp::ScalarMul | OracleOp::AddScalar)
    }
}

pub fn oracle_apply<D: Scalar>(
    op: OracleOp,
    args: &[PointFn<D>],
    scalar: Option<&D>,
) -> Result<PointFn<D>> {
    if args.len() != op.arity() {
        return Err(Error::Arity {
            connective: "oracle operation",
            expected: op.arity(),
            got: args.len(),
        });
    }
    let b = match (op.needs_scalar(), scalar) {
        (true, Some(b)) => b.clone(),
        (true, None) => {
            return Err(Error::Arity {
                connective: "scalar argument",
                expected: 1,
                got: 0,
            })
        }
        _ => D::zero(),
    };
    match op {
        OracleOp::Add => args[0].map2(&args[1], |x, y| x.clone() + y.clone()),
        OracleOp::Sub => args[0].map2(&args[1], |x, y| x.clone() - y.clone()),
        OracleOp::Mul => args[0].map2(&args[1], |x, y| x.clone() * y.clone()),
        OracleOp::Min => args[0].map2(&args[1], |x, y| if x <= y { x.clone() } else { y.clone() }),
        OracleOp::Max => args[0].map2(&args[1], |x, y| if x >= y { x.clone() } else { y.clone() }),
        OracleOp::Neg => Ok(args[0].map(|x| -x.clone())),
        OracleOp::ScalarMul => Ok(args[0].map(|x| b.clone() * x.clone())),
        OracleOp::AddScalar => Ok(args[0].map(|x| b.clone() + x.clone())),
    }
}

/// Evaluates a term atom by atom: `x_e` is 1 on the atoms of `e`, 0 elsewhere.
pub fn oracle_eval_term<D: Scalar>(
    term: &Term<D>,
    alg: &Algebra,
    binding: &Binding,
) -> Result<PointFn<D>> {
    let go = |t: &Term<D>| oracle_eval_term(t, alg, binding);
    let two = |op, a: &Term<D>, b: &Term<D>| oracle_apply(op, &[go(a)?, go(b)?], None);
    match term {
        Term::Scalar(a) => Ok(PointFn::constant(alg, a.clone())),
        Term::Gen(name) => {
            let e = binding
                .get(name)
                .ok_or_else(|| Error::UnboundName(name.clone()))?;
            alg.ensure_same(e.algebra())?;
            let values = (0..alg.atom_count())
                .map(|x| D::from_i64(i64::from(e.contains_atom(x))))
                .collect();
            PointFn::new(alg, values)
        }
        Term::Add(a, b) => two(OracleOp::Add, a, b),
        Term::Sub(a, b) => two(OracleOp::Sub, a, b),
        Term::Mul(a, b) => two(OracleOp::Mul, a, b),
        Term::Meet(a, b) => two(OracleOp::Min, a, b),
        Term::Join(a, b) => two(OracleOp::Max, a, b),
        Term::Neg(a) => oracle_apply(OracleOp::Neg, &[go(a)?], None),
        Term::Pow(a, n) => {
            let base = go(a)?;
            Ok(base.map(|x| {
                let mut acc = D::one();
                for _ in 0..*n {
                    acc = acc * x.clone();
                }
                acc
            }))
        }
    }
}

/// One random case: two elements and a scalar.
#[derive(Clone, Debug)]
pub struct Case<D: Scalar> {
    pub s: PerpElem<D>,
    pub t: PerpElem<D>,
    pub b: D,
}

type CheckFn<D> = dyn Fn(&Case<D>) -> Result<Option<String>> + Send + Sync;

/// A named comparison of one implementation against the oracle. The closure
/// returns `Some(witness)` on disagreement.
#[derive(Clone)]
pub struct OpCheck<D: Scalar> {
    name: String,
    run: Arc<CheckFn<D>>,
}

fn mismatch<D: Scalar>(got: &PointFn<D>, want: &PointFn<D>, inputs: String) -> Option<String> {
    (got != want).then(|| format!("{inputs}: got {got}, expected {want}"))
}

impl<D: Scalar> OpCheck<D> {
    pub fn new(
        name: impl Into<String>,
        run: impl Fn(&Case<D>) -> Result<Option<String>> + Send + Sync + 'static,
    ) -> Self {
        OpCheck {
            name: name.into(),
            run: Arc::new(run),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn run(&self, case: &Case<D>) -> Result<Option<String>> {
        (self.run)(case)
    }

    pub fn perp_binary(
        name: &str,
        imp: impl Fn(&PerpElem<D>, &PerpElem<D>) -> Result<PerpElem<D>> + Send + Sync + 'static,
        op: OracleOp,
    ) -> Self {
        Self::new(name, move |c: &Case<D>| {
            let got = stone_eval_perp(&imp(&c.s, &c.t)?);
            let want = oracle_apply(op, &[stone_eval_perp(&c.s), stone_eval_perp(&c.t)], None)?;
            Ok(mismatch(&got, &want, format!("s = {}, t = {}", c.s, c.t)))
        })
    }

    pub fn flat_binary(
        name: &str,
        imp: impl Fn(&FlatElem<D>, &FlatElem<D>) -> Result<FlatElem<D>> + Send + Sync + 'static,
        op: OracleOp,
    ) -> Self {
        Self::flat_binary_on(name, imp, op, |f| f.clone())
    }

    /// Like [`OpCheck::flat_binary`], after mapping both inputs through `prep`
    /// (used to restrict to nonnegative arguments).
    pub fn flat_binary_on(
        name: &str,
        imp: impl Fn(&FlatElem<D>, &FlatElem<D>) -> Result<FlatElem<D>> + Send + Sync + 'static,
        op: OracleOp,
        prep: impl Fn(&FlatElem<D>) -> FlatElem<D> + Send + Sync + 'static,
    ) -> Self {
        Self::new(name, move |c: &Case<D>| {
            let (f, g) = (prep(&alpha(&c.s)), prep(&alpha(&c.t)));
            let got = stone_eval_flat(&imp(&f, &g)?);
            let want = oracle_apply(op, &[stone_eval_flat(&f), stone_eval_flat(&g)], None)?;
            Ok(mismatch(&got, &want, format!("f = {f}, g = {g}")))
        })
    }

    pub fn perp_scalar(
        name: &str,
        imp: impl Fn(&PerpElem<D>, &D) -> Result<PerpElem<D>> + Send + Sync + 'static,
        op: OracleOp,
    ) -> Self {
        Self::new(name, move |c: &Case<D>| {
            let got = stone_eval_perp(&imp(&c.s, &c.b)?);
            let want = oracle_apply(op, &[stone_eval_perp(&c.s)], Some(&c.b))?;
            Ok(mismatch(&got, &want, format!("s = {}, b = {}", c.s, c.b)))
        })
    }

    /// Scalar checks on the flat side; `positive` replaces `b` by `|b| + 1`.
    pub fn flat_scalar(
        name: &str,
        imp: impl Fn(&FlatElem<D>, &D) -> Result<FlatElem<D>> + Send + Sync + 'static,
        op: OracleOp,
        positive: bool,
    ) -> Self {
        Self::new(name, move |c: &Case<D>| {
            let b = if positive {
                c.b.abs() + D::one()
            } else {
                c.b.clone()
            };
            let f = alpha(&c.s);
            let got = stone_eval_flat(&imp(&f, &b)?);
            let want = oracle_apply(op, &[stone_eval_flat(&f)], Some(&b))?;
            Ok(mismatch(&got, &want, format!("f = {f}, b = {b}")))
        })
    }

    pub fn perp_order(
        name: &str,
        imp: impl Fn(&PerpElem<D>, &PerpElem<D>) -> Result<bool> + Send + Sync + 'static,
    ) -> Self {
        Self::new(name, move |c: &Case<D>| {
            // Also compare against the pointwise minimum so that comparable
            // pairs are exercised, not just random (mostly incomparable) ones.
            let low = PerpElem::normalize(
                c.s.algebra(),
                stone_eval_perp(&c.s)
                    .map2(&stone_eval_perp(&c.t), |x, y| x.clone().min(y.clone()))?
                    .values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v.clone(), c.s.algebra().atom(i))),
            )?;
            for (x, y) in [(&c.s, &c.t), (&low, &c.s), (&c.t, &low)] {
                let got = imp(x, y)?;
                let want = stone_eval_perp(x).leq(&stone_eval_perp(y))?;
                if got != want {
                    return Ok(Some(format!("{x} ≤ {y}: got {got}, expected {want}")));
                }
            }
            Ok(None)
        })
    }

    pub fn flat_order(
        name: &str,
        imp: impl Fn(&FlatElem<D>, &FlatElem<D>) -> Result<bool> + Send + Sync + 'static,
    ) -> Self {
        Self::new(name, move |c: &Case<D>| {
            let (f, g) = (alpha(&c.s), alpha(&c.t));
            let low = f.meet(&g)?;
            for (x, y) in [(&f, &g), (&low, &f), (&g, &low)] {
                let got = imp(x, y)?;
                let want = stone_eval_flat(x).leq(&stone_eval_flat(y))?;
                if got != want {
                    return Ok(Some(format!("{x} ≤ {y}: got {got}, expected {want}")));
                }
            }
            Ok(None)
        })
    }
}

/// The set of checks run by [`oracle_diff`]. Entries can be swapped out to
/// inject faults.
#[derive(Clone)]
pub struct OpTable<D: Scalar> {
    checks: Vec<OpCheck<D>>,
}

impl<D: Scalar> OpTable<D> {
    pub fn checks(&self) -> &[OpCheck<D>] {
        &self.checks
    }

    pub fn names(&self) -> Vec<&str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    /// Replaces the check with the same name, or appends it.
    pub fn replace(&mut self, check: OpCheck<D>) -> &mut Self {
        match self.checks.iter_mut().find(|c| c.name == check.name) {
            Some(slot) => *slot = check,
            None => self.checks.push(check),
        }
        self
    }
}

fn nonneg_part<D: Scalar>(f: &FlatElem<D>) -> FlatElem<D> {
    f.join(&FlatElem::zero(f.algebra())).expect("same algebra")
}

impl<D: Scalar> Default for OpTable<D> {
    fn default() -> Self {
        use OracleOp::*;
        let checks = vec![
            OpCheck::perp_binary("perp_add", PerpElem::add, Add),
            OpCheck::perp_binary("perp_sub", PerpElem::sub, Sub),
            OpCheck::perp_binary("perp_mul", PerpElem::mul, Mul),
            OpCheck::perp_binary("perp_meet", PerpElem::meet, Min),
            OpCheck::perp_binary("perp_join", PerpElem::join, Max),
            OpCheck::perp_binary("perp_meet_formula", PerpElem::meet_by_formula, Min),
            OpCheck::perp_binary("perp_join_formula", PerpElem::join_by_formula, Max),
            OpCheck::perp_scalar("perp_scalar_mul", |f, b| Ok(f.scalar_mul(b)), ScalarMul),
            OpCheck::perp_scalar("perp_add_scalar", |f, b| Ok(f.add_scalar(b)), AddScalar),
            OpCheck::new("perp_neg", |c: &Case<D>| {
                let got = stone_eval_perp(&c.s.neg());
                let want = oracle_apply(Neg, &[stone_eval_perp(&c.s)], None)?;
                Ok(mismatch(&got, &want, format!("s = {}", c.s)))
            }),
            OpCheck::perp_order("perp_leq", PerpElem::leq),
            OpCheck::flat_binary("flat_add", FlatElem::add, Add),
            OpCheck::flat_binary("flat_sub", FlatElem::sub, Sub),
            OpCheck::flat_binary("flat_mul", FlatElem::mul, Mul),
            OpCheck::flat_binary_on("flat_mul_nonneg", FlatElem::mul_nonneg, Mul, nonneg_part),
            OpCheck::flat_binary("flat_meet", FlatElem::meet, Min),
            OpCheck::flat_binary("flat_join", FlatElem::join, Max),
            OpCheck::flat_scalar("flat_scalar_pos", FlatElem::scalar_pos, ScalarMul, true),
            OpCheck::flat_scalar(
                "flat_scalar_mul",
                |f, b| Ok(f.scalar_mul(b)),
                ScalarMul,
                false,
            ),
            OpCheck::flat_scalar(
                "flat_add_scalar",
                |f, b| Ok(f.add_scalar(b)),
                AddScalar,
                false,
            ),
            OpCheck::new("flat_neg", |c: &Case<D>| {
                let f = alpha(&c.s);
                let got = stone_eval_flat(&f.neg());
                let want = oracle_apply(Neg, &[stone_eval_flat(&f)], None)?;
                Ok(mismatch(&got, &want, format!("f = {f}")))
            }),
            OpCheck::flat_order("flat_leq", FlatElem::leq),
            OpCheck::new("alpha", |c: &Case<D>| {
                let got = stone_eval_flat(&alpha(&c.s));
                Ok(mismatch(
                    &got,
                    &stone_eval_perp(&c.s),
                    format!("s = {}", c.s),
                ))
            }),
            OpCheck::new("alpha_inv", |c: &Case<D>| {
                let f = alpha(&c.t);
                let got = stone_eval_perp(&alpha_inv(&f));
                Ok(mismatch(&got, &stone_eval_flat(&f), format!("f = {f}")))
            }),
        ];
        OpTable { checks }
    }
}

/// One JSON-lines record per checked operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffRecord {
    pub op: String,
    pub seed: u64,
    /// Index of the first failing case, or the number of cases run.
    pub case: usize,
    pub status: DiffStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiffStatus {
    Pass,
    Fail,
}

/// Runs every check in `table` on `config.samples` random cases over `alg`
/// and reports the first mismatch per operation.
pub fn oracle_diff<D: Scalar>(
    alg: &Algebra,
    config: &SampleConfig,
    table: &OpTable<D>,
) -> Vec<DiffRecord> {
    let mut rng = sample::rng(config.seed);
    let cases: Vec<Case<D>> = (0..config.samples)
        .map(|_| Case {
            s: sample::random_perp(&mut rng, alg, config.coeff_bound),
            t: sample::random_perp(&mut rng, alg, config.coeff_bound),
            b: sample::random_scalar(&mut rng, config.coeff_bound),
        })
        .collect();
    table
        .checks
        .iter()
        .map(|check| {
            let failure = cases
                .iter()
                .enumerate()
                .find_map(|(i, c)| match check.run(c) {
                    Ok(None) => None,
                    Ok(Some(w)) => Some((i, w)),
                    Err(e) => Some((i, format!("error: {e}"))),
                });
            match failure {
                Some((case, witness)) => DiffRecord {
                    op: check.name.clone(),
                    seed: config.seed,
                    case,
                    status: DiffStatus::Fail,
                    witness: Some(witness),
                },
                None => DiffRecord {
                    op: check.name.clone(),
                    seed: config.seed,
                    case: cases.len(),
                    status: DiffStatus::Pass,
                    witness: None,
                },
            }
        })
        .collect()
}

pub fn all_pass(records: &[DiffRecord]) -> bool {
    records.iter().all(|r| r.status == DiffStatus::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Int;

    fn b4() -> Algebra {
        Algebra::new(&["p", "q"]).unwrap()
    }

    fn pf(alg: &Algebra, v: &[i64]) -> PointFn<Int> {
        PointFn::new(alg, v.iter().map(|&x| Int::from(x)).collect()).unwrap()
    }

    fn s_fixture(alg: &Algebra) -> PerpElem<Int> {
        PerpElem::normalize(
            alg,
            [(Int::from(2), alg.atom(0)), (Int::from(0), alg.atom(1))],
        )
        .unwrap()
    }

    fn t_fixture(alg: &Algebra) -> PerpElem<Int> {
        PerpElem::normalize(
            alg,
            [(Int::from(3), alg.atom(0)), (Int::from(1), alg.atom(1))],
        )
        .unwrap()
    }

    #[test]
    fn stone_eval_examples() {
        let alg = b4();
        assert_eq!(stone_eval_perp(&s_fixture(&alg)), pf(&alg, &[2, 0]));
        assert_eq!(
            stone_eval_flat(&FlatElem::<Int>::one(&alg)),
            pf(&alg, &[1, 1])
        );
        assert_eq!(stone_eval_flat(&alpha(&t_fixture(&alg))), pf(&alg, &[3, 1]));
    }

    #[test]
    fn oracle_apply_examples() {
        let alg = b4();
        let (s, t) = (pf(&alg, &[2, 0]), pf(&alg, &[3, 1]));
        assert_eq!(
            oracle_apply(OracleOp::Add, &[s.clone(), t.clone()], None).unwrap(),
            pf(&alg, &[5, 1])
        );
        assert_eq!(
            oracle_apply(OracleOp::Min, &[s.clone(), s.clone()], None).unwrap(),
            s
        );
        assert_eq!(
            oracle_apply(
                OracleOp::ScalarMul,
                std::slice::from_ref(&s),
                Some(&Int::from(3))
            )
            .unwrap(),
            pf(&alg, &[6, 0])
        );
        assert!(matches!(
            oracle_apply(OracleOp::Add, std::slice::from_ref(&s), None),
            Err(Error::Arity { .. })
        ));
        let other = pf(&Algebra::new(&["r", "u"]).unwrap(), &[0, 0]);
        assert_eq!(
            oracle_apply(OracleOp::Add, &[s, other], None),
            Err(Error::AlgebraMismatch)
        );
    }

    #[test]
    fn stone_eval_is_a_bijection_on_small_values() {
        let alg = b4();
        for a in -3..=3 {
            for b in -3..=3 {
                let f = pf(&alg, &[a, b]);
                let perp = f.to_perp();
                assert_eq!(stone_eval_perp(&perp), f);
                assert_eq!(stone_eval_flat(&alpha(&perp)), f);
                assert_eq!(stone_eval_perp(&perp).to_perp(), perp);
            }
        }
    }

    #[test]
    fn clean_pass_and_vacuous_pass() {
        let alg = b4();
        let config = SampleConfig {
            samples: 50,
            coeff_bound: 10,
            seed: 1,
        };
        let records = oracle_diff::<Int>(&alg, &config, &OpTable::default());
        assert!(all_pass(&records), "{records:#?}");
        let empty = SampleConfig {
            samples: 0,
            ..config
        };
        let records = oracle_diff::<Int>(&alg, &empty, &OpTable::default());
        assert!(all_pass(&records));
        assert!(records.iter().all(|r| r.case == 0));
    }

    #[test]
    fn off_by_one_flat_add_is_caught() {
        let alg = b4();
        let mut table = OpTable::<Int>::default();
        table.replace(OpCheck::flat_binary(
            "flat_add",
            |f, g| Ok(f.add(g)?.add_scalar(&Int::from(1))),
            OracleOp::Add,
        ));
        let config = SampleConfig {
            samples: 20,
            coeff_bound: 10,
            seed: 1,
        };
        let records = oracle_diff(&alg, &config, &table);
        let bad: Vec<_> = records
            .iter()
            .filter(|r| r.status == DiffStatus::Fail)
            .collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].op, "flat_add");
        assert_eq!(bad[0].case, 0);
        assert!(bad[0].witness.is_some());
    }

    #[test]
    fn records_serialize_as_json_lines() {
        let r = DiffRecord {
            op: "perp_add".into(),
            seed: 1,
            case: 200,
            status: DiffStatus::Pass,
            witness: None,
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"op":"perp_add","seed":1,"case":200,"status":"pass"}"#
        );
    }
}
