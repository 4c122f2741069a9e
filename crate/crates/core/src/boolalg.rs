//! Finite boolean algebras realized as powersets of a named atom set.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Elements are stored as atom bitmasks, which caps the atom count.
pub const MAX_ATOMS: usize = 64;

/// Default upper bound on the generator count of [`Algebra::free`].
pub const DEFAULT_FREE_BOUND: usize = 4;

#[derive(Debug)]
struct AlgebraData {
    atoms: Vec<String>,
    index: HashMap<String, usize>,
    generators: Vec<(String, u64)>,
}

/// A finite atomic boolean algebra. Cloning is cheap.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

impl Algebra {
    /// The powerset algebra over `atoms`.
    pub fn new<S: AsRef<str>>(atoms: &[S]) -> Result<Self> {
        Self::build(
            atoms.iter().map(|a| a.as_ref().to_string()).collect(),
            Vec::new(),
        )
    }

    /// The free boolean algebra on `n` generators, realized as the powerset of
    /// its `2^n` minterms. Minterm `m<j>` is the atom where generator `g_i` is
    /// true exactly when bit `i` of `j` is set.
    pub fn free(n: usize) -> Result<Self> {
        Self::free_bounded(n, DEFAULT_FREE_BOUND)
    }

    pub fn free_bounded(n: usize, bound: usize) -> Result<Self> {
        let max = bound.min(6);
        if n == 0 || n > max {
            return Err(Error::FreeGeneratorBounds { got: n, max });
        }
        let k = 1usize << n;
        let atoms = (0..k).map(|j| format!("m{j}")).collect();
        let generators = (0..n)
            .map(|i| {
                let mask = (0..k)
                    .filter(|j| j >> i & 1 == 1)
                    .fold(0u64, |m, j| m | 1 << j);
                (format!("g_{i}"), mask)
            })
            .collect();
        Self::build(atoms, generators)
    }

    fn build(atoms: Vec<String>, generators: Vec<(String, u64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::NoAtoms);
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms {
                got: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        let mut index = HashMap::with_capacity(atoms.len());
        for (i, name) in atoms.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyAtomName);
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(Algebra(Arc::new(AlgebraData {
            atoms,
            index,
            generators,
        })))
    }

    pub fn atom_count(&self) -> usize {
        self.0.atoms.len()
    }

    pub fn atoms(&self) -> &[String] {
        &self.0.atoms
    }

    pub fn atom_name(&self, i: usize) -> &str {
        &self.0.atoms[i]
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    /// Number of elements, saturating at `usize::MAX`.
    pub fn size(&self) -> usize {
        1usize
            .checked_shl(self.atom_count() as u32)
            .unwrap_or(usize::MAX)
    }

    pub fn full_mask(&self) -> u64 {
        match self.atom_count() {
            MAX_ATOMS => u64::MAX,
            k => (1u64 << k) - 1,
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, IdElem)> + '_ {
        self.0
            .generators
            .iter()
            .map(move |(name, mask)| (name.as_str(), self.element(*mask)))
    }

    pub fn generator(&self, name: &str) -> Option<IdElem> {
        self.generators().find(|(n, _)| *n == name).map(|(_, e)| e)
    }

    pub fn is_free(&self) -> bool {
        !self.0.generators.is_empty()
    }

    /// The element with the given atom mask. Bits beyond the atom count are
    /// discarded.
    pub fn element(&self, bits: u64) -> IdElem {
        IdElem {
            alg: self.clone(),
            bits: bits & self.full_mask(),
        }
    }

    pub fn zero(&self) -> IdElem {
        self.element(0)
    }

    pub fn one(&self) -> IdElem {
        self.element(self.full_mask())
    }

    pub fn atom(&self, i: usize) -> IdElem {
        assert!(i < self.atom_count(), "atom index {i} out of range");
        self.element(1 << i)
    }

    pub fn from_atom_names<S: AsRef<str>>(&self, names: &[S]) -> Result<IdElem> {
        let mut bits = 0u64;
        for name in names {
            let name = name.as_ref();
            let i = self
                .atom_index(name)
                .ok_or_else(|| Error::UnknownAtom(name.to_string()))?;
            bits |= 1 << i;
        }
        Ok(self.element(bits))
    }

    /// Parses an element literal: `0`, `1`, or a bracketed atom list such as
    /// `[p]` or `[p,q]`.
    pub fn parse_element(&self, text: &str) -> Result<IdElem> {
        let text = text.trim();
        match text {
            "0" => return Ok(self.zero()),
            "1" => return Ok(self.one()),
            _ => {}
        }
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::MalformedElement(text.to_string()))?;
        let names: Vec<&str> = inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        self.from_atom_names(&names)
    }

    /// All `2^k` elements in mask order. Only sensible for small algebras.
    pub fn elements(&self) -> impl Iterator<Item = IdElem> + '_ {
        assert!(
            self.atom_count() < 32,
            "refusing to enumerate 2^{} elements",
            self.atom_count()
        );
        (0..(1u64 << self.atom_count())).map(move |b| self.element(b))
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.atoms == other.0.atoms
    }

    pub fn ensure_same(&self, other: &Algebra) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra{:?}", self.0.atoms)
    }
}

/// An element of a finite boolean algebra: a subset of its atoms.
#[derive(Clone)]
pub struct IdElem {
    alg: Algebra,
    bits: u64,
}

impl IdElem {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == self.alg.full_mask()
    }

    pub fn contains_atom(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// Atom indices in increasing order.
    pub fn atom_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alg.atom_count()).filter(move |&i| self.contains_atom(i))
    }

    pub fn atom_len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn not(&self) -> IdElem {
        self.alg.element(!self.bits)
    }

    /// # Panics
    /// If the operands come from different algebras; use [`ba_apply`] for a
    /// checked version.
    pub fn meet(&self, other: &IdElem) -> IdElem {
        self.check(other);
        self.alg.element(self.bits & other.bits)
    }

    pub fn join(&self, other: &IdElem) -> IdElem {
        self.check(other);
        self.alg.element(self.bits | other.bits)
    }

    pub fn leq(&self, other: &IdElem) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    pub fn disjoint(&self, other: &IdElem) -> bool {
        self.meet(other).is_zero()
    }

    fn check(&self, other: &IdElem) {
        assert!(
            self.alg.same_as(&other.alg),
            "boolean operation across different algebras"
        );
    }

    /// Order used for deterministic witness selection: fewer atoms first,
    /// then lexicographic comparison of the sorted atom index lists.
    pub fn witness_order(&self, other: &IdElem) -> Ordering {
        self.atom_len()
            .cmp(&other.atom_len())
            .then_with(|| self.atom_indices().cmp(other.atom_indices()))
    }

    /// Atom names joined by commas, `1` for the top and `0` for the bottom.
    pub fn bare_text(&self) -> String {
        if self.is_one() {
            "1".into()
        } else if self.is_zero() {
            "0".into()
        } else {
            self.atom_names().join(",")
        }
    }

    pub fn atom_names(&self) -> Vec<&str> {
        self.atom_indices().map(|i| self.alg.atom_name(i)).collect()
    }
}

impl PartialEq for IdElem {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.alg.same_as(&other.alg)
    }
}

impl Eq for IdElem {}

impl Hash for IdElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for IdElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Mask order, used only for keying collections.
impl Ord for IdElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits
            .cmp(&other.bits)
            .then_with(|| self.alg.atoms().cmp(other.alg.atoms()))
    }
}

impl fmt::Display for IdElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "[{}]", self.atom_names().join(","))
        }
    }
}

impl fmt::Debug for IdElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    Not,
    Meet,
    Join,
    BigJoin,
    BigMeet,
}

impl Connective {
    fn name(self) -> &'static str {
        match self {
            Connective::Not => "not",
            Connective::Meet => "meet",
            Connective::Join => "join",
            Connective::BigJoin => "big_join",
            Connective::BigMeet => "big_meet",
        }
    }
}

/// Applies a boolean connective with arity and algebra checks.
///
/// `BigJoin` and `BigMeet` of an empty list need an algebra to land in, so
/// they are resolved against `alg`.
pub fn ba_apply(alg: &Algebra, connective: Connective, operands: &[IdElem]) -> Result<IdElem> {
    for op in operands {
        alg.ensure_same(op.algebra())?;
    }
    let arity = |expected: usize| {
        if operands.len() == expected {
            Ok(())
        } else {
            Err(Error::Arity {
                connective: connective.name(),
                expected,
                got: operands.len(),
            })
        }
    };
    match connective {
        Connective::Not => {
            arity(1)?;
            Ok(operands[0].not())
        }
        Connective::Meet => {
            arity(2)?;
            Ok(operands[0].meet(&operands[1]))
        }
        Connective::Join => {
            arity(2)?;
            Ok(operands[0].join(&operands[1]))
        }
        Connective::BigJoin => Ok(big_join(alg, operands)),
        Connective::BigMeet => {
            Ok(alg.element(operands.iter().fold(alg.full_mask(), |acc, e| acc & e.bits)))
        }
    }
}

pub fn big_join<'a, I>(alg: &Algebra, elems: I) -> IdElem
where
    I: IntoIterator<Item = &'a IdElem>,
{
    alg.element(elems.into_iter().fold(0, |acc, e| acc | e.bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b4() -> Algebra {
        Algebra::new(&["p", "q"]).unwrap()
    }

    #[test]
    fn construction_examples() {
        let b4 = b4();
        assert_eq!(b4.size(), 4);
        let names: Vec<String> = b4.elements().map(|e| e.to_string()).collect();
        assert_eq!(names, ["0", "[p]", "[q]", "1"]);
        assert_eq!(Algebra::new(&["x"]).unwrap().size(), 2);
        assert_eq!(Algebra::new(&["a", "b", "c"]).unwrap().size(), 8);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Algebra::new::<&str>(&[]).unwrap_err(), Error::NoAtoms);
        assert_eq!(
            Algebra::new(&["p", "p"]).unwrap_err(),
            Error::DuplicateAtom("p".into())
        );
        assert_eq!(Algebra::new(&["p", ""]).unwrap_err(), Error::EmptyAtomName);
    }

    #[test]
    fn free_algebras() {
        let f1 = Algebra::free(1).unwrap();
        assert_eq!(f1.size(), 4);
        assert_eq!(f1.generator("g_0").unwrap().atom_len(), 1);
        let f2 = Algebra::free(2).unwrap();
        assert_eq!(f2.size(), 16);
        assert_eq!(f2.generator("g_0").unwrap().atom_len(), 2);
        let g0 = f2.generator("g_0").unwrap();
        let g1 = f2.generator("g_1").unwrap();
        assert_eq!(g0.meet(&g1).atom_len(), 1);
        assert!(matches!(
            Algebra::free(0),
            Err(Error::FreeGeneratorBounds { got: 0, .. })
        ));
        assert!(Algebra::free(5).is_err());
        assert!(Algebra::free_bounded(5, 5).is_ok());
    }

    #[test]
    fn connective_examples() {
        let b4 = b4();
        let p = b4.parse_element("[p]").unwrap();
        let q = b4.parse_element("[q]").unwrap();
        assert!(ba_apply(&b4, Connective::Meet, &[p.clone(), q.clone()])
            .unwrap()
            .is_zero());
        assert!(ba_apply(&b4, Connective::Join, &[p.clone(), q.clone()])
            .unwrap()
            .is_one());
        assert!(ba_apply(&b4, Connective::BigJoin, &[]).unwrap().is_zero());
        assert!(ba_apply(&b4, Connective::BigMeet, &[]).unwrap().is_one());
        assert_eq!(
            ba_apply(&b4, Connective::Not, std::slice::from_ref(&p)).unwrap(),
            q
        );
    }

    #[test]
    fn connective_errors() {
        let b4 = b4();
        let b2 = Algebra::new(&["x"]).unwrap();
        let p = b4.atom(0);
        assert_eq!(
            ba_apply(&b4, Connective::Meet, &[p.clone(), b2.one()]),
            Err(Error::AlgebraMismatch)
        );
        assert!(matches!(
            ba_apply(&b4, Connective::Not, &[p.clone(), p.clone()]),
            Err(Error::Arity {
                expected: 1,
                got: 2,
                ..
            })
        ));
    }

    #[test]
    fn element_literals() {
        let b4 = b4();
        assert_eq!(b4.parse_element("[p,q]").unwrap(), b4.one());
        assert_eq!(b4.parse_element("[]").unwrap(), b4.zero());
        assert_eq!(
            b4.parse_element("[r]").unwrap_err(),
            Error::UnknownAtom("r".into())
        );
        assert!(b4.parse_element("p").is_err());
    }

    #[test]
    fn boolean_axioms_exhaustive() {
        for alg in [
            Algebra::new(&["x"]).unwrap(),
            b4(),
            Algebra::new(&["a", "b", "c", "d"]).unwrap(),
        ] {
            let all: Vec<IdElem> = alg.elements().collect();
            for a in &all {
                assert_eq!(a.not().not(), *a);
                assert!(a.meet(&a.not()).is_zero());
                assert!(a.join(&a.not()).is_one());
                assert_eq!(a.meet(&alg.one()), *a);
                assert_eq!(a.join(&alg.zero()), *a);
                for b in &all {
                    assert_eq!(a.meet(b), b.meet(a));
                    assert_eq!(a.join(&a.meet(b)), *a);
                    assert_eq!(a.join(b).not(), a.not().meet(&b.not()));
                    assert_eq!(a.meet(b).not(), a.not().join(&b.not()));
                    assert_eq!(a.leq(b), a.meet(b) == *a);
                    for c in &all {
                        assert_eq!(a.meet(&b.join(c)), a.meet(b).join(&a.meet(c)));
                        assert_eq!(a.meet(&b.meet(c)), a.meet(b).meet(c));
                    }
                }
            }
        }
    }

    #[test]
    fn witness_order_prefers_small_then_lexicographic() {
        let alg = Algebra::new(&["a", "b", "c"]).unwrap();
        let mut all: Vec<IdElem> = alg.elements().collect();
        all.sort_by(|x, y| x.witness_order(y));
        let text: Vec<String> = all.iter().map(|e| e.to_string()).collect();
        assert_eq!(
            text,
            ["0", "[a]", "[b]", "[c]", "[a,b]", "[a,c]", "[b,c]", "1"]
        );
    }
}
