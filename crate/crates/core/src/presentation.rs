//! Terms over the generators `x_e` and their normal forms.
//!
//! A term is normalized by evaluating it in the orthogonal-form model: each
//! generator becomes `e^⊥`, scalars become constants and the operations are
//! the ring and lattice operations of [`PerpElem`]. The result is the unique
//! full orthogonal decomposition with distinct coefficients, so two terms
//! are equal modulo the defining relators exactly when their normal forms
//! coincide.
//!
//! Grammar (whitespace is insignificant between tokens):
//!
//! ```text
//! expr   := addend (("+" | "-") addend)*
//! addend := power ("*" power)*
//! power  := unary ("^" nat)*
//! unary  := "-" unary | atom
//! atom   := scalar | "x_" name | "(" expr ")"
//!         | "meet(" expr "," expr ")" | "join(" expr "," expr ")"
//! ```

use std::collections::HashMap;
use std::fmt;

use crate::boolalg::{Algebra, IdElem};
use crate::error::{Error, Result};
use crate::perp::PerpElem;
use crate::scalar::Scalar;

/// Prefix marking a generator reference.
pub const GENERATOR_PREFIX: &str = "x_";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term<D> {
    Scalar(D),
    Gen(String),
    Add(Box<Term<D>>, Box<Term<D>>),
    Sub(Box<Term<D>>, Box<Term<D>>),
    Mul(Box<Term<D>>, Box<Term<D>>),
    Neg(Box<Term<D>>),
    Meet(Box<Term<D>>, Box<Term<D>>),
    Join(Box<Term<D>>, Box<Term<D>>),
    Pow(Box<Term<D>>, u32),
}

impl<D: Scalar> fmt::Display for Term<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Scalar(a) => write!(f, "{a}"),
            Term::Gen(name) => write!(f, "{GENERATOR_PREFIX}{name}"),
            Term::Add(a, b) => write!(f, "({a} + {b})"),
            Term::Sub(a, b) => write!(f, "({a} - {b})"),
            Term::Mul(a, b) => write!(f, "({a} * {b})"),
            Term::Neg(a) => write!(f, "-({a})"),
            Term::Meet(a, b) => write!(f, "meet({a}, {b})"),
            Term::Join(a, b) => write!(f, "join({a}, {b})"),
            // Bases other than generators are parenthesized so `-x^2` and `1/2^2` round-trip.
            Term::Pow(a, n) if matches!(**a, Term::Gen(_)) => write!(f, "{a}^{n}"),
            Term::Pow(a, n) => write!(f, "({a})^{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Scalar(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let den = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if den == i {
                        return Err(syntax(i, "expected denominator digits"));
                    }
                }
                out.push((start, Tok::Scalar(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<D> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    _domain: std::marker::PhantomData<D>,
}

impl<D: Scalar> Parser<D> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].1.clone();
        if tok != Tok::End {
            self.at += 1;
        }
        tok
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Term<D>> {
        let mut lhs = self.addend()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Term::Add(Box::new(lhs), Box::new(self.addend()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Term::Sub(Box::new(lhs), Box::new(self.addend()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn addend(&mut self) -> Result<Term<D>> {
        let mut lhs = self.power()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Term::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Term<D>> {
        let mut base = self.unary()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Scalar(digits) if !digits.contains('/') => {
                    let n = digits
                        .parse::<u32>()
                        .map_err(|_| syntax(pos, "exponent too large"))?;
                    base = Term::Pow(Box::new(base), n);
                }
                _ => return Err(syntax(pos, "expected a natural-number exponent")),
            }
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Term<D>> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Term::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Term<D>> {
        let pos = self.pos();
        match self.bump() {
            Tok::Scalar(text) => Ok(Term::Scalar(
                D::parse(&text).map_err(|e| syntax(pos, e.to_string()))?,
            )),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "meet" || name == "join" => {
                self.expect(Tok::LParen, "'(' after lattice operator")?;
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(if name == "meet" {
                    Term::Meet(Box::new(a), Box::new(b))
                } else {
                    Term::Join(Box::new(a), Box::new(b))
                })
            }
            Tok::Ident(name) => match name.strip_prefix(GENERATOR_PREFIX) {
                Some(gen) if !gen.is_empty() => Ok(Term::Gen(gen.to_string())),
                _ => Err(syntax(pos, format!("unknown identifier {name:?}"))),
            },
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            other => Err(syntax(pos, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a term. Error positions are byte offsets into `text`.
pub fn parse_term<D: Scalar>(text: &str) -> Result<Term<D>> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        at: 0,
        _domain: std::marker::PhantomData,
    };
    let term = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(syntax(parser.pos(), "trailing input"));
    }
    Ok(term)
}

/// Names usable after `x_`.
#[derive(Clone, Debug)]
pub struct Binding {
    names: HashMap<String, IdElem>,
}

impl Binding {
    pub fn empty() -> Self {
        Binding {
            names: HashMap::new(),
        }
    }

    /// Atom names, free generators (if any), and `0`/`1`.
    pub fn default_for(alg: &Algebra) -> Self {
        let mut names: HashMap<String, IdElem> = (0..alg.atom_count())
            .map(|i| (alg.atom_name(i).to_string(), alg.atom(i)))
            .collect();
        for (name, e) in alg.generators() {
            names.insert(name.to_string(), e);
        }
        names.insert("0".into(), alg.zero());
        names.insert("1".into(), alg.one());
        Binding { names }
    }

    pub fn bind(&mut self, name: impl Into<String>, e: IdElem) -> &mut Self {
        self.names.insert(name.into(), e);
        self
    }

    pub fn get(&self, name: &str) -> Option<&IdElem> {
        self.names.get(name)
    }
}

/// Evaluates `term` to its canonical orthogonal normal form.
pub fn normalize_term<D: Scalar>(
    term: &Term<D>,
    alg: &Algebra,
    binding: &Binding,
) -> Result<PerpElem<D>> {
    let go = |t: &Term<D>| normalize_term(t, alg, binding);
    match term {
        Term::Scalar(a) => Ok(PerpElem::constant(alg, a.clone())),
        Term::Gen(name) => {
            let e = binding
                .get(name)
                .ok_or_else(|| Error::UnboundName(name.clone()))?;
            alg.ensure_same(e.algebra())?;
            Ok(PerpElem::idempotent(e))
        }
        Term::Add(a, b) => go(a)?.add(&go(b)?),
        Term::Sub(a, b) => go(a)?.sub(&go(b)?),
        Term::Mul(a, b) => go(a)?.mul(&go(b)?),
        Term::Neg(a) => Ok(go(a)?.neg()),
        Term::Meet(a, b) => go(a)?.meet(&go(b)?),
        Term::Join(a, b) => go(a)?.join(&go(b)?),
        Term::Pow(a, n) => {
            let base = go(a)?;
            let mut acc = PerpElem::one(alg);
            for _ in 0..*n {
                acc = acc.mul(&base)?;
            }
            Ok(acc)
        }
    }
}

/// Parses and normalizes with the default binding of `alg`.
pub fn normalize_text<D: Scalar>(text: &str, alg: &Algebra) -> Result<PerpElem<D>> {
    normalize_term(&parse_term(text)?, alg, &Binding::default_for(alg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Int, Rat};

    fn b4() -> Algebra {
        Algebra::new(&["p", "q"]).unwrap()
    }

    fn g(name: &str) -> Box<Term<Int>> {
        Box::new(Term::Gen(name.into()))
    }

    fn c(v: i64) -> Box<Term<Int>> {
        Box::new(Term::Scalar(Int::from(v)))
    }

    #[test]
    fn parse_examples() {
        let t: Term<Int> = parse_term("x_p * x_p + 3*x_q - x_p").unwrap();
        let expected = Term::Sub(
            Box::new(Term::Add(
                Box::new(Term::Mul(g("p"), g("p"))),
                Box::new(Term::Mul(c(3), g("q"))),
            )),
            g("p"),
        );
        assert_eq!(t, expected);
        assert_eq!(
            parse_term::<Int>("meet(x_p, 2)").unwrap(),
            Term::Meet(g("p"), c(2))
        );
        assert!(matches!(
            parse_term::<Int>("x_p ^"),
            Err(Error::Syntax { pos: 5, .. })
        ));
    }

    #[test]
    fn precedence() {
        // unary minus binds tighter than ^, which binds tighter than *.
        assert_eq!(
            parse_term::<Int>("-x_p^2").unwrap(),
            Term::Pow(Box::new(Term::Neg(g("p"))), 2)
        );
        assert_eq!(
            parse_term::<Int>("2*x_p^3").unwrap(),
            Term::Mul(c(2), Box::new(Term::Pow(g("p"), 3)))
        );
        assert_eq!(
            parse_term::<Int>("1 - 2 - 3").unwrap(),
            Term::Sub(Box::new(Term::Sub(c(1), c(2))), c(3))
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("", 0),
            ("x_p +", 5),
            ("(x_p", 4),
            ("x_p )", 4),
            ("y", 0),
            ("x_", 0),
            ("meet(x_p)", 8),
            ("x_p # 2", 4),
            ("x_p ^ x_q", 6),
            ("3/", 2),
        ];
        for (text, pos) in cases {
            match parse_term::<Int>(text) {
                Err(Error::Syntax { pos: got, .. }) => assert_eq!(got, pos, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let alg = b4();
        let n = normalize_text::<Int>("x_p * x_q", &alg).unwrap();
        assert_eq!(n, PerpElem::zero(&alg));
        let n = normalize_text::<Int>("x_p * x_p + 3*x_q - x_p", &alg).unwrap();
        assert_eq!(n.to_text(), "3·[q] + 0·[p]");
        let n = normalize_text::<Int>("1 - x_p", &alg).unwrap();
        assert_eq!(n.to_text(), "1·[q] + 0·[p]");
    }

    #[test]
    fn unbound_names() {
        let alg = b4();
        assert_eq!(
            normalize_text::<Int>("x_r + 1", &alg).unwrap_err(),
            Error::UnboundName("r".into())
        );
        let t = parse_term::<Int>("x_p").unwrap();
        assert!(normalize_term(&t, &alg, &Binding::empty()).is_err());
    }

    #[test]
    fn lattice_terms_and_powers() {
        let alg = b4();
        let n = normalize_text::<Int>("join(2*x_p, x_q) - meet(x_p, 3)", &alg).unwrap();
        assert_eq!(n.to_text(), "1·1");
        assert_eq!(
            normalize_text::<Int>("(x_p + 1)^0", &alg).unwrap(),
            PerpElem::one(&alg)
        );
        assert_eq!(
            normalize_text::<Int>("(2*x_p)^3", &alg).unwrap(),
            normalize_text::<Int>("8*x_p", &alg).unwrap()
        );
    }

    #[test]
    fn rational_literals_and_free_generators() {
        let alg = Algebra::free(2).unwrap();
        let n = normalize_text::<Rat>("1/2*x_g_0 + 1/2*x_g_1", &alg).unwrap();
        assert_eq!(n.values().count(), 3);
        assert!(normalize_text::<Int>("1/2*x_g_0", &alg).is_err());
    }
}
