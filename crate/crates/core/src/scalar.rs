//! Coefficient domains.
//!
//! Every construction in the crate is generic over a totally ordered
//! integral domain `D`. Two domains are provided: arbitrary-precision
//! integers ([`Int`]) and rationals over them ([`Rat`]). Arithmetic is exact
//! in both; rationals are always kept in lowest terms with a positive
//! denominator (this is what `num_rational::Ratio::new` guarantees).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// A totally ordered integral domain with exact arithmetic.
pub trait Scalar: Clone + Ord + Hash + Debug + Display + Signed + Send + Sync + 'static {
    /// Short name used in reports and on the command line.
    const DOMAIN: &'static str;

    fn from_i64(value: i64) -> Self;

    /// Parses the literal syntax `-?digits(/digits)?`.
    fn parse(text: &str) -> Result<Self>;

    fn min_of(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn max_of(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }
}

/// Splits a literal into (numerator, optional denominator) after checking the
/// surface syntax. The numerator keeps its sign.
fn split_literal(text: &str) -> Result<(BigInt, Option<BigInt>)> {
    let malformed = || Error::MalformedScalar(text.to_string());
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num_text.strip_prefix('-').unwrap_or(num_text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let numerator: BigInt = num_text.parse().map_err(|_| malformed())?;
    let denominator = match den_text {
        None => None,
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let d: BigInt = d.parse().map_err(|_| malformed())?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            Some(d)
        }
    };
    Ok((numerator, denominator))
}

impl Scalar for Int {
    const DOMAIN: &'static str = "int";

    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }

    fn parse(text: &str) -> Result<Self> {
        match split_literal(text)? {
            (n, None) => Ok(n),
            (n, Some(d)) => {
                let r = BigRational::new(n, d);
                if r.is_integer() {
                    Ok(r.to_integer())
                } else {
                    Err(Error::NotAnInteger(text.to_string()))
                }
            }
        }
    }
}

impl Scalar for Rat {
    const DOMAIN: &'static str = "rat";

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn parse(text: &str) -> Result<Self> {
        let (n, d) = split_literal(text)?;
        Ok(BigRational::new(n, d.unwrap_or_else(BigInt::one)))
    }
}

/// Parses a scalar literal in the domain `D`.
pub fn parse_scalar<D: Scalar>(text: &str) -> Result<D> {
    D::parse(text)
}

/// Canonical text: integers as decimal, rationals as `p/q` or `p` when whole.
pub fn scalar_text<D: Scalar>(value: &D) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse_scalar::<Int>("0").unwrap(), Int::zero());
        assert_eq!(parse_scalar::<Int>("-3").unwrap(), Int::from(-3));
        assert_eq!(parse_scalar::<Rat>("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_scalar::<Rat>("4/6").unwrap(), rat(2, 3));
    }

    #[test]
    fn gcd_normalization_matches_independent_reduction() {
        for n in -12i64..=12 {
            for d in 1i64..=12 {
                let parsed = parse_scalar::<Rat>(&format!("{n}/{d}")).unwrap();
                let g = n.gcd(&d);
                assert_eq!(parsed.numer(), &BigInt::from(n / g));
                assert_eq!(parsed.denom(), &BigInt::from(d / g));
                assert!(parsed.denom().is_positive());
            }
        }
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in [
            "", "-", "+3", " 3", "3 ", "1/", "/2", "1/-2", "1.5", "--1", "1/2/3", "x",
        ] {
            assert!(
                matches!(parse_scalar::<Rat>(bad), Err(Error::MalformedScalar(_))),
                "{bad:?}"
            );
        }
        assert_eq!(
            parse_scalar::<Rat>("1/0"),
            Err(Error::ZeroDenominator("1/0".into()))
        );
        assert_eq!(
            parse_scalar::<Int>("1/2"),
            Err(Error::NotAnInteger("1/2".into()))
        );
        assert_eq!(parse_scalar::<Int>("6/3").unwrap(), Int::from(2));
    }

    #[test]
    fn ring_and_order_axioms_on_a_bounded_set() {
        let set: Vec<Rat> = [(-3, 1), (-1, 2), (0, 1), (1, 3), (2, 1), (5, 4)]
            .iter()
            .map(|&(n, d)| rat(n, d))
            .collect();
        for a in &set {
            for b in &set {
                assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                if (a.clone() * b.clone()).is_zero() {
                    assert!(a.is_zero() || b.is_zero());
                }
                assert!(Rat::min_of(a, b) <= Rat::max_of(a, b));
                for c in &set {
                    let abc = (a.clone() + b.clone()) + c.clone();
                    assert_eq!(abc, a.clone() + (b.clone() + c.clone()));
                    assert_eq!(
                        a.clone() * (b.clone() + c.clone()),
                        a.clone() * b.clone() + a.clone() * c.clone()
                    );
                    if a <= b {
                        assert!(a.clone() + c.clone() <= b.clone() + c.clone());
                    }
                    if a < b && c.is_positive() {
                        assert!(a.clone() * c.clone() < b.clone() * c.clone());
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn rational_text_round_trips(n in -1000i64..1000, d in 1i64..1000) {
            let r = rat(n, d);
            let text = scalar_text(&r);
            prop_assert_eq!(parse_scalar::<Rat>(&text).unwrap(), r);
        }

        #[test]
        fn integer_text_round_trips(n in any::<i64>()) {
            let i = Int::from(n);
            prop_assert_eq!(parse_scalar::<Int>(&scalar_text(&i)).unwrap(), i);
        }
    }
}
