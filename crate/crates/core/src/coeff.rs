//! Coefficient rings: exact rationals and polynomials in a formal parameter `t`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Commutative coefficient ring with unit, containing the rationals.
pub trait Coefficient:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + 'static
{
    fn from_rational(r: Rational) -> Self;

    /// Multiply by a rational scalar.
    fn scale(&self, r: &Rational) -> Self;

    fn times(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out *= other;
        out
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }
}

impl Coefficient for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"` or `"p/q"`, rejecting anything that is not already in lowest
/// terms with a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::input(format!("malformed rational {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(bad());
        }
        if t.starts_with('-') && digits == "0" {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            if d.starts_with('-') {
                return Err(bad());
            }
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() || den.is_one() {
                return Err(bad());
            }
            let r = Rational::new(num.clone(), den.clone());
            if *r.numer() != num || *r.denom() != den {
                return Err(Error::input(format!("rational {s:?} is not in lowest terms")));
            }
            Ok(r)
        }
    }
}

/// Polynomial in the formal parameter `t` with rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyT {
    terms: Vec<(Rational, u32)>,
}

impl PolyT {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exponent: u32) -> Self {
        if c.is_zero() {
            PolyT::default()
        } else {
            PolyT {
                terms: vec![(c, exponent)],
            }
        }
    }

    /// Build from arbitrary `(coefficient, exponent)` pairs, merging and
    /// dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (Rational, u32)>) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_by_key(|(_, e)| *e);
        let mut terms: Vec<(Rational, u32)> = Vec::with_capacity(pairs.len());
        for (c, e) in pairs {
            match terms.last_mut() {
                Some((acc, last)) if *last == e => *acc += c,
                _ => terms.push((c, e)),
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        PolyT { terms }
    }

    /// Strict constructor: input must already be normalized.
    pub fn from_normalized(terms: Vec<(Rational, u32)>) -> Result<Self> {
        if terms.iter().any(|(c, _)| c.is_zero()) {
            return Err(Error::input("zero coefficient in t-polynomial"));
        }
        if terms.windows(2).any(|w| w[0].1 >= w[1].1) {
            return Err(Error::input("t-polynomial exponents must be strictly increasing"));
        }
        Ok(PolyT { terms })
    }

    pub fn terms(&self) -> &[(Rational, u32)] {
        &self.terms
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(_, e)| *e)
    }

    pub fn coeff(&self, exponent: u32) -> Rational {
        self.terms
            .iter()
            .find(|(_, e)| *e == exponent)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn derivative(&self) -> Self {
        PolyT {
            terms: self
                .terms
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(c, e)| (c * integer(*e as i64), e - 1))
                .collect(),
        }
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (c, e) in &self.terms {
            acc += c * num_traits::pow(t.clone(), *e as usize);
        }
        acc
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len() || (i < self.terms.len() && self.terms[i].1 < other.terms[j].1);
            let take_right = i >= self.terms.len() || (j < other.terms.len() && other.terms[j].1 < self.terms[i].1);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (c, e) = &other.terms[j];
                out.push((if sign < 0 { -c } else { c.clone() }, *e));
                j += 1;
            } else {
                let e = self.terms[i].1;
                let c = if sign < 0 {
                    &self.terms[i].0 - &other.terms[j].0
                } else {
                    &self.terms[i].0 + &other.terms[j].0
                };
                if !c.is_zero() {
                    out.push((c, e));
                }
                i += 1;
                j += 1;
            }
        }
        PolyT { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.terms.is_empty() || other.terms.is_empty() {
            return PolyT::default();
        }
        PolyT::from_terms(
            self.terms
                .iter()
                .flat_map(|(a, e)| other.terms.iter().map(move |(b, f)| (a * b, e + f))),
        )
    }
}

impl fmt::Debug for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyT({self})")
    }
}

/// Renders as e.g. `1 + 1/2*t - 3*t^2`.
impl fmt::Display for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, e)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for PolyT {
    type Output = PolyT;
    fn add(self, rhs: PolyT) -> PolyT {
        self.combine(&rhs, 1)
    }
}

impl Sub for PolyT {
    type Output = PolyT;
    fn sub(self, rhs: PolyT) -> PolyT {
        self.combine(&rhs, -1)
    }
}

impl Mul for PolyT {
    type Output = PolyT;
    fn mul(self, rhs: PolyT) -> PolyT {
        self.product(&rhs)
    }
}

impl Neg for PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT {
            terms: self.terms.into_iter().map(|(c, e)| (-c, e)).collect(),
        }
    }
}

impl<'a> AddAssign<&'a PolyT> for PolyT {
    fn add_assign(&mut self, rhs: &'a PolyT) {
        *self = self.combine(rhs, 1);
    }
}

impl<'a> SubAssign<&'a PolyT> for PolyT {
    fn sub_assign(&mut self, rhs: &'a PolyT) {
        *self = self.combine(rhs, -1);
    }
}

impl<'a> MulAssign<&'a PolyT> for PolyT {
    fn mul_assign(&mut self, rhs: &'a PolyT) {
        *self = self.product(rhs);
    }
}

impl Zero for PolyT {
    fn zero() -> Self {
        PolyT::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PolyT {
    fn one() -> Self {
        PolyT::constant(Rational::one())
    }
}

impl Coefficient for PolyT {
    fn from_rational(r: Rational) -> Self {
        PolyT::constant(r)
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return PolyT::default();
        }
        PolyT {
            terms: self.terms.iter().map(|(c, e)| (c * r, *e)).collect(),
        }
    }

    fn times(&self, other: &Self) -> Self {
        self.product(other)
    }
}
