//! Truncated non-commutative power series over a finite alphabet.
//!
//! A [`TruncatedSeries`] stores the coefficients of all words of length at
//! most its truncation degree `N`; every operation discards words longer
//! than `N`. Because all identities of the ring hold degree by degree, the
//! results are exact up to `N`.

mod compose;
mod exp;
pub(crate) mod kernel;
mod prelie;
mod product;

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coefficient, PolyT, Rational};
use crate::combinatorics::Word;
use crate::error::{Error, Result};

pub use compose::compose_univariate;

/// Membership of a series in the distinguished subsets of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesClass {
    /// Constant term 1.
    G1,
    /// Constant term 0.
    G0,
    /// Constant term 0 and every single-letter coefficient 1.
    Gc,
    General,
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coefficient = Rational> {
    alphabet: usize,
    degree: usize,
    // the unit word holds the constant term; zeros are never stored
    coeffs: BTreeMap<Word, C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// The zero series over `alphabet` letters truncated at `degree`.
    pub fn zero(alphabet: usize, degree: usize) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::input("alphabet size must be positive"));
        }
        if degree == 0 {
            return Err(Error::input("truncation degree must be positive"));
        }
        if alphabet > u32::MAX as usize {
            return Err(Error::input("alphabet too large"));
        }
        Ok(TruncatedSeries {
            alphabet,
            degree,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(alphabet: usize, degree: usize) -> Result<Self> {
        Self::constant(alphabet, degree, C::one())
    }

    pub fn constant(alphabet: usize, degree: usize, c: C) -> Result<Self> {
        let mut s = Self::zero(alphabet, degree)?;
        s.set(Word::unit(), c)?;
        Ok(s)
    }

    /// The monomial `x_a`.
    pub fn letter(alphabet: usize, degree: usize, a: u32) -> Result<Self> {
        let mut s = Self::zero(alphabet, degree)?;
        s.set(Word::new(vec![a])?, C::one())?;
        Ok(s)
    }

    /// Build from `(letters, coefficient)` pairs; repeated words accumulate
    /// and the empty letter list addresses the constant term.
    pub fn from_pairs(alphabet: usize, degree: usize, pairs: impl IntoIterator<Item = (Vec<u32>, C)>) -> Result<Self> {
        let mut s = Self::zero(alphabet, degree)?;
        for (letters, c) in pairs {
            let w = Word::new(letters)?;
            s.check_word(&w)?;
            kernel::add_into(&mut s.coeffs, w, c);
        }
        Ok(s)
    }

    /// Univariate series `Σ coeffs[k] x^k`.
    pub fn univariate(degree: usize, coeffs: &[C]) -> Result<Self> {
        Self::from_pairs(
            1,
            degree,
            coeffs.iter().enumerate().map(|(k, c)| (vec![1; k], c.clone())),
        )
    }

    pub(crate) fn from_map_unchecked(alphabet: usize, degree: usize, coeffs: BTreeMap<Word, C>) -> Self {
        debug_assert!(coeffs.iter().all(|(w, c)| w.len() <= degree && !c.is_zero()));
        TruncatedSeries {
            alphabet,
            degree,
            coeffs,
        }
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() > self.degree {
            return Err(Error::input(format!("word {w} longer than truncation {}", self.degree)));
        }
        if w.max_letter() as usize > self.alphabet {
            return Err(Error::input(format!(
                "word {w} uses letters beyond alphabet {}",
                self.alphabet
            )));
        }
        Ok(())
    }

    /// Overwrite one coefficient.
    pub fn set(&mut self, w: Word, c: C) -> Result<()> {
        self.check_word(&w)?;
        if c.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
        Ok(())
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Word::unit())
    }

    pub fn coefficient(&self, w: &Word) -> C {
        self.coeffs.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Non-zero coefficients in canonical word order, constant first.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.coeffs.iter()
    }

    /// Non-zero coefficients of non-empty words.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.coeffs.iter().filter(|(w, _)| !w.is_unit())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn class(&self) -> SeriesClass {
        let c = self.constant_term();
        if c.is_one() {
            SeriesClass::G1
        } else if c.is_zero() {
            let tangent = (1..=self.alphabet as u32).all(|a| self.coefficient(&Word::letter(a)).is_one());
            if tangent {
                SeriesClass::Gc
            } else {
                SeriesClass::G0
            }
        } else {
            SeriesClass::General
        }
    }

    pub fn is_group_like(&self) -> bool {
        self.constant_term().is_one()
    }

    pub fn is_lie_like(&self) -> bool {
        self.constant_term().is_zero()
    }

    pub(crate) fn require_g1(&self, what: &str) -> Result<()> {
        if self.is_group_like() {
            Ok(())
        } else {
            Err(Error::domain(format!("{what} requires constant term 1")))
        }
    }

    pub(crate) fn require_g0(&self, what: &str) -> Result<()> {
        if self.is_lie_like() {
            Ok(())
        } else {
            Err(Error::domain(format!("{what} requires constant term 0")))
        }
    }

    pub(crate) fn require_same_shape(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet || self.degree != other.degree {
            return Err(Error::input(format!(
                "shape mismatch: (d={}, N={}) vs (d={}, N={})",
                self.alphabet, self.degree, other.alphabet, other.degree
            )));
        }
        Ok(())
    }

    /// Drop every word longer than `m` and record `m` as the new truncation.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.degree {
            return Err(Error::input(format!(
                "cannot truncate degree {} series to {m}",
                self.degree
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(w, _)| w.len() <= m)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Ok(TruncatedSeries {
            alphabet: self.alphabet,
            degree: m,
            coeffs,
        })
    }

    /// Same coefficients, larger alphabet or truncation.
    pub fn widen(&self, alphabet: usize, degree: usize) -> Result<Self> {
        if alphabet < self.alphabet || degree < self.degree {
            return Err(Error::input("widen cannot shrink a series"));
        }
        Ok(TruncatedSeries {
            alphabet,
            degree,
            coeffs: self.coeffs.clone(),
        })
    }

    /// Homogeneous component of degree `n`.
    pub fn homogeneous(&self, n: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(w, _)| w.len() == n)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        TruncatedSeries {
            alphabet: self.alphabet,
            degree: self.degree,
            coeffs,
        }
    }

    /// Least degree with a non-zero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.keys().next().map(Word::len)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        let mut coeffs = self.coeffs.clone();
        for (w, c) in &other.coeffs {
            kernel::add_into(&mut coeffs, w.clone(), c.clone());
        }
        Ok(TruncatedSeries {
            coeffs,
            ..self.empty_like()
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        let mut coeffs = self.coeffs.clone();
        for (w, c) in &other.coeffs {
            kernel::add_into(&mut coeffs, w.clone(), -c.clone());
        }
        Ok(TruncatedSeries {
            coeffs,
            ..self.empty_like()
        })
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(w, c)| (w.clone(), -c.clone())).collect();
        TruncatedSeries {
            coeffs,
            ..self.empty_like()
        }
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coefficients(|c| c.scale(r))
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale_by(&self, k: &C) -> Self {
        self.map_coefficients(|c| c.times(k))
    }

    /// Apply `f` coefficient-wise, dropping results that vanish.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(w, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (w.clone(), d))
            })
            .collect();
        TruncatedSeries {
            alphabet: self.alphabet,
            degree: self.degree,
            coeffs,
        }
    }

    /// Add a constant to the constant term.
    pub fn add_constant(&self, c: &C) -> Self {
        let mut coeffs = self.coeffs.clone();
        kernel::add_into(&mut coeffs, Word::unit(), c.clone());
        TruncatedSeries {
            coeffs,
            ..self.empty_like()
        }
    }

    /// `self − constant term`.
    pub fn without_constant(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.remove(&Word::unit());
        TruncatedSeries {
            coeffs,
            ..self.empty_like()
        }
    }

    /// First word (canonical order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<Word> {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .filter(|w| self.coefficient(w) != other.coefficient(w))
            .min()
            .cloned()
    }

    /// Coefficients `c_0..c_N` of a univariate series.
    pub fn univariate_coefficients(&self) -> Result<Vec<C>> {
        if self.alphabet != 1 {
            return Err(Error::domain("univariate view needs alphabet size 1"));
        }
        Ok((0..=self.degree)
            .map(|k| self.coefficient(&Word::from_vec_unchecked(vec![1; k])))
            .collect())
    }

    fn empty_like(&self) -> Self {
        TruncatedSeries {
            alphabet: self.alphabet,
            degree: self.degree,
            coeffs: BTreeMap::new(),
        }
    }
}

impl TruncatedSeries<Rational> {
    /// Embed into `ℚ[t]` coefficients.
    pub fn to_poly_t(&self) -> TruncatedSeries<PolyT> {
        self.map_coefficients(|c| PolyT::constant(c.clone()))
    }
}

impl TruncatedSeries<PolyT> {
    /// Formal derivative in `t`, coefficient-wise.
    pub fn t_derivative(&self) -> Self {
        self.map_coefficients(PolyT::derivative)
    }

    /// Substitute a rational value for `t`.
    pub fn specialize(&self, t: &Rational) -> TruncatedSeries<Rational> {
        self.map_coefficients(|p| p.eval(t))
    }
}

impl<C: Coefficient> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(d={}, N={}; {self})", self.alphabet, self.degree)
    }
}

/// Renders as `1 + 2*x1 - 1/2*x1x2`, or `0`.
impl<C: Coefficient> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let monomial: String = w.letters().iter().map(|a| format!("x{a}")).collect();
            match (w.is_unit(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{monomial}")?,
                (false, false) => write!(f, "({c})*{monomial}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::coeff::{integer, rational};

    pub(crate) fn ser(d: usize, n: usize, terms: &[(&[u32], i64)]) -> TruncatedSeries {
        TruncatedSeries::from_pairs(d, n, terms.iter().map(|(w, c)| (w.to_vec(), integer(*c)))).unwrap()
    }

    pub(crate) fn uni(n: usize, coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::univariate(n, &coeffs.iter().map(|&c| integer(c)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn construction_validates_shape() {
        assert!(TruncatedSeries::<Rational>::zero(0, 3).is_err());
        assert!(TruncatedSeries::<Rational>::zero(2, 0).is_err());
        let bad_letter = TruncatedSeries::from_pairs(2, 3, [(vec![3], integer(1))]);
        assert!(matches!(bad_letter, Err(Error::Input(_))));
        let too_long = TruncatedSeries::from_pairs(2, 1, [(vec![1, 1], integer(1))]);
        assert!(too_long.is_err());
    }

    #[test]
    fn zeros_are_not_stored() {
        let s = TruncatedSeries::from_pairs(1, 2, [(vec![1], integer(2)), (vec![1], integer(-2))]).unwrap();
        assert!(s.is_zero());
        assert_eq!(s, TruncatedSeries::zero(1, 2).unwrap());
    }

    #[test]
    fn classes() {
        assert_eq!(ser(2, 2, &[(&[], 1), (&[1], 3)]).class(), SeriesClass::G1);
        assert_eq!(ser(2, 2, &[(&[1], 3)]).class(), SeriesClass::G0);
        assert_eq!(
            ser(2, 2, &[(&[1], 1), (&[2], 1), (&[1, 2], 5)]).class(),
            SeriesClass::Gc
        );
        assert_eq!(ser(2, 2, &[(&[], 2)]).class(), SeriesClass::General);
    }

    #[test]
    fn linear_structure() {
        let a = ser(2, 3, &[(&[], 1), (&[1], 2)]);
        let b = ser(2, 3, &[(&[1], -2), (&[2, 1], 1)]);
        let s = a.try_add(&b).unwrap();
        assert_eq!(s, ser(2, 3, &[(&[], 1), (&[2, 1], 1)]));
        assert_eq!(s.try_sub(&b).unwrap(), a);
        assert_eq!(a.scale(&rational(1, 2)).coefficient(&Word::letter(1)), integer(1));
        assert!(a.try_add(&ser(2, 2, &[])).is_err());
        assert_eq!(a.first_difference(&s), Some(Word::letter(1)));
    }

    #[test]
    fn truncation_and_views() {
        let s = uni(4, &[1, 2, 3, 4, 5]);
        assert_eq!(s.truncate(2).unwrap(), uni(2, &[1, 2, 3]));
        assert_eq!(s.homogeneous(3).univariate_coefficients().unwrap()[3], integer(4));
        assert_eq!(s.order(), Some(0));
        assert_eq!(s.to_string(), "(1) + (2)*x1 + (3)*x1x1 + (4)*x1x1x1 + (5)*x1x1x1x1");
    }
}
