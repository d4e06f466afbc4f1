use std::collections::BTreeMap;

use crate::coeff::{Coefficient, Rational};
use crate::combinatorics::{tensor_words_up_to, TensorWord, Word};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// A scalar-valued functional on tensor words of bounded total degree.
pub trait Functional<C: Coefficient>: Sync {
    fn alphabet(&self) -> usize;
    fn degree(&self) -> usize;
    fn value(&self, tw: &TensorWord) -> C;

    fn unit_value(&self) -> C {
        self.value(&TensorWord::unit())
    }

    fn word_value(&self, w: &Word) -> C {
        self.value(&TensorWord::single(w.clone()))
    }
}

pub(crate) fn require_same_shape<C: Coefficient>(a: &impl Functional<C>, b: &impl Functional<C>) -> Result<()> {
    if a.alphabet() != b.alphabet() || a.degree() != b.degree() {
        return Err(Error::input(format!(
            "form shape mismatch: (d={}, N={}) vs (d={}, N={})",
            a.alphabet(),
            a.degree(),
            b.alphabet(),
            b.degree()
        )));
    }
    Ok(())
}

fn check_shape(alphabet: usize, degree: usize) -> Result<()> {
    if alphabet == 0 || degree == 0 {
        return Err(Error::input("alphabet size and degree must be positive"));
    }
    Ok(())
}

/// General linear form, stored on every tensor word of total degree `≤ N`
/// where it is non-zero (the empty tensor carries the unit value).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm<C: Coefficient = Rational> {
    alphabet: usize,
    degree: usize,
    values: BTreeMap<TensorWord, C>,
}

impl<C: Coefficient> LinearForm<C> {
    pub fn zero(alphabet: usize, degree: usize) -> Result<Self> {
        check_shape(alphabet, degree)?;
        Ok(LinearForm {
            alphabet,
            degree,
            values: BTreeMap::new(),
        })
    }

    /// The convolution unit `ε_A`: 1 on the empty tensor, 0 elsewhere.
    pub fn counit(alphabet: usize, degree: usize) -> Result<Self> {
        let mut f = Self::zero(alphabet, degree)?;
        f.values.insert(TensorWord::unit(), C::one());
        Ok(f)
    }

    pub fn set(&mut self, tw: TensorWord, c: C) -> Result<()> {
        if tw.degree() > self.degree || tw.max_letter() as usize > self.alphabet {
            return Err(Error::input(format!(
                "tensor word {tw} outside (d={}, N={})",
                self.alphabet, self.degree
            )));
        }
        if c.is_zero() {
            self.values.remove(&tw);
        } else {
            self.values.insert(tw, c);
        }
        Ok(())
    }

    /// Tabulate any functional on all tensor words of its degree range.
    pub fn materialize(f: &impl Functional<C>) -> Self {
        let values = tensor_words_up_to(f.alphabet(), f.degree())
            .into_iter()
            .filter_map(|tw| {
                let c = f.value(&tw);
                (!c.is_zero()).then_some((tw, c))
            })
            .collect();
        LinearForm {
            alphabet: f.alphabet(),
            degree: f.degree(),
            values,
        }
    }

    pub(crate) fn from_values_unchecked(alphabet: usize, degree: usize, values: BTreeMap<TensorWord, C>) -> Self {
        LinearForm {
            alphabet,
            degree,
            values,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TensorWord, &C)> {
        self.values.iter()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self> {
        require_same_shape(self, other)?;
        let mut values = self.values.clone();
        for (tw, c) in &other.values {
            let entry = values.entry(tw.clone()).or_insert_with(C::zero);
            if subtract {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        values.retain(|_, c| !c.is_zero());
        Ok(LinearForm {
            values,
            ..self.clone_shape()
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let values = self
            .values
            .iter()
            .map(|(tw, c)| (tw.clone(), c.scale(r)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LinearForm {
            values,
            ..self.clone_shape()
        }
    }

    /// Whether the form vanishes on the unit and on all multi-factor tensors.
    pub fn is_infinitesimal(&self) -> bool {
        self.values.keys().all(|tw| tw.num_factors() == 1)
    }

    /// Whether the form is unital and multiplicative on every stored tensor.
    pub fn is_character(&self) -> bool {
        if !self.unit_value().is_one() {
            return false;
        }
        tensor_words_up_to(self.alphabet, self.degree)
            .iter()
            .filter(|tw| tw.num_factors() >= 2)
            .all(|tw| {
                let product = tw
                    .factors()
                    .iter()
                    .fold(C::one(), |acc, w| acc.times(&self.word_value(w)));
                product == self.value(tw)
            })
    }

    /// First tensor word where two forms differ.
    pub fn first_difference(&self, other: &Self) -> Option<TensorWord> {
        self.values
            .keys()
            .chain(other.values.keys())
            .filter(|tw| self.value(tw) != other.value(tw))
            .min()
            .cloned()
    }

    fn clone_shape(&self) -> Self {
        LinearForm {
            alphabet: self.alphabet,
            degree: self.degree,
            values: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> Functional<C> for LinearForm<C> {
    fn alphabet(&self) -> usize {
        self.alphabet
    }
    fn degree(&self) -> usize {
        self.degree
    }
    fn value(&self, tw: &TensorWord) -> C {
        self.values.get(tw).cloned().unwrap_or_else(C::zero)
    }
}

fn word_map_from_series<C: Coefficient>(s: &TruncatedSeries<C>) -> BTreeMap<Word, C> {
    s.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

fn series_from_word_map<C: Coefficient>(
    alphabet: usize,
    degree: usize,
    constant: C,
    words: &BTreeMap<Word, C>,
) -> TruncatedSeries<C> {
    let mut map: BTreeMap<Word, C> = words.clone();
    if !constant.is_zero() {
        map.insert(Word::unit(), constant);
    }
    TruncatedSeries::from_map_unchecked(alphabet, degree, map)
}

/// Algebra morphism `T(V) → A`: unital and multiplicative over bars,
/// determined by its values on words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character<C: Coefficient = Rational> {
    alphabet: usize,
    degree: usize,
    words: BTreeMap<Word, C>,
}

impl<C: Coefficient> Character<C> {
    pub fn counit(alphabet: usize, degree: usize) -> Result<Self> {
        check_shape(alphabet, degree)?;
        Ok(Character {
            alphabet,
            degree,
            words: BTreeMap::new(),
        })
    }

    /// Inverse of `Λ_gr`: the character whose word values are the series
    /// coefficients.
    pub fn from_series(s: &TruncatedSeries<C>) -> Result<Self> {
        if !s.is_group_like() {
            return Err(Error::domain("a character's series must have constant term 1"));
        }
        Ok(Character {
            alphabet: s.alphabet(),
            degree: s.degree(),
            words: word_map_from_series(s),
        })
    }

    /// Read off word values, ignoring tensor values.
    pub fn from_word_values(f: &impl Functional<C>) -> Result<Self> {
        if !f.unit_value().is_one() {
            return Err(Error::domain("a character takes the value 1 on the unit"));
        }
        Ok(Character {
            alphabet: f.alphabet(),
            degree: f.degree(),
            words: word_values(f),
        })
    }

    /// `Λ_gr`: generating series with constant term 1.
    pub fn to_series(&self) -> TruncatedSeries<C> {
        series_from_word_map(self.alphabet, self.degree, C::one(), &self.words)
    }
}

impl<C: Coefficient> Functional<C> for Character<C> {
    fn alphabet(&self) -> usize {
        self.alphabet
    }
    fn degree(&self) -> usize {
        self.degree
    }
    fn value(&self, tw: &TensorWord) -> C {
        let mut acc = C::one();
        for w in tw.factors() {
            match self.words.get(w) {
                Some(c) => acc *= c,
                None => return C::zero(),
            }
        }
        acc
    }
}

/// Vanishes on the unit and on every tensor with two or more factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinitesimalCharacter<C: Coefficient = Rational> {
    alphabet: usize,
    degree: usize,
    words: BTreeMap<Word, C>,
}

impl<C: Coefficient> InfinitesimalCharacter<C> {
    pub fn zero(alphabet: usize, degree: usize) -> Result<Self> {
        check_shape(alphabet, degree)?;
        Ok(InfinitesimalCharacter {
            alphabet,
            degree,
            words: BTreeMap::new(),
        })
    }

    /// Inverse of `Λ_Lie`.
    pub fn from_series(s: &TruncatedSeries<C>) -> Result<Self> {
        if !s.is_lie_like() {
            return Err(Error::domain(
                "an infinitesimal character's series must have constant term 0",
            ));
        }
        Ok(InfinitesimalCharacter {
            alphabet: s.alphabet(),
            degree: s.degree(),
            words: word_map_from_series(s),
        })
    }

    /// Read off word values; the form must vanish on the unit.
    pub fn from_word_values(f: &impl Functional<C>) -> Result<Self> {
        if !f.unit_value().is_zero() {
            return Err(Error::domain("an infinitesimal character vanishes on the unit"));
        }
        Ok(InfinitesimalCharacter {
            alphabet: f.alphabet(),
            degree: f.degree(),
            words: word_values(f),
        })
    }

    /// `Λ_Lie`: generating series with constant term 0.
    pub fn to_series(&self) -> TruncatedSeries<C> {
        series_from_word_map(self.alphabet, self.degree, C::zero(), &self.words)
    }
}

impl<C: Coefficient> Functional<C> for InfinitesimalCharacter<C> {
    fn alphabet(&self) -> usize {
        self.alphabet
    }
    fn degree(&self) -> usize {
        self.degree
    }
    fn value(&self, tw: &TensorWord) -> C {
        match tw.factors() {
            [w] => self.words.get(w).cloned().unwrap_or_else(C::zero),
            _ => C::zero(),
        }
    }
}

fn word_values<C: Coefficient>(f: &impl Functional<C>) -> BTreeMap<Word, C> {
    crate::combinatorics::words_up_to(f.alphabet(), f.degree())
        .into_iter()
        .skip(1)
        .filter_map(|w| {
            let c = f.word_value(&w);
            (!c.is_zero()).then_some((w, c))
        })
        .collect()
}
