//! Seeded generators of random series and forms with small exact
//! coefficients, for property checks and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{integer, rational, Coefficient, Rational};
use crate::combinatorics::{tensor_words_up_to, words_up_to, TensorWord, Word};
use crate::error::Result;
use crate::hopf::{Character, InfinitesimalCharacter, LinearForm};
use crate::series::TruncatedSeries;

/// A reproducible generator for one named stream of one trial.
///
/// Streams are separated by hashing the name, so adding a stream never
/// perturbs the values drawn by another.
pub fn rng_for(seed: u64, stream: &str, trial: u64) -> ChaCha8Rng {
    // FNV-1a over the stream name, then mixed with seed and trial
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut state = seed ^ h.rotate_left(17) ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    // splitmix64 finalizer
    state = (state ^ (state >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    state = (state ^ (state >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    ChaCha8Rng::seed_from_u64(state ^ (state >> 31))
}

/// Coefficient distribution for random objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    /// Integers in `-3..=3`.
    SmallIntegers,
    /// Fractions `p/q` with `|p| ≤ 4` and `q ∈ {1, 2, 3}`.
    SmallRationals,
}

/// Draw one (possibly zero) coefficient.
pub fn random_coefficient(rng: &mut impl Rng, dist: Coefficients) -> Rational {
    match dist {
        Coefficients::SmallIntegers => integer(rng.random_range(-3..=3)),
        Coefficients::SmallRationals => rational(rng.random_range(-4..=4), rng.random_range(1..=3)),
    }
}

fn random_nonzero(rng: &mut impl Rng, dist: Coefficients) -> Rational {
    loop {
        let c = random_coefficient(rng, dist);
        if !num_traits::Zero::is_zero(&c) {
            return c;
        }
    }
}

/// Settings shared by the random generators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub alphabet: usize,
    pub degree: usize,
    /// Probability that a given word carries a non-zero coefficient.
    pub density: f64,
    pub coefficients: Coefficients,
}

impl RandomSpec {
    pub fn new(alphabet: usize, degree: usize) -> Self {
        RandomSpec {
            alphabet,
            degree,
            density: 0.6,
            coefficients: Coefficients::SmallIntegers,
        }
    }

    pub fn rationals(mut self) -> Self {
        self.coefficients = Coefficients::SmallRationals;
        self
    }

    pub fn density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    fn sparse_word_values(&self, rng: &mut impl Rng) -> Vec<(Word, Rational)> {
        words_up_to(self.alphabet, self.degree)
            .into_iter()
            .skip(1)
            .filter_map(|w| {
                rng.random_bool(self.density)
                    .then(|| (w, random_nonzero(rng, self.coefficients)))
            })
            .collect()
    }

    fn series_with_constant(&self, rng: &mut impl Rng, constant: Rational) -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::constant(self.alphabet, self.degree, constant)?;
        for (w, c) in self.sparse_word_values(rng) {
            s.set(w, c)?;
        }
        Ok(s)
    }

    /// A series with constant term 1.
    pub fn group_like(&self, rng: &mut impl Rng) -> Result<TruncatedSeries> {
        self.series_with_constant(rng, integer(1))
    }

    /// A series with constant term 0.
    pub fn lie_like(&self, rng: &mut impl Rng) -> Result<TruncatedSeries> {
        self.series_with_constant(rng, integer(0))
    }

    /// A series with an arbitrary constant term.
    pub fn general(&self, rng: &mut impl Rng) -> Result<TruncatedSeries> {
        let c = random_coefficient(rng, self.coefficients);
        self.series_with_constant(rng, c)
    }

    /// A form on all tensor words with zero unit value.
    pub fn form(&self, rng: &mut impl Rng) -> Result<LinearForm> {
        let mut f = LinearForm::zero(self.alphabet, self.degree)?;
        for tw in tensor_words_up_to(self.alphabet, self.degree) {
            if !tw.is_unit() && rng.random_bool(self.density) {
                f.set(tw, random_nonzero(rng, self.coefficients))?;
            }
        }
        Ok(f)
    }

    /// A form with a randomly chosen unit value.
    pub fn form_with_unit(&self, rng: &mut impl Rng) -> Result<LinearForm> {
        let mut f = self.form(rng)?;
        f.set(TensorWord::unit(), random_coefficient(rng, self.coefficients))?;
        Ok(f)
    }

    pub fn character(&self, rng: &mut impl Rng) -> Result<Character> {
        Character::from_series(&self.group_like(rng)?)
    }

    pub fn infinitesimal(&self, rng: &mut impl Rng) -> Result<InfinitesimalCharacter> {
        InfinitesimalCharacter::from_series(&self.lie_like(rng)?)
    }
}

/// Draw `count` values of a generator from one stream.
pub fn sample<T>(
    seed: u64,
    stream: &str,
    count: usize,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> Result<T>,
) -> Result<Vec<T>> {
    (0..count as u64).map(|i| draw(&mut rng_for(seed, stream, i))).collect()
}

/// Convert a rational series to any coefficient ring.
pub fn lift<C: Coefficient>(s: &TruncatedSeries) -> TruncatedSeries<C> {
    s.map_coefficients(|c| C::from_rational(c.clone()))
}
