use crate::coeff::Coefficient;
use crate::combinatorics::{non_crossing_partitions, Word, NC_CAP};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Largest word length accepted by [`free_oracle_nc`].
pub const NC_ORACLE_DEFAULT_CAP: usize = 10;

/// Moments from free cumulants: the fixed point of `M = 1 + K(xM)`,
/// reached from `M = 1` after `N` iterations.
pub fn moments_from_free<C: Coefficient>(k: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    k.require_g0("free cumulant series")?;
    let one = TruncatedSeries::one(k.alphabet(), k.degree())?;
    let mut m = one.clone();
    for _ in 0..k.degree() {
        m = one.try_add(&k.shifted_substitute(&m)?)?;
    }
    Ok(m)
}

/// Free cumulants from moments, degree by degree: the degree-`n` cumulants
/// are the degree-`n` moments minus what the lower cumulants already produce.
pub fn free_from_moments<C: Coefficient>(m: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    m.require_g1("moment series")?;
    let mut k = TruncatedSeries::zero(m.alphabet(), m.degree())?;
    for n in 1..=m.degree() {
        let partial = moments_from_free(&k.truncate(n)?)?;
        let target = m.truncate(n)?;
        for (w, c) in target.try_sub(&partial)?.homogeneous(n).terms() {
            k.set(w.clone(), c.clone())?;
        }
    }
    Ok(k)
}

/// `m(w) = Σ_{π ∈ NC(|w|)} Π_{B ∈ π} κ(w_B)` by enumerating non-crossing
/// partitions, with words up to [`NC_ORACLE_DEFAULT_CAP`].
pub fn free_oracle_nc<C: Coefficient>(k: &TruncatedSeries<C>, w: &Word) -> Result<C> {
    free_oracle_nc_with_cap(k, w, NC_ORACLE_DEFAULT_CAP)
}

pub fn free_oracle_nc_with_cap<C: Coefficient>(k: &TruncatedSeries<C>, w: &Word, cap: usize) -> Result<C> {
    if cap > NC_CAP {
        return Err(Error::input(format!(
            "non-crossing oracle cap {cap} exceeds the hard limit {NC_CAP}"
        )));
    }
    if w.len() > cap {
        return Err(Error::input(format!(
            "word length {} exceeds the non-crossing oracle cap {cap}",
            w.len()
        )));
    }
    if w.len() > k.degree() || w.max_letter() as usize > k.alphabet() {
        return Err(Error::input(format!("word {w} is outside the cumulant series")));
    }
    if w.is_unit() {
        return Ok(C::one());
    }
    let mut total = C::zero();
    for pi in non_crossing_partitions(w.len())? {
        let mut term = C::one();
        for block in pi.blocks() {
            let positions: Vec<usize> = block.iter().map(|i| i - 1).collect();
            let c = k.coefficient(&w.extract(&positions));
            if c.is_zero() {
                term = C::zero();
                break;
            }
            term *= &c;
        }
        total += &term;
    }
    Ok(total)
}
