use std::collections::BTreeMap;

use crate::coeff::Coefficient;
use crate::combinatorics::{prefix_splits, words_up_to, Word};
use crate::error::Result;
use crate::series::TruncatedSeries;

/// `β̂ = 1 − 1/M`.
pub fn boolean_from_moments<C: Coefficient>(m: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    m.require_g1("moment series")?;
    TruncatedSeries::one(m.alphabet(), m.degree())?.try_sub(&m.cauchy_inv()?)
}

/// `M = 1/(1 − β̂)`, the solution of `M = 1 + β̂M`.
pub fn moments_from_boolean<C: Coefficient>(b: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    b.require_g0("Boolean cumulant series")?;
    TruncatedSeries::one(b.alphabet(), b.degree())?.try_sub(b)?.cauchy_inv()
}

/// Moments by the recursion `m(w) = Σ_{w=uv, v≠𝟙} m(u) β(v)`, word by word.
pub fn boolean_oracle_recursion<C: Coefficient>(b: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    b.require_g0("Boolean cumulant series")?;
    let mut m: BTreeMap<Word, C> = BTreeMap::new();
    m.insert(Word::unit(), C::one());
    for w in words_up_to(b.alphabet(), b.degree()).into_iter().skip(1) {
        let mut acc = C::zero();
        for (u, v) in prefix_splits(&w) {
            let beta = b.coefficient(&v);
            if beta.is_zero() {
                continue;
            }
            if let Some(mu) = m.get(&u) {
                acc += &mu.times(&beta);
            }
        }
        if !acc.is_zero() {
            m.insert(w, acc);
        }
    }
    let mut out = TruncatedSeries::zero(b.alphabet(), b.degree())?;
    for (w, c) in m {
        out.set(w, c)?;
    }
    Ok(out)
}
