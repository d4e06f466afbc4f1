use std::collections::BTreeSet;

use super::kernel::{self, Terms};
use super::TruncatedSeries;
use crate::coeff::Coefficient;
use crate::combinatorics::Word;
use crate::error::{Error, Result};

impl<C: Coefficient> TruncatedSeries<C> {
    /// `f(x g(x))`: each variable `x_a` is replaced by `x_a g(x)`.
    ///
    /// `self` may be any series; its constant term is kept.
    pub fn shifted_substitute(&self, g: &Self) -> Result<Self> {
        self.require_same_shape(g)?;
        g.require_g1("shifted_substitute (inner series)")?;
        Ok(Self::from_map_unchecked(
            self.alphabet,
            self.degree,
            kernel::substitute(&self.coeffs, &g.coeffs, self.degree),
        ))
    }

    /// Shifted composition `f • g = g(x) f(x g(x))` on series with constant
    /// term 1.
    pub fn shifted_compose(&self, g: &Self) -> Result<Self> {
        self.require_g1("shifted_compose")?;
        g.require_g1("shifted_compose")?;
        g.cauchy_mul(&self.shifted_substitute(g)?)
    }

    /// Inverse for `•`, from `f(x) u(x f(x)) = 1`: the coefficients of
    /// `u(x f(x)) = f⁻¹` are fixed degree by degree, the degree-`n` part of
    /// `u(x f(x))` being `u_n` plus terms built from lower degrees of `u`.
    pub fn shifted_inverse(&self) -> Result<Self> {
        self.require_g1("shifted_inverse")?;
        let target = self.cauchy_inv()?;
        let mut u: Terms<C> = Terms::new();
        u.insert(Word::unit(), C::one());
        for n in 1..=self.degree {
            let partial = kernel::substitute(&u, &self.coeffs, self.degree);
            let words: BTreeSet<&Word> = target
                .coeffs
                .keys()
                .chain(partial.keys())
                .filter(|w| w.len() == n)
                .collect();
            let mut fresh = Vec::new();
            for w in words {
                let mut c = target.coefficient(w);
                if let Some(p) = partial.get(w) {
                    c -= p;
                }
                if !c.is_zero() {
                    fresh.push((w.clone(), c));
                }
            }
            u.extend(fresh);
        }
        Ok(Self::from_map_unchecked(self.alphabet, self.degree, u))
    }

    /// `μ(f) = x f(x)` for univariate `f` with constant term 1; the result
    /// is tangent to the identity and truncated one degree higher.
    pub fn mu_embed(&self) -> Result<Self> {
        if self.alphabet != 1 {
            return Err(Error::domain("mu_embed needs a univariate series"));
        }
        self.require_g1("mu_embed")?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(w, c)| (Word::from_vec_unchecked(vec![1; w.len() + 1]), c.clone()))
            .collect();
        Ok(Self::from_map_unchecked(1, self.degree + 1, coeffs))
    }

    /// Checks `μ(f • g) = μ(f) ∘ μ(g)` with ordinary composition of
    /// univariate series.
    pub fn mu_compose_check(&self, g: &Self) -> Result<bool> {
        let lhs = self.shifted_compose(g)?.mu_embed()?;
        let rhs = compose_univariate(&self.mu_embed()?, &g.mu_embed()?)?;
        Ok(lhs == rhs)
    }
}

/// Ordinary composition `p(q(x))` of univariate series, `q` without
/// constant term. Horner: `p_0 + q(p_1 + q(p_2 + ⋯))`.
pub fn compose_univariate<C: Coefficient>(
    p: &TruncatedSeries<C>,
    q: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>> {
    p.require_same_shape(q)?;
    if p.alphabet != 1 {
        return Err(Error::domain("compose_univariate needs univariate series"));
    }
    q.require_g0("compose_univariate (inner series)")?;
    let coeffs = p.univariate_coefficients()?;
    let mut acc = TruncatedSeries::zero(1, p.degree)?;
    for c in coeffs.iter().rev() {
        acc = q.cauchy_mul(&acc)?.add_constant(c);
    }
    Ok(acc)
}
