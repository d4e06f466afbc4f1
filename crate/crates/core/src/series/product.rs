use super::kernel::{self, Terms};
use super::TruncatedSeries;
use crate::coeff::Coefficient;
use crate::combinatorics::words_of_length;
use crate::error::Result;

impl<C: Coefficient> TruncatedSeries<C> {
    /// Cauchy product: `(fg)_w = Σ_{uv = w} f_u g_v`.
    pub fn cauchy_mul(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        Ok(Self::from_map_unchecked(
            self.alphabet,
            self.degree,
            kernel::product(&self.coeffs, &other.coeffs, self.degree),
        ))
    }

    /// Inverse for the Cauchy product of a series with constant term 1,
    /// solved word by word from `Σ_{uv = w} f_u g_v = 0`.
    pub fn cauchy_inv(&self) -> Result<Self> {
        self.require_g1("cauchy_inv")?;
        let mut inv: Terms<C> = Terms::new();
        inv.insert(crate::Word::unit(), C::one());
        for n in 1..=self.degree {
            for w in words_of_length(self.alphabet, n) {
                let mut acc = C::zero();
                for k in 1..=n {
                    let u = w.slice(0..k);
                    if let Some(fu) = self.coeffs.get(&u) {
                        if let Some(gv) = inv.get(&w.slice(k..n)) {
                            acc += &fu.times(gv);
                        }
                    }
                }
                if !acc.is_zero() {
                    inv.insert(w, -acc);
                }
            }
        }
        Ok(Self::from_map_unchecked(self.alphabet, self.degree, inv))
    }
}
