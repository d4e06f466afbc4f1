use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TruncatedSeries;
use crate::coeff::{Coefficient, PolyT, Rational};
use crate::combinatorics::Word;
use crate::error::Result;

fn inverse_factorial(n: usize) -> Rational {
    let f: BigInt = (1..=n as u64).map(BigInt::from).product();
    Rational::new(BigInt::one(), f)
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Pre-Lie iterates `R⁽⁰⁾ = h`, `R⁽ⁿ⁾ = R⁽ⁿ⁻¹⁾ ◁ h` for `n < N`.
    ///
    /// `R⁽ⁿ⁻¹⁾` starts in degree `n`, so the list is complete at `N` entries.
    pub fn pre_lie_iterates(&self) -> Result<Vec<Self>> {
        self.require_g0("pre-Lie exponential")?;
        let mut out = vec![self.clone()];
        for _ in 1..self.degree {
            let next = out.last().expect("non-empty").pre_lie(self)?;
            if next.is_zero() {
                break;
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Group exponential `1 + Σ_{n≥1} R⁽ⁿ⁻¹⁾(h) / n!` from the Lie algebra of
    /// series with constant 0 to the shifted-composition group.
    pub fn exp_g(&self) -> Result<Self> {
        let mut acc = Self::one(self.alphabet, self.degree)?;
        for (k, r) in self.pre_lie_iterates()?.iter().enumerate() {
            acc = acc.try_add(&r.scale(&inverse_factorial(k + 1)))?;
        }
        Ok(acc)
    }

    /// Inverse of [`exp_g`](Self::exp_g): ascending in degree, the degree-`n`
    /// coefficients of `h` are what remains of `f` after subtracting the
    /// contributions of the lower-degree part of `h`.
    pub fn log_g(&self) -> Result<Self> {
        self.require_g1("log_g")?;
        let mut h = Self::zero(self.alphabet, self.degree)?;
        for n in 1..=self.degree {
            let e = h.exp_g()?;
            let words: BTreeSet<Word> = self
                .terms()
                .chain(e.terms())
                .map(|(w, _)| w.clone())
                .filter(|w| w.len() == n)
                .collect();
            for w in words {
                let mut c = self.coefficient(&w);
                c -= &e.coefficient(&w);
                if !c.is_zero() {
                    h.set(w, c)?;
                }
            }
        }
        Ok(h)
    }

    /// Baker–Campbell–Hausdorff law transported from the group:
    /// `log_G(exp_G(f) • exp_G(g))`.
    pub fn bch(&self, g: &Self) -> Result<Self> {
        self.require_same_shape(g)?;
        self.exp_g()?.shifted_compose(&g.exp_g()?)?.log_g()
    }
}

impl TruncatedSeries<Rational> {
    /// One-parameter group `M_t = 1 + Σ_{n≥1} R⁽ⁿ⁻¹⁾(h) tⁿ / n!`.
    pub fn flow(&self) -> Result<TruncatedSeries<PolyT>> {
        let mut acc = TruncatedSeries::<PolyT>::one(self.alphabet, self.degree)?;
        for (k, r) in self.pre_lie_iterates()?.iter().enumerate() {
            let weight = PolyT::monomial(inverse_factorial(k + 1), (k + 1) as u32);
            acc = acc.try_add(&r.to_poly_t().scale_by(&weight))?;
        }
        Ok(acc)
    }
}

impl TruncatedSeries<PolyT> {
    /// Whether `d/dt M_t = h + (M_t − 1) ◁ h` holds coefficient-wise.
    pub fn satisfies_flow_equation(&self, h: &TruncatedSeries<Rational>) -> Result<bool> {
        let h = h.to_poly_t();
        let rhs = h.try_add(&self.add_constant(&-PolyT::one()).pre_lie(&h)?)?;
        Ok(self.t_derivative() == rhs && self.specialize(&Rational::zero()).class() == super::SeriesClass::G1)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{ser, uni};
    use super::*;
    use crate::coeff::{integer, rational};

    #[test]
    fn exp_examples() {
        assert_eq!(uni(3, &[0]).exp_g().unwrap(), uni(3, &[1]));
        assert_eq!(uni(4, &[0, 1]).exp_g().unwrap(), uni(4, &[1, 1, 1, 1, 1]));
        let iterates = uni(4, &[0, 1]).pre_lie_iterates().unwrap();
        assert_eq!(iterates[1], uni(4, &[0, 0, 2]));
        assert_eq!(iterates[2], uni(4, &[0, 0, 0, 6]));
        assert_eq!(iterates[3], uni(4, &[0, 0, 0, 0, 24]));
    }

    #[test]
    fn exp_degree_two_univariate() {
        // h = a x + b x²: m₂ = b + a²
        let (a, b) = (rational(3, 2), integer(-2));
        let h = TruncatedSeries::univariate(2, &[integer(0), a.clone(), b.clone()]).unwrap();
        let m = h.exp_g().unwrap().univariate_coefficients().unwrap();
        assert_eq!(m, vec![integer(1), a.clone(), b + a.clone() * a]);
    }

    #[test]
    fn log_examples() {
        assert!(uni(3, &[1]).log_g().unwrap().is_zero());
        assert_eq!(uni(3, &[1, 1, 1, 1]).log_g().unwrap(), uni(3, &[0, 1]));
        let h = ser(2, 4, &[(&[1], 2), (&[2], -1), (&[1, 2], 3), (&[2, 1, 1], 1)]);
        assert_eq!(h.exp_g().unwrap().log_g().unwrap(), h);
        assert!(uni(3, &[0, 1]).log_g().is_err());
    }

    #[test]
    fn bch_low_degree() {
        let f = ser(2, 2, &[(&[1], 1)]);
        let g = ser(2, 2, &[(&[2], 1)]);
        assert_eq!(f.bch(&g).unwrap(), ser(2, 2, &[(&[1], 1), (&[2], 1)]));
        let zero = ser(2, 2, &[]);
        assert_eq!(f.bch(&zero).unwrap(), f);
        assert_eq!(zero.bch(&g).unwrap(), g);
    }

    #[test]
    fn bch_second_order_term() {
        // bch(a x, b x²) = a x + b x² + ½[a x, b x²] up to x³
        let f = uni(3, &[0, 2]);
        let g = uni(3, &[0, 0, 5]);
        let half_bracket = f.lie_bracket(&g).unwrap().scale(&rational(1, 2));
        let expected = f.try_add(&g).unwrap().try_add(&half_bracket).unwrap();
        assert_eq!(f.bch(&g).unwrap(), expected);
        assert_eq!(expected, uni(3, &[0, 2, 5, -5]));
    }

    #[test]
    fn flow_low_degrees() {
        let h = TruncatedSeries::univariate(3, &[integer(0), integer(2), integer(3), integer(5)]).unwrap();
        let m = h.flow().unwrap().univariate_coefficients().unwrap();
        assert_eq!(m[0], PolyT::one());
        assert_eq!(m[1], PolyT::monomial(integer(2), 1));
        // h₃t + 5/2 h₁h₂ t² + h₁³ t³ = 5t + 15t² + 8t³
        assert_eq!(
            m[3],
            PolyT::from_terms([(integer(5), 1), (integer(15), 2), (integer(8), 3)])
        );
        let flow = h.flow().unwrap();
        assert_eq!(flow.specialize(&integer(1)), h.exp_g().unwrap());
        assert_eq!(flow.specialize(&integer(0)), uni(3, &[1]));
        assert!(flow.satisfies_flow_equation(&h).unwrap());
    }
}
