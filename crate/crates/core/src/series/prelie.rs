use super::kernel::{self, Terms};
use super::TruncatedSeries;
use crate::coeff::Coefficient;
use crate::error::Result;

impl<C: Coefficient> TruncatedSeries<C> {
    /// Right pre-Lie product `f ◁ g`: every monomial of `g` is inserted into
    /// each of the `n + 1` gaps of every length-`n` monomial of `f`.
    pub fn pre_lie(&self, g: &Self) -> Result<Self> {
        self.insert_into_gaps(g, 0)
    }

    /// Deliberately wrong variant that skips the final gap; used only to
    /// check that the verification harness notices a broken product.
    #[doc(hidden)]
    pub fn pre_lie_dropping_last_gap(&self, g: &Self) -> Result<Self> {
        self.insert_into_gaps(g, 1)
    }

    fn insert_into_gaps(&self, g: &Self, dropped: usize) -> Result<Self> {
        self.require_same_shape(g)?;
        self.require_g0("pre_lie")?;
        g.require_g0("pre_lie")?;
        let mut out: Terms<C> = Terms::new();
        for (v, fv) in self.terms() {
            if v.len() >= self.degree {
                break;
            }
            let room = self.degree - v.len();
            for (u, gu) in g.terms().take_while(|(u, _)| u.len() <= room) {
                let c = fv.times(gu);
                for k in 0..=v.len() - dropped.min(v.len()) {
                    kernel::add_into(&mut out, v.insert_at(k, u), c.clone());
                }
            }
        }
        Ok(Self::from_map_unchecked(self.alphabet, self.degree, out))
    }

    /// `[f, g] = f ◁ g − g ◁ f`.
    pub fn lie_bracket(&self, g: &Self) -> Result<Self> {
        self.pre_lie(g)?.try_sub(&g.pre_lie(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{ser, uni};
    use crate::error::Error;

    #[test]
    fn insertion_examples() {
        let x1 = ser(2, 2, &[(&[1], 1)]);
        let x2 = ser(2, 2, &[(&[2], 1)]);
        assert_eq!(x1.pre_lie(&x2).unwrap(), ser(2, 2, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert_eq!(uni(2, &[0, 1]).pre_lie(&uni(2, &[0, 1])).unwrap(), uni(2, &[0, 0, 2]));
        let zero = ser(2, 2, &[]);
        assert_eq!(x1.pre_lie(&zero).unwrap(), zero);
    }

    #[test]
    fn univariate_monomials() {
        for n in 1..=4usize {
            for m in 1..=4usize {
                let mut a = vec![0; n + 1];
                a[n] = 1;
                let mut b = vec![0; m + 1];
                b[m] = 1;
                let mut c = vec![0; n + m + 1];
                c[n + m] = n as i64 + 1;
                assert_eq!(uni(8, &a).pre_lie(&uni(8, &b)).unwrap(), uni(8, &c));
            }
        }
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(
            uni(3, &[0, 1]).lie_bracket(&uni(3, &[0, 0, 1])).unwrap(),
            uni(3, &[0, 0, 0, -1])
        );
        let f = ser(2, 3, &[(&[1], 2), (&[2, 1], -1)]);
        assert!(f.lie_bracket(&f).unwrap().is_zero());
        let x1 = ser(2, 2, &[(&[1], 1)]);
        let x2 = ser(2, 2, &[(&[2], 1)]);
        assert!(x1.lie_bracket(&x2).unwrap().is_zero());
    }

    #[test]
    fn requires_zero_constants() {
        assert!(matches!(
            uni(2, &[1, 1]).pre_lie(&uni(2, &[0, 1])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(uni(2, &[0, 1]).pre_lie(&uni(2, &[1])), Err(Error::Domain(_))));
    }
}
