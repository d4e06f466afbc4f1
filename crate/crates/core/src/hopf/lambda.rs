use std::collections::BTreeMap;

use crate::coeff::Coefficient;
use crate::combinatorics::{words_up_to, TensorWord};
use crate::series::TruncatedSeries;

use super::forms::{Character, Functional, InfinitesimalCharacter};

/// `Λ(φ) = φ(𝟙) + Σ φ(w) x_w`; values on tensors of two or more words are
/// not seen.
pub fn lambda<C: Coefficient>(phi: &impl Functional<C>) -> TruncatedSeries<C> {
    let coeffs: BTreeMap<_, _> = words_up_to(phi.alphabet(), phi.degree())
        .into_iter()
        .filter_map(|w| {
            let c = phi.value(&TensorWord::single(w.clone()));
            (!c.is_zero()).then_some((w, c))
        })
        .collect();
    TruncatedSeries::from_map_unchecked(phi.alphabet(), phi.degree(), coeffs)
}

impl<C: Coefficient> Character<C> {
    /// `Λ_gr`.
    pub fn lambda_gr(&self) -> TruncatedSeries<C> {
        self.to_series()
    }
}

impl<C: Coefficient> InfinitesimalCharacter<C> {
    /// `Λ_Lie`.
    pub fn lambda_lie(&self) -> TruncatedSeries<C> {
        self.to_series()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{integer, Rational};
    use crate::combinatorics::Word;
    use crate::hopf::LinearForm;

    #[test]
    fn lambda_of_counit_is_one() {
        let eps = LinearForm::<Rational>::counit(2, 3).unwrap();
        assert_eq!(lambda(&eps), TruncatedSeries::one(2, 3).unwrap());
    }

    #[test]
    fn lambda_ignores_tensor_values() {
        let mut a = LinearForm::<Rational>::zero(2, 3).unwrap();
        a.set(TensorWord::single(Word::letter(2)), integer(7)).unwrap();
        let mut b = a.clone();
        b.set(
            TensorWord::new(vec![Word::letter(1), Word::letter(2)]).unwrap(),
            integer(5),
        )
        .unwrap();
        assert_eq!(lambda(&a), lambda(&b));
    }

    #[test]
    fn character_round_trip() {
        let s = TruncatedSeries::from_pairs(2, 3, [(vec![], integer(1)), (vec![1, 2], integer(4))]).unwrap();
        let phi = Character::from_series(&s).unwrap();
        assert_eq!(phi.lambda_gr(), s);
        assert_eq!(lambda(&phi), s);
    }
}
