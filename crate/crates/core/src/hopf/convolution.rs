use num_traits::One;

use crate::coeff::{integer, Coefficient, Rational};
use crate::combinatorics::{tensor_words_up_to, TensorWord};
use crate::error::{Error, Result};
use crate::exec::Execution;

use super::coproduct::{coproduct_tensor, half_coproduct_left_tensor, half_coproduct_right_tensor, CoproductTerm};
use super::forms::{require_same_shape, Character, Functional, InfinitesimalCharacter, LinearForm};

fn pair<C: Coefficient>(terms: &[CoproductTerm], a: &impl Functional<C>, b: &impl Functional<C>) -> C {
    let mut acc = C::zero();
    for t in terms {
        let l = a.value(&t.left);
        if l.is_zero() {
            continue;
        }
        let r = b.value(&t.right);
        if r.is_zero() {
            continue;
        }
        let mut v = l.times(&r);
        if t.multiplicity != 1 {
            v *= &C::from_int(t.multiplicity as i64);
        }
        acc += &v;
    }
    acc
}

fn tabulate<C: Coefficient>(
    exec: Execution,
    alphabet: usize,
    degree: usize,
    value: impl Fn(&TensorWord) -> C + Sync + Send,
) -> LinearForm<C> {
    let words = tensor_words_up_to(alphabet, degree);
    let values = exec.map(&words, |tw| value(tw));
    let map = words.into_iter().zip(values).filter(|(_, c)| !c.is_zero()).collect();
    LinearForm::from_values_unchecked(alphabet, degree, map)
}

/// `φ ∗ ψ = m_A(φ ⊗ ψ)Δ`, tabulated on all tensor words.
pub fn convolve<C: Coefficient>(phi: &impl Functional<C>, psi: &impl Functional<C>) -> Result<LinearForm<C>> {
    convolve_with(Execution::default(), phi, psi)
}

pub fn convolve_with<C: Coefficient>(
    exec: Execution,
    phi: &impl Functional<C>,
    psi: &impl Functional<C>,
) -> Result<LinearForm<C>> {
    require_same_shape(phi, psi)?;
    Ok(tabulate(exec, phi.alphabet(), phi.degree(), |tw| {
        pair(&coproduct_tensor(tw), phi, psi)
    }))
}

fn half_shuffle<C: Coefficient>(
    phi: &impl Functional<C>,
    psi: &impl Functional<C>,
    split: fn(&TensorWord) -> Result<Vec<CoproductTerm>>,
) -> Result<LinearForm<C>> {
    require_same_shape(phi, psi)?;
    if !phi.unit_value().is_zero() && !psi.unit_value().is_zero() {
        return Err(Error::domain(
            "half-shuffle of two forms that are both non-zero on the unit is undefined",
        ));
    }
    Ok(tabulate(Execution::default(), phi.alphabet(), phi.degree(), |tw| {
        if tw.is_unit() {
            C::zero()
        } else {
            pair(&split(tw).expect("non-unit tensor"), phi, psi)
        }
    }))
}

/// `φ ≺ ψ = m_A(φ ⊗ ψ)Δ_≺` on `T₊(V)`; zero on the unit.
///
/// With `φ ≺ ε = φ` and `ε ≺ φ = 0` this is bilinear in the unit parts of
/// the arguments, except that both may not be non-zero on the unit.
pub fn half_shuffle_left<C: Coefficient>(phi: &impl Functional<C>, psi: &impl Functional<C>) -> Result<LinearForm<C>> {
    half_shuffle(phi, psi, half_coproduct_left_tensor)
}

/// `φ ≻ ψ = m_A(φ ⊗ ψ)Δ_≻` on `T₊(V)`, with `ε ≻ φ = φ` and `φ ≻ ε = 0`.
pub fn half_shuffle_right<C: Coefficient>(phi: &impl Functional<C>, psi: &impl Functional<C>) -> Result<LinearForm<C>> {
    half_shuffle(phi, psi, half_coproduct_right_tensor)
}

/// `[φ, ψ]_∗ = φ ∗ ψ − ψ ∗ φ`.
pub fn commutator<C: Coefficient>(phi: &impl Functional<C>, psi: &impl Functional<C>) -> Result<LinearForm<C>> {
    convolve(phi, psi)?.try_sub(&convolve(psi, phi)?)
}

/// `φ^{∗n}`, with `φ^{∗0} = ε`.
pub fn conv_power<C: Coefficient>(phi: &impl Functional<C>, n: usize) -> Result<LinearForm<C>> {
    let mut acc = LinearForm::counit(phi.alphabet(), phi.degree())?;
    for _ in 0..n {
        acc = convolve(&acc, phi)?;
    }
    Ok(acc)
}

/// `exp*(ρ) = ε + Σ ρ^{∗n}/n!`; the sum stops at the truncation degree
/// because `ρ^{∗n}` vanishes below total degree `n`.
pub fn conv_exp<C: Coefficient>(rho: &InfinitesimalCharacter<C>) -> Result<Character<C>> {
    let (d, n_max) = (rho.alphabet(), rho.degree());
    let mut sum = LinearForm::counit(d, n_max)?;
    let mut power = LinearForm::counit(d, n_max)?;
    let mut factorial = Rational::one();
    for n in 1..=n_max {
        power = convolve(&power, rho)?;
        factorial *= integer(n as i64);
        sum = sum.try_add(&power.scale(&factorial.recip()))?;
    }
    Character::from_word_values(&sum)
}

/// `log*(Φ) = Σ (−1)^{n+1} (Φ − ε)^{∗n}/n`.
///
/// The result is checked to vanish on the unit and on every product of
/// words before it is returned.
pub fn conv_log<C: Coefficient>(phi: &Character<C>) -> Result<InfinitesimalCharacter<C>> {
    let (d, n_max) = (phi.alphabet(), phi.degree());
    let shifted = LinearForm::materialize(phi).try_sub(&LinearForm::counit(d, n_max)?)?;
    let mut sum = LinearForm::zero(d, n_max)?;
    let mut power = LinearForm::counit(d, n_max)?;
    for n in 1..=n_max {
        power = convolve(&power, &shifted)?;
        let sign = if n % 2 == 1 { 1 } else { -1 };
        sum = sum.try_add(&power.scale(&Rational::new(sign.into(), (n as i64).into())))?;
    }
    if !sum.is_infinitesimal() {
        let bad = sum.iter().map(|(tw, _)| tw).find(|tw| tw.num_factors() != 1).cloned();
        return Err(Error::Postcondition(format!(
            "convolution logarithm is non-zero on {}",
            bad.map(|t| t.to_string()).unwrap_or_default()
        )));
    }
    InfinitesimalCharacter::from_word_values(&sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Word;
    use crate::series::TruncatedSeries;

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn letter_form(d: usize, n: usize) -> InfinitesimalCharacter {
        let s = TruncatedSeries::from_pairs(d, n, [(vec![1], integer(1))]).unwrap();
        InfinitesimalCharacter::from_series(&s).unwrap()
    }

    #[test]
    fn counit_is_neutral() {
        let mut phi = LinearForm::<Rational>::zero(2, 3).unwrap();
        phi.set(TensorWord::unit(), integer(3)).unwrap();
        phi.set(TensorWord::single(w(&[1, 2])), integer(2)).unwrap();
        phi.set(TensorWord::new(vec![w(&[2]), w(&[1])]).unwrap(), integer(-1))
            .unwrap();
        let eps = LinearForm::counit(2, 3).unwrap();
        assert_eq!(convolve(&phi, &eps).unwrap(), phi);
        assert_eq!(convolve(&eps, &phi).unwrap(), phi);
    }

    #[test]
    fn square_of_letter_form() {
        let rho = letter_form(1, 3);
        let sq = convolve(&rho, &rho).unwrap();
        assert_eq!(sq.word_value(&w(&[1, 1])), integer(2));
        assert_eq!(sq.word_value(&w(&[1])), integer(0));
    }

    #[test]
    fn exp_of_letter_form_is_geometric() {
        let phi = conv_exp(&letter_form(1, 4)).unwrap();
        for n in 1..=4 {
            assert_eq!(phi.word_value(&Word::new(vec![1; n]).unwrap()), integer(1));
        }
        assert_eq!(conv_log(&phi).unwrap(), letter_form(1, 4));
    }

    #[test]
    fn exp_of_zero_is_counit() {
        let zero = InfinitesimalCharacter::<Rational>::zero(2, 3).unwrap();
        assert_eq!(conv_exp(&zero).unwrap(), Character::counit(2, 3).unwrap());
        assert_eq!(conv_log(&Character::<Rational>::counit(2, 3).unwrap()).unwrap(), zero);
    }

    #[test]
    fn half_shuffle_unit_rules() {
        let rho = letter_form(2, 3);
        let eps = LinearForm::<Rational>::counit(2, 3).unwrap();
        let m = LinearForm::materialize(&rho);
        assert_eq!(half_shuffle_left(&rho, &eps).unwrap(), m);
        assert_eq!(half_shuffle_right(&eps, &rho).unwrap(), m);
        assert!(half_shuffle_left(&eps, &rho).unwrap().iter().next().is_none());
        assert!(half_shuffle_right(&rho, &eps).unwrap().iter().next().is_none());
        assert!(matches!(half_shuffle_left(&eps, &eps), Err(Error::Domain(_))));
        assert!(matches!(half_shuffle_right(&eps, &eps), Err(Error::Domain(_))));
    }

    #[test]
    fn sequential_matches_parallel() {
        let rho = letter_form(2, 4);
        let phi = LinearForm::materialize(&conv_exp(&rho).unwrap());
        let a = convolve_with(Execution::Sequential, &phi, &rho).unwrap();
        let b = convolve_with(Execution::Parallel, &phi, &rho).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn power_zero_is_counit() {
        let rho = letter_form(1, 2);
        assert_eq!(conv_power(&rho, 0).unwrap(), LinearForm::counit(1, 2).unwrap());
        assert_eq!(conv_power(&rho, 1).unwrap(), LinearForm::materialize(&rho));
    }
}
