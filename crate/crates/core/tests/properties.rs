//! Property tests over generated series and forms.

use ncps_core::coeff::{integer, rational};
use ncps_core::combinatorics::{tensor_words_up_to, words_up_to};
use ncps_core::cumulants::{
    boolean_from_moments, boolean_oracle_recursion, dictionary_check, free_from_moments, moments_from_boolean,
    moments_from_free, moments_from_monotone, monotone_from_moments,
};
use ncps_core::hopf::{conv_exp, conv_log, lambda, Character, InfinitesimalCharacter, LinearForm};
use ncps_core::{Execution, Rational, TensorWord, TruncatedSeries};
use proptest::prelude::*;

const D: usize = 2;
const N: usize = 4;

fn series_with_constant(d: usize, n: usize, constant: i64) -> impl Strategy<Value = TruncatedSeries> {
    let words = words_up_to(d, n);
    let count = words.len() - 1;
    prop::collection::vec((-3i64..=3, 1i64..=2), count).prop_map(move |cs| {
        let mut s = TruncatedSeries::constant(d, n, integer(constant)).unwrap();
        for (w, (p, q)) in words.iter().skip(1).zip(cs) {
            s.set(w.clone(), rational(p, q)).unwrap();
        }
        s
    })
}

fn g1() -> impl Strategy<Value = TruncatedSeries> {
    series_with_constant(D, N, 1)
}

fn g0() -> impl Strategy<Value = TruncatedSeries> {
    series_with_constant(D, N, 0)
}

fn unit_free_form(d: usize, n: usize) -> impl Strategy<Value = LinearForm> {
    let tensors: Vec<TensorWord> = tensor_words_up_to(d, n).into_iter().filter(|t| !t.is_unit()).collect();
    prop::collection::vec(-2i64..=2, tensors.len()).prop_map(move |cs| {
        let mut f = LinearForm::zero(d, n).unwrap();
        for (t, c) in tensors.iter().zip(cs) {
            f.set(t.clone(), integer(c)).unwrap();
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cauchy_inverse_is_two_sided(f in g1()) {
        let inv = f.cauchy_inv().unwrap();
        let one = TruncatedSeries::one(D, N).unwrap();
        prop_assert_eq!(f.cauchy_mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.cauchy_mul(&f).unwrap(), one);
    }

    #[test]
    fn truncation_commutes_with_operations(f in g1(), g in g1(), u in g0(), m in 1usize..N) {
        let t = |s: &TruncatedSeries| s.truncate(m).unwrap();
        prop_assert_eq!(t(&f.shifted_compose(&g).unwrap()), t(&f).shifted_compose(&t(&g)).unwrap());
        prop_assert_eq!(t(&f.shifted_inverse().unwrap()), t(&f).shifted_inverse().unwrap());
        prop_assert_eq!(t(&u.pre_lie(&u).unwrap()), t(&u).pre_lie(&t(&u)).unwrap());
        prop_assert_eq!(t(&f.log_g().unwrap()), t(&f).log_g().unwrap());
    }

    #[test]
    fn bch_is_the_transported_group_law(f in g0(), g in g0()) {
        let z = f.bch(&g).unwrap();
        prop_assert_eq!(z.exp_g().unwrap(), f.exp_g().unwrap().shifted_compose(&g.exp_g().unwrap()).unwrap());
    }

    #[test]
    fn flow_specialises_to_exponential(h in g0()) {
        let m = h.flow().unwrap();
        prop_assert!(m.satisfies_flow_equation(&h).unwrap());
        prop_assert_eq!(m.specialize(&integer(1)), h.exp_g().unwrap());
        prop_assert_eq!(m.specialize(&integer(0)), TruncatedSeries::one(D, N).unwrap());
        // M_s • M_t = M_{s+t}
        let (s, t) = (rational(1, 2), rational(-2, 3));
        let lhs = m.specialize(&s).shifted_compose(&m.specialize(&t)).unwrap();
        prop_assert_eq!(lhs, m.specialize(&(s + t)));
    }

    #[test]
    fn transforms_round_trip(m in g1(), k in g0()) {
        prop_assert_eq!(moments_from_free(&free_from_moments(&m).unwrap()).unwrap(), m.clone());
        prop_assert_eq!(free_from_moments(&moments_from_free(&k).unwrap()).unwrap(), k.clone());
        prop_assert_eq!(moments_from_boolean(&boolean_from_moments(&m).unwrap()).unwrap(), m.clone());
        prop_assert_eq!(moments_from_monotone(&monotone_from_moments(&m).unwrap()).unwrap(), m.clone());
        prop_assert_eq!(boolean_oracle_recursion(&k).unwrap(), moments_from_boolean(&k).unwrap());
    }

    #[test]
    fn dictionary_holds(m in g1()) {
        let report = dictionary_check(&m).unwrap();
        prop_assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn monotone_cumulants_are_the_convolution_logarithm(m in series_with_constant(D, 3, 1)) {
        let rho = conv_log(&Character::from_series(&m).unwrap()).unwrap();
        prop_assert_eq!(rho.lambda_lie(), monotone_from_moments(&m).unwrap());
    }

    #[test]
    fn convolution_exponential_round_trip(h in series_with_constant(D, 3, 0)) {
        let rho = InfinitesimalCharacter::from_series(&h).unwrap();
        let phi = conv_exp(&rho).unwrap();
        prop_assert!(LinearForm::materialize(&phi).is_character());
        prop_assert_eq!(conv_log(&phi).unwrap(), rho);
    }

    #[test]
    fn lambda_sees_only_words(a in unit_free_form(D, 3), b in unit_free_form(D, 3)) {
        // overwrite b's word values with a's; Λ must then agree
        let mut c = b.clone();
        for w in words_up_to(D, 3).into_iter().skip(1) {
            let tw = TensorWord::single(w);
            use ncps_core::hopf::Functional;
            c.set(tw.clone(), a.value(&tw)).unwrap();
        }
        prop_assert_eq!(lambda(&a), lambda(&c));
    }

    #[test]
    fn parallel_and_sequential_convolution_agree(a in unit_free_form(D, 3), b in unit_free_form(D, 3)) {
        let p = ncps_core::hopf::convolve_with(Execution::Parallel, &a, &b).unwrap();
        let s = ncps_core::hopf::convolve_with(Execution::Sequential, &a, &b).unwrap();
        prop_assert_eq!(p, s);
    }
}

#[test]
fn shape_mismatch_is_an_input_error() {
    let a = TruncatedSeries::<Rational>::one(2, 3).unwrap();
    let b = TruncatedSeries::<Rational>::one(2, 4).unwrap();
    assert!(matches!(a.cauchy_mul(&b), Err(ncps_core::Error::Input(_))));
    assert!(matches!(a.shifted_compose(&b), Err(ncps_core::Error::Input(_))));
}
