//! Seeded property suites over every layer of the crate.
//!
//! Each suite draws its inputs from its own random stream, so a report is a
//! deterministic function of `(alphabet, degree, trials, seed)`. Trials may
//! run in parallel; the first failing trial by index is the one reported.

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{integer, rational, PolyT, Rational};
use crate::combinatorics::{words_up_to, Word};
use crate::cumulants::{
    boolean_from_moments, boolean_oracle_recursion, dictionary_check, free_from_moments, free_oracle_nc,
    moments_from_boolean, moments_from_free, monotone_oracle_formula, monotone_oracle_trees,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::hopf::{
    commutator, conv_exp, conv_log, convolve, half_shuffle_left, half_shuffle_right, lambda, Character,
    InfinitesimalCharacter, LinearForm,
};
use crate::random::{rng_for, RandomSpec};
use crate::series::TruncatedSeries;

/// A deliberate defect used to check that the suites can fail.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// The pre-Lie product skips the last insertion gap.
    DropInsertionGap,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub alphabet: usize,
    pub degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub execution: Execution,
    /// Restrict to these suite names; `None` runs everything.
    pub only: Option<Vec<String>>,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl VerifyOptions {
    pub fn new(alphabet: usize, degree: usize, trials: usize, seed: u64) -> Self {
        VerifyOptions {
            alphabet,
            degree,
            trials,
            seed,
            execution: Execution::default(),
            only: None,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub failure: Option<Counterexample>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub alphabet: usize,
    pub degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify alphabet={} degree={} trials={} seed={}",
            self.alphabet, self.degree, self.trials, self.seed
        )?;
        for s in &self.suites {
            match &s.failure {
                None => writeln!(f, "  pass  {} ({} trials)", s.name, s.trials)?,
                Some(c) => writeln!(f, "  FAIL  {} (trial {}): {}", s.name, c.trial, c.detail)?,
            }
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        write!(f, "{} suites, {} failed", self.suites.len(), failed)
    }
}

struct Ctx {
    d: usize,
    n: usize,
    fault: Option<Fault>,
}

type Outcome = Result<Option<String>>;

impl Ctx {
    fn spec(&self) -> RandomSpec {
        RandomSpec::new(self.d, self.n)
    }

    /// Shape used by suites that tabulate forms on all tensor words.
    fn hopf_spec(&self) -> RandomSpec {
        RandomSpec::new(self.d, self.n.min(4))
    }

    fn pre_lie(&self, f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
        match self.fault {
            Some(Fault::DropInsertionGap) => f.pre_lie_dropping_last_gap(g),
            None => f.pre_lie(g),
        }
    }

    fn bracket(&self, f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.pre_lie(f, g)?.try_sub(&self.pre_lie(g, f)?)
    }
}

fn differ(what: &str, a: &TruncatedSeries, b: &TruncatedSeries, inputs: &[(&str, &TruncatedSeries)]) -> Option<String> {
    let w = a.first_difference(b)?;
    let shown: Vec<String> = inputs.iter().map(|(n, s)| format!("{n} = {s}")).collect();
    Some(format!(
        "{what}: sides differ at word {w} ({} vs {}); {}",
        a.coefficient(&w),
        b.coefficient(&w),
        shown.join("; ")
    ))
}

fn differ_forms(what: &str, a: &LinearForm, b: &LinearForm) -> Option<String> {
    use crate::hopf::Functional;
    let tw = a.first_difference(b)?;
    Some(format!(
        "{what}: forms differ at {tw} ({} vs {})",
        a.value(&tw),
        b.value(&tw)
    ))
}

macro_rules! check {
    ($e:expr) => {
        if let Some(msg) = $e {
            return Ok(Some(msg));
        }
    };
}

fn group_associativity(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let (f, g, h) = (s.group_like(r)?, s.group_like(r)?, s.group_like(r)?);
    let lhs = f.shifted_compose(&g)?.shifted_compose(&h)?;
    let rhs = f.shifted_compose(&g.shifted_compose(&h)?)?;
    Ok(differ(
        "(f•g)•h = f•(g•h)",
        &lhs,
        &rhs,
        &[("f", &f), ("g", &g), ("h", &h)],
    ))
}

fn group_unit(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let f = c.spec().group_like(r)?;
    let one = TruncatedSeries::one(c.d, c.n)?;
    check!(differ("1•f = f", &one.shifted_compose(&f)?, &f, &[("f", &f)]));
    Ok(differ("f•1 = f", &f.shifted_compose(&one)?, &f, &[("f", &f)]))
}

fn group_inverse(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let f = c.spec().group_like(r)?;
    let inv = f.shifted_inverse()?;
    let one = TruncatedSeries::one(c.d, c.n)?;
    check!(differ("f⁻¹•f = 1", &inv.shifted_compose(&f)?, &one, &[("f", &f)]));
    Ok(differ("f•f⁻¹ = 1", &f.shifted_compose(&inv)?, &one, &[("f", &f)]))
}

fn left_linearity(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let (u, v, g) = (s.lie_like(r)?, s.lie_like(r)?, s.group_like(r)?);
    let a = rational(r.random_range(-4..=4), r.random_range(1..=3));
    let b = rational(r.random_range(-4..=4), r.random_range(1..=3));
    let one = TruncatedSeries::one(c.d, c.n)?;
    let dev = |x: &TruncatedSeries| -> Result<TruncatedSeries> { one.try_add(x)?.shifted_compose(&g)?.try_sub(&g) };
    let lhs = dev(&u.scale(&a).try_add(&v.scale(&b))?)?;
    let rhs = dev(&u)?.scale(&a).try_add(&dev(&v)?.scale(&b))?;
    Ok(differ("left-linearity", &lhs, &rhs, &[("u", &u), ("v", &v), ("g", &g)]))
}

fn pre_lie_identity(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let (f, g, h) = (s.lie_like(r)?, s.lie_like(r)?, s.lie_like(r)?);
    let assoc = |x: &TruncatedSeries, y: &TruncatedSeries, z: &TruncatedSeries| -> Result<TruncatedSeries> {
        c.pre_lie(&c.pre_lie(x, y)?, z)?
            .try_sub(&c.pre_lie(x, &c.pre_lie(y, z)?)?)
    };
    Ok(differ(
        "right pre-Lie identity",
        &assoc(&f, &g, &h)?,
        &assoc(&f, &h, &g)?,
        &[("f", &f), ("g", &g), ("h", &h)],
    ))
}

fn lie_axioms(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let (f, g, h) = (s.lie_like(r)?, s.lie_like(r)?, s.lie_like(r)?);
    check!(differ(
        "[f,g] = -[g,f]",
        &c.bracket(&f, &g)?,
        &c.bracket(&g, &f)?.neg(),
        &[("f", &f), ("g", &g)]
    ));
    let jacobi = c
        .bracket(&f, &c.bracket(&g, &h)?)?
        .try_add(&c.bracket(&g, &c.bracket(&h, &f)?)?)?
        .try_add(&c.bracket(&h, &c.bracket(&f, &g)?)?)?;
    Ok(differ(
        "Jacobi",
        &jacobi,
        &TruncatedSeries::zero(c.d, c.n)?,
        &[("f", &f), ("g", &g), ("h", &h)],
    ))
}

fn pre_lie_monomials(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let n = r.random_range(1..=4usize);
    let m = r.random_range(1..=4usize);
    let monomial =
        |k: usize, coeff: i64| TruncatedSeries::univariate(8, &[vec![integer(0); k], vec![integer(coeff)]].concat());
    let lhs = c.pre_lie(&monomial(n, 1)?, &monomial(m, 1)?)?;
    Ok(differ(
        "x^n◁x^m = (n+1)x^(n+m)",
        &lhs,
        &monomial(n + m, n as i64 + 1)?,
        &[],
    ))
}

fn exp_log(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let (h, f) = (s.lie_like(r)?, s.group_like(r)?);
    check!(differ("log(exp h) = h", &h.exp_g()?.log_g()?, &h, &[("h", &h)]));
    Ok(differ("exp(log f) = f", &f.log_g()?.exp_g()?, &f, &[("f", &f)]))
}

fn truncation_coherence(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let m = r.random_range(1..=c.n);
    let (f, g) = (s.group_like(r)?, s.group_like(r)?);
    let (u, v) = (s.lie_like(r)?, s.lie_like(r)?);
    let t = |x: &TruncatedSeries| x.truncate(m);
    let pairs = [
        (
            "compose",
            f.shifted_compose(&g)?.truncate(m)?,
            t(&f)?.shifted_compose(&t(&g)?)?,
        ),
        ("product", f.cauchy_mul(&g)?.truncate(m)?, t(&f)?.cauchy_mul(&t(&g)?)?),
        (
            "shifted inverse",
            f.shifted_inverse()?.truncate(m)?,
            t(&f)?.shifted_inverse()?,
        ),
        ("pre-Lie", c.pre_lie(&u, &v)?.truncate(m)?, c.pre_lie(&t(&u)?, &t(&v)?)?),
        ("exp", u.exp_g()?.truncate(m)?, t(&u)?.exp_g()?),
    ];
    for (name, a, b) in &pairs {
        check!(differ(
            &format!("{name} commutes with truncation to {m}"),
            a,
            b,
            &[("f", &f), ("g", &g), ("u", &u), ("v", &v)]
        ));
    }
    Ok(None)
}

fn flow_equation(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let h = c.spec().lie_like(r)?;
    let m = h.flow()?;
    check!(differ(
        "flow at t=1 = exp_G",
        &m.specialize(&integer(1)),
        &h.exp_g()?,
        &[("h", &h)]
    ));
    if !m.satisfies_flow_equation(&h)? {
        return Ok(Some(format!("d/dt M = h + (M-1)◁h fails for h = {h}")));
    }
    Ok(None)
}

fn bch_second_order(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let (f, g) = (s.lie_like(r)?, s.lie_like(r)?);
    let z = f.bch(&g)?;
    check!(differ(
        "exp(bch(f,g)) = exp f • exp g",
        &z.exp_g()?,
        &f.exp_g()?.shifted_compose(&g.exp_g()?)?,
        &[("f", &f), ("g", &g)]
    ));
    let rest = z
        .try_sub(&f)?
        .try_sub(&g)?
        .try_sub(&c.bracket(&f, &g)?.scale(&rational(1, 2)))?;
    match rest.order() {
        Some(k) if k < 3 => Ok(Some(format!(
            "bch(f,g) - f - g - [f,g]/2 has a term of degree {k}; f = {f}; g = {g}"
        ))),
        _ => Ok(None),
    }
}

fn univariate_isomorphism(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = RandomSpec::new(1, c.n).rationals();
    let (f, g) = (s.group_like(r)?, s.group_like(r)?);
    if !f.mu_compose_check(&g)? {
        return Ok(Some(format!("μ(f•g) ≠ μ(f)∘μ(g); f = {f}; g = {g}")));
    }
    Ok(None)
}

fn convolution_associativity(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.hopf_spec();
    let (a, b, d) = (s.form_with_unit(r)?, s.form_with_unit(r)?, s.form_with_unit(r)?);
    let lhs = convolve(&convolve(&a, &b)?, &d)?;
    let rhs = convolve(&a, &convolve(&b, &d)?)?;
    Ok(differ_forms("(φ∗ψ)∗ρ = φ∗(ψ∗ρ)", &lhs, &rhs))
}

fn shuffle_identities(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.hopf_spec();
    let (a, b, d) = (s.form(r)?, s.form(r)?, s.form(r)?);
    let (l, rt) = (half_shuffle_left, half_shuffle_right);
    check!(differ_forms(
        "(φ≺ψ)≺ρ = φ≺(ψ∗ρ)",
        &l(&l(&a, &b)?, &d)?,
        &l(&a, &convolve(&b, &d)?)?
    ));
    check!(differ_forms(
        "(φ≻ψ)≺ρ = φ≻(ψ≺ρ)",
        &l(&rt(&a, &b)?, &d)?,
        &rt(&a, &l(&b, &d)?)?
    ));
    check!(differ_forms(
        "φ≻(ψ≻ρ) = (φ∗ψ)≻ρ",
        &rt(&a, &rt(&b, &d)?)?,
        &rt(&convolve(&a, &b)?, &d)?
    ));
    let split = l(&a, &b)?.try_add(&rt(&a, &b)?)?;
    Ok(differ_forms("φ≺ψ + φ≻ψ = φ∗ψ", &split, &convolve(&a, &b)?))
}

fn group_isomorphism(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.hopf_spec();
    let (phi, psi) = (s.character(r)?, s.character(r)?);
    let lhs = lambda(&convolve(&phi, &psi)?);
    let (f, g) = (phi.lambda_gr(), psi.lambda_gr());
    Ok(differ(
        "Λ(Φ∗Ψ) = ΛΦ•ΛΨ",
        &lhs,
        &f.shifted_compose(&g)?,
        &[("ΛΦ", &f), ("ΛΨ", &g)],
    ))
}

fn lie_isomorphism(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.hopf_spec();
    let (a, b) = (s.infinitesimal(r)?, s.infinitesimal(r)?);
    let lhs = lambda(&commutator(&a, &b)?);
    let (f, g) = (a.lambda_lie(), b.lambda_lie());
    Ok(differ(
        "Λ[φ,ψ]∗ = [Λφ,Λψ]",
        &lhs,
        &c.bracket(&f, &g)?,
        &[("Λφ", &f), ("Λψ", &g)],
    ))
}

fn half_shuffle_series(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.hopf_spec();
    let phi = s.form(r)?;
    let f = lambda(&phi);
    let gamma = s.character(r)?;
    let g = gamma.lambda_gr();
    let sub = f.shifted_substitute(&g)?;
    check!(differ(
        "Λ(φ≺Γ) = f(xg)",
        &lambda(&half_shuffle_left(&phi, &gamma)?),
        &sub,
        &[("f", &f), ("g", &g)]
    ));
    let g1 = g.add_constant(&integer(-1));
    check!(differ(
        "Λ(φ≻Γ) = (g-1)f(xg)",
        &lambda(&half_shuffle_right(&phi, &gamma)?),
        &g1.cauchy_mul(&sub)?,
        &[("f", &f), ("g", &g)]
    ));
    let rho = s.infinitesimal(r)?;
    let k = rho.lambda_lie();
    check!(differ(
        "Λ(φ≻ρ) = g·f",
        &lambda(&half_shuffle_right(&phi, &rho)?),
        &k.cauchy_mul(&f)?,
        &[("f", &f), ("g", &k)]
    ));
    Ok(differ(
        "Λ(φ∗ρ) = f◁g",
        &lambda(&convolve(&phi, &rho)?),
        &c.pre_lie(&f, &k)?,
        &[("f", &f), ("g", &k)],
    ))
}

fn conv_exp_log(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.hopf_spec();
    let rho = s.infinitesimal(r)?;
    let phi = s.character(r)?;
    if conv_log(&conv_exp(&rho)?)? != rho {
        return Ok(Some(format!("log*(exp* ρ) ≠ ρ for Λρ = {}", rho.lambda_lie())));
    }
    if conv_exp(&conv_log(&phi)?)? != phi {
        return Ok(Some(format!("exp*(log* Φ) ≠ Φ for ΛΦ = {}", phi.lambda_gr())));
    }
    Ok(None)
}

fn exponential_coherence(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let degree = if c.d <= 2 { c.n.min(5) } else { c.n.min(4) };
    let h = RandomSpec::new(c.d, degree).lie_like(r)?;
    let e = h.exp_g()?;
    let hopf = conv_exp(&InfinitesimalCharacter::from_series(&h)?)?.lambda_gr();
    check!(differ("exp_G(h) = Λ exp*(ρ)", &e, &hopf, &[("h", &h)]));
    Ok(differ(
        "exp_G(h) = tree expansion",
        &e,
        &monotone_oracle_trees(&h)?,
        &[("h", &h)],
    ))
}

fn free_oracle(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let cap = if c.d <= 2 { 6 } else { 5 };
    let k = RandomSpec::new(c.d, c.n.min(cap)).rationals().lie_like(r)?;
    let m = moments_from_free(&k)?;
    for w in words_up_to(k.alphabet(), k.degree()) {
        let oracle = free_oracle_nc(&k, &w)?;
        if oracle != m.coefficient(&w) {
            return Ok(Some(format!(
                "free moment at {w}: {} vs NC sum {oracle}; K = {k}",
                m.coefficient(&w)
            )));
        }
    }
    check!(differ(
        "free cumulants of moments",
        &free_from_moments(&m)?,
        &k,
        &[("K", &k)]
    ));
    let m2 = c.spec().group_like(r)?;
    Ok(differ(
        "moments of free cumulants",
        &moments_from_free(&free_from_moments(&m2)?)?,
        &m2,
        &[("M", &m2)],
    ))
}

fn boolean_transforms(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let s = c.spec();
    let b = s.lie_like(r)?;
    let m = moments_from_boolean(&b)?;
    check!(differ(
        "M = 1 + βM vs Σ m(u)β(v)",
        &m,
        &boolean_oracle_recursion(&b)?,
        &[("β", &b)]
    ));
    check!(differ(
        "Boolean round trip",
        &boolean_from_moments(&m)?,
        &b,
        &[("β", &b)]
    ));
    let m2 = s.group_like(r)?;
    Ok(differ(
        "Boolean round trip on moments",
        &moments_from_boolean(&boolean_from_moments(&m2)?)?,
        &m2,
        &[("M", &m2)],
    ))
}

fn monotone_formula(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let h = RandomSpec::new(1, c.n).rationals().lie_like(r)?;
    let values: Vec<Rational> = (1..=c.n)
        .map(|k| h.coefficient(&Word::new(vec![1; k]).expect("non-zero letters")))
        .collect();
    let flow = h.flow()?;
    for n in 1..=c.n {
        let expected = monotone_oracle_formula(&values, n)?;
        let got: PolyT = flow.coefficient(&Word::new(vec![1; n])?);
        if got != expected {
            return Ok(Some(format!(
                "m_{n}(t): flow gives {got}, formula gives {expected}; h = {h}"
            )));
        }
    }
    Ok(None)
}

fn dictionary(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let m = c.spec().group_like(r)?;
    let report = dictionary_check(&m)?;
    Ok(report.checks.iter().find(|ch| !ch.passed()).map(|ch| {
        format!(
            "{} fails at {}; M = {m}",
            ch.name,
            ch.first_difference.as_ref().expect("failed")
        )
    }))
}

fn form_fixed_points(c: &Ctx, r: &mut ChaCha8Rng) -> Outcome {
    let m = c.hopf_spec().group_like(r)?;
    let phi = Character::from_series(&m)?;
    let kappa = InfinitesimalCharacter::from_series(&free_from_moments(&m)?)?;
    let beta = InfinitesimalCharacter::from_series(&boolean_from_moments(&m)?)?;
    let eps = LinearForm::counit(m.alphabet(), m.degree())?;
    let whole = LinearForm::materialize(&phi);
    check!(differ_forms(
        "Φ = ε + κ≺Φ",
        &eps.try_add(&half_shuffle_left(&kappa, &phi)?)?,
        &whole
    ));
    Ok(differ_forms(
        "Φ = ε + Φ≻β",
        &eps.try_add(&half_shuffle_right(&phi, &beta)?)?,
        &whole,
    ))
}

type SuiteFn = fn(&Ctx, &mut ChaCha8Rng) -> Outcome;

const SUITES: &[(&str, SuiteFn)] = &[
    ("group-associativity", group_associativity),
    ("group-unit", group_unit),
    ("group-inverse", group_inverse),
    ("left-linearity", left_linearity),
    ("pre-lie-identity", pre_lie_identity),
    ("lie-axioms", lie_axioms),
    ("pre-lie-monomials", pre_lie_monomials),
    ("exp-log", exp_log),
    ("truncation-coherence", truncation_coherence),
    ("flow-equation", flow_equation),
    ("bch", bch_second_order),
    ("univariate-isomorphism", univariate_isomorphism),
    ("convolution-associativity", convolution_associativity),
    ("shuffle-identities", shuffle_identities),
    ("group-isomorphism", group_isomorphism),
    ("lie-isomorphism", lie_isomorphism),
    ("half-shuffle-series", half_shuffle_series),
    ("conv-exp-log", conv_exp_log),
    ("exponential-coherence", exponential_coherence),
    ("free-oracle", free_oracle),
    ("boolean-transforms", boolean_transforms),
    ("monotone-formula", monotone_formula),
    ("dictionary", dictionary),
    ("form-fixed-points", form_fixed_points),
];

/// Names of all suites, in report order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Run the selected suites.
pub fn run(opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.alphabet == 0 || opts.degree == 0 {
        return Err(Error::input("alphabet and degree must be at least 1"));
    }
    if let Some(only) = &opts.only {
        if let Some(bad) = only.iter().find(|n| !SUITES.iter().any(|(s, _)| s == n)) {
            return Err(Error::input(format!("unknown suite {bad:?}")));
        }
    }
    let ctx = Ctx {
        d: opts.alphabet,
        n: opts.degree,
        fault: opts.fault,
    };
    let suites = SUITES
        .iter()
        .filter(|(name, _)| opts.only.as_ref().is_none_or(|o| o.iter().any(|n| n == name)))
        .map(|(name, suite)| {
            let results = opts.execution.map_range(opts.trials, |t| {
                let mut rng = rng_for(opts.seed, name, t as u64);
                match suite(&ctx, &mut rng) {
                    Ok(r) => r,
                    Err(e) => Some(format!("unexpected error: {e}")),
                }
            });
            let failure = results
                .into_iter()
                .enumerate()
                .find_map(|(trial, r)| r.map(|detail| Counterexample { trial, detail }));
            SuiteOutcome {
                name,
                trials: opts.trials,
                failure,
            }
        })
        .collect();
    Ok(VerifyReport {
        alphabet: opts.alphabet,
        degree: opts.degree,
        trials: opts.trials,
        seed: opts.seed,
        suites,
    })
}
