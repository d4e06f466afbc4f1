use std::fmt;

use crate::coeff::Coefficient;
use crate::combinatorics::Word;
use crate::error::Result;
use crate::series::TruncatedSeries;

use super::{boolean_from_moments, free_from_moments};

/// Outcome of one identity, with the least differing word on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub first_difference: Option<Word>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.first_difference.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionaryReport {
    pub checks: Vec<IdentityCheck>,
}

impl DictionaryReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

impl fmt::Display for DictionaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.first_difference {
                None => writeln!(f, "pass {}", c.name)?,
                Some(w) => writeln!(f, "FAIL {} at {w}", c.name)?,
            }
        }
        Ok(())
    }
}

fn check<C: Coefficient>(name: &'static str, a: &TruncatedSeries<C>, b: &TruncatedSeries<C>) -> IdentityCheck {
    IdentityCheck {
        name,
        first_difference: a.first_difference(b),
    }
}

/// Checks the identities linking the shifted inverse of a moment series to
/// its free and Boolean cumulants:
///
/// * `M^{•−1} = 1/(1 + κ̂)`
/// * `β̂ = 1 − M^{•−1}(xM)`
/// * `M^{•−1}(xM) = 1/M`
pub fn dictionary_check<C: Coefficient>(m: &TruncatedSeries<C>) -> Result<DictionaryReport> {
    m.require_g1("moment series")?;
    let one = TruncatedSeries::one(m.alphabet(), m.degree())?;
    let inverse = m.shifted_inverse()?;
    let kappa = free_from_moments(m)?;
    let beta = boolean_from_moments(m)?;
    let substituted = inverse.shifted_substitute(m)?;
    Ok(DictionaryReport {
        checks: vec![
            check(
                "shifted inverse = 1/(1+free)",
                &inverse,
                &one.try_add(&kappa)?.cauchy_inv()?,
            ),
            check("boolean = 1 - shifted inverse(xM)", &beta, &one.try_sub(&substituted)?),
            check("shifted inverse(xM) = 1/M", &substituted, &m.cauchy_inv()?),
        ],
    })
}
