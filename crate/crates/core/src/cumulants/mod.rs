//! Moment–cumulant transforms for the free, Boolean and monotone families,
//! with combinatorial oracles that do not share code with the transforms.
//!
//! Moment series have constant term 1 and cumulant series constant term 0.
//! The free transform is the fixed point `M = 1 + K(xM)`, the Boolean one is
//! `M = 1 + B·M`, and monotone cumulants are the group logarithm of `M`.

mod boolean;
mod dictionary;
mod free;
mod monotone;

pub use boolean::{boolean_from_moments, boolean_oracle_recursion, moments_from_boolean};
pub use dictionary::{dictionary_check, DictionaryReport, IdentityCheck};
pub use free::{free_from_moments, free_oracle_nc, free_oracle_nc_with_cap, moments_from_free, NC_ORACLE_DEFAULT_CAP};
pub use monotone::{
    moments_from_monotone, monotone_formula_symbolic, monotone_from_moments, monotone_oracle_formula,
    monotone_oracle_trees, monotone_oracle_trees_with_cap, prelie_tree_image, HMonomial, SymbolicMoment,
    TREE_ORACLE_DEFAULT_CAP,
};

/// Which cumulant family a transform refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CumulantKind {
    Free,
    Boolean,
    Monotone,
}

use crate::coeff::Rational;
use crate::error::Result;
use crate::series::TruncatedSeries;

impl CumulantKind {
    pub fn moments_to_cumulants(self, m: &TruncatedSeries<Rational>) -> Result<TruncatedSeries<Rational>> {
        match self {
            CumulantKind::Free => free_from_moments(m),
            CumulantKind::Boolean => boolean_from_moments(m),
            CumulantKind::Monotone => monotone_from_moments(m),
        }
    }

    pub fn cumulants_to_moments(self, k: &TruncatedSeries<Rational>) -> Result<TruncatedSeries<Rational>> {
        match self {
            CumulantKind::Free => moments_from_free(k),
            CumulantKind::Boolean => moments_from_boolean(k),
            CumulantKind::Monotone => moments_from_monotone(k),
        }
    }
}
