use crate::combinatorics::subsets::split_by_mask;
use crate::combinatorics::{TensorWord, Word};
use crate::error::{Error, Result};

/// One summand `left ⊗ right` of a coproduct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoproductTerm {
    pub left: TensorWord,
    pub right: TensorWord,
    pub multiplicity: u64,
}

impl CoproductTerm {
    fn times(&self, other: &CoproductTerm) -> CoproductTerm {
        CoproductTerm {
            left: self.left.bar(&other.left),
            right: self.right.bar(&other.right),
            multiplicity: self.multiplicity * other.multiplicity,
        }
    }
}

fn unit_term() -> CoproductTerm {
    CoproductTerm {
        left: TensorWord::unit(),
        right: TensorWord::unit(),
        multiplicity: 1,
    }
}

fn term_for_mask(w: &Word, mask: u64) -> CoproductTerm {
    let (extracted, blocks) = split_by_mask(w, mask);
    CoproductTerm {
        left: TensorWord::single(extracted),
        right: blocks,
        multiplicity: 1,
    }
}

/// `Δ(w)`, one term per subset of positions (binary-counter order).
pub fn coproduct(w: &Word) -> Vec<CoproductTerm> {
    let n = w.len();
    if n == 0 {
        return vec![unit_term()];
    }
    (0u64..(1u64 << n)).map(|mask| term_for_mask(w, mask)).collect()
}

/// `Δ_≺(w)`: the subsets containing the first position.
pub fn half_coproduct_left(w: &Word) -> Result<Vec<CoproductTerm>> {
    let n = w.len();
    if n == 0 {
        return Err(Error::domain("half-coproducts are not defined on the unit"));
    }
    Ok((0u64..(1u64 << n))
        .filter(|m| m & 1 == 1)
        .map(|mask| term_for_mask(w, mask))
        .collect())
}

/// `Δ_≻(w)`: the subsets avoiding the first position (including `∅`).
pub fn half_coproduct_right(w: &Word) -> Result<Vec<CoproductTerm>> {
    let n = w.len();
    if n == 0 {
        return Err(Error::domain("half-coproducts are not defined on the unit"));
    }
    Ok((0u64..(1u64 << n))
        .filter(|m| m & 1 == 0)
        .map(|mask| term_for_mask(w, mask))
        .collect())
}

fn multiply(acc: Vec<CoproductTerm>, next: &[CoproductTerm]) -> Vec<CoproductTerm> {
    acc.iter().flat_map(|a| next.iter().map(move |b| a.times(b))).collect()
}

fn extend_by_rest(first: Vec<CoproductTerm>, tw: &TensorWord) -> Vec<CoproductTerm> {
    tw.factors()
        .iter()
        .skip(1)
        .fold(first, |acc, w| multiply(acc, &coproduct(w)))
}

/// Multiplicative extension `Δ(w₁|⋯|w_k) = Δ(w₁)⋯Δ(w_k)`.
pub fn coproduct_tensor(tw: &TensorWord) -> Vec<CoproductTerm> {
    tw.factors()
        .iter()
        .fold(vec![unit_term()], |acc, w| multiply(acc, &coproduct(w)))
}

/// `Δ_≺(w₁|w₂|⋯) = Δ_≺(w₁) Δ(w₂|⋯)`.
pub fn half_coproduct_left_tensor(tw: &TensorWord) -> Result<Vec<CoproductTerm>> {
    let first = tw
        .first()
        .ok_or_else(|| Error::domain("half-coproducts are not defined on the unit"))?;
    Ok(extend_by_rest(half_coproduct_left(first)?, tw))
}

/// `Δ_≻(w₁|w₂|⋯) = Δ_≻(w₁) Δ(w₂|⋯)`.
pub fn half_coproduct_right_tensor(tw: &TensorWord) -> Result<Vec<CoproductTerm>> {
    let first = tw
        .first()
        .ok_or_else(|| Error::domain("half-coproducts are not defined on the unit"))?;
    Ok(extend_by_rest(half_coproduct_right(first)?, tw))
}
