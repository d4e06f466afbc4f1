use super::word::{TensorWord, Word};
use crate::error::{Error, Result};

/// The splitting of a word by an index set `S`: the extracted subword `w_S`
/// and the maximal intervals of the complement, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSplit {
    /// Sorted 1-based positions.
    pub subset: Vec<usize>,
    pub extracted: Word,
    pub blocks: TensorWord,
}

impl SubsetSplit {
    /// `m(S)`, the number of complement intervals.
    pub fn num_blocks(&self) -> usize {
        self.blocks.num_factors()
    }
}

/// All `2^n` subsets of `{1..n}`, ordered by the binary counter whose bit
/// `i` marks membership of `i + 1`.
pub fn enumerate_subsets(n: usize) -> Vec<Vec<usize>> {
    assert!(n < 64, "subset enumeration beyond 63 positions");
    (0u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect())
        .collect()
}

pub fn subset_split(w: &Word, subset: &[usize]) -> Result<SubsetSplit> {
    let n = w.len();
    if n == 0 {
        return Err(Error::input("subset_split needs a non-empty word"));
    }
    if subset.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::input(format!("index set {subset:?} not within 1..={n}")));
    }
    if subset.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::input(format!(
            "index set {subset:?} must be strictly increasing"
        )));
    }
    let mask = subset.iter().fold(0u64, |m, &i| m | 1 << (i - 1));
    let (extracted, blocks) = split_by_mask(w, mask);
    Ok(SubsetSplit {
        subset: subset.to_vec(),
        extracted,
        blocks,
    })
}

/// Mask form of [`subset_split`]: bit `i` selects 0-based position `i`.
pub(crate) fn split_by_mask(w: &Word, mask: u64) -> (Word, TensorWord) {
    let letters = w.letters();
    let mut extracted = Vec::with_capacity(mask.count_ones() as usize);
    let mut blocks = TensorWord::unit();
    let mut current = Vec::new();
    for (i, &a) in letters.iter().enumerate() {
        if mask >> i & 1 == 1 {
            extracted.push(a);
            if !current.is_empty() {
                blocks.push(Word::from_vec_unchecked(std::mem::take(&mut current)));
            }
        } else {
            current.push(a);
        }
    }
    if !current.is_empty() {
        blocks.push(Word::from_vec_unchecked(current));
    }
    (Word::from_vec_unchecked(extracted), blocks)
}

/// All deconcatenations `w = u·v` with `v` non-empty, `u` from `𝟙` upwards.
pub fn prefix_splits(w: &Word) -> Vec<(Word, Word)> {
    (0..w.len()).map(|k| (w.slice(0..k), w.slice(k..w.len()))).collect()
}
