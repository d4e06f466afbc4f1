use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A word over the letters `1..=d`; the empty word is the unit `𝟙`.
///
/// Words order by length first, then lexicographically, which is the
/// canonical order used for printing and iteration.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::input("letters must be positive integers"));
        }
        Ok(Word(letters))
    }

    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(a: u32) -> Self {
        assert!(a >= 1, "letters are positive");
        Word(vec![a])
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Subword `w[range]` as a new word.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Letters at the given 0-based positions.
    pub fn extract(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&i| self.0[i]).collect())
    }

    /// Insert `other` at gap `k` (0 ≤ k ≤ len).
    pub fn insert_at(&self, k: usize, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0[..k]);
        v.extend_from_slice(&other.0);
        v.extend_from_slice(&self.0[k..]);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `𝟙` for the unit, otherwise letters joined by `.` (so `12` and `1.2`
/// stay distinguishable for large alphabets).
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "𝟙");
        }
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// All words of length exactly `n` over `1..=d`, in canonical order.
pub fn words_of_length(d: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (1..=d as u32).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Word).collect()
}

/// All words of length `0..=n` over `1..=d`, unit first.
pub fn words_up_to(d: usize, n: usize) -> Vec<Word> {
    (0..=n).flat_map(|k| words_of_length(d, k)).collect()
}

/// A tensor word `w₁|⋯|w_k` of non-empty words; no factors is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorWord(Vec<Word>);

impl TensorWord {
    pub fn new(factors: Vec<Word>) -> Result<Self> {
        if factors.iter().any(Word::is_unit) {
            return Err(Error::input("tensor factors must be non-empty words"));
        }
        Ok(TensorWord(factors))
    }

    pub fn unit() -> Self {
        TensorWord(Vec::new())
    }

    /// The single-factor tensor `(w)`; the unit word maps to the unit tensor.
    pub fn single(w: Word) -> Self {
        if w.is_unit() {
            TensorWord(Vec::new())
        } else {
            TensorWord(vec![w])
        }
    }

    pub fn factors(&self) -> &[Word] {
        &self.0
    }

    pub fn num_factors(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().map(Word::max_letter).max().unwrap_or(0)
    }

    /// Append a factor; the unit word is absorbed.
    pub fn push(&mut self, w: Word) {
        if !w.is_unit() {
            self.0.push(w);
        }
    }

    /// Bar concatenation `m_|`.
    pub fn bar(&self, other: &TensorWord) -> TensorWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        TensorWord(v)
    }

    pub fn first(&self) -> Option<&Word> {
        self.0.first()
    }

    pub fn rest(&self) -> TensorWord {
        TensorWord(self.0.iter().skip(1).cloned().collect())
    }
}

impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// All tensor words of total degree `0..=n` over `1..=d`.
///
/// Each word of length `k` is cut at every subset of its `k-1` inner gaps.
pub fn tensor_words_up_to(d: usize, n: usize) -> Vec<TensorWord> {
    let mut out = vec![TensorWord::unit()];
    for k in 1..=n {
        for w in words_of_length(d, k) {
            for cuts in 0u64..(1u64 << (k - 1)) {
                let mut factors = Vec::new();
                let mut start = 0;
                for gap in 0..k - 1 {
                    if cuts >> gap & 1 == 1 {
                        factors.push(w.slice(start..gap + 1));
                        start = gap + 1;
                    }
                }
                factors.push(w.slice(start..k));
                out.push(TensorWord(factors));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        let mut ws = vec![w(&[2]), w(&[1, 1]), w(&[]), w(&[1]), w(&[2, 1, 1])];
        ws.sort();
        assert_eq!(ws, vec![w(&[]), w(&[1]), w(&[2]), w(&[1, 1]), w(&[2, 1, 1])]);
    }

    #[test]
    fn zero_letter_rejected() {
        assert!(Word::new(vec![1, 0]).is_err());
        assert!(TensorWord::new(vec![Word::unit()]).is_err());
    }

    #[test]
    fn word_counts() {
        assert_eq!(words_of_length(3, 4).len(), 81);
        assert_eq!(words_up_to(2, 3).len(), 15);
    }

    #[test]
    fn tensor_word_counts() {
        // degree k contributes d^k * 2^(k-1) tensor words
        let all = tensor_words_up_to(2, 4);
        assert_eq!(all.len(), 1 + 2 + 8 + 32 + 128);
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn insertion_gaps() {
        let x = w(&[1, 2]);
        let y = w(&[3]);
        let got: Vec<_> = (0..=2).map(|k| x.insert_at(k, &y)).collect();
        assert_eq!(got, vec![w(&[3, 1, 2]), w(&[1, 3, 2]), w(&[1, 2, 3])]);
    }
}
