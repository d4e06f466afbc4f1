use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::coeff::Rational;
use crate::error::{Error, Result};

/// Unlabeled non-planar rooted tree.
///
/// The children are kept sorted by [`Ord`] (size first, then recursively by
/// children), so structural equality is isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    children: Vec<RootedTree>,
    size: usize,
}

impl RootedTree {
    pub fn leaf() -> Self {
        RootedTree {
            children: Vec::new(),
            size: 1,
        }
    }

    /// `B₊(children)`: a new root over the given branches.
    pub fn graft_root(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        RootedTree { children, size }
    }

    /// The chain with `n` nodes.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(RootedTree::leaf(), |t, _| RootedTree::graft_root(vec![t]))
    }

    /// Root with `k` leaf children.
    pub fn corolla(k: usize) -> Self {
        RootedTree::graft_root(vec![RootedTree::leaf(); k])
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Rebuild bottom-up re-sorting every child list.
    pub fn canonicalize(&self) -> RootedTree {
        RootedTree::graft_root(self.children.iter().map(RootedTree::canonicalize).collect())
    }

    /// Parse the nested-bracket notation, e.g. `[[][]]` for the cherry.
    pub fn parse(s: &str) -> Result<Self> {
        fn rec(bytes: &[u8], pos: &mut usize) -> Result<RootedTree> {
            if bytes.get(*pos) != Some(&b'[') {
                return Err(Error::input("expected '['"));
            }
            *pos += 1;
            let mut children = Vec::new();
            while bytes.get(*pos) == Some(&b'[') {
                children.push(rec(bytes, pos)?);
            }
            if bytes.get(*pos) != Some(&b']') {
                return Err(Error::input("expected ']'"));
            }
            *pos += 1;
            Ok(RootedTree::graft_root(children))
        }
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let t = rec(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::input(format!("trailing characters in tree {s:?}")));
        }
        Ok(t)
    }

    /// Every tree obtained by attaching `branch` as a new child of one
    /// vertex, one entry per vertex in pre-order. When `skip_root` is set,
    /// the root is not used as an attachment point.
    pub fn graft_everywhere(&self, branch: &RootedTree, skip_root: bool) -> Vec<RootedTree> {
        let mut out = Vec::with_capacity(self.size);
        if !skip_root {
            let mut ch = self.children.clone();
            ch.push(branch.clone());
            out.push(RootedTree::graft_root(ch));
        }
        for (i, child) in self.children.iter().enumerate() {
            for grafted in child.graft_everywhere(branch, false) {
                let mut ch = self.children.clone();
                ch[i] = grafted;
                out.push(RootedTree::graft_root(ch));
            }
        }
        out
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical trees with exactly `n` nodes, sorted.
pub fn trees_of_size(n: usize) -> Vec<RootedTree> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new(), vec![RootedTree::leaf()]];
    for m in 2..=n {
        let pool: Vec<RootedTree> = by_size.iter().flatten().cloned().collect();
        let mut level = Vec::new();
        let mut stack = Vec::new();
        child_multisets(&pool, 0, m - 1, &mut stack, &mut level);
        level.sort();
        by_size.push(level);
    }
    if n == 0 {
        return Vec::new();
    }
    by_size.swap_remove(n)
}

/// Non-decreasing selections from `pool[start..]` with total size `budget`.
fn child_multisets(
    pool: &[RootedTree],
    start: usize,
    budget: usize,
    stack: &mut Vec<RootedTree>,
    out: &mut Vec<RootedTree>,
) {
    if budget == 0 {
        out.push(RootedTree::graft_root(stack.clone()));
        return;
    }
    for i in start..pool.len() {
        if pool[i].size > budget {
            continue;
        }
        stack.push(pool[i].clone());
        child_multisets(pool, i, budget - pool[i].size, stack, out);
        stack.pop();
    }
}

/// Canonical trees with `1..=n` nodes, by size then canonical order.
pub fn trees_up_to(n: usize) -> Vec<RootedTree> {
    (1..=n).flat_map(trees_of_size).collect()
}

/// `τ! = |τ| · ∏ s!` over the children `s`.
pub fn tree_factorial(t: &RootedTree) -> u64 {
    t.size as u64 * t.children.iter().map(tree_factorial).product::<u64>()
}

/// `σ(τ) = ∏ mult(c)! · σ(c)^mult(c)` over distinct child shapes `c`.
pub fn symmetry_factor(t: &RootedTree) -> u64 {
    let mut out = 1u64;
    let mut i = 0;
    while i < t.children.len() {
        let mut j = i;
        while j < t.children.len() && t.children[j] == t.children[i] {
            j += 1;
        }
        let mult = (j - i) as u64;
        let s = symmetry_factor(&t.children[i]);
        out *= (1..=mult).product::<u64>() * s.pow(mult as u32);
        i = j;
    }
    out
}

/// Connes–Moscovici coefficient `|τ|! / (τ! σ(τ))`.
pub fn cm_coefficient(t: &RootedTree) -> Rational {
    let fact: BigInt = (1..=t.size as u64).map(BigInt::from).product();
    Rational::new(fact, BigInt::from(tree_factorial(t)) * BigInt::from(symmetry_factor(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Brute force: grow every tree of size n-1 by a leaf at every vertex
    /// and deduplicate.
    fn brute_force(n: usize) -> Vec<RootedTree> {
        let mut level: BTreeSet<RootedTree> = [RootedTree::leaf()].into_iter().collect();
        for _ in 1..n {
            level = level
                .iter()
                .flat_map(|t| t.graft_everywhere(&RootedTree::leaf(), false))
                .collect();
        }
        level.into_iter().collect()
    }

    fn cherry() -> RootedTree {
        RootedTree::corolla(2)
    }

    #[test]
    fn generator_counts() {
        assert_eq!(trees_up_to(1), vec![RootedTree::leaf()]);
        assert_eq!(trees_up_to(3).len(), 4);
        assert_eq!(trees_up_to(4).len(), 8);
        let counts: Vec<usize> = (1..=8).map(|n| trees_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn generator_matches_brute_force() {
        for n in 1..=8 {
            assert_eq!(trees_of_size(n), brute_force(n), "size {n}");
        }
    }

    #[test]
    fn outputs_are_canonical() {
        for t in trees_up_to(7) {
            assert_eq!(t.canonicalize(), t);
            assert_eq!(RootedTree::parse(&t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn parse_canonicalizes_order() {
        let a = RootedTree::parse("[[[]][]]").unwrap();
        let b = RootedTree::parse("[[][[]]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.size(), 4);
        assert!(RootedTree::parse("[[]").is_err());
        assert!(RootedTree::parse("[]]").is_err());
    }

    #[test]
    fn statistics() {
        let leaf = RootedTree::leaf();
        assert_eq!(tree_factorial(&leaf), 1);
        assert_eq!(tree_factorial(&RootedTree::ladder(2)), 2);
        assert_eq!(tree_factorial(&cherry()), 3);
        assert_eq!(symmetry_factor(&leaf), 1);
        assert_eq!(symmetry_factor(&cherry()), 2);
        assert_eq!(symmetry_factor(&RootedTree::ladder(3)), 1);
        assert_eq!(cm_coefficient(&leaf), Rational::from_integer(1.into()));
        assert_eq!(cm_coefficient(&RootedTree::ladder(2)), Rational::from_integer(1.into()));
        assert_eq!(cm_coefficient(&cherry()), Rational::from_integer(1.into()));
        // corolla with three leaves: 4!/(4 * 3!) = 1
        assert_eq!(symmetry_factor(&RootedTree::corolla(3)), 6);
    }

    #[test]
    fn cm_times_weights_is_factorial() {
        for t in trees_up_to(8) {
            let fact: BigInt = (1..=t.size() as u64).map(BigInt::from).product();
            let lhs =
                cm_coefficient(&t) * Rational::from_integer(BigInt::from(tree_factorial(&t) * symmetry_factor(&t)));
            assert_eq!(lhs, Rational::from_integer(fact));
        }
    }
}
