//! Sparse word-indexed kernels shared by the series operations.

use std::collections::BTreeMap;

use crate::coeff::Coefficient;
use crate::combinatorics::Word;

pub(crate) type Terms<C> = BTreeMap<Word, C>;

/// `map[w] += c`, removing the entry if it cancels.
pub(crate) fn add_into<C: Coefficient>(map: &mut Terms<C>, w: Word, c: C) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Cauchy product truncated at degree `max`.
///
/// Relies on the length-first word order: the inner loop stops at the first
/// word too long to pair with the current left factor.
pub(crate) fn product<C: Coefficient>(a: &Terms<C>, b: &Terms<C>, max: usize) -> Terms<C> {
    let mut out = Terms::new();
    for (u, fu) in a {
        if u.len() > max {
            break;
        }
        let room = max - u.len();
        for (v, gv) in b.iter().take_while(|(v, _)| v.len() <= room) {
            add_into(&mut out, u.concat(v), fu.times(gv));
        }
    }
    out
}

/// Trie of a series' words, used to evaluate substitutions Horner-style.
struct Trie<C> {
    value: Option<C>,
    children: BTreeMap<u32, Trie<C>>,
}

impl<C: Coefficient> Trie<C> {
    fn build(terms: &Terms<C>) -> Self {
        let mut root = Trie {
            value: None,
            children: BTreeMap::new(),
        };
        for (w, c) in terms {
            let mut node = &mut root;
            for &a in w.letters() {
                node = node.children.entry(a).or_insert_with(|| Trie {
                    value: None,
                    children: BTreeMap::new(),
                });
            }
            node.value = Some(c.clone());
        }
        root
    }
}

/// `f(x g(x))` truncated at `max`: every letter `x_a` of `f` becomes
/// `x_a g(x)`.
///
/// With `S_u = f_u + Σ_a x_a g S_{ua}` the answer is `S_𝟙`; the node at
/// depth `k` only needs degree `max - k`.
pub(crate) fn substitute<C: Coefficient>(f: &Terms<C>, g: &Terms<C>, max: usize) -> Terms<C> {
    fn eval<C: Coefficient>(node: &Trie<C>, g: &Terms<C>, budget: usize) -> Terms<C> {
        let mut out = Terms::new();
        if let Some(c) = &node.value {
            add_into(&mut out, Word::unit(), c.clone());
        }
        if budget == 0 {
            return out;
        }
        for (&a, child) in &node.children {
            let inner = eval(child, g, budget - 1);
            if inner.is_empty() {
                continue;
            }
            for (w, c) in product(g, &inner, budget - 1) {
                let mut letters = Vec::with_capacity(w.len() + 1);
                letters.push(a);
                letters.extend_from_slice(w.letters());
                add_into(&mut out, Word::from_vec_unchecked(letters), c);
            }
        }
        out
    }
    eval(&Trie::build(f), g, max)
}
