use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::coeff::{integer, Coefficient, PolyT, Rational};
use crate::combinatorics::{symmetry_factor, tree_factorial, trees_up_to, RootedTree};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Default largest truncation accepted by [`monotone_oracle_trees`].
pub const TREE_ORACLE_DEFAULT_CAP: usize = 8;

/// Monotone cumulants `h = log_G(M)`.
pub fn monotone_from_moments<C: Coefficient>(m: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    m.log_g()
}

/// Moments `M = exp_G(h)`.
pub fn moments_from_monotone<C: Coefficient>(h: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    h.exp_g()
}

/// Compositions `i₁ + ⋯ + i_k = n` with positive parts.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weight `(i₁+1)(i₁+i₂+1)⋯(i₁+⋯+i_{k−1}+1)/k!` of one composition.
fn composition_weight(parts: &[usize]) -> Rational {
    let mut weight = Rational::one();
    let mut partial = 0;
    for &i in &parts[..parts.len() - 1] {
        partial += i;
        weight *= integer(partial as i64 + 1);
    }
    let k = parts.len() as i64;
    let factorial: Rational = (1..=k).map(integer).product();
    weight / factorial
}

/// `m_n(t)` from the explicit composition sum, for numeric `h₁, h₂, …`
/// given as `h[0], h[1], …`.
pub fn monotone_oracle_formula(h: &[Rational], n: usize) -> Result<PolyT> {
    if n == 0 {
        return Ok(PolyT::one());
    }
    if h.len() < n {
        return Err(Error::input(format!("m_{n} needs h_1..h_{n}, got {} values", h.len())));
    }
    Ok(PolyT::from_terms(compositions(n).into_iter().map(|parts| {
        let mut c = composition_weight(&parts);
        for &i in &parts {
            c *= &h[i - 1];
        }
        (c, parts.len() as u32)
    })))
}

/// A monomial `h_{i₁}⋯h_{i_k}`, indices sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HMonomial(Vec<u32>);

impl HMonomial {
    pub fn new(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        HMonomial(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    fn eval(&self, h: &[Rational]) -> Rational {
        self.0.iter().map(|&i| h[i as usize - 1].clone()).product()
    }
}

impl fmt::Display for HMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut k = 0;
        while k < self.0.len() {
            let i = self.0[k];
            let run = self.0[k..].iter().take_while(|&&j| j == i).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "h{i}")?;
            } else {
                write!(f, "h{i}^{run}")?;
            }
            k += run;
        }
        Ok(())
    }
}

/// `m_n(t)` as a polynomial in the symbols `h_i` and `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMoment {
    // keyed by (t-exponent, monomial)
    terms: BTreeMap<(u32, HMonomial), Rational>,
}

impl SymbolicMoment {
    pub fn terms(&self) -> impl Iterator<Item = (u32, &HMonomial, &Rational)> {
        self.terms.iter().map(|((e, m), c)| (*e, m, c))
    }

    pub fn coefficient(&self, t_exponent: u32, monomial: &HMonomial) -> Rational {
        self.terms
            .get(&(t_exponent, monomial.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Substitute numeric values `h[0] = h₁, …`.
    pub fn eval(&self, h: &[Rational]) -> Result<PolyT> {
        let needed = self
            .terms
            .keys()
            .flat_map(|(_, m)| m.0.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        if h.len() < needed {
            return Err(Error::input(format!("need h_1..h_{needed}, got {} values", h.len())));
        }
        Ok(PolyT::from_terms(
            self.terms.iter().map(|((e, m), c)| (c * m.eval(h), *e)),
        ))
    }
}

/// Renders as e.g. `h3*t + 5/2*h1*h2*t^2 + h1^3*t^3`.
impl fmt::Display for SymbolicMoment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((e, m), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match k {
                0 if c.is_negative() => write!(f, "-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let mut factors = Vec::new();
            let mag = c.abs();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            if !m.0.is_empty() {
                factors.push(m.to_string());
            }
            match e {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{e}")),
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// The composition sum for `m_n(t)` with symbolic `h_i`.
pub fn monotone_formula_symbolic(n: usize) -> SymbolicMoment {
    let mut terms = BTreeMap::new();
    if n == 0 {
        terms.insert((0, HMonomial::new(vec![])), Rational::one());
    }
    for parts in compositions(n) {
        let key = (
            parts.len() as u32,
            HMonomial::new(parts.iter().map(|&i| i as u32).collect()),
        );
        let entry: &mut Rational = terms.entry(key).or_insert_with(Rational::zero);
        *entry += composition_weight(&parts);
    }
    SymbolicMoment { terms }
}

struct TreeImages<'a, C: Coefficient> {
    h: &'a TruncatedSeries<C>,
    memo: HashMap<RootedTree, TruncatedSeries<C>>,
}

impl<C: Coefficient> TreeImages<'_, C> {
    fn image(&mut self, tree: &RootedTree) -> Result<TruncatedSeries<C>> {
        if let Some(s) = self.memo.get(tree) {
            return Ok(s.clone());
        }
        let out = if tree.size() > self.h.degree() {
            TruncatedSeries::zero(self.h.alphabet(), self.h.degree())?
        } else {
            match tree.children() {
                [] => self.h.clone(),
                [only] => self.h.pre_lie(&self.image(only)?)?,
                children => {
                    // τ'◁τ_k grafts τ_k onto every vertex of τ'; the root
                    // graft is τ itself, the others have fewer root branches.
                    let (last, rest) = children.split_last().expect("k ≥ 2");
                    let trunk = RootedTree::graft_root(rest.to_vec());
                    let mut acc = self.image(&trunk)?.pre_lie(&self.image(last)?)?;
                    for other in trunk.graft_everywhere(last, true) {
                        acc = acc.try_sub(&self.image(&other)?)?;
                    }
                    acc
                }
            }
        };
        self.memo.insert(tree.clone(), out.clone());
        Ok(out)
    }
}

/// `P_h(τ)`, the image of `τ` under the pre-Lie morphism sending the
/// one-vertex tree to `h`.
pub fn prelie_tree_image<C: Coefficient>(tree: &RootedTree, h: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    h.require_g0("pre-Lie tree image")?;
    TreeImages {
        h,
        memo: HashMap::new(),
    }
    .image(tree)
}

/// `1 + Σ_τ P_h(τ) / (τ! σ(τ))` over trees with at most `N` vertices.
pub fn monotone_oracle_trees<C: Coefficient>(h: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    monotone_oracle_trees_with_cap(h, TREE_ORACLE_DEFAULT_CAP)
}

pub fn monotone_oracle_trees_with_cap<C: Coefficient>(
    h: &TruncatedSeries<C>,
    cap: usize,
) -> Result<TruncatedSeries<C>> {
    h.require_g0("monotone tree oracle")?;
    if h.degree() > cap {
        return Err(Error::input(format!(
            "truncation {} exceeds the tree oracle cap {cap}",
            h.degree()
        )));
    }
    let mut images = TreeImages {
        h,
        memo: HashMap::new(),
    };
    let mut acc = TruncatedSeries::one(h.alphabet(), h.degree())?;
    for tree in trees_up_to(h.degree()) {
        let weight = Rational::new(1.into(), (tree_factorial(&tree) * symmetry_factor(&tree)).into());
        acc = acc.try_add(&images.image(&tree)?.scale(&weight))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational;
    use crate::series::tests::uni;

    #[test]
    fn formula_low_orders() {
        assert_eq!(monotone_formula_symbolic(1).to_string(), "h1*t");
        assert_eq!(monotone_formula_symbolic(2).to_string(), "h2*t + h1^2*t^2");
        assert_eq!(
            monotone_formula_symbolic(3).to_string(),
            "h3*t + 5/2*h1*h2*t^2 + h1^3*t^3"
        );
        let m4 = monotone_formula_symbolic(4);
        assert_eq!(m4.coefficient(3, &HMonomial::new(vec![1, 1, 2])), rational(13, 3));
        assert_eq!(m4.coefficient(2, &HMonomial::new(vec![2, 2])), rational(3, 2));
        assert_eq!(m4.coefficient(2, &HMonomial::new(vec![1, 3])), integer(3));
    }

    #[test]
    fn numeric_formula_matches_symbolic() {
        let h = [integer(2), rational(-1, 3), integer(5), integer(7)];
        for n in 1..=4 {
            assert_eq!(
                monotone_oracle_formula(&h, n).unwrap(),
                monotone_formula_symbolic(n).eval(&h).unwrap()
            );
        }
        assert!(monotone_oracle_formula(&h[..2], 3).is_err());
    }

    #[test]
    fn paper_tree_images() {
        let h = crate::series::tests::ser(2, 4, &[(&[1], 1), (&[2], 2), (&[1, 2], -1)]);
        let hh = h.pre_lie(&h).unwrap();
        assert_eq!(prelie_tree_image(&RootedTree::leaf(), &h).unwrap(), h);
        assert_eq!(prelie_tree_image(&RootedTree::ladder(2), &h).unwrap(), hh);
        let cherry = hh.pre_lie(&h).unwrap().try_sub(&h.pre_lie(&hh).unwrap()).unwrap();
        assert_eq!(prelie_tree_image(&RootedTree::corolla(2), &h).unwrap(), cherry);
    }

    #[test]
    fn tree_oracle_geometric() {
        assert_eq!(monotone_oracle_trees(&uni(3, &[0, 1])).unwrap(), uni(3, &[1, 1, 1, 1]));
        let zero = TruncatedSeries::<Rational>::zero(2, 3).unwrap();
        assert_eq!(
            monotone_oracle_trees(&zero).unwrap(),
            TruncatedSeries::one(2, 3).unwrap()
        );
        assert!(monotone_oracle_trees(&uni(9, &[0, 1])).is_err());
    }

    #[test]
    fn monotone_round_trip() {
        let h = uni(4, &[0, 1, 1]);
        let m = moments_from_monotone(&h).unwrap();
        assert_eq!(
            m.coefficient(&crate::combinatorics::Word::new(vec![1, 1]).unwrap()),
            integer(2)
        );
        assert_eq!(monotone_from_moments(&m).unwrap(), h);
    }
}
