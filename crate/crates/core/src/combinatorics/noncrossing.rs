use crate::error::{Error, Result};

/// Hard upper bound on `n` for [`non_crossing_partitions`]; `C_12 = 208012`.
pub const NC_CAP: usize = 12;

/// A non-crossing partition of `{1..n}`.
///
/// Blocks are stored sorted internally and ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NonCrossingPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::input("empty block"));
            }
            for &i in b {
                if i == 0 || i > n || seen[i] {
                    return Err(Error::input(format!("blocks do not partition 1..={n}")));
                }
                seen[i] = true;
            }
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err(Error::input(format!("blocks do not cover 1..={n}")));
        }
        if !is_non_crossing(&blocks) {
            return Err(Error::input("partition has a crossing"));
        }
        Ok(NonCrossingPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// True when no `a < b < c < d` has `a, c` in one block and `b, d` in another.
pub fn is_non_crossing(blocks: &[Vec<usize>]) -> bool {
    for (i, p) in blocks.iter().enumerate() {
        for q in blocks.iter().skip(i + 1) {
            for &a in p {
                for &c in p.iter().filter(|&&c| c > a) {
                    let inside = q.iter().any(|&b| a < b && b < c);
                    let outside = q.iter().any(|&d| d < a || d > c);
                    if inside && outside {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All non-crossing partitions of `{1..n}`, sorted by their block lists.
///
/// Built by choosing the block of the least element; the gaps it leaves are
/// intervals that are partitioned independently.
pub fn non_crossing_partitions(n: usize) -> Result<Vec<NonCrossingPartition>> {
    if n == 0 {
        return Err(Error::input("non-crossing partitions need n >= 1"));
    }
    if n > NC_CAP {
        return Err(Error::input(format!("n = {n} exceeds the non-crossing cap {NC_CAP}")));
    }
    let mut out: Vec<NonCrossingPartition> = of_interval(1, n)
        .into_iter()
        .map(|mut blocks| {
            for b in &mut blocks {
                b.sort_unstable();
            }
            blocks.sort();
            NonCrossingPartition { n, blocks }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Non-crossing partitions of the interval `lo..=hi` (empty when `lo > hi`).
fn of_interval(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let rest: Vec<usize> = (lo + 1..=hi).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << rest.len()) {
        let mut block = vec![lo];
        block.extend(
            rest.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x),
        );
        // gaps between consecutive block elements, then the tail
        let mut gaps: Vec<(usize, usize)> = block.windows(2).map(|p| (p[0] + 1, p[1] - 1)).collect();
        gaps.push((block[block.len() - 1] + 1, hi));
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for (a, b) in gaps {
            let fills = of_interval(a, b);
            partial = partial
                .iter()
                .flat_map(|p| {
                    fills.iter().map(move |f| {
                        let mut q = p.clone();
                        q.extend(f.iter().cloned());
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

pub fn catalan(n: usize) -> u64 {
    let mut c = 1u64;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All set partitions of `{1..n}` from restricted growth strings.
    fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
        fn rec(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
            if i == n {
                let mut blocks = vec![Vec::new(); max + 1];
                for (pos, &b) in rgs.iter().enumerate() {
                    blocks[b].push(pos + 1);
                }
                out.push(blocks);
                return;
            }
            for b in 0..=max + 1 {
                rgs.push(b);
                rec(i + 1, n, rgs, max.max(b), out);
                rgs.pop();
            }
        }
        let mut out = Vec::new();
        let mut rgs = vec![0];
        rec(1, n, &mut rgs, 0, &mut out);
        out
    }

    #[test]
    fn small_counts() {
        assert_eq!(non_crossing_partitions(1).unwrap().len(), 1);
        assert_eq!(non_crossing_partitions(3).unwrap().len(), 5);
        assert_eq!(non_crossing_partitions(4).unwrap().len(), 14);
    }

    #[test]
    fn matches_filter_oracle_up_to_eight() {
        for n in 1..=8 {
            let mut oracle: Vec<Vec<Vec<usize>>> = all_set_partitions(n)
                .into_iter()
                .filter(|p| is_non_crossing(p))
                .map(|mut p| {
                    p.sort();
                    p
                })
                .collect();
            oracle.sort();
            let got: Vec<Vec<Vec<usize>>> = non_crossing_partitions(n)
                .unwrap()
                .into_iter()
                .map(|p| p.blocks)
                .collect();
            assert_eq!(got, oracle, "n = {n}");
        }
    }

    #[test]
    fn catalan_counts_to_cap() {
        for n in 1..=10 {
            assert_eq!(non_crossing_partitions(n).unwrap().len() as u64, catalan(n));
        }
        assert_eq!(catalan(6), 132);
    }

    #[test]
    fn caps_and_validation() {
        assert!(non_crossing_partitions(0).is_err());
        assert!(non_crossing_partitions(NC_CAP + 1).is_err());
        assert!(NonCrossingPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
        assert!(NonCrossingPartition::new(4, vec![vec![1, 4], vec![2, 3]]).is_ok());
        assert!(NonCrossingPartition::new(3, vec![vec![1, 2]]).is_err());
    }
}
