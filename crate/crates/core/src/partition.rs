//! Set partitions of `{1, ..., n}` and generic partitions of arbitrary
//! finite sets of positive integers.
//!
//! Blocks are always kept in *standard order*: sorted internally, and
//! ordered by their minima. The partition `14/25/378/6` is stored as
//! `[[1,4], [2,5], [3,7,8], [6]]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::rgf::Rgf;

/// Validation errors for partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("element {0} appears in more than one block")]
    DuplicateElement(usize),
    #[error("element {element} is outside the ground set 1..={n}")]
    OutOfRange { element: usize, n: usize },
    #[error("blocks do not cover the ground set 1..={n}")]
    IncompleteCover { n: usize },
    #[error("element 0 is not allowed; ground sets are 1-based")]
    ZeroElement,
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A set partition of `{1, ..., n}` into disjoint nonempty blocks, stored in
/// standard order. `n = 0` gives the empty partition with zero blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Build a partition of `{1, ..., n}` from blocks in any order,
    /// normalizing to standard order.
    pub fn new(
        n: usize,
        blocks: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, PartitionError> {
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().collect();
        let mut seen = vec![false; n + 1];
        let mut count = 0usize;
        for (i, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock(i));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 {
                    return Err(PartitionError::ZeroElement);
                }
                if e > n {
                    return Err(PartitionError::OutOfRange { element: e, n });
                }
                if seen[e] {
                    return Err(PartitionError::DuplicateElement(e));
                }
                seen[e] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(PartitionError::IncompleteCover { n });
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// The empty partition of the empty set.
    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks in standard order; each block sorted ascending.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Convert to the restricted growth function encoding: letter `j` at
    /// position `i` when `i` lies in the `j`-th block.
    pub fn to_rgf(&self) -> Rgf {
        let mut word = vec![0usize; self.n];
        for (j, block) in self.blocks.iter().enumerate() {
            for &e in block {
                word[e - 1] = j + 1;
            }
        }
        Rgf::new(word).expect("standard-order blocks always produce a valid RGF")
    }

    /// Restrict to a subset of the ground set, keeping the nonempty
    /// intersections `B_i ∩ s` in standard order.
    pub fn restrict(&self, s: &[usize]) -> Result<GenericPartition, PartitionError> {
        for &e in s {
            if e == 0 {
                return Err(PartitionError::ZeroElement);
            }
            if e > self.n {
                return Err(PartitionError::OutOfRange { element: e, n: self.n });
            }
        }
        let mut member = vec![false; self.n + 1];
        for &e in s {
            member[e] = true;
        }
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&e| member[e]).collect::<Vec<_>>())
            .filter(|b: &Vec<usize>| !b.is_empty())
            .collect();
        GenericPartition::new(blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_blocks(&self.blocks, f)
    }
}

impl FromStr for SetPartition {
    type Err = PartitionError;

    /// Parse block notation such as `14/25/378/6` or `1,10/2,3`. The ground
    /// set is taken to be `1..=max`; an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let blocks = parse_blocks(s)?;
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::new(n, blocks)
    }
}

/// A partition of an arbitrary finite set of positive integers into
/// disjoint nonempty blocks in standard order. This is what a restriction
/// `π ∩ S` produces before standardization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenericPartition {
    blocks: Vec<Vec<usize>>,
}

impl GenericPartition {
    pub fn new(blocks: impl IntoIterator<Item = Vec<usize>>) -> Result<Self, PartitionError> {
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().collect();
        let mut all: Vec<usize> = Vec::new();
        for (i, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock(i));
            }
            block.sort_unstable();
            if block.contains(&0) {
                return Err(PartitionError::ZeroElement);
            }
            all.extend_from_slice(block);
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(PartitionError::DuplicateElement(w[0]));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(GenericPartition { blocks })
    }

    pub fn empty() -> Self {
        GenericPartition { blocks: Vec::new() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Total number of elements across all blocks.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Relabel the `i`-th smallest element as `i`, producing a set
    /// partition of `{1, ..., m}` order-isomorphic to this one.
    pub fn standardize(&self) -> SetPartition {
        let mut elements: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        elements.sort_unstable();
        let rank = |e: usize| elements.binary_search(&e).unwrap() + 1;
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| rank(e)).collect())
            .collect();
        SetPartition::new(elements.len(), blocks)
            .expect("standardization of a valid partition is valid")
    }
}

impl fmt::Display for GenericPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_blocks(&self.blocks, f)
    }
}

impl FromStr for GenericPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GenericPartition::new(parse_blocks(s)?)
    }
}

/// Blocks joined by `/`. Elements are concatenated digit strings when every
/// element is below 10, and comma-separated otherwise (e.g. `1,10/2`).
fn format_blocks(blocks: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let compact = blocks.iter().flatten().all(|&e| e < 10);
    for (i, block) in blocks.iter().enumerate() {
        if i > 0 {
            f.write_str("/")?;
        }
        for (j, e) in block.iter().enumerate() {
            if j > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
    }
    Ok(())
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>, PartitionError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|block| {
            let block = block.trim();
            if block.contains(',') {
                block
                    .split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<usize>()
                            .map_err(|_| PartitionError::Parse(s.to_string()))
                    })
                    .collect()
            } else {
                block
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| PartitionError::Parse(s.to_string()))
                    })
                    .collect()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn standard_order_is_enforced() {
        let part = SetPartition::new(4, vec![vec![3, 2], vec![4, 1]]).unwrap();
        assert_eq!(part.blocks(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(part.to_string(), "14/23");
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 2], vec![]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 2, 3]]).is_err());
        assert!(SetPartition::new(1, vec![vec![0], vec![1]]).is_err());
    }

    #[test]
    fn empty_partition() {
        assert_eq!(SetPartition::empty().n(), 0);
        assert_eq!(SetPartition::empty().block_count(), 0);
        assert_eq!("".parse::<SetPartition>().unwrap(), SetPartition::empty());
        assert_eq!(SetPartition::empty().to_string(), "");
    }

    #[test]
    fn restrict_matches_worked_example() {
        // 12/345/6 restricted to {2,3,5} is 2/35
        let part = p("12/345/6");
        let r = part.restrict(&[2, 3, 5]).unwrap();
        assert_eq!(r.to_string(), "2/35");
        assert_eq!(r.standardize(), p("1/23"));
    }

    #[test]
    fn restrict_empty_subset() {
        let part = p("13/2");
        assert_eq!(part.restrict(&[]).unwrap(), GenericPartition::empty());
    }

    #[test]
    fn restrict_hand_checked() {
        let part = p("13/2");
        assert_eq!(part.restrict(&[1, 3]).unwrap().to_string(), "13");
    }

    #[test]
    fn restrict_rejects_out_of_range() {
        let part = p("12/3");
        assert!(part.restrict(&[4]).is_err());
        assert!(part.restrict(&[0]).is_err());
    }

    #[test]
    fn standardize_examples() {
        let g: GenericPartition = "2/35".parse().unwrap();
        assert_eq!(g.standardize(), p("1/23"));
        let g: GenericPartition = "47/9".parse().unwrap();
        assert_eq!(g.standardize(), p("12/3"));
        // already standard input is fixed
        assert_eq!(p("1/23").restrict(&[1, 2, 3]).unwrap().standardize(), p("1/23"));
    }

    #[test]
    fn standardize_is_idempotent_and_preserves_shape() {
        let g: GenericPartition = "2,11/35".parse().unwrap();
        let std1 = g.standardize();
        let block_sizes: Vec<usize> = g.blocks().iter().map(|b| b.len()).collect();
        let std_sizes: Vec<usize> = std1.blocks().iter().map(|b| b.len()).collect();
        assert_eq!(block_sizes, std_sizes);
        let again = GenericPartition::new(std1.blocks().to_vec()).unwrap().standardize();
        assert_eq!(std1, again);
    }

    #[test]
    fn display_uses_commas_for_large_elements() {
        let part = SetPartition::new(10, vec![vec![1, 10], vec![2, 3, 4, 5, 6, 7, 8, 9]]).unwrap();
        assert_eq!(part.to_string(), "1,10/2,3,4,5,6,7,8,9");
        assert_eq!(part.to_string().parse::<SetPartition>().unwrap(), part);
    }
}
