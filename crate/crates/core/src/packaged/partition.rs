use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use super::PackagedError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block<T: Ord> {
    pub members: BTreeSet<T>,
    pub weight: u64,
}

impl<T: Ord + Copy> Block<T> {
    pub fn new(members: impl IntoIterator<Item = T>, weight: u64) -> Block<T> {
        Block { members: members.into_iter().collect(), weight }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn least(&self) -> T {
        *self.members.iter().next().expect("blocks are nonempty")
    }
}

/// Weighted partition of a finite ground set. Blocks are kept sorted by
/// their least member, so equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedPartition<T: Ord> {
    blocks: Vec<Block<T>>,
}

impl<T: Ord + Copy + Debug> WeightedPartition<T> {
    /// Checks that `blocks` are nonempty, pairwise disjoint and cover `ground`.
    pub fn new(blocks: Vec<Block<T>>, ground: &BTreeSet<T>) -> Result<WeightedPartition<T>, PackagedError> {
        let mut seen = BTreeSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(PackagedError::EmptyBlock);
            }
            for &m in &block.members {
                if !ground.contains(&m) {
                    return Err(PackagedError::UnknownElement(format!("{m:?}")));
                }
                if !seen.insert(m) {
                    return Err(PackagedError::Overlap(format!("{m:?}")));
                }
            }
        }
        if let Some(m) = ground.iter().find(|m| !seen.contains(m)) {
            return Err(PackagedError::Missing(format!("{m:?}")));
        }
        Ok(WeightedPartition::from_blocks(blocks))
    }

    pub(crate) fn from_blocks(mut blocks: Vec<Block<T>>) -> WeightedPartition<T> {
        blocks.sort_by_key(Block::least);
        WeightedPartition { blocks }
    }

    /// Singleton blocks of weight zero.
    pub fn discrete(ground: impl IntoIterator<Item = T>) -> WeightedPartition<T> {
        WeightedPartition::from_blocks(ground.into_iter().map(|m| Block::new([m], 0)).collect())
    }

    pub fn blocks(&self) -> &[Block<T>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> BTreeSet<T> {
        self.blocks.iter().flat_map(|b| b.members.iter().copied()).collect()
    }

    pub fn block_of(&self, m: T) -> Option<usize> {
        self.blocks.iter().position(|b| b.members.contains(&m))
    }

    /// Block index of every element.
    pub fn index(&self) -> BTreeMap<T, usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.members.iter().map(move |&m| (m, i)))
            .collect()
    }

    /// The same blocks and weights, relabelled elementwise by `f`.
    pub fn transport<U: Ord + Copy + Debug>(&self, f: impl Fn(T) -> U) -> WeightedPartition<U> {
        WeightedPartition::from_blocks(
            self.blocks.iter().map(|b| Block::new(b.members.iter().map(|&m| f(m)), b.weight)).collect(),
        )
    }

    pub fn is_discrete_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1 && b.weight == 0)
    }
}
