//! Words, subset splittings, non-crossing partitions and rooted trees.

mod noncrossing;
pub(crate) mod subsets;
mod trees;
mod word;

pub use noncrossing::{catalan, non_crossing_partitions, NonCrossingPartition, NC_CAP};
pub use subsets::{enumerate_subsets, prefix_splits, subset_split, SubsetSplit};
pub use trees::{cm_coefficient, symmetry_factor, tree_factorial, trees_of_size, trees_up_to, RootedTree};
pub use word::{tensor_words_up_to, words_of_length, words_up_to, TensorWord, Word};
