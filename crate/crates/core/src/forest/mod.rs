//! Rooted trees and forests, planar and non-planar, with their products.

pub mod enumerate;
pub(crate) mod flat;
pub mod ops;
pub mod parse;
pub mod planar;
pub mod tree;

pub use enumerate::*;
pub use ops::*;
pub use parse::{parse_forest, parse_planar_forest, parse_planar_tree, parse_tree};
pub use planar::{bminus_planar, PlanarForest, PlanarTree};
pub use tree::{bminus_forest, tree_stats, Forest, RootedTree, TreeStats};

/// Optional vertex color; `None` is the default color.
pub type Color = Option<char>;

/// Largest order enumerated unless configured otherwise.
pub const DEFAULT_MAX_ORDER: usize = 8;
