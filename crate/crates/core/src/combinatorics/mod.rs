//! Compositions, generator subsets and their graphs, ordered presentations,
//! and margin matrices.

pub mod composition;
pub mod graph;
pub mod subset;
pub mod tables;

pub use composition::{compositions, Composition};
pub use graph::{apply_permutation, intersect, ordered_presentation, OrderedPresentation, SubsetGraph};
pub use subset::{
    composition_to_subset, generator_subsets, graph_of_subset, subset_to_composition,
    GeneratorSubset,
};
pub use tables::{contingency_tables, reading_word, ContingencyTables, MarginMatrix};
