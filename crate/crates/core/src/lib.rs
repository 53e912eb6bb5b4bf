//! The descent algebra of the symmetric group `S_n`.
//!
//! Basis elements `B_κ` are indexed by compositions `κ` of `n`; `B_κ` is the
//! sum of the minimal-length left coset representatives of the Young subgroup
//! `S_κ`. Products are computed by Solomon's rule: `B_κ B_ν` is the sum of
//! `B_η` over all non-negative integer matrices with row sums `ν` and column
//! sums `κ`, where `η` reads the non-zero entries row by row.
//!
//! Alongside the fast rule the crate carries everything needed to check it
//! independently: permutations, a sparse group algebra, the coset
//! representatives themselves, and the map from double-set elements to
//! margin matrices.

pub mod coefficient;
pub mod combinatorics;
pub mod cosets;
pub mod descent;
pub mod error;
pub mod export;
pub mod group_algebra;
pub mod perm;

pub use coefficient::Coefficient;
pub use combinatorics::{
    composition_to_subset, compositions, contingency_tables, generator_subsets, graph_of_subset,
    reading_word, subset_to_composition, Composition, GeneratorSubset, MarginMatrix,
    OrderedPresentation, SubsetGraph,
};
pub use cosets::{
    enumerate_double_set, enumerate_left_reps, is_left_rep, predicted_presentation, verify_lemma,
    zeta, LemmaOptions, LemmaReport,
};
pub use descent::{
    element_multiply, expanded_term_count, oracle_multiply, solomon_multiply, structure_constants, to_group_algebra,
    DescentElement, StructureTable,
};
pub use error::{Error, Result};
pub use group_algebra::{algebra_multiply, GroupAlgebraElement};
pub use perm::{enumerate_group, Permutation};

/// Descent-algebra element with `i64` coefficients.
pub type Descent64 = DescentElement<i64>;
/// Descent-algebra element with `i128` coefficients.
pub type Descent128 = DescentElement<i128>;
/// Group-algebra element with `i64` coefficients.
pub type GroupElement64 = GroupAlgebraElement<i64>;
/// Group-algebra element with `i128` coefficients.
pub type GroupElement128 = GroupAlgebraElement<i128>;
/// Structure constants with `i64` coefficients.
pub type StructureTable64 = StructureTable<i64>;

/// Degree limits for the enumeration-heavy operations.
///
/// `oracle` caps anything that enumerates permutations (`n!` growth), `basis`
/// caps margin-matrix work, `lemma` caps exhaustive lemma verification over
/// all `(J, K)` pairs, `parabolic` caps the subgroup-intersection check and
/// `counting` caps the all-pairs multinomial identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub oracle: usize,
    pub basis: usize,
    pub lemma: usize,
    pub parabolic: usize,
    pub counting: usize,
}

impl Bounds {
    pub const DEFAULT: Bounds = Bounds {
        oracle: 7,
        basis: 12,
        lemma: 6,
        parabolic: 5,
        counting: 8,
    };

    /// Raises (or lowers) every limit to `max_n`.
    pub fn with_max_n(self, max_n: usize) -> Bounds {
        Bounds {
            oracle: max_n,
            basis: max_n,
            lemma: max_n,
            parabolic: max_n,
            counting: max_n,
        }
    }

    fn check(n: usize, max: usize, what: &'static str) -> Result<()> {
        if n == 0 || n > max {
            Err(Error::OutOfRange { n, max, what })
        } else {
            Ok(())
        }
    }

    pub fn check_oracle(&self, n: usize) -> Result<()> {
        Self::check(n, self.oracle, "group-algebra enumeration")
    }

    pub fn check_basis(&self, n: usize) -> Result<()> {
        Self::check(n, self.basis, "basis-level products")
    }

    pub fn check_lemma(&self, n: usize) -> Result<()> {
        Self::check(n, self.lemma, "lemma verification")
    }

    pub fn check_counting(&self, n: usize) -> Result<()> {
        Self::check(n, self.counting, "counting identity")
    }

    pub fn check_parabolic(&self, n: usize) -> Result<()> {
        Self::check(n, self.parabolic, "parabolic subgroup check")
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::DEFAULT
    }
}
