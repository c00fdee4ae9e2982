//! Brute-force oracles, independent of the closed forms they check.
//!
//! * Twisted Burnside counting: a genus-0 quotient `(Π M_{0,n_i}) / G` has a
//!   point count over `F_q` that is a polynomial `P(q)`, and `P(1)` is its
//!   Euler characteristic. Each group element contributes the number of
//!   configurations on which Frobenius acts through it.
//! * Stable rooted trees, enumerated one by one, whose weighted count gives
//!   the coefficients of `D`.

mod count;
mod group;
mod perm;
mod trees;

pub use count::{
    burnside_quotient, burnside_quotient_chi, exact_degree_count, mobius, twisted_count,
    BurnsideQuotient, SAMPLE_FIELDS,
};
pub use group::{Factor, GroupChoice, PermutationGroupAction};
pub use perm::MarkedPermutation;
pub use trees::{enumerate_stable_rooted_trees, tree_contribution_sum, StableTree, TreeVertex};
