//! Exact combinatorics of shifted shapes: hooks, excited diagrams, bicolored
//! tableaux, hook-length identities, standard tableau counting, and the
//! bumping insertion that proves the identities bijectively.

pub mod bicolored;
pub mod bump;
pub mod counting;
pub mod error;
pub mod excited;
pub mod poly;
pub mod shapes;

pub use num::{BigInt, BigRational, BigUint};

pub use bicolored::{enumerate_bicolored, BicoloredTableau, Color, ColoredEntry};
pub use bump::{
    insert, inverse_insert, repeated_insert, repeated_insert_with, s_family, s_family_k,
    s_family_lambda, s_family_mu, verify_bijection, verify_complexity, verify_sieve,
    virtual_entry, BijectionReport, BumpRecord, ComplexityReport, Dir, InsertResult,
    RepeatedInsert, SieveReport,
};
pub use counting::{
    enumerate_syt, f_backtrack, f_classical, f_naruse, f_recursive, f_straight_shape, SkewSYT,
};
pub use error::{Error, Result};
pub use excited::{enumerate_excited, ExcitedDiagram, MoveTableau};
pub use poly::{
    cover_identity_lhs, cover_identity_rhs, excited_enumerator, geometric_assignment, hook_poly,
    skew_content_sum, verify_cover_identity, verify_weighted_recursion, verify_z_identity,
    w_linear, weighted_enumerator, weighted_hook, x_var_z, Monomial, SparsePoly, VarFamily,
};
pub use shapes::{
    parse_skew, strict_partitions_of, strict_partitions_up_to, Cell, DiagramKind,
    StrictPartition,
};
