//! Set partitions, restricted growth functions, pattern avoidance, and the
//! spread/block/dimension statistics, together with exact generating
//! functions over avoidance classes and the statistic-preserving bijections
//! connecting noncrossing partitions to 321-avoiding permutations.
//!
//! Everything is exact integer combinatorics: brute-force enumeration sums
//! serve as independent oracles for every closed form and recursion in
//! [`genfun`], and [`genfun::verify`] compares the two routes term by term.

pub mod bijections;
pub mod genfun;
pub mod partition;
pub mod patterns;
pub mod perm;
pub mod poly;
pub mod rgf;
pub mod stats;

pub use partition::{GenericPartition, PartitionError, SetPartition};
pub use patterns::{ClassKey, PatternSet};
pub use perm::Permutation;
pub use poly::{Poly, PolyError, Var};
pub use rgf::Rgf;
pub use stats::StatProfile;

/// Default coefficient scalar: 64-bit signed with checked arithmetic.
pub type Coeff = i64;

/// The concrete polynomial type used by the generating-function layer.
pub type MultiPoly = Poly<Coeff>;
