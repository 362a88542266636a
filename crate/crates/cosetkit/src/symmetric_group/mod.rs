//! Exact computation in the group algebra of the symmetric group: Young
//! symmetrizers, a distinguished two-sided ideal, the resulting semisimple
//! quotient with its two-row blocks, and Specht matrix representations.

pub mod algebra;
pub mod partition;
pub mod perm;
pub mod quotient;
pub mod specht;

pub use algebra::{
    embedded_antisymmetrizer, j_ideal_generators, young_symmetrizer, AlgebraElement, PermIndex,
};
pub use partition::{Partition, Tableau};
pub use perm::Perm;
pub use quotient::{build_tn, two_sided_ideal_membership, IdealSpan, SemisimpleBlock, SemisimpleReport};
pub use specht::{specht_matrices, SpechtModule};
