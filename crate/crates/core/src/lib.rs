//! Brauer relations of small finite groups.
//!
//! A formal combination `sum n_H H` of subgroups of a finite group `G` is
//! a Brauer relation when the corresponding sum of induced trivial
//! characters vanishes. This crate computes, exactly over the integers:
//!
//! - the full lattice of Brauer relations of a group (via permutation
//!   characters and an integer left kernel),
//! - the classification cyclic / p-quasi-elementary / not
//!   quasi-elementary,
//! - the ideal `dZ` of coefficients the whole group can carry in a
//!   relation, together with a witness relation realizing `d`, built
//!   constructively for p-quasi-elementary groups by quotient reduction
//!   down to groups `C_l : C_{p^k}`.
//!
//! Groups are enumerated with a dense multiplication table, so the crate
//! is intended for desk-scale orders (at most [`MAX_GROUP_ORDER`]).
//!
//! With the default `parallel` feature the heavier inner loops fan out
//! over rayon; disabling it yields an identical, purely sequential
//! library.

pub mod character;
pub mod classify;
pub mod error;
pub mod group;
mod linalg;
mod par;
pub mod perm;
pub mod relations;
pub mod subgroup;

pub use character::{
    combination_character, mackey_restrict_normal, perm_character, CharacterVector,
    FormalCombination, SubgroupCombination,
};
pub use classify::{classify, predicted_ideal, verify_theorem, Classification, TheoremReport};
pub use error::{Error, Result};
pub use group::{ConjugacyClasses, FiniteGroup, Homomorphism, MAX_GROUP_ORDER};
pub use perm::Permutation;
pub use relations::{
    base_relation, coefficient_ideal, induction_matrix, is_brauer_relation, lift_relation,
    mackey_obstruction, relation_lattice, solomon_relation, solomon_relation_traced,
    BaseCaseParams, InductionMatrix, RelationLattice, SolomonStep,
};
pub use subgroup::{all_subgroups, Subgroup, SubgroupClass, SubgroupClasses};
