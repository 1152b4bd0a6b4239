//! Permutations and fully enumerated permutation groups.
//!
//! Groups are small enough (at most [`DEFAULT_ORDER_CAP`] elements by default)
//! that every element gets an index, and subgroups are bitsets over those
//! indices. Normalizers, conjugacy tests and double cosets are exhaustive sweeps.

mod fingerprint;
mod genfile;
mod group;
mod permutation;
mod subgroup;

use thiserror::Error;

pub use fingerprint::{fingerprint, Fingerprint};
pub use genfile::GeneratorFile;
pub use group::{Group, DEFAULT_ORDER_CAP};
pub use permutation::Permutation;
pub use subgroup::{double_coset_reps, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated within one cycle")]
    RepeatedPoint(usize),
    #[error("images do not form a bijection")]
    NotBijective,
    #[error("generator of degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group has more than {cap} elements")]
    CapExceeded { cap: usize },
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("{0}")]
    Io(String),
}
