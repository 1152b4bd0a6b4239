//! Finite abelian groups in invariant-factor form, and the integer linear
//! algebra behind them.
//!
//! Everything goes through [`smith_normal_form`] over arbitrary-precision
//! integers. Subgroups are stored by generators; order, membership and
//! quotients are read off a Smith form of the stacked relation lattice.

mod abelianization;
mod finab;
mod matrix;

use thiserror::Error;

pub use abelianization::{abelianization, Abelianization};
pub use finab::{direct_sum, AbHom, DirectSum, FinAb, Normalized, Presentation, SubAb};
pub use matrix::{smith_normal_form, IntMatrix, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbError {
    #[error("{0:?} is not a divisibility chain of integers >= 2")]
    NotInvariantForm(Vec<u64>),
    #[error("presentation defines an infinite group")]
    Infinite,
    #[error("subgroups or maps live in different ambient groups")]
    AmbientMismatch,
    #[error("subgroup is not contained in the given group")]
    NotContained,
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of generator {generator} has order not dividing the generator's order")]
    IllDefined { generator: usize },
}
