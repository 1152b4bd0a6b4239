//! The first obstruction to the Hasse norm principle for `H ≤ G`.
//!
//! With `ψ1: H^ab → G^ab` induced by inclusion, the obstruction is
//! `Ker ψ1 / φ1(Ker ψ2)`, where `ψ2` and `φ1` run over the places of the
//! decomposition groups in play. The unramified places contribute
//! `Φ^G(H)/[H,H]` ([`first_obstruction_dnr`]); each further decomposition
//! group `Gv` contributes [`first_obstruction_dr`].
//!
//! When the Schur multiplier of `G` vanishes the first obstruction is the
//! whole obstruction, and `Ker ψ1 / Dnr` is `H^1(k, Pic X̄)`. That hypothesis
//! is never checked here; callers assert it with a [`SchurTrivial`] token.

mod classify;
mod first;
mod report;
mod scenario;

use thiserror::Error;

use crate::abgrp::AbError;
use crate::perm::PermError;

pub use classify::{classify_decomposition_groups, minimal_true_classes, ClassRep, ClassVerdict, ObstructionReport};
pub use first::{
    first_obstruction_dnr, first_obstruction_dr, first_obstruction_n, local_decomposition, ngh_orbit_reps, phi_g_of_h,
    FirstObstruction, LocalDatum,
};
pub use report::{AbInfo, SubAbInfo, SubgroupInfo};
pub use scenario::{evaluate_scenario, h1_flabby_invariants, ScenarioReport, Tamagawa};

pub const SCHEMA_VERSION: &str = "1";

/// Caller's assertion that the Schur multiplier of `G` is trivial, with a
/// note on where that fact comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurTrivial {
    provenance: String,
}

impl SchurTrivial {
    pub fn assert(provenance: impl Into<String>) -> Self {
        Self {
            provenance: provenance.into(),
        }
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Ab(#[from] AbError),
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("classes {0} and {1} are conjugate")]
    ConjugateClasses(usize, usize),
    #[error(
        "H^1 and the obstruction equal Ker ψ1 / Dnr only when the Schur multiplier \
         of G is trivial; supply that assertion (with its source) to proceed"
    )]
    SchurUnasserted,
}
