use serde::{Deserialize, Serialize};

use crate::abgrp::{FinAb, SubAb};
use crate::perm::{fingerprint, Subgroup};

/// A permutation subgroup as it appears in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub generators: Vec<String>,
    pub label: String,
}

impl SubgroupInfo {
    pub fn of(h: &Subgroup) -> Self {
        Self {
            order: h.order(),
            generators: h.generators().iter().map(|p| p.to_string()).collect(),
            label: fingerprint(h).label,
        }
    }
}

/// A finite abelian group by invariants, with a witness permutation per
/// generator when it comes from an abelianization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbInfo {
    pub invariants: Vec<u64>,
    pub order: u64,
    pub lifts: Vec<String>,
}

impl AbInfo {
    pub fn of(a: &FinAb, h: &Subgroup) -> Self {
        let g = h.parent();
        Self {
            invariants: a.invariants().to_vec(),
            order: a.order(),
            lifts: a.lifts().iter().map(|&l| g.element(l).to_string()).collect(),
        }
    }
}

/// A subgroup of an abelianization: its own invariants and generators in
/// ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubAbInfo {
    pub invariants: Vec<u64>,
    pub order: u64,
    pub generators: Vec<Vec<i64>>,
}

impl SubAbInfo {
    pub fn of(s: &SubAb) -> Self {
        Self {
            invariants: s.invariants(),
            order: s.order(),
            generators: s.gens().to_vec(),
        }
    }
}
