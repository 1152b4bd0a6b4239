use std::collections::BTreeSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::abgrp::{abelianization, direct_sum, AbHom, Abelianization, FinAb, SubAb};
use crate::perm::{double_coset_reps, Group, Subgroup};

use super::ObstructionError;

/// One place `w` over a decomposition group `Gv`: the double coset
/// representative `x` of `H x Gv` and `H_w = H ∩ x Gv x^-1`.
#[derive(Clone, Debug)]
pub struct LocalDatum {
    pub rep: usize,
    pub hw: Subgroup,
    pub hw_ab: FinAb,
    /// `h ↦ x^-1 h x` into `Gv^ab`
    pub to_gv: AbHom,
    /// inclusion into `H^ab`
    pub to_h: AbHom,
}

/// Everything about `H ≤ G` that does not depend on a decomposition group:
/// the abelianizations, `ψ1: H^ab → G^ab`, its kernel and the unramified part.
#[derive(Clone, Debug)]
pub struct FirstObstruction {
    h: Subgroup,
    h_ab: Abelianization,
    g_ab: Abelianization,
    psi1: AbHom,
    ker_psi1: SubAb,
    dnr: SubAb,
}

impl FirstObstruction {
    pub fn new(h: &Subgroup) -> Self {
        let g = h.parent();
        let h_ab = abelianization(h);
        let g_ab = abelianization(&Subgroup::whole(g));
        let images = h_ab
            .group()
            .lifts()
            .iter()
            .map(|&l| g_ab.project(l).expect("H lies in G"))
            .collect();
        let psi1 =
            AbHom::new(h_ab.group().clone(), g_ab.group().clone(), images).expect("abelianization is functorial");
        let ker_psi1 = psi1.kernel();
        let dnr = unramified_part(h, &h_ab);
        Self {
            h: h.clone(),
            h_ab,
            g_ab,
            psi1,
            ker_psi1,
            dnr,
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        self.h.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.h
    }

    pub fn h_ab(&self) -> &Abelianization {
        &self.h_ab
    }

    pub fn g_ab(&self) -> &Abelianization {
        &self.g_ab
    }

    pub fn psi1(&self) -> &AbHom {
        &self.psi1
    }

    pub fn ker_psi1(&self) -> &SubAb {
        &self.ker_psi1
    }

    pub fn dnr(&self) -> &SubAb {
        &self.dnr
    }

    /// `|coker ψ1| = |G^ab| / |im ψ1|`.
    pub fn coker_psi1_order(&self) -> u64 {
        self.g_ab.group().order() / self.psi1.image().order()
    }

    fn check(&self, gv: &Subgroup) -> Result<(), ObstructionError> {
        if !Arc::ptr_eq(self.h.parent(), gv.parent()) {
            return Err(ObstructionError::ParentMismatch);
        }
        Ok(())
    }

    /// One datum per double coset `H x Gv`, in representative order.
    pub fn local_decomposition(&self, gv: &Subgroup) -> Result<Vec<LocalDatum>, ObstructionError> {
        self.check(gv)?;
        let gv_ab = abelianization(gv);
        Ok(self.places(gv, &gv_ab, false))
    }

    fn places(&self, gv: &Subgroup, gv_ab: &Abelianization, skip_trivial: bool) -> Vec<LocalDatum> {
        let g = self.group();
        let reps = double_coset_reps(&self.h, gv).expect("same parent");
        let mut out = Vec::with_capacity(reps.len());
        for (x, _) in reps {
            let mut members = FixedBitSet::with_capacity(g.order());
            let mut nontrivial = false;
            for &e in self.h.elements() {
                if gv.contains(g.conj(e, x)) {
                    members.insert(e);
                    nontrivial |= e != 0;
                }
            }
            if skip_trivial && !nontrivial {
                continue;
            }
            let hw = Subgroup::from_members_trusted(g, members);
            let hw_abz = abelianization(&hw);
            let hw_ab = hw_abz.group().clone();
            let to_gv = hw_ab
                .lifts()
                .iter()
                .map(|&l| gv_ab.project(g.conj(l, x)).expect("conjugate lies in Gv"))
                .collect();
            let to_h = hw_ab
                .lifts()
                .iter()
                .map(|&l| self.h_ab.project(l).expect("H_w lies in H"))
                .collect();
            out.push(LocalDatum {
                rep: x,
                to_gv: AbHom::new(hw_ab.clone(), gv_ab.group().clone(), to_gv).expect("conjugation is a homomorphism"),
                to_h: AbHom::new(hw_ab.clone(), self.h_ab.group().clone(), to_h).expect("inclusion is a homomorphism"),
                hw,
                hw_ab,
            });
        }
        out
    }

    /// `φ1(Ker ψ2)` for the places over a single decomposition group `Gv`.
    pub fn dr(&self, gv: &Subgroup) -> Result<SubAb, ObstructionError> {
        self.check(gv)?;
        let gv_ab = abelianization(gv);
        let data = self.places(gv, &gv_ab, true);
        let parts: Vec<FinAb> = data.iter().map(|d| d.hw_ab.clone()).collect();
        let sum = direct_sum(&parts);
        let to_gv: Vec<AbHom> = data.iter().map(|d| d.to_gv.clone()).collect();
        let to_h: Vec<AbHom> = data.iter().map(|d| d.to_h.clone()).collect();
        let psi2 = sum.copair(gv_ab.group(), &to_gv)?;
        let phi1 = sum.copair(self.h_ab.group(), &to_h)?;
        Ok(phi1.pushforward(&psi2.kernel())?)
    }

    /// Whether `Dr ∨ Dnr` exhausts `Ker ψ1`.
    pub fn is_full(&self, dr: &SubAb) -> Result<bool, ObstructionError> {
        Ok(dr.join(&self.dnr)?.same_as(&self.ker_psi1)?)
    }
}

/// Image in `H^ab` of the commutators `[h,x] = h^-1 x^-1 h x` with
/// `x ∈ G` and `h ∈ H ∩ x H x^-1`.
fn unramified_part(h: &Subgroup, h_ab: &Abelianization) -> SubAb {
    let mut gens = BTreeSet::new();
    for_each_commutator(h, |c| {
        gens.insert(h_ab.project(c).expect("commutator lies in H"));
    });
    SubAb::new(h_ab.group().clone(), gens.into_iter().collect())
}

fn for_each_commutator(h: &Subgroup, mut f: impl FnMut(usize)) {
    let g = h.parent();
    for x in 0..g.order() {
        for &e in h.elements() {
            if h.contains(g.conj(e, x)) {
                f(g.commutator(e, x));
            }
        }
    }
}

/// `Φ^G(H)`, the subgroup of `H` generated by all `[h,x]` with
/// `h ∈ H ∩ x H x^-1`, by an exhaustive sweep.
pub fn phi_g_of_h(h: &Subgroup) -> Subgroup {
    let mut seen = FixedBitSet::with_capacity(h.parent().order());
    let mut comms = Vec::new();
    for_each_commutator(h, |c| {
        if !seen.contains(c) {
            seen.insert(c);
            comms.push(c);
        }
    });
    Subgroup::generated(h.parent(), &comms)
}

/// `Ker(ψ1: H^ab → G^ab)`.
pub fn first_obstruction_n(h: &Subgroup) -> SubAb {
    FirstObstruction::new(h).ker_psi1
}

/// `Φ^G(H)/[H,H]` as a subgroup of `H^ab`.
pub fn first_obstruction_dnr(h: &Subgroup) -> SubAb {
    FirstObstruction::new(h).dnr
}

pub fn local_decomposition(h: &Subgroup, gv: &Subgroup) -> Result<Vec<LocalDatum>, ObstructionError> {
    FirstObstruction::new(h).local_decomposition(gv)
}

pub fn first_obstruction_dr(h: &Subgroup, gv: &Subgroup) -> Result<SubAb, ObstructionError> {
    FirstObstruction::new(h).dr(gv)
}

/// The conjugates `x Gv x^-1` for representatives `x` of
/// `N_G(H) \ G / N_G(Gv)`.
pub fn ngh_orbit_reps(h: &Subgroup, gv: &Subgroup) -> Result<Vec<Subgroup>, ObstructionError> {
    if !Arc::ptr_eq(h.parent(), gv.parent()) {
        return Err(ObstructionError::ParentMismatch);
    }
    let g = h.parent();
    let reps = double_coset_reps(&h.normalizer(), &gv.normalizer())?;
    Ok(reps.into_iter().map(|(x, _)| gv.conjugate(g.inv(x))).collect())
}
