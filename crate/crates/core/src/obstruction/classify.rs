use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::perm::Subgroup;

use super::first::{ngh_orbit_reps, FirstObstruction};
use super::report::{AbInfo, SubAbInfo, SubgroupInfo};
use super::{ObstructionError, SchurTrivial, SCHEMA_VERSION};

/// A representative of a conjugacy class of subgroups, tagged for reports.
#[derive(Clone, Debug)]
pub struct ClassRep {
    pub id: usize,
    pub name: String,
    pub subgroup: Subgroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub id: usize,
    pub name: String,
    pub gv: SubgroupInfo,
    /// number of conjugates of `Gv` up to `N_G(H)`
    pub orbit_reps: usize,
    /// how many of them satisfy `Dr ∨ Dnr = Ker ψ1`
    pub full_reps: usize,
    /// `Dr` of the first representative
    pub dr: SubAbInfo,
    pub verdict: bool,
    pub uniform: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub schema_version: String,
    pub group: SubgroupInfo,
    pub subgroup: SubgroupInfo,
    pub h_ab: AbInfo,
    pub g_ab: AbInfo,
    pub ker_psi1: SubAbInfo,
    pub dnr: SubAbInfo,
    /// `Ker ψ1 / Dnr`; present only under a Schur-multiplier assertion
    pub h1_invariants: Option<Vec<u64>>,
    pub schur_provenance: Option<String>,
    pub per_class: Vec<ClassVerdict>,
    pub true_count: usize,
    pub false_count: usize,
    pub minimal_true: Vec<usize>,
    pub minimal_true_names: Vec<String>,
}

fn check_classes(classes: &[ClassRep], h: &Subgroup) -> Result<(), ObstructionError> {
    for (i, a) in classes.iter().enumerate() {
        if !Arc::ptr_eq(a.subgroup.parent(), h.parent()) {
            return Err(ObstructionError::ParentMismatch);
        }
        for b in &classes[i + 1..] {
            if a.subgroup.conjugating_element(&b.subgroup).is_some() {
                return Err(ObstructionError::ConjugateClasses(a.id, b.id));
            }
        }
    }
    Ok(())
}

fn judge(ctx: &FirstObstruction, class: &ClassRep) -> Result<ClassVerdict, ObstructionError> {
    let reps = ngh_orbit_reps(ctx.subgroup(), &class.subgroup)?;
    let mut first_dr = None;
    let mut full_reps = 0;
    for gv in &reps {
        let dr = ctx.dr(gv)?;
        if ctx.is_full(&dr)? {
            full_reps += 1;
        }
        first_dr.get_or_insert(dr);
    }
    let dr = first_dr.expect("at least one orbit representative");
    Ok(ClassVerdict {
        id: class.id,
        name: class.name.clone(),
        gv: SubgroupInfo::of(&class.subgroup),
        orbit_reps: reps.len(),
        full_reps,
        dr: SubAbInfo::of(&dr),
        verdict: full_reps > 0,
        uniform: full_reps == 0 || full_reps == reps.len(),
    })
}

/// Judges every class as a candidate decomposition group: true when some
/// conjugate `Gv` has `Dr(Gv) ∨ Dnr = Ker ψ1`. Classes are evaluated in
/// parallel; the report lists them in input order.
pub fn classify_decomposition_groups(
    h: &Subgroup,
    classes: &[ClassRep],
    schur: Option<&SchurTrivial>,
) -> Result<ObstructionReport, ObstructionError> {
    check_classes(classes, h)?;
    let ctx = FirstObstruction::new(h);
    let per_class = classes
        .par_iter()
        .map(|c| judge(&ctx, c))
        .collect::<Result<Vec<_>, _>>()?;
    let whole = Subgroup::whole(h.parent());
    let mut report = ObstructionReport {
        schema_version: SCHEMA_VERSION.to_string(),
        group: SubgroupInfo::of(&whole),
        subgroup: SubgroupInfo::of(h),
        h_ab: AbInfo::of(ctx.h_ab().group(), h),
        g_ab: AbInfo::of(ctx.g_ab().group(), &whole),
        ker_psi1: SubAbInfo::of(ctx.ker_psi1()),
        dnr: SubAbInfo::of(ctx.dnr()),
        h1_invariants: schur.map(|_| {
            ctx.ker_psi1()
                .subquotient_invariants(ctx.dnr())
                .expect("Dnr lies in Ker ψ1")
        }),
        schur_provenance: schur.map(|s| s.provenance().to_string()),
        true_count: per_class.iter().filter(|v| v.verdict).count(),
        false_count: per_class.iter().filter(|v| !v.verdict).count(),
        per_class,
        minimal_true: Vec::new(),
        minimal_true_names: Vec::new(),
    };
    report.minimal_true = minimal_true_classes(classes, &report);
    report.minimal_true_names = report
        .minimal_true
        .iter()
        .map(|id| classes.iter().find(|c| c.id == *id).unwrap().name.clone())
        .collect();
    Ok(report)
}

/// Ids of the true classes that contain no conjugate of a smaller true class.
pub fn minimal_true_classes(classes: &[ClassRep], report: &ObstructionReport) -> Vec<usize> {
    let truth: Vec<&ClassRep> = classes
        .iter()
        .filter(|c| report.per_class.iter().any(|v| v.id == c.id && v.verdict))
        .collect();
    truth
        .iter()
        .filter(|c| {
            !truth
                .iter()
                .any(|d| d.subgroup.order() < c.subgroup.order() && d.subgroup.conjugate_into(&c.subgroup).is_some())
        })
        .map(|c| c.id)
        .collect()
}
