use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::perm::Subgroup;

use super::first::FirstObstruction;
use super::report::SubgroupInfo;
use super::{ObstructionError, SchurTrivial, SCHEMA_VERSION};

/// `τ(T) = numerator / denominator`, in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tamagawa {
    pub numerator: u64,
    pub denominator: u64,
}

impl Tamagawa {
    fn new(n: u64, d: u64) -> Self {
        let g = n.gcd(&d);
        Self {
            numerator: n / g,
            denominator: d / g,
        }
    }
}

impl std::fmt::Display for Tamagawa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub schema_version: String,
    pub subgroup: SubgroupInfo,
    pub places: Vec<SubgroupInfo>,
    /// unramified contribution left out (diagnostics only)
    pub strict: bool,
    pub h1_invariants: Vec<u64>,
    pub obs_invariants: Vec<u64>,
    pub hnp_holds: bool,
    pub sha_invariants: Vec<u64>,
    pub at_invariants: Vec<u64>,
    pub coker_psi1_order: u64,
    pub tamagawa: Tamagawa,
    pub schur_provenance: String,
}

/// Invariants of `Ker ψ1 / Dnr`.
pub fn h1_flabby_invariants(h: &Subgroup, schur: Option<&SchurTrivial>) -> Result<Vec<u64>, ObstructionError> {
    schur.ok_or(ObstructionError::SchurUnasserted)?;
    let ctx = FirstObstruction::new(h);
    Ok(ctx.ker_psi1().subquotient_invariants(ctx.dnr())?)
}

/// Obstruction for a field whose ramified decomposition groups are `places`.
///
/// `Obs = Ker ψ1 / (Dnr ∨ ⋁ Dr(Gv))`, which is `Ш(T)`; `A(T)` is the part of
/// `H^1` killed by the places, `(Dnr ∨ ⋁ Dr) / Dnr`. In strict mode `Dnr` is
/// dropped from the denominator of `Obs` (but not from `A(T)`).
pub fn evaluate_scenario(
    h: &Subgroup,
    places: &[Subgroup],
    schur: Option<&SchurTrivial>,
    strict: bool,
) -> Result<ScenarioReport, ObstructionError> {
    let schur = schur.ok_or(ObstructionError::SchurUnasserted)?;
    if places.iter().any(|p| !Arc::ptr_eq(p.parent(), h.parent())) {
        return Err(ObstructionError::ParentMismatch);
    }
    let ctx = FirstObstruction::new(h);
    let ker = ctx.ker_psi1();
    let mut ramified = ker.ambient().trivial_subgroup();
    for gv in places {
        ramified = ramified.join(&ctx.dr(gv)?)?;
    }
    let all = ramified.join(ctx.dnr())?;
    let h1 = ker.subquotient_invariants(ctx.dnr())?;
    let obs = if strict {
        ker.subquotient_invariants(&ramified)?
    } else {
        ker.subquotient_invariants(&all)?
    };
    let at = all.subquotient_invariants(ctx.dnr())?;
    let sha_order: u64 = obs.iter().product();
    Ok(ScenarioReport {
        schema_version: SCHEMA_VERSION.to_string(),
        subgroup: SubgroupInfo::of(h),
        places: places.iter().map(SubgroupInfo::of).collect(),
        strict,
        h1_invariants: h1,
        hnp_holds: obs.is_empty(),
        sha_invariants: obs.clone(),
        obs_invariants: obs,
        at_invariants: at,
        coker_psi1_order: ctx.coker_psi1_order(),
        tamagawa: Tamagawa::new(ctx.coker_psi1_order(), sha_order),
        schur_provenance: schur.provenance().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{load_subgroup_table, m11_schur_assertion};

    #[test]
    fn tamagawa_reduces() {
        assert_eq!(
            Tamagawa::new(2, 4),
            Tamagawa {
                numerator: 1,
                denominator: 2
            }
        );
        assert_eq!(Tamagawa::new(3, 3).to_string(), "1");
        assert_eq!(Tamagawa::new(1, 2).to_string(), "1/2");
    }

    #[test]
    fn m11_c2_scenarios() {
        let fs = load_subgroup_table().unwrap();
        let schur = m11_schur_assertion();
        let h = fs.find("C2").unwrap().subgroup.clone();
        let v4 = fs.find("V4").unwrap().subgroup.clone();
        let r = evaluate_scenario(&h, &[v4], Some(&schur), false).unwrap();
        assert!(r.hnp_holds);
        assert_eq!(r.at_invariants, vec![2]);
        assert_eq!(r.tamagawa.to_string(), "1");

        let cyclic: Vec<Subgroup> = fs
            .proper()
            .iter()
            .filter(|c| c.subgroup.is_cyclic())
            .map(|c| c.subgroup.clone())
            .collect();
        let r = evaluate_scenario(&h, &cyclic, Some(&schur), false).unwrap();
        assert!(!r.hnp_holds);
        assert_eq!(r.sha_invariants, vec![2]);
        assert_eq!(r.tamagawa.to_string(), "1/2");
    }

    #[test]
    fn schur_token_required() {
        let fs = load_subgroup_table().unwrap();
        let h = &fs.find("C2").unwrap().subgroup;
        assert!(matches!(
            h1_flabby_invariants(h, None),
            Err(ObstructionError::SchurUnasserted)
        ));
        assert!(matches!(
            evaluate_scenario(h, &[], None, false),
            Err(ObstructionError::SchurUnasserted)
        ));
        let schur = SchurTrivial::assert("test");
        assert_eq!(h1_flabby_invariants(h, Some(&schur)).unwrap(), vec![2]);
    }
}
