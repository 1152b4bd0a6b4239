mod common;

use hasse_obstruction::abgrp::SubAb;
use hasse_obstruction::fixtures::{load_subgroup_table, m11_schur_assertion};
use hasse_obstruction::obstruction::{
    classify_decomposition_groups, evaluate_scenario, first_obstruction_dnr, phi_g_of_h, ClassRep, FirstObstruction,
    ObstructionReport, ScenarioReport,
};
use hasse_obstruction::perm::Subgroup;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn join_all(ctx: &FirstObstruction, places: &[Subgroup]) -> SubAb {
    places
        .iter()
        .fold(ctx.ker_psi1().ambient().trivial_subgroup(), |acc, gv| {
            acc.join(&ctx.dr(gv).unwrap()).unwrap()
        })
}

#[test]
fn transcript_kernel_and_unramified_part() {
    let fs = load_subgroup_table().unwrap();
    for c in fs.proper() {
        let ctx = FirstObstruction::new(&c.subgroup);
        assert_eq!(
            ctx.ker_psi1().invariants(),
            c.meta.nker,
            "Ker ψ1 for {}",
            c.meta.gap_name
        );
        assert_eq!(ctx.dnr().invariants(), c.meta.dnr, "Dnr for {}", c.meta.gap_name);
    }
}

#[test]
fn whole_group_as_decomposition_group_gives_kernel() {
    let fs = load_subgroup_table().unwrap();
    let whole = Subgroup::whole(&fs.group);
    for c in fs.proper() {
        let ctx = FirstObstruction::new(&c.subgroup);
        assert!(
            ctx.dr(&whole).unwrap().same_as(ctx.ker_psi1()).unwrap(),
            "{}",
            c.meta.gap_name
        );
    }
    for (name, g) in common::small_corpus() {
        let whole = Subgroup::whole(&g);
        for h in common::class_reps(&common::all_subgroups(&g)) {
            let ctx = FirstObstruction::new(&h);
            assert!(ctx.dr(&whole).unwrap().same_as(ctx.ker_psi1()).unwrap(), "{name}");
        }
    }
}

/// The unramified part is exactly what cyclic decomposition groups contribute.
#[test]
fn cyclic_places_generate_unramified_part_small_groups() {
    for (name, g) in common::small_corpus() {
        let cyclic = common::cyclic_subgroups(&g);
        for h in common::class_reps(&common::all_subgroups(&g)) {
            let ctx = FirstObstruction::new(&h);
            let j = join_all(&ctx, &cyclic);
            assert!(j.same_as(ctx.dnr()).unwrap(), "{name}, |H| = {}", h.order());
            // Φ^G(H) maps onto Dnr
            let phi = phi_g_of_h(&h);
            let img = SubAb::new(
                ctx.h_ab().group().clone(),
                phi.elements().iter().map(|&e| ctx.h_ab().project(e).unwrap()).collect(),
            );
            assert!(img.same_as(ctx.dnr()).unwrap());
        }
    }
}

#[test]
fn cyclic_places_generate_unramified_part_m11() {
    let fs = load_subgroup_table().unwrap();
    let cyclic: Vec<Subgroup> = fs
        .proper()
        .iter()
        .filter(|c| c.subgroup.is_cyclic())
        .map(|c| c.subgroup.clone())
        .collect();
    assert_eq!(cyclic.len(), 8); // orders 1, 2, 3, 4, 5, 6, 8, 11
    for c in fs.proper().iter().filter(|c| c.meta.order <= 8) {
        let ctx = FirstObstruction::new(&c.subgroup);
        let j = join_all(&ctx, &cyclic);
        assert!(j.same_as(ctx.dnr()).unwrap(), "{}", c.meta.gap_name);
        assert!(first_obstruction_dnr(&c.subgroup).same_as(ctx.dnr()).unwrap());
    }
}

#[test]
fn dr_is_monotone_small_groups() {
    for (name, g) in common::small_corpus().into_iter().filter(|(_, g)| g.order() <= 24) {
        let subs = common::all_subgroups(&g);
        for h in common::class_reps(&subs) {
            let ctx = FirstObstruction::new(&h);
            let drs: Vec<SubAb> = subs.iter().map(|s| ctx.dr(s).unwrap()).collect();
            for (a, da) in subs.iter().zip(&drs) {
                for (b, db) in subs.iter().zip(&drs) {
                    if a.is_subgroup_of(b) {
                        assert!(da.is_subgroup_of(db).unwrap(), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn dr_is_monotone_on_random_m11_chains() {
    let fs = load_subgroup_table().unwrap();
    let g = &fs.group;
    let hs: Vec<&Subgroup> = fs
        .proper()
        .iter()
        .filter(|c| c.meta.order <= 24)
        .map(|c| &c.subgroup)
        .collect();
    let mut rng = StdRng::seed_from_u64(7920);
    for _ in 0..40 {
        let h = hs[rng.gen_range(0..hs.len())];
        let top = &fs.proper()[rng.gen_range(1..fs.proper().len())].subgroup;
        let top = top.conjugate(rng.gen_range(0..g.order()));
        let pick = |rng: &mut StdRng, s: &Subgroup| s.elements()[rng.gen_range(0..s.order())];
        let mid = Subgroup::generated(g, &[pick(&mut rng, &top), pick(&mut rng, &top)]);
        let low = Subgroup::cyclic(g, pick(&mut rng, &mid));
        let ctx = FirstObstruction::new(h);
        let (d0, d1, d2) = (ctx.dr(&low).unwrap(), ctx.dr(&mid).unwrap(), ctx.dr(&top).unwrap());
        assert!(d0.is_subgroup_of(&d1).unwrap());
        assert!(d1.is_subgroup_of(&d2).unwrap());
    }
}

#[test]
fn dr_depends_only_on_conjugacy_class() {
    let fs = load_subgroup_table().unwrap();
    let g = &fs.group;
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..30 {
        let h = &fs.proper()[rng.gen_range(1..12)].subgroup;
        let gv = &fs.proper()[rng.gen_range(1..fs.proper().len())].subgroup;
        let ctx = FirstObstruction::new(h);
        let conj = gv.conjugate(rng.gen_range(0..g.order()));
        assert!(ctx.dr(gv).unwrap().same_as(&ctx.dr(&conj).unwrap()).unwrap());
    }
}

fn small_reps(g: &std::sync::Arc<hasse_obstruction::perm::Group>) -> Vec<ClassRep> {
    common::class_reps(&common::all_subgroups(g))
        .into_iter()
        .enumerate()
        .map(|(i, s)| ClassRep {
            id: i + 1,
            name: format!("K{}", i + 1),
            subgroup: s,
        })
        .collect()
}

#[test]
fn minimal_classes_are_minimal() {
    for (name, g) in common::small_corpus() {
        let reps = small_reps(&g);
        for h in &reps {
            let report = classify_decomposition_groups(&h.subgroup, &reps, None).unwrap();
            assert!(report.per_class.iter().all(|v| v.uniform), "{name}");
            let truth: Vec<&ClassRep> = reps
                .iter()
                .filter(|c| report.per_class.iter().any(|v| v.id == c.id && v.verdict))
                .collect();
            // the whole group is always a true class
            assert!(truth.iter().any(|c| c.subgroup.order() == g.order()));
            for m in &report.minimal_true {
                let m = reps.iter().find(|c| c.id == *m).unwrap();
                assert!(!truth.iter().any(
                    |t| t.subgroup.order() < m.subgroup.order() && t.subgroup.conjugate_into(&m.subgroup).is_some()
                ));
            }
            // every true class contains some minimal one
            for t in &truth {
                assert!(report.minimal_true.iter().any(|m| {
                    let m = &reps.iter().find(|c| c.id == *m).unwrap().subgroup;
                    m.conjugate_into(&t.subgroup).is_some()
                }));
            }
        }
    }
}

#[test]
fn reports_roundtrip_through_json() {
    let fs = load_subgroup_table().unwrap();
    let schur = m11_schur_assertion();
    let h = &fs.find("C4").unwrap().subgroup;
    let report = classify_decomposition_groups(h, &fs.class_reps(), Some(&schur)).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: ObstructionReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);

    let places = vec![fs.find("D8").unwrap().subgroup.clone()];
    let sc = evaluate_scenario(h, &places, Some(&schur), false).unwrap();
    let back: ScenarioReport = serde_json::from_str(&serde_json::to_string_pretty(&sc).unwrap()).unwrap();
    assert_eq!(back, sc);
}

#[test]
fn strict_mode_drops_only_the_unramified_part() {
    let fs = load_subgroup_table().unwrap();
    let schur = m11_schur_assertion();
    for c in fs.proper() {
        let loose = evaluate_scenario(&c.subgroup, &[], Some(&schur), false).unwrap();
        let strict = evaluate_scenario(&c.subgroup, &[], Some(&schur), true).unwrap();
        // no ramification: Obs is H^1 itself, and strict leaves all of Ker ψ1
        assert_eq!(loose.obs_invariants, loose.h1_invariants);
        assert_eq!(strict.obs_invariants, c.meta.nker);
        assert!(loose.at_invariants.is_empty());
    }
}
