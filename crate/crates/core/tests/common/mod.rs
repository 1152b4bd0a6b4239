#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use hasse_obstruction::perm::{Group, Subgroup, DEFAULT_ORDER_CAP};

pub fn group(degree: usize, gens: &[&str]) -> Arc<Group> {
    Group::from_cycle_strings(degree, gens, DEFAULT_ORDER_CAP).unwrap()
}

/// Small groups of order at most 100 used by the brute-force suites.
pub fn small_corpus() -> Vec<(&'static str, Arc<Group>)> {
    vec![
        ("C6", group(5, &["(1,2)(3,4,5)"])),
        ("V4", group(4, &["(1,2)", "(3,4)"])),
        ("S3", group(3, &["(1,2)", "(1,2,3)"])),
        ("Q8", group(8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"])),
        ("D8", group(4, &["(1,2,3,4)", "(1,3)"])),
        ("D10", group(5, &["(1,2,3,4,5)", "(2,5)(3,4)"])),
        ("D12", group(6, &["(1,2,3,4,5,6)", "(2,6)(3,5)"])),
        ("A4", group(4, &["(1,2,3)", "(1,2)(3,4)"])),
        ("S4", group(4, &["(1,2)", "(1,2,3,4)"])),
        ("C3 x S3", group(6, &["(1,2,3)", "(4,5)", "(4,5,6)"])),
        ("C5 : C4", group(5, &["(1,2,3,4,5)", "(2,3,5,4)"])),
        ("A5", group(5, &["(1,2,3)", "(1,2,3,4,5)"])),
    ]
}

/// Every subgroup, by closing up under adjoining one element at a time.
pub fn all_subgroups(g: &Arc<Group>) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let trivial = Subgroup::trivial(g);
    seen.insert(trivial.elements().to_vec());
    let mut out = vec![trivial];
    let mut i = 0;
    while i < out.len() {
        let s = out[i].clone();
        for x in 0..g.order() {
            if s.contains(x) {
                continue;
            }
            let mut gens = s.gens().to_vec();
            gens.push(x);
            let t = Subgroup::generated(g, &gens);
            if seen.insert(t.elements().to_vec()) {
                out.push(t);
            }
        }
        i += 1;
    }
    out
}

/// Conjugacy class representatives among `subs`.
pub fn class_reps(subs: &[Subgroup]) -> Vec<Subgroup> {
    let mut reps: Vec<Subgroup> = Vec::new();
    for s in subs {
        if !reps.iter().any(|r| r.conjugating_element(s).is_some()) {
            reps.push(s.clone());
        }
    }
    reps
}

pub fn cyclic_subgroups(g: &Arc<Group>) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    (0..g.order())
        .map(|x| Subgroup::cyclic(g, x))
        .filter(|c| seen.insert(c.elements().to_vec()))
        .collect()
}
