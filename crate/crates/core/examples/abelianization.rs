//! Abelian invariants of a few small groups and of some M11 subgroups.

use hasse_obstruction::abgrp::abelianization;
use hasse_obstruction::fixtures::load_subgroup_table;
use hasse_obstruction::perm::{Group, Subgroup, DEFAULT_ORDER_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let small: [(&str, usize, &[&str]); 4] = [
        ("S4", 4, &["(1,2)", "(1,2,3,4)"]),
        ("D8", 4, &["(1,2,3,4)", "(1,3)"]),
        ("Q8", 8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]),
        ("C2 x C6", 7, &["(1,2)", "(3,4)", "(5,6,7)"]),
    ];
    for (name, degree, gens) in small {
        let g = Group::from_cycle_strings(degree, gens, DEFAULT_ORDER_CAP)?;
        let ab = abelianization(&Subgroup::whole(&g));
        println!(
            "{name:>8}: order {:>3}, abelianization {:?}",
            g.order(),
            ab.group().invariants()
        );
    }

    let fs = load_subgroup_table()?;
    for key in ["C5 : C4", "(C3 x C3) : C8", "GL(2,3)", "M10 = A6 . C2"] {
        let c = fs.find(key)?;
        let ab = abelianization(&c.subgroup);
        println!(
            "{:>16}: H^ab = {:?}, |[H,H]| = {}",
            c.meta.table_name,
            ab.group().invariants(),
            ab.derived().order()
        );
    }
    Ok(())
}
