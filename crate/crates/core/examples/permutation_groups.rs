//! Enumerate a couple of permutation groups and poke at their subgroups.

use hasse_obstruction::fixtures::load_m11;
use hasse_obstruction::perm::{double_coset_reps, fingerprint, Group, Permutation, Subgroup, DEFAULT_ORDER_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s4 = Group::from_cycle_strings(4, &["(1,2)", "(1,2,3,4)"], DEFAULT_ORDER_CAP)?;
    println!("|S4| = {}", s4.order());

    // composition is left to right: (1,2) first, then (1,3)
    let a = s4.index_of(&Permutation::parse("(1,2)", 4)?).unwrap();
    let b = s4.index_of(&Permutation::parse("(1,3)", 4)?).unwrap();
    println!("(1,2)*(1,3) = {}", s4.element(s4.mul(a, b)));

    let whole = Subgroup::whole(&s4);
    for p in [2, 3] {
        let syl = whole.sylow(p);
        println!("Sylow {p}-subgroup: order {}, {}", syl.order(), fingerprint(&syl).label);
    }

    let h = Subgroup::from_cycle_strings(&s4, &["(1,2,3)"])?;
    let k = Subgroup::from_cycle_strings(&s4, &["(1,2)(3,4)", "(1,3)(2,4)"])?;
    let sizes: Vec<usize> = double_coset_reps(&h, &k)?.into_iter().map(|(_, n)| n).collect();
    println!("C3 \\ S4 / V4: {} double cosets of sizes {sizes:?}", sizes.len());

    let m11 = load_m11();
    let m = Subgroup::whole(&m11);
    println!("|M11| = {}", m11.order());
    println!("M11 Sylow 2-subgroup: {}", fingerprint(&m.sylow(2)).label);
    println!("[M11, M11] has order {}", m.derived_subgroup().order());
    Ok(())
}
