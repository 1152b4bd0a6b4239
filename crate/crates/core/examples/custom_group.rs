//! The same machinery on a group read from a generator file: H = C2 inside A5.

use hasse_obstruction::obstruction::{classify_decomposition_groups, ClassRep, FirstObstruction};
use hasse_obstruction::perm::{fingerprint, GeneratorFile, Group, Subgroup, DEFAULT_ORDER_CAP};

const A5: &str = "# alternating group on five points
degree 5
(1,2,3)
(1,2,3,4,5)
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = GeneratorFile::parse(A5)?;
    let g = Group::from_generators(file.degree, &file.generators, DEFAULT_ORDER_CAP)?;
    let h = Subgroup::from_cycle_strings(&g, &["(1,2)(3,4)"])?;
    let ctx = FirstObstruction::new(&h);
    println!("|G| = {}, H = {}", g.order(), fingerprint(&h).label);
    println!(
        "Ker ψ1 = {:?}, Dnr = {:?}",
        ctx.ker_psi1().invariants(),
        ctx.dnr().invariants()
    );

    // cyclic subgroups up to conjugacy, plus a V4 and the whole group
    let mut classes: Vec<Subgroup> = Vec::new();
    for x in 0..g.order() {
        let c = Subgroup::cyclic(&g, x);
        if !classes.iter().any(|d| d.conjugating_element(&c).is_some()) {
            classes.push(c);
        }
    }
    classes.push(Subgroup::from_cycle_strings(&g, &["(1,2)(3,4)", "(1,3)(2,4)"])?);
    classes.push(Subgroup::whole(&g));
    let reps: Vec<ClassRep> = classes
        .into_iter()
        .enumerate()
        .map(|(i, s)| ClassRep {
            id: i + 1,
            name: fingerprint(&s).label,
            subgroup: s,
        })
        .collect();
    // A5 has Schur multiplier Z/2, so no H^1 is claimed here
    let report = classify_decomposition_groups(&h, &reps, None)?;
    for v in &report.per_class {
        println!("  Gv = {:<8} Dr = {:?}  full: {}", v.name, v.dr.invariants, v.verdict);
    }
    println!("minimal: {}", report.minimal_true_names.join(", "));
    Ok(())
}
