//! Ker ψ1, Dnr and Dr for H = C2 inside M11, decomposition group by decomposition group.

use hasse_obstruction::fixtures::load_subgroup_table;
use hasse_obstruction::obstruction::{ngh_orbit_reps, FirstObstruction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fs = load_subgroup_table()?;
    let h = &fs.find("C2")?.subgroup;
    let ctx = FirstObstruction::new(h);
    println!(
        "H^ab = {:?}, G^ab = {:?}",
        ctx.h_ab().group().invariants(),
        ctx.g_ab().group().invariants()
    );
    println!(
        "Ker ψ1 = {:?}, Dnr = {:?}",
        ctx.ker_psi1().invariants(),
        ctx.dnr().invariants()
    );

    for key in ["C2", "C4", "V4", "Q8", "S3^(1)", "D8"] {
        let gv = &fs.find(key)?.subgroup;
        let places = ctx.local_decomposition(gv)?.len();
        let reps = ngh_orbit_reps(h, gv)?;
        let full = reps
            .iter()
            .filter(|r| ctx.dr(r).and_then(|dr| ctx.is_full(&dr)).unwrap_or(false))
            .count();
        let dr = ctx.dr(&reps[0])?;
        println!(
            "Gv = {key:<6} ({places:>4} places): Dr = {:?}, Dr ∨ Dnr = Ker ψ1 for {full} of {} conjugates up to N_G(H)",
            dr.invariants(),
            reps.len()
        );
    }
    Ok(())
}
