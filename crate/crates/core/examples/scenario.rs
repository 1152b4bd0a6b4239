//! Ш(T), A(T) and τ(T) for a few choices of ramified decomposition groups.

use hasse_obstruction::fixtures::{load_subgroup_table, m11_schur_assertion};
use hasse_obstruction::obstruction::evaluate_scenario;
use hasse_obstruction::perm::Subgroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fs = load_subgroup_table()?;
    let schur = m11_schur_assertion();
    let cyclic: Vec<Subgroup> = fs
        .proper()
        .iter()
        .filter(|c| c.subgroup.is_cyclic())
        .map(|c| c.subgroup.clone())
        .collect();

    let cases: Vec<(&str, Vec<Subgroup>)> = vec![
        ("C2", vec![fs.find("V4")?.subgroup.clone()]),
        ("C2", cyclic.clone()),
        ("C2", vec![]),
        ("C8", vec![fs.find("QD16")?.subgroup.clone()]),
        ("C8", vec![fs.find("D8")?.subgroup.clone()]),
        ("C8", cyclic),
    ];
    for (h, places) in cases {
        let h = &fs.find(h)?.subgroup;
        let r = evaluate_scenario(h, &places, Some(&schur), false)?;
        let names: Vec<&str> = r.places.iter().map(|p| p.label.as_str()).collect();
        println!(
            "H = {:<3} places {:<40} HNP {:<5} Ш = {:?} A = {:?} τ = {}",
            r.subgroup.label,
            if names.len() > 4 {
                format!("{} cyclic groups", names.len())
            } else {
                format!("{names:?}")
            },
            r.hnp_holds,
            r.sha_invariants,
            r.at_invariants,
            r.tamagawa
        );
    }
    Ok(())
}
