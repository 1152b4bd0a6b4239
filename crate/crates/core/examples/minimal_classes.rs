//! Which decomposition groups kill the obstruction for a given H, and the minimal ones.

use hasse_obstruction::fixtures::{load_subgroup_table, m11_schur_assertion};
use hasse_obstruction::obstruction::classify_decomposition_groups;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fs = load_subgroup_table()?;
    let classes = fs.class_reps();
    let schur = m11_schur_assertion();
    let key = std::env::args().nth(1).unwrap_or_else(|| "C8".into());
    let h = &fs.find(&key)?.subgroup;
    let report = classify_decomposition_groups(h, &classes, Some(&schur))?;
    println!("H = {key}: {} true, {} false", report.true_count, report.false_count);
    let names: Vec<&str> = report
        .per_class
        .iter()
        .filter(|v| v.verdict)
        .map(|v| v.name.as_str())
        .collect();
    println!("true: {}", names.join(", "));
    println!("minimal: {}", report.minimal_true_names.join(", "));
    Ok(())
}
