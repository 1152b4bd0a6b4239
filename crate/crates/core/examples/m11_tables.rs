//! H^1(G, [J_{G/H}]^fl) for every proper subgroup class of M11, split into two tables.

use hasse_obstruction::fixtures::{load_subgroup_table, m11_schur_assertion};
use hasse_obstruction::obstruction::h1_flabby_invariants;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fs = load_subgroup_table()?;
    let schur = m11_schur_assertion();
    let mut trivial = Vec::new();
    let mut two = Vec::new();
    for c in fs.proper() {
        let h1 = h1_flabby_invariants(&c.subgroup, Some(&schur))?;
        let row = format!(
            "{:>20} |H| = {:>3}  n = {:>4}  H^1 = {h1:?}",
            c.meta.table_name,
            c.meta.order,
            c.meta.index()
        );
        if h1.is_empty() {
            trivial.push(row);
        } else {
            two.push(row);
        }
    }
    println!("H^1 = 0 ({} classes)", trivial.len());
    trivial.iter().for_each(|r| println!("{r}"));
    println!("\nH^1 = Z/2Z ({} classes)", two.len());
    two.iter().for_each(|r| println!("{r}"));
    Ok(())
}
