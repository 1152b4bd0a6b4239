//! Verify the embedded M11 data and write it out as generator files.

use hasse_obstruction::fixtures::{load_subgroup_table, verify_fixtures};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fs = load_subgroup_table()?;
    let report = verify_fixtures(&fs);
    println!("{}", report.summary());
    let dir = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| std::env::temp_dir().join("m11-fixtures"));
    std::fs::create_dir_all(&dir)?;
    let written = fs.export(&dir)?;
    println!("wrote {} files to {}", written.len(), dir.display());
    Ok(())
}
