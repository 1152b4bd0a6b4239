//! Embedded M11 data: the group, one representative per conjugacy class of
//! subgroups, and the values each class is expected to produce.
//!
//! Nothing here is trusted blindly: [`load_subgroup_table`] checks orders on
//! load and [`verify_fixtures`] re-checks everything else.

mod data;

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::obstruction::{ClassRep, SchurTrivial};
use crate::perm::{fingerprint, GeneratorFile, Group, PermError, Permutation, Subgroup, DEFAULT_ORDER_CAP};

pub use data::{CLASSES, M11_GENERATORS};

pub const M11_ORDER: usize = 7920;

/// Where the embedded data comes from.
pub const PROVENANCE: &str = "GAP 4: MathieuGroup(11) and ConjugacyClassesSubgroups2, representatives copied verbatim";

/// Source of the M11 Schur multiplier fact used by [`m11_schur_assertion`].
pub const M11_SCHUR_PROVENANCE: &str = "H^3(M11, Z) = 0: GAP GroupCohomology(MathieuGroup(11), 3) returns [ ]";

#[derive(Clone, Copy, Debug)]
pub struct FixtureClass {
    pub id: usize,
    pub gap_name: &'static str,
    pub table_name: &'static str,
    pub generators: &'static [&'static str],
    pub order: usize,
    /// index-based name of the Sylow 2-subgroup
    pub syl2: &'static str,
    pub h1: &'static [u64],
    pub nker: &'static [u64],
    pub dnr: &'static [u64],
}

impl FixtureClass {
    pub fn index(&self) -> usize {
        M11_ORDER / self.order
    }

    pub fn is_proper(&self) -> bool {
        self.order < M11_ORDER
    }
}

#[derive(Clone, Debug)]
pub struct LoadedClass {
    pub meta: &'static FixtureClass,
    pub subgroup: Subgroup,
}

#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub group: Arc<Group>,
    /// all 39 classes, ordered by id
    pub classes: Vec<LoadedClass>,
    pub provenance: &'static str,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("class {id}: expected order {expected}, got {found}")]
    Order { id: usize, expected: usize, found: usize },
    #[error("no class matches {0:?}")]
    UnknownClass(String),
    #[error("{name:?} is ambiguous; use one of {candidates:?}")]
    AmbiguousClass { name: String, candidates: Vec<String> },
    #[error("{0}")]
    Io(String),
}

pub fn load_m11() -> Arc<Group> {
    Group::from_cycle_strings(11, &M11_GENERATORS, DEFAULT_ORDER_CAP).expect("M11 generators are valid")
}

pub fn m11_schur_assertion() -> SchurTrivial {
    SchurTrivial::assert(M11_SCHUR_PROVENANCE)
}

/// Builds every class inside M11 and checks its order.
pub fn load_subgroup_table() -> Result<FixtureSet, FixtureError> {
    let group = load_m11();
    let mut classes = Vec::with_capacity(CLASSES.len());
    for meta in &CLASSES {
        let subgroup = Subgroup::from_cycle_strings(&group, meta.generators)?;
        if subgroup.order() != meta.order {
            return Err(FixtureError::Order {
                id: meta.id,
                expected: meta.order,
                found: subgroup.order(),
            });
        }
        classes.push(LoadedClass { meta, subgroup });
    }
    Ok(FixtureSet {
        group,
        classes,
        provenance: PROVENANCE,
    })
}

fn squash(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_lowercase()
}

impl FixtureSet {
    /// The 38 proper classes.
    pub fn proper(&self) -> &[LoadedClass] {
        &self.classes[..self.classes.len() - 1]
    }

    pub fn class(&self, id: usize) -> Option<&LoadedClass> {
        self.classes.get(id.checked_sub(1)?)
    }

    /// By id, or by GAP or table name (spacing and case ignored). Names shared
    /// by two classes must be disambiguated with the table name, e.g. `S3^(2)`.
    pub fn find(&self, key: &str) -> Result<&LoadedClass, FixtureError> {
        if let Ok(id) = key.trim().parse::<usize>() {
            return self
                .class(id)
                .ok_or_else(|| FixtureError::UnknownClass(key.to_string()));
        }
        let k = squash(key);
        if let Some(c) = self.classes.iter().find(|c| squash(c.meta.table_name) == k) {
            return Ok(c);
        }
        let hits: Vec<&LoadedClass> = self.classes.iter().filter(|c| squash(c.meta.gap_name) == k).collect();
        match hits.as_slice() {
            [] => Err(FixtureError::UnknownClass(key.to_string())),
            [one] => Ok(one),
            many => Err(FixtureError::AmbiguousClass {
                name: key.to_string(),
                candidates: many.iter().map(|c| c.meta.table_name.to_string()).collect(),
            }),
        }
    }

    /// All 39 classes as decomposition-group candidates, named by GAP label.
    pub fn class_reps(&self) -> Vec<ClassRep> {
        self.classes
            .iter()
            .map(|c| ClassRep {
                id: c.meta.id,
                name: c.meta.gap_name.to_string(),
                subgroup: c.subgroup.clone(),
            })
            .collect()
    }

    /// Writes `m11.gens` and `class-NN.gens` into `dir`.
    pub fn export(&self, dir: &Path) -> Result<Vec<std::path::PathBuf>, FixtureError> {
        let io = |e: std::io::Error| FixtureError::Io(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        let mut written = Vec::new();
        let mut write = |name: String, file: GeneratorFile, comments: &[&str]| -> Result<(), FixtureError> {
            let path = dir.join(name);
            std::fs::write(&path, file.render(comments)).map_err(io)?;
            written.push(path);
            Ok(())
        };
        write(
            "m11.gens".into(),
            GeneratorFile {
                degree: 11,
                generators: self.group.generators().to_vec(),
            },
            &["M11", PROVENANCE],
        )?;
        for c in &self.classes {
            let generators = c
                .meta
                .generators
                .iter()
                .map(|s| Permutation::parse(s, 11))
                .collect::<Result<Vec<_>, _>>()?;
            let title = format!("class {}: {} (order {})", c.meta.id, c.meta.table_name, c.meta.order);
            write(
                format!("class-{:02}.gens", c.meta.id),
                GeneratorFile { degree: 11, generators },
                &[&title, PROVENANCE],
            )?;
        }
        Ok(written)
    }
}

/// GAP label to index-based name, for the labels that differ.
pub fn table_label(gap: &str) -> &str {
    match gap {
        "1" => "{1}",
        "C2 x C2" => "V4",
        "D8" => "D4",
        "QD16" => "QD8",
        "D10" => "D5",
        "D12" => "D6",
        "(C3 x C3) : QD16" => "(C3 x C3) : QD8",
        "A6 . C2" => "M10 = A6 . C2",
        other => other,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCheck {
    pub id: usize,
    pub name: String,
    pub ok: bool,
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group_order: usize,
    pub checks: Vec<ClassCheck>,
    /// pairs of classes found conjugate (should be empty)
    pub conjugate_pairs: Vec<(usize, usize)>,
    /// proper classes with nontrivial cyclic Sylow 2-subgroup
    pub cyclic_syl2: Vec<usize>,
    pub passed: usize,
    pub total: usize,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.passed == self.total && self.conjugate_pairs.is_empty() && self.group_order == M11_ORDER
    }

    pub fn summary(&self) -> String {
        format!("{}/{} ok", self.passed, self.total)
    }
}

/// Re-checks the 38 proper classes: order and index, GAP label, Sylow
/// 2-subgroup, and pairwise non-conjugacy.
pub fn verify_fixtures(fs: &FixtureSet) -> VerificationReport {
    let mut checks = Vec::new();
    let mut cyclic_syl2 = Vec::new();
    for c in fs.proper() {
        let mut problems = Vec::new();
        let h = &c.subgroup;
        if h.order() != c.meta.order {
            problems.push(format!("order {} != {}", h.order(), c.meta.order));
        }
        if !fs.group.order().is_multiple_of(h.order()) || fs.group.order() / h.order() != c.meta.index() {
            problems.push(format!(
                "index {} != {}",
                fs.group.order() / h.order().max(1),
                c.meta.index()
            ));
        }
        let label = fingerprint(h).label;
        if label != c.meta.gap_name {
            problems.push(format!("label {label:?} != {:?}", c.meta.gap_name));
        }
        let syl = h.sylow(2);
        let syl_label = fingerprint(&syl).label;
        if table_label(&syl_label) != c.meta.syl2 {
            problems.push(format!("Sylow 2-subgroup {syl_label:?} != {:?}", c.meta.syl2));
        }
        if !syl.is_trivial()
            && syl
                .elements()
                .iter()
                .any(|&e| h.parent().element_order(e) == syl.order())
        {
            cyclic_syl2.push(c.meta.id);
        }
        checks.push(ClassCheck {
            id: c.meta.id,
            name: c.meta.table_name.to_string(),
            ok: problems.is_empty(),
            problems,
        });
    }
    let mut conjugate_pairs = Vec::new();
    let classes = fs.proper();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            if a.subgroup.conjugating_element(&b.subgroup).is_some() {
                conjugate_pairs.push((a.meta.id, b.meta.id));
            }
        }
    }
    for &(a, b) in &conjugate_pairs {
        for c in checks.iter_mut().filter(|c| c.id == a || c.id == b) {
            c.ok = false;
            c.problems.push(format!("classes {a} and {b} are conjugate"));
        }
    }
    VerificationReport {
        group_order: fs.group.order(),
        passed: checks.iter().filter(|c| c.ok).count(),
        total: checks.len(),
        checks,
        conjugate_pairs,
        cyclic_syl2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m11_basics() {
        let g = load_m11();
        assert_eq!(g.order(), M11_ORDER);
        let whole = Subgroup::whole(&g);
        assert_eq!(whole.derived_subgroup().order(), M11_ORDER);
        assert_eq!(whole.sylow(2).order(), 16);
        assert_eq!(whole.sylow(11).order(), 11);
    }

    #[test]
    fn table_loads_with_expected_orders() {
        let fs = load_subgroup_table().unwrap();
        assert_eq!(fs.classes.len(), 39);
        assert_eq!(fs.proper().len(), 38);
        assert_eq!(fs.classes[38].subgroup.order(), M11_ORDER);
        assert_eq!(fs.find("C11 : C5").unwrap().subgroup.order(), 55);
    }

    #[test]
    fn indices_match_tables() {
        let fs = load_subgroup_table().unwrap();
        assert_eq!(fs.find("M10 = A6 . C2").unwrap().meta.index(), 11);
        assert_eq!(fs.find("C2").unwrap().meta.index(), 3960);
        assert_eq!(fs.find("C5:C4").unwrap().meta.index(), 396);
    }

    #[test]
    fn lookup_by_name() {
        let fs = load_subgroup_table().unwrap();
        assert_eq!(fs.find("V4").unwrap().meta.id, 4);
        assert_eq!(fs.find("c2 x c2").unwrap().meta.id, 4);
        assert_eq!(fs.find("QD16").unwrap().meta.id, 18);
        assert_eq!(fs.find("QD8").unwrap().meta.id, 18);
        assert_eq!(fs.find("S3^(2)").unwrap().meta.id, 8);
        assert_eq!(fs.find("12").unwrap().meta.table_name, "D4");
        assert!(matches!(fs.find("S3"), Err(FixtureError::AmbiguousClass { .. })));
        assert!(matches!(fs.find("J1"), Err(FixtureError::UnknownClass(_))));
        assert!(fs.find("40").is_err());
    }

    #[test]
    fn table_labels() {
        for c in &CLASSES[..38] {
            assert_eq!(
                table_label(c.gap_name) == c.table_name,
                !c.table_name.contains("^("),
                "{}",
                c.id
            );
        }
    }

    #[test]
    fn export_roundtrip() {
        let fs = load_subgroup_table().unwrap();
        let dir = tempfile::tempdir().unwrap();
        let files = fs.export(dir.path()).unwrap();
        assert_eq!(files.len(), 40);
        let f = GeneratorFile::read(&dir.path().join("class-18.gens")).unwrap();
        let h = Subgroup::from_generators(&fs.group, &f.generators).unwrap();
        assert_eq!(h, fs.class(18).unwrap().subgroup);
    }
}
