use std::fmt::Write as _;

use crate::fixtures::VerificationReport;
use crate::obstruction::{ObstructionReport, ScenarioReport, SubAbInfo};

use super::{MinimalReport, Tables};

/// `[]` as `0`, `[2, 4]` as `Z/2Z x Z/4Z`.
pub fn format_invariants(inv: &[u64]) -> String {
    if inv.is_empty() {
        return "0".into();
    }
    inv.iter().map(|d| format!("Z/{d}Z")).collect::<Vec<_>>().join(" x ")
}

fn sub(s: &SubAbInfo) -> String {
    format!("{} (order {})", format_invariants(&s.invariants), s.order)
}

pub(super) fn analyze_md(r: &ObstructionReport) -> String {
    let mut o = String::new();
    let _ = writeln!(
        o,
        "# H = {} (order {}) in G of order {}\n",
        r.subgroup.label, r.subgroup.order, r.group.order
    );
    let _ = writeln!(o, "- H generators: {}", r.subgroup.generators.join(", "));
    let _ = writeln!(o, "- H^ab: {}", format_invariants(&r.h_ab.invariants));
    let _ = writeln!(o, "- G^ab: {}", format_invariants(&r.g_ab.invariants));
    let _ = writeln!(o, "- Ker ψ1: {}", sub(&r.ker_psi1));
    let _ = writeln!(o, "- Dnr: {}", sub(&r.dnr));
    match (&r.h1_invariants, &r.schur_provenance) {
        (Some(h1), Some(p)) => {
            let _ = writeln!(
                o,
                "- H^1: {}  (Schur multiplier of G assumed trivial: {p})",
                format_invariants(h1)
            );
        }
        _ => {
            let _ = writeln!(o, "- H^1: not computed (Schur multiplier of G not asserted trivial)");
        }
    }
    if !r.per_class.is_empty() {
        let _ = writeln!(o, "\n| id | Gv | order | orbit reps | Dr | Dr ∨ Dnr = Ker ψ1 |");
        let _ = writeln!(o, "|---|---|---|---|---|---|");
        for v in &r.per_class {
            let verdict = match (v.verdict, v.uniform) {
                (true, true) => "true".to_string(),
                (false, _) => "false".to_string(),
                (true, false) => format!("true ({}/{})", v.full_reps, v.orbit_reps),
            };
            let _ = writeln!(
                o,
                "| {} | {} | {} | {} | {} | {} |",
                v.id,
                v.name,
                v.gv.order,
                v.orbit_reps,
                format_invariants(&v.dr.invariants),
                verdict
            );
        }
        let _ = writeln!(o, "\n{} true, {} false", r.true_count, r.false_count);
        let _ = writeln!(o, "\nminimal true classes: {}", r.minimal_true_names.join(", "));
    }
    o
}

pub(super) fn minimal_md(r: &MinimalReport) -> String {
    let mut o = String::new();
    let _ = writeln!(
        o,
        "# Minimal decomposition groups for H = {} (order {})\n",
        r.subgroup.label, r.subgroup.order
    );
    let _ = writeln!(o, "{} true, {} false\n", r.true_count, r.false_count);
    for c in &r.minimal_true {
        let _ = writeln!(o, "- {} (class {}, order {})", c.name, c.id, c.order);
    }
    o
}

fn table(o: &mut String, title: &str, rows: &[super::TableRow]) {
    let _ = writeln!(o, "{title}\n");
    let _ = writeln!(o, "| H | Syl2(H) | \\|H\\| | n = [K:k] | H^1(k, Pic X) |");
    let _ = writeln!(o, "|---|---|---|---|---|");
    for r in rows {
        let _ = writeln!(
            o,
            "| {} | {} | {} | {} | {} |",
            r.name,
            r.syl2,
            r.order,
            r.index,
            format_invariants(&r.h1)
        );
    }
}

pub(super) fn tables_md(t: &Tables) -> String {
    let mut o = String::new();
    table(
        &mut o,
        &format!("## H^1 = 0 ({} classes)", t.table1.len()),
        &t.table1,
    );
    o.push('\n');
    table(
        &mut o,
        &format!("## H^1 = Z/2Z ({} classes)", t.table2.len()),
        &t.table2,
    );
    let _ = writeln!(
        o,
        "\nNames are index-based: D4, D5, D6 are the dihedral groups of order 8, 10, 12 \
         (GAP: D8, D10, D12), QD8 the quasidihedral group of order 16 (GAP: QD16), \
         V4 = C2 x C2, and M10 = A6 . C2."
    );
    o
}

pub(super) fn scenario_md(r: &ScenarioReport) -> String {
    let mut o = String::new();
    let _ = writeln!(
        o,
        "# Scenario for H = {} (order {})\n",
        r.subgroup.label, r.subgroup.order
    );
    let places: Vec<String> = r
        .places
        .iter()
        .map(|p| format!("{} (order {})", p.label, p.order))
        .collect();
    let _ = writeln!(
        o,
        "- ramified decomposition groups: {}",
        if places.is_empty() {
            "none".into()
        } else {
            places.join(", ")
        }
    );
    if r.strict {
        let _ = writeln!(o, "- strict: unramified contribution excluded");
    }
    let _ = writeln!(o, "- H^1: {}", format_invariants(&r.h1_invariants));
    let _ = writeln!(o, "- Obs = Ш(T): {}", format_invariants(&r.sha_invariants));
    let _ = writeln!(o, "- A(T): {}", format_invariants(&r.at_invariants));
    let _ = writeln!(
        o,
        "- Hasse norm principle: {}",
        if r.hnp_holds { "holds" } else { "fails" }
    );
    let _ = writeln!(o, "- τ(T) = {}", r.tamagawa);
    let _ = writeln!(o, "- Schur multiplier of G assumed trivial: {}", r.schur_provenance);
    o
}

pub(super) fn verify_md(r: &VerificationReport) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "|G| = {}", r.group_order);
    for c in &r.checks {
        if c.ok {
            let _ = writeln!(o, "ok   {:>2} {}", c.id, c.name);
        } else {
            let _ = writeln!(o, "FAIL {:>2} {}: {}", c.id, c.name, c.problems.join("; "));
        }
    }
    let _ = writeln!(
        o,
        "classes with nontrivial cyclic Sylow 2-subgroup: {}",
        r.cyclic_syl2.len()
    );
    let _ = writeln!(o, "{}", r.summary());
    o
}
