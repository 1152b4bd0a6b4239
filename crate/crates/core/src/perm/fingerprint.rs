use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::Subgroup;

/// Conjugation-invariant summary of a subgroup, with a display label.
///
/// Labels follow GAP's `StructureDescription` names for every isomorphism
/// type that occurs as a subgroup of M11 (plus a few small families); the label
/// is for display only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    /// element order -> number of elements of that order
    pub element_orders: BTreeMap<usize, usize>,
    /// `None` for groups whose derived series stalls (nonsolvable).
    pub derived_length: Option<usize>,
    pub center_order: usize,
    pub label: String,
}

pub fn fingerprint(h: &Subgroup) -> Fingerprint {
    let hist = h.order_histogram();
    let element_orders: BTreeMap<usize, usize> = hist
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| (k, c))
        .collect();
    let exponent = element_orders.keys().fold(1, |acc, &k| acc.lcm(&k));
    let abelian = h.is_abelian();
    let center_order = if abelian { h.order() } else { h.center().order() };
    let derived_length = h.derived_length();
    let mut fp = Fingerprint {
        order: h.order(),
        abelian,
        exponent,
        element_orders,
        derived_length,
        center_order,
        label: String::new(),
    };
    fp.label = label_for(&fp);
    fp
}

fn count(fp: &Fingerprint, k: usize) -> usize {
    fp.element_orders.get(&k).copied().unwrap_or(0)
}

fn label_for(fp: &Fingerprint) -> String {
    if fp.order == 1 {
        return "1".into();
    }
    if fp.abelian {
        return abelian_label(fp);
    }
    let n = fp.order;
    let inv = count(fp, 2);
    let perfect = fp.derived_length.is_none();
    let known = match n {
        6 => Some("S3"),
        8 if inv == 1 => Some("Q8"),
        8 => Some("D8"),
        12 if count(fp, 6) == 0 => Some("A4"),
        12 if inv == 1 => Some("C3 : C4"),
        12 => Some("D12"),
        16 if fp.exponent == 8 && inv == 5 => Some("QD16"),
        16 if fp.exponent == 8 && inv == 1 => Some("Q16"),
        18 if count(fp, 9) > 0 => Some("D18"),
        18 if inv == 9 => Some("(C3 x C3) : C2"),
        18 if inv == 3 => Some("C3 x S3"),
        20 if count(fp, 4) == 10 => Some("C5 : C4"),
        24 if inv == 1 && count(fp, 3) == 8 && count(fp, 4) == 6 => Some("SL(2,3)"),
        24 if inv == 9 && count(fp, 3) == 8 && count(fp, 4) == 6 => Some("S4"),
        36 if fp.center_order == 1 && count(fp, 4) > 0 && count(fp, 9) == 0 => Some("(C3 x C3) : C4"),
        36 if inv == 15 && count(fp, 4) == 0 => Some("S3 x S3"),
        48 if fp.center_order == 2 && count(fp, 8) == 12 => Some("GL(2,3)"),
        55 => Some("C11 : C5"),
        60 if perfect => Some("A5"),
        72 if count(fp, 8) > 0 => Some("(C3 x C3) : C8"),
        72 if count(fp, 6) == 0 && inv == 9 => Some("(C3 x C3) : Q8"),
        72 if fp.center_order == 1 && count(fp, 4) > 0 => Some("(S3 x S3) : C2"),
        120 if inv == 25 && count(fp, 5) == 24 => Some("S5"),
        144 if fp.center_order == 1 && count(fp, 8) > 0 => Some("(C3 x C3) : QD16"),
        360 if perfect => Some("A6"),
        660 if perfect => Some("PSL(2,11)"),
        720 if count(fp, 8) > 0 && count(fp, 6) == 0 => Some("A6 . C2"),
        7920 if perfect => Some("M11"),
        _ => None,
    };
    if let Some(l) = known {
        return l.to_string();
    }
    // dihedral of order n: a cyclic subgroup of index two and n/2 (+1) involutions
    let half = n / 2;
    if n.is_multiple_of(2) && count(fp, half) > 0 && inv == half + usize::from(half.is_multiple_of(2)) {
        return format!("D{n}");
    }
    format!("order-{n}-unrecognized")
}

/// Invariant-factor label of an abelian group, from its element-order counts.
fn abelian_label(fp: &Fingerprint) -> String {
    // p-part partition from the number of elements killed by p^j
    let mut factors: Vec<usize> = Vec::new();
    let mut m = fp.order;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut pk = 1;
            while m.is_multiple_of(p) {
                m /= p;
                pk *= p;
            }
            // parts[j-1] = number of cyclic factors of order >= p^j
            let mut parts = Vec::new();
            let mut prev = 0u32;
            let mut q = 1;
            while q < pk {
                q *= p;
                let killed: usize = fp
                    .element_orders
                    .iter()
                    .filter(|(&k, _)| q % k == 0)
                    .map(|(_, &c)| c)
                    .sum();
                let logc = log_base(killed, p);
                parts.push((logc - prev) as usize);
                prev = logc;
            }
            let rank = parts.first().copied().unwrap_or(0);
            let mut cyclic = vec![1usize; rank];
            for &ge in &parts {
                for c in cyclic.iter_mut().take(ge) {
                    *c *= p;
                }
            }
            // merge into invariant factors, largest first
            cyclic.sort_unstable_by(|a, b| b.cmp(a));
            for (i, c) in cyclic.into_iter().enumerate() {
                if i < factors.len() {
                    factors[i] *= c;
                } else {
                    factors.push(c);
                }
            }
        }
        p += 1;
    }
    factors.sort_unstable_by(|a, b| b.cmp(a));
    factors.iter().map(|f| format!("C{f}")).collect::<Vec<_>>().join(" x ")
}

fn log_base(mut n: usize, p: usize) -> u32 {
    let mut e = 0;
    while n > 1 {
        n /= p;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Group, Subgroup};

    fn label(degree: usize, gens: &[&str]) -> String {
        let g = Group::from_cycle_strings(degree, gens, 10_000).unwrap();
        fingerprint(&Subgroup::whole(&g)).label
    }

    #[test]
    fn order_four() {
        assert_eq!(label(4, &["(1,2)(3,4)", "(1,3)(2,4)"]), "C2 x C2");
        assert_eq!(label(4, &["(1,2,3,4)"]), "C4");
    }

    #[test]
    fn abelian_products() {
        assert_eq!(label(6, &["(1,2)", "(3,4,5)"]), "C6");
        assert_eq!(label(6, &["(1,2,3)", "(4,5,6)"]), "C3 x C3");
        assert_eq!(label(6, &["(1,2,3,4)", "(5,6)"]), "C4 x C2");
        assert_eq!(label(1, &[]), "1");
    }

    #[test]
    fn order_eight_nonabelian() {
        assert_eq!(label(4, &["(1,2,3,4)", "(1,3)"]), "D8");
        // quaternion group, regular action
        assert_eq!(label(8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]), "Q8");
    }

    #[test]
    fn small_nonabelian() {
        assert_eq!(label(3, &["(1,2)", "(1,2,3)"]), "S3");
        assert_eq!(label(4, &["(1,2,3)", "(1,2)(3,4)"]), "A4");
        assert_eq!(label(4, &["(1,2)", "(1,2,3,4)"]), "S4");
        assert_eq!(label(5, &["(1,2,3,4,5)", "(2,5)(3,4)"]), "D10");
        assert_eq!(label(6, &["(1,2,3,4,5,6)", "(2,6)(3,5)"]), "D12");
        assert_eq!(label(5, &["(1,2,3)", "(1,2,3,4,5)"]), "A5");
        assert_eq!(label(5, &["(1,2)", "(1,2,3,4,5)"]), "S5");
        assert_eq!(label(7, &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"]), "D14");
    }

    #[test]
    fn quasidihedral_sixteen() {
        // semidihedral group: a^8 = b^2 = 1, b a b = a^3, regular action on 16 points
        let l = label(8, &["(1,2,3,4,5,6,7,8)", "(2,4)(3,7)(6,8)"]);
        assert_eq!(l, "QD16");
    }
}
