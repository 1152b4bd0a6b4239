use std::collections::VecDeque;

use crate::perm::Subgroup;

use super::finab::{FinAb, Presentation};

/// `H / [H,H]` together with the projection from `H`.
///
/// The group is read off the Schreier graph of the cosets of `[H,H]` under
/// right multiplication by the generators of `H`: a spanning tree assigns each
/// coset a word, and every non-tree edge contributes one relation.
#[derive(Clone, Debug)]
pub struct Abelianization {
    group: FinAb,
    derived: Subgroup,
    source: Subgroup,
    /// position in `source.elements()` -> coset number
    coset_of: Vec<u32>,
    /// coset number -> coordinates in `group`
    coset_coords: Vec<Vec<i64>>,
}

impl Abelianization {
    /// The abelianization; `lifts()` holds a witness element of `H` per generator.
    pub fn group(&self) -> &FinAb {
        &self.group
    }

    pub fn derived(&self) -> &Subgroup {
        &self.derived
    }

    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    /// Coordinates of the image of `elem` (an index into the parent group), or
    /// `None` when `elem` is not in `H`.
    pub fn project(&self, elem: usize) -> Option<Vec<i64>> {
        let pos = self.source.elements().binary_search(&elem).ok()?;
        Some(self.coset_coords[self.coset_of[pos] as usize].clone())
    }
}

pub fn abelianization(h: &Subgroup) -> Abelianization {
    let g = h.parent();
    let derived = h.derived_subgroup();
    let elems = h.elements();
    let pos = |e: usize| elems.binary_search(&e).expect("element of H");

    const UNSET: u32 = u32::MAX;
    let mut coset_of = vec![UNSET; elems.len()];
    let mut reps = Vec::new();
    for (i, &x) in elems.iter().enumerate() {
        if coset_of[i] != UNSET {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &d in derived.elements() {
            coset_of[pos(g.mul(x, d))] = c;
        }
    }

    let gens = h.gens();
    let n = gens.len();
    let ncos = reps.len();
    let step = |c: usize, k: usize| coset_of[pos(g.mul(reps[c], gens[k]))] as usize;

    // spanning tree from the identity coset
    let mut word: Vec<Option<Vec<i64>>> = vec![None; ncos];
    let start = coset_of[pos(0)] as usize;
    word[start] = Some(vec![0; n]);
    let mut queue = VecDeque::from([start]);
    let mut tree_edge = vec![vec![false; n]; ncos];
    while let Some(c) = queue.pop_front() {
        for k in 0..n {
            let d = step(c, k);
            if word[d].is_none() {
                let mut w = word[c].clone().unwrap();
                w[k] += 1;
                word[d] = Some(w);
                tree_edge[c][k] = true;
                queue.push_back(d);
            }
        }
    }
    let word: Vec<Vec<i64>> = word.into_iter().map(|w| w.expect("connected")).collect();

    let mut relations = Vec::new();
    for c in 0..ncos {
        for k in 0..n {
            if tree_edge[c][k] {
                continue;
            }
            let d = step(c, k);
            let mut r = word[c].clone();
            r[k] += 1;
            for (a, b) in r.iter_mut().zip(&word[d]) {
                *a -= b;
            }
            if r.iter().any(|&x| x != 0) {
                relations.push(r);
            }
        }
    }
    let norm = Presentation::new(n, relations)
        .normalize()
        .expect("abelianization of a finite group is finite");

    let lifts = norm
        .lift
        .iter()
        .map(|l| {
            l.iter().zip(gens).fold(0, |acc, (&e, &x)| {
                let p = if e >= 0 {
                    g.pow(x, e as u64)
                } else {
                    g.pow(g.inv(x), e.unsigned_abs())
                };
                g.mul(acc, p)
            })
        })
        .collect();
    let coset_coords = word.iter().map(|w| norm.coords(w)).collect();
    Abelianization {
        group: norm.group.with_lifts(lifts),
        derived,
        source: h.clone(),
        coset_of,
        coset_coords,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Group;

    fn ab_of(degree: usize, gens: &[&str]) -> Abelianization {
        let g = Group::from_cycle_strings(degree, gens, 10_000).unwrap();
        abelianization(&Subgroup::whole(&g))
    }

    fn check_projection(a: &Abelianization) {
        let h = a.source();
        let g = h.parent();
        let grp = a.group();
        for &x in h.elements() {
            for &y in h.elements() {
                let lhs = a.project(g.mul(x, y)).unwrap();
                let rhs = grp.add(&a.project(x).unwrap(), &a.project(y).unwrap());
                assert_eq!(lhs, rhs);
            }
            let zero = a.project(x).unwrap().iter().all(|&c| c == 0);
            assert_eq!(zero, a.derived().contains(x));
        }
        for (i, &l) in grp.lifts().iter().enumerate() {
            let mut e = grp.zero();
            e[i] = 1;
            assert_eq!(a.project(l).unwrap(), grp.reduce(&e));
        }
    }

    #[test]
    fn cyclic_four() {
        let a = ab_of(4, &["(1,2,3,4)"]);
        assert_eq!(a.group().invariants(), &[4]);
        check_projection(&a);
    }

    #[test]
    fn symmetric_three() {
        let a = ab_of(3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(a.group().invariants(), &[2]);
        assert_eq!(a.derived().order(), 3);
        check_projection(&a);
    }

    #[test]
    fn abelian_groups_keep_their_order() {
        let a = ab_of(7, &["(1,2)", "(3,4)", "(5,6,7)"]);
        assert_eq!(a.group().invariants(), &[2, 6]);
        check_projection(&a);
        let a = ab_of(1, &[]);
        assert!(a.group().is_trivial());
        check_projection(&a);
    }

    #[test]
    fn dihedral_and_quaternion() {
        assert_eq!(ab_of(4, &["(1,2,3,4)", "(1,3)"]).group().invariants(), &[2, 2]);
        let q8 = ab_of(8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]);
        assert_eq!(q8.group().invariants(), &[2, 2]);
        check_projection(&q8);
        let a4 = ab_of(4, &["(1,2,3)", "(1,2)(3,4)"]);
        assert_eq!(a4.group().invariants(), &[3]);
        check_projection(&a4);
    }

    #[test]
    fn m11_is_perfect() {
        let a = ab_of(11, &["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]);
        assert!(a.group().is_trivial());
        assert_eq!(a.project(5), Some(vec![]));
    }

    #[test]
    fn outside_elements_have_no_image() {
        let g = Group::from_cycle_strings(3, &["(1,2)", "(1,2,3)"], 100).unwrap();
        let h = Subgroup::from_cycle_strings(&g, &["(1,2)"]).unwrap();
        let a = abelianization(&h);
        let outside = g
            .index_of(&crate::perm::Permutation::parse("(1,2,3)", 3).unwrap())
            .unwrap();
        assert_eq!(a.project(outside), None);
    }
}
