use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{Group, PermError, Permutation};

/// A subgroup of an enumerated [`Group`], stored as a bitset over the
/// parent's element indices together with a generating set.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: FixedBitSet,
    elements: Vec<usize>,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|p| p.to_string()).collect();
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("gens", &gens)
            .finish()
    }
}

impl Subgroup {
    /// The closure of the given element indices.
    pub fn generated(parent: &Arc<Group>, gens: &[usize]) -> Self {
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert(0);
        let mut elements = vec![0];
        let mut gens_kept = Vec::new();
        for &g in gens {
            if !members.contains(g) {
                gens_kept.push(g);
                extend_closure(parent, &mut members, &mut elements, &gens_kept);
            }
        }
        elements.sort_unstable();
        Self {
            parent: Arc::clone(parent),
            members,
            elements,
            gens: gens_kept,
        }
    }

    /// The closure of permutation generators, each of which must lie in `parent`.
    pub fn from_generators(parent: &Arc<Group>, gens: &[Permutation]) -> Result<Self, PermError> {
        let idx = gens
            .iter()
            .map(|g| parent.index_of(g).ok_or_else(|| PermError::NotInGroup(g.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::generated(parent, &idx))
    }

    pub fn from_cycle_strings<S: AsRef<str>>(parent: &Arc<Group>, gens: &[S]) -> Result<Self, PermError> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse(s.as_ref(), parent.degree()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_generators(parent, &perms)
    }

    /// Wraps a member set that is already known to be a subgroup, choosing a
    /// generating set greedily by least index.
    pub(crate) fn from_members_trusted(parent: &Arc<Group>, members: FixedBitSet) -> Self {
        let mut sub = Self::trivial(parent);
        for i in members.ones() {
            if !sub.members.contains(i) {
                sub.gens.push(i);
                extend_closure(parent, &mut sub.members, &mut sub.elements, &sub.gens);
            }
            if sub.elements.len() == members.count_ones(..) {
                break;
            }
        }
        debug_assert_eq!(sub.members, members);
        sub.elements.sort_unstable();
        sub
    }

    /// Validates that `members` is a subgroup of `parent`.
    pub fn from_members(parent: &Arc<Group>, members: FixedBitSet) -> Result<Self, PermError> {
        if members.len() != parent.order() || !members.contains(0) {
            return Err(PermError::NotASubgroup);
        }
        let elems: Vec<usize> = members.ones().collect();
        for &a in &elems {
            for &b in &elems {
                if !members.contains(parent.mul(a, b)) {
                    return Err(PermError::NotASubgroup);
                }
            }
        }
        Ok(Self::from_members_trusted(parent, members))
    }

    pub fn trivial(parent: &Arc<Group>) -> Self {
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert(0);
        Self {
            parent: Arc::clone(parent),
            members,
            elements: vec![0],
            gens: Vec::new(),
        }
    }

    pub fn whole(parent: &Arc<Group>) -> Self {
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert_range(..);
        Self {
            parent: Arc::clone(parent),
            members,
            elements: (0..parent.order()).collect(),
            gens: parent.generator_indices().to_vec(),
        }
    }

    pub fn cyclic(parent: &Arc<Group>, g: usize) -> Self {
        Self::generated(parent, &[g])
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    /// Element indices in increasing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Generator indices (a witness generating set, not necessarily minimal).
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn generators(&self) -> Vec<Permutation> {
        self.gens.iter().map(|&g| self.parent.element(g).clone()).collect()
    }

    fn same_parent(&self, other: &Self) -> Result<(), PermError> {
        if Arc::ptr_eq(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(PermError::ParentMismatch)
        }
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.gens.iter().all(|&g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.gens
            .iter()
            .enumerate()
            .all(|(k, &a)| self.gens[k + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements().iter().any(|&e| self.parent.element_order(e) == n)
    }

    /// `{g^-1 h g : h in self}`.
    pub fn conjugate(&self, g: usize) -> Self {
        let p = &self.parent;
        let mut members = FixedBitSet::with_capacity(p.order());
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&h| {
                let c = p.conj(h, g);
                members.insert(c);
                c
            })
            .collect();
        elements.sort_unstable();
        Self {
            parent: Arc::clone(p),
            members,
            elements,
            gens: self.gens.iter().map(|&h| p.conj(h, g)).collect(),
        }
    }

    /// Checks `g` against the parent before conjugating.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self, PermError> {
        let i = self
            .parent
            .index_of(g)
            .ok_or_else(|| PermError::NotInGroup(g.to_string()))?;
        Ok(self.conjugate(i))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, PermError> {
        self.same_parent(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Self::from_members_trusted(&self.parent, members))
    }

    /// `g` normalizes `self` iff it maps every generator back into `self`.
    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.gens.iter().all(|&h| self.contains(self.parent.conj(h, g)))
    }

    /// `N_G(self)` by an exhaustive sweep over the parent.
    pub fn normalizer(&self) -> Self {
        let mut members = FixedBitSet::with_capacity(self.parent.order());
        for g in 0..self.parent.order() {
            if self.is_normalized_by(g) {
                members.insert(g);
            }
        }
        Self::from_members_trusted(&self.parent, members)
    }

    /// Normalizer of `self` inside `within`.
    pub fn normalizer_in(&self, within: &Self) -> Self {
        let mut members = FixedBitSet::with_capacity(self.parent.order());
        for &g in within.elements() {
            if self.is_normalized_by(g) {
                members.insert(g);
            }
        }
        Self::from_members_trusted(&self.parent, members)
    }

    pub fn is_normal_in(&self, within: &Self) -> bool {
        within.gens.iter().all(|&g| self.is_normalized_by(g))
    }

    /// Some `g` in the parent with `self^g = other`, if one exists.
    pub fn conjugating_element(&self, other: &Self) -> Option<usize> {
        if !Arc::ptr_eq(&self.parent, &other.parent) || self.order() != other.order() {
            return None;
        }
        if self.order_histogram() != other.order_histogram() {
            return None;
        }
        (0..self.parent.order()).find(|&g| self.gens.iter().all(|&h| other.contains(self.parent.conj(h, g))))
    }

    /// Some `g` with `self^g <= other`.
    pub fn conjugate_into(&self, other: &Self) -> Option<usize> {
        if !Arc::ptr_eq(&self.parent, &other.parent) || !other.order().is_multiple_of(self.order()) {
            return None;
        }
        (0..self.parent.order()).find(|&g| self.gens.iter().all(|&h| other.contains(self.parent.conj(h, g))))
    }

    /// Counts of element orders, indexed by order.
    pub fn order_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0usize; self.order() + 1];
        for &e in &self.elements {
            hist[self.parent.element_order(e)] += 1;
        }
        hist
    }

    /// The normal closure in `self` of the given elements.
    pub fn normal_closure(&self, seeds: &[usize]) -> Self {
        let p = &self.parent;
        let mut closure = Self::generated(p, seeds);
        'outer: loop {
            for &n in &closure.gens.clone() {
                for &h in &self.gens {
                    let c = p.conj(n, h);
                    if !closure.contains(c) {
                        let mut gens = closure.gens.clone();
                        gens.push(c);
                        closure = Self::generated(p, &gens);
                        continue 'outer;
                    }
                }
            }
            return closure;
        }
    }

    /// `[H, H]`: the normal closure of the commutators of generators.
    pub fn derived_subgroup(&self) -> Self {
        let p = &self.parent;
        let mut comms = Vec::new();
        for (k, &a) in self.gens.iter().enumerate() {
            for &b in &self.gens[k + 1..] {
                let c = p.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Number of steps in the derived series down to the trivial group, or
    /// `None` if the series stabilises at a nontrivial perfect group.
    pub fn derived_length(&self) -> Option<usize> {
        let mut cur = self.clone();
        let mut steps = 0;
        while !cur.is_trivial() {
            let next = cur.derived_subgroup();
            if next.order() == cur.order() {
                return None;
            }
            cur = next;
            steps += 1;
        }
        Some(steps)
    }

    pub fn center(&self) -> Self {
        let p = &self.parent;
        let mut members = FixedBitSet::with_capacity(p.order());
        for &z in &self.elements {
            if self.gens.iter().all(|&g| p.mul(z, g) == p.mul(g, z)) {
                members.insert(z);
            }
        }
        Self::from_members_trusted(p, members)
    }

    /// A Sylow `p`-subgroup of `self`, grown by repeatedly adjoining the
    /// least-index `p`-element of the normalizer not yet included.
    pub fn sylow(&self, p: usize) -> Self {
        let g = &self.parent;
        let mut full = 1;
        let mut n = self.order();
        while n.is_multiple_of(p) {
            full *= p;
            n /= p;
        }
        let mut sub = Self::trivial(g);
        while sub.order() < full {
            let norm = sub.normalizer_in(self);
            let x = norm
                .elements()
                .iter()
                .copied()
                .find(|&x| !sub.contains(x) && is_power_of(g.element_order(x), p))
                .expect("normalizer of a non-Sylow p-subgroup contains a new p-element");
            let mut gens = sub.gens.clone();
            gens.push(x);
            sub = Self::generated(g, &gens);
        }
        sub
    }
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Extends `members` to the closure of `gens` under right multiplication.
/// Every element, old or new, is multiplied by every generator once.
fn extend_closure(parent: &Group, members: &mut FixedBitSet, elements: &mut Vec<usize>, gens: &[usize]) {
    let mut k = 0;
    while k < elements.len() {
        let e = elements[k];
        for &s in gens {
            let x = parent.mul(e, s);
            if !members.contains(x) {
                members.insert(x);
                elements.push(x);
            }
        }
        k += 1;
    }
}

/// Double coset representatives of `H \ G / K` with their sizes.
///
/// Representatives are the least unused element index; the sizes sum to `|G|`.
pub fn double_coset_reps(h: &Subgroup, k: &Subgroup) -> Result<Vec<(usize, usize)>, PermError> {
    h.same_parent(k)?;
    let g = h.parent();
    let mut marked = FixedBitSet::with_capacity(g.order());
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for x in 0..g.order() {
        if marked.contains(x) {
            continue;
        }
        marked.insert(x);
        stack.push(x);
        let mut size = 0;
        while let Some(y) = stack.pop() {
            size += 1;
            for &a in h.gens() {
                let z = g.mul(a, y);
                if !marked.contains(z) {
                    marked.insert(z);
                    stack.push(z);
                }
            }
            for &b in k.gens() {
                let z = g.mul(y, b);
                if !marked.contains(z) {
                    marked.insert(z);
                    stack.push(z);
                }
            }
        }
        out.push((x, size));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::DEFAULT_ORDER_CAP;
    use super::*;

    fn s3() -> Arc<Group> {
        Group::from_cycle_strings(3, &["(1,2)", "(1,2,3)"], DEFAULT_ORDER_CAP).unwrap()
    }

    fn sub(g: &Arc<Group>, gens: &[&str]) -> Subgroup {
        Subgroup::from_cycle_strings(g, gens).unwrap()
    }

    #[test]
    fn empty_generators_give_trivial() {
        let g = s3();
        let t = Subgroup::from_generators(&g, &[]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t, Subgroup::trivial(&g));
    }

    #[test]
    fn generator_outside_group_rejected() {
        let g = Group::from_cycle_strings(4, &["(1,2,3,4)"], 100).unwrap();
        let err = Subgroup::from_cycle_strings(&g, &["(1,2)"]).unwrap_err();
        assert!(matches!(err, PermError::NotInGroup(_)));
    }

    #[test]
    fn conjugation_in_s3() {
        let g = s3();
        let h = sub(&g, &["(1,2)"]);
        assert_eq!(h.conjugate(0), h);
        let x = Permutation::parse("(1,3)", 3).unwrap();
        assert_eq!(h.conjugate_by(&x).unwrap(), sub(&g, &["(2,3)"]));
    }

    #[test]
    fn intersections() {
        let g = s3();
        let a = sub(&g, &["(1,2)"]);
        let b = sub(&g, &["(1,3)"]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.intersect(&b).unwrap().is_trivial());
        let other = s3();
        assert!(matches!(
            a.intersect(&Subgroup::trivial(&other)),
            Err(PermError::ParentMismatch)
        ));
    }

    #[test]
    fn normalizers_in_s3() {
        let g = s3();
        assert_eq!(Subgroup::whole(&g).normalizer().order(), 6);
        assert_eq!(sub(&g, &["(1,2,3)"]).normalizer().order(), 6);
        assert_eq!(sub(&g, &["(1,2)"]).normalizer().order(), 2);
    }

    #[test]
    fn derived_subgroups() {
        let g = s3();
        assert_eq!(Subgroup::whole(&g).derived_subgroup(), sub(&g, &["(1,2,3)"]));
        assert!(sub(&g, &["(1,2,3)"]).derived_subgroup().is_trivial());
        // exhaustive commutators agree with the generator-based closure
        let all: Vec<usize> = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .map(|(a, b)| g.commutator(a, b))
            .collect();
        assert_eq!(Subgroup::generated(&g, &all), Subgroup::whole(&g).derived_subgroup());
    }

    #[test]
    fn double_cosets_in_s3() {
        let g = s3();
        let h = sub(&g, &["(1,2)"]);
        let k = sub(&g, &["(1,2,3)"]);
        let dc = double_coset_reps(&h, &k).unwrap();
        assert_eq!(dc, vec![(0, 6)]);
        let dc = double_coset_reps(&h, &h).unwrap();
        let mut sizes: Vec<usize> = dc.iter().map(|d| d.1).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        let t = Subgroup::trivial(&g);
        assert_eq!(double_coset_reps(&t, &t).unwrap().len(), 6);
    }

    #[test]
    fn conjugacy_witness() {
        let g = s3();
        let a = sub(&g, &["(1,2)"]);
        let b = sub(&g, &["(2,3)"]);
        let w = a.conjugating_element(&b).unwrap();
        assert_eq!(a.conjugate(w), b);
        assert!(a.conjugating_element(&sub(&g, &["(1,2,3)"])).is_none());
    }

    #[test]
    fn from_members_validates() {
        let g = s3();
        let mut bits = FixedBitSet::with_capacity(6);
        bits.insert(0);
        bits.insert(g.index_of(&Permutation::parse("(1,2)", 3).unwrap()).unwrap());
        assert!(Subgroup::from_members(&g, bits.clone()).is_ok());
        bits.insert(g.index_of(&Permutation::parse("(1,3)", 3).unwrap()).unwrap());
        assert!(matches!(Subgroup::from_members(&g, bits), Err(PermError::NotASubgroup)));
    }

    #[test]
    fn sylow_of_trivial_and_s4() {
        let g = Group::from_cycle_strings(4, &["(1,2)", "(1,2,3,4)"], 100).unwrap();
        let w = Subgroup::whole(&g);
        assert_eq!(w.sylow(2).order(), 8);
        assert_eq!(w.sylow(3).order(), 3);
        assert_eq!(w.sylow(5).order(), 1);
        assert_eq!(Subgroup::trivial(&g).sylow(2).order(), 1);
    }
}
