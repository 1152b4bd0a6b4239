use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::{PermError, Permutation};

/// Enumeration limit used when the caller does not supply one.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Largest dense lookup table (entries) built for the base-image index.
const DENSE_LOOKUP_LIMIT: u64 = 1 << 22;

/// Maps the images of the base points to an element index.
enum ElementLookup {
    Dense { radix: u64, table: Vec<u32> },
    Sparse { radix: u64, map: HashMap<u64, u32> },
    Full(HashMap<Vec<u32>, u32>),
}

/// A finite permutation group with every element enumerated.
///
/// Elements are numbered breadth-first from the identity (index 0), extending
/// by the generators in the order given. All group arithmetic is done on these
/// indices.
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    gen_indices: Vec<usize>,
    elements: Vec<Permutation>,
    base: Vec<usize>,
    lookup: ElementLookup,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
}

impl Group {
    /// Enumerates the group generated by `gens` on `degree` points.
    ///
    /// Fails with [`PermError::CapExceeded`] as soon as more than `cap`
    /// elements have been found.
    pub fn from_generators(degree: usize, gens: &[Permutation], cap: usize) -> Result<Arc<Self>, PermError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = elements[i].then(g);
                if index.contains_key(&p) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(PermError::CapExceeded { cap });
                }
                index.insert(p.clone(), elements.len() as u32);
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
        let gen_indices = gens.iter().map(|g| index[g] as usize).collect();

        let base = choose_base(&elements, degree);
        let lookup = build_lookup(&elements, &base, degree);
        let mut group = Self {
            degree,
            generators: gens.to_vec(),
            gen_indices,
            elements,
            base,
            lookup,
            inverses: Vec::new(),
            element_orders: Vec::new(),
        };
        group.inverses = (0..group.order())
            .map(|i| group.index_of(&group.elements[i].inverse()).unwrap() as u32)
            .collect();
        group.element_orders = (0..group.order())
            .map(|i| {
                let mut k = 1;
                let mut x = i;
                while x != 0 {
                    x = group.mul(x, i);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Arc::new(group))
    }

    /// Parses each generator from cycle notation, then enumerates.
    pub fn from_cycle_strings<S: AsRef<str>>(degree: usize, gens: &[S], cap: usize) -> Result<Arc<Self>, PermError> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse(s.as_ref(), degree))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_generators(degree, &perms, cap)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Points whose images determine an element of this group uniquely.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        let i = self.lookup_images(|b| p.apply(b))?;
        (self.elements[i] == *p).then_some(i)
    }

    fn lookup_images(&self, image: impl Fn(usize) -> usize) -> Option<usize> {
        match &self.lookup {
            ElementLookup::Dense { radix, table } => {
                let key = self.base.iter().fold(0u64, |acc, &b| acc * radix + image(b) as u64);
                let i = table[key as usize];
                (i != u32::MAX).then_some(i as usize)
            }
            ElementLookup::Sparse { radix, map } => {
                let key = self.base.iter().fold(0u64, |acc, &b| acc * radix + image(b) as u64);
                map.get(&key).map(|&i| i as usize)
            }
            ElementLookup::Full(map) => {
                let key: Vec<u32> = self.base.iter().map(|&b| image(b) as u32).collect();
                map.get(&key).map(|&i| i as usize)
            }
        }
    }

    /// Index of `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let pa = &self.elements[a];
        let pb = &self.elements[b];
        self.lookup_images(|x| pb.apply(pa.apply(x)))
            .expect("product of group elements lies in the group")
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        let pa = &self.elements[a];
        let pg = &self.elements[g];
        let pgi = &self.elements[self.inv(g)];
        self.lookup_images(|x| pg.apply(pa.apply(pgi.apply(x))))
            .expect("conjugate lies in the group")
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        e %= self.element_order(a) as u64;
        let mut result = 0;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a] as usize
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

fn choose_base(elements: &[Permutation], degree: usize) -> Vec<usize> {
    let mut base = Vec::new();
    let mut distinct = 1;
    for p in 0..degree {
        if distinct == elements.len() {
            break;
        }
        let mut trial = base.clone();
        trial.push(p);
        let count = elements
            .iter()
            .map(|e| trial.iter().map(|&b| e.apply(b)).collect::<Vec<_>>())
            .collect::<HashSet<_>>()
            .len();
        if count > distinct {
            distinct = count;
            base = trial;
        }
    }
    base
}

fn build_lookup(elements: &[Permutation], base: &[usize], degree: usize) -> ElementLookup {
    let radix = degree.max(1) as u64;
    let span = base.iter().try_fold(1u64, |acc, _| acc.checked_mul(radix));
    let key = |e: &Permutation| base.iter().fold(0u64, |acc, &b| acc * radix + e.apply(b) as u64);
    match span {
        Some(s) if s <= DENSE_LOOKUP_LIMIT => {
            let mut table = vec![u32::MAX; s as usize];
            for (i, e) in elements.iter().enumerate() {
                table[key(e) as usize] = i as u32;
            }
            ElementLookup::Dense { radix, table }
        }
        Some(_) => ElementLookup::Sparse {
            radix,
            map: elements.iter().enumerate().map(|(i, e)| (key(e), i as u32)).collect(),
        },
        None => ElementLookup::Full(
            elements
                .iter()
                .enumerate()
                .map(|(i, e)| (base.iter().map(|&b| e.apply(b) as u32).collect(), i as u32))
                .collect(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<Group> {
        Group::from_cycle_strings(3, &["(1,2)", "(1,2,3)"], DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn s3_order_and_closure() {
        let g = s3();
        assert_eq!(g.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                let p = g.element(a).then(g.element(b));
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn trivial_group() {
        let g = Group::from_generators(5, &[], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn identity_has_index_zero_and_inverses_work() {
        let g = s3();
        assert!(g.element(0).is_identity());
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = Group::from_cycle_strings(5, &["(1,2)", "(1,2,3,4,5)"], 100).unwrap_err();
        assert!(matches!(err, PermError::CapExceeded { cap: 100 }));
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = Permutation::parse("(1,2)", 2).unwrap();
        let err = Group::from_generators(3, &[a], 10).unwrap_err();
        assert!(matches!(err, PermError::DegreeMismatch { .. }));
    }

    #[test]
    fn foreign_permutation_not_found() {
        let g = Group::from_cycle_strings(4, &["(1,2,3,4)"], 100).unwrap();
        let p = Permutation::parse("(1,2)", 4).unwrap();
        assert_eq!(g.index_of(&p), None);
    }

    #[test]
    fn conj_and_commutator() {
        let g = s3();
        for a in 0..6 {
            for x in 0..6 {
                let c = g.mul(g.mul(g.inv(x), a), x);
                assert_eq!(g.conj(a, x), c);
                let comm = g.mul(g.mul(g.inv(a), g.inv(x)), g.mul(a, x));
                assert_eq!(g.commutator(a, x), comm);
            }
        }
    }

    #[test]
    fn powers_and_orders() {
        let g = Group::from_cycle_strings(6, &["(1,2,3,4,5,6)"], 100).unwrap();
        let c = g.generator_indices()[0];
        assert_eq!(g.element_order(c), 6);
        assert_eq!(g.pow(c, 6), 0);
        assert_eq!(g.pow(c, 7), c);
    }
}
