use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::matrix::{smith_normal_form, IntMatrix};
use super::AbError;

/// Finite abelian group `Z/d1 + ... + Z/dr` with `d1 | d2 | ... | dr`, every
/// `di >= 2`. The trivial group has no invariants.
///
/// `lifts`, when non-empty, holds one witness element (an index into some
/// originating permutation group) per generator. Lifts never take part in
/// comparisons.
#[derive(Clone)]
pub struct FinAb {
    invariants: Vec<u64>,
    lifts: Vec<usize>,
}

impl PartialEq for FinAb {
    fn eq(&self, other: &Self) -> bool {
        self.invariants == other.invariants
    }
}

impl Eq for FinAb {}

impl fmt::Debug for FinAb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAb{:?}", self.invariants)
    }
}

impl FinAb {
    pub fn trivial() -> Self {
        Self {
            invariants: Vec::new(),
            lifts: Vec::new(),
        }
    }

    /// Validates the divisibility chain.
    pub fn new(invariants: Vec<u64>) -> Result<Self, AbError> {
        if invariants.iter().any(|&d| d < 2) || invariants.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(AbError::NotInvariantForm(invariants));
        }
        Ok(Self {
            invariants,
            lifts: Vec::new(),
        })
    }

    /// Normal form of an arbitrary direct sum of cyclic groups (entries 1 allowed).
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let rel: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut r = vec![0i64; orders.len()];
                r[i] = d as i64;
                r
            })
            .collect();
        Presentation::new(orders.len(), rel)
            .normalize()
            .expect("finite orders give a finite group")
            .group
    }

    pub fn with_lifts(mut self, lifts: Vec<usize>) -> Self {
        assert!(lifts.is_empty() || lifts.len() == self.invariants.len());
        self.lifts = lifts;
        self
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn lifts(&self) -> &[usize] {
        &self.lifts
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    /// Reduces a coordinate vector into `0 <= x_i < d_i`.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.rank(), "coordinate length mismatch");
        x.iter()
            .zip(&self.invariants)
            .map(|(&a, &d)| a.rem_euclid(d as i64))
            .collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&s)
    }

    pub fn scale(&self, k: i64, a: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = a.iter().map(|x| x * k).collect();
        self.reduce(&s)
    }

    /// Every element, in lexicographic coordinate order. For tests and small groups.
    pub fn all_elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariants {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d as i64).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn whole(&self) -> SubAb {
        let gens = (0..self.rank())
            .map(|i| {
                let mut e = self.zero();
                e[i] = 1;
                e
            })
            .collect();
        SubAb::new(self.clone(), gens)
    }

    pub fn trivial_subgroup(&self) -> SubAb {
        SubAb::new(self.clone(), Vec::new())
    }

    fn relation_rows(&self) -> Vec<Vec<i64>> {
        self.invariants
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut r = self.zero();
                r[i] = d as i64;
                r
            })
            .collect()
    }
}

/// `Z^ngens` modulo the span of `relations`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub ngens: usize,
    pub relations: Vec<Vec<i64>>,
}

/// Normal form of a [`Presentation`] with the coordinate change both ways.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub group: FinAb,
    /// `ngens x rank`: a presentation vector `v` has coordinates `v * to_coords`.
    pub to_coords: Vec<Vec<i64>>,
    /// `rank x ngens`: generator `i` of `group` is the presentation vector `lift[i]`.
    pub lift: Vec<Vec<i64>>,
}

impl Presentation {
    pub fn new(ngens: usize, relations: Vec<Vec<i64>>) -> Self {
        Self { ngens, relations }
    }

    pub fn normalize(&self) -> Result<Normalized, AbError> {
        let m = IntMatrix::from_rows(self.ngens, &self.relations);
        let snf = smith_normal_form(&m);
        let diag = snf.diagonal();
        if snf.rank() < self.ngens {
            return Err(AbError::Infinite);
        }
        let keep: Vec<usize> = (0..self.ngens).filter(|&i| diag[i] != BigInt::from(1)).collect();
        let invariants: Vec<u64> = keep.iter().map(|&i| big_to_u64(&diag[i])).collect();
        let group = FinAb::new(invariants).expect("smith form gives a divisibility chain");
        let to_coords = (0..self.ngens)
            .map(|r| {
                keep.iter()
                    .zip(group.invariants())
                    .map(|(&c, &d)| big_mod(&snf.v[(r, c)], d))
                    .collect()
            })
            .collect();
        let lift = keep
            .iter()
            .map(|&c| {
                (0..self.ngens)
                    .map(|j| snf.v_inv[(c, j)].to_i64().expect("small lift entry"))
                    .collect()
            })
            .collect();
        Ok(Normalized { group, to_coords, lift })
    }
}

impl Normalized {
    pub fn coords(&self, v: &[i64]) -> Vec<i64> {
        let mut out = self.group.zero();
        for (x, row) in v.iter().zip(&self.to_coords) {
            if *x != 0 {
                for (o, r) in out.iter_mut().zip(row) {
                    *o += x * r;
                }
                out = self.group.reduce(&out);
            }
        }
        out
    }
}

fn big_to_u64(x: &BigInt) -> u64 {
    x.to_u64().expect("invariant factor fits in u64")
}

fn big_mod(x: &BigInt, d: u64) -> i64 {
    let r = x % BigInt::from(d);
    let r = if r < BigInt::zero() { r + BigInt::from(d) } else { r };
    r.to_i64().unwrap()
}

/// Left kernel of the integer matrix given by `rows` (each of length `cols`):
/// generators of `{ z : z * rows = 0 }`.
fn left_kernel(cols: usize, rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let m = IntMatrix::from_rows(cols, rows);
    let snf = smith_normal_form(&m);
    let rank = snf.rank();
    (rank..rows.len()).map(|i| snf.u.row(i).to_vec()).collect()
}

/// First `s` coordinates of the left kernel of `rows`, reduced modulo `n`,
/// together with `n * e_i` (which lie in that projection whenever `n`
/// annihilates the ambient group).
fn truncated_kernel(cols: usize, rows: &[Vec<i64>], s: usize, n: u64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = left_kernel(cols, rows)
        .into_iter()
        .map(|z| z[..s].iter().map(|x| big_mod(x, n)).collect())
        .collect();
    for i in 0..s {
        let mut e = vec![0i64; s];
        e[i] = n as i64;
        out.push(e);
    }
    out
}

/// Invariant factors of `Z^n / L` for a full-rank lattice `L` given by rows.
fn lattice_quotient(n: usize, rows: &[Vec<i64>]) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let snf = smith_normal_form(&IntMatrix::from_rows(n, rows));
    assert_eq!(snf.rank(), n, "lattice is not of full rank");
    snf.diagonal().iter().map(big_to_u64).filter(|&d| d > 1).collect()
}

/// A subgroup of a [`FinAb`], stored by generators.
#[derive(Clone)]
pub struct SubAb {
    ambient: FinAb,
    gens: Vec<Vec<i64>>,
}

impl fmt::Debug for SubAb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubAb{{ambient: {:?}, gens: {:?}, invariants: {:?}}}",
            self.ambient,
            self.gens,
            self.invariants()
        )
    }
}

impl SubAb {
    /// Generators are reduced and zero generators dropped.
    pub fn new(ambient: FinAb, gens: Vec<Vec<i64>>) -> Self {
        let mut kept: Vec<Vec<i64>> = Vec::new();
        for g in gens {
            let g = ambient.reduce(&g);
            if g.iter().any(|&x| x != 0) && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Self { ambient, gens: kept }
    }

    pub fn ambient(&self) -> &FinAb {
        &self.ambient
    }

    pub fn gens(&self) -> &[Vec<i64>] {
        &self.gens
    }

    fn lattice_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = self.gens.clone();
        rows.extend(self.ambient.relation_rows());
        rows
    }

    /// Invariants of the ambient group modulo this subgroup.
    pub fn quotient_invariants(&self) -> Vec<u64> {
        lattice_quotient(self.ambient.rank(), &self.lattice_rows())
    }

    pub fn order(&self) -> u64 {
        let q: u64 = self.quotient_invariants().iter().product();
        self.ambient.order() / q
    }

    /// Invariant factors of the subgroup itself.
    pub fn invariants(&self) -> Vec<u64> {
        self.subquotient_invariants(&self.ambient.trivial_subgroup())
            .expect("trivial subgroup is contained in every subgroup")
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let x = self.ambient.reduce(x);
        if x.iter().all(|&a| a == 0) {
            return true;
        }
        let n = self.ambient.rank();
        let snf = smith_normal_form(&IntMatrix::from_rows(n, &self.lattice_rows()));
        // x lies in the row lattice iff x * v is divisible entrywise by the diagonal
        (0..n).all(|c| {
            let xv: BigInt = (0..n).map(|r| BigInt::from(x[r]) * &snf.v[(r, c)]).sum();
            (xv % &snf.s[(c, c)]).is_zero()
        })
    }

    fn check_ambient(&self, other: &Self) -> Result<(), AbError> {
        if self.ambient != other.ambient {
            return Err(AbError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, other: &Self) -> Result<bool, AbError> {
        self.check_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.contains(g)))
    }

    pub fn same_as(&self, other: &Self) -> Result<bool, AbError> {
        Ok(self.is_subgroup_of(other)? && other.is_subgroup_of(self)?)
    }

    pub fn join(&self, other: &Self) -> Result<Self, AbError> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::new(self.ambient.clone(), gens))
    }

    /// Invariants of `self / sub`; `sub` must be contained in `self`.
    pub fn subquotient_invariants(&self, sub: &Self) -> Result<Vec<u64>, AbError> {
        if !sub.is_subgroup_of(self)? {
            return Err(AbError::NotContained);
        }
        let s = self.gens.len();
        if s == 0 {
            return Ok(Vec::new());
        }
        // kernel of Z^s -> ambient / sub, read off the left kernel of
        // [self.gens; sub.gens; ambient relations]
        let mut rows = self.gens.clone();
        rows.extend(sub.lattice_rows());
        let kernel = truncated_kernel(self.ambient.rank(), &rows, s, self.ambient.order());
        Ok(lattice_quotient(s, &kernel))
    }

    /// The subgroup as an abstract group, with the inclusion into the ambient.
    pub fn as_group(&self) -> (FinAb, AbHom) {
        let s = self.gens.len();
        let mut rows = self.gens.clone();
        rows.extend(self.ambient.relation_rows());
        let kernel = if s == 0 {
            Vec::new()
        } else {
            truncated_kernel(self.ambient.rank(), &rows, s, self.ambient.order())
        };
        let norm = Presentation::new(s, kernel)
            .normalize()
            .expect("subgroup of a finite group is finite");
        let images = norm
            .lift
            .iter()
            .map(|l| {
                let mut acc = self.ambient.zero();
                for (k, g) in l.iter().zip(&self.gens) {
                    acc = self.ambient.add(&acc, &self.ambient.scale(*k, g));
                }
                acc
            })
            .collect();
        let incl = AbHom::new(norm.group.clone(), self.ambient.clone(), images).expect("inclusion is well defined");
        (norm.group, incl)
    }
}

/// Homomorphism between finite abelian groups; row `i` of `images` is the
/// image of domain generator `i` in codomain coordinates.
#[derive(Clone, Debug)]
pub struct AbHom {
    domain: FinAb,
    codomain: FinAb,
    images: Vec<Vec<i64>>,
}

impl AbHom {
    pub fn new(domain: FinAb, codomain: FinAb, images: Vec<Vec<i64>>) -> Result<Self, AbError> {
        if images.len() != domain.rank() {
            return Err(AbError::ImageCount {
                expected: domain.rank(),
                found: images.len(),
            });
        }
        let images: Vec<Vec<i64>> = images.iter().map(|r| codomain.reduce(r)).collect();
        for (i, (img, &d)) in images.iter().zip(domain.invariants()).enumerate() {
            if codomain.scale(d as i64, img).iter().any(|&x| x != 0) {
                return Err(AbError::IllDefined { generator: i });
            }
        }
        Ok(Self {
            domain,
            codomain,
            images,
        })
    }

    pub fn zero(domain: FinAb, codomain: FinAb) -> Self {
        let images = vec![codomain.zero(); domain.rank()];
        Self {
            domain,
            codomain,
            images,
        }
    }

    pub fn domain(&self) -> &FinAb {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAb {
        &self.codomain
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    /// The integer matrix of the map (domain rank x codomain rank).
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.codomain.rank(), &self.images)
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut acc = self.codomain.zero();
        for (k, img) in x.iter().zip(&self.images) {
            if *k != 0 {
                for (a, b) in acc.iter_mut().zip(img) {
                    *a += k * b;
                }
                acc = self.codomain.reduce(&acc);
            }
        }
        acc
    }

    pub fn kernel(&self) -> SubAb {
        let a = self.domain.rank();
        if a == 0 {
            return self.domain.trivial_subgroup();
        }
        let mut rows = self.images.clone();
        rows.extend(self.codomain.relation_rows());
        let gens = left_kernel(self.codomain.rank(), &rows)
            .into_iter()
            .map(|z| {
                z[..a]
                    .iter()
                    .zip(self.domain.invariants())
                    .map(|(x, &d)| big_mod(x, d))
                    .collect()
            })
            .collect();
        SubAb::new(self.domain.clone(), gens)
    }

    pub fn image(&self) -> SubAb {
        SubAb::new(self.codomain.clone(), self.images.clone())
    }

    pub fn pushforward(&self, s: &SubAb) -> Result<SubAb, AbError> {
        if s.ambient != self.domain {
            return Err(AbError::AmbientMismatch);
        }
        Ok(SubAb::new(
            self.codomain.clone(),
            s.gens.iter().map(|g| self.apply(g)).collect(),
        ))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AbHom) -> Result<AbHom, AbError> {
        if self.codomain != next.domain {
            return Err(AbError::AmbientMismatch);
        }
        let images = self.images.iter().map(|x| next.apply(x)).collect();
        AbHom::new(self.domain.clone(), next.codomain.clone(), images)
    }
}

/// A normalized direct sum with its coordinate injections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub group: FinAb,
    pub injections: Vec<AbHom>,
    offsets: Vec<usize>,
    norm: Normalized,
}

pub fn direct_sum(parts: &[FinAb]) -> DirectSum {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut orders = Vec::new();
    for p in parts {
        offsets.push(orders.len());
        orders.extend_from_slice(p.invariants());
    }
    let n = orders.len();
    let rel = orders
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut r = vec![0i64; n];
            r[i] = d as i64;
            r
        })
        .collect();
    let norm = Presentation::new(n, rel).normalize().expect("finite direct sum");
    let injections = parts
        .iter()
        .zip(&offsets)
        .map(|(p, &off)| {
            let images = (0..p.rank())
                .map(|i| {
                    let mut e = vec![0i64; n];
                    e[off + i] = 1;
                    norm.coords(&e)
                })
                .collect();
            AbHom::new(p.clone(), norm.group.clone(), images).expect("injection is well defined")
        })
        .collect();
    DirectSum {
        group: norm.group.clone(),
        injections,
        offsets,
        norm,
    }
}

impl DirectSum {
    /// The map out of the sum that restricts to `maps[k]` on part `k`.
    pub fn copair(&self, codomain: &FinAb, maps: &[AbHom]) -> Result<AbHom, AbError> {
        if maps.len() != self.injections.len() {
            return Err(AbError::ImageCount {
                expected: self.injections.len(),
                found: maps.len(),
            });
        }
        for (m, inj) in maps.iter().zip(&self.injections) {
            if m.domain != inj.domain || m.codomain != *codomain {
                return Err(AbError::AmbientMismatch);
            }
        }
        let images = self
            .norm
            .lift
            .iter()
            .map(|l| {
                let mut acc = codomain.zero();
                for (m, &off) in maps.iter().zip(&self.offsets) {
                    let part: Vec<i64> = l[off..off + m.domain.rank()].to_vec();
                    acc = codomain.add(&acc, &m.apply(&part));
                }
                acc
            })
            .collect();
        AbHom::new(self.group.clone(), codomain.clone(), images)
    }
}
