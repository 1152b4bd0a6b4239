use std::fmt;

use super::PermError;

/// A bijection on `{1, ..., degree}`.
///
/// Points are stored 0-based; parsing and display use the 1-based cycle
/// notation of GAP. Products compose left to right: in `a.then(&b)` the
/// permutation `a` is applied first, so `i^(ab) = (i^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// The same permutation on `degree >= self.degree()` points, fixing the new ones.
    pub fn extended(&self, degree: usize) -> Result<Self, PermError> {
        if degree < self.degree() {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: self.degree(),
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Self { images })
    }

    /// Product of the given cycles (1-based points), applied left to right.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self, PermError> {
        let mut result = Self::identity(degree);
        for cycle in cycles {
            let mut seen = Vec::with_capacity(cycle.len());
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if seen.contains(&p) {
                    return Err(PermError::RepeatedPoint(p));
                }
                seen.push(p);
            }
            if cycle.len() < 2 {
                continue;
            }
            let mut c = Self::identity(degree);
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                c.images[p - 1] = (q - 1) as u32;
            }
            result = result.then(&c);
        }
        Ok(result)
    }

    /// Parses GAP-style cycle notation such as `"(3,7,11,8)(4,10,5,6)"` or `"()"`.
    ///
    /// Whitespace is ignored. Cycles are multiplied left to right.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PermError::Syntax("empty permutation".into()));
        }
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Syntax(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| PermError::Syntax(format!("unclosed cycle in {text:?}")))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let points = inner
                .split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| PermError::Syntax(format!("bad point {tok:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(points);
        }
        Self::from_cycles(&cycles, degree)
    }

    /// Largest point mentioned in a cycle string, used when no degree is given.
    pub fn max_point(text: &str) -> usize {
        text.split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint cycles of length at least two, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img1(p: &Permutation, point: usize) -> usize {
        p.apply(point - 1) + 1
    }

    #[test]
    fn parse_identity() {
        let p = Permutation::parse("()", 11).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 11);
    }

    #[test]
    fn parse_m11_second_generator() {
        let p = Permutation::parse("(3,7,11,8)(4,10,5,6)", 11).unwrap();
        let expect = [(3, 7), (7, 11), (11, 8), (8, 3), (4, 10), (10, 5), (5, 6), (6, 4)];
        for (a, b) in expect {
            assert_eq!(img1(&p, a), b);
        }
        for fixed in [1, 2, 9] {
            assert_eq!(img1(&p, fixed), fixed);
        }
    }

    #[test]
    fn left_to_right_product() {
        // 1 -(1,2)-> 2 -(1,3)-> 2, 2 -> 1 -> 3, 3 -> 3 -> 1.
        let p = Permutation::parse("(1,2)(1,3)", 3).unwrap();
        assert_eq!((img1(&p, 1), img1(&p, 2), img1(&p, 3)), (2, 3, 1));
        assert_eq!(p.to_string(), "(1,2,3)");
        let a = Permutation::parse("(1,2)", 3).unwrap();
        let b = Permutation::parse("(1,3)", 3).unwrap();
        assert_eq!(a.then(&b), p);
    }

    #[test]
    fn parse_tolerates_gap_spacing() {
        let p = Permutation::parse("( 2, 8)( 3, 4)( 5, 6)(10,11)", 11).unwrap();
        assert_eq!(p.to_string(), "(2,8)(3,4)(5,6)(10,11)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Permutation::parse("(1,2", 3), Err(PermError::Syntax(_))));
        assert!(matches!(Permutation::parse("(1,x)", 3), Err(PermError::Syntax(_))));
        assert!(matches!(Permutation::parse("1,2", 3), Err(PermError::Syntax(_))));
        assert!(matches!(
            Permutation::parse("(1,4)", 3),
            Err(PermError::PointOutOfRange { point: 4, degree: 3 })
        ));
        assert!(matches!(
            Permutation::parse("(1,2,1)", 3),
            Err(PermError::RepeatedPoint(1))
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11)", 11).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn extension_fixes_new_points() {
        let p = Permutation::parse("(1,3)", 3).unwrap();
        let q = p.extended(5).unwrap();
        assert_eq!(q.degree(), 5);
        assert_eq!(q.to_string(), "(1,3)");
        assert_eq!(q.apply(4), 4);
        assert!(q.extended(2).is_err());
    }
}
