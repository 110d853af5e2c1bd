//! Finite permutations stored as 0-based image arrays.
//!
//! Products compose left to right: `(p * q).apply(i) == q.apply(p.apply(i))`,
//! so `p * q` is the group element "p then q" and points are acted on from the
//! right throughout the crate. Conjugation `p.conj(g)` is `g⁻¹ p g`.

use std::fmt;
use std::ops::Mul;

use crate::error::GroupError;

/// A permutation of `{0, …, degree-1}` as an image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let degree = images.len();
        if degree > u16::MAX as usize {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        let mut seen = vec![false; degree];
        for &img in &images {
            if img >= degree || seen[img] {
                return Err(GroupError::NotAPermutation);
            }
            seen[img] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint-cycle notation.
    ///
    /// Handy for tests and the catalog: `Perm::from_cycles(5, &[&[1, 2], &[3, 4]])`
    /// is (1 2)(3 4) on 5 points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        Perm::from_images(images).expect("cycle notation must describe a permutation")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Perm { images }
    }

    /// Least n ≥ 1 with `self^n = identity`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    pub fn pow(&self, n: i64) -> Perm {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `g⁻¹ * self * g`.
    pub fn conj(&self, g: &Perm) -> Perm {
        &(&g.inverse() * self) * g
    }

    /// `self⁻¹ g⁻¹ self g`.
    pub fn commutator(&self, g: &Perm) -> Perm {
        &(&self.inverse() * &g.inverse()) * &(self * g)
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                point = self.apply(point);
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Disjoint-cycle rendering, e.g. `(0 1)(2 3 4)`; `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut point = start;
            loop {
                seen[point] = true;
                out.push_str(&point.to_string());
                point = self.apply(point);
                if point == start {
                    break;
                }
                out.push(' ');
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Compact canonical rendering of the image array, used as a stable label.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
        parts.join(".")
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| rhs.images[i as usize])
                .collect(),
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]", self.cycle_string())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_left_to_right() {
        let a = Perm::from_cycles(4, &[&[0, 1, 2, 3]]);
        let z = Perm::from_cycles(4, &[&[0, 1]]);
        let az = &a * &z;
        // 0 -> a -> 1 -> z -> 0
        assert_eq!(az.apply(0), 0);
        assert_eq!(az.apply(3), 1);
    }

    #[test]
    fn inverse_cancels() {
        let p = Perm::from_cycles(6, &[&[0, 1], &[2, 3, 4]]);
        assert!((&p * &p.inverse()).is_identity());
        assert!((&p.inverse() * &p).is_identity());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(Perm::identity(3).order(), 1);
        let p = Perm::from_cycles(5, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let a = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]);
        let z = Perm::from_cycles(5, &[&[2, 3]]);
        let za = z.conj(&a);
        assert_eq!(za, Perm::from_cycles(5, &[&[3, 4]]));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn degenerate_degrees_allowed() {
        assert!(Perm::identity(0).is_identity());
        assert!(Perm::identity(1).is_identity());
        assert_eq!(Perm::identity(0).order(), 1);
    }
}
