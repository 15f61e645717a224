//! Permutations of `{1, …, n}`.
//!
//! Products compose left to right: `a * b` applies `a` first, then `b`.
//! Stored images are 0-based; cycle notation is 1-based.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= 256, "degree {n} exceeds the supported maximum of 256");
        Perm {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// From 0-based images; fails unless the images form a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    /// From 1-based cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || std::mem::replace(&mut seen[a - 1], true) {
                    return Err(Error::Parse(format!("bad cycle {cycle:?} on {n} points")));
                }
                images[a - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// `h⁻¹ g h`.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        h.inverse().then(self).then(h)
    }

    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// 0-based cycles including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn is_even(&self) -> bool {
        (self.degree() - self.cycles().len()).is_multiple_of(2)
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Direct sum: `self` on the first points, `other` shifted after them.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let k = self.degree() as u8;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + k));
        assert!(images.len() <= 256);
        Perm { images }
    }

    /// Places `self` on the points `offset..offset + degree` of `S_n`.
    pub fn embed(&self, n: usize, offset: usize) -> Perm {
        let mut p = Perm::identity(n);
        for i in 0..self.degree() {
            p.images[offset + i] = (offset + self.apply(i)) as u8;
        }
        p
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.then(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses cycle notation such as `(1 2)(3 4)`; the degree is the largest
/// point mentioned. Use [`parse_cycles`] to fix the degree.
impl FromStr for Perm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Perm> {
        let cycles = cycle_lists(s)?;
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        Perm::from_cycles(n, &cycles)
    }
}

/// Parses cycle notation as a permutation of `n` points.
pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
    Perm::from_cycles(n, &cycle_lists(s)?)
}

fn cycle_lists(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s == "()" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("bad cycle notation {s:?}")))?;
        let cycle = body
            .0
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if cycle.is_empty() {
            return Err(Error::Parse(format!("empty cycle in {s:?}")));
        }
        out.push(cycle);
        rest = body.1.trim_start();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use proptest::prelude::*;

    #[test]
    fn cycle_notation_round_trip() {
        let g: Perm = "(1 2)(3 4)".parse().unwrap();
        assert_eq!(g.to_string(), "(1 2)(3 4)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(parse_cycles("(1 3)", 5).unwrap().degree(), 5);
        assert!("(1 2".parse::<Perm>().is_err());
        assert!("(1 1)".parse::<Perm>().is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = parse_cycles("(1 2)", 3).unwrap();
        let b = parse_cycles("(2 3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!((&a * &b).to_string(), "(1 3 2)");
    }

    #[test]
    fn cycle_types_and_parity() {
        let g = parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(g.cycle_type(), partition![3, 2, 1]);
        assert!(!g.is_even());
        assert_eq!(g.order(), 6);
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in perm_strategy(7), b in perm_strategy(7), c in perm_strategy(7)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!((&a * &b).is_even(), a.is_even() == b.is_even());
            prop_assert_eq!(a.conjugate_by(&b).cycle_type(), a.cycle_type());
            prop_assert!(a.pow(a.order()).is_identity());
        }
    }
}
