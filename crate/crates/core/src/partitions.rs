//! Partitions, Young diagrams and their hook combinatorics.
//!
//! Nodes are addressed with 1-based `(row, col)` coordinates. Partitions
//! render as comma-separated parts (`4,3,1`), with `-` for the empty
//! partition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` as a partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains_node(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row - 1) >= col
    }

    /// `μ ⊆ λ` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Hook length at a node, or `None` outside the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> Option<usize> {
        if !self.contains_node(row, col) {
            return None;
        }
        let arm = self.part(row - 1) - col;
        let leg = self
            .parts
            .iter()
            .skip(row)
            .take_while(|&&p| p >= col)
            .count();
        Some(arm + leg + 1)
    }

    /// One entry per node, in row-major order.
    pub fn hooks(&self) -> Vec<HookData> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = conj.parts[j] - i - 1;
                out.push(HookData {
                    row: i + 1,
                    col: j + 1,
                    length: arm + leg + 1,
                    arm,
                    leg,
                });
            }
        }
        out
    }

    /// The nodes whose hook length is divisible by `e`.
    pub fn hooks_divisible(&self, e: usize) -> Vec<HookData> {
        assert!(e >= 1, "hook divisor must be positive");
        self.hooks()
            .into_iter()
            .filter(|h| h.length % e == 0)
            .collect()
    }

    /// Removes the rim hook associated with the hook at `(row, col)`.
    ///
    /// Returns the remaining partition and the leg length of the removed
    /// rim hook (equal to the leg length of the hook).
    pub fn remove_rim_hook(&self, row: usize, col: usize) -> Result<(Partition, usize)> {
        if !self.contains_node(row, col) {
            return Err(Error::NodeOutsideDiagram { row, col });
        }
        let leg = self
            .parts
            .iter()
            .skip(row)
            .take_while(|&&p| p >= col)
            .count();
        let mut parts = self.parts.clone();
        let (r, last) = (row - 1, row - 1 + leg);
        for (dst, &src) in parts[r..last].iter_mut().zip(&self.parts[r + 1..]) {
            *dst = src - 1;
        }
        parts[last] = col - 1;
        parts.retain(|&x| x > 0);
        Ok((Partition { parts }, leg))
    }

    /// Beta-set with `beads` beads: `λ_i + beads - i` for `i = 1..=beads`.
    fn beta_set(&self, beads: usize) -> Vec<usize> {
        (0..beads).map(|i| self.part(i) + beads - 1 - i).collect()
    }

    fn from_beta_set(mut beta: Vec<usize>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let k = beta.len();
        Partition::from_unsorted(
            beta.iter()
                .enumerate()
                .map(|(i, &b)| b + 1 + i - k)
                .collect(),
        )
    }

    /// `e`-core, `e`-quotient and `e`-weight read off an `e`-runner abacus.
    ///
    /// The bead count is the number of parts rounded up to a multiple of
    /// `e`; runner `j` holds the beta-numbers congruent to `j` mod `e`.
    pub fn core_quotient(&self, e: usize) -> CoreQuotient {
        assert!(e >= 1, "abacus needs at least one runner");
        let beads = self.len().div_ceil(e) * e;
        let beta = self.beta_set(beads);
        let mut runners: Vec<Vec<usize>> = vec![Vec::new(); e];
        for &b in &beta {
            runners[b % e].push(b / e);
        }
        let mut quotient = Vec::with_capacity(e);
        let mut core_beta = Vec::with_capacity(beads);
        for (j, runner) in runners.iter_mut().enumerate() {
            runner.sort_unstable_by(|a, b| b.cmp(a));
            let m = runner.len();
            quotient.push(Partition::from_unsorted(
                runner
                    .iter()
                    .enumerate()
                    .map(|(i, &pos)| pos + 1 + i - m)
                    .collect(),
            ));
            core_beta.extend((0..m).map(|pos| pos * e + j));
        }
        let weight = quotient.iter().map(Partition::size).sum();
        CoreQuotient {
            core: Partition::from_beta_set(core_beta),
            quotient,
            weight,
        }
    }

    pub fn core(&self, e: usize) -> Partition {
        self.core_quotient(e).core
    }

    pub fn weight(&self, e: usize) -> usize {
        self.core_quotient(e).weight
    }

    /// True iff `λ = (n - x, 1^x)` for some `0 ≤ x ≤ n - 1`; false for `()`.
    pub fn is_hook_partition(&self) -> bool {
        !self.is_empty() && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// The half-size partition obtained by pairing odd parts and halving
    /// even parts.
    ///
    /// Odd parts `2k_i + 1` (there are `2ζ` of them, listed in decreasing
    /// order) contribute `k_i + 1` for the first `ζ` and `k_i` for the rest;
    /// even parts `2r_j` contribute `r_j`. Zero parts are dropped and the
    /// result is sorted.
    pub fn delta2(&self) -> Result<Partition> {
        let n = self.size();
        if !n.is_multiple_of(2) {
            return Err(Error::OddSize(n));
        }
        let odd: Vec<usize> = self
            .parts
            .iter()
            .filter(|&&p| p % 2 == 1)
            .map(|p| p / 2)
            .collect();
        let half = odd.len() / 2;
        let mut parts: Vec<usize> = odd
            .iter()
            .enumerate()
            .map(|(i, &k)| if i < half { k + 1 } else { k })
            .collect();
        parts.extend(self.parts.iter().filter(|&&p| p % 2 == 0).map(|p| p / 2));
        Ok(Partition::from_unsorted(parts))
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(rem: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                current.push(p);
                rec(rem - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// Partitions of `n` whose parts all lie in `allowed`.
    pub fn all_with_parts(n: usize, allowed: &[usize]) -> Vec<Partition> {
        Partition::all(n)
            .into_iter()
            .filter(|l| l.parts.iter().all(|p| allowed.contains(p)))
            .collect()
    }

    /// Parity of a permutation with this cycle type: `true` when even.
    pub fn is_even_cycle_type(&self) -> bool {
        (self.size() - self.len()).is_multiple_of(2)
    }

    /// Order of the centralizer in `S_n` of an element with this cycle type.
    pub fn centralizer_order(&self) -> u128 {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &m)| (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>())
            .product()
    }

    /// Concatenation followed by reordering.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad partition text {s:?}")));
                }
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Builds a partition from a literal list, panicking on invalid input.
///
/// Intended for tests and examples.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// A finite sequence of positive integers in any order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition obtained by reordering the parts.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

/// The skew diagram `[outer ∖ inner]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_node(&self, row: usize, col: usize) -> bool {
        self.outer.contains_node(row, col) && !self.inner.contains_node(row, col)
    }

    /// Nodes in reading order: rows top to bottom, each row right to left.
    pub fn reading_order(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.outer.len() {
            for c in (self.inner.part(r - 1) + 1..=self.outer.part(r - 1)).rev() {
                out.push((r, c));
            }
        }
        out
    }
}

/// A node of a Young diagram together with its hook measurements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HookData {
    pub row: usize,
    pub col: usize,
    pub length: usize,
    pub arm: usize,
    pub leg: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreQuotient {
    pub core: Partition,
    /// One partition per abacus runner, runner `0` first.
    pub quotient: Vec<Partition>,
    pub weight: usize,
}

/// Base-`p` digits of an integer, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicExpansion {
    pub prime: usize,
    /// `(exponent, coefficient)` with `1 ≤ coefficient ≤ p - 1` and strictly
    /// decreasing exponents.
    pub digits: Vec<(u32, usize)>,
}

impl PadicExpansion {
    pub fn value(&self) -> usize {
        self.digits
            .iter()
            .map(|&(e, a)| a * self.prime.pow(e))
            .sum()
    }
}

pub fn p_adic(n: usize, p: usize) -> PadicExpansion {
    assert!(p >= 2, "base must be at least 2");
    let mut digits = Vec::new();
    let (mut rest, mut e) = (n, 0u32);
    while rest > 0 {
        if rest % p != 0 {
            digits.push((e, rest % p));
        }
        rest /= p;
        e += 1;
    }
    digits.reverse();
    PadicExpansion { prime: p, digits }
}

/// `ν_p(n)`; zero for `n = 0`.
pub fn valuation(mut n: u128, p: u128) -> u32 {
    if n == 0 {
        return 0;
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// `ν_p(n!)` by Legendre's formula.
pub fn factorial_valuation(n: usize, p: usize) -> u32 {
    let (mut v, mut q) = (0, p);
    while q <= n {
        v += (n / q) as u32;
        q *= p;
    }
    v
}

/// The partition `(q-x+1, q-y, 2^{x-1}, 1^{y-x+1})` of `2q`, whose only
/// hooks of length `q` sit at `(1,2)` and `(2,1)`.
///
/// Requires `1 ≤ x ≤ q-1` and `x-1 ≤ y ≤ q-2`.
pub fn two_hook_shape(q: usize, x: usize, y: usize) -> Result<Partition> {
    if !(q >= 2 && x >= 1 && x < q && y + 1 >= x && y + 2 <= q) {
        return Err(Error::OutOfRange(format!(
            "two-hook shape needs 1 ≤ x ≤ q-1, x-1 ≤ y ≤ q-2 (q={q}, x={x}, y={y})"
        )));
    }
    let mut parts = vec![q - x + 1, q - y];
    parts.extend(std::iter::repeat_n(2, x - 1));
    parts.extend(std::iter::repeat_n(1, y + 1 - x));
    Partition::new(parts)
}

/// Every valid `(x, y)` for [`two_hook_shape`] at the given `q`.
pub fn two_hook_grid(q: usize) -> Vec<(usize, usize)> {
    (1..q)
        .flat_map(|x| (x - 1..=q.saturating_sub(2)).map(move |y| (x, y)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// The pair of partitions of `q` whose squares are exhibited inside the
/// restriction of a two-hook shape to `S_q × S_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuNu {
    pub case: Parity,
    /// `s = y - (x - 1)`, the length of the first-column tail.
    pub s: usize,
    pub mu: Partition,
    pub nu: Partition,
}

/// For `s` even: `μ = (q-y+s/2, 1^{y-s/2})`, `ν = (q-y+s/2-1, 1^{y-s/2+1})`.
/// For `s` odd: `μ = (q-y+(s-1)/2, 1^{y-(s-1)/2})`, `ν = Δ²(λ)`.
pub fn mu_nu_constructions(q: usize, x: usize, y: usize) -> Result<MuNu> {
    let lambda = two_hook_shape(q, x, y)?;
    let s = y + 1 - x;
    let hook = |arm_top: usize, legs: usize| {
        let mut parts = vec![arm_top];
        parts.extend(std::iter::repeat_n(1, legs));
        Partition::new(parts).expect("hook shape")
    };
    if s.is_multiple_of(2) {
        let mu = hook(q - y + s / 2, y - s / 2);
        let nu = hook(q - y + s / 2 - 1, y - s / 2 + 1);
        Ok(MuNu {
            case: Parity::Even,
            s,
            mu,
            nu,
        })
    } else {
        let mu = hook(q - y + (s - 1) / 2, y - (s - 1) / 2);
        Ok(MuNu {
            case: Parity::Odd,
            s,
            mu,
            nu: lambda.delta2()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn lengths(l: &Partition) -> Vec<((usize, usize), usize)> {
        l.hooks()
            .iter()
            .map(|h| ((h.row, h.col), h.length))
            .collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(partition![2, 1].conjugate(), partition![2, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition![4, 3, 1].conjugate(), partition![3, 2, 2, 1]);
    }

    #[test]
    fn hook_examples() {
        assert_eq!(
            lengths(&partition![2, 1]),
            vec![((1, 1), 3), ((1, 2), 1), ((2, 1), 1)]
        );
        assert_eq!(
            lengths(&partition![2, 2]),
            vec![((1, 1), 3), ((1, 2), 2), ((2, 1), 2), ((2, 2), 1)]
        );
        let l = partition![4, 3, 1];
        assert_eq!(l.hook_length(1, 2), Some(4));
        assert_eq!(l.hook_length(2, 1), Some(4));
        for h in l.hooks() {
            assert_eq!(h.length, h.arm + h.leg + 1);
        }
    }

    #[test]
    fn divisible_hooks() {
        assert!(partition![2, 1].hooks_divisible(2).is_empty());
        let nodes: Vec<_> = partition![2, 2]
            .hooks_divisible(2)
            .iter()
            .map(|h| (h.row, h.col))
            .collect();
        assert_eq!(nodes, vec![(1, 2), (2, 1)]);
        assert!(partition![2, 2].hooks_divisible(4).is_empty());
    }

    #[test]
    fn rim_hook_removal() {
        assert_eq!(
            partition![2, 2].remove_rim_hook(1, 2).unwrap(),
            (partition![1, 1], 1)
        );
        assert_eq!(
            partition![2, 2].remove_rim_hook(2, 1).unwrap(),
            (partition![2], 0)
        );
        assert_eq!(
            partition![3, 1].remove_rim_hook(1, 1).unwrap(),
            (Partition::empty(), 1)
        );
        assert_eq!(
            partition![2, 1].remove_rim_hook(1, 1).unwrap(),
            (Partition::empty(), 1)
        );
        assert_eq!(
            partition![2, 1].remove_rim_hook(2, 2),
            Err(Error::NodeOutsideDiagram { row: 2, col: 2 })
        );
    }

    #[test]
    fn rim_hook_removal_matches_skew_diagram() {
        // The removed cells must form a connected strip with no 2x2 square
        // and exactly `hook length` cells.
        for n in 1..=9 {
            for l in Partition::all(n) {
                for h in l.hooks() {
                    let (rest, leg) = l.remove_rim_hook(h.row, h.col).unwrap();
                    assert_eq!(leg, h.leg);
                    assert!(l.contains(&rest));
                    let skew = SkewShape::new(l.clone(), rest).unwrap();
                    assert_eq!(skew.size(), h.length);
                    let cells: BTreeSet<_> = skew.reading_order().into_iter().collect();
                    assert!(!cells.iter().any(|&(r, c)| cells.contains(&(r + 1, c + 1))));
                    let rows: BTreeSet<_> = cells.iter().map(|c| c.0).collect();
                    assert_eq!(rows.len(), leg + 1);
                }
            }
        }
    }

    #[test]
    fn cores() {
        let cq = partition![2, 2].core_quotient(2);
        assert_eq!((cq.core, cq.weight), (Partition::empty(), 2));
        let cq = partition![2, 1].core_quotient(2);
        assert_eq!((cq.core, cq.weight), (partition![2, 1], 0));
        let cq = partition![3, 1].core_quotient(2);
        assert_eq!(cq.quotient, vec![partition![2], Partition::empty()]);
        for n in 0..=10 {
            for l in Partition::all(n) {
                for e in 2..=5 {
                    let cq = l.core_quotient(e);
                    assert_eq!(cq.core.size() + e * cq.weight, n);
                    assert!(cq.core.hooks_divisible(e).is_empty());
                }
            }
        }
    }

    #[test]
    fn padic() {
        assert_eq!(p_adic(12, 2).digits, vec![(3, 1), (2, 1)]);
        assert!(p_adic(0, 5).digits.is_empty());
        assert_eq!(p_adic(14, 2).digits, vec![(3, 1), (2, 1), (1, 1)]);
        assert_eq!(p_adic(17, 3).digits, vec![(2, 1), (1, 2), (0, 2)]);
        assert_eq!(p_adic(17, 3).value(), 17);
    }

    #[test]
    fn hook_partitions() {
        assert!(partition![3, 1, 1].is_hook_partition());
        assert!(!partition![2, 2].is_hook_partition());
        assert!(!Partition::empty().is_hook_partition());
        assert!(partition![1].is_hook_partition());
    }

    #[test]
    fn delta2_examples() {
        assert_eq!(partition![4, 4].delta2().unwrap(), partition![2, 2]);
        assert_eq!(partition![1, 1].delta2().unwrap(), partition![1]);
        assert_eq!(partition![4, 3, 1].delta2().unwrap(), partition![2, 2]);
        assert_eq!(partition![3].delta2(), Err(Error::OddSize(3)));
    }

    #[test]
    fn two_hook_examples() {
        assert_eq!(two_hook_shape(4, 1, 1).unwrap(), partition![4, 3, 1]);
        assert_eq!(two_hook_shape(4, 1, 2).unwrap(), partition![4, 2, 1, 1]);
        assert_eq!(two_hook_shape(2, 1, 0).unwrap(), partition![2, 2]);
        assert!(two_hook_shape(4, 0, 1).is_err());
        assert!(two_hook_shape(4, 1, 3).is_err());
        assert!(two_hook_shape(4, 3, 1).is_err());
    }

    #[test]
    fn two_hook_shapes_have_two_q_hooks() {
        for q in [2, 4, 8] {
            for (x, y) in two_hook_grid(q) {
                let l = two_hook_shape(q, x, y).unwrap();
                let nodes: Vec<_> = l
                    .hooks_divisible(q)
                    .iter()
                    .map(|h| (h.row, h.col, h.length))
                    .collect();
                assert_eq!(nodes, vec![(1, 2, q), (2, 1, q)], "{l}");
            }
        }
    }

    #[test]
    fn two_hook_conjugation_is_a_grid_bijection() {
        for q in [2, 4, 8, 16] {
            let shapes: BTreeSet<Partition> = two_hook_grid(q)
                .into_iter()
                .map(|(x, y)| two_hook_shape(q, x, y).unwrap())
                .collect();
            assert_eq!(shapes.len(), two_hook_grid(q).len());
            let conj: BTreeSet<Partition> = shapes.iter().map(Partition::conjugate).collect();
            assert_eq!(shapes, conj);
        }
    }

    #[test]
    fn mu_nu_examples() {
        let m = mu_nu_constructions(4, 1, 2).unwrap();
        assert_eq!(
            (m.case, m.mu, m.nu),
            (Parity::Even, partition![3, 1], partition![2, 1, 1])
        );
        let m = mu_nu_constructions(4, 1, 1).unwrap();
        assert_eq!(
            (m.case, m.mu, m.nu),
            (Parity::Odd, partition![3, 1], partition![2, 2])
        );
        let m = mu_nu_constructions(2, 1, 0).unwrap();
        assert_eq!(
            (m.case, m.s, m.mu, m.nu),
            (Parity::Even, 0, partition![2], partition![1, 1])
        );
    }

    #[test]
    fn mu_differs_from_nu_and_its_conjugate_off_the_diagonal() {
        for q in [2, 4, 8, 16] {
            for (x, y) in two_hook_grid(q) {
                let l = two_hook_shape(q, x, y).unwrap();
                let m = mu_nu_constructions(q, x, y).unwrap();
                assert_eq!((m.mu.size(), m.nu.size()), (q, q));
                if m.case == Parity::Even && !l.is_self_conjugate() {
                    assert!(m.mu != m.nu && m.mu != m.nu.conjugate(), "{l}");
                }
            }
        }
    }

    #[test]
    fn text_format() {
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), partition![4, 3, 1]);
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(partition![4, 3, 1].to_string(), "4,3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        for bad in ["", "4, 3", "1,2", "3,0", "a", "3,,1"] {
            assert!(bad.parse::<Partition>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(
            Partition::all(3),
            vec![partition![3], partition![2, 1], partition![1, 1, 1]]
        );
    }

    #[test]
    fn composition_reorders() {
        let c = Composition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(c.to_partition(), partition![3, 2, 1]);
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}
