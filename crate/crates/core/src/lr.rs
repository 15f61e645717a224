//! Littlewood–Richardson coefficients.
//!
//! `C^λ_{μν}` counts fillings of the skew diagram `[λ ∖ μ]` with content `ν`
//! that are weakly increasing along rows, strictly increasing down columns,
//! and whose reading word (rows top to bottom, each right to left) is a
//! reverse lattice word.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::characters::{degree, mn_value};
use crate::error::{Error, Result};
use crate::partitions::{mu_nu_constructions, two_hook_shape, Parity, Partition, SkewShape};

pub const DEFAULT_WITNESS_CAP: usize = 16;

/// A filling of a skew diagram by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LRConfiguration {
    pub skew: SkewShape,
    /// Entries keyed by 1-based `(row, col)`.
    pub filling: BTreeMap<(usize, usize), usize>,
}

impl LRConfiguration {
    /// Checks that this is an LR configuration of type `content`.
    pub fn validate(&self, content: &Partition) -> Result<()> {
        let bad = |why: String| {
            Err(Error::Inconsistent(format!(
                "not an LR configuration of type {content}: {why}"
            )))
        };
        let nodes = self.skew.reading_order();
        if nodes.len() != self.filling.len() || nodes.iter().any(|n| !self.filling.contains_key(n))
        {
            return bad("filling does not cover the skew diagram exactly".into());
        }
        let mut counts = vec![0usize; content.len() + 1];
        for &(r, c) in &nodes {
            let v = self.filling[&(r, c)];
            if v == 0 || v > content.len() {
                return bad(format!("entry {v} at ({r}, {c})"));
            }
            if let Some(&right) = self.filling.get(&(r, c + 1)) {
                if v > right {
                    return bad(format!("row {r} decreases at column {c}"));
                }
            }
            if let Some(&above) = self.filling.get(&(r.wrapping_sub(1), c)) {
                if v <= above {
                    return bad(format!("column {c} does not increase at row {r}"));
                }
            }
            counts[v] += 1;
            if v > 1 && counts[v] > counts[v - 1] {
                return bad(format!("reading word is not a lattice word at ({r}, {c})"));
            }
        }
        if counts[1..].iter().zip(content.parts()).any(|(a, b)| a != b) {
            return bad(format!("content {:?}", &counts[1..]));
        }
        Ok(())
    }

    /// Rows of `.` for inner nodes and digits for entries.
    pub fn render(&self) -> String {
        let outer = self.skew.outer();
        let inner = self.skew.inner();
        let mut out = String::new();
        for r in 1..=outer.len() {
            for c in 1..=outer.part(r - 1) {
                if c <= inner.part(r - 1) {
                    out.push('.');
                } else {
                    let _ = write!(out, "{}", self.filling[&(r, c)]);
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn rows(&self) -> Vec<String> {
        self.render().lines().map(str::to_owned).collect()
    }
}

impl Serialize for LRConfiguration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LRResult {
    pub coefficient: u64,
    /// At most the requested number of configurations, in enumeration order.
    pub witnesses: Vec<LRConfiguration>,
}

pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<LRResult> {
    lr_coefficient_with_cap(lambda, mu, nu, DEFAULT_WITNESS_CAP)
}

pub fn lr_coefficient_with_cap(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cap: usize,
) -> Result<LRResult> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size() + nu.size(),
        });
    }
    if !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(LRResult {
            coefficient: 0,
            witnesses: Vec::new(),
        });
    }
    let skew = SkewShape::new(lambda.clone(), mu.clone())?;
    let nodes = skew.reading_order();
    let mut search = Search {
        nodes: &nodes,
        content: nu.parts(),
        entries: vec![0; nodes.len()],
        index: nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect(),
        counts: vec![0; nu.len() + 1],
        found: 0,
        cap,
        witnesses: Vec::new(),
    };
    search.run(0);
    let witnesses = search
        .witnesses
        .into_iter()
        .map(|entries| LRConfiguration {
            skew: skew.clone(),
            filling: nodes.iter().copied().zip(entries).collect(),
        })
        .collect();
    Ok(LRResult {
        coefficient: search.found,
        witnesses,
    })
}

struct Search<'a> {
    nodes: &'a [(usize, usize)],
    content: &'a [usize],
    entries: Vec<usize>,
    index: BTreeMap<(usize, usize), usize>,
    /// `counts[v]` = occurrences of `v` so far.
    counts: Vec<usize>,
    found: u64,
    cap: usize,
    witnesses: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.nodes.len() {
            self.found += 1;
            if self.witnesses.len() < self.cap {
                self.witnesses.push(self.entries.clone());
            }
            return;
        }
        let (r, c) = self.nodes[pos];
        let upper = self
            .index
            .get(&(r, c + 1))
            .map_or(self.content.len(), |&i| self.entries[i]);
        let lower = if r > 1 {
            self.index.get(&(r - 1, c)).map_or(0, |&i| self.entries[i])
        } else {
            0
        };
        for v in lower + 1..=upper {
            if self.counts[v] == self.content[v - 1]
                || (v > 1 && self.counts[v] == self.counts[v - 1])
            {
                continue;
            }
            self.counts[v] += 1;
            self.entries[pos] = v;
            self.run(pos + 1);
            self.counts[v] -= 1;
        }
    }
}

/// Every `(μ, ν)` with `|μ| = |ν| = q` and `C^λ_{μν} > 0`: the constituents
/// of the restriction of `χ^λ` to `S_q × S_q`.
pub fn restriction_pairs(
    lambda: &Partition,
    q: usize,
) -> Result<BTreeMap<(Partition, Partition), u64>> {
    if lambda.size() % 2 == 1 {
        return Err(Error::OddSize(lambda.size()));
    }
    if lambda.size() != 2 * q {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: 2 * q,
        });
    }
    let halves: Vec<Partition> = Partition::all(q)
        .into_iter()
        .filter(|p| lambda.contains(p))
        .collect();
    let mut out = BTreeMap::new();
    for mu in &halves {
        for nu in &halves {
            let c = lr_coefficient_with_cap(lambda, mu, nu, 0)?.coefficient;
            if c > 0 {
                out.insert((mu.clone(), nu.clone()), c);
            }
        }
    }
    Ok(out)
}

/// `⟨(χ^μ × χ^ν)↑^{S_{m+n}}, χ^λ⟩ = Σ_{α,β} χ^μ(α) χ^ν(β) χ^λ(α ∪ β) / (z_α z_β)`,
/// evaluated with Murnaghan–Nakayama values.
pub fn lr_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size() + nu.size(),
        });
    }
    let mut total = BigRational::zero();
    for alpha in Partition::all(mu.size()) {
        let a = mn_value(mu, &alpha)?;
        if a == 0 {
            continue;
        }
        for beta in Partition::all(nu.size()) {
            let b = mn_value(nu, &beta)?;
            if b == 0 {
                continue;
            }
            let l = mn_value(lambda, &alpha.union(&beta))?;
            let z =
                BigUint::from(alpha.centralizer_order()) * BigUint::from(beta.centralizer_order());
            total += BigRational::new((a * b * l).into(), z.into());
        }
    }
    if !total.is_integer() || total.is_negative() {
        return Err(Error::Inconsistent(format!(
            "induced multiplicity {total} is not a natural number"
        )));
    }
    total
        .numer()
        .to_u64()
        .ok_or_else(|| Error::OutOfRange("coefficient exceeds u64".into()))
}

/// The explicit fillings exhibiting `χ^μ × χ^μ` and `χ^ν × χ^ν` inside the
/// restriction of the two-hook shape `λ(q, x, y)` to `S_q × S_q`.
#[derive(Clone, Debug, Serialize)]
pub struct TwoHookReport {
    pub q: usize,
    pub x: usize,
    pub y: usize,
    pub lambda: Partition,
    pub case: Parity,
    pub mu: Partition,
    pub nu: Partition,
    /// The constructed filling of `[λ ∖ μ]` of type `μ`.
    pub mu_filling: LRConfiguration,
    /// The constructed filling of `[λ ∖ ν]` of type `ν`, when `s` is even.
    /// For odd `s`, `ν = Δ²(λ)` and only the coefficient is checked.
    pub nu_filling: Option<LRConfiguration>,
    pub mu_coefficient: u64,
    pub nu_coefficient: u64,
    /// Whether the constructed fillings validate and appear among the
    /// enumerated configurations.
    pub pass: bool,
    pub problems: Vec<String>,
}

/// Builds the row/hook/column fillings for `λ = (q-x+1, q-y, 2^{x-1}, 1^s)`
/// and checks them against the enumerator.
pub fn verify_two_hook_configurations(q: usize, x: usize, y: usize) -> Result<TwoHookReport> {
    let lambda = two_hook_shape(q, x, y)?;
    let mn = mu_nu_constructions(q, x, y)?;
    let s = mn.s;
    let mut filling = BTreeMap::new();
    let mu_filling;
    let mut nu_filling = None;
    match mn.case {
        Parity::Even => {
            // first row tail, then the hook at (2,2), then the first-column tail
            for c in q - y + s / 2 + 1..=q - x + 1 {
                filling.insert((1, c), 1);
            }
            hook_body(&mut filling, q, x, y, false);
            filling.insert((x + s / 2 + 1, 1), 1);
            for j in 1..=s / 2 {
                filling.insert((x + s / 2 + 1 + j, 1), x + j);
            }
            mu_filling = LRConfiguration {
                skew: SkewShape::new(lambda.clone(), mn.mu.clone())?,
                filling,
            };

            let mut filling = BTreeMap::new();
            for c in q - y + s / 2..=q - x + 1 {
                filling.insert((1, c), 1);
            }
            hook_body(&mut filling, q, x, y, true);
            for j in 1..=s / 2 {
                filling.insert((x + s / 2 + 1 + j, 1), x + 1 + j);
            }
            nu_filling = Some(LRConfiguration {
                skew: SkewShape::new(lambda.clone(), mn.nu.clone())?,
                filling,
            });
        }
        Parity::Odd => {
            for c in q - y + s.div_ceil(2)..=q - x + 1 {
                filling.insert((1, c), 1);
            }
            hook_body(&mut filling, q, x, y, false);
            for j in 1..=s.div_ceil(2) {
                filling.insert((x + s.div_ceil(2) + j, 1), x + j);
            }
            mu_filling = LRConfiguration {
                skew: SkewShape::new(lambda.clone(), mn.mu.clone())?,
                filling,
            };
        }
    }

    let mut problems = Vec::new();
    let mu_enum = lr_coefficient_with_cap(&lambda, &mn.mu, &mn.mu, usize::MAX)?;
    check_filling(&mu_filling, &mn.mu, &mu_enum, &mut problems);
    let nu_enum = lr_coefficient_with_cap(&lambda, &mn.nu, &mn.nu, usize::MAX)?;
    match &nu_filling {
        Some(f) => check_filling(f, &mn.nu, &nu_enum, &mut problems),
        None if nu_enum.coefficient == 0 => {
            problems.push(format!("C^{lambda}_{{{0},{0}}} = 0", mn.nu))
        }
        None => {}
    }
    Ok(TwoHookReport {
        q,
        x,
        y,
        lambda,
        case: mn.case,
        mu: mn.mu,
        nu: mn.nu,
        mu_filling,
        nu_filling,
        mu_coefficient: mu_enum.coefficient,
        nu_coefficient: nu_enum.coefficient,
        pass: problems.is_empty(),
        problems,
    })
}

/// Row 2 from column 2 to `q-y` gets `1`s and the column-2 leg below it gets
/// `2, 3, …`. With `shifted`, node `(2, q-y)` gets `2` and the leg starts at `3`.
fn hook_body(
    filling: &mut BTreeMap<(usize, usize), usize>,
    q: usize,
    x: usize,
    y: usize,
    shifted: bool,
) {
    for c in 2..=q - y {
        filling.insert((2, c), 1);
    }
    if shifted {
        filling.insert((2, q - y), 2);
    }
    for r in 3..=x + 1 {
        filling.insert((r, 2), if shifted { r } else { r - 1 });
    }
}

fn check_filling(
    config: &LRConfiguration,
    content: &Partition,
    enumerated: &LRResult,
    problems: &mut Vec<String>,
) {
    if let Err(e) = config.validate(content) {
        problems.push(e.to_string());
    }
    if !enumerated.witnesses.contains(config) {
        problems.push(format!(
            "constructed filling of type {content} not found by the enumerator"
        ));
    }
}

/// `Σ C^λ_{μν} χ^μ(1) χ^ν(1)`, which must equal `χ^λ(1)`.
pub fn restriction_dimension(pairs: &BTreeMap<(Partition, Partition), u64>) -> BigUint {
    pairs
        .iter()
        .map(|((mu, nu), &c)| degree(mu) * degree(nu) * BigUint::from(c))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn row_coefficients() {
        for n in 1..7 {
            for k in 0..=n {
                let r = lr_coefficient(
                    &partition![n],
                    &Partition::from_unsorted(vec![k]),
                    &Partition::from_unsorted(vec![n - k]),
                )
                .unwrap();
                assert_eq!(r.coefficient, 1);
            }
        }
    }

    #[test]
    fn examples() {
        assert!(
            lr_coefficient(&partition![4, 3, 1], &partition![2, 2], &partition![2, 2])
                .unwrap()
                .coefficient
                >= 1
        );
        assert!(
            lr_coefficient(
                &partition![4, 2, 1, 1],
                &partition![3, 1],
                &partition![3, 1]
            )
            .unwrap()
            .coefficient
                >= 1
        );
        assert!(
            lr_coefficient(
                &partition![4, 2, 1, 1],
                &partition![2, 1, 1],
                &partition![2, 1, 1]
            )
            .unwrap()
            .coefficient
                >= 1
        );
        assert_eq!(
            lr_coefficient(&partition![2, 1], &partition![1], &partition![1, 1])
                .unwrap()
                .coefficient,
            1
        );
        assert_eq!(
            lr_coefficient(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1])
                .unwrap()
                .coefficient,
            2
        );
        assert_eq!(
            lr_coefficient(&partition![3], &partition![1, 1], &partition![1])
                .unwrap()
                .coefficient,
            0
        );
        assert!(matches!(
            lr_coefficient(&partition![3], &partition![1], &partition![1]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn witnesses_validate_and_render() {
        let r = lr_coefficient(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1]).unwrap();
        assert_eq!(r.witnesses.len(), 2);
        for w in &r.witnesses {
            w.validate(&partition![2, 1]).unwrap();
        }
        assert_eq!(r.witnesses[0].render().lines().next().unwrap().len(), 3);
        assert!(r.witnesses[0].render().starts_with(".."));
    }

    #[test]
    fn restriction_pair_examples() {
        let pairs = restriction_pairs(&partition![2, 1, 1], 2).unwrap();
        assert_eq!(pairs[&(partition![1, 1], partition![1, 1])], 1);
        assert_eq!(pairs[&(partition![2], partition![1, 1])], 1);
        assert_eq!(pairs[&(partition![1, 1], partition![2])], 1);
        let pairs = restriction_pairs(&partition![4, 3, 1], 4).unwrap();
        assert!(pairs.contains_key(&(partition![3, 1], partition![3, 1])));
        assert!(pairs.contains_key(&(partition![2, 2], partition![2, 2])));
        assert!(matches!(
            restriction_pairs(&partition![2, 1], 1),
            Err(Error::OddSize(3))
        ));
    }

    #[test]
    fn two_hook_recipes() {
        for (q, x, y) in [(4, 1, 2), (4, 1, 1), (2, 1, 0)] {
            let r = verify_two_hook_configurations(q, x, y).unwrap();
            assert!(r.pass, "{q},{x},{y}: {:?}", r.problems);
        }
    }
}
