//! Linear constituents of restrictions to `P_n` and `Q_n`, and the
//! verification campaigns built on them.
//!
//! Multiplicities are exact inner products
//! `⟨χ_G, θ⟩ = |G|⁻¹ Σ_g χ(g) θ(g)⁻¹`. Elements are bucketed by cycle type, so
//! each character value is computed once per type, and each linear character
//! contributes a vector of root-of-unity counts per bucket.

mod campaigns;
mod outcome;

pub use campaigns::{
    an_irreducibles, default_suite, f_bijection, frobenius_check, CampaignParams, FrobeniusCase,
    HookBijection, Statement,
};
pub use outcome::{VerificationOutcome, VerifyOptions};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::characters::algebraic::reduce_group_ring;
use crate::characters::{
    degree, mn_value, split_class, split_label, AlgebraicValue, CycleType, Cyclotomic, SignChoice,
    SplitLabel,
};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::sylow::{Ambient, EnumeratedGroup, LinearCharLabel, LinearCharacters};

#[derive(Clone, Debug, Serialize)]
pub struct Multiplicity {
    pub label: LinearCharLabel,
    pub multiplicity: u64,
}

/// The linear constituents of one restricted character.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityReport {
    pub group: Ambient,
    pub n: usize,
    pub p: usize,
    pub lambda: Partition,
    /// Which half of a split `χ^λ` was restricted, for `λ = λ'` on `Q_n`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<SignChoice>,
    pub degree: u64,
    /// One entry per linear character of the group, in label order.
    pub multiplicities: Vec<Multiplicity>,
    pub distinct_count: usize,
    /// Degree carried by constituents of degree greater than one.
    pub residual_degree: i64,
}

impl MultiplicityReport {
    /// `λ`, with `+`/`-` appended for a split character.
    pub fn character(&self) -> String {
        match self.sign {
            Some(s) => format!("{}{}", self.lambda, s.symbol()),
            None => self.lambda.to_string(),
        }
    }

    pub fn constituents(&self) -> impl Iterator<Item = &Multiplicity> {
        self.multiplicities.iter().filter(|m| m.multiplicity > 0)
    }

    pub fn multiplicity_of(&self, label: &LinearCharLabel) -> Option<u64> {
        self.multiplicities
            .iter()
            .find(|m| &m.label == label)
            .map(|m| m.multiplicity)
    }

    pub fn linear_total(&self) -> u64 {
        self.multiplicities.iter().map(|m| m.multiplicity).sum()
    }

    /// Degree accounting and the distinct count agree with the table.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |why: String| {
            Err(Error::Inconsistent(format!(
                "report for {}: {why}",
                self.character()
            )))
        };
        if self.residual_degree < 0 {
            return fail(format!(
                "linear multiplicities exceed the degree {}",
                self.degree
            ));
        }
        if self.linear_total() as i128 + self.residual_degree as i128 != self.degree as i128 {
            return fail("multiplicities and residual do not sum to the degree".into());
        }
        if self.distinct_count != self.constituents().count() {
            return fail("distinct count disagrees with the table".into());
        }
        Ok(())
    }
}

struct Bucket {
    cycle_type: CycleType,
    /// `counts[c][k]` = elements with `θ_c(g) = ζ^k`.
    counts: Vec<Vec<i64>>,
    /// The same counts weighted by `±1` for the two `A_n`-classes, when the
    /// cycle type splits in `A_n`.
    signed: Option<Vec<Vec<i64>>>,
}

/// A group with its linear characters, prepared for repeated restrictions.
pub struct RestrictionContext {
    pub group: EnumeratedGroup,
    pub characters: LinearCharacters,
    buckets: Vec<Bucket>,
}

impl RestrictionContext {
    pub fn new(n: usize, p: usize, ambient: Ambient, budget: usize) -> Result<Self> {
        RestrictionContext::from_group(EnumeratedGroup::new(n, p, ambient, budget)?)
    }

    pub fn from_group(group: EnumeratedGroup) -> Result<Self> {
        let characters = LinearCharacters::of(&group)?;
        let m = characters.order as usize;
        let buckets = group
            .cycle_type_buckets()
            .into_iter()
            .map(|(cycle_type, members)| {
                let tally = |weight: &dyn Fn(usize) -> i64| -> Vec<Vec<i64>> {
                    (0..characters.len())
                        .map(|c| {
                            let mut v = vec![0i64; m];
                            for &i in &members {
                                v[characters.exponent(c, i) as usize] += weight(i);
                            }
                            v
                        })
                        .collect()
                };
                let counts = tally(&|_| 1);
                let splits = crate::characters::alternating::is_split_type(&cycle_type);
                let signed = splits.then(|| {
                    tally(&|i| match split_label(&group.elements()[i]) {
                        Some(SplitLabel::Canonical) => 1,
                        _ => -1,
                    })
                });
                Bucket {
                    cycle_type,
                    counts,
                    signed,
                }
            })
            .collect();
        Ok(RestrictionContext {
            group,
            characters,
            buckets,
        })
    }

    pub fn ambient(&self) -> Ambient {
        self.group.ambient
    }

    /// Cycle types present in the group, in increasing order.
    pub fn cycle_types(&self) -> impl Iterator<Item = &CycleType> {
        self.buckets.iter().map(|b| &b.cycle_type)
    }

    /// Decomposes `χ^λ` (or `φ^λ_±` when `sign` is given and `λ = λ'`)
    /// restricted to the group into linear constituents.
    ///
    /// Fails with [`Error::Inconsistent`] if any inner product is not a
    /// nonnegative rational integer.
    pub fn restrict(
        &self,
        lambda: &Partition,
        sign: Option<SignChoice>,
    ) -> Result<MultiplicityReport> {
        let n = self.group.n();
        if lambda.size() != n {
            return Err(Error::SizeMismatch {
                left: lambda.size(),
                right: n,
            });
        }
        let split = match sign {
            Some(s) if lambda.is_self_conjugate() && n >= 2 => {
                if !self.group.is_alternating() {
                    return Err(Error::OutOfRange(format!(
                        "φ^{lambda}_± is a character of A_{n}, but {}_{n} contains odd permutations",
                        self.ambient()
                    )));
                }
                Some((s, split_class(lambda)?))
            }
            _ => None,
        };
        let full = degree(lambda)
            .to_u64()
            .ok_or_else(|| Error::OutOfRange(format!("χ^{lambda}(1) exceeds u64")))?;
        let deg = if split.is_some() { full / 2 } else { full };
        let chi: Vec<i128> = self
            .buckets
            .iter()
            .map(|b| mn_value(lambda, &b.cycle_type))
            .collect::<Result<_>>()?;
        let m = self.characters.order as usize;
        let order = self.group.order() as i128;

        let mut multiplicities = Vec::with_capacity(self.characters.len());
        for (c, label) in self.characters.labels().iter().enumerate() {
            let mut v = vec![0i128; m];
            for (b, &x) in self.buckets.iter().zip(&chi) {
                if x != 0 {
                    for (k, &count) in b.counts[c].iter().enumerate() {
                        v[(m - k) % m] += x * count as i128;
                    }
                }
            }
            let v = reduce_group_ring(&v, m as u32);
            let value = match &split {
                None => {
                    let q = BigRational::new(BigInt::from(1), BigInt::from(order));
                    AlgebraicValue::from_cyclotomic(
                        Cyclotomic::from_integer_coeffs(m as u32, &v).scale(&q),
                    )
                }
                Some((s, data)) => {
                    let diag = data.cycle_type();
                    let mut t = vec![0i128; m];
                    if let Some(signed) = self
                        .buckets
                        .iter()
                        .find(|b| b.cycle_type == diag)
                        .and_then(|b| b.signed.as_ref())
                    {
                        for (k, &count) in signed[c].iter().enumerate() {
                            t[(m - k) % m] += count as i128;
                        }
                    }
                    let t = reduce_group_ring(&t, m as u32);
                    let half = BigRational::new(BigInt::from(1), BigInt::from(2 * order));
                    let surd_scale = if *s == SignChoice::Plus {
                        half.clone()
                    } else {
                        -half.clone()
                    };
                    AlgebraicValue::new(
                        Cyclotomic::from_integer_coeffs(m as u32, &v).scale(&half),
                        Cyclotomic::from_integer_coeffs(m as u32, &t).scale(&surd_scale),
                        data.radicand,
                    )
                }
            };
            let multiplicity = value.as_integer().and_then(|k| k.to_u64()).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "⟨{lambda}, {label}⟩ on {}_{n} = {value} is not a natural number",
                    self.ambient()
                ))
            })?;
            multiplicities.push(Multiplicity {
                label: label.clone(),
                multiplicity,
            });
        }
        let linear: u64 = multiplicities.iter().map(|m| m.multiplicity).sum();
        let report = MultiplicityReport {
            group: self.ambient(),
            n,
            p: self.group.p(),
            lambda: lambda.clone(),
            sign: split.map(|(s, _)| s),
            degree: deg,
            distinct_count: multiplicities.iter().filter(|m| m.multiplicity > 0).count(),
            multiplicities,
            residual_degree: deg as i64 - linear as i64,
        };
        Ok(report)
    }
}
