//! Irreducible characters of `A_n`.
//!
//! For `λ ≠ λ'` the restriction of `χ^λ` to `A_n` is irreducible (and equal
//! to that of `χ^{λ'}`). For `λ = λ'` it splits as `φ^λ_+ + φ^λ_-`; the two
//! constituents agree off the pair of `A_n`-classes into which the `S_n`-class
//! of cycle type `(h_{1,1}, …, h_{d,d})` splits, and there take the values
//! `(ε ± √(ε ∏ h_{i,i}))/2` with `ε = (-1)^{(n-d)/2}`.
//!
//! `φ_+` is the constituent taking `(ε + √(ε∏h))/2` on the class containing
//! [`canonical_representative`].

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{mn_value, AlgebraicValue, CycleType};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SignChoice {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl SignChoice {
    pub fn symbol(self) -> char {
        match self {
            SignChoice::Plus => '+',
            SignChoice::Minus => '-',
        }
    }
}

/// Which of the two `A_n`-classes of a split `S_n`-class an element lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SplitLabel {
    /// The class of [`canonical_representative`].
    Canonical,
    Other,
}

/// A conjugacy class of `A_n`: an even cycle type, plus the half when the
/// `S_n`-class splits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnClass {
    pub cycle_type: CycleType,
    pub split: Option<SplitLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitClassData {
    /// `h_{1,1} > h_{2,2} > … > h_{d,d}`, all odd.
    pub diagonal_hooks: Vec<usize>,
    /// `ε = (-1)^{(n-d)/2}`.
    pub epsilon: i64,
    /// `ε · ∏ h_{i,i}`.
    pub radicand: i64,
}

impl SplitClassData {
    pub fn cycle_type(&self) -> CycleType {
        Partition::new(self.diagonal_hooks.clone()).expect("diagonal hooks decrease")
    }
}

pub fn split_class(lambda: &Partition) -> Result<SplitClassData> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.to_string()));
    }
    let diagonal_hooks: Vec<usize> = (1..=lambda.len())
        .map_while(|i| lambda.hook_length(i, i))
        .collect();
    let d = diagonal_hooks.len();
    let epsilon = if ((lambda.size() - d) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let product: i64 = diagonal_hooks.iter().map(|&h| h as i64).product();
    Ok(SplitClassData {
        diagonal_hooks,
        epsilon,
        radicand: epsilon * product,
    })
}

/// For `n ≥ 2`, cycle types with distinct odd parts (fixed points included)
/// are exactly those whose `S_n`-class splits in `A_n`.
pub fn is_split_type(t: &CycleType) -> bool {
    t.size() >= 2
        && t.parts().iter().all(|&x| x % 2 == 1)
        && t.parts().windows(2).all(|w| w[0] > w[1])
}

/// `(1 2 … t_1)(t_1+1 … t_1+t_2)…` with parts taken in decreasing order.
pub fn canonical_representative(t: &CycleType) -> Perm {
    let mut cycles = Vec::with_capacity(t.len());
    let mut next = 1;
    for &len in t.parts() {
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    Perm::from_cycles(t.size(), &cycles).expect("disjoint consecutive cycles")
}

/// The `A_n`-class half of `g`, when the cycle type of `g` splits.
///
/// Two elements of a split type are `A_n`-conjugate iff a conjugating
/// permutation between them is even. Since all cycle lengths are distinct,
/// matching each cycle of the canonical representative with the cycle of
/// `g` of the same length gives such a conjugator, unique up to an even
/// factor.
pub fn split_label(g: &Perm) -> Option<SplitLabel> {
    let t = g.cycle_type();
    if !is_split_type(&t) {
        return None;
    }
    let rep = canonical_representative(&t);
    let mut ours = g.cycles();
    ours.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut theirs = rep.cycles();
    theirs.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut images = vec![0usize; g.degree()];
    for (a, b) in theirs.iter().zip(&ours) {
        for (x, y) in a.iter().zip(b) {
            images[*x] = *y;
        }
    }
    let conjugator = Perm::from_images(images).expect("bijection between cycle supports");
    Some(if conjugator.is_even() {
        SplitLabel::Canonical
    } else {
        SplitLabel::Other
    })
}

/// Value of the `A_n`-irreducible labelled by `λ` (and `sign` when `λ = λ'`)
/// on an `A_n`-class.
///
/// For `λ ≠ λ'` the sign is ignored. On a split class matching `λ`'s diagonal
/// hooks, `class.split` must say which half is meant.
pub fn an_value(lambda: &Partition, sign: SignChoice, class: &AnClass) -> Result<AlgebraicValue> {
    let t = &class.cycle_type;
    if !t.is_even_cycle_type() {
        return Err(Error::NotAlternatingClass(t.to_string()));
    }
    let chi = mn_value(lambda, t)?;
    // A_1 = S_1, so (1) does not split either
    if !lambda.is_self_conjugate() || lambda.size() < 2 {
        return Ok(AlgebraicValue::integer(chi as i64));
    }
    let data = split_class(lambda)?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    if *t != data.cycle_type() {
        return Ok(AlgebraicValue::integer(chi as i64).scale(&half));
    }
    let label = class.split.ok_or_else(|| {
        Error::NotAlternatingClass(format!("{t} splits in A_n; a class half is required"))
    })?;
    let plus = matches!(
        (sign, label),
        (SignChoice::Plus, SplitLabel::Canonical) | (SignChoice::Minus, SplitLabel::Other)
    );
    let root = AlgebraicValue::sqrt(data.radicand);
    let root = if plus { root } else { -&root };
    Ok((&AlgebraicValue::integer(data.epsilon) + &root).scale(&half))
}

/// `φ^λ_±(g)` for a concrete even permutation.
pub fn an_value_at(lambda: &Partition, sign: SignChoice, g: &Perm) -> Result<AlgebraicValue> {
    an_value(
        lambda,
        sign,
        &AnClass {
            cycle_type: g.cycle_type(),
            split: split_label(g),
        },
    )
}
