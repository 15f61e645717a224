//! Exact character values of symmetric and alternating groups.
//!
//! Irreducible characters of `S_n` are labelled by partitions of `n`, and
//! conjugacy classes by cycle types (also partitions). Everything here is
//! integer or exact algebraic arithmetic.

pub mod algebraic;
pub mod alternating;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::{factorial_valuation, p_adic, valuation, Partition};

pub use algebraic::{AlgebraicValue, Cyclotomic};
pub use alternating::{
    an_value, an_value_at, split_class, split_label, AnClass, SignChoice, SplitClassData,
    SplitLabel,
};

/// A conjugacy class of `S_n`, labelled by the cycle lengths of its elements.
pub type CycleType = Partition;

/// `χ^λ(1)` by the hook-length formula.
pub fn degree(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let factorial: BigUint = (1..=n as u64).map(BigUint::from).product();
    let hooks: BigUint = lambda
        .hooks()
        .iter()
        .map(|h| BigUint::from(h.length as u64))
        .product();
    debug_assert!((&factorial % &hooks) == BigUint::ZERO);
    factorial / hooks
}

/// `ν_p(χ^λ(1)) = ν_p(n!) - Σ ν_p(h)` over all hook lengths `h`.
pub fn nu_p_degree(lambda: &Partition, p: usize) -> u32 {
    let hooks: u32 = lambda
        .hooks()
        .iter()
        .map(|h| valuation(h.length as u128, p as u128))
        .sum();
    factorial_valuation(lambda.size(), p) - hooks
}

type MemoKey = (Partition, Partition);

fn mn_memo() -> &'static RwLock<HashMap<MemoKey, i128>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, i128>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ^λ` at the class of cycle type `t`, by the Murnaghan–Nakayama rule.
///
/// The largest cycle is peeled off as a rim hook in every possible way,
/// each removal weighted by `(-1)^{leg}`. Results are memoized process-wide.
pub fn mn_value(lambda: &Partition, t: &CycleType) -> Result<i128> {
    if lambda.size() != t.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: t.size(),
        });
    }
    Ok(mn_rec(lambda, t.parts()))
}

fn mn_rec(lambda: &Partition, t: &[usize]) -> i128 {
    let Some((&k, rest)) = t.split_first() else {
        return 1;
    };
    if rest.is_empty() {
        // a single rim hook covering the whole diagram exists iff λ is a hook
        return if lambda.is_hook_partition() {
            sign(lambda.len() - 1)
        } else {
            0
        };
    }
    if t.iter().all(|&x| x == 1) {
        return degree(lambda).try_into().expect("degree fits in i128");
    }
    let key = (
        lambda.clone(),
        Partition::new(t.to_vec()).expect("cycle type"),
    );
    if let Some(&v) = mn_memo().read().unwrap().get(&key) {
        return v;
    }
    let mut total = 0i128;
    for h in lambda.hooks().into_iter().filter(|h| h.length == k) {
        let (smaller, leg) = lambda
            .remove_rim_hook(h.row, h.col)
            .expect("node in diagram");
        total += sign(leg) * mn_rec(&smaller, rest);
    }
    mn_memo().write().unwrap().insert(key, total);
    total
}

fn sign(exponent: usize) -> i128 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `±1` according to the parity of permutations of cycle type `t`.
pub fn class_sign(t: &CycleType) -> i128 {
    if t.is_even_cycle_type() {
        1
    } else {
        -1
    }
}

/// `w! / ∏ k_i!`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let fact = |k: usize| -> BigUint { (1..=k as u64).map(BigUint::from).product() };
    let w: usize = parts.iter().sum();
    parts.iter().fold(fact(w), |acc, &k| acc / fact(k))
}

/// `χ^λ(ργ)` where `ρ` is a product of `w` disjoint `e`-cycles and `γ`
/// (cycle type `gamma`) moves only the fixed points of `ρ`.
///
/// For `w > w_e(λ)` the value is `0`. For `w = w_e(λ)` its magnitude is
/// `binom(w; |λ_0|, …, |λ_{e-1}|) · |χ^{C_e(λ)}(γ)| · ∏ χ^{λ_i}(1)` over the
/// `e`-quotient `(λ_0, …, λ_{e-1})`. The sign is read from the
/// Murnaghan–Nakayama value on the same class, after checking that the
/// magnitudes agree.
pub fn ecycle_products_value(
    lambda: &Partition,
    e: usize,
    w: usize,
    gamma: &CycleType,
) -> Result<i128> {
    if e < 2 {
        return Err(Error::OutOfRange(format!(
            "cycle length e = {e} must be at least 2"
        )));
    }
    if lambda.size() != w * e + gamma.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: w * e + gamma.size(),
        });
    }
    let cq = lambda.core_quotient(e);
    if w < cq.weight {
        return Err(Error::HypothesisViolated(format!(
            "w = {w} is below the {e}-weight {} of {lambda}",
            cq.weight
        )));
    }
    if w > cq.weight {
        return Ok(0);
    }
    let sizes: Vec<usize> = cq.quotient.iter().map(Partition::size).collect();
    let core_value = mn_value(&cq.core, gamma)?;
    let quotient_degrees: BigUint = cq.quotient.iter().map(degree).product();
    let magnitude =
        multinomial(&sizes) * quotient_degrees * BigUint::from(core_value.unsigned_abs());
    let class = gamma.union(&Partition::new(vec![e; w]).expect("e-cycles"));
    let full = mn_value(lambda, &class)?;
    if BigUint::from(full.unsigned_abs()) != magnitude {
        return Err(Error::Inconsistent(format!(
            "|χ^{lambda}({class})| = {} but the e-quotient formula gives {magnitude}",
            full.abs()
        )));
    }
    Ok(full)
}

/// Whether `χ^λ(1)` is odd, decided by hook removal along the binary digits
/// of `n`: with `2^m` the top digit, `λ` must have exactly one hook of
/// length `2^m`, and removing its rim hook must again give an odd degree.
pub fn is_odd_degree(lambda: &Partition) -> bool {
    let n = lambda.size();
    if n == 0 {
        return true;
    }
    let top = 1usize << (usize::BITS - 1 - n.leading_zeros());
    let mut candidates = lambda.hooks().into_iter().filter(|h| h.length == top);
    match (candidates.next(), candidates.next()) {
        (Some(h), None) => {
            let (rest, _) = lambda
                .remove_rim_hook(h.row, h.col)
                .expect("node in diagram");
            is_odd_degree(&rest)
        }
        _ => false,
    }
}

/// `2^{Σ n_j}` for `n = Σ 2^{n_j}`: the number of odd-degree irreducible
/// characters of `S_n`.
pub fn odd_degree_count_formula(n: usize) -> u64 {
    1u64 << p_adic(n, 2).digits.iter().map(|&(e, _)| e).sum::<u32>()
}

/// Whether `p` divides `χ^λ(1)`.
pub fn p_divides_degree(lambda: &Partition, p: usize) -> bool {
    nu_p_degree(lambda, p) > 0
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64)
        .map(BigUint::from)
        .fold(BigUint::one(), |a, b| a * b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&partition![5]), BigUint::from(1u32));
        assert_eq!(degree(&partition![2, 1]), BigUint::from(2u32));
        assert_eq!(degree(&partition![6, 2]), BigUint::from(20u32));
        assert_eq!(degree(&Partition::empty()), BigUint::from(1u32));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(nu_p_degree(&partition![2, 2], 2), 1);
        assert_eq!(nu_p_degree(&partition![6, 2], 2), 2);
        for l in Partition::all(16)
            .into_iter()
            .filter(Partition::is_hook_partition)
        {
            assert_eq!(nu_p_degree(&l, 2), 0, "{l}");
        }
    }

    /// S_4 character table, rows (4),(3,1),(2,2),(2,1,1),(1^4); columns
    /// 1^4, (2,1,1), (2,2), (3,1), (4). Derived from permutation characters
    /// on the cosets of Young subgroups and orthogonality.
    const S4: [[i128; 5]; 5] = [
        [1, 1, 1, 1, 1],
        [3, 1, -1, 0, -1],
        [2, 0, 2, -1, 0],
        [3, -1, -1, 0, 1],
        [1, -1, 1, 1, -1],
    ];

    #[test]
    fn s4_table() {
        let rows = Partition::all(4);
        let cols = [
            partition![1, 1, 1, 1],
            partition![2, 1, 1],
            partition![2, 2],
            partition![3, 1],
            partition![4],
        ];
        for (i, l) in rows.iter().enumerate() {
            for (j, t) in cols.iter().enumerate() {
                assert_eq!(mn_value(l, t).unwrap(), S4[i][j], "χ^{l}({t})");
            }
        }
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_value(&partition![3, 1], &partition![2, 2]).unwrap(), -1);
        assert_eq!(mn_value(&partition![2, 2], &partition![4]).unwrap(), 0);
        for t in Partition::all(6) {
            assert_eq!(mn_value(&partition![6], &t).unwrap(), 1);
        }
        assert_eq!(
            mn_value(&partition![2, 1], &partition![2, 2]),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn ecycle_examples() {
        assert_eq!(
            ecycle_products_value(&partition![2, 2], 2, 2, &Partition::empty())
                .unwrap()
                .abs(),
            2
        );
        assert!(matches!(
            ecycle_products_value(&partition![3, 1], 2, 1, &partition![2]),
            Err(Error::HypothesisViolated(_))
        ));
        assert_eq!(
            ecycle_products_value(&partition![3, 1], 2, 2, &Partition::empty()).unwrap(),
            -1
        );
        // the staircase (3,2,1) is a 2-core, so any 2-cycle kills the value
        assert_eq!(
            ecycle_products_value(&partition![3, 2, 1], 2, 1, &partition![1, 1, 1, 1]).unwrap(),
            0
        );
        assert_eq!(
            mn_value(&partition![3, 2, 1], &partition![2, 1, 1, 1, 1]).unwrap(),
            0
        );
        // (3,3) has 3-weight 2
        assert!(ecycle_products_value(&partition![3, 3], 3, 1, &partition![2, 1]).is_err());
        assert!(ecycle_products_value(&partition![3, 3], 3, 2, &Partition::empty()).is_ok());
    }

    #[test]
    fn odd_degree_examples() {
        assert_eq!(
            is_odd_degree(&partition![3, 1, 1]),
            nu_p_degree(&partition![3, 1, 1], 2) == 0
        );
        for l in Partition::all(8)
            .into_iter()
            .filter(Partition::is_hook_partition)
        {
            assert!(is_odd_degree(&l));
        }
        assert_eq!(
            Partition::all(6)
                .iter()
                .filter(|l| is_odd_degree(l))
                .count(),
            8
        );
        assert_eq!(odd_degree_count_formula(6), 8);
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[1, 1]), BigUint::from(2u32));
        assert_eq!(multinomial(&[2, 1, 0]), BigUint::from(3u32));
    }
}
