use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;
use sylowrestrict::characters::{class_sign, degree, factorial, mn_value};
use sylowrestrict::lr::lr_coefficient;
use sylowrestrict::{AlgebraicValue, Ambient, Partition, Perm, RestrictionContext};

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).unwrap())
}

fn algebraic() -> impl Strategy<Value = AlgebraicValue> {
    (-6i64..=6, -6i64..=6, 0u32..5, -6i64..=6, 1i64..=3).prop_map(|(a, b, e, c, den)| {
        let zeta = AlgebraicValue::root_of_unity(5, e).scale(&BigRational::from_integer(b.into()));
        let surd = AlgebraicValue::sqrt(3).scale(&BigRational::from_integer(c.into()));
        let sum = &(&AlgebraicValue::integer(a) + &zeta) + &surd;
        sum.scale(&BigRational::new(1.into(), den.into()))
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lambda in partition(8, 8)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn core_and_weight_account_for_size(lambda in partition(8, 8), e in 2usize..6) {
        let cq = lambda.core_quotient(e);
        prop_assert_eq!(cq.core.size() + e * cq.weight, lambda.size());
        prop_assert!(cq.core.hooks_divisible(e).is_empty());
        prop_assert_eq!(cq.quotient.len(), e);
        prop_assert_eq!(cq.quotient.iter().map(Partition::size).sum::<usize>(), cq.weight);
    }

    #[test]
    fn hook_length_count(lambda in partition(7, 7)) {
        let hooks = lambda.hooks();
        prop_assert_eq!(hooks.len(), lambda.size());
        let product: BigUint = hooks.iter().map(|h| BigUint::from(h.length)).product();
        prop_assert_eq!(product * degree(&lambda), factorial(lambda.size()));
    }

    #[test]
    fn conjugate_character_is_twisted_by_sign(lambda in partition(4, 4), seed in any::<usize>()) {
        let classes = Partition::all(lambda.size());
        let t = &classes[seed % classes.len()];
        prop_assert_eq!(mn_value(&lambda.conjugate(), t).unwrap(), class_sign(t) * mn_value(&lambda, t).unwrap());
    }

    #[test]
    fn lr_symmetries(lambda in partition(4, 4), seed in any::<usize>()) {
        let n = lambda.size();
        let k = seed % (n + 1);
        let mus = Partition::all(k);
        let nus = Partition::all(n - k);
        let mu = &mus[seed % mus.len()];
        let nu = &nus[(seed / 7) % nus.len()];
        let c = lr_coefficient(&lambda, mu, nu).unwrap().coefficient;
        prop_assert_eq!(lr_coefficient(&lambda, nu, mu).unwrap().coefficient, c);
        prop_assert_eq!(lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()).unwrap().coefficient, c);
    }

    #[test]
    fn perm_group_laws(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.conjugate_by(&b).cycle_type(), a.cycle_type());
        prop_assert_eq!(a.then(&b).is_even(), a.is_even() == b.is_even());
        prop_assert!(a.pow(a.order()).is_identity());
    }

    #[test]
    fn algebraic_field_laws(x in algebraic(), y in algebraic(), z in algebraic()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &AlgebraicValue::integer(1), x.clone());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.norm_squared().conj(), x.norm_squared());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn report_invariants(n in 1usize..=10, p in prop::sample::select(vec![2usize, 3, 5]), seed in any::<usize>()) {
        let lambdas = Partition::all(n);
        let lambda = &lambdas[seed % lambdas.len()];
        let ambients: &[Ambient] = if p == 2 { &[Ambient::P, Ambient::Q] } else { &[Ambient::P] };
        for &ambient in ambients {
            let ctx = RestrictionContext::new(n, p, ambient, 1 << 20).unwrap();
            let report = ctx.restrict(lambda, None).unwrap();
            prop_assert!(report.check_invariants().is_ok());
            prop_assert!(report.linear_total() <= report.degree);

            // λ' differs from λ by the sign character, so the multiplicities
            // agree as a multiset on P and pointwise on Q
            let twisted = ctx.restrict(&lambda.conjugate(), None).unwrap();
            let mut a: Vec<u64> = report.multiplicities.iter().map(|m| m.multiplicity).collect();
            let mut b: Vec<u64> = twisted.multiplicities.iter().map(|m| m.multiplicity).collect();
            if ambient == Ambient::Q {
                prop_assert_eq!(&a, &b);
            }
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn squared_degrees_sum_to_group_order() {
    for n in 0..=14 {
        let total: BigUint = Partition::all(n).iter().map(|l| degree(l).pow(2)).sum();
        assert_eq!(total, factorial(n), "n = {n}");
    }
}

#[test]
fn linear_constituents_of_q_dominate_those_of_p() {
    // every linear character of P restricts to one of Q, so each η gets at
    // least the multiplicity summed over the θ lying above it
    for n in [4usize, 5, 6, 8] {
        let p_ctx = RestrictionContext::new(n, 2, Ambient::P, 1 << 20).unwrap();
        let q_ctx = RestrictionContext::new(n, 2, Ambient::Q, 1 << 20).unwrap();
        let elements = q_ctx.group.elements();
        let q_values: Vec<Vec<i64>> = (0..q_ctx.characters.len())
            .map(|c| {
                (0..elements.len())
                    .map(|i| q_ctx.characters.value(c, i).as_i64().unwrap())
                    .collect()
            })
            .collect();
        let p_values = |c: usize| -> Vec<i64> {
            elements
                .iter()
                .map(|g| {
                    p_ctx
                        .characters
                        .value(c, p_ctx.group.index_of(g).unwrap())
                        .as_i64()
                        .unwrap()
                })
                .collect()
        };
        for lambda in Partition::all(n) {
            let on_p = p_ctx.restrict(&lambda, None).unwrap();
            let on_q = q_ctx.restrict(&lambda, None).unwrap();
            let mut above: HashMap<usize, u64> = HashMap::new();
            for (theta, m) in on_p.multiplicities.iter().enumerate() {
                let restricted = p_values(theta);
                let eta = q_values
                    .iter()
                    .position(|v| *v == restricted)
                    .expect("restriction is linear");
                *above.entry(eta).or_default() += m.multiplicity;
            }
            for (eta, total) in above {
                assert!(
                    on_q.multiplicities[eta].multiplicity >= total,
                    "{lambda} on Q_{n}"
                );
            }
        }
    }
}
