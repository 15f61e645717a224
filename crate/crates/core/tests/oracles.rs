//! Library results against independent computations.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use sylowrestrict::characters::{an_value_at, degree, ecycle_products_value, factorial, mn_value};
use sylowrestrict::lr::{lr_coefficient, restriction_pairs};
use sylowrestrict::sylow::EnumeratedGroup;
use sylowrestrict::{
    AlgebraicValue, Ambient, Error, Partition, Perm, RestrictionContext, SignChoice,
};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn s4_character_table() {
    let classes = ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"];
    let table = [
        ("4", [1, 1, 1, 1, 1]),
        ("3,1", [3, 1, -1, 0, -1]),
        ("2,2", [2, 0, 2, -1, 0]),
        ("2,1,1", [3, -1, -1, 0, 1]),
        ("1,1,1,1", [1, -1, 1, 1, -1]),
    ];
    for (lambda, row) in table {
        for (class, expected) in classes.iter().zip(row) {
            assert_eq!(
                mn_value(&p(lambda), &p(class)).unwrap(),
                expected,
                "χ^{lambda}({class})"
            );
        }
    }
}

#[test]
fn row_orthogonality() {
    for n in 1..=8 {
        let order = factorial(n);
        let classes = Partition::all(n);
        let lambdas = Partition::all(n);
        for a in &lambdas {
            for b in &lambdas {
                let mut total = 0i128;
                for t in &classes {
                    let size: i128 = (&order / BigUint::from(t.centralizer_order()))
                        .try_into()
                        .unwrap();
                    total += size * mn_value(a, t).unwrap() * mn_value(b, t).unwrap();
                }
                let expected: i128 = if a == b {
                    (&order).try_into().unwrap()
                } else {
                    0
                };
                assert_eq!(total, expected, "⟨χ^{a}, χ^{b}⟩ in S_{n}");
            }
        }
    }
}

/// `λ/μ` is a horizontal strip iff `μ_i ≤ λ_i ≤ μ_{i-1}` for all `i`.
fn horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| i == 0 || lambda.part(i) <= mu.part(i - 1))
}

#[test]
fn pieri_rule() {
    for s in 1..=8 {
        for lambda in Partition::all(s) {
            for k in 1..=s {
                for mu in Partition::all(s - k) {
                    let expected = u64::from(horizontal_strip(&lambda, &mu));
                    let row = Partition::new(vec![k]).unwrap();
                    assert_eq!(
                        lr_coefficient(&lambda, &mu, &row).unwrap().coefficient,
                        expected,
                        "{lambda} / {mu}, ({k})"
                    );
                }
            }
        }
    }
}

#[test]
fn known_lr_coefficients() {
    assert_eq!(
        lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1"))
            .unwrap()
            .coefficient,
        2
    );
    assert_eq!(
        lr_coefficient(&p("3,3"), &p("2,1"), &p("2,1"))
            .unwrap()
            .coefficient,
        1
    );
    assert_eq!(
        lr_coefficient(&p("2,2"), &p("2"), &p("1,1"))
            .unwrap()
            .coefficient,
        0
    );
}

#[test]
fn restriction_to_young_subgroup_preserves_degree() {
    for q in 1..=5 {
        for lambda in Partition::all(2 * q) {
            let pairs = restriction_pairs(&lambda, q).unwrap();
            let total: BigUint = pairs
                .iter()
                .map(|((mu, nu), &c)| BigUint::from(c) * degree(mu) * degree(nu))
                .sum();
            assert_eq!(total, degree(&lambda), "{lambda}");
        }
    }
    assert!(matches!(
        restriction_pairs(&p("2,1"), 1),
        Err(Error::OddSize(3))
    ));
}

#[test]
fn ecycle_examples() {
    // (3,1) has two removable 2-hooks in succession
    assert_eq!(p("3,1").weight(2), 2);
    assert!(matches!(
        ecycle_products_value(&p("3,1"), 2, 1, &p("1,1")),
        Err(Error::HypothesisViolated(_))
    ));
    assert_eq!(
        ecycle_products_value(&p("3,1"), 2, 2, &Partition::empty()).unwrap(),
        -1
    );
    assert_eq!(
        ecycle_products_value(&p("2,2"), 4, 1, &Partition::empty()).unwrap(),
        0
    );
}

#[test]
fn a5_on_five_cycles() {
    let lambda = p("3,1,1");
    let canonical: Perm = "(1 2 3 4 5)".parse().unwrap();
    let other: Perm = "(1 2 3 5 4)".parse().unwrap();
    let golden = |s: i64| {
        let half = num_rational::BigRational::new(1.into(), 2.into());
        (&AlgebraicValue::integer(1)
            + &AlgebraicValue::sqrt(5).scale(&num_rational::BigRational::from_integer(s.into())))
            .scale(&half)
    };
    assert_eq!(
        an_value_at(&lambda, SignChoice::Plus, &canonical).unwrap(),
        golden(1)
    );
    assert_eq!(
        an_value_at(&lambda, SignChoice::Minus, &canonical).unwrap(),
        golden(-1)
    );
    assert_eq!(
        an_value_at(&lambda, SignChoice::Plus, &other).unwrap(),
        golden(-1)
    );
    let t: Perm = "(1 2)(3 4)".parse().unwrap();
    assert_eq!(
        an_value_at(&lambda, SignChoice::Plus, &t.embed(5, 0)).unwrap(),
        AlgebraicValue::integer(-1)
    );
}

#[test]
fn sylow_orders() {
    for (prime, max) in [(2u32, 12usize), (3, 12), (5, 10), (7, 7)] {
        for n in 1..=max {
            let mut f = factorial(n);
            let mut order = 1usize;
            while &f % prime == BigUint::ZERO {
                f /= prime;
                order *= prime as usize;
            }
            assert_eq!(
                EnumeratedGroup::sylow(n, prime as usize, 1 << 20)
                    .unwrap()
                    .order(),
                order
            );
        }
    }
}

/// Elements and ±1-valued homomorphisms of the group generated by `gens`,
/// found without any of the library's group machinery.
fn brute_force_sign_characters(gens: &[Perm]) -> (Vec<Perm>, Vec<Vec<i64>>) {
    let n = gens[0].degree();
    let mut elements = vec![Perm::identity(n)];
    let mut index = HashMap::from([(Perm::identity(n), 0)]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for s in gens {
            let y = elements[i].then(s);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    let mut characters = Vec::new();
    'assign: for mask in 0..1u32 << gens.len() {
        let sign = |j: usize| if mask >> j & 1 == 1 { -1 } else { 1 };
        let mut value = vec![0i64; elements.len()];
        value[0] = 1;
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for (j, s) in gens.iter().enumerate() {
                let y = index[&elements[i].then(s)];
                let v = value[i] * sign(j);
                if value[y] == 0 {
                    value[y] = v;
                    queue.push_back(y);
                } else if value[y] != v {
                    continue 'assign;
                }
            }
        }
        characters.push(value);
    }
    (elements, characters)
}

fn brute_force_multiplicities(gens: &[Perm], lambda: &Partition) -> Vec<i64> {
    let (elements, characters) = brute_force_sign_characters(gens);
    let mut out: Vec<i64> = characters
        .iter()
        .map(|theta| {
            let total: i64 = elements
                .iter()
                .zip(theta)
                .map(|(g, t)| mn_value(lambda, &g.cycle_type()).unwrap() as i64 * t)
                .sum();
            assert_eq!(total % elements.len() as i64, 0);
            total / elements.len() as i64
        })
        .collect();
    out.sort();
    out
}

fn cycles(n: usize, s: &str) -> Perm {
    s.parse::<Perm>().unwrap().embed(n, 0)
}

#[test]
fn multiplicities_against_brute_force() {
    let cases: Vec<(usize, Ambient, Vec<Perm>)> = vec![
        (
            4,
            Ambient::P,
            vec![
                cycles(4, "(1 2)"),
                cycles(4, "(3 4)"),
                cycles(4, "(1 3)(2 4)"),
            ],
        ),
        (
            5,
            Ambient::Q,
            vec![cycles(5, "(1 2)(3 4)"), cycles(5, "(1 3)(2 4)")],
        ),
        (
            6,
            Ambient::P,
            vec![
                cycles(6, "(1 2)"),
                cycles(6, "(3 4)"),
                cycles(6, "(1 3)(2 4)"),
                cycles(6, "(5 6)"),
            ],
        ),
        (
            8,
            Ambient::P,
            vec![
                cycles(8, "(1 2)"),
                cycles(8, "(3 4)"),
                cycles(8, "(1 3)(2 4)"),
                cycles(8, "(1 5)(2 6)(3 7)(4 8)"),
            ],
        ),
    ];
    for (n, ambient, gens) in cases {
        let ctx = RestrictionContext::new(n, 2, ambient, 1 << 20).unwrap();
        assert_eq!(
            brute_force_sign_characters(&gens).0.len(),
            ctx.group.order()
        );
        assert_eq!(
            brute_force_sign_characters(&gens).1.len(),
            ctx.characters.len()
        );
        for lambda in Partition::all(n) {
            let mut ours: Vec<i64> = ctx
                .restrict(&lambda, None)
                .unwrap()
                .multiplicities
                .iter()
                .map(|m| m.multiplicity as i64)
                .collect();
            ours.sort();
            assert_eq!(
                ours,
                brute_force_multiplicities(&gens, &lambda),
                "{lambda} on {ambient}_{n}"
            );
        }
    }
}
