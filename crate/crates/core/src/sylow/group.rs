use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use super::{sylow_generators, SylowLayout};
use crate::characters::CycleType;
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Ambient {
    /// The Sylow subgroup `P_n` of `S_n`.
    P,
    /// `Q_n = P_n ∩ A_n`.
    Q,
}

impl std::fmt::Display for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Ambient::P => "P",
            Ambient::Q => "Q",
        })
    }
}

impl std::str::FromStr for Ambient {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Ambient::P),
            "Q" | "q" => Ok(Ambient::Q),
            _ => Err(Error::Parse(format!("group must be P or Q, got {s:?}"))),
        }
    }
}

/// A permutation group listed element by element.
///
/// Elements are stored in breadth-first discovery order from the
/// generators, which makes every derived table deterministic.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    pub layout: SylowLayout,
    pub ambient: Ambient,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<Perm>,
}

impl EnumeratedGroup {
    /// `P_n` for the prime `p`, failing if more than `budget` elements would be listed.
    pub fn sylow(n: usize, p: usize, budget: usize) -> Result<Self> {
        let layout = SylowLayout::new(n, p)?;
        if layout.order().is_none_or(|o| o > budget as u128) {
            return Err(Error::BudgetExceeded(format!(
                "|P_{n}| = {p}^{} exceeds the element budget {budget}",
                layout.log_order()
            )));
        }
        let generators = sylow_generators(n, p)?;
        let (elements, index) = closure(&generators, n, budget)?;
        Ok(EnumeratedGroup {
            layout,
            ambient: Ambient::P,
            elements,
            index,
            generators,
        })
    }

    /// `P_n` or `Q_n`.
    pub fn new(n: usize, p: usize, ambient: Ambient, budget: usize) -> Result<Self> {
        let p_n = EnumeratedGroup::sylow(n, p, budget)?;
        Ok(match ambient {
            Ambient::P => p_n,
            Ambient::Q => p_n.even_part(),
        })
    }

    /// `Q_n`, the even elements, with Schreier generators for the index-2
    /// subgroup (or the same group when every generator is even).
    pub fn even_part(&self) -> EnumeratedGroup {
        let Some(t) = self.generators.iter().find(|g| !g.is_even()) else {
            return EnumeratedGroup {
                ambient: Ambient::Q,
                ..self.clone()
            };
        };
        let t_inv = t.inverse();
        let mut generators = Vec::new();
        for s in &self.generators {
            let candidates = if s.is_even() {
                [s.clone(), s.conjugate_by(&t_inv)]
            } else {
                [s.then(&t_inv), t.then(s)]
            };
            for c in candidates {
                if !c.is_identity() && !generators.contains(&c) {
                    generators.push(c);
                }
            }
        }
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| g.is_even())
            .cloned()
            .collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        EnumeratedGroup {
            layout: self.layout.clone(),
            ambient: Ambient::Q,
            elements,
            index,
            generators,
        }
    }

    pub fn n(&self) -> usize {
        self.layout.n
    }

    pub fn p(&self) -> usize {
        self.layout.p
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    /// Whether every element is an even permutation.
    pub fn is_alternating(&self) -> bool {
        self.generators.iter().all(Perm::is_even)
    }

    /// Index of the product `elements[a] * elements[b]`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }

    pub fn centralizer_order(&self, g: &Perm) -> Result<usize> {
        if !self.contains(g) {
            return Err(Error::NotInGroup(format!(
                "{g} is not in {}_{}",
                self.ambient,
                self.n()
            )));
        }
        Ok(self
            .elements
            .iter()
            .filter(|h| h.then(g) == g.then(h))
            .count())
    }

    /// Element indices grouped by cycle type, in increasing cycle-type order.
    pub fn cycle_type_buckets(&self) -> Vec<(CycleType, Vec<usize>)> {
        let mut buckets: BTreeMap<CycleType, Vec<usize>> = BTreeMap::new();
        for (i, g) in self.elements.iter().enumerate() {
            buckets.entry(g.cycle_type()).or_default().push(i);
        }
        buckets.into_iter().collect()
    }

    /// Membership flags of the subgroup generated by the given elements.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        let identity = self.index[&Perm::identity(self.n())];
        member[identity] = true;
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.product(x, s);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    /// Membership flags of the derived subgroup: the normal closure of the
    /// commutators of the generators.
    pub fn derived_subgroup(&self) -> Vec<bool> {
        let gens: Vec<Perm> = self.generators.clone();
        let mut normal_gens: Vec<usize> = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = self.index[&a.commutator(b)];
                if !normal_gens.contains(&c) {
                    normal_gens.push(c);
                }
            }
        }
        let mut member = self.subgroup(&normal_gens);
        'grow: loop {
            for &x in &normal_gens {
                for s in &gens {
                    let c = self.index[&self.elements[x].conjugate_by(s)];
                    if !member[c] {
                        normal_gens.push(c);
                        member = self.subgroup(&normal_gens);
                        continue 'grow;
                    }
                }
            }
            break;
        }
        member
    }
}

fn closure(
    generators: &[Perm],
    n: usize,
    budget: usize,
) -> Result<(Vec<Perm>, HashMap<Perm, usize>)> {
    let identity = Perm::identity(n);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0)]);
    let mut next = 0;
    while next < elements.len() {
        for s in generators {
            let y = elements[next].then(s);
            if !index.contains_key(&y) {
                if elements.len() == budget {
                    return Err(Error::BudgetExceeded(format!(
                        "more than {budget} elements generated on {n} points"
                    )));
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        next += 1;
    }
    Ok((elements, index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::factorial_valuation;
    use crate::sylow::{gamma, omega2};

    #[test]
    fn orders_match_sylow_valuation() {
        for (p, max) in [(2usize, 12usize), (3, 12), (5, 10)] {
            for n in 1..=max {
                let g = EnumeratedGroup::sylow(n, p, 1 << 20).unwrap();
                assert_eq!(
                    g.order(),
                    p.pow(factorial_valuation(n, p)),
                    "P_{n} for p = {p}"
                );
                let q = g.even_part();
                let expected = if p == 2 && n >= 2 {
                    g.order() / 2
                } else {
                    g.order()
                };
                assert_eq!(q.order(), expected);
                assert!(q.elements().iter().all(Perm::is_even));
                assert_eq!(
                    q.subgroup(
                        &(0..q.generators().len())
                            .map(|i| q.index_of(&q.generators()[i]).unwrap())
                            .collect::<Vec<_>>()
                    )
                    .iter()
                    .filter(|&&b| b)
                    .count(),
                    q.order()
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            EnumeratedGroup::sylow(8, 2, 100),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn centralizers() {
        for k in 2..=4u32 {
            let g = EnumeratedGroup::sylow(1 << k, 2, 1 << 20).unwrap();
            assert_eq!(
                g.centralizer_order(&Perm::identity(1 << k)).unwrap(),
                g.order()
            );
            assert_eq!(
                g.centralizer_order(&gamma(1 << k).unwrap()).unwrap(),
                1 << k
            );
            assert_eq!(
                g.centralizer_order(&omega2(1 << k).unwrap()).unwrap(),
                1 << k
            );
        }
        let g = EnumeratedGroup::sylow(4, 2, 100).unwrap();
        assert!(g
            .centralizer_order(&"(1 2 3)".parse::<Perm>().unwrap().embed(4, 0))
            .is_err());
    }

    #[test]
    fn derived_subgroups() {
        // P_4 is dihedral of order 8 with derived subgroup of order 2
        let g = EnumeratedGroup::sylow(4, 2, 100).unwrap();
        assert_eq!(g.derived_subgroup().iter().filter(|&&b| b).count(), 2);
        // Q_4 is the Klein four group
        assert_eq!(
            g.even_part()
                .derived_subgroup()
                .iter()
                .filter(|&&b| b)
                .count(),
            1
        );
        let g = EnumeratedGroup::sylow(16, 2, 1 << 20).unwrap();
        assert_eq!(
            g.order() / g.derived_subgroup().iter().filter(|&&b| b).count(),
            16
        );
    }
}
