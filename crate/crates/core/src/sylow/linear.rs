use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use super::group::{Ambient, EnumeratedGroup};
use super::wreath::block_coords;
use super::SylowLayout;
use crate::characters::AlgebraicValue;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Names a linear character.
///
/// `Wreath` labels characters of `P_n`: one vector per nontrivial block, with
/// entry `j` the residue mod `p` attached to the tops acting on sub-blocks of
/// size `p^j`. For `p = 2` the label with a single `1` at level `0` (on every
/// block) is the sign character.
///
/// `Abelian` labels characters of `G/G'` by their exponents on a fixed
/// generating set of the quotient, modulo its exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearCharLabel {
    Wreath(Vec<Vec<u32>>),
    Abelian(Vec<u32>),
}

impl LinearCharLabel {
    pub fn is_trivial(&self) -> bool {
        match self {
            LinearCharLabel::Wreath(blocks) => blocks.iter().flatten().all(|&c| c == 0),
            LinearCharLabel::Abelian(x) => x.iter().all(|&c| c == 0),
        }
    }
}

impl fmt::Display for LinearCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            LinearCharLabel::Wreath(blocks) => {
                for b in blocks {
                    write!(f, "[{}]", join(b))?;
                }
                if blocks.is_empty() {
                    f.write_str("[]")?;
                }
                Ok(())
            }
            LinearCharLabel::Abelian(x) => write!(f, "<{}>", join(x)),
        }
    }
}

impl Serialize for LinearCharLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every linear character of an enumerated group, tabulated.
///
/// All values are `order`-th roots of unity; `exponent(c, i)` is `k` with
/// `θ_c(g_i) = ζ_order^k`.
#[derive(Clone, Debug)]
pub struct LinearCharacters {
    pub ambient: Ambient,
    pub order: u32,
    labels: Vec<LinearCharLabel>,
    exponents: Vec<Vec<u32>>,
}

impl LinearCharacters {
    /// `Lin(P_n)` from wreath labels for `P`, `Lin(Q_n)` from the
    /// abelianization for `Q`.
    pub fn of(group: &EnumeratedGroup) -> Result<Self> {
        match group.ambient {
            Ambient::P => LinearCharacters::wreath(group),
            Ambient::Q => LinearCharacters::abelianization(group),
        }
    }

    /// The `p^{Σ n_j a_j}` characters of `P_n` labelled by wreath levels.
    pub fn wreath(group: &EnumeratedGroup) -> Result<Self> {
        let layout = &group.layout;
        let p = layout.p as u32;
        let labels = wreath_labels(layout);
        let sums: Vec<Vec<Vec<u32>>> = group
            .elements()
            .iter()
            .map(|g| {
                Ok(block_coords(g, layout)?
                    .iter()
                    .map(|w| w.level_sums(layout.p))
                    .collect())
            })
            .collect::<Result<_>>()?;
        let exponents = labels
            .iter()
            .map(|label| sums.iter().map(|s| pair(label, s, p)).collect())
            .collect();
        Ok(LinearCharacters {
            ambient: group.ambient,
            order: p,
            labels,
            exponents,
        })
    }

    /// Characters of `G/G'`: the derived subgroup is computed as a normal
    /// closure, cosets are labelled, and every assignment of roots of unity
    /// to a generating set of the quotient that respects all relations is kept.
    pub fn abelianization(group: &EnumeratedGroup) -> Result<Self> {
        let derived = group.derived_subgroup();
        let d_members: Vec<usize> = (0..group.order()).filter(|&i| derived[i]).collect();
        let mut coset = vec![usize::MAX; group.order()];
        let mut reps = Vec::new();
        for g in 0..group.order() {
            if coset[g] == usize::MAX {
                for &d in &d_members {
                    coset[group.product(g, d)] = reps.len();
                }
                reps.push(g);
            }
        }
        let size = reps.len();
        let mul = |c: usize, s: usize| coset[group.product(reps[c], s)];
        let identity = coset[group
            .index_of(&Perm::identity(group.n()))
            .expect("identity")];

        let span = |gens: &[usize]| -> (Vec<Option<Vec<u32>>>, usize) {
            let mut coeff: Vec<Option<Vec<u32>>> = vec![None; size];
            coeff[identity] = Some(vec![0; gens.len()]);
            let mut queue = VecDeque::from([identity]);
            let mut reached = 1;
            while let Some(c) = queue.pop_front() {
                for (i, &s) in gens.iter().enumerate() {
                    let d = mul(c, s);
                    if coeff[d].is_none() {
                        let mut v = coeff[c].clone().expect("visited");
                        v[i] += 1;
                        coeff[d] = Some(v);
                        queue.push_back(d);
                        reached += 1;
                    }
                }
            }
            (coeff, reached)
        };

        let mut chosen: Vec<usize> = Vec::new();
        for s in group.generators() {
            let s = group.index_of(s).expect("generator in group");
            let (coeff, reached) = span(&chosen);
            if reached == size {
                break;
            }
            if coeff[coset[s]].is_none() {
                chosen.push(s);
            }
        }
        let (coeff, reached) = span(&chosen);
        if reached != size {
            return Err(Error::Inconsistent(
                "generators do not span the abelianization".into(),
            ));
        }
        let coeff: Vec<Vec<u32>> = coeff.into_iter().map(|c| c.expect("spanned")).collect();

        let mut exponent = 1u32;
        for &s in &chosen {
            let (mut c, mut k) = (mul(identity, s), 1u32);
            while c != identity {
                c = mul(c, s);
                k += 1;
            }
            exponent = num_integer::lcm(exponent, k);
        }
        let e = exponent as i64;
        let r = chosen.len();
        let mut relations: HashSet<Vec<i64>> = HashSet::new();
        for (c, v) in coeff.iter().enumerate() {
            for (i, &s) in chosen.iter().enumerate() {
                let w = &coeff[mul(c, s)];
                let rel: Vec<i64> = (0..r)
                    .map(|j| (v[j] as i64 + (i == j) as i64 - w[j] as i64).rem_euclid(e))
                    .collect();
                if rel.iter().any(|&x| x != 0) {
                    relations.insert(rel);
                }
            }
        }
        let mut relations: Vec<Vec<i64>> = relations.into_iter().collect();
        relations.sort();

        let total = (e as u64)
            .checked_pow(r as u32)
            .filter(|&t| t <= 1 << 24)
            .ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "{e}^{r} candidate characters of an abelian group of order {size}"
                ))
            })?;
        let mut labels = Vec::new();
        for idx in 0..total {
            let mut x = vec![0u32; r];
            let mut rest = idx;
            for j in (0..r).rev() {
                x[j] = (rest % e as u64) as u32;
                rest /= e as u64;
            }
            if relations.iter().all(|rel| {
                rel.iter()
                    .zip(&x)
                    .map(|(a, &b)| a * b as i64)
                    .sum::<i64>()
                    .rem_euclid(e)
                    == 0
            }) {
                labels.push(LinearCharLabel::Abelian(x));
            }
        }
        if labels.len() != size {
            return Err(Error::Inconsistent(format!(
                "found {} characters of an abelian group of order {size}",
                labels.len()
            )));
        }
        let exponents = labels
            .iter()
            .map(|label| {
                let LinearCharLabel::Abelian(x) = label else {
                    unreachable!()
                };
                let per_coset: Vec<u32> = coeff
                    .iter()
                    .map(|v| {
                        (v.iter()
                            .zip(x)
                            .map(|(&a, &b)| a as u64 * b as u64)
                            .sum::<u64>()
                            % e as u64) as u32
                    })
                    .collect();
                coset.iter().map(|&c| per_coset[c]).collect()
            })
            .collect();
        Ok(LinearCharacters {
            ambient: group.ambient,
            order: exponent,
            labels,
            exponents,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[LinearCharLabel] {
        &self.labels
    }

    pub fn position(&self, label: &LinearCharLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `k` with `θ_c(g_i) = ζ_order^k`.
    pub fn exponent(&self, c: usize, element: usize) -> u32 {
        self.exponents[c][element]
    }

    pub fn exponents(&self, c: usize) -> &[u32] {
        &self.exponents[c]
    }

    pub fn value(&self, c: usize, element: usize) -> AlgebraicValue {
        AlgebraicValue::root_of_unity(self.order, self.exponents[c][element])
    }

    /// For each character of `group`, the index of its restriction among
    /// `sub_chars` (characters of the subgroup `sub`).
    pub fn restriction_map(
        &self,
        group: &EnumeratedGroup,
        sub_chars: &LinearCharacters,
        sub: &EnumeratedGroup,
    ) -> Result<Vec<usize>> {
        let common = self.order.max(sub_chars.order);
        let scale = |k: u32, m: u32| k * (common / m);
        let positions: Vec<usize> = sub
            .elements()
            .iter()
            .map(|g| {
                group
                    .index_of(g)
                    .ok_or_else(|| Error::NotInGroup(g.to_string()))
            })
            .collect::<Result<_>>()?;
        let lookup: HashMap<Vec<u32>, usize> = (0..sub_chars.len())
            .map(|c| {
                (
                    sub_chars.exponents[c]
                        .iter()
                        .map(|&k| scale(k, sub_chars.order))
                        .collect(),
                    c,
                )
            })
            .collect();
        (0..self.len())
            .map(|c| {
                let key: Vec<u32> = positions
                    .iter()
                    .map(|&i| scale(self.exponents[c][i], self.order))
                    .collect();
                lookup.get(&key).copied().ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "restriction of {} is not a listed character",
                        self.labels[c]
                    ))
                })
            })
            .collect()
    }
}

fn pair(label: &LinearCharLabel, sums: &[Vec<u32>], p: u32) -> u32 {
    let LinearCharLabel::Wreath(blocks) = label else {
        unreachable!("wreath label expected")
    };
    blocks
        .iter()
        .zip(sums)
        .flat_map(|(c, s)| c.iter().zip(s).map(|(&a, &b)| a * b))
        .sum::<u32>()
        % p
}

/// All wreath labels of `P_n`, in lexicographic order.
pub fn wreath_labels(layout: &SylowLayout) -> Vec<LinearCharLabel> {
    let shape: Vec<usize> = layout
        .nontrivial_blocks()
        .map(|b| b.exponent as usize)
        .collect();
    let dims: usize = shape.iter().sum();
    let p = layout.p as u64;
    (0..p.pow(dims as u32))
        .map(|mut idx| {
            let mut flat = vec![0u32; dims];
            for j in (0..dims).rev() {
                flat[j] = (idx % p) as u32;
                idx /= p;
            }
            let mut rest = &flat[..];
            let blocks = shape
                .iter()
                .map(|&k| {
                    let (head, tail) = rest.split_at(k);
                    rest = tail;
                    head.to_vec()
                })
                .collect();
            LinearCharLabel::Wreath(blocks)
        })
        .collect()
}

/// `θ(g)` for a wreath label of `P_n`, without enumerating the group.
pub fn wreath_value(
    label: &LinearCharLabel,
    g: &Perm,
    layout: &SylowLayout,
) -> Result<AlgebraicValue> {
    let LinearCharLabel::Wreath(blocks) = label else {
        return Err(Error::OutOfRange(format!("{label} is not a label of P_n")));
    };
    let sums: Vec<Vec<u32>> = block_coords(g, layout)?
        .iter()
        .map(|w| w.level_sums(layout.p))
        .collect();
    if blocks.len() != sums.len() || blocks.iter().zip(&sums).any(|(b, s)| b.len() != s.len()) {
        return Err(Error::OutOfRange(format!(
            "{label} does not match the blocks of P_{}",
            layout.n
        )));
    }
    Ok(AlgebraicValue::root_of_unity(
        layout.p as u32,
        pair(label, &sums, layout.p as u32),
    ))
}
