//! Wreath coordinates on `P_{p^k} = P_{p^{k-1}} ≀ C_p`.
//!
//! With block size `b = p^{k-1}`, an element `g` is written `(h_0, …, h_{p-1}; r)`
//! where block `i` is sent to block `(i + r) mod p` and
//! `g(i·b + x) = ((i + r) mod p)·b + h_i(x)`.

use serde::Serialize;

use super::SylowLayout;
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum WreathElement {
    /// The identity on a single point.
    Leaf,
    Node {
        children: Vec<WreathElement>,
        top: u32,
    },
}

impl WreathElement {
    /// The trivial element of `P_{p^k}`.
    pub fn identity(p: usize, k: u32) -> Self {
        if k == 0 {
            WreathElement::Leaf
        } else {
            WreathElement::Node {
                children: vec![WreathElement::identity(p, k - 1); p],
                top: 0,
            }
        }
    }

    pub fn depth(&self) -> u32 {
        match self {
            WreathElement::Leaf => 0,
            WreathElement::Node { children, .. } => 1 + children[0].depth(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            WreathElement::Leaf => true,
            WreathElement::Node { children, top } => {
                *top == 0 && children.iter().all(Self::is_identity)
            }
        }
    }

    /// `sums[j]`: the sum mod `p` of the tops of all nodes whose children act
    /// on blocks of size `p^j`. Every linear character of `P_{p^k}` is
    /// `g ↦ ζ_p^{Σ_j c_j · sums[j]}`.
    pub fn level_sums(&self, p: usize) -> Vec<u32> {
        let mut sums = vec![0u32; self.depth() as usize];
        self.accumulate(p as u32, &mut sums);
        sums
    }

    fn accumulate(&self, p: u32, sums: &mut [u32]) {
        if let WreathElement::Node { children, top } = self {
            let level = sums.len() - 1;
            sums[level] = (sums[level] + top) % p;
            for c in children {
                c.accumulate(p, &mut sums[..level]);
            }
        }
    }
}

/// Coordinates of `g ∈ P_{p^k}`, where `p^k` is the degree of `g`.
pub fn wreath_coords(g: &Perm, p: usize) -> Result<WreathElement> {
    let n = g.degree();
    let mut size = 1;
    while size < n {
        size *= p;
    }
    if size != n || n == 0 {
        return Err(Error::NotDecomposable(format!(
            "degree {n} is not a power of {p}"
        )));
    }
    decompose(&g.images(), p).ok_or_else(|| Error::NotDecomposable(format!("{g} is not in P_{n}")))
}

fn decompose(images: &[usize], p: usize) -> Option<WreathElement> {
    let n = images.len();
    if n == 1 {
        return Some(WreathElement::Leaf);
    }
    let b = n / p;
    let top = images[0] / b;
    let mut children = Vec::with_capacity(p);
    for i in 0..p {
        let target = (i + top) % p;
        let mut child = Vec::with_capacity(b);
        for x in 0..b {
            let y = images[i * b + x];
            if y / b != target {
                return None;
            }
            child.push(y - target * b);
        }
        children.push(decompose(&child, p)?);
    }
    Some(WreathElement::Node {
        children,
        top: top as u32,
    })
}

/// The permutation with the given coordinates, of degree `p^depth`.
pub fn perm_of(w: &WreathElement, p: usize) -> Perm {
    Perm::from_images(images_of(w, p)).expect("wreath coordinates give a bijection")
}

fn images_of(w: &WreathElement, p: usize) -> Vec<usize> {
    match w {
        WreathElement::Leaf => vec![0],
        WreathElement::Node { children, top } => {
            let parts: Vec<Vec<usize>> = children.iter().map(|c| images_of(c, p)).collect();
            let b = parts[0].len();
            let mut images = Vec::with_capacity(b * p);
            for (i, part) in parts.iter().enumerate() {
                let target = (i + *top as usize) % p;
                images.extend(part.iter().map(|&y| target * b + y));
            }
            images
        }
    }
}

/// Coordinates of `g ∈ P_n` on each nontrivial block of the layout.
pub(crate) fn block_coords(g: &Perm, layout: &SylowLayout) -> Result<Vec<WreathElement>> {
    if g.degree() != layout.n {
        return Err(Error::NotInGroup(format!(
            "{g} has degree {} but n = {}",
            g.degree(),
            layout.n
        )));
    }
    let mut out = Vec::new();
    for block in &layout.blocks {
        let size = layout.block_size(block);
        let local: Vec<usize> = (block.offset..block.offset + size)
            .map(|x| g.apply(x).checked_sub(block.offset).filter(|&y| y < size))
            .collect::<Option<_>>()
            .ok_or_else(|| {
                Error::NotInGroup(format!(
                    "{g} does not preserve the blocks of P_{}",
                    layout.n
                ))
            })?;
        if block.exponent > 0 {
            let local =
                Perm::from_images(local).expect("restriction of a permutation to a stable block");
            out.push(
                decompose(&local.images(), layout.p)
                    .ok_or_else(|| Error::NotInGroup(format!("{g} is not in P_{}", layout.n)))?,
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sylow::{gamma, EnumeratedGroup};

    #[test]
    fn identity_and_gamma() {
        let w = wreath_coords(&Perm::identity(8), 2).unwrap();
        assert!(w.is_identity());
        assert_eq!(w, WreathElement::identity(2, 3));
        for k in 2..=4u32 {
            let w = wreath_coords(&gamma(1 << k).unwrap(), 2).unwrap();
            let expected = WreathElement::Node {
                children: vec![
                    wreath_coords(&gamma(1 << (k - 1)).unwrap(), 2).unwrap(),
                    WreathElement::identity(2, k - 1),
                ],
                top: 1,
            };
            assert_eq!(w, expected);
        }
    }

    #[test]
    fn round_trip_on_p8_and_p9() {
        for (n, p) in [(8, 2), (9, 3), (16, 2)] {
            let g = EnumeratedGroup::sylow(n, p, 1 << 20).unwrap();
            for x in g.elements() {
                assert_eq!(&perm_of(&wreath_coords(x, p).unwrap(), p), x);
            }
        }
    }

    #[test]
    fn non_members_are_rejected() {
        let t = "(1 3)".parse::<Perm>().unwrap();
        let t = t.embed(4, 0);
        assert!(matches!(
            wreath_coords(&t, 2),
            Err(Error::NotDecomposable(_))
        ));
        assert!(wreath_coords(&Perm::identity(6), 2).is_err());
    }
}
