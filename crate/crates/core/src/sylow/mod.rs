//! A concrete Sylow `p`-subgroup `P_n` of `S_n` and `Q_n = P_n ∩ A_n`.
//!
//! Writing `n = Σ a_j p^{n_j}` in base `p`, the points `1..=n` are cut into
//! consecutive blocks: `a_1` blocks of size `p^{n_1}`, then `a_2` blocks of
//! size `p^{n_2}`, and so on, most significant digit first. On a block of size
//! `p^k` (points relabelled `0..p^k`) the generators are
//!
//! ```text
//! g_j(x) = (x + p^j) mod p^{j+1}   for x < p^{j+1},   j = 0, …, k-1
//! ```
//!
//! and fix all other points. For `p = 2` this is `g_j = ∏_{i=1}^{2^j} (i, i+2^j)`.
//! The group they generate is the iterated wreath product
//! `P_{p^k} = P_{p^{k-1}} ≀ C_p`, with `g_{k-1}` cycling the `p` sub-blocks.

mod group;
mod linear;
mod wreath;

pub use group::{Ambient, EnumeratedGroup};
pub use linear::{wreath_labels, wreath_value, LinearCharLabel, LinearCharacters};
pub use wreath::{perm_of, wreath_coords, WreathElement};

use serde::Serialize;

use crate::characters::CycleType;
use crate::error::{Error, Result};
use crate::partitions::{factorial_valuation, p_adic, Partition};
pub use crate::perm::Perm;

/// Default cap on the number of group elements enumerated.
pub const DEFAULT_BUDGET: usize = 1 << 20;

/// The element budget: `SYLOWRESTRICT_BUDGET` if set to a positive integer,
/// otherwise [`DEFAULT_BUDGET`].
pub fn default_budget() -> usize {
    std::env::var("SYLOWRESTRICT_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// A block of `p^exponent` consecutive points starting at the 0-based `offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub offset: usize,
    pub exponent: u32,
}

/// How `{1, …, n}` is cut into blocks following the base-`p` digits of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowLayout {
    pub n: usize,
    pub p: usize,
    pub blocks: Vec<Block>,
}

impl SylowLayout {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::OutOfRange(format!("p = {p} is not prime")));
        }
        if n == 0 || n > 256 {
            return Err(Error::OutOfRange(format!("n = {n} must lie in 1..=256")));
        }
        let mut blocks = Vec::new();
        let mut offset = 0;
        for (exponent, count) in p_adic(n, p).digits {
            for _ in 0..count {
                blocks.push(Block { offset, exponent });
                offset += p.pow(exponent);
            }
        }
        Ok(SylowLayout { n, p, blocks })
    }

    pub fn block_size(&self, b: &Block) -> usize {
        self.p.pow(b.exponent)
    }

    /// `ν_p(n!)`, so that `|P_n| = p^{log_order}`.
    pub fn log_order(&self) -> u32 {
        factorial_valuation(self.n, self.p)
    }

    /// `|P_n|`, if it fits in a `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.log_order())
    }

    /// Blocks that carry a nontrivial group, i.e. have more than one point.
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.exponent > 0)
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `g_j` on a block of size `p^k`, as a permutation of that block.
fn block_generator(p: usize, k: u32, j: u32) -> Perm {
    let size = p.pow(k);
    let (step, span) = (p.pow(j), p.pow(j + 1));
    let images = (0..size)
        .map(|x| if x < span { (x + step) % span } else { x })
        .collect();
    Perm::from_images(images).expect("digit shift is a bijection")
}

/// Generators of `P_n`: `g_0, …, g_{k-1}` on every block of size `p^k`.
pub fn sylow_generators(n: usize, p: usize) -> Result<Vec<Perm>> {
    let layout = SylowLayout::new(n, p)?;
    let mut gens = Vec::new();
    for b in layout.nontrivial_blocks() {
        for j in 0..b.exponent {
            gens.push(block_generator(p, b.exponent, j).embed(n, b.offset));
        }
    }
    Ok(gens)
}

/// `g_0 g_1 ⋯ g_{k-1}` on a block of size `p^k`: a `p^k`-cycle.
fn block_omega(p: usize, k: u32) -> Perm {
    (0..k).fold(Perm::identity(p.pow(k)), |acc, j| {
        acc.then(&block_generator(p, k, j))
    })
}

/// `g_1 g_2 ⋯ g_{k-1}` on `2^k` points, of cycle type `(2^{k-1}, 2^{k-1})`.
fn block_gamma(k: u32) -> Perm {
    (1..k).fold(Perm::identity(1 << k), |acc, j| {
        acc.then(&block_generator(2, k, j))
    })
}

fn log2_exact(n: usize) -> Result<u32> {
    if n.is_power_of_two() {
        Ok(n.trailing_zeros())
    } else {
        Err(Error::OutOfRange(format!("{n} is not a power of 2")))
    }
}

/// `γ` on `n = 2^k` points: `(γ_{k-1}, 1; σ)` in wreath coordinates, an even
/// element of `P_{2^k}` of cycle type `(2^{k-1}, 2^{k-1})`.
pub fn gamma(n: usize) -> Result<Perm> {
    Ok(block_gamma(log2_exact(n)?))
}

/// `ω = g_0 γ` on `n = 2^k` points, a `2^k`-cycle.
pub fn omega2(n: usize) -> Result<Perm> {
    Ok(block_omega(2, log2_exact(n)?))
}

/// The element of `P_n` acting as a `p^k`-cycle on every block of size `p^k`:
/// one cycle of length `p^{n_j}` for each unit of each base-`p` digit.
pub fn omega_padic(n: usize, p: usize) -> Result<Perm> {
    let layout = SylowLayout::new(n, p)?;
    Ok(layout
        .nontrivial_blocks()
        .fold(Perm::identity(n), |acc, b| {
            acc.then(&block_omega(p, b.exponent).embed(n, b.offset))
        }))
}

/// `γ_k` placed on the first `2^k` points of `n ∈ {2^k, 2^k + 1}`.
pub fn gamma_in(n: usize) -> Result<Perm> {
    let k = usize::BITS - 1 - n.leading_zeros();
    if n != 1 << k && n != (1 << k) + 1 {
        return Err(Error::OutOfRange(format!("{n} is neither 2^k nor 2^k + 1")));
    }
    Ok(block_gamma(k).embed(n, 0))
}

/// Which element is placed on a block when realizing a cycle type in `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockPiece {
    /// A single cycle through the whole block.
    Omega,
    /// Two cycles of half the block's length.
    Gamma,
}

/// The cycle type `g_λ` for an even-degree `χ^λ`, with the element of `Q_n`
/// realizing it.
#[derive(Clone, Debug, Serialize)]
pub struct GLambda {
    pub lambda: Partition,
    pub cycle_type: CycleType,
    pub element: Perm,
    pub pieces: Vec<BlockPiece>,
}

/// Chooses `g_λ` for `n = 2^{n_1} + ⋯ + 2^{n_t} + a_0` with `t ≥ 2` and
/// `n_t > 0`, and `χ^λ(1)` even.
///
/// * `t` even: `(2^{n_1}, …, 2^{n_t})`.
/// * `t` odd and `λ` has no `2^{n_1}`-hook: `(2^{n_1}, 2^{n_2-1}, 2^{n_2-1}, 2^{n_3}, …)`.
/// * `t` odd otherwise: `(2^{n_1-1}, 2^{n_1-1}, 2^{n_2}, …)`.
///
/// A fixed point is appended when `a_0 = 1`.
pub fn construct_g_lambda(lambda: &Partition) -> Result<GLambda> {
    let n = lambda.size();
    let layout = SylowLayout::new(n, 2)?;
    let big: Vec<u32> = layout.nontrivial_blocks().map(|b| b.exponent).collect();
    let t = big.len();
    if t < 2 {
        return Err(Error::HypothesisViolated(format!(
            "n = {n} needs at least two binary digits above 2^0"
        )));
    }
    if crate::characters::is_odd_degree(lambda) {
        return Err(Error::HypothesisViolated(format!("χ^{lambda}(1) is odd")));
    }
    let mut pieces = vec![BlockPiece::Omega; t];
    if t % 2 == 1 {
        let top = 1usize << big[0];
        let has_top_hook = lambda.hooks().iter().any(|h| h.length == top);
        pieces[if has_top_hook { 0 } else { 1 }] = BlockPiece::Gamma;
    }
    let mut element = Perm::identity(n);
    let mut parts = Vec::new();
    for (b, piece) in layout.nontrivial_blocks().zip(&pieces) {
        let size = 1usize << b.exponent;
        let local = match piece {
            BlockPiece::Omega => {
                parts.push(size);
                block_omega(2, b.exponent)
            }
            BlockPiece::Gamma => {
                parts.extend([size / 2, size / 2]);
                block_gamma(b.exponent)
            }
        };
        element = element.then(&local.embed(n, b.offset));
    }
    if n % 2 == 1 {
        parts.push(1);
    }
    let cycle_type = Partition::from_unsorted(parts);
    debug_assert_eq!(element.cycle_type(), cycle_type);
    Ok(GLambda {
        lambda: lambda.clone(),
        cycle_type,
        element,
        pieces,
    })
}

/// Checks that `g` lies in `P_n` by decomposing it blockwise into wreath
/// coordinates.
pub fn in_sylow(g: &Perm, layout: &SylowLayout) -> bool {
    wreath::block_coords(g, layout).is_ok()
}

/// An odd permutation normalizing `P_n` whose cycle type is `p^{k-1}` cycles
/// of length `p - 1` (plus fixed points), where `p^k` is a base-`p` digit of
/// `n`. Found by exhaustive search over that cycle type.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizerSearch {
    pub n: usize,
    pub p: usize,
    pub cycle_types: Vec<CycleType>,
    pub candidates: usize,
    pub found: Option<Perm>,
}

pub fn find_odd_normalizer(n: usize, p: usize) -> Result<NormalizerSearch> {
    use itertools::Itertools;
    if p == 2 {
        return Err(Error::OutOfRange(
            "the odd normalizer search is for odd p".into(),
        ));
    }
    if n > 10 {
        return Err(Error::OutOfRange(format!(
            "exhaustive search over S_{n} is too large"
        )));
    }
    let layout = SylowLayout::new(n, p)?;
    let gens = sylow_generators(n, p)?;
    let group = EnumeratedGroup::sylow(n, p, default_budget())?;
    let cycle_types: Vec<CycleType> = layout
        .nontrivial_blocks()
        .map(|b| {
            let cycles = p.pow(b.exponent - 1);
            let mut parts = vec![p - 1; cycles];
            parts.resize(n - (p - 2) * cycles, 1);
            Partition::from_unsorted(parts)
        })
        .unique()
        .collect();
    let mut candidates = 0;
    for images in (0..n).permutations(n) {
        let s = Perm::from_images(images).expect("permutation");
        if s.is_even() || !cycle_types.contains(&s.cycle_type()) {
            continue;
        }
        candidates += 1;
        if gens.iter().all(|g| group.contains(&g.conjugate_by(&s))) {
            return Ok(NormalizerSearch {
                n,
                p,
                cycle_types,
                candidates,
                found: Some(s),
            });
        }
    }
    Ok(NormalizerSearch {
        n,
        p,
        cycle_types,
        candidates,
        found: None,
    })
}
