//! Exact arithmetic in `Q(ζ_m)` and in quadratic extensions `Q(ζ_m)[√D]`.
//!
//! Elements of `Q(ζ_m)` are stored in the power basis `1, ζ, …, ζ^{φ(m)-1}`
//! and reduced modulo the cyclotomic polynomial `Φ_m`, so equality is
//! coefficient equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

fn cyclotomic_cache() -> &'static RwLock<HashMap<u32, Vec<i64>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of `Φ_m`, constant term first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(c) = cyclotomic_cache().read().unwrap().get(&m) {
        return c.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = exact_divide(&num, &cyclotomic_polynomial(d));
    }
    cyclotomic_cache().write().unwrap().insert(m, num.clone());
    num
}

/// Quotient of `num` by the monic polynomial `den`, assuming it divides.
fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

/// Reduces a polynomial in `ζ_m` (given as integer coefficients of
/// `ζ^0 … ζ^{len-1}`) modulo `Φ_m`.
fn reduce<T>(mut coeffs: Vec<T>, m: u32) -> Vec<T>
where
    T: Clone + Zero + Sub<Output = T> + Mul<i64, Output = T>,
{
    let phi = cyclotomic_polynomial(m);
    let deg = phi.len() - 1;
    for i in (deg..coeffs.len()).rev() {
        let c = coeffs[i].clone();
        if c.is_zero() {
            continue;
        }
        for (j, &p) in phi.iter().enumerate() {
            if p != 0 {
                let k = i - deg + j;
                coeffs[k] = coeffs[k].clone() - c.clone() * p;
            }
        }
    }
    coeffs.truncate(deg);
    coeffs.resize(deg, T::zero());
    coeffs
}

/// `ζ_m^exponent` as an element of `Z[ζ_m]` in the reduced power basis.
pub fn root_of_unity_coeffs(m: u32, exponent: u32) -> Vec<i64> {
    let mut v = vec![0i64; m as usize];
    v[(exponent % m) as usize] = 1;
    reduce(v, m)
}

/// Reduces a group-ring vector `Σ_k c_k ζ_m^k` (length `m`) into `Z[ζ_m]`.
pub fn reduce_group_ring(counts: &[i128], m: u32) -> Vec<i128> {
    assert_eq!(counts.len(), m as usize);
    struct W(i128);
    // local newtype so `reduce` can multiply by i64 coefficients
    impl Clone for W {
        fn clone(&self) -> Self {
            W(self.0)
        }
    }
    impl Zero for W {
        fn zero() -> Self {
            W(0)
        }
        fn is_zero(&self) -> bool {
            self.0 == 0
        }
    }
    impl Add for W {
        type Output = W;
        fn add(self, o: W) -> W {
            W(self.0 + o.0)
        }
    }
    impl Sub for W {
        type Output = W;
        fn sub(self, o: W) -> W {
            W(self.0 - o.0)
        }
    }
    impl Mul<i64> for W {
        type Output = W;
        fn mul(self, o: i64) -> W {
            W(self.0 * o as i128)
        }
    }
    reduce(counts.iter().map(|&c| W(c)).collect(), m)
        .into_iter()
        .map(|w| w.0)
        .collect()
}

#[derive(Clone)]
struct Q(BigRational);

impl Zero for Q {
    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}
impl Add for Q {
    type Output = Q;
    fn add(self, o: Q) -> Q {
        Q(self.0 + o.0)
    }
}
impl Sub for Q {
    type Output = Q;
    fn sub(self, o: Q) -> Q {
        Q(self.0 - o.0)
    }
}
impl Mul<i64> for Q {
    type Output = Q;
    fn mul(self, o: i64) -> Q {
        Q(self.0 * BigInt::from(o))
    }
}

fn reduce_rational(coeffs: Vec<BigRational>, m: u32) -> Vec<BigRational> {
    reduce(coeffs.into_iter().map(Q).collect(), m)
        .into_iter()
        .map(|q| q.0)
        .collect()
}

/// An element of the cyclotomic field `Q(ζ_m)`.
///
/// Equality compares values, so elements of different orders can be equal.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn rational(order: u32, q: BigRational) -> Self {
        let mut c = Cyclotomic::zero(order);
        c.coeffs[0] = q;
        c
    }

    pub fn integer(order: u32, k: i64) -> Self {
        Cyclotomic::rational(order, BigRational::from_integer(k.into()))
    }

    pub fn root_of_unity(order: u32, exponent: u32) -> Self {
        Cyclotomic::from_integer_coeffs(order, &root_of_unity_coeffs(order, exponent))
    }

    /// From already reduced integer coefficients.
    pub fn from_integer_coeffs<T: Into<BigInt> + Copy>(order: u32, coeffs: &[T]) -> Self {
        assert_eq!(coeffs.len(), euler_phi(order) as usize);
        Cyclotomic {
            order,
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    /// From an arbitrary polynomial in `ζ_order` with rational coefficients.
    pub fn from_polynomial(order: u32, mut coeffs: Vec<BigRational>) -> Self {
        let len = coeffs.len().max(order as usize);
        coeffs.resize(len, BigRational::zero());
        // fold exponents ≥ order using ζ^order = 1
        let mut folded = vec![BigRational::zero(); order as usize];
        for (i, c) in coeffs.into_iter().enumerate() {
            folded[i % order as usize] += c;
        }
        Cyclotomic {
            order,
            coeffs: reduce_rational(folded, order),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Re-expresses this element in `Q(ζ_target)`; `order` must divide `target`.
    pub fn lift(&self, target: u32) -> Cyclotomic {
        if target == self.order {
            return self.clone();
        }
        assert_eq!(
            target % self.order,
            0,
            "cannot lift Q(ζ_{}) into Q(ζ_{target})",
            self.order
        );
        let step = (target / self.order) as usize;
        let mut poly = vec![BigRational::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Cyclotomic {
            order: target,
            coeffs: reduce_rational(poly, target),
        }
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = self.order.lcm(&other.order);
        (self.lift(m), other.lift(m))
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Complex conjugate (`ζ ↦ ζ^{-1}`).
    pub fn conj(&self) -> Cyclotomic {
        let m = self.order as usize;
        let mut poly = vec![BigRational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[(m - i) % m] = c.clone();
        }
        Cyclotomic {
            order: self.order,
            coeffs: reduce_rational(poly, self.order),
        }
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        Cyclotomic {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        self + &(-other)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let m = a.order as usize;
        let mut poly = vec![BigRational::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.coeffs.iter().enumerate() {
                poly[(i + j) % m] += x * y;
            }
        }
        Cyclotomic {
            order: a.order,
            coeffs: reduce_rational(poly, a.order),
        }
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..)
        .find(|d| d * d > n || n.is_multiple_of(*d))
        .map(|d| if d * d > n { n } else { d })
        .unwrap()
}

fn prime_power_base(m: u32) -> Option<u32> {
    if m < 2 {
        return None;
    }
    let p = smallest_prime_factor(m as u64) as u32;
    let mut r = m;
    while r.is_multiple_of(p) {
        r /= p;
    }
    (r == 1).then_some(p)
}

/// Splits `d` into `(s, d0)` with `d = s² · d0` and `d0` squarefree.
pub fn squarefree_part(d: i64) -> (i64, i64) {
    assert!(d != 0, "radicand must be nonzero");
    let (mut s, mut rest) = (1i64, d.abs());
    let mut k = 2;
    while k * k <= rest {
        while rest % (k * k) == 0 {
            rest /= k * k;
            s *= k;
        }
        k += 1;
    }
    (s, rest * d.signum())
}

/// The principal square root of the squarefree integer `d0` inside
/// `Q(ζ_m)`, when it lies there.
///
/// Only prime-power orders are supported; for those the square roots that
/// lie in `Q(ζ_m)` are `√-1` (`4 | m`), `√±2` (`8 | m`) and `√(±p)` with
/// `±p ≡ 1 mod 4` (odd `p | m`), each given by a Gauss sum.
pub fn sqrt_in_cyclotomic(d0: i64, m: u32) -> Option<Cyclotomic> {
    if d0 == 1 {
        return Some(Cyclotomic::integer(m, 1));
    }
    let p = prime_power_base(m)?;
    if p == 2 {
        return match d0 {
            -1 if m.is_multiple_of(4) => Some(Cyclotomic::root_of_unity(m, m / 4)),
            2 if m.is_multiple_of(8) => Some(
                &Cyclotomic::root_of_unity(m, m / 8) + &Cyclotomic::root_of_unity(m, 7 * m / 8),
            ),
            -2 if m.is_multiple_of(8) => Some(
                &Cyclotomic::root_of_unity(m, m / 8) + &Cyclotomic::root_of_unity(m, 3 * m / 8),
            ),
            _ => None,
        };
    }
    let pstar = if p % 4 == 1 { p as i64 } else { -(p as i64) };
    if d0 != pstar {
        return None;
    }
    // Gauss sum Σ_a (a/p) ζ_p^a equals the principal root of p*.
    let step = m / p;
    let mut poly = vec![BigRational::zero(); m as usize];
    for a in 1..p {
        let legendre = if (1..p).any(|x| (x * x) % p == a) {
            1
        } else {
            -1
        };
        poly[(a * step) as usize] = BigRational::from_integer(legendre.into());
    }
    Some(Cyclotomic::from_polynomial(m, poly))
}

/// An exact value `rat + surd · √radicand` with `rat, surd ∈ Q(ζ_m)`.
///
/// The radicand is kept squarefree, and whenever `√radicand` already lies in
/// `Q(ζ_m)` the surd part is folded into the cyclotomic part, so `{1, √D}` is
/// always a basis and zero/integrality tests are exact. The cyclotomic
/// order must be `1` or a prime power.
#[derive(Clone, Debug)]
pub struct AlgebraicValue {
    rat: Cyclotomic,
    surd: Cyclotomic,
    radicand: i64,
}

impl AlgebraicValue {
    pub fn zero() -> Self {
        AlgebraicValue::from_cyclotomic(Cyclotomic::zero(1))
    }

    pub fn integer(k: i64) -> Self {
        AlgebraicValue::from_cyclotomic(Cyclotomic::integer(1, k))
    }

    pub fn rational(q: BigRational) -> Self {
        AlgebraicValue::from_cyclotomic(Cyclotomic::rational(1, q))
    }

    pub fn root_of_unity(order: u32, exponent: u32) -> Self {
        AlgebraicValue::from_cyclotomic(Cyclotomic::root_of_unity(order, exponent))
    }

    pub fn from_cyclotomic(c: Cyclotomic) -> Self {
        let surd = Cyclotomic::zero(c.order);
        AlgebraicValue {
            rat: c,
            surd,
            radicand: 1,
        }
    }

    /// `rat + surd · √radicand`, normalized.
    pub fn new(rat: Cyclotomic, surd: Cyclotomic, radicand: i64) -> Self {
        let (rat, surd) = rat.common(&surd);
        AlgebraicValue {
            rat,
            surd,
            radicand,
        }
        .normalized()
    }

    /// `√d` for any nonzero integer `d`.
    pub fn sqrt(d: i64) -> Self {
        AlgebraicValue::new(Cyclotomic::zero(1), Cyclotomic::integer(1, 1), d)
    }

    fn normalized(mut self) -> Self {
        if self.surd.is_zero() {
            self.radicand = 1;
            return self;
        }
        let (s, d0) = squarefree_part(self.radicand);
        if s != 1 {
            self.surd = self.surd.scale(&BigRational::from_integer(s.into()));
        }
        self.radicand = d0;
        if let Some(root) = sqrt_in_cyclotomic(d0, self.rat.order.max(1)) {
            let folded = &self.rat + &(&self.surd * &root);
            return AlgebraicValue::from_cyclotomic(folded);
        }
        self
    }

    pub fn order(&self) -> u32 {
        self.rat.order
    }

    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn rational_part(&self) -> &Cyclotomic {
        &self.rat
    }

    pub fn surd_part(&self) -> &Cyclotomic {
        &self.surd
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.surd.is_zero() {
            return None;
        }
        self.rat.as_rational()
    }

    /// The value as a rational integer: no ζ components, no surd, and
    /// denominator one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|k| k.to_i64())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        AlgebraicValue {
            rat: self.rat.scale(q),
            surd: self.surd.scale(q),
            radicand: self.radicand,
        }
        .normalized()
    }

    pub fn conj(&self) -> Self {
        let surd = if self.radicand < 0 {
            -&self.surd.conj()
        } else {
            self.surd.conj()
        };
        AlgebraicValue {
            rat: self.rat.conj(),
            surd,
            radicand: self.radicand,
        }
        .normalized()
    }

    /// `|x|²`, computed as `x · conj(x)`.
    pub fn norm_squared(&self) -> Self {
        self * &self.conj()
    }

    fn merge_radicand(&self, other: &Self) -> i64 {
        match (self.surd.is_zero(), other.surd.is_zero()) {
            (true, _) => other.radicand,
            (_, true) => self.radicand,
            _ => {
                assert_eq!(
                    self.radicand, other.radicand,
                    "values with different radicands do not share a quadratic extension"
                );
                self.radicand
            }
        }
    }

    /// JSON-friendly rendering of the exact coefficients.
    pub fn render(&self) -> AlgebraicJson {
        let fmt = |c: &Cyclotomic| {
            c.coeffs
                .iter()
                .map(|q| format!("{}/{}", q.numer(), q.denom()))
                .collect()
        };
        AlgebraicJson {
            rat: fmt(&self.rat),
            surd: fmt(&self.surd),
            radicand: self.radicand,
            p: self.rat.order,
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl PartialEq for AlgebraicValue {
    fn eq(&self, other: &Self) -> bool {
        if !self.surd.is_zero() && !other.surd.is_zero() && self.radicand != other.radicand {
            return false;
        }
        (self - other).is_zero()
    }
}

impl Eq for AlgebraicValue {}

impl Add for &AlgebraicValue {
    type Output = AlgebraicValue;
    fn add(self, other: &AlgebraicValue) -> AlgebraicValue {
        let d = self.merge_radicand(other);
        AlgebraicValue::new(&self.rat + &other.rat, &self.surd + &other.surd, d)
    }
}

impl Neg for &AlgebraicValue {
    type Output = AlgebraicValue;
    fn neg(self) -> AlgebraicValue {
        AlgebraicValue {
            rat: -&self.rat,
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }
}

impl Sub for &AlgebraicValue {
    type Output = AlgebraicValue;
    fn sub(self, other: &AlgebraicValue) -> AlgebraicValue {
        self + &(-other)
    }
}

impl Mul for &AlgebraicValue {
    type Output = AlgebraicValue;
    fn mul(self, other: &AlgebraicValue) -> AlgebraicValue {
        let d = self.merge_radicand(other);
        let dd = Cyclotomic::integer(1, d);
        let rat = &(&self.rat * &other.rat) + &(&(&self.surd * &other.surd) * &dd);
        let surd = &(&self.rat * &other.surd) + &(&self.surd * &other.rat);
        AlgebraicValue::new(rat, surd, d)
    }
}

impl fmt::Display for AlgebraicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let term = |c: &Cyclotomic| {
            let parts: Vec<String> = c
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .map(|(i, q)| match i {
                    0 => format!("{q}"),
                    1 => format!("{q}*z"),
                    _ => format!("{q}*z^{i}"),
                })
                .collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        write!(f, "({})", term(&self.rat))?;
        if !self.surd.is_zero() {
            write!(f, " + ({})*sqrt({})", term(&self.surd), self.radicand)?;
        }
        if self.rat.order > 2 {
            write!(f, " [z = zeta_{}]", self.rat.order)?;
        }
        Ok(())
    }
}

/// `{"rat": [...], "surd": [...], "radicand": D, "p": m}` with rationals
/// as `"num/den"` strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicJson {
    pub rat: Vec<String>,
    pub surd: Vec<String>,
    pub radicand: i64,
    pub p: u32,
}

impl Serialize for AlgebraicJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AlgebraicValue", 4)?;
        st.serialize_field("rat", &self.rat)?;
        st.serialize_field("surd", &self.surd)?;
        st.serialize_field("radicand", &self.radicand)?;
        st.serialize_field("p", &self.p)?;
        st.end()
    }
}

impl Serialize for AlgebraicValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.render().serialize(s)
    }
}
