//! Exact coefficient fields.
//!
//! Everything in the crate is generic over [`Field`]. Two implementations
//! exist: [`PrimeField`] (integers modulo a prime below 2^31) and
//! [`Rationals`] (arbitrary precision fractions). No floating point anywhere.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The default modulus: the classical computer-algebra prime.
pub const DEFAULT_PRIME: u64 = 32003;

/// Run-time descriptor of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "p")]
pub enum CoefficientField {
    Rationals,
    PrimeField(u64),
}

impl Default for CoefficientField {
    fn default() -> Self {
        CoefficientField::PrimeField(DEFAULT_PRIME)
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for CoefficientField {
    type Err = Error;

    /// Accepts `QQ`, `Q`, `rationals`, a bare prime, or `GF(p)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "qq" | "q" | "rationals" => return Ok(CoefficientField::Rationals),
            _ => {}
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("unrecognised field '{s}'")))?;
        PrimeField::new(p)?;
        Ok(CoefficientField::PrimeField(p))
    }
}

/// Exact field arithmetic on an element type carried separately from the
/// field context (so prime-field elements stay a plain `u32`).
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> CoefficientField;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of `num/den`; `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    /// A uniformly random element of the field (bounded integers for QQ).
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Signed rational representative used for printing. Prime-field
    /// elements print as their symmetric residue.
    fn to_rational(&self, a: &Self::Elem) -> BigRational;
    /// The characteristic if this is a prime field.
    fn prime(&self) -> Option<u64>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Random nonzero element.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let a = self.random(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }

    fn format(&self, a: &Self::Elem) -> String {
        self.to_rational(a).to_string()
    }
}

/// Integers modulo a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "field modulus {p} is not a prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn descriptor(&self) -> CoefficientField {
        CoefficientField::PrimeField(self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let (a, b) = (*a as u64, *b as u64);
        (if a >= b { a - b } else { a + self.p - b }) as u32
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            (self.p - *a as u64) as u32
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(self.reduce_i64(t))
    }
    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u32> {
        let p = BigInt::from(self.p);
        let reduce = |x: &BigInt| -> u32 {
            let r = ((x % &p) + &p) % &p;
            r.to_u64().unwrap() as u32
        };
        let d = reduce(den);
        self.inv(&d).map(|di| self.mul(&reduce(num), &di))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.random_range(0..self.p) as u32
    }
    fn to_rational(&self, a: &u32) -> BigRational {
        let a = *a as i64;
        let p = self.p as i64;
        let s = if a > p / 2 { a - p } else { a };
        BigRational::from_integer(BigInt::from(s))
    }
    fn prime(&self) -> Option<u64> {
        Some(self.p)
    }
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

/// Range of the random integers used as "general" rational coefficients.
const RATIONAL_RANDOM_BOUND: i64 = 100;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> CoefficientField {
        CoefficientField::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.random_range(-RATIONAL_RANDOM_BOUND..=RATIONAL_RANDOM_BOUND))
    }
    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn prime(&self) -> Option<u64> {
        None
    }
}

/// True when the printed representative of `a` is negative.
pub fn is_negative<F: Field>(field: &F, a: &F::Elem) -> bool {
    field.to_rational(a).is_negative()
}
