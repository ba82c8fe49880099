//! Exact scalar arithmetic.
//!
//! Two coefficient fields are supported: the rationals (arbitrary precision,
//! always in lowest terms) and prime fields `F_p` with `p < 2^32`. Elements
//! do not carry their field; every operation goes through a [`Field`] value,
//! which for `F_p` holds the modulus.

mod matrix;
mod sparse;

pub use matrix::Matrix;
pub use sparse::{sparse_rank, Echelon, SparseVec};

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default prime for randomized Artinian reductions.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (need 2 <= p < 2^32)")]
    ModulusOutOfRange(u64),
    #[error("unknown field `{0}` (expected `Q` or `F <p>`)")]
    UnknownField(String),
}

/// Runtime description of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Validates the characteristic of a prime field.
    pub fn validate(self) -> Result<Self, ArithError> {
        if let FieldSpec::PrimeField(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ArithError;

    /// Accepts `Q`, `F 7`, `F7`, `F_7` and `GF(7)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('F'))
            .map(|r| r.trim_start_matches('_').trim());
        match digits.and_then(|d| d.parse::<u64>().ok()) {
            Some(p) => FieldSpec::PrimeField(p).validate(),
            None => Err(ArithError::UnknownField(s.to_string())),
        }
    }
}

/// A field with exact arithmetic.
///
/// Implementors are small `Copy`-like descriptors; elements are plain values
/// whose meaning depends on the descriptor they are used with.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ArithError>;
    /// Canonical text form: `p/q` or `n` over Q, the residue `0..p-1` over `F_p`.
    fn render(&self, a: &Self::Elem) -> String;
    /// Uniformly random element (prime fields) or a small random integer (Q).
    fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a -= b * c`
    fn sub_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.sub(a, &self.mul(b, c));
    }

    /// Whether the element renders as an integer literal.
    fn is_integral(&self, _a: &Self::Elem) -> bool {
        true
    }

    /// A nonzero scalar `c` such that `c * coeffs` is the canonical
    /// representative of the line spanned by `coeffs`: coprime integers with a
    /// positive leading entry over Q, leading entry one over `F_p`.
    fn canonical_multiplier(&self, coeffs: &[Self::Elem]) -> Self::Elem;
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
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
        if a.is_one() {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, ArithError> {
        if a.is_zero() {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-9..=9))
    }
    fn sub_mul_assign(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        if b.is_zero() || c.is_zero() {
            return;
        }
        *a -= b * c;
    }
    fn is_integral(&self, a: &BigRational) -> bool {
        a.is_integer()
    }
    fn canonical_multiplier(&self, coeffs: &[BigRational]) -> BigRational {
        let lcm = coeffs
            .iter()
            .filter(|v| !v.is_zero())
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scaled: Vec<BigInt> = coeffs
            .iter()
            .map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if gcd.is_zero() {
            return BigRational::one();
        }
        let negative = scaled
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(|v| v.sign() == Sign::Minus);
        let m = BigRational::new(lcm, gcd);
        if negative {
            -m
        } else {
            m
        }
    }
}

/// The prime field `F_p`, elements stored as canonical residues `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if !(2..(1u64 << 32)).contains(&p) {
            return Err(ArithError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64, ArithError> {
        if *a == 0 {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self.pow(*a, self.p - 2))
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn sub_mul_assign(&self, a: &mut u64, b: &u64, c: &u64) {
        let prod = b * c % self.p;
        *a = if *a >= prod { *a - prod } else { *a + self.p - prod };
    }
    fn canonical_multiplier(&self, coeffs: &[u64]) -> u64 {
        coeffs
            .iter()
            .find(|c| **c != 0)
            .map(|c| self.inv(c).expect("nonzero"))
            .unwrap_or(1)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `binomial(n, k)` as `u128`; `None` on overflow. Zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Signed binomial helper: zero when `k < 0` or `k > n`.
pub fn binomial_i(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64).expect("binomial overflow") as i128
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_sum_is_exact() {
        let f = Rationals;
        assert_eq!(f.add(&q(1, 2), &q(1, 3)), q(5, 6));
    }

    #[test]
    fn rational_normalizes() {
        let x = q(2, 4);
        assert_eq!(x.numer(), &BigInt::from(1));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(Rationals.render(&q(-6, -4)), "3/2");
        assert_eq!(Rationals.render(&q(4, -2)), "-2");
    }

    #[test]
    fn prime_field_product() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.inv(&3).unwrap(), 5);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rationals.inv(&q(0, 1)), Err(ArithError::DivisionByZero));
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.div(&1, &0), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn prime_field_validation() {
        assert_eq!(PrimeField::new(9), Err(ArithError::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(ArithError::ModulusOutOfRange(1)));
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("F 101".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(101));
        assert_eq!("F_2".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(2));
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(7));
        assert!("F 8".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn canonical_line_representatives() {
        let coeffs = [q(-1, 2), q(0, 1), q(3, 4)];
        let m = Rationals.canonical_multiplier(&coeffs);
        let scaled: Vec<_> = coeffs.iter().map(|c| c * &m).collect();
        assert_eq!(scaled, vec![q(2, 1), q(0, 1), q(-3, 1)]);
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.canonical_multiplier(&[0, 3, 1]), 5);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), Some(6));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial_i(5, -1), 0);
        assert_eq!(binomial(60, 30), Some(118264581564861424));
    }

    proptest::proptest! {
        #[test]
        fn long_products_match_cross_multiplication(
            fracs in proptest::collection::vec((-1000i64..1000, 1i64..1000), 200)
        ) {
            let f = Rationals;
            let mut prod = f.one();
            let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
            for (n, d) in &fracs {
                prod = f.mul(&prod, &q(*n, *d));
                num *= *n;
                den *= *d;
            }
            // a/b == c/d  <=>  a*d == b*c
            proptest::prop_assert_eq!(prod.numer() * &den, prod.denom() * &num);
            proptest::prop_assert!(prod.denom() > &BigInt::from(0));
        }
    }
}
