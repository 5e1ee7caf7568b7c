//! Coefficient fields: the rationals or a prime field `F_p`.
//!
//! Coefficients are carried as [`BigRational`] in both cases. Over `F_p` every
//! stored value is an integer in `0..p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 61;

/// A prime modulus, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 2^61")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(Prime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(FieldSpec::PrimeField(Prime::new(p)?))
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p.get(),
        }
    }

    /// Parses `q` or `fp:<p>`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus {rest:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(format!("unknown field {s:?}; expected q or fp:<p>")))
    }

    /// Brings an integer into canonical form.
    pub fn from_int(self, n: BigInt) -> BigRational {
        match self {
            FieldSpec::Rationals => BigRational::from_integer(n),
            FieldSpec::PrimeField(p) => {
                BigRational::from_integer(n.mod_floor(&BigInt::from(p.get())))
            }
        }
    }

    /// Brings an arbitrary rational into canonical form.
    ///
    /// Fails over `F_p` when the denominator is divisible by `p`.
    pub fn normalize(self, c: BigRational) -> Result<BigRational> {
        match self {
            FieldSpec::Rationals => Ok(c),
            FieldSpec::PrimeField(p) => {
                let modulus = BigInt::from(p.get());
                let den = c.denom().mod_floor(&modulus);
                if den.is_zero() {
                    return Err(Error::InvalidField(format!(
                        "denominator {} is not invertible mod {}",
                        c.denom(),
                        p.get()
                    )));
                }
                let den = den.to_u64().expect("reduced below 2^61");
                let inv = BigInt::from(inv_mod(den, p.get()));
                Ok(BigRational::from_integer(
                    (c.numer() * inv).mod_floor(&modulus),
                ))
            }
        }
    }

    /// Canonical form of an already-canonical value after a ring operation.
    pub(crate) fn reduce(self, c: BigRational) -> BigRational {
        match self {
            FieldSpec::Rationals => c,
            FieldSpec::PrimeField(p) => {
                debug_assert!(c.is_integer());
                BigRational::from_integer(c.to_integer().mod_floor(&BigInt::from(p.get())))
            }
        }
    }

    pub(crate) fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a + b)
    }

    pub(crate) fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a * b)
    }

    pub(crate) fn neg(self, a: &BigRational) -> BigRational {
        self.reduce(-a)
    }

    /// Multiplicative inverse; `None` for zero.
    pub(crate) fn inv(self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(a.recip()),
            FieldSpec::PrimeField(p) => {
                let v = a.to_integer().to_u64().expect("canonical F_p value");
                Some(BigRational::from_integer(BigInt::from(inv_mod(v, p.get()))))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{}", p.get()),
        }
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        (a % p) * (b % p) % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime via Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}
