use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 31;

/// A prime modulus no larger than 2^31, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
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

/// The scalar domain of a module or matrix.
///
/// `Reals` and `Complexes` carry no arithmetic of their own. Integer
/// matrices tagged with them are ranked over the rationals, and the group
/// condition over them is answered combinatorially.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Gf(Prime),
    Rationals,
    Reals,
    Complexes,
}

impl FieldTag {
    pub fn gf(p: u64) -> Result<Self> {
        Prime::new(p).map(FieldTag::Gf)
    }

    pub fn is_computable(self) -> bool {
        matches!(self, FieldTag::Gf(_) | FieldTag::Rationals)
    }

    pub fn require_computable(self) -> Result<()> {
        if self.is_computable() {
            Ok(())
        } else {
            Err(Error::FieldNotComputable(self))
        }
    }

    /// Field used for rank computations of integer matrices: ℝ and ℂ map to ℚ.
    pub fn rank_delegate(self) -> FieldTag {
        match self {
            FieldTag::Reals | FieldTag::Complexes => FieldTag::Rationals,
            other => other,
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldTag::Gf(p) => p.get(),
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, value: i64) -> Scalar {
        match self {
            FieldTag::Gf(p) => {
                let p = p.get();
                Scalar::Gf { value: value.rem_euclid(p as i64) as u64, p }
            }
            _ => Scalar::Rational(BigRational::from_integer(BigInt::from(value))),
        }
    }

    /// Every element of GF(p) in increasing residue order; `None` for infinite fields.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            FieldTag::Gf(p) => Some((0..p.get()).map(|v| Scalar::Gf { value: v, p: p.get() }).collect()),
            _ => None,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Gf(p) => write!(f, "gf:{}", p.get()),
            FieldTag::Rationals => f.write_str("q"),
            FieldTag::Reals => f.write_str("r"),
            FieldTag::Complexes => f.write_str("c"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(FieldTag::Rationals),
            "r" => Ok(FieldTag::Reals),
            "c" => Ok(FieldTag::Complexes),
            other => {
                let p = other
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::BadFieldSpec(s.to_string()))?;
                FieldTag::gf(p)
            }
        }
    }
}

impl Serialize for FieldTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldTag {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An exact field element: a residue mod p or a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Gf { value: u64, p: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Gf { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Gf { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Gf { value, p } => Scalar::Gf { value: pow_mod(*value, p - 2, *p), p: *p },
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        }
    }

    /// True for an integer value (always true in GF(p)).
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Gf { .. } => true,
            Scalar::Rational(r) => r.is_integer(),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Gf { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => {
                let sign = if r.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", r.numer().abs(), r.denom())
            }
        }
    }
}

fn mismatch() -> ! {
    panic!("arithmetic between scalars of different fields")
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Gf { value: a, p }, Scalar::Gf { value: b, p: q }) if p == q => {
                Scalar::Gf { value: (a + b) % p, p: *p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Gf { value: a, p }, Scalar::Gf { value: b, p: q }) if p == q => {
                Scalar::Gf { value: (a + p - b) % p, p: *p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => mismatch(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Gf { value: a, p }, Scalar::Gf { value: b, p: q }) if p == q => {
                Scalar::Gf { value: a * b % p, p: *p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Gf { value, p } => Scalar::Gf { value: (p - value) % p, p: *p },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
