//! Exact scalar fields: arbitrary-precision rationals and prime fields.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("cannot parse scalar {0:?}")]
    Malformed(String),
    #[error("scalar {text:?} belongs to F_{found}, expected F_{expected}")]
    WrongModulus {
        text: String,
        found: u64,
        expected: u64,
    },
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// The ground field a scalar type lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl FieldKind {
    pub fn characteristic(self) -> u64 {
        match self {
            FieldKind::Rational => 0,
            FieldKind::Prime(p) => p,
        }
    }
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = ScalarParseError;

    /// Accepts `Q` or `Fp:<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldKind::Rational);
        }
        if let Some(rest) = t.strip_prefix("Fp:") {
            if let Ok(p) = rest.trim().parse::<u64>() {
                if is_prime(p) {
                    return Ok(FieldKind::Prime(p));
                }
            }
        }
        Err(ScalarParseError::Malformed(s.to_string()))
    }
}

pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn field() -> FieldKind;
    fn from_i64(v: i64) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn parse_scalar(s: &str) -> Result<Self, ScalarParseError>;
    /// Serialized form: `a/b` (or `a`) over Q, `k mod p` over F_p.
    fn encode(&self) -> String;
    /// All field elements, for finite fields only.
    fn elements() -> Option<Vec<Self>>;
}

impl Scalar for BigRational {
    fn field() -> FieldKind {
        FieldKind::Rational
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_scalar(s: &str) -> Result<Self, ScalarParseError> {
        let t = s.trim();
        let bad = || ScalarParseError::Malformed(s.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ScalarParseError::ZeroDenominator(s.to_string()));
                }
                Ok(BigRational::new(n, d))
            }
            None => {
                let n: BigInt = t.parse().map_err(|_| bad())?;
                Ok(BigRational::from_integer(n))
            }
        }
    }

    fn encode(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }
}

/// Residue class modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "modulus must be prime");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME;
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn field() -> FieldKind {
        FieldKind::Prime(P)
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    /// Accepts `k mod p`, a bare integer `k`, or `a/b`.
    fn parse_scalar(s: &str) -> Result<Self, ScalarParseError> {
        let t = s.trim();
        let bad = || ScalarParseError::Malformed(s.to_string());
        let int = |x: &str| -> Result<Self, ScalarParseError> {
            let v: BigInt = x.trim().parse().map_err(|_| bad())?;
            let r = v.mod_floor_u64(P);
            Ok(Fp(r))
        };
        if let Some((k, p)) = t.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            if p != P {
                return Err(ScalarParseError::WrongModulus {
                    text: s.to_string(),
                    found: p,
                    expected: P,
                });
            }
            return int(k);
        }
        if let Some((n, d)) = t.split_once('/') {
            let d = int(d)?;
            let inv = d
                .inverse()
                .ok_or_else(|| ScalarParseError::ZeroDenominator(s.to_string()))?;
            return Ok(int(n)? * inv);
        }
        int(t)
    }

    fn encode(&self) -> String {
        format!("{} mod {}", self.0, P)
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = BigInt::from(p);
        let mut r = self % &m;
        if r.is_negative() {
            r += &m;
        }
        r.to_string().parse().expect("residue fits in u64")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_inverse() {
        for v in 1..7 {
            let a = F7::new(v);
            assert_eq!(a * a.inverse().unwrap(), F7::one());
        }
        assert!(F7::zero().inverse().is_none());
    }

    #[test]
    fn parse_round_trip() {
        let q = BigRational::parse_scalar("-6/4").unwrap();
        assert_eq!(q.encode(), "-3/2");
        assert_eq!(BigRational::parse_scalar("5").unwrap().encode(), "5");
        assert_eq!(F7::parse_scalar("-1").unwrap(), F7::new(6));
        assert_eq!(F7::parse_scalar("3 mod 7").unwrap().encode(), "3 mod 7");
        assert_eq!(F7::parse_scalar("1/2").unwrap(), F7::new(4));
        assert!(F7::parse_scalar("3 mod 5").is_err());
        assert!(BigRational::parse_scalar("1/0").is_err());
    }

    #[test]
    fn field_kind_parse() {
        assert_eq!("Q".parse::<FieldKind>().unwrap(), FieldKind::Rational);
        assert_eq!("Fp:5".parse::<FieldKind>().unwrap(), FieldKind::Prime(5));
        assert!("Fp:6".parse::<FieldKind>().is_err());
    }
}
