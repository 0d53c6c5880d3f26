//! Exact field elements: rationals with arbitrary-precision parts, or
//! residues modulo a prime `p >= 5`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field descriptor shared by every scalar of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals.
    Rational,
    /// The prime field with the given modulus.
    Prime(u64),
}

impl Field {
    /// Builds a prime field, rejecting composite moduli and the
    /// characteristics 2 and 3 where halving or linearization break down.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 5 {
            return Err(Error::Field(format!("prime fields need p >= 5, got {p}")));
        }
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Field(format!("modulus {p} exceeds 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp {
                value: 0,
                modulus: p,
            },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::Fp {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Parses a scalar string: `"p/q"` or `"n"` over Q, plain decimals over
    /// F_p (a leading minus sign is accepted and reduced).
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match self {
            Field::Rational => {
                let bad = || Error::Scalar(format!("invalid rational {text:?}"));
                let value = match text.split_once('/') {
                    Some((n, d)) => {
                        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                        if d.is_zero() {
                            return Err(Error::Scalar(format!("zero denominator in {text:?}")));
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(BigInt::from_str(text).map_err(|_| bad())?),
                };
                Ok(Scalar::Rational(value))
            }
            Field::Prime(p) => {
                let n = BigInt::from_str(text)
                    .map_err(|_| Error::Scalar(format!("invalid F_{p} element {text:?}")))?;
                let r = n.mod_floor(&BigInt::from(p));
                Ok(Scalar::Fp {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                })
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept reduced with a positive
/// denominator (guaranteed by `BigRational`); residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch(self.field(), other.field())
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (
                Scalar::Fp {
                    value: a,
                    modulus: p,
                },
                Scalar::Fp {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Ok(Scalar::Fp {
                value: (a + b) % p,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a - b)),
            (
                Scalar::Fp {
                    value: a,
                    modulus: p,
                },
                Scalar::Fp {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Ok(Scalar::Fp {
                value: (a + p - b) % p,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (
                Scalar::Fp {
                    value: a,
                    modulus: p,
                },
                Scalar::Fp {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Ok(Scalar::Fp {
                value: a * b % p,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.checked_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        match self {
            _ if self.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Fp { value, modulus } => Ok(Scalar::Fp {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// Canonical string form: `"n"` or `"p/q"` over Q, the residue over F_p.
    pub fn to_canonical(&self) -> String {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_string(),
            Scalar::Rational(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Fp { value, .. } => value.to_string(),
        }
    }

    /// Integer representative for F_p scalars (used by exhaustive search).
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    /// Ordering used for canonical output; compares residues over F_p and
    /// numeric values over Q.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Fp { value: a, .. }, Scalar::Fp { value: b, .. }) => a.cmp(b),
            _ => self.field().cmp(&other.field()),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

// Operator forms panic on field mismatch; every container in this crate
// validates that its scalars share one field at construction.
macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical())
    }
}

/// Field descriptor as written in files: `"Q"` or `{"Fp": p}`.
impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            Field::Rational => s.serialize_str("Q"),
            Field::Prime(p) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("Fp", p)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Name(String),
            Prime {
                #[serde(rename = "Fp")]
                fp: u64,
            },
        }
        match Raw::deserialize(d)? {
            Raw::Name(n) if n == "Q" => Ok(Field::Rational),
            Raw::Name(n) => Err(serde::de::Error::custom(format!(
                "unknown field {n:?}, expected \"Q\" or {{\"Fp\": p}}"
            ))),
            Raw::Prime { fp } => Field::prime(fp).map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let q = Field::Rational;
        let s = q.ratio(1, 2).unwrap() + q.ratio(1, 3).unwrap();
        assert_eq!(s, q.ratio(5, 6).unwrap());
        assert_eq!(s.to_canonical(), "5/6");
    }

    #[test]
    fn fp_product() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_i64(3) * f5.from_i64(4), f5.from_i64(2));
    }

    #[test]
    fn reduced_on_construction() {
        let q = Field::Rational;
        let x = q.parse("2/4").unwrap();
        assert_eq!(x.to_canonical(), "1/2");
        assert_eq!(q.parse("3/-6").unwrap().to_canonical(), "-1/2");
        assert_eq!(Field::Prime(5).parse("-1").unwrap().to_canonical(), "4");
    }

    #[test]
    fn division_errors() {
        let q = Field::Rational;
        assert!(matches!(
            q.one().checked_div(&q.zero()),
            Err(Error::DivisionByZero)
        ));
        let f7 = Field::prime(7).unwrap();
        assert!(matches!(
            q.one().checked_add(&f7.one()),
            Err(Error::FieldMismatch(..))
        ));
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn small_primes_rejected() {
        assert!(Field::prime(3).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn fp_inverse() {
        let f7 = Field::prime(7).unwrap();
        for n in 1..7 {
            let x = f7.from_i64(n);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn field_json() {
        assert_eq!(
            serde_json::to_string(&Field::Prime(5)).unwrap(),
            r#"{"Fp":5}"#
        );
        let f: Field = serde_json::from_str(r#""Q""#).unwrap();
        assert_eq!(f, Field::Rational);
        assert!(serde_json::from_str::<Field>(r#"{"Fp":4}"#).is_err());
    }
}
