//! Exact scalars: the rationals or a prime field `F_p`.
//!
//! A [`Field`] is fixed per document; arithmetic between scalars of
//! different fields is a programming error and panics. Input layers reject
//! mixed-field data before any arithmetic runs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Input(format!("prime {p} too large (max 2^32)")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Input("zero denominator".into()));
        }
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Input(format!("{den} is zero in {self}")))?;
        Ok(&self.from_i64(num) * &inv)
    }

    /// Parses the canonical text form: `"n"` or `"p/q"` over the rationals,
    /// an integer in `[0, p)` over `F_p`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match self {
            Field::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational numerator in {text:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Input(format!("bad rational denominator in {text:?}")))?;
                if den.is_zero() {
                    return Err(Error::Input(format!("zero denominator in {text:?}")));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                let value: u64 = text
                    .parse()
                    .map_err(|_| Error::Input(format!("bad F_{p} element {text:?}")))?;
                self.from_canonical_u64(value)
            }
        }
    }

    /// Prime-field element given as an integer that must lie in `[0, p)`.
    pub fn from_canonical_u64(self, value: u64) -> Result<Scalar> {
        match self {
            Field::Prime(p) if value < p => Ok(Scalar::Prime { value, modulus: p }),
            Field::Prime(p) => Err(Error::Input(format!("{value} not in [0, {p})"))),
            Field::Rational => Ok(self.from_i64(value as i64)),
        }
    }

    pub fn descriptor(self) -> String {
        match self {
            Field::Rational => "rational".to_string(),
            Field::Prime(p) => format!("prime:{p}"),
        }
    }

    pub fn parse_descriptor(text: &str) -> Result<Field> {
        match text {
            "rational" => Ok(Field::Rational),
            _ => {
                let p = text
                    .strip_prefix("prime:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Input(format!("unknown field descriptor {text:?}")))?;
                Field::prime(p)
            }
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

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `self += a * b` without an intermediate allocation on the prime path.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (self, a, b) {
            (Scalar::Rational(s), Scalar::Rational(a), Scalar::Rational(b)) => {
                *s += a * b;
            }
            (
                Scalar::Prime { value, modulus },
                Scalar::Prime { value: x, modulus: p },
                Scalar::Prime { value: y, modulus: q },
            ) if modulus == p && p == q => {
                let m = *modulus as u128;
                *value = ((*value as u128 + (*x as u128) * (*y as u128)) % m) as u64;
            }
            (s, a, b) => panic!("mixed fields: {} += {} * {}", s.field(), a.field(), b.field()),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn mixed(op: &str, a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed fields in {op}: {} and {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mixed("add", self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mixed("mul", self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    // BigRational keeps lowest terms with a positive denominator.
                    debug_assert!(r.denom().is_positive());
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
