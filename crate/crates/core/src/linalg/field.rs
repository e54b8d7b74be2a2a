//! Exact scalars: the rationals with arbitrary-precision integers, and prime
//! fields GF(p) with p < 2^31.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Field {
    /// GF(p), rejecting composite moduli and moduli at or above 2^31.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn modulus(&self) -> Option<u32> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            Field::Rationals => FieldElement(Repr::Q(BigRational::from_integer(v.into()))),
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u32;
                FieldElement(Repr::Fp { v: r, p })
            }
        }
    }

    /// The element `num / den`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(FieldElement(Repr::Q(BigRational::new(num.into(), den.into())))),
            Field::Prime(_) => self.from_i64(num).checked_div(&self.from_i64(den)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            Field::Rationals => FieldElement(Repr::Q(BigRational::from_integer(v.clone()))),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p)).to_u32().expect("residue fits in u32");
                FieldElement(Repr::Fp { v: r, p })
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        match self {
            Field::Rationals => Ok(FieldElement(Repr::Q(q.clone()))),
            Field::Prime(_) => self.from_bigint(q.numer()).checked_div(&self.from_bigint(q.denom())),
        }
    }

    /// Parses an exact entry string: `-?[0-9]+(/[1-9][0-9]*)?` over the
    /// rationals, `[0-9]+` over GF(p) (reduced modulo p).
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let bad = || Error::Parse(format!("invalid entry {s:?}"));
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        match self {
            Field::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let unsigned = num.strip_prefix('-').unwrap_or(num);
                if !digits(unsigned) {
                    return Err(bad());
                }
                let n: BigInt = num.parse().map_err(|_| bad())?;
                let d: BigInt = match den {
                    Some(d) if digits(d) && !d.starts_with('0') => d.parse().map_err(|_| bad())?,
                    Some(_) => return Err(bad()),
                    None => BigInt::one(),
                };
                Ok(FieldElement(Repr::Q(BigRational::new(n, d))))
            }
            Field::Prime(_) => {
                if !digits(s) {
                    return Err(bad());
                }
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    /// Every element of a prime field, in residue order.
    pub fn residues(&self) -> Option<impl Iterator<Item = FieldElement>> {
        match *self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(move |v| FieldElement(Repr::Fp { v, p }))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

/// An element of a [`Field`], always in canonical form: a reduced fraction
/// with positive denominator, or a residue in `[0, p)`. Structural equality
/// is therefore field equality.
///
/// The arithmetic operators panic when the operands come from different
/// fields; the `checked_*` methods report [`Error::DescriptorMismatch`]
/// instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

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

impl FieldElement {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Q(_) => Field::Rationals,
            Repr::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_zero(),
            Repr::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(q) => q.is_one(),
            Repr::Fp { v, .. } => *v == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Q(q) => Some(q),
            Repr::Fp { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Q(_) => None,
            Repr::Fp { v, .. } => Some(*v),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Q(q) => FieldElement(Repr::Q(q.recip())),
            Repr::Fp { v, p } => FieldElement(Repr::Fp {
                v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            }),
        })
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Total order used for canonical eigenvalue listings: by
    /// (numerator, denominator) over the rationals, by residue over GF(p).
    /// This is not the order of the real line.
    pub fn canonical_cmp(&self, other: &FieldElement) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => {
                a.numer().cmp(b.numer()).then_with(|| a.denom().cmp(b.denom()))
            }
            (Repr::Fp { v: a, .. }, Repr::Fp { v: b, .. }) => a.cmp(b),
            _ => panic!("canonical_cmp across fields"),
        }
    }

    /// Sign over the rationals; `None` over GF(p).
    pub fn signum(&self) -> Option<i8> {
        match &self.0 {
            Repr::Q(q) if q.is_zero() => Some(0),
            Repr::Q(q) if q.is_positive() => Some(1),
            Repr::Q(_) => Some(-1),
            Repr::Fp { .. } => None,
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $qop:tt, $fp:expr) => {
        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                match (&self.0, &rhs.0) {
                    (Repr::Q(a), Repr::Q(b)) => FieldElement(Repr::Q(a $qop b)),
                    (Repr::Fp { v: a, p }, Repr::Fp { v: b, p: q }) if p == q => {
                        let f: fn(u64, u64, u64) -> u64 = $fp;
                        FieldElement(Repr::Fp { v: f(*a as u64, *b as u64, *p as u64) as u32, p: *p })
                    }
                    _ => panic!("arithmetic across different fields"),
                }
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, +, |a, b, p| (a + b) % p);
binop!(Sub, sub, -, |a, b, p| (a + p - b) % p);
binop!(Mul, mul, *, |a, b, p| a * b % p);

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Div<FieldElement> for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        &self / &rhs
    }
}

impl<'a> Div<&'a FieldElement> for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &'a FieldElement) -> FieldElement {
        &self / rhs
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.0 {
            Repr::Q(q) => FieldElement(Repr::Q(-q)),
            Repr::Fp { v, p } => FieldElement(Repr::Fp { v: (p - v) % p, p: *p }),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(997).is_ok());
        assert_eq!(Field::prime(1), Err(Error::InvalidModulus(1)));
        assert_eq!(Field::prime(91), Err(Error::InvalidModulus(91)));
        assert_eq!(Field::prime(1 << 31), Err(Error::InvalidModulus(1 << 31)));
        assert!(Field::prime(2_147_483_647).is_ok());
        assert!(Field::prime(2_147_483_649).is_err());
        
    }

    #[test]
    fn rationals_are_canonical() {
        let q = Field::Rationals;
        let a = q.parse_element("4/-2");
        assert!(a.is_err());
        let a = q.parse_element("-4/6").unwrap();
        assert_eq!(a, q.from_ratio(2, -3).unwrap());
        assert_eq!(a.to_string(), "-2/3");
        assert_eq!(q.parse_element("6/3").unwrap().to_string(), "2");
        assert_eq!(q.parse_element("-0").unwrap(), q.zero());
    }

    #[test]
    fn entry_grammar() {
        let q = Field::Rationals;
        for bad in ["1.5", "", "-", "1/0", "1/03", "+1", "1/", "/2", " 1", "1/-2", "0x10"] {
            assert!(q.parse_element(bad).is_err(), "{bad:?} accepted");
        }
        let gf = Field::prime(5).unwrap();
        assert_eq!(gf.parse_element("7").unwrap().residue(), Some(2));
        assert!(gf.parse_element("-1").is_err());
        assert!(gf.parse_element("1/2").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!((&three * &three.inv().unwrap()), f.one());
        assert_eq!((-&three).residue(), Some(4));
        assert_eq!(f.from_i64(-1).residue(), Some(6));
        assert_eq!(f.from_ratio(1, 2).unwrap().residue(), Some(4));
        assert_eq!(three.pow(6), f.one());
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = Field::Rationals.one();
        let b = Field::prime(5).unwrap().one();
        assert_eq!(a.checked_add(&b), Err(Error::DescriptorMismatch));
        assert_eq!(a.checked_div(&Field::Rationals.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_order_is_numerator_then_denominator() {
        let q = Field::Rationals;
        let one = q.one();
        let half = q.from_ratio(1, 2).unwrap();
        assert_eq!(one.canonical_cmp(&half), Ordering::Less);
        assert_eq!(q.from_i64(-3).canonical_cmp(&q.from_i64(2)), Ordering::Less);
    }
}
