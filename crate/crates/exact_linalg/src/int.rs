use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision integer with an inline machine-word fast path.
///
/// Values that fit in an `i64` are always stored as `Small`; anything wider
/// is promoted to a heap `BigInt`. Every operation checks for overflow.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    pub fn zero() -> Self {
        Int::Small(0)
    }

    pub fn one() -> Self {
        Int::Small(1)
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Int::Small(1) | Int::Small(-1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_abs() {
                Some(a) => Int::Small(a),
                None => Int::from_big(BigInt::from(*v).abs()),
            },
            Int::Big(b) => Int::from_big(b.abs()),
        }
    }

    pub fn cmp_abs(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&other.to_big().abs()),
        }
    }

    /// Floor division. Panics on a zero divisor.
    pub fn div_floor(&self, d: &Int) -> Int {
        match (self, d) {
            (Int::Small(a), Int::Small(b)) => {
                assert!(*b != 0, "division by zero");
                if *a == i64::MIN && *b == -1 {
                    return Int::from_big(-BigInt::from(*a));
                }
                let q = a / b;
                if a % b != 0 && ((*a < 0) != (*b < 0)) {
                    Int::Small(q - 1)
                } else {
                    Int::Small(q)
                }
            }
            _ => Int::from_big(self.to_big().div_floor(&d.to_big())),
        }
    }

    /// Floor remainder: result has the sign of `d` (or is zero).
    pub fn mod_floor(&self, d: &Int) -> Int {
        match (self, d) {
            (Int::Small(a), Int::Small(b)) => {
                assert!(*b != 0, "division by zero");
                if *b == -1 {
                    return Int::zero();
                }
                let r = a % b;
                if r != 0 && ((r < 0) != (*b < 0)) {
                    Int::Small(r + b)
                } else {
                    Int::Small(r)
                }
            }
            _ => Int::from_big(self.to_big().mod_floor(&d.to_big())),
        }
    }

    /// Exact division; the caller guarantees `d | self`.
    pub fn div_exact(&self, d: &Int) -> Int {
        match (self, d) {
            (Int::Small(a), Int::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                debug_assert!(a % b == 0);
                Int::Small(a / b)
            }
            _ => Int::from_big(self.to_big() / d.to_big()),
        }
    }

    pub fn divides(&self, n: &Int) -> bool {
        if self.is_zero() {
            return n.is_zero();
        }
        n.mod_floor(self).is_zero()
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                match i64::try_from(x) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::from_big(BigInt::from(x)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    pub fn lcm(&self, other: &Int) -> Int {
        if self.is_zero() || other.is_zero() {
            return Int::zero();
        }
        (self * &other.div_exact(&self.gcd(other))).abs()
    }

    /// Returns (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0.
    pub fn extended_gcd(&self, other: &Int) -> (Int, Int, Int) {
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (Int::one(), Int::zero());
        let (mut old_t, mut t) = (Int::zero(), Int::one());
        while !r.is_zero() {
            let q = old_r.div_floor(&r);
            let nr = &old_r - &(&q * &r);
            old_r = std::mem::replace(&mut r, nr);
            let ns = &old_s - &(&q * &s);
            old_s = std::mem::replace(&mut s, ns);
            let nt = &old_t - &(&q * &t);
            old_t = std::mem::replace(&mut t, nt);
        }
        if old_r.is_negative() {
            (-old_r, -old_s, -old_t)
        } else {
            (old_r, old_s, old_t)
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self -= q * x`, the inner loop of every elimination.
    #[inline]
    pub fn sub_mul(&mut self, q: &Int, x: &Int) {
        if let (Int::Small(s), Int::Small(a), Int::Small(b)) = (&*self, q, x) {
            if let Some(p) = a.checked_mul(*b) {
                if let Some(r) = s.checked_sub(p) {
                    *self = Int::Small(r);
                    return;
                }
            }
        }
        let p = q * x;
        *self = &*self - &p;
    }

    /// `self += q * x`.
    #[inline]
    pub fn add_mul(&mut self, q: &Int, x: &Int) {
        if let (Int::Small(s), Int::Small(a), Int::Small(b)) = (&*self, q, x) {
            if let Some(p) = a.checked_mul(*b) {
                if let Some(r) = s.checked_add(p) {
                    *self = Int::Small(r);
                    return;
                }
            }
        }
        let p = q * x;
        *self = &*self + &p;
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::zero()
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Self {
        match i64::try_from(v) {
            Ok(x) => Int::Small(x),
            Err(_) => Int::from_big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<i64> for Int {
    fn eq(&self, other: &i64) -> bool {
        matches!(self, Int::Small(v) if v == other)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim().parse::<BigInt>().map(Int::from_big)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident, $big:tt) => {
        impl<'a> $tr<&'a Int> for &'a Int {
            type Output = Int;
            #[inline]
            fn $m(self, rhs: &Int) -> Int {
                if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Int::Small(v);
                    }
                }
                Int::from_big(self.to_big() $big rhs.to_big())
            }
        }
        impl $tr<Int> for Int {
            type Output = Int;
            #[inline]
            fn $m(self, rhs: Int) -> Int {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Int> for Int {
            type Output = Int;
            #[inline]
            fn $m(self, rhs: &Int) -> Int {
                (&self).$m(rhs)
            }
        }
        impl $tr<i64> for &Int {
            type Output = Int;
            #[inline]
            fn $m(self, rhs: i64) -> Int {
                self.$m(&Int::Small(rhs))
            }
        }
        impl $tr<i64> for Int {
            type Output = Int;
            #[inline]
            fn $m(self, rhs: i64) -> Int {
                (&self).$m(&Int::Small(rhs))
            }
        }
    };
}

binop!(Add, add, checked_add, +);
binop!(Sub, sub, checked_sub, -);
binop!(Mul, mul, checked_mul, *);

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, rhs: &Int) {
        *self = &*self * rhs;
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b.clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Product<&'a Int> for Int {
    fn product<I: Iterator<Item = &'a Int>>(iter: I) -> Int {
        iter.fold(Int::one(), |a, b| a * b)
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::Small(0)
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::Small(1)
    }
}

// Small values serialize as JSON numbers, wide ones as decimal strings.
impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Int::Small(v) => s.serialize_i64(*v),
            Int::Big(b) => s.serialize_str(&b.to_string()),
        }
    }
}

struct IntVisitor;

impl<'de> Visitor<'de> for IntVisitor {
    type Value = Int;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
        Ok(Int::Small(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
        Ok(Int::from_big(BigInt::from(v)))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Int, E> {
        Err(E::custom(format!("expected an integer, found {v}")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
        v.parse().map_err(|_| E::custom(format!("invalid integer string {v:?}")))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}
