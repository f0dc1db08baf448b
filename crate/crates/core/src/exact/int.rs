//! Arbitrary-precision integers with an inline fast path for values that fit
//! in a machine word.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact integer. Values in `i64` range are always stored inline.
#[derive(Clone)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b)),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
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
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let mut a = a.unsigned_abs();
                let mut b = b.unsigned_abs();
                while b != 0 {
                    let r = a % b;
                    a = b;
                    b = r;
                }
                match i64::try_from(a) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::from_big(BigInt::from(a)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    pub fn lcm(&self, other: &Int) -> Int {
        if self.is_zero() || other.is_zero() {
            return Int::ZERO;
        }
        let g = self.gcd(other);
        (&self.div_exact(&g) * other).abs()
    }

    /// Exact quotient; the caller guarantees `other` divides `self`.
    pub fn div_exact(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_div(*b) {
                Some(q) => Int::Small(q),
                None => Int::from_big(BigInt::from(*a) / BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() / other.to_big()),
        }
    }

    /// `Some(self / other)` if the division is exact.
    pub fn checked_div_exact(&self, other: &Int) -> Option<Int> {
        if other.is_zero() {
            return None;
        }
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                if b == &-1 {
                    return Some(-self);
                }
                if a % b == 0 {
                    Some(Int::Small(a / b))
                } else {
                    None
                }
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&other.to_big());
                if r.is_zero() {
                    Some(Int::from_big(q))
                } else {
                    None
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Reduces modulo a prime `p`, returning a value in `0..p`.
    pub fn rem_u64(&self, p: u64) -> u64 {
        match self {
            Int::Small(v) => (*v as i128).rem_euclid(p as i128) as u64,
            Int::Big(b) => {
                let r = (**b).mod_floor(&BigInt::from(p));
                r.to_u64().unwrap_or(0)
            }
        }
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
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

impl From<u32> for Int {
    fn from(v: u32) -> Self {
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

impl PartialEq for Int {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a == b,
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl Hash for Int {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Int::Small(v) => {
                0u8.hash(state);
                v.hash(state)
            }
            Int::Big(b) => {
                1u8.hash(state);
                b.hash(state)
            }
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

impl<'a> Add<&'a Int> for &'a Int {
    type Output = Int;
    fn add(self, rhs: &'a Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Int> for &'a Int {
    type Output = Int;
    fn sub(self, rhs: &'a Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Int> for &'a Int {
    type Output = Int;
    fn mul(self, rhs: &'a Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(a) => match a.checked_neg() {
                Some(v) => Int::Small(v),
                None => Int::from_big(-BigInt::from(*a)),
            },
            Int::Big(b) => Int::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        &self + &rhs
    }
}

impl Sub for Int {
    type Output = Int;
    fn sub(self, rhs: Int) -> Int {
        &self - &rhs
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        &self * &rhs
    }
}

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = &*self - rhs;
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::ONE
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
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Int::Small(v));
        }
        s.parse::<BigInt>().map(Int::from_big)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_to_big() {
        let a = Int::from(i64::MAX);
        let b = &a + &Int::ONE;
        assert!(matches!(b, Int::Big(_)));
        let c = &b - &Int::ONE;
        assert_eq!(c, a);
        assert!(matches!(c, Int::Small(_)));
        let sq = &a * &a;
        assert_eq!(sq.div_exact(&a), a);
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = Int::from(84);
        let b = Int::from(-36);
        assert_eq!(a.gcd(&b), Int::from(12));
        assert_eq!(a.checked_div_exact(&Int::from(5)), None);
        assert_eq!(a.checked_div_exact(&Int::from(-7)), Some(Int::from(-12)));
        assert_eq!(Int::from(i64::MIN).abs().to_string(), "9223372036854775808");
        assert_eq!(a.lcm(&b), Int::from(252));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-17", "123456789012345678901234567890"] {
            assert_eq!(s.parse::<Int>().unwrap().to_string(), s);
        }
    }
}
