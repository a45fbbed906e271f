//! Integers with an inline `i64` fast path.
//!
//! Elimination on the matrices in this crate starts from entries like `±1, ±2`
//! and mostly stays small after content normalisation, so the common case never
//! touches the heap. Values that fit in an `i64` are always stored as `Small`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    pub fn from_big(b: BigInt) -> Int {
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

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(r) => Int::Small(r),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(r) = a.checked_add(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() + other.to_big())
    }

    pub fn sub(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(r) = a.checked_sub(*b) {
                return Int::Small(r);
            }
        }
        Int::from_big(self.to_big() - other.to_big())
    }

    pub fn mul(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(r) => Int::Small(r),
                None => Int::from_big(BigInt::from(*a) * BigInt::from(*b)),
            },
            (Int::Small(0), _) | (_, Int::Small(0)) => Int::ZERO,
            (Int::Small(a), Int::Big(b)) | (Int::Big(b), Int::Small(a)) => {
                Int::from_big(b * BigInt::from(*a))
            }
            (Int::Big(a), Int::Big(b)) => Int::from_big(a * b),
        }
    }

    /// `self * a - other * b`, the row-update kernel of fraction-free elimination.
    pub fn mul_sub_mul(&self, a: &Int, other: &Int, b: &Int) -> Int {
        if let (Int::Small(x), Int::Small(p), Int::Small(y), Int::Small(q)) = (self, a, other, b) {
            let r = (*x as i128) * (*p as i128) - (*y as i128) * (*q as i128);
            if let Ok(v) = i64::try_from(r) {
                return Int::Small(v);
            }
            return Int::from_big(BigInt::from(r));
        }
        self.mul(a).sub(&other.mul(b))
    }

    /// Exact division; the caller guarantees `other` divides `self`.
    pub fn div_exact(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_div(*b) {
                Some(r) => Int::Small(r),
                None => Int::from_big(BigInt::from(*a) / BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() / other.to_big()),
        }
    }

    /// Non-negative gcd.
    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let g = (*a as i128).unsigned_abs().gcd(&(*b as i128).unsigned_abs());
                match i64::try_from(g) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::from_big(BigInt::from(g)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Rough size measure used for pivot tie-breaking.
    pub fn bits(&self) -> u64 {
        match self {
            Int::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Int::Big(b) => b.bits(),
        }
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
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

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        Int::add(&self, &rhs)
    }
}

impl std::ops::Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        Int::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Int::Small(i64::MAX);
        let b = a.add(&Int::ONE);
        assert!(matches!(b, Int::Big(_)));
        let c = b.sub(&Int::ONE);
        assert_eq!(c, Int::Small(i64::MAX));
        let sq = a.mul(&a);
        assert_eq!(sq.div_exact(&a), a);
    }

    #[test]
    fn neg_of_min_is_big() {
        let m = Int::Small(i64::MIN);
        assert!(matches!(m.neg(), Int::Big(_)));
        assert_eq!(m.neg().neg(), m);
    }

    #[test]
    fn gcd_is_nonnegative() {
        assert_eq!(Int::Small(-12).gcd(&Int::Small(18)), Int::Small(6));
        assert_eq!(Int::Small(0).gcd(&Int::Small(-5)), Int::Small(5));
        assert_eq!(Int::Small(i64::MIN).gcd(&Int::Small(0)).to_big(), BigInt::from(i64::MIN).abs());
    }

    #[test]
    fn mul_sub_mul_matches_bigint() {
        let x = Int::Small(i64::MAX / 3);
        let r = x.mul_sub_mul(&Int::Small(7), &Int::Small(-5), &Int::Small(11));
        let expect = BigInt::from(i64::MAX / 3) * 7 + BigInt::from(55);
        assert_eq!(r.to_big(), expect);
    }
}
