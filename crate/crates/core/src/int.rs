//! Exact integers with an `i64` fast path.
//!
//! Boundary matrices start out with entries in `{-1, 0, 1}` and mostly stay
//! small during elimination, so [`Int`] keeps values inline as `i64` and only
//! promotes to a heap-allocated [`BigInt`] when a checked operation overflows.
//! A value is stored as `Big` only if it does not fit in `i64`.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
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

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    #[inline]
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

    /// Compares absolute values.
    pub fn cmp_abs(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&other.to_big().abs()),
        }
    }

    pub fn add(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() + other.to_big())
    }

    pub fn sub(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() - other.to_big())
    }

    pub fn mul(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() * other.to_big())
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b.clone()),
        }
    }

    /// `self += q * b`
    #[inline]
    pub fn add_mul_assign(&mut self, q: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(qq), Int::Small(bb)) = (&*self, q, b) {
            let r = *s as i128 + (*qq as i128) * (*bb as i128);
            if let Ok(v) = i64::try_from(r) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = Int::from_big(self.to_big() + q.to_big() * b.to_big());
    }

    /// `self -= q * b`
    #[inline]
    pub fn sub_mul_assign(&mut self, q: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(qq), Int::Small(bb)) = (&*self, q, b) {
            let r = *s as i128 - (*qq as i128) * (*bb as i128);
            if let Ok(v) = i64::try_from(r) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = Int::from_big(self.to_big() - q.to_big() * b.to_big());
    }

    /// Floor division. Panics on division by zero.
    pub fn div_floor(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if !(*a == i64::MIN && *b == -1) {
                return Int::Small(a.div_floor(b));
            }
        }
        Int::from_big(self.to_big().div_floor(&other.to_big()))
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Int) -> Option<Int> {
        if other.is_zero() {
            return if self.is_zero() { Some(Int::ZERO) } else { None };
        }
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if *a == i64::MIN && *b == -1 {
                return Some(Int::from_big(-BigInt::from(*a)));
            }
            return if a % b == 0 { Some(Int::Small(a / b)) } else { None };
        }
        let (q, r) = self.to_big().div_rem(&other.to_big());
        if r.is_zero() {
            Some(Int::from_big(q))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Int) -> bool {
        other.div_exact(self).is_some()
    }

    /// Non-negative remainder modulo a positive `m`.
    pub fn rem_euclid_u64(&self, m: u64) -> u64 {
        match self {
            Int::Small(v) => (*v as i128).rem_euclid(m as i128) as u64,
            Int::Big(b) => {
                let r = b.mod_floor(&BigInt::from(m));
                r.to_u64().expect("remainder fits")
            }
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            let g = (*a as i128).gcd(&(*b as i128));
            if let Ok(v) = i64::try_from(g) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big().gcd(&other.to_big()))
    }

    /// Returns `(g, s, t)` with `g = s*a + t*b` and `g >= 0`.
    pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
        if let (Int::Small(x), Int::Small(y)) = (a, b) {
            let e = (*x as i128).extended_gcd(&(*y as i128));
            let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
            if g < 0 {
                g = -g;
                s = -s;
                t = -t;
            }
            if let (Ok(g), Ok(s), Ok(t)) = (i64::try_from(g), i64::try_from(s), i64::try_from(t)) {
                return (Int::Small(g), Int::Small(s), Int::Small(t));
            }
        }
        let e = a.to_big().extended_gcd(&b.to_big());
        let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
        if g.is_negative() {
            g = -g;
            s = -s;
            t = -t;
        }
        (Int::from_big(g), Int::from_big(s), Int::from_big(t))
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

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(BigInt::from(v)),
        }
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Self {
        Int::from(v as u64)
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Int::from(i64::MAX);
        let sum = big.add(&Int::ONE);
        assert!(matches!(sum, Int::Big(_)));
        let back = sum.sub(&Int::ONE);
        assert_eq!(back, Int::Small(i64::MAX));
        let sq = big.mul(&big);
        assert_eq!(sq.div_exact(&big), Some(big.clone()));
    }

    #[test]
    fn fused_ops_overflow() {
        let mut a = Int::from(i64::MAX);
        a.add_mul_assign(&Int::from(2), &Int::from(i64::MAX));
        assert_eq!(a.to_big(), BigInt::from(i64::MAX) * 3);
        a.sub_mul_assign(&Int::from(2), &Int::from(i64::MAX));
        assert_eq!(a, Int::Small(i64::MAX));
    }

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(12i64, 18i64), (-4, 6), (0, 5), (7, 0), (-9, -6)] {
            let (g, s, t) = Int::ext_gcd(&Int::from(a), &Int::from(b));
            assert!(!g.is_negative());
            assert_eq!(s.mul(&Int::from(a)).add(&t.mul(&Int::from(b))), g);
            assert_eq!(g, Int::from(a).gcd(&Int::from(b)).abs());
        }
    }

    #[test]
    fn min_value_edges() {
        let m = Int::from(i64::MIN);
        assert!(matches!(m.neg(), Int::Big(_)));
        assert!(matches!(m.abs(), Int::Big(_)));
        assert_eq!(m.div_exact(&Int::from(-1)).unwrap().to_big(), -BigInt::from(i64::MIN));
        assert_eq!(Int::from(-7).rem_euclid_u64(3), 2);
    }
}
