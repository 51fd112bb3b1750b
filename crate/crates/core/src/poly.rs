//! Laurent polynomials in `T` over `Z` or `Z_n`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::int::Int;

/// `sum c_k T^(low + k)` with coefficients in `Z` (modulus 0) or `Z_n`.
///
/// Stored trimmed: no zero coefficient at either end, and the zero
/// polynomial has no coefficients and `low = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    modulus: u64,
    low: i64,
    coeffs: Vec<Int>,
}

impl LaurentPoly {
    pub fn new(modulus: u64, low: i64, coeffs: Vec<Int>) -> Self {
        let mut p = LaurentPoly { modulus, low, coeffs };
        p.normalize();
        p
    }

    /// Polynomial with the given coefficients of `T^0, T^1, ...`.
    pub fn from_coeffs(modulus: u64, coeffs: &[i64]) -> Self {
        Self::new(modulus, 0, coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(modulus, 0, Vec::new())
    }

    pub fn one(modulus: u64) -> Self {
        Self::constant(modulus, 1)
    }

    pub fn constant(modulus: u64, c: i64) -> Self {
        Self::new(modulus, 0, vec![Int::from(c)])
    }

    /// `c T^e`.
    pub fn monomial(modulus: u64, c: i64, e: i64) -> Self {
        Self::new(modulus, e, vec![Int::from(c)])
    }

    /// The variable `T`.
    pub fn t(modulus: u64) -> Self {
        Self::monomial(modulus, 1, 1)
    }

    fn normalize(&mut self) {
        if self.modulus > 0 {
            for c in &mut self.coeffs {
                *c = Int::from(c.rem_euclid_u64(self.modulus));
            }
        }
        while self.coeffs.last().is_some_and(Int::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn max_exp(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, e: i64) -> Int {
        if e < self.low {
            return Int::ZERO;
        }
        self.coeffs.get((e - self.low) as usize).cloned().unwrap_or(Int::ZERO)
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Int)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i64, c))
    }

    fn check_modulus(&self, other: &LaurentPoly) {
        assert_eq!(self.modulus, other.modulus, "mixed coefficient rings");
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.check_modulus(other);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.max_exp().max(other.max_exp());
        let coeffs = (low..=high).map(|e| self.coeff(e).add(&other.coeff(e))).collect();
        LaurentPoly::new(self.modulus, low, coeffs)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly::new(self.modulus, self.low, self.coeffs.iter().map(Int::neg).collect())
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        self.check_modulus(other);
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero(self.modulus);
        }
        let mut coeffs = vec![Int::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_mul_assign(a, b);
            }
        }
        LaurentPoly::new(self.modulus, self.low + other.low, coeffs)
    }

    pub fn scale(&self, k: &Int) -> LaurentPoly {
        LaurentPoly::new(self.modulus, self.low, self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    /// Multiplies by `T^e`.
    pub fn shift(&self, e: i64) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { modulus: self.modulus, low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, mut e: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Value at `T = 1` (reduced when the modulus is positive).
    pub fn eval_at_one(&self) -> Int {
        let s = self.coeffs.iter().fold(Int::ZERO, |acc, c| acc.add(c));
        if self.modulus > 0 {
            Int::from(s.rem_euclid_u64(self.modulus))
        } else {
            s
        }
    }

    /// The same polynomial with coefficients reduced into `Z_m`.
    pub fn reduce_mod(&self, m: u64) -> LaurentPoly {
        assert!(
            self.modulus == 0 || (m > 0 && self.modulus % m == 0),
            "cannot reduce modulo {m} from modulus {}",
            self.modulus
        );
        LaurentPoly::new(m, self.low, self.coeffs.clone())
    }

    /// Shifts so that the lowest exponent is zero.
    pub fn laurent_normalized(&self) -> LaurentPoly {
        self.shift(-self.low)
    }

    /// Coefficients of `T^0, T^1, ...` for a polynomial with no negative powers.
    pub fn to_coeff_vec(&self) -> Option<Vec<Int>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        if self.low < 0 {
            return None;
        }
        let mut v = vec![Int::ZERO; self.low as usize];
        v.extend(self.coeffs.iter().cloned());
        Some(v)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let terms: Vec<(i64, &Int)> = self.terms().collect();
        for (e, c) in terms.into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            f.write_str("T")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus > 0 {
            write!(f, "{self} (mod {})", self.modulus)
        } else {
            write!(f, "{self}")
        }
    }
}

impl LaurentPoly {
    /// Parses a sum of terms `c`, `cT`, `cT^e` (with optional `*`) over `Z_modulus`.
    pub fn parse(s: &str, modulus: u64) -> Result<LaurentPoly, Error> {
        let bad = |m: &str| Error::BadPolynomial(String::from(m));
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if cleaned.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let mut acc = LaurentPoly::zero(modulus);
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<Int> = if i > start {
                let digits = &cleaned[start..i];
                Some(parse_int(digits).ok_or_else(|| bad("bad coefficient"))?)
            } else {
                None
            };
            let mut exp = 0i64;
            if i < bytes.len() && (bytes[i] == b'T' || bytes[i] == b't') {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                        i += 1;
                    }
                    let brace = i < bytes.len() && bytes[i] == b'(';
                    if brace {
                        i += 1;
                    }
                    let ds = i;
                    if brace && i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text = if brace { &cleaned[ds..i] } else { &cleaned[es..i] };
                    exp = text.parse().map_err(|_| bad("bad exponent"))?;
                    if brace {
                        if i >= bytes.len() || bytes[i] != b')' {
                            return Err(bad("unclosed exponent"));
                        }
                        i += 1;
                    }
                }
            } else if coeff.is_none() {
                return Err(bad("expected a term"));
            }
            let c = coeff.unwrap_or(Int::ONE).mul(&Int::from(sign));
            acc = acc.add(&LaurentPoly::new(modulus, exp, vec![c]));
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                return Err(bad("unexpected character"));
            }
        }
        Ok(acc)
    }
}

fn parse_int(digits: &str) -> Option<Int> {
    match digits.parse::<i64>() {
        Ok(v) => Some(Int::from(v)),
        Err(_) => digits.parse::<num_bigint::BigInt>().ok().map(Int::from),
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses over the integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LaurentPoly::parse(s, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_display() {
        let t = LaurentPoly::t(0);
        let one = LaurentPoly::one(0);
        let p = t.add(&one).pow(2);
        assert_eq!(p.to_string(), "T^2+2T+1");
        assert_eq!(p.sub(&p).to_string(), "0");
        assert_eq!(t.shift(-3).to_string(), "T^-2");
        assert_eq!(one.sub(&t).to_string(), "-T+1");
        assert_eq!(p.eval_at_one(), Int::from(4));
    }

    #[test]
    fn modular_reduction() {
        let p: LaurentPoly = "T^2+2T+1".parse().unwrap();
        assert_eq!(p.reduce_mod(2).to_string(), "T^2+1");
        let q = LaurentPoly::parse("T^2-T-1", 4).unwrap();
        assert_eq!(q.to_string(), "T^2+3T+3");
    }

    #[test]
    fn parsing() {
        for s in ["T^2+T+1", "2T+2", "-4T-1", "T^-1+3", "T^(-2)-T", "7", "T"] {
            let p: LaurentPoly = s.parse().unwrap();
            let back: LaurentPoly = p.to_string().parse().unwrap();
            assert_eq!(p, back, "{s}");
        }
        let p: LaurentPoly = "T^(-2)-T".parse().unwrap();
        assert_eq!(p.min_exp(), -2);
        assert!("T^".parse::<LaurentPoly>().is_err());
        assert!("x+1".parse::<LaurentPoly>().is_err());
    }
}
