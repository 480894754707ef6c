//! Exact decimal values as `coefficient × 10^exponent`.
//!
//! Nothing in the codec path touches floating point; all arithmetic happens on
//! integers scaled to a common exponent.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Neg;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Value carried by a single token. Group values are below `10^N` with `N ≤ 18`,
/// so the coefficient always fits in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TokenValue {
    pub coefficient: u64,
    pub exponent: i32,
}

impl TokenValue {
    pub const fn new(coefficient: u64, exponent: i32) -> Self {
        Self { coefficient, exponent }
    }

    pub fn to_exact(self) -> ExactValue {
        ExactValue::new(BigInt::from(self.coefficient), self.exponent)
    }
}

impl fmt::Display for TokenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e{}", self.coefficient, self.exponent)
    }
}

/// Arbitrary-precision signed decimal. Equality, ordering and hashing are by
/// numeric value, so `5e0 == 50e-1`.
#[derive(Debug, Clone)]
pub struct ExactValue {
    pub coefficient: BigInt,
    pub exponent: i32,
}

pub(crate) fn pow10(exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(10u8), exp as usize)
}

impl ExactValue {
    pub fn new(coefficient: BigInt, exponent: i32) -> Self {
        Self { coefficient, exponent }
    }

    pub fn zero() -> Self {
        Self::new(BigInt::zero(), 0)
    }

    /// Builds a value from unsigned decimal digit strings. Both parts must be ASCII digits.
    pub fn from_digits(negative: bool, int_digits: &str, frac_digits: &str) -> Self {
        let mut all = String::with_capacity(int_digits.len() + frac_digits.len());
        all.push_str(int_digits);
        all.push_str(frac_digits);
        let magnitude = if all.is_empty() {
            BigUint::zero()
        } else {
            BigUint::parse_bytes(all.as_bytes(), 10).expect("digit strings are ASCII digits")
        };
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        Self::new(BigInt::from_biguint(sign, magnitude), -(frac_digits.len() as i32))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.coefficient.is_negative()
    }

    /// Removes trailing zeros from the coefficient. Zero normalizes to `0e0`.
    pub fn normalized(&self) -> Self {
        if self.coefficient.is_zero() {
            return Self::zero();
        }
        let ten = BigInt::from(10u8);
        let mut coefficient = self.coefficient.clone();
        let mut exponent = self.exponent;
        loop {
            let (q, r) = (&coefficient / &ten, &coefficient % &ten);
            if !r.is_zero() {
                break;
            }
            coefficient = q;
            exponent += 1;
        }
        Self::new(coefficient, exponent)
    }

    /// Rescales to `exponent`, which must not exceed the current exponent.
    fn rescaled(&self, exponent: i32) -> BigInt {
        debug_assert!(exponent <= self.exponent);
        &self.coefficient * BigInt::from(pow10((self.exponent - exponent) as u32))
    }

    /// Exact sum of a collection of values.
    pub fn sum<'a>(values: impl IntoIterator<Item = &'a ExactValue>) -> ExactValue {
        let values: Vec<&ExactValue> = values.into_iter().collect();
        let Some(min_exp) = values.iter().map(|v| v.exponent).min() else {
            return ExactValue::zero();
        };
        let total = values.iter().fold(BigInt::zero(), |acc, v| acc + v.rescaled(min_exp));
        ExactValue::new(total, min_exp)
    }

    /// Splits `|self|` into integer and fraction digit strings with no
    /// superfluous zeros ("0" for a zero integer part, "" for no fraction).
    pub fn to_digit_parts(&self) -> (String, String) {
        let n = self.normalized();
        let digits = n.coefficient.magnitude().to_str_radix(10);
        if n.exponent >= 0 {
            let mut int = digits;
            if int != "0" {
                int.extend(std::iter::repeat_n('0', n.exponent as usize));
            }
            return (int, String::new());
        }
        let frac_len = (-n.exponent) as usize;
        if digits.len() > frac_len {
            let (i, f) = digits.split_at(digits.len() - frac_len);
            (i.to_string(), f.to_string())
        } else {
            let mut frac = "0".repeat(frac_len - digits.len());
            frac.push_str(&digits);
            ("0".to_string(), frac)
        }
    }
}

impl Neg for ExactValue {
    type Output = ExactValue;

    fn neg(self) -> ExactValue {
        ExactValue::new(-self.coefficient, self.exponent)
    }
}

impl PartialEq for ExactValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactValue {}

impl PartialOrd for ExactValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exponent.min(other.exponent);
        self.rescaled(exp).cmp(&other.rescaled(exp))
    }
}

impl Hash for ExactValue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let n = self.normalized();
        n.coefficient.hash(state);
        n.exponent.hash(state);
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (int, frac) = self.to_digit_parts();
        if self.is_negative() {
            f.write_str("-")?;
        }
        f.write_str(&int)?;
        if !frac.is_empty() {
            write!(f, ".{frac}")?;
        }
        Ok(())
    }
}
