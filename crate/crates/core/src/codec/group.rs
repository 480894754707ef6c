use serde::{Deserialize, Serialize};

use crate::value::TokenValue;

/// Position of a digit group relative to the decimal point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "part", content = "index")]
pub enum Place {
    /// Integer group with scale `10^(N·level)`; level 0 carries no marker.
    Int(u32),
    /// Fraction group with scale `10^(-N·depth)`, depth ≥ 1.
    Frac(u32),
}

impl Place {
    /// Base-10 exponent of the group's scale.
    pub fn exponent(self, group_size: u32) -> i32 {
        match self {
            Place::Int(level) => (group_size * level) as i32,
            Place::Frac(depth) => -((group_size * depth) as i32),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitGroup {
    pub value: u64,
    pub place: Place,
    /// Digits present before padding. Only differs from `N` for a fraction's last group.
    pub sig_len: u32,
}

impl DigitGroup {
    /// The group's contribution `value × 10^(±N·k)`.
    pub fn contribution(&self, group_size: u32) -> TokenValue {
        TokenValue::new(self.value, self.place.exponent(group_size))
    }

    /// Zero-padded to `group_size` digits.
    pub fn padded(&self, group_size: u32) -> String {
        format!("{:0width$}", self.value, width = group_size as usize)
    }
}

fn parse_group(digits: &str) -> u64 {
    digits.bytes().fold(0u64, |acc, b| acc * 10 + u64::from(b - b'0'))
}

/// Splits integer digits into groups of `group_size` from the right, most
/// significant first. The leading group is implicitly left-padded; its level
/// is the highest. Digits are taken as written, so leading zeros yield
/// zero-valued leading groups.
pub fn group_integer(int_digits: &str, group_size: u32) -> Vec<DigitGroup> {
    debug_assert!(int_digits.bytes().all(|b| b.is_ascii_digit()));
    let n = group_size as usize;
    let len = int_digits.len();
    if len == 0 {
        return Vec::new();
    }
    let count = len.div_ceil(n);
    let head = len - (count - 1) * n;
    let mut groups = Vec::with_capacity(count);
    let mut start = 0;
    for i in 0..count {
        let end = if i == 0 { head } else { start + n };
        groups.push(DigitGroup {
            value: parse_group(&int_digits[start..end]),
            place: Place::Int((count - 1 - i) as u32),
            sig_len: group_size,
        });
        start = end;
    }
    groups
}

/// Splits fraction digits into groups of `group_size` from the left. The last
/// group is right-padded with zeros; its `sig_len` records how many digits
/// were actually present.
pub fn group_fraction(frac_digits: &str, group_size: u32) -> Vec<DigitGroup> {
    debug_assert!(frac_digits.bytes().all(|b| b.is_ascii_digit()));
    let n = group_size as usize;
    frac_digits
        .as_bytes()
        .chunks(n)
        .enumerate()
        .map(|(i, chunk)| {
            let digits = std::str::from_utf8(chunk).expect("ascii");
            let value = parse_group(digits) * 10u64.pow((n - chunk.len()) as u32);
            DigitGroup { value, place: Place::Frac(i as u32 + 1), sig_len: chunk.len() as u32 }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(groups: &[DigitGroup]) -> Vec<(u64, Place, u32)> {
        groups.iter().map(|g| (g.value, g.place, g.sig_len)).collect()
    }

    #[test]
    fn integer_examples() {
        assert_eq!(
            summary(&group_integer("1234567", 3)),
            vec![(1, Place::Int(2), 3), (234, Place::Int(1), 3), (567, Place::Int(0), 3)]
        );
        assert_eq!(summary(&group_integer("5", 3)), vec![(5, Place::Int(0), 3)]);
        assert_eq!(summary(&group_integer("0012", 2)), vec![(0, Place::Int(1), 2), (12, Place::Int(0), 2)]);
    }

    #[test]
    fn fraction_examples() {
        assert_eq!(
            summary(&group_fraction("12345678", 3)),
            vec![(123, Place::Frac(1), 3), (456, Place::Frac(2), 3), (780, Place::Frac(3), 2)]
        );
        assert_eq!(summary(&group_fraction("0045", 3)), vec![(4, Place::Frac(1), 3), (500, Place::Frac(2), 1)]);
        assert!(group_fraction("", 3).is_empty());
    }

    #[test]
    fn padded_rendering() {
        let g = DigitGroup { value: 4, place: Place::Frac(1), sig_len: 3 };
        assert_eq!(g.padded(3), "004");
        assert_eq!(g.contribution(3), TokenValue::new(4, -3));
    }
}
