//! Sequence-length statistics against digit-level baselines.

use std::collections::BTreeMap;
use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

use crate::codec::{canonicalize, check_range};
use crate::config::{Mode, TstConfig};
use crate::error::Result;
use crate::scanner::{NumericLiteral, Scanner, SegmentKind, Sign};

pub const SCHEMES: [&str; 5] = ["tst_compound", "tst_marker", "tst_digit_marker", "digit_level", "comma_grouped"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchemeStats {
    pub total_tokens: u64,
    pub numbers_seen: u64,
    pub mean_tokens_per_number: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub per_scheme: BTreeMap<String, SchemeStats>,
    /// Numbers outside the configured range; excluded from every scheme.
    pub numbers_out_of_range: u64,
}

/// Running token totals, one slot per entry of [`SCHEMES`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StatsCounter {
    pub tokens: [u64; 5],
    pub numbers: u64,
    pub out_of_range: u64,
}

impl AddAssign for StatsCounter {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.tokens.iter_mut().zip(rhs.tokens) {
            *a += b;
        }
        self.numbers += rhs.numbers;
        self.out_of_range += rhs.out_of_range;
    }
}

/// Token counts of one in-range literal under every scheme, or `None` when
/// the literal does not fit the config.
pub fn literal_lengths(literal: &NumericLiteral, config: &TstConfig) -> Option<[u64; 5]> {
    let canonical = canonicalize(literal, config);
    check_range(&canonical, config).ok()?;
    let n = config.group_size as usize;
    let int_groups = canonical.int_digits.len().div_ceil(n) as u64;
    let frac_groups = canonical.frac_digits.len().div_ceil(n) as u64;
    let suffixed = int_groups - 1 + frac_groups;
    let sign = u64::from(canonical.sign != Sign::None);
    let point = u64::from(frac_groups > 0);
    let terminator = u64::from(config.preserve_precision && frac_groups > 0);
    let structural = sign + point + terminator;

    let int = canonical.int_digits.as_str();
    let encoded_digits = if int_groups == 1 {
        int.len()
    } else {
        let g = int_groups as usize;
        let top = if config.pad_leading_group { n } else { int.len() - (g - 1) * n };
        let level0 = int[int.len() - n..].trim_start_matches('0').len().max(1);
        top + (g - 2) * n + level0
    } as u64
        + frac_groups * n as u64;

    let compound = int_groups + frac_groups + structural;
    let marker = compound + suffixed;
    let digit_marker = encoded_digits + suffixed + structural;
    let written = (literal.int_digits.len() + literal.frac_digits.len()) as u64;
    let digit_level = written + u64::from(literal.sign != Sign::None) + u64::from(!literal.frac_digits.is_empty());
    let commas = (literal.int_digits.len().div_ceil(3) as u64).saturating_sub(1);
    Some([compound, marker, digit_marker, digit_level, digit_level + commas])
}

impl StatsCounter {
    pub fn add_literal(&mut self, literal: &NumericLiteral, config: &TstConfig) {
        match literal_lengths(literal, config) {
            Some(lengths) => {
                for (a, b) in self.tokens.iter_mut().zip(lengths) {
                    *a += b;
                }
                self.numbers += 1;
            }
            None => self.out_of_range += 1,
        }
    }

    pub fn add_line(&mut self, line: &str, config: &TstConfig, scanner: &Scanner) {
        for seg in scanner.scan(line) {
            if let (SegmentKind::Number, Some(lit)) = (seg.kind, &seg.literal) {
                self.add_literal(lit, config);
            }
        }
    }

    pub fn report(&self) -> StatsReport {
        let per_scheme = SCHEMES
            .iter()
            .zip(self.tokens)
            .map(|(name, total)| {
                let mean = if self.numbers == 0 { 0.0 } else { total as f64 / self.numbers as f64 };
                let s = SchemeStats { total_tokens: total, numbers_seen: self.numbers, mean_tokens_per_number: mean };
                (name.to_string(), s)
            })
            .collect();
        StatsReport { per_scheme, numbers_out_of_range: self.out_of_range }
    }
}

/// Statistics over a whole text, line by line.
pub fn stats<'a>(
    lines: impl IntoIterator<Item = &'a str>,
    config: &TstConfig,
    scanner: &Scanner,
) -> Result<StatsReport> {
    config.validate()?;
    let mut counter = StatsCounter::default();
    for line in lines {
        counter.add_line(line, config, scanner);
    }
    Ok(counter.report())
}

/// Name of the scheme that encodes with `mode`.
pub fn scheme_for(mode: Mode) -> &'static str {
    match mode {
        Mode::Compound => SCHEMES[0],
        Mode::Marker => SCHEMES[1],
        Mode::DigitMarker => SCHEMES[2],
    }
}
