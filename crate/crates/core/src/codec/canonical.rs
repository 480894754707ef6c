use crate::config::TstConfig;
use crate::scanner::NumericLiteral;

/// Canonical form of a literal: no leading integer zeros (at least one digit
/// kept) and, unless precision is preserved, no trailing fraction zeros beyond
/// the padding of the last group. Numerically equal literals with the same sign
/// canonicalize identically.
pub fn canonicalize(literal: &NumericLiteral, config: &TstConfig) -> NumericLiteral {
    let int = literal.int_digits.trim_start_matches('0');
    let int = if int.is_empty() { "0" } else { int };

    let frac = if config.preserve_precision {
        literal.frac_digits.clone()
    } else {
        let trimmed = literal.frac_digits.trim_end_matches('0');
        let n = config.group_size as usize;
        let padded_len = trimmed.len().div_ceil(n) * n;
        format!("{trimmed:0<padded_len$}")
    };

    NumericLiteral::new(literal.sign, int, frac)
}
