use crate::codec::canonical::canonicalize;
use crate::codec::group::{group_fraction, group_integer, DigitGroup, Place};
use crate::codec::marker::{marker_for, terminator};
use crate::codec::token::{Token, TokenKind, TokenSequence};
use crate::config::{Mode, TstConfig};
use crate::error::{Error, Result};
use crate::scanner::{NumericLiteral, Sign};
use crate::value::TokenValue;

/// Rejects literals whose canonical form needs more levels or depths than configured.
pub fn check_range(canonical: &NumericLiteral, config: &TstConfig) -> Result<()> {
    let n = config.group_size as usize;
    if canonical.int_digits.len() > config.max_int_digits() {
        return Err(Error::LevelOverflow {
            literal: canonical.surface.clone(),
            level: (canonical.int_digits.len().div_ceil(n) - 1) as u32,
            max: config.max_int_levels,
        });
    }
    if canonical.frac_digits.len() > config.max_frac_digits() {
        return Err(Error::DepthOverflow {
            literal: canonical.surface.clone(),
            depth: canonical.frac_digits.len().div_ceil(n) as u32,
            max: config.max_frac_depth,
        });
    }
    Ok(())
}

/// Surface digits of a group: level 0 unpadded, the leading suffixed group
/// unpadded only when `pad_leading_group` is off, everything else zero-padded.
fn group_digits(group: &DigitGroup, is_top: bool, config: &TstConfig) -> String {
    match group.place {
        Place::Int(0) => group.value.to_string(),
        Place::Int(_) if is_top && !config.pad_leading_group => group.value.to_string(),
        _ => group.padded(config.group_size),
    }
}

fn push_group(tokens: &mut Vec<Token>, group: &DigitGroup, is_top: bool, config: &TstConfig) -> Result<()> {
    let n = config.group_size;
    let digits = group_digits(group, is_top, config);
    let suffixed = group.place != Place::Int(0);
    let marker = if suffixed { Some(marker_for(group.place, config)?) } else { None };
    let value = Some(group.contribution(n));

    match config.mode {
        Mode::Compound => {
            let (kind, text) = match marker {
                Some(m) => (TokenKind::GroupWithMarker, digits + &m),
                None => (TokenKind::Group, digits),
            };
            tokens.push(Token::new(kind, text, value));
        }
        Mode::Marker => {
            tokens.push(Token::new(TokenKind::Group, digits, value));
            if let Some(m) = marker {
                tokens.push(Token::new(TokenKind::Marker, m, None));
            }
        }
        Mode::DigitMarker => {
            let len = digits.len();
            for (j, d) in digits.bytes().enumerate() {
                let exponent = match group.place {
                    Place::Int(level) => (n * level) as i32 + (len - 1 - j) as i32,
                    Place::Frac(depth) => -((n * (depth - 1)) as i32 + j as i32 + 1),
                };
                let v = TokenValue::new(u64::from(d - b'0'), exponent);
                tokens.push(Token::new(TokenKind::Digit, char::from(d).to_string(), Some(v)));
            }
            if let Some(m) = marker {
                tokens.push(Token::new(TokenKind::Marker, m, None));
            }
        }
    }
    Ok(())
}

/// Encodes one literal into magnitude-annotated tokens.
pub fn encode(literal: &NumericLiteral, config: &TstConfig) -> Result<TokenSequence> {
    config.validate()?;
    let canonical = canonicalize(literal, config);
    check_range(&canonical, config).map_err(|e| match e {
        Error::LevelOverflow { level, max, .. } => {
            Error::LevelOverflow { literal: literal.surface.clone(), level, max }
        }
        Error::DepthOverflow { depth, max, .. } => {
            Error::DepthOverflow { literal: literal.surface.clone(), depth, max }
        }
        other => other,
    })?;

    let int_groups = group_integer(&canonical.int_digits, config.group_size);
    let frac_groups = group_fraction(&canonical.frac_digits, config.group_size);

    let mut tokens = Vec::with_capacity(int_groups.len() + frac_groups.len() + 3);
    if canonical.sign != Sign::None {
        tokens.push(Token::new(TokenKind::Sign, canonical.sign.as_str(), None));
    }
    for (i, g) in int_groups.iter().enumerate() {
        push_group(&mut tokens, g, i == 0, config)?;
    }
    if let Some(last) = frac_groups.last() {
        tokens.push(Token::new(TokenKind::DecimalPoint, ".", None));
        for g in &frac_groups {
            push_group(&mut tokens, g, false, config)?;
        }
        if config.preserve_precision {
            tokens.push(Token::new(TokenKind::Terminator, terminator(last.sig_len), None));
        }
    }
    Ok(TokenSequence::new(tokens, Some(literal.clone())))
}
