use crate::codec::group::Place;
use crate::config::{MarkerStyle, TstConfig};
use crate::error::{Error, Result};
use crate::scanner::Sign;

const HUMAN_INT_MARKERS: [&str; 5] = ["k", "m", "b", "t", "q"];
const OPEN: char = '⟨';
const CLOSE: char = '⟩';

/// Suffix for integer level `level` (1 = thousands when N = 3).
pub fn integer_marker(level: u32, config: &TstConfig) -> Result<String> {
    if level == 0 || level > config.max_int_levels {
        return Err(Error::MarkerRange { index: level, max: config.max_int_levels });
    }
    Ok(match config.marker_style {
        MarkerStyle::TriadicHuman => HUMAN_INT_MARKERS[level as usize - 1].to_string(),
        MarkerStyle::Systematic => format!("{OPEN}E+{}{CLOSE}", config.group_size * level),
    })
}

/// Suffix for fraction depth `depth` (1 = thousandths when N = 3).
pub fn fraction_marker(depth: u32, config: &TstConfig) -> Result<String> {
    if depth == 0 || depth > config.max_frac_depth {
        return Err(Error::MarkerRange { index: depth, max: config.max_frac_depth });
    }
    Ok(match config.marker_style {
        MarkerStyle::TriadicHuman => "p".repeat(depth as usize),
        MarkerStyle::Systematic => format!("{OPEN}E-{}{CLOSE}", config.group_size * depth),
    })
}

pub(crate) fn marker_for(place: Place, config: &TstConfig) -> Result<String> {
    match place {
        Place::Int(level) => integer_marker(level, config),
        Place::Frac(depth) => fraction_marker(depth, config),
    }
}

pub fn terminator(sig_len: u32) -> String {
    format!("[T{sig_len}]")
}

/// Lexical class of a token string, independent of its position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Lexeme<'a> {
    Sign(Sign),
    Point,
    Terminator(u32),
    Marker(Place),
    Digits(&'a str),
    Compound(&'a str, Place),
    Unknown,
}

fn parse_decimal(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}

/// Reads a complete marker string, if `s` is one within the configured range.
fn parse_marker(s: &str, config: &TstConfig) -> Option<Place> {
    let place = match config.marker_style {
        MarkerStyle::TriadicHuman => {
            if let Some(i) = HUMAN_INT_MARKERS.iter().position(|&m| m == s) {
                Place::Int(i as u32 + 1)
            } else if !s.is_empty() && s.bytes().all(|b| b == b'p') {
                Place::Frac(s.len() as u32)
            } else {
                return None;
            }
        }
        MarkerStyle::Systematic => {
            let body = s.strip_prefix(OPEN)?.strip_suffix(CLOSE)?.strip_prefix('E')?;
            let (negative, digits) = match body.chars().next()? {
                '+' => (false, &body[1..]),
                '-' => (true, &body[1..]),
                _ => return None,
            };
            let exp = parse_decimal(digits)?;
            if exp == 0 || exp % config.group_size != 0 {
                return None;
            }
            let idx = exp / config.group_size;
            if negative {
                Place::Frac(idx)
            } else {
                Place::Int(idx)
            }
        }
    };
    let in_range = match place {
        Place::Int(level) => level <= config.max_int_levels,
        Place::Frac(depth) => depth <= config.max_frac_depth,
    };
    in_range.then_some(place)
}

pub(crate) fn lex<'a>(text: &'a str, config: &TstConfig) -> Lexeme<'a> {
    match text {
        "." => return Lexeme::Point,
        "-" => return Lexeme::Sign(Sign::Minus),
        "+" => return Lexeme::Sign(Sign::Plus),
        _ => {}
    }
    if let Some(n) = text.strip_prefix("[T").and_then(|r| r.strip_suffix(']')).and_then(parse_decimal) {
        return Lexeme::Terminator(n);
    }
    let digit_len = text.bytes().take_while(u8::is_ascii_digit).count();
    let (digits, suffix) = text.split_at(digit_len);
    match (digits.is_empty(), suffix.is_empty()) {
        (false, true) => Lexeme::Digits(digits),
        (true, false) => parse_marker(suffix, config).map_or(Lexeme::Unknown, Lexeme::Marker),
        (false, false) => parse_marker(suffix, config).map_or(Lexeme::Unknown, |p| Lexeme::Compound(digits, p)),
        (true, true) => Lexeme::Unknown,
    }
}
