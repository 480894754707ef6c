//! Incremental structural checker for token sequences.
//!
//! One left-to-right pass assigns every token its place (integer level or
//! fraction depth) and reports the first violated rule. Validation, decoding
//! and the greedy text decoder all run on this automaton.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codec::group::{DigitGroup, Place};
use crate::codec::marker::{lex, Lexeme};
use crate::codec::token::{Token, TokenKind, TokenSequence};
use crate::config::{Mode, TstConfig};
use crate::error::{Error, Result};
use crate::scanner::{NumericLiteral, Sign};
use crate::value::{ExactValue, TokenValue};

/// Structural rules a token sequence must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Token is not part of the configured token language.
    UnknownToken,
    /// Integer levels strictly descend, without gaps, and end at level 0.
    IntegerLevels,
    /// Fraction depths ascend from 1 without gaps; every fraction group has a marker.
    FractionDepths,
    /// Group widths follow the padding rules; no zero-valued leading or trailing groups.
    Padding,
    /// At most one decimal point, between the integer and fraction groups.
    DecimalPoint,
    /// A sign may only open the sequence.
    Sign,
    /// Terminators close a fraction, only in precision-preserving mode.
    Terminator,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::UnknownToken => "unknown-token",
            Rule::IntegerLevels => "integer-levels",
            Rule::FractionDepths => "fraction-depths",
            Rule::Padding => "padding",
            Rule::DecimalPoint => "decimal-point",
            Rule::Sign => "sign",
            Rule::Terminator => "terminator",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    /// Index of the token at which the violation became certain; equals the
    /// sequence length when it was detected at the end.
    pub index: usize,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at token {}: {}", self.rule, self.index, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn rule(&self) -> Option<Rule> {
        self.violation.as_ref().map(|v| v.rule)
    }
}

/// Whether decode accepts non-canonical padding of integer groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Padding must match the config exactly.
    #[default]
    Strict,
    /// Integer groups may be given with or without zero padding.
    Lenient,
}

/// Digits waiting for their marker (marker and digit-marker modes).
#[derive(Debug, Clone)]
struct Pending {
    digits: String,
    first: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct Parser<'c> {
    config: &'c TstConfig,
    strictness: Strictness,
    index: usize,
    sign: Sign,
    pending: Option<Pending>,
    int_groups: Vec<DigitGroup>,
    frac_groups: Vec<DigitGroup>,
    point: bool,
    terminator: Option<u32>,
    tokens: Vec<Token>,
}

type Step = std::result::Result<(), Violation>;

/// Result of a successful parse.
#[derive(Debug, Clone)]
pub(crate) struct Parsed {
    pub sign: Sign,
    pub int_groups: Vec<DigitGroup>,
    pub frac_groups: Vec<DigitGroup>,
    pub sig_len: Option<u32>,
    pub tokens: Vec<Token>,
}

fn parse_digits(d: &str) -> u64 {
    d.bytes().fold(0u64, |acc, b| acc * 10 + u64::from(b - b'0'))
}

impl<'c> Parser<'c> {
    pub fn new(config: &'c TstConfig, strictness: Strictness) -> Self {
        Self {
            config,
            strictness,
            index: 0,
            sign: Sign::None,
            pending: None,
            int_groups: Vec::new(),
            frac_groups: Vec::new(),
            point: false,
            terminator: None,
            tokens: Vec::new(),
        }
    }

    fn fail(&self, rule: Rule, index: usize, message: impl Into<String>) -> Violation {
        Violation { rule, index, message: message.into() }
    }

    fn n(&self) -> usize {
        self.config.group_size as usize
    }

    fn int_closed(&self) -> bool {
        self.int_groups.last().is_some_and(|g| g.place == Place::Int(0))
    }

    /// False once no continuation can make the sequence valid again.
    pub fn viable(&self) -> bool {
        self.pending.as_ref().is_none_or(|p| p.digits.len() <= self.n())
    }

    pub fn push(&mut self, text: &str) -> Step {
        let i = self.index;
        let result = self.step(text, i);
        self.index += 1;
        result
    }

    fn step(&mut self, text: &str, i: usize) -> Step {
        if self.terminator.is_some() {
            return Err(self.fail(Rule::Terminator, i, "token after the terminator"));
        }
        let mode = self.config.mode;
        let lexeme = match lex(text, self.config) {
            Lexeme::Marker(_) if mode == Mode::Compound => Lexeme::Unknown,
            Lexeme::Compound(..) if mode != Mode::Compound => Lexeme::Unknown,
            Lexeme::Digits(d) if mode == Mode::DigitMarker && d.len() != 1 => Lexeme::Unknown,
            Lexeme::Digits(d) | Lexeme::Compound(d, _) if d.len() > self.n() => Lexeme::Unknown,
            other => other,
        };
        match lexeme {
            Lexeme::Unknown => Err(self.fail(Rule::UnknownToken, i, format!("{text:?} is not a token"))),
            Lexeme::Sign(sign) => {
                if i != 0 {
                    return Err(self.fail(Rule::Sign, i, "sign after the first token"));
                }
                self.sign = sign;
                self.tokens.push(Token::new(TokenKind::Sign, text, None));
                Ok(())
            }
            Lexeme::Digits(d) => match mode {
                Mode::Compound => {
                    self.tokens.push(Token::new(TokenKind::Group, d, None));
                    self.complete_group(d.to_string(), Place::Int(0), i, i)
                }
                Mode::Marker => {
                    if self.pending.is_some() {
                        return Err(if self.point {
                            self.fail(Rule::FractionDepths, i, "fraction group without a depth marker")
                        } else {
                            self.fail(Rule::IntegerLevels, i, "group follows the level-0 group")
                        });
                    }
                    self.check_open_int(i)?;
                    self.tokens.push(Token::new(TokenKind::Group, d, None));
                    self.pending = Some(Pending { digits: d.to_string(), first: i });
                    Ok(())
                }
                Mode::DigitMarker => {
                    if self.pending.is_none() {
                        self.check_open_int(i)?;
                    }
                    self.tokens.push(Token::new(TokenKind::Digit, d, None));
                    let p = self.pending.get_or_insert_with(|| Pending { digits: String::new(), first: i });
                    p.digits.push_str(d);
                    Ok(())
                }
            },
            Lexeme::Marker(place) => {
                let Some(p) = self.pending.take() else {
                    return Err(match place {
                        Place::Frac(_) if !self.point => {
                            self.fail(Rule::DecimalPoint, i, "fraction marker before the decimal point")
                        }
                        Place::Frac(_) => self.fail(Rule::FractionDepths, i, "fraction marker without a group"),
                        Place::Int(_) => self.fail(Rule::IntegerLevels, i, "integer marker without a group"),
                    });
                };
                self.tokens.push(Token::new(TokenKind::Marker, text, None));
                self.complete_group(p.digits, place, p.first, i)
            }
            Lexeme::Compound(d, place) => {
                self.tokens.push(Token::new(TokenKind::GroupWithMarker, text, None));
                self.complete_group(d.to_string(), place, i, i)
            }
            Lexeme::Point => {
                if self.point {
                    return Err(self.fail(Rule::DecimalPoint, i, "second decimal point"));
                }
                self.flush_int(i)?;
                self.check_int_complete(i)?;
                self.point = true;
                self.tokens.push(Token::new(TokenKind::DecimalPoint, text, None));
                Ok(())
            }
            Lexeme::Terminator(len) => {
                if !self.config.preserve_precision {
                    return Err(self.fail(Rule::Terminator, i, "terminator outside precision-preserving mode"));
                }
                if self.pending.is_some() && self.point {
                    return Err(self.fail(Rule::FractionDepths, i, "fraction group without a depth marker"));
                }
                let Some(last) = self.frac_groups.last() else {
                    return Err(self.fail(Rule::Terminator, i, "terminator without a fraction"));
                };
                if len == 0 || len > self.config.group_size {
                    return Err(self.fail(Rule::Terminator, i, format!("terminator length {len} is outside 1..=N")));
                }
                let padded = last.padded(self.config.group_size);
                if padded[len as usize..].bytes().any(|b| b != b'0') {
                    return Err(self.fail(
                        Rule::Terminator,
                        i,
                        format!("group {padded} has significant digits beyond length {len}"),
                    ));
                }
                self.tokens.push(Token::new(TokenKind::Terminator, text, None));
                self.terminator = Some(len);
                Ok(())
            }
        }
    }

    /// A new integer group may not start once level 0 is closed.
    fn check_open_int(&self, i: usize) -> Step {
        if !self.point && self.int_closed() {
            return Err(self.fail(Rule::IntegerLevels, i, "group follows the level-0 group"));
        }
        Ok(())
    }

    /// Digits still pending at a decimal point or at the end form the level-0 group.
    fn flush_int(&mut self, i: usize) -> Step {
        if let Some(p) = self.pending.take() {
            self.complete_group(p.digits, Place::Int(0), p.first, i)?;
        }
        Ok(())
    }

    fn check_int_complete(&self, i: usize) -> Step {
        if self.int_groups.is_empty() {
            return Err(self.fail(Rule::IntegerLevels, i, "missing integer part"));
        }
        if !self.int_closed() {
            return Err(self.fail(Rule::IntegerLevels, i, "integer part does not reach level 0"));
        }
        Ok(())
    }

    fn complete_group(&mut self, digits: String, place: Place, first: usize, i: usize) -> Step {
        let n = self.n();
        let lenient = self.strictness == Strictness::Lenient;
        match place {
            Place::Int(level) => {
                if self.point {
                    return Err(self.fail(Rule::DecimalPoint, i, "integer group after the decimal point"));
                }
                let is_top = self.int_groups.is_empty();
                if let Some(last) = self.int_groups.last() {
                    let Place::Int(prev) = last.place else { unreachable!() };
                    if prev == 0 {
                        return Err(self.fail(Rule::IntegerLevels, i, "group follows the level-0 group"));
                    }
                    if level != prev - 1 {
                        return Err(self.fail(
                            Rule::IntegerLevels,
                            i,
                            format!("level {level} follows level {prev}; expected {}", prev - 1),
                        ));
                    }
                }
                if digits.len() > n {
                    return Err(self.fail(Rule::Padding, i, format!("group {digits} is wider than {n} digits")));
                }
                let value = parse_digits(&digits);
                let unpadded = value.to_string();
                if level == 0 {
                    if !lenient && digits != unpadded {
                        return Err(self.fail(Rule::Padding, i, format!("level-0 group {digits} must be unpadded")));
                    }
                } else if is_top {
                    if value == 0 {
                        return Err(self.fail(Rule::Padding, i, "leading group is zero"));
                    }
                    let want_padded = self.config.pad_leading_group;
                    if !lenient && want_padded && digits.len() != n {
                        return Err(self.fail(Rule::Padding, i, format!("leading group {digits} must be padded")));
                    }
                    if !lenient && !want_padded && digits != unpadded {
                        return Err(self.fail(Rule::Padding, i, format!("leading group {digits} must be unpadded")));
                    }
                } else if !lenient && digits.len() != n {
                    return Err(self.fail(Rule::Padding, i, format!("group {digits} must have {n} digits")));
                }
                let group = DigitGroup { value, place, sig_len: self.config.group_size };
                self.assign_values(&group, &digits, first);
                self.int_groups.push(group);
            }
            Place::Frac(depth) => {
                if !self.point {
                    return Err(self.fail(Rule::DecimalPoint, i, "fraction group before the decimal point"));
                }
                let expected = self.frac_groups.len() as u32 + 1;
                if depth != expected {
                    return Err(self.fail(
                        Rule::FractionDepths,
                        i,
                        format!("depth {depth} where depth {expected} was expected"),
                    ));
                }
                if digits.len() != n {
                    return Err(self.fail(Rule::Padding, i, format!("fraction group {digits} must have {n} digits")));
                }
                let group = DigitGroup { value: parse_digits(&digits), place, sig_len: self.config.group_size };
                self.assign_values(&group, &digits, first);
                self.frac_groups.push(group);
            }
        }
        Ok(())
    }

    /// Writes exact values into the tokens from `first` on that spell `group`.
    fn assign_values(&mut self, group: &DigitGroup, digits: &str, first: usize) {
        let n = self.config.group_size;
        let slice = &mut self.tokens[first..];
        match self.config.mode {
            Mode::Compound | Mode::Marker => slice[0].value = Some(group.contribution(n)),
            Mode::DigitMarker => {
                let len = digits.len();
                for (j, tok) in slice.iter_mut().filter(|t| t.kind == TokenKind::Digit).enumerate() {
                    let d = u64::from(digits.as_bytes()[j] - b'0');
                    let exponent = match group.place {
                        Place::Int(level) => (n * level) as i32 + (len - 1 - j) as i32,
                        Place::Frac(depth) => -((n * (depth - 1)) as i32 + j as i32 + 1),
                    };
                    tok.value = Some(TokenValue::new(d, exponent));
                }
            }
        }
    }

    /// Checks the end-of-sequence rules and returns the parse.
    pub fn finish(mut self) -> std::result::Result<Parsed, Violation> {
        let i = self.index;
        if self.terminator.is_none() {
            if self.point {
                if self.pending.is_some() {
                    return Err(self.fail(Rule::FractionDepths, i, "fraction group without a depth marker"));
                }
                let Some(last) = self.frac_groups.last() else {
                    return Err(self.fail(Rule::DecimalPoint, i, "decimal point without a fraction"));
                };
                if self.config.preserve_precision {
                    return Err(self.fail(Rule::Terminator, i, "fraction is missing its terminator"));
                }
                if last.value == 0 {
                    return Err(self.fail(Rule::Padding, i, "trailing fraction group is zero"));
                }
            } else {
                self.flush_int(i)?;
                if self.index == 0 {
                    return Err(self.fail(Rule::IntegerLevels, i, "empty sequence"));
                }
                self.check_int_complete(i)?;
            }
        }
        Ok(Parsed {
            sign: self.sign,
            int_groups: self.int_groups,
            frac_groups: self.frac_groups,
            sig_len: self.terminator,
            tokens: self.tokens,
        })
    }

    /// Whether the tokens pushed so far form a complete valid sequence.
    pub fn accepting(&self) -> bool {
        self.clone().finish().is_ok()
    }
}

fn parse_all<S: AsRef<str>>(
    texts: &[S],
    config: &TstConfig,
    strictness: Strictness,
) -> std::result::Result<Parsed, Violation> {
    let mut parser = Parser::new(config, strictness);
    for t in texts {
        parser.push(t.as_ref())?;
    }
    parser.finish()
}

/// Checks a sequence of token strings against the strict rules of `config`.
pub fn validate_texts<S: AsRef<str>>(texts: &[S], config: &TstConfig) -> ValidationReport {
    match parse_all(texts, config, Strictness::Strict) {
        Ok(_) => ValidationReport { valid: true, violation: None },
        Err(v) => ValidationReport { valid: false, violation: Some(v) },
    }
}

pub fn validate(tokens: &TokenSequence, config: &TstConfig) -> ValidationReport {
    validate_texts(&tokens.texts(), config)
}

/// A decoded literal with its exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub literal: NumericLiteral,
    pub value: ExactValue,
    /// The input re-annotated with kinds and per-token values.
    pub tokens: TokenSequence,
}

impl Parsed {
    fn into_decoded(self, config: &TstConfig) -> Decoded {
        let n = config.group_size;
        let contributions: Vec<ExactValue> =
            self.tokens.iter().filter_map(|t| t.value.map(TokenValue::to_exact)).collect();
        let mut value = ExactValue::sum(&contributions);
        if self.sign == Sign::Minus {
            value = -value;
        }

        let mut int_digits = String::new();
        for (i, g) in self.int_groups.iter().enumerate() {
            if i == 0 {
                int_digits.push_str(&g.value.to_string());
            } else {
                int_digits.push_str(&g.padded(n));
            }
        }
        let mut frac_digits: String = self.frac_groups.iter().map(|g| g.padded(n)).collect();
        if let Some(sig) = self.sig_len {
            frac_digits.truncate(frac_digits.len() - (n - sig) as usize);
        }
        let literal = NumericLiteral::new(self.sign, int_digits, frac_digits);
        Decoded { tokens: TokenSequence::new(self.tokens, Some(literal.clone())), literal, value }
    }
}

/// Decodes token strings back to a literal. Accepts integer groups with or
/// without zero padding; everything else must be well formed.
pub fn decode_texts<S: AsRef<str>>(texts: &[S], config: &TstConfig) -> Result<Decoded> {
    decode_texts_with(texts, config, Strictness::Lenient)
}

pub fn decode_texts_with<S: AsRef<str>>(texts: &[S], config: &TstConfig, strictness: Strictness) -> Result<Decoded> {
    config.validate()?;
    parse_all(texts, config, strictness).map(|p| p.into_decoded(config)).map_err(Error::InvalidSequence)
}

pub fn decode(tokens: &TokenSequence, config: &TstConfig) -> Result<Decoded> {
    decode_texts(&tokens.texts(), config)
}

impl TokenSequence {
    /// Strictly parses token strings, annotating kinds and exact per-token values.
    pub fn parse<S: AsRef<str>>(texts: &[S], config: &TstConfig) -> Result<TokenSequence> {
        decode_texts_with(texts, config, Strictness::Strict).map(|d| d.tokens)
    }
}
