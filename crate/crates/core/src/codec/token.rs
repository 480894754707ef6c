use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codec::marker::{lex, Lexeme};
use crate::config::{Mode, TstConfig};
use crate::error::{Error, Result};
use crate::scanner::NumericLiteral;
use crate::value::TokenValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    DecimalPoint,
    Sign,
    Terminator,
    Marker,
    Group,
    GroupWithMarker,
    Digit,
}

impl TokenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TokenKind::DecimalPoint => "decimal_point",
            TokenKind::Sign => "sign",
            TokenKind::Terminator => "terminator",
            TokenKind::Marker => "marker",
            TokenKind::Group => "group",
            TokenKind::GroupWithMarker => "group_with_marker",
            TokenKind::Digit => "digit",
        }
    }

    pub fn is_value_bearing(self) -> bool {
        matches!(self, TokenKind::Group | TokenKind::GroupWithMarker | TokenKind::Digit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<TokenValue>,
}

impl Token {
    pub fn new(kind: TokenKind, text: impl Into<String>, value: Option<TokenValue>) -> Self {
        Self { kind, text: text.into(), value }
    }

    /// Classifies a token string on its own. Fused group tokens get their exact
    /// value; bare digit strings get their face value, since their scale depends
    /// on the marker that follows (see [`TokenSequence::parse`]).
    pub fn from_text(text: &str, config: &TstConfig) -> Option<Token> {
        let face = |d: &str| d.parse::<u64>().ok().map(|v| TokenValue::new(v, 0));
        let (kind, value) = match lex(text, config) {
            Lexeme::Sign(_) => (TokenKind::Sign, None),
            Lexeme::Point => (TokenKind::DecimalPoint, None),
            Lexeme::Terminator(_) => (TokenKind::Terminator, None),
            Lexeme::Marker(_) if config.mode != Mode::Compound => (TokenKind::Marker, None),
            Lexeme::Digits(d) if config.mode == Mode::DigitMarker => {
                if d.len() != 1 {
                    return None;
                }
                (TokenKind::Digit, face(d))
            }
            Lexeme::Digits(d) if d.len() <= config.group_size as usize => (TokenKind::Group, face(d)),
            Lexeme::Compound(d, place) if config.mode == Mode::Compound && d.len() <= config.group_size as usize => {
                let v = d.parse::<u64>().ok()?;
                (TokenKind::GroupWithMarker, Some(TokenValue::new(v, place.exponent(config.group_size))))
            }
            _ => return None,
        };
        Some(Token::new(kind, text, value))
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Exact value of a value-bearing token.
pub fn token_value(token: &Token) -> Result<TokenValue> {
    match token.value {
        Some(v) if token.kind.is_value_bearing() => Ok(v),
        _ => Err(Error::NotValueBearing(token.text.clone())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TokenSequence {
    pub tokens: Vec<Token>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<NumericLiteral>,
}

impl TokenSequence {
    pub fn new(tokens: Vec<Token>, source: Option<NumericLiteral>) -> Self {
        Self { tokens, source }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn texts(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.text.as_str()).collect()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Token> {
        self.tokens.iter()
    }
}

impl fmt::Display for TokenSequence {
    /// Space-separated token texts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&t.text)?;
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a TokenSequence {
    type Item = &'a Token;
    type IntoIter = std::slice::Iter<'a, Token>;

    fn into_iter(self) -> Self::IntoIter {
        self.tokens.iter()
    }
}
