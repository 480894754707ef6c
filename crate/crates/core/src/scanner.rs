//! Finds numeric literals in running text and parses them under a locale's
//! grouping rules.
//!
//! A literal is an optional sign, a digit run that may contain group
//! separators, and an optional decimal mark followed by at least one digit.
//! Literals must stand alone: a run touching a letter, digit or underscore on
//! either side is left as text, as is any run that does not parse cleanly
//! (two decimal marks, misplaced separators). Scanning never fails.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::digits::decimal_value;
use crate::error::{Error, Result};
use crate::value::ExactValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    #[default]
    None,
    Minus,
    Plus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::None => "",
            Sign::Minus => "-",
            Sign::Plus => "+",
        }
    }

    fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

/// A decimal literal as written: digits are ASCII, separators removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumericLiteral {
    pub sign: Sign,
    pub int_digits: String,
    pub frac_digits: String,
    pub surface: String,
}

impl NumericLiteral {
    /// Builds a literal from plain ASCII `[-+]digits[.digits]` text.
    pub fn from_plain(s: &str) -> Result<Self> {
        parse_literal(s, &LocaleRule::plain())
    }

    pub fn new(sign: Sign, int_digits: impl Into<String>, frac_digits: impl Into<String>) -> Self {
        let mut lit =
            Self { sign, int_digits: int_digits.into(), frac_digits: frac_digits.into(), surface: String::new() };
        lit.surface = lit.render('.');
        lit
    }

    pub fn value(&self) -> ExactValue {
        ExactValue::from_digits(self.sign == Sign::Minus, &self.int_digits, &self.frac_digits)
    }

    /// Sign, integer digits, and the fraction behind `decimal_mark`, without separators.
    pub fn render(&self, decimal_mark: char) -> String {
        let mut s = String::with_capacity(self.int_digits.len() + self.frac_digits.len() + 2);
        s.push_str(self.sign.as_str());
        s.push_str(&self.int_digits);
        if !self.frac_digits.is_empty() {
            s.push(decimal_mark);
            s.push_str(&self.frac_digits);
        }
        s
    }

    pub fn digit_count(&self) -> usize {
        self.int_digits.len() + self.frac_digits.len()
    }
}

/// Digit grouping conventions of a locale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocaleRule {
    pub name: String,
    /// Group sizes counted from the decimal mark leftwards; the last entry repeats.
    pub group_pattern: Vec<usize>,
    /// Every character accepted between groups. One literal uses one of them consistently.
    #[serde(with = "char_set")]
    pub separator: Vec<char>,
    pub decimal_mark: char,
}

mod char_set {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(chars: &[char], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&chars.iter().collect::<String>())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<char>, D::Error> {
        Ok(String::deserialize(d)?.chars().collect())
    }
}

impl Default for LocaleRule {
    fn default() -> Self {
        Self::western()
    }
}

impl LocaleRule {
    pub fn western() -> Self {
        Self { name: "western".into(), group_pattern: vec![3], separator: vec![','], decimal_mark: '.' }
    }

    /// Lakh/crore grouping: 12,34,567.
    pub fn indian() -> Self {
        Self { name: "indian".into(), group_pattern: vec![3, 2], separator: vec![','], decimal_mark: '.' }
    }

    /// Myriad grouping: 1234,5678.
    pub fn east_asian() -> Self {
        Self { name: "east_asian".into(), group_pattern: vec![4], separator: vec![','], decimal_mark: '.' }
    }

    /// No separators at all; only `digits[.digits]`.
    pub fn plain() -> Self {
        Self { name: "plain".into(), group_pattern: vec![3], separator: vec![], decimal_mark: '.' }
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "western" => Some(Self::western()),
            "indian" => Some(Self::indian()),
            "east_asian" | "east-asian" => Some(Self::east_asian()),
            "plain" => Some(Self::plain()),
            _ => None,
        }
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let rule: LocaleRule = serde_json::from_str(json)?;
        rule.validate()?;
        Ok(rule)
    }

    pub fn validate(&self) -> Result<()> {
        if self.group_pattern.is_empty() || self.group_pattern.contains(&0) {
            return Err(Error::InvalidLocale(format!("{}: group sizes must be positive and non-empty", self.name)));
        }
        if self.separator.contains(&self.decimal_mark) {
            return Err(Error::InvalidLocale(format!(
                "{}: decimal mark {:?} is also a separator",
                self.name, self.decimal_mark
            )));
        }
        let bad = |c: char| c.is_alphanumeric() || c == '-' || c == '+';
        if bad(self.decimal_mark) || self.separator.iter().any(|&c| bad(c)) {
            return Err(Error::InvalidLocale(format!(
                "{}: separators and decimal mark must not be digits, letters or signs",
                self.name
            )));
        }
        Ok(())
    }

    /// Size of the `i`-th group counted from the right.
    fn group_size(&self, i: usize) -> usize {
        self.group_pattern[i.min(self.group_pattern.len() - 1)]
    }

    /// Inserts `sep` into `digits` following the group pattern.
    pub fn group_digits(&self, digits: &str, sep: char) -> String {
        let mut groups = Vec::new();
        let mut end = digits.len();
        let mut i = 0;
        while end > 0 {
            let start = end.saturating_sub(self.group_size(i));
            groups.push(&digits[start..end]);
            end = start;
            i += 1;
        }
        groups.reverse();
        groups.join(&sep.to_string())
    }

    fn is_separator(&self, c: char) -> bool {
        self.separator.contains(&c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    Text,
    Number,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSegment {
    pub kind: SegmentKind,
    /// Byte offsets `(start, end)` into the scanned text.
    pub span: (usize, usize),
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub literal: Option<NumericLiteral>,
}

impl ScanSegment {
    pub fn range(&self) -> Range<usize> {
        self.span.0..self.span.1
    }

    pub fn text<'a>(&self, source: &'a str) -> &'a str {
        &source[self.range()]
    }
}

/// Scanner bound to a locale. Cheap to clone and safe to share across threads.
#[derive(Debug, Clone, Default)]
pub struct Scanner {
    rule: LocaleRule,
    normalize_digits: bool,
}

/// Splits `text` into text and number segments using ASCII digits only.
pub fn scan(text: &str, rule: &LocaleRule) -> Vec<ScanSegment> {
    Scanner::new(rule.clone()).scan(text)
}

/// Parses a complete literal (sign, grouped digits, optional fraction).
pub fn parse_literal(s: &str, rule: &LocaleRule) -> Result<NumericLiteral> {
    Scanner::new(rule.clone()).parse_literal(s)
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Characters after which a `+`/`-` is read as a sign rather than an operator.
fn opens_signed_context(prev: Option<char>) -> bool {
    match prev {
        None => true,
        Some(c) => c.is_whitespace() || "([{<=:;,".contains(c),
    }
}

impl Scanner {
    pub fn new(rule: LocaleRule) -> Self {
        Self { rule, normalize_digits: false }
    }

    /// Also accept decimal digits from non-Latin scripts, normalized to ASCII.
    pub fn with_digit_normalization(mut self, enabled: bool) -> Self {
        self.normalize_digits = enabled;
        self
    }

    pub fn rule(&self) -> &LocaleRule {
        &self.rule
    }

    fn digit(&self, c: char) -> Option<u32> {
        if self.normalize_digits {
            decimal_value(c)
        } else {
            c.to_digit(10)
        }
    }

    fn is_digit(&self, c: char) -> bool {
        self.digit(c).is_some()
    }

    pub fn scan(&self, text: &str) -> Vec<ScanSegment> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let byte_at = |i: usize| chars.get(i).map_or(text.len(), |&(b, _)| b);
        let char_at = |i: usize| chars.get(i).map(|&(_, c)| c);
        let starts_run = |i: usize| match char_at(i) {
            Some(c) if self.is_digit(c) => true,
            Some(c) if c == self.rule.decimal_mark => char_at(i + 1).is_some_and(|n| self.is_digit(n)),
            _ => false,
        };

        let mut segments = Vec::new();
        let mut text_start = 0usize;
        let mut i = 0usize;
        while i < chars.len() {
            let c = chars[i].1;
            let prev = i.checked_sub(1).and_then(char_at);
            let (start, run_start) = if starts_run(i) {
                (i, i)
            } else if Sign::from_char(c).is_some() && starts_run(i + 1) && opens_signed_context(prev) {
                (i, i + 1)
            } else {
                i += 1;
                continue;
            };

            let mut end = run_start;
            while let Some(c) = char_at(end) {
                if self.is_digit(c) || c == self.rule.decimal_mark || self.rule.is_separator(c) {
                    end += 1;
                } else {
                    break;
                }
            }
            while end > run_start && !char_at(end - 1).is_some_and(|c| self.is_digit(c)) {
                end -= 1;
            }

            let bounded = !prev.is_some_and(is_word_char) && !char_at(end).is_some_and(is_word_char);
            let surface = &text[byte_at(start)..byte_at(end)];
            if bounded {
                if let Ok(literal) = self.parse_literal(surface) {
                    if text_start < byte_at(start) {
                        segments.push(ScanSegment {
                            kind: SegmentKind::Text,
                            span: (text_start, byte_at(start)),
                            literal: None,
                        });
                    }
                    segments.push(ScanSegment {
                        kind: SegmentKind::Number,
                        span: (byte_at(start), byte_at(end)),
                        literal: Some(literal),
                    });
                    text_start = byte_at(end);
                }
            }
            i = end;
        }
        if text_start < text.len() {
            segments.push(ScanSegment { kind: SegmentKind::Text, span: (text_start, text.len()), literal: None });
        }
        segments
    }

    pub fn parse_literal(&self, s: &str) -> Result<NumericLiteral> {
        let malformed = |reason: &str| Error::MalformedLiteral { input: s.to_string(), reason: reason.to_string() };

        let mut rest = s;
        let mut sign = Sign::None;
        if let Some(c) = rest.chars().next() {
            if let Some(sg) = Sign::from_char(c) {
                sign = sg;
                rest = &rest[c.len_utf8()..];
            }
        }

        let mark = self.rule.decimal_mark;
        let mut parts = rest.split(mark);
        let int_part = parts.next().unwrap_or("");
        let frac_part = parts.next();
        if parts.next().is_some() {
            return Err(malformed("more than one decimal mark"));
        }

        let mut frac_digits = String::new();
        if let Some(frac) = frac_part {
            if frac.is_empty() {
                return Err(malformed("decimal mark must be followed by a digit"));
            }
            for c in frac.chars() {
                let d = self.digit(c).ok_or_else(|| malformed("fraction may only contain digits"))?;
                frac_digits.push(char::from(b'0' + d as u8));
            }
        }

        let int_digits = if int_part.is_empty() {
            if frac_part.is_none() {
                return Err(malformed("no digits"));
            }
            "0".to_string()
        } else {
            self.parse_integer_part(int_part).map_err(|r| malformed(&r))?
        };

        Ok(NumericLiteral { sign, int_digits, frac_digits, surface: s.to_string() })
    }

    fn parse_integer_part(&self, int_part: &str) -> std::result::Result<String, String> {
        let mut sep_used: Option<char> = None;
        let mut groups: Vec<String> = vec![String::new()];
        for c in int_part.chars() {
            if let Some(d) = self.digit(c) {
                groups.last_mut().expect("non-empty").push(char::from(b'0' + d as u8));
            } else if self.rule.is_separator(c) {
                match sep_used {
                    Some(s) if s != c => return Err("mixed group separators".into()),
                    _ => sep_used = Some(c),
                }
                groups.push(String::new());
            } else {
                return Err(format!("unexpected character {c:?}"));
            }
        }
        if groups.len() > 1 {
            for (i, g) in groups.iter().rev().enumerate() {
                let expected = self.rule.group_size(i);
                let leftmost = i == groups.len() - 1;
                let ok = if leftmost { (1..=expected).contains(&g.len()) } else { g.len() == expected };
                if !ok {
                    return Err(format!(
                        "group {g:?} does not match the {} grouping pattern {:?}",
                        self.rule.name, self.rule.group_pattern
                    ));
                }
            }
        } else if groups[0].is_empty() {
            return Err("no digits".into());
        }
        Ok(groups.concat())
    }
}

/// Maps every Unicode decimal digit to ASCII; other characters pass through.
pub fn normalize_digits(s: &str) -> String {
    crate::digits::normalize_digits(s)
}
