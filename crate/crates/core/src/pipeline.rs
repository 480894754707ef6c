//! Line-level encoding and decoding of running text.
//!
//! Two wire forms are supported. The tokens form replaces every number with
//! its space-joined tokens and leaves the rest of the line untouched; decoding
//! it is best effort, since text that happens to look like a token run is
//! read back as a number. The JSONL form keeps text and token segments apart
//! and decodes losslessly.

use serde::{Deserialize, Serialize};

use crate::codec::{decode_texts, encode, Parser, Strictness};
use crate::config::TstConfig;
use crate::error::Result;
use crate::scanner::{ScanSegment, Scanner, SegmentKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LineSegment {
    Text { span: (usize, usize), text: String },
    Number { span: (usize, usize), tokens: Vec<String> },
}

/// A number that could not be encoded and was kept as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub span: (usize, usize),
    pub code: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EncodedLine {
    pub segments: Vec<LineSegment>,
    #[serde(skip)]
    pub errors: Vec<LineError>,
}

impl EncodedLine {
    /// The line with each number replaced by its space-joined tokens.
    pub fn to_tokens_line(&self) -> String {
        let mut out = String::new();
        for seg in &self.segments {
            match seg {
                LineSegment::Text { text, .. } => out.push_str(text),
                LineSegment::Number { tokens, .. } => out.push_str(&tokens.join(" ")),
            }
        }
        out
    }

    /// Compact JSON object `{"segments": [...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("segments serialize")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    /// All tokens of all numbers, in order.
    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.segments
            .iter()
            .flat_map(|s| match s {
                LineSegment::Number { tokens, .. } => tokens.as_slice(),
                LineSegment::Text { .. } => &[],
            })
            .map(String::as_str)
    }
}

fn text_segment(line: &str, seg: &ScanSegment) -> LineSegment {
    LineSegment::Text { span: seg.span, text: seg.text(line).to_string() }
}

/// Scans `line` and encodes every number in it. Numbers outside the
/// configured range stay as text and are reported in `errors`.
pub fn encode_line(line: &str, config: &TstConfig, scanner: &Scanner) -> Result<EncodedLine> {
    config.validate()?;
    let mut out = EncodedLine::default();
    for seg in scanner.scan(line) {
        let literal = match (&seg.kind, &seg.literal) {
            (SegmentKind::Number, Some(lit)) => lit,
            _ => {
                out.segments.push(text_segment(line, &seg));
                continue;
            }
        };
        match encode(literal, config) {
            Ok(seq) => out
                .segments
                .push(LineSegment::Number { span: seg.span, tokens: seq.tokens.into_iter().map(|t| t.text).collect() }),
            Err(e) => {
                out.errors.push(LineError { span: seg.span, code: e.code(), message: e.to_string() });
                out.segments.push(text_segment(line, &seg));
            }
        }
    }
    Ok(out)
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Longest valid token run starting at byte `start`; returns its end and tokens.
fn longest_run<'a>(line: &'a str, start: usize, config: &TstConfig) -> Option<(usize, Vec<&'a str>)> {
    let mut parser = Parser::new(config, Strictness::Strict);
    let mut tokens: Vec<&str> = Vec::new();
    let mut best: Option<(usize, usize)> = None;
    let mut pos = start;
    loop {
        let rest = &line[pos..];
        let chunk_len = rest.find([' ', '\t']).unwrap_or(rest.len());
        let chunk = &rest[..chunk_len];
        if chunk.is_empty() {
            break;
        }
        let mut whole = parser.clone();
        if whole.push(chunk).is_ok() && whole.viable() {
            parser = whole;
            tokens.push(chunk);
            pos += chunk_len;
            if parser.accepting() {
                best = Some((pos, tokens.len()));
            }
            let next = &line[pos..];
            if next.starts_with(' ') && next[1..].chars().next().is_some_and(|c| c != ' ' && c != '\t') {
                pos += 1;
                continue;
            }
            break;
        }
        // The run may end inside a chunk, just before punctuation.
        let cuts = chunk.char_indices().filter(|&(i, c)| i > 0 && !is_word_char(c)).map(|(i, _)| i);
        for cut in cuts.collect::<Vec<_>>().into_iter().rev() {
            let mut p = parser.clone();
            if p.push(&chunk[..cut]).is_ok() && p.accepting() {
                tokens.push(&chunk[..cut]);
                best = Some((pos + cut, tokens.len()));
                break;
            }
        }
        break;
    }
    best.map(|(end, count)| {
        tokens.truncate(count);
        (end, tokens)
    })
}

/// Reads a tokens-form line back to text, rendering each maximal valid
/// token run as a canonical numeral with `decimal_mark`.
pub fn decode_line(line: &str, config: &TstConfig, decimal_mark: char) -> Result<String> {
    config.validate()?;
    let mut out = String::with_capacity(line.len());
    let mut copied = 0;
    let mut prev: Option<char> = None;
    let mut iter = line.char_indices().peekable();
    while let Some((i, c)) = iter.next() {
        let can_start = (c.is_ascii_digit() || c == '-' || c == '+') && !prev.is_some_and(is_word_char);
        if i >= copied && can_start {
            if let Some((end, tokens)) = longest_run(line, i, config) {
                let decoded = decode_texts(&tokens, config)?;
                out.push_str(&line[copied..i]);
                out.push_str(&decoded.literal.render(decimal_mark));
                copied = end;
                while iter.peek().is_some_and(|&(j, _)| j < end) {
                    iter.next();
                }
                prev = line[..end].chars().next_back();
                continue;
            }
        }
        prev = Some(c);
    }
    out.push_str(&line[copied..]);
    Ok(out)
}

/// Reconstructs a line from its JSONL form; text segments are copied verbatim.
pub fn decode_segments(line: &EncodedLine, config: &TstConfig, decimal_mark: char) -> Result<String> {
    let mut out = String::new();
    for seg in &line.segments {
        match seg {
            LineSegment::Text { text, .. } => out.push_str(text),
            LineSegment::Number { tokens, .. } => {
                out.push_str(&decode_texts(tokens, config)?.literal.render(decimal_mark));
            }
        }
    }
    Ok(out)
}

pub fn decode_json_line(json: &str, config: &TstConfig, decimal_mark: char) -> Result<String> {
    decode_segments(&EncodedLine::from_json(json)?, config, decimal_mark)
}
