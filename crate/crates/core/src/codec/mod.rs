//! Number codec: canonical form, grouping, markers, encoding and the
//! structural parser used for validation and decoding.

mod canonical;
mod encode;
mod group;
mod marker;
mod parse;
mod token;

pub use canonical::canonicalize;
pub use encode::{check_range, encode};
pub use group::{group_fraction, group_integer, DigitGroup, Place};
pub use marker::{fraction_marker, integer_marker, terminator};
pub(crate) use parse::Parser;
pub use parse::{
    decode, decode_texts, decode_texts_with, validate, validate_texts, Decoded, Rule, Strictness, ValidationReport,
    Violation,
};
pub use token::{token_value, Token, TokenKind, TokenSequence};
