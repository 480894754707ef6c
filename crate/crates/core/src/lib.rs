//! Magnitude-annotated number tokenization.
//!
//! Numbers are split into groups of `N` digits (three by default). Every
//! integer group above the units carries a magnitude marker (`k`, `m`, ...)
//! and every fraction group a precision marker (`p`, `pp`, ...), so each token
//! has one exact value independent of its neighbours:
//!
//! ```
//! use numtok_core::{encode, NumericLiteral, TstConfig};
//!
//! let config = TstConfig { pad_leading_group: false, ..TstConfig::default() };
//! let literal = NumericLiteral::from_plain("1234567.5").unwrap();
//! assert_eq!(encode(&literal, &config).unwrap().to_string(), "1m 234k 567 . 500p");
//! ```

pub mod codec;
mod config;
mod digits;
mod error;
pub mod pipeline;
pub mod scanner;
pub mod stats;
mod value;
pub mod vocab;

pub use codec::{
    canonicalize, decode, decode_texts, encode, fraction_marker, group_fraction, group_integer, integer_marker,
    token_value, validate, validate_texts, Decoded, DigitGroup, Place, Rule, Token, TokenKind, TokenSequence,
    ValidationReport, Violation,
};
pub use config::{DecimalPointPolicy, MarkerStyle, Mode, TstConfig, MAX_GROUP_SIZE};
pub use digits::{decimal_value, normalize_digits};
pub use error::{Error, Result};
pub use scanner::{parse_literal, scan, LocaleRule, NumericLiteral, ScanSegment, Scanner, SegmentKind, Sign};
pub use stats::{StatsCounter, StatsReport};
pub use value::{ExactValue, TokenValue};
pub use vocab::{ExportFormat, VocabCounts, VocabEntry, Vocabulary};

/// Crate version, shared by the command-line tool and the Python module.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
