//! Token inventories implied by a configuration.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codec::{fraction_marker, integer_marker, terminator, Place, TokenKind};
use crate::config::{Mode, TstConfig};
use crate::error::{Error, Result};
use crate::value::TokenValue;

/// Largest vocabulary [`Vocabulary::build`] will materialize.
pub const MAX_ENTRIES: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VocabEntry {
    pub id: u32,
    pub text: String,
    pub kind: TokenKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<TokenValue>,
}

/// Entry counts per category, computed without enumerating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VocabCounts {
    /// Decimal point, signs and terminators.
    pub structural: u128,
    pub markers: u128,
    /// Group strings without a marker.
    pub bare_groups: u128,
    /// Group strings fused with a marker.
    pub suffixed: u128,
    pub digits: u128,
    pub total: u128,
    pub value_bearing: u128,
}

#[derive(Debug, Clone, Default)]
pub struct Vocabulary {
    entries: Vec<VocabEntry>,
    index: HashMap<String, usize>,
    config_fingerprint: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExportFormat {
    #[default]
    Lines,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lines" => Ok(ExportFormat::Lines),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::InvalidConfig(format!("unknown export format {s:?}; expected lines or json"))),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Lines => "lines",
            ExportFormat::Json => "json",
        })
    }
}

fn pow10(e: u32) -> u128 {
    10u128.pow(e)
}

/// Group values whose zero-padded string differs from the plain decimal one.
fn padded_only(n: u32) -> u128 {
    if n >= 2 {
        pow10(n - 1)
    } else {
        0
    }
}

/// Marker mode needs zero-padded group strings whenever a padded group can occur.
fn marker_mode_needs_padded(config: &TstConfig) -> bool {
    config.max_frac_depth >= 1 || config.max_int_levels >= 2 || (config.max_int_levels >= 1 && config.pad_leading_group)
}

/// Closed-form entry counts for `config`.
pub fn size(config: &TstConfig) -> Result<VocabCounts> {
    config.validate()?;
    let n = config.group_size;
    let radix = pow10(n);
    let l_int = u128::from(config.max_int_levels);
    let l_frac = u128::from(config.max_frac_depth);
    let structural = 3 + if config.preserve_precision { u128::from(n) } else { 0 };
    let all_markers = l_int + l_frac;

    let mut c = VocabCounts { structural, ..VocabCounts::default() };
    match config.mode {
        Mode::Compound => {
            c.bare_groups = radix;
            c.suffixed = radix * all_markers;
            if !config.pad_leading_group {
                c.suffixed += padded_only(n).saturating_sub(1) * l_int;
            }
        }
        Mode::Marker => {
            c.markers = all_markers;
            c.bare_groups = radix + if marker_mode_needs_padded(config) { padded_only(n) } else { 0 };
        }
        Mode::DigitMarker => {
            c.markers = all_markers;
            c.digits = 10;
        }
    }
    c.value_bearing = c.bare_groups + c.suffixed + c.digits;
    c.total = c.structural + c.markers + c.value_bearing;
    Ok(c)
}

struct Builder {
    entries: Vec<VocabEntry>,
}

impl Builder {
    fn push(&mut self, text: String, kind: TokenKind, value: Option<TokenValue>) {
        let id = self.entries.len() as u32;
        self.entries.push(VocabEntry { id, text, kind, value });
    }
}

impl Vocabulary {
    /// Enumerates every token `encode` can emit under `config`, ordered by
    /// kind, then level or depth, then value.
    pub fn build(config: &TstConfig) -> Result<Vocabulary> {
        let counts = size(config)?;
        if counts.total > MAX_ENTRIES {
            return Err(Error::InvalidConfig(format!(
                "vocabulary of {} entries exceeds the supported {MAX_ENTRIES}",
                counts.total
            )));
        }
        let n = config.group_size;
        let width = n as usize;
        let radix = config.radix();
        let mut b = Builder { entries: Vec::with_capacity(counts.total as usize) };

        b.push(".".into(), TokenKind::DecimalPoint, None);
        b.push("-".into(), TokenKind::Sign, None);
        b.push("+".into(), TokenKind::Sign, None);
        if config.preserve_precision {
            for len in 1..=n {
                b.push(terminator(len), TokenKind::Terminator, None);
            }
        }

        let places: Vec<Place> =
            (1..=config.max_int_levels).map(Place::Int).chain((1..=config.max_frac_depth).map(Place::Frac)).collect();
        let marker = |p: Place| match p {
            Place::Int(k) => integer_marker(k, config),
            Place::Frac(d) => fraction_marker(d, config),
        };

        match config.mode {
            Mode::Compound => {
                for v in 0..radix {
                    b.push(v.to_string(), TokenKind::Group, Some(TokenValue::new(v, 0)));
                }
                for &place in &places {
                    let m = marker(place)?;
                    let exp = place.exponent(n);
                    for v in 0..radix {
                        let text = format!("{v:0width$}{m}");
                        b.push(text, TokenKind::GroupWithMarker, Some(TokenValue::new(v, exp)));
                    }
                    if !config.pad_leading_group && matches!(place, Place::Int(_)) {
                        for v in 1..radix / 10 {
                            b.push(format!("{v}{m}"), TokenKind::GroupWithMarker, Some(TokenValue::new(v, exp)));
                        }
                    }
                }
            }
            Mode::Marker => {
                for &place in &places {
                    b.push(marker(place)?, TokenKind::Marker, None);
                }
                for v in 0..radix {
                    b.push(v.to_string(), TokenKind::Group, Some(TokenValue::new(v, 0)));
                }
                if marker_mode_needs_padded(config) && n >= 2 {
                    for v in 0..radix / 10 {
                        b.push(format!("{v:0width$}"), TokenKind::Group, Some(TokenValue::new(v, 0)));
                    }
                }
            }
            Mode::DigitMarker => {
                for &place in &places {
                    b.push(marker(place)?, TokenKind::Marker, None);
                }
                for v in 0..10 {
                    b.push(v.to_string(), TokenKind::Digit, Some(TokenValue::new(v, 0)));
                }
            }
        }

        debug_assert_eq!(b.entries.len() as u128, counts.total);
        Ok(Vocabulary::from_entries(b.entries, config.fingerprint()))
    }

    fn from_entries(entries: Vec<VocabEntry>, config_fingerprint: String) -> Self {
        let index = entries.iter().enumerate().map(|(i, e)| (e.text.clone(), i)).collect();
        Self { entries, index, config_fingerprint }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[VocabEntry] {
        &self.entries
    }

    pub fn get(&self, id: u32) -> Option<&VocabEntry> {
        self.entries.get(id as usize)
    }

    pub fn lookup(&self, text: &str) -> Option<&VocabEntry> {
        self.index.get(text).map(|&i| &self.entries[i])
    }

    pub fn contains(&self, text: &str) -> bool {
        self.index.contains_key(text)
    }

    pub fn config_fingerprint(&self) -> &str {
        &self.config_fingerprint
    }

    pub fn export<W: Write>(&self, format: ExportFormat, out: &mut W) -> io::Result<()> {
        match format {
            ExportFormat::Lines => {
                for e in &self.entries {
                    out.write_all(e.text.as_bytes())?;
                    out.write_all(b"\n")?;
                }
            }
            ExportFormat::Json => {
                #[derive(Serialize)]
                struct Row<'a> {
                    id: u32,
                    text: &'a str,
                    kind: TokenKind,
                    coefficient: Option<u64>,
                    exponent: Option<i32>,
                }
                out.write_all(b"[")?;
                for (i, e) in self.entries.iter().enumerate() {
                    out.write_all(if i == 0 { b"\n" } else { b",\n" })?;
                    let row = Row {
                        id: e.id,
                        text: &e.text,
                        kind: e.kind,
                        coefficient: e.value.map(|v| v.coefficient),
                        exponent: e.value.map(|v| v.exponent),
                    };
                    serde_json::to_writer(&mut *out, &row)?;
                }
                out.write_all(if self.entries.is_empty() { b"]\n" } else { b"\n]\n" })?;
            }
        }
        Ok(())
    }

    pub fn export_to_vec(&self, format: ExportFormat) -> Vec<u8> {
        let mut buf = Vec::new();
        self.export(format, &mut buf).expect("writing to a Vec cannot fail");
        buf
    }
}
