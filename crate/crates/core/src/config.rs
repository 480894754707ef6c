use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// How digit groups and magnitude markers are laid out as tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// One fused token per group, e.g. `234k`.
    #[default]
    Compound,
    /// Group and marker as separate tokens, e.g. `234` `k`.
    Marker,
    /// One token per digit with a marker after each suffixed group, e.g. `2` `3` `4` `k`.
    DigitMarker,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Compound, Mode::Marker, Mode::DigitMarker];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Compound => "compound",
            Mode::Marker => "marker",
            Mode::DigitMarker => "digit_marker",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compound" => Ok(Mode::Compound),
            "marker" => Ok(Mode::Marker),
            "digit_marker" | "digit-marker" => Ok(Mode::DigitMarker),
            other => Err(Error::InvalidConfig(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MarkerStyle {
    /// `k m b t q` for integers and repeated `p` for fractions. Group size 3 only.
    #[default]
    TriadicHuman,
    /// Reserved `⟨E+6⟩` / `⟨E-3⟩` markers carrying the signed decimal exponent.
    Systematic,
}

impl MarkerStyle {
    pub fn as_str(self) -> &'static str {
        match self {
            MarkerStyle::TriadicHuman => "triadic_human",
            MarkerStyle::Systematic => "systematic",
        }
    }
}

impl std::str::FromStr for MarkerStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triadic_human" | "triadic-human" | "human" => Ok(MarkerStyle::TriadicHuman),
            "systematic" => Ok(MarkerStyle::Systematic),
            other => Err(Error::InvalidConfig(format!("unknown marker style {other:?}"))),
        }
    }
}

/// The decimal point is only emitted when a fraction follows. Kept as a field so
/// config files can state it explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecimalPointPolicy {
    #[default]
    WhenFractionPresent,
}

pub const MAX_GROUP_SIZE: u32 = 18;
const MAX_EXPONENT_SPAN: u64 = 100_000;
const HUMAN_INT_MARKERS: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TstConfig {
    pub group_size: u32,
    pub mode: Mode,
    pub marker_style: MarkerStyle,
    pub max_int_levels: u32,
    pub max_frac_depth: u32,
    pub pad_leading_group: bool,
    pub preserve_precision: bool,
    pub emit_decimal_point: DecimalPointPolicy,
}

impl Default for TstConfig {
    fn default() -> Self {
        Self {
            group_size: 3,
            mode: Mode::Compound,
            marker_style: MarkerStyle::TriadicHuman,
            max_int_levels: 5,
            max_frac_depth: 5,
            pad_leading_group: true,
            preserve_precision: false,
            emit_decimal_point: DecimalPointPolicy::WhenFractionPresent,
        }
    }
}

impl TstConfig {
    /// Systematic-marker config for an arbitrary group size.
    pub fn systematic(group_size: u32, max_int_levels: u32, max_frac_depth: u32) -> Self {
        Self { group_size, marker_style: MarkerStyle::Systematic, max_int_levels, max_frac_depth, ..Self::default() }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.group_size;
        if n == 0 || n > MAX_GROUP_SIZE {
            return Err(Error::InvalidConfig(format!("group_size must be in 1..={MAX_GROUP_SIZE}, got {n}")));
        }
        if self.marker_style == MarkerStyle::TriadicHuman {
            if n != 3 {
                return Err(Error::InvalidConfig(format!("triadic_human markers require group_size 3, got {n}")));
            }
            if self.max_int_levels > HUMAN_INT_MARKERS {
                return Err(Error::InvalidConfig(format!(
                    "triadic_human markers cover at most {HUMAN_INT_MARKERS} integer levels, got {}",
                    self.max_int_levels
                )));
            }
        }
        let span = u64::from(n) * (u64::from(self.max_int_levels) + 1 + u64::from(self.max_frac_depth));
        if span > MAX_EXPONENT_SPAN {
            return Err(Error::InvalidConfig(format!(
                "range of {span} decimal orders exceeds the supported {MAX_EXPONENT_SPAN}"
            )));
        }
        Ok(())
    }

    /// Largest number of integer digits a literal may have.
    pub fn max_int_digits(&self) -> usize {
        (self.group_size * (self.max_int_levels + 1)) as usize
    }

    /// Largest number of fraction digits a literal may have after canonicalization.
    pub fn max_frac_digits(&self) -> usize {
        (self.group_size * self.max_frac_depth) as usize
    }

    /// `10^N`, the number of distinct group values.
    pub fn radix(&self) -> u64 {
        10u64.pow(self.group_size)
    }

    /// Parses and validates a JSON object; missing fields take their defaults.
    pub fn from_json(json: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(json).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    /// Stable hex digest of the config's JSON form.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_vec(self).expect("config serializes");
        let digest = Sha256::digest(&json);
        hex::encode(&digest[..8])
    }
}
