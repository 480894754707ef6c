#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use numtok_core::{ExactValue, MarkerStyle, Mode, NumericLiteral, Sign, TokenValue, TstConfig};
use proptest::prelude::*;

pub fn ten_pow(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), e as usize)
}

/// Value of a literal computed straight from its digit strings.
pub fn oracle(lit: &NumericLiteral) -> BigRational {
    let digits = format!("{}{}", lit.int_digits, lit.frac_digits);
    let mut numer = BigInt::parse_bytes(digits.as_bytes(), 10).unwrap();
    if lit.sign == Sign::Minus {
        numer = -numer;
    }
    BigRational::new(numer, ten_pow(lit.frac_digits.len() as u32))
}

fn scaled(coefficient: BigInt, exponent: i32) -> BigRational {
    if exponent >= 0 {
        BigRational::from_integer(coefficient * ten_pow(exponent as u32))
    } else {
        BigRational::new(coefficient, ten_pow(exponent.unsigned_abs()))
    }
}

pub fn exact(v: &ExactValue) -> BigRational {
    scaled(v.coefficient.clone(), v.exponent)
}

pub fn token(v: TokenValue) -> BigRational {
    scaled(BigInt::from(v.coefficient), v.exponent)
}

pub fn sum<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigRational {
    values.into_iter().fold(BigRational::zero(), |a, b| a + b)
}

pub fn is_one(r: &BigRational) -> bool {
    r.is_one()
}

pub fn arb_mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Compound), Just(Mode::Marker), Just(Mode::DigitMarker)]
}

pub fn arb_config() -> impl Strategy<Value = TstConfig> {
    (1u32..=4, any::<bool>(), 0u32..=5, 0u32..=5, arb_mode(), any::<bool>(), any::<bool>()).prop_map(
        |(n, human, l_int, l_frac, mode, pad, preserve)| {
            let style = if human && n == 3 { MarkerStyle::TriadicHuman } else { MarkerStyle::Systematic };
            TstConfig {
                group_size: n,
                marker_style: style,
                max_int_levels: l_int,
                max_frac_depth: l_frac,
                mode,
                pad_leading_group: pad,
                preserve_precision: preserve,
                ..TstConfig::default()
            }
        },
    )
}

fn digit_string(min: usize, max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(0u8..10, min..=max).prop_map(|d| d.into_iter().map(|x| char::from(b'0' + x)).collect())
}

/// Literals that fit `config`, including leading and trailing zeros.
pub fn arb_literal(config: &TstConfig) -> BoxedStrategy<NumericLiteral> {
    let max_int = config.max_int_digits();
    let max_frac = config.max_frac_digits();
    let sign = prop_oneof![3 => Just(Sign::None), 2 => Just(Sign::Minus), 1 => Just(Sign::Plus)];
    let int = (0usize..3, digit_string(1, max_int)).prop_map(|(zeros, d)| "0".repeat(zeros) + &d);
    let frac = (digit_string(0, max_frac), 0usize..4).prop_map(
        |(d, zeros)| {
            if d.is_empty() {
                d
            } else {
                d + &"0".repeat(zeros)
            }
        },
    );
    let preserve = config.preserve_precision;
    (sign, int, frac)
        .prop_map(move |(sign, int, mut frac)| {
            if preserve {
                frac.truncate(max_frac);
            }
            NumericLiteral::new(sign, int, frac)
        })
        .boxed()
}

pub fn config_and_literal() -> impl Strategy<Value = (TstConfig, NumericLiteral)> {
    arb_config().prop_flat_map(|c| {
        let lit = arb_literal(&c);
        (Just(c), lit)
    })
}
