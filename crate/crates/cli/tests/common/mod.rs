#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Output {
    pub status: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

impl Output {
    pub fn text(&self) -> String {
        String::from_utf8(self.stdout.clone()).unwrap()
    }
}

/// Runs the tool in-process on `input`.
pub fn numtok(args: &[&str], input: &[u8]) -> Output {
    let mut stdin = input;
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("numtok").chain(args.iter().copied());
    let status = numtok_cli::run(argv, &mut stdin, &mut stdout, &mut stderr);
    Output { status, stdout, stderr: String::from_utf8(stderr).unwrap() }
}

const WORDS: &[&str] = &[
    "the",
    "price",
    "is",
    "about",
    "units",
    "km",
    "total",
    "rate",
    "of",
    "and",
    "växer",
    "数字",
    "naïve",
    "=",
    "(",
    ")",
    ";",
    ":",
    "v3.1.4",
    "H2O",
    "e.g.",
    "x-5",
    "A4",
    "--",
    "#",
    "é",
    "10kg",
    "2019-2020",
    "§",
];

fn digits(rng: &mut ChaCha8Rng, len: usize, lead_nonzero: bool) -> String {
    (0..len)
        .map(|i| {
            let d = if i == 0 && lead_nonzero { rng.random_range(1..10) } else { rng.random_range(0..10) };
            char::from(b'0' + d as u8)
        })
        .collect()
}

fn western(int: &str) -> String {
    let mut out = String::new();
    for (i, c) in int.chars().enumerate() {
        if i > 0 && (int.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    out
}

/// One numeral as it might appear in prose.
pub fn random_numeral(rng: &mut ChaCha8Rng) -> String {
    let sign = match rng.random_range(0..10) {
        0 | 1 => "-",
        2 => "+",
        _ => "",
    };
    let max_len = if rng.random_bool(0.02) { 22 } else { 12 };
    let int_len = rng.random_range(1..=max_len);
    let mut int = digits(rng, int_len, true);
    if rng.random_bool(0.05) {
        int = format!("00{int}");
    }
    let frac_len = rng.random_range(1..=14);
    let frac = digits(rng, frac_len, false);
    let body = match rng.random_range(0..10) {
        0..=3 => int,
        4 | 5 => western(&int),
        6 | 7 => format!("{int}.{}", &frac[..frac_len.min(8)]),
        8 => format!("0.{frac}"),
        _ => format!(".{}", &frac[..frac_len.min(4)]),
    };
    format!("{sign}{body}")
}

/// A line of mixed prose and numerals.
pub fn random_line(rng: &mut ChaCha8Rng) -> String {
    let n = rng.random_range(0..16);
    let mut parts: Vec<String> = Vec::with_capacity(n);
    for _ in 0..n {
        let part = if rng.random_bool(0.35) {
            let num = random_numeral(rng);
            match rng.random_range(0..6) {
                0 => format!("({num})"),
                1 => format!("{num},"),
                2 => format!("{num}."),
                _ => num,
            }
        } else {
            WORDS[rng.random_range(0..WORDS.len())].to_string()
        };
        parts.push(part);
    }
    let sep = if rng.random_bool(0.1) { "  " } else { " " };
    let mut line = parts.join(sep);
    if rng.random_bool(0.05) {
        line.push('\t');
    }
    line
}

/// Deterministic corpus of at least `bytes` bytes, newline-terminated.
pub fn corpus(seed: u64, bytes: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::with_capacity(bytes + 256);
    while out.len() < bytes {
        out.push_str(&random_line(&mut rng));
        out.push('\n');
    }
    out
}

/// Canonical rendering of a western-locale numeral with N = 3, computed from
/// the surface text alone.
pub fn canonical_numeral(surface: &str) -> String {
    let (sign, body) = match surface.chars().next() {
        Some(c @ ('-' | '+')) => (c.to_string(), &surface[1..]),
        _ => (String::new(), surface),
    };
    let body: String = body.chars().filter(|&c| c != ',').collect();
    let (int, frac) = body.split_once('.').unwrap_or((&body, ""));
    let int = int.trim_start_matches('0');
    let int = if int.is_empty() { "0" } else { int };
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        return format!("{sign}{int}");
    }
    let width = frac.len().div_ceil(3) * 3;
    format!("{sign}{int}.{frac:0<width$}")
}
